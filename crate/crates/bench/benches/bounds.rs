use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pinchlab::arith::rat;
use pinchlab::pinching::{c0_bisect, c2_closed_form};

fn bounds(c: &mut Criterion) {
    let delta = rat(1, 100);
    let mut g = c.benchmark_group("c0 bisection");
    for (n, k) in [(3, 1), (12, 1), (9, 3), (40, 5)] {
        g.bench_function(format!("n={n} k={k}"), |b| {
            b.iter(|| c0_bisect(black_box(n), black_box(k), &delta).unwrap())
        });
    }
    g.finish();
    c.bench_function("c2 closed form n=7 k=2", |b| {
        b.iter(|| c2_closed_form(black_box(7), black_box(2)).unwrap())
    });
}

criterion_group!(benches, bounds);
criterion_main!(benches);
