use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pinchlab::arith::{int, rat};
use pinchlab::pinching::{build_q, fixtures};
use pinchlab::sturm::{count_roots_in, nonpositive_on_positive_axis, Interval, SturmSeq};

fn sturm(c: &mut Criterion) {
    let q = build_q(1, 3, &rat(7, 2)).unwrap();
    c.bench_function("sturm sequence of Q(x,1,3,7/2)", |b| {
        b.iter(|| SturmSeq::build(black_box(&q)).unwrap())
    });
    c.bench_function("positivity gate on Q(x,1,3,7/2)", |b| {
        b.iter(|| nonpositive_on_positive_axis(black_box(&q)))
    });
    let i2 = fixtures::i2();
    c.bench_function("roots of I2 above 12", |b| {
        b.iter(|| count_roots_in(black_box(&i2), &Interval::Above(int(12))).unwrap())
    });
}

criterion_group!(benches, sturm);
criterion_main!(benches);
