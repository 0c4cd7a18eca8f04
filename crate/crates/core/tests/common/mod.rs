#![allow(dead_code)]

use pinchlab::arith::{int, rat, Poly, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

/// A polynomial assembled from known factors, with the number of distinct
/// positive real roots read off the factorization.
pub struct Factored {
    pub poly: Poly<Rational>,
    pub positive_roots: usize,
    /// Distinct real roots as floats, for interval checks.
    pub real_roots: Vec<f64>,
}

/// Random product of degree at most 6 built from rational linear factors
/// (with multiplicity), `x² − m` for square-free `m`, and `x² + bx + c` with
/// negative discriminant.
pub fn random_factored<R: Rng>(rng: &mut R) -> Factored {
    let target = rng.gen_range(1..=6usize);
    let mut poly = Poly::constant(int(rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 }));
    let mut rational_roots: Vec<Rational> = Vec::new();
    let mut surds: Vec<u64> = Vec::new();
    let mut degree = 0;
    while degree < target {
        let room = target - degree;
        match rng.gen_range(0..3) {
            1 if room >= 2 => {
                let choices: Vec<u64> = [2u64, 3, 5, 6, 7, 10, 11]
                    .into_iter()
                    .filter(|m| !surds.contains(m))
                    .collect();
                if let Some(&m) = choices.choose(rng) {
                    surds.push(m);
                    poly = &poly * &Poly::new(vec![int(-(m as i64)), int(0), int(1)]);
                    degree += 2;
                }
            }
            2 if room >= 2 => {
                let b = rng.gen_range(-6..=6i64);
                let c = b * b / 4 + rng.gen_range(1..=8i64);
                poly = &poly * &Poly::new(vec![int(c), int(b), int(1)]);
                degree += 2;
            }
            _ => {
                let r = rat(rng.gen_range(-12..=12i64), rng.gen_range(1..=5i64));
                let mult = rng.gen_range(1..=room.min(3));
                let lin = Poly::new(vec![-r.clone(), int(1)]);
                poly = &poly * &lin.pow(mult as u32);
                if !rational_roots.contains(&r) {
                    rational_roots.push(r);
                }
                degree += mult;
            }
        }
    }
    let zero = int(0);
    let positive_roots =
        rational_roots.iter().filter(|r| **r > zero).count() + surds.len();
    let mut real_roots: Vec<f64> = rational_roots.iter().map(pinchlab::arith::to_f64).collect();
    for m in &surds {
        let s = (*m as f64).sqrt();
        real_roots.push(s);
        real_roots.push(-s);
    }
    Factored {
        poly,
        positive_roots,
        real_roots,
    }
}
