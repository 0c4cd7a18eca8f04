//! Reference polynomials for the n-sweep and coefficient certificates,
//! stored coefficient for coefficient (ascending powers of `n`).

use crate::arith::{Field, Poly, RatFunc, Rational};

const Z: [&[i64]; 7] = [
    &[7, -19, 15, -1, -2],
    &[1],
    &[0, 2744, -12348, 18172, -8453, -1794, 1535, 144],
    &[
        0, 16672544, -60658864, 78969576, -38201184, -2317896, 6372732, -576295, -270278, 6081,
        3584,
    ],
    &[
        2529924096,
        -11497601472,
        20565314112,
        -18321051392,
        8896937056,
        -2856559664,
        619264184,
        142496512,
        -32213404,
        -29801085,
        -21819236,
        4720867,
        725886,
        -296460,
        -40000,
    ],
    &[
        -165288374272,
        822014504192,
        -1439948464640,
        635221775104,
        1099756498624,
        -1442680610560,
        317014594400,
        331846621568,
        -142328426016,
        -34283941676,
        15836869820,
        3675343420,
        -667512847,
        -214699395,
        31704806,
        13123168,
        994304,
    ],
    Z6,
];

const Z6: &[i64] = &[
    330576748544,
    -422075670016,
    -593003666752,
    717369012864,
    326600077888,
    -375952652096,
    -61529189456,
    54892083792,
    9999889760,
    -2733091200,
    -549429077,
    149191472,
    43911424,
    2985984,
];

const I: [&[i64]; 7] = [
    &[-1],
    &[-1],
    I2,
    &[
        90354432, -180708864, 96693072, -9686320, 6803552, -3159968, 71104, 240196, 8186, -2400,
    ],
    &[
        2529924096,
        -16557449664,
        37348649856,
        -36713556544,
        13721909824,
        -526931104,
        1003345392,
        -687439728,
        -136384936,
        21404941,
        7869536,
        -1740356,
        -780868,
        -68800,
    ],
    &[
        165288374272,
        -822014504192,
        1463561089536,
        -741689414144,
        -920500835072,
        1357950741952,
        -451152740416,
        -132175466304,
        73039703968,
        20211061820,
        -9966788912,
        -1997678860,
        392467304,
        110406478,
        -19057514,
        -7572032,
        -594432,
    ],
    Z6,
];

const I2: &[i64] = &[-192080, 263424, -60368, -13272, -53, 144];

const Q_SEQ: [&[i64]; 6] = [
    I2,
    &[263424, -120736, -39816, -212, 720],
    &[169381632, -188065528, 33126282, 4780729],
    &[-14501462505796, 11364288885852, -795070863791],
    &[11296812839226538, -7895204048274613],
    &[-1],
];

/// Sign patterns stated for large `n`.
pub const Z_SIGNS: [i8; 7] = [-1, 1, 1, 1, -1, 1, 1];
pub const I_SIGNS: [i8; 7] = [-1, -1, 1, -1, -1, -1, 1];
/// Sign patterns of the `I₂` sub-sequence at `n = 12` and `n → ∞`.
pub const Q_SIGNS_AT_12: [i8; 6] = [1, 1, 1, 1, -1, -1];
pub const Q_SIGNS_AT_INF: [i8; 6] = [1, 1, 1, -1, -1, -1];

pub fn z_terms() -> Vec<Poly<Rational>> {
    Z.iter().map(|c| Poly::from_i64s(c)).collect()
}

pub fn i_terms() -> Vec<Poly<Rational>> {
    I.iter().map(|c| Poly::from_i64s(c)).collect()
}

pub fn i2() -> Poly<Rational> {
    Poly::from_i64s(I2)
}

/// The reduced Sturm sequence `q₀ … q₅` of `I₂`.
pub fn q_sequence() -> Vec<Poly<Rational>> {
    Q_SEQ.iter().map(|c| Poly::from_i64s(c)).collect()
}

/// The printed `a₀ … a₆` such that
/// `n²(k−1)²·Q(x, k, n, 1/k + k/((k−1)n)) = Σ aᵢxⁱ`, over any field.
pub fn a_coefficients<T: Field>(k: &T, n: &T) -> [T; 7] {
    let c = |v: i64| T::from_i64(v);
    let (k, n) = (k.clone(), n.clone());
    let p = |base: &T, e: u32| (0..e).fold(T::one(), |acc, _| acc * base.clone());
    let (k2, k3, k4, k5) = (p(&k, 2), p(&k, 3), p(&k, 4), p(&k, 5));
    let (n2, n3, n4) = (p(&n, 2), p(&n, 3), p(&n, 4));
    let km1 = k.clone() - c(1);
    let nmk = n.clone() - k.clone();
    let nmk2 = n.clone() - k2.clone();

    let a0 = -(n.clone()
        * p(&nmk, 3)
        * km1.clone()
        * (c(2) * n.clone() * km1.clone() + k2.clone()));
    let a1 = -(n.clone()
        * p(&nmk, 2)
        * km1.clone()
        * (n.clone() * (c(5) * k2.clone() - c(12) * k.clone() + c(6))
            + k2.clone() * (c(4) * k.clone() - c(6))));
    let a2 = c(-6) * n4 * km1.clone() * km1.clone()
        + n3.clone()
            * km1.clone()
            * (c(-3) * k3.clone() + c(22) * k2.clone() - c(30) * k.clone() + c(6))
        + n2.clone()
            * k.clone()
            * (c(-3) * k4.clone() + c(9) * k3.clone() + c(11) * k2.clone() - c(21) * k.clone()
                + c(6))
        + n.clone()
            * k3.clone()
            * (c(6) * k3.clone() - c(29) * k2.clone() + c(26) * k.clone() - c(9))
        + k5.clone() * (k.clone() + c(3));
    let a3 = c(-2)
        * n3.clone()
        * km1.clone()
        * (c(5) * k2.clone() - c(12) * k.clone() + c(6))
        + n2.clone()
            * (k5.clone() - c(5) * k4.clone() - c(17) * k3.clone() + c(37) * k2.clone()
                - c(22) * k.clone()
                + c(2))
        + n.clone()
            * k2.clone()
            * (c(-4) * k4.clone() + c(37) * k3.clone() - c(45) * k2.clone() + c(32) * k.clone()
                - c(4))
        + c(2) * k4.clone() * (c(-2) * k2.clone() - c(5) * k.clone() + c(1));
    let a4 = c(-6) * n3 * km1.clone() * km1.clone()
        + n2 * (c(15) * k3.clone() - c(37) * k2.clone() + c(30) * k.clone() - c(6))
        + n.clone()
            * k2.clone()
            * (k4.clone() - c(22) * k3.clone() + c(37) * k2.clone() - c(42) * k.clone() + c(12))
        + c(6) * k4.clone() * (k2.clone() + c(2) * k.clone() - c(1));
    let a5 = nmk2.clone()
        * (n.clone() * (c(-5) * k3.clone() + c(17) * k2.clone() - c(18) * k.clone() + c(6))
            + c(4) * k4
            + c(6) * k3.clone()
            - c(6) * k2.clone());
    let a6 = -(km1.clone()
        * nmk2
        * ((k.clone() + c(2)) * k2 + c(2) * km1 * n));
    [a0, a1, a2, a3, a4, a5, a6]
}

fn ratfunc_poly(r: &RatFunc) -> Poly<Rational> {
    assert_eq!(r.den().degree(), Some(0), "polynomial expected");
    r.num().scale(&(Rational::from_i64(1) / r.den().coeff(0)))
}

/// `aᵢ` for a fixed `k`, as polynomials in `n`.
pub fn a_in_n(k: i64) -> [Poly<Rational>; 7] {
    a_coefficients(&RatFunc::from_i64(k), &RatFunc::param()).map(|r| ratfunc_poly(&r))
}

/// `aᵢ` along `n = k² + 1`, as polynomials in `k`.
pub fn a_on_first_row() -> [Poly<Rational>; 7] {
    let k = RatFunc::param();
    let n = k.clone() * k.clone() + RatFunc::from_i64(1);
    a_coefficients(&k, &n).map(|r| ratfunc_poly(&r))
}

/// The printed closed forms of `a₅` at `k = 2` and `k = 3`.
pub fn a5_printed(k: i64) -> Option<Poly<Rational>> {
    let lin = |c0: i64, c1: i64| Poly::<Rational>::from_i64s(&[c0, c1]);
    match k {
        2 => Some((&lin(-4, 1) * &lin(-44, 1)).scale(&Rational::from_i64(-2))),
        3 => Some((&lin(-9, 1) * &lin(-72, 5)).scale(&Rational::from_i64(-6))),
        _ => None,
    }
}

/// Upper bound used for `a₅` when `k ≥ 4`:
/// `−(n−k²)(k(k−4)+2)(5k³−k²+3k−3)`.
pub fn a5_bound(k: i64, n: i64) -> Rational {
    Rational::from_i64(-(n - k * k) * (k * (k - 4) + 2) * (5 * k * k * k - k * k + 3 * k - 3))
}

/// `c₀(n, 1)` for `n = 3 … 12` and `c₀(3, 2) = c₀(4, 2)`, as printed (in
/// hundredths, truncated).
pub const C0_TABLE: [(i64, i64, i64); 12] = [
    (3, 1, 364),
    (4, 1, 293),
    (5, 1, 256),
    (6, 1, 233),
    (7, 1, 217),
    (8, 1, 205),
    (9, 1, 196),
    (10, 1, 189),
    (11, 1, 183),
    (12, 1, 178),
    (3, 2, 100),
    (4, 2, 100),
];
