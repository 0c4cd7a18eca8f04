use super::{count_changes, sign_beyond, SturmError};
use crate::arith::{Poly, RatFunc, Rational};
use num_traits::{One, Zero};

/// A factor divided out of sequence element `index`, certified positive for
/// every parameter value above the threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct RemovedFactor {
    pub index: usize,
    pub factor: RatFunc,
}

/// Standard Sturm sequence of a polynomial in `x` whose coefficients are
/// rational functions of a parameter `n`, valid for all `n` above a
/// threshold. Every element is scaled so its coefficients are coprime
/// integer polynomials in `n`; the removed scalings are kept in the ledger.
#[derive(Debug, Clone)]
pub struct ParamSturmSeq {
    polys: Vec<Poly<RatFunc>>,
    ledger: Vec<RemovedFactor>,
    zero_terms: Vec<Poly<Rational>>,
    lead_terms: Vec<Poly<Rational>>,
    threshold: Rational,
}

fn monic(p: Poly<Rational>) -> Poly<Rational> {
    match p.lead().cloned() {
        Some(l) => p.scale(&(Rational::one() / l)),
        None => p,
    }
}

fn poly_lcm(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    let g = a.gcd(b);
    monic((&*a * b).div_rem(&g).expect("gcd nonzero").0)
}

fn positive_beyond(p: &Poly<Rational>, threshold: &Rational) -> Result<bool, SturmError> {
    Ok(sign_beyond(p, threshold)? == Some(1))
}

/// Rescales `e` to coprime integer-polynomial coefficients, returning the
/// removed positive factor.
fn normalize(
    e: &Poly<RatFunc>,
    threshold: &Rational,
) -> Result<(Poly<RatFunc>, RatFunc), SturmError> {
    let l = e
        .coeffs()
        .iter()
        .fold(Poly::constant(Rational::one()), |acc, c| poly_lcm(&acc, c.den()));
    if !positive_beyond(&l, threshold)? {
        return Err(SturmError::UncertifiedFactor {
            factor: format!("1/({l})"),
            threshold: threshold.clone(),
        });
    }
    let nums: Vec<Poly<Rational>> = e
        .coeffs()
        .iter()
        .map(|c| &*c.num() * &l.div_rem(c.den()).expect("den divides lcm").0)
        .collect();
    let mut g = nums.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    if g.degree().unwrap_or(0) > 0 && !positive_beyond(&g, threshold)? {
        // Cannot remove a factor that may change sign above the threshold.
        g = Poly::constant(Rational::one());
    }
    let reduced: Vec<Poly<Rational>> = nums
        .iter()
        .map(|p| p.div_rem(&g).expect("gcd divides").0)
        .collect();
    let content = reduced.iter().fold(Rational::zero(), |acc, p| {
        let (c, _) = p.primitive_part();
        if p.is_zero() {
            acc
        } else if acc.is_zero() {
            c
        } else {
            rational_gcd(&acc, &c)
        }
    });
    let content = if content.is_zero() { Rational::one() } else { content };
    let inv = Rational::one() / content.clone();
    let out = Poly::new(
        reduced
            .iter()
            .map(|p| RatFunc::from_poly(p.scale(&inv)))
            .collect(),
    );
    let factor = RatFunc::new(g.scale(&content), l).expect("lcm nonzero");
    Ok((out, factor))
}

fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

fn coeff_poly(c: &RatFunc) -> Poly<Rational> {
    debug_assert_eq!(c.den().degree(), Some(0));
    c.num().primitive_part().1
}

impl ParamSturmSeq {
    /// Builds the sequence, certifying every removed factor positive for all
    /// `n > threshold`.
    pub fn build(p: &Poly<RatFunc>, threshold: &Rational) -> Result<Self, SturmError> {
        match p.degree() {
            None => return Err(SturmError::ZeroLeading),
            Some(0) => return Err(SturmError::ConstantInput),
            _ => {}
        }
        let mut polys = Vec::new();
        let mut ledger = Vec::new();
        let mut push = |e: &Poly<RatFunc>, polys: &mut Vec<Poly<RatFunc>>| -> Result<(), SturmError> {
            let (normed, factor) = normalize(e, threshold)?;
            ledger.push(RemovedFactor {
                index: polys.len(),
                factor,
            });
            polys.push(normed);
            Ok(())
        };
        push(p, &mut polys)?;
        push(&p.derivative(), &mut polys)?;
        loop {
            let m = polys.len();
            let r = polys[m - 2].rem(&polys[m - 1])?;
            if r.is_zero() {
                break;
            }
            push(&-&r, &mut polys)?;
        }
        let zero_terms = polys.iter().map(|e| coeff_poly(&e.coeff(0))).collect();
        let lead_terms = polys
            .iter()
            .map(|e| coeff_poly(e.lead().expect("nonzero element")))
            .collect();
        Ok(ParamSturmSeq {
            polys,
            ledger,
            zero_terms,
            lead_terms,
            threshold: threshold.clone(),
        })
    }

    pub fn polys(&self) -> &[Poly<RatFunc>] {
        &self.polys
    }

    pub fn ledger(&self) -> &[RemovedFactor] {
        &self.ledger
    }

    /// `Z_i`: constant coefficient in `x` of element `i`, as a polynomial in `n`.
    pub fn zero_terms(&self) -> &[Poly<Rational>] {
        &self.zero_terms
    }

    /// `I_i`: leading coefficient in `x` of element `i`.
    pub fn lead_terms(&self) -> &[Poly<Rational>] {
        &self.lead_terms
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    fn certified_signs(&self, terms: &[Poly<Rational>]) -> Result<Vec<i8>, SturmError> {
        terms
            .iter()
            .map(|t| {
                if t.is_zero() {
                    return Ok(0);
                }
                sign_beyond(t, &self.threshold)?.ok_or_else(|| SturmError::UncertifiedFactor {
                    factor: format!("{t}"),
                    threshold: self.threshold.clone(),
                })
            })
            .collect()
    }

    /// Signs of `Z_i`, each certified constant for every `n > threshold`.
    pub fn zero_signs(&self) -> Result<Vec<i8>, SturmError> {
        self.certified_signs(&self.zero_terms)
    }

    /// Signs of `I_i`, each certified constant for every `n > threshold`.
    pub fn lead_signs(&self) -> Result<Vec<i8>, SturmError> {
        self.certified_signs(&self.lead_terms)
    }

    /// Sign changes at `x = 0` valid for every `n > threshold`.
    pub fn sigma_zero(&self) -> Result<usize, SturmError> {
        Ok(count_changes(&self.zero_signs()?))
    }

    /// Sign changes at `x = +∞` valid for every `n > threshold`.
    pub fn sigma_infinity(&self) -> Result<usize, SturmError> {
        Ok(count_changes(&self.lead_signs()?))
    }

    /// The sequence with `n` substituted, `None` if `n` hits a pole.
    pub fn specialize(&self, n: &Rational) -> Option<Vec<Poly<Rational>>> {
        self.polys
            .iter()
            .map(|e| {
                e.coeffs()
                    .iter()
                    .map(|c| c.eval(n))
                    .collect::<Option<Vec<_>>>()
                    .map(Poly::new)
            })
            .collect()
    }
}
