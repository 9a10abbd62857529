//! Real root counting with multiplicity.
//!
//! Zero roots are read off the trailing zero coefficients. The remaining
//! roots are counted layer by layer through the squarefree tower
//! `p, gcd(p, p'), gcd(gcd(p, p'), ...)`: a root of multiplicity `k` is a
//! simple root of the squarefree parts of the first `k` layers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::RationalPolynomial;
use super::rational::{sign, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootProfile {
    #[serde(skip)]
    pub poly: RationalPolynomial,
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl RootProfile {
    pub fn real_roots(&self) -> usize {
        self.positive + self.zero + self.negative
    }

    pub fn all_real(&self) -> bool {
        Some(self.real_roots()) == self.poly.degree()
    }
}

#[derive(Clone, Debug)]
pub enum Point {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

/// Sturm chain of `p`, each member rescaled by a positive constant.
pub fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let normalize = |q: RationalPolynomial| match q.leading() {
        Some(lc) => {
            let s = lc.abs().recip();
            q.scale(&s)
        }
        None => q,
    };
    let mut seq = vec![normalize(p.clone())];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(normalize(d));
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(normalize(-&r));
    }
    seq
}

fn sign_at(p: &RationalPolynomial, at: &Point) -> i8 {
    let Some(deg) = p.degree() else { return 0 };
    let lc = sign(p.leading().expect("nonzero"));
    match at {
        Point::PosInfinity => lc,
        Point::NegInfinity => {
            if deg % 2 == 0 {
                lc
            } else {
                -lc
            }
        }
        Point::At(x) => sign(&p.eval(x)),
    }
}

fn variations(seq: &[RationalPolynomial], at: &Point) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| sign_at(p, at))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
/// Finite endpoints must not be roots of `p`.
pub fn count_distinct_roots(p: &RationalPolynomial, lo: &Point, hi: &Point) -> usize {
    let seq = sturm_sequence(p);
    variations(&seq, lo).saturating_sub(variations(&seq, hi))
}

/// Positive, zero and negative root counts of `p`, with multiplicity.
pub fn sturm_root_profile(p: &RationalPolynomial) -> Result<RootProfile> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (zero, mut layer) = p.strip_zero_roots();
    let origin = Point::At(Rational::zero());
    let (mut positive, mut negative) = (0, 0);
    while layer.degree().is_some_and(|d| d > 0) {
        let next = layer.gcd(&layer.derivative());
        let squarefree = layer.div_rem(&next).0;
        let seq = sturm_sequence(&squarefree);
        let at_zero = variations(&seq, &origin);
        positive += at_zero - variations(&seq, &Point::PosInfinity);
        negative += variations(&seq, &Point::NegInfinity) - at_zero;
        layer = next;
    }
    Ok(RootProfile {
        poly: p.clone(),
        positive,
        zero,
        negative,
    })
}

/// `1 + max |a_k / a_deg|`; every complex root lies strictly inside this radius.
pub fn cauchy_bound(p: &RationalPolynomial) -> Rational {
    Rational::one() + p.max_abs_ratio()
}

/// Smallest integer `K >= 1` with every real root of `p` in the open
/// interval `(-K, K)`, found by bisection below the Cauchy bound and
/// certified with Sturm counts.
pub fn integer_root_radius(p: &RationalPolynomial) -> BigInt {
    if p.degree().unwrap_or(0) == 0 {
        return BigInt::one();
    }
    let squarefree = p.div_rem(&p.gcd(&p.derivative())).0;
    let seq = sturm_sequence(&squarefree);
    let contains_all = |k: &BigInt| {
        let hi = Rational::from_integer(k.clone());
        let lo = -hi.clone();
        if p.eval(&hi).is_zero() || p.eval(&lo).is_zero() {
            return false;
        }
        let (lo, hi) = (Point::At(lo), Point::At(hi));
        variations(&seq, &Point::NegInfinity) == variations(&seq, &lo)
            && variations(&seq, &hi) == variations(&seq, &Point::PosInfinity)
    };
    let mut hi = cauchy_bound(p).ceil().to_integer();
    let mut lo = BigInt::one();
    if contains_all(&lo) {
        return lo;
    }
    // contains_all(lo) is false and contains_all(hi) is true
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if contains_all(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
