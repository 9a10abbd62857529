//! Dense univariate polynomials over the rationals in one variable `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, rational_sqrt, Rational};

/// Coefficients in ascending degree, never with a trailing zero. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable `N`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `∏ (N - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales to a monic polynomial. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(N + t)`.
    pub fn shift(&self, t: &Rational) -> Self {
        let lin = Self::new(vec![t.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    /// `p(c N)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// Splits off the factor `N^k`, returning `k` and the cofactor.
    pub fn strip_zero_roots(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, Self::new(self.coeffs[k..].to_vec()))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Newton interpolation through `(xs[k], ys[k])`; the nodes must be distinct.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut c = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            let lin = Self::new(vec![-xs[i].clone(), Rational::one()]);
            acc = &(&acc * &lin) + &Self::constant(c[i].clone());
        }
        acc
    }

    /// The unique square root with positive leading coefficient, matched
    /// coefficient by coefficient from the top degree down. `None` when `self`
    /// is not the square of a rational polynomial.
    pub fn exact_sqrt(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let n = deg / 2;
        let top = rational_sqrt(&self.coeffs[deg])?;
        let two_top = &top * int(2);
        let mut q = vec![Rational::zero(); n + 1];
        q[n] = top;
        for k in 1..=n {
            let mut s = Rational::zero();
            for i in (n - k + 1)..n {
                let j = 2 * n - k - i;
                if j > n - k && j < n {
                    s += &q[i] * &q[j];
                }
            }
            q[n - k] = (&self.coeffs[deg - k] - s) / &two_top;
        }
        let q = Self::new(q);
        (&q * &q == *self).then_some(q)
    }

    /// Largest `|a_k / a_deg|` over the non-leading coefficients.
    pub(crate) fn max_abs_ratio(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Rational::zero();
        };
        self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lc).abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "N".to_string(),
                _ => format!("N^{k}"),
            };
            if k == 0 {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), var)?;
            }
        }
        Ok(())
    }
}
