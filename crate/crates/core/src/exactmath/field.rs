//! Number fields `Q[x]/(f)` in the power basis, and polynomials in `N`
//! with coefficients in such a field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::RationalPolynomial;
use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// `Q[x]/(f)` for a monic squarefree `f` without rational roots (or of
/// degree 1, which encodes `Q`). Irreducibility is not verified beyond that.
#[derive(Clone, Debug)]
pub struct NumberField {
    min_poly: Arc<RationalPolynomial>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.min_poly, &other.min_poly) || self.min_poly == other.min_poly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(min_poly: RationalPolynomial) -> Result<Self> {
        let Some(deg) = min_poly.degree().filter(|&d| d >= 1) else {
            return Err(Error::InvalidField("minimal polynomial must have degree >= 1".into()));
        };
        if !min_poly.is_monic() {
            return Err(Error::InvalidField(format!("minimal polynomial {min_poly} is not monic")));
        }
        if !min_poly.is_squarefree() {
            return Err(Error::InvalidField(format!(
                "minimal polynomial {min_poly} is not squarefree"
            )));
        }
        if deg >= 2 {
            if let Some(root) = rational_root(&min_poly) {
                return Err(Error::InvalidField(format!(
                    "minimal polynomial {min_poly} has the rational root {}",
                    format_rational(&root)
                )));
            }
        }
        Ok(Self {
            min_poly: Arc::new(min_poly),
        })
    }

    pub fn rationals() -> Self {
        Self {
            min_poly: Arc::new(RationalPolynomial::var()),
        }
    }

    /// `Q(sqrt(d))` with minimal polynomial `x^2 - d`.
    pub fn quadratic(d: i64) -> Result<Self> {
        Self::new(RationalPolynomial::from_ints(&[-d, 0, 1]))
    }

    pub fn min_poly(&self) -> &RationalPolynomial {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().expect("nonzero minimal polynomial")
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr: RationalPolynomial::zero(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, c: Rational) -> FieldElement {
        self.element(RationalPolynomial::constant(c))
    }

    /// The class of `x`.
    pub fn generator(&self) -> FieldElement {
        self.element(RationalPolynomial::var())
    }

    /// Reduces `repr` modulo the minimal polynomial.
    pub fn element(&self, repr: RationalPolynomial) -> FieldElement {
        let repr = if repr.degree().is_some_and(|d| d >= self.degree()) {
            repr.rem(&self.min_poly)
        } else {
            repr
        };
        FieldElement {
            field: self.clone(),
            repr,
        }
    }

    /// Whether the minimal polynomial has only real roots.
    pub fn is_totally_real(&self) -> bool {
        super::sturm::count_distinct_roots(
            &self.min_poly,
            &super::sturm::Point::NegInfinity,
            &super::sturm::Point::PosInfinity,
        ) == self.degree()
    }

    pub fn has_real_roots(&self) -> bool {
        super::sturm::count_distinct_roots(
            &self.min_poly,
            &super::sturm::Point::NegInfinity,
            &super::sturm::Point::PosInfinity,
        ) > 0
    }
}

/// Any rational root of `f`, by the rational root test on its integral form.
fn rational_root(f: &RationalPolynomial) -> Option<Rational> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    if ints[0].is_zero() {
        return Some(Rational::zero());
    }
    let lead = ints.last().expect("nonzero");
    for p in divisors(&ints[0]) {
        for q in divisors(lead) {
            for cand in [Rational::new(p.clone(), q.clone()), -Rational::new(p.clone(), q.clone())] {
                if f.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let co = &n / &d;
            if co != d {
                large.push(co);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Resultant of two rational polynomials, `lc(f)^deg(g) ∏_{f(θ)=0} g(θ)`.
pub fn resultant(f: &RationalPolynomial, g: &RationalPolynomial) -> Rational {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    if df == 0 {
        return num_traits::pow(f.coeff(0), dg);
    }
    if dg == 0 {
        return num_traits::pow(g.coeff(0), df);
    }
    let r = f.rem(g);
    let Some(dr) = r.degree() else {
        return Rational::zero();
    };
    let sign = if df * dg % 2 == 1 { -Rational::one() } else { Rational::one() };
    sign * num_traits::pow(g.leading().expect("nonzero").clone(), df - dr) * resultant(g, &r)
}

/// Extended Euclid: returns `(d, s)` with `d = gcd(a, b)` monic and
/// `s·a ≡ d (mod b)`.
fn half_ext_gcd(a: &RationalPolynomial, b: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RationalPolynomial::one(), RationalPolynomial::zero());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    match r0.leading().cloned() {
        Some(lc) => {
            let inv = lc.recip();
            (r0.scale(&inv), s0.scale(&inv))
        }
        None => (r0, s0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    repr: RationalPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Inverse of the left operand; the right operand only fixes the field.
    Inv,
}

/// Checked binary arithmetic; rejects mismatched fields and division by zero.
pub fn field_arithmetic(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a * &b.inv()?,
        FieldOp::Inv => a.inv()?,
    })
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Coordinates in the power basis, degree below the field degree.
    pub fn repr(&self) -> &RationalPolynomial {
        &self.repr
    }

    /// Coordinates padded to the field degree.
    pub fn coords(&self) -> Vec<Rational> {
        (0..self.field.degree()).map(|k| self.repr.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.repr.degree() == Some(0) && self.repr.coeff(0).is_one()
    }

    /// The value as a rational, if it lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.repr.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.repr.coeff(0)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (d, s) = half_ext_gcd(&self.repr, self.field.min_poly());
        if d.degree() != Some(0) {
            // a zero divisor; only possible when the minimal polynomial is reducible
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.element(s))
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            repr: self.repr.scale(c),
        }
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    /// Field norm to `Q`: the product of all conjugates, computed as the
    /// resultant of the minimal polynomial and the representative.
    pub fn norm(&self) -> Rational {
        resultant(self.field.min_poly(), &self.repr)
    }

    /// Field trace to `Q`: the trace of multiplication by `self`.
    pub fn trace(&self) -> Rational {
        let x = self.field.generator();
        let mut basis = self.field.one();
        let mut tr = Rational::zero();
        for k in 0..self.field.degree() {
            tr += (self * &basis).repr.coeff(k);
            basis = &basis * &x;
        }
        tr
    }

    /// Image under the field endomorphism sending the generator to `image`.
    pub fn substitute_generator(&self, image: &FieldElement) -> FieldElement {
        self.repr
            .coeffs()
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * image) + &self.field.from_rational(c.clone()))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.field, rhs.field, "field mismatch");
        FieldElement {
            field: self.field.clone(),
            repr: &self.repr + &rhs.repr,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.field, rhs.field, "field mismatch");
        FieldElement {
            field: self.field.clone(),
            repr: &self.repr - &rhs.repr,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.field, rhs.field, "field mismatch");
        self.field.element(&self.repr * &rhs.repr)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            repr: -&self.repr,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return f.write_str(&format_rational(&self.repr.coeff(0)));
        }
        let s = self.repr.to_string().replace('N', "x");
        f.write_str(&s)
    }
}

/// Dense polynomial in `N` with coefficients in a number field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPolynomial {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl FieldPolynomial {
    pub fn new(field: &NumberField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_rational(field: &NumberField, p: &RationalPolynomial) -> Self {
        Self::new(
            field,
            p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect(),
        )
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    pub fn eval(&self, x: &Rational) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &acc.scale(x) + c)
    }

    /// The rational polynomial, if every coefficient is rational.
    pub fn to_rational(&self) -> Option<RationalPolynomial> {
        self.coeffs
            .iter()
            .map(FieldElement::as_rational)
            .collect::<Option<Vec<_>>>()
            .map(RationalPolynomial::new)
    }

    /// Newton interpolation through `(xs[k], ys[k])`; the nodes must be distinct.
    pub fn interpolate(field: &NumberField, xs: &[Rational], ys: &[FieldElement]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut c = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let d = (&xs[i] - &xs[i - j]).recip();
                c[i] = (&c[i] - &c[i - 1]).scale(&d);
            }
        }
        let mut acc: Vec<FieldElement> = Vec::new();
        for i in (0..n).rev() {
            // acc <- acc * (N - xs[i]) + c[i]
            let mut next = vec![field.zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] = &next[k + 1] + a;
                next[k] = &next[k] - &a.scale(&xs[i]);
            }
            next[0] = &next[0] + &c[i];
            acc = next;
        }
        Self::new(field, acc)
    }

    /// Square root of a monic polynomial by top-down coefficient matching.
    pub fn monic_sqrt(&self) -> Option<Self> {
        let deg = self.degree()?;
        if deg % 2 == 1 || !self.is_monic() {
            return None;
        }
        let n = deg / 2;
        let half = Rational::new(1.into(), 2.into());
        let mut q = vec![self.field.zero(); n + 1];
        q[n] = self.field.one();
        for k in 1..=n {
            let mut s = self.field.zero();
            for i in (n - k + 1)..n {
                let j = 2 * n - k - i;
                if j > n - k && j < n {
                    s = &s + &(&q[i] * &q[j]);
                }
            }
            q[n - k] = (&self.coeffs[deg - k] - &s).scale(&half);
        }
        let q = Self::new(&self.field, q);
        (&q * &q == *self).then_some(q)
    }
}

impl Mul for &FieldPolynomial {
    type Output = FieldPolynomial;
    fn mul(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return FieldPolynomial::new(&self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FieldPolynomial::new(&self.field, out)
    }
}

/// `∏_σ σ(p)` over the embeddings of the coefficient field: the resultant
/// in the field generator of the minimal polynomial and `p`, evaluated at
/// `deg(p)·t + 1` rational nodes and interpolated.
pub fn conjugate_product_descend(p: &FieldPolynomial) -> RationalPolynomial {
    let Some(d) = p.degree() else {
        return RationalPolynomial::zero();
    };
    let t = p.field().degree();
    let nodes: Vec<Rational> = (0..=(d * t) as i64).map(int).collect();
    let values: Vec<Rational> = nodes.iter().map(|x| p.eval(x).norm()).collect();
    RationalPolynomial::interpolate(&nodes, &values)
}
