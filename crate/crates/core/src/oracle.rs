//! Brute-force reference computations in the split model `M_g(Q)` with the
//! transpose involution, where a symmetric class is a symmetric rational
//! matrix `M`, its Euler characteristic is `det M`, and its index is the
//! number of negative eigenvalues.
//!
//! Nothing here goes through polynomials: determinants use fraction-free
//! elimination over the integers and inertia uses congruence
//! diagonalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::wedderburn::{
    rational_block, BaseInvolution, DivisionAlgebraKind, SymmetricClass, VarietyContext,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    entries: Vec<Vec<Rational>>,
}

impl SymMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c.clone() } else { Rational::zero() }).collect())
            .collect();
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `M + t·I`.
    pub fn shifted(&self, t: &Rational) -> Self {
        let mut entries = self.entries.clone();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] += t;
        }
        Self { entries }
    }

    /// `Aᵀ M A`.
    pub fn congruent(&self, a: &[Vec<Rational>]) -> Self {
        let n = self.size();
        let ma: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.entries[i][k] * &a[k][j]).sum())
                    .collect()
            })
            .collect();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &a[k][i] * &ma[k][j]).sum()).collect())
            .collect();
        Self { entries }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

/// `det M` by Bareiss elimination on the integer matrix `L·M`, where `L`
/// clears every denominator, then divided by `L^n`.
pub fn oracle_chi(m: &SymMatrix) -> Rational {
    let n = m.size();
    if n == 0 {
        return Rational::one();
    }
    let l = m
        .entries
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let mut a: Vec<Vec<BigInt>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|e| (e * Rational::from_integer(l.clone())).to_integer()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = sign * &a[n - 1][n - 1];
    Rational::new(det, l.pow(n as u32))
}

/// Signature of `M` by symmetric elimination. When every remaining
/// diagonal entry is zero but some off-diagonal `a_pq` is not, adding row
/// and column `q` to `p` puts `2·a_pq` on the diagonal.
pub fn oracle_inertia(m: &SymMatrix) -> Inertia {
    let n = m.size();
    let mut a = m.entries.clone();
    let mut out = Inertia {
        n_plus: 0,
        n_zero: 0,
        n_minus: 0,
    };
    for k in 0..n {
        let pivot = match (k..n).find(|&p| !a[p][p].is_zero()) {
            Some(p) => p,
            None => {
                let Some((p, q)) = (k..n)
                    .flat_map(|p| (k..n).map(move |q| (p, q)))
                    .find(|&(p, q)| p != q && !a[p][q].is_zero())
                else {
                    out.n_zero += n - k;
                    return out;
                };
                for c in 0..n {
                    let v = a[q][c].clone();
                    a[p][c] += v;
                }
                for r in 0..n {
                    let v = a[r][q].clone();
                    a[r][p] += v;
                }
                p
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            out.n_plus += 1;
        } else {
            out.n_minus += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[k][i] = Rational::zero();
        }
    }
    out
}

/// `(lo, hi)` from the Gershgorin radius `R` of `M`: every eigenvalue lies
/// in `[-R, R]`, so for `K = ⌊R⌋ + 1` the same bracketing argument as the
/// main scan applies.
pub fn gershgorin_window(m: &SymMatrix) -> (i64, i64) {
    let g = m.size() as i64;
    let radius = m
        .entries
        .iter()
        .map(|row| row.iter().map(|e| e.abs()).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero);
    let k = radius.floor().to_integer().to_i64().expect("entries of moderate size") + 1;
    (g - k - 1, g + k + 1)
}

/// First `m` in the window with `det(M + (m-i)I) = 0` or
/// `n_minus(M + (m-i)I) ≠ i` for every `i` in `1..=g`.
pub fn oracle_regcont(m: &SymMatrix, window: (i64, i64)) -> Result<i64> {
    let g = m.size();
    let (lo, hi) = window;
    for candidate in lo..=hi {
        let holds = (1..=g).all(|i| {
            let shifted = m.shifted(&Rational::from_integer(BigInt::from(candidate - i as i64)));
            oracle_chi(&shifted).is_zero() || oracle_inertia(&shifted).n_minus != i
        });
        if holds {
            return Ok(candidate);
        }
    }
    Err(Error::ScanWindowExhausted { lo, hi })
}

/// The matrix of a class on a context the oracle models: one factor,
/// center `Q`, trivial division algebra, `g = 1`, identity involution and
/// identity `H`.
pub fn sym_matrix_of(ctx: &VarietyContext, class: &SymmetricClass) -> Result<SymMatrix> {
    let [comp] = ctx.components() else {
        return Err(Error::InvalidInput("the oracle models single-factor contexts only".into()));
    };
    let modeled = comp.center_degree() == 1
        && matches!(comp.algebra().kind(), DivisionAlgebraKind::Field)
        && comp.dim_g() == 1
        && matches!(comp.base_involution(), BaseInvolution::Identity)
        && *comp.gram() == comp.identity();
    if !modeled {
        return Err(Error::InvalidInput(
            "the oracle models M_g(Q) with the transpose involution only".into(),
        ));
    }
    let block = ctx.class(class.blocks().to_vec())?.blocks()[0].clone();
    SymMatrix::new(
        block
            .rows()
            .iter()
            .map(|row| row.iter().map(|e| e.coords()[0].as_rational().expect("center is Q")).collect())
            .collect(),
    )
}

/// The class of `M` in a split context of matching size.
pub fn class_of(ctx: &VarietyContext, m: &SymMatrix) -> Result<SymmetricClass> {
    let comp = ctx
        .components()
        .first()
        .ok_or_else(|| Error::InvalidInput("empty context".into()))?;
    ctx.class(vec![rational_block(comp, &m.entries)?])
}
