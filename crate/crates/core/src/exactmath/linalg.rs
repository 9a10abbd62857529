//! Dense exact linear algebra over number fields.

use num_traits::Zero;

use super::field::{FieldElement, FieldPolynomial, NumberField};
use super::rational::{int, Rational};

pub type FieldMatrix = Vec<Vec<FieldElement>>;

/// Determinant by Gaussian elimination with nonzero-pivot search.
pub fn determinant(field: &NumberField, m: &FieldMatrix) -> FieldElement {
    let n = m.len();
    let mut a = m.clone();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -&det;
        }
        let inv = a[col][col].inv().expect("nonzero pivot in a field");
        det = &det * &a[col][col];
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    det
}

/// `det(N·I + m)` as a monic polynomial in `N`, interpolated from its
/// values at `N = 0, 1, …, n`.
pub fn pencil_determinant(field: &NumberField, m: &FieldMatrix) -> FieldPolynomial {
    let n = m.len();
    let nodes: Vec<Rational> = (0..=n as i64).map(int).collect();
    let values: Vec<FieldElement> = nodes
        .iter()
        .map(|x| {
            let mut shifted = m.clone();
            let shift = field.from_rational(x.clone());
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = &row[i] + &shift;
            }
            determinant(field, &shifted)
        })
        .collect();
    FieldPolynomial::interpolate(field, &nodes, &values)
}

/// Pivots of Gaussian elimination without row exchanges; the `k`-th leading
/// principal minor is the product of the first `k`. Stops at the first zero
/// pivot, so a short result means a vanishing leading minor.
pub fn leading_pivots(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = a[k][k].clone();
        if p.is_zero() {
            pivots.push(p);
            break;
        }
        for r in (k + 1)..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &p;
            for c in k..n {
                let delta = &f * &a[k][c];
                a[r][c] -= delta;
            }
        }
        pivots.push(p);
    }
    pivots
}
