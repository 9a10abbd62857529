//! Central division algebras of degree 1 (the center itself) or 2
//! (quaternion algebras `(a, b)_Z`), with elements stored as coordinates
//! over the center in the basis `1` resp. `1, i, j, k`.

use crate::error::{Error, Result};
use crate::exactmath::linalg::FieldMatrix;
use crate::exactmath::{FieldElement, NumberField, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionAlgebraKind {
    Field,
    /// `i² = a`, `j² = b`, `ij = -ji = k`.
    Quaternion { a: FieldElement, b: FieldElement },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionElement {
    coords: Vec<FieldElement>,
}

impl DivisionElement {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldElement::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionAlgebra {
    center: NumberField,
    kind: DivisionAlgebraKind,
}

impl DivisionAlgebra {
    pub fn new(center: NumberField, kind: DivisionAlgebraKind) -> Result<Self> {
        if let DivisionAlgebraKind::Quaternion { a, b } = &kind {
            if a.field() != &center || b.field() != &center {
                return Err(Error::InvalidInput(
                    "quaternion parameters must lie in the center".into(),
                ));
            }
            if a.is_zero() || b.is_zero() {
                return Err(Error::InvalidInput(
                    "quaternion parameters a and b must be nonzero".into(),
                ));
            }
        }
        Ok(Self { center, kind })
    }

    pub fn center(&self) -> &NumberField {
        &self.center
    }

    pub fn kind(&self) -> &DivisionAlgebraKind {
        &self.kind
    }

    pub fn is_quaternion(&self) -> bool {
        matches!(self.kind, DivisionAlgebraKind::Quaternion { .. })
    }

    /// Degree `m`: 1 for a field, 2 for a quaternion algebra.
    pub fn degree(&self) -> usize {
        if self.is_quaternion() {
            2
        } else {
            1
        }
    }

    /// Dimension `m²` over the center.
    pub fn dim(&self) -> usize {
        self.degree() * self.degree()
    }

    pub fn zero(&self) -> DivisionElement {
        DivisionElement {
            coords: vec![self.center.zero(); self.dim()],
        }
    }

    pub fn one(&self) -> DivisionElement {
        self.scalar(self.center.one())
    }

    pub fn scalar(&self, z: FieldElement) -> DivisionElement {
        let mut e = self.zero();
        e.coords[0] = z;
        e
    }

    pub fn from_rational(&self, c: Rational) -> DivisionElement {
        self.scalar(self.center.from_rational(c))
    }

    pub fn element(&self, coords: Vec<FieldElement>) -> Result<DivisionElement> {
        if coords.len() != self.dim() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates over the center, got {}",
                self.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| c.field() != &self.center) {
            return Err(Error::FieldMismatch);
        }
        Ok(DivisionElement { coords })
    }

    /// Standard `Z`-basis `1` or `1, i, j, k`.
    pub fn basis(&self) -> Vec<DivisionElement> {
        (0..self.dim())
            .map(|s| {
                let mut e = self.zero();
                e.coords[s] = self.center.one();
                e
            })
            .collect()
    }

    pub fn add(&self, x: &DivisionElement, y: &DivisionElement) -> DivisionElement {
        DivisionElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &DivisionElement, y: &DivisionElement) -> DivisionElement {
        DivisionElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &DivisionElement) -> DivisionElement {
        DivisionElement {
            coords: x.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, x: &DivisionElement, c: &Rational) -> DivisionElement {
        DivisionElement {
            coords: x.coords.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul(&self, x: &DivisionElement, y: &DivisionElement) -> DivisionElement {
        match &self.kind {
            DivisionAlgebraKind::Field => DivisionElement {
                coords: vec![&x.coords[0] * &y.coords[0]],
            },
            DivisionAlgebraKind::Quaternion { a, b } => {
                let [x1, y1, z1, w1] = &x.coords[..] else { unreachable!() };
                let [x2, y2, z2, w2] = &y.coords[..] else { unreachable!() };
                let ab = a * b;
                let s = &(&(&(x1 * x2) + &(a * &(y1 * y2))) + &(b * &(z1 * z2))) - &(&ab * &(w1 * w2));
                let i = &(&(&(x1 * y2) + &(y1 * x2)) - &(b * &(z1 * w2))) + &(b * &(w1 * z2));
                let j = &(&(&(x1 * z2) + &(z1 * x2)) + &(a * &(y1 * w2))) - &(a * &(w1 * y2));
                let k = &(&(&(x1 * w2) + &(w1 * x2)) + &(y1 * z2)) - &(z1 * y2);
                DivisionElement {
                    coords: vec![s, i, j, k],
                }
            }
        }
    }

    /// The canonical involution: identity on a field, `x - yi - zj - wk` on
    /// a quaternion algebra.
    pub fn conjugate(&self, x: &DivisionElement) -> DivisionElement {
        let mut coords = x.coords.clone();
        for c in coords.iter_mut().skip(1) {
            *c = -&*c;
        }
        DivisionElement { coords }
    }

    pub fn reduced_trace(&self, x: &DivisionElement) -> FieldElement {
        if self.is_quaternion() {
            &x.coords[0] + &x.coords[0]
        } else {
            x.coords[0].clone()
        }
    }

    /// `x² - a y² - b z² + ab w²` for quaternions, the element itself for a field.
    pub fn reduced_norm(&self, x: &DivisionElement) -> FieldElement {
        match &self.kind {
            DivisionAlgebraKind::Field => x.coords[0].clone(),
            DivisionAlgebraKind::Quaternion { .. } => self.mul(x, &self.conjugate(x)).coords[0].clone(),
        }
    }

    pub fn inv(&self, x: &DivisionElement) -> Result<DivisionElement> {
        if !self.is_quaternion() {
            return Ok(DivisionElement {
                coords: vec![x.coords[0].inv()?],
            });
        }
        let n = self.reduced_norm(x).inv()?;
        let c = self.conjugate(x);
        Ok(DivisionElement {
            coords: c.coords.iter().map(|v| v * &n).collect(),
        })
    }

    /// Matrix over the center of left multiplication by `x` in the standard basis.
    pub fn left_regular(&self, x: &DivisionElement) -> FieldMatrix {
        let basis = self.basis();
        let columns: Vec<DivisionElement> = basis.iter().map(|e| self.mul(x, e)).collect();
        (0..self.dim())
            .map(|row| columns.iter().map(|col| col.coords[row].clone()).collect())
            .collect()
    }
}
