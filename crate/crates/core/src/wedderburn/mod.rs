//! Wedderburn data: simple factors `M_r(Δ)` with their Rosati involutions,
//! symmetric classes, and reduced characteristic polynomials.

pub mod component;
pub mod context;
pub mod division;

pub use component::{AlbertType, AlgebraElement, BaseInvolution, ComponentSpec, PositivityCheck, WedderburnComponent};
pub use context::{class_arithmetic, ClassOp, SymmetricClass, VarietyContext};
pub use division::{DivisionAlgebra, DivisionAlgebraKind, DivisionElement};

use crate::error::Result;
use crate::exactmath::{NumberField, Rational};

/// `M_r(Q)` with the transpose involution: the factor of `E^r` for an
/// elliptic curve `E` without complex multiplication.
pub fn split_component(name: &str, r: usize) -> Result<WedderburnComponent> {
    WedderburnComponent::new(ComponentSpec {
        name: name.to_string(),
        dim_g: 1,
        mult_r: r,
        algebra: DivisionAlgebra::new(NumberField::rationals(), DivisionAlgebraKind::Field)?,
        albert_type: AlbertType::I,
        base: BaseInvolution::Identity,
        gram: None,
    })
}

/// The single-factor context `M_g(Q)` with `√(deg φ) = 1`.
pub fn split_context(g: usize) -> Result<VarietyContext> {
    VarietyContext::new(vec![split_component("E", g)?], Rational::from_integer(1.into()))
}

/// A block of a field-kind component over `Q` from rational entries.
pub fn rational_block(comp: &WedderburnComponent, rows: &[Vec<Rational>]) -> Result<AlgebraElement> {
    let alg = comp.algebra();
    comp.element(
        rows.iter()
            .map(|row| row.iter().map(|c| alg.from_rational(c.clone())).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests;
