//! Exact reduced-norm polynomials for abelian varieties.
//!
//! Given the simple factors `M_r(Δ)` of an endomorphism algebra together
//! with a Rosati involution, this crate builds the normalized polynomial
//! `pNrd` on symmetric elements and derives from it Euler characteristics,
//! Hilbert polynomials, indices, vanishing ranges, weak indices and the
//! continuous Castelnuovo–Mumford regularity of semihomogeneous bundles.
//! Everything is computed with exact rational arithmetic.

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod regularity;
pub mod riemannroch;
pub mod sample;
pub mod wedderburn;

pub use error::{Error, Result};
