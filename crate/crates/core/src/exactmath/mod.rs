//! Exact arithmetic substrate: rationals, polynomials over `Q` and over
//! number fields, root counting, resultants and descent to `Q`.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use field::{conjugate_product_descend, field_arithmetic, resultant, FieldElement, FieldOp, FieldPolynomial, NumberField};
pub use poly::RationalPolynomial;
pub use rational::{format_rational, int, parse_rational, ratio, Rational};
pub use sturm::{cauchy_bound, sturm_root_profile, RootProfile};

/// Norm of a number field element down to `Q`.
pub fn nf_norm(e: &FieldElement) -> Rational {
    e.norm()
}

/// Square root with positive leading coefficient, or `None` when `p` is
/// not a perfect square in `Q[N]`.
pub fn poly_exact_sqrt(p: &RationalPolynomial) -> Option<RationalPolynomial> {
    p.exact_sqrt()
}
