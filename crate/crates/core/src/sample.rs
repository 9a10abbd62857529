//! Random elements for validation sweeps and tests.

use rand::Rng;

use crate::exactmath::{FieldElement, NumberField, Rational, RationalPolynomial};
use crate::wedderburn::{AlgebraElement, DivisionAlgebra, DivisionElement, SymmetricClass, VarietyContext, WedderburnComponent};

/// Numerator in `[-4, 4]`, denominator in `[1, 3]`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

pub fn field_element<R: Rng + ?Sized>(field: &NumberField, rng: &mut R) -> FieldElement {
    field.element(RationalPolynomial::new((0..field.degree()).map(|_| rational(rng)).collect()))
}

pub fn division_element<R: Rng + ?Sized>(alg: &DivisionAlgebra, rng: &mut R) -> DivisionElement {
    alg.element((0..alg.dim()).map(|_| field_element(alg.center(), rng)).collect())
        .expect("coordinates in the center")
}

pub fn algebra_element<R: Rng + ?Sized>(comp: &WedderburnComponent, rng: &mut R) -> AlgebraElement {
    let r = comp.mult_r();
    comp.element(
        (0..r)
            .map(|_| (0..r).map(|_| division_element(comp.algebra(), rng)).collect())
            .collect(),
    )
    .expect("shape matches")
}

/// `x + x†` for a random `x`.
pub fn symmetric_block<R: Rng + ?Sized>(comp: &WedderburnComponent, rng: &mut R) -> AlgebraElement {
    let x = algebra_element(comp, rng);
    comp.add(&x, &comp.rosati_apply(&x))
}

pub fn symmetric_class<R: Rng + ?Sized>(ctx: &VarietyContext, rng: &mut R) -> SymmetricClass {
    ctx.class(ctx.components().iter().map(|c| symmetric_block(c, rng)).collect())
        .expect("x + x† is fixed by the involution")
}
