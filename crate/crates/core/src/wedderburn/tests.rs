use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::exactmath::{int, ratio, FieldElement, RationalPolynomial};
use crate::sample;

fn q() -> NumberField {
    NumberField::rationals()
}

fn quaternion_component(name: &str, r: usize, a: i64, b: i64, ty: AlbertType, base: BaseInvolution, g: u32) -> Result<WedderburnComponent> {
    let z = q();
    let alg = DivisionAlgebra::new(
        z.clone(),
        DivisionAlgebraKind::Quaternion { a: z.from_rational(int(a)), b: z.from_rational(int(b)) },
    )?;
    WedderburnComponent::new(ComponentSpec {
        name: name.into(),
        dim_g: g,
        mult_r: r,
        algebra: alg,
        albert_type: ty,
        base,
        gram: None,
    })
}

fn hamilton(r: usize) -> WedderburnComponent {
    quaternion_component("B", r, -1, -1, AlbertType::III, BaseInvolution::QuaternionStandard, r as u32).unwrap()
}

fn quat(comp: &WedderburnComponent, c: [i64; 4]) -> DivisionElement {
    comp.algebra()
        .element(c.iter().map(|&v| comp.center().from_rational(int(v))).collect())
        .unwrap()
}

fn block(comp: &WedderburnComponent, rows: &[&[i64]]) -> AlgebraElement {
    let rows: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    rational_block(comp, &rows).unwrap()
}

fn rational_charpoly(comp: &WedderburnComponent, x: &AlgebraElement) -> RationalPolynomial {
    comp.reduced_charpoly(x).unwrap().to_rational().unwrap()
}

#[test]
fn e_times_e_context() {
    let ctx = split_context(2).unwrap();
    assert_eq!(ctx.dimension(), 2);
    assert_eq!(ctx.components()[0].exponent(), 2);
}

#[test]
fn supersingular_curve_context() {
    let comp = hamilton(1);
    assert_eq!(comp.exponent(), 1);
    assert_eq!(comp.reduced_degree(), 2);
}

#[test]
fn real_quadratic_center_with_exponent_one_is_accepted() {
    let z = NumberField::quadratic(2).unwrap();
    let comp = WedderburnComponent::new(ComponentSpec {
        name: "A".into(),
        dim_g: 1,
        mult_r: 1,
        algebra: DivisionAlgebra::new(z, DivisionAlgebraKind::Field).unwrap(),
        albert_type: AlbertType::I,
        base: BaseInvolution::Identity,
        gram: None,
    })
    .unwrap();
    assert_eq!(comp.exponent(), 1);
}

#[test]
fn rejects_non_integral_exponent() {
    let z = NumberField::quadratic(2).unwrap();
    let m1 = z.from_rational(int(-1));
    let err = WedderburnComponent::new(ComponentSpec {
        name: "A".into(),
        dim_g: 1,
        mult_r: 1,
        algebra: DivisionAlgebra::new(z, DivisionAlgebraKind::Quaternion { a: m1.clone(), b: m1 }).unwrap(),
        albert_type: AlbertType::III,
        base: BaseInvolution::QuaternionStandard,
        gram: None,
    })
    .unwrap_err();
    assert!(matches!(err, Error::NonIntegralExponent { t: 2, m: 2, .. }), "{err:?}");
}

#[test]
fn rejects_type_constraints() {
    let gauss = NumberField::quadratic(-1).unwrap();
    let spec = |ty, base| ComponentSpec {
        name: "A".into(),
        dim_g: 1,
        mult_r: 1,
        algebra: DivisionAlgebra::new(gauss.clone(), DivisionAlgebraKind::Field).unwrap(),
        albert_type: ty,
        base,
        gram: None,
    };
    let err = WedderburnComponent::new(spec(AlbertType::I, BaseInvolution::Identity)).unwrap_err();
    assert!(matches!(err, Error::TypeConstraintViolation { .. }));
    // identity on a CM field is not positive
    let err = WedderburnComponent::new(spec(AlbertType::IV, BaseInvolution::Identity)).unwrap_err();
    assert!(matches!(err, Error::NonPositiveInvolution { .. }), "{err:?}");
    let conj = BaseInvolution::FieldConjugation { image: -&gauss.generator() };
    assert!(WedderburnComponent::new(spec(AlbertType::IV, conj)).is_ok());
    let err = WedderburnComponent::new(spec(AlbertType::IV, BaseInvolution::FieldConjugation { image: gauss.one() })).unwrap_err();
    assert!(matches!(err, Error::InvalidInvolution { .. }));

    let err = quaternion_component("B", 1, -1, -1, AlbertType::I, BaseInvolution::QuaternionStandard, 1).unwrap_err();
    assert!(matches!(err, Error::TypeConstraintViolation { .. }));
}

#[test]
fn indefinite_trace_form_is_rejected() {
    let z = q();
    let alg = DivisionAlgebra::new(z.clone(), DivisionAlgebraKind::Field).unwrap();
    let h = vec![
        vec![alg.one(), alg.zero()],
        vec![alg.zero(), alg.from_rational(int(-1))],
    ];
    let spec = ComponentSpec {
        name: "E".into(),
        dim_g: 1,
        mult_r: 2,
        algebra: alg,
        albert_type: AlbertType::I,
        base: BaseInvolution::Identity,
        gram: Some(h),
    };
    let err = WedderburnComponent::new(spec).unwrap_err();
    assert!(matches!(err, Error::NonPositiveInvolution { .. }), "{err:?}");
}

#[test]
fn non_symmetric_gram_is_rejected() {
    let alg = DivisionAlgebra::new(q(), DivisionAlgebraKind::Field).unwrap();
    let h = vec![vec![alg.one(), alg.one()], vec![alg.zero(), alg.one()]];
    let err = WedderburnComponent::new(ComponentSpec {
        name: "E".into(),
        dim_g: 1,
        mult_r: 2,
        algebra: alg,
        albert_type: AlbertType::I,
        base: BaseInvolution::Identity,
        gram: Some(h),
    })
    .unwrap_err();
    assert!(matches!(err, Error::InvalidInvolution { .. }));
}

#[test]
fn standard_involution_on_indefinite_algebra_is_not_positive() {
    let err = quaternion_component("B", 1, 1, -1, AlbertType::II, BaseInvolution::QuaternionStandard, 2).unwrap_err();
    assert!(matches!(err, Error::NonPositiveInvolution { .. }), "{err:?}");
    let comp = hamilton(1);
    let s = quat(&comp, [0, 0, 1, 0]);
    let ok = quaternion_component("B", 1, 1, -1, AlbertType::II, BaseInvolution::QuaternionTwisted { s }, 2);
    assert!(ok.is_ok(), "{ok:?}");
}

#[test]
fn rosati_examples() {
    let ctx = split_context(2).unwrap();
    let e = &ctx.components()[0];
    assert_eq!(e.rosati_apply(&block(e, &[&[0, 1], &[0, 0]])), block(e, &[&[0, 0], &[1, 0]]));
    let d = block(e, &[&[3, 0], &[0, -2]]);
    assert!(e.is_rosati_fixed(&d));

    let h = hamilton(1);
    let i = h.element(vec![vec![quat(&h, [0, 1, 0, 0])]]).unwrap();
    let minus_i = h.element(vec![vec![quat(&h, [0, -1, 0, 0])]]).unwrap();
    assert_eq!(h.rosati_apply(&i), minus_i);
}

#[test]
fn positivity_examples() {
    let one = split_component("E", 1).unwrap();
    let check = one.check_positivity();
    assert_eq!(check.gram, vec![vec![int(1)]]);
    assert!(check.passed());
    let check = hamilton(1).check_positivity();
    assert!(check.passed());
    // Trd(q q̄) = 2 Nrd(q): diagonal 2, 2, 2, 2
    for (k, row) in check.gram.iter().enumerate() {
        assert_eq!(row[k], int(2));
    }
}

#[test]
fn reduced_charpoly_examples() {
    let ctx = split_context(2).unwrap();
    let e = &ctx.components()[0];
    assert_eq!(rational_charpoly(e, &block(e, &[&[0, 0], &[0, 1]])), RationalPolynomial::from_ints(&[0, 1, 1]));
    assert_eq!(rational_charpoly(e, &e.identity()), RationalPolynomial::from_ints(&[1, 1]).pow(2));

    let h = hamilton(1);
    let x = h.element(vec![vec![quat(&h, [1, 1, 1, 1])]]).unwrap();
    let p = rational_charpoly(&h, &x);
    // pencil N + x: Nrd = (N + 1)^2 + 3
    assert_eq!(p, RationalPolynomial::from_ints(&[4, 2, 1]));
    // the classical characteristic polynomial det(X - x) is p(-X)
    assert_eq!(p.scale_var(&int(-1)), RationalPolynomial::from_ints(&[4, -2, 1]));
    assert_eq!(rational_charpoly(&h, &h.identity()), RationalPolynomial::from_ints(&[1, 1]).pow(2));
}

#[test]
fn subleading_coefficient_is_reduced_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for comp in [hamilton(2), split_component("E", 3).unwrap()] {
        for _ in 0..5 {
            let x = sample::algebra_element(&comp, &mut rng);
            let p = comp.descended_charpoly(&x).unwrap();
            let deg = p.degree().unwrap();
            assert_eq!(p.coeff(deg - 1), comp.reduced_trace(&x));
        }
    }
}

#[test]
fn field_component_constant_term_is_the_element() {
    let z = NumberField::quadratic(3).unwrap();
    let comp = WedderburnComponent::new(ComponentSpec {
        name: "A".into(),
        dim_g: 2,
        mult_r: 1,
        algebra: DivisionAlgebra::new(z.clone(), DivisionAlgebraKind::Field).unwrap(),
        albert_type: AlbertType::I,
        base: BaseInvolution::Identity,
        gram: None,
    })
    .unwrap();
    let e: FieldElement = z.element(RationalPolynomial::new(vec![ratio(1, 2), int(-3)]));
    let x = comp.element(vec![vec![comp.algebra().scalar(e.clone())]]).unwrap();
    assert_eq!(comp.reduced_charpoly(&x).unwrap().coeff(0), e);
}

#[test]
fn class_arithmetic_examples() {
    let ctx = split_context(2).unwrap();
    let e = &ctx.components()[0];
    let cls = |rows: &[&[i64]]| ctx.class(vec![block(e, rows)]).unwrap();
    assert_eq!(ctx.scale(&cls(&[&[2, 0], &[0, 2]]), &ratio(1, 2)).unwrap(), ctx.identity());
    assert_eq!(ctx.add(&cls(&[&[0, 0], &[0, 1]]), &cls(&[&[1, 0], &[0, 0]])).unwrap(), ctx.identity());
    let err = ctx.class(vec![block(e, &[&[0, 1], &[0, 0]])]).unwrap_err();
    assert!(matches!(err, Error::NotRosatiFixed { .. }));
    let other = split_context(3).unwrap();
    assert!(class_arithmetic(&ctx, &other.identity(), ClassOp::Scale(&int(2))).is_err());
}

fn sample_components() -> Vec<WedderburnComponent> {
    let real = NumberField::quadratic(5).unwrap();
    let cm = NumberField::quadratic(-3).unwrap();
    let field = |z: &NumberField, ty, base, g, r| {
        WedderburnComponent::new(ComponentSpec {
            name: "A".into(),
            dim_g: g,
            mult_r: r,
            algebra: DivisionAlgebra::new(z.clone(), DivisionAlgebraKind::Field).unwrap(),
            albert_type: ty,
            base,
            gram: None,
        })
        .unwrap()
    };
    let s = quat(&hamilton(1), [0, 0, 1, 0]);
    vec![
        split_component("E", 3).unwrap(),
        field(&real, AlbertType::I, BaseInvolution::Identity, 2, 2),
        field(&cm, AlbertType::IV, BaseInvolution::FieldConjugation { image: -&cm.generator() }, 1, 2),
        hamilton(2),
        quaternion_component("B", 2, 3, -2, AlbertType::II, BaseInvolution::QuaternionTwisted { s }, 2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rosati_is_an_involution(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for comp in sample_components() {
            let x = sample::algebra_element(&comp, &mut rng);
            prop_assert_eq!(comp.rosati_apply(&comp.rosati_apply(&x)), x);
        }
    }

    #[test]
    fn charpoly_is_monic_of_reduced_degree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for comp in sample_components() {
            let x = sample::algebra_element(&comp, &mut rng);
            let p = comp.reduced_charpoly(&x).unwrap();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(comp.reduced_degree()));
        }
    }

    #[test]
    fn reduced_norm_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for comp in sample_components() {
            let x = sample::algebra_element(&comp, &mut rng);
            let y = sample::algebra_element(&comp, &mut rng);
            let nrd = |e: &AlgebraElement| comp.reduced_charpoly(e).unwrap().coeff(0);
            prop_assert_eq!(nrd(&comp.mul(&x, &y)), &nrd(&x) * &nrd(&y));
        }
    }
}

#[test]
fn gram_matrices_are_symmetric() {
    for comp in sample_components() {
        let g = comp.check_positivity().gram;
        for i in 0..g.len() {
            for j in 0..i {
                assert_eq!(g[i][j], g[j][i], "component {}", comp.name());
            }
        }
    }
}
