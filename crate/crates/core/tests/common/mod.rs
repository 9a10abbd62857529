#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use pnrd_core::exactmath::{int, NumberField, Rational};
use pnrd_core::wedderburn::{
    AlbertType, BaseInvolution, ComponentSpec, DivisionAlgebra, DivisionAlgebraKind, SymmetricClass,
    VarietyContext, WedderburnComponent,
};

pub const REAL_CENTERS: [i64; 4] = [1, 2, 3, 5];
pub const CM_CENTERS: [i64; 3] = [-1, -2, -3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Type I over a totally real center.
    TotallyReal,
    /// Type II: indefinite quaternions with a twisted involution.
    Indefinite,
    /// Type III: definite quaternions with the canonical involution.
    Definite,
    /// Type IV: a CM field with complex conjugation.
    Cm,
}

pub const KINDS: [Kind; 4] = [Kind::TotallyReal, Kind::Indefinite, Kind::Definite, Kind::Cm];

pub fn center(d: i64) -> NumberField {
    if d == 1 {
        NumberField::rationals()
    } else {
        NumberField::quadratic(d).unwrap()
    }
}

fn spec(name: &str, g: u32, r: usize, algebra: DivisionAlgebra, ty: AlbertType, base: BaseInvolution) -> WedderburnComponent {
    WedderburnComponent::new(ComponentSpec {
        name: name.into(),
        dim_g: g,
        mult_r: r,
        algebra,
        albert_type: ty,
        base,
        gram: None,
    })
    .unwrap()
}

fn quaternions(z: &NumberField, a: i64, b: i64) -> DivisionAlgebra {
    DivisionAlgebra::new(
        z.clone(),
        DivisionAlgebraKind::Quaternion { a: z.from_rational(int(a)), b: z.from_rational(int(b)) },
    )
    .unwrap()
}

/// A valid factor of the given kind on center `Q(√d)` (or `Q` for
/// `d = 1`) with `r` copies of a `g`-dimensional simple factor.
/// Type I needs `t | g` and type II needs `2t | g` for the product of
/// reduced norms to be a square; validation accepts other values.
pub fn component(kind: Kind, name: &str, d: i64, g: u32, r: usize) -> WedderburnComponent {
    let z = center(d);
    match kind {
        Kind::TotallyReal => spec(
            name,
            g,
            r,
            DivisionAlgebra::new(z, DivisionAlgebraKind::Field).unwrap(),
            AlbertType::I,
            BaseInvolution::Identity,
        ),
        Kind::Cm => {
            let image = -&z.generator();
            spec(
                name,
                g,
                r,
                DivisionAlgebra::new(z, DivisionAlgebraKind::Field).unwrap(),
                AlbertType::IV,
                BaseInvolution::FieldConjugation { image },
            )
        }
        Kind::Definite => spec(name, g, r, quaternions(&z, -1, -3), AlbertType::III, BaseInvolution::QuaternionStandard),
        Kind::Indefinite => {
            // i² = 3 would split over Q(√3)
            let alg = quaternions(&z, if d == 3 { 7 } else { 3 }, -1);
            let s = alg
                .element(vec![z.zero(), z.zero(), z.one(), z.zero()])
                .unwrap();
            spec(name, g, r, alg, AlbertType::II, BaseInvolution::QuaternionTwisted { s })
        }
    }
}

/// A random valid factor of the given kind with `r·g <= budget`, or
/// `None` when the kind cannot fit.
pub fn random_component<R: Rng>(kind: Kind, name: &str, budget: u32, rng: &mut R) -> Option<WedderburnComponent> {
    let d = match kind {
        Kind::Cm => *CM_CENTERS.choose(rng).unwrap(),
        _ => *REAL_CENTERS.choose(rng).unwrap(),
    };
    let t = if d == 1 { 1 } else { 2 };
    // smallest admissible simple dimension g
    let step = match kind {
        Kind::Cm => 1,
        Kind::TotallyReal | Kind::Definite => t,
        Kind::Indefinite => 2 * t,
    };
    if step > budget {
        return None;
    }
    let g = step * rng.gen_range(1..=(budget / step).min(2));
    let r = rng.gen_range(1..=((budget / g) as usize).min(2));
    Some(component(kind, name, d, g, r))
}

/// A random context of total dimension at most `max_g` with one or two
/// factors; the first factor has the requested kind.
pub fn random_context<R: Rng>(kind: Kind, max_g: u32, rng: &mut R) -> VarietyContext {
    loop {
        let Some(first) = random_component(kind, "F0", max_g, rng) else {
            continue;
        };
        let mut comps = vec![first];
        let used = comps[0].dimension();
        if used < max_g && rng.gen_bool(0.4) {
            let other = *KINDS.choose(rng).unwrap();
            if let Some(c) = random_component(other, "F1", max_g - used, rng) {
                comps.push(c);
            }
        }
        let sqrt = if rng.gen_bool(0.7) {
            int(1)
        } else {
            Rational::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=3).into())
        };
        return VarietyContext::new(comps, sqrt).unwrap();
    }
}

pub fn split_context(g: usize) -> VarietyContext {
    pnrd_core::wedderburn::split_context(g).unwrap()
}

pub fn random_class<R: Rng>(ctx: &VarietyContext, rng: &mut R) -> SymmetricClass {
    pnrd_core::sample::symmetric_class(ctx, rng)
}

/// A random symmetric rational matrix with numerators and denominators
/// bounded by `bound`.
pub fn random_symmetric<R: Rng>(g: usize, bound: i64, rng: &mut R) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![int(0); g]; g];
    for i in 0..g {
        for j in 0..=i {
            let v = Rational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into());
            m[i][j] = v.clone();
            m[j][i] = v;
        }
    }
    m
}
