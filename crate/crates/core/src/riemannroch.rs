//! Hilbert polynomials of symmetric classes and the invariants read off them:
//! Euler characteristic, index, dimension of the kernel, forced vanishing,
//! and the rank-`r` wrappers for semihomogeneous bundles.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{poly_exact_sqrt, sturm_root_profile, Rational, RationalPolynomial, RootProfile};
use crate::wedderburn::{SymmetricClass, VarietyContext};

/// `q(N) = pNrd(N·id + α)` together with the Hilbert polynomial
/// `√(deg φ)·q` and the real-root profile of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub q: RationalPolynomial,
    pub scaled: RationalPolynomial,
    pub profile: RootProfile,
}

impl HilbertData {
    pub fn degree(&self) -> usize {
        self.q.degree().unwrap_or(0)
    }

    /// Number of negative roots, `g - i - dim K`.
    pub fn negative(&self) -> usize {
        self.degree() - self.profile.positive - self.profile.zero
    }
}

/// The product of the per-factor descended reduced norms of the pencil,
/// `F(N) = ∏ Pᵢ(N)^{eᵢ}`, of degree `2g`.
pub fn norm_product(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<RationalPolynomial> {
    check_class(ctx, alpha)?;
    let mut f = RationalPolynomial::one();
    for (comp, block) in ctx.components().iter().zip(alpha.blocks()) {
        let p = comp.descended_charpoly(block)?;
        f = &f * &p.pow(comp.exponent());
    }
    Ok(f)
}

pub fn pnrd_pencil(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<HilbertData> {
    let f = norm_product(ctx, alpha)?;
    let g = ctx.dimension() as usize;
    let q = poly_exact_sqrt(&f)
        .filter(|q| q.degree() == Some(g) && q.is_monic())
        .ok_or(Error::NotAPerfectSquare)?;
    let profile = sturm_root_profile(&q)?;
    if !profile.all_real() {
        return Err(Error::NonRealRoots {
            real: profile.real_roots(),
            degree: g,
        });
    }
    let scaled = q.scale(ctx.sqrt_deg_phi());
    Ok(HilbertData { q, scaled, profile })
}

/// The normalized reduced norm `pNrd(α) = q(0)`.
pub fn pnrd_eval(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<Rational> {
    Ok(pnrd_pencil(ctx, alpha)?.q.coeff(0))
}

pub fn euler_char(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<Rational> {
    Ok(ctx.sqrt_deg_phi() * pnrd_eval(ctx, alpha)?)
}

/// `positive` is the index `i`, `zero` is `dim K`.
pub fn index(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<RootProfile> {
    Ok(pnrd_pencil(ctx, alpha)?.profile)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingRanges {
    /// Degrees `j < i` with `Hʲ = 0`.
    pub vanish_low: Vec<usize>,
    /// Degrees `g - j`, `j < neg`, with `H^{g-j} = 0`, ascending.
    pub vanish_high: Vec<usize>,
}

impl VanishingRanges {
    pub fn from_profile(profile: &RootProfile, g: usize) -> Self {
        Self::from_counts(profile.positive, profile.zero, g)
    }

    /// From the index `i` and `dim K` of a class on a `g`-dimensional variety.
    pub fn from_counts(i: usize, dim_k: usize, g: usize) -> Self {
        let neg = g - i - dim_k;
        let mut vanish_high: Vec<usize> = (0..neg).map(|j| g - j).collect();
        vanish_high.reverse();
        Self {
            vanish_low: (0..i).collect(),
            vanish_high,
        }
    }

    pub fn forces_zero(&self, degree: usize) -> bool {
        self.vanish_low.contains(&degree) || self.vanish_high.contains(&degree)
    }
}

pub fn vanishing_ranges(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<VanishingRanges> {
    let profile = index(ctx, alpha)?;
    Ok(VanishingRanges::from_profile(&profile, ctx.dimension() as usize))
}

/// The class of `det ℰ` of a rank-`r` bundle, with `γ = det ℰ / r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    det_class: SymmetricClass,
    rank: u32,
    gamma: SymmetricClass,
}

impl BundleClass {
    pub fn new(ctx: &VarietyContext, det_class: SymmetricClass, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("bundle rank must be positive".into()));
        }
        let gamma = ctx.scale(&det_class, &Rational::new(1.into(), rank.into()))?;
        Ok(Self {
            det_class,
            rank,
            gamma,
        })
    }

    pub fn det_class(&self) -> &SymmetricClass {
        &self.det_class
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn gamma(&self) -> &SymmetricClass {
        &self.gamma
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleInvariants {
    pub chi_bundle: Rational,
    pub index_bundle: usize,
    pub dim_k_bundle: usize,
    /// `χ(ℰ)²` when `χ(ℰ) ≠ 0`.
    pub ord_k: Option<Rational>,
}

pub fn bundle_invariants(ctx: &VarietyContext, b: &BundleClass) -> Result<BundleInvariants> {
    let data = pnrd_pencil(ctx, &b.det_class)?;
    let chi_det = ctx.sqrt_deg_phi() * data.q.coeff(0);
    let g = ctx.dimension();
    let chi_bundle = chi_det / Rational::from_integer(num_bigint::BigInt::from(b.rank).pow(g - 1));
    let ord_k = (!chi_bundle.is_zero()).then(|| &chi_bundle * &chi_bundle);
    Ok(BundleInvariants {
        chi_bundle,
        index_bundle: data.profile.positive,
        dim_k_bundle: data.profile.zero,
        ord_k,
    })
}

fn check_class(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<()> {
    // revalidates shape and symmetry against this context
    ctx.class(alpha.blocks().to_vec()).map(|_| ())
}
