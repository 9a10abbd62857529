//! One simple factor `R = M_r(Δ)` of the endomorphism algebra together
//! with its Rosati involution `M ↦ H⁻¹ ι(M)ᵀ H`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::division::{DivisionAlgebra, DivisionElement};
use crate::error::{Error, Result};
use crate::exactmath::linalg::{leading_pivots, pencil_determinant, FieldMatrix};
use crate::exactmath::{FieldElement, FieldPolynomial, NumberField, Rational, RationalPolynomial};
use crate::sample;

/// Random elements used to check that a declared involution is involutive.
const INVOLUTION_SAMPLES: usize = 20;
const ANTI_MULTIPLICATIVE_SAMPLES: usize = 5;
const VALIDATION_SEED: u64 = 0x5eed_0fa1_be27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlbertType {
    I,
    II,
    III,
    IV,
}

/// The involution `ι` applied entrywise before transposing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseInvolution {
    Identity,
    /// The field automorphism sending the generator to `image`.
    FieldConjugation { image: FieldElement },
    QuaternionStandard,
    /// `x ↦ s⁻¹ x̄ s` for a pure quaternion `s`.
    QuaternionTwisted { s: DivisionElement },
}

/// An `r × r` matrix over the division algebra of its component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    rows: Vec<Vec<DivisionElement>>,
}

impl AlgebraElement {
    pub fn rows(&self) -> &[Vec<DivisionElement>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &DivisionElement {
        &self.rows[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(DivisionElement::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub name: String,
    pub dim_g: u32,
    pub mult_r: usize,
    pub algebra: DivisionAlgebra,
    pub albert_type: AlbertType,
    pub base: BaseInvolution,
    /// `None` means the identity matrix.
    pub gram: Option<Vec<Vec<DivisionElement>>>,
}

/// Result of the positivity check of the trace form `Trd(u · v†)`.
#[derive(Clone, Debug)]
pub struct PositivityCheck {
    pub gram: Vec<Vec<Rational>>,
    /// 1-based index of the first leading principal minor that is not positive.
    pub failed_minor: Option<usize>,
}

impl PositivityCheck {
    pub fn passed(&self) -> bool {
        self.failed_minor.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnComponent {
    name: String,
    dim_g: u32,
    mult_r: usize,
    algebra: DivisionAlgebra,
    albert_type: AlbertType,
    base: BaseInvolution,
    gram: AlgebraElement,
    gram_inv: AlgebraElement,
}

impl WedderburnComponent {
    /// Validates the datum: exponent integrality, the real-root conditions
    /// attached to the declared Albert type, and that the involution is a
    /// well-formed positive involution.
    pub fn new(spec: ComponentSpec) -> Result<Self> {
        let ComponentSpec {
            name,
            dim_g,
            mult_r,
            algebra,
            albert_type,
            base,
            gram,
        } = spec;
        if name.is_empty() {
            return Err(Error::InvalidInput("component name must be nonempty".into()));
        }
        if dim_g == 0 || mult_r == 0 {
            return Err(Error::InvalidInput(format!(
                "component `{name}`: g and r must be positive"
            )));
        }
        let (t, m) = (algebra.center().degree(), algebra.degree());
        if !(2 * dim_g as usize).is_multiple_of(t * m) {
            return Err(Error::NonIntegralExponent {
                component: name,
                g: dim_g,
                t,
                m,
            });
        }
        check_albert_type(&name, &algebra, albert_type)?;
        let invalid = |reason: String| Error::InvalidInvolution {
            component: name.clone(),
            reason,
        };
        check_base(&algebra, &base).map_err(invalid)?;

        let identity = identity_matrix(&algebra, mult_r);
        let gram = match gram {
            None => identity.clone(),
            Some(rows) => {
                if rows.len() != mult_r || rows.iter().any(|r| r.len() != mult_r) {
                    return Err(invalid(format!("H must be {mult_r}x{mult_r}")));
                }
                if rows.iter().flatten().any(|e| e.coords().len() != algebra.dim()
                    || e.coords().iter().any(|c| c.field() != algebra.center()))
                {
                    return Err(invalid("H has entries outside the division algebra".into()));
                }
                AlgebraElement { rows }
            }
        };
        let mut comp = Self {
            name: name.clone(),
            dim_g,
            mult_r,
            algebra,
            albert_type,
            base,
            gram: gram.clone(),
            gram_inv: identity,
        };
        if comp.star(&gram) != gram {
            return Err(invalid("H is not fixed by the entrywise involution composed with transpose".into()));
        }
        comp.gram_inv = comp
            .inverse(&gram)
            .ok_or_else(|| invalid("H is not invertible".into()))?;

        let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
        for _ in 0..INVOLUTION_SAMPLES {
            let x = sample::algebra_element(&comp, &mut rng);
            if comp.rosati_apply(&comp.rosati_apply(&x)) != x {
                return Err(invalid("applying the involution twice is not the identity".into()));
            }
        }
        for _ in 0..ANTI_MULTIPLICATIVE_SAMPLES {
            let x = sample::algebra_element(&comp, &mut rng);
            let y = sample::algebra_element(&comp, &mut rng);
            let lhs = comp.rosati_apply(&comp.mul(&x, &y));
            let rhs = comp.mul(&comp.rosati_apply(&y), &comp.rosati_apply(&x));
            if lhs != rhs {
                return Err(invalid("the involution does not reverse products".into()));
            }
        }
        let check = comp.check_positivity();
        if let Some(minor) = check.failed_minor {
            return Err(Error::NonPositiveInvolution { component: name, minor });
        }
        Ok(comp)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim_g(&self) -> u32 {
        self.dim_g
    }

    pub fn mult_r(&self) -> usize {
        self.mult_r
    }

    pub fn algebra(&self) -> &DivisionAlgebra {
        &self.algebra
    }

    pub fn center(&self) -> &NumberField {
        self.algebra.center()
    }

    pub fn albert_type(&self) -> AlbertType {
        self.albert_type
    }

    pub fn base_involution(&self) -> &BaseInvolution {
        &self.base
    }

    pub fn gram(&self) -> &AlgebraElement {
        &self.gram
    }

    /// `t = [Z : Q]`.
    pub fn center_degree(&self) -> usize {
        self.center().degree()
    }

    /// `m` with `m² = dim_Z Δ`.
    pub fn division_degree(&self) -> usize {
        self.algebra.degree()
    }

    /// `2g / (t m)`.
    pub fn exponent(&self) -> u32 {
        2 * self.dim_g / (self.center_degree() * self.division_degree()) as u32
    }

    /// Degree `n = r m` of the reduced characteristic polynomial over `Z`.
    pub fn reduced_degree(&self) -> usize {
        self.mult_r * self.division_degree()
    }

    /// Contribution `r g` to the dimension of the variety.
    pub fn dimension(&self) -> u32 {
        self.mult_r as u32 * self.dim_g
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            rows: vec![vec![self.algebra.zero(); self.mult_r]; self.mult_r],
        }
    }

    pub fn identity(&self) -> AlgebraElement {
        identity_matrix(&self.algebra, self.mult_r)
    }

    pub fn scalar(&self, c: &Rational) -> AlgebraElement {
        self.scale(&self.identity(), c)
    }

    /// Builds an element from rows, checking shape and coefficient field.
    pub fn element(&self, rows: Vec<Vec<DivisionElement>>) -> Result<AlgebraElement> {
        if rows.len() != self.mult_r || rows.iter().any(|r| r.len() != self.mult_r) {
            return Err(Error::ContextMismatch(format!(
                "component `{}` expects a {}x{} block",
                self.name, self.mult_r, self.mult_r
            )));
        }
        for e in rows.iter().flatten() {
            if e.coords().len() != self.algebra.dim() {
                return Err(Error::ContextMismatch(format!(
                    "component `{}` expects entries with {} coordinates",
                    self.name,
                    self.algebra.dim()
                )));
            }
            if e.coords().iter().any(|c| c.field() != self.center()) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(AlgebraElement { rows })
    }

    pub(crate) fn belongs(&self, x: &AlgebraElement) -> bool {
        self.element(x.rows.clone()).is_ok()
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.zip(x, y, |a, b| self.algebra.add(a, b))
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.zip(x, y, |a, b| self.algebra.sub(a, b))
    }

    pub fn scale(&self, x: &AlgebraElement, c: &Rational) -> AlgebraElement {
        AlgebraElement {
            rows: x
                .rows
                .iter()
                .map(|row| row.iter().map(|e| self.algebra.scale(e, c)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let r = self.mult_r;
        let mut rows = vec![vec![self.algebra.zero(); r]; r];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for k in 0..r {
                    let p = self.algebra.mul(&x.rows[i][k], &y.rows[k][j]);
                    *out = self.algebra.add(out, &p);
                }
            }
        }
        AlgebraElement { rows }
    }

    fn zip(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        f: impl Fn(&DivisionElement, &DivisionElement) -> DivisionElement,
    ) -> AlgebraElement {
        AlgebraElement {
            rows: x
                .rows
                .iter()
                .zip(&y.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(u, v)| f(u, v)).collect())
                .collect(),
        }
    }

    /// `ι` on a single entry.
    pub fn apply_base(&self, x: &DivisionElement) -> DivisionElement {
        match &self.base {
            BaseInvolution::Identity => x.clone(),
            BaseInvolution::FieldConjugation { image } => self
                .algebra
                .element(x.coords().iter().map(|c| c.substitute_generator(image)).collect())
                .expect("same shape"),
            BaseInvolution::QuaternionStandard => self.algebra.conjugate(x),
            BaseInvolution::QuaternionTwisted { s } => {
                let s_inv = self.algebra.inv(s).expect("validated invertible");
                let c = self.algebra.conjugate(x);
                self.algebra.mul(&self.algebra.mul(&s_inv, &c), s)
            }
        }
    }

    /// `ι(M)ᵀ`.
    fn star(&self, x: &AlgebraElement) -> AlgebraElement {
        let r = x.size();
        AlgebraElement {
            rows: (0..r)
                .map(|i| (0..r).map(|j| self.apply_base(&x.rows[j][i])).collect())
                .collect(),
        }
    }

    /// The Rosati involution `H⁻¹ ι(M)ᵀ H`.
    pub fn rosati_apply(&self, x: &AlgebraElement) -> AlgebraElement {
        self.mul(&self.mul(&self.gram_inv, &self.star(x)), &self.gram)
    }

    pub fn is_rosati_fixed(&self, x: &AlgebraElement) -> bool {
        self.rosati_apply(x) == *x
    }

    /// Gauss–Jordan inversion over the division algebra, using only left
    /// row operations. `None` if no invertible pivot can be found.
    fn inverse(&self, x: &AlgebraElement) -> Option<AlgebraElement> {
        let r = x.size();
        let alg = &self.algebra;
        let mut a = x.rows.clone();
        let mut inv = self.identity().rows;
        for col in 0..r {
            let piv = (col..r).find(|&row| alg.inv(&a[row][col]).is_ok())?;
            a.swap(piv, col);
            inv.swap(piv, col);
            let p_inv = alg.inv(&a[col][col]).ok()?;
            for c in 0..r {
                a[col][c] = alg.mul(&p_inv, &a[col][c]);
                inv[col][c] = alg.mul(&p_inv, &inv[col][c]);
            }
            for row in 0..r {
                if row == col || a[row][col].is_zero() {
                    continue;
                }
                let f = a[row][col].clone();
                for c in 0..r {
                    a[row][c] = alg.sub(&a[row][c], &alg.mul(&f, &a[col][c]));
                    inv[row][c] = alg.sub(&inv[row][c], &alg.mul(&f, &inv[col][c]));
                }
            }
        }
        Some(AlgebraElement { rows: inv })
    }

    /// `Trd_{R/Q}`: field trace of the sum of the diagonal reduced traces.
    pub fn reduced_trace(&self, x: &AlgebraElement) -> Rational {
        let mut acc = self.center().zero();
        for i in 0..x.size() {
            acc = &acc + &self.algebra.reduced_trace(&x.rows[i][i]);
        }
        acc.trace()
    }

    /// The Gram matrix `Trd_{R/Q}(u · r(v))` over the standard `Q`-basis of
    /// `R` and whether it is positive definite by leading principal minors.
    pub fn check_positivity(&self) -> PositivityCheck {
        let r = self.mult_r;
        let z = self.center();
        let powers: Vec<FieldElement> = (0..z.degree())
            .map(|k| z.generator().pow(k as u32))
            .collect();
        // entries of the Q-basis: position (i, j) and the entry value there
        let mut basis: Vec<(usize, usize, DivisionElement)> = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for d in self.algebra.basis() {
                    for p in &powers {
                        let coords = d.coords().iter().map(|c| c * p).collect();
                        basis.push((i, j, self.algebra.element(coords).expect("same shape")));
                    }
                }
            }
        }
        let images: Vec<AlgebraElement> = basis
            .iter()
            .map(|(i, j, e)| {
                let mut m = self.zero();
                m.rows[*i][*j] = e.clone();
                self.rosati_apply(&m)
            })
            .collect();
        // trace of E_ij(e) · W only sees e · W[j][i]
        let gram: Vec<Vec<Rational>> = basis
            .iter()
            .map(|(i, j, e)| {
                images
                    .iter()
                    .map(|w| {
                        self.algebra
                            .reduced_trace(&self.algebra.mul(e, &w.rows[*j][*i]))
                            .trace()
                    })
                    .collect()
            })
            .collect();
        let pivots = leading_pivots(&gram);
        let failed_minor = pivots
            .iter()
            .position(|p| crate::exactmath::rational::sign(p) <= 0)
            .map(|k| k + 1);
        PositivityCheck { gram, failed_minor }
    }

    /// Reduced characteristic polynomial of the pencil `N·1 + x` over the
    /// center, monic of degree `r m`. Quaternion entries are replaced by
    /// their left regular representations; the resulting determinant is the
    /// square of the reduced polynomial and its square root is returned.
    pub fn reduced_charpoly(&self, x: &AlgebraElement) -> Result<FieldPolynomial> {
        let z = self.center();
        let d = self.algebra.dim();
        let n = self.mult_r * d;
        let mut big: FieldMatrix = vec![vec![z.zero(); n]; n];
        for (i, row) in x.rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let block = self.algebra.left_regular(e);
                for (a, brow) in block.into_iter().enumerate() {
                    for (b, v) in brow.into_iter().enumerate() {
                        big[i * d + a][j * d + b] = v;
                    }
                }
            }
        }
        let det = pencil_determinant(z, &big);
        if !self.algebra.is_quaternion() {
            return Ok(det);
        }
        det.monic_sqrt().ok_or_else(|| Error::SquareExtractionFailed {
            component: self.name.clone(),
        })
    }

    /// `Nrd_{R/Q}(N·1 + x)` descended to `Q[N]`, of degree `t r m`.
    pub fn descended_charpoly(&self, x: &AlgebraElement) -> Result<RationalPolynomial> {
        Ok(crate::exactmath::conjugate_product_descend(&self.reduced_charpoly(x)?))
    }
}

fn identity_matrix(alg: &DivisionAlgebra, r: usize) -> AlgebraElement {
    AlgebraElement {
        rows: (0..r)
            .map(|i| (0..r).map(|j| if i == j { alg.one() } else { alg.zero() }).collect())
            .collect(),
    }
}

fn check_albert_type(name: &str, algebra: &DivisionAlgebra, ty: AlbertType) -> Result<()> {
    let center = algebra.center();
    let fail = |reason: &str| {
        Err(Error::TypeConstraintViolation {
            component: name.to_string(),
            reason: format!("declared type {ty:?}: {reason}"),
        })
    };
    match ty {
        AlbertType::I => {
            if algebra.is_quaternion() {
                return fail("type I requires the division algebra to be the center");
            }
            if !center.is_totally_real() {
                return fail("center is not totally real");
            }
        }
        AlbertType::II | AlbertType::III => {
            if !algebra.is_quaternion() {
                return fail("types II and III require a quaternion algebra");
            }
            if !center.is_totally_real() {
                return fail("center is not totally real");
            }
        }
        AlbertType::IV => {
            if center.degree() % 2 == 1 || center.has_real_roots() {
                return fail("center must have even degree and no real embeddings");
            }
        }
    }
    Ok(())
}

fn check_base(algebra: &DivisionAlgebra, base: &BaseInvolution) -> std::result::Result<(), String> {
    let center = algebra.center();
    match base {
        BaseInvolution::Identity => {
            if algebra.is_quaternion() {
                return Err("identity is not an involution of a quaternion algebra".into());
            }
        }
        BaseInvolution::FieldConjugation { image } => {
            if algebra.is_quaternion() {
                return Err("field conjugation applies to field components only".into());
            }
            if image.field() != center {
                return Err("conjugate of the generator must lie in the center".into());
            }
            let at_image = center
                .min_poly()
                .coeffs()
                .iter()
                .rev()
                .fold(center.zero(), |acc, c| &(&acc * image) + &center.from_rational(c.clone()));
            if !at_image.is_zero() {
                return Err("conjugate of the generator is not a root of the minimal polynomial".into());
            }
            if image.substitute_generator(image) != center.generator() {
                return Err("field conjugation does not square to the identity".into());
            }
        }
        BaseInvolution::QuaternionStandard => {
            if !algebra.is_quaternion() {
                return Err("quaternion involution on a field component".into());
            }
        }
        BaseInvolution::QuaternionTwisted { s } => {
            if !algebra.is_quaternion() {
                return Err("quaternion involution on a field component".into());
            }
            if s.coords().len() != 4 || s.coords().iter().any(|c| c.field() != center) {
                return Err("twist must be a quaternion over the center".into());
            }
            if !s.coords()[0].is_zero() {
                return Err("twist must be a pure quaternion".into());
            }
            if algebra.inv(s).is_err() {
                return Err("twist is not invertible".into());
            }
        }
    }
    Ok(())
}
