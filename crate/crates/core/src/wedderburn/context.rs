use std::collections::HashSet;

use num_traits::Signed;

use super::component::{AlgebraElement, WedderburnComponent};
use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// The product of the simple factors together with `√(deg φ)`.
#[derive(Clone, Debug)]
pub struct VarietyContext {
    components: Vec<WedderburnComponent>,
    sqrt_deg_phi: Rational,
}

impl VarietyContext {
    pub fn new(components: Vec<WedderburnComponent>, sqrt_deg_phi: Rational) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a variety needs at least one factor".into()));
        }
        let mut seen = HashSet::new();
        for c in &components {
            if !seen.insert(c.name()) {
                return Err(Error::InvalidInput(format!("duplicate factor name `{}`", c.name())));
            }
        }
        if !sqrt_deg_phi.is_positive() {
            return Err(Error::InvalidInput("sqrt_deg_phi must be positive".into()));
        }
        Ok(Self {
            components,
            sqrt_deg_phi,
        })
    }

    pub fn components(&self) -> &[WedderburnComponent] {
        &self.components
    }

    pub fn component(&self, name: &str) -> Option<(usize, &WedderburnComponent)> {
        self.components.iter().enumerate().find(|(_, c)| c.name() == name)
    }

    pub fn sqrt_deg_phi(&self) -> &Rational {
        &self.sqrt_deg_phi
    }

    /// `g = Σ rᵢ gᵢ`.
    pub fn dimension(&self) -> u32 {
        self.components.iter().map(WedderburnComponent::dimension).sum()
    }

    pub fn identity(&self) -> SymmetricClass {
        SymmetricClass {
            blocks: self.components.iter().map(WedderburnComponent::identity).collect(),
        }
    }

    pub fn zero_class(&self) -> SymmetricClass {
        SymmetricClass {
            blocks: self.components.iter().map(WedderburnComponent::zero).collect(),
        }
    }

    pub fn scalar_class(&self, c: &Rational) -> SymmetricClass {
        SymmetricClass {
            blocks: self.components.iter().map(|comp| comp.scalar(c)).collect(),
        }
    }

    /// Validates a block tuple as a Rosati-fixed class of this context.
    pub fn class(&self, blocks: Vec<AlgebraElement>) -> Result<SymmetricClass> {
        let class = SymmetricClass { blocks };
        self.check_shape(&class)?;
        for (comp, block) in self.components.iter().zip(&class.blocks) {
            if !comp.is_rosati_fixed(block) {
                return Err(Error::NotRosatiFixed {
                    component: comp.name().to_string(),
                });
            }
        }
        Ok(class)
    }

    fn check_shape(&self, class: &SymmetricClass) -> Result<()> {
        if class.blocks.len() != self.components.len() {
            return Err(Error::ContextMismatch(format!(
                "class has {} blocks, context has {} factors",
                class.blocks.len(),
                self.components.len()
            )));
        }
        for (comp, block) in self.components.iter().zip(&class.blocks) {
            if !comp.belongs(block) {
                return Err(Error::ContextMismatch(format!(
                    "block does not belong to factor `{}`",
                    comp.name()
                )));
            }
        }
        Ok(())
    }

    /// `t·id + α`.
    pub fn shifted(&self, alpha: &SymmetricClass, t: &Rational) -> SymmetricClass {
        SymmetricClass {
            blocks: self
                .components
                .iter()
                .zip(&alpha.blocks)
                .map(|(c, b)| c.add(b, &c.scalar(t)))
                .collect(),
        }
    }
}

/// A Rosati-fixed element of the endomorphism algebra: one block per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricClass {
    blocks: Vec<AlgebraElement>,
}

impl SymmetricClass {
    pub fn blocks(&self) -> &[AlgebraElement] {
        &self.blocks
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ClassOp<'a> {
    Add(&'a SymmetricClass),
    Scale(&'a Rational),
}

/// Blockwise addition or rational scaling; the result is revalidated.
pub fn class_arithmetic(ctx: &VarietyContext, x: &SymmetricClass, op: ClassOp<'_>) -> Result<SymmetricClass> {
    ctx.check_shape(x)?;
    let blocks = match op {
        ClassOp::Add(y) => {
            ctx.check_shape(y)?;
            ctx.components
                .iter()
                .zip(x.blocks.iter().zip(&y.blocks))
                .map(|(c, (a, b))| c.add(a, b))
                .collect()
        }
        ClassOp::Scale(s) => ctx
            .components
            .iter()
            .zip(&x.blocks)
            .map(|(c, a)| c.scale(a, s))
            .collect(),
    };
    ctx.class(blocks)
}

impl VarietyContext {
    pub fn add(&self, x: &SymmetricClass, y: &SymmetricClass) -> Result<SymmetricClass> {
        class_arithmetic(self, x, ClassOp::Add(y))
    }

    pub fn scale(&self, x: &SymmetricClass, c: &Rational) -> Result<SymmetricClass> {
        class_arithmetic(self, x, ClassOp::Scale(c))
    }
}
