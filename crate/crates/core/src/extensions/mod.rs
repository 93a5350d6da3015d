//! Extensions of crossed modules and their classification.
//!
//! An extension is a surjection `(φ₁, φ₂): (h, p, σ) → (n, q, δ)` with kernel
//! `(a, b, σ)`. It is central when the kernel lies in the center of the total
//! crossed module, stem when it also lies in the derived crossed module, and a
//! stem cover when in addition the kernel is isomorphic to `M(n, q, δ)`.
//!
//! The kernel of a central extension is abelian with trivial action, so its
//! isomorphism class is determined by `(dim a, dim b, rank σ|)`; stem covers
//! are recognized by comparing this triple with the multiplier's.

mod cover;
mod sequence;
mod theta;

use serde::Serialize;

use crate::tensor::SchurMultiplier;
use crate::xmod::{CrossedModule, SubPair, XModHom};
use crate::{Error, Result};

pub use cover::{cor47_dimension_check, stem_cover_of_perfect, Cor47Report};
pub use sequence::{lemma35_check, six_term_report, ExactnessReport, Lemma35Report, MapRecord, NodeRecord};
pub use theta::{prop41_crosscheck, section, theta_star, theta_star_with, Prop41Report, SectionPolicy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    name: String,
    total: CrossedModule,
    quotient: CrossedModule,
    proj: XModHom,
    kernel: SubPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub central: bool,
    pub stem_extension: bool,
    pub stem_cover: bool,
}

impl Extension {
    /// Validates a surjective projection and records its kernel.
    pub fn from_projection(name: impl Into<String>, proj: XModHom) -> Result<Self> {
        let name = name.into();
        proj.check().into_result("extension projection")?;
        if !proj.is_surjective() {
            return Err(Error::NotSurjective { what: name });
        }
        let total = proj.source().clone();
        let quotient = proj.target().clone();
        let kernel = proj.kernel();
        if !total.is_crossed_ideal(&kernel)? {
            return Err(Error::NotACrossedIdeal {
                xmod: total.name().to_string(),
            });
        }
        let (q, _) = total.quotient(&kernel)?;
        if q.dims() != quotient.dims() {
            return Err(Error::Consistency(format!(
                "{name}: quotient by the kernel has dimensions {:?}, expected {:?}",
                q.dims(),
                quotient.dims()
            )));
        }
        Ok(Extension {
            name,
            total,
            quotient,
            proj,
            kernel,
        })
    }

    /// `0 → ideal → total → total/ideal → 0`
    pub fn from_crossed_ideal(total: &CrossedModule, ideal: &SubPair) -> Result<Self> {
        let (_, proj) = total.quotient(ideal)?;
        Self::from_projection(format!("{}->{}/I", total.name(), total.name()), proj)
    }

    /// The extension with zero kernel.
    pub fn identity(xm: &CrossedModule) -> Self {
        Extension {
            name: format!("id {}", xm.name()),
            total: xm.clone(),
            quotient: xm.clone(),
            proj: XModHom::identity(xm),
            kernel: xm.zero_pair(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn total(&self) -> &CrossedModule {
        &self.total
    }

    pub fn quotient(&self) -> &CrossedModule {
        &self.quotient
    }

    pub fn proj(&self) -> &XModHom {
        &self.proj
    }

    pub fn kernel(&self) -> &SubPair {
        &self.kernel
    }

    /// The kernel as a crossed module, in RREF bases, with its inclusion.
    pub fn kernel_xmod(&self) -> Result<(CrossedModule, XModHom)> {
        let (k, incl) = self.total.restrict(&self.kernel)?;
        Ok((k.with_name(format!("ker {}", self.name)), incl))
    }

    pub fn is_central(&self) -> bool {
        self.kernel
            .is_within(&self.total.center())
            .expect("same ambient")
    }

    pub(crate) fn require_central(&self) -> Result<()> {
        if self.is_central() {
            Ok(())
        } else {
            Err(Error::NotCentral {
                total: self.total.name().to_string(),
            })
        }
    }
}

pub fn classify(e: &Extension) -> Result<Classification> {
    let central = e.is_central();
    let stem_extension = central && e.kernel.is_within(&e.total.derived())?;
    let stem_cover = stem_extension && {
        let m = crate::tensor::schur_multiplier(&e.quotient)?;
        is_multiplier_shaped(e, &m)?
    };
    Ok(Classification {
        central,
        stem_extension,
        stem_cover,
    })
}

pub(crate) fn is_multiplier_shaped(e: &Extension, m: &SchurMultiplier) -> Result<bool> {
    let (k, _) = e.kernel_xmod()?;
    Ok(crate::tensor::abelian_triple(&k) == m.triple())
}
