use serde::Serialize;

use super::{classify, Extension};
use crate::tensor::{exterior_square_data, same_structure, schur_multiplier};
use crate::xmod::{CrossedModule, SubPair};
use crate::{Error, Result};

/// `0 → M(n,q,δ) → (q∧n, q∧q, id∧δ) → (n,q,δ) → 0` for perfect `(n,q,δ)`.
pub fn stem_cover_of_perfect(xm: &CrossedModule) -> Result<Extension> {
    if !xm.predicates().is_perfect {
        return Err(Error::NotPerfect {
            xmod: xm.name().to_string(),
        });
    }
    let data = exterior_square_data(xm)?;
    let e = Extension::from_projection(format!("{} -> {}", data.crossed.name(), xm.name()), data.phi)?;
    if !classify(&e)?.stem_cover {
        return Err(Error::Consistency(format!(
            "exterior extension of perfect {} is not a stem cover",
            xm.name()
        )));
    }
    let total = e.total();
    let (ab, _) = total.abelianization()?;
    if ab.dims() != (0, 0) || !schur_multiplier(total)?.is_zero() {
        return Err(Error::Consistency(format!(
            "stem cover of {} has nonzero abelianization or multiplier",
            xm.name()
        )));
    }
    Ok(e)
}

/// Dimension-level comparison of two stem covers of the same crossed module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor47Report {
    pub derived: ((usize, usize), (usize, usize)),
    pub total_mod_center: ((usize, usize), (usize, usize)),
    pub center_mod_kernel: ((usize, usize), (usize, usize)),
}

impl Cor47Report {
    pub fn holds(&self) -> bool {
        self.derived.0 == self.derived.1
            && self.total_mod_center.0 == self.total_mod_center.1
            && self.center_mod_kernel.0 == self.center_mod_kernel.1
    }
}

fn sub(a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    (a.0 - b.0, a.1 - b.1)
}

fn invariants(e: &Extension) -> ((usize, usize), (usize, usize), (usize, usize)) {
    let t = e.total();
    let z: SubPair = t.center();
    (t.derived().dims(), sub(t.dims(), z.dims()), sub(z.dims(), e.kernel().dims()))
}

pub fn cor47_dimension_check(e1: &Extension, e2: &Extension) -> Result<Cor47Report> {
    let (q1, q2) = (e1.quotient(), e2.quotient());
    let same = same_structure(q1.top(), q2.top())
        && same_structure(q1.base(), q2.base())
        && q1.delta() == q2.delta()
        && q1.action() == q2.action();
    if !same {
        return Err(Error::QuotientMismatch);
    }
    for e in [e1, e2] {
        if !classify(e)?.stem_cover {
            return Err(Error::Invalid {
                what: e.name().to_string(),
                summary: "not a stem cover".into(),
            });
        }
    }
    let (d1, c1, k1) = invariants(e1);
    let (d2, c2, k2) = invariants(e2);
    Ok(Cor47Report {
        derived: (d1, d2),
        total_mod_center: (c1, c2),
        center_mod_kernel: (k1, k2),
    })
}
