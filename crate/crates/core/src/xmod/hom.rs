use super::{CrossedModule, SubPair};
use crate::algebra::AlgebraHom;
use crate::ratlin::{sub_vectors, unit_vector, RatMatrix};
use crate::report::ValidityReport;
use crate::{Error, Result};

/// Homomorphism of crossed modules `(φ, ψ): (n, q, δ) → (n', q', δ')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModHom {
    source: CrossedModule,
    target: CrossedModule,
    top_map: AlgebraHom,
    base_map: AlgebraHom,
}

impl XModHom {
    pub fn new(
        source: CrossedModule,
        target: CrossedModule,
        top_map: AlgebraHom,
        base_map: AlgebraHom,
    ) -> Result<Self> {
        let (sn, sq) = source.dims();
        let (tn, tq) = target.dims();
        let tm = top_map.matrix();
        let bm = base_map.matrix();
        if (tm.rows(), tm.cols()) != (tn, sn) {
            return Err(Error::shape("top map", format!("{tn}x{sn}"), format!("{}x{}", tm.rows(), tm.cols())));
        }
        if (bm.rows(), bm.cols()) != (tq, sq) {
            return Err(Error::shape("base map", format!("{tq}x{sq}"), format!("{}x{}", bm.rows(), bm.cols())));
        }
        let top_map = AlgebraHom::new(source.top().clone(), target.top().clone(), tm.clone())?;
        let base_map = AlgebraHom::new(source.base().clone(), target.base().clone(), bm.clone())?;
        Ok(XModHom {
            source,
            target,
            top_map,
            base_map,
        })
    }

    pub fn from_matrices(
        source: CrossedModule,
        target: CrossedModule,
        top: RatMatrix,
        base: RatMatrix,
    ) -> Result<Self> {
        let t = AlgebraHom::new(source.top().clone(), target.top().clone(), top)?;
        let b = AlgebraHom::new(source.base().clone(), target.base().clone(), base)?;
        Self::new(source, target, t, b)
    }

    pub fn identity(xm: &CrossedModule) -> Self {
        XModHom {
            source: xm.clone(),
            target: xm.clone(),
            top_map: AlgebraHom::identity(xm.top()),
            base_map: AlgebraHom::identity(xm.base()),
        }
    }

    pub fn zero(source: &CrossedModule, target: &CrossedModule) -> Self {
        XModHom {
            source: source.clone(),
            target: target.clone(),
            top_map: AlgebraHom::zero(source.top(), target.top()),
            base_map: AlgebraHom::zero(source.base(), target.base()),
        }
    }

    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    pub fn top_map(&self) -> &AlgebraHom {
        &self.top_map
    }

    pub fn base_map(&self) -> &AlgebraHom {
        &self.base_map
    }

    /// `self ∘ first`
    pub fn compose_after(&self, first: &XModHom) -> Result<XModHom> {
        XModHom::new(
            first.source.clone(),
            self.target.clone(),
            self.top_map.compose_after(&first.top_map)?,
            self.base_map.compose_after(&first.base_map)?,
        )
    }

    /// Both components homomorphisms, `ψδ = δ'φ`, and equivariance.
    pub fn check(&self) -> ValidityReport {
        let (sn, sq) = self.source.dims();
        let mut report = ValidityReport::new(format!(
            "crossed module homomorphism {} -> {}",
            self.source.name(),
            self.target.name()
        ));
        report.merge(self.top_map.check());
        report.merge(self.base_map.check());
        let nn = self.source.top().basis_names();
        let qn = self.source.base().basis_names();
        let phi = self.top_map.matrix();
        let psi = self.base_map.matrix();
        for j in 0..sn {
            let e = unit_vector(sn, j);
            let lhs = psi.mul_vec(&self.source.delta().mul_vec(&e));
            let rhs = self.target.delta().mul_vec(&phi.mul_vec(&e));
            report.record("psi d = d' phi", &[&nn[j]], sub_vectors(&lhs, &rhs));
        }
        let src = self.source.action();
        let tgt = self.target.action();
        for a in 0..sq {
            let qa = unit_vector(sq, a);
            let pq = psi.mul_vec(&qa);
            for j in 0..sn {
                let nj = unit_vector(sn, j);
                let pn = phi.mul_vec(&nj);
                let lhs = phi.mul_vec(src.left_basis(a, j));
                let rhs = tgt.left_act(&pq, &pn);
                report.record("phi(^q n) = ^(psi q) phi n", &[&qn[a], &nn[j]], sub_vectors(&lhs, &rhs));
                let lhs = phi.mul_vec(src.right_basis(j, a));
                let rhs = tgt.right_act(&pn, &pq);
                report.record("phi(n^q) = (phi n)^(psi q)", &[&nn[j], &qn[a]], sub_vectors(&lhs, &rhs));
            }
        }
        report
    }

    pub fn is_surjective(&self) -> bool {
        self.top_map.is_surjective() && self.base_map.is_surjective()
    }

    pub fn is_injective(&self) -> bool {
        self.top_map.is_injective() && self.base_map.is_injective()
    }

    pub fn kernel(&self) -> SubPair {
        SubPair::new(self.top_map.kernel(), self.base_map.kernel())
    }

    pub fn image(&self) -> SubPair {
        SubPair::new(self.top_map.image(), self.base_map.image())
    }
}
