use super::LeibnizAlgebra;
use crate::ratlin::{sub_vectors, unit_vector, RatMatrix, Subspace};
use crate::report::ValidityReport;
use crate::{Error, Result};

/// Linear map between Leibniz algebras; `matrix` is target.dim × source.dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    source: LeibnizAlgebra,
    target: LeibnizAlgebra,
    matrix: RatMatrix,
}

impl AlgebraHom {
    pub fn new(source: LeibnizAlgebra, target: LeibnizAlgebra, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::shape(
                "homomorphism matrix",
                format!("{}x{}", target.dim(), source.dim()),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: &LeibnizAlgebra) -> Self {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: RatMatrix::identity(a.dim()),
        }
    }

    pub fn zero(source: &LeibnizAlgebra, target: &LeibnizAlgebra) -> Self {
        AlgebraHom {
            source: source.clone(),
            target: target.clone(),
            matrix: RatMatrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &LeibnizAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LeibnizAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[crate::ratlin::Rational]) -> Vec<crate::ratlin::Rational> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ first`
    pub fn compose_after(&self, first: &AlgebraHom) -> Result<AlgebraHom> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::shape("composition", self.source.dim(), first.target.dim()));
        }
        AlgebraHom::new(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        )
    }

    /// `f([e_i, e_j]) - [f(e_i), f(e_j)]` on every basis pair.
    pub fn check(&self) -> ValidityReport {
        let d = self.source.dim();
        let names = self.source.basis_names();
        let mut report = ValidityReport::new(format!(
            "homomorphism {} -> {}",
            self.source.name(),
            self.target.name()
        ));
        let images: Vec<_> = (0..d).map(|i| self.matrix.mul_vec(&unit_vector(d, i))).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.matrix.mul_vec(self.source.bracket_basis(i, j));
                let rhs = self.target.bracket(&images[i], &images[j]);
                report.record("f[x,y] = [fx,fy]", &[&names[i], &names[j]], sub_vectors(&lhs, &rhs));
            }
        }
        report
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.is_injective()
    }
}
