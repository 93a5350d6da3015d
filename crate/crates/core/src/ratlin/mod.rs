//! Exact dense linear algebra over the rationals.
//!
//! Every decision made higher up (ranks, kernels, memberships) reduces to the
//! row reductions in this module, so all of them are exact.

mod matrix;
mod rational;
mod subspace;

use num_traits::{One, Zero};
use thiserror::Error;

pub use matrix::RatMatrix;
pub use rational::{
    format_rational, one, parse_rational, rat, ratio, zero, ParseRationalError, Rational,
};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn zero_vector(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn vector(entries: &[i64]) -> Vec<Rational> {
    entries.iter().map(|&x| rat(x)).collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Projection onto `ambient / relations` and a section back.
///
/// The quotient basis is the set of non-pivot coordinates of the relation
/// subspace's RREF, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    relations: Subspace,
    free: Vec<usize>,
    projection: RatMatrix,
    section: RatMatrix,
}

impl QuotientMap {
    pub fn new(relations: Subspace) -> Self {
        let n = relations.ambient_dim();
        let mut is_pivot = vec![false; n];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut projection = RatMatrix::zeros(free.len(), n);
        for (k, &f) in free.iter().enumerate() {
            projection.set(k, f, Rational::one());
        }
        // e_p = (e_p - row) + row, and row ≡ 0, so e_p ≡ -(row restricted to free columns).
        for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() && c != p {
                    projection.set(slot[c], p, -x.clone());
                }
            }
        }
        let mut section = RatMatrix::zeros(n, free.len());
        for (k, &f) in free.iter().enumerate() {
            section.set(f, k, Rational::one());
        }
        QuotientMap {
            relations,
            free,
            projection,
            section,
        }
    }

    /// Builds the quotient of `Q^ambient` by `relations`.
    pub fn quotient(ambient: usize, relations: Subspace) -> Result<Self, LinalgError> {
        if relations.ambient_dim() != ambient {
            return Err(LinalgError::DimensionMismatch {
                left: ambient,
                right: relations.ambient_dim(),
            });
        }
        Ok(Self::new(relations))
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient coordinates that survive as the quotient basis.
    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// quotient-dim × ambient-dim
    pub fn projection(&self) -> &RatMatrix {
        &self.projection
    }

    /// ambient-dim × quotient-dim
    pub fn section(&self) -> &RatMatrix {
        &self.section
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[Rational]) -> Vec<Rational> {
        self.section.mul_vec(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quotient_examples() {
        let r = Subspace::span(2, [vector(&[1, 0])]);
        let q = QuotientMap::quotient(2, r).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.lift(&[rat(1)]), vector(&[0, 1]));

        let q0 = QuotientMap::new(Subspace::zero(3));
        assert_eq!(q0.projection(), &RatMatrix::identity(3));

        let qf = QuotientMap::new(Subspace::full(3));
        assert_eq!(qf.dim(), 0);

        assert!(QuotientMap::quotient(3, Subspace::zero(2)).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c)
                .prop_map(move |e| RatMatrix::from_i64(r, c, &e))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
            for v in m.kernel().basis() {
                prop_assert!(is_zero_vector(&m.mul_vec(v)));
            }
        }

        #[test]
        fn quotient_kills_relations_and_splits(m in small_matrix()) {
            let r = Subspace::span(m.cols(), m.row_vectors());
            let q = QuotientMap::new(r.clone());
            prop_assert_eq!(q.projection().mul(q.section()), RatMatrix::identity(q.dim()));
            for v in r.basis() {
                prop_assert!(is_zero_vector(&q.project(v)));
            }
            prop_assert_eq!(q.projection().kernel(), r);
        }

        #[test]
        fn rref_is_deterministic_and_preserves_row_space(m in small_matrix()) {
            let (a, pa) = m.rref();
            let (b, pb) = m.clone().rref();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&pa, &pb);
            prop_assert!(pa.windows(2).all(|w| w[0] < w[1]));
            let s1 = Subspace::span(m.cols(), m.row_vectors());
            let s2 = Subspace::span(m.cols(), a.row_vectors());
            prop_assert_eq!(s1.basis_matrix(), a);
            prop_assert_eq!(s1, s2);
        }
    }
}
