use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use super::rational::Rational;
use super::LinalgError;

/// A subspace of `Q^ambient`, stored as the canonical RREF of a basis.
///
/// Two subspaces are equal iff their stored bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(
            ambient,
            (0..ambient).map(|i| super::unit_vector(ambient, i)),
        )
    }

    /// Span of arbitrary vectors; inserts one at a time into the RREF basis.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[Rational]>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    /// Adds `v` to the span. Returns true when the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if self.rows.len() == self.ambient {
            return false;
        }
        let mut r = self.residual(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r[p..].iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row[p..].iter_mut().zip(&r[p..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.ambient, self.rows.clone())
    }

    /// Matrix whose columns are the basis vectors (ambient × dim): the inclusion map.
    pub fn inclusion_matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(self.ambient, &self.rows)
    }

    /// `v` reduced against the basis; zero iff `v` lies in the subspace.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    fn check_same(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        Ok(s)
    }

    /// Zassenhaus: row-reduce `[A A; B 0]`; rows whose left half vanishes span `A ∩ B`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same(other)?;
        let n = self.ambient;
        let mut stacked = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.rows {
            let mut w = v.clone();
            w.extend(v.iter().cloned());
            stacked.push(w);
        }
        for v in &other.rows {
            let mut w = v.clone();
            w.extend(std::iter::repeat_n(Rational::zero(), n));
            stacked.push(w);
        }
        let (r, _) = RatMatrix::from_rows(2 * n, stacked).rref();
        let inter = r
            .row_vectors()
            .filter(|row| row[..n].iter().all(Zero::is_zero))
            .map(|row| row[n..].to_vec());
        Ok(Subspace::span(n, inter))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_same(other)?;
        Ok(self.rows.iter().all(|v| other.contains(v)))
    }

    /// Image under a linear map (`map` is target × ambient).
    pub fn image_under(&self, map: &RatMatrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        Subspace::span(map.rows(), self.rows.iter().map(|v| map.mul_vec(v)))
    }

    /// `{ v : map * v ∈ target }`.
    pub fn preimage(map: &RatMatrix, target: &Subspace) -> Subspace {
        assert_eq!(map.rows(), target.ambient);
        let q = super::QuotientMap::new(target.clone());
        q.projection().mul(map).kernel()
    }

    pub fn unit(ambient: usize, i: usize) -> Subspace {
        let mut v = vec![Rational::zero(); ambient];
        v[i] = Rational::one();
        Subspace::span(ambient, [v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{rat, vector};

    #[test]
    fn sum_and_intersection_examples() {
        let x = Subspace::span(2, [vector(&[1, 0])]);
        let y = Subspace::span(2, [vector(&[0, 1])]);
        assert!(x.sum(&y).unwrap().is_full());
        assert!(x.intersection(&y).unwrap().is_zero());
        let a = Subspace::span(2, [vector(&[1, 1]), vector(&[1, 0])]);
        let b = Subspace::span(2, [vector(&[1, 1])]);
        assert_eq!(a.intersection(&b).unwrap(), b);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(
            a.sum(&b),
            Err(LinalgError::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(a.intersection(&b).is_err());
        assert!(a.is_subspace_of(&b).is_err());
    }

    #[test]
    fn canonical_regardless_of_insertion_order() {
        let v1 = vector(&[1, 2, 3]);
        let v2 = vector(&[0, 1, 1]);
        let v3 = vector(&[1, 3, 4]);
        let a = Subspace::span(3, [&v1, &v2, &v3]);
        let b = Subspace::span(3, [&v3, &v2]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn coordinates_use_pivot_entries() {
        let s = Subspace::span(3, [vector(&[1, 0, 2]), vector(&[0, 1, 1])]);
        let v = vector(&[2, 3, 7]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(c, vec![rat(2), rat(3)]);
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&vector(&[0, 0, 1])).is_none());
    }
}
