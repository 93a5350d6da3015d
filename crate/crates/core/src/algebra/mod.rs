//! Finite-dimensional Leibniz algebras given by structure constants.
//!
//! The bracket satisfies the (right) Leibniz identity
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.

mod action;
mod hom;

use num_traits::{One, Zero};

use crate::ratlin::{axpy, unit_vector, zero_vector, RatMatrix, Rational, Subspace};
use crate::report::ValidityReport;
use crate::{Error, Result};

pub use action::LeibnizAction;
pub use hom::AlgebraHom;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    basis: Vec<String>,
    /// `table[i * dim + j]` is `[e_i, e_j]` in coordinates.
    table: Vec<Vec<Rational>>,
}

impl LeibnizAlgebra {
    /// `brackets` lists nonzero products `(i, j, [e_i, e_j])`; the rest are zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    ) -> Result<Self> {
        let d = basis.len();
        let mut table = vec![zero_vector(d); d * d];
        for (i, j, v) in brackets {
            if i >= d || j >= d {
                return Err(Error::shape("bracket index", format!("< {d}"), format!("({i}, {j})")));
            }
            if v.len() != d {
                return Err(Error::shape("bracket value", d, v.len()));
            }
            table[i * d + j] = v;
        }
        Ok(LeibnizAlgebra {
            name: name.into(),
            basis,
            table,
        })
    }

    /// Builds from a dense `dim*dim` table of bracket values.
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let d = basis.len();
        if table.len() != d * d {
            return Err(Error::shape("structure table", d * d, table.len()));
        }
        if let Some(bad) = table.iter().find(|v| v.len() != d) {
            return Err(Error::shape("bracket value", d, bad.len()));
        }
        Ok(LeibnizAlgebra {
            name: name.into(),
            basis,
            table,
        })
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LeibnizAlgebra {
            name: name.into(),
            basis: default_basis("e", dim),
            table: vec![zero_vector(dim); dim * dim],
        }
    }

    pub fn zero() -> Self {
        Self::abelian("0", 0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `c[i][j][k]`
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[i * self.dim() + j][k]
    }

    /// `[e_i, e_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        assert_eq!(x.len(), d);
        assert_eq!(y.len(), d);
        let mut out = zero_vector(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), &self.table[i * d + j]);
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn left_multiplication(&self, x: &[Rational]) -> RatMatrix {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = (0..d).map(|j| self.bracket(x, &unit_vector(d, j))).collect();
        RatMatrix::from_columns(d, &cols)
    }

    /// Matrix of `y ↦ [y, x]`.
    pub fn right_multiplication(&self, x: &[Rational]) -> RatMatrix {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = (0..d).map(|j| self.bracket(&unit_vector(d, j), x)).collect();
        RatMatrix::from_columns(d, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Residual `[[x,y],z] - [[x,z],y] - [x,[y,z]]` on every basis triple.
    pub fn check_leibniz(&self) -> ValidityReport {
        let d = self.dim();
        let mut report = ValidityReport::new(format!("Leibniz identity in {}", self.name));
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let ei = unit_vector(d, i);
                    let lhs = self.bracket(&ei, self.bracket_basis(j, k));
                    let xy_z = self.bracket(self.bracket_basis(i, j), &unit_vector(d, k));
                    let xz_y = self.bracket(self.bracket_basis(i, k), &unit_vector(d, j));
                    let r: Vec<Rational> = xy_z
                        .iter()
                        .zip(&xz_y)
                        .zip(&lhs)
                        .map(|((a, b), c)| a - b - c)
                        .collect();
                    report.record(
                        "leibniz",
                        &[&self.basis[i], &self.basis[j], &self.basis[k]],
                        r,
                    );
                }
            }
        }
        report
    }

    pub fn is_lie(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            self.bracket_basis(i, i).iter().all(Zero::is_zero)
                && (0..d).all(|j| {
                    self.bracket_basis(i, j)
                        .iter()
                        .zip(self.bracket_basis(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    /// Span of `[x, y]` over basis vectors of `x_sub` and `y_sub`.
    pub fn span_brackets(&self, x_sub: &Subspace, y_sub: &Subspace) -> Result<Subspace> {
        self.check_ambient(x_sub)?;
        self.check_ambient(y_sub)?;
        let mut s = Subspace::zero(self.dim());
        for x in x_sub.basis() {
            for y in y_sub.basis() {
                s.insert(&self.bracket(x, y));
            }
        }
        Ok(s)
    }

    /// `[a, a]`
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.span_brackets(&full, &full).expect("same ambient")
    }

    /// Two-sided center `{ x : [x, a] = [a, x] = 0 }`.
    pub fn center(&self) -> Subspace {
        let d = self.dim();
        let mut rows = Vec::with_capacity(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.structure(i, j, k).clone()).collect());
                rows.push((0..d).map(|i| self.structure(j, i, k).clone()).collect());
            }
        }
        RatMatrix::from_rows(d, rows).kernel()
    }

    /// Smallest two-sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Result<Subspace> {
        self.check_ambient(seed)?;
        let d = self.dim();
        let mut s = seed.clone();
        let mut frontier: Vec<Vec<Rational>> = s.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for j in 0..d {
                let ej = unit_vector(d, j);
                for w in [self.bracket(&v, &ej), self.bracket(&ej, &v)] {
                    if s.insert(&w) {
                        frontier.push(w);
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn is_ideal(&self, sub: &Subspace) -> Result<bool> {
        Ok(&self.ideal_closure(sub)? == sub)
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> Result<bool> {
        self.check_ambient(sub)?;
        Ok(sub
            .basis()
            .iter()
            .all(|x| sub.basis().iter().all(|y| sub.contains(&self.bracket(x, y)))))
    }

    /// Quotient by a two-sided ideal, with the projection.
    ///
    /// The quotient basis is the complement of the ideal's pivot coordinates,
    /// and keeps those basis names.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, AlgebraHom)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal {
                algebra: self.name.clone(),
            });
        }
        let q = crate::ratlin::QuotientMap::new(ideal.clone());
        let free = q.free_coordinates();
        let basis: Vec<String> = free.iter().map(|&f| self.basis[f].clone()).collect();
        let mut table = Vec::with_capacity(free.len() * free.len());
        for &a in free {
            for &b in free {
                table.push(q.project(self.bracket_basis(a, b)));
            }
        }
        let quotient = LeibnizAlgebra::from_table(format!("{}/I", self.name), basis, table)?;
        let proj = AlgebraHom::new(self.clone(), quotient.clone(), q.projection().clone())?;
        Ok((quotient, proj))
    }

    /// Subalgebra spanned by `sub`, in its RREF basis, with the inclusion.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<(LeibnizAlgebra, AlgebraHom)> {
        if !self.is_subalgebra(sub)? {
            return Err(Error::NotASubalgebra {
                algebra: self.name.clone(),
            });
        }
        let basis: Vec<String> = sub
            .basis()
            .iter()
            .map(|v| combination_name(&self.basis, v))
            .collect();
        let mut table = Vec::with_capacity(sub.dim() * sub.dim());
        for x in sub.basis() {
            for y in sub.basis() {
                table.push(sub.coordinates(&self.bracket(x, y)).expect("closed"));
            }
        }
        let algebra = LeibnizAlgebra::from_table(format!("{}|sub", self.name), basis, table)?;
        let incl = AlgebraHom::new(algebra.clone(), self.clone(), sub.inclusion_matrix())?;
        Ok((algebra, incl))
    }

    /// Same algebra in the basis given by the columns of `p` (invertible).
    pub fn change_basis(&self, p: &RatMatrix) -> Result<LeibnizAlgebra> {
        let d = self.dim();
        if p.rows() != d || p.cols() != d {
            return Err(Error::shape("basis change", format!("{d}x{d}"), format!("{}x{}", p.rows(), p.cols())));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Consistency("basis change is singular".into()))?;
        let cols = p.columns();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                table.push(inv.mul_vec(&self.bracket(&cols[a], &cols[b])));
            }
        }
        LeibnizAlgebra::from_table(self.name.clone(), default_basis("f", d), table)
    }

    /// `a ⊕ b` with componentwise bracket; basis names are kept, deduplicated.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let (da, db) = (self.dim(), other.dim());
        let d = da + db;
        let mut table = vec![zero_vector(d); d * d];
        for i in 0..da {
            for j in 0..da {
                table[i * d + j][..da].clone_from_slice(self.bracket_basis(i, j));
            }
        }
        for i in 0..db {
            for j in 0..db {
                table[(da + i) * d + da + j][da..].clone_from_slice(other.bracket_basis(i, j));
            }
        }
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        LeibnizAlgebra {
            name: format!("{}+{}", self.name, other.name),
            basis: dedupe_names(basis),
            table,
        }
    }

    pub(crate) fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::shape("subspace ambient", self.dim(), s.ambient_dim()));
        }
        Ok(())
    }
}

pub fn default_basis(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

/// Renames repeated entries by appending `#2`, `#3`, ...
pub fn dedupe_names(names: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashMap::<String, usize>::new();
    let mut out = Vec::with_capacity(names.len());
    for n in names {
        let c = seen.entry(n.clone()).or_insert(0);
        *c += 1;
        if *c == 1 {
            out.push(n);
        } else {
            let mut k = *c;
            let mut candidate = format!("{n}#{k}");
            while names_contains(&out, &candidate) {
                k += 1;
                candidate = format!("{n}#{k}");
            }
            out.push(candidate);
        }
    }
    out
}

fn names_contains(names: &[String], n: &str) -> bool {
    names.iter().any(|m| m == n)
}

/// Readable name for a vector, e.g. `e1-2e3` or `e2`.
pub fn combination_name(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !abs.is_one() {
            out.push_str(&crate::ratlin::format_rational(&abs));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ratlin::{rat, vector};
    use proptest::prelude::*;

    #[test]
    fn leibniz_examples() {
        assert!(LeibnizAlgebra::abelian("a", 3).check_leibniz().is_valid());
        assert!(fixtures::n2().check_leibniz().is_valid());
        let bad = LeibnizAlgebra::new("bad", vec!["e".into()], [(0, 0, vector(&[1]))]).unwrap();
        let r = bad.check_leibniz();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].at, vec!["e", "e", "e"]);
        assert_eq!(r.violations[0].residual, vector(&[-1]));
    }

    #[test]
    fn lie_examples() {
        assert!(LeibnizAlgebra::abelian("a", 2).is_lie());
        assert!(!fixtures::n2().is_lie());
        assert!(fixtures::sl2().is_lie());
        assert!(fixtures::heisenberg().is_lie());
    }

    #[test]
    fn span_brackets_examples() {
        let a = LeibnizAlgebra::abelian("a", 2);
        assert!(a.derived().is_zero());
        assert_eq!(fixtures::n2().derived(), Subspace::unit(2, 1));
        assert!(fixtures::sl2().derived().is_full());
    }

    #[test]
    fn center_examples() {
        assert!(LeibnizAlgebra::abelian("a", 3).center().is_full());
        assert_eq!(fixtures::n2().center(), Subspace::unit(2, 1));
        assert!(fixtures::sl2().center().is_zero());
        assert_eq!(fixtures::heisenberg().center(), Subspace::unit(3, 2));
    }

    #[test]
    fn ideal_closure_examples() {
        let n2 = fixtures::n2();
        assert!(n2.ideal_closure(&Subspace::zero(2)).unwrap().is_zero());
        assert!(n2.ideal_closure(&Subspace::unit(2, 0)).unwrap().is_full());
        let a = LeibnizAlgebra::abelian("a", 3);
        let s = Subspace::span(3, [vector(&[1, 1, 0])]);
        assert_eq!(a.ideal_closure(&s).unwrap(), s);
    }

    #[test]
    fn quotient_examples() {
        let n2 = fixtures::n2();
        let (same, p) = n2.quotient(&Subspace::zero(2)).unwrap();
        assert_eq!(same.dim(), 2);
        assert_eq!(p.matrix(), &RatMatrix::identity(2));
        let (q, _) = n2.quotient(&Subspace::unit(2, 1)).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.is_abelian());
        let sl2 = fixtures::sl2();
        assert_eq!(sl2.quotient(&Subspace::full(3)).unwrap().0.dim(), 0);
        assert!(matches!(
            n2.quotient(&Subspace::unit(2, 0)),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn subalgebra_and_basis_change() {
        let h = fixtures::heisenberg();
        let (z, incl) = h.subalgebra(&h.center()).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(incl.check().is_valid());
        let p = RatMatrix::from_i64(2, 2, &[1, 1, 0, 2]);
        let m = fixtures::n2().change_basis(&p).unwrap();
        assert!(m.check_leibniz().is_valid());
        assert_eq!(m.derived().dim(), 1);
        assert_eq!(combination_name(h.basis_names(), &vector(&[1, 0, -2])), "x-2z");
    }

    #[test]
    fn direct_sum_brackets_componentwise() {
        let s = fixtures::n2().direct_sum(&fixtures::n2());
        assert!(s.check_leibniz().is_valid());
        assert_eq!(s.derived().dim(), 2);
        assert_eq!(s.basis_names(), &["e1", "e2", "e1#2", "e2#2"]);
        assert_eq!(s.bracket_basis(2, 2), &vector(&[0, 0, 0, 1])[..]);
    }

    fn random_algebra() -> impl Strategy<Value = LeibnizAlgebra> {
        (1usize..4, any::<u64>()).prop_map(|(d, seed)| fixtures::random_leibniz(d, seed))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn quotient_by_ideal_is_leibniz(a in random_algebra(), k in 0usize..4) {
            let seed = Subspace::unit(a.dim(), k % a.dim());
            let ideal = a.ideal_closure(&seed).unwrap();
            let (q, p) = a.quotient(&ideal).unwrap();
            prop_assert!(q.check_leibniz().is_valid());
            prop_assert!(p.check().is_valid());
        }

        #[test]
        fn derived_is_an_ideal(a in random_algebra()) {
            let d = a.derived();
            prop_assert_eq!(a.ideal_closure(&d).unwrap(), d);
        }

        #[test]
        fn center_annihilates_both_sides(a in random_algebra()) {
            let z = a.center();
            for x in z.basis() {
                for j in 0..a.dim() {
                    let e = unit_vector(a.dim(), j);
                    prop_assert!(crate::ratlin::is_zero_vector(&a.bracket(x, &e)));
                    prop_assert!(crate::ratlin::is_zero_vector(&a.bracket(&e, x)));
                }
            }
        }

        #[test]
        fn lie_adjoint_tables_are_antisymmetric(a in random_algebra()) {
            let act = LeibnizAction::adjoint(&a);
            prop_assert!(act.check().is_valid());
            if a.is_lie() {
                for i in 0..a.dim() {
                    for j in 0..a.dim() {
                        let l = act.left_basis(i, j);
                        let r = act.right_basis(j, i);
                        prop_assert!(l.iter().zip(r).all(|(x, y)| (x + y).is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn rational_entries_survive() {
        let a = LeibnizAlgebra::new(
            "half",
            default_basis("e", 2),
            [(0, 0, vec![rat(0), crate::ratlin::ratio(1, 2)])],
        )
        .unwrap();
        assert!(a.check_leibniz().is_valid());
        assert_eq!(a.center().dim(), 1);
    }
}
