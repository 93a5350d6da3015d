//! Leibniz crossed modules `δ: n → q` with an action of `q` on `n`.

mod hom;
mod subpair;

use num_traits::Zero;

use crate::algebra::{AlgebraHom, LeibnizAction, LeibnizAlgebra};
use crate::ratlin::{sub_vectors, unit_vector, RatMatrix, Rational, Subspace};
use crate::report::ValidityReport;
use crate::{Error, Result};

pub use hom::XModHom;
pub use subpair::SubPair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    name: String,
    top: LeibnizAlgebra,
    base: LeibnizAlgebra,
    delta: RatMatrix,
    action: LeibnizAction,
}

/// Structural flags of a crossed module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Predicates {
    pub is_perfect: bool,
    pub is_abelian: bool,
    /// Both algebras abelian and the action trivial.
    pub is_abelian_by_components: bool,
    pub is_lie: bool,
    pub is_finite_dimensional: bool,
}

impl CrossedModule {
    /// Assembles a crossed module; shapes are checked, axioms are not (see [`check`](Self::check)).
    pub fn new(
        name: impl Into<String>,
        top: LeibnizAlgebra,
        base: LeibnizAlgebra,
        delta: RatMatrix,
        action: LeibnizAction,
    ) -> Result<Self> {
        if delta.rows() != base.dim() || delta.cols() != top.dim() {
            return Err(Error::shape(
                "delta",
                format!("{}x{}", base.dim(), top.dim()),
                format!("{}x{}", delta.rows(), delta.cols()),
            ));
        }
        if action.actor().dim() != base.dim() || action.acted().dim() != top.dim() {
            return Err(Error::shape(
                "action",
                format!("{} on {}", base.dim(), top.dim()),
                format!("{} on {}", action.actor().dim(), action.acted().dim()),
            ));
        }
        let action = LeibnizAction::from_fn(
            base.clone(),
            top.clone(),
            |i, j| action.left_basis(i, j).to_vec(),
            |j, i| action.right_basis(j, i).to_vec(),
        )?;
        Ok(CrossedModule {
            name: name.into(),
            top,
            base,
            delta,
            action,
        })
    }

    /// `(q, q, id)` with the adjoint action.
    pub fn identity(q: &LeibnizAlgebra) -> Self {
        CrossedModule {
            name: format!("({0},{0},id)", q.name()),
            top: q.clone(),
            base: q.clone(),
            delta: RatMatrix::identity(q.dim()),
            action: LeibnizAction::adjoint(q),
        }
    }

    /// `(0, q, i)`
    pub fn zero_top(q: &LeibnizAlgebra) -> Self {
        let zero = LeibnizAlgebra::zero();
        CrossedModule {
            name: format!("(0,{},i)", q.name()),
            top: zero.clone(),
            base: q.clone(),
            delta: RatMatrix::zeros(q.dim(), 0),
            action: LeibnizAction::trivial(q.clone(), zero),
        }
    }

    pub fn zero() -> Self {
        let mut z = Self::zero_top(&LeibnizAlgebra::zero());
        z.name = "0".into();
        z
    }

    /// `(n, q, i)` for a two-sided ideal `n` of `q`, acting by brackets.
    pub fn ideal_inclusion(q: &LeibnizAlgebra, ideal: &Subspace) -> Result<Self> {
        if !q.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal {
                algebra: q.name().to_string(),
            });
        }
        let (n, incl) = q.subalgebra(ideal)?;
        let n = n.with_name(format!("{}_ideal", q.name()));
        let basis = ideal.basis();
        let coords = |v: Vec<Rational>| ideal.coordinates(&v).expect("ideal");
        let action = LeibnizAction::from_fn(
            q.clone(),
            n.clone(),
            |a, j| coords(q.bracket(&unit_vector(q.dim(), a), &basis[j])),
            |j, a| coords(q.bracket(&basis[j], &unit_vector(q.dim(), a))),
        )?;
        Self::new(
            format!("({},{},i)", n.name(), q.name()),
            n,
            q.clone(),
            incl.matrix().clone(),
            action,
        )
    }

    /// `(m, q, 0)` for an abelian `q`-module `m`.
    pub fn module(m: &LeibnizAlgebra, action: LeibnizAction) -> Result<Self> {
        let q = action.actor().clone();
        Self::new(
            format!("({},{},0)", m.name(), q.name()),
            m.clone(),
            q.clone(),
            RatMatrix::zeros(q.dim(), m.dim()),
            action,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn top(&self) -> &LeibnizAlgebra {
        &self.top
    }

    pub fn base(&self) -> &LeibnizAlgebra {
        &self.base
    }

    pub fn delta(&self) -> &RatMatrix {
        &self.delta
    }

    pub fn action(&self) -> &LeibnizAction {
        &self.action
    }

    pub fn delta_hom(&self) -> AlgebraHom {
        AlgebraHom::new(self.top.clone(), self.base.clone(), self.delta.clone()).expect("shape")
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.top.dim(), self.base.dim())
    }

    pub fn full(&self) -> SubPair {
        SubPair::new(Subspace::full(self.top.dim()), Subspace::full(self.base.dim()))
    }

    pub fn zero_pair(&self) -> SubPair {
        SubPair::new(Subspace::zero(self.top.dim()), Subspace::zero(self.base.dim()))
    }

    /// Action axioms, `δ` a homomorphism, equivariance and the Peiffer identities.
    pub fn check(&self) -> ValidityReport {
        let (dn, dq) = self.dims();
        let mut report = ValidityReport::new(format!("crossed module {}", self.name));
        report.merge(self.top.check_leibniz());
        report.merge(self.base.check_leibniz());
        report.merge(self.action.check());
        report.merge(self.delta_hom().check());
        let nn = self.top.basis_names();
        let qn = self.base.basis_names();
        let dels: Vec<Vec<Rational>> = self.delta.columns();
        for a in 0..dq {
            let qa = unit_vector(dq, a);
            for j in 0..dn {
                let lhs = self.delta.mul_vec(self.action.left_basis(a, j));
                let rhs = self.base.bracket(&qa, &dels[j]);
                report.record("equivariance d(^q n) = [q, dn]", &[&qn[a], &nn[j]], sub_vectors(&lhs, &rhs));
                let lhs = self.delta.mul_vec(self.action.right_basis(j, a));
                let rhs = self.base.bracket(&dels[j], &qa);
                report.record("equivariance d(n^q) = [dn, q]", &[&nn[j], &qn[a]], sub_vectors(&lhs, &rhs));
            }
        }
        for i in 0..dn {
            for j in 0..dn {
                let br = self.top.bracket_basis(i, j);
                let l = self.action.left_act(&dels[i], &unit_vector(dn, j));
                report.record("Peiffer ^(dn1) n2 = [n1,n2]", &[&nn[i], &nn[j]], sub_vectors(&l, br));
                let r = self.action.right_act(&unit_vector(dn, i), &dels[j]);
                report.record("Peiffer n1^(dn2) = [n1,n2]", &[&nn[i], &nn[j]], sub_vectors(&r, br));
            }
        }
        report
    }

    fn check_pair(&self, p: &SubPair) -> Result<()> {
        self.top.check_ambient(&p.top)?;
        self.base.check_ambient(&p.base)?;
        Ok(())
    }

    /// Least crossed ideal containing `seed`.
    pub fn crossed_ideal_closure(&self, seed: &SubPair) -> Result<SubPair> {
        self.check_pair(seed)?;
        let (dn, dq) = self.dims();
        let mut x = seed.top.clone();
        let mut y = seed.base.clone();
        loop {
            let before = (x.dim(), y.dim());
            for v in x.basis().to_vec() {
                y.insert(&self.delta.mul_vec(&v));
            }
            y = self.base.ideal_closure(&y)?;
            for g in y.basis() {
                for j in 0..dn {
                    let e = unit_vector(dn, j);
                    x.insert(&self.action.left_act(g, &e));
                    x.insert(&self.action.right_act(&e, g));
                }
            }
            let mut frontier = x.basis().to_vec();
            while let Some(v) = frontier.pop() {
                for a in 0..dq {
                    let e = unit_vector(dq, a);
                    for w in [self.action.left_act(&e, &v), self.action.right_act(&v, &e)] {
                        if x.insert(&w) {
                            frontier.push(w);
                        }
                    }
                }
            }
            if (x.dim(), y.dim()) == before {
                return Ok(SubPair::new(x, y));
            }
        }
    }

    pub fn is_crossed_ideal(&self, p: &SubPair) -> Result<bool> {
        Ok(&self.crossed_ideal_closure(p)? == p)
    }

    fn require_crossed_ideal(&self, p: &SubPair) -> Result<()> {
        if self.is_crossed_ideal(p)? {
            Ok(())
        } else {
            Err(Error::NotACrossedIdeal {
                xmod: self.name.clone(),
            })
        }
    }

    /// `[(s,h),(t,j)] = (⟨D_h(t), D_j(s)⟩, [h,j] + [j,h])`.
    pub fn commutator(&self, a: &SubPair, b: &SubPair) -> Result<SubPair> {
        self.require_crossed_ideal(a)?;
        self.require_crossed_ideal(b)?;
        let mut top = Subspace::zero(self.top.dim());
        for (acting, acted) in [(&a.base, &b.top), (&b.base, &a.top)] {
            for g in acting.basis() {
                for v in acted.basis() {
                    top.insert(&self.action.left_act(g, v));
                    top.insert(&self.action.right_act(v, g));
                }
            }
        }
        let base = self
            .base
            .span_brackets(&a.base, &b.base)?
            .sum(&self.base.span_brackets(&b.base, &a.base)?)?;
        let pair = SubPair::new(top, base);
        if !self.is_crossed_ideal(&pair)? {
            return Err(Error::NotClosed(format!(
                "commutator span in {} is not a crossed ideal",
                self.name
            )));
        }
        Ok(pair)
    }

    pub fn derived(&self) -> SubPair {
        let f = self.full();
        self.commutator(&f, &f).expect("derived crossed module is a crossed ideal")
    }

    /// `(n^q, st_q(n) ∩ Z(q))`
    pub fn center(&self) -> SubPair {
        let (dn, dq) = self.dims();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for a in 0..dq {
            for k in 0..dn {
                rows.push((0..dn).map(|j| self.action.left_basis(a, j)[k].clone()).collect());
                rows.push((0..dn).map(|j| self.action.right_basis(j, a)[k].clone()).collect());
            }
        }
        let top = RatMatrix::from_rows(dn, rows).kernel();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for j in 0..dn {
            for k in 0..dn {
                rows.push((0..dq).map(|a| self.action.left_basis(a, j)[k].clone()).collect());
                rows.push((0..dq).map(|a| self.action.right_basis(j, a)[k].clone()).collect());
            }
        }
        let st = RatMatrix::from_rows(dq, rows).kernel();
        let base = st.intersection(&self.base.center()).expect("same ambient");
        SubPair::new(top, base)
    }

    /// Quotient by a crossed ideal, with the projection.
    pub fn quotient(&self, ideal: &SubPair) -> Result<(CrossedModule, XModHom)> {
        self.require_crossed_ideal(ideal)?;
        let (top_q, p_top) = self.top.quotient(&ideal.top)?;
        let (base_q, p_base) = self.base.quotient(&ideal.base)?;
        let s_top = crate::ratlin::QuotientMap::new(ideal.top.clone());
        let s_base = crate::ratlin::QuotientMap::new(ideal.base.clone());
        let delta = p_base.matrix().mul(&self.delta).mul(s_top.section());
        let lift_t = s_top.section().columns();
        let lift_b = s_base.section().columns();
        let action = LeibnizAction::from_fn(
            base_q.clone(),
            top_q.clone(),
            |a, j| p_top.apply(&self.action.left_act(&lift_b[a], &lift_t[j])),
            |j, a| p_top.apply(&self.action.right_act(&lift_t[j], &lift_b[a])),
        )?;
        let q = CrossedModule::new(format!("{}/I", self.name), top_q, base_q, delta, action)?;
        q.check().into_result("quotient crossed module")?;
        let proj = XModHom::new(self.clone(), q.clone(), p_top, p_base)?;
        Ok((q, proj))
    }

    pub fn abelianization(&self) -> Result<(CrossedModule, XModHom)> {
        let (q, p) = self.quotient(&self.derived())?;
        Ok((q.with_name(format!("{}_ab", self.name)), p))
    }

    /// Quotient by the crossed ideal generated by squares and symmetrized actions.
    pub fn liezation(&self) -> Result<(CrossedModule, XModHom)> {
        let (dn, dq) = self.dims();
        let mut top = Subspace::zero(dn);
        for i in 0..dn {
            for j in i..dn {
                let s: Vec<Rational> = self
                    .top
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.top.bracket_basis(j, i))
                    .map(|(x, y)| x + y)
                    .collect();
                top.insert(&s);
            }
            for a in 0..dq {
                let s: Vec<Rational> = self
                    .action
                    .left_basis(a, i)
                    .iter()
                    .zip(self.action.right_basis(i, a))
                    .map(|(x, y)| x + y)
                    .collect();
                top.insert(&s);
            }
        }
        let mut base = Subspace::zero(dq);
        for i in 0..dq {
            for j in i..dq {
                let s: Vec<Rational> = self
                    .base
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.base.bracket_basis(j, i))
                    .map(|(x, y)| x + y)
                    .collect();
                base.insert(&s);
            }
        }
        let ideal = self.crossed_ideal_closure(&SubPair::new(top, base))?;
        let (q, p) = self.quotient(&ideal)?;
        if !q.top.is_lie() || !q.base.is_lie() {
            return Err(Error::Consistency("liezation has a non-Lie component".into()));
        }
        let (n2, q2) = q.dims();
        for a in 0..q2 {
            for j in 0..n2 {
                let l = q.action.left_basis(a, j);
                let r = q.action.right_basis(j, a);
                if !l.iter().zip(r).all(|(x, y)| (x + y).is_zero()) {
                    return Err(Error::Consistency("liezation action is not antisymmetric".into()));
                }
            }
        }
        Ok((q.with_name(format!("{}_Lie", self.name)), p))
    }

    pub fn predicates(&self) -> Predicates {
        let full = self.full();
        Predicates {
            is_perfect: self.derived() == full,
            is_abelian: self.center() == full,
            is_abelian_by_components: self.top.is_abelian()
                && self.base.is_abelian()
                && self.action.is_trivial(),
            is_lie: self.top.is_lie() && self.base.is_lie(),
            is_finite_dimensional: true,
        }
    }

    /// Sub-crossed module on `sub`, in RREF bases, with the inclusion.
    pub fn restrict(&self, sub: &SubPair) -> Result<(CrossedModule, XModHom)> {
        self.check_pair(sub)?;
        let (top, it) = self.top.subalgebra(&sub.top)?;
        let (base, ib) = self.base.subalgebra(&sub.base)?;
        let not_closed = || Error::NotClosed(format!("sub-pair of {} is not a crossed submodule", self.name));
        let mut delta_cols = Vec::with_capacity(top.dim());
        for x in sub.top.basis() {
            delta_cols.push(sub.base.coordinates(&self.delta.mul_vec(x)).ok_or_else(not_closed)?);
        }
        let delta = RatMatrix::from_columns(base.dim(), &delta_cols);
        let xs = sub.top.basis();
        let ys = sub.base.basis();
        let mut left = Vec::new();
        for y in ys {
            for x in xs {
                left.push(sub.top.coordinates(&self.action.left_act(y, x)).ok_or_else(not_closed)?);
            }
        }
        let mut right = Vec::new();
        for x in xs {
            for y in ys {
                right.push(sub.top.coordinates(&self.action.right_act(x, y)).ok_or_else(not_closed)?);
            }
        }
        let action = LeibnizAction::new(base.clone(), top.clone(), left, right)?;
        let xm = CrossedModule::new(format!("{}|sub", self.name), top, base, delta, action)?;
        let incl = XModHom::new(xm.clone(), self.clone(), it, ib)?;
        Ok((xm, incl))
    }

    /// Componentwise direct sum.
    pub fn direct_sum(&self, other: &CrossedModule) -> CrossedModule {
        let top = self.top.direct_sum(&other.top);
        let base = self.base.direct_sum(&other.base);
        let (n1, q1) = self.dims();
        let (n2, q2) = other.dims();
        let delta = RatMatrix::from_fn(q1 + q2, n1 + n2, |i, j| match (i < q1, j < n1) {
            (true, true) => self.delta.get(i, j).clone(),
            (false, false) => other.delta.get(i - q1, j - n1).clone(),
            _ => Rational::zero(),
        });
        let embed = |v: &[Rational], first: bool| -> Vec<Rational> {
            let mut out = crate::ratlin::zero_vector(n1 + n2);
            let off = if first { 0 } else { n1 };
            out[off..off + v.len()].clone_from_slice(v);
            out
        };
        let zero = crate::ratlin::zero_vector(n1 + n2);
        let action = LeibnizAction::from_fn(
            base.clone(),
            top.clone(),
            |a, j| match (a < q1, j < n1) {
                (true, true) => embed(self.action.left_basis(a, j), true),
                (false, false) => embed(other.action.left_basis(a - q1, j - n1), false),
                _ => zero.clone(),
            },
            |j, a| match (a < q1, j < n1) {
                (true, true) => embed(self.action.right_basis(j, a), true),
                (false, false) => embed(other.action.right_basis(j - n1, a - q1), false),
                _ => zero.clone(),
            },
        )
        .expect("shapes agree");
        CrossedModule {
            name: format!("{}+{}", self.name, other.name),
            top,
            base,
            delta,
            action,
        }
    }

    /// The same crossed module in new bases (columns of `p_top`, `p_base`),
    /// with the isomorphism from `self`.
    pub fn change_basis(&self, p_top: &RatMatrix, p_base: &RatMatrix) -> Result<(CrossedModule, XModHom)> {
        let top = self.top.change_basis(p_top)?;
        let base = self.base.change_basis(p_base)?;
        let it = p_top.inverse().expect("checked by change_basis");
        let ib = p_base.inverse().expect("checked by change_basis");
        let delta = ib.mul(&self.delta).mul(p_top);
        let ct = p_top.columns();
        let cb = p_base.columns();
        let action = LeibnizAction::from_fn(
            base.clone(),
            top.clone(),
            |a, j| it.mul_vec(&self.action.left_act(&cb[a], &ct[j])),
            |j, a| it.mul_vec(&self.action.right_act(&ct[j], &cb[a])),
        )?;
        let xm = CrossedModule::new(self.name.clone(), top.clone(), base.clone(), delta, action)?;
        let iso = XModHom::new(
            self.clone(),
            xm.clone(),
            AlgebraHom::new(self.top.clone(), top, it)?,
            AlgebraHom::new(self.base.clone(), base, ib)?,
        )?;
        Ok((xm, iso))
    }
}

#[cfg(test)]
mod tests;
