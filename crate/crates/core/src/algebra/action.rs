use num_traits::Zero;

use super::LeibnizAlgebra;
use crate::ratlin::{axpy, unit_vector, zero_vector, Rational};
use crate::report::ValidityReport;
use crate::{Error, Result};

/// A Leibniz action of `actor` (m) on `acted` (n): bilinear maps
/// `(m, n) ↦ ^m n` and `(n, m) ↦ n^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAction {
    actor: LeibnizAlgebra,
    acted: LeibnizAlgebra,
    /// `left[i * dn + j]` is `^{m_i} n_j`.
    left: Vec<Vec<Rational>>,
    /// `right[j * dm + i]` is `n_j^{m_i}`.
    right: Vec<Vec<Rational>>,
}

impl LeibnizAction {
    pub fn new(
        actor: LeibnizAlgebra,
        acted: LeibnizAlgebra,
        left: Vec<Vec<Rational>>,
        right: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let (dm, dn) = (actor.dim(), acted.dim());
        for (what, t) in [("left action table", &left), ("right action table", &right)] {
            if t.len() != dm * dn {
                return Err(Error::shape(what, dm * dn, t.len()));
            }
            if let Some(v) = t.iter().find(|v| v.len() != dn) {
                return Err(Error::shape(what, dn, v.len()));
            }
        }
        Ok(LeibnizAction {
            actor,
            acted,
            left,
            right,
        })
    }

    /// Builds both tables from closures on basis indices.
    pub fn from_fn(
        actor: LeibnizAlgebra,
        acted: LeibnizAlgebra,
        mut left: impl FnMut(usize, usize) -> Vec<Rational>,
        mut right: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let (dm, dn) = (actor.dim(), acted.dim());
        let mut l = Vec::with_capacity(dm * dn);
        for i in 0..dm {
            for j in 0..dn {
                l.push(left(i, j));
            }
        }
        let mut r = Vec::with_capacity(dm * dn);
        for j in 0..dn {
            for i in 0..dm {
                r.push(right(j, i));
            }
        }
        Self::new(actor, acted, l, r)
    }

    pub fn trivial(actor: LeibnizAlgebra, acted: LeibnizAlgebra) -> Self {
        let n = actor.dim() * acted.dim();
        let z = zero_vector(acted.dim());
        LeibnizAction {
            actor,
            acted,
            left: vec![z.clone(); n],
            right: vec![z; n],
        }
    }

    /// `q` acting on itself by brackets.
    pub fn adjoint(q: &LeibnizAlgebra) -> Self {
        Self::from_fn(
            q.clone(),
            q.clone(),
            |i, j| q.bracket_basis(i, j).to_vec(),
            |j, i| q.bracket_basis(j, i).to_vec(),
        )
        .expect("shapes agree")
    }

    pub fn actor(&self) -> &LeibnizAlgebra {
        &self.actor
    }

    pub fn acted(&self) -> &LeibnizAlgebra {
        &self.acted
    }

    /// `^{m_i} n_j`
    pub fn left_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.left[i * self.acted.dim() + j]
    }

    /// `n_j^{m_i}`
    pub fn right_basis(&self, j: usize, i: usize) -> &[Rational] {
        &self.right[j * self.actor.dim() + i]
    }

    /// `^m n`
    pub fn left_act(&self, m: &[Rational], n: &[Rational]) -> Vec<Rational> {
        let dn = self.acted.dim();
        let mut out = zero_vector(dn);
        for (i, mi) in m.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            for (j, nj) in n.iter().enumerate() {
                if !nj.is_zero() {
                    axpy(&mut out, &(mi * nj), self.left_basis(i, j));
                }
            }
        }
        out
    }

    /// `n^m`
    pub fn right_act(&self, n: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let dn = self.acted.dim();
        let mut out = zero_vector(dn);
        for (j, nj) in n.iter().enumerate() {
            if nj.is_zero() {
                continue;
            }
            for (i, mi) in m.iter().enumerate() {
                if !mi.is_zero() {
                    axpy(&mut out, &(mi * nj), self.right_basis(j, i));
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.left
            .iter()
            .chain(&self.right)
            .all(|v| v.iter().all(Zero::is_zero))
    }

    /// The six action axioms on every basis triple.
    pub fn check(&self) -> ValidityReport {
        let m = &self.actor;
        let n = &self.acted;
        let (dm, dn) = (m.dim(), n.dim());
        let mn = m.basis_names();
        let nn = n.basis_names();
        let mut report = ValidityReport::new(format!("action of {} on {}", m.name(), n.name()));
        let em = |i| unit_vector(dm, i);
        let en = |j| unit_vector(dn, j);

        for a in 0..dm {
            for b in 0..dm {
                let mab = m.bracket_basis(a, b);
                for j in 0..dn {
                    let nj = en(j);
                    // ^{[m,m']}n = ^m(^{m'}n) + (^m n)^{m'}
                    let lhs = self.left_act(mab, &nj);
                    let t1 = self.left_act(&em(a), self.left_basis(b, j));
                    let t2 = self.right_act(self.left_basis(a, j), &em(b));
                    report.record(
                        "^[m,m']n = ^m(^m'n) + (^mn)^m'",
                        &[&mn[a], &mn[b], &nn[j]],
                        diff3(&lhs, &t1, &t2, 1),
                    );
                    // n^{[m,m']} = (n^m)^{m'} - (n^{m'})^m
                    let lhs = self.right_act(&nj, mab);
                    let t1 = self.right_act(self.right_basis(j, a), &em(b));
                    let t2 = self.right_act(self.right_basis(j, b), &em(a));
                    report.record(
                        "n^[m,m'] = (n^m)^m' - (n^m')^m",
                        &[&nn[j], &mn[a], &mn[b]],
                        diff3(&lhs, &t1, &t2, -1),
                    );
                    // ^m(^{m'}n) = -^m(n^{m'})
                    let t1 = self.left_act(&em(a), self.left_basis(b, j));
                    let t2 = self.left_act(&em(a), self.right_basis(j, b));
                    let r: Vec<Rational> = t1.iter().zip(&t2).map(|(x, y)| x + y).collect();
                    report.record(
                        "^m(^m'n) = -^m(n^m')",
                        &[&mn[a], &mn[b], &nn[j]],
                        r,
                    );
                }
            }
        }

        for a in 0..dm {
            let ma = em(a);
            for j in 0..dn {
                for k in 0..dn {
                    let njk = n.bracket_basis(j, k);
                    // ^m[n,n'] = [^m n, n'] - [^m n', n]
                    let lhs = self.left_act(&ma, njk);
                    let t1 = n.bracket(self.left_basis(a, j), &en(k));
                    let t2 = n.bracket(self.left_basis(a, k), &en(j));
                    report.record(
                        "^m[n,n'] = [^mn,n'] - [^mn',n]",
                        &[&mn[a], &nn[j], &nn[k]],
                        diff3(&lhs, &t1, &t2, -1),
                    );
                    // [n,n']^m = [n^m, n'] + [n, n'^m]
                    let lhs = self.right_act(njk, &ma);
                    let t1 = n.bracket(self.right_basis(j, a), &en(k));
                    let t2 = n.bracket(&en(j), self.right_basis(k, a));
                    report.record(
                        "[n,n']^m = [n^m,n'] + [n,n'^m]",
                        &[&nn[j], &nn[k], &mn[a]],
                        diff3(&lhs, &t1, &t2, 1),
                    );
                    // [n, ^m n'] = -[n, n'^m]
                    let t1 = n.bracket(&en(j), self.left_basis(a, k));
                    let t2 = n.bracket(&en(j), self.right_basis(k, a));
                    let r: Vec<Rational> = t1.iter().zip(&t2).map(|(x, y)| x + y).collect();
                    report.record(
                        "[n,^mn'] = -[n,n'^m]",
                        &[&nn[j], &mn[a], &nn[k]],
                        r,
                    );
                }
            }
        }
        report
    }
}

/// `lhs - t1 - sign * t2`
fn diff3(lhs: &[Rational], t1: &[Rational], t2: &[Rational], sign: i64) -> Vec<Rational> {
    lhs.iter()
        .zip(t1)
        .zip(t2)
        .map(|((l, a), b)| if sign > 0 { l - a - b } else { l - a + b })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ratlin::vector;

    #[test]
    fn trivial_action_is_valid() {
        let act = LeibnizAction::trivial(fixtures::sl2(), fixtures::n2());
        assert!(act.check().is_valid());
        assert!(act.is_trivial());
    }

    #[test]
    fn adjoint_action_is_valid() {
        for q in [fixtures::n2(), fixtures::sl2(), fixtures::heisenberg()] {
            assert!(LeibnizAction::adjoint(&q).check().is_valid(), "{}", q.name());
        }
    }

    #[test]
    fn one_sided_n2_actions_are_still_valid() {
        let n2 = fixtures::n2();
        let left_only = LeibnizAction::from_fn(
            n2.clone(),
            n2.clone(),
            |i, j| n2.bracket_basis(i, j).to_vec(),
            |_, _| vector(&[0, 0]),
        )
        .unwrap();
        assert!(left_only.check().is_valid());
        let right_only = LeibnizAction::from_fn(
            n2.clone(),
            n2.clone(),
            |_, _| vector(&[0, 0]),
            |j, i| n2.bracket_basis(j, i).to_vec(),
        )
        .unwrap();
        assert!(right_only.check().is_valid());
    }

    #[test]
    fn n2_on_a_line_with_identity_left_action_is_invalid() {
        let n2 = fixtures::n2();
        let k = fixtures::k();
        let act = LeibnizAction::from_fn(
            n2,
            k,
            |i, _| vector(&[if i == 0 { 1 } else { 0 }]),
            |_, _| vector(&[0]),
        )
        .unwrap();
        let r = act.check();
        assert!(!r.is_valid());
        assert_eq!(r.violations[0].condition, "^[m,m']n = ^m(^m'n) + (^mn)^m'");
        assert_eq!(r.violations[0].at, vec!["e1", "e1", "e"]);
    }

    #[test]
    fn table_shape_is_checked() {
        let r = LeibnizAction::new(fixtures::n2(), fixtures::k(), vec![], vec![]);
        assert!(matches!(r, Err(Error::Shape { .. })));
    }
}
