//! Non-abelian tensor and exterior products of Leibniz algebras.
//!
//! `m ⋆ n` is presented on the symbol space spanned by `m_i∗n_j` (block MN)
//! and `n_j∗m_i` (block NM). Multilinearity is built into the symbol space, so
//! only the bracket and action relations become relation rows, instantiated
//! on basis tuples. Every relation is multilinear in its arguments, hence
//! basis tuples span all instances.
//!
//! The bracket of two symbols is `[x, y] = L(x) ∗ R(y)` in block MN, where
//! `L` reads off `m^n` (resp. `^n m`) from the left factor and `R` reads off
//! `^{m'}n'` (resp. `n'^{m'}`) from the right factor.

mod exterior;
mod multiplier;

use num_traits::Zero;

use crate::algebra::{dedupe_names, LeibnizAction, LeibnizAlgebra};
use crate::ratlin::{axpy, unit_vector, zero_vector, QuotientMap, RatMatrix, Rational, Subspace};
use crate::report::ValidityReport;
use crate::xmod::CrossedModule;
use crate::{Error, Result};

pub use exterior::{exterior_square_data, ExteriorSquareData};
pub use multiplier::{
    induced_exterior_hom, multiplier_functorial_map, schur_multiplier, InducedExteriorHom,
    MultiplierMap, SchurMultiplier,
};
pub(crate) use multiplier::abelian_triple;

/// Two algebras acting on each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutualActionPair {
    m: LeibnizAlgebra,
    n: LeibnizAlgebra,
    m_on_n: LeibnizAction,
    n_on_m: LeibnizAction,
}

impl MutualActionPair {
    pub fn new(m_on_n: LeibnizAction, n_on_m: LeibnizAction) -> Result<Self> {
        let m = m_on_n.actor().clone();
        let n = m_on_n.acted().clone();
        if n_on_m.actor().dim() != n.dim() || n_on_m.acted().dim() != m.dim() {
            return Err(Error::shape(
                "mutual actions",
                format!("{} on {}", n.dim(), m.dim()),
                format!("{} on {}", n_on_m.actor().dim(), n_on_m.acted().dim()),
            ));
        }
        Ok(MutualActionPair { m, n, m_on_n, n_on_m })
    }

    /// Actions induced through a common base: `^m n = ^{η m} n`, `^n m = ^{δ n} m`.
    pub fn from_crossed_modules(eta: &CrossedModule, delta: &CrossedModule) -> Result<Self> {
        if !same_structure(eta.base(), delta.base()) {
            return Err(Error::shape(
                "crossed module bases",
                eta.base().name(),
                delta.base().name(),
            ));
        }
        let m = eta.top();
        let n = delta.top();
        let em: Vec<_> = eta.delta().columns();
        let dn: Vec<_> = delta.delta().columns();
        let m_on_n = LeibnizAction::from_fn(
            m.clone(),
            n.clone(),
            |i, j| delta.action().left_act(&em[i], &unit_vector(n.dim(), j)),
            |j, i| delta.action().right_act(&unit_vector(n.dim(), j), &em[i]),
        )?;
        let n_on_m = LeibnizAction::from_fn(
            n.clone(),
            m.clone(),
            |j, i| eta.action().left_act(&dn[j], &unit_vector(m.dim(), i)),
            |i, j| eta.action().right_act(&unit_vector(m.dim(), i), &dn[j]),
        )?;
        Self::new(m_on_n, n_on_m)
    }

    pub fn m(&self) -> &LeibnizAlgebra {
        &self.m
    }

    pub fn n(&self) -> &LeibnizAlgebra {
        &self.n
    }

    pub fn m_on_n(&self) -> &LeibnizAction {
        &self.m_on_n
    }

    pub fn n_on_m(&self) -> &LeibnizAction {
        &self.n_on_m
    }

    pub fn check(&self) -> ValidityReport {
        let mut r = self.m_on_n.check();
        r.merge(self.n_on_m.check());
        r
    }

    /// `^m n`
    fn am_n(&self, m: &[Rational], n: &[Rational]) -> Vec<Rational> {
        self.m_on_n.left_act(m, n)
    }

    /// `n^m`
    fn n_am(&self, n: &[Rational], m: &[Rational]) -> Vec<Rational> {
        self.m_on_n.right_act(n, m)
    }

    /// `^n m`
    fn an_m(&self, n: &[Rational], m: &[Rational]) -> Vec<Rational> {
        self.n_on_m.left_act(n, m)
    }

    /// `m^n`
    fn m_an(&self, m: &[Rational], n: &[Rational]) -> Vec<Rational> {
        self.n_on_m.right_act(m, n)
    }
}

/// Equal dimensions and structure constants.
pub fn same_structure(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> bool {
    let d = a.dim();
    d == b.dim() && (0..d).all(|i| (0..d).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

/// Index layout of the symbol space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symbols {
    pub dm: usize,
    pub dn: usize,
}

impl Symbols {
    pub fn dim(&self) -> usize {
        2 * self.dm * self.dn
    }

    /// Index of `m_i ∗ n_j`.
    pub fn mn(&self, i: usize, j: usize) -> usize {
        i * self.dn + j
    }

    /// Index of `n_j ∗ m_i`.
    pub fn nm(&self, j: usize, i: usize) -> usize {
        self.dm * self.dn + j * self.dm + i
    }

    /// `acc += c · (m ∗ n)`
    pub fn add_mn(&self, acc: &mut [Rational], c: &Rational, m: &[Rational], n: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (i, mi) in m.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            let f = c * mi;
            for (j, nj) in n.iter().enumerate() {
                if !nj.is_zero() {
                    acc[self.mn(i, j)] += &f * nj;
                }
            }
        }
    }

    /// `acc += c · (n ∗ m)`
    pub fn add_nm(&self, acc: &mut [Rational], c: &Rational, n: &[Rational], m: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (j, nj) in n.iter().enumerate() {
            if nj.is_zero() {
                continue;
            }
            let f = c * nj;
            for (i, mi) in m.iter().enumerate() {
                if !mi.is_zero() {
                    acc[self.nm(j, i)] += &f * mi;
                }
            }
        }
    }

    pub fn sym_mn(&self, m: &[Rational], n: &[Rational]) -> Vec<Rational> {
        let mut v = zero_vector(self.dim());
        self.add_mn(&mut v, &Rational::from_integer(1.into()), m, n);
        v
    }

    pub fn sym_nm(&self, n: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let mut v = zero_vector(self.dim());
        self.add_nm(&mut v, &Rational::from_integer(1.into()), n, m);
        v
    }

    /// Decodes an index into `(is_mn, m index, n index)`.
    pub fn decode(&self, idx: usize) -> (bool, usize, usize) {
        let b = self.dm * self.dn;
        if idx < b {
            (true, idx / self.dn, idx % self.dn)
        } else {
            let r = idx - b;
            (false, r % self.dm, r / self.dm)
        }
    }

    pub fn names(&self, m: &LeibnizAlgebra, n: &LeibnizAlgebra) -> Vec<String> {
        (0..self.dim())
            .map(|idx| {
                let (is_mn, i, j) = self.decode(idx);
                let (mi, nj) = (&m.basis_names()[i], &n.basis_names()[j]);
                if is_mn {
                    format!("{mi}*{nj}")
                } else {
                    format!("{nj}*{mi}")
                }
            })
            .collect()
    }
}

/// Outcome of the structural checks run on a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PresentationChecks {
    pub bracket_descends: bool,
    pub representatives_consistent: bool,
    pub leibniz: bool,
}

impl PresentationChecks {
    pub fn all(&self) -> bool {
        self.bracket_descends && self.representatives_consistent && self.leibniz
    }
}

/// A Leibniz algebra presented as a quotient of a symbol space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pair: MutualActionPair,
    symbols: Symbols,
    relations: Subspace,
    /// dm × D: `m^n` from `m∗n`, `^n m` from `n∗m`.
    left_factor: RatMatrix,
    /// dn × D: `^{m'}n'` from `m'∗n'`, `n'^{m'}` from `n'∗m'`.
    right_factor: RatMatrix,
    quotient: QuotientMap,
    algebra: LeibnizAlgebra,
    checks: PresentationChecks,
}

impl QuotientPresentation {
    /// Builds the quotient; fails loudly if the bracket does not descend or
    /// the result is not a Leibniz algebra.
    pub fn new(pair: MutualActionPair, relations: Subspace, name: impl Into<String>) -> Result<Self> {
        let symbols = Symbols {
            dm: pair.m.dim(),
            dn: pair.n.dim(),
        };
        let d = symbols.dim();
        if relations.ambient_dim() != d {
            return Err(Error::shape("relation subspace", d, relations.ambient_dim()));
        }
        let mut left_factor = RatMatrix::zeros(symbols.dm, d);
        let mut right_factor = RatMatrix::zeros(symbols.dn, d);
        for idx in 0..d {
            let (is_mn, i, j) = symbols.decode(idx);
            let ei = unit_vector(symbols.dm, i);
            let fj = unit_vector(symbols.dn, j);
            let (l, r) = if is_mn {
                (pair.m_an(&ei, &fj), pair.am_n(&ei, &fj))
            } else {
                (pair.an_m(&fj, &ei), pair.n_am(&fj, &ei))
            };
            for (k, x) in l.into_iter().enumerate() {
                left_factor.set(k, idx, x);
            }
            for (k, x) in r.into_iter().enumerate() {
                right_factor.set(k, idx, x);
            }
        }
        let quotient = QuotientMap::new(relations.clone());
        let names: Vec<String> = {
            let all = symbols.names(&pair.m, &pair.n);
            dedupe_names(quotient.free_coordinates().iter().map(|&f| all[f].clone()).collect())
        };
        let mut pres = QuotientPresentation {
            pair,
            symbols,
            relations,
            left_factor,
            right_factor,
            quotient,
            algebra: LeibnizAlgebra::zero(),
            checks: PresentationChecks {
                bracket_descends: false,
                representatives_consistent: false,
                leibniz: false,
            },
        };
        let forms = pres.projected_bracket_forms();
        let q = pres.quotient.dim();
        let free = pres.quotient.free_coordinates().to_vec();
        let mut table = vec![zero_vector(q); q * q];
        for (c, form) in forms.iter().enumerate() {
            for (a, &fa) in free.iter().enumerate() {
                for (b, &fb) in free.iter().enumerate() {
                    table[a * q + b][c] = form.get(fa, fb).clone();
                }
            }
        }
        pres.algebra = LeibnizAlgebra::from_table(name, names, table)?;
        pres.checks = pres.recheck();
        if !pres.checks.bracket_descends {
            return Err(Error::IllDefined(format!(
                "bracket of {} does not preserve the relation subspace",
                pres.algebra.name()
            )));
        }
        if !pres.checks.representatives_consistent {
            return Err(Error::IllDefined(format!(
                "bracket representatives of {} disagree modulo relations",
                pres.algebra.name()
            )));
        }
        if !pres.checks.leibniz {
            return Err(Error::Consistency(format!(
                "{} fails the Leibniz identity: {}",
                pres.algebra.name(),
                pres.algebra.check_leibniz().summary()
            )));
        }
        Ok(pres)
    }

    /// For each quotient coordinate `c`, the D × D matrix `B_c[a][b]`
    /// = coordinate `c` of the class of `[e_a, e_b]`.
    fn projected_bracket_forms(&self) -> Vec<RatMatrix> {
        self.forms(&self.left_factor, &self.right_factor, true)
    }

    /// Same forms built from the alternative representatives, which land in block NM.
    fn alternative_bracket_forms(&self) -> Vec<RatMatrix> {
        let s = self.symbols;
        let d = s.dim();
        let mut l2 = RatMatrix::zeros(s.dn, d);
        let mut r2 = RatMatrix::zeros(s.dm, d);
        for idx in 0..d {
            let (is_mn, i, j) = s.decode(idx);
            let ei = unit_vector(s.dm, i);
            let fj = unit_vector(s.dn, j);
            let (l, r) = if is_mn {
                (self.pair.am_n(&ei, &fj), self.pair.m_an(&ei, &fj))
            } else {
                (self.pair.n_am(&fj, &ei), self.pair.an_m(&fj, &ei))
            };
            for (k, x) in l.into_iter().enumerate() {
                l2.set(k, idx, x);
            }
            for (k, x) in r.into_iter().enumerate() {
                r2.set(k, idx, x);
            }
        }
        self.forms(&l2, &r2, false)
    }

    fn forms(&self, left: &RatMatrix, right: &RatMatrix, mn_block: bool) -> Vec<RatMatrix> {
        let s = self.symbols;
        let p = self.quotient.projection();
        let lt = left.transpose();
        (0..self.quotient.dim())
            .map(|c| {
                let core = if mn_block {
                    RatMatrix::from_fn(s.dm, s.dn, |i, j| p.get(c, s.mn(i, j)).clone())
                } else {
                    RatMatrix::from_fn(s.dn, s.dm, |j, i| p.get(c, s.nm(j, i)).clone())
                };
                lt.mul(&core).mul(right)
            })
            .collect()
    }

    /// Re-runs the well-definedness, representative-consistency and Leibniz checks.
    pub fn recheck(&self) -> PresentationChecks {
        let forms = self.projected_bracket_forms();
        let descends = forms.iter().all(|b| {
            self.relations.basis().iter().all(|r| {
                b.mul_vec(r).iter().all(Zero::is_zero)
                    && b.transpose().mul_vec(r).iter().all(Zero::is_zero)
            })
        });
        let consistent = forms == self.alternative_bracket_forms();
        PresentationChecks {
            bracket_descends: descends,
            representatives_consistent: consistent,
            leibniz: self.algebra.check_leibniz().is_valid(),
        }
    }

    pub fn checks(&self) -> PresentationChecks {
        self.checks
    }

    pub fn pair(&self) -> &MutualActionPair {
        &self.pair
    }

    pub fn symbols(&self) -> Symbols {
        self.symbols
    }

    pub fn ambient_dim(&self) -> usize {
        self.symbols.dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn quotient_map(&self) -> &QuotientMap {
        &self.quotient
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Bracket of two ambient vectors (a block MN vector).
    pub fn bracket_on_ambient(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.symbols
            .sym_mn(&self.left_factor.mul_vec(x), &self.right_factor.mul_vec(y))
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.quotient.project(v)
    }

    pub fn lift(&self, v: &[Rational]) -> Vec<Rational> {
        self.quotient.lift(v)
    }

    /// Class of `m ∗ n`.
    pub fn class_mn(&self, m: &[Rational], n: &[Rational]) -> Vec<Rational> {
        self.project(&self.symbols.sym_mn(m, n))
    }

    /// Class of `n ∗ m`.
    pub fn class_nm(&self, n: &[Rational], m: &[Rational]) -> Vec<Rational> {
        self.project(&self.symbols.sym_nm(n, m))
    }

    /// Quotient matrix of an ambient linear map `v ↦ f(v)` given on symbols,
    /// after checking that it kills the relations (`target` × ambient).
    pub(crate) fn descend_to(&self, ambient_map: &RatMatrix, what: &str) -> Result<RatMatrix> {
        for r in self.relations.basis() {
            if !ambient_map.mul_vec(r).iter().all(Zero::is_zero) {
                return Err(Error::IllDefined(format!("{what} does not vanish on relations")));
            }
        }
        Ok(ambient_map.mul(self.quotient.section()))
    }

    /// Ambient endomorphism descended to the quotient, after checking it preserves relations.
    pub(crate) fn descend_endo(&self, ambient_map: &RatMatrix, what: &str) -> Result<RatMatrix> {
        for r in self.relations.basis() {
            if !self.relations.contains(&ambient_map.mul_vec(r)) {
                return Err(Error::IllDefined(format!("{what} does not preserve relations")));
            }
        }
        Ok(self.quotient.projection().mul(ambient_map).mul(self.quotient.section()))
    }
}

/// Bracket, action and mixed-product relation rows over all basis tuples.
pub fn tensor_relations(pair: &MutualActionPair) -> Subspace {
    let s = Symbols {
        dm: pair.m.dim(),
        dn: pair.n.dim(),
    };
    let (dm, dn) = (s.dm, s.dn);
    let one = Rational::from_integer(1.into());
    let neg = -one.clone();
    let em: Vec<_> = (0..dm).map(|i| unit_vector(dm, i)).collect();
    let en: Vec<_> = (0..dn).map(|j| unit_vector(dn, j)).collect();
    let mut r = Subspace::zero(s.dim());
    let mut push = |v: Vec<Rational>| {
        if !v.iter().all(Zero::is_zero) {
            r.insert(&v);
        }
    };
    for i in 0..dm {
        for j in 0..dn {
            for l in 0..dn {
                // m∗[n,n'] - m^n∗n' + m^{n'}∗n
                let mut v = s.sym_mn(&em[i], pair.n.bracket_basis(j, l));
                s.add_mn(&mut v, &neg, &pair.m_an(&em[i], &en[j]), &en[l]);
                s.add_mn(&mut v, &one, &pair.m_an(&em[i], &en[l]), &en[j]);
                push(v);
                // [n,n']∗m - ^n m∗n' + n∗m^{n'}
                let mut v = s.sym_nm(pair.n.bracket_basis(j, l), &em[i]);
                s.add_mn(&mut v, &neg, &pair.an_m(&en[j], &em[i]), &en[l]);
                s.add_nm(&mut v, &one, &en[j], &pair.m_an(&em[i], &en[l]));
                push(v);
                // n∗^{n'}m + n∗m^{n'}
                let mut v = s.sym_nm(&en[j], &pair.an_m(&en[l], &em[i]));
                s.add_nm(&mut v, &one, &en[j], &pair.m_an(&em[i], &en[l]));
                push(v);
            }
            for k in 0..dm {
                // n∗[m,m'] - n^m∗m' + n^{m'}∗m
                let mut v = s.sym_nm(&en[j], pair.m.bracket_basis(i, k));
                s.add_nm(&mut v, &neg, &pair.n_am(&en[j], &em[i]), &em[k]);
                s.add_nm(&mut v, &one, &pair.n_am(&en[j], &em[k]), &em[i]);
                push(v);
                // [m,m']∗n - ^m n∗m' + m∗n^{m'}
                let mut v = s.sym_mn(pair.m.bracket_basis(i, k), &en[j]);
                s.add_nm(&mut v, &neg, &pair.am_n(&em[i], &en[j]), &em[k]);
                s.add_mn(&mut v, &one, &em[i], &pair.n_am(&en[j], &em[k]));
                push(v);
                // m∗^{m'}n + m∗n^{m'}
                let mut v = s.sym_mn(&em[i], &pair.am_n(&em[k], &en[j]));
                s.add_mn(&mut v, &one, &em[i], &pair.n_am(&en[j], &em[k]));
                push(v);
            }
        }
    }
    // Mixed products: outer expressions of each chained equality agree.
    for i in 0..dm {
        for j in 0..dn {
            let m_n = pair.m_an(&em[i], &en[j]);
            let am_n = pair.am_n(&em[i], &en[j]);
            let an_m = pair.an_m(&en[j], &em[i]);
            let n_m = pair.n_am(&en[j], &em[i]);
            for k in 0..dm {
                for l in 0..dn {
                    let am2 = pair.am_n(&em[k], &en[l]);
                    let m2n = pair.m_an(&em[k], &en[l]);
                    let n2m = pair.n_am(&en[l], &em[k]);
                    let an2m = pair.an_m(&en[l], &em[k]);
                    // m^n∗^{m'}n' = ^m n∗m'^{n'}
                    let mut v = s.sym_mn(&m_n, &am2);
                    s.add_nm(&mut v, &neg, &am_n, &m2n);
                    push(v);
                    // ^n m∗n'^{m'} = n^m∗^{n'}m'
                    let mut v = s.sym_mn(&an_m, &n2m);
                    s.add_nm(&mut v, &neg, &n_m, &an2m);
                    push(v);
                    // m^n∗n'^{m'} = ^m n∗^{n'}m'
                    let mut v = s.sym_mn(&m_n, &n2m);
                    s.add_nm(&mut v, &neg, &am_n, &an2m);
                    push(v);
                    // ^n m∗^{m'}n' = n^m∗m'^{n'}
                    let mut v = s.sym_mn(&an_m, &am2);
                    s.add_nm(&mut v, &neg, &n_m, &m2n);
                    push(v);
                }
            }
        }
    }
    r
}

/// `m ⋆ n`
pub fn tensor_product(pair: &MutualActionPair) -> Result<QuotientPresentation> {
    pair.check().into_result("mutual actions")?;
    let relations = tensor_relations(pair);
    let name = format!("{}*{}", pair.m.name(), pair.n.name());
    QuotientPresentation::new(pair.clone(), relations, name)
}

/// Span of `m_a∗n_b - n_a∗m_b` over a basis `(m_a, n_a)` of the pullback `η(m) = δ(n)`.
pub fn square_subspace(eta: &CrossedModule, delta: &CrossedModule) -> Result<Subspace> {
    if !same_structure(eta.base(), delta.base()) {
        return Err(Error::shape("crossed module bases", eta.base().name(), delta.base().name()));
    }
    let dm = eta.top().dim();
    let dn = delta.top().dim();
    let s = Symbols { dm, dn };
    let stacked = RatMatrix::from_fn(eta.base().dim(), dm + dn, |r, c| {
        if c < dm {
            eta.delta().get(r, c).clone()
        } else {
            -delta.delta().get(r, c - dm).clone()
        }
    });
    let pullback = stacked.kernel();
    let parts: Vec<(Vec<Rational>, Vec<Rational>)> = pullback
        .basis()
        .iter()
        .map(|v| (v[..dm].to_vec(), v[dm..].to_vec()))
        .collect();
    let one = Rational::from_integer(1.into());
    let mut sq = Subspace::zero(s.dim());
    for (ma, na) in &parts {
        for (mb, nb) in &parts {
            let mut v = s.sym_mn(ma, nb);
            s.add_nm(&mut v, &-one.clone(), na, mb);
            if !v.iter().all(Zero::is_zero) {
                sq.insert(&v);
            }
        }
    }
    Ok(sq)
}

/// `m ∧ n = (m ⋆ n) / (m □ n)` for crossed modules `η: m → q`, `δ: n → q`.
pub fn exterior_product(eta: &CrossedModule, delta: &CrossedModule) -> Result<QuotientPresentation> {
    let pair = MutualActionPair::from_crossed_modules(eta, delta)?;
    pair.check().into_result("induced mutual actions")?;
    let relations = tensor_relations(&pair).sum(&square_subspace(eta, delta)?)?;
    let name = format!("{}^{}", pair.m.name(), pair.n.name());
    QuotientPresentation::new(pair, relations, name)
}

/// Quotient-level matrix of the symbol map `m∗n ↦ f_m(m)∗f_n(n)`, `n∗m ↦ f_n(n)∗f_m(m)`.
pub fn induced_map(
    src: &QuotientPresentation,
    tgt: &QuotientPresentation,
    f_m: &RatMatrix,
    f_n: &RatMatrix,
) -> Result<RatMatrix> {
    let (s, t) = (src.symbols, tgt.symbols);
    if (f_m.rows(), f_m.cols()) != (t.dm, s.dm) || (f_n.rows(), f_n.cols()) != (t.dn, s.dn) {
        return Err(Error::shape(
            "induced symbol map",
            format!("{}x{} and {}x{}", t.dm, s.dm, t.dn, s.dn),
            format!("{}x{} and {}x{}", f_m.rows(), f_m.cols(), f_n.rows(), f_n.cols()),
        ));
    }
    let fm_cols = f_m.columns();
    let fn_cols = f_n.columns();
    let cols: Vec<Vec<Rational>> = (0..s.dim())
        .map(|idx| {
            let (is_mn, i, j) = s.decode(idx);
            if is_mn {
                t.sym_mn(&fm_cols[i], &fn_cols[j])
            } else {
                t.sym_nm(&fn_cols[j], &fm_cols[i])
            }
        })
        .collect();
    let ambient = RatMatrix::from_columns(t.dim(), &cols);
    for r in src.relations.basis() {
        if !tgt.relations.contains(&ambient.mul_vec(r)) {
            return Err(Error::IllDefined(format!(
                "symbol map {} -> {} does not respect relations",
                src.algebra.name(),
                tgt.algebra.name()
            )));
        }
    }
    Ok(tgt.quotient.projection().mul(&ambient).mul(src.quotient.section()))
}

/// Ambient vector with `c` added at a single symbol; small helper for tests and callers.
pub fn symbol_vector(symbols: Symbols, idx: usize) -> Vec<Rational> {
    let mut v = zero_vector(symbols.dim());
    axpy(&mut v, &Rational::from_integer(1.into()), &unit_vector(symbols.dim(), idx));
    v
}

#[cfg(test)]
mod tests;
