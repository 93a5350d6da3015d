//! Standard algebras, crossed modules and extensions used by tests, examples and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{default_basis, LeibnizAction, LeibnizAlgebra};
use crate::extensions::Extension;
use crate::ratlin::{rat, unit_vector, vector, RatMatrix, Rational, Subspace};
use crate::xmod::{CrossedModule, SubPair};

fn names(n: &[&str]) -> Vec<String> {
    n.iter().map(|s| s.to_string()).collect()
}

/// One-dimensional abelian algebra with basis `e`.
pub fn k() -> LeibnizAlgebra {
    LeibnizAlgebra::new("K", names(&["e"]), []).expect("valid")
}

pub fn abelian(dim: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::abelian(format!("A{dim}"), dim)
}

/// `[e1, e1] = e2`, all other brackets zero.
pub fn n2() -> LeibnizAlgebra {
    LeibnizAlgebra::new("N2", default_basis("e", 2), [(0, 0, vector(&[0, 1]))]).expect("valid")
}

/// `[x, y] = z = -[y, x]`.
pub fn heisenberg() -> LeibnizAlgebra {
    LeibnizAlgebra::new(
        "H3",
        names(&["x", "y", "z"]),
        [(0, 1, vector(&[0, 0, 1])), (1, 0, vector(&[0, 0, -1]))],
    )
    .expect("valid")
}

/// Basis `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> LeibnizAlgebra {
    LeibnizAlgebra::new(
        "sl2",
        names(&["e", "f", "h"]),
        [
            (0, 1, vector(&[0, 0, 1])),
            (1, 0, vector(&[0, 0, -1])),
            (2, 0, vector(&[2, 0, 0])),
            (0, 2, vector(&[-2, 0, 0])),
            (2, 1, vector(&[0, -2, 0])),
            (1, 2, vector(&[0, 2, 0])),
        ],
    )
    .expect("valid")
}

/// Three-dimensional non-Lie Leibniz algebra: `[x, x] = z`, `[y, x] = z`.
pub fn leibniz3() -> LeibnizAlgebra {
    LeibnizAlgebra::new(
        "L3",
        names(&["x", "y", "z"]),
        [(0, 0, vector(&[0, 0, 1])), (1, 0, vector(&[0, 0, 1]))],
    )
    .expect("valid")
}

/// A valid Leibniz algebra of dimension `dim`, reproducible from `seed`.
///
/// A sparse random integer table is repaired by zeroing entries involved in
/// violated Leibniz triples, then conjugated by a random integer basis change.
pub fn random_leibniz(dim: usize, seed: u64) -> LeibnizAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = dim;
    let mut table: Vec<Vec<Rational>> = (0..d * d)
        .map(|_| {
            (0..d)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        rat(rng.gen_range(-2..=2))
                    } else {
                        rat(0)
                    }
                })
                .collect()
        })
        .collect();
    loop {
        let a = LeibnizAlgebra::from_table("R", default_basis("e", d), table.clone()).expect("shape");
        let report = a.check_leibniz();
        let Some(v) = report.violations.first() else {
            break;
        };
        let idx = |s: &String| a.basis_names().iter().position(|n| n == s).expect("name");
        let (i, j, k) = (idx(&v.at[0]), idx(&v.at[1]), idx(&v.at[2]));
        let mut involved: Vec<(usize, usize)> = Vec::new();
        for pair in [(j, k), (i, j), (i, k)] {
            for c in 0..d {
                if !num_traits::Zero::is_zero(&table[pair.0 * d + pair.1][c]) {
                    involved.push((pair.0 * d + pair.1, c));
                }
            }
        }
        let (row, col) = involved[rng.gen_range(0..involved.len())];
        table[row][col] = rat(0);
    }
    let a = LeibnizAlgebra::from_table(format!("R{d}_{seed}"), default_basis("e", d), table).expect("shape");
    loop {
        let p = RatMatrix::from_fn(d, d, |_, _| rat(rng.gen_range(-2..=2)));
        if p.inverse().is_some() {
            return a
                .change_basis(&p)
                .expect("invertible")
                .with_name(format!("R{d}_{seed}"));
        }
    }
}

/// `count` pairwise distinct non-abelian random algebras of dimension 2 or 3.
pub fn random_corpus(count: usize, seed: u64) -> Vec<LeibnizAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<LeibnizAlgebra> = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(2..=3);
        let a = random_leibniz(d, rng.gen());
        if a.is_abelian() || out.iter().any(|b| b.dim() == a.dim() && same_table(b, &a)) {
            continue;
        }
        out.push(a);
    }
    out
}

fn same_table(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> bool {
    let d = a.dim();
    (0..d).all(|i| (0..d).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

/// The named fixture algebras.
pub fn algebras() -> Vec<LeibnizAlgebra> {
    vec![
        abelian(1),
        abelian(2),
        abelian(3),
        n2(),
        heisenberg(),
        sl2(),
        leibniz3(),
    ]
}

/// `(A, B, σ)` with abelian components, trivial action and `σ` of the given rank
/// (first `rank` basis vectors map to the first `rank` basis vectors).
pub fn abelian_xmod(top: usize, base: usize, rank: usize) -> CrossedModule {
    let a = LeibnizAlgebra::abelian("A", top);
    let b = LeibnizAlgebra::abelian("B", base).with_name("B");
    let sigma = RatMatrix::from_fn(base, top, |i, j| rat((i == j && i < rank) as i64));
    CrossedModule::new(
        format!("ab({top},{base},{rank})"),
        a.clone(),
        b.clone(),
        sigma,
        LeibnizAction::trivial(b, a),
    )
    .expect("shapes")
}

/// `(n, q, 0)` with a nontrivial action of N2 on a line: `^{e1} e = 0`, `e^{e1} = e`.
pub fn n2_module() -> CrossedModule {
    let m = k();
    let act = LeibnizAction::from_fn(
        n2(),
        m.clone(),
        |_, _| vector(&[0]),
        |_, i| vector(&[(i == 0) as i64]),
    )
    .expect("shape");
    CrossedModule::module(&m, act).expect("shape")
}

/// The corpus of fixture crossed modules.
pub fn crossed_modules() -> Vec<CrossedModule> {
    let mut out = vec![
        CrossedModule::zero_top(&k()),
        CrossedModule::zero_top(&n2()),
        CrossedModule::identity(&k()),
        CrossedModule::identity(&n2()),
        CrossedModule::identity(&heisenberg()),
        CrossedModule::identity(&sl2()),
        CrossedModule::identity(&leibniz3()),
        CrossedModule::zero_top(&heisenberg()),
        abelian_xmod(1, 1, 1),
        abelian_xmod(2, 1, 1),
        abelian_xmod(1, 2, 0),
    ];
    let h = heisenberg();
    out.push(CrossedModule::ideal_inclusion(&h, &h.center()).expect("center is an ideal"));
    let n = n2();
    out.push(CrossedModule::ideal_inclusion(&n, &n.derived()).expect("derived is an ideal"));
    out.push(n2_module());
    out
}

/// `(0, N2, i) → (0, K, i)` with kernel `(0, span{e2})`.
pub fn n2_over_k() -> Extension {
    let total = CrossedModule::zero_top(&n2());
    let ideal = SubPair::new(Subspace::zero(0), Subspace::unit(2, 1));
    Extension::from_crossed_ideal(&total, &ideal)
        .expect("central ideal")
        .with_name("(0,N2,i)->(0,K,i)")
}

/// `xm ⊕ (a, b, σ) → xm` projecting away an abelian summand.
pub fn split_extension(xm: &CrossedModule, summand: &CrossedModule) -> Extension {
    let total = xm.direct_sum(summand);
    let (n1, q1) = xm.dims();
    let (n2, q2) = summand.dims();
    let block = |off: usize, len: usize| Subspace::span(off + len, (off..off + len).map(|i| unit_vector(off + len, i)));
    let ideal = SubPair::new(block(n1, n2), block(q1, q2));
    Extension::from_crossed_ideal(&total, &ideal)
        .expect("abelian summand is a central crossed ideal")
        .with_name(format!("{} -> {}", total.name(), xm.name()))
}

/// Central extensions built from the fixture crossed modules: identities,
/// quotients by central crossed ideals, and split extensions.
pub fn central_extensions() -> Vec<Extension> {
    let mut out = vec![n2_over_k()];
    for xm in crossed_modules() {
        out.push(Extension::identity(&xm));
        let z = xm.center();
        let delta_z = Subspace::span(xm.base().dim(), z.top.basis().iter().map(|v| xm.delta().mul_vec(v)));
        let candidates = [
            ("Z", z.clone()),
            ("Zb", SubPair::new(Subspace::zero(z.top.ambient_dim()), z.base.clone())),
            ("Zt", SubPair::new(z.top.clone(), delta_z)),
        ];
        let mut seen: Vec<SubPair> = vec![xm.zero_pair()];
        for (tag, ideal) in candidates {
            if seen.contains(&ideal) || !xm.is_crossed_ideal(&ideal).unwrap_or(false) {
                continue;
            }
            seen.push(ideal.clone());
            if let Ok(e) = Extension::from_crossed_ideal(&xm, &ideal) {
                out.push(e.with_name(format!("{} -> {}/{tag}", xm.name(), xm.name())));
            }
        }
    }
    for xm in [
        CrossedModule::identity(&n2()),
        CrossedModule::identity(&sl2()),
        CrossedModule::zero_top(&k()),
    ] {
        out.push(split_extension(&xm, &abelian_xmod(1, 1, 1)));
        out.push(split_extension(&xm, &abelian_xmod(0, 1, 0)));
    }
    out
}
