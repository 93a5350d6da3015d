use super::*;
use crate::fixtures;
use crate::ratlin::vector;
use proptest::prelude::*;

fn n2_id() -> CrossedModule {
    CrossedModule::identity(&fixtures::n2())
}

fn e2_pair() -> SubPair {
    SubPair::new(Subspace::unit(2, 1), Subspace::unit(2, 1))
}

#[test]
fn check_examples() {
    let q = fixtures::heisenberg();
    let ideal = q.center();
    assert!(CrossedModule::ideal_inclusion(&q, &ideal).unwrap().check().is_valid());

    let m = LeibnizAlgebra::abelian("m", 2);
    let act = LeibnizAction::trivial(fixtures::sl2(), m.clone());
    assert!(CrossedModule::module(&m, act).unwrap().check().is_valid());

    assert!(n2_id().check().is_valid());
    let n2 = fixtures::n2();
    let bad = CrossedModule::new(
        "bad",
        n2.clone(),
        n2.clone(),
        RatMatrix::identity(2),
        LeibnizAction::trivial(n2.clone(), n2),
    )
    .unwrap();
    let r = bad.check();
    assert!(!r.is_valid());
    let peiffer: Vec<_> = r
        .violations
        .iter()
        .filter(|v| v.condition.starts_with("Peiffer"))
        .collect();
    assert!(!peiffer.is_empty());
    assert!(peiffer.iter().all(|v| v.at == vec!["e1", "e1"]));
}

#[test]
fn delta_shape_is_checked() {
    let n2 = fixtures::n2();
    let r = CrossedModule::new(
        "x",
        n2.clone(),
        n2.clone(),
        RatMatrix::identity(3),
        LeibnizAction::adjoint(&n2),
    );
    assert!(matches!(r, Err(Error::Shape { .. })));
}

#[test]
fn closure_examples() {
    let x = n2_id();
    assert!(x.crossed_ideal_closure(&x.zero_pair()).unwrap().is_zero());
    let seed = SubPair::new(Subspace::zero(2), Subspace::unit(2, 0));
    let c = x.crossed_ideal_closure(&seed).unwrap();
    assert_eq!(c, SubPair::new(Subspace::unit(2, 1), Subspace::full(2)));
    assert_eq!(x.crossed_ideal_closure(&x.full()).unwrap(), x.full());

    let a = LeibnizAlgebra::abelian("a", 2);
    let b = LeibnizAlgebra::abelian("b", 2);
    let delta = RatMatrix::from_i64(2, 2, &[1, 0, 0, 0]);
    let ab = CrossedModule::new("ab", a.clone(), b.clone(), delta, LeibnizAction::trivial(b, a)).unwrap();
    assert!(ab.check().is_valid());
    let seed = SubPair::new(Subspace::unit(2, 0), Subspace::zero(2));
    let c = ab.crossed_ideal_closure(&seed).unwrap();
    assert_eq!(c, SubPair::new(Subspace::unit(2, 0), Subspace::unit(2, 0)));
}

#[test]
fn commutator_examples() {
    let x = n2_id();
    let z = x.zero_pair();
    assert!(x.commutator(&z, &z).unwrap().is_zero());
    assert_eq!(x.derived(), e2_pair());
    let s = CrossedModule::identity(&fixtures::sl2());
    assert_eq!(s.derived(), s.full());
    let not_ideal = SubPair::new(Subspace::unit(2, 0), Subspace::zero(2));
    assert!(matches!(
        x.commutator(&not_ideal, &x.full()),
        Err(Error::NotACrossedIdeal { .. })
    ));
}

#[test]
fn center_examples() {
    let a = LeibnizAlgebra::abelian("a", 2);
    let ab = CrossedModule::new(
        "ab",
        a.clone(),
        a.clone(),
        RatMatrix::identity(2),
        LeibnizAction::trivial(a.clone(), a),
    )
    .unwrap();
    assert_eq!(ab.center(), ab.full());
    assert_eq!(n2_id().center(), e2_pair());
    assert!(CrossedModule::identity(&fixtures::sl2()).center().is_zero());
}

#[test]
fn abelianization_examples() {
    let (ab, p) = n2_id().abelianization().unwrap();
    assert_eq!(ab.dims(), (1, 1));
    assert!(ab.action().is_trivial());
    assert!(ab.predicates().is_abelian);
    assert!(p.check().is_valid());
    let (z, _) = CrossedModule::identity(&fixtures::sl2()).abelianization().unwrap();
    assert_eq!(z.dims(), (0, 0));
    let k = CrossedModule::identity(&fixtures::k());
    let (kk, pk) = k.abelianization().unwrap();
    assert_eq!(kk.dims(), (1, 1));
    assert!(pk.is_injective());
}

#[test]
fn liezation_examples() {
    let s = CrossedModule::identity(&fixtures::sl2());
    let (l, p) = s.liezation().unwrap();
    assert_eq!(l.dims(), (3, 3));
    assert_eq!(p.top_map().matrix(), &RatMatrix::identity(3));
    let (l, p) = n2_id().liezation().unwrap();
    assert_eq!(l.dims(), (1, 1));
    assert_eq!(p.kernel(), e2_pair());
    let a = LeibnizAlgebra::abelian("a", 2);
    let triv = CrossedModule::module(&a, LeibnizAction::trivial(a.clone(), a.clone())).unwrap();
    assert_eq!(triv.liezation().unwrap().0.dims(), (2, 2));
}

#[test]
fn predicate_examples() {
    let s = CrossedModule::identity(&fixtures::sl2()).predicates();
    assert!(s.is_perfect && !s.is_abelian);
    let k = CrossedModule::identity(&fixtures::k()).predicates();
    assert!(k.is_abelian && k.is_abelian_by_components);
    let n = n2_id().predicates();
    assert!(!n.is_perfect && !n.is_abelian);
}

#[test]
fn quotient_examples() {
    let x = n2_id();
    let (same, _) = x.quotient(&x.zero_pair()).unwrap();
    assert_eq!(same.dims(), (2, 2));
    let (ab, _) = x.quotient(&e2_pair()).unwrap();
    assert!(ab.predicates().is_abelian);
    let (z, _) = x.quotient(&x.full()).unwrap();
    assert_eq!(z.dims(), (0, 0));
    let bad = SubPair::new(Subspace::zero(2), Subspace::unit(2, 0));
    assert!(x.quotient(&bad).is_err());
}

#[test]
fn restriction_and_direct_sum() {
    let x = n2_id();
    let (z, incl) = x.restrict(&x.center()).unwrap();
    assert_eq!(z.dims(), (1, 1));
    assert!(z.check().is_valid());
    assert!(incl.check().is_valid());
    let s = x.direct_sum(&CrossedModule::zero_top(&fixtures::k()));
    assert!(s.check().is_valid());
    assert_eq!(s.dims(), (2, 3));
    assert_eq!(s.derived(), SubPair::new(Subspace::unit(2, 1), Subspace::unit(3, 1)));
}

#[test]
fn basis_change_gives_isomorphic_copy() {
    let x = n2_id();
    let p = RatMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
    let (y, iso) = x.change_basis(&p, &p).unwrap();
    assert!(y.check().is_valid());
    assert!(iso.check().is_valid());
    assert_eq!(y.derived().dims(), (1, 1));
    assert_eq!(y.derived().top, Subspace::span(2, [vector(&[1, 0])]));
}

#[test]
fn fixture_xmods_satisfy_invariants() {
    for x in fixtures::crossed_modules() {
        assert!(x.check().is_valid(), "{}", x.check());
        let c = x.center();
        let d = x.derived();
        assert!(x.is_crossed_ideal(&c).unwrap(), "{}", x.name());
        assert!(x.is_crossed_ideal(&d).unwrap(), "{}", x.name());
        let p = x.predicates();
        assert_eq!(p.is_abelian, p.is_abelian_by_components, "{}", x.name());
        let (ab, pa) = x.abelianization().unwrap();
        assert!(ab.predicates().is_abelian);
        assert!(pa.check().is_valid());
        let (lie, pl) = x.liezation().unwrap();
        assert!(lie.predicates().is_lie);
        assert!(pl.check().is_valid());
        // Peiffer: top of the derived pair is spanned by top brackets and actions.
        let (dn, dq) = x.dims();
        let mut s = Subspace::zero(dn);
        for i in 0..dn {
            for j in 0..dn {
                s.insert(x.top().bracket_basis(i, j));
            }
            for a in 0..dq {
                s.insert(x.action().left_basis(a, i));
                s.insert(x.action().right_basis(i, a));
            }
        }
        assert_eq!(d.top, s, "{}", x.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_identity_xmods(d in 1usize..4, seed in any::<u64>()) {
        let q = fixtures::random_leibniz(d, seed);
        let x = CrossedModule::identity(&q);
        prop_assert!(x.check().is_valid());
        let c = x.center();
        prop_assert_eq!(&c.top, &q.center());
        prop_assert!(x.is_crossed_ideal(&c).unwrap());
        let (ab, _) = x.abelianization().unwrap();
        prop_assert!(ab.predicates().is_abelian);
        let (lie, _) = x.liezation().unwrap();
        prop_assert!(lie.predicates().is_lie);
    }
}
