use super::*;
use crate::fixtures;
use crate::ratlin::{rat, vector};
use crate::xmod::XModHom;
use proptest::prelude::*;

fn trivial_pair(dm: usize, dn: usize) -> MutualActionPair {
    let m = LeibnizAlgebra::abelian("m", dm);
    let n = LeibnizAlgebra::abelian("n", dn);
    MutualActionPair::new(
        LeibnizAction::trivial(m.clone(), n.clone()),
        LeibnizAction::trivial(n, m),
    )
    .unwrap()
}

#[test]
fn abelian_tensor_has_full_dimension() {
    for (dm, dn) in [(1, 1), (2, 1), (2, 3)] {
        let t = tensor_product(&trivial_pair(dm, dn)).unwrap();
        assert!(t.relations().is_zero());
        assert_eq!(t.dim(), 2 * dm * dn);
        assert!(t.algebra().is_abelian());
        assert!(t.checks().all());
    }
}

#[test]
fn zero_factor_gives_zero_presentation() {
    let t = tensor_product(&trivial_pair(0, 3)).unwrap();
    assert_eq!(t.ambient_dim(), 0);
    assert_eq!(t.dim(), 0);
}

#[test]
fn n2_tensor_square() {
    let id = CrossedModule::identity(&fixtures::n2());
    let pair = MutualActionPair::from_crossed_modules(&id, &id).unwrap();
    let t = tensor_product(&pair).unwrap();
    assert!(t.checks().all());
    let w = exterior_product(&id, &id).unwrap();
    assert_eq!(w.dim(), 2);
    assert_eq!(w.algebra().basis_names(), &["e1*e1".to_string(), "e2*e1".to_string()]);
    let e1 = unit_vector(2, 0);
    let e2 = unit_vector(2, 1);
    assert!(w.class_mn(&e1, &e2).iter().all(Zero::is_zero));
    assert!(w.class_mn(&e2, &e2).iter().all(Zero::is_zero));
}

#[test]
fn square_subspace_examples() {
    let q = fixtures::n2();
    let id = CrossedModule::identity(&q);
    let sq = square_subspace(&id, &id).unwrap();
    assert_eq!(sq.dim(), 4);
    let s = Symbols { dm: 2, dn: 2 };
    for i in 0..2 {
        for j in 0..2 {
            let mut v = s.sym_mn(&unit_vector(2, i), &unit_vector(2, j));
            axpy(&mut v, &rat(-1), &s.sym_nm(&unit_vector(2, i), &unit_vector(2, j)));
            assert!(sq.contains(&v));
        }
    }

    let z = CrossedModule::zero_top(&q);
    let m = fixtures::abelian_xmod(1, 2, 0);
    let zero_maps = CrossedModule::module(
        &LeibnizAlgebra::abelian("a", 1),
        LeibnizAction::trivial(m.base().clone(), LeibnizAlgebra::abelian("a", 1)),
    )
    .unwrap();
    let sq = square_subspace(&m, &zero_maps).unwrap();
    assert!(sq.is_full());
    assert!(square_subspace(&z, &id).unwrap().is_zero());
    assert!(square_subspace(&id, &CrossedModule::identity(&fixtures::k())).is_err());
}

#[test]
fn exterior_square_examples() {
    let k = exterior_square_data(&CrossedModule::zero_top(&fixtures::k())).unwrap();
    assert_eq!(k.qq.dim(), 1);
    assert!(k.mu_q.matrix().is_zero());
    assert_eq!(k.qn.dim(), 0);

    let n = exterior_square_data(&CrossedModule::identity(&fixtures::n2())).unwrap();
    assert_eq!(n.qq.dim(), 2);
    assert_eq!(n.mu_q.matrix(), &RatMatrix::from_i64(2, 2, &[0, 0, 1, 0]));
    assert!(n.crossed.check().is_valid());

    let a = exterior_square_data(&fixtures::abelian_xmod(2, 2, 1)).unwrap();
    assert!(a.lambda_n.matrix().is_zero());
    assert!(a.mu_q.matrix().is_zero());
}

#[test]
fn multiplier_examples() {
    let m = schur_multiplier(&CrossedModule::zero_top(&fixtures::k())).unwrap();
    assert_eq!(m.dims(), (0, 1));
    let m = schur_multiplier(&CrossedModule::identity(&fixtures::n2())).unwrap();
    assert_eq!(m.dims(), (1, 1));
    assert_eq!(m.kernel.top, m.kernel.base);
    let m = schur_multiplier(&CrossedModule::identity(&fixtures::sl2())).unwrap();
    assert_eq!(m.dims(), (0, 0));
}

#[test]
fn abelian_multiplier_matches_direct_exterior() {
    for (t, b, r) in [(1, 1, 1), (2, 1, 1), (1, 2, 0), (2, 2, 2), (2, 3, 1)] {
        let xm = fixtures::abelian_xmod(t, b, r);
        let m = schur_multiplier(&xm).unwrap();
        let ba = exterior_product(&CrossedModule::identity(xm.base()), &xm).unwrap();
        let bb = exterior_product(&CrossedModule::identity(xm.base()), &CrossedModule::identity(xm.base())).unwrap();
        let d = induced_map(&ba, &bb, &RatMatrix::identity(b), xm.delta()).unwrap();
        assert_eq!(m.triple(), (ba.dim(), bb.dim(), d.rank()), "{}", xm.name());
    }
}

#[test]
fn fixture_exterior_squares_are_consistent() {
    for xm in fixtures::crossed_modules() {
        let m = schur_multiplier(&xm).unwrap();
        assert!(m.data.qn.recheck().all(), "{}", xm.name());
        assert!(m.data.qq.recheck().all(), "{}", xm.name());
        assert!(m.kernel.is_within(&m.data.crossed.center()).unwrap());
    }
}

#[test]
fn induced_exterior_hom_examples() {
    let id = CrossedModule::identity(&fixtures::n2());
    let h = induced_exterior_hom(&XModHom::identity(&id)).unwrap();
    assert!(h.map.is_injective());
    assert!(h.top_kernel_matches && h.base_kernel_matches);

    let (ab, p) = id.quotient(&id.derived()).unwrap();
    let h = induced_exterior_hom(&p).unwrap();
    assert_eq!(h.map.base_map().matrix().rows(), 1);
    assert_eq!(h.map.kernel().base.dim(), 1);
    assert!(h.top_kernel_matches && h.base_kernel_matches);
    assert_eq!(ab.dims(), (1, 1));

    let z = XModHom::zero(&id, &CrossedModule::zero());
    let h = induced_exterior_hom(&z).unwrap();
    assert!(h.map.top_map().matrix().is_zero());

    let not_onto = XModHom::zero(&CrossedModule::zero(), &id);
    assert!(matches!(induced_exterior_hom(&not_onto), Err(Error::NotSurjective { .. })));
}

#[test]
fn multiplier_map_examples() {
    let id = CrossedModule::identity(&fixtures::n2());
    let m = multiplier_functorial_map(&XModHom::identity(&id)).unwrap();
    assert!(m.map.is_injective() && m.map.is_surjective());

    let (lie, p) = id.liezation().unwrap();
    let m = multiplier_functorial_map(&p).unwrap();
    assert_eq!(m.target.dims(), (1, 1));
    assert_eq!(lie.dims(), (1, 1));
    assert_eq!(m.map.top_map().matrix(), &RatMatrix::from_i64(1, 1, &[0]));
    assert_eq!(m.map.base_map().matrix(), &RatMatrix::from_i64(1, 1, &[0]));

    let m = multiplier_functorial_map(&XModHom::zero(&id, &CrossedModule::zero())).unwrap();
    assert_eq!(m.target.dims(), (0, 0));
}

#[test]
fn bracket_on_ambient_lands_in_mn_block() {
    let id = CrossedModule::identity(&fixtures::n2());
    let w = exterior_product(&id, &id).unwrap();
    let s = w.symbols();
    let x = s.sym_mn(&vector(&[1, 0]), &vector(&[1, 0]));
    let b = w.bracket_on_ambient(&x, &x);
    assert_eq!(b, s.sym_mn(&vector(&[0, 1]), &vector(&[0, 1])));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_exterior_squares(d in 1usize..4, seed in any::<u64>()) {
        let q = fixtures::random_leibniz(d, seed);
        let data = exterior_square_data(&CrossedModule::identity(&q)).unwrap();
        prop_assert!(data.qq.recheck().all());
        prop_assert!(data.phi.check().is_valid());
        prop_assert_eq!(data.mu_q.image(), q.derived());
    }
}
