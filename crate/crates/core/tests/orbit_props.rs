use chevalley::lie_subspace::{centralizer, normalizer};
use chevalley::orbit::{
    cone_tangent, gauss_fiber_report, long_simple_root_point, minimal_orbit_point, sl2_group_type,
};
use chevalley::{ChevalleyAlgebra, GVector, SimpleType, Sl2Classification, Subspace};
use proptest::prelude::*;

fn any_small_type() -> impl Strategy<Value = SimpleType> {
    let all = SimpleType::all_up_to_rank(3);
    (0..all.len()).prop_map(move |i| all[i])
}

#[test]
fn both_minimal_orbit_representatives_agree() {
    for t in SimpleType::all_up_to_rank(8) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let top = gauss_fiber_report(&a, &minimal_orbit_point(&a)).unwrap();
        let simple = gauss_fiber_report(&a, &long_simple_root_point(&a)).unwrap();
        assert_eq!(top.dims(), simple.dims(), "{t}");
        assert!(top.nondegenerate);
        assert_eq!(top.tangent_dim, top.orbit_dim_in_pg + 1);
    }
}

#[test]
fn reports_are_invariant_under_the_chevalley_involution() {
    for t in SimpleType::all_up_to_rank(4) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        for alpha in a.root_system().roots() {
            let x = a.e(alpha).unwrap();
            let y = a.chevalley_involution(&x).unwrap();
            let rx = gauss_fiber_report(&a, &x).unwrap();
            let ry = gauss_fiber_report(&a, &y).unwrap();
            assert_eq!(rx.dims(), ry.dims(), "{t} {alpha}");
        }
    }
}

#[test]
fn nilpotent_points_lie_in_their_stabilizer_and_tangent() {
    for t in SimpleType::all_up_to_rank(4) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let rs = a.root_system();
        // sum of all simple root vectors: a regular nilpotent element
        let mut x = GVector::zero(a.dim());
        for s in rs.simple_roots() {
            x = x.add(&a.e(&s).unwrap()).unwrap();
        }
        let candidates = [x, minimal_orbit_point(&a)];
        for x in &candidates {
            assert!(a.is_nilpotent(x).unwrap());
            let r = gauss_fiber_report(&a, x).unwrap();
            assert!(r.line_stabilizer.contains(x.coords()).unwrap());
            assert!(r.cone_tangent.contains(x.coords()).unwrap());
        }
    }
}

#[test]
fn sl2_witness_matches_cartan_entries() {
    for t in SimpleType::all_up_to_rank(8) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let rs = a.root_system();
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            let v = sl2_group_type(&a, alpha).unwrap();
            let from_cartan = (0..t.rank()).any(|j| j != i && matches!(rs.cartan()[i][j], -1 | -3));
            assert_eq!(v.witness.is_some(), from_cartan, "{t} {alpha}");
            if v.witness.is_some() {
                assert_eq!(v.classification, Sl2Classification::ConfirmedSL2);
            }
        }
    }
}

#[test]
fn strings_partition_the_other_roots() {
    for t in SimpleType::all_up_to_rank(8) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let rs = a.root_system();
        for alpha in rs.roots() {
            let v = sl2_group_type(&a, alpha).unwrap();
            assert!(v.module_dims.iter().all(|d| (1..=4).contains(d)));
            let covered: usize = v.module_dims.iter().sum();
            assert_eq!(covered, rs.num_roots() - 2, "{t} {alpha}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn line_stabilizer_exceeds_centralizer_by_at_most_one(
        t in any_small_type(),
        coeffs in prop::collection::vec(-2i64..=2, 21),
    ) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let mut c = coeffs;
        c.resize(a.dim(), 0);
        let x = GVector::from_i64(&c);
        prop_assume!(!x.is_zero());
        let line = Subspace::span(&[&x], a.dim()).unwrap();
        let n = normalizer(&a, &line).unwrap();
        let cx = centralizer(&a, &line).unwrap();
        prop_assert!(n.contains_subspace(&cx).unwrap());
        prop_assert!(n.dim() - cx.dim() <= 1);

        let r = gauss_fiber_report(&a, &x).unwrap();
        prop_assert_eq!(&r.line_stabilizer, &n);
        prop_assert!(r.tangent_stabilizer.contains_subspace(&n).unwrap());
        prop_assert_eq!(&r.cone_tangent, &cone_tangent(&a, &x, None).unwrap());
        prop_assert_eq!(r.fiber_dim, r.tangent_stabilizer.dim() - n.dim());
    }
}
