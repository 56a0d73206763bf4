use chevalley::lie_subspace::{
    centralizer, is_subalgebra, is_t_stable, normalizer, random_t_stable_subspace,
    random_toral_subspace, root_set, t_stable_decompose,
};
use chevalley::linalg::rat;
use chevalley::{ChevalleyAlgebra, GVector, Rational, SimpleType, Subspace};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alg(name: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::for_type(name.parse::<SimpleType>().unwrap()).unwrap()
}

fn small_types() -> Vec<SimpleType> {
    SimpleType::all_up_to_rank(3)
}

fn any_small_type() -> impl Strategy<Value = SimpleType> {
    let all = small_types();
    (0..all.len()).prop_map(move |i| all[i])
}

fn random_vector(alg: &ChevalleyAlgebra, coeffs: &[i64]) -> GVector {
    let mut c = coeffs.to_vec();
    c.resize(alg.dim(), 0);
    GVector::from_i64(&c)
}

#[test]
fn structure_constants_are_chevalley() {
    for t in SimpleType::all_up_to_rank(8) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let rs = a.root_system();
        for alpha in rs.roots() {
            for beta in rs.roots() {
                if beta == alpha || *beta == -alpha {
                    continue;
                }
                let n = a.structure_constant(alpha, beta).unwrap();
                assert_eq!(n, -a.structure_constant(beta, alpha).unwrap());
                if rs.is_root(&alpha.add(beta)) {
                    let (p, _) = rs.root_string(beta, alpha).unwrap();
                    assert_eq!(n.unsigned_abs() as usize, p + 1, "{t} {alpha} {beta}");
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }
}

#[test]
fn root_vectors_bracket_to_coroots() {
    for t in small_types() {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        for alpha in a.root_system().roots() {
            let x = a
                .bracket(&a.e(alpha).unwrap(), &a.e(&-alpha).unwrap())
                .unwrap();
            assert_eq!(x, a.coroot_vector(alpha).unwrap());
            // [h_α, e_α] = 2 e_α
            let y = a.bracket(&x, &a.e(alpha).unwrap()).unwrap();
            assert_eq!(y, a.e(alpha).unwrap().scale(&rat(2)));
        }
    }
}

#[test]
fn killing_form_orthogonality() {
    for name in ["A2", "B2", "G2", "A3"] {
        let a = alg(name);
        let basis: Vec<GVector> = (0..a.dim()).map(|k| a.basis_vector(k)).collect();
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let k = a.killing(u, v).unwrap();
                let paired = match (a.coordinate_root(i), a.coordinate_root(j)) {
                    (Some(x), Some(y)) => *y == -x,
                    (None, None) => true,
                    _ => false,
                };
                if !paired {
                    assert_eq!(k, rat(0), "{name} {i} {j}");
                } else if i >= a.rank() {
                    assert_ne!(k, rat(0));
                }
            }
        }
    }
}

#[test]
fn chevalley_involution_is_an_automorphism() {
    for name in ["A2", "B2", "G2", "B3", "C3"] {
        let a = alg(name);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let u = a.basis_vector(i);
                let v = a.basis_vector(j);
                let lhs = a.chevalley_involution(&a.bracket(&u, &v).unwrap()).unwrap();
                let rhs = a
                    .bracket(
                        &a.chevalley_involution(&u).unwrap(),
                        &a.chevalley_involution(&v).unwrap(),
                    )
                    .unwrap();
                assert_eq!(lhs, rhs, "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn nilpotency_of_root_vectors_and_semisimplicity_of_coroots() {
    for t in small_types() {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        for alpha in a.root_system().roots() {
            assert!(a.is_nilpotent(&a.e(alpha).unwrap()).unwrap());
            assert!(!a.is_nilpotent(&a.coroot_vector(alpha).unwrap()).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_on_random_elements(
        t in any_small_type(),
        u in prop::collection::vec(-2i64..=2, 21),
        v in prop::collection::vec(-2i64..=2, 21),
        w in prop::collection::vec(-2i64..=2, 21),
    ) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let (u, v, w) = (random_vector(&a, &u), random_vector(&a, &v), random_vector(&a, &w));
        let j1 = a.bracket(&a.bracket(&u, &v).unwrap(), &w).unwrap();
        let j2 = a.bracket(&a.bracket(&v, &w).unwrap(), &u).unwrap();
        let j3 = a.bracket(&a.bracket(&w, &u).unwrap(), &v).unwrap();
        prop_assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero());
    }

    #[test]
    fn centralizer_inside_normalizer(t in any_small_type(), seed in any::<u64>(), k in 1usize..=3) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vectors: Vec<Vec<Rational>> = (0..k)
            .map(|_| {
                let c: Vec<i64> = (0..a.dim())
                    .map(|_| if rng.random_bool(0.3) { rng.random_range(-2..=2) } else { 0 })
                    .collect();
                GVector::from_i64(&c).into_coords()
            })
            .collect();
        let w = Subspace::span(&vectors, a.dim()).unwrap();
        let c = centralizer(&a, &w).unwrap();
        let n = normalizer(&a, &w).unwrap();
        prop_assert!(n.contains_subspace(&c).unwrap());
        prop_assert!(is_subalgebra(&a, &c).unwrap());
        prop_assert!(is_subalgebra(&a, &n).unwrap());
        // ad(u) preserves W for every u in the normalizer
        for u in n.basis_vectors() {
            let ad = a.ad_matrix(&GVector::new(u.to_vec())).unwrap();
            for x in w.basis_vectors() {
                prop_assert!(w.contains(&ad.mul_vec(x).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn toral_normalizer_is_centralizer(t in any_small_type(), seed in any::<u64>()) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_toral_subspace(&a, &mut rng);
        prop_assert!(a.cartan_subalgebra().contains_subspace(&w).unwrap());
        prop_assert_eq!(normalizer(&a, &w).unwrap(), centralizer(&a, &w).unwrap());
    }

    #[test]
    fn t_stable_round_trip(t in any_small_type(), seed in any::<u64>()) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_t_stable_subspace(&a, &mut rng);
        prop_assert!(is_t_stable(&a, &w).unwrap());
        let d = t_stable_decompose(&a, &w).unwrap();
        prop_assert_eq!(d.dim(), w.dim());
        prop_assert_eq!(&d.root_set, &root_set(&a, &w).unwrap());
        prop_assert_eq!(d.reconstitute(&a).unwrap(), w);
    }

    #[test]
    fn subalgebras_lie_in_their_normalizer(t in any_small_type(), i in any::<prop::sample::Index>()) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let roots = a.root_system().roots();
        let alpha = &roots[i.index(roots.len())];
        // t + g_α
        let mut gens: Vec<Vec<Rational>> = (0..a.rank()).map(|k| a.h(k).into_coords()).collect();
        gens.push(a.e(alpha).unwrap().into_coords());
        let w = Subspace::span(&gens, a.dim()).unwrap();
        prop_assert!(is_subalgebra(&a, &w).unwrap());
        prop_assert!(normalizer(&a, &w).unwrap().contains_subspace(&w).unwrap());
    }
}

#[test]
fn cartan_is_self_normalizing() {
    for t in SimpleType::all_up_to_rank(8) {
        let a = ChevalleyAlgebra::for_type(t).unwrap();
        let cartan = a.cartan_subalgebra();
        assert_eq!(normalizer(&a, &cartan).unwrap(), cartan);
        assert_eq!(centralizer(&a, &cartan).unwrap(), cartan);
    }
}

#[test]
fn sl2_plus_cartan_decomposes() {
    let a = alg("A2");
    let alpha = chevalley::Root::new(vec![1, 0]);
    let mut gens: Vec<Vec<Rational>> = (0..2).map(|k| a.h(k).into_coords()).collect();
    gens.push(a.e(&alpha).unwrap().into_coords());
    gens.push(a.e(&-&alpha).unwrap().into_coords());
    let w = Subspace::span(&gens, a.dim()).unwrap();
    let d = t_stable_decompose(&a, &w).unwrap();
    assert_eq!(d.toral_dim(), 2);
    assert_eq!(d.root_set, vec![alpha.clone(), -&alpha]);
}
