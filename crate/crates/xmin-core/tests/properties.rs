//! Algebraic invariants on random exact inputs.

use proptest::prelude::*;

use xmin_core::actions::{act_full, act_on_plane, is_unipotent_fixed, unipotent_matrix, ActionKind, Sl2Element};
use xmin_core::grassmann::{is_decomposable, kernel_dimension, plucker, plucker_relation_check, Plane3, TriVector};
use xmin_core::octonion::{is_associative_plane, BasisTag, Octonion};
use xmin_core::sample;
use xmin_core::scalars::{GaussQ, Matrix};
use xmin_core::xmin::xmin_member;

/// `(a/b) + (c/d)i` with small height.
fn gauss() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
}

fn to_gauss((a, b, c, d): (i64, i64, i64, i64)) -> GaussQ {
    GaussQ::complex(a, b, c, d)
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(gauss()).prop_map(|cs| Octonion::new(BasisTag::E, cs.map(to_gauss)))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<GaussQ>> {
    prop::collection::vec(gauss(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| to_gauss(v[r * cols + c])))
}

/// Largest `k` with a nonzero `k × k` minor.
fn rank_by_minors(m: &Matrix<GaussQ>) -> usize {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
    }
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&k| {
            subsets(m.rows(), k).iter().any(|rs| subsets(m.cols(), k).iter().any(|cs| !m.minor(rs, cs).is_zero()))
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gauss_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        let (a, b, c) = (to_gauss(a), to_gauss(b), to_gauss(c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn composition_law(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn alternative_laws(x in octonion(), y in octonion()) {
        prop_assert_eq!(&x * &(&x * &y), &(&x * &x) * &y);
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
    }

    #[test]
    fn rank_matches_minor_rank(a in matrix(3, 2), b in matrix(2, 5), c in matrix(3, 5), full in any::<bool>()) {
        let m = if full { c } else { a.matmul(&b).unwrap() };
        prop_assert_eq!(m.rank(), rank_by_minors(&m));
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(3, 6)) {
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), 6);
        for v in &ker {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(GaussQ::is_zero));
        }
    }

    #[test]
    fn plucker_relations_vanish_on_planes(m in matrix(3, 7)) {
        prop_assume!(m.rank() == 3);
        let p = Plane3::new(BasisTag::E, m).unwrap();
        let w = plucker(&p);
        prop_assert!(plucker_relation_check(&w).is_empty());
        let (dec, plane) = is_decomposable(&w).unwrap();
        prop_assert!(dec);
        prop_assert!(plucker(&plane.unwrap()).is_proportional(&w));
    }

    #[test]
    fn decomposability_oracles_agree(a in matrix(3, 7), b in matrix(3, 7)) {
        let (Ok(p), Ok(q)) = (Plane3::new(BasisTag::E, a), Plane3::new(BasisTag::E, b)) else {
            return Ok(());
        };
        let w = plucker(&p).try_add(&plucker(&q)).unwrap();
        prop_assume!(!w.is_zero());
        let dec = is_decomposable(&w).unwrap().0;
        prop_assert_eq!(dec, plucker_relation_check(&w).is_empty());
        prop_assert_eq!(dec, kernel_dimension(&w) == 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn actions_are_multiplicative(seed in any::<u64>()) {
        let mut rng = sample::rng(seed, 0);
        let g = sample::sl2(&mut rng);
        let x = sample::imaginary(&mut rng);
        let y = sample::imaginary(&mut rng);
        for kind in ActionKind::ALL {
            prop_assert_eq!(act_full(kind, &g, &(&x * &y)), &act_full(kind, &g, &x) * &act_full(kind, &g, &y));
        }
    }

    #[test]
    fn actions_preserve_associative_planes(seed in any::<u64>()) {
        let mut rng = sample::rng(seed, 1);
        let g = sample::sl2(&mut rng);
        let p = sample::associative_plane(&mut rng);
        for kind in ActionKind::ALL {
            let q = act_on_plane(kind, &g, &p).unwrap();
            prop_assert!(is_associative_plane(&q).unwrap());
            prop_assert!(xmin_member(&plucker(&q)).unwrap());
        }
    }

    #[test]
    fn unipotents_form_one_parameter_groups(u in gauss(), v in gauss()) {
        let (u, v) = (to_gauss(u), to_gauss(v));
        for kind in ActionKind::ALL {
            let lhs = unipotent_matrix(kind, &u).matmul(&unipotent_matrix(kind, &v)).unwrap();
            prop_assert_eq!(lhs, unipotent_matrix(kind, &(&u + &v)));
        }
    }

    #[test]
    fn orbit_points_lie_in_xmin(seed in any::<u64>()) {
        let mut rng = sample::rng(seed, 2);
        let p = sample::orbit_plane(&mut rng);
        prop_assert!(xmin_member(&plucker(&p)).unwrap());
        prop_assert!(is_associative_plane(&p).unwrap());
    }

    #[test]
    fn sl2_inverse(seed in any::<u64>()) {
        let mut rng = sample::rng(seed, 3);
        let g = sample::sl2(&mut rng);
        let x = sample::octonion(&mut rng);
        for kind in ActionKind::ALL {
            prop_assert_eq!(act_full(kind, &g.inverse(), &act_full(kind, &g, &x)), x.clone());
        }
    }
}

#[test]
fn coordinate_plane_123_is_fixed_by_both_unipotents() {
    let w = TriVector::basis_vector(BasisTag::E, "123".parse().unwrap());
    for kind in ActionKind::ALL {
        assert!(is_unipotent_fixed(kind, &w).unwrap());
    }
    assert!(Sl2Element::new([GaussQ::one(), GaussQ::one(), GaussQ::zero(), GaussQ::from_int(2)]).is_err());
}
