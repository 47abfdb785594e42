mod common;

use coxkit::exactgeom::{int_vec, IntMatrix, IntVector};
use coxkit::monoids::{
    check_star_star_witness, check_star_witness, divisor_theory, extend_embedding, is_saturated, verify_divisor_axioms,
    AffineMonoid, ExtensionResult, MonoidHom,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn gens_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0i64..=3, n), n..=5)))
}

fn to_big(v: &[Vec<i64>]) -> Vec<IntVector> {
    v.iter().map(|g| int_vec(g)).collect()
}

/// Saturated monoid: the Hilbert basis of the cone in the group of the generators.
fn saturated(n: usize, gens: &[Vec<i64>]) -> Option<AffineMonoid> {
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        return None;
    }
    let m = AffineMonoid::new(n, to_big(gens)).ok()?;
    let hb = m.cone().hilbert_basis();
    if hb.len() > 5 {
        return None;
    }
    AffineMonoid::new(n, hb).ok()
}

/// Values of each functional on the generators, as a sorted list of columns.
fn profiles(images: &[IntVector]) -> Vec<IntVector> {
    let r = images.first().map_or(0, |v| v.len());
    let mut cols: Vec<IntVector> = (0..r).map(|j| images.iter().map(|im| im[j].clone()).collect()).collect();
    cols.sort();
    cols
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn saturation_matches_box_oracle((n, gens) in gens_strategy()) {
        prop_assume!(gens.iter().all(|g| g.iter().any(|&x| x != 0)));
        let facets = common::brute_force_facets(&gens);
        let m = AffineMonoid::with_lattice(n, to_big(&gens), &IntMatrix::identity(n)).unwrap();
        prop_assume!(m.rank() == n);
        let points = common::box_points(&facets, n, 10);
        let span = common::box_span(&gens, n, 10);
        let oracle = points.iter().all(|p| span.contains(p));
        let s = is_saturated(&m);
        prop_assert_eq!(s.saturated, oracle);
        if let Some(w) = s.witness {
            let w: Vec<i64> = w.iter().map(|x| x.to_i64().unwrap()).collect();
            prop_assert!(!span.contains(&w));
        }
    }

    #[test]
    fn divisor_axioms_hold((n, gens) in gens_strategy()) {
        let Some(m) = saturated(n, &gens) else { return Ok(()) };
        let dt = divisor_theory(&m).unwrap();
        prop_assert!(verify_divisor_axioms(&dt, 6).passed());
        if m.rank() == n {
            prop_assert_eq!(dt.free_rank(), common::brute_force_facets(&gens).len());
        }
    }

    #[test]
    fn theory_invariant_under_reordering_and_coordinates((n, gens) in gens_strategy(), rot in 0usize..5, k in -2i64..=2) {
        let Some(m) = saturated(n, &gens) else { return Ok(()) };
        let dt = divisor_theory(&m).unwrap();
        let mut shuffled = m.generators().to_vec();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let dt2 = divisor_theory(&AffineMonoid::new(n, shuffled).unwrap()).unwrap();
        let mut back = dt2.images().to_vec();
        back.rotate_right(rot % len);
        prop_assert_eq!(profiles(dt.images()), profiles(&back));

        // x ↦ x + k·x₁·e₂ then swap the first and last coordinates
        let mut u = IntMatrix::identity(n);
        u.set(1, 0, BigInt::from(k));
        let moved: Vec<IntVector> = m.generators().iter().map(|g| {
            let mut v = u.apply(g);
            v.swap(0, n - 1);
            v
        }).collect();
        let dt3 = divisor_theory(&AffineMonoid::new(n, moved).unwrap()).unwrap();
        prop_assert_eq!(profiles(dt.images()), profiles(dt3.images()));
    }

    #[test]
    fn extension_results_recheck((n, gens) in gens_strategy(), p in prop::collection::vec(prop::collection::vec(0i64..=2, 1..=5), 1..=4)) {
        let Some(m) = saturated(n, &gens) else { return Ok(()) };
        let dt = divisor_theory(&m).unwrap();
        let r = dt.free_rank();
        // α = P·τ for a random nonnegative matrix P
        let rows: Vec<Vec<i64>> = p.iter().map(|row| (0..r).map(|j| row.get(j).copied().unwrap_or(0)).collect()).collect();
        let pm = IntMatrix::new(to_big(&rows));
        let images: Vec<IntVector> = dt.images().iter().map(|t| pm.apply(t)).collect();
        let alpha = MonoidHom::from_images(&m, pm.nrows(), images.clone()).unwrap();
        match extend_embedding(&dt, &alpha, 8) {
            Ok(ExtensionResult::Beta(b)) => {
                for (t, a) in dt.images().iter().zip(&images) {
                    prop_assert_eq!(&b.apply(t), a);
                }
                prop_assert_eq!(b, pm);
            }
            Ok(ExtensionResult::ViolationStar { a, b, s }) => prop_assert!(check_star_witness(&dt, &alpha, &a, &b, &s)),
            Ok(ExtensionResult::ViolationStarStar { witness_set, common_prime_index }) => {
                prop_assert!(check_star_star_witness(&dt, &alpha, &witness_set, common_prime_index))
            }
            Ok(ExtensionResult::NotAnEmbedding { a, b }) => {
                prop_assert_ne!(&a, &b);
                prop_assert_eq!(alpha.apply(&m, &a), alpha.apply(&m, &b));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
