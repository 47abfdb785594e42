mod common;

use coxkit::exactgeom::{hnf, int_vec, snf, Cone, GeomError, IntMatrix, IntVector};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn to_i64(v: &IntVector) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

fn rays_strategy(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n..=n + 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn dual_cone_matches_brute_force(rays in rays_strategy(3, -3, 3)) {
        let gens: Vec<IntVector> = rays.iter().map(|r| int_vec(r)).collect();
        let Ok(cone) = Cone::new(3, &gens) else { return Ok(()) };
        prop_assume!(cone.is_full_dimensional());
        let mut facets: Vec<Vec<i64>> = cone.facets().iter().map(to_i64).collect();
        facets.sort();
        prop_assert_eq!(facets, common::brute_force_facets(&rays));
        for r in cone.rays() {
            for f in cone.facets() {
                prop_assert!(!coxkit::exactgeom::dot(f, r).is_negative());
            }
        }
        let back = cone.dual().unwrap().dual().unwrap();
        let mut a = back.rays().to_vec();
        let mut b = cone.rays().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn hilbert_basis_is_minimal_generating_set(
        n in 2usize..=3,
        raw in prop::collection::vec(prop::collection::vec(0i64..=3, 3), 2..=4),
    ) {
        let rays: Vec<Vec<i64>> = raw.iter().map(|r| r[..n].to_vec()).collect();
        let gens: Vec<IntVector> = rays.iter().map(|r| int_vec(r)).collect();
        let Ok(cone) = Cone::new(n, &gens) else { return Ok(()) };
        prop_assume!(cone.is_full_dimensional());
        let facets: Vec<Vec<i64>> = cone.facets().iter().map(to_i64).collect();
        let bound = 10;
        let points = common::box_points(&facets, n, bound);
        let irreducible = common::box_irreducibles(&points);
        let hb: Vec<Vec<i64>> = cone.hilbert_basis().iter().map(to_i64).collect();
        let mut hb_in_box: Vec<Vec<i64>> = hb.iter().filter(|h| h.iter().all(|&x| x <= bound)).cloned().collect();
        hb_in_box.sort();
        prop_assert_eq!(&hb_in_box, &irreducible);
        let reached = common::box_span(&hb, n, bound);
        prop_assert_eq!(reached.len(), points.len());
    }

    #[test]
    fn normal_form_identities(rows in 1usize..=4, cols in 1usize..=4, seed in prop::collection::vec(-9i64..=9, 16)) {
        let a = IntMatrix::new((0..rows).map(|i| int_vec(&seed[i * 4..i * 4 + cols])).collect());
        let (h, u) = hnf(&a);
        prop_assert!(u.is_unimodular());
        prop_assert_eq!(&u * &a, h.clone());
        // echelon shape with positive pivots
        let mut last: Option<usize> = None;
        for r in h.rows() {
            match r.iter().position(|x| !x.is_zero()) {
                Some(p) => {
                    prop_assert!(last.is_none_or(|l| p > l));
                    prop_assert!(r[p].is_positive());
                    last = Some(p);
                }
                None => last = Some(usize::MAX - 1),
            }
        }
        let (s, u, v) = snf(&a);
        prop_assert!(u.is_unimodular() && v.is_unimodular());
        prop_assert_eq!(&(&u * &a) * &v, s.clone());
        let k = rows.min(cols);
        for i in 0..k.saturating_sub(1) {
            let (x, y) = (s.get(i, i), s.get(i + 1, i + 1));
            if x.is_zero() { prop_assert!(y.is_zero()); } else { prop_assert!((y % x).is_zero()); }
        }
    }
}

#[test]
fn three_dimensional_square_cone() {
    let rays: Vec<Vec<i64>> = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
    let cone = Cone::new(3, &rays.iter().map(|r| int_vec(r)).collect::<Vec<_>>()).unwrap();
    let mut facets: Vec<Vec<i64>> = cone.facets().iter().map(to_i64).collect();
    facets.sort();
    assert_eq!(facets, common::brute_force_facets(&rays));
    assert_eq!(facets.len(), 4);
}

#[test]
fn non_pointed_dual_request() {
    let gens = vec![int_vec(&[1, 0]), int_vec(&[-1, 0]), int_vec(&[0, 1])];
    assert_eq!(Cone::new(2, &gens).unwrap_err(), GeomError::NonPointed);
}
