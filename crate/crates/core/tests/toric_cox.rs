use coxkit::exactgeom::{int_vec, Cone, IntMatrix, IntVector};
use coxkit::grading::{zeta, zeta_inverse, GradedEndo};
use coxkit::polyring::{compose, PolyMap};
use coxkit::toric_cox::{cox_data, quadric_cone, tau, tau_inverse};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn cone_strategy() -> impl Strategy<Value = Vec<IntVector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=3, 2), 2..=4)
        .prop_map(|v| v.into_iter().map(|r| {
            let mut r = r;
            r.push(1);
            int_vec(&r)
        }).collect())
}

fn all_exponents(r: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out.into_iter().flat_map(|e| (0..=max).map(move |k| {
            let mut e = e.clone();
            e.push(k);
            e
        })).collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn exact_sequence(gens in cone_strategy()) {
        let Ok(cone) = Cone::new(3, &gens) else { return Ok(()) };
        prop_assume!(cone.is_full_dimensional());
        let cd = cox_data(&cone).unwrap();
        let ring = cd.ring();
        let r = cd.num_vars();
        prop_assert_eq!(cd.cl_group().free_rank(), r - 3);
        if r == 3 {
            let det = IntMatrix::new(cd.rays().to_vec()).det().unwrap().abs();
            let order = cd.cl_group().torsion().iter().fold(BigInt::from(1), |a, d| a * d);
            prop_assert_eq!(order, det);
        }
        for u in cd.coordinates() {
            let p = cd.pullback(u).unwrap();
            prop_assert_eq!(ring.degree_of(&p).unwrap(), ring.group().zero());
        }
        for e in all_exponents(r, 3) {
            let deg = ring.monomial_degree(&e);
            let big: IntVector = e.iter().map(|&k| BigInt::from(k)).collect();
            let ch = cd.character_of(&big);
            prop_assert_eq!(deg == ring.group().zero(), ch.is_some());
            if let Some(u) = ch {
                prop_assert_eq!(cd.exponent(&u).unwrap(), big);
            }
        }
    }

    #[test]
    fn coordinates_are_in_dual_cone(gens in cone_strategy()) {
        let Ok(cone) = Cone::new(3, &gens) else { return Ok(()) };
        prop_assume!(cone.is_full_dimensional());
        let cd = cox_data(&cone).unwrap();
        for u in cd.coordinates() {
            prop_assert!(cd.exponent(u).unwrap().iter().all(|x| !x.is_negative()));
            prop_assert!(u.iter().any(|x| !x.is_zero()));
        }
    }
}

#[test]
fn lifts_compose() {
    let cd = cox_data(&quadric_cone()).unwrap();
    let r = cd.ring();
    let lift = |psi: &PolyMap, phi: &PolyMap| cd.verify_lift(psi, &GradedEndo::new(&r, phi.clone()).unwrap()).unwrap();
    let tt = compose(&tau(), &tau()).unwrap();
    let zz = compose(&zeta(), &zeta()).unwrap();
    assert!(lift(&tt, &zz));
    let mixed_psi = compose(&tau(), &tau_inverse()).unwrap();
    let mixed_phi = compose(&zeta_inverse(), &zeta()).unwrap();
    assert!(mixed_psi.is_identity() && mixed_phi.is_identity());
    assert!(lift(&mixed_psi, &mixed_phi));
    assert!(!lift(&tt, &zeta()));
}
