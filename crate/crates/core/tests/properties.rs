use num_traits::Zero;
use proptest::prelude::*;

use sextic_thue::exactmath::{
    bezout_cofactors, discriminant, factor_over_q, int, rat, rat_int, rational_roots, sylvester_resultant, UniPoly,
};
use sextic_thue::family::{
    c6_orbit, is_trivial, sextic_discriminant_formula, simplest_sextic_poly, LatticePoint,
};
use sextic_thue::resolvent::{classify_intersection, iso_test, param_from_z};
use sextic_thue::thue::{n_from_solution, solve_thue};

fn small_poly(max_degree: usize) -> impl Strategy<Value = UniPoly> {
    (1..=max_degree)
        .prop_flat_map(|d| (prop::collection::vec(-20i64..=20, d), prop::sample::select(vec![-3i64, -1, 1, 2, 5])))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            UniPoly::from_ints(&c)
        })
}

fn param() -> impl Strategy<Value = sextic_thue::Rat> {
    (-30i64..=30, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn resultant_antisymmetry(p in small_poly(5), q in small_poly(5)) {
        let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
        let sign = if m * n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        prop_assert_eq!(sylvester_resultant(&p, &q).unwrap(), sign * sylvester_resultant(&q, &p).unwrap());
    }

    #[test]
    fn bezout_identity(p in small_poly(5), q in small_poly(5)) {
        let res = sylvester_resultant(&p, &q).unwrap();
        prop_assume!(!res.is_zero());
        let (u, v) = bezout_cofactors(&p, &q).unwrap();
        prop_assert_eq!(&u * &p + &v * &q, UniPoly::constant(res));
        prop_assert!(u.degree().unwrap_or(0) < q.degree().unwrap());
        prop_assert!(v.degree().unwrap_or(0) < p.degree().unwrap());
    }

    #[test]
    fn factorization_expands(a in small_poly(4), b in small_poly(4), c in small_poly(4)) {
        let f = &(&a * &b) * &c;
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        prop_assert_eq!(rational_roots(&f), fac.linear_roots());
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic());
        }
    }

    #[test]
    fn iso_is_symmetric(a in param(), b in param()) {
        prop_assert_eq!(iso_test(&a, &b).unwrap().0, iso_test(&b, &a).unwrap().0);
    }

    #[test]
    fn intersection_degree_respects_reflection(a in -12i64..=12, b in -12i64..=12) {
        let (a, b) = (rat_int(a), rat_int(b));
        let refl = -&b - rat_int(3);
        let valid = |x: &sextic_thue::Rat, y: &sextic_thue::Rat| x != y && !(x + y + rat_int(3)).is_zero();
        prop_assume!(valid(&a, &b) && valid(&a, &refl));
        prop_assert_eq!(
            classify_intersection(&a, &b).unwrap().degree,
            classify_intersection(&a, &refl).unwrap().degree
        );
    }

    #[test]
    fn classifier_is_total(a in param(), b in param()) {
        prop_assume!(a != b && !(&a + &b + rat_int(3)).is_zero());
        let r = classify_intersection(&a, &b);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn round_trip_through_z(a in param(), z in param()) {
        let Ok(b) = param_from_z(&a, &z) else { return Ok(()) };
        prop_assert!(iso_test(&a, &b).unwrap().0);
    }

    #[test]
    fn trivial_points_give_n_equal_m(m in -40i64..=40, e in 1i64..=9, k in 0usize..12) {
        let base = [(0, 1), (1, 0), (1, -1), (1, 1), (2, -1), (1, -2)][k % 6];
        let p = LatticePoint::from_i64(base.0 * e, base.1 * e);
        let p = if k >= 6 { p.neg() } else { p };
        prop_assert_eq!(n_from_solution(&int(m), &p).unwrap().n, rat_int(m));
    }

    #[test]
    fn solutions_are_unions_of_orbits(m in -10i64..=10, x in -6i64..=6, y in -6i64..=6) {
        let p = LatticePoint::from_i64(x, y);
        prop_assume!(x != 0 || y != 0);
        let lambda = sextic_thue::family::eval_form_int(&int(m), &p.x, &p.y);
        let bound = 8u64;
        let sols = solve_thue(&int(m), &lambda, bound).unwrap();
        let pts: Vec<_> = sols.iter().map(|s| s.point.clone()).collect();
        prop_assert!(pts.contains(&p));
        for s in &sols {
            prop_assert_eq!(s.trivial, is_trivial(&s.point));
            for q in c6_orbit(&s.point).points {
                if q.x.magnitude() <= &bound.into() && q.y.magnitude() <= &bound.into() {
                    prop_assert!(pts.contains(&q), "{} missing", q);
                }
            }
        }
    }
}

#[test]
fn sextic_discriminants_match_formula() {
    for m in -50..=50 {
        let m = rat_int(m);
        assert_eq!(discriminant(&simplest_sextic_poly(&m)).unwrap(), sextic_discriminant_formula(&m));
    }
}
