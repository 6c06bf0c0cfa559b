use bohr_core::extremals::{harmonic_extremal, mobius_family_coeffs, HarmonicExtremalParams, MobiusFamilyParams};
use bohr_core::functionals::{
    area_upper_bound, dirichlet_area, functional_theorem1, functional_theorem2, functional_theorem3,
    functional_theorem4, majorant, AREA_CONSTANT,
};
use bohr_core::series::{recenter_affine, uncenter_affine, PowerSeries};
use bohr_core::verify::BlaschkeSample;
use bohr_core::C64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex(bound: f64) -> impl Strategy<Value = C64> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| C64::new(re, im))
}

fn point_in_disk(max: f64) -> impl Strategy<Value = C64> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| C64::from_polar(r, t))
}

fn polynomial() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(complex(2.0), 1..10).prop_map(|c| {
        let d = c.len() - 1;
        PowerSeries::polynomial(&c, d).unwrap()
    })
}

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn add_and_mul_commute_with_evaluation(
        (a, b) in (1usize..10).prop_flat_map(|n| (prop::collection::vec(complex(2.0), n), prop::collection::vec(complex(2.0), n))),
        z in point_in_disk(0.95),
    ) {
        // room for the full product, since arithmetic truncates at the common order
        let order = 2 * a.len();
        let p = PowerSeries::polynomial(&a, order).unwrap();
        let q = PowerSeries::polynomial(&b, order).unwrap();
        prop_assert!(close((&p + &q).evaluate(z), p.evaluate(z) + q.evaluate(z), 1e-12));
        prop_assert!(close((&p - &q).evaluate(z), p.evaluate(z) - q.evaluate(z), 1e-12));
        prop_assert!(close((&p * &q).evaluate(z), p.evaluate(z) * q.evaluate(z), 1e-12));
        prop_assert_eq!((&p * &q).tail().unwrap().c, 0.0);
    }

    #[test]
    fn recentring_commutes_with_evaluation(p in polynomial(), gamma in 0.0..0.95f64, w in point_in_disk(1.0)) {
        let b = recenter_affine(&p, gamma).unwrap();
        let want = p.evaluate(w * (1.0 - gamma));
        prop_assert!(close(b.evaluate(w), want, 1e-12));
        let back = uncenter_affine(&b, gamma).unwrap();
        for n in 0..=p.order() {
            prop_assert!(close(back.coeff(n), p.coeff(n), 1e-10));
        }
    }

    #[test]
    fn functionals_increase_with_radius(
        a in 0.001..0.999f64,
        gamma in 0.0..0.95f64,
        r1 in 0.0..0.9f64,
        dr in 0.0..0.09f64,
        k in 0.0..1.0f64,
        lambda in 0.05..1.0f64,
    ) {
        let p = MobiusFamilyParams::new(a, gamma).unwrap();
        let s = mobius_family_coeffs(&p, 1024);
        let r2 = r1 + dr;
        let t1 = |r| functional_theorem1(&s, r, gamma, AREA_CONSTANT).unwrap().total;
        let t2 = |r| functional_theorem2(&s, r).unwrap().total;
        let t3 = |r| functional_theorem3(&s, r, lambda).unwrap().total;
        prop_assert!(t1(r1) <= t1(r2) + 1e-14);
        prop_assert!(t2(r1) <= t2(r2) + 1e-14);
        prop_assert!(t3(r1) <= t3(r2) + 1e-14);
        let (h, g) = harmonic_extremal(&HarmonicExtremalParams::new(a, gamma, k, 1.0).unwrap(), 1024);
        let t4 = |r| functional_theorem4(&h, &g, r).unwrap().total;
        prop_assert!(t4(r1) <= t4(r2) + 1e-14);
    }

    #[test]
    fn area_below_schwarz_pick_bound(seed in any::<u64>(), r in 0.0..0.95f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = BlaschkeSample::random(&mut rng).series(1024).unwrap();
        let area = dirichlet_area(&s, r).unwrap();
        let bound = area_upper_bound(s.coeff(0).norm().min(1.0), r).unwrap();
        prop_assert!(area.value <= bound * (1.0 + 1e-12) + 1e-15);
    }

    #[test]
    fn truncation_tail_bounds_the_dropped_part(a in 0.001..0.999f64, gamma in 0.0..0.95f64, n in 1usize..64, r in 0.0..0.99f64) {
        let full = mobius_family_coeffs(&MobiusFamilyParams::new(a, gamma).unwrap(), 4096);
        let cut = full.truncate(n);
        let m_full = majorant(&full, r).unwrap();
        let m_cut = majorant(&cut, r).unwrap();
        prop_assert!(m_cut.value + m_cut.tail_error >= m_full.value * (1.0 - 1e-12));
        let d_full = dirichlet_area(&full, r).unwrap();
        let d_cut = dirichlet_area(&cut, r).unwrap();
        prop_assert!(d_cut.value + d_cut.tail_error >= d_full.value * (1.0 - 1e-12));
    }
}
