//! Independent references for the series-based functionals.

use std::f64::consts::PI;

use bohr_core::extremals::{mobius_family_coeffs, MobiusFamilyParams};
use bohr_core::functionals::{dirichlet_area, majorant, norm_f0};
use bohr_core::series::{numeric_taylor, PowerSeries, DEFAULT_SAMPLING_RADIUS};
use bohr_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `(1/π) ∫∫_{|z|<r} |f'|² dA` with Gauss–Legendre in the radius and the
/// trapezoidal rule in the angle.
fn area_by_quadrature(fprime: impl Fn(C64) -> C64, r: f64, radial: usize, angular: usize) -> f64 {
    let mut total = 0.0;
    for (x, w) in gauss_legendre(radial) {
        let rho = 0.5 * r * (x + 1.0);
        let mut ring = 0.0;
        for j in 0..angular {
            let z = C64::from_polar(rho, 2.0 * PI * j as f64 / angular as f64);
            ring += fprime(z).norm_sqr();
        }
        total += w * 0.5 * r * rho * ring * 2.0 * PI / angular as f64;
    }
    total / PI
}

#[test]
fn gauss_legendre_integrates_polynomials() {
    let rule = gauss_legendre(8);
    let sum: f64 = rule.iter().map(|(_, w)| w).sum();
    assert!((sum - 2.0).abs() < 1e-14);
    // exact up to degree 15
    let m14: f64 = rule.iter().map(|(x, w)| w * x.powi(14)).sum();
    assert!((m14 - 2.0 / 15.0).abs() < 1e-14);
}

#[test]
fn dirichlet_area_matches_quadrature_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let degree = rng.gen_range(1..=12);
        let coeffs: Vec<C64> = (0..=degree)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let p = PowerSeries::polynomial(&coeffs, degree).unwrap();
        let r = rng.gen_range(0.05..0.95);
        let dp = p.derivative();
        let want = area_by_quadrature(|z| dp.evaluate(z), r, degree + 2, 4 * degree + 4);
        let got = dirichlet_area(&p, r).unwrap();
        assert_eq!(got.tail_error, 0.0);
        assert!((got.value - want).abs() < 1e-8, "degree {degree} r {r}: {} vs {want}", got.value);
    }
}

#[test]
fn dirichlet_area_matches_quadrature_on_extremal() {
    let params = MobiusFamilyParams::new(0.5, 0.0).unwrap();
    let p = mobius_family_coeffs(&params, 256);
    let got = dirichlet_area(&p, 0.3).unwrap();
    let want = area_by_quadrature(|z| params.derivative(z), 0.3, 40, 128);
    assert!((got.value - want).abs() < 1e-8, "{} vs {want}", got.value);
    // closed form for φ(z) = (a − z)/(1 − az): (1−a²)² r² / (1 − a²r²)²
    let (a2, r2) = (0.25, 0.09);
    let closed = (1.0 - a2) * (1.0 - a2) * r2 / ((1.0 - a2 * r2) * (1.0 - a2 * r2));
    assert!((got.value - closed).abs() < 1e-14);
}

#[test]
fn majorant_and_norm_of_automorphism_closed_forms() {
    // a = 1/2, γ = 0: |A_0| = 1/2, A_n = (3/2)(1/2)ⁿ
    let p = mobius_family_coeffs(&MobiusFamilyParams::new(0.5, 0.0).unwrap(), 2048);
    let r: f64 = 0.4;
    let m = majorant(&p, r).unwrap();
    let closed = 0.5 + 1.5 * 0.5 * r / (1.0 - 0.5 * r);
    assert!((m.value - closed).abs() < 1e-14);
    let nf = norm_f0(&p, r).unwrap();
    let x = 0.25 * r * r;
    assert!((nf.value - 2.25 * x / (1.0 - x)).abs() < 1e-14);
}

#[test]
fn numeric_taylor_recovers_extremal_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let gamma = rng.gen_range(0.0..0.9);
        let a = rng.gen_range(0.0..0.95);
        let params = MobiusFamilyParams::new(a, gamma).unwrap();
        let ex = numeric_taylor(|z| params.evaluate(z), 16, DEFAULT_SAMPLING_RADIUS).unwrap();
        for n in 0..=16 {
            // g_0 = A_0 − Σ A_n zⁿ
            let want = if n == 0 { params.coefficient(0) } else { -params.coefficient(n) };
            let err = (ex.series.coeff(n) - C64::new(want, 0.0)).norm();
            assert!(err < 1e-10, "a {a} gamma {gamma} n {n}: {err}");
        }
    }
}
