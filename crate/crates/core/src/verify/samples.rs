//! Random bounded analytic test functions: finite Blaschke products
//! `B(z) = e^{iθ} Π_j (z − w_j)/(1 − conj(w_j) z)`.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::extremals::MobiusFamilyParams;
use crate::series::{linear_fractional, PowerSeries};
use crate::{Result, C64};

/// Largest modulus of a random zero.
pub const MAX_ZERO_RADIUS: f64 = 0.9;

/// Largest number of Blaschke factors in a random sample.
pub const MAX_FACTORS: usize = 4;

/// An analytic function on the unit disk with closed-form value and derivative.
pub trait DiskFunction {
    fn value(&self, z: C64) -> C64;
    fn derivative(&self, z: C64) -> C64;
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlaschkeSample {
    pub zeros: Vec<C64>,
    /// Unimodular factor `e^{iθ}`.
    pub rotation: C64,
}

impl BlaschkeSample {
    pub fn new(zeros: Vec<C64>, theta: f64) -> Self {
        BlaschkeSample {
            zeros,
            rotation: C64::from_polar(1.0, theta),
        }
    }

    /// Between one and [`MAX_FACTORS`] zeros, uniform in `|w| ≤ 0.9`, and a uniform rotation.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let m = rng.gen_range(1..=MAX_FACTORS);
        let zeros = (0..m)
            .map(|_| {
                let rad = MAX_ZERO_RADIUS * rng.gen::<f64>().sqrt();
                C64::from_polar(rad, 2.0 * PI * rng.gen::<f64>())
            })
            .collect();
        Self::new(zeros, 2.0 * PI * rng.gen::<f64>())
    }

    pub fn random_batch<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Self> {
        (0..count).map(|_| Self::random(rng)).collect()
    }

    fn factor(w: C64, z: C64) -> C64 {
        (z - w) / (C64::new(1.0, 0.0) - w.conj() * z)
    }

    fn factor_derivative(w: C64, z: C64) -> C64 {
        let d = C64::new(1.0, 0.0) - w.conj() * z;
        C64::new(1.0 - w.norm_sqr(), 0.0) / (d * d)
    }

    /// Taylor series of `t ↦ B(center + scale·t)` about `t = 0`.
    ///
    /// Needs `|center| + |scale| ≤ 1` so every factor stays analytic on the
    /// closed unit disk in `t`.
    pub fn taylor_about(&self, center: C64, scale: C64, order: usize) -> Result<PowerSeries> {
        let mut acc = PowerSeries::constant(self.rotation, order);
        for &w in &self.zeros {
            let f = linear_fractional(
                center - w,
                scale,
                C64::new(1.0, 0.0) - w.conj() * center,
                w.conj() * scale,
                order,
            )?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    /// Taylor series about the origin.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.taylor_about(C64::new(0.0, 0.0), C64::new(1.0, 0.0), order)
    }

    /// Expansion in the unit disk of `F = B∘G`, `G(z) = (1−γ)z + γ`, which is
    /// bounded by one on all of `Ω_γ`.
    pub fn series_on_omega(&self, gamma: f64, order: usize) -> Result<PowerSeries> {
        crate::check_gamma(gamma)?;
        self.taylor_about(C64::new(gamma, 0.0), C64::new(1.0 - gamma, 0.0), order)
    }
}

impl DiskFunction for BlaschkeSample {
    fn value(&self, z: C64) -> C64 {
        self.zeros
            .iter()
            .fold(self.rotation, |acc, &w| acc * Self::factor(w, z))
    }

    fn derivative(&self, z: C64) -> C64 {
        let factors: Vec<C64> = self.zeros.iter().map(|&w| Self::factor(w, z)).collect();
        let mut total = C64::new(0.0, 0.0);
        for (j, &w) in self.zeros.iter().enumerate() {
            let others: C64 = factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, f)| *f)
                .product();
            total += Self::factor_derivative(w, z) * others;
        }
        total * self.rotation
    }
}

/// A constant function on the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantFunction(pub C64);

impl DiskFunction for ConstantFunction {
    fn value(&self, _: C64) -> C64 {
        self.0
    }

    fn derivative(&self, _: C64) -> C64 {
        C64::new(0.0, 0.0)
    }
}

impl DiskFunction for MobiusFamilyParams {
    fn value(&self, z: C64) -> C64 {
        self.evaluate(z)
    }

    fn derivative(&self, z: C64) -> C64 {
        MobiusFamilyParams::derivative(self, z)
    }
}

/// `n_radii × n_angles` polar grid with radii evenly spaced in `(0, max_radius]`.
pub fn polar_grid(n_radii: usize, n_angles: usize, max_radius: f64) -> Vec<C64> {
    let mut out = Vec::with_capacity(n_radii * n_angles);
    for i in 1..=n_radii {
        let rad = max_radius * i as f64 / n_radii as f64;
        for j in 0..n_angles {
            // stagger the angles between rings
            let theta = 2.0 * PI * (j as f64 + 0.5 * (i % 2) as f64) / n_angles as f64;
            out.push(C64::from_polar(rad, theta));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_samples_are_bounded_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let batch = BlaschkeSample::random_batch(&mut rng, 50);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(batch, BlaschkeSample::random_batch(&mut rng2, 50));
        for s in &batch {
            assert!(!s.zeros.is_empty() && s.zeros.len() <= MAX_FACTORS);
            assert!(s.zeros.iter().all(|w| w.norm() <= MAX_ZERO_RADIUS));
            for z in polar_grid(5, 12, 0.99) {
                assert!(s.value(z).norm() <= 1.0 + 1e-14);
            }
            let boundary = C64::from_polar(1.0, 0.7);
            assert!((s.value(boundary).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn series_and_derivative_agree_with_closed_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in BlaschkeSample::random_batch(&mut rng, 20) {
            let p = s.series(400).unwrap();
            let z = C64::new(0.3, -0.2);
            assert!((p.evaluate(z) - s.value(z)).norm() < 1e-12);
            assert!((p.derivative().evaluate(z) - s.derivative(z)).norm() < 1e-11);
            // finite-difference check of the closed-form derivative
            let h = 1e-6;
            let fd = (s.value(z + h) - s.value(z - h)) / (2.0 * h);
            assert!((fd - s.derivative(z)).norm() < 1e-7);
            assert!(p.tail_dominates_upper_half(1e-9));
        }
    }

    #[test]
    fn omega_series_matches_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let gamma = 0.4;
        for s in BlaschkeSample::random_batch(&mut rng, 10) {
            let p = s.series_on_omega(gamma, 600).unwrap();
            let z = C64::new(-0.5, 0.4);
            let want = s.value(z * (1.0 - gamma) + gamma);
            assert!((p.evaluate(z) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn identity_sample() {
        let id = BlaschkeSample::new(alloc::vec![C64::new(0.0, 0.0)], 0.0);
        let z = C64::new(0.2, 0.5);
        assert!((id.value(z) - z).norm() < 1e-15);
        assert!((id.derivative(z) - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn grid_shape() {
        let g = polar_grid(20, 50, 0.95);
        assert_eq!(g.len(), 1000);
        assert!(g.iter().all(|z| z.norm() <= 0.95 + 1e-15));
    }
}
