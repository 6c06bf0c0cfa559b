//! Closed-form extremal families.
//!
//! `g_0 = ψ_a ∘ G` with `G(z) = (1−γ)z + γ` (maps `Ω_γ` onto the unit disk) and
//! `ψ_a(w) = (a−w)/(1−aw)`. In the unit disk
//!
//! ```text
//! g_0(z) = A_0 − Σ_{n≥1} A_n zⁿ,
//! A_0 = (a−γ)/(1−aγ),   A_n = (1−a²)/(a(1−aγ)) · qⁿ,   q = a(1−γ)/(1−aγ).
//! ```

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::vec::Vec;


use crate::series::{PowerSeries, TailBound};
use crate::{check_gamma, Error, Result, C64};

/// `a_j = 1 − 2^{−j}` for `j = 1..=j_max`; the grid every sharpness sweep uses.
pub fn sharpness_a_grid(j_max: u32) -> Vec<f64> {
    (1..=j_max).map(|j| 1.0 - (-(j as f64)).exp2()).collect()
}

/// Default depth of [`sharpness_a_grid`].
pub const SHARPNESS_GRID_DEPTH: u32 = 14;

/// Parameters `(a, γ)` of the Möbius family.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawMobius"))]
pub struct MobiusFamilyParams {
    a: f64,
    gamma: f64,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawMobius {
    a: f64,
    gamma: f64,
}

#[cfg(feature = "serde")]
impl TryFrom<RawMobius> for MobiusFamilyParams {
    type Error = Error;
    fn try_from(r: RawMobius) -> Result<Self> {
        MobiusFamilyParams::new(r.a, r.gamma)
    }
}

impl MobiusFamilyParams {
    pub fn new(a: f64, gamma: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::Domain {
                what: "family parameter a must lie in (0, 1)",
                value: a,
            });
        }
        check_gamma(gamma)?;
        Ok(MobiusFamilyParams { a, gamma })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The sharpness computations need `A_0 ≥ 0`, i.e. `a > γ`.
    pub fn a_exceeds_gamma(&self) -> bool {
        self.a > self.gamma
    }

    pub fn a0(&self) -> f64 {
        (self.a - self.gamma) / (1.0 - self.a * self.gamma)
    }

    /// Decay ratio `q = a(1−γ)/(1−aγ)`.
    pub fn ratio(&self) -> f64 {
        self.a * (1.0 - self.gamma) / (1.0 - self.a * self.gamma)
    }

    /// `A_n / qⁿ = (1−a²)/(a(1−aγ))`.
    pub fn amplitude(&self) -> f64 {
        (1.0 - self.a * self.a) / (self.a * (1.0 - self.a * self.gamma))
    }

    /// `A_n` for `n ≥ 1` (and `A_0` for `n = 0`).
    pub fn coefficient(&self, n: usize) -> f64 {
        if n == 0 {
            self.a0()
        } else {
            self.amplitude() * crate::series::powu(self.ratio(), n)
        }
    }

    /// `g_0(z) = (a−γ−(1−γ)z)/(1−aγ−a(1−γ)z)`.
    pub fn evaluate(&self, z: C64) -> C64 {
        let (a, g) = (self.a, self.gamma);
        (-z * (1.0 - g) + (a - g)) / (-z * (a * (1.0 - g)) + (1.0 - a * g))
    }

    /// `g_0'(z) = −(1−a²)(1−γ) / (1−aγ−a(1−γ)z)²`.
    pub fn derivative(&self, z: C64) -> C64 {
        let (a, g) = (self.a, self.gamma);
        let den = -z * (a * (1.0 - g)) + (1.0 - a * g);
        C64::new(-(1.0 - a * a) * (1.0 - g), 0.0) / (den * den)
    }
}

/// Series `A_0 − Σ_{n=1}^N A_n zⁿ` with tail envelope `(q, (1−a²)/(a(1−aγ)))`.
pub fn mobius_family_coeffs(p: &MobiusFamilyParams, order: usize) -> PowerSeries {
    let q = p.ratio();
    let amp = p.amplitude();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(C64::new(p.a0(), 0.0));
    let mut an = amp;
    for _ in 1..=order {
        an *= q;
        coeffs.push(C64::new(-an, 0.0));
    }
    PowerSeries::new(coeffs, Some(TailBound { q, c: amp })).expect("family coefficients are finite")
}

/// Parameters of `f_0 = h_0 + conj(kλ (h_0 − A_0))`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawHarmonic"))]
pub struct HarmonicExtremalParams {
    #[cfg_attr(feature = "serde", serde(flatten))]
    family: MobiusFamilyParams,
    k: f64,
    #[cfg_attr(feature = "serde", serde(rename = "lambda"))]
    lambda_mix: f64,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawHarmonic {
    a: f64,
    gamma: f64,
    k: f64,
    lambda: f64,
}

#[cfg(feature = "serde")]
impl TryFrom<RawHarmonic> for HarmonicExtremalParams {
    type Error = Error;
    fn try_from(r: RawHarmonic) -> Result<Self> {
        HarmonicExtremalParams::new(r.a, r.gamma, r.k, r.lambda)
    }
}

impl HarmonicExtremalParams {
    pub fn new(a: f64, gamma: f64, k: f64, lambda_mix: f64) -> Result<Self> {
        let family = MobiusFamilyParams::new(a, gamma)?;
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::Domain {
                what: "dilatation bound k must lie in [0, 1]",
                value: k,
            });
        }
        if !(0.0..=1.0).contains(&lambda_mix) {
            return Err(Error::Domain {
                what: "multiplier lambda must lie in [0, 1]",
                value: lambda_mix,
            });
        }
        Ok(HarmonicExtremalParams {
            family,
            k,
            lambda_mix,
        })
    }

    pub fn family(&self) -> &MobiusFamilyParams {
        &self.family
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn lambda_mix(&self) -> f64 {
        self.lambda_mix
    }
}

/// Analytic part `h = g_0` and co-analytic part `g = kλ (h − A_0)`, so `b_n = −kλ A_n`.
pub fn harmonic_extremal(p: &HarmonicExtremalParams, order: usize) -> (PowerSeries, PowerSeries) {
    let h = mobius_family_coeffs(&p.family, order);
    let shifted = h.sub(&PowerSeries::constant(h.coeff(0), order));
    let g = shifted.scale(C64::new(p.k * p.lambda_mix, 0.0));
    (h, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_at_gamma_zero() {
        let p = MobiusFamilyParams::new(0.5, 0.0).unwrap();
        let s = mobius_family_coeffs(&p, 40);
        assert_eq!(s.coeff(0).re, 0.5);
        for n in 1..=40 {
            let want = 1.5 * 0.5f64.powi(n as i32);
            assert!((s.coeff(n).re + want).abs() < 1e-15);
        }
    }

    #[test]
    fn ratio_is_exact_geometric() {
        let p = MobiusFamilyParams::new(0.83, 0.31).unwrap();
        let s = mobius_family_coeffs(&p, 300);
        for n in 1..300 {
            let r = s.coeff(n + 1).re / s.coeff(n).re;
            assert!((r - p.ratio()).abs() < 1e-12);
        }
        assert!(s.tail_dominates_upper_half(1e-12));
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(MobiusFamilyParams::new(0.0, 0.2).is_err());
        assert!(MobiusFamilyParams::new(1.0, 0.2).is_err());
        assert!(MobiusFamilyParams::new(0.5, 1.0).is_err());
        assert!(HarmonicExtremalParams::new(0.5, 0.2, 1.5, 1.0).is_err());
        assert!(HarmonicExtremalParams::new(0.5, 0.2, 0.5, -0.1).is_err());
    }

    #[test]
    fn bounded_on_the_disk() {
        let p = MobiusFamilyParams::new(0.9, 0.9).unwrap();
        for j in 0..720 {
            let z = C64::from_polar(0.99, j as f64 * core::f64::consts::PI / 360.0);
            assert!(p.evaluate(z).norm() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn series_agrees_with_closed_form() {
        let p = MobiusFamilyParams::new(0.7, 0.25).unwrap();
        let s = mobius_family_coeffs(&p, 400);
        let z = C64::new(0.5, -0.4);
        assert!((s.evaluate(z) - p.evaluate(z)).norm() < 1e-13);
        assert!((s.derivative().evaluate(z) - p.derivative(z)).norm() < 1e-12);
    }

    #[test]
    fn approaches_unimodular_constant() {
        let mut prev = 0.0;
        for a in sharpness_a_grid(SHARPNESS_GRID_DEPTH) {
            let p = MobiusFamilyParams::new(a, 0.4).unwrap();
            let rest: f64 = (1..2000).map(|n| p.coefficient(n) * 0.3f64.powi(n as i32)).sum();
            assert!(p.a0() > prev);
            prev = p.a0();
            if a > 0.9999 {
                // 1 − A_0 = (1−a)(1+γ)/(1−aγ)
                assert!(1.0 - p.a0() < 1e-3 && rest < 1e-3);
            }
        }
    }

    #[test]
    fn harmonic_zero_dilatation_and_unit() {
        let (h, g) = harmonic_extremal(&HarmonicExtremalParams::new(0.5, 0.0, 0.0, 1.0).unwrap(), 30);
        assert!(g.coeffs().iter().all(|c| c.norm() == 0.0));
        assert_eq!(h.coeff(0).re, 0.5);
        let (_, g) = harmonic_extremal(&HarmonicExtremalParams::new(0.5, 0.0, 1.0, 1.0).unwrap(), 30);
        assert_eq!(g.coeff(0).re, 0.0);
        for n in 1..=30 {
            assert!((g.coeff(n).re + 1.5 * 0.5f64.powi(n as i32)).abs() < 1e-15);
        }
    }

    #[test]
    fn harmonic_dilatation_bound_pointwise() {
        let p = HarmonicExtremalParams::new(0.8, 0.3, 0.6, 0.7).unwrap();
        let (h, g) = harmonic_extremal(&p, 600);
        let (dh, dg) = (h.derivative(), g.derivative());
        for i in 1..10 {
            for j in 0..16 {
                let z = C64::from_polar(0.09 * i as f64, j as f64 * 0.39);
                let (a, b) = (dh.evaluate(z).norm(), dg.evaluate(z).norm());
                assert!((b - 0.42 * a).abs() <= 1e-12 * a.max(1.0));
                assert!(b <= p.k() * a + 1e-12);
            }
        }
    }

    #[test]
    fn grid_values() {
        let g = sharpness_a_grid(14);
        assert_eq!(g.len(), 14);
        assert_eq!(g[0], 0.5);
        assert_eq!(g[13], 1.0 - 1.0 / 16384.0);
    }
}
