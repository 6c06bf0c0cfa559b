//! Explorer for the best constant `t(γ)` that may replace `8/9` in the
//! area-improved inequality.
//!
//! For a member `f` and radius `r ≤ ρ_γ` the largest admissible constant is
//! `(1 − Σ|a_n| rⁿ)/(S_{r(1−γ)}/π)`; the estimate is the infimum of that ratio
//! over a nested `(a, r)` grid on the Möbius family, optionally lowered by
//! random Blaschke compositions.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::vec::Vec;


use crate::extremals::{mobius_family_coeffs, MobiusFamilyParams};
use crate::functionals::{functional_theorem1, FunctionalValue};
use crate::series::{PowerSeries, DEFAULT_ORDER};
use crate::verify::samples::BlaschkeSample;
use crate::{check_gamma, fournier_ruscheweyh_radius, Error, Result};

/// Smallest radius of the search; the area vanishes at `r = 0`.
pub const MIN_RADIUS: f64 = 1e-3;

/// Increment added to the estimate when checking that the witness violates.
pub const WITNESS_MARGIN: f64 = 1e-6;

/// Search window and resolution. `a` is parametrised by `s = −log₂(1 − a)`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchConfig {
    pub a_points: usize,
    pub r_points: usize,
    pub s_min: f64,
    pub s_max: f64,
    pub refinements: usize,
    /// Window shrink factor per refinement.
    pub shrink: f64,
    pub order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            a_points: 64,
            r_points: 64,
            s_min: 0.05,
            s_max: 14.0,
            refinements: 3,
            shrink: 4.0,
            order: DEFAULT_ORDER,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.a_points < 2 || self.r_points < 2 {
            return Err(Error::EmptyGrid);
        }
        if !(self.s_min > 0.0 && self.s_min < self.s_max && self.s_max.is_finite()) {
            return Err(Error::Domain {
                what: "need 0 < s_min < s_max",
                value: self.s_min,
            });
        }
        if !(self.shrink > 1.0 && self.shrink.is_finite()) {
            return Err(Error::Domain {
                what: "shrink factor must exceed 1",
                value: self.shrink,
            });
        }
        Ok(())
    }
}

fn a_of_s(s: f64) -> f64 {
    1.0 - (-s).exp2()
}

/// Which member realised the infimum.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Witness {
    Mobius { a: f64 },
    Sample { index: usize },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantEstimate {
    pub gamma: f64,
    #[cfg_attr(feature = "serde", serde(rename = "K_hat"))]
    pub k_hat: f64,
    pub witness: Witness,
    pub r_witness: f64,
    /// Refinement passes that were run after the coarse grid.
    pub refinements: usize,
    /// Estimate from the coarse grid alone.
    pub coarse_k_hat: f64,
    /// Grid cells evaluated in total.
    pub cells: usize,
}

impl ConstantEstimate {
    /// Möbius parameter of the witness, if the witness is a family member.
    pub fn a_witness(&self) -> Option<f64> {
        match self.witness {
            Witness::Mobius { a } => Some(a),
            Witness::Sample { .. } => None,
        }
    }
}

/// Largest admissible constant for one member at one radius, or `None` when
/// the area is zero.
pub fn admissible_constant(p: &PowerSeries, r: f64, gamma: f64) -> Result<Option<f64>> {
    let v = functional_theorem1(p, r, gamma, 1.0)?;
    if v.correction > 0.0 {
        Ok(Some((1.0 - v.majorant) / v.correction))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy)]
struct Best {
    k: f64,
    s: f64,
    r: f64,
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn scan(
    gamma: f64,
    cfg: &SearchConfig,
    (s_lo, s_hi): (f64, f64),
    (r_lo, r_hi): (f64, f64),
    best: &mut Option<Best>,
) -> Result<usize> {
    let mut cells = 0;
    for s in linspace(s_lo, s_hi, cfg.a_points) {
        let series = mobius_family_coeffs(&MobiusFamilyParams::new(a_of_s(s), gamma)?, cfg.order);
        for r in linspace(r_lo, r_hi, cfg.r_points) {
            cells += 1;
            if let Some(k) = admissible_constant(&series, r, gamma)? {
                if best.is_none_or(|b| k < b.k) {
                    *best = Some(Best { k, s, r });
                }
            }
        }
    }
    Ok(cells)
}

/// Infimum of the admissible constant over the Möbius family and, if given,
/// over the random samples composed onto `Ω_γ`.
pub fn estimate_constant(gamma: f64, cfg: &SearchConfig, augment: &[BlaschkeSample]) -> Result<ConstantEstimate> {
    check_gamma(gamma)?;
    cfg.validate()?;
    let rho = fournier_ruscheweyh_radius(gamma);
    let mut best = None;
    let mut cells = scan(gamma, cfg, (cfg.s_min, cfg.s_max), (MIN_RADIUS, rho), &mut best)?;
    let coarse = best.ok_or(Error::EmptyGrid)?;

    let mut s_half = 0.5 * (cfg.s_max - cfg.s_min);
    let mut r_half = 0.5 * (rho - MIN_RADIUS);
    for _ in 0..cfg.refinements {
        let b = best.ok_or(Error::EmptyGrid)?;
        s_half /= cfg.shrink;
        r_half /= cfg.shrink;
        let s_win = window(b.s, s_half, cfg.s_min, cfg.s_max);
        let r_win = window(b.r, r_half, MIN_RADIUS, rho);
        cells += scan(gamma, cfg, s_win, r_win, &mut best)?;
    }
    let fam = best.ok_or(Error::EmptyGrid)?;
    let mut estimate = ConstantEstimate {
        gamma,
        k_hat: fam.k,
        witness: Witness::Mobius { a: a_of_s(fam.s) },
        r_witness: fam.r,
        refinements: cfg.refinements,
        coarse_k_hat: coarse.k,
        cells,
    };

    for (index, sample) in augment.iter().enumerate() {
        let series = sample.series_on_omega(gamma, cfg.order)?;
        for r in linspace(MIN_RADIUS, rho, cfg.r_points) {
            estimate.cells += 1;
            if let Some(k) = admissible_constant(&series, r, gamma)? {
                if k < estimate.k_hat {
                    estimate.k_hat = k;
                    estimate.witness = Witness::Sample { index };
                    estimate.r_witness = r;
                }
            }
        }
    }
    Ok(estimate)
}

/// Interval of half-width `half` about `c`, shifted to lie inside `[lo, hi]`.
fn window(c: f64, half: f64, lo: f64, hi: f64) -> (f64, f64) {
    let width = (2.0 * half).min(hi - lo);
    let start = (c - half).max(lo).min(hi - width);
    (start, start + width)
}

/// The area functional with constant `K̂ + margin` at the witness.
pub fn witness_functional(
    est: &ConstantEstimate,
    order: usize,
    augment: &[BlaschkeSample],
    margin: f64,
) -> Result<FunctionalValue> {
    let series = match est.witness {
        Witness::Mobius { a } => mobius_family_coeffs(&MobiusFamilyParams::new(a, est.gamma)?, order),
        Witness::Sample { index } => augment
            .get(index)
            .ok_or(Error::EmptyGrid)?
            .series_on_omega(est.gamma, order)?,
    };
    functional_theorem1(&series, est.r_witness, est.gamma, est.k_hat + margin)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConjectureSweep {
    pub estimates: Vec<ConstantEstimate>,
    /// Adjacent index pairs `(i, i+1)` where the estimate does not decrease in `γ`.
    pub non_monotone: Vec<(usize, usize)>,
}

/// [`estimate_constant`] over a grid of `γ`, sequentially and in grid order.
pub fn sweep_conjecture(gammas: &[f64], cfg: &SearchConfig, augment: &[BlaschkeSample]) -> Result<ConjectureSweep> {
    if gammas.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let estimates = gammas
        .iter()
        .map(|&g| estimate_constant(g, cfg, augment))
        .collect::<Result<Vec<_>>>()?;
    let non_monotone = estimates
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1].k_hat >= w[0].k_hat)
        .map(|(i, _)| (i, i + 1))
        .collect();
    Ok(ConjectureSweep {
        estimates,
        non_monotone,
    })
}
