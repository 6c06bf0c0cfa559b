//! Which functional and family each theorem is tested with, and the
//! closed-form radius it is compared against.

use std::fmt;

use bohr_core::extremals::{
    harmonic_extremal, mobius_family_coeffs, sharpness_a_grid, HarmonicExtremalParams, MobiusFamilyParams,
    SHARPNESS_GRID_DEPTH,
};
use bohr_core::functionals::{
    functional_majorant, functional_theorem1, functional_theorem2, functional_theorem3, functional_theorem4,
    FunctionalValue, AREA_CONSTANT,
};
use bohr_core::series::DEFAULT_ORDER;
use bohr_core::solver::{family_infimum_radius, RadiusResult};
use bohr_core::{fournier_ruscheweyh_radius, harmonic_radius};
use serde::{Deserialize, Serialize};

use crate::formats::{FunctionalRow, RadiusRow};

/// Largest accepted gap between computed and closed-form radius.
pub const RADIUS_DIFF_LIMIT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum Theorem {
    #[value(name = "A")]
    #[serde(rename = "A")]
    A,
    #[value(name = "B")]
    #[serde(rename = "B")]
    B,
    #[value(name = "1")]
    #[serde(rename = "1")]
    One,
    #[value(name = "2")]
    #[serde(rename = "2")]
    Two,
    #[value(name = "3")]
    #[serde(rename = "3")]
    Three,
    #[value(name = "4")]
    #[serde(rename = "4")]
    Four,
    #[value(name = "corollary")]
    #[serde(rename = "corollary")]
    Corollary,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::A,
        Theorem::B,
        Theorem::One,
        Theorem::Two,
        Theorem::Three,
        Theorem::Four,
        Theorem::Corollary,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::A => "A",
            Theorem::B => "B",
            Theorem::One => "1",
            Theorem::Two => "2",
            Theorem::Three => "3",
            Theorem::Four => "4",
            Theorem::Corollary => "corollary",
        }
    }

    fn harmonic(self) -> bool {
        matches!(self, Theorem::Four | Theorem::Corollary)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Parameters after theorem-specific defaults are applied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub gamma: f64,
    /// Dilatation bound; harmonic theorems only.
    pub k: Option<f64>,
    /// `λ(Ω)` for theorem 3, the mixing factor of the harmonic extremal for 4.
    pub lambda: Option<f64>,
    #[serde(rename = "K")]
    pub area_constant: Option<f64>,
}

impl TheoremParams {
    /// Fills defaults: `γ = 0` for A, `k = 1` for the corollary (and `k = 0`
    /// otherwise), `λ = 1/(1+γ)` for 3, mixing `λ = 1` for 4, `K = 8/9` for 1.
    pub fn resolve(theorem: Theorem, gamma: f64, k: Option<f64>, lambda: Option<f64>, area_constant: Option<f64>) -> Self {
        let gamma = if theorem == Theorem::A { 0.0 } else { gamma };
        let k = match theorem {
            Theorem::Corollary => Some(1.0),
            Theorem::Four => Some(k.unwrap_or(0.0)),
            _ => None,
        };
        let lambda = match theorem {
            Theorem::Three => Some(lambda.unwrap_or(1.0 / (1.0 + gamma))),
            Theorem::Four | Theorem::Corollary => Some(lambda.unwrap_or(1.0)),
            _ => None,
        };
        let area_constant = (theorem == Theorem::One).then(|| area_constant.unwrap_or(AREA_CONSTANT));
        TheoremParams {
            gamma,
            k,
            lambda,
            area_constant,
        }
    }
}

/// The radius each theorem asserts.
pub fn closed_form_radius(theorem: Theorem, p: &TheoremParams) -> f64 {
    match theorem {
        Theorem::A => 1.0 / 3.0,
        Theorem::B | Theorem::One | Theorem::Two => fournier_ruscheweyh_radius(p.gamma),
        Theorem::Three => 1.0 / (1.0 + 2.0 * p.lambda.unwrap_or(1.0)),
        Theorem::Four | Theorem::Corollary => harmonic_radius(p.gamma, p.k.unwrap_or(0.0)),
    }
}

pub type Functional = Box<dyn Fn(f64) -> bohr_core::Result<FunctionalValue>>;

/// The theorem's functional bound to the extremal with parameter `a`.
pub fn member_functional(theorem: Theorem, p: &TheoremParams, a: f64, order: usize) -> bohr_core::Result<Functional> {
    let gamma = p.gamma;
    if theorem.harmonic() {
        let hp = HarmonicExtremalParams::new(a, gamma, p.k.unwrap_or(0.0), p.lambda.unwrap_or(1.0))?;
        let (h, g) = harmonic_extremal(&hp, order);
        return Ok(Box::new(move |r| functional_theorem4(&h, &g, r)));
    }
    let s = mobius_family_coeffs(&MobiusFamilyParams::new(a, gamma)?, order);
    Ok(match theorem {
        Theorem::One => {
            let k = p.area_constant.unwrap_or(AREA_CONSTANT);
            Box::new(move |r| functional_theorem1(&s, r, gamma, k))
        }
        Theorem::Two => Box::new(move |r| functional_theorem2(&s, r)),
        Theorem::Three => {
            let lambda = p.lambda.unwrap_or(1.0);
            Box::new(move |r| functional_theorem3(&s, r, lambda))
        }
        _ => Box::new(move |r| functional_majorant(&s, r)),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport {
    pub theorem: Theorem,
    pub params: TheoremParams,
    pub result: RadiusResult,
    pub closed_form: f64,
    pub diff: f64,
}

impl RadiusReport {
    pub fn passed(&self) -> bool {
        self.diff <= RADIUS_DIFF_LIMIT
    }

    pub fn row(&self) -> RadiusRow {
        RadiusRow {
            gamma: self.params.gamma,
            k: self.params.k,
            lambda: self.params.lambda,
            functional_id: self.theorem.id().to_string(),
            radius: self.result.radius,
            tol: self.result.combined_tol(),
        }
    }
}

/// Infimum over the sharpness grid `a = 1 − 2⁻ʲ` of the per-member radius.
pub fn theorem_radius(theorem: Theorem, p: &TheoremParams, tol: f64) -> bohr_core::Result<RadiusReport> {
    let grid = sharpness_a_grid(SHARPNESS_GRID_DEPTH);
    let result = family_infimum_radius(&grid, |a| member_functional(theorem, p, a, DEFAULT_ORDER), tol)?;
    let closed_form = closed_form_radius(theorem, p);
    Ok(RadiusReport {
        theorem,
        params: *p,
        diff: (result.radius - closed_form).abs(),
        closed_form,
        result,
    })
}

/// The functional on every `(a, r)` pair of the grids.
pub fn functional_grid(
    theorem: Theorem,
    p: &TheoremParams,
    a_grid: &[f64],
    r_grid: &[f64],
) -> bohr_core::Result<Vec<FunctionalRow>> {
    let mut rows = Vec::with_capacity(a_grid.len() * r_grid.len());
    for &a in a_grid {
        let f = member_functional(theorem, p, a, DEFAULT_ORDER)?;
        for &r in r_grid {
            rows.push(FunctionalRow::new(p, a, &f(r)?));
        }
    }
    Ok(rows)
}

/// `n` evenly spaced radii on `[0, r_max]`.
pub fn radius_grid(r_max: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| r_max * i as f64 / (n - 1).max(1) as f64).collect()
}
