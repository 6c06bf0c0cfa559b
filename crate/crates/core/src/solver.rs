//! Sharp radii by bisection on monotone functionals.
//!
//! A functional `F(r)` is accepted at `r` when `total + tail_error ≤ 1`. All
//! functionals in this crate are power series in `r` with non-negative
//! coefficients, so acceptance is a down-set of `[0, 1)` and bisection finds its
//! supremum.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::vec::Vec;


use crate::functionals::FunctionalValue;
use crate::{Error, Result};

/// Upper end of the bisection bracket.
pub const RADIUS_CEILING: f64 = 1.0 - 1e-6;

/// Default absolute tolerance on a per-function radius.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Number of extra points placed around the family argmin.
const REFINEMENT_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RadiusResult {
    /// Largest radius known to satisfy the inequality.
    pub radius: f64,
    /// `(lo, hi)`: `lo` accepted, `hi` rejected (or the ceiling when unconstrained).
    pub bracket: (f64, f64),
    pub tol: f64,
    pub iterations: usize,
    /// The functional never exceeded 1 on `[0, RADIUS_CEILING]`.
    pub unconstrained: bool,
    /// Family parameter `a` realising the infimum, for family searches.
    pub witness: Option<f64>,
    /// Change of the family infimum across the last refinement pass.
    pub grid_error: f64,
    /// Whether per-member radii were nonincreasing in `a`; `None` for a single function.
    pub monotone_in_a: Option<bool>,
    /// Number of family members whose radius was computed.
    pub members: usize,
}

impl RadiusResult {
    /// `tol + grid_error`.
    pub fn combined_tol(&self) -> f64 {
        self.tol + self.grid_error
    }
}

fn accepted(v: &FunctionalValue) -> bool {
    v.within_one()
}

/// Largest `r ∈ [0, RADIUS_CEILING]` with `F(r) + tail ≤ 1`, to within `tol`.
///
/// On a plateau where `F ≡ 1` the supremum end is returned.
pub fn bohr_radius_of_function<F>(functional: F, tol: f64) -> Result<RadiusResult>
where
    F: Fn(f64) -> Result<FunctionalValue>,
{
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain {
            what: "tolerance must be positive",
            value: tol,
        });
    }
    let at_zero = functional(0.0)?;
    if !accepted(&at_zero) {
        return Err(Error::NoRadius {
            value_at_zero: at_zero.total + at_zero.tail_error,
        });
    }
    if accepted(&functional(RADIUS_CEILING)?) {
        return Ok(RadiusResult {
            radius: RADIUS_CEILING,
            bracket: (RADIUS_CEILING, RADIUS_CEILING),
            tol,
            iterations: 0,
            unconstrained: true,
            witness: None,
            grid_error: 0.0,
            monotone_in_a: None,
            members: 1,
        });
    }
    let (mut lo, mut hi) = (0.0, RADIUS_CEILING);
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if accepted(&functional(mid)?) {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(RadiusResult {
        radius: lo,
        bracket: (lo, hi),
        tol,
        iterations,
        unconstrained: false,
        witness: None,
        grid_error: 0.0,
        monotone_in_a: None,
        members: 1,
    })
}

/// Infimum of per-member radii over a family indexed by `a`.
///
/// `member(a)` binds the functional to one family member. After the grid
/// pass, [`REFINEMENT_POINTS`] points are placed between the neighbours of the
/// argmin (towards `a = 1` when the argmin is the largest grid value) and the
/// minimum is taken again; `grid_error` is the change this caused.
pub fn family_infimum_radius<B, F>(grid: &[f64], member: B, tol: f64) -> Result<RadiusResult>
where
    B: Fn(f64) -> Result<F>,
    F: Fn(f64) -> Result<FunctionalValue>,
{
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut sorted: Vec<f64> = grid.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();

    let radii = sorted
        .iter()
        .map(|&a| bohr_radius_of_function(member(a)?, tol))
        .collect::<Result<Vec<_>>>()?;
    let monotone = radii
        .windows(2)
        .all(|w| w[1].radius <= w[0].radius + 2.0 * tol);
    let (mut best_idx, mut best) = (0, radii[0].clone());
    for (i, r) in radii.iter().enumerate() {
        if r.radius < best.radius {
            best_idx = i;
            best = r.clone();
        }
    }
    let mut witness = sorted[best_idx];
    let mut members = radii.len();
    let mut grid_error = 0.0;

    if sorted.len() > 1 {
        let lo = if best_idx > 0 {
            sorted[best_idx - 1]
        } else {
            0.5 * sorted[0]
        };
        let hi = if best_idx + 1 < sorted.len() {
            sorted[best_idx + 1]
        } else {
            0.5 * (sorted[best_idx] + 1.0)
        };
        let before = best.radius;
        for i in 1..=REFINEMENT_POINTS {
            let a = lo + (hi - lo) * i as f64 / (REFINEMENT_POINTS + 1) as f64;
            let r = bohr_radius_of_function(member(a)?, tol)?;
            members += 1;
            if r.radius < best.radius {
                best = r;
                witness = a;
            }
        }
        grid_error = (before - best.radius).abs();
    }

    Ok(RadiusResult {
        witness: Some(witness),
        grid_error,
        monotone_in_a: Some(monotone),
        members,
        ..best
    })
}

/// Upper bound on bisection steps for a given tolerance.
pub fn max_iterations(tol: f64) -> usize {
    (1.0 / tol).log2().ceil() as usize + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremals::{mobius_family_coeffs, sharpness_a_grid, MobiusFamilyParams, SHARPNESS_GRID_DEPTH};
    use crate::functionals::functional_majorant;
    use crate::series::{PowerSeries, DEFAULT_ORDER};
    use crate::C64;

    type Member = alloc::boxed::Box<dyn Fn(f64) -> Result<FunctionalValue>>;

    fn mobius_member(gamma: f64) -> impl Fn(f64) -> Result<Member> {
        move |a| {
            let s = mobius_family_coeffs(&MobiusFamilyParams::new(a, gamma)?, DEFAULT_ORDER);
            Ok(alloc::boxed::Box::new(move |r| functional_majorant(&s, r)))
        }
    }

    #[test]
    fn constant_half_is_unconstrained() {
        let p = PowerSeries::constant(C64::new(0.5, 0.0), 4);
        let res = bohr_radius_of_function(|r| functional_majorant(&p, r), DEFAULT_TOL).unwrap();
        assert!(res.unconstrained);
        assert_eq!(res.radius, RADIUS_CEILING);
    }

    #[test]
    fn unimodular_constant_returns_plateau_end() {
        let p = PowerSeries::constant(C64::new(1.0, 0.0), 4);
        let res = bohr_radius_of_function(|r| functional_majorant(&p, r), DEFAULT_TOL).unwrap();
        assert!(res.unconstrained);
    }

    #[test]
    fn above_one_at_origin_is_an_error() {
        let p = PowerSeries::constant(C64::new(1.5, 0.0), 4);
        assert!(matches!(
            bohr_radius_of_function(|r| functional_majorant(&p, r), DEFAULT_TOL),
            Err(Error::NoRadius { .. })
        ));
    }

    #[test]
    fn classical_radius_from_one_function() {
        let s = mobius_family_coeffs(&MobiusFamilyParams::new(1.0 - 1.0 / 1024.0, 0.0).unwrap(), DEFAULT_ORDER);
        let res = bohr_radius_of_function(|r| functional_majorant(&s, r), DEFAULT_TOL).unwrap();
        assert!((res.radius - 1.0 / 3.0).abs() < 1e-2);
        assert!(res.bracket.0 <= res.radius && res.radius <= res.bracket.1);
        assert!(res.bracket.1 - res.bracket.0 <= res.tol);
        assert!(res.iterations <= max_iterations(res.tol));
        assert!(functional_majorant(&s, res.radius - res.tol).unwrap().within_one());
        assert!(functional_majorant(&s, res.radius + res.tol).unwrap().total > 1.0);
    }

    #[test]
    fn fournier_ruscheweyh_from_one_function() {
        let s = mobius_family_coeffs(&MobiusFamilyParams::new(1.0 - 1.0 / 1024.0, 0.5).unwrap(), DEFAULT_ORDER);
        let res = bohr_radius_of_function(|r| functional_majorant(&s, r), DEFAULT_TOL).unwrap();
        assert!((res.radius - 3.0 / 7.0).abs() < 1e-2);
    }

    #[test]
    fn family_search_classical() {
        let res = family_infimum_radius(&sharpness_a_grid(SHARPNESS_GRID_DEPTH), mobius_member(0.0), DEFAULT_TOL).unwrap();
        assert!((res.radius - 1.0 / 3.0).abs() < 1e-3);
        assert_eq!(res.monotone_in_a, Some(true));
        assert!(res.witness.unwrap() > 0.9999);
        assert_eq!(res.members, 14 + REFINEMENT_POINTS);
        let w = res.witness.unwrap();
        let s = mobius_family_coeffs(&MobiusFamilyParams::new(w, 0.0).unwrap(), DEFAULT_ORDER);
        assert!(functional_majorant(&s, res.radius + 2.0 * res.tol).unwrap().total > 1.0);
    }

    #[test]
    fn single_member_family_is_the_function_radius() {
        let fam = family_infimum_radius(&[0.7], mobius_member(0.2), DEFAULT_TOL).unwrap();
        let s = mobius_family_coeffs(&MobiusFamilyParams::new(0.7, 0.2).unwrap(), DEFAULT_ORDER);
        let one = bohr_radius_of_function(|r| functional_majorant(&s, r), DEFAULT_TOL).unwrap();
        assert_eq!(fam.radius, one.radius);
        assert_eq!(fam.grid_error, 0.0);
        assert_eq!(fam.witness, Some(0.7));
    }

    #[test]
    fn empty_family_and_bad_tolerance() {
        assert_eq!(
            family_infimum_radius(&[], mobius_member(0.0), DEFAULT_TOL).unwrap_err(),
            Error::EmptyGrid
        );
        let p = PowerSeries::constant(C64::new(0.5, 0.0), 1);
        assert!(bohr_radius_of_function(|r| functional_majorant(&p, r), 0.0).is_err());
    }
}
