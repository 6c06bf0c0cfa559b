//! Bohr-type functionals evaluated at a radius `r`.
//!
//! Every evaluator returns the truncated sum together with a rigorous bound on
//! what the unstored coefficients could add, taken from the series' tail
//! envelope. Series without an envelope contribute `tail_error = 0`; the
//! truncation effect is then unbounded and the caller is responsible for it.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use crate::series::PowerSeries;
use crate::{check_gamma, check_radius, Error, Result};

/// A truncated sum with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub tail_error: f64,
}

/// Result of a Bohr-type functional at radius `r`.
///
/// `total = majorant + correction`, and the true value lies in
/// `[total, total + tail_error]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FunctionalValue {
    pub total: f64,
    pub majorant: f64,
    pub correction: f64,
    pub r: f64,
    pub tail_error: f64,
}

impl FunctionalValue {
    fn new(r: f64, majorant: Estimate, correction: Estimate) -> Self {
        FunctionalValue {
            total: majorant.value + correction.value,
            majorant: majorant.value,
            correction: correction.value,
            r,
            tail_error: majorant.tail_error + correction.tail_error,
        }
    }

    /// `total + tail_error ≤ 1`, the unsafe-side reading of "≤ 1".
    pub fn within_one(&self) -> bool {
        self.total + self.tail_error <= 1.0
    }
}

/// `Σ |a_n| rⁿ`.
pub fn majorant(p: &PowerSeries, r: f64) -> Result<Estimate> {
    check_radius(r)?;
    Ok(majorant_from(p, r, 0))
}

fn majorant_from(p: &PowerSeries, r: f64, start: usize) -> Estimate {
    let mut value = 0.0;
    let mut rn = 1.0;
    for (n, c) in p.coeffs().iter().enumerate() {
        if n >= start {
            value += c.norm() * rn;
        }
        rn *= r;
    }
    Estimate {
        value,
        tail_error: p.tail().map_or(0.0, |t| t.majorant_tail(p.order(), r)),
    }
}

/// `Σ_{n≥1} n |a_n|² r^{2n}`: the image area of `|z| < r` over `π`, counted
/// with multiplicity.
pub fn dirichlet_area(p: &PowerSeries, r: f64) -> Result<Estimate> {
    check_radius(r)?;
    let r2 = r * r;
    let mut value = 0.0;
    let mut r2n = 1.0;
    for (n, c) in p.coeffs().iter().enumerate().skip(1) {
        r2n *= r2;
        value += n as f64 * c.norm_sqr() * r2n;
    }
    Ok(Estimate {
        value,
        tail_error: p.tail().map_or(0.0, |t| t.weighted_square_tail(p.order(), r)),
    })
}

/// `(1 − |a_0|²)² r² / (1 − r²)²`, the Schwarz–Pick bound on [`dirichlet_area`].
pub fn area_upper_bound(a0_abs: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&a0_abs) {
        return Err(Error::Domain {
            what: "|a_0| must lie in [0, 1]",
            value: a0_abs,
        });
    }
    check_radius(r)?;
    let s = 1.0 - a0_abs * a0_abs;
    let d = 1.0 - r * r;
    Ok(s * s * r * r / (d * d))
}

/// `‖f_0‖_r = Σ_{n≥1} |a_n|² r^{2n}`.
pub fn norm_f0(p: &PowerSeries, r: f64) -> Result<Estimate> {
    check_radius(r)?;
    let r2 = r * r;
    let mut value = 0.0;
    let mut r2n = 1.0;
    for c in p.coeffs().iter().skip(1) {
        r2n *= r2;
        value += c.norm_sqr() * r2n;
    }
    Ok(Estimate {
        value,
        tail_error: p.tail().map_or(0.0, |t| t.square_tail(p.order(), r)),
    })
}

/// The classical majorant `M_f(r)` as a functional with no correction term.
pub fn functional_majorant(p: &PowerSeries, r: f64) -> Result<FunctionalValue> {
    let m = majorant(p, r)?;
    Ok(FunctionalValue::new(r, m, Estimate { value: 0.0, tail_error: 0.0 }))
}

/// Constant of the area-improved inequality.
pub const AREA_CONSTANT: f64 = 8.0 / 9.0;

/// `Σ |a_n| rⁿ + K · S_{r(1−γ)}/π`, the area taken over `|z| < r(1−γ)`.
pub fn functional_theorem1(p: &PowerSeries, r: f64, gamma: f64, k: f64) -> Result<FunctionalValue> {
    check_gamma(gamma)?;
    if !(k >= 0.0 && k.is_finite()) {
        return Err(Error::Domain {
            what: "area constant K must be finite and non-negative",
            value: k,
        });
    }
    let m = majorant(p, r)?;
    let area = dirichlet_area(p, r * (1.0 - gamma))?;
    Ok(FunctionalValue::new(
        r,
        m,
        Estimate {
            value: k * area.value,
            tail_error: k * area.tail_error,
        },
    ))
}

/// `Σ |a_n| rⁿ + (1/(1+|a_0|) + r/(1−r)) ‖f_0‖_r`.
pub fn functional_theorem2(p: &PowerSeries, r: f64) -> Result<FunctionalValue> {
    let m = majorant(p, r)?;
    let norm = norm_f0(p, r)?;
    let weight = 1.0 / (1.0 + p.coeff(0).norm()) + r / (1.0 - r);
    Ok(FunctionalValue::new(
        r,
        m,
        Estimate {
            value: weight * norm.value,
            tail_error: weight * norm.tail_error,
        },
    ))
}

/// `2((1+λ)/(1+2λ))²`, the area weight of [`functional_theorem3`].
pub fn lambda_area_weight(lambda: f64) -> f64 {
    let w = (1.0 + lambda) / (1.0 + 2.0 * lambda);
    2.0 * w * w
}

/// `B_1(r) = Σ |a_n| rⁿ + 2((1+λ)/(1+2λ))² S_r/π`.
pub fn functional_theorem3(p: &PowerSeries, r: f64, lambda: f64) -> Result<FunctionalValue> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::Domain {
            what: "lambda must be positive",
            value: lambda,
        });
    }
    let m = majorant(p, r)?;
    let area = dirichlet_area(p, r)?;
    let w = lambda_area_weight(lambda);
    Ok(FunctionalValue::new(
        r,
        m,
        Estimate {
            value: w * area.value,
            tail_error: w * area.tail_error,
        },
    ))
}

/// `Σ |a_n| rⁿ + Σ_{n≥1} |b_n| rⁿ` for `f = h + conj(g)`; `b_0` is ignored.
pub fn functional_theorem4(h: &PowerSeries, g: &PowerSeries, r: f64) -> Result<FunctionalValue> {
    let m = majorant(h, r)?;
    let co = majorant_from(g, r, 1);
    Ok(FunctionalValue::new(r, m, co))
}
