//! Scalar closed forms that appear inside the proofs: the auxiliary functions
//! whose sign or monotonicity carries each argument, and the sharpness
//! deficits `Φ` of the extremal family.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use crate::{check_gamma, check_radius, Error, Result};

fn check_unit(what: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain { what, value: x })
    }
}

fn check_family(a: f64, gamma: f64) -> Result<()> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain {
            what: "family parameter a must lie in (0, 1)",
            value: a,
        });
    }
    check_gamma(gamma)
}

fn positive(what: &'static str, x: f64) -> Result<f64> {
    if x > 0.0 {
        Ok(x)
    } else {
        Err(Error::Domain { what, value: x })
    }
}

/// `(1−γ²)/(3+γ)`, the radius of the recentred inequality.
pub fn lemma1_radius(gamma: f64) -> f64 {
    (1.0 - gamma * gamma) / (3.0 + gamma)
}

/// `Ψ(r) = |α_0| + (1−|α_0|²) r/((1+γ)(1−γ−r)) + K (1−|α_0|²)² r²/(1−r²)² − 1`
/// for `0 ≤ r < 1−γ`.
pub fn psi_lemma1(r: f64, alpha0_abs: f64, gamma: f64, k: f64) -> Result<f64> {
    check_gamma(gamma)?;
    check_unit("|alpha_0| must lie in [0, 1]", alpha0_abs)?;
    if !(r >= 0.0 && r < 1.0 - gamma) {
        return Err(Error::Domain {
            what: "psi_lemma1 needs 0 <= r < 1 - gamma",
            value: r,
        });
    }
    let s = 1.0 - alpha0_abs * alpha0_abs;
    let d = 1.0 - r * r;
    Ok(alpha0_abs + s * r / ((1.0 + gamma) * (1.0 - gamma - r)) + k * s * s * r * r / (d * d) - 1.0)
}

/// `A(γ) = (3+γ)(1−γ²) / ((3+γ)² − (1−γ²)²)`, defined on `[0, 1]`.
pub fn a_gamma(gamma: f64) -> Result<f64> {
    check_unit("gamma must lie in [0, 1]", gamma)?;
    let p = 3.0 + gamma;
    let s = 1.0 - gamma * gamma;
    Ok(p * s / (p * p - s * s))
}

/// `F(x) = 1 + 2K A²(γ)(1−x²) − 2/(1+x)` on `x ∈ [0, 1]`.
pub fn f_lemma1(x: f64, gamma: f64, k: f64) -> Result<f64> {
    check_unit("x must lie in [0, 1]", x)?;
    let a = a_gamma(gamma)?;
    Ok(1.0 + 2.0 * k * a * a * (1.0 - x * x) - 2.0 / (1.0 + x))
}

/// Coefficients of `u(a) = a + A(1−a²) + B(1−a)(1−a²) + C(1−a²)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl UCoefficients {
    /// `A = r/((1+γ)(1−r))`, `B = r²/((1+γ)²(1−r²))`, `C = r³/((1+γ)²(1−r)(1−r²))`.
    pub fn new(r: f64, gamma: f64) -> Result<Self> {
        check_radius(r)?;
        check_gamma(gamma)?;
        let g = 1.0 + gamma;
        Ok(UCoefficients {
            a: r / (g * (1.0 - r)),
            b: r * r / (g * g * (1.0 - r * r)),
            c: r * r * r / (g * g * (1.0 - r) * (1.0 - r * r)),
        })
    }

    pub fn u(&self, a: f64) -> f64 {
        let s = 1.0 - a * a;
        a + self.a * s + self.b * (1.0 - a) * s + self.c * s * s
    }

    pub fn u_prime(&self, a: f64) -> f64 {
        1.0 - 2.0 * self.a * a + self.b * (3.0 * a * a - 2.0 * a - 1.0) + 4.0 * self.c * (a * a * a - a)
    }

    pub fn u_second(&self, a: f64) -> f64 {
        -2.0 * self.a + 2.0 * self.b * (3.0 * a - 1.0) + 4.0 * self.c * (3.0 * a * a - 1.0)
    }
}

/// `u(a)` for the given radius and `γ`.
pub fn u_thm2(a: f64, r: f64, gamma: f64) -> Result<f64> {
    check_unit("a must lie in [0, 1]", a)?;
    Ok(UCoefficients::new(r, gamma)?.u(a))
}

/// `Ψ(r) = (1+r)(r(3+γ) − (1+γ))`.
pub fn psi_thm2(r: f64, gamma: f64) -> f64 {
    (1.0 + r) * (r * (3.0 + gamma) - (1.0 + gamma))
}

/// `F(x) = 8/(1+x) − 5 + x²`.
pub fn f_thm3(x: f64) -> f64 {
    8.0 / (1.0 + x) - 5.0 + x * x
}

/// `r_0(a) = (1+γ)/(1+γ+(1+a)(1+k))`.
pub fn r0_thm4(a: f64, gamma: f64, k: f64) -> f64 {
    (1.0 + gamma) / (1.0 + gamma + (1.0 + a) * (1.0 + k))
}

/// Sharpness deficit of the area functional on the Möbius family:
/// the functional equals `1 − (1−a) Φ(r)` when `a > γ`.
pub fn phi_thm1(r: f64, a: f64, gamma: f64, k: f64) -> Result<f64> {
    check_family(a, gamma)?;
    check_radius(r)?;
    let ag = 1.0 - a * gamma;
    let g1 = 1.0 - gamma;
    let g4 = g1 * g1 * g1 * g1;
    let lin = positive("1 - a*gamma - a*r*(1-gamma) must be positive", ag - a * r * g1)?;
    let quad = positive("(1-a*gamma)^2 - a^2 r^2 (1-gamma)^4 must be positive", ag * ag - a * a * r * r * g4)?;
    Ok((1.0 + gamma) / ag - (1.0 + a) / ag * r * g1 / lin
        - k * (1.0 - a) * (1.0 + a) * (1.0 + a) * g4 * r * r / (quad * quad))
}

/// Sharpness deficit of the `‖f_0‖_r` functional: the functional equals
/// `1 − (1−a)/(1−aγ) Φ(r)` when `a > γ`.
pub fn phi_thm2(r: f64, a: f64, gamma: f64) -> Result<f64> {
    check_family(a, gamma)?;
    check_radius(r)?;
    let ag = 1.0 - a * gamma;
    let g1 = 1.0 - gamma;
    let lin = positive("1 - a*gamma - a*(1-gamma)*r must be positive", ag - a * g1 * r)?;
    let quad = positive("(1-a*gamma)^2 - a^2 (1-gamma)^2 r^2 must be positive", ag * ag - a * a * g1 * g1 * r * r)?;
    let weight = ag / ((1.0 + a) * g1) + r / (1.0 - r);
    Ok(1.0 + gamma - (1.0 + a) * g1 * r / lin
        - weight * (1.0 + a) * (1.0 - a * a) / ag * g1 * g1 * r * r / quad)
}

/// Which multiplier the harmonic deficit uses.
///
/// With `b_n = −kλ A_n` the majorant sum carries `(1+kλ)`; the printed form of
/// the deficit carries `(1+λ)`. The two agree only when `k = 1` (or `λ = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Phi4Convention {
    /// `(1 + kλ)`, consistent with `f_0 = h_0 + conj(kλ(h_0 − A_0))`.
    KLambda,
    /// `(1 + λ)`, as printed next to the deficit.
    Lambda,
}

/// Sharpness deficit of the harmonic functional: `N(r) = 1 − (1−a)/(1−aγ) Φ(r)`.
pub fn phi_thm4(r: f64, a: f64, gamma: f64, k: f64, lambda: f64, convention: Phi4Convention) -> Result<f64> {
    check_family(a, gamma)?;
    check_radius(r)?;
    let ag = 1.0 - a * gamma;
    let g1 = 1.0 - gamma;
    let lin = positive("1 - a*gamma - a*(1-gamma)*r must be positive", ag - a * g1 * r)?;
    let mult = match convention {
        Phi4Convention::KLambda => 1.0 + k * lambda,
        Phi4Convention::Lambda => 1.0 + lambda,
    };
    Ok(1.0 + gamma - mult * (1.0 + a) * g1 * r / lin)
}

/// `1 − (1−a) Φ₁(r)`.
pub fn theorem1_from_phi(r: f64, a: f64, gamma: f64, k: f64) -> Result<f64> {
    Ok(1.0 - (1.0 - a) * phi_thm1(r, a, gamma, k)?)
}

/// `1 − (1−a)/(1−aγ) Φ₂(r)`.
pub fn theorem2_from_phi(r: f64, a: f64, gamma: f64) -> Result<f64> {
    Ok(1.0 - (1.0 - a) / (1.0 - a * gamma) * phi_thm2(r, a, gamma)?)
}

/// `1 − (1−a)/(1−aγ) Φ₄(r)`.
pub fn theorem4_from_phi(r: f64, a: f64, gamma: f64, k: f64, lambda: f64, convention: Phi4Convention) -> Result<f64> {
    Ok(1.0 - (1.0 - a) / (1.0 - a * gamma) * phi_thm4(r, a, gamma, k, lambda, convention)?)
}

/// Evaluate a closed form by name. Parameter order follows the function
/// signatures in this module; `u_thm2` takes `(a, r, γ)`.
pub fn proof_internal(name: &str, params: &[f64]) -> Result<f64> {
    let arity = match name {
        "f_thm3" | "a_gamma" => 1,
        "psi_thm2" => 2,
        "f_lemma1" | "u_thm2" | "r0_thm4" | "phi_thm2" => 3,
        "psi_lemma1" | "phi_thm1" => 4,
        "phi_thm4" | "phi_thm4_printed" => 5,
        _ => return Err(Error::UnknownName),
    };
    if params.len() != arity {
        return Err(Error::Domain {
            what: "wrong number of parameters for closed form",
            value: params.len() as f64,
        });
    }
    let p = params;
    match name {
        "psi_lemma1" => psi_lemma1(p[0], p[1], p[2], p[3]),
        "f_lemma1" => f_lemma1(p[0], p[1], p[2]),
        "a_gamma" => a_gamma(p[0]),
        "u_thm2" => u_thm2(p[0], p[1], p[2]),
        "psi_thm2" => Ok(psi_thm2(p[0], p[1])),
        "f_thm3" => Ok(f_thm3(p[0])),
        "r0_thm4" => Ok(r0_thm4(p[0], p[1], p[2])),
        "phi_thm1" => phi_thm1(p[0], p[1], p[2], p[3]),
        "phi_thm2" => phi_thm2(p[0], p[1], p[2]),
        "phi_thm4" => phi_thm4(p[0], p[1], p[2], p[3], p[4], Phi4Convention::KLambda),
        "phi_thm4_printed" => phi_thm4(p[0], p[1], p[2], p[3], p[4], Phi4Convention::Lambda),
        _ => unreachable!(),
    }
}
