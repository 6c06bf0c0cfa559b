//! Truncated complex power series about the origin.
//!
//! A [`PowerSeries`] stores `a_0 … a_N` and, optionally, a proven geometric
//! envelope `|a_n| ≤ C·qⁿ` for the coefficients it does not store. The
//! envelope is what lets the functionals report a rigorous truncation error.
//! `tail == None` means no bound is known (e.g. coefficients recovered by
//! [`numeric_taylor`]); exact polynomials carry `q = C = 0`.

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::{check_gamma, Error, Result, C64};

/// Truncation order used for every extremal-family series unless overridden.
pub const DEFAULT_ORDER: usize = 2048;

/// Radius of the sampling circle used by [`numeric_taylor`] by default.
pub const DEFAULT_SAMPLING_RADIUS: f64 = 0.5;

/// Geometric envelope `|a_n| ≤ C·qⁿ` for the unstored coefficients `n > N`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TailBound {
    pub q: f64,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    pub c: f64,
}

impl TailBound {
    /// Envelope of an exact polynomial: every unstored coefficient is zero.
    pub const EXACT: TailBound = TailBound { q: 0.0, c: 0.0 };

    pub fn new(q: f64, c: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&q) {
            return Err(Error::Domain {
                what: "tail ratio q must lie in [0, 1)",
                value: q,
            });
        }
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::Domain {
                what: "tail constant C must be finite and non-negative",
                value: c,
            });
        }
        Ok(TailBound { q, c })
    }

    pub fn bound(&self, n: usize) -> f64 {
        self.c * powu(self.q, n)
    }

    /// `Σ_{n>N} C (q r)ⁿ`.
    pub fn majorant_tail(&self, order: usize, r: f64) -> f64 {
        let x = self.q * r;
        if self.c == 0.0 || x == 0.0 {
            return 0.0;
        }
        self.c * powu(x, order + 1) / (1.0 - x)
    }

    /// `Σ_{n>N} C² (q r)^{2n}`.
    pub fn square_tail(&self, order: usize, r: f64) -> f64 {
        let x = (self.q * r) * (self.q * r);
        if self.c == 0.0 || x == 0.0 {
            return 0.0;
        }
        self.c * self.c * powu(x, order + 1) / (1.0 - x)
    }

    /// `Σ_{n>N} n C² (q r)^{2n}`.
    pub fn weighted_square_tail(&self, order: usize, r: f64) -> f64 {
        let x = (self.q * r) * (self.q * r);
        if self.c == 0.0 || x == 0.0 {
            return 0.0;
        }
        let n = order as f64;
        self.c * self.c * powu(x, order + 1) * ((n + 1.0) - n * x) / ((1.0 - x) * (1.0 - x))
    }
}

pub(crate) fn powu(x: f64, n: usize) -> f64 {
    match i32::try_from(n) {
        Ok(n) => x.powi(n),
        Err(_) => x.powf(n as f64),
    }
}

/// Upper bound of `max_{n≥0} (n+1) tⁿ` for `t ∈ [0, 1)`.
fn linear_growth_bound(t: f64) -> f64 {
    if t <= 0.0 {
        return 1.0;
    }
    // continuous maximum of (x+1) t^x sits at x+1 = -1/ln t
    let l = -t.ln();
    (1.0 / (core::f64::consts::E * t * l)).max(1.0)
}

/// Truncated power series `Σ_{n≤N} a_n zⁿ` with optional tail envelope.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(into = "SeriesRepr", try_from = "SeriesRepr")
)]
pub struct PowerSeries {
    coeffs: Vec<C64>,
    tail: Option<TailBound>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<C64>, tail: Option<TailBound>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain {
                what: "a series needs at least the constant coefficient",
                value: 0.0,
            });
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite {
                what: "series coefficients",
            });
        }
        if let Some(t) = tail {
            TailBound::new(t.q, t.c)?;
        }
        Ok(PowerSeries { coeffs, tail })
    }

    /// Exact polynomial padded with zeros up to `order` (or its own degree if larger).
    pub fn polynomial(coeffs: &[C64], order: usize) -> Result<Self> {
        let len = coeffs.len().max(order + 1);
        let mut padded = vec![C64::zero(); len];
        padded[..coeffs.len()].copy_from_slice(coeffs);
        Self::new(padded, Some(TailBound::EXACT))
    }

    pub fn constant(c: C64, order: usize) -> Self {
        let mut coeffs = vec![C64::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries {
            coeffs,
            tail: Some(TailBound::EXACT),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(C64::zero(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C64 {
        self.coeffs.get(n).copied().unwrap_or_else(C64::zero)
    }

    pub fn tail(&self) -> Option<TailBound> {
        self.tail
    }

    pub fn evaluate(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::zero(), |acc, &c| acc * z + c)
    }

    /// Spot-check that the envelope also dominates the upper half of the stored
    /// coefficients, `|a_n| ≤ C·qⁿ (1 + rel)` for `N/2 < n ≤ N`.
    pub fn tail_dominates_upper_half(&self, rel: f64) -> bool {
        match self.tail {
            None => true,
            Some(t) => {
                let n = self.order();
                (n / 2 + 1..=n).all(|k| self.coeffs[k].norm() <= t.bound(k) * (1.0 + rel) + 1e-300)
            }
        }
    }

    /// Smallest `A` with `|a_n| ≤ A qⁿ` for every `n`, stored or not
    /// (subnormal coefficients are ignored).
    fn envelope(&self, q: f64) -> Option<f64> {
        let t = self.tail?;
        if q <= 0.0 || t.q > q {
            return None;
        }
        let ln_q = q.ln();
        let mut best = t.c;
        for (n, c) in self.coeffs.iter().enumerate() {
            let m = c.norm();
            if m >= f64::MIN_POSITIVE {
                best = best.max((m.ln() - n as f64 * ln_q).exp());
            }
        }
        best.is_finite().then_some(best)
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        let coeffs = self.coeffs[..=order].to_vec();
        let dropped = &self.coeffs[order + 1..];
        let tail = match self.tail {
            None => None,
            Some(t) if dropped.iter().all(|c| c.is_zero()) => Some(t),
            Some(t) if t.q > 0.0 => {
                let mut c = t.c;
                let ln_q = t.q.ln();
                for n in order / 2 + 1..=self.order() {
                    let m = self.coeffs[n].norm();
                    // log domain, since qⁿ underflows; subnormals carry no relative precision
                    if m >= f64::MIN_POSITIVE {
                        c = c.max((m.ln() - n as f64 * ln_q).exp());
                    }
                }
                c.is_finite().then_some(TailBound { q: t.q, c })
            }
            Some(_) => None,
        };
        PowerSeries { coeffs, tail }
    }

    pub fn scale(&self, s: C64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
            tail: self.tail.map(|t| TailBound {
                q: t.q,
                c: t.c * s.norm(),
            }),
        }
    }

    /// Coefficientwise sum, truncated at the smaller order.
    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let (p, q) = (self.truncate(order), other.truncate(order));
        let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a + b).collect();
        let tail = match (p.tail, q.tail) {
            (Some(s), Some(t)) => Some(TailBound {
                q: s.q.max(t.q),
                c: s.c + t.c,
            }),
            _ => None,
        };
        PowerSeries { coeffs, tail }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let (qa, qb) = match (self.tail, other.tail) {
            (Some(s), Some(t)) => (s.q, t.q),
            _ => {
                return PowerSeries {
                    coeffs: cauchy(&self.coeffs, &other.coeffs, order),
                    tail: None,
                }
            }
        };
        let q = qa.max(qb);
        if q == 0.0 {
            // both exact: the full product is known, truncation decides the tail
            let full_order = self.order() + other.order();
            let full = PowerSeries {
                coeffs: cauchy(&self.coeffs, &other.coeffs, full_order),
                tail: Some(TailBound::EXACT),
            };
            return full.truncate(order);
        }
        let coeffs = cauchy(&self.coeffs, &other.coeffs, order);
        // |c_n| ≤ A B (n+1) qⁿ ≤ A B G(q/q') q'ⁿ
        let tail = match (self.envelope(q), other.envelope(q)) {
            (Some(a), Some(b)) => {
                let widened = 0.5 * (1.0 + q);
                let c = a * b * linear_growth_bound(q / widened);
                (c.is_finite() && widened < 1.0).then_some(TailBound { q: widened, c })
            }
            _ => None,
        };
        PowerSeries { coeffs, tail }
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derivative(&self) -> PowerSeries {
        if self.order() == 0 {
            return PowerSeries {
                coeffs: vec![C64::zero()],
                tail: self.tail.map(|_| TailBound::EXACT),
            };
        }
        let coeffs = (1..=self.order())
            .map(|n| self.coeffs[n] * n as f64)
            .collect();
        let tail = match self.tail {
            Some(t) if t.q == 0.0 => Some(TailBound::EXACT),
            Some(t) => self.envelope(t.q).and_then(|a| {
                let widened = 0.5 * (1.0 + t.q);
                let c = a * t.q * linear_growth_bound(t.q / widened);
                c.is_finite().then_some(TailBound { q: widened, c })
            }),
            None => None,
        };
        PowerSeries { coeffs, tail }
    }

    /// Antiderivative vanishing at the origin; the order grows by one.
    pub fn integral(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C64::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / (n + 1) as f64),
        );
        let tail = match self.tail {
            Some(t) if t.q == 0.0 => Some(TailBound::EXACT),
            Some(t) => self
                .envelope(t.q)
                .map(|a| TailBound { q: t.q, c: a / t.q })
                .filter(|t| t.c.is_finite()),
            None => None,
        };
        PowerSeries { coeffs, tail }
    }
}

fn cauchy(a: &[C64], b: &[C64], order: usize) -> Vec<C64> {
    (0..=order)
        .map(|n| {
            let lo = n.saturating_sub(b.len() - 1);
            let hi = n.min(a.len() - 1);
            if lo > hi {
                return C64::zero();
            }
            (lo..=hi).map(|k| a[k] * b[n - k]).sum()
        })
        .collect()
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct SeriesRepr {
    coeffs: Vec<[f64; 2]>,
    order: usize,
    tail: Option<TailBound>,
}

#[cfg(feature = "serde")]
impl From<PowerSeries> for SeriesRepr {
    fn from(p: PowerSeries) -> Self {
        SeriesRepr {
            order: p.order(),
            coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            tail: p.tail,
        }
    }
}

#[cfg(feature = "serde")]
impl TryFrom<SeriesRepr> for PowerSeries {
    type Error = Error;
    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.order + 1 {
            return Err(Error::Domain {
                what: "coeffs length must equal order + 1",
                value: r.coeffs.len() as f64,
            });
        }
        PowerSeries::new(
            r.coeffs.into_iter().map(|[re, im]| C64::new(re, im)).collect(),
            r.tail,
        )
    }
}

/// `(α + βz)/(δ − εz)` expanded about the origin. Needs `|ε/δ| < 1`.
pub fn linear_fractional(alpha: C64, beta: C64, delta: C64, eps: C64, order: usize) -> Result<PowerSeries> {
    if delta.is_zero() {
        return Err(Error::Domain {
            what: "linear fractional map has a pole at the origin",
            value: 0.0,
        });
    }
    let t = eps / delta;
    let q = t.norm();
    if q >= 1.0 {
        return Err(Error::Domain {
            what: "linear fractional map has a pole inside the unit disk",
            value: q,
        });
    }
    if q == 0.0 {
        return Ok(PowerSeries::polynomial(&[alpha / delta, beta / delta], order)?.truncate(order));
    }
    let lead = (alpha * t + beta) / delta;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(alpha / delta);
    let mut power = C64::new(1.0, 0.0);
    for _ in 1..=order {
        coeffs.push(lead * power);
        power *= t;
    }
    let c = lead.norm() / q;
    PowerSeries::new(coeffs, Some(TailBound::new(q, c)?))
}

/// The disk `Ω_γ = { z : |z + γ/(1−γ)| < 1/(1−γ) }`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiskDomain {
    gamma: f64,
}

impl DiskDomain {
    pub fn new(gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        Ok(DiskDomain { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn center(&self) -> f64 {
        -self.gamma / (1.0 - self.gamma)
    }

    pub fn radius(&self) -> f64 {
        1.0 / (1.0 - self.gamma)
    }

    pub fn contains(&self, z: C64) -> bool {
        (z - self.center()).norm() < self.radius()
    }

    /// `z ↦ (1−γ)z + γ`, mapping `Ω_γ` onto the unit disk.
    pub fn to_unit_disk(&self, z: C64) -> C64 {
        z * (1.0 - self.gamma) + self.gamma
    }

    /// `w ↦ (w−γ)/(1−γ)`, mapping the unit disk onto `Ω_γ`.
    pub fn from_unit_disk(&self, w: C64) -> C64 {
        (w - self.gamma) / (1.0 - self.gamma)
    }
}

/// Coefficients of `G = g∘φ⁻¹` from those of `g` about `γ`, where
/// `φ(z) = (z−γ)/(1−γ)`: `b_n = α_n (1−γ)ⁿ`.
pub fn recenter_affine(about_gamma: &PowerSeries, gamma: f64) -> Result<PowerSeries> {
    check_gamma(gamma)?;
    let s = 1.0 - gamma;
    let mut power = 1.0;
    let coeffs = about_gamma
        .coeffs
        .iter()
        .map(|&c| {
            let b = c * power;
            power *= s;
            b
        })
        .collect();
    let tail = about_gamma.tail.map(|t| TailBound { q: t.q * s, c: t.c });
    PowerSeries::new(coeffs, tail)
}

/// Inverse of [`recenter_affine`]: `α_n = b_n / (1−γ)ⁿ`.
pub fn uncenter_affine(unit: &PowerSeries, gamma: f64) -> Result<PowerSeries> {
    check_gamma(gamma)?;
    let s = 1.0 / (1.0 - gamma);
    let mut power = 1.0;
    let coeffs = unit
        .coeffs
        .iter()
        .map(|&c| {
            // exact zeros stay zero once the power overflows
            let a = if c == C64::new(0.0, 0.0) { c } else { c * power };
            power *= s;
            a
        })
        .collect();
    let tail = unit
        .tail
        .map(|t| TailBound { q: t.q * s, c: t.c })
        .filter(|t| t.q < 1.0);
    PowerSeries::new(coeffs, tail)
}

/// Result of [`numeric_taylor`].
#[derive(Debug, Clone)]
pub struct TaylorExtraction {
    pub series: PowerSeries,
    /// Number of equispaced samples on the circle.
    pub samples: usize,
    /// `max |f(z) − series(z)|` over 64 points of `|z| = ρ/2`.
    pub residual: f64,
}

/// Taylor coefficients of `f` by the trapezoid rule on `|z| = rho`,
/// `a_n = (1/M) Σ_j f(ρ ω^j) ω^{−jn} / ρⁿ`, with `M ≥ 8N` a power of two.
///
/// Absolute accuracy of `a_n` is about `ε·max|f| / ρⁿ`, so keep `N` modest.
pub fn numeric_taylor<F>(f: F, order: usize, rho: f64) -> Result<TaylorExtraction>
where
    F: Fn(C64) -> C64,
{
    if order == 0 {
        return Err(Error::Domain {
            what: "numeric_taylor needs order >= 1",
            value: 0.0,
        });
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::Domain {
            what: "sampling radius must lie in (0, 1)",
            value: rho,
        });
    }
    let m = (8 * order).next_power_of_two();
    let mut buf: Vec<C64> = (0..m)
        .map(|j| f(C64::from_polar(rho, 2.0 * PI * j as f64 / m as f64)))
        .collect();
    if buf.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::NonFinite {
            what: "samples of f on the sampling circle",
        });
    }
    fft_forward(&mut buf);
    let mut inv_rho_pow = 1.0 / m as f64;
    let mut coeffs = Vec::with_capacity(order + 1);
    for v in buf.iter().take(order + 1) {
        coeffs.push(v * inv_rho_pow);
        inv_rho_pow /= rho;
    }
    let series = PowerSeries::new(coeffs, None).map_err(|_| Error::NonFinite {
        what: "extracted coefficients (order too high for the sampling radius)",
    })?;
    let residual = (0..64)
        .map(|j| {
            let z = C64::from_polar(0.5 * rho, 2.0 * PI * j as f64 / 64.0);
            (f(z) - series.evaluate(z)).norm()
        })
        .fold(0.0, f64::max);
    Ok(TaylorExtraction {
        series,
        samples: m,
        residual,
    })
}

/// In-place radix-2 DFT, `X_k = Σ_j x_j e^{−2πi jk/M}`. `buf.len()` must be a power of two.
fn fft_forward(buf: &mut [C64]) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    let bits = n.trailing_zeros();
    if bits == 0 {
        return;
    }
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            buf.swap(i, j);
        }
    }
    let twiddles: Vec<C64> = (0..n / 2)
        .map(|k| C64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
        .collect();
    let mut len = 2;
    while len <= n {
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..len / 2 {
                let w = twiddles[k * stride];
                let u = buf[start + k];
                let v = buf[start + k + len / 2] * w;
                buf[start + k] = u + v;
                buf[start + k + len / 2] = u - v;
            }
        }
        len <<= 1;
    }
}
