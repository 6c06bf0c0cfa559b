//! Numerical laboratory for Bohr-type inequalities of bounded analytic and
//! harmonic functions on the disks
//!
//! ```text
//! Ω_γ = { z : |z + γ/(1-γ)| < 1/(1-γ) },   0 ≤ γ < 1,
//! ```
//!
//! which all contain the unit disk and touch it at `z = 1`.
//!
//! The crate is `no_std` (with `alloc`). Everything here is a pure function of
//! its inputs; file formats and the command-line front end live in the
//! companion `bohr-lab` crate.
//!
//! Layout:
//!
//! * [`series`]: truncated complex power series with geometric tail bounds,
//!   Cauchy-integral coefficient extraction and affine recentring.
//! * [`extremals`]: the Möbius family `g_0` and its harmonic variant, which
//!   witness sharpness of every radius.
//! * [`functionals`]: majorant series, Dirichlet area, `‖f_0‖_r` and the four
//!   Bohr-type functionals.
//! * [`solver`]: bisection for the radius of one function and infimum over a
//!   parameter family.
//! * [`verify`]: executable checkers for the lemmas and the closed forms used
//!   inside the proofs.
//! * [`conjecture`]: grid search for the best constant in the area-improved
//!   inequality.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod conjecture;
pub mod error;
pub mod extremals;
pub mod functionals;
pub mod series;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};

/// Double precision complex number used for every coefficient.
pub type C64 = num_complex::Complex64;

/// `(1+γ)/(3+γ)`, the sharp radius for bounded analytic functions on `Ω_γ`.
pub fn fournier_ruscheweyh_radius(gamma: f64) -> f64 {
    (1.0 + gamma) / (3.0 + gamma)
}

/// `(1+γ)/(3+2k+γ)`, the sharp radius for harmonic maps with dilatation bound `k`.
pub fn harmonic_radius(gamma: f64, k: f64) -> f64 {
    (1.0 + gamma) / (3.0 + 2.0 * k + gamma)
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if (0.0..1.0).contains(&gamma) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "gamma must lie in [0, 1)",
            value: gamma,
        })
    }
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "radius must lie in [0, 1)",
            value: r,
        })
    }
}
