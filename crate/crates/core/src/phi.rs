//! The three-dimensional rotation family and its sign-correlation functional.
//!
//! For `F(x) = x1 cos(eps He2(x0)) + x2 sin(eps He2(x0))` and
//! `G(y) = y1 cos(eps He2(y0)) - y2 sin(eps He2(y0))` the Gaussian
//! sign-correlation collapses, via `E[sign X sign Y] = (2/pi) arcsin E[XY]`,
//! to a two-dimensional integral. At `t = i` that integral is real and is
//! evaluated here three ways:
//!
//! * polar: `(2 sqrt2 / pi^2) int_0^inf int_0^pi asinh(cos(eta(2 rho - 1))) e^{-rho} cos(rho sin theta)`
//! * Cartesian: the same quantity before the change to polar coordinates
//! * Bessel: the angular integral done in closed form, `pi J0(rho)`
//!
//! with `eta = 2 eps`.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::quad::{
    integrate_2d_with, integrate_semi_inf, Quad2dConfig, QuadConfig, QuadResult, TruncationPolicy,
    DEFAULT_MAX_EVALUATIONS,
};
use crate::specfun::{argsinh, bessel_j0};

/// Half-width of the square each Cartesian integral is truncated to.
pub const CARTESIAN_HALF_WIDTH: f64 = 14.0;

/// `(2/pi) ln(1 + sqrt 2)`, the value of `Phi(i)/i` for one-dimensional
/// `F = G = x`, which the rotation family has to beat.
pub fn threshold() -> f64 {
    2.0 / PI * argsinh(1.0)
}

/// Krivine's upper bound `pi / (2 ln(1 + sqrt 2))` on Grothendieck's constant.
pub fn krivine_bound() -> f64 {
    PI / (2.0 * argsinh(1.0))
}

/// The rotation family, parametrised by `eta = 2 eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationFamily {
    eta: f64,
}

impl RotationFamily {
    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return invalid(format!("eta must be finite, got {eta}"));
        }
        Ok(Self { eta })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Rotation angle scale `eps = eta / 2`.
    pub fn epsilon(&self) -> f64 {
        0.5 * self.eta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiMethod {
    Polar,
    Cartesian,
    Bessel,
}

impl PhiMethod {
    pub const ALL: [PhiMethod; 3] = [PhiMethod::Polar, PhiMethod::Cartesian, PhiMethod::Bessel];

    pub fn as_str(self) -> &'static str {
        match self {
            PhiMethod::Polar => "polar",
            PhiMethod::Cartesian => "cartesian",
            PhiMethod::Bessel => "bessel",
        }
    }
}

impl fmt::Display for PhiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PhiMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polar" => Ok(PhiMethod::Polar),
            "cartesian" => Ok(PhiMethod::Cartesian),
            "bessel" => Ok(PhiMethod::Bessel),
            other => invalid(format!(
                "unknown method {other:?} (expected polar, cartesian or bessel)"
            )),
        }
    }
}

/// Outcome of checking `Phi(i)/i > threshold` for one family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub eta: f64,
    pub phi_i_value: f64,
    pub method: PhiMethod,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub threshold: f64,
    /// `phi_i_value - threshold`.
    pub margin: f64,
    /// The margin exceeds the error estimate.
    pub pass: bool,
}

/// Polar integrand `asinh(cos(eta(2 rho - 1))) e^{-rho} cos(rho sin theta)`.
pub fn integrand_polar(eta: f64, rho: f64, theta: f64) -> f64 {
    argsinh((eta * (2.0 * rho - 1.0)).cos()) * (-rho).exp() * (rho * theta.sin()).cos()
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return invalid(format!("tolerance must be positive, got {tol}"));
    }
    Ok(())
}

fn scaled(r: QuadResult, factor: f64, extra_error: f64) -> QuadResult {
    QuadResult {
        value: factor * r.value,
        error_estimate: factor * (r.error_estimate + extra_error),
        ..r
    }
}

/// `Phi(i)/i` from the polar double integral, `rho` truncated at 100.
pub fn phi_i_polar(family: &RotationFamily, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    let prefactor = 2.0 * SQRT_2 / (PI * PI);
    let policy = TruncationPolicy::default();
    let eta = family.eta();
    let r = integrate_2d_with(
        |rho, theta| integrand_polar(eta, rho, theta),
        (0.0, policy.cutoff),
        (0.0, PI),
        tol / prefactor,
        &Quad2dConfig::default(),
    )?;
    // |integrand| <= asinh(1) e^{-rho}
    let tail = argsinh(1.0) * PI * (-policy.cutoff).exp();
    Ok(scaled(r, prefactor, tail))
}

fn cartesian_config() -> Quad2dConfig {
    let axis = QuadConfig {
        max_evaluations: DEFAULT_MAX_EVALUATIONS,
        initial_panels: 8,
    };
    Quad2dConfig {
        outer: axis,
        inner: axis,
    }
}

/// `Phi(i)/i` from the Cartesian double integral over `[-14, 14]^2`.
pub fn phi_i_cartesian(family: &RotationFamily, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    let prefactor = 1.0 / (PI * PI * SQRT_2);
    let eps = family.epsilon();
    let l = CARTESIAN_HALF_WIDTH;
    let r = integrate_2d_with(
        |x, y| {
            let r2 = x * x + y * y;
            argsinh((eps * (r2 - 2.0)).cos()) * (-0.25 * r2).exp() * (0.5 * x * y).cos()
        },
        (-l, l),
        (-l, l),
        tol / prefactor,
        &cartesian_config(),
    )?;
    // mass of e^{-(x^2+y^2)/4} outside the square
    let tail = argsinh(1.0) * 2.0 * (4.0 * PI).sqrt() * (4.0 / l) * (-0.25 * l * l).exp();
    Ok(scaled(r, prefactor, tail))
}

/// `Phi(i)/i` from the one-dimensional Bessel reduction
/// `(2 sqrt2 / pi) int_0^inf asinh(cos(eta(2 rho - 1))) e^{-rho} J0(rho) d rho`.
pub fn phi_i_bessel(family: &RotationFamily, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    let prefactor = 2.0 * SQRT_2 / PI;
    let eta = family.eta();
    let r = integrate_semi_inf(
        |rho| argsinh((eta * (2.0 * rho - 1.0)).cos()) * (-rho).exp() * bessel_j0(rho),
        1.0,
        tol / prefactor,
        &TruncationPolicy::default(),
    )?;
    Ok(scaled(r, prefactor, 0.0))
}

pub fn phi_i(family: &RotationFamily, method: PhiMethod, tol: f64) -> Result<QuadResult> {
    match method {
        PhiMethod::Polar => phi_i_polar(family, tol),
        PhiMethod::Cartesian => phi_i_cartesian(family, tol),
        PhiMethod::Bessel => phi_i_bessel(family, tol),
    }
}

/// `Phi(t)` for real `|t| < 1`:
/// `(2/pi) E[arcsin(t cos(eps (X^2 + Y^2 - 2)))]` with `(X, Y)` standard
/// normal of correlation `t`.
pub fn phi_real_t(family: &RotationFamily, t: f64, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    if !(t.abs() < 1.0) {
        return invalid(format!("t must satisfy |t| < 1, got {t}"));
    }
    let s = 1.0 - t * t;
    let prefactor = 2.0 / PI / (2.0 * PI * s.sqrt());
    let eps = family.epsilon();
    let l = CARTESIAN_HALF_WIDTH;
    let r = integrate_2d_with(
        |x, y| {
            let r2 = x * x + y * y;
            (t * (eps * (r2 - 2.0)).cos()).asin() * (-(r2 - 2.0 * t * x * y) / (2.0 * s)).exp()
        },
        (-l, l),
        (-l, l),
        tol / prefactor,
        &cartesian_config(),
    )?;
    // (2/pi) |arcsin| <= 1 times P(|X| > L or |Y| > L)
    let normal_tail = 4.0 * (-0.5 * l * l).exp() / ((2.0 * PI).sqrt() * l);
    Ok(QuadResult {
        value: prefactor * r.value,
        error_estimate: prefactor * r.error_estimate + normal_tail,
        ..r
    })
}

/// Evaluate `Phi(i)/i` and compare it against [`threshold`].
pub fn verify_theorem(
    family: &RotationFamily,
    method: PhiMethod,
    tol: f64,
) -> Result<VerificationReport> {
    let r = phi_i(family, method, tol)?;
    let threshold = threshold();
    let margin = r.value - threshold;
    Ok(VerificationReport {
        eta: family.eta(),
        phi_i_value: r.value,
        method,
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
        threshold,
        margin,
        pass: margin > r.error_estimate,
    })
}
