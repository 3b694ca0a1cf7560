//! Deterministic adaptive quadrature.
//!
//! Every routine is built on one adaptive Gauss-Kronrod (7, 15) driver.
//! Panels are bisected depth-first, left half first, and accepted panels are
//! summed left to right, so results are bit-reproducible.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Default cap on integrand evaluations for a single 1D integration.
pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

/// Default upper limit for semi-infinite integrals.
pub const DEFAULT_CUTOFF: f64 = 100.0;

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss points.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadMethod {
    Adaptive1d,
    Tensor2d,
    SemiInfinite,
}

impl QuadMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            QuadMethod::Adaptive1d => "adaptive-1d",
            QuadMethod::Tensor2d => "tensor-2d",
            QuadMethod::SemiInfinite => "semi-infinite",
        }
    }
}

impl fmt::Display for QuadMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An integral value together with its a posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub method: QuadMethod,
}

/// Finite truncation of a semi-infinite axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Upper integration limit replacing infinity.
    pub cutoff: f64,
    /// Guaranteed bound on the discarded tail, added to the error estimate.
    pub tail_bound: f64,
}

impl TruncationPolicy {
    pub fn new(cutoff: f64, tail_bound: f64) -> Result<Self> {
        if !(cutoff > 0.0 && cutoff.is_finite()) {
            return invalid(format!("cutoff must be positive and finite, got {cutoff}"));
        }
        if !(tail_bound >= 0.0) {
            return invalid(format!("tail bound must be non-negative, got {tail_bound}"));
        }
        Ok(Self { cutoff, tail_bound })
    }

    /// Policy for an integrand bounded by `e^{-rate x}` beyond `cutoff`.
    pub fn exponential(cutoff: f64, rate: f64) -> Result<Self> {
        if !(rate > 0.0) {
            return invalid(format!("envelope rate must be positive, got {rate}"));
        }
        Self::new(cutoff, (-rate * cutoff).exp() / rate)
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            cutoff: DEFAULT_CUTOFF,
            tail_bound: 0.0,
        }
    }
}

/// Tuning knobs of the adaptive driver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub max_evaluations: usize,
    /// Number of equal panels the interval is split into before adapting.
    pub initial_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
            initial_panels: 1,
        }
    }
}

/// Configuration for iterated 2D integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad2dConfig {
    pub outer: QuadConfig,
    pub inner: QuadConfig,
}

impl Default for Quad2dConfig {
    fn default() -> Self {
        Self {
            outer: QuadConfig::default(),
            inner: QuadConfig {
                max_evaluations: DEFAULT_MAX_EVALUATIONS,
                initial_panels: 8,
            },
        }
    }
}

struct Panel {
    value: f64,
    error: f64,
    inner_error: f64,
}

struct Adapted {
    value: f64,
    error: f64,
    inner_error: f64,
    evaluations: usize,
}

/// One G7/K15 panel. `f` returns the integrand value and, for iterated
/// integrals, the error already committed in computing it.
fn kronrod_panel<F>(f: &mut F, lo: f64, hi: f64) -> Result<(Panel, f64, f64)>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut eval = |x: f64| -> Result<(f64, f64)> {
        let (v, e) = f(x)?;
        if !v.is_finite() {
            return invalid(format!("integrand is not finite at {x}: {v}"));
        }
        Ok((v, e))
    };

    let (fc, ec) = eval(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    let mut inner = WGK[7] * ec;
    for i in 0..7 {
        let dx = half * XGK[i];
        let (f1, e1) = eval(center - dx)?;
        let (f2, e2) = eval(center + dx)?;
        kronrod += WGK[i] * (f1 + f2);
        resabs += WGK[i] * (f1.abs() + f2.abs());
        inner += WGK[i] * (e1 + e2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let diff = (half * (kronrod - gauss)).abs();
    let roundoff = 50.0 * f64::EPSILON * half.abs() * resabs;
    Ok((
        Panel {
            value: half * kronrod,
            error: diff.max(roundoff),
            inner_error: half.abs() * inner,
        },
        diff,
        roundoff,
    ))
}

fn adapt<F>(f: &mut F, a: f64, b: f64, tol: f64, cfg: &QuadConfig) -> Result<Adapted>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    let width = b - a;
    let panels = cfg.initial_panels.max(1);
    let mut stack: Vec<(f64, f64)> = Vec::with_capacity(64);
    for i in (0..panels).rev() {
        let lo = a + width * (i as f64) / (panels as f64);
        let hi = if i + 1 == panels {
            b
        } else {
            a + width * ((i + 1) as f64) / (panels as f64)
        };
        stack.push((lo, hi));
    }

    let mut accepted: Vec<Panel> = Vec::new();
    let mut evaluations = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        if evaluations + 15 > cfg.max_evaluations {
            let value = accepted.iter().map(|p| p.value).sum();
            let error_estimate = accepted.iter().map(|p| p.error).sum();
            return Err(Error::NonConvergence {
                evaluations,
                value,
                error_estimate,
            });
        }
        let (panel, diff, roundoff) = kronrod_panel(f, lo, hi)?;
        evaluations += 15;
        let local_tol = tol * (hi - lo) / width;
        let mid = 0.5 * (lo + hi);
        let unsplittable = mid <= lo || mid >= hi;
        if diff <= local_tol.max(roundoff) || unsplittable {
            accepted.push(panel);
        } else {
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }

    let mut value = 0.0;
    let mut error = 0.0;
    let mut inner_error = 0.0;
    for p in &accepted {
        value += p.value;
        error += p.error;
        inner_error += p.inner_error;
    }
    Ok(Adapted {
        value,
        error,
        inner_error,
        evaluations,
    })
}

fn check_interval(a: f64, b: f64, tol: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return invalid(format!("interval [{a}, {b}] must be finite with a < b"));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return invalid(format!("tolerance must be positive, got {tol}"));
    }
    Ok(())
}

/// Adaptive integral of `f` over `[a, b]` with absolute tolerance `tol`.
pub fn integrate_1d<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    integrate_1d_with(f, a, b, tol, &QuadConfig::default())
}

pub fn integrate_1d_with<F>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    check_interval(a, b, tol)?;
    let r = adapt(&mut |x| Ok((f(x), 0.0)), a, b, tol, cfg)?;
    Ok(QuadResult {
        value: r.value,
        error_estimate: r.error,
        evaluations: r.evaluations,
        method: QuadMethod::Adaptive1d,
    })
}

/// Integral over `[0, inf)` of an integrand dominated by
/// `e^{-envelope_rate x}` past the cutoff. The tail beyond `policy.cutoff` is
/// dropped and its envelope added to the error estimate.
pub fn integrate_semi_inf<F>(
    f: F,
    envelope_rate: f64,
    tol: f64,
    policy: &TruncationPolicy,
) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    integrate_semi_inf_with(f, envelope_rate, tol, policy, &QuadConfig::default())
}

pub fn integrate_semi_inf_with<F>(
    f: F,
    envelope_rate: f64,
    tol: f64,
    policy: &TruncationPolicy,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    if !(envelope_rate > 0.0 && envelope_rate.is_finite()) {
        return invalid(format!(
            "envelope rate must be positive, got {envelope_rate}"
        ));
    }
    let tail = (policy.tail_bound).max((-envelope_rate * policy.cutoff).exp() / envelope_rate);
    let r = integrate_1d_with(f, 0.0, policy.cutoff, tol, cfg)?;
    Ok(QuadResult {
        error_estimate: r.error_estimate + tail,
        method: QuadMethod::SemiInfinite,
        ..r
    })
}

/// Iterated integral of `f(x, y)` over `x_range x y_range`: the outer
/// adaptive rule runs over `x`, each outer node integrates over `y`.
pub fn integrate_2d<F>(
    f: F,
    x_range: (f64, f64),
    y_range: (f64, f64),
    tol: f64,
) -> Result<QuadResult>
where
    F: FnMut(f64, f64) -> f64,
{
    integrate_2d_with(f, x_range, y_range, tol, &Quad2dConfig::default())
}

pub fn integrate_2d_with<F>(
    mut f: F,
    x_range: (f64, f64),
    y_range: (f64, f64),
    tol: f64,
    cfg: &Quad2dConfig,
) -> Result<QuadResult>
where
    F: FnMut(f64, f64) -> f64,
{
    let (x0, x1) = x_range;
    let (y0, y1) = y_range;
    check_interval(x0, x1, tol)?;
    check_interval(y0, y1, tol)?;

    // Inner errors are weighted by the outer rule and reported separately,
    // so the inner budget only has to stay well below the outer one.
    let inner_tol = tol / (10.0 * (x1 - x0));
    let outer_tol = 0.5 * tol;
    let mut inner_evaluations = 0usize;
    let mut outer = |x: f64| -> Result<(f64, f64)> {
        let r = adapt(&mut |y| Ok((f(x, y), 0.0)), y0, y1, inner_tol, &cfg.inner)?;
        inner_evaluations += r.evaluations;
        Ok((r.value, r.error))
    };
    let r = adapt(&mut outer, x0, x1, outer_tol, &cfg.outer)?;
    Ok(QuadResult {
        value: r.value,
        error_estimate: r.error + r.inner_error,
        evaluations: inner_evaluations,
        method: QuadMethod::Tensor2d,
    })
}
