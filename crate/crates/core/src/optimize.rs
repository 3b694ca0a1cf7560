//! Search over `eta` for the largest `V(eta) = Phi(i)/i` of the rotation
//! family, with `V` evaluated by the Bessel reduction.

use crate::error::{invalid, Result};
use crate::parallel::map_ordered;
use crate::phi::{phi_i_bessel, RotationFamily};

/// Number of points in the unimodality pre-scan of [`maximize_eta`].
pub const PRESCAN_POINTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub eta: f64,
    pub value: f64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// Ordered by `eta`.
    pub points: Vec<ScanPoint>,
    pub best_eta: f64,
    pub best_value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub eta_star: f64,
    pub value_star: f64,
    pub error_estimate: f64,
    /// The pre-scan looked unimodal within its error bars.
    pub unimodal: bool,
    /// The search was restricted to the neighbourhood of the pre-scan argmax.
    pub fallback_used: bool,
    /// Number of `V` evaluations, pre-scan included.
    pub evaluations: usize,
}

fn evaluate(eta: f64, tol: f64) -> Result<ScanPoint> {
    let r = phi_i_bessel(&RotationFamily::new(eta)?, tol)?;
    Ok(ScanPoint {
        eta,
        value: r.value,
        error_estimate: r.error_estimate,
    })
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 0 {
        return vec![lo];
    }
    (0..=steps)
        .map(|i| {
            if i == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / steps as f64
            }
        })
        .collect()
}

fn argmax(points: &[ScanPoint]) -> usize {
    // first index wins ties
    let mut best = 0;
    for (i, p) in points.iter().enumerate() {
        if p.value > points[best].value {
            best = i;
        }
    }
    best
}

/// `V` at `steps + 1` equispaced points of `[lo, hi]` (a single point when
/// `steps == 0`, which requires `lo == hi`).
pub fn grid_scan(lo: f64, hi: f64, steps: usize, tol: f64) -> Result<ScanResult> {
    grid_scan_with(lo, hi, steps, tol, 1)
}

pub fn grid_scan_with(
    lo: f64,
    hi: f64,
    steps: usize,
    tol: f64,
    threads: usize,
) -> Result<ScanResult> {
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return invalid(format!(
            "scan range [{lo}, {hi}] must be finite with lo <= hi"
        ));
    }
    if steps == 0 && lo != hi {
        return invalid("a zero-step scan needs lo == hi");
    }
    let points = map_ordered(grid(lo, hi, steps), threads, |eta| evaluate(eta, tol))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let best = points[argmax(&points)];
    Ok(ScanResult {
        best_eta: best.eta,
        best_value: best.value,
        points,
    })
}

/// Rises then falls, allowing wiggles inside the summed error bars.
fn looks_unimodal(points: &[ScanPoint]) -> bool {
    let peak = argmax(points);
    points.windows(2).enumerate().all(|(i, w)| {
        let slack = w[0].error_estimate + w[1].error_estimate;
        if i < peak {
            w[1].value >= w[0].value - slack
        } else {
            w[1].value <= w[0].value + slack
        }
    })
}

/// Golden-section maximisation of `V` over `[lo, hi]`.
///
/// A [`PRESCAN_POINTS`]-point scan checks unimodality first. If it fails,
/// the search is confined to the two grid cells around the scan argmax.
/// The returned point is the best of all evaluations, so shrinking `xtol`
/// never lowers `value_star`.
pub fn maximize_eta(lo: f64, hi: f64, xtol: f64, quad_tol: f64) -> Result<Maximum> {
    maximize_eta_with(lo, hi, xtol, quad_tol, 1)
}

pub fn maximize_eta_with(
    lo: f64,
    hi: f64,
    xtol: f64,
    quad_tol: f64,
    threads: usize,
) -> Result<Maximum> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return invalid(format!("bracket [{lo}, {hi}] must be finite with lo < hi"));
    }
    if !(xtol > 0.0 && xtol.is_finite()) {
        return invalid(format!("xtol must be positive, got {xtol}"));
    }

    if hi - lo <= xtol {
        let a = evaluate(lo, quad_tol)?;
        let b = evaluate(hi, quad_tol)?;
        let best = if b.value > a.value { b } else { a };
        return Ok(Maximum {
            eta_star: best.eta,
            value_star: best.value,
            error_estimate: best.error_estimate,
            unimodal: true,
            fallback_used: false,
            evaluations: 2,
        });
    }

    let scan = grid_scan_with(lo, hi, PRESCAN_POINTS - 1, quad_tol, threads)?;
    let unimodal = looks_unimodal(&scan.points);
    let (mut a, mut b) = if unimodal {
        (lo, hi)
    } else {
        let k = argmax(&scan.points);
        let last = scan.points.len() - 1;
        (
            scan.points[k.saturating_sub(1)].eta,
            scan.points[(k + 1).min(last)].eta,
        )
    };

    let mut best = scan.points[argmax(&scan.points)];
    let mut evaluations = scan.points.len();
    let consider = |p: ScanPoint, best: &mut ScanPoint| {
        if p.value > best.value {
            *best = p;
        }
    };

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = evaluate(c, quad_tol)?;
    let mut fd = evaluate(d, quad_tol)?;
    evaluations += 2;
    consider(fc, &mut best);
    consider(fd, &mut best);
    while b - a > xtol {
        if fc.value >= fd.value {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = evaluate(c, quad_tol)?;
            consider(fc, &mut best);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = evaluate(d, quad_tol)?;
            consider(fd, &mut best);
        }
        evaluations += 1;
    }

    Ok(Maximum {
        eta_star: best.eta,
        value_star: best.value,
        error_estimate: best.error_estimate,
        unimodal,
        fallback_used: !unimodal,
        evaluations,
    })
}
