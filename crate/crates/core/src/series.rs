//! Taylor coefficients of `Phi(t)` for the rotation family, odd power series
//! reversion and the alternation test on the inverse series.
//!
//! Expanding `arcsin(t u) = sum_j a_j t^{2j+1} u^{2j+1}` and the bivariate
//! normal density with Mehler's formula gives
//!
//! ```text
//! c_k = (2/pi) sum_{2j+1+m=k} a_j A_{j,m} / m!
//! A_{j,m} = E[cos^{2j+1}(eps (He2(X) + He2(Y))) He_m(X) He_m(Y)]   (X, Y independent)
//! ```
//!
//! and, writing `cos^{2j+1}` as a sum of `cos((2q+1) u)`, every `A_{j,m}`
//! factorises into `Re[I_m(beta)^2]` with
//! `I_m(beta) = E[He_m(X) e^{i beta He2(X)}]`, a one-dimensional integral.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::phi::RotationFamily;
use crate::quad::integrate_1d;
use crate::specfun::{arcsin_coeffs, hermite_prob};

/// Highest order [`mehler_coefficients`] will produce.
pub const MAX_SERIES_ORDER: usize = 15;

/// Half-width of the integration range for the moments `I_m`.
const MOMENT_HALF_WIDTH: f64 = 16.0;

/// Odd power series `c_1 t + c_3 t^3 + ... + c_K t^K`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddSeries {
    coeffs: Vec<f64>,
}

impl OddSeries {
    /// Build from `(c_1, c_3, ..., c_K)`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return invalid("an odd series needs at least the linear coefficient");
        }
        if let Some(bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return invalid(format!("series coefficients must be finite, got {bad}"));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients `(c_1, c_3, ..., c_K)`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `t^order`; zero for even or out-of-range orders.
    pub fn coeff(&self, order: usize) -> f64 {
        if order.is_multiple_of(2) {
            return 0.0;
        }
        self.coeffs.get(order / 2).copied().unwrap_or(0.0)
    }

    /// Largest odd order `K` carried.
    pub fn max_order(&self) -> usize {
        2 * self.coeffs.len() - 1
    }

    /// `(order, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, &c)| (2 * i + 1, c))
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t2 = t * t;
        t * self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t2 + c)
    }

    fn dense(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.max_order() + 1];
        for (k, c) in self.terms() {
            d[k] = c;
        }
        d
    }

    fn from_dense(d: &[f64]) -> Result<Self> {
        Self::new(d.iter().skip(1).step_by(2).copied().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
            Sign::Zero => '0',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Whether `b_1 > 0, b_3 < 0, b_5 > 0, ...` holds for every available order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationVerdict {
    pub alternating: bool,
    /// Lowest order whose sign breaks the pattern.
    pub first_violation: Option<usize>,
    pub signs: Vec<Sign>,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// `I_m(beta) = E[He_m(X) e^{i beta (X^2 - 1)}]` as `(re, im)`, for even `m`.
fn hermite_phase_moment(m: u32, beta: f64, tol: f64) -> Result<(f64, f64)> {
    let norm = 1.0 / (2.0 * PI).sqrt();
    // even integrand: integrate the half line and double
    let weight = move |x: f64| 2.0 * norm * hermite_prob(m, x) * (-0.5 * x * x).exp();
    let re = integrate_1d(
        |x| weight(x) * (beta * (x * x - 1.0)).cos(),
        0.0,
        MOMENT_HALF_WIDTH,
        tol,
    )?;
    let im = integrate_1d(
        |x| weight(x) * (beta * (x * x - 1.0)).sin(),
        0.0,
        MOMENT_HALF_WIDTH,
        tol,
    )?;
    Ok((re.value, im.value))
}

/// Taylor coefficients `c_1, c_3, ..., c_order` of `Phi(t)` for the rotation
/// family, computed through the Mehler expansion with 1D quadratures at
/// absolute tolerance `tol`.
pub fn mehler_coefficients(family: &RotationFamily, order: usize, tol: f64) -> Result<OddSeries> {
    if order.is_multiple_of(2) {
        return invalid(format!("series order must be odd, got {order}"));
    }
    if order > MAX_SERIES_ORDER {
        return invalid(format!(
            "series order {order} exceeds the supported maximum {MAX_SERIES_ORDER}"
        ));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return invalid(format!("tolerance must be positive, got {tol}"));
    }
    let eps = family.epsilon();
    let a = arcsin_coeffs(order / 2)?;

    let mut moments: HashMap<(usize, usize), f64> = HashMap::new();
    let mut re_square = |m: usize, q: usize| -> Result<f64> {
        if let Some(&v) = moments.get(&(m, q)) {
            return Ok(v);
        }
        let (re, im) = hermite_phase_moment(m as u32, (2 * q + 1) as f64 * eps, tol)?;
        let v = re * re - im * im;
        moments.insert((m, q), v);
        Ok(v)
    };

    let mut coeffs = Vec::with_capacity(order / 2 + 1);
    for k in (1..=order).step_by(2) {
        let mut sum = 0.0;
        for (j, aj) in a.iter().enumerate().take((k - 1) / 2 + 1) {
            let m = k - 1 - 2 * j;
            let mut a_jm = 0.0;
            for q in 0..=j {
                a_jm += binomial(2 * j + 1, j - q) * re_square(m, q)?;
            }
            a_jm /= 4f64.powi(j as i32);
            sum += aj * a_jm / factorial(m);
        }
        coeffs.push(2.0 / PI * sum);
    }
    OddSeries::new(coeffs)
}

fn mul_truncated(x: &[f64], y: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    for (i, &xi) in x.iter().enumerate().take(len) {
        if xi == 0.0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate().take(len - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn compose_dense(outer: &[f64], inner: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    let mut power = inner[..len].to_vec();
    for (k, &ck) in outer.iter().enumerate().take(len).skip(1) {
        if k > 1 {
            power = mul_truncated(&power, inner, len);
        }
        if ck != 0.0 {
            for (o, p) in out.iter_mut().zip(&power) {
                *o += ck * p;
            }
        }
    }
    out
}

/// `outer(inner(s))` truncated at the smaller of the two orders.
pub fn compose_odd_series(outer: &OddSeries, inner: &OddSeries) -> OddSeries {
    let len = outer.max_order().min(inner.max_order()) + 1;
    let composed = compose_dense(&outer.dense(), &inner.dense(), len);
    OddSeries::from_dense(&composed).expect("composition of finite series is finite")
}

/// Compositional inverse `b` of `c`: `c(b(s)) = s` through order `K`.
///
/// Solved order by order: `b_1 = 1/c_1`, and `b_n` cancels the `s^n`
/// coefficient of `c(b(s))` computed with `b_n = 0`.
pub fn revert_odd_series(c: &OddSeries) -> Result<OddSeries> {
    let c1 = c.coeff(1);
    if c1 == 0.0 {
        return invalid("series with zero linear coefficient is not invertible at the origin");
    }
    let len = c.max_order() + 1;
    let dense = c.dense();
    let mut b = vec![0.0; len];
    b[1] = 1.0 / c1;
    for n in (3..len).step_by(2) {
        let partial = compose_dense(&dense, &b, n + 1);
        b[n] = -partial[n] / c1;
    }
    let out = OddSeries::from_dense(&b)?;
    Ok(out)
}

/// Alternation check with the default zero band `1e-12 max|b_k|`.
pub fn alternation_check(b: &OddSeries) -> AlternationVerdict {
    let scale = b.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
    alternation_check_with(b, 1e-12 * scale)
}

/// Classify each `b_k` as `+`, `-` or `0` (when `|b_k| <= zero_band`) and
/// test for `sign(b_{2k+1}) = (-1)^k`. Zeros count as violations.
pub fn alternation_check_with(b: &OddSeries, zero_band: f64) -> AlternationVerdict {
    let signs: Vec<Sign> = b
        .coeffs()
        .iter()
        .map(|&v| {
            if v.abs() <= zero_band {
                Sign::Zero
            } else if v > 0.0 {
                Sign::Positive
            } else {
                Sign::Negative
            }
        })
        .collect();
    let first_violation = signs.iter().enumerate().find_map(|(i, &s)| {
        let expected = if i % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        (s != expected).then_some(2 * i + 1)
    });
    AlternationVerdict {
        alternating: first_violation.is_none(),
        first_violation,
        signs,
    }
}

/// The bound `1 / v` on Grothendieck's constant that an alternating inverse
/// series would give from `v = Phi(i)/i`.
pub fn conditional_bound(v: f64) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "Phi(i)/i must be positive, got {v}"
        )));
    }
    Ok(1.0 / v)
}
