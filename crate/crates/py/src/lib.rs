//! Python bindings. Long computations release the GIL.

use krivine_core::mc::{self, Family, McConfig};
use krivine_core::{optimize, phi, series, specfun, Error};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(krivine, NonConvergenceError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidArgument(m) => PyValueError::new_err(m),
        other @ Error::NonConvergence { .. } => NonConvergenceError::new_err(other.to_string()),
    }
}

fn method(name: &str) -> PyResult<phi::PhiMethod> {
    name.parse()
        .map_err(|_| PyValueError::new_err(format!("unknown method {name:?}")))
}

fn family(name: &str, eta: Option<f64>, epsilon: Option<f64>) -> PyResult<Family> {
    match name {
        "identity1" => Ok(Family::Identity1),
        "rotation3" => eta
            .map(|eta| Family::Rotation3 { eta })
            .ok_or_else(|| PyValueError::new_err("rotation3 needs eta")),
        "hermite5" => epsilon
            .map(|epsilon| Family::Hermite5 { epsilon })
            .ok_or_else(|| PyValueError::new_err("hermite5 needs epsilon")),
        other => Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    }
}

fn rotation(eta: f64) -> PyResult<phi::RotationFamily> {
    phi::RotationFamily::new(eta).map_err(to_py)
}

#[pyclass(frozen, get_all, module = "krivine")]
struct QuadResult {
    value: f64,
    error_estimate: f64,
    evaluations: usize,
    method: String,
}

impl From<krivine_core::quad::QuadResult> for QuadResult {
    fn from(r: krivine_core::quad::QuadResult) -> Self {
        Self {
            value: r.value,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
            method: r.method.as_str().to_owned(),
        }
    }
}

#[pymethods]
impl QuadResult {
    fn __repr__(&self) -> String {
        format!(
            "QuadResult(value={:?}, error_estimate={:?}, evaluations={}, method={:?})",
            self.value, self.error_estimate, self.evaluations, self.method
        )
    }
}

#[pyclass(frozen, get_all, module = "krivine")]
struct VerificationReport {
    eta: f64,
    phi_i_value: f64,
    method: String,
    error_estimate: f64,
    evaluations: usize,
    threshold: f64,
    margin: f64,
    passed: bool,
}

#[pymethods]
impl VerificationReport {
    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(eta={:?}, phi_i_value={:?}, margin={:?}, passed={})",
            self.eta,
            self.phi_i_value,
            self.margin,
            if self.passed { "True" } else { "False" }
        )
    }
}

#[pyclass(frozen, get_all, module = "krivine")]
struct McEstimate {
    mean: f64,
    stderr: f64,
    samples: u64,
    seed: u64,
}

#[pymethods]
impl McEstimate {
    fn z_score(&self, reference: f64) -> f64 {
        mc::McEstimate {
            mean: self.mean,
            stderr: self.stderr,
            samples: self.samples,
            seed: self.seed,
        }
        .z_score(reference)
    }

    fn __repr__(&self) -> String {
        format!(
            "McEstimate(mean={:?}, stderr={:?}, samples={}, seed={})",
            self.mean, self.stderr, self.samples, self.seed
        )
    }
}

impl From<mc::McEstimate> for McEstimate {
    fn from(e: mc::McEstimate) -> Self {
        Self {
            mean: e.mean,
            stderr: e.stderr,
            samples: e.samples,
            seed: e.seed,
        }
    }
}

#[pyclass(frozen, get_all, module = "krivine")]
struct AlternationVerdict {
    alternating: bool,
    first_violation: Option<usize>,
    /// One of `+`, `-`, `0` per odd order.
    signs: String,
}

#[pymethods]
impl AlternationVerdict {
    fn __repr__(&self) -> String {
        format!(
            "AlternationVerdict(alternating={}, first_violation={:?}, signs={:?})",
            if self.alternating { "True" } else { "False" },
            self.first_violation,
            self.signs
        )
    }
}

#[pyclass(frozen, get_all, module = "krivine")]
struct Maximum {
    eta_star: f64,
    value_star: f64,
    error_estimate: f64,
    unimodal: bool,
    fallback_used: bool,
    evaluations: usize,
}

#[pymethods]
impl Maximum {
    fn __repr__(&self) -> String {
        format!(
            "Maximum(eta_star={:?}, value_star={:?}, evaluations={})",
            self.eta_star, self.value_star, self.evaluations
        )
    }
}

#[pyfunction]
fn threshold() -> f64 {
    phi::threshold()
}

#[pyfunction]
fn krivine_bound() -> f64 {
    phi::krivine_bound()
}

#[pyfunction]
fn hermite_prob(m: u32, x: f64) -> f64 {
    specfun::hermite_prob(m, x)
}

#[pyfunction]
fn argsinh(x: f64) -> f64 {
    specfun::argsinh(x)
}

#[pyfunction]
fn bessel_j0(x: f64) -> f64 {
    specfun::bessel_j0(x)
}

#[pyfunction]
#[pyo3(signature = (eta, method = "bessel", tol = 1e-9))]
fn phi_i(py: Python<'_>, eta: f64, method: &str, tol: f64) -> PyResult<QuadResult> {
    let (f, m) = (rotation(eta)?, self::method(method)?);
    py.detach(|| phi::phi_i(&f, m, tol))
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (eta, t, tol = 1e-9))]
fn phi_real_t(py: Python<'_>, eta: f64, t: f64, tol: f64) -> PyResult<QuadResult> {
    let f = rotation(eta)?;
    py.detach(|| phi::phi_real_t(&f, t, tol))
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (eta, method = "bessel", tol = 1e-9))]
fn verify(py: Python<'_>, eta: f64, method: &str, tol: f64) -> PyResult<VerificationReport> {
    let (f, m) = (rotation(eta)?, self::method(method)?);
    let r = py
        .detach(|| phi::verify_theorem(&f, m, tol))
        .map_err(to_py)?;
    Ok(VerificationReport {
        eta: r.eta,
        phi_i_value: r.phi_i_value,
        method: r.method.as_str().to_owned(),
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
        threshold: r.threshold,
        margin: r.margin,
        passed: r.pass,
    })
}

/// Odd Taylor coefficients `[c_1, c_3, ...]` of `Phi(t)`.
#[pyfunction]
#[pyo3(signature = (eta, order = 11, tol = 1e-9))]
fn mehler_coefficients(py: Python<'_>, eta: f64, order: usize, tol: f64) -> PyResult<Vec<f64>> {
    let f = rotation(eta)?;
    py.detach(|| series::mehler_coefficients(&f, order, tol))
        .map(|s| s.coeffs().to_vec())
        .map_err(to_py)
}

/// Compositional inverse of the odd series `[c_1, c_3, ...]`.
#[pyfunction]
fn revert_odd_series(coeffs: Vec<f64>) -> PyResult<Vec<f64>> {
    let c = series::OddSeries::new(coeffs).map_err(to_py)?;
    series::revert_odd_series(&c)
        .map(|b| b.coeffs().to_vec())
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (coeffs, zero_band = None))]
fn alternation_check(coeffs: Vec<f64>, zero_band: Option<f64>) -> PyResult<AlternationVerdict> {
    let b = series::OddSeries::new(coeffs).map_err(to_py)?;
    let v = match zero_band {
        Some(band) => series::alternation_check_with(&b, band),
        None => series::alternation_check(&b),
    };
    Ok(AlternationVerdict {
        alternating: v.alternating,
        first_violation: v.first_violation,
        signs: v.signs.iter().map(|s| s.symbol()).collect(),
    })
}

#[pyfunction]
fn conditional_bound(v: f64) -> PyResult<f64> {
    series::conditional_bound(v).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (family, samples, seed, eta = None, epsilon = None, threads = 1))]
fn estimate_phi_i(
    py: Python<'_>,
    family: &str,
    samples: u64,
    seed: u64,
    eta: Option<f64>,
    epsilon: Option<f64>,
    threads: usize,
) -> PyResult<McEstimate> {
    let fam = self::family(family, eta, epsilon)?;
    let cfg = McConfig { threads };
    py.detach(|| mc::estimate_family_phi_i(&fam, samples, seed, &cfg))
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (family, t, samples, seed, eta = None, epsilon = None, threads = 1))]
#[allow(clippy::too_many_arguments)]
fn estimate_phi_t(
    py: Python<'_>,
    family: &str,
    t: f64,
    samples: u64,
    seed: u64,
    eta: Option<f64>,
    epsilon: Option<f64>,
    threads: usize,
) -> PyResult<McEstimate> {
    let fam = self::family(family, eta, epsilon)?;
    let cfg = McConfig { threads };
    py.detach(|| mc::estimate_family_phi_t(&fam, t, samples, seed, &cfg))
        .map(Into::into)
        .map_err(to_py)
}

/// `[(eta, value, error_estimate), ...]` on `steps + 1` grid points.
#[pyfunction]
#[pyo3(signature = (lo, hi, steps, tol = 1e-9, threads = 1))]
fn grid_scan(
    py: Python<'_>,
    lo: f64,
    hi: f64,
    steps: usize,
    tol: f64,
    threads: usize,
) -> PyResult<Vec<(f64, f64, f64)>> {
    let s = py
        .detach(|| optimize::grid_scan_with(lo, hi, steps, tol, threads))
        .map_err(to_py)?;
    Ok(s.points
        .iter()
        .map(|p| (p.eta, p.value, p.error_estimate))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (lo, hi, xtol = 1e-4, tol = 1e-9, threads = 1))]
fn maximize_eta(
    py: Python<'_>,
    lo: f64,
    hi: f64,
    xtol: f64,
    tol: f64,
    threads: usize,
) -> PyResult<Maximum> {
    let m = py
        .detach(|| optimize::maximize_eta_with(lo, hi, xtol, tol, threads))
        .map_err(to_py)?;
    Ok(Maximum {
        eta_star: m.eta_star,
        value_star: m.value_star,
        error_estimate: m.error_estimate,
        unimodal: m.unimodal,
        fallback_used: m.fallback_used,
        evaluations: m.evaluations,
    })
}

#[pymodule]
fn krivine(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add(
        "NonConvergenceError",
        m.py().get_type::<NonConvergenceError>(),
    )?;
    m.add_class::<QuadResult>()?;
    m.add_class::<VerificationReport>()?;
    m.add_class::<McEstimate>()?;
    m.add_class::<AlternationVerdict>()?;
    m.add_class::<Maximum>()?;
    m.add_function(wrap_pyfunction!(threshold, m)?)?;
    m.add_function(wrap_pyfunction!(krivine_bound, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_prob, m)?)?;
    m.add_function(wrap_pyfunction!(argsinh, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_j0, m)?)?;
    m.add_function(wrap_pyfunction!(phi_i, m)?)?;
    m.add_function(wrap_pyfunction!(phi_real_t, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(mehler_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(revert_odd_series, m)?)?;
    m.add_function(wrap_pyfunction!(alternation_check, m)?)?;
    m.add_function(wrap_pyfunction!(conditional_bound, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_phi_i, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_phi_t, m)?)?;
    m.add_function(wrap_pyfunction!(grid_scan, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_eta, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
