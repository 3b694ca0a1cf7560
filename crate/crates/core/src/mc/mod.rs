//! Seeded Monte Carlo estimators of `Phi(t)` and `Phi(i)/i` for arbitrary
//! odd pairs `F, G : R^n -> R`.
//!
//! Samples are grouped in fixed batches of [`BATCH_SIZE`]; batch `b` draws
//! from `SplitMix64::substream(seed, b)` and per-batch statistics are merged
//! in batch order. The result is therefore bit-identical for any thread
//! count.

pub mod rng;

use std::f64::consts::SQRT_2;

use crate::error::{invalid, Result};
use crate::parallel::map_ordered;
use crate::specfun::hermite_prob;
use rng::{NormalStream, SplitMix64};

pub const BATCH_SIZE: u64 = 1 << 16;

/// A pair of odd functions on `R^n`.
pub trait OddPair: Sync {
    fn dim(&self) -> usize;
    fn f(&self, x: &[f64]) -> f64;
    fn g(&self, y: &[f64]) -> f64;
}

/// Built-in families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `n = 1`, `F = G = x0`.
    Identity1,
    /// `n = 3`, the rotation family with `eps = eta / 2`.
    Rotation3 { eta: f64 },
    /// `n = 2`, `F = G = x0 + eps He5(x1)`.
    Hermite5 { epsilon: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Identity1 => "identity1",
            Family::Rotation3 { .. } => "rotation3",
            Family::Hermite5 { .. } => "hermite5",
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Family::Rotation3 { eta } if !eta.is_finite() => {
                invalid(format!("eta must be finite, got {eta}"))
            }
            Family::Hermite5 { epsilon } if !epsilon.is_finite() => {
                invalid(format!("epsilon must be finite, got {epsilon}"))
            }
            _ => Ok(()),
        }
    }
}

impl OddPair for Family {
    fn dim(&self) -> usize {
        match self {
            Family::Identity1 => 1,
            Family::Rotation3 { .. } => 3,
            Family::Hermite5 { .. } => 2,
        }
    }

    fn f(&self, x: &[f64]) -> f64 {
        match *self {
            Family::Identity1 => x[0],
            Family::Rotation3 { eta } => {
                let (s, c) = (0.5 * eta * hermite_prob(2, x[0])).sin_cos();
                x[1] * c + x[2] * s
            }
            Family::Hermite5 { epsilon } => x[0] + epsilon * hermite_prob(5, x[1]),
        }
    }

    fn g(&self, y: &[f64]) -> f64 {
        match *self {
            Family::Rotation3 { eta } => {
                let (s, c) = (0.5 * eta * hermite_prob(2, y[0])).sin_cos();
                y[1] * c - y[2] * s
            }
            _ => self.f(y),
        }
    }
}

/// Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(samples)`.
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `(mean - reference) / stderr`; infinite when the stderr vanishes and
    /// the mean misses the reference.
    pub fn z_score(&self, reference: f64) -> f64 {
        let d = self.mean - reference;
        if self.stderr > 0.0 {
            d / self.stderr
        } else if d == 0.0 {
            0.0
        } else {
            d.signum() * f64::INFINITY
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub threads: usize,
}

impl Default for McConfig {
    fn default() -> Self {
        Self { threads: 1 }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.count += 1;
        let d = v - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (v - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Moments {
            count,
            mean: self.mean + d * w,
            m2: self.m2 + other.m2 + d * d * self.count as f64 * w,
        }
    }
}

fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

fn run_batches<S>(samples: u64, seed: u64, cfg: &McConfig, draw: S) -> McEstimate
where
    S: Fn(&mut NormalStream, &mut Vec<f64>, &mut Vec<f64>) -> f64 + Sync + Send,
{
    let batches: Vec<(u64, u64)> = (0..samples.div_ceil(BATCH_SIZE))
        .map(|b| (b, BATCH_SIZE.min(samples - b * BATCH_SIZE)))
        .collect();
    let parts = map_ordered(batches, cfg.threads, |(b, n)| {
        let mut normals = NormalStream::new(SplitMix64::substream(seed, b));
        let mut x = Vec::new();
        let mut y = Vec::new();
        let mut m = Moments::default();
        for _ in 0..n {
            m.push(draw(&mut normals, &mut x, &mut y));
        }
        m
    });
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);
    let stderr = if total.count > 1 {
        (total.m2 / (total.count - 1) as f64).sqrt() / (total.count as f64).sqrt()
    } else {
        0.0
    };
    McEstimate {
        mean: total.mean,
        stderr,
        samples,
        seed,
    }
}

fn check_pair<P: OddPair + ?Sized>(pair: &P, samples: u64) -> Result<usize> {
    if samples == 0 {
        return invalid("at least one sample is required");
    }
    let n = pair.dim();
    if n == 0 {
        return invalid("dimension must be at least 1");
    }
    Ok(n)
}

/// `Phi(t) = E[sign F(X) sign G(Y)]` with coordinate pairs of correlation `t`,
/// drawn as `Y_i = t X_i + sqrt(1 - t^2) Z_i`. Per sample the stream yields
/// `X_0..X_{n-1}` then `Z_0..Z_{n-1}`.
pub fn estimate_phi_t<P: OddPair + ?Sized>(
    pair: &P,
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    estimate_phi_t_with(pair, t, samples, seed, &McConfig::default())
}

pub fn estimate_phi_t_with<P: OddPair + ?Sized>(
    pair: &P,
    t: f64,
    samples: u64,
    seed: u64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    if !(t.abs() <= 1.0) {
        return invalid(format!("correlation must satisfy |t| <= 1, got {t}"));
    }
    let n = check_pair(pair, samples)?;
    let s = (1.0 - t * t).sqrt();
    Ok(run_batches(samples, seed, cfg, |normals, x, y| {
        x.clear();
        y.clear();
        x.extend((0..n).map(|_| normals.next()));
        y.extend(x.iter().map(|&xi| t * xi + s * normals.next()));
        sign(pair.f(x)) * sign(pair.g(y))
    }))
}

/// `Phi(i)/i` as `2^{n/2} E[sign F(xi) sign G(zeta) sin(<xi, zeta>/2)]` with
/// `xi, zeta` independent, every coordinate normal of variance 2. Per sample
/// the stream yields the `n` coordinates of `xi`, then those of `zeta`.
pub fn estimate_phi_i<P: OddPair + ?Sized>(
    pair: &P,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    estimate_phi_i_with(pair, samples, seed, &McConfig::default())
}

pub fn estimate_phi_i_with<P: OddPair + ?Sized>(
    pair: &P,
    samples: u64,
    seed: u64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let n = check_pair(pair, samples)?;
    let weight = 2f64.powf(0.5 * n as f64);
    Ok(run_batches(samples, seed, cfg, |normals, x, y| {
        x.clear();
        y.clear();
        x.extend((0..n).map(|_| SQRT_2 * normals.next()));
        y.extend((0..n).map(|_| SQRT_2 * normals.next()));
        let dot: f64 = x.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
        weight * sign(pair.f(x)) * sign(pair.g(y)) * (0.5 * dot).sin()
    }))
}

/// Validated built-in family estimate, used by the front ends.
pub fn estimate_family_phi_i(
    family: &Family,
    samples: u64,
    seed: u64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    family.validate()?;
    estimate_phi_i_with(family, samples, seed, cfg)
}

pub fn estimate_family_phi_t(
    family: &Family,
    t: f64,
    samples: u64,
    seed: u64,
    cfg: &McConfig,
) -> Result<McEstimate> {
    family.validate()?;
    estimate_phi_t_with(family, t, samples, seed, cfg)
}

/// `Phi(i)/i` for the `n = 2` Hermite family at each `epsilon`, every point
/// using the same seed.
pub fn sweep_hermite5(epsilons: &[f64], samples: u64, seed: u64) -> Result<Vec<(f64, McEstimate)>> {
    sweep_hermite5_with(epsilons, samples, seed, &McConfig::default())
}

pub fn sweep_hermite5_with(
    epsilons: &[f64],
    samples: u64,
    seed: u64,
    cfg: &McConfig,
) -> Result<Vec<(f64, McEstimate)>> {
    epsilons
        .iter()
        .map(|&epsilon| {
            if !(epsilon >= 0.0) {
                return invalid(format!("epsilon must be non-negative, got {epsilon}"));
            }
            let est = estimate_family_phi_i(&Family::Hermite5 { epsilon }, samples, seed, cfg)?;
            Ok((epsilon, est))
        })
        .collect()
}
