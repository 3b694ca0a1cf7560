//! The random stream behind every Monte Carlo estimate.
//!
//! Uniforms come from SplitMix64 (Steele, Lea and Flood) with the usual
//! constants; normals from the Box-Muller transform, both outputs used in
//! order (cosine branch first). Everything is plain 64-bit integer arithmetic
//! plus `ln`, `sqrt`, `sin` and `cos`, so the stream can be reproduced in any
//! language.

use std::f64::consts::TAU;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_MUL_1: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX_MUL_2: u64 = 0x94D0_49BB_1331_11EB;

/// SplitMix64 output function.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(MIX_MUL_1);
    z = (z ^ (z >> 27)).wrapping_mul(MIX_MUL_2);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Independent stream number `index` derived from `seed`; its initial
    /// state is `mix64(seed ^ mix64(index))`.
    pub fn substream(seed: u64, index: u64) -> Self {
        Self::new(mix64(seed ^ mix64(index)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform on `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Standard normal deviates by Box-Muller.
#[derive(Debug, Clone)]
pub struct NormalStream {
    uniform: SplitMix64,
    spare: Option<f64>,
}

impl NormalStream {
    pub fn new(uniform: SplitMix64) -> Self {
        Self {
            uniform,
            spare: None,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - u lies in (0, 1], keeping the logarithm finite
        let u1 = 1.0 - self.uniform.next_f64();
        let u2 = self.uniform.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_outputs() {
        // first outputs for seed 1234567, as published with the algorithm
        let mut g = SplitMix64::new(1_234_567);
        let expected = [
            6_457_827_717_110_365_317u64,
            3_203_168_211_198_807_973,
            9_817_491_932_198_370_423,
            4_593_380_528_125_082_431,
            16_408_922_859_458_223_821,
        ];
        for e in expected {
            assert_eq!(g.next_u64(), e);
        }
    }

    #[test]
    fn uniforms_in_range() {
        let mut g = SplitMix64::new(0);
        for _ in 0..10_000 {
            let u = g.next_f64();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn normal_moments() {
        let mut n = NormalStream::new(SplitMix64::new(99));
        let count = 200_000;
        let (mut s1, mut s2) = (0.0, 0.0);
        for _ in 0..count {
            let z = n.next();
            s1 += z;
            s2 += z * z;
        }
        let mean = s1 / count as f64;
        let var = s2 / count as f64 - mean * mean;
        assert!(mean.abs() < 0.01);
        assert!((var - 1.0).abs() < 0.01);
    }

    #[test]
    fn substreams_differ() {
        let mut a = SplitMix64::substream(7, 0);
        let mut b = SplitMix64::substream(7, 1);
        assert_ne!(a.next_u64(), b.next_u64());
        assert_eq!(SplitMix64::substream(7, 0).state, mix64(7));
    }
}
