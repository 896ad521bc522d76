//! Seeded synthetic noise.
//!
//! All randomness in the crate comes from [`SeededRng`], a xoshiro256**
//! generator whose state is expanded from a 64-bit seed with SplitMix64.
//! Both algorithms are fully specified integer recurrences, so a seed gives
//! the same stream on every platform. Gaussian deviates use the Box–Muller
//! transform on that stream.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::image::{clamp_unit, ImageBuffer};

/// Portable seeded generator (xoshiro256** seeded through SplitMix64).
#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: Xoshiro256StarStar,
    spare_normal: Option<f64>,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: Xoshiro256StarStar::seed_from_u64(seed),
            spare_normal: None,
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`.
    #[inline]
    fn uniform_open_low(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Unbiased integer in `[0, bound)`, by rejection. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Standard normal deviate (Box–Muller, both outputs used).
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = self.uniform_open_low();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.spare_normal = Some(radius * theta.sin());
        radius * theta.cos()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseKind {
    /// Additive i.i.d. `N(0, sigma^2)`, then clamped to `[0, 1]`.
    Gaussian { sigma: f64 },
    /// `round(density * N)` distinct pixels forced to 0 or 1.
    SaltPepper { density: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn gaussian(sigma: f64, seed: u64) -> Result<Self> {
        let spec = NoiseSpec {
            kind: NoiseKind::Gaussian { sigma },
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn salt_pepper(density: f64, seed: u64) -> Result<Self> {
        let spec = NoiseSpec {
            kind: NoiseKind::SaltPepper { density },
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            NoiseKind::Gaussian { sigma } if !(sigma.is_finite() && sigma >= 0.0) => {
                Err(Error::invalid("sigma", format!("{sigma} must be finite and >= 0")))
            }
            NoiseKind::SaltPepper { density } if !(0.0..=1.0).contains(&density) => {
                Err(Error::invalid("density", format!("{density} must be in [0, 1]")))
            }
            _ => Ok(()),
        }
    }
}

pub fn add_noise(img: &ImageBuffer, spec: &NoiseSpec) -> Result<ImageBuffer> {
    spec.validate()?;
    let mut rng = SeededRng::new(spec.seed);
    let mut pixels = img.pixels().to_vec();
    match spec.kind {
        NoiseKind::Gaussian { sigma } => {
            if sigma > 0.0 {
                for v in &mut pixels {
                    *v = clamp_unit(*v + sigma * rng.standard_normal());
                }
            }
        }
        NoiseKind::SaltPepper { density } => {
            let n = pixels.len();
            let count = ((density * n as f64).round() as usize).min(n);
            // partial Fisher-Yates: the first `count` slots are a uniform
            // sample without replacement
            let mut order: Vec<usize> = (0..n).collect();
            for i in 0..count {
                let j = i + rng.below((n - i) as u64) as usize;
                order.swap(i, j);
                pixels[order[i]] = if rng.coin() { 1.0 } else { 0.0 };
            }
        }
    }
    Ok(ImageBuffer::from_vec_unchecked(
        img.height(),
        img.width(),
        pixels,
    ))
}
