use crate::error::{Error, Result};
use crate::image::Plane;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskKind {
    /// Hard circular cutoff.
    Ideal,
    /// `exp(-D^2 / (2 D0^2))`
    Gaussian,
    /// `1 / (1 + (D / D0)^(2n))`
    Butterworth { order: u32 },
}

impl MaskKind {
    pub fn name(&self) -> &'static str {
        match self {
            MaskKind::Ideal => "ideal",
            MaskKind::Gaussian => "gaussian",
            MaskKind::Butterworth { .. } => "butterworth",
        }
    }
}

/// Radial low-pass profile. The cutoff radius is `cutoff_fraction` of the
/// largest center distance `sqrt((H/2)^2 + (W/2)^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaskSpec {
    pub kind: MaskKind,
    pub cutoff_fraction: f64,
}

impl Default for MaskSpec {
    fn default() -> Self {
        MaskSpec {
            kind: MaskKind::Ideal,
            cutoff_fraction: 0.3,
        }
    }
}

impl MaskSpec {
    pub fn new(kind: MaskKind, cutoff_fraction: f64) -> Result<Self> {
        let spec = MaskSpec {
            kind,
            cutoff_fraction,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cutoff_fraction > 0.0 && self.cutoff_fraction <= 1.0) {
            return Err(Error::invalid(
                "cutoff_fraction",
                format!("{} must be in (0, 1]", self.cutoff_fraction),
            ));
        }
        if let MaskKind::Butterworth { order: 0 } = self.kind {
            return Err(Error::invalid("order", "butterworth order must be >= 1"));
        }
        Ok(())
    }
}

/// Real weights in `[0, 1]` laid out in centered spectrum coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyMask {
    weights: Plane,
}

impl FrequencyMask {
    /// Wraps an arbitrary centered weight plane, checking range and
    /// conjugate symmetry.
    pub fn from_plane(weights: Plane) -> Result<Self> {
        if weights
            .as_slice()
            .iter()
            .any(|m| !(0.0..=1.0).contains(m))
        {
            return Err(Error::invalid("mask", "weights must lie in [0, 1]"));
        }
        let mask = FrequencyMask { weights };
        if mask.asymmetry() != 0.0 {
            return Err(Error::invalid(
                "mask",
                "weights must be symmetric under (u, v) -> (-u, -v)",
            ));
        }
        Ok(mask)
    }

    pub fn weights(&self) -> &Plane {
        &self.weights
    }

    pub fn dims(&self) -> (usize, usize) {
        self.weights.dims()
    }

    /// Number of bins with non-zero weight.
    pub fn passband_count(&self) -> usize {
        self.weights.as_slice().iter().filter(|&&m| m > 0.0).count()
    }

    /// Largest `|M(u,v) - M(-u,-v)|` with both indices centered.
    pub fn asymmetry(&self) -> f64 {
        let (h, w) = self.dims();
        let mirror = |i: usize, n: usize| {
            // centered -> standard -> negate -> centered
            let k = (i + n - n / 2) % n;
            ((n - k) % n + n / 2) % n
        };
        let mut worst: f64 = 0.0;
        for r in 0..h {
            for c in 0..w {
                let d = self.weights.get(r, c) - self.weights.get(mirror(r, h), mirror(c, w));
                worst = worst.max(d.abs());
            }
        }
        worst
    }
}

pub fn make_mask(height: usize, width: usize, spec: &MaskSpec) -> Result<FrequencyMask> {
    spec.validate()?;
    if height == 0 || width == 0 {
        return Err(Error::invalid("dimensions", "height and width must be positive"));
    }
    let half_h = height as f64 / 2.0;
    let half_w = width as f64 / 2.0;
    let d0 = spec.cutoff_fraction * (half_h * half_h + half_w * half_w).sqrt();
    let (ch, cw) = ((height / 2) as f64, (width / 2) as f64);
    let weights = Plane::from_fn(height, width, |r, c| {
        let dr = r as f64 - ch;
        let dc = c as f64 - cw;
        let d2 = dr * dr + dc * dc;
        match spec.kind {
            MaskKind::Ideal => {
                if d2 <= d0 * d0 {
                    1.0
                } else {
                    0.0
                }
            }
            MaskKind::Gaussian => (-d2 / (2.0 * d0 * d0)).exp(),
            MaskKind::Butterworth { order } => {
                1.0 / (1.0 + (d2 / (d0 * d0)).powi(order as i32))
            }
        }
    });
    Ok(FrequencyMask { weights })
}
