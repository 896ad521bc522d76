//! Canny edge detection and the edge-weighted enhancement blend.
//!
//! [`canny`] runs four stages, each exposed on its own: Gaussian smoothing
//! ([`gaussian_blur`]), Sobel gradients ([`sobel_gradients`]), directional
//! thinning ([`non_max_suppression`]), and double thresholding with
//! connectivity ([`hysteresis_threshold`]). Borders are reflect-padded
//! (`dcba|abcd`) throughout.

mod blur;
mod enhance;
mod gradient;
mod hysteresis;
mod suppress;

pub use blur::{gaussian_blur, gaussian_kernel};
pub use enhance::enhance_edges;
pub use gradient::sobel_gradients;
pub use hysteresis::hysteresis_threshold;
pub use suppress::non_max_suppression;

pub(crate) use gradient::normalize_angle;

use crate::error::{Error, Result};
use crate::image::{ImageBuffer, Plane};

/// Binary edge raster; every value is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMap {
    height: usize,
    width: usize,
    values: Vec<u8>,
}

impl EdgeMap {
    pub fn new(height: usize, width: usize, values: Vec<u8>) -> Result<Self> {
        if height == 0 || width == 0 || values.len() != height * width {
            return Err(Error::invalid(
                "edge map",
                format!("expected {height}x{width} values, got {}", values.len()),
            ));
        }
        if values.iter().any(|&v| v > 1) {
            return Err(Error::invalid("edge map", "values must be 0 or 1"));
        }
        Ok(EdgeMap {
            height,
            width,
            values,
        })
    }

    pub fn empty(height: usize, width: usize) -> Self {
        EdgeMap::from_raw(height, width, vec![0; height * width])
    }

    pub(crate) fn from_raw(height: usize, width: usize, values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&v| v <= 1));
        EdgeMap {
            height,
            width,
            values,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    #[inline]
    pub fn is_edge(&self, row: usize, col: usize) -> bool {
        self.values[row * self.width + col] == 1
    }

    pub fn count(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    /// Edge pixels as `(row, col)` in row-major order.
    pub fn coords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.width;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(move |(i, _)| (i / w, i % w))
    }

    /// 1.0 on edges, 0.0 elsewhere.
    pub fn to_image(&self) -> ImageBuffer {
        let pixels = self.values.iter().map(|&v| f64::from(v)).collect();
        ImageBuffer::from_vec_unchecked(self.height, self.width, pixels)
    }

    /// Pixelwise F1 overlap `2|A∩B| / (|A| + |B|)`. Two empty maps score 1.
    pub fn f1_score(&self, reference: &EdgeMap) -> Result<f64> {
        if self.dims() != reference.dims() {
            return Err(Error::mismatch(self.dims(), reference.dims()));
        }
        let both = self
            .values
            .iter()
            .zip(&reference.values)
            .filter(|(&a, &b)| a == 1 && b == 1)
            .count();
        let total = self.count() + reference.count();
        if total == 0 {
            return Ok(1.0);
        }
        Ok(2.0 * both as f64 / total as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CannyParams {
    pub sigma: f64,
    /// Weak threshold as a fraction of the largest thinned magnitude.
    pub low_ratio: f64,
    /// Strong threshold as a fraction of the largest thinned magnitude.
    pub high_ratio: f64,
}

impl Default for CannyParams {
    fn default() -> Self {
        CannyParams {
            sigma: 1.4,
            low_ratio: 0.1,
            high_ratio: 0.3,
        }
    }
}

impl CannyParams {
    pub fn new(sigma: f64, low_ratio: f64, high_ratio: f64) -> Result<Self> {
        let p = CannyParams {
            sigma,
            low_ratio,
            high_ratio,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma.is_finite() && self.sigma > 0.0) {
            return Err(Error::invalid("sigma", format!("{} must be > 0", self.sigma)));
        }
        if !(self.low_ratio > 0.0 && self.low_ratio < 1.0) {
            return Err(Error::invalid(
                "low_ratio",
                format!("{} must be in (0, 1)", self.low_ratio),
            ));
        }
        if !(self.high_ratio > 0.0 && self.high_ratio <= 1.0) {
            return Err(Error::invalid(
                "high_ratio",
                format!("{} must be in (0, 1]", self.high_ratio),
            ));
        }
        if self.low_ratio >= self.high_ratio {
            return Err(Error::invalid(
                "low_ratio",
                format!(
                    "{} must be below high_ratio {}",
                    self.low_ratio, self.high_ratio
                ),
            ));
        }
        Ok(())
    }
}

/// Gradient magnitude and direction (radians in `(-pi, pi]`).
#[derive(Debug, Clone, PartialEq)]
pub struct GradientField {
    pub magnitude: Plane,
    pub direction: Plane,
}

/// Blur, Sobel, non-maximum suppression, hysteresis.
pub fn canny(img: &ImageBuffer, params: &CannyParams) -> Result<EdgeMap> {
    params.validate()?;
    img.ensure_at_least(3)?;
    let blurred = blur::blur_plane(&img.to_plane(), params.sigma)?;
    let field = gradient::sobel_plane(&blurred);
    let thin = non_max_suppression(&field);
    Ok(hysteresis_threshold(&thin, params))
}

/// Symmetric reflection of an out-of-range index into `[0, n)`.
#[inline]
pub(crate) fn reflect(i: isize, n: usize) -> usize {
    let n = n as isize;
    let period = 2 * n;
    let m = i.rem_euclid(period);
    (if m < n { m } else { period - 1 - m }) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_indices() {
        assert_eq!(reflect(-1, 4), 0);
        assert_eq!(reflect(-2, 4), 1);
        assert_eq!(reflect(4, 4), 3);
        assert_eq!(reflect(5, 4), 2);
        assert_eq!(reflect(9, 4), 1);
        assert_eq!(reflect(-7, 1), 0);
        assert_eq!(reflect(2, 4), 2);
    }

    #[test]
    fn canny_params_validation() {
        assert!(CannyParams::new(1.4, 0.1, 0.3).is_ok());
        assert!(CannyParams::new(0.0, 0.1, 0.3).is_err());
        assert!(CannyParams::new(1.0, 0.3, 0.3).is_err());
        assert!(CannyParams::new(1.0, 0.0, 0.3).is_err());
        assert!(CannyParams::new(1.0, 0.1, 1.1).is_err());
        assert!(CannyParams::new(1.0, 0.1, 1.0).is_ok());
    }

    #[test]
    fn edge_map_validation_and_f1() {
        assert!(EdgeMap::new(1, 2, vec![0, 2]).is_err());
        let a = EdgeMap::new(1, 4, vec![1, 1, 0, 0]).unwrap();
        let b = EdgeMap::new(1, 4, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(a.f1_score(&b).unwrap(), 0.5);
        assert_eq!(a.f1_score(&a).unwrap(), 1.0);
        assert_eq!(EdgeMap::empty(1, 4).f1_score(&EdgeMap::empty(1, 4)).unwrap(), 1.0);
        assert_eq!(EdgeMap::empty(1, 4).f1_score(&a).unwrap(), 0.0);
    }

    #[test]
    fn canny_on_constant_is_empty() {
        let img = ImageBuffer::filled(16, 16, 0.4).unwrap();
        assert_eq!(canny(&img, &CannyParams::default()).unwrap().count(), 0);
    }

    #[test]
    fn canny_rejects_tiny_images() {
        let img = ImageBuffer::filled(2, 16, 0.4).unwrap();
        assert!(matches!(
            canny(&img, &CannyParams::default()),
            Err(Error::ImageTooSmall { .. })
        ));
    }
}
