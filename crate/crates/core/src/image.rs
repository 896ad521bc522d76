//! Grayscale rasters.
//!
//! [`ImageBuffer`] holds intensities in `[0, 1]` and is what every public
//! image operation consumes and produces. [`Plane`] is the unconstrained
//! real-valued raster used for intermediates such as gradient magnitudes,
//! amplitude and phase spectra, and frequency masks.

use crate::error::{Error, Result};

/// Row-major real-valued raster with no range constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Plane {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        check_dims(height, width, data.len())?;
        Ok(Plane {
            height,
            width,
            data,
        })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Plane::filled(height, width, 0.0)
    }

    pub fn filled(height: usize, width: usize, value: f64) -> Self {
        assert!(height > 0 && width > 0, "plane dimensions must be positive");
        Plane {
            height,
            width,
            data: vec![value; height * width],
        }
    }

    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(height > 0 && width > 0, "plane dimensions must be positive");
        let mut data = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                data.push(f(r, c));
            }
        }
        Plane {
            height,
            width,
            data,
        }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.width + col] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn max(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Grayscale image with every pixel finite and inside `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuffer {
    height: usize,
    width: usize,
    pixels: Vec<f64>,
}

impl ImageBuffer {
    /// Builds an image, rejecting wrong lengths and out-of-range or
    /// non-finite pixels.
    pub fn new(height: usize, width: usize, pixels: Vec<f64>) -> Result<Self> {
        check_dims(height, width, pixels.len())?;
        if let Some((i, v)) = pixels
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && (0.0..=1.0).contains(*v)))
        {
            return Err(Error::invalid(
                "pixels",
                format!("pixel {i} = {v} is outside [0, 1]"),
            ));
        }
        Ok(ImageBuffer {
            height,
            width,
            pixels,
        })
    }

    /// Builds an image by clamping every value into `[0, 1]`. NaN maps to 0.
    pub fn from_clamped(height: usize, width: usize, mut pixels: Vec<f64>) -> Result<Self> {
        check_dims(height, width, pixels.len())?;
        for v in &mut pixels {
            *v = clamp_unit(*v);
        }
        Ok(ImageBuffer {
            height,
            width,
            pixels,
        })
    }

    pub fn filled(height: usize, width: usize, value: f64) -> Result<Self> {
        if !(height > 0 && width > 0) {
            return Err(Error::invalid("dimensions", "height and width must be positive"));
        }
        ImageBuffer::new(height, width, vec![value; height * width])
    }

    /// Builds an image from a generator; generated values are clamped.
    pub fn from_fn(height: usize, width: usize, f: impl FnMut(usize, usize) -> f64) -> Self {
        let plane = Plane::from_fn(height, width, f);
        ImageBuffer::from_plane_clamped(plane)
    }

    pub fn from_plane_clamped(plane: Plane) -> Self {
        let (height, width) = plane.dims();
        let mut pixels = plane.into_vec();
        for v in &mut pixels {
            *v = clamp_unit(*v);
        }
        ImageBuffer {
            height,
            width,
            pixels,
        }
    }

    pub(crate) fn from_vec_unchecked(height: usize, width: usize, pixels: Vec<f64>) -> Self {
        debug_assert_eq!(pixels.len(), height * width);
        debug_assert!(pixels.iter().all(|v| (0.0..=1.0).contains(v)));
        ImageBuffer {
            height,
            width,
            pixels,
        }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<f64> {
        self.pixels
    }

    pub fn to_plane(&self) -> Plane {
        Plane {
            height: self.height,
            width: self.width,
            data: self.pixels.clone(),
        }
    }

    /// Quantizes to 8 bits and back, the same mapping the file codecs use.
    pub fn quantized(&self) -> ImageBuffer {
        let pixels = self
            .pixels
            .iter()
            .map(|&v| f64::from(quantize_u8(v)) / 255.0)
            .collect();
        ImageBuffer::from_vec_unchecked(self.height, self.width, pixels)
    }

    pub(crate) fn ensure_same_dims(&self, other: &ImageBuffer) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::mismatch(self.dims(), other.dims()));
        }
        Ok(())
    }

    pub(crate) fn ensure_at_least(&self, min: usize) -> Result<()> {
        if self.height < min || self.width < min {
            return Err(Error::ImageTooSmall {
                height: self.height,
                width: self.width,
                min,
            });
        }
        Ok(())
    }
}

/// `round(v * 255)` clamped to `[0, 255]`; halves round up.
#[inline]
pub fn quantize_u8(v: f64) -> u8 {
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

#[inline]
pub(crate) fn clamp_unit(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v.clamp(0.0, 1.0)
    }
}

fn check_dims(height: usize, width: usize, len: usize) -> Result<()> {
    if height == 0 || width == 0 {
        return Err(Error::invalid("dimensions", "height and width must be positive"));
    }
    match height.checked_mul(width) {
        Some(n) if n == len => Ok(()),
        _ => Err(Error::invalid(
            "pixels",
            format!("expected {height}x{width} values, got {len}"),
        )),
    }
}
