//! Frequency-domain half of the denoiser.
//!
//! The forward transform is unnormalized and the inverse carries the
//! `1/(H*W)` factor. [`Spectrum`] stores amplitude and phase in centered
//! coordinates with the DC bin at `(H/2, W/2)` (integer division), which is
//! where radial [`FrequencyMask`]s are defined.

pub mod fft;
mod filter;
mod mask;
mod spectrum;

pub use filter::{
    amplitude_swap, filter_amplitude, reconstruct, reconstruct_unclamped, Reconstruction,
    RECONSTRUCT_TOLERANCE,
};
pub use mask::{make_mask, FrequencyMask, MaskKind, MaskSpec};
pub use spectrum::{center, decompose, recompose, uncenter, Spectrum};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::image::{ImageBuffer, Plane};

/// Row-major grid of complex values in standard DFT index order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPlane {
    height: usize,
    width: usize,
    values: Vec<Complex64>,
}

impl ComplexPlane {
    pub fn new(height: usize, width: usize, values: Vec<Complex64>) -> Result<Self> {
        if height == 0 || width == 0 || values.len() != height * width {
            return Err(Error::invalid(
                "complex plane",
                format!("expected {height}x{width} values, got {}", values.len()),
            ));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::invalid("complex plane", "values must be finite"));
        }
        Ok(ComplexPlane {
            height,
            width,
            values,
        })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        assert!(height > 0 && width > 0);
        ComplexPlane {
            height,
            width,
            values: vec![Complex64::new(0.0, 0.0); height * width],
        }
    }

    pub fn from_real(plane: &Plane) -> Self {
        ComplexPlane {
            height: plane.height(),
            width: plane.width(),
            values: plane
                .as_slice()
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(height: usize, width: usize, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), height * width);
        ComplexPlane {
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

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Complex64 {
        self.values[u * self.width + v]
    }

    pub fn set(&mut self, u: usize, v: usize, value: Complex64) {
        self.values[u * self.width + v] = value;
    }

    pub fn real_part(&self) -> Plane {
        Plane::new(
            self.height,
            self.width,
            self.values.iter().map(|v| v.re).collect(),
        )
        .expect("dimensions already validated")
    }

    /// `max |z|` over all bins.
    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest `|F(u,v) - conj(F(-u,-v))|`; zero for the spectrum of a real
    /// image up to rounding.
    pub fn conjugate_symmetry_error(&self) -> f64 {
        let (h, w) = self.dims();
        let mut worst: f64 = 0.0;
        for u in 0..h {
            for v in 0..w {
                let mirror = self.get((h - u) % h, (w - v) % w).conj();
                worst = worst.max((self.get(u, v) - mirror).norm());
            }
        }
        worst
    }

    /// `max |Im| / max(1, max |Re|)`.
    pub fn imaginary_residue(&self) -> f64 {
        let max_im = self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
        let max_re = self.values.iter().map(|v| v.re.abs()).fold(0.0, f64::max);
        max_im / max_re.max(1.0)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexPlane {
    type Output = Complex64;

    fn index(&self, (u, v): (usize, usize)) -> &Complex64 {
        &self.values[u * self.width + v]
    }
}

/// Unnormalized forward 2D DFT of an image.
pub fn fft2(img: &ImageBuffer) -> ComplexPlane {
    fft2_complex(&ComplexPlane::from_real(&img.to_plane()))
}

/// Unnormalized forward 2D DFT of arbitrary complex data.
pub fn fft2_complex(plane: &ComplexPlane) -> ComplexPlane {
    let (h, w) = plane.dims();
    let mut values = plane.values.clone();
    fft::transform_2d(&mut values, h, w, false);
    ComplexPlane::from_vec_unchecked(h, w, values)
}

/// Inverse 2D DFT including the `1/(H*W)` factor.
pub fn ifft2(plane: &ComplexPlane) -> ComplexPlane {
    let (h, w) = plane.dims();
    let mut values = plane.values.clone();
    fft::transform_2d(&mut values, h, w, true);
    let scale = 1.0 / (h * w) as f64;
    for v in &mut values {
        *v *= scale;
    }
    ComplexPlane::from_vec_unchecked(h, w, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::SeededRng;

    fn random_image(h: usize, w: usize, seed: u64) -> ImageBuffer {
        let mut rng = SeededRng::new(seed);
        ImageBuffer::from_fn(h, w, |_, _| rng.uniform())
    }

    #[test]
    fn constant_image_is_dc_only() {
        let img = ImageBuffer::filled(6, 9, 0.25).unwrap();
        let f = fft2(&img);
        assert!((f[(0, 0)].re - 0.25 * 54.0).abs() < 1e-9);
        for u in 0..6 {
            for v in 0..9 {
                if (u, v) != (0, 0) {
                    assert!(f[(u, v)].norm() < 1e-9, "bin ({u},{v}) = {}", f[(u, v)]);
                }
            }
        }
    }

    #[test]
    fn impulse_is_flat() {
        let img = ImageBuffer::from_fn(5, 8, |r, c| if r == 0 && c == 0 { 1.0 } else { 0.0 });
        let f = fft2(&img);
        for z in f.values() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn roundtrip_64() {
        let img = random_image(64, 64, 5);
        let back = ifft2(&fft2(&img));
        let err = back
            .values()
            .iter()
            .zip(img.pixels())
            .map(|(z, &x)| (z - Complex64::new(x, 0.0)).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-9);
    }

    #[test]
    fn inverse_of_zero_and_dc() {
        let zero = ComplexPlane::zeros(4, 6);
        assert!(ifft2(&zero).values().iter().all(|z| z.norm() == 0.0));
        let mut dc = ComplexPlane::zeros(4, 6);
        dc.set(0, 0, Complex64::new(24.0, 0.0));
        for z in ifft2(&dc).values() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn real_image_spectrum_is_conjugate_symmetric() {
        let f = fft2(&random_image(7, 12, 8));
        assert!(f.conjugate_symmetry_error() < 1e-9);
    }

    #[test]
    fn constructor_validates() {
        assert!(ComplexPlane::new(2, 2, vec![Complex64::new(0.0, 0.0); 3]).is_err());
        assert!(ComplexPlane::new(1, 1, vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }
}
