use num_complex::Complex64;

use crate::edge::normalize_angle;
use crate::error::{Error, Result};
use crate::image::{ImageBuffer, Plane};

use super::ComplexPlane;

/// Amplitude and phase planes in centered coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    amplitude: Plane,
    phase: Plane,
}

impl Spectrum {
    /// Pairs centered amplitude and phase planes. Amplitudes must be finite
    /// and non-negative; phases finite and inside `(-pi, pi]`.
    pub fn new(amplitude: Plane, phase: Plane) -> Result<Self> {
        if amplitude.dims() != phase.dims() {
            return Err(Error::mismatch(amplitude.dims(), phase.dims()));
        }
        if amplitude
            .as_slice()
            .iter()
            .any(|a| !(a.is_finite() && *a >= 0.0))
        {
            return Err(Error::invalid("amplitude", "must be finite and >= 0"));
        }
        let pi = std::f64::consts::PI;
        if phase.as_slice().iter().any(|p| !(*p > -pi && *p <= pi)) {
            return Err(Error::invalid("phase", "must lie in (-pi, pi]"));
        }
        Ok(Spectrum { amplitude, phase })
    }

    pub(crate) fn from_parts_unchecked(amplitude: Plane, phase: Plane) -> Self {
        debug_assert_eq!(amplitude.dims(), phase.dims());
        Spectrum { amplitude, phase }
    }

    pub fn amplitude(&self) -> &Plane {
        &self.amplitude
    }

    pub fn phase(&self) -> &Plane {
        &self.phase
    }

    pub fn into_parts(self) -> (Plane, Plane) {
        (self.amplitude, self.phase)
    }

    pub fn dims(&self) -> (usize, usize) {
        self.amplitude.dims()
    }

    /// Centered position of the zero-frequency bin.
    pub fn dc_index(&self) -> (usize, usize) {
        let (h, w) = self.dims();
        (h / 2, w / 2)
    }

    /// `log(1 + A)` scaled by its maximum into `[0, 1]`.
    pub fn amplitude_image(&self) -> ImageBuffer {
        let logs: Vec<f64> = self.amplitude.as_slice().iter().map(|a| a.ln_1p()).collect();
        let peak = logs.iter().copied().fold(0.0, f64::max);
        let scale = if peak > 0.0 { 1.0 / peak } else { 0.0 };
        let (h, w) = self.dims();
        ImageBuffer::from_clamped(h, w, logs.into_iter().map(|v| v * scale).collect())
            .expect("dimensions already validated")
    }

    /// `(phase + pi) / (2 pi)`.
    pub fn phase_image(&self) -> ImageBuffer {
        let pi = std::f64::consts::PI;
        let (h, w) = self.dims();
        let pixels = self
            .phase
            .as_slice()
            .iter()
            .map(|p| (p + pi) / (2.0 * pi))
            .collect();
        ImageBuffer::from_clamped(h, w, pixels).expect("dimensions already validated")
    }

    /// Worst violation of `F(-u,-v) = conj(F(u,v))` after recombining
    /// amplitude and phase.
    pub fn symmetry_error(&self) -> f64 {
        recompose(self).conjugate_symmetry_error()
    }
}

fn shift<T: Copy>(data: &[T], h: usize, w: usize, dr: usize, dc: usize) -> Vec<T> {
    let mut out = data.to_vec();
    for r in 0..h {
        let rr = (r + dr) % h;
        for c in 0..w {
            out[rr * w + (c + dc) % w] = data[r * w + c];
        }
    }
    out
}

fn center_vec<T: Copy>(data: &[T], h: usize, w: usize) -> Vec<T> {
    shift(data, h, w, h / 2, w / 2)
}

fn uncenter_vec<T: Copy>(data: &[T], h: usize, w: usize) -> Vec<T> {
    shift(data, h, w, h - h / 2, w - w / 2)
}

/// Moves bin `(0, 0)` to `(H/2, W/2)`.
pub fn center(plane: &ComplexPlane) -> ComplexPlane {
    let (h, w) = plane.dims();
    ComplexPlane::from_vec_unchecked(h, w, center_vec(plane.values(), h, w))
}

/// Inverse of [`center`]; differs from it when a dimension is odd.
pub fn uncenter(plane: &ComplexPlane) -> ComplexPlane {
    let (h, w) = plane.dims();
    ComplexPlane::from_vec_unchecked(h, w, uncenter_vec(plane.values(), h, w))
}

/// Splits each bin into `|F|` and `atan2(Im, Re)` and centers both planes.
/// Bins with zero amplitude get phase 0.
pub fn decompose(plane: &ComplexPlane) -> Spectrum {
    let (h, w) = plane.dims();
    let (amp, phase): (Vec<f64>, Vec<f64>) = plane
        .values()
        .iter()
        .map(|z| {
            let a = z.norm();
            let p = if a == 0.0 {
                0.0
            } else {
                normalize_angle(z.im.atan2(z.re))
            };
            (a, p)
        })
        .unzip();
    let amplitude = Plane::new(h, w, center_vec(&amp, h, w)).expect("dims");
    let phase = Plane::new(h, w, center_vec(&phase, h, w)).expect("dims");
    Spectrum::from_parts_unchecked(amplitude, phase)
}

/// `A * (cos phi + i sin phi)` per bin, returned in standard DFT order.
pub fn recompose(spec: &Spectrum) -> ComplexPlane {
    let (h, w) = spec.dims();
    let centered: Vec<Complex64> = spec
        .amplitude
        .as_slice()
        .iter()
        .zip(spec.phase.as_slice())
        .map(|(&a, &p)| {
            if a == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(a * p.cos(), a * p.sin())
            }
        })
        .collect();
    ComplexPlane::from_vec_unchecked(h, w, uncenter_vec(&centered, h, w))
}
