use crate::error::{Error, Result};
use crate::image::{ImageBuffer, Plane};

use super::{decompose, fft2, ifft2, recompose, FrequencyMask, Spectrum};

/// Largest relative imaginary residue [`reconstruct`] accepts.
pub const RECONSTRUCT_TOLERANCE: f64 = 1e-6;

/// Scales amplitudes by `mask * lambda`; phase is carried over untouched.
///
/// With `preserve_dc` the zero-frequency amplitude is kept as is, which
/// keeps the mean intensity.
pub fn filter_amplitude(
    spec: &Spectrum,
    mask: &FrequencyMask,
    lambda: f64,
    preserve_dc: bool,
) -> Result<Spectrum> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::invalid("lambda", format!("{lambda} must be in (0, 1]")));
    }
    if spec.dims() != mask.dims() {
        return Err(Error::mismatch(spec.dims(), mask.dims()));
    }
    let (h, w) = spec.dims();
    let amp: Vec<f64> = spec
        .amplitude()
        .as_slice()
        .iter()
        .zip(mask.weights().as_slice())
        .map(|(&a, &m)| a * m * lambda)
        .collect();
    let mut amplitude = Plane::new(h, w, amp).expect("dims");
    if preserve_dc {
        let (r, c) = spec.dc_index();
        amplitude.set(r, c, spec.amplitude().get(r, c));
    }
    Ok(Spectrum::from_parts_unchecked(amplitude, spec.phase().clone()))
}

/// Real part of the inverse transform before clamping.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub real: Plane,
    /// `max |Im| / max(1, max |Re|)`
    pub imaginary_residue: f64,
}

pub fn reconstruct_unclamped(spec: &Spectrum) -> Reconstruction {
    let spatial = ifft2(&recompose(spec));
    Reconstruction {
        imaginary_residue: spatial.imaginary_residue(),
        real: spatial.real_part(),
    }
}

/// Inverse transform back to an image, clamped to `[0, 1]`.
///
/// Fails if the imaginary residue exceeds [`RECONSTRUCT_TOLERANCE`], which
/// means the spectrum was not conjugate-symmetric.
pub fn reconstruct(spec: &Spectrum) -> Result<ImageBuffer> {
    let rec = reconstruct_unclamped(spec);
    if rec.imaginary_residue.is_nan() || rec.imaginary_residue >= RECONSTRUCT_TOLERANCE {
        return Err(Error::SymmetryViolation {
            residue: rec.imaginary_residue,
        });
    }
    Ok(ImageBuffer::from_plane_clamped(rec.real))
}

/// Swaps amplitude spectra between two images, keeping each one's phase.
///
/// Returns `(phase of a with amplitude of b, phase of b with amplitude of a)`.
pub fn amplitude_swap(a: &ImageBuffer, b: &ImageBuffer) -> Result<(ImageBuffer, ImageBuffer)> {
    a.ensure_same_dims(b)?;
    let (amp_a, phase_a) = decompose(&fft2(a)).into_parts();
    let (amp_b, phase_b) = decompose(&fft2(b)).into_parts();
    let a_phase = reconstruct(&Spectrum::from_parts_unchecked(amp_b, phase_a))?;
    let b_phase = reconstruct(&Spectrum::from_parts_unchecked(amp_a, phase_b))?;
    Ok((a_phase, b_phase))
}
