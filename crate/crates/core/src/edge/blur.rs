use crate::error::{Error, Result};
use crate::image::{ImageBuffer, Plane};

use super::reflect;

/// Normalized 1D Gaussian taps over `[-r, r]` with `r = ceil(3 * sigma)`.
pub fn gaussian_kernel(sigma: f64) -> Result<Vec<f64>> {
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(Error::invalid("sigma", format!("{sigma} must be > 0")));
    }
    let radius = (3.0 * sigma).ceil() as isize;
    let denom = 2.0 * sigma * sigma;
    let mut taps: Vec<f64> = (-radius..=radius)
        .map(|k| (-((k * k) as f64) / denom).exp())
        .collect();
    let total: f64 = taps.iter().sum();
    for t in &mut taps {
        *t /= total;
    }
    Ok(taps)
}

/// Separable Gaussian smoothing with reflect-padded borders.
pub fn gaussian_blur(img: &ImageBuffer, sigma: f64) -> Result<ImageBuffer> {
    let blurred = blur_plane(&img.to_plane(), sigma)?;
    // a convex combination of [0,1] values; clamping only absorbs rounding
    Ok(ImageBuffer::from_plane_clamped(blurred))
}

pub(crate) fn blur_plane(src: &Plane, sigma: f64) -> Result<Plane> {
    let taps = gaussian_kernel(sigma)?;
    let radius = (taps.len() / 2) as isize;
    let (h, w) = src.dims();

    let mut tmp = Plane::zeros(h, w);
    for r in 0..h {
        for c in 0..w {
            let mut acc = 0.0;
            for (k, &t) in taps.iter().enumerate() {
                let cc = reflect(c as isize + k as isize - radius, w);
                acc += t * src.get(r, cc);
            }
            tmp.set(r, c, acc);
        }
    }

    let mut out = Plane::zeros(h, w);
    for r in 0..h {
        for c in 0..w {
            let mut acc = 0.0;
            for (k, &t) in taps.iter().enumerate() {
                let rr = reflect(r as isize + k as isize - radius, h);
                acc += t * tmp.get(rr, c);
            }
            out.set(r, c, acc);
        }
    }
    Ok(out)
}
