//! Deterministic synthetic test images.

use crate::image::ImageBuffer;
use crate::noise::SeededRng;

/// Geometric scene on a 0.2 background: a rectangle, a disc, a right
/// triangle and a small dark square. Integer geometry only, so the result
/// is identical on every platform.
pub fn shapes(size: usize) -> ImageBuffer {
    let s = size as f64 / 128.0;
    let rect = (16.0 * s, 56.0 * s, 20.0 * s, 70.0 * s);
    let disc = (88.0 * s, 40.0 * s, 22.0 * s);
    let tri = (70.0 * s, 115.0 * s, 70.0 * s, 115.0 * s);
    let dark = (20.0 * s, 28.0 * s, 90.0 * s, 98.0 * s);
    ImageBuffer::from_fn(size, size, |r, c| {
        let (y, x) = (r as f64, c as f64);
        if y >= rect.0 && y < rect.1 && x >= rect.2 && x < rect.3 {
            0.8
        } else if (y - disc.0).powi(2) + (x - disc.1).powi(2) <= disc.2 * disc.2 {
            0.6
        } else if y >= tri.0 && y < tri.1 && x >= tri.2 && x < tri.3 && (y - tri.0) >= (x - tri.2) {
            0.95
        } else if y >= dark.0 && y < dark.1 && x >= dark.2 && x < dark.3 {
            0.05
        } else {
            0.2
        }
    })
}

/// A second scene with a different layout: horizontal bars and a large
/// ring.
pub fn bars_and_ring(size: usize) -> ImageBuffer {
    let s = size as f64 / 128.0;
    let (cy, cx) = (76.0 * s, 64.0 * s);
    let (inner, outer) = (18.0 * s, 34.0 * s);
    ImageBuffer::from_fn(size, size, |r, c| {
        let (y, x) = (r as f64, c as f64);
        let d2 = (y - cy).powi(2) + (x - cx).powi(2);
        if d2 <= outer * outer && d2 >= inner * inner {
            0.9
        } else if y < 32.0 * s && ((y / (8.0 * s)) as usize).is_multiple_of(2) {
            0.7
        } else {
            0.15
        }
    })
}

/// Left half 0, right half 1; the step lies between columns `w/2 - 1` and
/// `w/2`.
pub fn vertical_step(height: usize, width: usize) -> ImageBuffer {
    ImageBuffer::from_fn(height, width, |_, c| if c >= width / 2 { 1.0 } else { 0.0 })
}

/// White `side x side` square at `(top, left)` on black.
pub fn square(height: usize, width: usize, top: usize, left: usize, side: usize) -> ImageBuffer {
    ImageBuffer::from_fn(height, width, |r, c| {
        if (top..top + side).contains(&r) && (left..left + side).contains(&c) {
            1.0
        } else {
            0.0
        }
    })
}

/// Uniform random pixels in `[0, 1)`.
pub fn uniform_noise(height: usize, width: usize, seed: u64) -> ImageBuffer {
    let mut rng = SeededRng::new(seed);
    ImageBuffer::from_fn(height, width, |_, _| rng.uniform())
}
