use crate::error::{Error, Result};
use crate::image::ImageBuffer;

use super::EdgeMap;

/// Edge-weighted blend `x * (1 - alpha) + x * alpha * edge`.
///
/// Because `edge` is binary the blend is evaluated per branch: edge pixels
/// pass through untouched and the rest are scaled by `1 - alpha`. This is
/// the same value as the blend formula, without the rounding the extra
/// multiply-add would introduce on edge pixels.
pub fn enhance_edges(img: &ImageBuffer, edges: &EdgeMap, alpha: f64) -> Result<ImageBuffer> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::invalid("alpha", format!("{alpha} must be in [0, 1]")));
    }
    if img.dims() != edges.dims() {
        return Err(Error::mismatch(img.dims(), edges.dims()));
    }
    let keep = 1.0 - alpha;
    let pixels = img
        .pixels()
        .iter()
        .zip(edges.values())
        .map(|(&x, &e)| if e == 1 { x } else { x * keep })
        .collect();
    Ok(ImageBuffer::from_vec_unchecked(img.height(), img.width(), pixels))
}
