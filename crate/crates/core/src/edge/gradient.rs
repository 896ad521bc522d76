use crate::error::Result;
use crate::image::{ImageBuffer, Plane};

use super::{reflect, GradientField};

/// 3x3 Sobel gradients with reflect padding.
///
/// `gx` responds to intensity increasing to the right, `gy` to intensity
/// increasing downwards; `direction = atan2(gy, gx)`.
pub fn sobel_gradients(img: &ImageBuffer) -> Result<GradientField> {
    img.ensure_at_least(3)?;
    Ok(sobel_plane(&img.to_plane()))
}

pub(crate) fn sobel_plane(src: &Plane) -> GradientField {
    let (h, w) = src.dims();
    let at = |r: isize, c: isize| src.get(reflect(r, h), reflect(c, w));
    let mut magnitude = Plane::zeros(h, w);
    let mut direction = Plane::zeros(h, w);
    for r in 0..h as isize {
        for c in 0..w as isize {
            let gx = (at(r - 1, c + 1) + 2.0 * at(r, c + 1) + at(r + 1, c + 1))
                - (at(r - 1, c - 1) + 2.0 * at(r, c - 1) + at(r + 1, c - 1));
            let gy = (at(r + 1, c - 1) + 2.0 * at(r + 1, c) + at(r + 1, c + 1))
                - (at(r - 1, c - 1) + 2.0 * at(r - 1, c) + at(r - 1, c + 1));
            let (ru, cu) = (r as usize, c as usize);
            magnitude.set(ru, cu, (gx * gx + gy * gy).sqrt());
            direction.set(ru, cu, normalize_angle(gy.atan2(gx)));
        }
    }
    GradientField {
        magnitude,
        direction,
    }
}

/// Maps `-pi` onto `pi` so angles live in `(-pi, pi]`.
#[inline]
pub(crate) fn normalize_angle(a: f64) -> f64 {
    if a <= -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn constant_has_no_gradient() {
        let img = ImageBuffer::filled(6, 5, 0.8).unwrap();
        let g = sobel_gradients(&img).unwrap();
        assert!(g.magnitude.as_slice().iter().all(|&m| m == 0.0));
    }

    #[test]
    fn too_small_is_rejected() {
        let img = ImageBuffer::filled(2, 5, 0.8).unwrap();
        assert!(sobel_gradients(&img).is_err());
    }

    #[test]
    fn vertical_step_points_right() {
        let img = ImageBuffer::from_fn(16, 16, |_, c| if c >= 8 { 1.0 } else { 0.0 });
        let g = sobel_gradients(&img).unwrap();
        for r in 1..15 {
            let row: Vec<f64> = (0..16).map(|c| g.magnitude.get(r, c)).collect();
            let best = row.iter().copied().fold(0.0, f64::max);
            assert_eq!(best, 4.0);
            for (c, &m) in row.iter().enumerate() {
                if m == best {
                    assert!(c == 7 || c == 8, "max at column {c}");
                    assert!(g.direction.get(r, c).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn diagonal_step_direction() {
        // bright below the anti-diagonal r + c = s
        let s = 16;
        let img = ImageBuffer::from_fn(32, 32, |r, c| if r + c >= s { 1.0 } else { 0.0 });
        let g = sobel_gradients(&img).unwrap();
        let mut best = (0.0, 0, 0);
        for r in 3..29 {
            for c in 3..29 {
                let m = g.magnitude.get(r, c);
                if m > best.0 {
                    best = (m, r, c);
                }
            }
        }
        let dir = g.direction.get(best.1, best.2);
        assert!((dir - FRAC_PI_4).abs() < 0.05, "direction {dir}");
    }

    #[test]
    fn directions_are_in_half_open_range() {
        let img = ImageBuffer::from_fn(8, 8, |r, c| if c < 4 && r > 2 { 1.0 } else { 0.0 });
        let g = sobel_gradients(&img).unwrap();
        for &d in g.direction.as_slice() {
            assert!(d > -PI && d <= PI);
        }
        assert_eq!(normalize_angle(-PI), PI);
    }
}
