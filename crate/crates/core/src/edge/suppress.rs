use crate::image::Plane;

use super::GradientField;

/// Quantized gradient orientation, measured in image coordinates with rows
/// growing downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DirectionBin {
    Horizontal,
    Diagonal,
    Vertical,
    AntiDiagonal,
}

impl DirectionBin {
    pub(crate) fn from_angle(radians: f64) -> Self {
        let mut deg = radians.to_degrees();
        if deg < 0.0 {
            deg += 180.0;
        }
        if !(22.5..157.5).contains(&deg) {
            DirectionBin::Horizontal
        } else if deg < 67.5 {
            DirectionBin::Diagonal
        } else if deg < 112.5 {
            DirectionBin::Vertical
        } else {
            DirectionBin::AntiDiagonal
        }
    }

    /// (row, col) step to one neighbour; the other is its negation.
    pub(crate) fn step(self) -> (isize, isize) {
        match self {
            DirectionBin::Horizontal => (0, 1),
            DirectionBin::Diagonal => (1, 1),
            DirectionBin::Vertical => (1, 0),
            DirectionBin::AntiDiagonal => (1, -1),
        }
    }
}

/// Thins gradient ridges to local maxima along the gradient direction.
///
/// A pixel survives when its magnitude is `>=` both neighbours in its
/// quantized direction, so flat plateaus are kept. Border pixels are zero.
pub fn non_max_suppression(field: &GradientField) -> Plane {
    let mag = &field.magnitude;
    let (h, w) = mag.dims();
    let mut out = Plane::zeros(h, w);
    if h < 3 || w < 3 {
        return out;
    }
    for r in 1..h - 1 {
        for c in 1..w - 1 {
            let m = mag.get(r, c);
            if m == 0.0 {
                continue;
            }
            let (dr, dc) = DirectionBin::from_angle(field.direction.get(r, c)).step();
            let ahead = mag.get((r as isize + dr) as usize, (c as isize + dc) as usize);
            let behind = mag.get((r as isize - dr) as usize, (c as isize - dc) as usize);
            if m >= ahead && m >= behind {
                out.set(r, c, m);
            }
        }
    }
    out
}
