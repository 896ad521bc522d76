use crate::image::Plane;

use super::{CannyParams, EdgeMap};

/// Double thresholding with 8-connected propagation from strong pixels.
///
/// Thresholds are `low_ratio * max` and `high_ratio * max` of the thinned
/// plane. An all-zero plane yields an empty map.
pub fn hysteresis_threshold(thin: &Plane, params: &CannyParams) -> EdgeMap {
    let (h, w) = thin.dims();
    let mut marks = vec![0u8; h * w];
    let peak = thin.max();
    if peak.is_nan() || peak <= 0.0 {
        return EdgeMap::from_raw(h, w, marks);
    }
    let high = params.high_ratio * peak;
    let low = params.low_ratio * peak;
    let data = thin.as_slice();

    let mut stack = Vec::new();
    for start in 0..h * w {
        if marks[start] == 1 || data[start] < high {
            continue;
        }
        marks[start] = 1;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            let (r, c) = ((idx / w) as isize, (idx % w) as isize);
            for dr in -1..=1 {
                for dc in -1..=1 {
                    let (nr, nc) = (r + dr, c + dc);
                    if nr < 0 || nc < 0 || nr >= h as isize || nc >= w as isize {
                        continue;
                    }
                    let n = nr as usize * w + nc as usize;
                    if marks[n] == 0 && data[n] >= low {
                        marks[n] = 1;
                        stack.push(n);
                    }
                }
            }
        }
    }
    EdgeMap::from_raw(h, w, marks)
}
