//! Error and similarity metrics on `[0, 1]` images.

use crate::error::{Error, Result};
use crate::image::ImageBuffer;

/// Side of the square SSIM window.
pub const SSIM_WINDOW: usize = 8;
pub const SSIM_K1: f64 = 0.01;
pub const SSIM_K2: f64 = 0.03;

pub fn rmse(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    a.ensure_same_dims(b)?;
    let sse: f64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok((sse / a.len() as f64).sqrt())
}

/// `20 log10(peak / rmse)` in dB; `+inf` for identical images.
pub fn psnr(a: &ImageBuffer, b: &ImageBuffer, peak: f64) -> Result<f64> {
    if !(peak.is_finite() && peak > 0.0) {
        return Err(Error::invalid("peak", format!("{peak} must be > 0")));
    }
    Ok(psnr_from_rmse(rmse(a, b)?, peak))
}

pub fn psnr_from_rmse(rmse: f64, peak: f64) -> f64 {
    if rmse == 0.0 {
        f64::INFINITY
    } else {
        20.0 * (peak / rmse).log10()
    }
}

/// Coefficient of determination `1 - SSE/SST` of `pred` against `obs`.
pub fn r_squared(pred: &[f64], obs: &[f64]) -> Result<f64> {
    if pred.len() != obs.len() {
        return Err(Error::mismatch((1, pred.len()), (1, obs.len())));
    }
    if obs.len() < 2 {
        return Err(Error::invalid("obs", "need at least two observations"));
    }
    let mean = obs.iter().sum::<f64>() / obs.len() as f64;
    let sst: f64 = obs.iter().map(|y| (y - mean) * (y - mean)).sum();
    if sst == 0.0 {
        return Err(Error::invalid("obs", "observations have zero variance"));
    }
    let sse: f64 = obs.iter().zip(pred).map(|(y, p)| (y - p) * (y - p)).sum();
    Ok(1.0 - sse / sst)
}

/// Mean SSIM over every 8x8 window (stride 1), peak 1, uniform weights and
/// population moments.
pub fn ssim(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    a.ensure_same_dims(b)?;
    a.ensure_at_least(SSIM_WINDOW)?;
    let c1 = (SSIM_K1 * 1.0f64).powi(2);
    let c2 = (SSIM_K2 * 1.0f64).powi(2);
    let (h, w) = a.dims();
    let n = (SSIM_WINDOW * SSIM_WINDOW) as f64;
    let mut total = 0.0;
    let mut windows = 0usize;
    for top in 0..=h - SSIM_WINDOW {
        for left in 0..=w - SSIM_WINDOW {
            let (mut sa, mut sb) = (0.0, 0.0);
            for r in top..top + SSIM_WINDOW {
                for c in left..left + SSIM_WINDOW {
                    sa += a.get(r, c);
                    sb += b.get(r, c);
                }
            }
            let (ma, mb) = (sa / n, sb / n);
            let (mut vaa, mut vbb, mut vab) = (0.0, 0.0, 0.0);
            for r in top..top + SSIM_WINDOW {
                for c in left..left + SSIM_WINDOW {
                    let da = a.get(r, c) - ma;
                    let db = b.get(r, c) - mb;
                    vaa += da * da;
                    vbb += db * db;
                    vab += da * db;
                }
            }
            let (vaa, vbb, vab) = (vaa / n, vbb / n, vab / n);
            let num = (2.0 * ma * mb + c1) * (2.0 * vab + c2);
            let den = (ma * ma + mb * mb + c1) * (vaa + vbb + c2);
            total += num / den;
            windows += 1;
        }
    }
    Ok(total / windows as f64)
}

/// Quality of `test` against `reference`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub rmse: f64,
    /// `+inf` when the images are identical.
    pub psnr: f64,
    pub ssim: f64,
    /// Pixelwise R^2; `None` when the reference is constant.
    pub r_squared: Option<f64>,
}

impl MetricReport {
    pub fn compute(test: &ImageBuffer, reference: &ImageBuffer) -> Result<Self> {
        let rmse = rmse(test, reference)?;
        Ok(MetricReport {
            rmse,
            psnr: psnr_from_rmse(rmse, 1.0),
            ssim: ssim(test, reference)?,
            r_squared: r_squared(test.pixels(), reference.pixels()).ok(),
        })
    }

    /// Single-line JSON `{"rmse":..,"psnr_db":..,"ssim":..}`; infinite PSNR
    /// is written as `null`.
    pub fn to_json(&self) -> String {
        let num = |v: f64| serde_json::to_string(&v).expect("f64 serializes");
        format!(
            "{{\"rmse\":{},\"psnr_db\":{},\"ssim\":{}}}",
            num(self.rmse),
            num(self.psnr),
            num(self.ssim)
        )
    }
}
