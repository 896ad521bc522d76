//! The full denoiser and parameter sweeps.
//!
//! [`denoise`] runs, in order and with nothing in between: Canny on the
//! input, the edge blend, the forward transform, amplitude/phase split,
//! mask construction, amplitude filtering, and reconstruction. Only the
//! final reconstruction clamps.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::edge::{canny, enhance_edges, CannyParams, EdgeMap};
use crate::error::{Error, Result};
use crate::image::ImageBuffer;
use crate::metrics::{psnr_from_rmse, rmse, ssim};
use crate::spectral::{
    decompose, fft2, filter_amplitude, make_mask, reconstruct, FrequencyMask, MaskSpec, Spectrum,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineParams {
    /// Non-edge attenuation in the edge blend, `[0, 1]`.
    pub alpha: f64,
    /// Global amplitude scale, `(0, 1]`.
    pub lambda: f64,
    pub mask: MaskSpec,
    pub canny: CannyParams,
    pub preserve_dc: bool,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            alpha: 0.1,
            lambda: 1.0,
            mask: MaskSpec::default(),
            canny: CannyParams::default(),
            preserve_dc: false,
        }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::invalid("alpha", format!("{} must be in [0, 1]", self.alpha)));
        }
        if !(self.lambda > 0.0 && self.lambda <= 1.0) {
            return Err(Error::invalid("lambda", format!("{} must be in (0, 1]", self.lambda)));
        }
        self.mask.validate()?;
        self.canny.validate()
    }
}

/// Every intermediate of one [`denoise`] run.
#[derive(Debug, Clone)]
pub struct Stages {
    pub edges: EdgeMap,
    pub enhanced: ImageBuffer,
    pub spectrum: Spectrum,
    pub mask: FrequencyMask,
    pub filtered: Spectrum,
    pub denoised: ImageBuffer,
}

pub fn denoise_stages(img: &ImageBuffer, params: &PipelineParams) -> Result<Stages> {
    params.validate()?;
    img.ensure_at_least(3)?;
    let edges = canny(img, &params.canny)?;
    let enhanced = enhance_edges(img, &edges, params.alpha)?;
    let spectrum = decompose(&fft2(&enhanced));
    let mask = make_mask(img.height(), img.width(), &params.mask)?;
    let filtered = filter_amplitude(&spectrum, &mask, params.lambda, params.preserve_dc)?;
    let denoised = reconstruct(&filtered)?;
    Ok(Stages {
        edges,
        enhanced,
        spectrum,
        mask,
        filtered,
        denoised,
    })
}

pub fn denoise(img: &ImageBuffer, params: &PipelineParams) -> Result<ImageBuffer> {
    denoise_stages(img, params).map(|s| s.denoised)
}

/// Axes of a sweep; evaluated as a Cartesian product, alpha-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub alphas: Vec<f64>,
    pub lambdas: Vec<f64>,
    pub cutoffs: Vec<f64>,
}

impl SweepGrid {
    pub fn len(&self) -> usize {
        self.alphas.len() * self.lambdas.len() * self.cutoffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn points(&self, base: &PipelineParams) -> Vec<PipelineParams> {
        let mut out = Vec::with_capacity(self.len());
        for &alpha in &self.alphas {
            for &lambda in &self.lambdas {
                for &cutoff in &self.cutoffs {
                    let mut p = *base;
                    p.alpha = alpha;
                    p.lambda = lambda;
                    p.mask.cutoff_fraction = cutoff;
                    out.push(p);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepResult {
    pub params: PipelineParams,
    pub rmse: f64,
    pub psnr: f64,
    pub ssim: f64,
}

/// Denoises `noisy` at every grid point (mask kind, Canny settings and
/// `preserve_dc` taken from `base`) and scores each against `clean`.
pub fn sweep(
    noisy: &ImageBuffer,
    clean: &ImageBuffer,
    grid: &SweepGrid,
    base: &PipelineParams,
) -> Result<Vec<SweepResult>> {
    noisy.ensure_same_dims(clean)?;
    for (name, axis) in [
        ("alphas", &grid.alphas),
        ("lambdas", &grid.lambdas),
        ("cutoffs", &grid.cutoffs),
    ] {
        if axis.is_empty() {
            return Err(Error::invalid(name, "sweep axis is empty"));
        }
    }
    let points = grid.points(base);
    for p in &points {
        p.validate()?;
    }
    points
        .par_iter()
        .map(|params| {
            let out = denoise(noisy, params)?;
            let e = rmse(&out, clean)?;
            Ok(SweepResult {
                params: *params,
                rmse: e,
                psnr: psnr_from_rmse(e, 1.0),
                ssim: ssim(&out, clean)?,
            })
        })
        .collect()
}

pub const SWEEP_CSV_HEADER: &str = "alpha,lambda,cutoff,rmse,psnr,ssim";

/// Header plus one row per result, six decimals; infinite PSNR is `inf`.
pub fn write_sweep_csv(results: &[SweepResult], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{SWEEP_CSV_HEADER}")?;
    for r in results {
        writeln!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
            r.params.alpha,
            r.params.lambda,
            r.params.mask.cutoff_fraction,
            r.rmse,
            r.psnr,
            r.ssim
        )?;
    }
    Ok(())
}

/// Highest-PSNR row; the earliest wins ties.
pub fn best_by_psnr(results: &[SweepResult]) -> Option<&SweepResult> {
    results
        .iter()
        .reduce(|best, r| if r.psnr > best.psnr { r } else { best })
}
