//! Prints the numbers the regression tests pin: denoising PSNR on the
//! shapes fixture, the 3x3x3 sweep winner, Canny fixture counts and the
//! amplitude-swap F1 scores.
//!
//!     cargo run --release -p edgefreq --example fixture_report

use edgefreq::edge::{canny, CannyParams};
use edgefreq::metrics::psnr;
use edgefreq::noise::{add_noise, NoiseSpec};
use edgefreq::pipeline::{best_by_psnr, denoise, sweep, PipelineParams, SweepGrid};
use edgefreq::spectral::amplitude_swap;
use edgefreq::synth;

fn main() -> edgefreq::Result<()> {
    let clean = synth::shapes(128);
    let noisy = add_noise(&clean, &NoiseSpec::gaussian(0.1, 42)?)?;
    let params = PipelineParams::default();
    let out = denoise(&noisy, &params)?;
    println!("psnr noisy    = {:.6}", psnr(&noisy, &clean, 1.0)?);
    println!("psnr denoised = {:.6}", psnr(&out, &clean, 1.0)?);

    let grid = SweepGrid {
        alphas: vec![0.0, 0.25, 0.5],
        lambdas: vec![0.8, 0.9, 1.0],
        cutoffs: vec![0.2, 0.3, 0.5],
    };
    let results = sweep(&noisy, &clean, &grid, &params)?;
    let best = best_by_psnr(&results).expect("non-empty grid");
    println!(
        "sweep best    = alpha {} lambda {} cutoff {} psnr {:.6}",
        best.params.alpha, best.params.lambda, best.params.mask.cutoff_fraction, best.psnr
    );

    let canny_params = CannyParams::default();
    let step = canny(&synth::vertical_step(64, 64), &canny_params)?;
    let cols: std::collections::BTreeMap<usize, usize> =
        step.coords().fold(Default::default(), |mut m, (_, c)| {
            *m.entry(c).or_default() += 1;
            m
        });
    println!("step edges    = {} pixels, per column {:?}", step.count(), cols);

    let square = canny(&synth::square(64, 64, 24, 24, 16), &canny_params)?;
    println!("square edges  = {} pixels", square.count());

    let a = add_noise(&synth::shapes(128), &NoiseSpec::gaussian(0.1, 7)?)?;
    let b = add_noise(&synth::bars_and_ring(128), &NoiseSpec::gaussian(0.1, 8)?)?;
    let (a_phase, b_phase) = amplitude_swap(&a, &b)?;
    let (ea, eb) = (canny(&a, &canny_params)?, canny(&b, &canny_params)?);
    let e_mixed = canny(&a_phase, &canny_params)?;
    println!(
        "swap (phase a, amp b): f1 vs phase donor {:.6}, vs amplitude donor {:.6}",
        e_mixed.f1_score(&ea)?,
        e_mixed.f1_score(&eb)?
    );
    let e_mixed = canny(&b_phase, &canny_params)?;
    println!(
        "swap (phase b, amp a): f1 vs phase donor {:.6}, vs amplitude donor {:.6}",
        e_mixed.f1_score(&eb)?,
        e_mixed.f1_score(&ea)?
    );
    Ok(())
}
