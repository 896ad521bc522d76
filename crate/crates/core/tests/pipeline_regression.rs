mod common;

use common::*;
use edgefreq::metrics::psnr;
use edgefreq::pipeline::{best_by_psnr, denoise, sweep, PipelineParams, SweepGrid};
use edgefreq::spectral::{MaskKind, MaskSpec};

fn pinned_grid() -> SweepGrid {
    SweepGrid {
        alphas: SWEEP_ALPHAS.to_vec(),
        lambdas: SWEEP_LAMBDAS.to_vec(),
        cutoffs: SWEEP_CUTOFFS.to_vec(),
    }
}

#[test]
fn default_denoise_psnr_is_pinned() {
    let (clean, noisy) = shapes_fixture();
    let before = psnr(&noisy, &clean, 1.0).unwrap();
    let after = psnr(&denoise(&noisy, &PipelineParams::default()).unwrap(), &clean, 1.0).unwrap();
    assert!((before - SHAPES_NOISY_PSNR).abs() < PSNR_TOLERANCE_DB, "noisy {before}");
    assert!((after - SHAPES_DENOISED_PSNR).abs() < PSNR_TOLERANCE_DB, "denoised {after}");
    assert!(after > before);
}

#[test]
fn sweep_winner_is_pinned() {
    let (clean, noisy) = shapes_fixture();
    let results = sweep(&noisy, &clean, &pinned_grid(), &PipelineParams::default()).unwrap();
    assert_eq!(results.len(), 27);
    let best = best_by_psnr(&results).unwrap();
    let got = (best.params.alpha, best.params.lambda, best.params.mask.cutoff_fraction);
    assert_eq!(got, SWEEP_BEST);
}

#[test]
fn denoise_is_deterministic() {
    let (_, noisy) = shapes_fixture();
    let params = PipelineParams {
        mask: MaskSpec::new(MaskKind::Butterworth { order: 3 }, 0.25).unwrap(),
        ..PipelineParams::default()
    };
    assert_eq!(denoise(&noisy, &params).unwrap(), denoise(&noisy, &params).unwrap());
}

#[test]
fn sweep_results_do_not_depend_on_grid_order() {
    let (clean, noisy) = shapes_fixture();
    let base = PipelineParams::default();
    let forward = sweep(&noisy, &clean, &pinned_grid(), &base).unwrap();
    let mut reversed = pinned_grid();
    reversed.alphas.reverse();
    reversed.lambdas.reverse();
    reversed.cutoffs.reverse();
    let backward = sweep(&noisy, &clean, &reversed, &base).unwrap();
    let key = |r: &edgefreq::pipeline::SweepResult| {
        let p = r.params;
        (p.alpha.to_bits(), p.lambda.to_bits(), p.mask.cutoff_fraction.to_bits())
    };
    for r in &forward {
        let twin = backward.iter().find(|b| key(b) == key(r)).unwrap();
        assert_eq!((r.rmse, r.psnr, r.ssim), (twin.rmse, twin.psnr, twin.ssim));
    }
}

#[test]
fn identity_configuration_reproduces_input() {
    let img = random_image(33, 47, 3);
    let params = PipelineParams {
        alpha: 0.0,
        lambda: 1.0,
        mask: MaskSpec::new(MaskKind::Ideal, 1.0).unwrap(),
        ..PipelineParams::default()
    };
    let out = denoise(&img, &params).unwrap();
    assert!(max_pixel_diff(out.pixels(), img.pixels()) < 1e-6);
}

#[test]
fn phase_donor_dominates_both_ways() {
    let s = swap_fixture();
    assert_eq!((s.a.count(), s.b.count()), (SWAP_EDGES_A, SWAP_EDGES_B));
    assert_eq!(s.a_phase.count(), SWAP_EDGES_MIXED);
    assert_eq!(overlap(&s.a_phase, &s.a), SWAP_OVERLAP_PHASE_DONOR);
    assert_eq!(overlap(&s.a_phase, &s.b), SWAP_OVERLAP_AMPLITUDE_DONOR);
    assert_eq!(s.b_phase.count(), SWAP_REVERSE_EDGES_MIXED);
    assert_eq!(overlap(&s.b_phase, &s.b), SWAP_REVERSE_OVERLAP_PHASE_DONOR);
    assert_eq!(overlap(&s.b_phase, &s.a), SWAP_REVERSE_OVERLAP_AMPLITUDE_DONOR);
    assert!(s.a_phase.f1_score(&s.a).unwrap() > s.a_phase.f1_score(&s.b).unwrap());
    assert!(s.b_phase.f1_score(&s.b).unwrap() > s.b_phase.f1_score(&s.a).unwrap());
}
