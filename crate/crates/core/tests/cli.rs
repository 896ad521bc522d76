mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::{random_image, shapes_fixture, CLI_DENOISE_GOLDEN_SHA256};
use edgefreq::io::{load_image, save_image};
use edgefreq::metrics::MetricReport;
use edgefreq::pipeline::{denoise, PipelineParams};
use edgefreq::ImageBuffer;
use sha2::{Digest, Sha256};
use tempfile::TempDir;

fn edgefreq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgefreq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, img: &ImageBuffer) -> PathBuf {
    let path = dir.path().join(name);
    save_image(img, &path).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn identity_settings_are_byte_exact() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.pgm", &random_image(37, 29, 11));
    let output = dir.path().join("out.pgm");
    let out = edgefreq(&[
        "denoise", path_str(&input), path_str(&output),
        "--alpha", "0", "--lambda", "1", "--cutoff", "1.0",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read(&input).unwrap(), fs::read(&output).unwrap());
}

#[test]
fn out_of_range_alpha_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.pgm", &random_image(8, 8, 1));
    let output = dir.path().join("out.pgm");
    let out = edgefreq(&["denoise", path_str(&input), path_str(&output), "--alpha", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--alpha"));
    assert!(!output.exists());
}

#[test]
fn missing_input_is_a_runtime_error() {
    let dir = TempDir::new().unwrap();
    let out = edgefreq(&[
        "denoise",
        path_str(&dir.path().join("nope.pgm")),
        path_str(&dir.path().join("out.pgm")),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn default_denoise_matches_golden_output() {
    let dir = TempDir::new().unwrap();
    let (clean, noisy) = shapes_fixture();
    let input = write(&dir, "noisy.pgm", &noisy);
    let reference = write(&dir, "clean.pgm", &clean);
    let output = dir.path().join("out.pgm");
    let out = edgefreq(&[
        "denoise", path_str(&input), path_str(&output),
        "--reference", path_str(&reference),
    ]);
    assert!(out.status.success());
    let digest: String = Sha256::digest(fs::read(&output).unwrap())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    assert_eq!(digest, CLI_DENOISE_GOLDEN_SHA256);
    let lib = denoise(&load_image(&input).unwrap(), &PipelineParams::default()).unwrap();
    let expected = MetricReport::compute(&lib, &load_image(&reference).unwrap()).unwrap();
    assert_eq!(stdout(&out).trim(), expected.to_json());
}

#[test]
fn add_noise_behaviour() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.pgm", &random_image(20, 20, 4));
    let run = |name: &str, extra: &[&str]| {
        let output = dir.path().join(name);
        let mut args = vec!["add-noise", path_str(&input), path_str(&output)];
        args.extend_from_slice(extra);
        let out = edgefreq(&args);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        fs::read(output).unwrap()
    };
    let original = fs::read(&input).unwrap();
    assert_eq!(run("zero.pgm", &["--kind", "gaussian", "--sigma", "0", "--seed", "1"]), original);

    let a = run("a.pgm", &["--kind", "gaussian", "--sigma", "0.1", "--seed", "5"]);
    let b = run("b.pgm", &["--kind", "gaussian", "--sigma", "0.1", "--seed", "5"]);
    assert_eq!(a, b);
    assert_ne!(a, original);

    run("sp.pgm", &["--kind", "salt_pepper", "--density", "1.0", "--seed", "2"]);
    let sp = load_image(dir.path().join("sp.pgm")).unwrap();
    assert!(sp.pixels().iter().all(|&v| v == 0.0 || v == 1.0));
}

#[test]
fn constant_input_has_black_edge_map() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "flat.png", &ImageBuffer::filled(16, 16, 0.5).unwrap());
    let output = dir.path().join("edges.png");
    assert!(edgefreq(&["edges", path_str(&input), path_str(&output)]).status.success());
    let edges = load_image(&output).unwrap();
    assert!(edges.pixels().iter().all(|&v| v == 0.0));
}

#[test]
fn spectrum_writes_two_images() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.pgm", &random_image(12, 10, 6));
    let (amp, phase) = (dir.path().join("amp.png"), dir.path().join("phase.pgm"));
    assert!(edgefreq(&["spectrum", path_str(&input), path_str(&amp), path_str(&phase)]).status.success());
    assert_eq!(load_image(&amp).unwrap().dims(), (12, 10));
    assert_eq!(load_image(&phase).unwrap().dims(), (12, 10));
}

#[test]
fn single_point_sweep_writes_header_and_one_row() {
    let dir = TempDir::new().unwrap();
    let (clean, noisy) = shapes_fixture();
    let noisy = write(&dir, "noisy.pgm", &noisy);
    let clean = write(&dir, "clean.pgm", &clean);
    let csv = dir.path().join("sweep.csv");
    let out = edgefreq(&[
        "sweep", path_str(&noisy), path_str(&clean),
        "--alphas", "0.1", "--lambdas", "1.0", "--cutoffs", "0.3",
        "-o", path_str(&csv),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "alpha,lambda,cutoff,rmse,psnr,ssim");
    assert!(lines[1].starts_with("0.100000,1.000000,0.300000,"));
}

#[test]
fn metrics_of_identical_images() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.pgm", &random_image(9, 9, 8));
    let out = edgefreq(&["metrics", path_str(&a), path_str(&a)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"rmse\":0.0,\"psnr_db\":null,\"ssim\":1.0}");
}
