use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use edgefreq::edge::{canny, CannyParams};
use edgefreq::io::{load_image, save_image};
use edgefreq::metrics::MetricReport;
use edgefreq::noise::{add_noise, NoiseKind, NoiseSpec};
use edgefreq::pipeline::{denoise, sweep, write_sweep_csv, PipelineParams, SweepGrid};
use edgefreq::spectral::{decompose, fft2, MaskKind, MaskSpec};
use edgefreq::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "edgefreq", version, about = "Edge-enhanced spectral image denoising")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Denoise an image
    Denoise {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Clean reference; prints metric JSON when given
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Add seeded synthetic noise
    AddNoise {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum)]
        kind: NoiseArg,
        /// Gaussian standard deviation in intensity units
        #[arg(long, default_value_t = 0.0, value_parser = non_negative)]
        sigma: f64,
        /// Fraction of pixels to corrupt (salt_pepper)
        #[arg(long, default_value_t = 0.0, value_parser = closed_unit)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Write the Canny edge map as a 0/255 image
    Edges {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        canny: CannyArgs,
    },
    /// Render log-amplitude and phase spectra
    Spectrum {
        input: PathBuf,
        amplitude: PathBuf,
        phase: PathBuf,
    },
    /// Evaluate a parameter grid and write CSV
    Sweep {
        noisy: PathBuf,
        clean: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "0.1", value_parser = closed_unit)]
        alphas: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1.0", value_parser = half_open_unit)]
        lambdas: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0.3", value_parser = half_open_unit)]
        cutoffs: Vec<f64>,
        #[command(flatten)]
        mask: MaskArgs,
        #[command(flatten)]
        canny: CannyArgs,
        /// CSV destination; standard output when omitted
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare two images and print metric JSON
    Metrics { test: PathBuf, reference: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NoiseArg {
    Gaussian,
    #[value(name = "salt_pepper", alias = "salt-pepper")]
    SaltPepper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MaskArg {
    Ideal,
    Gaussian,
    Butterworth,
}

#[derive(Debug, Args)]
struct PipelineArgs {
    /// Non-edge attenuation
    #[arg(long, default_value_t = 0.1, value_parser = closed_unit)]
    alpha: f64,
    /// Amplitude scale
    #[arg(long, default_value_t = 1.0, value_parser = half_open_unit)]
    lambda: f64,
    /// Mask cutoff as a fraction of the largest center distance
    #[arg(long, default_value_t = 0.3, value_parser = half_open_unit)]
    cutoff: f64,
    #[command(flatten)]
    mask: MaskArgs,
    #[command(flatten)]
    canny: CannyArgs,
}

#[derive(Debug, Args)]
struct MaskArgs {
    #[arg(long, value_enum, default_value_t = MaskArg::Ideal)]
    mask_kind: MaskArg,
    /// Butterworth order
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Keep the zero-frequency amplitude unfiltered
    #[arg(long)]
    preserve_dc: bool,
}

#[derive(Debug, Args)]
struct CannyArgs {
    #[arg(long, default_value_t = 1.4, value_parser = positive)]
    canny_sigma: f64,
    #[arg(long, default_value_t = 0.1, value_parser = open_unit)]
    low_ratio: f64,
    #[arg(long, default_value_t = 0.3, value_parser = half_open_unit)]
    high_ratio: f64,
}

fn parse_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn closed_unit(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn half_open_unit(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1]"))
    }
}

fn open_unit(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1)"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{v} must be > 0"))
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("{v} must be >= 0"))
    }
}

/// Failure with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter { .. } => EXIT_USAGE,
            _ => EXIT_RUNTIME,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_RUNTIME,
            message: e.to_string(),
        }
    }
}

impl CannyArgs {
    fn params(&self) -> Result<CannyParams, Failure> {
        if self.low_ratio >= self.high_ratio {
            return Err(Failure::usage(format!(
                "--low-ratio ({}) must be below --high-ratio ({})",
                self.low_ratio, self.high_ratio
            )));
        }
        Ok(CannyParams::new(self.canny_sigma, self.low_ratio, self.high_ratio)?)
    }
}

impl MaskArgs {
    fn spec(&self, cutoff: f64) -> Result<MaskSpec, Failure> {
        let kind = match self.mask_kind {
            MaskArg::Ideal => MaskKind::Ideal,
            MaskArg::Gaussian => MaskKind::Gaussian,
            MaskArg::Butterworth => MaskKind::Butterworth { order: self.order },
        };
        Ok(MaskSpec::new(kind, cutoff)?)
    }
}

impl PipelineArgs {
    fn params(&self) -> Result<PipelineParams, Failure> {
        let params = PipelineParams {
            alpha: self.alpha,
            lambda: self.lambda,
            mask: self.mask.spec(self.cutoff)?,
            canny: self.canny.params()?,
            preserve_dc: self.mask.preserve_dc,
        };
        params.validate()?;
        Ok(params)
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Denoise {
            input,
            output,
            pipeline,
            reference,
        } => {
            let params = pipeline.params()?;
            let img = load_image(&input)?;
            let reference = reference.map(load_image).transpose()?;
            let out = denoise(&img, &params)?;
            save_image(&out, &output)?;
            if let Some(clean) = reference {
                let report = MetricReport::compute(&out, &clean)?;
                println!("{}", report.to_json());
            }
        }
        Command::AddNoise {
            input,
            output,
            kind,
            sigma,
            density,
            seed,
        } => {
            let kind = match kind {
                NoiseArg::Gaussian => NoiseKind::Gaussian { sigma },
                NoiseArg::SaltPepper => NoiseKind::SaltPepper { density },
            };
            let spec = NoiseSpec { kind, seed };
            spec.validate()?;
            let img = load_image(&input)?;
            save_image(&add_noise(&img, &spec)?, &output)?;
        }
        Command::Edges {
            input,
            output,
            canny: args,
        } => {
            let params = args.params()?;
            let img = load_image(&input)?;
            save_image(&canny(&img, &params)?.to_image(), &output)?;
        }
        Command::Spectrum {
            input,
            amplitude,
            phase,
        } => {
            let img = load_image(&input)?;
            let spectrum = decompose(&fft2(&img));
            save_image(&spectrum.amplitude_image(), &amplitude)?;
            save_image(&spectrum.phase_image(), &phase)?;
        }
        Command::Sweep {
            noisy,
            clean,
            alphas,
            lambdas,
            cutoffs,
            mask,
            canny: canny_args,
            output,
        } => {
            let base = PipelineParams {
                mask: mask.spec(cutoffs.first().copied().unwrap_or(0.3))?,
                canny: canny_args.params()?,
                preserve_dc: mask.preserve_dc,
                ..PipelineParams::default()
            };
            let grid = SweepGrid {
                alphas,
                lambdas,
                cutoffs,
            };
            let noisy = load_image(&noisy)?;
            let clean = load_image(&clean)?;
            let results = sweep(&noisy, &clean, &grid, &base)?;
            match output {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| Failure {
                        code: EXIT_RUNTIME,
                        message: format!("{}: {e}", path.display()),
                    })?;
                    let mut w = BufWriter::new(file);
                    write_sweep_csv(&results, &mut w)?;
                    w.flush()?;
                }
                None => {
                    let stdout = io::stdout();
                    write_sweep_csv(&results, stdout.lock())?;
                }
            }
        }
        Command::Metrics { test, reference } => {
            let a = load_image(&test)?;
            let b = load_image(&reference)?;
            println!("{}", MetricReport::compute(&a, &b)?.to_json());
        }
    }
    Ok(())
}
