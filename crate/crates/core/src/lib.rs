//! Edge-enhanced spectral image denoising.
//!
//! The denoiser runs Canny on a noisy image, attenuates the non-edge pixels,
//! moves to the frequency domain, low-pass filters only the amplitude
//! spectrum, and transforms back with the original phase:
//!
//! ```
//! use edgefreq::{pipeline, synth, noise};
//!
//! let clean = synth::shapes(64);
//! let noisy = noise::add_noise(&clean, &noise::NoiseSpec::gaussian(0.1, 7)?)?;
//! let out = pipeline::denoise(&noisy, &pipeline::PipelineParams::default())?;
//! assert_eq!(out.dims(), (64, 64));
//! # Ok::<(), edgefreq::Error>(())
//! ```

pub mod edge;
pub mod error;
pub mod image;
pub mod io;
pub mod metrics;
pub mod noise;
pub mod pipeline;
pub mod spectral;
pub mod synth;

pub use error::{Error, Result};
pub use image::{ImageBuffer, Plane};
