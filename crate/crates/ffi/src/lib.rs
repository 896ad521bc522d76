//! C ABI over `edgefreq`.
//!
//! Images cross the boundary as opaque [`EfImage`] handles created by the
//! `ef_image_*` constructors and released with [`ef_image_free`]. Every
//! fallible call returns an [`EfStatus`]; on failure a description is
//! available from [`ef_last_error_message`] on the same thread. Output
//! handles are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use edgefreq::edge::{canny, CannyParams};
use edgefreq::io::{load_image, save_image};
use edgefreq::metrics::MetricReport;
use edgefreq::noise::{add_noise, NoiseSpec};
use edgefreq::pipeline::{denoise, PipelineParams};
use edgefreq::spectral::{MaskKind, MaskSpec};
use edgefreq::{Error, ImageBuffer};

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// File missing or unreadable/unwritable.
    Io = 3,
    /// Unsupported, corrupt or unrecognized image format.
    Format = 4,
    DimensionMismatch = 5,
    ImageTooSmall = 6,
    /// Reconstruction left a significant imaginary part.
    Numerical = 7,
    BufferTooSmall = 8,
    /// A path was not valid UTF-8.
    InvalidUtf8 = 9,
    /// Internal panic caught at the boundary.
    Panic = 10,
}

/// Opaque grayscale image with pixels in `[0, 1]`.
pub struct EfImage(ImageBuffer);

/// Values of [`EfParams::mask_kind`].
pub const EF_MASK_IDEAL: u32 = 0;
pub const EF_MASK_GAUSSIAN: u32 = 1;
pub const EF_MASK_BUTTERWORTH: u32 = 2;

/// Denoising parameters. Start from [`ef_params_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct EfParams {
    pub alpha: f64,
    pub lambda: f64,
    pub cutoff: f64,
    /// One of the `EF_MASK_*` constants.
    pub mask_kind: u32,
    /// Used only by the Butterworth mask.
    pub butterworth_order: u32,
    pub preserve_dc: bool,
    pub canny_sigma: f64,
    pub canny_low_ratio: f64,
    pub canny_high_ratio: f64,
}

/// Quality of a test image against a reference. `psnr_db` is `+inf` for
/// identical images.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct EfMetrics {
    pub rmse: f64,
    pub psnr_db: f64,
    pub ssim: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

struct Failure(EfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::MissingFile(_) | Error::Io { .. } => EfStatus::Io,
            Error::UnsupportedFormat(_)
            | Error::CorruptHeader(_)
            | Error::CorruptData(_)
            | Error::UnknownExtension(_) => EfStatus::Format,
            Error::InvalidParameter { .. } => EfStatus::InvalidArgument,
            Error::DimensionMismatch { .. } => EfStatus::DimensionMismatch,
            Error::ImageTooSmall { .. } => EfStatus::ImageTooSmall,
            Error::SymmetryViolation { .. } => EfStatus::Numerical,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EfStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> EfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            EfStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            EfStatus::Panic
        }
    }
}

unsafe fn image_ref<'a>(img: *const EfImage, what: &str) -> Result<&'a ImageBuffer, Failure> {
    img.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn path_arg(path: *const c_char) -> Result<PathBuf, Failure> {
    if path.is_null() {
        return Err(null("path"));
    }
    CStr::from_ptr(path)
        .to_str()
        .map(PathBuf::from)
        .map_err(|_| Failure(EfStatus::InvalidUtf8, "path is not valid UTF-8".into()))
}

unsafe fn emit(out: *mut *mut EfImage, img: ImageBuffer) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(EfImage(img)));
    Ok(())
}

fn canny_params(sigma: f64, low: f64, high: f64) -> Result<CannyParams, Failure> {
    Ok(CannyParams::new(sigma, low, high)?)
}

fn pipeline_params(p: &EfParams) -> Result<PipelineParams, Failure> {
    let kind = match p.mask_kind {
        EF_MASK_IDEAL => MaskKind::Ideal,
        EF_MASK_GAUSSIAN => MaskKind::Gaussian,
        EF_MASK_BUTTERWORTH => MaskKind::Butterworth {
            order: p.butterworth_order,
        },
        other => {
            return Err(Failure(
                EfStatus::InvalidArgument,
                format!("unknown mask kind {other}"),
            ))
        }
    };
    let params = PipelineParams {
        alpha: p.alpha,
        lambda: p.lambda,
        mask: MaskSpec::new(kind, p.cutoff)?,
        canny: canny_params(p.canny_sigma, p.canny_low_ratio, p.canny_high_ratio)?,
        preserve_dc: p.preserve_dc,
    };
    params.validate()?;
    Ok(params)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ef_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ef_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies `height * width` row-major pixels, each in `[0, 1]`, into a new image.
///
/// # Safety
/// `pixels` must point to `height * width` readable doubles and `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn ef_image_new(
    height: usize,
    width: usize,
    pixels: *const f64,
    out: *mut *mut EfImage,
) -> EfStatus {
    guard(|| {
        if pixels.is_null() {
            return Err(null("pixels"));
        }
        let len = height.checked_mul(width).ok_or_else(|| {
            Failure(EfStatus::InvalidArgument, "image dimensions overflow".into())
        })?;
        let data = std::slice::from_raw_parts(pixels, len).to_vec();
        emit(out, ImageBuffer::new(height, width, data)?)
    })
}

/// Reads a PGM or PNG file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_image_load(path: *const c_char, out: *mut *mut EfImage) -> EfStatus {
    guard(|| {
        let path = path_arg(path)?;
        emit(out, load_image(path)?)
    })
}

/// Writes 8-bit grayscale; the format follows the `.pgm` or `.png` extension.
///
/// # Safety
/// `img` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ef_image_save(img: *const EfImage, path: *const c_char) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        Ok(save_image(img, path_arg(path)?)?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `img` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ef_image_free(img: *mut EfImage) {
    if !img.is_null() {
        drop(Box::from_raw(img));
    }
}

/// Height in pixels, 0 for a null handle.
///
/// # Safety
/// `img` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ef_image_height(img: *const EfImage) -> usize {
    img.as_ref().map_or(0, |h| h.0.height())
}

/// Width in pixels, 0 for a null handle.
///
/// # Safety
/// `img` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ef_image_width(img: *const EfImage) -> usize {
    img.as_ref().map_or(0, |h| h.0.width())
}

/// Copies the row-major pixels into `dst`, which must hold at least
/// `height * width` doubles (`len`).
///
/// # Safety
/// `img` must be a live handle and `dst` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ef_image_copy_pixels(
    img: *const EfImage,
    dst: *mut f64,
    len: usize,
) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        if dst.is_null() {
            return Err(null("dst"));
        }
        if len < img.len() {
            return Err(Failure(
                EfStatus::BufferTooSmall,
                format!("need {} doubles, got {len}", img.len()),
            ));
        }
        ptr::copy_nonoverlapping(img.pixels().as_ptr(), dst, img.len());
        Ok(())
    })
}

/// Additive Gaussian noise with standard deviation `sigma`, then clamping.
///
/// # Safety
/// `img` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_add_gaussian_noise(
    img: *const EfImage,
    sigma: f64,
    seed: u64,
    out: *mut *mut EfImage,
) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        emit(out, add_noise(img, &NoiseSpec::gaussian(sigma, seed)?)?)
    })
}

/// Forces `round(density * N)` distinct pixels to 0 or 1.
///
/// # Safety
/// `img` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_add_salt_pepper_noise(
    img: *const EfImage,
    density: f64,
    seed: u64,
    out: *mut *mut EfImage,
) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        emit(out, add_noise(img, &NoiseSpec::salt_pepper(density, seed)?)?)
    })
}

/// Canny edge map as an image of 0.0 and 1.0 pixels.
///
/// # Safety
/// `img` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_canny(
    img: *const EfImage,
    sigma: f64,
    low_ratio: f64,
    high_ratio: f64,
    out: *mut *mut EfImage,
) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        let params = canny_params(sigma, low_ratio, high_ratio)?;
        emit(out, canny(img, &params)?.to_image())
    })
}

#[no_mangle]
pub extern "C" fn ef_params_default() -> EfParams {
    let p = PipelineParams::default();
    let (mask_kind, butterworth_order) = match p.mask.kind {
        MaskKind::Ideal => (EF_MASK_IDEAL, 2),
        MaskKind::Gaussian => (EF_MASK_GAUSSIAN, 2),
        MaskKind::Butterworth { order } => (EF_MASK_BUTTERWORTH, order),
    };
    EfParams {
        alpha: p.alpha,
        lambda: p.lambda,
        cutoff: p.mask.cutoff_fraction,
        mask_kind,
        butterworth_order,
        preserve_dc: p.preserve_dc,
        canny_sigma: p.canny.sigma,
        canny_low_ratio: p.canny.low_ratio,
        canny_high_ratio: p.canny.high_ratio,
    }
}

/// Runs the full denoiser. A null `params` means [`ef_params_default`].
///
/// # Safety
/// `img` must be a live handle, `params` null or readable, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_denoise(
    img: *const EfImage,
    params: *const EfParams,
    out: *mut *mut EfImage,
) -> EfStatus {
    guard(|| {
        let img = image_ref(img, "img")?;
        let params = match params.as_ref() {
            Some(p) => pipeline_params(p)?,
            None => PipelineParams::default(),
        };
        emit(out, denoise(img, &params)?)
    })
}

/// RMSE, PSNR (peak 1) and SSIM of `test` against `reference`.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ef_metrics(
    test: *const EfImage,
    reference: *const EfImage,
    out: *mut EfMetrics,
) -> EfStatus {
    guard(|| {
        let test = image_ref(test, "test")?;
        let reference = image_ref(reference, "reference")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let report = MetricReport::compute(test, reference)?;
        *out = EfMetrics {
            rmse: report.rmse,
            psnr_db: report.psnr,
            ssim: report.ssim,
        };
        Ok(())
    })
}
