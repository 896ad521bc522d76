#ifndef EDGEFREQ_H
#define EDGEFREQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Values of [`EfParams::mask_kind`].
 */
#define EF_MASK_IDEAL 0

#define EF_MASK_GAUSSIAN 1

#define EF_MASK_BUTTERWORTH 2

/**
 * Result code of every fallible entry point.
 */
typedef enum EfStatus {
  EF_STATUS_OK = 0,
  EF_STATUS_NULL_POINTER = 1,
  EF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * File missing or unreadable/unwritable.
   */
  EF_STATUS_IO = 3,
  /**
   * Unsupported, corrupt or unrecognized image format.
   */
  EF_STATUS_FORMAT = 4,
  EF_STATUS_DIMENSION_MISMATCH = 5,
  EF_STATUS_IMAGE_TOO_SMALL = 6,
  /**
   * Reconstruction left a significant imaginary part.
   */
  EF_STATUS_NUMERICAL = 7,
  EF_STATUS_BUFFER_TOO_SMALL = 8,
  /**
   * A path was not valid UTF-8.
   */
  EF_STATUS_INVALID_UTF8 = 9,
  /**
   * Internal panic caught at the boundary.
   */
  EF_STATUS_PANIC = 10,
} EfStatus;

/**
 * Opaque grayscale image with pixels in `[0, 1]`.
 */
typedef struct EfImage EfImage;

/**
 * Denoising parameters. Start from [`ef_params_default`].
 */
typedef struct EfParams {
  double alpha;
  double lambda;
  double cutoff;
  /**
   * One of the `EF_MASK_*` constants.
   */
  uint32_t mask_kind;
  /**
   * Used only by the Butterworth mask.
   */
  uint32_t butterworth_order;
  bool preserve_dc;
  double canny_sigma;
  double canny_low_ratio;
  double canny_high_ratio;
} EfParams;

/**
 * Quality of a test image against a reference. `psnr_db` is `+inf` for
 * identical images.
 */
typedef struct EfMetrics {
  double rmse;
  double psnr_db;
  double ssim;
} EfMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ef_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ef_version(void);

/**
 * Copies `height * width` row-major pixels, each in `[0, 1]`, into a new image.
 *
 * # Safety
 * `pixels` must point to `height * width` readable doubles and `out` must
 * be writable.
 */
enum EfStatus ef_image_new(size_t height, size_t width, const double *pixels, struct EfImage **out);

/**
 * Reads a PGM or PNG file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum EfStatus ef_image_load(const char *path, struct EfImage **out);

/**
 * Writes 8-bit grayscale; the format follows the `.pgm` or `.png` extension.
 *
 * # Safety
 * `img` must be a live handle and `path` a NUL-terminated string.
 */
enum EfStatus ef_image_save(const struct EfImage *img, const char *path);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `img` must be null or a handle not yet freed.
 */
void ef_image_free(struct EfImage *img);

/**
 * Height in pixels, 0 for a null handle.
 *
 * # Safety
 * `img` must be null or a live handle.
 */
size_t ef_image_height(const struct EfImage *img);

/**
 * Width in pixels, 0 for a null handle.
 *
 * # Safety
 * `img` must be null or a live handle.
 */
size_t ef_image_width(const struct EfImage *img);

/**
 * Copies the row-major pixels into `dst`, which must hold at least
 * `height * width` doubles (`len`).
 *
 * # Safety
 * `img` must be a live handle and `dst` writable for `len` doubles.
 */
enum EfStatus ef_image_copy_pixels(const struct EfImage *img, double *dst, size_t len);

/**
 * Additive Gaussian noise with standard deviation `sigma`, then clamping.
 *
 * # Safety
 * `img` must be a live handle and `out` writable.
 */
enum EfStatus ef_add_gaussian_noise(const struct EfImage *img,
                                    double sigma,
                                    uint64_t seed,
                                    struct EfImage **out);

/**
 * Forces `round(density * N)` distinct pixels to 0 or 1.
 *
 * # Safety
 * `img` must be a live handle and `out` writable.
 */
enum EfStatus ef_add_salt_pepper_noise(const struct EfImage *img,
                                       double density,
                                       uint64_t seed,
                                       struct EfImage **out);

/**
 * Canny edge map as an image of 0.0 and 1.0 pixels.
 *
 * # Safety
 * `img` must be a live handle and `out` writable.
 */
enum EfStatus ef_canny(const struct EfImage *img,
                       double sigma,
                       double low_ratio,
                       double high_ratio,
                       struct EfImage **out);

struct EfParams ef_params_default(void);

/**
 * Runs the full denoiser. A null `params` means [`ef_params_default`].
 *
 * # Safety
 * `img` must be a live handle, `params` null or readable, `out` writable.
 */
enum EfStatus ef_denoise(const struct EfImage *img,
                         const struct EfParams *params,
                         struct EfImage **out);

/**
 * RMSE, PSNR (peak 1) and SSIM of `test` against `reference`.
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum EfStatus ef_metrics(const struct EfImage *test,
                         const struct EfImage *reference,
                         struct EfMetrics *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDGEFREQ_H */
