//! One-dimensional DFT plans and the row-column 2D transform.
//!
//! Power-of-two lengths use an iterative radix-2 Cooley–Tukey transform.
//! Every other length goes through Bluestein's chirp-z identity
//! `nk = (n^2 + k^2 - (k - n)^2) / 2`, which turns the DFT into a circular
//! convolution that is evaluated with a power-of-two transform of length
//! at least `2N - 1`. No length is padded or truncated at the interface.
//!
//! Twiddle factors are evaluated directly from `cos`/`sin` of the exact
//! reduced angle rather than by recurrence, which keeps the error of a
//! length-N transform near `N log N` ulps.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

/// A reusable DFT of a fixed length.
#[derive(Debug, Clone)]
pub struct Fft {
    len: usize,
    algorithm: Algorithm,
}

#[derive(Debug, Clone)]
enum Algorithm {
    Radix2(Radix2),
    Bluestein(Box<Bluestein>),
}

impl Fft {
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "transform length must be positive");
        let algorithm = if len.is_power_of_two() {
            Algorithm::Radix2(Radix2::new(len))
        } else {
            Algorithm::Bluestein(Box::new(Bluestein::new(len)))
        };
        Fft { len, algorithm }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn uses_bluestein(&self) -> bool {
        matches!(self.algorithm, Algorithm::Bluestein(_))
    }

    /// In-place forward transform, `X[k] = sum x[n] exp(-2 pi i k n / N)`.
    pub fn forward(&self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.len, "buffer length does not match plan");
        match &self.algorithm {
            Algorithm::Radix2(p) => p.run(buf),
            Algorithm::Bluestein(p) => p.run(buf),
        }
    }

    /// In-place inverse transform without the `1/N` factor.
    pub fn inverse_unnormalized(&self, buf: &mut [Complex64]) {
        for v in buf.iter_mut() {
            *v = v.conj();
        }
        self.forward(buf);
        for v in buf.iter_mut() {
            *v = v.conj();
        }
    }
}

/// `exp(-2 pi i * num / den)` with `num` already reduced modulo `den`.
#[inline]
fn root_of_unity(num: u64, den: u64) -> Complex64 {
    let angle = -2.0 * PI * (num as f64) / (den as f64);
    Complex64::new(angle.cos(), angle.sin())
}

#[derive(Debug, Clone)]
struct Radix2 {
    len: usize,
    twiddles: Vec<Complex64>,
}

impl Radix2 {
    fn new(len: usize) -> Self {
        debug_assert!(len.is_power_of_two());
        let twiddles = (0..len / 2)
            .map(|k| root_of_unity(k as u64, len as u64))
            .collect();
        Radix2 { len, twiddles }
    }

    fn run(&self, buf: &mut [Complex64]) {
        let n = self.len;
        if n == 1 {
            return;
        }
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }
        let mut size = 2;
        while size <= n {
            let half = size / 2;
            let stride = n / size;
            for start in (0..n).step_by(size) {
                for k in 0..half {
                    let t = self.twiddles[k * stride] * buf[start + k + half];
                    let u = buf[start + k];
                    buf[start + k] = u + t;
                    buf[start + k + half] = u - t;
                }
            }
            size *= 2;
        }
    }
}

#[derive(Debug, Clone)]
struct Bluestein {
    len: usize,
    /// `exp(-i pi k^2 / N)`
    chirp: Vec<Complex64>,
    /// Transform of the conjugate chirp laid out circularly, pre-scaled by `1/M`.
    kernel_spectrum: Vec<Complex64>,
    inner: Radix2,
}

impl Bluestein {
    fn new(len: usize) -> Self {
        let inner_len = (2 * len - 1).next_power_of_two();
        let inner = Radix2::new(inner_len);
        let two_n = 2 * len as u64;
        // exp(-i pi k^2 / N) = exp(-2 pi i (k^2 mod 2N) / 2N)
        let chirp: Vec<Complex64> = (0..len as u64)
            .map(|k| root_of_unity((k * k) % two_n, two_n))
            .collect();

        let mut kernel = vec![Complex64::new(0.0, 0.0); inner_len];
        kernel[0] = chirp[0].conj();
        for k in 1..len {
            let c = chirp[k].conj();
            kernel[k] = c;
            kernel[inner_len - k] = c;
        }
        inner.run(&mut kernel);
        let scale = 1.0 / inner_len as f64;
        for v in &mut kernel {
            *v *= scale;
        }
        Bluestein {
            len,
            chirp,
            kernel_spectrum: kernel,
            inner,
        }
    }

    fn run(&self, buf: &mut [Complex64]) {
        let m = self.inner.len;
        let mut work = vec![Complex64::new(0.0, 0.0); m];
        for k in 0..self.len {
            work[k] = buf[k] * self.chirp[k];
        }
        self.inner.run(&mut work);
        for (w, k) in work.iter_mut().zip(&self.kernel_spectrum) {
            *w *= k;
        }
        // inverse by conjugation; the 1/M factor lives in the kernel
        for w in work.iter_mut() {
            *w = w.conj();
        }
        self.inner.run(&mut work);
        for k in 0..self.len {
            buf[k] = work[k].conj() * self.chirp[k];
        }
    }
}

/// Applies `f` to every row of a row-major `rows x cols` buffer, then to
/// every column. Rows are independent, so the parallel map is
/// bit-identical to a sequential one.
pub(crate) fn transform_2d(
    data: &mut [Complex64],
    rows: usize,
    cols: usize,
    inverse: bool,
) {
    let row_plan = Fft::new(cols);
    let col_plan = if rows == cols {
        row_plan.clone()
    } else {
        Fft::new(rows)
    };
    let apply = |plan: &Fft, line: &mut [Complex64]| {
        if inverse {
            plan.inverse_unnormalized(line)
        } else {
            plan.forward(line)
        }
    };

    data.par_chunks_mut(cols).for_each(|row| apply(&row_plan, row));
    let mut transposed = transpose(data, rows, cols);
    transposed
        .par_chunks_mut(rows)
        .for_each(|col| apply(&col_plan, col));
    let back = transpose(&transposed, cols, rows);
    data.copy_from_slice(&back);
}

fn transpose(data: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}
