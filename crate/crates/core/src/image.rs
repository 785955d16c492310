//! Raster containers, color conversions, Gaussian kernels, separable
//! convolution, and Lanczos doubling.
//!
//! Convolution uses the correlation convention (no kernel flip): with the
//! central-difference kernel `[-1, 0, 1]` a left-to-right intensity ramp
//! yields a positive horizontal derivative. Borders mirror-reflect without
//! repeating the edge pixel, which avoids the dark-border gradient artifacts
//! that fabricate corners. Neither choice affects any squared quantity used
//! downstream.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::num::{real, to_f64, Real};

/// Dense 2-D raster of scalar values in row-major order.
///
/// Input images carry intensities normalized to `[0, 1]`; derived maps
/// (gradients, responses) are unbounded.
#[derive(Clone, PartialEq)]
pub struct ImagePlane<T> {
    width: usize,
    height: usize,
    data: Vec<T>,
}

impl<T: Real> ImagePlane<T> {
    /// Zero-filled plane.
    pub fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![T::zero(); width * height],
        }
    }

    /// Constant-filled plane.
    pub fn filled(width: usize, height: usize, value: T) -> Self {
        Self {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    /// Wraps a row-major buffer; the length must equal `width * height`.
    pub fn from_vec(width: usize, height: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::DimensionMismatch(format!(
                "buffer of {} values cannot back a {}x{} plane",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    /// Builds a plane by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> T {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: T) {
        self.data[y * self.width + x] = v;
    }

    pub fn row(&self, y: usize) -> &[T] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    pub fn same_size<U: Real>(&self, other: &ImagePlane<U>) -> bool {
        self.width == other.width && self.height == other.height
    }

    /// Element-wise map into a new plane.
    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Element-wise combination of two equally sized planes.
    pub fn zip_map(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert!(self.same_size(other), "zip_map on mismatched planes");
        Self {
            width: self.width,
            height: self.height,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Mean over all pixels. Sequential left-to-right summation so results
    /// are bit-stable regardless of thread count.
    pub fn mean(&self) -> T {
        let sum = self.data.iter().fold(T::zero(), |acc, &v| acc + v);
        sum / real(self.data.len() as f64)
    }

    /// Mean and population (divide-by-N) standard deviation, two-pass.
    pub fn mean_std(&self) -> (T, T) {
        let mean = self.mean();
        let var = self
            .data
            .iter()
            .fold(T::zero(), |acc, &v| acc + (v - mean) * (v - mean))
            / real(self.data.len() as f64);
        (mean, var.sqrt())
    }

    pub fn min_max(&self) -> (T, T) {
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for &v in &self.data {
            if v < lo {
                lo = v;
            }
            if v > hi {
                hi = v;
            }
        }
        (lo, hi)
    }
}

impl<T: Real> std::fmt::Debug for ImagePlane<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ImagePlane({}x{})", self.width, self.height)
    }
}

/// Three-channel color raster with values in `[0, 1]`.
#[derive(Clone, Debug)]
pub struct ImageRgb<T> {
    r: ImagePlane<T>,
    g: ImagePlane<T>,
    b: ImagePlane<T>,
}

impl<T: Real> ImageRgb<T> {
    /// Assembles an RGB image; all three planes must share dimensions.
    pub fn new(r: ImagePlane<T>, g: ImagePlane<T>, b: ImagePlane<T>) -> Result<Self> {
        if !r.same_size(&g) || !r.same_size(&b) {
            return Err(Error::DimensionMismatch(
                "RGB channels must share dimensions".into(),
            ));
        }
        Ok(Self { r, g, b })
    }

    /// Replicates a gray plane into three identical channels.
    pub fn from_gray(plane: &ImagePlane<T>) -> Self {
        Self {
            r: plane.clone(),
            g: plane.clone(),
            b: plane.clone(),
        }
    }

    pub fn width(&self) -> usize {
        self.r.width()
    }

    pub fn height(&self) -> usize {
        self.r.height()
    }

    pub fn red(&self) -> &ImagePlane<T> {
        &self.r
    }

    pub fn green(&self) -> &ImagePlane<T> {
        &self.g
    }

    pub fn blue(&self) -> &ImagePlane<T> {
        &self.b
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> (T, T, T) {
        (self.r.get(x, y), self.g.get(x, y), self.b.get(x, y))
    }

    /// Element-wise map applied to every channel.
    pub fn map(&self, f: impl Fn(T) -> T + Copy) -> Self {
        Self {
            r: self.r.map(f),
            g: self.g.map(f),
            b: self.b.map(f),
        }
    }
}

/// Binary pixel mask, row-major.
#[derive(Clone, Debug)]
pub struct BinaryPlane {
    width: usize,
    height: usize,
    data: Vec<bool>,
}

impl BinaryPlane {
    pub fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![false; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<bool>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::DimensionMismatch(format!(
                "buffer of {} flags cannot back a {}x{} mask",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.data[y * self.width + x] = v;
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&v| v).count()
    }

    /// Iterates the coordinates of set pixels in row-major order.
    pub fn iter_ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.width;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(move |(i, _)| (i % w, i / w))
    }
}

/// Odd-length 1-D filter kernel.
#[derive(Clone, Debug)]
pub struct Kernel1D<T> {
    taps: Vec<T>,
    radius: usize,
}

impl<T: Real> Kernel1D<T> {
    pub fn new(taps: Vec<T>) -> Result<Self> {
        if taps.len() % 2 == 0 || taps.is_empty() {
            return Err(Error::EvenKernel(taps.len()));
        }
        let radius = (taps.len() - 1) / 2;
        Ok(Self { taps, radius })
    }

    /// The single-tap identity kernel `[1]`.
    pub fn identity() -> Self {
        Self {
            taps: vec![T::one()],
            radius: 0,
        }
    }

    /// The central-difference kernel `[-1, 0, 1]`.
    pub fn central_difference() -> Self {
        Self {
            taps: vec![-T::one(), T::zero(), T::one()],
            radius: 1,
        }
    }

    pub fn taps(&self) -> &[T] {
        &self.taps
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.taps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taps.is_empty()
    }
}

/// Luminance conversion with ITU-R BT.601 weights (0.299, 0.587, 0.114),
/// the standard gray conversion of the classic imaging texts.
pub fn to_luminance<T: Real>(img: &ImageRgb<T>) -> ImagePlane<T> {
    let (wr, wg, wb): (T, T, T) = (real(0.299), real(0.587), real(0.114));
    let mut out = ImagePlane::new(img.width(), img.height());
    for (i, v) in out.data_mut().iter_mut().enumerate() {
        *v = wr * img.red().data()[i] + wg * img.green().data()[i] + wb * img.blue().data()[i];
    }
    out
}

/// HSV value channel: the per-pixel maximum over the RGB channels.
pub fn to_value<T: Real>(img: &ImageRgb<T>) -> ImagePlane<T> {
    let mut out = ImagePlane::new(img.width(), img.height());
    for (i, v) in out.data_mut().iter_mut().enumerate() {
        *v = img.red().data()[i]
            .max(img.green().data()[i])
            .max(img.blue().data()[i]);
    }
    out
}

/// Discretized zero-mean Gaussian, sampled at integer offsets in
/// `[-ceil(3*sigma), ceil(3*sigma)]` and renormalized to unit sum. The taps
/// are exactly symmetric by construction.
pub fn gaussian_kernel<T: Real>(sigma: f64) -> Result<Kernel1D<T>> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::InvalidSigma(sigma));
    }
    let radius = (3.0 * sigma).ceil() as usize;
    let mut taps = vec![T::zero(); 2 * radius + 1];
    let two_sigma_sq = 2.0 * sigma * sigma;
    for j in 0..=radius {
        let v: T = real((-((j * j) as f64) / two_sigma_sq).exp());
        taps[radius + j] = v;
        taps[radius - j] = v;
    }
    let sum = taps.iter().fold(T::zero(), |acc, &v| acc + v);
    for t in &mut taps {
        *t = *t / sum;
    }
    Kernel1D::new(taps)
}

/// Mirror reflection without repeating the edge pixel: -1 -> 1, n -> n-2.
/// Valid for offsets up to `n - 1`, which the radius checks guarantee.
#[inline]
fn reflect(i: isize, n: usize) -> usize {
    if i < 0 {
        (-i) as usize
    } else if i as usize >= n {
        2 * n - 2 - i as usize
    } else {
        i as usize
    }
}

fn check_kernel_fits<T: Real>(img: &ImagePlane<T>, k: &Kernel1D<T>, dim: usize) -> Result<()> {
    if k.radius() >= dim {
        return Err(Error::KernelTooLarge {
            radius: k.radius(),
            width: img.width(),
            height: img.height(),
        });
    }
    Ok(())
}

/// Correlates every row with `kernel`. Rows are independent, so the row loop
/// is parallel without affecting results.
fn convolve_rows<T: Real>(src: &ImagePlane<T>, kernel: &Kernel1D<T>) -> ImagePlane<T> {
    let w = src.width();
    let h = src.height();
    let r = kernel.radius();
    let taps = kernel.taps();
    let mut out = ImagePlane::new(w, h);
    out.data_mut()
        .par_chunks_mut(w)
        .enumerate()
        .for_each(|(y, out_row)| {
            let row = src.row(y);
            let (lo, hi) = if w > 2 * r { (r, w - r) } else { (0, 0) };
            for (x, o) in out_row.iter_mut().enumerate().take(lo) {
                let mut acc = T::zero();
                for (t, &k) in taps.iter().enumerate() {
                    acc = acc + k * row[reflect(x as isize + t as isize - r as isize, w)];
                }
                *o = acc;
                let _ = x;
            }
            for x in lo..hi {
                let base = x - r;
                let mut acc = T::zero();
                for (t, &k) in taps.iter().enumerate() {
                    acc = acc + k * row[base + t];
                }
                out_row[x] = acc;
            }
            for x in hi.max(lo)..w {
                let mut acc = T::zero();
                for (t, &k) in taps.iter().enumerate() {
                    acc = acc + k * row[reflect(x as isize + t as isize - r as isize, w)];
                }
                out_row[x] = acc;
            }
        });
    out
}

/// Correlates every column with `kernel`, accumulating row by row. Output
/// rows are independent, so the outer loop is parallel.
fn convolve_cols<T: Real>(src: &ImagePlane<T>, kernel: &Kernel1D<T>) -> ImagePlane<T> {
    let w = src.width();
    let h = src.height();
    let r = kernel.radius();
    let taps = kernel.taps();
    let mut out = ImagePlane::new(w, h);
    out.data_mut()
        .par_chunks_mut(w)
        .enumerate()
        .for_each(|(y, out_row)| {
            for (t, &k) in taps.iter().enumerate() {
                let sy = reflect(y as isize + t as isize - r as isize, h);
                let srow = src.row(sy);
                if t == 0 {
                    for (o, &s) in out_row.iter_mut().zip(srow) {
                        *o = k * s;
                    }
                } else {
                    for (o, &s) in out_row.iter_mut().zip(srow) {
                        *o = *o + k * s;
                    }
                }
            }
        });
    out
}

/// Separable convolution: `kh` along rows, then `kv` along columns.
/// Equivalent to full 2-D convolution with the outer-product kernel; output
/// dimensions match the input, borders reflect.
pub fn convolve_separable<T: Real>(
    img: &ImagePlane<T>,
    kh: &Kernel1D<T>,
    kv: &Kernel1D<T>,
) -> Result<ImagePlane<T>> {
    check_kernel_fits(img, kh, img.width())?;
    check_kernel_fits(img, kv, img.height())?;
    let tmp = convolve_rows(img, kh);
    Ok(convolve_cols(&tmp, kv))
}

/// Smooths a plane with an isotropic Gaussian of the given sigma.
pub fn gaussian_smooth<T: Real>(img: &ImagePlane<T>, sigma: f64) -> Result<ImagePlane<T>> {
    let k = gaussian_kernel::<T>(sigma)?;
    convolve_separable(img, &k, &k)
}

const LANCZOS_A: f64 = 3.0;

fn lanczos3(x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    if x.abs() >= LANCZOS_A {
        return 0.0;
    }
    let px = std::f64::consts::PI * x;
    LANCZOS_A * px.sin() * (px / LANCZOS_A).sin() / (px * px)
}

/// The two 6-tap phase kernels for 2x upsampling under the half-pixel-center
/// convention: output index `u` samples input coordinate `(u + 0.5)/2 - 0.5`.
/// Each phase is renormalized to unit sum (partition of unity).
fn lanczos_double_phases<T: Real>() -> ([T; 6], [T; 6]) {
    let mut even = [0.0f64; 6]; // u = 2t, offsets -3..=2, argument -0.25 - off
    let mut odd = [0.0f64; 6]; // u = 2t + 1, offsets -2..=3, argument 0.25 - off
    for (i, e) in even.iter_mut().enumerate() {
        *e = lanczos3(-0.25 - (i as f64 - 3.0));
    }
    for (i, o) in odd.iter_mut().enumerate() {
        *o = lanczos3(0.25 - (i as f64 - 2.0));
    }
    let se: f64 = even.iter().sum();
    let so: f64 = odd.iter().sum();
    let mut even_t = [T::zero(); 6];
    let mut odd_t = [T::zero(); 6];
    for i in 0..6 {
        even_t[i] = real(even[i] / se);
        odd_t[i] = real(odd[i] / so);
    }
    (even_t, odd_t)
}

fn upsample_rows<T: Real>(src: &ImagePlane<T>, even: &[T; 6], odd: &[T; 6]) -> ImagePlane<T> {
    let w = src.width();
    let h = src.height();
    let mut out = ImagePlane::new(2 * w, h);
    let ow = 2 * w;
    for y in 0..h {
        let row = src.row(y);
        for t in 0..w {
            let mut acc_e = T::zero();
            let mut acc_o = T::zero();
            for (i, (&ke, &ko)) in even.iter().zip(odd).enumerate() {
                acc_e = acc_e + ke * row[reflect(t as isize + i as isize - 3, w)];
                acc_o = acc_o + ko * row[reflect(t as isize + i as isize - 2, w)];
            }
            out.data_mut()[y * ow + 2 * t] = acc_e;
            out.data_mut()[y * ow + 2 * t + 1] = acc_o;
        }
    }
    out
}

fn transpose<T: Real>(src: &ImagePlane<T>) -> ImagePlane<T> {
    let w = src.width();
    let h = src.height();
    ImagePlane::from_fn(h, w, |x, y| src.get(y, x))
}

/// Doubles both dimensions with Lanczos-3 windowed-sinc resampling.
///
/// Output pixel `u` is centered on input coordinate `(u + 0.5)/2 - 0.5`, so a
/// detection at doubled-image coordinate `u` maps back to the original frame
/// as `(u + 0.5)/2 - 0.5` exactly. The result is clamped to the input's value
/// range to suppress ringing overshoot on intensity images.
pub fn upsample_double_lanczos<T: Real>(src: &ImagePlane<T>) -> ImagePlane<T> {
    let (even, odd) = lanczos_double_phases::<T>();
    let pass1 = upsample_rows(src, &even, &odd);
    let pass2 = upsample_rows(&transpose(&pass1), &even, &odd);
    let mut out = transpose(&pass2);
    let (lo, hi) = src.min_max();
    for v in out.data_mut() {
        *v = (*v).max(lo).min(hi);
    }
    out
}

/// Downsamples by 2x with 2x2 box averaging. Used by tests and the
/// evaluation harness as the inverse-direction oracle for the doubler.
pub fn downsample_half_box<T: Real>(src: &ImagePlane<T>) -> ImagePlane<T> {
    let w = src.width() / 2;
    let h = src.height() / 2;
    let quarter: T = real(0.25);
    ImagePlane::from_fn(w, h, |x, y| {
        (src.get(2 * x, 2 * y)
            + src.get(2 * x + 1, 2 * y)
            + src.get(2 * x, 2 * y + 1)
            + src.get(2 * x + 1, 2 * y + 1))
            * quarter
    })
}

/// Doubles every channel of an RGB image.
pub fn upsample_double_rgb<T: Real>(img: &ImageRgb<T>) -> ImageRgb<T> {
    ImageRgb {
        r: upsample_double_lanczos(img.red()),
        g: upsample_double_lanczos(img.green()),
        b: upsample_double_lanczos(img.blue()),
    }
}

pub(crate) fn assert_finite_plane<T: Real>(p: &ImagePlane<T>) -> bool {
    p.data().iter().all(|v| to_f64(*v).is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seeded_plane(w: usize, h: usize, seed: u64) -> ImagePlane<f64> {
        // Tiny xorshift so unit tests need no RNG dependency.
        let mut s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        ImagePlane::from_fn(w, h, |_, _| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            (s >> 11) as f64 / (1u64 << 53) as f64
        })
    }

    #[test]
    fn luminance_of_white_is_one() {
        let img = ImageRgb::from_gray(&ImagePlane::filled(4, 4, 1.0f64));
        let l = to_luminance(&img);
        assert!((l.get(2, 2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn luminance_of_equal_channels_is_identity() {
        let g = seeded_plane(8, 8, 3);
        let img = ImageRgb::from_gray(&g);
        let l = to_luminance(&img);
        for (a, b) in l.data().iter().zip(g.data()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn luminance_red_weight() {
        let r = ImagePlane::filled(2, 2, 1.0f64);
        let z = ImagePlane::new(2, 2);
        let img = ImageRgb::new(r, z.clone(), z).unwrap();
        assert!((to_luminance(&img).get(0, 0) - 0.299).abs() < 1e-12);
    }

    #[test]
    fn value_channel_takes_max() {
        let r = ImagePlane::filled(2, 2, 0.2f64);
        let g = ImagePlane::filled(2, 2, 0.5f64);
        let b = ImagePlane::filled(2, 2, 0.1f64);
        let img = ImageRgb::new(r, g, b).unwrap();
        assert_eq!(to_value(&img).get(1, 1), 0.5);

        let white = ImageRgb::from_gray(&ImagePlane::filled(2, 2, 1.0f64));
        assert_eq!(to_value(&white).get(0, 0), 1.0);
        let black = ImageRgb::from_gray(&ImagePlane::new(2, 2));
        assert_eq!(to_value(&black).get(0, 0), 0.0);
    }

    #[test]
    fn gaussian_sigma_one_shape() {
        let k = gaussian_kernel::<f64>(1.0).unwrap();
        assert_eq!(k.len(), 7);
        let sum: f64 = k.taps().iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
        for j in 0..=k.radius() {
            assert_eq!(k.taps()[k.radius() + j], k.taps()[k.radius() - j]);
        }
    }

    #[test]
    fn gaussian_center_tap_is_max() {
        for sigma in [0.5, 1.0, 1.7, 4.2] {
            let k = gaussian_kernel::<f64>(sigma).unwrap();
            let center = k.taps()[k.radius()];
            assert!(k.taps().iter().all(|&t| t <= center));
        }
    }

    #[test]
    fn smaller_sigma_concentrates_mass() {
        let narrow = gaussian_kernel::<f64>(0.5).unwrap();
        let wide = gaussian_kernel::<f64>(1.0).unwrap();
        assert!(narrow.taps()[narrow.radius()] > wide.taps()[wide.radius()]);
    }

    #[test]
    fn gaussian_rejects_bad_sigma() {
        assert!(gaussian_kernel::<f64>(0.0).is_err());
        assert!(gaussian_kernel::<f64>(-1.0).is_err());
        assert!(gaussian_kernel::<f64>(f64::NAN).is_err());
    }

    #[test]
    fn identity_kernel_is_exact() {
        let img = seeded_plane(9, 7, 11);
        let id = Kernel1D::identity();
        let out = convolve_separable(&img, &id, &id).unwrap();
        assert_eq!(out.data(), img.data());
    }

    #[test]
    fn constant_image_invariant_under_gaussian() {
        let img = ImagePlane::filled(16, 16, 0.37f64);
        let out = gaussian_smooth(&img, 1.4).unwrap();
        for &v in out.data() {
            assert!((v - 0.37).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_larger_than_image_rejected() {
        let img = ImagePlane::<f64>::filled(4, 4, 0.0);
        let k = gaussian_kernel::<f64>(3.0).unwrap(); // radius 9
        assert!(matches!(
            convolve_separable(&img, &k, &k),
            Err(Error::KernelTooLarge { .. })
        ));
    }

    /// Brute-force 2-D correlation with the outer-product kernel and the same
    /// mirror border; the independent oracle for the separable path.
    fn brute_force_2d(img: &ImagePlane<f64>, kh: &Kernel1D<f64>, kv: &Kernel1D<f64>) -> ImagePlane<f64> {
        let (w, h) = (img.width(), img.height());
        let (rh, rv) = (kh.radius() as isize, kv.radius() as isize);
        ImagePlane::from_fn(w, h, |x, y| {
            let mut acc = 0.0;
            for (tv, &cv) in kv.taps().iter().enumerate() {
                for (th, &ch) in kh.taps().iter().enumerate() {
                    let sx = reflect(x as isize + th as isize - rh, w);
                    let sy = reflect(y as isize + tv as isize - rv, h);
                    acc += cv * ch * img.get(sx, sy);
                }
            }
            acc
        })
    }

    #[test]
    fn separable_matches_brute_force() {
        let img = seeded_plane(33, 21, 5);
        let kh = gaussian_kernel::<f64>(1.4).unwrap();
        let kv = gaussian_kernel::<f64>(0.8).unwrap();
        let fast = convolve_separable(&img, &kh, &kv).unwrap();
        let slow = brute_force_2d(&img, &kh, &kv);
        for (a, b) in fast.data().iter().zip(slow.data()) {
            assert!((a - b).abs() < 1e-6, "separable {a} vs 2-D {b}");
        }
    }

    #[test]
    fn gaussian_semigroup_within_discretization() {
        let img = seeded_plane(64, 64, 9);
        let once = gaussian_smooth(&gaussian_smooth(&img, 1.0).unwrap(), 1.2).unwrap();
        let combined = gaussian_smooth(&img, (1.0f64 + 1.2 * 1.2).sqrt()).unwrap();
        let rms = (once
            .data()
            .iter()
            .zip(combined.data())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            / once.data().len() as f64)
            .sqrt();
        assert!(rms < 2e-3, "semigroup RMS {rms}");
    }

    #[test]
    fn lanczos_doubles_dimensions() {
        let img = seeded_plane(4, 4, 1);
        let up = upsample_double_lanczos(&img);
        assert_eq!((up.width(), up.height()), (8, 8));
    }

    #[test]
    fn lanczos_preserves_constants() {
        let img = ImagePlane::filled(12, 10, 0.6f64);
        let up = upsample_double_lanczos(&img);
        for &v in up.data() {
            assert!((v - 0.6).abs() < 1e-6);
        }
    }

    #[test]
    fn lanczos_roundtrip_on_smooth_signal() {
        let img = ImagePlane::from_fn(32, 32, |x, y| {
            0.5 + 0.4 * (x as f64 * 0.18).sin() * (y as f64 * 0.15).cos()
        });
        let down = downsample_half_box(&upsample_double_lanczos(&img));
        assert_eq!((down.width(), down.height()), (32, 32));
        let rms = (img
            .data()
            .iter()
            .zip(down.data())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            / img.data().len() as f64)
            .sqrt();
        assert!(rms < 0.02, "roundtrip RMS {rms}");
    }

    #[test]
    fn plane_mean_std() {
        let p = ImagePlane::from_vec(2, 2, vec![0.0f64, 2.0, 0.0, 2.0]).unwrap();
        let (m, s) = p.mean_std();
        assert!((m - 1.0).abs() < 1e-12);
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn from_vec_checks_length() {
        assert!(ImagePlane::from_vec(3, 3, vec![0.0f64; 8]).is_err());
    }

    #[test]
    fn rgb_requires_matching_channels() {
        let a = ImagePlane::<f64>::new(3, 3);
        let b = ImagePlane::<f64>::new(3, 4);
        assert!(ImageRgb::new(a.clone(), a, b).is_err());
    }
}
