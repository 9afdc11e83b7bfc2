//! Small 2-D FFT wrapper over `rustfft` used by the periodic convolution
//! operators and the gradient-diagonal linear solves.

use ndarray::Array2;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Forward/inverse 2-D FFT plans for one grid size.
///
/// Plans are immutable after construction and applications allocate their
/// own buffers, so a plan can be shared across threads.
pub struct Fft2 {
    height: usize,
    width: usize,
    row_fwd: Arc<dyn Fft<f64>>,
    row_inv: Arc<dyn Fft<f64>>,
    col_fwd: Arc<dyn Fft<f64>>,
    col_inv: Arc<dyn Fft<f64>>,
}

impl Fft2 {
    pub fn new(height: usize, width: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            height,
            width,
            row_fwd: planner.plan_fft_forward(width),
            row_inv: planner.plan_fft_inverse(width),
            col_fwd: planner.plan_fft_forward(height),
            col_inv: planner.plan_fft_inverse(height),
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn transform(&self, data: &mut Array2<Complex64>, forward: bool) {
        let (h, w) = (self.height, self.width);
        assert_eq!(data.dim(), (h, w));
        let row_plan = if forward { &self.row_fwd } else { &self.row_inv };
        let col_plan = if forward { &self.col_fwd } else { &self.col_inv };
        let mut scratch =
            vec![Complex64::default(); row_plan.get_inplace_scratch_len().max(col_plan.get_inplace_scratch_len())];
        for mut row in data.rows_mut() {
            let slice = row.as_slice_mut().expect("contiguous row");
            row_plan.process_with_scratch(slice, &mut scratch);
        }
        let mut col = vec![Complex64::default(); h];
        for j in 0..w {
            for i in 0..h {
                col[i] = data[[i, j]];
            }
            col_plan.process_with_scratch(&mut col, &mut scratch);
            for i in 0..h {
                data[[i, j]] = col[i];
            }
        }
    }

    pub fn forward(&self, real: &Array2<f64>) -> Array2<Complex64> {
        let mut buf = real.mapv(|v| Complex64::new(v, 0.0));
        self.transform(&mut buf, true);
        buf
    }

    /// Inverse transform of a spectrum known to come from real data;
    /// normalizes by the sample count and keeps the real part.
    pub fn inverse_real(&self, spectrum: &Array2<Complex64>) -> Array2<f64> {
        let mut buf = spectrum.clone();
        self.transform(&mut buf, false);
        let scale = 1.0 / (self.height * self.width) as f64;
        buf.mapv(|v| v.re * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let fft = Fft2::new(8, 6);
        let data = Array2::from_shape_fn((8, 6), |(i, j)| (i as f64 * 1.3 - j as f64 * 0.7).sin());
        let spec = fft.forward(&data);
        let back = fft.inverse_real(&spec);
        let dev = data
            .iter()
            .zip(back.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(dev < 1e-12, "roundtrip deviation {dev}");
    }

    #[test]
    fn dc_component_is_sum() {
        let fft = Fft2::new(4, 4);
        let data = Array2::from_elem((4, 4), 0.25);
        let spec = fft.forward(&data);
        assert!((spec[[0, 0]].re - 4.0).abs() < 1e-12);
        assert!(spec[[0, 0]].im.abs() < 1e-12);
    }
}
