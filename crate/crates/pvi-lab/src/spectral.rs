//! Tangential Fourier machinery on the periodic x' = (x₂, x₃) torus [0, 2π)².
//!
//! The tangential plane is modelled as a torus so that band-limited fronts,
//! data and derivatives are exact; x₁ stays a finite-difference direction.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Integer wavenumber for FFT bin `idx` of an `n`-point transform.
pub fn wavenumber(n: usize, idx: usize) -> i32 {
    let n = n as i32;
    let m = idx as i32;
    if m <= n / 2 {
        m
    } else {
        m - n
    }
}

/// 2-D FFT helper for real fields sampled on an n₂ × n₃ grid (row-major,
/// index = i₂·n₃ + i₃, x₂ = 2π i₂ / n₂).
pub struct Torus2 {
    pub n2: usize,
    pub n3: usize,
    fwd2: Arc<dyn Fft<f64>>,
    inv2: Arc<dyn Fft<f64>>,
    fwd3: Arc<dyn Fft<f64>>,
    inv3: Arc<dyn Fft<f64>>,
}

impl Torus2 {
    pub fn new(n2: usize, n3: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            n2,
            n3,
            fwd2: planner.plan_fft_forward(n2),
            inv2: planner.plan_fft_inverse(n2),
            fwd3: planner.plan_fft_forward(n3),
            inv3: planner.plan_fft_inverse(n3),
        }
    }

    /// Coefficients c_k = (1/(n₂n₃)) Σ f(x) e^{-i k·x}, so that
    /// f(x) = Σ_k c_k e^{+i k·x} on the sample grid.
    pub fn forward(&self, real: &[f64]) -> Vec<Complex64> {
        assert_eq!(real.len(), self.n2 * self.n3);
        let mut buf: Vec<Complex64> =
            real.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.transform2d(&mut buf, true);
        let scale = 1.0 / (self.n2 * self.n3) as f64;
        for v in &mut buf {
            *v *= scale;
        }
        buf
    }

    pub fn inverse(&self, coeffs: &[Complex64]) -> Vec<f64> {
        assert_eq!(coeffs.len(), self.n2 * self.n3);
        let mut buf = coeffs.to_vec();
        self.transform2d(&mut buf, false);
        buf.iter().map(|v| v.re).collect()
    }

    fn transform2d(&self, buf: &mut [Complex64], forward: bool) {
        // rows (x₃ direction)
        let f3 = if forward { &self.fwd3 } else { &self.inv3 };
        for row in buf.chunks_mut(self.n3) {
            f3.process(row);
        }
        // columns (x₂ direction)
        let f2 = if forward { &self.fwd2 } else { &self.inv2 };
        let mut col = vec![Complex64::new(0.0, 0.0); self.n2];
        for i3 in 0..self.n3 {
            for i2 in 0..self.n2 {
                col[i2] = buf[i2 * self.n3 + i3];
            }
            f2.process(&mut col);
            for i2 in 0..self.n2 {
                buf[i2 * self.n3 + i3] = col[i2];
            }
        }
    }

    /// Spectral ∂₂ or ∂₃ of a real field; the Nyquist bin is zeroed so the
    /// derivative of a real field stays real.
    pub fn derivative(&self, real: &[f64], axis: usize) -> Vec<f64> {
        let mut coeffs = self.forward(real);
        for i2 in 0..self.n2 {
            let k2 = wavenumber(self.n2, i2);
            for i3 in 0..self.n3 {
                let k3 = wavenumber(self.n3, i3);
                let k = if axis == 2 { k2 } else { k3 };
                let nyq2 = self.n2 % 2 == 0 && i2 == self.n2 / 2;
                let nyq3 = self.n3 % 2 == 0 && i3 == self.n3 / 2;
                let c = &mut coeffs[i2 * self.n3 + i3];
                if (axis == 2 && nyq2) || (axis == 3 && nyq3) {
                    *c = Complex64::new(0.0, 0.0);
                } else {
                    *c *= Complex64::new(0.0, k as f64);
                }
            }
        }
        self.inverse(&coeffs)
    }
}

/// A tangential Fourier mode index with its reality-pairing weight.
///
/// Real fields are assembled from representative modes k with k₂ > 0, or
/// k₂ = 0 and k₃ ≥ 0; the conjugate mode -k is implied, so every k except
/// (0,0) counts twice in quadratic functionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub k2: i32,
    pub k3: i32,
}

impl Mode {
    pub fn new(k2: i32, k3: i32) -> Self {
        Self { k2, k3 }
    }

    pub fn is_zero(&self) -> bool {
        self.k2 == 0 && self.k3 == 0
    }

    pub fn norm(&self) -> f64 {
        ((self.k2 * self.k2 + self.k3 * self.k3) as f64).sqrt()
    }

    /// Weight of the mode in quadratic functionals of the real field.
    pub fn weight(&self) -> f64 {
        if self.is_zero() {
            1.0
        } else {
            2.0
        }
    }

    /// k·a for a tangential 2-vector a = (a₂, a₃).
    pub fn dot(&self, a: [f64; 2]) -> f64 {
        self.k2 as f64 * a[0] + self.k3 as f64 * a[1]
    }
}

/// Representative modes (reality pairing) with |k₂| ≤ band.0, |k₃| ≤ band.1.
pub fn representative_modes(band: (i32, i32)) -> Vec<Mode> {
    let mut out = Vec::new();
    for k2 in 0..=band.0 {
        let k3_lo = if k2 == 0 { 0 } else { -band.1 };
        for k3 in k3_lo..=band.1 {
            out.push(Mode::new(k2, k3));
        }
    }
    out
}
