//! x-space evaluation of trial and oracle wavefunctions and comparison
//! metrics for the overlay figures.
//!
//! The physical wavefunction is Psi = psi(xi)/sqrt(L) on scaled
//! coordinates x/L in [0, 1]; with the normalization condition on psi
//! (xi-integral = 1/2) this gives int Psi^2 d(x/L) = 1. Odd states use
//! the signed factor (1 - 2x/L) in place of sqrt(1-4xi), making Psi
//! antisymmetric without a branch at the midpoint.

use crate::coords::xi_of_x;
use crate::oracle::OracleSpectrum;
use crate::series::eval_truncated_f;
use crate::variational::TrialWavefunction;
use crate::Parity;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WavefunctionError {
    #[error("sample grids differ ({0} vs {1} points); resample first")]
    GridMismatch(usize, usize),
    #[error("need at least 3 samples, got {0}")]
    TooFewSamples(usize),
    #[error("oracle spectrum has no level {0}")]
    MissingLevel(usize),
}

/// A wavefunction sampled on a uniform x/L grid, normalized so that
/// int Psi^2 d(x/L) = 1.
#[derive(Debug, Clone)]
pub struct SampledWavefunction {
    pub nu: f64,
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
}

/// Comparison metrics between two normalized samples on a common grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareReport {
    pub l2_diff: f64,
    pub max_diff: f64,
    pub overlap: f64,
}

/// Evaluate a trial state on `n_samples` uniform points of [0, 1].
pub fn sample_trial(
    t: &TrialWavefunction,
    n_samples: usize,
) -> Result<SampledWavefunction, WavefunctionError> {
    if n_samples < 3 {
        return Err(WavefunctionError::TooFewSamples(n_samples));
    }
    let xs: Vec<f64> = (0..n_samples)
        .map(|i| i as f64 / (n_samples - 1) as f64)
        .collect();
    let values = xs.iter().map(|&x| eval_trial_at(t, x)).collect();
    Ok(SampledWavefunction {
        nu: t.nu,
        xs,
        values,
    })
}

/// Psi(x/L): even N xi e^{-nu xi} f; odd carries the signed (1 - 2x/L).
pub fn eval_trial_at(t: &TrialWavefunction, x_over_l: f64) -> f64 {
    let p = xi_of_x(x_over_l).expect("x/L in [0,1]");
    let xi = p.value();
    let (f, _, _) = eval_truncated_f(&t.series, t.eps_star, p);
    let base = t.norm_const * xi * (-t.nu * xi).exp() * f;
    match t.parity {
        Parity::Even => base,
        Parity::Odd => base * (1.0 - 2.0 * x_over_l),
    }
}

/// Resample an oracle eigenvector onto `n_samples` uniform points of
/// [0, 1] by cubic (4-point Lagrange) interpolation, rescaled so that
/// int Psi^2 d(x/L) = 1.
pub fn sample_oracle(
    spectrum: &OracleSpectrum,
    level: usize,
    n_samples: usize,
) -> Result<SampledWavefunction, WavefunctionError> {
    if n_samples < 3 {
        return Err(WavefunctionError::TooFewSamples(n_samples));
    }
    let lv = spectrum
        .levels
        .get(level)
        .ok_or(WavefunctionError::MissingLevel(level))?;
    let nu = spectrum.nu;
    let n_grid = lv.eigenvector.len();
    // eigenvector lives on x_i = i h, i = 1..=n_grid; pad the Dirichlet zeros
    let mut padded = Vec::with_capacity(n_grid + 2);
    padded.push(0.0);
    padded.extend_from_slice(&lv.eigenvector);
    padded.push(0.0);
    let h = spectrum.fine_step();
    let sqrt_nu = nu.sqrt(); // phi(x) normalized in x; Psi(t) = sqrt(nu) phi(nu t)
    let xs: Vec<f64> = (0..n_samples)
        .map(|i| i as f64 / (n_samples - 1) as f64)
        .collect();
    let values: Vec<f64> = xs
        .iter()
        .map(|&t| {
            if t <= 0.0 || t >= 1.0 {
                return 0.0;
            }
            sqrt_nu * cubic_interp(&padded, h, t * nu)
        })
        .collect();
    Ok(SampledWavefunction { nu, xs, values })
}

/// 4-point Lagrange interpolation on a uniform grid x_j = j h,
/// j = 0..len-1.
fn cubic_interp(values: &[f64], h: f64, x: f64) -> f64 {
    let n = values.len();
    let j = ((x / h).floor() as usize).clamp(1, n - 3);
    let j0 = j - 1;
    let t = x / h - j0 as f64; // in units of h from node j0
    let mut out = 0.0;
    for (k, &v) in values[j0..j0 + 4].iter().enumerate() {
        let mut w = 1.0;
        for m in 0..4 {
            if m != k {
                w *= (t - m as f64) / (k as f64 - m as f64);
            }
        }
        out += w * v;
    }
    out
}

/// Sign-align b to a, then report L2/max differences and the overlap
/// |int a b d(x/L)| (trapezoid rule).
pub fn compare(
    a: &SampledWavefunction,
    b: &SampledWavefunction,
) -> Result<CompareReport, WavefunctionError> {
    if a.xs.len() != b.xs.len() {
        return Err(WavefunctionError::GridMismatch(a.xs.len(), b.xs.len()));
    }
    let n = a.xs.len();
    let dx = 1.0 / (n - 1) as f64;
    let trapz = |f: &dyn Fn(usize) -> f64| {
        let mut s = 0.5 * (f(0) + f(n - 1));
        for i in 1..n - 1 {
            s += f(i);
        }
        s * dx
    };
    let raw_overlap = trapz(&|i| a.values[i] * b.values[i]);
    let sign = if raw_overlap < 0.0 { -1.0 } else { 1.0 };
    let l2 = trapz(&|i| {
        let d = a.values[i] - sign * b.values[i];
        d * d
    })
    .sqrt();
    let max = (0..n)
        .map(|i| (a.values[i] - sign * b.values[i]).abs())
        .fold(0.0f64, f64::max);
    Ok(CompareReport {
        l2_diff: l2,
        max_diff: max,
        overlap: raw_overlap.abs(),
    })
}
