//! Power-series coefficients of the factor f(xi) for both parities.
//!
//! Matching powers of xi in the transformed equations gives a four-term
//! recurrence whose coefficients are polynomials in the variational
//! parameter epsilon (nu is folded in numerically). The paper's listed
//! low-order coefficients serve as test vectors only; the recurrence is
//! the implementation.

use crate::coords::XiPoint;
use crate::Parity;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series order must be >= 1, got {0}")]
    BadOrder(usize),
    #[error("nu = {0} must be positive")]
    BadNu(f64),
}

/// Polynomial in epsilon with real coefficients, index = power.
/// Canonical form: trailing coefficient nonzero, or empty (the zero
/// polynomial).
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonPoly {
    coeffs: Vec<f64>,
}

impl EpsilonPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, eps: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * eps + c)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

/// Truncated series f(xi) = sum_i terms[i] xi^i for one parity and nu,
/// with each coefficient a polynomial in epsilon. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    parity: Parity,
    nu: f64,
    terms: Vec<EpsilonPoly>,
}

impl SeriesCoefficients {
    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Highest power of xi retained.
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[EpsilonPoly] {
        &self.terms
    }

    /// The f == 1 truncation (the hydrogen-limit trial factor).
    pub fn unit(parity: Parity, nu: f64) -> Self {
        Self {
            parity,
            nu,
            terms: vec![EpsilonPoly::constant(1.0)],
        }
    }

    /// Numeric coefficients at a fixed epsilon.
    pub fn coefficients_at(&self, eps: f64) -> Vec<f64> {
        self.terms.iter().map(|p| p.eval(eps)).collect()
    }
}

/// Generate the coefficients up to xi^order by the recurrence obtained
/// from matching powers of xi:
///
///   (m+1)(m/2+1) c_{m+1} = [2m(m-1) + (q + nu) m + c] c_m
///       + [-4 nu (m-1) - d nu - nu^2 (1 + 2 eps)/2] c_{m-1}
///       + 2 nu^2 c_{m-2}
///
/// with (q, c, d) = (5, 1, 4) for even and (7, 3, 6) for odd.
pub fn series_coefficients(
    parity: Parity,
    nu: f64,
    order: usize,
) -> Result<SeriesCoefficients, SeriesError> {
    if order < 1 {
        return Err(SeriesError::BadOrder(order));
    }
    if nu <= 0.0 || !nu.is_finite() {
        return Err(SeriesError::BadNu(nu));
    }
    let (q, c0, d) = match parity {
        Parity::Even => (5.0, 1.0, 4.0),
        Parity::Odd => (7.0, 3.0, 6.0),
    };
    let mut terms: Vec<EpsilonPoly> = Vec::with_capacity(order + 1);
    terms.push(EpsilonPoly::constant(1.0));
    for m in 0..order {
        let mf = m as f64;
        // coefficient multiplying c_m
        let a = EpsilonPoly::constant(2.0 * mf * (mf - 1.0) + (q + nu) * mf + c0);
        // coefficient multiplying c_{m-1}: linear in eps
        let b = EpsilonPoly::new(vec![
            -4.0 * nu * (mf - 1.0) - d * nu - 0.5 * nu * nu,
            -nu * nu,
        ]);
        let mut next = a.mul(&terms[m]);
        if m >= 1 {
            next = next.add(&b.mul(&terms[m - 1]));
        }
        if m >= 2 {
            next = next.add(&terms[m - 2].scale(2.0 * nu * nu));
        }
        let denom = (mf + 1.0) * (0.5 * mf + 1.0);
        terms.push(next.scale(1.0 / denom));
    }
    Ok(SeriesCoefficients { parity, nu, terms })
}

/// Evaluate the truncated f and its first two xi-derivatives by Horner's
/// scheme at a fixed epsilon.
pub fn eval_truncated_f(s: &SeriesCoefficients, eps: f64, p: XiPoint) -> (f64, f64, f64) {
    let xi = p.value();
    let c = s.coefficients_at(eps);
    let mut f = 0.0;
    let mut f1 = 0.0;
    let mut f2 = 0.0;
    for (i, ci) in c.iter().enumerate().rev() {
        f = f * xi + ci;
        if i >= 1 {
            f1 = f1 * xi + i as f64 * ci;
        }
        if i >= 2 {
            f2 = f2 * xi + (i * (i - 1)) as f64 * ci;
        }
    }
    (f, f1, f2)
}
