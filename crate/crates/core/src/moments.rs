//! Weighted moments over xi in [0, 1/4]:
//!
//!   M(n, w, nu) = int_0^{1/4} xi^n e^{-2 nu xi} (1 - 4 xi)^{w/2} dxi,
//!   w = -1 ("inv_sqrt") or w = +1 ("sqrt").
//!
//! Every normalization and energy integral of the trial wavefunctions
//! reduces to this family. The substitution u = sqrt(1 - 4 xi) removes
//! the endpoint singularity exactly and maps the family onto
//!
//!   I_k(b) = int_0^1 (1 - u^2)^k e^{b u^2} du,   b = nu/2,
//!
//! with I_0(b) = e^b F(sqrt(b))/sqrt(b) through the Dawson integral F.
//!
//! Two independent routes are provided: `moment_closed` (Dawson-anchored
//! recurrence, or an all-positive Taylor sum at small nu where the
//! closed forms cancel catastrophically) and `moment_quad` (adaptive
//! quadrature in u), which serve as cross-checks for each other.

use crate::quadrature::adaptive_gauss_legendre;
use crate::special::dawson;
use thiserror::Error;

/// nu below this uses the Taylor route in `moment_closed`; above it the
/// Dawson-anchored route. Continuity across the switch is tested.
pub const NU_SWITCH: f64 = 0.5;

#[derive(Debug, Error, PartialEq)]
pub enum MomentError {
    #[error("moment with n = {0} diverges at xi = 0; callers must fold in the xi^2 of psi^2")]
    Divergent(i32),
    #[error("nu = {0} must be nonnegative and finite")]
    BadNu(f64),
}

/// Sign of the (1 - 4 xi)^(1/2) factor's exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// (1 - 4 xi)^(-1/2)
    InvSqrt,
    /// (1 - 4 xi)^(+1/2)
    Sqrt,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentRequest {
    /// Power of xi; n = -1 is representable (it arises from the -2/(nu xi)
    /// attraction term) but raw moments reject it as divergent.
    pub n: i32,
    pub weight: Weight,
    /// Exponential rate: the integrand carries e^{-2 nu xi}.
    pub nu: f64,
}

impl MomentRequest {
    pub fn new(n: i32, weight: Weight, nu: f64) -> Result<Self, MomentError> {
        if nu < 0.0 || !nu.is_finite() {
            return Err(MomentError::BadNu(nu));
        }
        if n < -1 {
            return Err(MomentError::Divergent(n));
        }
        Ok(Self { n, weight, nu })
    }
}

/// Closed-form evaluation; agrees with `moment_quad` to ~1e-12 relative.
pub fn moment_closed(r: MomentRequest) -> Result<f64, MomentError> {
    if r.n < 0 {
        return Err(MomentError::Divergent(r.n));
    }
    let n = r.n as usize;
    let table = MomentTable::build(r.nu, n)?;
    Ok(table.get(n, r.weight))
}

/// Independent oracle: adaptive Gauss-Legendre after the u-substitution.
pub fn moment_quad(r: MomentRequest) -> Result<f64, MomentError> {
    if r.n < 0 {
        return Err(MomentError::Divergent(r.n));
    }
    if r.nu < 0.0 || !r.nu.is_finite() {
        return Err(MomentError::BadNu(r.nu));
    }
    let n = r.n;
    let s = match r.weight {
        Weight::InvSqrt => 0,
        Weight::Sqrt => 1,
    };
    let b = 0.5 * r.nu;
    let scale = 0.5 * 0.25f64.powi(n);
    if b <= 300.0 {
        // Pull e^{-b} out so the quadrature works on a large, smooth
        // integrand and its tolerance acts relatively.
        let f = |u: f64| (1.0 - u * u).powi(n) * u.powi(2 * s) * (b * u * u).exp();
        Ok(scale * (-b).exp() * adaptive_gauss_legendre(&f, 0.0, 1.0, 1e-13))
    } else {
        let f = |u: f64| (1.0 - u * u).powi(n) * u.powi(2 * s) * (b * (u * u - 1.0)).exp();
        Ok(scale * adaptive_gauss_legendre(&f, 0.0, 1.0, 1e-13))
    }
}

/// All moments with powers 0..=n_max for one nu, both weights, computed
/// in one pass. The variational forms consume these in batches.
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub nu: f64,
    inv: Vec<f64>,
    sqrt: Vec<f64>,
}

impl MomentTable {
    pub fn build(nu: f64, n_max: usize) -> Result<Self, MomentError> {
        if nu < 0.0 || !nu.is_finite() {
            return Err(MomentError::BadNu(nu));
        }
        let b = 0.5 * nu;
        // Scaled integrals ihat_k = e^{-b} I_k(b), k = 0..=n_max+1.
        let ihat = if nu < NU_SWITCH {
            taylor_scaled(b, n_max + 1)
        } else {
            miller_scaled(b, n_max + 1)
        };
        let mut inv = Vec::with_capacity(n_max + 1);
        let mut sqrt = Vec::with_capacity(n_max + 1);
        let mut scale = 0.5;
        for k in 0..=n_max {
            inv.push(scale * ihat[k]);
            sqrt.push(scale * (ihat[k] - ihat[k + 1]));
            scale *= 0.25;
        }
        Ok(Self { nu, inv, sqrt })
    }

    pub fn max_power(&self) -> usize {
        self.inv.len() - 1
    }

    pub fn get(&self, n: usize, weight: Weight) -> f64 {
        match weight {
            Weight::InvSqrt => self.inv[n],
            Weight::Sqrt => self.sqrt[n],
        }
    }
}

/// ihat_k = e^{-b} sum_m b^m/m! * T(m, k) with
/// T(m, k) = int_0^1 u^{2m} (1-u^2)^k du. Every term is positive, so
/// there is no cancellation at any b; used below the nu switch.
fn taylor_scaled(b: f64, k_max: usize) -> Vec<f64> {
    let mut out = vec![0.0; k_max + 1];
    let mut term = (-b).exp(); // e^{-b} b^m / m!
    let mut m = 0usize;
    loop {
        // T(m, k) built by the ratio T(m,k)/T(m,k-1) = 2k/(2m+2k+1).
        let mut t = 1.0 / (2 * m + 1) as f64;
        out[0] += term * t;
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            t *= (2 * k) as f64 / (2 * m + 2 * k + 1) as f64;
            *slot += term * t;
        }
        if m as f64 > b && term < 1e-17 * out[0] {
            break;
        }
        m += 1;
        term *= b / m as f64;
        if m > 2000 {
            break;
        }
    }
    out
}

/// Miller's algorithm on the three-term recurrence
/// 2b I_{k+1} = (1 + 2k + 2b) I_k - 2k I_{k-1},
/// run downward from a trial seed and normalized so that
/// ihat_0 = F(sqrt(b))/sqrt(b). Stable in both b regimes.
fn miller_scaled(b: f64, k_max: usize) -> Vec<f64> {
    let i0 = dawson(b.sqrt()) / b.sqrt();
    let start = k_max + 40 + b.ceil() as usize;
    let mut above = 0.0f64; // trial I_{k+1}
    let mut here = 1.0f64; // trial I_k
    let mut tail: Vec<f64> = vec![0.0; k_max + 2];
    for k in (1..=start).rev() {
        let below = ((1.0 + 2.0 * k as f64 + 2.0 * b) * here - 2.0 * b * above) / (2.0 * k as f64);
        if k <= k_max + 1 {
            tail[k] = here;
        }
        above = here;
        here = below;
        // Rescale if the trial solution grows too large.
        if here > 1e250 {
            here *= 1e-250;
            above *= 1e-250;
            for v in tail.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let norm = i0 / here; // here = trial I_0
    let mut out = vec![0.0; k_max + 2];
    out[0] = i0;
    for k in 1..=k_max + 1 {
        out[k] = tail[k] * norm;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::dawson;

    #[test]
    fn zero_nu_limits() {
        // int_0^{1/4} (1-4xi)^{-1/2} dxi = 1/2
        let m = moment_closed(MomentRequest::new(0, Weight::InvSqrt, 0.0).unwrap()).unwrap();
        assert!((m - 0.5).abs() < 1e-15);
        // int_0^{1/4} (1-4xi)^{1/2} dxi = 1/6
        let m = moment_closed(MomentRequest::new(0, Weight::Sqrt, 0.0).unwrap()).unwrap();
        assert!((m - 1.0 / 6.0).abs() < 1e-15);
        // int_0^{1/4} xi sqrt(1-4xi) dxi = 1/60
        let m = moment_quad(MomentRequest::new(1, Weight::Sqrt, 0.0).unwrap()).unwrap();
        assert!((m - 1.0 / 60.0).abs() < 1e-15);
    }

    #[test]
    fn dawson_anchor_at_nu_2() {
        // M(0, inv_sqrt, nu) = F(sqrt(nu/2))/sqrt(2 nu); at nu = 2 this is F(1)/2.
        let m = moment_closed(MomentRequest::new(0, Weight::InvSqrt, 2.0).unwrap()).unwrap();
        assert!((m - dawson(1.0) / 2.0).abs() < 1e-15);
        assert!((m - 0.2690398).abs() < 1e-7);
        let q = moment_quad(MomentRequest::new(0, Weight::InvSqrt, 2.0).unwrap()).unwrap();
        assert!((m - q).abs() / m < 1e-12);
    }

    #[test]
    fn n_minus_one_rejected() {
        let r = MomentRequest::new(-1, Weight::InvSqrt, 1.0).unwrap();
        assert_eq!(moment_closed(r), Err(MomentError::Divergent(-1)));
        assert!(MomentRequest::new(-2, Weight::Sqrt, 1.0).is_err());
        assert!(MomentRequest::new(0, Weight::Sqrt, -1.0).is_err());
    }

    #[test]
    fn closed_vs_quadrature_grid() {
        for &nu in &[0.05, 0.1, 0.4999, 0.5001, 1.0, 2.6, 10.0, 50.0, 100.0] {
            for n in 0..=10 {
                for &w in &[Weight::InvSqrt, Weight::Sqrt] {
                    let r = MomentRequest::new(n, w, nu).unwrap();
                    let c = moment_closed(r).unwrap();
                    let q = moment_quad(r).unwrap();
                    let rel = (c - q).abs() / q.abs();
                    assert!(rel < 1e-10, "nu={nu} n={n} w={w:?}: {c} vs {q} rel={rel}");
                }
            }
        }
    }

    #[test]
    fn continuity_across_nu_switch() {
        for n in 0..=8 {
            for &w in &[Weight::InvSqrt, Weight::Sqrt] {
                let lo = moment_closed(MomentRequest::new(n, w, NU_SWITCH - 1e-9).unwrap()).unwrap();
                let hi = moment_closed(MomentRequest::new(n, w, NU_SWITCH + 1e-9).unwrap()).unwrap();
                assert!((lo - hi).abs() / lo.abs() < 1e-8, "n={n} {w:?}: {lo} vs {hi}");
            }
        }
    }

    #[test]
    fn positivity_and_monotone_in_nu() {
        for n in 0..=6 {
            for &w in &[Weight::InvSqrt, Weight::Sqrt] {
                let mut prev = f64::INFINITY;
                for &nu in &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0] {
                    let m = moment_closed(MomentRequest::new(n, w, nu).unwrap()).unwrap();
                    assert!(m > 0.0);
                    assert!(m < prev, "n={n} {w:?} nu={nu}");
                    prev = m;
                }
            }
        }
    }

    // Integration by parts of d/dxi [ xi^n e^{-2 nu xi} (1-4xi)^{3/2} ]
    // over [0, 1/4] relates neighbouring moments:
    //   n M(n-1,sqrt) - 2nu M(n,sqrt) - 6 M(n,inv) + 24 M(n+1,inv) = 0
    // using (1-4xi)^{3/2} = (1 - 4xi) sqrt(1-4xi).
    #[test]
    fn integration_by_parts_recurrence() {
        for &(n, nu) in &[
            (1, 0.3),
            (2, 0.7),
            (3, 1.0),
            (1, 2.6),
            (4, 2.6),
            (5, 5.0),
            (2, 10.0),
            (6, 10.0),
            (3, 25.0),
            (7, 60.0),
        ] {
            let m = |k: i32, w: Weight| {
                moment_closed(MomentRequest::new(k, w, nu).unwrap()).unwrap()
            };
            let lhs = n as f64 * (m(n - 1, Weight::Sqrt) - 4.0 * m(n, Weight::Sqrt))
                - 2.0 * nu * (m(n, Weight::Sqrt) - 4.0 * m(n + 1, Weight::Sqrt))
                - 6.0 * m(n, Weight::InvSqrt)
                + 24.0 * m(n + 1, Weight::InvSqrt);
            let scale = m(n, Weight::InvSqrt);
            assert!(lhs.abs() / scale < 1e-10, "n={n} nu={nu}: {lhs}");
        }
    }
}
