//! Independent numerical eigensolver for the dimensionless two-center
//! problem on [0, nu]:
//!
//!   -(1/2) psi'' + (-1/x - 1/(nu - x) + 1/nu) psi = eps psi,
//!   psi(0) = psi(nu) = 0,
//!
//! with x in units of a and energies in units of m e^4 / hbar^2. The
//! proton repulsion constant +1/nu is included so that eps matches the
//! variational curves directly.
//!
//! Discretization: second-order central differences on a uniform interior
//! grid (the endpoints are never sampled, which tames the Coulomb walls
//! because the eigenfunctions vanish linearly there). The lowest levels
//! come from Sturm-sequence bisection on the symmetric tridiagonal
//! matrix, eigenvectors from inverse iteration, and energies from
//! Richardson extrapolation over grids N and 2N. A fixed-step RK4
//! shooting integrator is provided as a second, methodologically
//! independent oracle.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("nu = {0} must be positive")]
    BadNu(f64),
    #[error("grid_points = {0} too small; need >= 200")]
    GridTooSmall(usize),
    #[error("num_levels = {0}; need >= 1 (at most 2 supported)")]
    BadLevels(usize),
    #[error("shooting failed to bracket level {level} for nu = {nu}")]
    ShootingBracket { nu: f64, level: usize },
}

/// One converged level: energy on the fine grid plus the extrapolated
/// estimate and its error.
#[derive(Debug, Clone)]
pub struct Level {
    pub index: usize,
    /// Eigenvalue on the fine (2N) grid.
    pub epsilon: f64,
    /// Richardson-extrapolated eigenvalue, error ~ |e_2N - e_N| / 3.
    pub richardson: f64,
    pub richardson_error: f64,
    /// Eigenvector on the fine interior grid, normalized so that
    /// sum psi_i^2 dx = 1.
    pub eigenvector: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct OracleSpectrum {
    pub nu: f64,
    /// Interior points of the coarse grid; the fine grid has twice as many.
    pub grid_points: usize,
    pub levels: Vec<Level>,
}

impl OracleSpectrum {
    /// Interior x-coordinates matching the stored eigenvectors.
    pub fn fine_grid(&self) -> Vec<f64> {
        let n = 2 * self.grid_points;
        let h = self.nu / n as f64;
        (1..n).map(|i| i as f64 * h).collect()
    }

    pub fn fine_step(&self) -> f64 {
        self.nu / (2 * self.grid_points) as f64
    }
}

fn potential(x: f64, nu: f64) -> f64 {
    -1.0 / x - 1.0 / (nu - x) + 1.0 / nu
}

/// Number of eigenvalues of the tridiagonal matrix strictly below lambda
/// (Sturm sequence via LDLT pivot signs).
fn sturm_count(diag: &[f64], off: f64, lambda: f64) -> usize {
    let guard = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for d in &diag[1..] {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (d - lambda) - off * off / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
fn bisect_eigenvalue(diag: &[f64], off: f64, k: usize) -> f64 {
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for d in diag {
        lo = lo.min(d - 2.0 * off.abs());
        hi = hi.max(d + 2.0 * off.abs());
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-14 * (1.0 + mid.abs()) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Inverse iteration for the eigenvector of a symmetric tridiagonal
/// matrix with constant off-diagonal, using an LU solve with partial
/// pivoting (the shifted matrix is nearly singular by construction).
fn inverse_iteration(diag: &[f64], off: f64, lambda: f64) -> Vec<f64> {
    let n = diag.len();
    let shift = lambda + 1e-12 * (1.0 + lambda.abs());
    // deterministic start vector with no accidental symmetry
    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.37 * ((i * 2654435761) % 1000) as f64 / 1000.0)
        .collect();
    for _ in 0..3 {
        v = solve_shifted_banded(diag, off, shift, &v);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
    v
}

/// Solve (T - shift I) x = b: Gaussian elimination with partial pivoting
/// on the three bands (a second superdiagonal fills in).
fn solve_shifted_banded(diag: &[f64], off: f64, shift: f64, b: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|x| x - shift).collect(); // main
    let mut e = vec![off; n]; // superdiagonal, e[i] couples i and i+1
    let mut f = vec![0.0; n]; // second superdiagonal
    let mut l = vec![off; n]; // subdiagonal entering row i+1
    let mut x = b.to_vec();
    for i in 0..n - 1 {
        if l[i].abs() > d[i].abs() {
            // swap rows i, i+1
            let (di, ei, fi) = (d[i], e[i], f[i]);
            d[i] = l[i];
            e[i] = d[i + 1];
            f[i] = e[i + 1];
            d[i + 1] = ei;
            e[i + 1] = fi;
            l[i] = di;
            x.swap(i, i + 1);
            // after swap, the value stored in l[i] is the entry to eliminate
            let m = l[i] / d[i];
            d[i + 1] -= m * e[i];
            e[i + 1] -= m * f[i];
            x[i + 1] -= m * x[i];
        } else {
            let m = l[i] / d[i];
            d[i + 1] -= m * e[i];
            e[i + 1] -= m * f[i];
            x[i + 1] -= m * x[i];
        }
    }
    // back substitution
    let tiny = 1e-300;
    for i in (0..n).rev() {
        let mut s = x[i];
        if i + 1 < n {
            s -= e[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= f[i] * x[i + 2];
        }
        let dd = if d[i].abs() < tiny {
            tiny.copysign(d[i])
        } else {
            d[i]
        };
        x[i] = s / dd;
    }
    x
}

fn eigen_on_grid(nu: f64, n: usize, num_levels: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
    let h = nu / n as f64;
    let diag: Vec<f64> = (1..n)
        .map(|i| 1.0 / (h * h) + potential(i as f64 * h, nu))
        .collect();
    let off = -0.5 / (h * h);
    let mut energies = Vec::with_capacity(num_levels);
    let mut vectors = Vec::with_capacity(num_levels);
    for k in 0..num_levels {
        let lambda = bisect_eigenvalue(&diag, off, k);
        let mut v = inverse_iteration(&diag, off, lambda);
        let norm = (v.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        // fixed sign convention: positive slope at the left wall
        if v[0] < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
        energies.push(lambda);
        vectors.push(v);
    }
    (energies, vectors)
}

/// Solve for the lowest `num_levels` levels on grids N and 2N with
/// Richardson extrapolation. `grid_points` is the coarse N.
pub fn solve_spectrum(
    nu: f64,
    grid_points: usize,
    num_levels: usize,
) -> Result<OracleSpectrum, OracleError> {
    if nu <= 0.0 || !nu.is_finite() {
        return Err(OracleError::BadNu(nu));
    }
    if grid_points < 200 {
        return Err(OracleError::GridTooSmall(grid_points));
    }
    if !(1..=2).contains(&num_levels) {
        return Err(OracleError::BadLevels(num_levels));
    }
    let (coarse, _) = eigen_on_grid(nu, grid_points, num_levels);
    let (fine, vectors) = eigen_on_grid(nu, 2 * grid_points, num_levels);
    let levels = (0..num_levels)
        .map(|k| Level {
            index: k,
            epsilon: fine[k],
            richardson: (4.0 * fine[k] - coarse[k]) / 3.0,
            richardson_error: (fine[k] - coarse[k]).abs() / 3.0,
            eigenvector: vectors[k].clone(),
        })
        .collect();
    Ok(OracleSpectrum {
        nu,
        grid_points,
        levels,
    })
}

// ---------------------------------------------------------------------
// Shooting oracle: fixed-step RK4 on the half interval with midpoint
// matching (even: psi'(nu/2) = 0, odd: psi(nu/2) = 0).

fn shoot_mismatch(nu: f64, eps: f64, steps: usize, even: bool) -> f64 {
    let h = 0.5 * nu / steps as f64;
    // start off the singular wall with the local behaviour psi ~ x - x^2
    let mut x = h;
    let mut psi = x - x * x;
    let mut dpsi = 1.0 - 2.0 * x;
    let rhs = |x: f64, psi: f64, dpsi: f64| -> (f64, f64) {
        (dpsi, 2.0 * (potential(x, nu) - eps) * psi)
    };
    for _ in 0..steps - 1 {
        let (k1p, k1d) = rhs(x, psi, dpsi);
        let (k2p, k2d) = rhs(x + 0.5 * h, psi + 0.5 * h * k1p, dpsi + 0.5 * h * k1d);
        let (k3p, k3d) = rhs(x + 0.5 * h, psi + 0.5 * h * k2p, dpsi + 0.5 * h * k2d);
        let (k4p, k4d) = rhs(x + h, psi + h * k3p, dpsi + h * k3d);
        psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        x += h;
        // positive rescaling preserves the sign of the mismatch, which is
        // all the bisection uses
        let m = psi.abs().max(dpsi.abs());
        if m > 1e100 {
            psi /= m;
            dpsi /= m;
        }
    }
    if even {
        dpsi
    } else {
        psi
    }
}

/// Shooting/RK4 eigenvalues behind the same interface; `grid_points` is
/// the number of RK4 steps on the half interval. Level 0 is even, level 1
/// odd.
pub fn solve_spectrum_shooting(
    nu: f64,
    grid_points: usize,
    num_levels: usize,
) -> Result<Vec<f64>, OracleError> {
    if nu <= 0.0 || !nu.is_finite() {
        return Err(OracleError::BadNu(nu));
    }
    if grid_points < 200 {
        return Err(OracleError::GridTooSmall(grid_points));
    }
    if !(1..=2).contains(&num_levels) {
        return Err(OracleError::BadLevels(num_levels));
    }
    let mut out = Vec::new();
    for level in 0..num_levels {
        let even = level == 0;
        // scan upward in energy for the first sign change of the
        // midpoint mismatch
        let lo = -1.5 - 25.0 / (nu * nu);
        let hi = 2.0 + 45.0 / (nu * nu);
        let n_scan = 400;
        let mut bracket = None;
        let mut prev = shoot_mismatch(nu, lo, grid_points, even);
        for i in 1..=n_scan {
            let e = lo + (hi - lo) * i as f64 / n_scan as f64;
            let m = shoot_mismatch(nu, e, grid_points, even);
            if prev.signum() != m.signum() {
                bracket = Some((lo + (hi - lo) * (i - 1) as f64 / n_scan as f64, e));
                break;
            }
            prev = m;
        }
        let (mut a, mut b) = bracket.ok_or(OracleError::ShootingBracket { nu, level })?;
        let mut fa = shoot_mismatch(nu, a, grid_points, even);
        for _ in 0..100 {
            let mid = 0.5 * (a + b);
            let fm = shoot_mismatch(nu, mid, grid_points, even);
            if fa.signum() == fm.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
            if b - a < 1e-12 * (1.0 + a.abs()) {
                break;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_energies() {
        let s = solve_spectrum(2.6, 4000, 1).unwrap();
        assert!(
            (s.levels[0].richardson + 0.830672772).abs() < 1e-6,
            "{}",
            s.levels[0].richardson
        );
        let s = solve_spectrum(10.0, 4000, 1).unwrap();
        assert!(
            (s.levels[0].richardson + 0.524383).abs() < 2e-5,
            "{}",
            s.levels[0].richardson
        );
        let s = solve_spectrum(9.6, 4000, 2).unwrap();
        assert!(
            (s.levels[1].richardson + 0.514719).abs() < 2e-5,
            "{}",
            s.levels[1].richardson
        );
    }

    #[test]
    fn hydrogen_limit() {
        let s = solve_spectrum(200.0, 4000, 1).unwrap();
        assert!((s.levels[0].richardson + 0.5).abs() < 1e-3);
    }

    #[test]
    fn level_ordering_and_parity() {
        let s = solve_spectrum(6.0, 2000, 2).unwrap();
        assert!(s.levels[0].richardson < s.levels[1].richardson);
        let n = s.levels[0].eigenvector.len();
        for (k, expected_sign) in [(0usize, 1.0f64), (1, -1.0)] {
            let v = &s.levels[k].eigenvector;
            let mut max_asym = 0.0f64;
            for i in 0..n {
                let mirrored = expected_sign * v[n - 1 - i];
                max_asym = max_asym.max((v[i] - mirrored).abs());
            }
            assert!(max_asym < 1e-6, "level {k} asymmetry {max_asym}");
        }
    }

    #[test]
    fn eigenvector_normalization_and_nodes() {
        let s = solve_spectrum(6.0, 2000, 2).unwrap();
        let h = s.fine_step();
        for level in &s.levels {
            let norm: f64 = level.eigenvector.iter().map(|x| x * x).sum::<f64>() * h;
            assert!((norm - 1.0).abs() < 1e-10, "norm = {norm}");
        }
        let nodes = |v: &[f64]| {
            v.windows(2)
                .filter(|w| w[0].signum() != w[1].signum() && w[0].abs() > 1e-9)
                .count()
        };
        assert_eq!(nodes(&s.levels[0].eigenvector), 0);
        assert_eq!(nodes(&s.levels[1].eigenvector), 1);
    }

    #[test]
    fn h_squared_convergence() {
        // Successive differences e(2N) - e(N) scale like h^2, so their
        // ratio is 4. (A fixed ultra-fine reference is unusable here:
        // Sturm bisection resolves eigenvalues only to ~ eps * 2/h^2.)
        let at = |n: usize| eigen_on_grid(2.6, n, 1).0[0];
        let (a, b, c, d) = (at(500), at(1000), at(2000), at(4000));
        let slope1 = ((b - a) / (c - b)).log2();
        let slope2 = ((c - b) / (d - c)).log2();
        assert!((slope1 - 2.0).abs() < 0.1, "slope {slope1}");
        assert!((slope2 - 2.0).abs() < 0.1, "slope {slope2}");
    }

    #[test]
    fn shooting_cross_check() {
        let fd = solve_spectrum(2.6, 2000, 1).unwrap().levels[0].richardson;
        let sh = solve_spectrum_shooting(2.6, 4000, 1).unwrap()[0];
        assert!((fd - sh).abs() < 1e-4, "fd {fd} vs shooting {sh}");
        let fd = solve_spectrum(9.6, 2000, 2).unwrap().levels[1].richardson;
        let sh = solve_spectrum_shooting(9.6, 4000, 2).unwrap()[1];
        assert!((fd - sh).abs() < 1e-4, "fd {fd} vs shooting {sh}");
    }

    #[test]
    fn input_validation() {
        assert!(solve_spectrum(-1.0, 4000, 1).is_err());
        assert!(solve_spectrum(2.6, 100, 1).is_err());
        assert!(solve_spectrum(2.6, 4000, 0).is_err());
        assert!(solve_spectrum(2.6, 4000, 3).is_err());
    }
}
