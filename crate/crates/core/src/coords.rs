//! The xi = x(L-x)/L^2 coordinate transform and the transformed ODE
//! residuals for both parities.

use crate::Parity;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CoordsError {
    #[error("x/L = {0} outside [0, 1]")]
    XOutOfRange(f64),
    #[error("xi = {0} outside [0, 1/4]")]
    XiOutOfRange(f64),
    #[error("nu = {0} must be positive")]
    BadNu(f64),
}

/// Dimensionless proton separation nu = L/a, with a = hbar^2/(m e^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryConfig {
    nu: f64,
}

impl GeometryConfig {
    pub fn new(nu: f64) -> Result<Self, CoordsError> {
        if nu <= 0.0 || !nu.is_finite() {
            return Err(CoordsError::BadNu(nu));
        }
        Ok(Self { nu })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// A value of the folded coordinate, constrained to [0, 1/4].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct XiPoint {
    xi: f64,
}

impl XiPoint {
    pub fn new(xi: f64) -> Result<Self, CoordsError> {
        if !(0.0..=0.25).contains(&xi) {
            return Err(CoordsError::XiOutOfRange(xi));
        }
        Ok(Self { xi })
    }

    pub fn value(&self) -> f64 {
        self.xi
    }
}

/// xi as a function of x/L. Symmetric under x/L -> 1 - x/L, zero at the
/// walls, maximal (1/4) at the midpoint.
pub fn xi_of_x(x_over_l: f64) -> Result<XiPoint, CoordsError> {
    if !(0.0..=1.0).contains(&x_over_l) {
        return Err(CoordsError::XOutOfRange(x_over_l));
    }
    // Clamp: roundoff in x*(1-x) can overshoot 1/4 by one ulp at x = 1/2.
    let xi = (x_over_l * (1.0 - x_over_l)).min(0.25);
    Ok(XiPoint { xi })
}

/// Inverse of `xi_of_x` on the left half-interval: x/L in [0, 1/2].
pub fn x_of_xi(p: XiPoint) -> f64 {
    0.5 * (1.0 - (1.0 - 4.0 * p.xi).max(0.0).sqrt())
}

/// Left-hand side of the transformed equation for the series factor f,
/// evaluated at one point. `f` returns (f, f', f'') at the given xi.
/// Exact solutions make this vanish identically; an order-n truncation
/// leaves a residual of order xi^n.
pub fn ode_residual<F>(parity: Parity, f: F, nu: f64, eps: f64, p: XiPoint) -> f64
where
    F: Fn(f64) -> (f64, f64, f64),
{
    let xi = p.xi;
    let (f0, f1, f2) = f(xi);
    match parity {
        Parity::Even => {
            0.5 * xi * (4.0 * xi - 1.0) * f2
                + (5.0 * xi + nu * xi - 4.0 * nu * xi * xi - 1.0) * f1
                + (1.0 - 4.0 * nu * xi - 0.5 * nu * nu * xi - eps * nu * nu * xi
                    + 2.0 * nu * nu * xi * xi)
                    * f0
        }
        Parity::Odd => {
            0.5 * xi * (4.0 * xi - 1.0) * f2
                + (7.0 * xi + nu * xi - 4.0 * nu * xi * xi - 1.0) * f1
                + (3.0 - 6.0 * nu * xi - 0.5 * nu * nu * xi - eps * nu * nu * xi
                    + 2.0 * nu * nu * xi * xi)
                    * f0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn xi_of_x_anchors() {
        assert_eq!(xi_of_x(0.0).unwrap().value(), 0.0);
        assert_eq!(xi_of_x(0.5).unwrap().value(), 0.25);
        assert_eq!(xi_of_x(0.25).unwrap().value(), 3.0 / 16.0);
        assert!(xi_of_x(-0.1).is_err());
        assert!(xi_of_x(1.1).is_err());
    }

    #[test]
    fn x_of_xi_anchors() {
        assert_eq!(x_of_xi(XiPoint::new(0.0).unwrap()), 0.0);
        assert_eq!(x_of_xi(XiPoint::new(0.25).unwrap()), 0.5);
        assert_abs_diff_eq!(
            x_of_xi(XiPoint::new(3.0 / 16.0).unwrap()),
            0.25,
            epsilon = 1e-15
        );
        assert!(XiPoint::new(0.3).is_err());
        assert!(XiPoint::new(-1e-9).is_err());
    }

    #[test]
    fn round_trip_on_fine_grid() {
        for i in 0..=1000 {
            let xi = 0.25 * i as f64 / 1000.0;
            let x = x_of_xi(XiPoint::new(xi).unwrap());
            let back = xi_of_x(x).unwrap().value();
            assert!((back - xi).abs() < 1e-14, "xi={xi} back={back}");
        }
    }

    #[test]
    fn symmetry_about_midpoint() {
        for i in 0..=500 {
            let t = i as f64 / 500.0;
            let a = xi_of_x(t).unwrap().value();
            let b = xi_of_x(1.0 - t).unwrap().value();
            // x*(1-x) rounds differently at t and 1-t; symmetric to ~1 ulp.
            assert!((a - b).abs() <= 1e-15 * (1.0 + a.abs()), "t={t} a={a} b={b}");
        }
    }

    // With f == 1 the derivative terms drop out; at eps = -1/2 the part of
    // the residual that grows linearly with nu (at fixed s = nu*xi) cancels,
    // which is the hydrogen-atom limit. Check R/nu -> 0 at eps = -1/2 while
    // it stays finite for other eps.
    #[test]
    fn hydrogen_limit_even() {
        let nu = 1e6;
        let s = 1.0; // x/a ~ 1
        let p = XiPoint::new(s / nu).unwrap();
        let one = |_xi: f64| (1.0, 0.0, 0.0);
        let r_hydrogen = ode_residual(Parity::Even, one, nu, -0.5, p) / nu;
        let r_other = ode_residual(Parity::Even, one, nu, -0.4, p) / nu;
        assert!(r_hydrogen.abs() < 1e-4, "r = {r_hydrogen}");
        assert!(r_other.abs() > 0.05);
    }
}
