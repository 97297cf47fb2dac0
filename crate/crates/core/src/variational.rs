//! Norm and energy functionals of the trial wavefunctions, the
//! closed-form energies, the general order-n minimizer and the
//! particle-in-a-box demonstration.
//!
//! For the order-2 trials the normalization and energy integrals are
//! quadratics in the variational parameter epsilon; they are assembled
//! here from `series` coefficients and `moments` rather than transcribed
//! from the printed expressions, which serve as numeric cross-checks
//! only.

use crate::moments::{MomentError, MomentTable, Weight};
use crate::optimize::{scan_then_golden, OptimizeError};
use crate::series::{series_coefficients, EpsilonPoly, SeriesCoefficients, SeriesError};
use crate::special::dawson;
use crate::Parity;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VariationalError {
    #[error("stationarity equation has negative discriminant {0}; forms are invalid")]
    NegativeDiscriminant(f64),
    #[error("quadratic forms are degenerate: energy has no stationary point in epsilon")]
    DegenerateForms,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Moment(#[from] MomentError),
    #[error("energy minimization failed: {0}")]
    Optimize(#[from] OptimizeError),
}

/// Norm and energy of an order-2 trial as quadratics in epsilon:
/// norm integral = q0 + q1 e + q2 e^2 (so N^-2 = 2 * that), and
/// energy = 1/nu + (p0 + p1 e + p2 e^2) / (q0 + q1 e + q2 e^2).
#[derive(Debug, Clone)]
pub struct QuadraticForms {
    pub parity: Parity,
    pub nu: f64,
    pub norm: [f64; 3],
    pub energy: [f64; 3],
}

impl QuadraticForms {
    pub fn norm_at(&self, eps: f64) -> f64 {
        self.norm[0] + eps * (self.norm[1] + eps * self.norm[2])
    }

    /// Rayleigh quotient at a given value of the variational parameter.
    pub fn energy_at(&self, eps: f64) -> f64 {
        let p = self.energy[0] + eps * (self.energy[1] + eps * self.energy[2]);
        1.0 / self.nu + p / self.norm_at(eps)
    }
}

/// A resolved trial state: parity, separation, truncated series, the
/// minimizing epsilon and the normalization constant N of
/// psi = N xi e^{-nu xi} f  (even)  or  N xi sqrt(1-4xi) e^{-nu xi} f (odd).
#[derive(Debug, Clone)]
pub struct TrialWavefunction {
    pub parity: Parity,
    pub nu: f64,
    pub series: SeriesCoefficients,
    pub eps_star: f64,
    pub norm_const: f64,
}

/// The order-1 closed-form energy epsilon_1 = A1/B1 and its pieces.
#[derive(Debug, Clone, Copy)]
pub struct Epsilon1Breakdown {
    pub a1: f64,
    pub b1: f64,
    pub value: f64,
}

/// Integrals of one trial, as polynomials in epsilon:
/// `norm`   = int psi~^2 (1-4xi)^{-1/2},
/// `attract`= int psi~^2 / (xi sqrt(1-4xi)),
/// `kinetic`= int sqrt(1-4xi) (psi~')^2,
/// for the unnormalized psi~ (N = 1).
struct Functionals {
    norm: EpsilonPoly,
    attract: EpsilonPoly,
    kinetic: EpsilonPoly,
}

/// Multiply two xi-polynomials whose coefficients are epsilon-polynomials.
fn xi_poly_mul(a: &[EpsilonPoly], b: &[EpsilonPoly]) -> Vec<EpsilonPoly> {
    let mut out = vec![EpsilonPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Contract a xi-polynomial against the moment family.
fn contract(poly: &[EpsilonPoly], table: &MomentTable, weight: Weight, shift: usize) -> EpsilonPoly {
    let mut acc = EpsilonPoly::zero();
    for (j, c) in poly.iter().enumerate() {
        acc = acc.add(&c.scale(table.get(j + shift, weight)));
    }
    acc
}

fn functionals(s: &SeriesCoefficients) -> Result<Functionals, VariationalError> {
    let nu = s.nu();
    let g = s.terms();
    let order = g.len() - 1;
    let table = MomentTable::build(nu, 2 * order + 4)?;
    // h = g + xi g' - nu xi g, the polynomial part of (xi e^{-nu xi} g)'.
    let mut h: Vec<EpsilonPoly> = Vec::with_capacity(order + 2);
    for j in 0..=order + 1 {
        let mut c = EpsilonPoly::zero();
        if j <= order {
            c = g[j].scale(1.0 + j as f64);
        }
        if j >= 1 {
            c = c.add(&g[j - 1].scale(-nu));
        }
        h.push(c);
    }
    let g2 = xi_poly_mul(g, g);
    match s.parity() {
        Parity::Even => {
            let h2 = xi_poly_mul(&h, &h);
            Ok(Functionals {
                norm: contract(&g2, &table, Weight::InvSqrt, 2),
                attract: contract(&g2, &table, Weight::InvSqrt, 1),
                kinetic: contract(&h2, &table, Weight::Sqrt, 0),
            })
        }
        Parity::Odd => {
            // psi~ = xi sqrt(1-4xi) e^{-nu xi} g:
            // sqrt(1-4xi) psi~'^2 = e^{-2nu xi} H^2 / sqrt(1-4xi),
            // H = (1-4xi) h - 2 xi g.
            let mut big_h: Vec<EpsilonPoly> = Vec::with_capacity(order + 3);
            for j in 0..=order + 2 {
                let mut c = EpsilonPoly::zero();
                if j < h.len() {
                    c = h[j].clone();
                }
                if j >= 1 && j - 1 < h.len() {
                    c = c.add(&h[j - 1].scale(-4.0));
                }
                if j >= 1 && j - 1 <= order {
                    c = c.add(&g[j - 1].scale(-2.0));
                }
                big_h.push(c);
            }
            let h2 = xi_poly_mul(&big_h, &big_h);
            Ok(Functionals {
                norm: contract(&g2, &table, Weight::Sqrt, 2),
                attract: contract(&g2, &table, Weight::Sqrt, 1),
                kinetic: contract(&h2, &table, Weight::InvSqrt, 0),
            })
        }
    }
}

/// Energy numerator P = kinetic/(2 nu^2) - attract/nu, so that the
/// Rayleigh quotient is 1/nu + P/norm.
fn energy_numerator(f: &Functionals, nu: f64) -> EpsilonPoly {
    f.kinetic
        .scale(0.5 / (nu * nu))
        .add(&f.attract.scale(-1.0 / nu))
}

fn poly_to_quadratic(p: &EpsilonPoly) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (i, c) in p.coeffs().iter().enumerate() {
        out[i] = *c;
    }
    out
}

/// Assemble the order-2 norm/energy quadratics for one parity and nu.
pub fn quadratic_forms(parity: Parity, nu: f64) -> Result<QuadraticForms, VariationalError> {
    let s = series_coefficients(parity, nu, 2)?;
    let f = functionals(&s)?;
    debug_assert!(f.norm.degree() <= 2 && f.kinetic.degree() <= 2);
    Ok(QuadraticForms {
        parity,
        nu,
        norm: poly_to_quadratic(&f.norm),
        energy: poly_to_quadratic(&energy_numerator(&f, nu)),
    })
}

/// The order-1 even closed form, exactly as printed: both A1 and B1 are
/// explicit in nu and the Dawson integral, with no epsilon left over.
pub fn epsilon1(nu: f64) -> Epsilon1Breakdown {
    let f = dawson((0.5 * nu).sqrt());
    let sq = nu.sqrt();
    let n2 = nu * nu;
    let n3 = n2 * nu;
    let n4 = n3 * nu;
    let a1 = sq * (15.0 + 7.0 * nu + 147.0 * n2 + 175.0 * n3)
        - 2.0f64.sqrt() * f * (15.0 + 12.0 * nu + 150.0 * n2 + 100.0 * n3 + 175.0 * n4);
    let b1 = -10.0 * nu * sq * (21.0 + 29.0 * nu + 17.0 * n2 + 5.0 * n3)
        + 2.0 * 2.0f64.sqrt() * nu * f * (105.0 + 180.0 * nu + 138.0 * n2 + 60.0 * n3 + 25.0 * n4);
    Epsilon1Breakdown {
        a1,
        b1,
        value: a1 / b1,
    }
}

/// Stationary point of the Rayleigh quotient that is a minimum. The
/// stationarity condition for (p0+p1 e+p2 e^2)/(q0+q1 e+q2 e^2) is the
/// quadratic a e^2 + b e + c = 0 with a = p2 q1 - p1 q2,
/// b = 2(p2 q0 - p0 q2), c = p1 q0 - p0 q1; the other root is a maximum.
pub fn epsilon_star(forms: &QuadraticForms) -> Result<f64, VariationalError> {
    let [q0, q1, q2] = forms.norm;
    let [p0, p1, p2] = forms.energy;
    let a = p2 * q1 - p1 * q2;
    let b = 2.0 * (p2 * q0 - p0 * q2);
    let c = p1 * q0 - p0 * q1;
    let scale = [a, b, c].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return Err(VariationalError::DegenerateForms);
    }
    if a.abs() <= 1e-14 * scale {
        if b.abs() <= 1e-14 * scale {
            return Err(VariationalError::DegenerateForms);
        }
        return Ok(-c / b);
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Err(VariationalError::NegativeDiscriminant(disc));
    }
    // Citardauq on one root avoids cancellation; the two roots are one
    // minimum and one maximum of the quotient.
    let sq = disc.sqrt();
    let r1 = (-b - b.signum() * sq) / (2.0 * a);
    let r2 = c / (a * r1);
    if forms.energy_at(r1) <= forms.energy_at(r2) {
        Ok(r1)
    } else {
        Ok(r2)
    }
}

/// Order-2 closed-form energy: the Rayleigh quotient at epsilon_star.
pub fn epsilon2(parity: Parity, nu: f64) -> Result<f64, VariationalError> {
    let forms = quadratic_forms(parity, nu)?;
    let eps = epsilon_star(&forms)?;
    Ok(forms.energy_at(eps))
}

/// Rayleigh quotient of an arbitrary truncated trial at a fixed epsilon.
pub fn rayleigh_at(s: &SeriesCoefficients, eps: f64) -> Result<f64, VariationalError> {
    let f = functionals(s)?;
    let nu = s.nu();
    let p = energy_numerator(&f, nu).eval(eps);
    Ok(1.0 / nu + p / f.norm.eval(eps))
}

/// Energy of a resolved trial state.
pub fn rayleigh_energy(t: &TrialWavefunction) -> Result<f64, VariationalError> {
    rayleigh_at(&t.series, t.eps_star)
}

/// Build the order-n trial, minimize the Rayleigh quotient over epsilon
/// (bracket scan then golden section, per the search policy that covers
/// both the box limit ~20/nu^2 and the large-nu limit near -1/2), and
/// return (eps_star, energy).
pub fn optimize_order_n(
    parity: Parity,
    nu: f64,
    order: usize,
) -> Result<(f64, f64), VariationalError> {
    let s = series_coefficients(parity, nu, order)?;
    optimize_series(&s)
}

fn optimize_series(s: &SeriesCoefficients) -> Result<(f64, f64), VariationalError> {
    let nu = s.nu();
    let f = functionals(s)?;
    let p = energy_numerator(&f, nu);
    if p.degree() == 0 && f.norm.degree() == 0 {
        // Parameter-free trial (order <= 1 even): nothing to minimize.
        return Ok((0.0, 1.0 / nu + p.eval(0.0) / f.norm.eval(0.0)));
    }
    let hi = (25.0 / (nu * nu)).max(1.0);
    let target = |eps: f64| 1.0 / nu + p.eval(eps) / f.norm.eval(eps);
    let (eps, energy) = scan_then_golden(target, -1.0, hi, 64, 1e-12)?;
    Ok((eps, energy))
}

/// Build and normalize a trial wavefunction of the given order.
pub fn build_trial(
    parity: Parity,
    nu: f64,
    order: usize,
) -> Result<TrialWavefunction, VariationalError> {
    let series = series_coefficients(parity, nu, order)?;
    trial_from_series(series)
}

/// Normalize an arbitrary series truncation at its minimizing epsilon.
pub fn trial_from_series(series: SeriesCoefficients) -> Result<TrialWavefunction, VariationalError> {
    let (eps_star, _) = optimize_series(&series)?;
    let f = functionals(&series)?;
    // Normalization Eq. (6): N^2 * norm = 1/2.
    let norm_const = (0.5 / f.norm.eval(eps_star)).sqrt();
    Ok(TrialWavefunction {
        parity: series.parity(),
        nu: series.nu(),
        series,
        eps_star,
        norm_const,
    })
}

/// Residual of the alternate self-consistency condition ("energy equals
/// the parameter"): epsilon2 - epsilon_star. Diagnostic only; the method
/// of record is minimization.
pub fn self_consistency_residual(parity: Parity, nu: f64) -> Result<f64, VariationalError> {
    let forms = quadratic_forms(parity, nu)?;
    let eps = epsilon_star(&forms)?;
    Ok(forms.energy_at(eps) - eps)
}

/// Equilibrium separation: the nu minimizing an energy curve, found by
/// golden section inside the given bracket. Returns (nu_star, energy).
pub fn equilibrium(curve: impl Fn(f64) -> f64, bracket: (f64, f64)) -> (f64, f64) {
    crate::optimize::golden_section(curve, bracket.0, bracket.1, 1e-8)
}

// ---------------------------------------------------------------------
// Particle in a box, solved by the same xi-series method with the
// Coulomb terms dropped. Energies in units of hbar^2/(m L^2); the exact
// ground state is pi^2/2.

/// Box trial f-coefficients for a given trial energy parameter, from the
/// recurrence of (xi/2)(4xi-1) f'' + (5xi-1) f' + (1 - E xi) f = 0.
fn box_coefficients(order: usize, e: f64) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    c[0] = 1.0;
    for m in 0..order {
        let mf = m as f64;
        let mut next = (2.0 * mf * (mf - 1.0) + 5.0 * mf + 1.0) * c[m];
        if m >= 1 {
            next -= e * c[m - 1];
        }
        c[m + 1] = next / ((mf + 1.0) * (0.5 * mf + 1.0));
    }
    c
}

/// Rayleigh quotient (1/2) K / S for psi = xi f(xi) at zero exponential
/// rate, using the nu = 0 moment table.
fn box_rayleigh(coeffs: &[f64], table: &MomentTable) -> f64 {
    let order = coeffs.len() - 1;
    // psi' coefficients: (1+j) f_j
    let dp: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| (1.0 + j as f64) * c)
        .collect();
    let mut kin = 0.0;
    for i in 0..=order {
        for j in 0..=order {
            kin += dp[i] * dp[j] * table.get(i + j, Weight::Sqrt);
        }
    }
    let mut norm = 0.0;
    for i in 0..=order {
        for j in 0..=order {
            norm += coeffs[i] * coeffs[j] * table.get(i + j + 2, Weight::InvSqrt);
        }
    }
    0.5 * kin / norm
}

/// Ground-state box energy from the order-n xi trial. Order 1 is the
/// parameter-free trial proportional to xi + xi^2 and is evaluated in
/// exact integer arithmetic, giving 153/31; higher orders minimize over
/// the trial-energy parameter.
pub fn box_energy(order: usize) -> Result<f64, VariationalError> {
    if order == 0 {
        return Err(SeriesError::BadOrder(0).into());
    }
    if order == 1 {
        let (num, den) = box_energy_order1_rational();
        return Ok(num as f64 / den as f64);
    }
    let table = MomentTable::build(0.0, 2 * order + 2)?;
    let target = |e: f64| box_rayleigh(&box_coefficients(order, e), &table);
    let (_, energy) = scan_then_golden(target, 0.0, 40.0, 64, 1e-12)?;
    Ok(energy)
}

/// The order-1 box energy as an exact fraction.
///
/// With psi = xi + xi^2: kinetic = sum over (1+2xi)^2 of sqrt-weight
/// moments, norm = sum over xi^2 (1+xi)^2 of inv-sqrt moments, and the
/// nu = 0 moments are the rationals
///   M(n, inv) = (2n)!! / ((2n+1)!! 2 4^n),
///   M(n, sqrt) = M(n, inv) - 4 M(n+1, inv).
pub fn box_energy_order1_rational() -> (i64, i64) {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    // Fractions over a common denominator, built from the exact values
    // M_inv(2..4,0) = 1/60, 1/280, 1/1260 and M_sqrt(0..2,0) = 1/6, 1/60, 1/420.
    // norm = 1/60 + 2/280 + 1/1260 = 31/1260
    // kin  = 1/6 + 4/60 + 4/420    = 17/70
    // E = (1/2) kin / norm = 17 * 1260 / (70 * 2 * 31)
    let num: i64 = 17 * 1260;
    let den: i64 = 70 * 2 * 31;
    let g = gcd(num, den);
    (num / g, den / g)
}
