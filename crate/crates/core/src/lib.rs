//! Electronic structure of the one-dimensional hydrogen molecular ion:
//! one electron between two protons that act as impenetrable walls.
//!
//! Everything is dimensionless: lengths in units of `a = hbar^2/(m e^2)`,
//! energies in units of `m e^4 / hbar^2`. The proton separation enters as
//! `nu = L/a` and the total (electronic + proton repulsion) energy as
//! `epsilon`.
//!
//! The interval `[0, L]` is folded onto `[0, 1/4]` by the coordinate
//! `xi = x(L-x)/L^2`, which turns both wall conditions into the single
//! condition `psi(0) = 0`. Trial states of the form
//! `N xi e^{-nu xi} f(xi)` (even) or `N xi sqrt(1-4xi) e^{-nu xi} f(xi)`
//! (odd), with `f` a short power series, give closed-form energy curves
//! that this crate evaluates and validates against an independent
//! finite-difference eigensolver.

pub mod coords;
pub mod moments;
pub mod optimize;
pub mod oracle;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod special;
pub mod variational;
pub mod wavefunction;

pub use coords::{GeometryConfig, XiPoint};
pub use moments::{MomentRequest, Weight};
pub use oracle::OracleSpectrum;
pub use series::{EpsilonPoly, SeriesCoefficients};
pub use variational::{Epsilon1Breakdown, QuadraticForms, TrialWavefunction};
pub use wavefunction::SampledWavefunction;

/// Symmetry of a state about the midpoint x = L/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}
