//! The verification table: every published anchor value and structural
//! property this crate reproduces, each with its measured value, expected
//! value and tolerance. The CLI `verify` subcommand and the acceptance
//! test suite both run this table.

use crate::moments::{moment_closed, moment_quad, MomentRequest, Weight};
use crate::oracle::solve_spectrum;
use crate::special::dawson;
use crate::variational::{
    box_energy, box_energy_order1_rational, build_trial, epsilon1, epsilon2, equilibrium,
    optimize_order_n,
};
use crate::wavefunction::{compare, sample_oracle, sample_trial};
use crate::Parity;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    /// Acceptance criterion group (1..=9).
    pub group: u8,
    pub name: String,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CriterionResult {
    fn check(group: u8, name: &str, measured: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            group,
            name: name.to_string(),
            measured,
            expected,
            tolerance,
            pass: (measured - expected).abs() <= tolerance,
        }
    }

    /// A bound of the form measured <= limit (encoded with expected =
    /// limit, tolerance = 0 and one-sided pass).
    fn bound(group: u8, name: &str, measured: f64, limit: f64) -> Self {
        Self {
            group,
            name: name.to_string(),
            measured,
            expected: limit,
            tolerance: 0.0,
            pass: measured <= limit,
        }
    }

    fn in_range(group: u8, name: &str, measured: f64, lo: f64, hi: f64) -> Self {
        Self {
            group,
            name: name.to_string(),
            measured,
            expected: 0.5 * (lo + hi),
            tolerance: 0.5 * (hi - lo),
            pass: (lo..=hi).contains(&measured),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {} | measured {:+.9e} expected {:+.9e} tol {:.1e} | {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            self.expected,
            self.tolerance,
            if self.pass { "ok" } else { "FAILED" }
        )
    }
}

/// Oracle grid used throughout the table; N and 2N with Richardson.
const ORACLE_N: usize = 4000;

fn oracle_level(nu: f64, level: usize) -> f64 {
    solve_spectrum(nu, ORACLE_N, level + 1).unwrap().levels[level].richardson
}

/// Run the full table. Deterministic; completes in well under two
/// minutes single-threaded.
pub fn run_all() -> Vec<CriterionResult> {
    let mut rows = Vec::new();

    // 1. order-1 closed-form anchors
    rows.push(CriterionResult::check(
        1,
        "epsilon1(2.6)",
        epsilon1(2.6).value,
        -0.830671,
        2e-6,
    ));
    let (nu1, e1) = equilibrium(|nu| epsilon1(nu).value, (1.0, 5.0));
    rows.push(CriterionResult::check(1, "epsilon1 argmin nu", nu1, 2.58134, 1e-3));
    rows.push(CriterionResult::check(1, "epsilon1 minimum", e1, -0.830708, 2e-6));
    rows.push(CriterionResult::check(
        1,
        "epsilon1(10)",
        epsilon1(10.0).value,
        -0.494552,
        2e-6,
    ));

    // 2. order-2 even anchors
    let eps2 = |p, nu| epsilon2(p, nu).unwrap();
    rows.push(CriterionResult::check(
        2,
        "epsilon2(even, 2.6)",
        eps2(Parity::Even, 2.6),
        -0.830672,
        2e-6,
    ));
    let (nu2, e2) = equilibrium(|nu| eps2(Parity::Even, nu), (1.0, 5.0));
    rows.push(CriterionResult::check(2, "epsilon2 even argmin nu", nu2, 2.58117, 1e-3));
    rows.push(CriterionResult::check(2, "epsilon2 even minimum", e2, -0.830709, 2e-6));
    rows.push(CriterionResult::check(
        2,
        "epsilon2(even, 10)",
        eps2(Parity::Even, 10.0),
        -0.523867,
        2e-6,
    ));

    // 3. order-2 odd anchors
    let (nu3, e3) = equilibrium(|nu| eps2(Parity::Odd, nu), (5.0, 15.0));
    rows.push(CriterionResult::check(3, "epsilon2 odd argmin nu", nu3, 9.52343, 2e-3));
    rows.push(CriterionResult::check(3, "epsilon2 odd minimum", e3, -0.514563, 2e-6));
    rows.push(CriterionResult::check(
        3,
        "epsilon2(odd, 9.6)",
        eps2(Parity::Odd, 9.6),
        -0.514557,
        2e-6,
    ));

    // 4. independent eigensolver anchors
    let oracle_26 = oracle_level(2.6, 0);
    let oracle_10 = oracle_level(10.0, 0);
    let oracle_96 = oracle_level(9.6, 1);
    rows.push(CriterionResult::check(4, "oracle ground nu=2.6", oracle_26, -0.830672772, 1e-6));
    rows.push(CriterionResult::check(4, "oracle ground nu=10", oracle_10, -0.524383, 2e-5));
    rows.push(CriterionResult::check(4, "oracle excited nu=9.6", oracle_96, -0.514719, 2e-5));

    // 5. deviation-from-numerics claims at nu = 10
    rows.push(CriterionResult::in_range(
        5,
        "|epsilon2(even,10) - oracle|",
        (eps2(Parity::Even, 10.0) - oracle_10).abs(),
        3e-4,
        8e-4,
    ));
    rows.push(CriterionResult::in_range(
        5,
        "|epsilon1(10) - oracle|",
        (epsilon1(10.0).value - oracle_10).abs(),
        0.025,
        0.035,
    ));

    // 6. small- and large-nu asymptotics
    let nu = 1e-3;
    let even_limit = (6270.0 - 25314630.0f64.sqrt()) / 251.0;
    let odd_limit = 3.0 * (4550.0 - 7728630.0f64.sqrt()) / 269.0;
    rows.push(CriterionResult::check(
        6,
        "nu^2 epsilon2(even) at nu=1e-3",
        nu * nu * eps2(Parity::Even, nu),
        even_limit,
        1e-3 * even_limit,
    ));
    rows.push(CriterionResult::check(
        6,
        "nu^2 epsilon2(odd) at nu=1e-3",
        nu * nu * eps2(Parity::Odd, nu),
        odd_limit,
        1e-3 * odd_limit,
    ));
    for &parity in &[Parity::Even, Parity::Odd] {
        rows.push(CriterionResult::check(
            6,
            &format!("(epsilon2({parity},40)+1/2) nu^2"),
            (eps2(parity, 40.0) + 0.5) * 1600.0,
            -1.5,
            0.05 * 1.5,
        ));
    }
    rows.push(CriterionResult::check(
        6,
        "(epsilon1(40)+1/2) nu^2",
        (epsilon1(40.0).value + 0.5) * 1600.0,
        4.5,
        0.05 * 4.5,
    ));

    // 7. order coincidence over the nu grid (figures 5 and 9 claim)
    for &parity in &[Parity::Even, Parity::Odd] {
        let mut max3 = 0.0f64;
        let mut max4 = 0.0f64;
        let mut i = 5;
        while i <= 200 {
            let nu = i as f64 * 0.1;
            let (_, o2) = optimize_order_n(parity, nu, 2).unwrap();
            let (_, o3) = optimize_order_n(parity, nu, 3).unwrap();
            let (_, o4) = optimize_order_n(parity, nu, 4).unwrap();
            max3 = max3.max((o2 - o3).abs());
            max4 = max4.max((o2 - o4).abs());
            i += 1;
        }
        rows.push(CriterionResult::bound(
            7,
            &format!("max |order2-order3| ({parity})"),
            max3,
            1e-5,
        ));
        rows.push(CriterionResult::bound(
            7,
            &format!("max |order2-order4| ({parity})"),
            max4,
            1e-5,
        ));
    }

    // 8. particle-in-a-box demo
    let (num, den) = box_energy_order1_rational();
    rows.push(CriterionResult::check(
        8,
        "box order-1 rational = 153/31",
        if (num, den) == (153, 31) { 1.0 } else { 0.0 },
        1.0,
        0.0,
    ));
    let exact_box = std::f64::consts::PI * std::f64::consts::PI / 2.0;
    rows.push(CriterionResult::bound(
        8,
        "box order-1 vs pi^2/2 rel err",
        (box_energy(1).unwrap() - exact_box).abs() / exact_box,
        1e-3,
    ));

    // 9. property suites
    rows.push(CriterionResult::bound(
        9,
        "moments closed vs quadrature (max rel)",
        {
            let mut worst = 0.0f64;
            for &nu in &[0.1, 1.0, 2.6, 10.0, 50.0] {
                for n in 0..=10 {
                    for &w in &[Weight::InvSqrt, Weight::Sqrt] {
                        let r = MomentRequest::new(n, w, nu).unwrap();
                        let c = moment_closed(r).unwrap();
                        let q = moment_quad(r).unwrap();
                        worst = worst.max((c - q).abs() / q.abs());
                    }
                }
            }
            worst
        },
        1e-10,
    ));
    rows.push(CriterionResult::bound(
        9,
        "series residual order slope deviation",
        {
            use crate::coords::{ode_residual, XiPoint};
            use crate::series::{eval_truncated_f, series_coefficients};
            let mut worst = 0.0f64;
            for &parity in &[Parity::Even, Parity::Odd] {
                for (order, x1, x2) in [(2usize, 1e-4, 1e-3), (4, 1e-3, 1e-2)] {
                    let s = series_coefficients(parity, 2.6, order).unwrap();
                    let r_at = |xi: f64| {
                        ode_residual(
                            parity,
                            |x| eval_truncated_f(&s, -0.8, XiPoint::new(x).unwrap()),
                            2.6,
                            -0.8,
                            XiPoint::new(xi).unwrap(),
                        )
                        .abs()
                    };
                    let slope = (r_at(x2) / r_at(x1)).ln() / (x2 / x1).ln();
                    worst = worst.max((slope - order as f64).abs());
                }
            }
            worst
        },
        0.05,
    ));
    rows.push(CriterionResult::bound(
        9,
        "trial normalization: |xi-integral - 1/2| (max)",
        {
            let mut worst = 0.0f64;
            for &(parity, nu) in &[(Parity::Even, 2.6), (Parity::Even, 10.0), (Parity::Odd, 9.6)] {
                let t = build_trial(parity, nu, 2).unwrap();
                let w = match parity {
                    Parity::Even => Weight::InvSqrt,
                    Parity::Odd => Weight::Sqrt,
                };
                let c = t.series.coefficients_at(t.eps_star);
                let mut integral = 0.0;
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        integral += c[i]
                            * c[j]
                            * moment_quad(MomentRequest::new((i + j + 2) as i32, w, nu).unwrap())
                                .unwrap();
                    }
                }
                worst = worst.max((t.norm_const.powi(2) * integral - 0.5).abs());
            }
            worst
        },
        1e-10,
    ));
    rows.push(CriterionResult::bound(
        9,
        "variational bound / parity ordering violations",
        {
            let mut violations = 0.0;
            for &nu in &[0.5, 1.0, 2.0, 2.6, 5.0, 10.0, 20.0] {
                let even = eps2(Parity::Even, nu);
                let odd = eps2(Parity::Odd, nu);
                if even >= odd {
                    violations += 1.0;
                }
                let spec = solve_spectrum(nu, 2000, 2).unwrap();
                let tol = 1e-6 + spec.levels[0].richardson_error;
                if even < spec.levels[0].richardson - tol {
                    violations += 1.0;
                }
                if odd < spec.levels[1].richardson - tol {
                    violations += 1.0;
                }
            }
            violations
        },
        0.0,
    ));
    rows.push(CriterionResult::bound(
        9,
        "dawson ODE identity (max rel)",
        {
            let mut worst = 0.0f64;
            let h = 1e-5;
            for i in 1..=50 {
                let x = 0.4 * i as f64;
                let d = (dawson(x + h) - dawson(x - h)) / (2.0 * h);
                let rhs = 1.0 - 2.0 * x * dawson(x);
                worst = worst.max((d - rhs).abs() / d.abs().max(rhs.abs()).max(1e-3));
            }
            worst
        },
        1e-6,
    ));
    rows.push(CriterionResult::check(
        9,
        "oracle h^2 convergence slope",
        {
            // Ratio of successive grid refinements: (e(2N)-e(N))/(e(4N)-e(2N)) = 4
            // for h^2 convergence.
            let e_at = |n: usize| solve_spectrum(2.6, n, 1).unwrap().levels[0].epsilon;
            let (a, b, c) = (e_at(500), e_at(1000), e_at(2000));
            ((b - a) / (c - b)).log2()
        },
        2.0,
        0.1,
    ));
    for &(parity, nu, level) in &[
        (Parity::Even, 10.0, 0usize),
        (Parity::Even, 2.0, 0),
        (Parity::Odd, 15.0, 1),
        (Parity::Odd, 6.0, 1),
    ] {
        let t = build_trial(parity, nu, 2).unwrap();
        let spec = solve_spectrum(nu, 2000, level + 1).unwrap();
        let a = sample_trial(&t, 1001).unwrap();
        let b = sample_oracle(&spec, level, 1001).unwrap();
        let r = compare(&a, &b).unwrap();
        rows.push(CriterionResult::bound(
            9,
            &format!("overlap deficit {parity} nu={nu}"),
            1.0 - r.overlap,
            1e-3,
        ));
    }

    rows
}
