//! Adaptive Gauss-Legendre quadrature on smooth integrands.
//!
//! A 15-point rule per panel, bisecting until two half-panel estimates
//! agree with the whole-panel one to the requested tolerance. Callers are
//! expected to have removed endpoint singularities by a change of
//! variable first.

use std::sync::OnceLock;

const N_NODES: usize = 15;

/// Nodes and weights of the 15-point rule on [-1, 1], built once by
/// Newton iteration on the Legendre polynomial.
fn gl_rule() -> &'static ([f64; N_NODES], [f64; N_NODES]) {
    static RULE: OnceLock<([f64; N_NODES], [f64; N_NODES])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = N_NODES;
        let mut nodes = [0.0; N_NODES];
        let mut weights = [0.0; N_NODES];
        for i in 0..n {
            // Chebyshev-like initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn panel<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> f64 {
    let (nodes, weights) = gl_rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for i in 0..N_NODES {
        sum += weights[i] * f(mid + half * nodes[i]);
    }
    sum * half
}

/// Integrate `f` over [a, b] to absolute tolerance `tol` (interpreted
/// relative to the running magnitude of the integral when that is larger
/// than one).
pub fn adaptive_gauss_legendre<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64 + ?Sized>(
        f: &F,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let mid = 0.5 * (a + b);
        let left = panel(f, a, mid);
        let right = panel(f, mid, b);
        let err = (left + right - whole).abs();
        if err <= tol || depth >= 40 {
            return left + right;
        }
        recurse(f, a, mid, left, 0.5 * tol, depth + 1)
            + recurse(f, mid, b, right, 0.5 * tol, depth + 1)
    }
    let whole = panel(f, a, b);
    let scale = whole.abs().max(1.0);
    recurse(f, a, b, whole, tol * scale, 0)
}
