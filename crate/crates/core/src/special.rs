//! Dawson integral F(x) = e^{-x^2} int_0^x e^{y^2} dy.
//!
//! Three branches: Maclaurin series for small x, Rybicki's sampling
//! expansion in the mid range, and the asymptotic series in 1/(2x^2) for
//! large x. Branch points are covered by a continuity test; relative
//! accuracy is ~1e-14 over [0, 100].

const SQRT_PI_INV: f64 = 0.564_189_583_547_756_3; // 1/sqrt(pi)

/// Sampling interval for the Rybicki expansion. Intrinsic error of the
/// expansion is exp(-pi^2/(4 h^2)) ~ 7e-18 at h = 0.25.
const RYBICKI_H: f64 = 0.25;
const RYBICKI_TERMS: usize = 28;

/// Dawson integral for x >= 0 (extended to x < 0 by oddness).
pub fn dawson(x: f64) -> f64 {
    if x < 0.0 {
        return -dawson(-x);
    }
    if x < 0.5 {
        dawson_small(x)
    } else if x < 8.0 {
        dawson_rybicki(x)
    } else {
        dawson_asymptotic(x)
    }
}

/// Maclaurin series: F(x) = sum (-1)^n 2^n x^(2n+1) / (2n+1)!!.
fn dawson_small(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0u32;
    loop {
        n += 1;
        term *= -2.0 * x2 / (2 * n + 1) as f64;
        let next = sum + term;
        if next == sum {
            return sum;
        }
        sum = next;
    }
}

/// Rybicki (1989) sampling expansion:
/// F(x) ~ (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n,
/// evaluated about the nearest even multiple of h so that only
/// exp(-xp^2) and powers of exp(2 xp h) are needed.
fn dawson_rybicki(x: f64) -> f64 {
    let n0 = 2 * (0.5 * x / RYBICKI_H).round() as i64;
    let xp = x - n0 as f64 * RYBICKI_H;
    let e1 = (2.0 * xp * RYBICKI_H).exp();
    let e2 = e1 * e1;
    let mut d1 = (n0 + 1) as f64;
    let mut d2 = (n0 - 1) as f64;
    let mut e = e1;
    let mut sum = 0.0;
    for i in 0..RYBICKI_TERMS {
        let c = {
            let t = (2 * i + 1) as f64 * RYBICKI_H;
            (-t * t).exp()
        };
        sum += c * (e / d1 + 1.0 / (d2 * e));
        d1 += 2.0;
        d2 -= 2.0;
        e *= e2;
    }
    SQRT_PI_INV * (-xp * xp).exp() * sum
}

/// Asymptotic series F(x) ~ (1/(2x)) sum_n (2n-1)!! / (2x^2)^n, summed to
/// the smallest term. Never overflows: leading behaviour is 1/(2x).
fn dawson_asymptotic(x: f64) -> f64 {
    let inv2x2 = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0u32;
    loop {
        n += 1;
        let next_term = term * (2 * n - 1) as f64 * inv2x2;
        if next_term.abs() >= term.abs() || n > 60 {
            break;
        }
        term = next_term;
        let next = sum + term;
        if next == sum {
            break;
        }
        sum = next;
    }
    sum / (2.0 * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::adaptive_gauss_legendre;

    /// Slow independent oracle: F(x) = int_0^x e^{-t(2x-t)} dt (t = x - y),
    /// adaptive quadrature, no overflow for any x.
    pub(crate) fn dawson_oracle(x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        // Integrand decays like e^{-2xt}; cut the interval where it is
        // below 1e-34 relative so the truncated tail is invisible.
        let cut = (80.0 / (2.0 * x)).min(x);
        adaptive_gauss_legendre(&|t: f64| (-t * (2.0 * x - t)).exp(), 0.0, cut, 1e-15)
    }

    #[test]
    fn anchors() {
        assert_eq!(dawson(0.0), 0.0);
        // high-precision quadrature value of e^{-1} int_0^1 e^{y^2} dy
        assert!((dawson(1.0) - 0.5380795069127684).abs() < 1e-14);
        // asymptotic two-term check at x = 10
        assert!((dawson(10.0) - 0.050250).abs() < 1e-5);
    }

    #[test]
    fn oddness_and_bound() {
        assert_eq!(dawson(-1.0), -dawson(1.0));
        for i in 0..=200 {
            let x = 0.05 * i as f64;
            let f = dawson(x);
            assert!((0.0..=0.55).contains(&f), "F({x}) = {f}");
        }
    }

    #[test]
    fn against_quadrature_oracle() {
        let mut x = 0.01;
        while x <= 100.0 {
            let f = dawson(x);
            let f_ref = dawson_oracle(x);
            let rel = (f - f_ref).abs() / f_ref.abs();
            assert!(rel < 1e-13, "x={x} dawson={f} oracle={f_ref} rel={rel}");
            x *= 1.17;
        }
    }

    #[test]
    fn ode_identity_by_finite_differences() {
        // F'(x) = 1 - 2 x F(x)
        let h = 1e-5;
        for i in 1..=50 {
            let x = 0.4 * i as f64; // 50 points in (0, 20)
            let deriv = (dawson(x + h) - dawson(x - h)) / (2.0 * h);
            let rhs = 1.0 - 2.0 * x * dawson(x);
            let scale = rhs.abs().max(deriv.abs()).max(1e-3);
            assert!(
                (deriv - rhs).abs() / scale < 1e-6,
                "x={x} deriv={deriv} rhs={rhs}"
            );
        }
    }

    #[test]
    fn asymptotic_tail_monotone() {
        // x F(x) = 1/2 + 1/(4x^2) + O(x^-4): decreases towards 1/2 from
        // above for large x.
        let mut prev = f64::INFINITY;
        for &x in &[5.0, 10.0, 50.0] {
            let t = x * dawson(x);
            assert!(t < prev && t > 0.5, "x={x} xF={t}");
            prev = t;
        }
        assert!((50.0 * dawson(50.0) - 0.5).abs() < 1e-3);
    }

    #[test]
    fn continuity_at_branch_points() {
        // Adjacent branches evaluated at the exact switch point.
        for (a, b, at) in [
            (dawson_small(0.5), dawson_rybicki(0.5), 0.5),
            (dawson_rybicki(8.0), dawson_asymptotic(8.0), 8.0),
        ] {
            assert!((a - b).abs() / a.abs() < 1e-13, "branch at {at}: {a} vs {b}");
        }
    }
}
