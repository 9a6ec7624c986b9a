//! Floating-point cross-check for the exact product: composite
//! Gauss–Legendre quadrature of ∫₀¹ f·g′ dt − N·g(1), whose value mod ℤ is
//! the product of the classes of f and g. The node count is chosen for
//! spectral accuracy well past the trigonometric degree of the integrand.

use crate::spark::CircleSpark0;
use crate::trigpoly::{pt_derivative, pt_eval_float, PolyTrig};

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1],
/// by Newton iteration on the Legendre polynomial from the Chebyshev
/// initial guess.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // initial guess: Chebyshev-like node
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

/// Value and derivative of the Legendre polynomial Pₙ at x via the
/// three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Composite Gauss–Legendre integral of `f` over [0, 1].
pub fn integrate_unit_interval(
    f: impl Fn(f64) -> f64,
    panels: usize,
    nodes_per_panel: usize,
) -> f64 {
    let rule = gauss_legendre(nodes_per_panel);
    let h = 1.0 / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let a = p as f64 * h;
        let mid = a + 0.5 * h;
        let half = 0.5 * h;
        for &(x, w) in &rule {
            total += w * f(mid + half * x) * half;
        }
    }
    total
}

/// Float-model product of two degree-0 classes:
/// ∫₀¹ f·g′ dt − N_f·g(1), before reduction mod ℤ.
pub fn quadrature_product(x: &CircleSpark0, y: &CircleSpark0) -> f64 {
    let f = x.lift();
    let g = y.lift();
    let g_prime = pt_derivative(&g);
    let integral = integrate_unit_interval(
        |t| pt_eval_float(&f, t) * pt_eval_float(&g_prime, t),
        8,
        24,
    );
    let n_f = bigint_to_f64(x.winding());
    integral - n_f * pt_eval_float(&g, 1.0)
}

fn bigint_to_f64(n: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// Convenience: the same integral for explicit float functions.
pub fn integrate_polytrig(f: &PolyTrig, panels: usize, nodes: usize) -> f64 {
    integrate_unit_interval(|t| pt_eval_float(f, t), panels, nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{circle_distance_f64, rat, ExactScalar};

    #[test]
    fn rule_integrates_polynomials_exactly() {
        // ∫₀¹ t³ dt = 1/4
        let v = integrate_unit_interval(|t| t * t * t, 1, 4);
        assert!((v - 0.25).abs() < 1e-14);
        // ∫₀¹ sin(2πt) dt = 0
        let s = integrate_unit_interval(|t| (2.0 * std::f64::consts::PI * t).sin(), 4, 12);
        assert!(s.abs() < 1e-13);
        // ∫₀¹ sin²(2πt) dt = 1/2
        let s2 = integrate_unit_interval(
            |t| (2.0 * std::f64::consts::PI * t).sin().powi(2),
            4,
            12,
        );
        assert!((s2 - 0.5).abs() < 1e-13);
    }

    #[test]
    fn oracle_matches_closed_form_on_basis_cases() {
        // [Nx]*[N′x] = NN′/2
        let x = CircleSpark0::from_winding(2);
        let y = CircleSpark0::from_winding(3);
        let q = quadrature_product(&x, &y).rem_euclid(1.0);
        let exact = crate::spark::product_closed_form(&x, &y).to_float_unit(15);
        assert!(circle_distance_f64(q, exact) < 1e-10);
        // sin × cos at k = 2: −2π mod 1
        let s = CircleSpark0::from_sin(2, ExactScalar::one());
        let c = CircleSpark0::from_cos(2, ExactScalar::one());
        let q2 = quadrature_product(&s, &c).rem_euclid(1.0);
        let exact2 = crate::spark::product_closed_form(&s, &c).to_float_unit(15);
        assert!(circle_distance_f64(q2, exact2) < 1e-10);
        // mixed rational data
        let a = CircleSpark0::new(
            num_bigint::BigInt::from(1),
            ExactScalar::from_rational(rat(1, 4)),
            [(
                3,
                crate::trigpoly::Harmonic {
                    sin: ExactScalar::from_rational(rat(2, 3)),
                    cos: ExactScalar::from_rational(rat(-1, 5)),
                },
            )],
        );
        let q3 = quadrature_product(&a, &s).rem_euclid(1.0);
        let exact3 = crate::spark::product_closed_form(&a, &s).to_float_unit(15);
        assert!(circle_distance_f64(q3, exact3) < 1e-9);
    }
}
