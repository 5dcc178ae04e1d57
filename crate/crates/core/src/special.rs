//! Gamma function and the Weyl-type constants built on it.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (original argument minus one)
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    acc
}

/// Γ(x) for real `x`, Lanczos approximation with reflection below 1/2.
///
/// Poles (non-positive integers) return NaN; overflow returns +∞.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    // exact factorials keep integer arguments bit-exact
    if x == x.floor() && x <= 23.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    let sum = lanczos_sum(x);
    // split t^(x+1/2) to delay overflow near the top of the f64 range
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (sum * (-t).exp()) * half
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin()).abs().ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

/// Volume of the unit ball in R^d, π^{d/2} / Γ(1 + d/2).
pub fn unit_ball_volume(d: usize) -> f64 {
    let half = d as f64 / 2.0;
    PI.powf(half) / gamma(1.0 + half)
}

/// Weyl eigenvalue constant C_d = (2π)² B_d^{-2/d}.
pub fn weyl_constant(d: usize) -> f64 {
    assert!(d >= 1, "weyl_constant needs d >= 1");
    (2.0 * PI).powi(2) * unit_ball_volume(d).powf(-2.0 / d as f64)
}

/// Semiclassical Riesz-mean constant Γ(γ+1) / ((4π)^{d/2} Γ(γ+1+d/2)).
///
/// Defined for γ ≥ 0 and any integer dimension d ≥ 0 (d = 0 gives 1).
pub fn riesz_constant(gamma_exp: f64, d: usize) -> f64 {
    let half = d as f64 / 2.0;
    let num = gamma_exp + 1.0;
    let den = gamma_exp + 1.0 + half;
    if den > 170.0 {
        // ratio through logs once Γ itself would overflow
        return (ln_gamma(num) - ln_gamma(den)).exp() / (4.0 * PI).powf(half);
    }
    gamma(num) / ((4.0 * PI).powf(half) * gamma(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn integer_arguments_are_factorials() {
        let mut fact = 1.0;
        for n in 1..30 {
            assert!(rel(gamma(n as f64), fact) < 1e-13, "Γ({n})");
            fact *= n as f64;
        }
    }

    #[test]
    fn half_integers_match_closed_form() {
        // Γ(n + 1/2) = (2n)! √π / (4^n n!)
        for n in 0..20u32 {
            let mut num = 1.0;
            for k in 1..=(2 * n) {
                num *= k as f64;
            }
            let mut nf = 1.0;
            for k in 1..=n {
                nf *= k as f64;
            }
            let exact = num * PI.sqrt() / (4f64.powi(n as i32) * nf);
            assert!(rel(gamma(n as f64 + 0.5), exact) < 1e-13, "Γ({n}.5)");
        }
        assert!(rel(gamma(-0.5), -2.0 * PI.sqrt()) < 1e-13);
    }

    #[test]
    fn ln_gamma_agrees_with_gamma() {
        for &x in &[0.3, 1.7, 5.5, 20.25, 100.5, 160.0] {
            assert!((ln_gamma(x) - gamma(x).ln()).abs() < 1e-11 * gamma(x).ln().abs().max(1.0));
        }
    }

    #[test]
    fn classical_constants() {
        assert!(rel(unit_ball_volume(2), PI) < 1e-14);
        assert!(rel(unit_ball_volume(3), 4.0 * PI / 3.0) < 1e-14);
        assert!(rel(weyl_constant(2), 4.0 * PI) < 1e-14);
        assert!(rel(riesz_constant(1.0, 2), 1.0 / (8.0 * PI)) < 1e-14);
        assert!(rel(riesz_constant(0.0, 2), 1.0 / (4.0 * PI)) < 1e-14);
        assert!(rel(riesz_constant(1.0, 1), 2.0 / (3.0 * PI)) < 1e-14);
        assert!(rel(riesz_constant(0.0, 1), 1.0 / PI) < 1e-14);
        assert_eq!(riesz_constant(2.5, 0), 1.0);
        // L(0,d) = C_d^{-d/2}
        for d in 1..8 {
            let c = weyl_constant(d);
            assert!(rel(riesz_constant(0.0, d), c.powf(-(d as f64) / 2.0)) < 1e-13);
        }
    }
}
