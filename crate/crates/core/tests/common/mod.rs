//! Independent oracles for the integration tests. Nothing here calls the
//! library's enumeration or closed forms.
#![allow(dead_code)]

use std::f64::consts::PI;

/// All `π² Σ n_i²/l_i² < cutoff` by plain nested loops, sorted.
pub fn brute_box(lengths: &[f64], dirichlet: bool, cutoff: f64) -> Vec<f64> {
    let first = usize::from(dirichlet);
    let max: Vec<usize> = lengths.iter().map(|l| (l * cutoff.max(0.0).sqrt() / PI) as usize + 1).collect();
    let mut out = Vec::new();
    let mut idx = vec![first; lengths.len()];
    if max.iter().any(|&m| m < first) {
        return out;
    }
    loop {
        let e: f64 = idx.iter().zip(lengths).map(|(&n, l)| PI * PI * (n * n) as f64 / (l * l)).sum();
        if e < cutoff {
            out.push(e);
        }
        // odometer increment
        let mut axis = 0;
        loop {
            if axis == idx.len() {
                out.sort_by(|a, b| a.partial_cmp(b).unwrap());
                return out;
            }
            idx[axis] += 1;
            if idx[axis] <= max[axis] {
                break;
            }
            idx[axis] = first;
            axis += 1;
        }
    }
}

/// `Σ (z − λ)_+^σ`, with `σ = 0` counting `λ < z`.
pub fn riesz(eigs: &[f64], z: f64, sigma: f64) -> f64 {
    eigs.iter()
        .filter(|&&e| e < z)
        .map(|&e| if sigma == 0.0 { 1.0 } else { (z - e).powf(sigma) })
        .sum()
}

/// `Σ_{k≥0} (R² − k²)_+^p`.
pub fn lattice_1d(r: f64, p: f64) -> f64 {
    let mut s = 0.0;
    let mut k = 0.0f64;
    while k < r {
        s += (r * r - k * k).powf(p);
        k += 1.0;
    }
    s
}

/// `J_0(x)` from its power series; accurate for `x ≤ 10`.
pub fn bessel_j0(x: f64) -> f64 {
    let q = -x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..60 {
        term *= q / ((m * m) as f64);
        sum += term;
    }
    sum
}

/// First positive zero of `J_0` by bisection on `[2, 3]`.
pub fn j0_first_zero() -> f64 {
    let (mut a, mut b) = (2.0, 3.0);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if bessel_j0(a) * bessel_j0(m) <= 0.0 {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// `Γ(γ+1) / ((4π)^{d/2} Γ(γ+1+d/2))` through statrs.
pub fn riesz_constant(gamma: f64, d: usize) -> f64 {
    use statrs::function::gamma::gamma as g;
    g(gamma + 1.0) / ((4.0 * PI).powf(d as f64 / 2.0) * g(gamma + 1.0 + d as f64 / 2.0))
}

/// Volume of the unit ball through statrs.
pub fn unit_ball(d: usize) -> f64 {
    PI.powf(d as f64 / 2.0) / statrs::function::gamma::gamma(1.0 + d as f64 / 2.0)
}

pub fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a * (b / a).powf(i as f64 / (n - 1) as f64)).collect()
}
