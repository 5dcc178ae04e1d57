//! One-dimensional lattice Riesz means `Σ_{k≥0} (R² − k²)_+^p` and their
//! polynomial envelopes.
//!
//! These are the building blocks of the rectangle bounds: the Neumann
//! spectrum of an interval of length `π` is `{k²}`, so the sum above is the
//! Riesz mean of order `p` at `z = R²`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// Largest β accepted by [`riesz1_beta_bounds`].
pub const MAX_BETA: f64 = 150.0;

/// Relative slack used by [`Riesz1DBounds::holds`]. The lower envelope is
/// attained for every `R < 1` and every integer `R`, so comparisons there
/// are decided by rounding.
pub const ENVELOPE_RTOL: f64 = 1e-12;

/// Sawtooth `ψ(t) = t − ⌊t⌋ − 1/2`.
pub fn sawtooth(t: f64) -> f64 {
    t - t.floor() - 0.5
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::arg(format!("R must be positive and finite, got {r}")))
    }
}

/// `Σ_{k≥0} (R² − k²)_+^p` by direct summation; `k` runs to `⌈R⌉`.
pub fn riesz1_direct(r: f64, p: f64) -> f64 {
    let r2 = r * r;
    let kmax = r.ceil() as u64;
    let mut acc = 0.0;
    for k in 0..=kmax {
        let t = r2 - (k * k) as f64;
        if t > 0.0 {
            acc += if p == 1.0 { t } else { t.powf(p) };
        }
    }
    acc
}

/// Closed form of `Σ_{k≥0} (R² − k²)_+` through the sawtooth.
pub fn riesz1_exact(r: f64) -> Result<f64> {
    check_radius(r)?;
    let psi = sawtooth(r);
    Ok(2.0 * r.powi(3) / 3.0 + r * r / 2.0 - r / 6.0 + (0.25 - psi * psi) * (r - psi / 3.0))
}

/// `F(R) = (1/4 − ψ²)(1 − ψ/(3R))`, the sawtooth excess over the cubic part
/// divided by `R`. Its maximum 25/96 is reached at `R = 3/8`.
pub fn sawtooth_excess(r: f64) -> Result<f64> {
    check_radius(r)?;
    let psi = sawtooth(r);
    Ok((0.25 - psi * psi) * (1.0 - psi / (3.0 * r)))
}

/// Lower/upper envelope around an exact one-dimensional Riesz mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Riesz1DBounds {
    /// `None` where only an upper envelope exists (order 1/2).
    pub lower: Option<f64>,
    pub upper: f64,
    pub exact: f64,
    pub r: f64,
    /// Riesz order `p` of the sum.
    pub power: f64,
}

impl Riesz1DBounds {
    /// Smallest signed gap; nonnegative when the envelope contains the exact value.
    pub fn margin(&self) -> f64 {
        let up = self.upper - self.exact;
        match self.lower {
            Some(lo) => up.min(self.exact - lo),
            None => up,
        }
    }

    pub fn holds(&self) -> bool {
        let scale = self.exact.abs().max(self.upper.abs()).max(f64::MIN_POSITIVE);
        self.margin() >= -ENVELOPE_RTOL * scale
    }
}

/// Envelope `max(2R³/3 + R²/2 − R/6, R²) ≤ Σ(R²−k²)_+ ≤ 2R³/3 + R²/2 + 3R/32`.
pub fn riesz1_bounds(r: f64) -> Result<Riesz1DBounds> {
    let exact = riesz1_exact(r)?;
    let cubic = 2.0 * r.powi(3) / 3.0 + r * r / 2.0;
    Ok(Riesz1DBounds {
        lower: Some((cubic - r / 6.0).max(r * r)),
        upper: cubic + 3.0 * r / 32.0,
        exact,
        r,
        power: 1.0,
    })
}

struct BetaCoefficients {
    leading: f64,
    lower_third: f64,
    upper_third: f64,
}

fn beta_coefficients(beta: f64) -> BetaCoefficients {
    // ratios of Γ through logs so large β stays finite
    let sqrt_pi = PI.sqrt();
    let g1 = (ln_gamma(beta + 2.0) - ln_gamma(beta + 2.5)).exp();
    let g2 = (ln_gamma(beta + 2.0) - ln_gamma(beta + 1.5)).exp();
    BetaCoefficients {
        leading: sqrt_pi * g1 / 2.0,
        lower_third: sqrt_pi * g2 / 12.0,
        upper_third: 3.0 * sqrt_pi * g2 / 64.0,
    }
}

/// Envelope for `Σ_{k≥0}(R² − k²)_+^{β+1}`, exact value by direct summation.
pub fn riesz1_beta_bounds(r: f64, beta: f64) -> Result<Riesz1DBounds> {
    check_radius(r)?;
    if !(beta > 0.0) {
        return Err(Error::arg(format!("beta must be positive, got {beta}")));
    }
    if beta > MAX_BETA {
        return Err(Error::Range(format!("beta = {beta} exceeds {MAX_BETA}; the gamma factors overflow")));
    }
    let c = beta_coefficients(beta);
    let head = c.leading * r.powf(2.0 * beta + 3.0) + r.powf(2.0 * beta + 2.0) / 2.0;
    let tail = r.powf(2.0 * beta + 1.0);
    Ok(Riesz1DBounds {
        lower: Some((head - c.lower_third * tail).max(r.powf(2.0 * beta + 2.0))),
        upper: head + c.upper_third * tail,
        exact: riesz1_direct(r, beta + 1.0),
        r,
        power: beta + 1.0,
    })
}

/// Upper envelope `πR²/4 + R/2 + √(2R)/2` for `Σ_{k≥0}(R² − k²)_+^{1/2}`.
pub fn riesz1_sqrt_upper(r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(PI * r * r / 4.0 + r / 2.0 + (2.0 * r).sqrt() / 2.0)
}

/// Riesz order for the Dirichlet (k ≥ 1) variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RieszPower {
    One,
    Beta(f64),
    Half,
}

/// Same envelopes for sums over `k ≥ 1`: the `k = 0` term (`R²`, `R^{2β+2}`
/// or `R`) is removed from bounds and exact value alike.
pub fn riesz1_dirichlet_variants(r: f64, power: RieszPower) -> Result<Riesz1DBounds> {
    let (base, zero_term) = match power {
        RieszPower::One => (riesz1_bounds(r)?, r * r),
        RieszPower::Beta(beta) => (riesz1_beta_bounds(r, beta)?, r.powf(2.0 * beta + 2.0)),
        RieszPower::Half => {
            let upper = riesz1_sqrt_upper(r)?;
            let b = Riesz1DBounds { lower: None, upper, exact: riesz1_direct(r, 0.5), r, power: 0.5 };
            (b, r)
        }
    };
    Ok(Riesz1DBounds {
        lower: base.lower.map(|lo| lo - zero_term),
        upper: base.upper - zero_term,
        exact: base.exact - zero_term,
        ..base
    })
}
