//! Refined and reversed Young and Hölder inequalities.
//!
//! Everything is built on the concave function `y_p(x) = (p+1)x − p − x^{p+1}`,
//! which vanishes at `x = 1`. Young's inequality for the conjugate pair
//! `(r, s)` is the statement `y_p ≤ 0` after a change of variables, and the
//! refinements come from the auxiliary functions `f_p` and `g_p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack for the `holds` verdicts.
pub const INEQ_RTOL: f64 = 1e-12;
/// Pointwise tolerance for detecting the equality case `a^s = b^r`.
pub const EQUALITY_TOL: f64 = 1e-9;
/// Tolerance on `‖a‖_s = ‖b‖_r = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// `(p+1)x − p − x^{p+1}`.
pub fn y_p(x: f64, p: f64) -> f64 {
    (p + 1.0) * x - p - x.powf(p + 1.0)
}

/// `y_p(x) + (x^{(p+1)/2} − 1)²`, which equals `2 y_{(p−1)/2}(x)`.
pub fn f_p(x: f64, p: f64) -> f64 {
    y_p(x, p) + (x.powf((p + 1.0) / 2.0) - 1.0).powi(2)
}

/// `y_p(x) + p(x − 1)²`, which equals `x · y_{p−1}(x)`.
pub fn g_p(x: f64, p: f64) -> f64 {
    y_p(x, p) + p * (x - 1.0).powi(2)
}

/// Hölder-conjugate exponents with `s ≥ 2 ≥ r > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConjugatePair {
    pub r: f64,
    pub s: f64,
}

impl ConjugatePair {
    pub fn new(r: f64, s: f64) -> Result<Self> {
        if !(r > 1.0 && r <= 2.0 && s >= 2.0 && s.is_finite()) {
            return Err(Error::arg(format!("need s >= 2 >= r > 1, got r = {r}, s = {s}")));
        }
        if (1.0 / r + 1.0 / s - 1.0).abs() > 1e-12 {
            return Err(Error::arg(format!("1/r + 1/s must be 1, got {}", 1.0 / r + 1.0 / s)));
        }
        Ok(ConjugatePair { r, s })
    }

    /// The pair with the given `s ≥ 2`.
    pub fn from_s(s: f64) -> Result<Self> {
        Self::new(s / (s - 1.0), s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YoungForm {
    Refined1,
    Reversed1,
    Refined2,
    Reversed2,
}

impl YoungForm {
    pub const ALL: [YoungForm; 4] = [YoungForm::Refined1, YoungForm::Reversed1, YoungForm::Refined2, YoungForm::Reversed2];

    /// Refined forms bound `ab − b^r/r − a^s/s` from above, reversed ones from below.
    pub fn is_upper(self) -> bool {
        matches!(self, YoungForm::Refined1 | YoungForm::Refined2)
    }
}

impl fmt::Display for YoungForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YoungForm::Refined1 => "refined1",
            YoungForm::Reversed1 => "reversed1",
            YoungForm::Refined2 => "refined2",
            YoungForm::Reversed2 => "reversed2",
        })
    }
}

impl FromStr for YoungForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        YoungForm::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::arg(format!("unknown Young form '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct YoungGap {
    pub lhs: f64,
    pub bound: f64,
    pub holds: bool,
}

impl YoungGap {
    /// Signed slack in the direction of the inequality.
    pub fn margin(&self, form: YoungForm) -> f64 {
        if form.is_upper() {
            self.bound - self.lhs
        } else {
            self.lhs - self.bound
        }
    }
}

/// `x^e` with the convention `0^e = +∞` for `e < 0`.
fn pow0(x: f64, e: f64) -> f64 {
    if x == 0.0 && e < 0.0 {
        f64::INFINITY
    } else {
        x.powf(e)
    }
}

/// `(u)² · w` where `u = 0` wins over `w = ∞`.
fn weighted_square(u: f64, w: f64) -> f64 {
    if u == 0.0 {
        0.0
    } else {
        u * u * w
    }
}

/// Evaluates `ab − b^r/r − a^s/s` against one of the four refined bounds.
pub fn young_gap(a: f64, b: f64, pair: ConjugatePair, form: YoungForm) -> Result<YoungGap> {
    if !(a >= 0.0 && b >= 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::arg(format!("a and b must be finite and nonnegative, got {a}, {b}")));
    }
    let ConjugatePair { r, s } = pair;
    let (br, as_) = (b.powf(r) / r, a.powf(s) / s);
    let lhs = a * b - br - as_;
    let bound = match form {
        YoungForm::Refined1 => -(a.powf(s / 2.0) - b.powf(r / 2.0)).powi(2) / s,
        YoungForm::Reversed1 => -(a.powf(s / 2.0) - b.powf(r / 2.0)).powi(2) / r,
        YoungForm::Refined2 => -weighted_square(a - b.powf(r - 1.0), pow0(b, 2.0 - r)) / r,
        // a = 0 < b with s > 2 gives −∞: the inequality is vacuous there
        YoungForm::Reversed2 => -weighted_square(b - a.powf(s - 1.0), pow0(a, 2.0 - s)) / s,
    };
    let tol = INEQ_RTOL * (a * b + br + as_) + f64::MIN_POSITIVE;
    let holds = if form.is_upper() { lhs <= bound + tol } else { lhs >= bound - tol };
    Ok(YoungGap { lhs, bound, holds })
}

/// A nonnegative function on a finite weighted measure space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureVector {
    weights: Vec<f64>,
    values: Vec<f64>,
}

impl MeasureVector {
    pub fn new(weights: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if weights.len() != values.len() || weights.is_empty() {
            return Err(Error::arg(format!(
                "weights and values need equal nonzero length, got {} and {}",
                weights.len(),
                values.len()
            )));
        }
        if !weights.iter().all(|w| *w > 0.0 && w.is_finite()) {
            return Err(Error::arg("weights must be positive and finite"));
        }
        if !values.iter().all(|v| *v >= 0.0 && v.is_finite()) {
            return Err(Error::arg("values must be nonnegative and finite"));
        }
        Ok(MeasureVector { weights, values })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(Σ w_i v_i^p)^{1/p}`.
    pub fn norm(&self, p: f64) -> f64 {
        self.weights.iter().zip(&self.values).map(|(w, v)| w * v.powf(p)).sum::<f64>().powf(1.0 / p)
    }

    /// The same function scaled to unit `p`-norm.
    pub fn normalized(&self, p: f64) -> Result<Self> {
        let n = self.norm(p);
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::arg("cannot normalize a zero vector"));
        }
        Ok(MeasureVector { weights: self.weights.clone(), values: self.values.iter().map(|v| v / n).collect() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HolderForm {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "1c")]
    OneC,
}

impl HolderForm {
    pub const ALL: [HolderForm; 3] = [HolderForm::OneA, HolderForm::OneB, HolderForm::OneC];
}

impl fmt::Display for HolderForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HolderForm::OneA => "1a",
            HolderForm::OneB => "1b",
            HolderForm::OneC => "1c",
        })
    }
}

impl FromStr for HolderForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HolderForm::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::arg(format!("unknown Hölder form '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderGap {
    pub lower: f64,
    /// `∫ab`.
    pub middle: f64,
    pub upper: f64,
    pub holds: bool,
    /// Whether `a^s = b^r` pointwise, the case where everything collapses to 1.
    pub equality: bool,
}

/// Two-sided bounds on `∫ab` for `‖a‖_s = ‖b‖_r = 1`.
pub fn holder_gaps(a: &MeasureVector, b: &MeasureVector, pair: ConjugatePair, form: HolderForm) -> Result<HolderGap> {
    if a.weights != b.weights {
        return Err(Error::arg("a and b must live on the same measure space"));
    }
    let ConjugatePair { r, s } = pair;
    let (na, nb) = (a.norm(s), b.norm(r));
    if (na - 1.0).abs() > NORMALIZATION_TOL || (nb - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::Precondition(format!(
            "inputs must satisfy ||a||_s = ||b||_r = 1, got {na} and {nb}"
        )));
    }
    let triples = || a.weights.iter().zip(&a.values).zip(&b.values).map(|((w, x), y)| (*w, *x, *y));
    let middle: f64 = triples().map(|(w, x, y)| w * x * y).sum();
    let d: f64 = triples().map(|(w, x, y)| w * (x.powf(s / 2.0) - y.powf(r / 2.0)).powi(2)).sum();
    let (lower, upper) = match form {
        HolderForm::OneA => (1.0 - d / r, 1.0 - d / s),
        HolderForm::OneB => {
            let base = (1.0 - d / 2.0).max(0.0);
            (base.powf(2.0 / r), base.powf(2.0 / s))
        }
        HolderForm::OneC => {
            let lo: f64 = triples().map(|(w, x, y)| w * weighted_square(y - x.powf(s - 1.0), pow0(x, 2.0 - s))).sum();
            let up: f64 = triples().map(|(w, x, y)| w * weighted_square(x - y.powf(r - 1.0), pow0(y, 2.0 - r))).sum();
            (1.0 - lo / s, 1.0 - up / r)
        }
    };
    let tol = INEQ_RTOL;
    let holds = lower <= middle + tol && middle <= upper + tol;
    let equality = triples().all(|(_, x, y)| (x.powf(s) - y.powf(r)).abs() <= EQUALITY_TOL);
    Ok(HolderGap { lower, middle, upper, holds, equality })
}
