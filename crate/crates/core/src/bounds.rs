//! Closed-form eigenvalue-mean bounds with per-term breakdowns.
//!
//! Every evaluator here is a pure function of `z` (or `k`), the dimension and
//! a few geometric numbers. None of them looks at a spectrum; the checks that
//! compare a bound with an exact or numeric spectrum live in the verification suites
//! and in [`dirichlet_box_domination`] / [`rectangle_riesz_bounds`], which are
//! explicitly verification routines.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::VerificationRecord;
use crate::special::{riesz_constant, unit_ball_volume, weyl_constant};
use crate::spectra_exact::{enumerate_box, BoundaryCondition, ExactSpectrum};

/// Tolerance on `S_k ≤ 1` before it is reported as a violation.
pub const KROEGER_TOL: f64 = 1e-12;

/// `B_d`, `C_d` and access to `L(γ, d)` for one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalConstants {
    pub d: usize,
    pub b_d: f64,
    pub c_d: f64,
}

impl ClassicalConstants {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::arg("dimension must be at least 1"));
        }
        Ok(ClassicalConstants { d, b_d: unit_ball_volume(d), c_d: weyl_constant(d) })
    }

    /// `L(γ, d')` for any `d'`; the dimension stored in `self` is not used.
    pub fn l(gamma: f64, d: usize) -> f64 {
        riesz_constant(gamma, d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

/// A named bound with its terms; `total` is always the sum of the terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEvaluation {
    pub name: String,
    pub side: Side,
    pub terms: Vec<(String, f64)>,
    pub total: f64,
    pub validity: Option<String>,
}

impl BoundEvaluation {
    pub fn new(name: &str, side: Side, terms: Vec<(&str, f64)>) -> Self {
        let terms: Vec<(String, f64)> = terms.into_iter().map(|(l, v)| (l.to_string(), v)).collect();
        let total = terms.iter().map(|(_, v)| v).sum();
        BoundEvaluation { name: name.to_string(), side, terms, total, validity: None }
    }

    pub fn with_validity(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.validity = Some(match self.validity.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    fn note_if(self, cond: bool, note: &str) -> Self {
        if cond {
            self.with_validity(note)
        } else {
            self
        }
    }

    pub fn term(&self, label: &str) -> Option<f64> {
        self.terms.iter().find(|(l, _)| l == label).map(|(_, v)| *v)
    }
}

fn check_z(z: f64) -> Result<()> {
    if z >= 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::arg(format!("z must be finite and nonnegative, got {z}")))
    }
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::arg(format!("{name} must be positive and finite, got {x}")))
    }
}

fn check_dim(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::arg("dimension must be at least 1"))
    } else {
        Ok(())
    }
}

const NOTE_DIM_ONE: &str = "stated for d >= 2; evaluated formally at d = 1";

/// What [`weyl_reference`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylMode {
    /// `L(0,d)|Ω| z^{d/2}`, the leading term of the counting function.
    Counting,
    /// `C_d (j/|Ω|)^{2/d}`, the leading term of the j-th eigenvalue.
    Eigenvalue,
}

pub fn weyl_reference(x: f64, mode: WeylMode, d: usize, volume: f64) -> Result<f64> {
    check_dim(d)?;
    check_positive("volume", volume)?;
    check_z(x)?;
    let df = d as f64;
    Ok(match mode {
        WeylMode::Counting => riesz_constant(0.0, d) * volume * x.powf(df / 2.0),
        WeylMode::Eigenvalue => weyl_constant(d) * (x / volume).powf(2.0 / df),
    })
}

/// Neumann Pólya reference `C_d |Ω|^{-2/d} (j−1)^{2/d}`, an upper curve for `μ_j`.
pub fn polya_neumann_reference(j: usize, d: usize, volume: f64) -> Result<f64> {
    if j == 0 {
        return Err(Error::arg("eigenvalue index is 1-based"));
    }
    weyl_reference((j - 1) as f64, WeylMode::Eigenvalue, d, volume)
}

/// Dirichlet Pólya reference `C_d |Ω|^{-2/d} j^{2/d}`, a lower curve for `λ_j`.
pub fn polya_dirichlet_reference(j: usize, d: usize, volume: f64) -> Result<f64> {
    if j == 0 {
        return Err(Error::arg("eigenvalue index is 1-based"));
    }
    weyl_reference(j as f64, WeylMode::Eigenvalue, d, volume)
}

fn semiclassical_term(z: f64, d: usize, volume: f64) -> f64 {
    riesz_constant(1.0, d) * volume * z.powf(d as f64 / 2.0 + 1.0)
}

/// `L(1,d)|Ω|z^{1+d/2}`, an upper bound for the Dirichlet `R_1`.
pub fn berezin_upper(z: f64, d: usize, volume: f64) -> Result<BoundEvaluation> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    Ok(BoundEvaluation::new("berezin", Side::Upper, vec![("semiclassical", semiclassical_term(z, d, volume))]))
}

/// Same expression as [`berezin_upper`], as a lower bound for the Neumann `R_1`.
pub fn laptev_lower(z: f64, d: usize, volume: f64) -> Result<BoundEvaluation> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    Ok(BoundEvaluation::new("laptev", Side::Lower, vec![("semiclassical", semiclassical_term(z, d, volume))]))
}

/// Normalized eigenvalue average after `k` Neumann eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KroegerState {
    pub k: usize,
    pub d: usize,
    pub volume: f64,
    /// `C_d (k/|Ω|)^{2/d}`.
    pub m_k: f64,
    /// `((d+2)/d) (1/k) Σ_{j≤k} μ_j / m_k`.
    pub s_k: f64,
}

impl KroegerState {
    /// Builds the state from the sum of the first `k` eigenvalues.
    pub fn from_sum(eigenvalue_sum: f64, k: usize, d: usize, volume: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::arg("k must be at least 1"));
        }
        if d < 2 {
            return Err(Error::arg("the eigenvalue-average bound needs d >= 2"));
        }
        check_positive("volume", volume)?;
        let df = d as f64;
        let m_k = weyl_constant(d) * (k as f64 / volume).powf(2.0 / df);
        let s_k = (df + 2.0) / df * eigenvalue_sum / k as f64 / m_k;
        Ok(KroegerState { k, d, volume, m_k, s_k })
    }

    pub fn is_violation(&self) -> bool {
        self.s_k > 1.0 + KROEGER_TOL
    }
}

/// State after `k` eigenvalues of a Neumann spectrum.
pub fn kroeger_state(spectrum: &ExactSpectrum, k: usize) -> Result<KroegerState> {
    if spectrum.boundary_condition() != BoundaryCondition::Neumann {
        return Err(Error::arg("eigenvalue averages are bounded here for Neumann spectra only"));
    }
    let domain = spectrum.domain();
    KroegerState::from_sum(spectrum.eigenvalue_sum(k)?, k, domain.dimension(), domain.volume())
}

/// Interval `m_k(1 ± √(1 − S_k))` that must contain `μ_{k+1}`.
pub fn eigenvalue_bracket(state: &KroegerState) -> Result<(f64, f64)> {
    if state.is_violation() {
        return Err(Error::InequalityViolation {
            name: format!("S_k <= 1 at k = {}", state.k),
            margin: 1.0 - state.s_k,
        });
    }
    let root = (1.0 - state.s_k).max(0.0).sqrt();
    Ok((state.m_k * (1.0 - root), state.m_k * (1.0 + root)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoTermVariant {
    Plain,
    PositivePart,
}

fn two_term(
    name: &str,
    z: f64,
    d: usize,
    volume: f64,
    width: f64,
    c_boundary: f64,
    c_curvature: f64,
    variant: TwoTermVariant,
) -> Result<BoundEvaluation> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    check_positive("width", width)?;
    let df = d as f64;
    let leading = semiclassical_term(z, d, volume);
    let boundary = c_boundary * riesz_constant(1.0, d - 1) * volume / width * z.powf((df + 1.0) / 2.0);
    let curvature = -c_curvature * (2.0 * PI).powf(2.0 - df) * unit_ball_volume(d) * volume / (width * width)
        * z.powf(df / 2.0);
    let mut terms = vec![("semiclassical", leading), ("boundary", boundary), ("width_correction", curvature)];
    if variant == TwoTermVariant::PositivePart {
        terms.push(("clamp", (-(boundary + curvature)).max(0.0)));
    }
    Ok(BoundEvaluation::new(name, Side::Lower, terms).note_if(d < 2, NOTE_DIM_ONE))
}

/// Two-term lower bound for the Neumann `R_1` in terms of a directional width.
pub fn twoterm_lower(z: f64, d: usize, volume: f64, width: f64, variant: TwoTermVariant) -> Result<BoundEvaluation> {
    let name = match variant {
        TwoTermVariant::Plain => "twoterm",
        TwoTermVariant::PositivePart => "twoterm_positive_part",
    };
    two_term(name, z, d, volume, width, 0.25, 1.0 / 96.0, variant)
}

/// Sharper two-term bound for products `Ω' × [0, δ]`, `width = δ`.
pub fn product_twoterm_lower(z: f64, d: usize, volume: f64, width: f64) -> Result<BoundEvaluation> {
    two_term("product_twoterm", z, d, volume, width, 0.5, 1.0 / 24.0, TwoTermVariant::Plain)
}

/// Two-term bound for `R_γ`, `γ ≥ 1`.
pub fn higher_riesz_lower(z: f64, gamma: f64, d: usize, volume: f64, width: f64) -> Result<BoundEvaluation> {
    if d < 2 {
        return Err(Error::arg("the higher Riesz-mean bound uses L(γ, d−2) and needs d >= 2"));
    }
    if !(gamma >= 1.0) || !gamma.is_finite() {
        return Err(Error::arg(format!("gamma must be at least 1, got {gamma}")));
    }
    check_z(z)?;
    check_positive("volume", volume)?;
    check_positive("width", width)?;
    let e = d as f64 / 2.0 + gamma;
    let terms = vec![
        ("semiclassical", riesz_constant(gamma, d) * volume * z.powf(e)),
        ("boundary", riesz_constant(gamma, d - 1) * volume / (4.0 * width) * z.powf(e - 0.5)),
        ("width_correction", -(PI / 96.0) * riesz_constant(gamma, d - 2) * volume / (width * width) * z.powf(e - 1.0)),
    ];
    Ok(BoundEvaluation::new("higher_riesz", Side::Lower, terms))
}

/// Lower bound for the Neumann counting function on `Ω₁ × Ω₂` with `Ω₁`
/// satisfying the Pólya inequality; `width` is a width of `Ω₂`.
pub fn polya_counting_lower(z: f64, d: usize, volume: f64, width: f64) -> Result<BoundEvaluation> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    check_positive("width", width)?;
    let df = d as f64;
    let weyl = volume * riesz_constant(0.0, d) * z.powf(df / 2.0);
    let plus = riesz_constant(0.0, d + 1) / ((4.0 * PI).sqrt() * 4.0 * width) * z.powf((df - 1.0) / 2.0);
    let minus = riesz_constant(0.0, d + 2) / (384.0 * width * width) * z.powf(df / 2.0 - 1.0);
    let correction = volume * (plus - minus).max(0.0);
    Ok(BoundEvaluation::new("corrected_polya", Side::Lower, vec![("constant", 1.0), ("weyl", weyl), ("correction", correction)])
        .with_validity("the constant term exceeds N(z) = 1 for 0 < z <= mu_2; meaningful above the second eigenvalue")
        .note_if(d < 2, NOTE_DIM_ONE))
}

/// Two-term bound without the negative width term.
pub fn weak_twoterm_lower(z: f64, d: usize, volume: f64, width: f64) -> Result<BoundEvaluation> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    check_positive("width", width)?;
    let df = d as f64;
    let terms = vec![
        ("semiclassical", semiclassical_term(z, d, volume)),
        ("boundary", riesz_constant(1.0, d - 1) * volume / (6.0 * width) * z.powf((df + 1.0) / 2.0)),
    ];
    Ok(BoundEvaluation::new("weak_twoterm", Side::Lower, terms).note_if(d < 2, NOTE_DIM_ONE))
}

/// Planar bound through the perimeter of the convex hull.
pub fn hull_isoperimetric_lower_2d(z: f64, volume: f64, hull_perimeter: f64) -> Result<BoundEvaluation> {
    check_z(z)?;
    check_positive("volume", volume)?;
    check_positive("hull perimeter", hull_perimeter)?;
    let terms = vec![
        ("semiclassical", semiclassical_term(z, 2, volume)),
        ("isoperimetric", riesz_constant(1.0, 1) * PI * volume / (6.0 * hull_perimeter) * z.powf(1.5)),
    ];
    Ok(BoundEvaluation::new("hull_isoperimetric", Side::Lower, terms))
}

fn check_rectangle(l1: f64, l2: f64) -> Result<()> {
    check_positive("l1", l1)?;
    check_positive("l2", l2)?;
    if l1 > l2 {
        return Err(Error::arg(format!("rectangle sides must satisfy l1 <= l2, got {l1} > {l2}")));
    }
    Ok(())
}

/// Upper and lower envelopes of the rectangle remainder, pure in `(l1, l2, z)`.
pub fn rectangle_envelopes(l1: f64, l2: f64, z: f64, bc: BoundaryCondition) -> Result<(BoundEvaluation, BoundEvaluation)> {
    check_rectangle(l1, l2)?;
    check_z(z)?;
    let aspect = l2 / l1 + l1 / l2;
    let sq = z.sqrt();
    let qr = z.powf(0.25);
    let corner = PI.powf(1.5) * 2f64.sqrt() / (l2 * l1.sqrt());
    let upper_linear = 3.0 * PI / 128.0 * (aspect + 32.0 / (3.0 * PI)) * z;
    let lower_linear = -PI / 24.0 * (aspect - 6.0 / PI) * z;
    let (upper_half, lower_half) = match bc {
        BoundaryCondition::Neumann => (
            3.0 * PI / 64.0 * (1.0 / l1 + 1.0 / l2) * sq,
            -PI / 12.0 * (1.0 / l1 + 1.0 / l2) * sq,
        ),
        BoundaryCondition::Dirichlet => (
            PI / 12.0 * (1.0 / l2 - 9.0 / (16.0 * l1)) * sq,
            PI / 12.0 * (1.0 / l1 - 9.0 / (16.0 * l2)) * sq,
        ),
    };
    let upper = BoundEvaluation::new(
        "rectangle_upper",
        Side::Upper,
        vec![("linear", upper_linear), ("sqrt", upper_half), ("quartic_root", 3.0 * corner / 64.0 * qr)],
    );
    let lower = BoundEvaluation::new(
        "rectangle_lower",
        Side::Lower,
        vec![("linear", lower_linear), ("sqrt", lower_half), ("quartic_root", -corner / 12.0 * qr)],
    );
    Ok((lower, upper))
}

/// `R_1 − |R|z²/(8π) ∓ |∂R|z^{3/2}/(6π)`, minus for Neumann and plus for Dirichlet.
pub fn rectangle_center(r1: f64, l1: f64, l2: f64, z: f64, bc: BoundaryCondition) -> f64 {
    let area = l1 * l2;
    let perimeter = 2.0 * (l1 + l2);
    let boundary = perimeter * z.powf(1.5) / (6.0 * PI);
    let sign = match bc {
        BoundaryCondition::Neumann => -1.0,
        BoundaryCondition::Dirichlet => 1.0,
    };
    r1 - area * z * z / (8.0 * PI) + sign * boundary
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RectangleBounds {
    pub lower: BoundEvaluation,
    pub upper: BoundEvaluation,
    pub center: f64,
}

impl RectangleBounds {
    /// Signed distance to the nearer envelope; nonnegative inside.
    pub fn margin(&self) -> f64 {
        (self.center - self.lower.total).min(self.upper.total - self.center)
    }
}

/// Envelopes plus the remainder of the exact Riesz mean of `[0,l1]×[0,l2]`.
pub fn rectangle_riesz_bounds(l1: f64, l2: f64, z: f64, bc: BoundaryCondition) -> Result<RectangleBounds> {
    let (lower, upper) = rectangle_envelopes(l1, l2, z, bc)?;
    let spectrum = enumerate_box(&[l1, l2], bc, z)?;
    let r1 = spectrum.riesz_mean(z, 1.0)?;
    Ok(RectangleBounds { lower, upper, center: rectangle_center(r1, l1, l2, z, bc) })
}

/// Anything that can report a Dirichlet Riesz mean together with the
/// geometry needed for the box-domination check.
pub trait DirichletData {
    fn riesz1(&self, z: f64) -> Result<f64>;
    fn volume(&self) -> f64;
    /// Extent along each coordinate axis.
    fn axis_widths(&self) -> Vec<f64>;
    /// Absolute uncertainty of `riesz1(z)`; zero for exact spectra.
    fn riesz1_uncertainty(&self, _z: f64) -> f64 {
        0.0
    }
}

impl DirichletData for ExactSpectrum {
    fn riesz1(&self, z: f64) -> Result<f64> {
        self.riesz_mean(z, 1.0)
    }
    fn volume(&self) -> f64 {
        self.domain().volume()
    }
    fn axis_widths(&self) -> Vec<f64> {
        self.domain().axis_widths()
    }
}

/// Relative floor on the domination tolerance, covering summation rounding.
const DOMINATION_RTOL: f64 = 1e-12;

/// Checks `(|Ω|/|B|) R_1^B(z) ≥ R_1^Ω(z)` for a box `B` whose sides are at
/// least twice the widths of `Ω`. For numeric data the record's tolerance is
/// three times the reported uncertainty.
pub fn dirichlet_box_domination(omega: &dyn DirichletData, box_lengths: &[f64], z: f64) -> Result<VerificationRecord> {
    check_z(z)?;
    let widths = omega.axis_widths();
    if widths.len() != box_lengths.len() {
        return Err(Error::arg(format!(
            "box has dimension {} but the domain has dimension {}",
            box_lengths.len(),
            widths.len()
        )));
    }
    for (axis, (&l, &w)) in box_lengths.iter().zip(&widths).enumerate() {
        check_positive("box side", l)?;
        if l < 2.0 * w * (1.0 - 1e-12) {
            return Err(Error::Precondition(format!(
                "box side {l} along axis {axis} is less than twice the domain width {w}"
            )));
        }
    }
    let box_spectrum = enumerate_box(box_lengths, BoundaryCondition::Dirichlet, z)?;
    let box_volume: f64 = box_lengths.iter().product();
    let bound = omega.volume() / box_volume * box_spectrum.riesz_mean(z, 1.0)?;
    let oracle = omega.riesz1(z)?;
    let tolerance = 3.0 * omega.riesz1_uncertainty(z) + DOMINATION_RTOL * bound.abs().max(1.0);
    Ok(VerificationRecord::upper(
        "dirichlet_box_domination",
        format!("box={box_lengths:?}"),
        z,
        bound,
        oracle,
        tolerance,
    ))
}

/// Upper bound for the Dirichlet `R_1` of a planar `Ω` from an enclosing box.
///
/// The lower-order rectangle terms are scaled by `|Ω|/|B|`, the factor that
/// comes out of the domination step; for `|B| = 1` this is the same as
/// multiplying them by `|Ω|`.
pub fn dirichlet_2d_explicit_upper(z: f64, omega_volume: f64, l1: f64, l2: f64) -> Result<BoundEvaluation> {
    check_z(z)?;
    check_positive("volume", omega_volume)?;
    let (short, long) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
    let (_, envelope) = rectangle_envelopes(short, long, z, BoundaryCondition::Dirichlet)?;
    let box_volume = short * long;
    let box_perimeter = 2.0 * (short + long);
    let ratio = omega_volume / box_volume;
    let terms = vec![
        ("semiclassical", semiclassical_term(z, 2, omega_volume)),
        ("boundary", -0.25 * riesz_constant(1.0, 1) * box_perimeter * ratio * z.powf(1.5)),
        ("lower_order", envelope.total * ratio),
    ];
    Ok(BoundEvaluation::new("dirichlet_explicit", Side::Upper, terms))
}

/// Two-term asymptotic reference curves `(N(z), R_1(z))`; not bounds.
pub fn asymptotic_reference(
    z: f64,
    d: usize,
    volume: f64,
    boundary_measure: f64,
    bc: BoundaryCondition,
) -> Result<(f64, f64)> {
    check_dim(d)?;
    check_z(z)?;
    check_positive("volume", volume)?;
    let df = d as f64;
    let sign = match bc {
        BoundaryCondition::Neumann => 1.0,
        BoundaryCondition::Dirichlet => -1.0,
    };
    let counting = riesz_constant(0.0, d) * volume * z.powf(df / 2.0)
        + sign * 0.25 * riesz_constant(0.0, d - 1) * boundary_measure * z.powf((df - 1.0) / 2.0);
    let riesz1 = riesz_constant(1.0, d) * volume * z.powf(df / 2.0 + 1.0)
        + sign * 0.25 * riesz_constant(1.0, d - 1) * boundary_measure * z.powf((df + 1.0) / 2.0);
    Ok((counting, riesz1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Domain;
    use BoundaryCondition::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn constants() {
        let c = ClassicalConstants::new(2).unwrap();
        assert!(close(c.b_d, PI, 1e-15));
        assert!(close(c.c_d, 4.0 * PI, 1e-15));
        assert!(close(ClassicalConstants::l(1.0, 2), 1.0 / (8.0 * PI), 1e-15));
        assert!(ClassicalConstants::new(0).is_err());
    }

    #[test]
    fn weyl_examples() {
        assert!(close(weyl_reference(4.0, WeylMode::Eigenvalue, 2, 1.0).unwrap(), 16.0 * PI, 1e-14));
        assert!(close(weyl_reference(100.0, WeylMode::Counting, 2, 1.0).unwrap(), 25.0 / PI, 1e-14));
        assert_eq!(weyl_reference(0.0, WeylMode::Counting, 2, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn berezin_and_laptev() {
        let b = berezin_upper(100.0, 2, 1.0).unwrap();
        assert!(close(b.total, 1e4 / (8.0 * PI), 1e-14));
        assert_eq!(b.side, Side::Upper);
        let l = laptev_lower(100.0, 2, 1.0).unwrap();
        assert_eq!(l.total, b.total);
        assert_eq!(berezin_upper(0.0, 2, 1.0).unwrap().total, 0.0);
        assert!(berezin_upper(-1.0, 2, 1.0).is_err());
    }

    #[test]
    fn kroeger_examples() {
        let s = enumerate_box(&[1.0, 1.0], Neumann, 200.0).unwrap();
        let k1 = kroeger_state(&s, 1).unwrap();
        assert!(close(k1.m_k, 4.0 * PI, 1e-14));
        assert_eq!(k1.s_k, 0.0);
        let (lo, hi) = eigenvalue_bracket(&k1).unwrap();
        assert_eq!(lo, 0.0);
        assert!(close(hi, 8.0 * PI, 1e-14));

        let k2 = kroeger_state(&s, 2).unwrap();
        assert!(close(k2.m_k, 8.0 * PI, 1e-14));
        assert!(close(k2.s_k, PI / 8.0, 1e-14));
        let (lo, hi) = eigenvalue_bracket(&k2).unwrap();
        assert!(close(lo, 5.545, 1e-3) && close(hi, 44.72, 1e-3));
        assert!(lo <= PI * PI && PI * PI <= hi);
    }

    #[test]
    fn bracket_degenerates_and_rejects() {
        let st = KroegerState { k: 3, d: 2, volume: 1.0, m_k: 5.0, s_k: 1.0 };
        assert_eq!(eigenvalue_bracket(&st).unwrap(), (5.0, 5.0));
        let bad = KroegerState { s_k: 1.1, ..st };
        assert!(matches!(eigenvalue_bracket(&bad), Err(Error::InequalityViolation { .. })));
        let d = enumerate_box(&[1.0, 1.0], Dirichlet, 100.0).unwrap();
        assert!(kroeger_state(&d, 1).is_err());
    }

    #[test]
    fn twoterm_example_terms() {
        let b = twoterm_lower(100.0, 2, 1.0, 1.0, TwoTermVariant::Plain).unwrap();
        assert!(close(b.term("semiclassical").unwrap(), 397.887_357_729_738, 1e-12));
        assert!(close(b.term("boundary").unwrap(), 53.051_647_697_298_45, 1e-12));
        assert!(close(b.term("width_correction").unwrap(), -3.272_492_347_489_368, 1e-12));
        assert!(close(b.total, 447.666_513_079_547, 1e-12));
        assert_eq!(twoterm_lower(0.0, 2, 1.0, 1.0, TwoTermVariant::Plain).unwrap().total, 0.0);
        assert!(b.validity.is_none());
        let one_d = twoterm_lower(10.0, 1, 1.0, 1.0, TwoTermVariant::Plain).unwrap();
        assert!(one_d.validity.is_some());
    }

    #[test]
    fn positive_part_clamps_only_when_negative() {
        let p = twoterm_lower(100.0, 2, 1.0, 1.0, TwoTermVariant::PositivePart).unwrap();
        assert_eq!(p.term("clamp").unwrap(), 0.0);
        // tiny z: the width correction dominates the boundary term
        let z = 1e-4;
        let plain = twoterm_lower(z, 2, 1.0, 1.0, TwoTermVariant::Plain).unwrap();
        let pos = twoterm_lower(z, 2, 1.0, 1.0, TwoTermVariant::PositivePart).unwrap();
        assert!(pos.total > plain.total);
        assert!(close(pos.total, pos.term("semiclassical").unwrap(), 1e-15));
    }

    #[test]
    fn product_and_weak_examples() {
        let p = product_twoterm_lower(100.0, 2, 1.0, 1.0).unwrap();
        assert!(close(p.total, 490.900, 1e-5));
        let w = weak_twoterm_lower(100.0, 2, 1.0, 1.0).unwrap();
        assert!(close(w.total, 433.255, 1e-5));
        let h = hull_isoperimetric_lower_2d(100.0, 1.0, 4.0).unwrap();
        assert!(close(h.total, 425.665, 1e-5));
        let w = weak_twoterm_lower(100.0, 2, 1.0, 4.0 / PI).unwrap();
        assert!(close(h.total, w.total, 1e-14));
    }

    #[test]
    fn higher_riesz_reduces_to_twoterm() {
        for &z in &[1.0, 37.0, 1000.0] {
            let a = higher_riesz_lower(z, 1.0, 2, 1.3, 0.7).unwrap();
            let b = twoterm_lower(z, 2, 1.3, 0.7, TwoTermVariant::Plain).unwrap();
            assert!(close(a.total, b.total, 1e-13));
        }
        assert!(higher_riesz_lower(1.0, 0.5, 2, 1.0, 1.0).is_err());
        assert!(higher_riesz_lower(1.0, 2.0, 1, 1.0, 1.0).is_err());
    }

    #[test]
    fn corrected_polya_examples() {
        let b = polya_counting_lower(0.0, 3, 0.5, 0.5).unwrap();
        assert_eq!(b.total, 1.0);
        assert!(b.validity.is_some());
        // once the correction is negative the bound is 1 + Weyl term
        let z = 1e-5;
        let b = polya_counting_lower(z, 3, 0.5, 0.5).unwrap();
        assert_eq!(b.term("correction").unwrap(), 0.0);
        assert!(close(b.total, 1.0 + 0.5 * riesz_constant(0.0, 3) * z.powf(1.5), 1e-15));
    }

    #[test]
    fn rectangle_spot_value() {
        let r = rectangle_riesz_bounds(1.0, 1.0, 100.0, Neumann).unwrap();
        assert!(close(r.center, 18.772_952_206_991_476, 1e-9));
        assert!(close(r.lower.total, -8.4911, 1e-4));
        assert!(close(r.upper.total, 43.8388, 1e-4));
        assert!(r.margin() > 0.0);
        let r0 = rectangle_riesz_bounds(1.0, 1.0, 0.0, Neumann).unwrap();
        assert_eq!((r0.center, r0.lower.total, r0.upper.total), (0.0, 0.0, 0.0));
        assert!(rectangle_riesz_bounds(2.0, 1.0, 10.0, Neumann).is_err());
        let d = rectangle_riesz_bounds(1.0, 2.0, 200.0, Dirichlet).unwrap();
        assert!(d.margin() >= 0.0);
    }

    #[test]
    fn domination_on_sub_rectangle() {
        let omega = enumerate_box(&[0.4, 0.3], Dirichlet, 500.0).unwrap();
        let rec = dirichlet_box_domination(&omega, &[1.0, 1.0], 500.0).unwrap();
        assert!(rec.passed, "{rec:?}");
        assert!(rec.margin > 0.0);
        // below the first eigenvalue of Ω the right side vanishes
        let rec = dirichlet_box_domination(&omega, &[1.0, 1.0], 50.0).unwrap();
        assert_eq!(rec.oracle, 0.0);
        let big = enumerate_box(&[0.6, 0.3], Dirichlet, 500.0).unwrap();
        assert!(matches!(dirichlet_box_domination(&big, &[1.0, 1.0], 100.0), Err(Error::Precondition(_))));
        assert!(dirichlet_box_domination(&omega, &[1.0], 100.0).is_err());
    }

    #[test]
    fn explicit_upper_dominates_sub_rectangle() {
        let omega = enumerate_box(&[0.4, 0.3], Dirichlet, 500.0).unwrap();
        let ub = dirichlet_2d_explicit_upper(500.0, 0.12, 1.0, 1.0).unwrap();
        assert!(ub.total >= omega.riesz_mean(500.0, 1.0).unwrap());
        let berezin = berezin_upper(500.0, 2, 0.12).unwrap();
        assert!(ub.total < berezin.total);
    }

    #[test]
    fn unscaled_remainder_fails_for_small_boxes() {
        // lower-order terms times |Ω| (not |Ω|/|B|) undershoot once |B| < 1
        let (l, z) = (0.5, 50.0);
        let omega = enumerate_box(&[0.25, 0.25], Dirichlet, z).unwrap();
        let exact = omega.riesz_mean(z, 1.0).unwrap();
        let scaled = dirichlet_2d_explicit_upper(z, 0.0625, l, l).unwrap();
        assert!(scaled.total >= exact);
        let (_, env) = rectangle_envelopes(l, l, z, Dirichlet).unwrap();
        let unscaled = scaled.total - scaled.term("lower_order").unwrap() + env.total * 0.0625;
        assert!(unscaled < exact);
    }

    #[test]
    fn asymptotic_examples() {
        let (n, r) = asymptotic_reference(1e4, 2, 1.0, 4.0, Neumann).unwrap();
        assert!(close(r, 1e8 / (8.0 * PI) + 0.25 * 2.0 / (3.0 * PI) * 4.0 * 1e6, 1e-14));
        let exact = enumerate_box(&[1.0, 1.0], Neumann, 1e4).unwrap().counting(1e4).unwrap() as f64;
        assert!(((n - exact) / exact).abs() < 0.02);
        assert_eq!(asymptotic_reference(0.0, 2, 1.0, 4.0, Neumann).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn polya_reference_curves_on_unit_square() {
        let s = enumerate_box(&[1.0, 1.0], Neumann, 2000.0).unwrap();
        for (i, &mu) in s.eigenvalues().iter().enumerate() {
            assert!(mu <= polya_neumann_reference(i + 1, 2, 1.0).unwrap() + 1e-9);
        }
        let s = enumerate_box(&[1.0, 1.0], Dirichlet, 2000.0).unwrap();
        for (i, &la) in s.eigenvalues().iter().enumerate() {
            assert!(la >= polya_dirichlet_reference(i + 1, 2, 1.0).unwrap());
        }
    }

    #[test]
    fn bound_evaluation_json_shape() {
        let b = berezin_upper(1.0, 2, 1.0).unwrap();
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(v["side"], "upper");
        assert_eq!(v["terms"][0][0], "semiclassical");
        assert!(v["validity"].is_null());
        let d = Domain::new_box(vec![1.0, 1.0]).unwrap();
        assert_eq!(d.dimension(), 2);
    }
}
