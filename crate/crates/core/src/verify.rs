//! Verification suites: each one evaluates a family of inequalities against
//! exact (or numeric, with error bars) spectra and returns one
//! [`VerificationRecord`] per checked instance.
//!
//! Random inputs come from ChaCha8 streams keyed by `(seed, instance)`, so a
//! failing row can be regenerated from its `inputs` column alone. Work is
//! spread over rayon, and records come back in grid order whatever the
//! thread count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::avp::{avp_check, kroeger_demo, radius_grid, AvpMode, DiscreteOperatorSpec, TrialFamily};
use crate::bounds::{
    berezin_upper, dirichlet_2d_explicit_upper, dirichlet_box_domination, higher_riesz_lower,
    hull_isoperimetric_lower_2d, laptev_lower, polya_counting_lower, polya_dirichlet_reference,
    polya_neumann_reference, product_twoterm_lower, rectangle_center, rectangle_envelopes, eigenvalue_bracket,
    twoterm_lower, weak_twoterm_lower, DirichletData, KroegerState, TwoTermVariant,
};
use crate::error::{Error, Result};
use crate::inequalities::{holder_gaps, young_gap, ConjugatePair, HolderForm, MeasureVector, YoungForm};
use crate::report::VerificationRecord;
use crate::riesz1d::{
    riesz1_beta_bounds, riesz1_bounds, riesz1_direct, riesz1_exact, riesz1_sqrt_upper, sawtooth_excess,
};
use crate::spectra_exact::{enumerate_box, enumerate_box_count, BoundaryCondition, ExactSpectrum};
use crate::spectra_numeric::eigensolver::EigenOptions;
use crate::spectra_numeric::{richardson_refine, Region};

/// Relative tolerance for comparisons between closed forms and exact sums.
pub const SUITE_RTOL: f64 = 1e-12;
/// Relative tolerance for comparisons between two closed-form bounds.
pub const BOUND_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Riesz1d,
    Kroeger,
    Twoterm,
    Rectangle,
    Polya,
    DirichletBox,
    Avp,
    Ineq,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const EACH: [Suite; 8] = [
        Suite::Riesz1d,
        Suite::Kroeger,
        Suite::Twoterm,
        Suite::Rectangle,
        Suite::Polya,
        Suite::DirichletBox,
        Suite::Avp,
        Suite::Ineq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Riesz1d => "riesz1d",
            Suite::Kroeger => "kroeger",
            Suite::Twoterm => "twoterm",
            Suite::Rectangle => "rectangle",
            Suite::Polya => "polya",
            Suite::DirichletBox => "dirichlet-box",
            Suite::Avp => "avp",
            Suite::Ineq => "ineq",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::arg(format!("unknown suite '{s}'")))
    }
}

/// Sizes and geometry for the suites. `Default` gives the full acceptance sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyParams {
    pub seed: u64,
    /// Grid points on `(0, 50]` for the one-dimensional envelopes.
    pub riesz_points: usize,
    /// Random radii for the sawtooth closed form.
    pub sawtooth_samples: usize,
    /// Grid points per β.
    pub beta_points: usize,
    pub betas: Vec<f64>,
    pub kmax: usize,
    /// Neumann boxes for the eigenvalue-average bracket.
    pub kroeger_boxes: Vec<Vec<f64>>,
    /// Neumann boxes for the Riesz-mean lower bounds.
    pub twoterm_boxes: Vec<Vec<f64>>,
    /// Log-grid points in `[1, 10^4]` (two-term) and `[10, 10^4]` (counting).
    pub z_points: usize,
    pub aspect_ratios: Vec<f64>,
    pub rectangle_points: usize,
    /// A single `(l1, l2)` rectangle replacing the aspect-ratio list.
    pub rectangle: Option<(f64, f64)>,
    /// A single `z` replacing the rectangle grid.
    pub rectangle_z: Option<f64>,
    pub polya_deltas: Vec<f64>,
    /// Whether the dirichlet-box suite also runs the finite-difference disk.
    pub numeric: bool,
    pub numeric_h: f64,
    pub numeric_count: usize,
    pub young_samples: usize,
    pub holder_samples: usize,
    pub avp_instances: usize,
    pub avp_kmax: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            seed: 42,
            riesz_points: 10_000,
            sawtooth_samples: 10_000,
            beta_points: 2_000,
            betas: vec![0.25, 0.5, 1.0, 2.0, 5.0],
            kmax: 10_000,
            kroeger_boxes: vec![vec![1.0, 1.0], vec![1.0, 1.0, 1.0], vec![1.0, 2f64.sqrt()]],
            twoterm_boxes: vec![vec![1.0, 1.0], vec![1.0, 0.25], vec![1.0, 1.0, 1.0], vec![1.0, 1.0, 0.5]],
            z_points: 200,
            aspect_ratios: vec![1.0, 1.5, (1.0 + 5f64.sqrt()) / 2.0, 3.0, 10.0],
            rectangle_points: 1_000,
            rectangle: None,
            rectangle_z: None,
            polya_deltas: vec![0.25, 0.5],
            numeric: true,
            numeric_h: 1.0 / 128.0,
            numeric_count: 40,
            young_samples: 100_000,
            holder_samples: 10_000,
            avp_instances: 1_000,
            avp_kmax: 100,
        }
    }
}

impl VerifyParams {
    /// Reduced sizes for quick runs; all suites still cover their full ranges.
    pub fn quick() -> Self {
        VerifyParams {
            riesz_points: 1_000,
            sawtooth_samples: 1_000,
            beta_points: 200,
            kmax: 1_000,
            z_points: 50,
            rectangle_points: 100,
            numeric: false,
            young_samples: 5_000,
            holder_samples: 1_000,
            avp_instances: 100,
            avp_kmax: 20,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub records: Vec<VerificationRecord>,
    /// Grid points outside a bound's stated range, not evaluated.
    pub skipped: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    /// Smallest margin relative to its tolerance floor; `None` when empty.
    pub fn worst(&self) -> Option<&VerificationRecord> {
        self.records.iter().min_by(|a, b| (a.margin + a.tolerance).total_cmp(&(b.margin + b.tolerance)))
    }
}

/// `n ≥ 2` logarithmically spaced points from `a` to `b`, both included.
pub fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let (la, lb) = (a.ln(), b.ln());
    (0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// Stream `stream` of the ChaCha8 generator seeded with `seed`.
pub fn instance_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, params)).collect();
    }
    Ok(vec![run_one(suite, params)?])
}

fn run_one(suite: Suite, p: &VerifyParams) -> Result<SuiteReport> {
    let (records, skipped) = match suite {
        Suite::Riesz1d => (riesz1d_suite(p)?, 0),
        Suite::Kroeger => (kroeger_suite(p)?, 0),
        Suite::Twoterm => (twoterm_suite(p)?, 0),
        Suite::Rectangle => (rectangle_suite(p)?, 0),
        Suite::Polya => polya_suite(p)?,
        Suite::DirichletBox => (dirichlet_box_suite(p)?, 0),
        Suite::Avp => (avp_suite(p)?, 0),
        Suite::Ineq => (ineq_suite(p)?, 0),
        Suite::All => unreachable!("expanded by run_suite"),
    };
    Ok(SuiteReport { suite, records, skipped })
}

fn collect<T: Send>(parts: Vec<Result<Vec<T>>>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn rel_tol(scale: f64) -> f64 {
    SUITE_RTOL * scale.abs().max(1.0)
}

fn riesz1d_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let n = p.riesz_points;
    let grid: Vec<Result<Vec<VerificationRecord>>> = (1..=n)
        .into_par_iter()
        .map(|i| {
            let r = 50.0 * i as f64 / n as f64;
            let b = riesz1_bounds(r)?;
            let lo = b.lower.unwrap_or(f64::NEG_INFINITY);
            let tol = rel_tol(b.exact);
            Ok(vec![
                VerificationRecord::lower("riesz1_lower", "", r, lo, b.exact, tol),
                VerificationRecord::upper("riesz1_upper", "", r, b.upper, b.exact, tol),
            ])
        })
        .collect();
    let mut records = collect(grid)?;

    for m in 1..=50 {
        let r = m as f64;
        let b = riesz1_bounds(r)?;
        let gap = (b.exact - b.lower.unwrap_or(f64::NEG_INFINITY)).abs();
        records.push(VerificationRecord::new("riesz1_lower_equality", "", r, b.lower.unwrap_or(f64::NAN), b.exact, -gap, 1e-9));
    }
    for i in 1..=20 {
        let r = 0.05 * i as f64 - 0.025;
        let exact = riesz1_exact(r)?;
        records.push(VerificationRecord::new("riesz1_small_radius", "", r, r * r, exact, -(exact - r * r).abs(), 1e-15));
    }
    let f = sawtooth_excess(0.375)?;
    records.push(VerificationRecord::new("sawtooth_excess_maximum", "", 0.375, 25.0 / 96.0, f, -(f - 25.0 / 96.0).abs(), 1e-12));

    let saw: Vec<VerificationRecord> = (0..p.sawtooth_samples as u64)
        .into_par_iter()
        .map(|i| {
            let r = 1000.0 * (1.0 - instance_rng(p.seed, i).gen::<f64>());
            let closed = riesz1_exact(r).expect("radius is positive");
            let direct = riesz1_direct(r, 1.0);
            let rel = (closed - direct).abs() / direct.abs().max(f64::MIN_POSITIVE);
            VerificationRecord::new("sawtooth_identity", format!("seed={} i={i} R={r:?}", p.seed), r, closed, direct, -rel, 1e-10)
        })
        .collect();
    records.extend(saw);

    for &beta in &p.betas {
        let part: Vec<Result<Vec<VerificationRecord>>> = (1..=p.beta_points)
            .into_par_iter()
            .map(|i| {
                let r = 50.0 * i as f64 / p.beta_points as f64;
                let b = riesz1_beta_bounds(r, beta)?;
                let tol = rel_tol(b.exact);
                let inputs = format!("beta={beta}");
                let mut v = vec![
                    VerificationRecord::lower("riesz1_beta_lower", inputs.clone(), r, b.lower.unwrap_or(f64::NEG_INFINITY), b.exact, tol),
                    VerificationRecord::upper("riesz1_beta_upper", inputs, r, b.upper, b.exact, tol),
                ];
                if beta == p.betas[0] {
                    let direct = riesz1_direct(r, 0.5);
                    v.push(VerificationRecord::upper("riesz1_sqrt_upper", "", r, riesz1_sqrt_upper(r)?, direct, rel_tol(direct)));
                }
                Ok(v)
            })
            .collect();
        records.extend(collect(part)?);
    }
    Ok(records)
}

fn kroeger_records(lengths: &[f64], kmax: usize) -> Result<Vec<VerificationRecord>> {
    let spectrum = enumerate_box_count(lengths, BoundaryCondition::Neumann, kmax + 1)?;
    let volume: f64 = lengths.iter().product();
    let d = lengths.len();
    let inputs = format!("box={lengths:?}");
    let parts: Vec<Result<Vec<VerificationRecord>>> = (1..=kmax)
        .into_par_iter()
        .map(|k| {
            let state = KroegerState::from_sum(spectrum.eigenvalue_sum(k)?, k, d, volume)?;
            let mu = spectrum.eigenvalue(k + 1)?;
            let kf = k as f64;
            let mut v = vec![VerificationRecord::upper("kroeger_sum", inputs.clone(), kf, 1.0, state.s_k, crate::bounds::KROEGER_TOL)];
            let tol = 1e-9 * state.m_k;
            match eigenvalue_bracket(&state) {
                Ok((lo, hi)) => {
                    v.push(VerificationRecord::lower("bracket_lower", inputs.clone(), kf, lo, mu, tol));
                    v.push(VerificationRecord::upper("bracket_upper", inputs.clone(), kf, hi, mu, tol));
                }
                Err(_) => {
                    // no bracket exists; the sum record above already fails
                    v.push(VerificationRecord::new("eigenvalue_bracket", inputs.clone(), kf, state.m_k, mu, f64::NEG_INFINITY, tol));
                }
            }
            Ok(v)
        })
        .collect();
    collect(parts)
}

fn kroeger_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for lengths in &p.kroeger_boxes {
        out.extend(kroeger_records(lengths, p.kmax)?);
    }
    Ok(out)
}

fn twoterm_records(lengths: &[f64], grid: &[f64]) -> Result<Vec<VerificationRecord>> {
    let d = lengths.len();
    let volume: f64 = lengths.iter().product();
    let zmax = grid.iter().cloned().fold(0.0, f64::max);
    let spectrum = enumerate_box(lengths, BoundaryCondition::Neumann, zmax * (1.0 + 1e-12) + 1.0)?;
    let parts: Vec<Result<Vec<VerificationRecord>>> = grid
        .par_iter()
        .map(|&z| {
            let r1 = spectrum.riesz_mean(z, 1.0)?;
            let r2 = spectrum.riesz_mean(z, 2.0)?;
            let tol = rel_tol(r1);
            let mut v = Vec::new();
            let laptev = laptev_lower(z, d, volume)?;
            v.push(VerificationRecord::lower("laptev_lower", format!("box={lengths:?}"), z, laptev.total, r1, tol));
            if d == 2 {
                let hull = hull_isoperimetric_lower_2d(z, volume, 2.0 * (lengths[0] + lengths[1]))?;
                v.push(VerificationRecord::lower("hull_isoperimetric_lower", format!("box={lengths:?}"), z, hull.total, r1, tol));
            }
            for &width in lengths {
                let inputs = format!("box={lengths:?} width={width}");
                let plain = twoterm_lower(z, d, volume, width, TwoTermVariant::Plain)?;
                let pp = twoterm_lower(z, d, volume, width, TwoTermVariant::PositivePart)?;
                let scale = BOUND_RTOL * pp.total.abs().max(1.0);
                v.push(VerificationRecord::lower("laptev_le_twoterm_positive_part", inputs.clone(), z, laptev.total, pp.total, scale));
                v.push(VerificationRecord::lower("twoterm_plain_le_positive_part", inputs.clone(), z, plain.total, pp.total, scale));
                v.push(VerificationRecord::lower("twoterm_positive_part", inputs.clone(), z, pp.total, r1, tol));
                v.push(VerificationRecord::lower("twoterm_plain", inputs.clone(), z, plain.total, r1, tol));
                let weak = weak_twoterm_lower(z, d, volume, width)?;
                v.push(VerificationRecord::lower("weak_twoterm", inputs.clone(), z, weak.total, r1, tol));
                let product = product_twoterm_lower(z, d, volume, width)?;
                v.push(VerificationRecord::lower("product_twoterm", inputs.clone(), z, product.total, r1, tol));
                let higher = higher_riesz_lower(z, 2.0, d, volume, width)?;
                v.push(VerificationRecord::lower("higher_riesz_gamma2", inputs, z, higher.total, r2, rel_tol(r2)));
            }
            Ok(v)
        })
        .collect();
    collect(parts)
}

fn twoterm_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let grid = log_grid(1.0, 1e4, p.z_points);
    let mut out = Vec::new();
    for lengths in &p.twoterm_boxes {
        out.extend(twoterm_records(lengths, &grid)?);
    }
    Ok(out)
}

/// Sandwich records for `[0,l1]×[0,l2]` (sides in any order) at each `z`.
pub fn rectangle_records(l1: f64, l2: f64, grid: &[f64], bc: BoundaryCondition) -> Result<Vec<VerificationRecord>> {
    let (l1, l2) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
    let zmax = grid.iter().cloned().fold(0.0, f64::max);
    let spectrum = enumerate_box(&[l1, l2], bc, zmax * (1.0 + 1e-12) + 1.0)?;
    let inputs = format!("l1={l1} l2={l2} bc={bc}");
    let parts: Vec<Result<Vec<VerificationRecord>>> = grid
        .par_iter()
        .map(|&z| {
            let r1 = spectrum.riesz_mean(z, 1.0)?;
            let center = rectangle_center(r1, l1, l2, z, bc);
            let (lower, upper) = rectangle_envelopes(l1, l2, z, bc)?;
            // the center is a difference of terms of size z²
            let tol = SUITE_RTOL * (r1 + l1 * l2 * z * z + (l1 + l2) * z.powf(1.5)).max(1.0);
            Ok(vec![
                VerificationRecord::lower("rectangle_lower", inputs.clone(), z, lower.total, center, tol),
                VerificationRecord::upper("rectangle_upper", inputs.clone(), z, upper.total, center, tol),
            ])
        })
        .collect();
    collect(parts)
}

fn rectangle_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let shapes: Vec<(f64, f64)> = match p.rectangle {
        Some(s) => vec![s],
        None => p.aspect_ratios.iter().map(|&a| (1.0, a)).collect(),
    };
    let mut out = Vec::new();
    for (l1, l2) in shapes {
        let long = l1.max(l2);
        let grid: Vec<f64> = match p.rectangle_z {
            Some(z) => vec![z],
            None => {
                let zmax = 1e4 * std::f64::consts::PI.powi(2) / (long * long);
                (1..=p.rectangle_points).map(|i| zmax * i as f64 / p.rectangle_points as f64).collect()
            }
        };
        for bc in [BoundaryCondition::Neumann, BoundaryCondition::Dirichlet] {
            out.extend(rectangle_records(l1, l2, &grid, bc)?);
        }
    }
    Ok(out)
}

fn polya_reference_records(lengths: &[f64], count: usize) -> Result<Vec<VerificationRecord>> {
    let d = lengths.len();
    let volume: f64 = lengths.iter().product();
    let mut out = Vec::new();
    let inputs = format!("box={lengths:?}");
    let neumann = enumerate_box_count(lengths, BoundaryCondition::Neumann, count)?;
    for (i, &mu) in neumann.eigenvalues().iter().enumerate() {
        let j = i + 1;
        let reference = polya_neumann_reference(j, d, volume)?;
        out.push(VerificationRecord::upper("polya_neumann", inputs.clone(), j as f64, reference, mu, rel_tol(mu)));
    }
    let dirichlet = enumerate_box_count(lengths, BoundaryCondition::Dirichlet, count)?;
    for (i, &lambda) in dirichlet.eigenvalues().iter().enumerate() {
        let j = i + 1;
        let reference = polya_dirichlet_reference(j, d, volume)?;
        out.push(VerificationRecord::lower("polya_dirichlet", inputs.clone(), j as f64, reference, lambda, rel_tol(lambda)));
    }
    Ok(out)
}

fn polya_suite(p: &VerifyParams) -> Result<(Vec<VerificationRecord>, usize)> {
    let mut out = Vec::new();
    let mut skipped = 0;
    let grid = log_grid(10.0, 1e4, p.z_points);
    for &delta in &p.polya_deltas {
        let lengths = [1.0, 1.0, delta];
        let spectrum = enumerate_box(&lengths, BoundaryCondition::Neumann, 1e4 * (1.0 + 1e-12) + 1.0)?;
        let mu2 = spectrum.eigenvalue(2)?;
        let inputs = format!("box={lengths:?} width={delta}");
        for &z in &grid {
            if z <= mu2 {
                skipped += 1;
                continue;
            }
            let n = spectrum.counting(z)? as f64;
            let bound = polya_counting_lower(z, 3, delta, delta)?;
            out.push(VerificationRecord::lower("corrected_polya", inputs.clone(), z, bound.total, n, rel_tol(n)));
        }
    }
    for lengths in [vec![1.0, 1.0], vec![1.0, 2f64.sqrt()], vec![1.0, 1.0, 1.0]] {
        out.extend(polya_reference_records(&lengths, 3_000)?);
    }
    Ok((out, skipped))
}

fn explicit_upper_record(omega: &dyn DirichletData, box_lengths: &[f64], z: f64, inputs: String) -> Result<VerificationRecord> {
    let bound = dirichlet_2d_explicit_upper(z, omega.volume(), box_lengths[0], box_lengths[1])?;
    let oracle = omega.riesz1(z)?;
    let tol = 3.0 * omega.riesz1_uncertainty(z) + rel_tol(bound.total);
    Ok(VerificationRecord::upper("dirichlet_explicit_upper", inputs, z, bound.total, oracle, tol))
}

fn dirichlet_box_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let cases: [(&[f64], &[f64]); 5] = [
        (&[0.4, 0.3], &[1.0, 1.0]),
        (&[0.25, 0.5], &[1.0, 1.0]),
        (&[0.1, 0.45], &[1.0, 1.0]),
        (&[0.5, 0.5], &[1.0, 1.0]),
        (&[0.3, 0.2], &[1.5, 1.2]),
    ];
    let grid = log_grid(10.0, 5e3, p.z_points);
    let mut out = Vec::new();
    for (omega, boxl) in cases {
        let zmax = grid.last().copied().unwrap_or(0.0);
        let spectrum: ExactSpectrum = enumerate_box(omega, BoundaryCondition::Dirichlet, zmax * (1.0 + 1e-12) + 1.0)?;
        let parts: Vec<Result<Vec<VerificationRecord>>> = grid
            .par_iter()
            .map(|&z| {
                let inputs = format!("omega={omega:?} box={boxl:?}");
                let mut dom = dirichlet_box_domination(&spectrum, boxl, z)?;
                dom.inputs = format!("omega={omega:?} {}", dom.inputs);
                let r1 = spectrum.riesz_mean(z, 1.0)?;
                let berezin = berezin_upper(z, 2, spectrum.volume())?;
                Ok(vec![
                    dom,
                    explicit_upper_record(&spectrum, boxl, z, inputs)?,
                    VerificationRecord::upper("berezin_upper", format!("box={omega:?}"), z, berezin.total, r1, rel_tol(r1)),
                ])
            })
            .collect();
        out.extend(collect(parts)?);
    }
    if p.numeric {
        out.extend(numeric_disk_records(p)?);
    }
    Ok(out)
}

/// Domination and explicit upper bound for the disk of radius 1/4 centred in
/// the unit square, from a Richardson-refined finite-difference spectrum.
pub fn numeric_disk_records(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let disk = Region::disk([0.5, 0.5], 0.25)?;
    let opts = EigenOptions { seed: p.seed, ..EigenOptions::default() };
    let spectrum = richardson_refine(&disk, p.numeric_h, p.numeric_count, BoundaryCondition::Dirichlet, &opts)?;
    let lo = spectrum.eigenvalues[0];
    let hi = spectrum.cutoff();
    let n = p.z_points.clamp(2, 50);
    let inputs = format!("disk r=0.25 h={} m={}", p.numeric_h, p.numeric_count);
    let mut out = Vec::new();
    for i in 0..n {
        let z = lo + (0.999 * hi - lo) * i as f64 / (n - 1) as f64;
        let mut dom = dirichlet_box_domination(&spectrum, &[1.0, 1.0], z)?;
        dom.inputs = format!("{inputs} {}", dom.inputs);
        out.push(dom);
        out.push(explicit_upper_record(&spectrum, &[1.0, 1.0], z, inputs.clone())?);
    }
    Ok(out)
}

fn avp_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let random: Vec<Result<VerificationRecord>> = (0..p.avp_instances as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(p.seed, i);
            let n = rng.gen_range(2..=12);
            let count = rng.gen_range(n..=2 * n + 4);
            let op = DiscreteOperatorSpec::random(n, 10.0, &mut rng)?;
            let fam = TrialFamily::random_parseval(n, count, &mut rng)?;
            let z = rng.gen_range(0.0..12.0);
            let c = avp_check(&op, &fam, z, AvpMode::Theorem)?;
            let tol = crate::avp::AVP_RTOL * z.max(1.0) * n as f64;
            Ok(VerificationRecord::lower("avp_parseval", format!("seed={} i={i} n={n} frame={count}", p.seed), z, c.rhs, c.lhs, tol))
        })
        .collect();
    let mut out: Vec<VerificationRecord> = random.into_iter().collect::<Result<_>>()?;

    let eq_instances = (p.avp_instances / 10).max(1) as u64;
    for i in 0..eq_instances {
        let stream = 1_000_000 + i;
        let mut rng = instance_rng(p.seed, stream);
        let n = rng.gen_range(2..=12);
        let op = DiscreteOperatorSpec::random(n, 10.0, &mut rng)?;
        let z = rng.gen_range(0.0..12.0);
        let below: Vec<usize> = (0..n).filter(|&j| op.eigenvalues()[j] < z).collect();
        let fam = TrialFamily::eigenbasis(&op, below)?;
        let c = avp_check(&op, &fam, z, AvpMode::Theorem)?;
        out.push(VerificationRecord::new(
            "avp_eigenbasis_equality",
            format!("seed={} i={stream} n={n}", p.seed),
            z,
            c.rhs,
            c.lhs,
            -(c.lhs - c.rhs).abs(),
            1e-10,
        ));
    }

    let parts: Vec<Result<Vec<VerificationRecord>>> = (1..=p.avp_kmax)
        .into_par_iter()
        .map(|k| {
            let m_k = 4.0 * std::f64::consts::PI * k as f64;
            kroeger_demo(&[1.0, 1.0], k, &radius_grid(3.0 * m_k.sqrt(), 200))
        })
        .collect();
    out.extend(collect(parts)?);
    Ok(out)
}

/// Log-uniform on `[1e-3, 1e3]`, with exact zeros 2% of the time.
fn sample_magnitude<R: Rng>(rng: &mut R) -> f64 {
    if rng.gen_bool(0.02) {
        0.0
    } else {
        10f64.powf(rng.gen_range(-3.0..3.0))
    }
}

/// One random Young instance: `(a, b, s)` with `s ∈ [2, 5]`; one in ten has `a^s = b^r`.
pub fn young_sample(seed: u64, i: u64) -> (f64, f64, ConjugatePair) {
    let mut rng = instance_rng(seed, i);
    let pair = ConjugatePair::from_s(rng.gen_range(2.0..=5.0)).expect("s is at least 2");
    let a = sample_magnitude(&mut rng);
    let b = if rng.gen_bool(0.1) { a.powf(pair.s / pair.r) } else { sample_magnitude(&mut rng) };
    (a, b, pair)
}

/// One normalized Hölder instance and whether it was built with `a^s = b^r`.
pub fn holder_sample(seed: u64, i: u64) -> Result<(MeasureVector, MeasureVector, ConjugatePair, bool)> {
    let mut rng = instance_rng(seed, i);
    let pair = ConjugatePair::from_s(rng.gen_range(2.0..=5.0))?;
    let n = rng.gen_range(2..=8);
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
    let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        let mut v: Vec<f64> = (0..n).map(|_| if rng.gen_bool(0.1) { 0.0 } else { rng.gen_range(0.0..2.0) }).collect();
        v[0] += 0.5;
        v
    };
    let a = MeasureVector::new(weights.clone(), draw(&mut rng))?.normalized(pair.s)?;
    let equal = rng.gen_bool(0.2);
    let b = if equal {
        let vals = a.values().iter().map(|x| x.powf(pair.s / pair.r)).collect();
        MeasureVector::new(weights, vals)?.normalized(pair.r)?
    } else {
        MeasureVector::new(weights, draw(&mut rng))?.normalized(pair.r)?
    };
    Ok((a, b, pair, equal))
}

fn ineq_suite(p: &VerifyParams) -> Result<Vec<VerificationRecord>> {
    let young: Vec<Result<Vec<VerificationRecord>>> = (0..p.young_samples as u64)
        .into_par_iter()
        .map(|i| {
            let (a, b, pair) = young_sample(p.seed, i);
            let inputs = format!("a={a:?} b={b:?} s={:?}", pair.s);
            YoungForm::ALL
                .iter()
                .map(|&form| {
                    let g = young_gap(a, b, pair, form)?;
                    let tol = crate::inequalities::INEQ_RTOL * (a * b + b.powf(pair.r) + a.powf(pair.s)) + f64::MIN_POSITIVE;
                    Ok(VerificationRecord::new(format!("young_{form}"), inputs.clone(), i as f64, g.bound, g.lhs, g.margin(form), tol))
                })
                .collect()
        })
        .collect();
    let mut out = collect(young)?;

    let holder: Vec<Result<Vec<VerificationRecord>>> = (0..p.holder_samples as u64)
        .into_par_iter()
        .map(|i| {
            let stream = 10_000_000 + i;
            let (a, b, pair, equal) = holder_sample(p.seed, stream)?;
            let inputs = format!("seed={} i={stream} s={:?}", p.seed, pair.s);
            let tol = crate::inequalities::INEQ_RTOL;
            let mut v = Vec::new();
            let mut gaps = Vec::new();
            for form in HolderForm::ALL {
                let g = holder_gaps(&a, &b, pair, form)?;
                v.push(VerificationRecord::lower(format!("holder_{form}_lower"), inputs.clone(), i as f64, g.lower, g.middle, tol));
                v.push(VerificationRecord::upper(format!("holder_{form}_upper"), inputs.clone(), i as f64, g.upper, g.middle, tol));
                gaps.push(g);
            }
            v.push(VerificationRecord::lower("holder_1b_tighter_lower", inputs.clone(), i as f64, gaps[0].lower, gaps[1].lower, tol));
            v.push(VerificationRecord::upper("holder_1b_tighter_upper", inputs.clone(), i as f64, gaps[0].upper, gaps[1].upper, tol));
            // ∫ab = 1 exactly in the equality case and < 1 otherwise
            let detected = gaps[0].equality;
            let middle = gaps[0].middle;
            let consistent = (!equal || detected)
                && (!detected || (1.0 - middle).abs() <= crate::inequalities::EQUALITY_TOL)
                && (detected || middle < 1.0);
            v.push(VerificationRecord::new(
                "holder_equality_detection",
                inputs,
                i as f64,
                1.0,
                middle,
                if consistent { 0.0 } else { -1.0 },
                0.0,
            ));
            Ok(v)
        })
        .collect();
    out.extend(collect(holder)?);
    Ok(out)
}
