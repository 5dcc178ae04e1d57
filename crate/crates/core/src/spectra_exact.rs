//! Exact Laplacian spectra of intervals, boxes and their products.
//!
//! Eigenvalues are generated from integer lattice points,
//! `π² Σ_α n_α² / l_α²`, with `n_α ≥ 0` (Neumann) or `n_α ≥ 1` (Dirichlet).
//! These spectra are the ground truth every bound is checked against.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Domain;
use crate::report::fmt_sig17;

/// Default cap on the number of enumerated eigenvalues.
pub const DEFAULT_EIGENVALUE_LIMIT: usize = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Neumann,
    Dirichlet,
}

impl BoundaryCondition {
    fn first_index(self) -> u64 {
        match self {
            BoundaryCondition::Neumann => 0,
            BoundaryCondition::Dirichlet => 1,
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryCondition::Neumann => "neumann",
            BoundaryCondition::Dirichlet => "dirichlet",
        })
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "neumann" | "n" => Ok(BoundaryCondition::Neumann),
            "dirichlet" | "d" => Ok(BoundaryCondition::Dirichlet),
            other => Err(Error::arg(format!("unknown boundary condition '{other}'"))),
        }
    }
}

/// A sorted eigenvalue multiset, complete below `cutoff`.
#[derive(Debug, Clone)]
pub struct ExactSpectrum {
    eigenvalues: Vec<f64>,
    // prefix[i] = sum of the first i eigenvalues
    prefix: Vec<f64>,
    cutoff: f64,
    bc: BoundaryCondition,
    domain: Domain,
}

impl ExactSpectrum {
    fn from_sorted(eigenvalues: Vec<f64>, cutoff: f64, bc: BoundaryCondition, domain: Domain) -> Self {
        let mut prefix = Vec::with_capacity(eigenvalues.len() + 1);
        let mut acc = 0.0;
        prefix.push(0.0);
        for &e in &eigenvalues {
            acc += e;
            prefix.push(acc);
        }
        ExactSpectrum { eigenvalues, prefix, cutoff, bc, domain }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn boundary_condition(&self) -> BoundaryCondition {
        self.bc
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    fn check_complete(&self, z: f64) -> Result<()> {
        if z > self.cutoff {
            Err(Error::IncompleteSpectrum { requested: z, cutoff: self.cutoff })
        } else {
            Ok(())
        }
    }

    /// Number of eigenvalues strictly below `z`.
    pub fn counting(&self, z: f64) -> Result<usize> {
        self.check_complete(z)?;
        Ok(self.eigenvalues.partition_point(|&e| e < z))
    }

    /// `Σ (z − λ)_+^σ`; σ = 0 counts eigenvalues strictly below `z`.
    pub fn riesz_mean(&self, z: f64, sigma: f64) -> Result<f64> {
        if !(sigma >= 0.0) {
            return Err(Error::arg(format!("Riesz exponent must be nonnegative, got {sigma}")));
        }
        let count = self.counting(z)?;
        if sigma == 0.0 {
            return Ok(count as f64);
        }
        if sigma == 1.0 {
            return Ok(count as f64 * z - self.prefix[count]);
        }
        Ok(self.eigenvalues[..count].iter().map(|&e| (z - e).powf(sigma)).sum())
    }

    /// Sum of the first `k` eigenvalues.
    pub fn eigenvalue_sum(&self, k: usize) -> Result<f64> {
        if k == 0 {
            return Err(Error::arg("k must be positive"));
        }
        if k > self.eigenvalues.len() {
            return Err(Error::IncompleteSpectrum {
                requested: k as f64,
                cutoff: self.eigenvalues.len() as f64,
            });
        }
        Ok(self.prefix[k])
    }

    /// The `k`-th eigenvalue, 1-based.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.eigenvalues.len() {
            return Err(Error::IncompleteSpectrum {
                requested: k as f64,
                cutoff: self.eigenvalues.len() as f64,
            });
        }
        Ok(self.eigenvalues[k - 1])
    }

    /// CSV with a single `eigenvalue` column, 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "eigenvalue")?;
        for &e in &self.eigenvalues {
            writeln!(out, "{}", fmt_sig17(e))?;
        }
        Ok(())
    }
}

/// Enumerates `π² Σ n_α²/l_α² < cutoff` over the box lattice.
pub fn enumerate_box(lengths: &[f64], bc: BoundaryCondition, cutoff: f64) -> Result<ExactSpectrum> {
    enumerate_box_with_limit(lengths, bc, cutoff, DEFAULT_EIGENVALUE_LIMIT)
}

/// Smallest doubling of a Weyl-type cutoff that yields at least `count`
/// eigenvalues; every eigenvalue below the returned cutoff is present.
pub fn enumerate_box_count(lengths: &[f64], bc: BoundaryCondition, count: usize) -> Result<ExactSpectrum> {
    let domain = Domain::new_box(lengths.to_vec())?;
    let d = lengths.len();
    let mut cutoff =
        2.0 * crate::special::weyl_constant(d) * ((count + 1) as f64 / domain.volume()).powf(2.0 / d as f64) + 1.0;
    loop {
        let s = enumerate_box(lengths, bc, cutoff)?;
        if s.len() >= count {
            return Ok(s);
        }
        cutoff *= 2.0;
    }
}

pub fn enumerate_box_with_limit(
    lengths: &[f64],
    bc: BoundaryCondition,
    cutoff: f64,
    limit: usize,
) -> Result<ExactSpectrum> {
    let domain = Domain::new_box(lengths.to_vec())?;
    if !(cutoff >= 0.0) || !cutoff.is_finite() {
        return Err(Error::arg(format!("cutoff must be finite and nonnegative, got {cutoff}")));
    }
    // n_α ≤ ceil(l_α √cutoff / π); the strict test below prunes the rest
    let inv_sq: Vec<f64> = lengths.iter().map(|l| 1.0 / (l * l)).collect();
    let max_n: Vec<u64> = lengths
        .iter()
        .map(|l| (l * cutoff.sqrt() / PI).ceil() as u64)
        .collect();
    // lattice sums are compared against cutoff / π² so each value is formed once
    let reduced_cutoff = cutoff / (PI * PI);
    let mut values = Vec::new();
    let mut stack_sum = vec![0.0f64; lengths.len() + 1];
    enumerate_axis(0, bc.first_index(), &inv_sq, &max_n, reduced_cutoff, &mut stack_sum, &mut values, limit)?;
    let mut eigenvalues: Vec<f64> = values.into_iter().map(|s| PI * PI * s).collect();
    // stable: ties keep lexicographic lattice order
    eigenvalues.sort_by(|a, b| a.total_cmp(b));
    Ok(ExactSpectrum::from_sorted(eigenvalues, cutoff, bc, domain))
}

#[allow(clippy::too_many_arguments)]
fn enumerate_axis(
    axis: usize,
    first: u64,
    inv_sq: &[f64],
    max_n: &[u64],
    reduced_cutoff: f64,
    partial: &mut [f64],
    out: &mut Vec<f64>,
    limit: usize,
) -> Result<()> {
    let d = inv_sq.len();
    for n in first..=max_n[axis].max(first) {
        let s = partial[axis] + (n * n) as f64 * inv_sq[axis];
        if s >= reduced_cutoff {
            break;
        }
        if axis + 1 == d {
            if out.len() >= limit {
                return Err(Error::Resource(format!(
                    "enumeration exceeds the limit of {limit} eigenvalues"
                )));
            }
            out.push(s);
        } else {
            partial[axis + 1] = s;
            enumerate_axis(axis + 1, first, inv_sq, max_n, reduced_cutoff, partial, out, limit)?;
        }
    }
    Ok(())
}

/// Spectrum of the product domain from the factor spectra, `λ = λ_a + λ_b`.
///
/// Requires `a.cutoff + min σ(b) ≥ cutoff` and symmetrically, so no pair
/// below `cutoff` can be missing.
pub fn product_spectrum(a: &ExactSpectrum, b: &ExactSpectrum, cutoff: f64) -> Result<ExactSpectrum> {
    if a.bc != b.bc {
        return Err(Error::arg("factor spectra have different boundary conditions"));
    }
    if !(cutoff >= 0.0) {
        return Err(Error::arg(format!("cutoff must be nonnegative, got {cutoff}")));
    }
    // the smallest eigenvalue of an empty spectrum is at least its cutoff
    let floor_a = a.eigenvalues.first().copied().unwrap_or(a.cutoff);
    let floor_b = b.eigenvalues.first().copied().unwrap_or(b.cutoff);
    if a.cutoff + floor_b < cutoff {
        return Err(Error::IncompleteSpectrum { requested: cutoff, cutoff: a.cutoff + floor_b });
    }
    if b.cutoff + floor_a < cutoff {
        return Err(Error::IncompleteSpectrum { requested: cutoff, cutoff: b.cutoff + floor_a });
    }
    let mut values = Vec::new();
    for &ea in &a.eigenvalues {
        if ea + floor_b >= cutoff {
            break;
        }
        for &eb in &b.eigenvalues {
            let s = ea + eb;
            if s >= cutoff {
                break;
            }
            values.push(s);
        }
    }
    values.sort_by(|x, y| x.total_cmp(y));
    let domain = Domain::product(a.domain.clone(), b.domain.clone());
    Ok(ExactSpectrum::from_sorted(values, cutoff, a.bc, domain))
}

/// Exact spectrum of any interval, box, or product of those.
pub fn enumerate_domain(domain: &Domain, bc: BoundaryCondition, cutoff: f64) -> Result<ExactSpectrum> {
    match domain {
        Domain::Interval(l) => {
            let mut s = enumerate_box(&[*l], bc, cutoff)?;
            s.domain = domain.clone();
            Ok(s)
        }
        Domain::Box(lengths) => enumerate_box(lengths, bc, cutoff),
        Domain::Product(a, b) => {
            let sa = enumerate_domain(a, bc, cutoff)?;
            let sb = enumerate_domain(b, bc, cutoff)?;
            product_spectrum(&sa, &sb, cutoff)
        }
        Domain::Polygon(_) => Err(Error::arg(
            "no exact spectrum for polygons; use the finite-difference solver",
        )),
    }
}
