//! Finite-difference Laplacian spectra on planar polygons and disks.
//!
//! Dirichlet problems use lattice nodes strictly inside the region. A node
//! whose neighbour falls outside sees the boundary at distance `θh` along
//! that axis and gets `1/(θh²)` on the diagonal instead of `1/h²`: the
//! outside value is extrapolated linearly to zero at the boundary. The
//! matrix stays symmetric and the eigenvalue error is `O(h²)` on curved
//! boundaries, which is what Richardson extrapolation assumes.
//!
//! Neumann problems use the cell-centred graph Laplacian on cells whose
//! centres lie inside the region. Faces towards outside cells carry no flux
//! (the mirror ghost value equals the cell value), so constants are exactly
//! in the kernel.

pub mod eigensolver;

use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::bounds::DirichletData;
use crate::error::{Error, Result};
use crate::geometry::{Point2, Polygon};
use crate::report::fmt_sig17;
use crate::spectra_exact::BoundaryCondition;
use eigensolver::{lowest_eigenpairs, CsrMatrix, EigenOptions};

/// Largest number of eigenvalues [`lowest_eigenvalues`] will compute.
pub const MAX_EIGENVALUES: usize = 200;

/// Nodes closer than this fraction of `h` to the boundary are not interior.
const BOUNDARY_EPS: f64 = 1e-9;

/// A planar region the finite-difference solver can mesh.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Region {
    Polygon { polygon: Polygon },
    Disk { center: Point2, radius: f64 },
}

impl Region {
    pub fn polygon(polygon: Polygon) -> Self {
        Region::Polygon { polygon }
    }

    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !center.iter().all(|c| c.is_finite()) {
            return Err(Error::Geometry(format!("invalid disk: center {center:?}, radius {radius}")));
        }
        Ok(Region::Disk { center, radius })
    }

    pub fn area(&self) -> f64 {
        match self {
            Region::Polygon { polygon } => polygon.area(),
            Region::Disk { radius, .. } => PI * radius * radius,
        }
    }

    pub fn inradius(&self) -> f64 {
        match self {
            Region::Polygon { polygon } => polygon.inradius(),
            Region::Disk { radius, .. } => *radius,
        }
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        match self {
            Region::Polygon { polygon } => polygon.bounding_box(),
            Region::Disk { center, radius } => (
                [center[0] - radius, center[1] - radius],
                [center[0] + radius, center[1] + radius],
            ),
        }
    }

    /// Extents along the coordinate axes.
    pub fn axis_widths(&self) -> Vec<f64> {
        let (lo, hi) = self.bounding_box();
        vec![hi[0] - lo[0], hi[1] - lo[1]]
    }

    pub fn contains(&self, p: Point2) -> bool {
        match self {
            Region::Polygon { polygon } => polygon.contains(p),
            Region::Disk { center, radius } => (p[0] - center[0]).hypot(p[1] - center[1]) < *radius,
        }
    }

    fn boundary_distance(&self, p: Point2) -> f64 {
        match self {
            Region::Polygon { polygon } => polygon.boundary_distance(p),
            Region::Disk { center, radius } => (radius - (p[0] - center[0]).hypot(p[1] - center[1])).abs(),
        }
    }

    /// Distance from interior `p` to the boundary along unit `dir`, if at most `t_max`.
    fn ray_exit(&self, p: Point2, dir: Point2, t_max: f64) -> Option<f64> {
        match self {
            Region::Polygon { polygon } => polygon.ray_exit(p, dir, t_max),
            Region::Disk { center, radius } => {
                let w = [p[0] - center[0], p[1] - center[1]];
                let b = w[0] * dir[0] + w[1] * dir[1];
                let c = w[0] * w[0] + w[1] * w[1] - radius * radius;
                let disc = b * b - c;
                if disc < 0.0 {
                    return None;
                }
                let t = -b + disc.sqrt();
                (t > 0.0 && t <= t_max).then_some(t)
            }
        }
    }
}

/// Lattice, active-point numbering and assembled matrix for one mesh size.
#[derive(Debug, Clone)]
pub struct GridDiscretization {
    pub h: f64,
    pub bc: BoundaryCondition,
    /// Lattice coordinate of index (0, 0).
    pub origin: Point2,
    pub nx: usize,
    pub ny: usize,
    /// `index_map[j * nx + i]` is the matrix row of lattice point `(i, j)`.
    pub index_map: Vec<Option<usize>>,
    /// Lattice coordinates of each matrix row.
    pub points: Vec<(usize, usize)>,
    /// Discrete `−Δ`, already divided by `h²`.
    pub matrix: CsrMatrix,
    pub region: Region,
}

impl GridDiscretization {
    pub fn unknowns(&self) -> usize {
        self.points.len()
    }

    pub fn interior_mask(&self) -> Vec<bool> {
        self.index_map.iter().map(Option::is_some).collect()
    }
}

/// Builds the 5-point operator on `region` with mesh size `h`.
pub fn discretize(region: &Region, h: f64, bc: BoundaryCondition) -> Result<GridDiscretization> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::arg(format!("mesh size must be positive, got {h}")));
    }
    let inradius = region.inradius();
    if h >= inradius / 8.0 {
        return Err(Error::Discretization(format!(
            "mesh size {h} is not below 1/8 of the inradius {inradius}"
        )));
    }
    let (lo, hi) = region.bounding_box();
    let cells_x = ((hi[0] - lo[0]) / h - 1e-9).ceil() as usize;
    let cells_y = ((hi[1] - lo[1]) / h - 1e-9).ceil() as usize;
    match bc {
        BoundaryCondition::Dirichlet => dirichlet_grid(region, h, lo, cells_x + 1, cells_y + 1),
        BoundaryCondition::Neumann => neumann_grid(region, h, [lo[0] + 0.5 * h, lo[1] + 0.5 * h], cells_x, cells_y),
    }
}

fn number_points(
    nx: usize,
    ny: usize,
    active: impl Fn(usize, usize) -> bool,
) -> (Vec<Option<usize>>, Vec<(usize, usize)>) {
    // row-major numbering keeps the bandwidth at about one lattice row
    let mut index_map = vec![None; nx * ny];
    let mut points = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            if active(i, j) {
                index_map[j * nx + i] = Some(points.len());
                points.push((i, j));
            }
        }
    }
    (index_map, points)
}

const DIRECTIONS: [(isize, isize); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

fn neighbour(i: usize, j: usize, di: isize, dj: isize, nx: usize, ny: usize) -> Option<(usize, usize)> {
    let ni = i.checked_add_signed(di)?;
    let nj = j.checked_add_signed(dj)?;
    (ni < nx && nj < ny).then_some((ni, nj))
}

fn dirichlet_grid(region: &Region, h: f64, origin: Point2, nx: usize, ny: usize) -> Result<GridDiscretization> {
    let at = |i: usize, j: usize| [origin[0] + i as f64 * h, origin[1] + j as f64 * h];
    let (index_map, points) = number_points(nx, ny, |i, j| {
        let p = at(i, j);
        region.contains(p) && region.boundary_distance(p) > BOUNDARY_EPS * h
    });
    if points.is_empty() {
        return Err(Error::Discretization("no interior lattice points".into()));
    }
    let inv_h2 = 1.0 / (h * h);
    let rows = points
        .iter()
        .map(|&(i, j)| {
            let mut row = Vec::with_capacity(5);
            let mut diag = 0.0;
            for (di, dj) in DIRECTIONS {
                match neighbour(i, j, di, dj, nx, ny).and_then(|(a, b)| index_map[b * nx + a]) {
                    Some(col) => {
                        row.push((col, -inv_h2));
                        diag += inv_h2;
                    }
                    None => {
                        let dir = [di as f64, dj as f64];
                        let t = region.ray_exit(at(i, j), dir, h * (1.0 + 1e-9)).unwrap_or(h);
                        let theta = (t / h).clamp(BOUNDARY_EPS, 1.0);
                        diag += inv_h2 / theta;
                    }
                }
            }
            row.push((index_map[j * nx + i].unwrap(), diag));
            row
        })
        .collect();
    Ok(GridDiscretization {
        h,
        bc: BoundaryCondition::Dirichlet,
        origin,
        nx,
        ny,
        index_map,
        points,
        matrix: CsrMatrix::from_rows(rows),
        region: region.clone(),
    })
}

fn neumann_grid(region: &Region, h: f64, origin: Point2, nx: usize, ny: usize) -> Result<GridDiscretization> {
    let at = |i: usize, j: usize| [origin[0] + i as f64 * h, origin[1] + j as f64 * h];
    let (index_map, points) = number_points(nx, ny, |i, j| region.contains(at(i, j)));
    if points.is_empty() {
        return Err(Error::Discretization("no cells inside the region".into()));
    }
    let inv_h2 = 1.0 / (h * h);
    let rows = points
        .iter()
        .map(|&(i, j)| {
            let mut row = Vec::with_capacity(5);
            let mut diag = 0.0;
            for (di, dj) in DIRECTIONS {
                if let Some(col) = neighbour(i, j, di, dj, nx, ny).and_then(|(a, b)| index_map[b * nx + a]) {
                    row.push((col, -inv_h2));
                    diag += inv_h2;
                }
            }
            row.push((index_map[j * nx + i].unwrap(), diag));
            row
        })
        .collect();
    Ok(GridDiscretization {
        h,
        bc: BoundaryCondition::Neumann,
        origin,
        nx,
        ny,
        index_map,
        points,
        matrix: CsrMatrix::from_rows(rows),
        region: region.clone(),
    })
}

/// Approximate eigenvalues with absolute error estimates.
#[derive(Debug, Clone, Serialize)]
pub struct NumericSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Finest mesh size used.
    pub h: f64,
    pub bc: BoundaryCondition,
    /// Absolute per-eigenvalue estimate: `|λ_{h/2} − λ_h|/3` after
    /// extrapolation, the solver residual bound `λ·ρ` for a single grid.
    pub error_estimate: Vec<f64>,
    pub region: Region,
}

impl NumericSpectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest computed eigenvalue; Riesz means are exact in the
    /// discretization only up to here.
    pub fn cutoff(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn riesz_mean(&self, z: f64, sigma: f64) -> Result<f64> {
        if z > self.cutoff() {
            return Err(Error::IncompleteSpectrum { requested: z, cutoff: self.cutoff() });
        }
        Ok(self
            .eigenvalues
            .iter()
            .filter(|&&e| e < z)
            .map(|&e| if sigma == 0.0 { 1.0 } else { (z - e).powf(sigma) })
            .sum())
    }

    /// CSV with columns `eigenvalue,error_estimate`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "eigenvalue,error_estimate")?;
        for (e, err) in self.eigenvalues.iter().zip(&self.error_estimate) {
            writeln!(out, "{},{}", fmt_sig17(*e), fmt_sig17(*err))?;
        }
        Ok(())
    }
}

impl DirichletData for NumericSpectrum {
    fn riesz1(&self, z: f64) -> Result<f64> {
        self.riesz_mean(z, 1.0)
    }
    fn volume(&self) -> f64 {
        self.region.area()
    }
    fn axis_widths(&self) -> Vec<f64> {
        self.region.axis_widths()
    }
    /// `∂R_1/∂λ_j = −1` below `z`, so eigenvalue errors add up.
    fn riesz1_uncertainty(&self, z: f64) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.error_estimate)
            .filter(|(e, _)| **e < z)
            .map(|(_, err)| err)
            .sum()
    }
}

/// The `m` lowest eigenvalues of the discrete operator.
pub fn lowest_eigenvalues(disc: &GridDiscretization, m: usize, opts: &EigenOptions) -> Result<NumericSpectrum> {
    let n = disc.unknowns();
    if m == 0 || m > MAX_EIGENVALUES || 4 * m >= n {
        return Err(Error::arg(format!(
            "need 1 <= m <= {MAX_EIGENVALUES} and m < n/4 (m = {m}, n = {n})"
        )));
    }
    // the Neumann operator is singular; shift so the factor is definite
    let shift = match disc.bc {
        BoundaryCondition::Dirichlet => 0.0,
        BoundaryCondition::Neumann => 1.0,
    };
    let res = lowest_eigenpairs(&disc.matrix, m, shift, opts)?;
    let error_estimate = res
        .values
        .iter()
        .zip(&res.residuals)
        .map(|(v, r)| (v + shift) * r)
        .collect();
    Ok(NumericSpectrum {
        eigenvalues: res.values,
        h: disc.h,
        bc: disc.bc,
        error_estimate,
        region: disc.region.clone(),
    })
}

/// Solves on `h` and `h/2` and extrapolates `(4λ_{h/2} − λ_h)/3`.
pub fn richardson_refine(
    region: &Region,
    h: f64,
    m: usize,
    bc: BoundaryCondition,
    opts: &EigenOptions,
) -> Result<NumericSpectrum> {
    let coarse = lowest_eigenvalues(&discretize(region, h, bc)?, m, opts)?;
    let fine = lowest_eigenvalues(&discretize(region, h / 2.0, bc)?, m, opts)?;
    let mut eigenvalues = Vec::with_capacity(m);
    let mut error_estimate = Vec::with_capacity(m);
    for (c, f) in coarse.eigenvalues.iter().zip(&fine.eigenvalues) {
        eigenvalues.push((4.0 * f - c) / 3.0);
        error_estimate.push((f - c).abs() / 3.0);
    }
    // extrapolation can reorder nearly equal values
    let mut pairs: Vec<(f64, f64)> = eigenvalues.into_iter().zip(error_estimate).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(NumericSpectrum {
        eigenvalues: pairs.iter().map(|p| p.0).collect(),
        h: h / 2.0,
        bc,
        error_estimate: pairs.iter().map(|p| p.1).collect(),
        region: region.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use BoundaryCondition::*;

    fn unit_square() -> Region {
        Region::polygon(Polygon::rectangle([0.0, 0.0], 1.0, 1.0).unwrap())
    }

    #[test]
    fn unit_square_unknowns() {
        let d = discretize(&unit_square(), 1.0 / 64.0, Dirichlet).unwrap();
        assert_eq!(d.unknowns(), 63 * 63);
        assert!(d.matrix.is_symmetric(0.0));
        let n = discretize(&unit_square(), 1.0 / 64.0, Neumann).unwrap();
        assert_eq!(n.unknowns(), 64 * 64);
    }

    #[test]
    fn coarse_mesh_is_rejected() {
        assert!(matches!(discretize(&unit_square(), 0.5, Dirichlet), Err(Error::Discretization(_))));
        assert!(discretize(&unit_square(), -1.0, Dirichlet).is_err());
    }

    #[test]
    fn disk_point_count_tracks_area() {
        let disk = Region::disk([0.0, 0.0], 1.0).unwrap();
        let h = 1.0 / 64.0;
        let d = discretize(&disk, h, Dirichlet).unwrap();
        let expect = PI / (h * h);
        assert!((d.unknowns() as f64 - expect).abs() < 0.01 * expect);
        assert!(d.matrix.is_symmetric(0.0));
    }

    #[test]
    fn neumann_constants_are_in_the_kernel() {
        let disk = Region::disk([0.3, -0.2], 0.5).unwrap();
        let d = discretize(&disk, 1.0 / 40.0, Neumann).unwrap();
        let ones = vec![1.0; d.unknowns()];
        let mut y = vec![0.0; d.unknowns()];
        d.matrix.matvec(&ones, &mut y);
        let scale = d.matrix.max_row_sum();
        assert!(y.iter().all(|v| v.abs() <= 1e-14 * scale));
    }

    #[test]
    fn square_dirichlet_first_eigenvalue() {
        let d = discretize(&unit_square(), 1.0 / 32.0, Dirichlet).unwrap();
        let s = lowest_eigenvalues(&d, 3, &EigenOptions::default()).unwrap();
        // discrete closed form 8/h² sin²(πh/2)
        let h = 1.0 / 32.0;
        let exact = 8.0 / (h * h) * (PI * h / 2.0).sin().powi(2);
        assert!((s.eigenvalues[0] - exact).abs() < 1e-9 * exact);
        assert!((s.eigenvalues[1] - s.eigenvalues[2]).abs() < 1e-9 * exact);
    }

    #[test]
    fn square_neumann_zero_mode() {
        let d = discretize(&unit_square(), 1.0 / 32.0, Neumann).unwrap();
        let s = lowest_eigenvalues(&d, 2, &EigenOptions::default()).unwrap();
        assert!(s.eigenvalues[0].abs() < 1e-8);
        assert!((s.eigenvalues[1] - PI * PI).abs() < 0.01 * PI * PI);
    }

    #[test]
    fn eigenvalue_count_limits() {
        let d = discretize(&unit_square(), 1.0 / 20.0, Dirichlet).unwrap();
        assert!(lowest_eigenvalues(&d, 0, &EigenOptions::default()).is_err());
        assert!(lowest_eigenvalues(&d, 91, &EigenOptions::default()).is_err());
        assert!(lowest_eigenvalues(&d, 2, &EigenOptions::default()).is_ok());
    }

    #[test]
    fn numeric_riesz_mean_and_csv() {
        let s = NumericSpectrum {
            eigenvalues: vec![1.0, 2.0, 4.0],
            h: 0.1,
            bc: Dirichlet,
            error_estimate: vec![0.01, 0.02, 0.04],
            region: unit_square(),
        };
        assert_eq!(s.riesz_mean(3.0, 1.0).unwrap(), 3.0);
        assert!(s.riesz_mean(5.0, 1.0).is_err());
        assert!((s.riesz1_uncertainty(3.0) - 0.03).abs() < 1e-15);
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("eigenvalue,error_estimate\n"));
    }
}
