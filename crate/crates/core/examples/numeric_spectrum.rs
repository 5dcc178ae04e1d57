//! Finite-difference Dirichlet eigenvalues on the unit square and unit disk,
//! refined by Richardson extrapolation.
//!
//! Run with `cargo run --release --example numeric_spectrum`.

use std::f64::consts::PI;
use std::time::Instant;

use spectral_riesz::geometry::Polygon;
use spectral_riesz::spectra_exact::BoundaryCondition;
use spectral_riesz::spectra_numeric::eigensolver::EigenOptions;
use spectral_riesz::spectra_numeric::{richardson_refine, Region};

/// First zero of J_0, for comparison.
const J01: f64 = 2.404_825_557_695_773;

fn main() -> spectral_riesz::Result<()> {
    let opts = EigenOptions::default();

    let square = Region::polygon(Polygon::rectangle([0.0, 0.0], 1.0, 1.0)?);
    let t = Instant::now();
    let s = richardson_refine(&square, 1.0 / 64.0, 6, BoundaryCondition::Dirichlet, &opts)?;
    println!("unit square, h = 1/64 and 1/128 ({:.2?})", t.elapsed());
    let exact = [2.0, 5.0, 5.0, 8.0, 10.0, 10.0].map(|k| k * PI * PI);
    for ((l, err), e) in s.eigenvalues.iter().zip(&s.error_estimate).zip(exact) {
        println!("  {l:>14.8} ± {err:.2e}   exact {e:>14.8}   rel {:.1e}", (l - e).abs() / e);
    }

    let disk = Region::disk([0.0, 0.0], 1.0)?;
    let t = Instant::now();
    let s = richardson_refine(&disk, 1.0 / 32.0, 4, BoundaryCondition::Dirichlet, &opts)?;
    println!("unit disk, h = 1/32 and 1/64 ({:.2?})", t.elapsed());
    let target = J01 * J01;
    println!(
        "  lambda_1 = {:.8} ± {:.2e}, j01^2 = {target:.8}, rel {:.1e}",
        s.eigenvalues[0],
        s.error_estimate[0],
        (s.eigenvalues[0] - target).abs() / target
    );

    let small = Region::disk([0.5, 0.5], 0.25)?;
    let t = Instant::now();
    let s = richardson_refine(&small, 1.0 / 128.0, 40, BoundaryCondition::Dirichlet, &opts)?;
    println!("disk r = 0.25, 40 eigenvalues, h = 1/128 and 1/256 ({:.2?})", t.elapsed());
    println!("  lambda_1 = {:.6}, lambda_30 = {:.4}, lambda_40 = {:.4}", s.eigenvalues[0], s.eigenvalues[29], s.eigenvalues[39]);

    let t = Instant::now();
    let s = richardson_refine(&square, 1.0 / 32.0, 3, BoundaryCondition::Neumann, &opts)?;
    println!("unit square Neumann ({:.2?}): {:?}", t.elapsed(), s.eigenvalues);
    Ok(())
}
