//! Exact Neumann and Dirichlet spectra of boxes and products, with counting
//! functions and Riesz means.

use spectral_riesz::geometry::Domain;
use spectral_riesz::spectra_exact::{enumerate_domain, product_spectrum, enumerate_box, BoundaryCondition};

fn main() -> spectral_riesz::Result<()> {
    let square = Domain::from_json(r#"{"type":"box","lengths":[1,1]}"#)?;
    for bc in [BoundaryCondition::Neumann, BoundaryCondition::Dirichlet] {
        let s = enumerate_domain(&square, bc, 100.0)?;
        println!("unit square, {bc}: {} eigenvalues below 100", s.len());
        println!("  first five: {:?}", &s.eigenvalues()[..5.min(s.len())]);
        println!("  N(50) = {}, R_1(50) = {:.6}, R_2(50) = {:.4}", s.counting(50.0)?, s.riesz_mean(50.0, 1.0)?, s.riesz_mean(50.0, 2.0)?);
    }

    // [0,1] x [0,2] built as a product of two intervals
    let a = enumerate_box(&[1.0], BoundaryCondition::Neumann, 200.0)?;
    let b = enumerate_box(&[2.0], BoundaryCondition::Neumann, 200.0)?;
    let p = product_spectrum(&a, &b, 200.0)?;
    let direct = enumerate_box(&[1.0, 2.0], BoundaryCondition::Neumann, 200.0)?;
    println!("product of intervals: {} eigenvalues, direct box: {}", p.len(), direct.len());

    let cube = enumerate_box(&[1.0, 1.0, 1.0], BoundaryCondition::Dirichlet, 1000.0)?;
    println!("unit cube Dirichlet: lambda_1 = {:.6} (3 pi^2), {} eigenvalues below 1000", cube.eigenvalue(1)?, cube.len());
    Ok(())
}
