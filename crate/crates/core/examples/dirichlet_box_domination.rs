//! The Dirichlet Riesz mean of a domain is dominated by the scaled Riesz mean
//! of an enclosing box; shown for a small rectangle (exact) and for a disk
//! (finite differences with error bars).

use spectral_riesz::bounds::{dirichlet_2d_explicit_upper, dirichlet_box_domination, DirichletData};
use spectral_riesz::spectra_exact::{enumerate_box, BoundaryCondition};
use spectral_riesz::spectra_numeric::eigensolver::EigenOptions;
use spectral_riesz::spectra_numeric::{richardson_refine, Region};

fn main() -> spectral_riesz::Result<()> {
    let omega = enumerate_box(&[0.4, 0.3], BoundaryCondition::Dirichlet, 2001.0)?;
    for z in [200.0, 500.0, 2000.0] {
        let rec = dirichlet_box_domination(&omega, &[1.0, 1.0], z)?;
        let explicit = dirichlet_2d_explicit_upper(z, 0.12, 1.0, 1.0)?;
        println!("rectangle, z = {z:>6}: R_1 = {:>10.4} <= {:>10.4} (box), {:>10.4} (explicit)", rec.oracle, rec.bound, explicit.total);
    }

    let disk = Region::disk([0.5, 0.5], 0.25)?;
    let s = richardson_refine(&disk, 1.0 / 64.0, 20, BoundaryCondition::Dirichlet, &EigenOptions::default())?;
    for z in [150.0, 500.0, 0.99 * s.cutoff()] {
        let rec = dirichlet_box_domination(&s, &[1.0, 1.0], z)?;
        println!("disk, z = {z:>8.2}: R_1 = {:>9.4} +- {:.1e} <= {:>9.4}", rec.oracle, s.riesz1_uncertainty(z), rec.bound);
    }
    Ok(())
}
