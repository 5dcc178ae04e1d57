//! The remainder of the rectangle Riesz mean after its two leading terms,
//! squeezed between explicit envelopes.

use spectral_riesz::bounds::rectangle_riesz_bounds;
use spectral_riesz::spectra_exact::BoundaryCondition;

fn main() -> spectral_riesz::Result<()> {
    for bc in [BoundaryCondition::Neumann, BoundaryCondition::Dirichlet] {
        for l2 in [1.0, (1.0 + 5f64.sqrt()) / 2.0, 3.0] {
            println!("{bc}, [0,1] x [0,{l2:.4}]");
            for z in [10.0, 100.0, 1000.0, 5000.0] {
                let b = rectangle_riesz_bounds(1.0, l2, z, bc)?;
                println!("  z = {z:>6}: {:>12.4} <= {:>12.4} <= {:>12.4}", b.lower.total, b.center, b.upper.total);
            }
        }
    }
    Ok(())
}
