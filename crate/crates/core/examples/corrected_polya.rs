//! Lower bound for the Neumann counting function of a slab, including the
//! window near zero where it does not apply.

use spectral_riesz::bounds::polya_counting_lower;
use spectral_riesz::spectra_exact::{enumerate_box, BoundaryCondition};

fn main() -> spectral_riesz::Result<()> {
    let delta = 0.25;
    let s = enumerate_box(&[1.0, 1.0, delta], BoundaryCondition::Neumann, 1e4 + 1.0)?;
    println!("slab [1,1,{delta}], mu_2 = {:.4}", s.eigenvalue(2)?);
    for z in [1.0, 5.0, 10.0, 100.0, 1000.0, 1e4] {
        let b = polya_counting_lower(z, 3, delta, delta)?;
        let n = s.counting(z)?;
        println!("  z = {z:>7}: bound {:>10.3}, N(z) = {n:>6}{}", b.total, if b.total > n as f64 { "  (below mu_2)" } else { "" });
    }
    if let Some(note) = polya_counting_lower(1.0, 3, delta, delta)?.validity {
        println!("note: {note}");
    }
    Ok(())
}
