//! Two-term lower bounds for the Neumann Riesz mean of a thin box, next to
//! the exact value and the two-term asymptotics.

use spectral_riesz::bounds::{asymptotic_reference, laptev_lower, product_twoterm_lower, twoterm_lower, weak_twoterm_lower, TwoTermVariant};
use spectral_riesz::spectra_exact::{enumerate_box, BoundaryCondition};

fn main() -> spectral_riesz::Result<()> {
    let lengths = [1.0, 0.25];
    let (vol, width, perimeter) = (0.25, 0.25, 2.5);
    let s = enumerate_box(&lengths, BoundaryCondition::Neumann, 1e4 + 1.0)?;
    println!("{:>8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}", "z", "laptev", "twoterm", "weak", "product", "exact", "asymptotic");
    for z in [10.0, 100.0, 400.0, 1000.0, 5000.0, 1e4] {
        let exact = s.riesz_mean(z, 1.0)?;
        let (_, asym) = asymptotic_reference(z, 2, vol, perimeter, BoundaryCondition::Neumann)?;
        println!(
            "{z:>8} {:>12.3} {:>12.3} {:>12.3} {:>12.3} {exact:>12.3} {asym:>12.3}",
            laptev_lower(z, 2, vol)?.total,
            twoterm_lower(z, 2, vol, width, TwoTermVariant::PositivePart)?.total,
            weak_twoterm_lower(z, 2, vol, width)?.total,
            product_twoterm_lower(z, 2, vol, width)?.total,
        );
    }
    let b = twoterm_lower(400.0, 2, vol, width, TwoTermVariant::Plain)?;
    println!("terms at z = 400:");
    for (label, value) in &b.terms {
        println!("  {label:<18} {value:>12.4}");
    }
    Ok(())
}
