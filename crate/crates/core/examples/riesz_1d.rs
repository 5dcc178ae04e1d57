//! One-dimensional lattice Riesz means and their polynomial envelopes.

use spectral_riesz::riesz1d::{
    riesz1_beta_bounds, riesz1_bounds, riesz1_dirichlet_variants, riesz1_sqrt_upper, riesz1_direct, sawtooth_excess, RieszPower,
};

fn main() -> spectral_riesz::Result<()> {
    println!("{:>6} {:>14} {:>14} {:>14}", "R", "lower", "exact", "upper");
    for r in [0.5, 1.0, 2.5, 3.0, 7.3, 20.0] {
        let b = riesz1_bounds(r)?;
        println!("{r:>6} {:>14.6} {:>14.6} {:>14.6}", b.lower.unwrap_or(f64::NAN), b.exact, b.upper);
    }
    println!("F(3/8) = {:.15} (25/96 = {:.15})", sawtooth_excess(0.375)?, 25.0 / 96.0);

    for beta in [0.5, 2.0] {
        let b = riesz1_beta_bounds(10.0, beta)?;
        println!("beta = {beta}: {:.4} <= {:.4} <= {:.4}", b.lower.unwrap_or(f64::NAN), b.exact, b.upper);
    }
    println!("order 1/2 at R = 10: {:.6} <= {:.6}", riesz1_direct(10.0, 0.5), riesz1_sqrt_upper(10.0)?);
    let d = riesz1_dirichlet_variants(4.2, RieszPower::One)?;
    println!("k >= 1 sums at R = 4.2: {:.6} <= {:.6} <= {:.6}", d.lower.unwrap_or(f64::NAN), d.exact, d.upper);
    Ok(())
}
