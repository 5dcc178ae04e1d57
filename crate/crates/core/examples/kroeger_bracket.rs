//! Eigenvalue averages of Neumann boxes and the two-sided bracket for the
//! next eigenvalue.

use spectral_riesz::bounds::{kroeger_state, eigenvalue_bracket};
use spectral_riesz::spectra_exact::{enumerate_box_count, BoundaryCondition};

fn main() -> spectral_riesz::Result<()> {
    for lengths in [vec![1.0, 1.0], vec![1.0, 2f64.sqrt()], vec![1.0, 1.0, 1.0]] {
        let s = enumerate_box_count(&lengths, BoundaryCondition::Neumann, 10_001)?;
        println!("box {lengths:?}");
        for k in [1, 2, 10, 100, 1000, 10_000] {
            let state = kroeger_state(&s, k)?;
            let (lo, hi) = eigenvalue_bracket(&state)?;
            println!(
                "  k = {k:>5}: S_k = {:.6}, mu_(k+1) = {:>12.4} in [{lo:>12.4}, {hi:>12.4}]",
                state.s_k,
                s.eigenvalue(k + 1)?
            );
        }
    }
    Ok(())
}
