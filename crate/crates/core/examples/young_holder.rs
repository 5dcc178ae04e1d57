//! Refined and reversed Young inequalities, and the refined Hölder
//! inequality on a small weighted measure space.

use spectral_riesz::inequalities::{holder_gaps, young_gap, ConjugatePair, HolderForm, MeasureVector, YoungForm};

fn main() -> spectral_riesz::Result<()> {
    let pair = ConjugatePair::from_s(3.0)?;
    for (a, b) in [(1.0, 1.0), (2.0, 0.5), (0.3, 4.0)] {
        println!("a = {a}, b = {b}, s = 3");
        for form in YoungForm::ALL {
            let g = young_gap(a, b, pair, form)?;
            println!("  {form:<10} ab - b^r/r - a^s/s = {:>10.5}, bound {:>10.5}, holds {}", g.lhs, g.bound, g.holds);
        }
    }

    let w = vec![0.5, 0.3, 0.2];
    let a = MeasureVector::new(w.clone(), vec![1.0, 0.4, 2.0])?.normalized(pair.s)?;
    let b = MeasureVector::new(w, vec![0.7, 1.5, 0.2])?.normalized(pair.r)?;
    for form in HolderForm::ALL {
        let g = holder_gaps(&a, &b, pair, form)?;
        println!("Hölder {form}: {:.6} <= {:.6} <= {:.6}", g.lower, g.middle, g.upper);
    }
    Ok(())
}
