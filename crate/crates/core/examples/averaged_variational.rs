//! The averaged variational principle on random matrices with Parseval
//! frames, and the radius inequality behind the eigenvalue bracket.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spectral_riesz::avp::{avp_check, kroeger_demo, radius_grid, AvpMode, DiscreteOperatorSpec, TrialFamily};

fn main() -> spectral_riesz::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..5 {
        let op = DiscreteOperatorSpec::random(8, 10.0, &mut rng)?;
        let frame = TrialFamily::random_parseval(8, 14, &mut rng)?;
        let c = avp_check(&op, &frame, 6.0, AvpMode::Theorem)?;
        println!("n = 8, 14 frame vectors, z = 6: lhs {:>9.4} >= rhs {:>9.4} ({})", c.lhs, c.rhs, c.holds);
    }
    let op = DiscreteOperatorSpec::diagonal(vec![1.0, 2.0, 3.0])?;
    let basis = TrialFamily::standard_basis(3, vec![0, 1])?;
    let c = avp_check(&op, &basis, 2.5, AvpMode::Theorem)?;
    println!("diagonal, eigenbasis below z: lhs {} = rhs {}", c.lhs, c.rhs);

    let m2 = 8.0 * std::f64::consts::PI;
    let recs = kroeger_demo(&[1.0, 1.0], 2, &radius_grid(3.0 * m2.sqrt(), 100))?;
    let worst = recs.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    println!("unit square, k = 2: {} checks, all hold: {}, smallest margin {worst:.4}", recs.len(), recs.iter().all(|r| r.passed));
    Ok(())
}
