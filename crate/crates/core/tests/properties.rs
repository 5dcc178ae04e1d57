mod common;

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spectral_riesz::avp::{avp_check, AvpMode, DiscreteOperatorSpec, TrialFamily};
use spectral_riesz::bounds::{berezin_upper, kroeger_state, laptev_lower, eigenvalue_bracket, twoterm_lower, TwoTermVariant};
use spectral_riesz::geometry::{Polygon, UnitVector};
use spectral_riesz::inequalities::{y_p, young_gap, ConjugatePair, YoungForm};
use spectral_riesz::riesz1d::{riesz1_bounds, riesz1_direct};
use spectral_riesz::spectra_exact::{enumerate_box, enumerate_box_count, BoundaryCondition};

fn bc(dirichlet: bool) -> BoundaryCondition {
    if dirichlet { BoundaryCondition::Dirichlet } else { BoundaryCondition::Neumann }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn width_between_inradius_and_diameter(n in 3usize..12, radius in 0.1f64..5.0, theta in 0.0f64..(2.0 * PI)) {
        let p = Polygon::regular(n, radius, [0.3, -0.7]).unwrap();
        let v = UnitVector::from_angle(theta);
        let w = spectral_riesz::geometry::Domain::Polygon(p.clone()).width(&v).unwrap();
        prop_assert!(w <= p.diameter() * (1.0 + 1e-12));
        prop_assert!(w >= 2.0 * p.inradius() * (1.0 - 1e-12));
    }

    #[test]
    fn hull_perimeter_never_exceeds_perimeter(pts in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 3..9)) {
        // sort by angle around the centroid so the polygon is simple
        let (cx, cy) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
        let c = (cx / pts.len() as f64, cy / pts.len() as f64);
        let mut v: Vec<[f64; 2]> = pts.iter().map(|p| [p.0, p.1]).collect();
        v.sort_by(|a, b| (a[1] - c.1).atan2(a[0] - c.0).partial_cmp(&(b[1] - c.1).atan2(b[0] - c.0)).unwrap());
        if let Ok(p) = Polygon::new(v) {
            prop_assert!(p.hull_perimeter().unwrap() <= p.perimeter() * (1.0 + 1e-12));
            prop_assert!((p.mean_width().unwrap() - p.hull_perimeter().unwrap() / PI).abs() < 1e-12 * p.perimeter());
        }
    }

    #[test]
    fn box_spectrum_matches_brute_force(l1 in 0.3f64..2.0, l2 in 0.3f64..2.0, cutoff in 0.0f64..400.0, dirichlet: bool) {
        let s = enumerate_box(&[l1, l2], bc(dirichlet), cutoff).unwrap();
        let brute = common::brute_box(&[l1, l2], dirichlet, cutoff);
        prop_assert_eq!(s.len(), brute.len());
        for (a, b) in s.eigenvalues().iter().zip(&brute) {
            prop_assert!((a - b).abs() <= 1e-12 * b.max(1.0));
        }
        for z in [cutoff * 0.3, cutoff * 0.7, cutoff] {
            let r = s.riesz_mean(z, 1.0).unwrap();
            prop_assert!((r - common::riesz(&brute, z, 1.0)).abs() <= 1e-10 * r.max(1.0));
        }
    }

    #[test]
    fn counting_is_monotone(l in prop::collection::vec(0.3f64..2.0, 1..4), z1 in 0.0f64..300.0, dz in 0.0f64..100.0) {
        let s = enumerate_box(&l, BoundaryCondition::Neumann, 401.0).unwrap();
        prop_assert!(s.counting(z1).unwrap() <= s.counting(z1 + dz).unwrap());
        prop_assert!(s.riesz_mean(z1, 1.0).unwrap() <= s.riesz_mean(z1 + dz, 1.0).unwrap());
    }

    #[test]
    fn neumann_box_chain(l1 in 0.2f64..2.0, l2 in 0.2f64..2.0, z in 1.0f64..2000.0) {
        let s = enumerate_box(&[l1, l2], BoundaryCondition::Neumann, z + 1.0).unwrap();
        let exact = s.riesz_mean(z, 1.0).unwrap();
        let vol = l1 * l2;
        let laptev = laptev_lower(z, 2, vol).unwrap().total;
        let pp = twoterm_lower(z, 2, vol, l1.min(l2), TwoTermVariant::PositivePart).unwrap().total;
        prop_assert!(laptev <= pp * (1.0 + 1e-9) + 1e-12);
        prop_assert!(pp <= exact);
    }

    #[test]
    fn dirichlet_box_below_berezin(l1 in 0.2f64..2.0, l2 in 0.2f64..2.0, z in 1.0f64..2000.0) {
        let s = enumerate_box(&[l1, l2], BoundaryCondition::Dirichlet, z + 1.0).unwrap();
        prop_assert!(s.riesz_mean(z, 1.0).unwrap() <= berezin_upper(z, 2, l1 * l2).unwrap().total);
    }

    #[test]
    fn bracket_contains_next_eigenvalue(l1 in 0.3f64..2.0, l2 in 0.3f64..2.0, k in 1usize..300) {
        let s = enumerate_box_count(&[l1, l2], BoundaryCondition::Neumann, k + 1).unwrap();
        let st = kroeger_state(&s, k).unwrap();
        prop_assert!(st.s_k <= 1.0 + 1e-12);
        let (lo, hi) = eigenvalue_bracket(&st).unwrap();
        let mu = s.eigenvalue(k + 1).unwrap();
        prop_assert!(lo <= mu * (1.0 + 1e-9) && mu <= hi * (1.0 + 1e-9));
    }

    #[test]
    fn lattice_envelope(r in 0.0f64..60.0) {
        let b = riesz1_bounds(r).unwrap();
        prop_assert!(b.holds());
        prop_assert!((b.exact - common::lattice_1d(r, 1.0)).abs() <= 1e-9 * b.exact.max(1.0));
        prop_assert!((riesz1_direct(r, 1.0) - b.exact).abs() <= 1e-9 * b.exact.max(1.0));
    }

    #[test]
    fn young_forms_hold(a in 1e-3f64..10.0, b in 1e-3f64..10.0, s in 2.0f64..8.0) {
        let pair = ConjugatePair::from_s(s).unwrap();
        for form in YoungForm::ALL {
            prop_assert!(young_gap(a, b, pair, form).unwrap().holds, "{form} at a={a}, b={b}, s={s}");
        }
    }

    #[test]
    fn y_duality(p in 0.1f64..5.0, x in 0.05f64..5.0) {
        let q = 1.0 / (p + 1.0) - 1.0;
        let lhs = y_p(x, p);
        let rhs = -(p + 1.0) * y_p(x.powf(p + 1.0), q);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }

    #[test]
    fn averaged_principle_on_random_frames(seed: u64, n in 2usize..9, extra in 0usize..8, z in -5.0f64..15.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let op = DiscreteOperatorSpec::random(n, 10.0, &mut rng).unwrap();
        let frame = TrialFamily::random_parseval(n, n + extra, &mut rng).unwrap();
        prop_assert!(frame.parseval_defect() < 1e-9);
        prop_assert!(avp_check(&op, &frame, z, AvpMode::Theorem).unwrap().holds);
    }
}
