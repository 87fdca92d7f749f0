mod common;

use std::f64::consts::{PI, TAU};

use annulus_chroma::gadgets::{
    embed_moser_spindle, embed_odd_cycle, embed_trirod, moser_spindle_points, spindle_threshold,
};
use annulus_chroma::radial::{three_color_threshold, Verdict};
use annulus_chroma::udg::{dsatur_coloring, greedy_clique};
use annulus_chroma::{
    build_udg, chromatic_number_exact, construct_radial_coloring, contains_unit_pair, is_proper,
    lemma3_holds, radial_chromatic_number, sector_distance_interval, thresholds,
    unit_chord_angle, verify_radial_coloring, AnnularSector, Annulus, Error,
};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn arb_sector_pair() -> impl Strategy<Value = (f64, u64)> {
    (0.001f64..0.499, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn distance_interval_brackets_and_is_tight((r, seed) in arb_sector_pair()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Annulus::new(r).unwrap();
        let s1 = random_sector(&mut rng, a);
        let s2 = random_sector(&mut rng, a);
        let d = sector_distance_interval(&s1, &s2).unwrap();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
        for _ in 0..100_000 {
            let p = sample_point(&mut rng, &s1);
            let q = if rng.gen_range(0..8) == 0 {
                sample_near(&mut rng, &s2, &p)
            } else {
                sample_point(&mut rng, &s2)
            };
            let dist = p.distance(&q);
            prop_assert!(dist >= d.min - 1e-9 && dist <= d.max + 1e-9,
                "sample {dist} outside [{}, {}]", d.min, d.max);
            lo = lo.min(dist);
            hi = hi.max(dist);
        }
        prop_assert!((hi - d.max).abs() <= 1e-3, "max {} vs sampled {hi}", d.max);
        prop_assert!((lo - d.min).abs() <= 1e-3, "min {} vs sampled {lo}", d.min);
    }

    #[test]
    fn distance_interval_symmetric((r, seed) in arb_sector_pair()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Annulus::new(r).unwrap();
        let s1 = random_sector(&mut rng, a);
        let s2 = random_sector(&mut rng, a);
        prop_assert_eq!(
            sector_distance_interval(&s1, &s2).unwrap(),
            sector_distance_interval(&s2, &s1).unwrap()
        );
    }

    #[test]
    fn unit_pair_witness_is_valid((r, seed) in arb_sector_pair()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Annulus::new(r).unwrap();
        let s1 = random_sector(&mut rng, a);
        let s2 = random_sector(&mut rng, a);
        if let Some(w) = contains_unit_pair(&s1, &s2, TOL).unwrap() {
            prop_assert!((w.distance() - 1.0).abs() <= 1e-9);
            prop_assert!(s1.contains(&w.p, TOL) && s2.contains(&w.q, TOL));
        } else {
            let d = sector_distance_interval(&s1, &s2).unwrap();
            prop_assert!(d.max <= 1.0 + TOL || d.min >= 1.0 - TOL);
        }
    }

    #[test]
    fn membership_is_periodic(start in 0.0..TAU, width in 1e-3..TAU, angle in -20.0f64..20.0) {
        let arc = annulus_chroma::AngularInterval::new(start, width, true, false).unwrap();
        prop_assert_eq!(arc.contains(angle, 0.0), arc.contains(angle + TAU, 0.0));
    }
}

#[test]
fn grid_oracle_agrees_on_fixed_cases() {
    let a = Annulus::new(0.1).unwrap();
    let theta = unit_chord_angle(0.6).unwrap();
    let s = AnnularSector::new(a, annulus_chroma::AngularInterval::closed(0.0, theta).unwrap());
    let d = sector_distance_interval(&s, &s).unwrap();
    let (lo, hi) = grid_extremes(&s, &s, 400, 400);
    assert!((d.max - 1.0).abs() < 1e-12 && (hi - d.max).abs() < 1e-3);
    assert!((lo - d.min).abs() < 1e-3);
}

#[test]
fn unit_sector_is_narrowest_at_outer_radius() {
    // angle subtended by a unit chord with ends at radii (ρ1, ρ2), brute force
    for r in [0.01, 0.1, 0.2, 0.3, 0.45] {
        let a = Annulus::new(r).unwrap();
        let theta = unit_chord_angle(a.outer_radius()).unwrap();
        let mut narrowest = f64::INFINITY;
        for i in 0..=200 {
            for j in 0..=200 {
                let r1 = a.inner_radius() + 2.0 * r * i as f64 / 200.0;
                let r2 = a.inner_radius() + 2.0 * r * j as f64 / 200.0;
                let c = (r1 * r1 + r2 * r2 - 1.0) / (2.0 * r1 * r2);
                if c.abs() <= 1.0 {
                    narrowest = narrowest.min(c.acos());
                }
            }
        }
        assert!((narrowest - theta).abs() < 1e-12, "r = {r}");
    }
}

#[test]
fn chromatic_number_monotone_and_in_range() {
    let mut prev = 0;
    for i in 0..10_000 {
        let r = 0.001 + 0.498 * i as f64 / 9_999.0;
        let n = radial_chromatic_number(r).unwrap();
        assert!((3..=6).contains(&n));
        assert!(n >= prev, "decrease at r = {r}");
        prev = n;
    }
}

#[test]
fn threshold_exactness() {
    for t in thresholds::<f64>() {
        if t.colors == 6 {
            assert_eq!(radial_chromatic_number(0.499_999).unwrap(), 6);
            continue;
        }
        assert_eq!(radial_chromatic_number(t.max_r).unwrap(), t.colors);
        assert_eq!(radial_chromatic_number(t.max_r + 1e-6).unwrap(), t.colors + 1);
    }
}

#[test]
fn random_colorings_satisfy_span_lemma() {
    // Colorings with N colors are sometimes proper; every proper one must
    // keep each color class inside a unit sector.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut proper = 0;
    for _ in 0..3_000 {
        let r = rng.gen_range(0.001..0.499);
        let n = radial_chromatic_number(r).unwrap();
        let c = random_coloring(&mut rng, r, n, 8);
        if verify_radial_coloring(&c, TOL).unwrap().is_proper() {
            proper += 1;
        }
        assert!(lemma3_holds(&c, TOL).unwrap());
    }
    for i in 0..200 {
        let r = 0.001 + 0.498 * i as f64 / 199.0;
        let c = construct_radial_coloring(r).unwrap();
        assert!(lemma3_holds(&c, TOL).unwrap());
        proper += 1;
    }
    assert!(proper > 0);
}

#[test]
fn verifier_witness_matches_sampling() {
    // rejection sampling never finds a same-colored unit pair in a
    // construction the verifier accepts
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = construct_radial_coloring(0.1).unwrap();
    assert!(verify_radial_coloring(&c, TOL).unwrap().is_proper());
    let color_of = |p: &annulus_chroma::Point2<f64>| {
        let ang = p.angle();
        let b = c.boundaries();
        let i = b.iter().rposition(|&x| x <= ang).unwrap_or(b.len() - 1);
        if b[i] == ang {
            c.boundary_colors()[i]
        } else {
            c.sector_colors()[i]
        }
    };
    let a = c.annulus();
    for _ in 0..1_000_000 {
        let rho = rng.gen_range(a.inner_radius()..=a.outer_radius());
        let p = annulus_chroma::Point2::from_polar(rho, rng.gen_range(0.0..TAU));
        // the partner at unit distance in a random direction
        let q = p + annulus_chroma::Point2::from_polar(1.0, rng.gen_range(0.0..TAU));
        if !a.contains(&q, 0.0) {
            continue;
        }
        assert_ne!(color_of(&p), color_of(&q), "unit pair {p:?} {q:?}");
    }
}

#[test]
fn odd_cycles_exist_on_grid() {
    for i in 0..1_000 {
        let r = 0.001 + 0.498 * i as f64 / 999.0;
        let c = embed_odd_cycle(r).expect("odd cycle with n <= 99");
        assert!(c.check(1e-9));
    }
}

#[test]
fn odd_cycle_has_no_chords() {
    let c = embed_odd_cycle(0.01).unwrap();
    let udg = build_udg(c.vertices.clone(), 1e-9).unwrap();
    assert_eq!(udg.graph.edges().len(), 9);
}

#[test]
fn trirod_boundary_matches_table() {
    let t3 = thresholds::<f64>()[0].max_r;
    assert!((three_color_threshold::<f64>() - t3).abs() <= 1e-12);
    assert!(embed_trirod(t3).is_err());
    assert!(embed_trirod(t3 + 1e-12).is_ok());
}

#[test]
fn spindle_feasibility_boundary() {
    let thr = spindle_threshold::<f64>();
    for i in 0..10 {
        let r = thr - 0.05 * i as f64 / 9.0;
        assert!(matches!(embed_moser_spindle(r), Err(Error::Infeasible { .. })));
    }
    for i in 0..50 {
        let r = thr + 0.005 + (0.499 - thr - 0.005) * i as f64 / 49.0;
        let e = embed_moser_spindle(r).unwrap_or_else(|e| panic!("r = {r}: {e}"));
        assert!(e.margin > 0.0 && e.max_edge_error() <= 1e-9);
    }
}

#[test]
fn spindle_is_moser() {
    let e = embed_moser_spindle(0.45).unwrap();
    let g = build_udg(e.vertices.clone(), 1e-9).unwrap().graph;
    assert_eq!(g.edges().len(), 11);
    assert_eq!(g.degree_sequence(), [3, 3, 3, 3, 3, 3, 4]);
    assert_eq!(count_diamonds(&g), 2);
    assert_eq!(chromatic_number_exact(&g).unwrap().0, 4);

    let canon = build_udg(moser_spindle_points::<f64>(), 1e-9).unwrap().graph;
    assert_eq!(canon.edges().len(), 11);
    assert!(exhaustive_k_colorable(7, canon.edges(), 4));
    assert!(!exhaustive_k_colorable(7, canon.edges(), 3));
}

#[test]
fn solver_against_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.4);
        let (k, w) = chromatic_number_exact(&g).unwrap();
        assert_eq!(Some(k), exhaustive_chromatic_number(n, g.edges(), 8));
        assert!(is_proper(&g, &w).unwrap());
        assert_eq!(w.color_count() as u32, k);
        let lb = greedy_clique(&g).unwrap().len() as u32;
        let ub = dsatur_coloring(&g).unwrap().color_count() as u32;
        assert!(lb <= k && k <= ub);
        assert_eq!(chromatic_number_exact(&g).unwrap(), (k, w));
    }
}

#[test]
fn antipodal_thin_sectors_are_improper() {
    let a = Annulus::new(0.3).unwrap();
    let c = annulus_chroma::RadialColoring::new(
        a,
        vec![0.0, 0.05, 1.1, 2.1, PI, PI + 0.05, 4.2, 5.2],
        vec![0, 1, 2, 3, 0, 4, 5, 6],
        vec![6, 0, 1, 2, 3, 0, 4, 5],
    )
    .unwrap();
    match verify_radial_coloring(&c, TOL).unwrap() {
        Verdict::Improper(v) => assert_eq!(v.color, 0),
        Verdict::Proper => panic!("antipodal same-colored sectors contain a unit pair"),
    }
}
