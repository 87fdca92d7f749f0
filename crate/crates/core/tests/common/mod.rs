//! Independent oracles shared by the integration tests. Nothing here calls
//! into the distance analysis or the solver it is used to check.

#![allow(dead_code)]

use annulus_chroma::{
    AngularInterval, AnnularSector, Annulus, Graph, Point2, RadialColoring,
};
use rand::Rng;

/// Exact extremes of `‖p − q‖` over a `n_rad × n_ang` polar grid laid over the
/// closure of each sector.
///
/// For a fixed radius pair, `d² = ρ1² + ρ2² − 2ρ1ρ2·cos(φ2 − φ1)` is monotone
/// in the cosine, so the grid extremes are found from the extreme cosines over
/// all grid angle pairs and then a scan over all grid radius pairs. This is
/// the full brute-force grid answer, just evaluated in factored form.
pub fn grid_extremes(
    s1: &AnnularSector<f64>,
    s2: &AnnularSector<f64>,
    n_rad: usize,
    n_ang: usize,
) -> (f64, f64) {
    // Evenly spaced lattice, plus the partner arc's edge directions and their
    // antipodes wherever they land inside this arc. Without those two lattices
    // on overlapping arcs never line up, and the grid minimum stalls at about
    // half a lattice step.
    let angles = |arc: &AngularInterval<f64>, other: &AngularInterval<f64>| -> Vec<f64> {
        let mut v: Vec<f64> = if arc.is_point() {
            vec![arc.start()]
        } else {
            (0..n_ang)
                .map(|i| arc.start() + arc.width() * i as f64 / (n_ang - 1) as f64)
                .collect()
        };
        for e in [other.start(), other.end()] {
            for a in [e, e + std::f64::consts::PI] {
                let off = arc.offset_of(a);
                if off <= arc.width() {
                    v.push(arc.start() + off);
                }
            }
        }
        v
    };
    let a1 = angles(&s1.arc, &s2.arc);
    let a2 = angles(&s2.arc, &s1.arc);
    let (mut cmin, mut cmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &p in &a1 {
        for &q in &a2 {
            let c = (q - p).cos();
            cmin = cmin.min(c);
            cmax = cmax.max(c);
        }
    }
    let inner = s1.annulus.inner_radius();
    let outer = s1.annulus.outer_radius();
    let radii: Vec<f64> = (0..n_rad)
        .map(|i| inner + (outer - inner) * i as f64 / (n_rad - 1) as f64)
        .collect();
    let (mut dmin, mut dmax) = (f64::INFINITY, 0.0_f64);
    for &r1 in &radii {
        for &r2 in &radii {
            let base = r1 * r1 + r2 * r2;
            let lo = (base - 2.0 * r1 * r2 * cmax).max(0.0);
            let hi = base - 2.0 * r1 * r2 * cmin;
            dmin = dmin.min(lo);
            dmax = dmax.max(hi);
        }
    }
    (dmin.sqrt(), dmax.sqrt())
}

/// Uniform point in the closure of a sector, with each coordinate snapped to
/// an end of its range a quarter of the time so extremes get sampled.
pub fn sample_point<R: Rng>(rng: &mut R, s: &AnnularSector<f64>) -> Point2<f64> {
    let mut coord = |lo: f64, hi: f64| match rng.gen_range(0..8) {
        0 => lo,
        1 => hi,
        _ => rng.gen_range(lo..=hi),
    };
    let rho = coord(s.annulus.inner_radius(), s.annulus.outer_radius());
    let u = coord(0.0, s.arc.width());
    Point2::from_polar(rho, s.arc.start() + u)
}

/// A point of `s` near `p`: same radius (jittered) and the direction of `p`
/// clamped into the arc. Lets random pair sampling approach distance zero.
pub fn sample_near<R: Rng>(rng: &mut R, s: &AnnularSector<f64>, p: &Point2<f64>) -> Point2<f64> {
    let a = &s.annulus;
    let rho = (p.norm() + rng.gen_range(-1e-4..1e-4)).clamp(a.inner_radius(), a.outer_radius());
    let off = s.arc.offset_of(p.angle());
    let u = if off <= s.arc.width() {
        off
    } else if off - s.arc.width() < std::f64::consts::TAU - off {
        s.arc.width()
    } else {
        0.0
    };
    let u = (u + rng.gen_range(-1e-4..1e-4)).clamp(0.0, s.arc.width());
    Point2::from_polar(rho, s.arc.start() + u)
}

pub fn random_sector<R: Rng>(rng: &mut R, annulus: Annulus<f64>) -> AnnularSector<f64> {
    let start = rng.gen_range(0.0..std::f64::consts::TAU);
    match rng.gen_range(0..5) {
        0 => AnnularSector::radial_segment(annulus, start),
        1 => AnnularSector::new(annulus, AngularInterval::full()),
        _ => {
            let width = rng.gen_range(1e-3..std::f64::consts::TAU);
            let arc = AngularInterval::new(start, width, rng.gen(), rng.gen()).unwrap();
            AnnularSector::new(annulus, arc)
        }
    }
}

/// Random radial coloring with 1..=max_boundaries boundaries, every piece
/// colored uniformly from `0..colors`.
pub fn random_coloring<R: Rng>(
    rng: &mut R,
    r: f64,
    colors: u32,
    max_boundaries: usize,
) -> RadialColoring<f64> {
    let annulus = Annulus::new(r).unwrap();
    let n = rng.gen_range(1..=max_boundaries);
    let mut b: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
        .collect();
    b.sort_by(f64::total_cmp);
    b.dedup();
    let sc = (0..b.len()).map(|_| rng.gen_range(0..colors)).collect();
    let bc = (0..b.len()).map(|_| rng.gen_range(0..colors)).collect();
    RadialColoring::new(annulus, b, sc, bc).unwrap()
}

/// Chromatic number by trying every assignment of `k = 1, 2, …` colors.
pub fn exhaustive_chromatic_number(n: usize, edges: &[(usize, usize)], k_max: u32) -> Option<u32> {
    (1..=k_max).find(|&k| exhaustive_k_colorable(n, edges, k))
}

pub fn exhaustive_k_colorable(n: usize, edges: &[(usize, usize)], k: u32) -> bool {
    let mut colors = vec![0u32; n];
    loop {
        if edges.iter().all(|&(i, j)| colors[i] != colors[j]) {
            return true;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            colors[pos] += 1;
            if colors[pos] < k {
                break;
            }
            colors[pos] = 0;
            pos += 1;
        }
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Pairs of triangles sharing an edge (K4 minus an edge).
pub fn count_diamonds(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    let mut count = 0;
    for i in 0..triangles.len() {
        for j in i + 1..triangles.len() {
            let shared = triangles[i]
                .iter()
                .filter(|v| triangles[j].contains(v))
                .count();
            if shared == 2 {
                count += 1;
            }
        }
    }
    count
}
