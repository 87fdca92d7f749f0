//! Unit-distance gadgets placed inside `A_r`, each a certificate for a lower
//! bound on the chromatic number of the annulus.
//!
//! - a rod (one unit segment) swept through a half turn rules out 2 colors;
//! - an odd cycle of unit chords on one circle does the same combinatorially;
//! - a tri-rod (unit equilateral triangle) rotated by 120° rules out 3 colors;
//! - the Moser spindle is a 4-chromatic unit-distance graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{check_half_width, Annulus};
use crate::point::Point2;
use crate::radial::three_color_threshold;
use crate::scalar::Scalar;
use crate::udg::{build_udg, chromatic_number_exact, Graph};

/// Default cap on odd cycle length.
pub const ODD_CYCLE_MAX_N: usize = 99;

/// A rigid motion: rotation about the origin followed by a translation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Placement<T> {
    pub rotation: T,
    pub translation: Point2<T>,
}

impl<T: Scalar> Placement<T> {
    pub fn identity() -> Self {
        Self {
            rotation: T::zero(),
            translation: Point2::default(),
        }
    }

    pub fn apply(&self, p: &Point2<T>) -> Point2<T> {
        p.rotated(self.rotation) + self.translation
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GadgetKind {
    Rod,
    OddCycle { n: usize, winding: usize },
    TriRod,
    MoserSpindle,
}

impl GadgetKind {
    pub fn name(&self) -> &'static str {
        match self {
            GadgetKind::Rod => "rod",
            GadgetKind::OddCycle { .. } => "odd_cycle",
            GadgetKind::TriRod => "tri_rod",
            GadgetKind::MoserSpindle => "moser_spindle",
        }
    }
}

/// A gadget placed in a specific annulus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GadgetEmbedding<T> {
    pub kind: GadgetKind,
    pub annulus: Annulus<T>,
    pub vertices: Vec<Point2<T>>,
    pub unit_edges: Vec<(usize, usize)>,
    /// Smallest signed clearance of any vertex from the annulus boundary.
    pub margin: T,
    pub placement: Placement<T>,
}

impl<T: Scalar> GadgetEmbedding<T> {
    fn new(
        kind: GadgetKind,
        annulus: Annulus<T>,
        vertices: Vec<Point2<T>>,
        unit_edges: Vec<(usize, usize)>,
        placement: Placement<T>,
    ) -> Self {
        let margin = min_clearance(&annulus, &vertices);
        Self {
            kind,
            annulus,
            vertices,
            unit_edges,
            margin,
            placement,
        }
    }

    /// Largest deviation of any listed edge from unit length.
    pub fn max_edge_error(&self) -> T {
        self.unit_edges
            .iter()
            .map(|&(i, j)| (self.vertices[i].distance(&self.vertices[j]) - T::one()).abs())
            .fold(T::zero(), T::max)
    }

    pub fn is_interior(&self) -> bool {
        self.margin > T::zero()
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.vertices.len(), self.unit_edges.iter().copied())
    }

    /// Checks edge lengths against `tol` and containment of every vertex.
    pub fn check(&self, tol: T) -> bool {
        self.max_edge_error() <= tol
            && self
                .vertices
                .iter()
                .all(|v| self.annulus.contains(v, T::zero()))
    }
}

fn min_clearance<T: Scalar>(annulus: &Annulus<T>, vertices: &[Point2<T>]) -> T {
    vertices
        .iter()
        .map(|v| annulus.clearance(v))
        .fold(T::infinity(), T::min)
}

/// A unit segment with both endpoints on the circle of radius
/// `ρ = (½ + outer)/2`, midway between the unit-diameter circle and the rim.
pub fn embed_rod<T: Scalar>(r: T) -> Result<GadgetEmbedding<T>> {
    let annulus = Annulus::new(r)?;
    let half = T::of(0.5);
    let rho = (half + annulus.outer_radius()) * half;
    let h = (rho * rho - T::of(0.25)).sqrt();
    Ok(GadgetEmbedding::new(
        GadgetKind::Rod,
        annulus,
        vec![Point2::new(-half, h), Point2::new(half, h)],
        vec![(0, 1)],
        Placement::identity(),
    ))
}

/// Rigid rotation of `vertices` about the origin through `sweep`, sampled at
/// `steps + 1` evenly spaced positions. True iff every sampled vertex stays
/// strictly inside the annulus.
fn sweep_is_interior<T: Scalar>(
    annulus: &Annulus<T>,
    vertices: &[Point2<T>],
    sweep: T,
    steps: usize,
) -> Result<bool> {
    if steps < 2 {
        return Err(Error::Domain {
            what: "steps",
            value: steps as f64,
            expected: "steps >= 2",
        });
    }
    let denom = T::from_usize(steps).unwrap();
    Ok((0..=steps).all(|k| {
        let angle = sweep * T::from_usize(k).unwrap() / denom;
        vertices
            .iter()
            .all(|v| annulus.contains_strictly(&v.rotated(angle)))
    }))
}

/// Sweeps the rod through a half turn about the origin. Its center travels
/// on the circle of radius `√(ρ² − ¼)` while the rod turns with it, so both
/// endpoints stay at radius `ρ` and each endpoint passes over the other's
/// starting position.
pub fn rod_rotation_path<T: Scalar>(r: T, steps: usize) -> Result<bool> {
    let rod = embed_rod(r)?;
    sweep_is_interior(&rod.annulus, &rod.vertices, T::PI(), steps)
}

/// Smallest odd `n ≤ n_max` (then smallest winding `w`, coprime to `n`) whose
/// regular star polygon `{n/w}` with unit edges has its circumradius
/// `1/(2 sin(πw/n))` inside `[inner, outer]`.
pub fn embed_odd_cycle_with_limit<T: Scalar>(r: T, n_max: usize) -> Result<GadgetEmbedding<T>> {
    let annulus = Annulus::new(r)?;
    for n in (3..=n_max).step_by(2) {
        for w in 1..=(n - 1) / 2 {
            if gcd(n, w) != 1 {
                continue;
            }
            let nt = T::from_usize(n).unwrap();
            let wt = T::from_usize(w).unwrap();
            let rho = T::one() / (T::of(2.0) * (T::PI() * wt / nt).sin());
            if rho < annulus.inner_radius() || rho > annulus.outer_radius() {
                continue;
            }
            let vertices = (0..n)
                .map(|k| {
                    let kt = T::from_usize(k).unwrap();
                    Point2::from_polar(rho, T::TAU() * wt * kt / nt)
                })
                .collect();
            let edges = (0..n).map(|k| (k, (k + 1) % n)).collect();
            return Ok(GadgetEmbedding::new(
                GadgetKind::OddCycle { n, winding: w },
                annulus,
                vertices,
                edges,
                Placement::identity(),
            ));
        }
    }
    Err(Error::NotFound {
        r: r.as_f64(),
        n_max,
    })
}

pub fn embed_odd_cycle<T: Scalar>(r: T) -> Result<GadgetEmbedding<T>> {
    embed_odd_cycle_with_limit(r, ODD_CYCLE_MAX_N)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The unit equilateral triangle centered at the origin (circumradius `1/√3`).
/// Feasible exactly when `r > (2 − √3)/(2√3)`.
pub fn embed_trirod<T: Scalar>(r: T) -> Result<GadgetEmbedding<T>> {
    let annulus = Annulus::new(r)?;
    let threshold = three_color_threshold::<T>();
    if r <= threshold {
        return Err(Error::Infeasible {
            gadget: "tri_rod",
            threshold: threshold.as_f64(),
        });
    }
    let rho = T::one() / T::of(3.0).sqrt();
    let third = T::TAU() / T::of(3.0);
    let vertices = (0..3)
        .map(|k| Point2::from_polar(rho, T::FRAC_PI_2() + third * T::from_i32(k).unwrap()))
        .collect();
    Ok(GadgetEmbedding::new(
        GadgetKind::TriRod,
        annulus,
        vertices,
        vec![(0, 1), (1, 2), (0, 2)],
        Placement::identity(),
    ))
}

/// Rotates the tri-rod about the origin through 120°; each vertex ends where
/// the next one began.
pub fn trirod_rotation_path<T: Scalar>(r: T, steps: usize) -> Result<bool> {
    let tri = embed_trirod(r)?;
    sweep_is_interior(&tri.annulus, &tri.vertices, T::TAU() / T::of(3.0), steps)
}

/// `3/√11 − ½`: the circumradius of the spindle's outer triangle (sides
/// `√3, √3, 1`) is `3/√11`.
pub fn spindle_threshold<T: Scalar>() -> T {
    T::of(3.0) / T::of(11.0).sqrt() - T::of(0.5)
}

/// Moser spindle edges on the vertex order of [`moser_spindle_points`].
pub const MOSER_EDGES: [(usize, usize); 11] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 3),
    (2, 3),
    (0, 4),
    (0, 5),
    (4, 5),
    (4, 6),
    (5, 6),
    (3, 6),
];

/// Canonical spindle: hub at the origin, two unit rhombi (pairs of unit
/// equilateral triangles) whose far tips at distance `√3` are turned apart
/// by `2·asin(1/(2√3))` so the tips are unit distance apart. Symmetric about
/// the y-axis. Order: hub, rhombus one (two sides, tip), rhombus two.
pub fn moser_spindle_points<T: Scalar>() -> Vec<Point2<T>> {
    let s3 = T::of(3.0).sqrt();
    let half_spread = (T::one() / (T::of(2.0) * s3)).asin();
    let sixth = T::FRAC_PI_6();
    let mut pts = vec![Point2::default()];
    for axis in [T::FRAC_PI_2() - half_spread, T::FRAC_PI_2() + half_spread] {
        pts.push(Point2::from_polar(T::one(), axis - sixth));
        pts.push(Point2::from_polar(T::one(), axis + sixth));
        pts.push(Point2::from_polar(s3, axis));
    }
    pts
}

/// Settings for the spindle placement search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpindleSearch {
    /// Coarse grid resolution per axis.
    pub grid: usize,
    /// Random restarts for the local refinement, drawn from `seed`.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SpindleSearch {
    fn default() -> Self {
        Self {
            grid: 64,
            restarts: 16,
            seed: 0,
        }
    }
}

/// Clearance when the annulus is centered at `center` in spindle coordinates.
fn spindle_margin<T: Scalar>(annulus: &Annulus<T>, pts: &[Point2<T>], center: Point2<T>) -> T {
    pts.iter()
        .map(|p| annulus.clearance(&(*p - center)))
        .fold(T::infinity(), T::min)
}

fn circumcenter<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Option<Point2<T>> {
    let d = T::of(2.0) * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if d.abs() <= T::epsilon() {
        return None;
    }
    let a2 = a.x * a.x + a.y * a.y;
    let b2 = b.x * b.x + b.y * b.y;
    let c2 = c.x * c.x + c.y * c.y;
    Some(Point2::new(
        (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
        (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d,
    ))
}

/// Compass search over the annulus center, eight directions, halving the step
/// until it falls below `min_step`.
fn refine_center<T: Scalar>(
    annulus: &Annulus<T>,
    pts: &[Point2<T>],
    mut center: Point2<T>,
    mut step: T,
    min_step: T,
) -> (Point2<T>, T) {
    let mut best = spindle_margin(annulus, pts, center);
    let diag = T::FRAC_1_SQRT_2();
    let dirs = [
        (T::one(), T::zero()),
        (-T::one(), T::zero()),
        (T::zero(), T::one()),
        (T::zero(), -T::one()),
        (diag, diag),
        (-diag, diag),
        (diag, -diag),
        (-diag, -diag),
    ];
    while step > min_step {
        let mut improved = false;
        for (dx, dy) in dirs {
            let cand = center + Point2::new(dx * step, dy * step);
            let m = spindle_margin(annulus, pts, cand);
            if m > best {
                best = m;
                center = cand;
                improved = true;
            }
        }
        if !improved {
            step = step * T::of(0.5);
        }
    }
    (center, best)
}

/// Places the Moser spindle strictly inside `A_r`, which is possible exactly
/// when `r > 3/√11 − ½`.
///
/// The annulus is rotation invariant, so only the translation is searched:
/// a coarse grid over the spindle's bounding box, the circumcenters of all
/// vertex triples and midpoints of all pairs, plus seeded random points, each
/// refined by compass search. The best center wins; ties keep the earlier
/// candidate so the result is reproducible.
pub fn embed_moser_spindle_with<T: Scalar>(r: T, search: SpindleSearch) -> Result<GadgetEmbedding<T>> {
    let annulus = Annulus::new(r)?;
    let threshold = spindle_threshold::<T>();
    if r <= threshold {
        return Err(Error::Infeasible {
            gadget: "moser_spindle",
            threshold: threshold.as_f64(),
        });
    }
    let pts = moser_spindle_points::<T>();

    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in &pts {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }

    let mut starts = Vec::new();
    let g = search.grid.max(2);
    let gm1 = T::from_usize(g - 1).unwrap();
    for i in 0..g {
        for j in 0..g {
            let fx = T::from_usize(i).unwrap() / gm1;
            let fy = T::from_usize(j).unwrap() / gm1;
            starts.push(Point2::new(
                lo.x + (hi.x - lo.x) * fx,
                lo.y + (hi.y - lo.y) * fy,
            ));
        }
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            starts.push(Point2::new(
                (pts[i].x + pts[j].x) * T::of(0.5),
                (pts[i].y + pts[j].y) * T::of(0.5),
            ));
            for k in j + 1..pts.len() {
                if let Some(c) = circumcenter(pts[i], pts[j], pts[k]) {
                    starts.push(c);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.restarts {
        let fx = T::of(rng.gen::<f64>());
        let fy = T::of(rng.gen::<f64>());
        starts.push(Point2::new(
            lo.x + (hi.x - lo.x) * fx,
            lo.y + (hi.y - lo.y) * fy,
        ));
    }

    // Refine only the most promising starts.
    let mut scored: Vec<(usize, T)> = starts
        .iter()
        .enumerate()
        .map(|(i, c)| (i, spindle_margin(&annulus, &pts, *c)))
        .collect();
    scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    let cell = (hi.x - lo.x).max(hi.y - lo.y) / gm1;
    let min_step = T::epsilon() * T::of(64.0);
    let mut best: Option<(Point2<T>, T)> = None;
    for &(i, _) in scored.iter().take(8) {
        let (c, m) = refine_center(&annulus, &pts, starts[i], cell, min_step);
        if best.is_none_or(|(_, bm)| m > bm) {
            best = Some((c, m));
        }
    }
    let (center, margin) = best.expect("at least one start");
    if !(margin > T::zero()) {
        return Err(Error::SearchFailure {
            gadget: "moser_spindle",
            r: r.as_f64(),
            best_margin: margin.as_f64(),
        });
    }

    let placement = Placement {
        rotation: T::zero(),
        translation: -center,
    };
    let vertices = pts.iter().map(|p| placement.apply(p)).collect();
    let embedding = GadgetEmbedding::new(
        GadgetKind::MoserSpindle,
        annulus,
        vertices,
        MOSER_EDGES.to_vec(),
        placement,
    );
    if embedding.max_edge_error() > T::default_tolerance() || !embedding.is_interior() {
        return Err(Error::Internal(
            "spindle placement failed its own edge/containment check".into(),
        ));
    }
    Ok(embedding)
}

pub fn embed_moser_spindle<T: Scalar>(r: T) -> Result<GadgetEmbedding<T>> {
    embed_moser_spindle_with(r, SpindleSearch::default())
}

/// One gadget that contributes to a lower bound, with what it certifies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate<T> {
    pub embedding: GadgetEmbedding<T>,
    /// Colors the gadget forces.
    pub forces: u32,
    /// For sweeping gadgets, whether the rotation path stayed interior.
    pub rotation_path: Option<bool>,
    /// Exact chromatic number of the gadget's unit-distance graph.
    pub graph_chromatic_number: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBound<T> {
    pub bound: u32,
    pub certificates: Vec<Certificate<T>>,
}

const PATH_STEPS: usize = 360;

/// Best lower bound on `χ(A_r)` certified by the gadgets above: 3 from an odd
/// cycle, 4 when the tri-rod sweep stays interior or the spindle embeds.
pub fn gadget_lower_bound<T: Scalar>(r: T) -> Result<LowerBound<T>> {
    gadget_lower_bound_with(r, SpindleSearch::default())
}

pub fn gadget_lower_bound_with<T: Scalar>(r: T, search: SpindleSearch) -> Result<LowerBound<T>> {
    check_half_width(r)?;
    let tol = T::default_tolerance();
    let mut certificates = Vec::new();

    let chromatic = |e: &GadgetEmbedding<T>| -> Result<u32> {
        let udg = build_udg(e.vertices.clone(), tol)?;
        Ok(chromatic_number_exact(&udg.graph)?.0)
    };

    let cycle = embed_odd_cycle(r)?;
    let cycle_chi = chromatic(&cycle)?;
    certificates.push(Certificate {
        forces: cycle_chi,
        rotation_path: None,
        graph_chromatic_number: cycle_chi,
        embedding: cycle,
    });

    match embed_trirod(r) {
        Ok(tri) => {
            let path = trirod_rotation_path(r, PATH_STEPS)?;
            let chi = chromatic(&tri)?;
            certificates.push(Certificate {
                forces: if path { 4 } else { chi },
                rotation_path: Some(path),
                graph_chromatic_number: chi,
                embedding: tri,
            });
        }
        Err(Error::Infeasible { .. }) => {}
        Err(e) => return Err(e),
    }

    match embed_moser_spindle_with(r, search) {
        Ok(spindle) => {
            let chi = chromatic(&spindle)?;
            certificates.push(Certificate {
                forces: chi,
                rotation_path: None,
                graph_chromatic_number: chi,
                embedding: spindle,
            });
        }
        Err(Error::Infeasible { .. }) => {}
        Err(e) => return Err(e),
    }

    let bound = certificates.iter().map(|c| c.forces).max().unwrap_or(1);
    Ok(LowerBound {
        bound,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rod_examples() {
        let rod = embed_rod(0.1_f64).unwrap();
        assert!((rod.vertices[0].x + 0.5).abs() < 1e-15);
        assert!((rod.vertices[1].y - 0.0525f64.sqrt()).abs() < 1e-12);
        assert!((rod.vertices[1].y - 0.229129).abs() < 1e-6);
        assert!((rod.vertices[0].norm() - 0.55).abs() < 1e-12);
        assert!(rod.is_interior() && rod.check(1e-9));

        let rod = embed_rod(0.01_f64).unwrap();
        assert!((rod.vertices[0].norm() - 0.505).abs() < 1e-12);
        assert!((rod.vertices[0].y - 0.070887).abs() < 1e-6);

        let rod = embed_rod(0.49_f64).unwrap();
        assert!((rod.vertices[0].norm() - 0.745).abs() < 1e-12);
        assert!((rod.margin - 0.245).abs() < 1e-12);
    }

    #[test]
    fn rod_paths() {
        assert!(rod_rotation_path(0.1, 360).unwrap());
        assert!(rod_rotation_path(0.01, 360).unwrap());
        assert!(rod_rotation_path(0.3, 2).unwrap());
        assert!(rod_rotation_path(0.3, 1).is_err());
    }

    #[test]
    fn odd_cycle_examples() {
        let c = embed_odd_cycle(0.1_f64).unwrap();
        assert_eq!(c.kind, GadgetKind::OddCycle { n: 3, winding: 1 });
        assert!((c.vertices[0].norm() - 1.0 / 3f64.sqrt()).abs() < 1e-12);

        let c = embed_odd_cycle(0.01_f64).unwrap();
        assert_eq!(c.kind, GadgetKind::OddCycle { n: 9, winding: 4 });
        assert!((c.vertices[0].norm() - 0.50771).abs() < 1e-5);
        assert!(c.check(1e-9));

        assert!(matches!(
            embed_odd_cycle_with_limit(0.001, 5),
            Err(Error::NotFound { n_max: 5, .. })
        ));
    }

    #[test]
    fn trirod_examples() {
        let t = embed_trirod(0.08_f64).unwrap();
        assert!((t.margin - (0.58 - 1.0 / 3f64.sqrt())).abs() < 1e-12);
        assert!((t.margin - 0.00265).abs() < 1e-5);
        assert!(t.check(1e-12));

        let t3 = three_color_threshold::<f64>();
        assert!(matches!(
            embed_trirod(t3),
            Err(Error::Infeasible { gadget: "tri_rod", .. })
        ));
        // 0.0773503 rounds the threshold up, so it is already feasible
        assert!(embed_trirod(0.0773503_f64).is_ok());

        let t = embed_trirod(0.3_f64).unwrap();
        assert!((t.margin - 0.22265).abs() < 1e-5);

        assert!(trirod_rotation_path(0.08, 360).unwrap());
        assert!(trirod_rotation_path(0.45, 8).unwrap());
        assert!(trirod_rotation_path(t3, 360).is_err());
    }

    #[test]
    fn spindle_coordinates() {
        let pts = moser_spindle_points::<f64>();
        let udg = build_udg(pts, 1e-9).unwrap();
        let mut edges = udg.graph.edges().to_vec();
        edges.sort_unstable();
        let mut expected = MOSER_EDGES.to_vec();
        expected.sort_unstable();
        assert_eq!(edges, expected);
        assert_eq!(udg.graph.degree_sequence(), [3, 3, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn spindle_threshold_is_outer_circumradius() {
        let pts = moser_spindle_points::<f64>();
        let c = circumcenter(pts[0], pts[3], pts[6]).unwrap();
        let rad = c.distance(&pts[0]);
        assert!((rad - 3.0 / 11f64.sqrt()).abs() < 1e-12);
        assert!((spindle_threshold::<f64>() - 0.404534).abs() < 1e-6);
    }

    #[test]
    fn spindle_embedding() {
        assert!(matches!(
            embed_moser_spindle(0.4045),
            Err(Error::Infeasible { gadget: "moser_spindle", .. })
        ));
        let e = embed_moser_spindle(0.42_f64).unwrap();
        assert_eq!(e.vertices.len(), 7);
        assert_eq!(e.unit_edges.len(), 11);
        assert!(e.margin > 0.0);
        assert!(e.max_edge_error() <= 1e-9);
        let (chi, _) = chromatic_number_exact(&e.graph().unwrap()).unwrap();
        assert_eq!(chi, 4);
    }

    #[test]
    fn spindle_search_reproducible() {
        let a = embed_moser_spindle_with(0.43_f64, SpindleSearch { seed: 7, ..Default::default() }).unwrap();
        let b = embed_moser_spindle_with(0.43_f64, SpindleSearch { seed: 7, ..Default::default() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lower_bound_examples() {
        let lb = gadget_lower_bound(0.05_f64).unwrap();
        assert_eq!(lb.bound, 3);
        assert_eq!(lb.certificates.len(), 1);

        let lb = gadget_lower_bound(0.1_f64).unwrap();
        assert_eq!(lb.bound, 4);
        assert!(lb.certificates.iter().any(|c| c.embedding.kind == GadgetKind::TriRod));

        let lb = gadget_lower_bound(0.42_f64).unwrap();
        assert_eq!(lb.bound, 4);
        let kinds: Vec<_> = lb.certificates.iter().map(|c| c.embedding.kind.name()).collect();
        assert!(kinds.contains(&"tri_rod") && kinds.contains(&"moser_spindle"));
    }
}
