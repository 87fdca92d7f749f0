//! Planar geometry of the annulus `A_r`: angular intervals, annular sectors and
//! the exact range of distances between two sectors.
//!
//! Angles are radians measured counterclockwise and normalized to `[0, 2π)`.
//! An interval is stored as a start angle plus a width, so an arc crossing the
//! positive x-axis is represented without splitting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point2;
use crate::scalar::{normalize_angle, Scalar};

/// The closed annulus `{p : ½ − r ≤ ‖p‖ ≤ ½ + r}` for `0 < r < ½`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus<T> {
    r: T,
    inner_radius: T,
    outer_radius: T,
}

impl<T: Scalar> Annulus<T> {
    pub fn new(r: T) -> Result<Self> {
        check_half_width(r)?;
        let half = T::of(0.5);
        Ok(Self {
            r,
            inner_radius: half - r,
            outer_radius: half + r,
        })
    }

    pub fn r(&self) -> T {
        self.r
    }

    pub fn inner_radius(&self) -> T {
        self.inner_radius
    }

    pub fn outer_radius(&self) -> T {
        self.outer_radius
    }

    /// Signed clearance of `p` from the nearer boundary circle; positive inside.
    pub fn clearance(&self, p: &Point2<T>) -> T {
        let rho = p.norm();
        (rho - self.inner_radius).min(self.outer_radius - rho)
    }

    pub fn contains(&self, p: &Point2<T>, tol: T) -> bool {
        self.clearance(p) >= -tol
    }

    /// Strict interior membership: both radial inequalities hold strictly.
    pub fn contains_strictly(&self, p: &Point2<T>) -> bool {
        self.clearance(p) > T::zero()
    }
}

pub(crate) fn check_half_width<T: Scalar>(r: T) -> Result<()> {
    if r.is_finite() && r > T::zero() && r < T::of(0.5) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "r",
            value: r.as_f64(),
            expected: "0 < r < 1/2",
        })
    }
}

/// An arc of directions with explicit endpoint membership.
///
/// A width of `2π` is the full circle; its flags are ignored. A width of zero
/// is a single closed direction and only comes from [`AngularInterval::point`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularInterval<T> {
    start: T,
    width: T,
    start_closed: bool,
    end_closed: bool,
}

impl<T: Scalar> AngularInterval<T> {
    pub fn new(start: T, width: T, start_closed: bool, end_closed: bool) -> Result<Self> {
        if !start.is_finite() {
            return Err(Error::Domain {
                what: "start",
                value: start.as_f64(),
                expected: "a finite angle",
            });
        }
        if !(width > T::zero() && width <= T::TAU()) {
            return Err(Error::Domain {
                what: "width",
                value: width.as_f64(),
                expected: "0 < width <= 2π",
            });
        }
        Ok(Self {
            start: normalize_angle(start),
            width,
            start_closed,
            end_closed,
        })
    }

    /// Sector open at both ends.
    pub fn open(start: T, width: T) -> Result<Self> {
        Self::new(start, width, false, false)
    }

    pub fn closed(start: T, width: T) -> Result<Self> {
        Self::new(start, width, true, true)
    }

    pub fn full() -> Self {
        Self {
            start: T::zero(),
            width: T::TAU(),
            start_closed: true,
            end_closed: true,
        }
    }

    /// The degenerate single direction `angle`.
    pub fn point(angle: T) -> Self {
        Self {
            start: normalize_angle(angle),
            width: T::zero(),
            start_closed: true,
            end_closed: true,
        }
    }

    pub fn start(&self) -> T {
        self.start
    }

    pub fn width(&self) -> T {
        self.width
    }

    /// End angle, unwrapped (may exceed `2π`).
    pub fn end(&self) -> T {
        self.start + self.width
    }

    pub fn is_full(&self) -> bool {
        self.width >= T::TAU()
    }

    pub fn is_point(&self) -> bool {
        self.width == T::zero()
    }

    pub fn start_closed(&self) -> bool {
        self.is_full() || self.start_closed
    }

    pub fn end_closed(&self) -> bool {
        self.is_full() || self.end_closed
    }

    /// Offset of `angle` past the start, in `[0, 2π)`.
    pub fn offset_of(&self, angle: T) -> T {
        normalize_angle(angle - self.start)
    }

    /// Membership of a direction; closed endpoints accept angles within `tol`.
    pub fn contains(&self, angle: T, tol: T) -> bool {
        if self.is_full() {
            return true;
        }
        let tau = T::TAU();
        let d = self.offset_of(angle);
        if d > T::zero() && d < self.width {
            return true;
        }
        let to_start = d.min(tau - d);
        let e = (d - self.width).abs();
        let to_end = e.min(tau - e);
        (self.start_closed() && to_start <= tol) || (self.end_closed() && to_end <= tol)
    }
}

/// A sector of an annulus spanning the full radial extent `[inner, outer]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnularSector<T> {
    pub annulus: Annulus<T>,
    pub arc: AngularInterval<T>,
}

impl<T: Scalar> AnnularSector<T> {
    pub fn new(annulus: Annulus<T>, arc: AngularInterval<T>) -> Self {
        Self { annulus, arc }
    }

    /// The closed radial segment at direction `angle`.
    pub fn radial_segment(annulus: Annulus<T>, angle: T) -> Self {
        Self::new(annulus, AngularInterval::point(angle))
    }

    pub fn contains(&self, p: &Point2<T>, tol: T) -> bool {
        self.annulus.contains(p, tol) && self.arc.contains(p.angle(), tol)
    }

    /// Point at radius `rho` and offset `u` past the arc start.
    fn point_at(&self, rho: T, u: T) -> Point2<T> {
        Point2::from_polar(rho, self.arc.start + u)
    }
}

/// Range of `‖p − q‖` over `p ∈ s1`, `q ∈ s2`.
///
/// `min`/`max` are the infimum and supremum over the closures. The attainment
/// flags say whether the extremum is reached by a pair lying in the sectors
/// themselves, honoring open endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceInterval<T> {
    pub min: T,
    pub max: T,
    pub min_attained_interior: bool,
    pub max_attained_interior: bool,
}

/// A same-colored (or same-set) pair of points at unit distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitPair<T> {
    pub p: Point2<T>,
    pub q: Point2<T>,
}

impl<T: Scalar> UnitPair<T> {
    pub fn distance(&self) -> T {
        self.p.distance(&self.q)
    }
}

/// Offsets along both arcs plus both radii.
#[derive(Debug, Clone, Copy)]
struct PairConfig<T> {
    u1: T,
    rho1: T,
    u2: T,
    rho2: T,
}

#[derive(Debug, Clone, Copy)]
struct Extreme<T> {
    value: T,
    attained: bool,
    config: PairConfig<T>,
}

/// A candidate angular difference `φ2 − φ1` together with a realizing pair of
/// arc offsets and whether that pair lies in the (half-open) arcs.
#[derive(Debug, Clone, Copy)]
struct AngleCandidate<T> {
    delta: T,
    u1: T,
    u2: T,
    attainable: bool,
}

fn check_same_annulus<T: Scalar>(s1: &AnnularSector<T>, s2: &AnnularSector<T>) -> Result<()> {
    if s1.annulus == s2.annulus {
        Ok(())
    } else {
        Err(Error::MismatchedAnnuli(
            s1.annulus.r().as_f64(),
            s2.annulus.r().as_f64(),
        ))
    }
}

/// `‖p − q‖` for radii `rho1`, `rho2` and angular difference `delta`, in the
/// cancellation-free form `(ρ1 − ρ2)² + 4ρ1ρ2 sin²(Δ/2)`.
fn polar_distance<T: Scalar>(rho1: T, rho2: T, delta: T) -> T {
    let s = (delta * T::of(0.5)).sin();
    let dr = rho1 - rho2;
    (dr * dr + T::of(4.0) * rho1 * rho2 * s * s).max(T::zero()).sqrt()
}

/// Angular differences at which `cos Δ` can be extremal over the difference
/// set `[lo, hi]`: its two ends and every multiple of π strictly inside.
fn angle_candidates<T: Scalar>(s1: &AnnularSector<T>, s2: &AnnularSector<T>) -> Vec<AngleCandidate<T>> {
    let (a1, a2) = (&s1.arc, &s2.arc);
    let (w1, w2) = (a1.width(), a2.width());
    let base = a2.start() - a1.start();
    let lo = base - w1;
    let hi = base + w2;

    let mut out = vec![
        AngleCandidate {
            delta: lo,
            u1: w1,
            u2: T::zero(),
            attainable: a2.start_closed() && a1.end_closed(),
        },
        AngleCandidate {
            delta: hi,
            u1: T::zero(),
            u2: w2,
            attainable: a2.end_closed() && a1.start_closed(),
        },
    ];

    let pi = T::PI();
    let first = (lo / pi).ceil().to_i64().unwrap_or(0);
    let last = (hi / pi).floor().to_i64().unwrap_or(-1);
    for k in first..=last {
        let delta = T::from_i64(k).unwrap_or_else(T::zero) * pi;
        if delta <= lo || delta >= hi {
            continue;
        }
        // u2 − u1 = delta − base; take the middle of the feasible u1 range so
        // both offsets sit strictly inside their arcs.
        let shift = delta - base;
        let u1_lo = T::zero().max(-shift);
        let u1_hi = w1.min(w2 - shift);
        let u1 = (u1_lo + u1_hi) * T::of(0.5);
        out.push(AngleCandidate {
            delta,
            u1,
            u2: u1 + shift,
            attainable: true,
        });
    }
    out
}

/// Radius pairs that can minimize `d²` at fixed `cos Δ = c`: the four corners
/// of `[a, b]²` and the edge critical points `ρ1 = c·ρ2` (and symmetric).
fn min_radius_candidates<T: Scalar>(a: T, b: T, c: T) -> Vec<(T, T)> {
    let mut out = vec![(a, a), (a, b), (b, a), (b, b)];
    for edge in [a, b] {
        let crit = c * edge;
        if crit > a && crit < b {
            out.push((crit, edge));
            out.push((edge, crit));
        }
    }
    out
}

fn extremes<T: Scalar>(s1: &AnnularSector<T>, s2: &AnnularSector<T>) -> (Extreme<T>, Extreme<T>) {
    let a = s1.annulus.inner_radius();
    let b = s1.annulus.outer_radius();
    let candidates = angle_candidates(s1, s2);

    let mut per_candidate = Vec::with_capacity(candidates.len());
    for cand in &candidates {
        let c = cand.delta.cos();
        let mut lo: Option<(T, T, T)> = None;
        for (r1, r2) in min_radius_candidates(a, b, c) {
            let d = polar_distance(r1, r2, cand.delta);
            if lo.is_none_or(|(v, _, _)| d < v) {
                lo = Some((d, r1, r2));
            }
        }
        // d² is convex in each radius separately, so the maximum is a corner.
        let mut hi: Option<(T, T, T)> = None;
        for (r1, r2) in [(a, a), (a, b), (b, a), (b, b)] {
            let d = polar_distance(r1, r2, cand.delta);
            if hi.is_none_or(|(v, _, _)| d > v) {
                hi = Some((d, r1, r2));
            }
        }
        per_candidate.push((cand, lo.unwrap(), hi.unwrap()));
    }

    let eps = T::epsilon() * T::of(16.0);
    let config = |cand: &AngleCandidate<T>, r1: T, r2: T| PairConfig {
        u1: cand.u1,
        rho1: r1,
        u2: cand.u2,
        rho2: r2,
    };

    let min_value = per_candidate
        .iter()
        .map(|(_, lo, _)| lo.0)
        .fold(T::infinity(), T::min);
    let max_value = per_candidate
        .iter()
        .map(|(_, _, hi)| hi.0)
        .fold(T::neg_infinity(), T::max);

    let pick = |want_min: bool| -> Extreme<T> {
        let target = if want_min { min_value } else { max_value };
        let mut fallback = None;
        for (cand, lo, hi) in &per_candidate {
            let (v, r1, r2) = if want_min { *lo } else { *hi };
            if (v - target).abs() > eps {
                continue;
            }
            if cand.attainable {
                return Extreme {
                    value: target,
                    attained: true,
                    config: config(cand, r1, r2),
                };
            }
            fallback.get_or_insert(Extreme {
                value: target,
                attained: false,
                config: config(cand, r1, r2),
            });
        }
        fallback.expect("extremum realized by some candidate")
    };

    (pick(true), pick(false))
}

/// Exact range of distances between two sectors of the same annulus.
pub fn sector_distance_interval<T: Scalar>(
    s1: &AnnularSector<T>,
    s2: &AnnularSector<T>,
) -> Result<DistanceInterval<T>> {
    check_same_annulus(s1, s2)?;
    let (lo, hi) = extremes(s1, s2);
    Ok(DistanceInterval {
        min: lo.value,
        max: hi.value,
        min_attained_interior: lo.attained,
        max_attained_interior: hi.attained,
    })
}

/// Offset bounds for an arc, pulled in by `delta` at open ends.
fn offset_bounds<T: Scalar>(arc: &AngularInterval<T>, delta: T) -> (T, T) {
    if arc.is_point() {
        return (T::zero(), T::zero());
    }
    let lo = if arc.start_closed() { T::zero() } else { delta };
    let hi = if arc.end_closed() {
        arc.width()
    } else {
        arc.width() - delta
    };
    (lo, hi)
}

fn clamp_config<T: Scalar>(
    cfg: PairConfig<T>,
    b1: (T, T),
    b2: (T, T),
) -> PairConfig<T> {
    PairConfig {
        u1: cfg.u1.max(b1.0).min(b1.1),
        rho1: cfg.rho1,
        u2: cfg.u2.max(b2.0).min(b2.1),
        rho2: cfg.rho2,
    }
}

fn lerp_config<T: Scalar>(from: &PairConfig<T>, to: &PairConfig<T>, t: T) -> PairConfig<T> {
    let mix = |x: T, y: T| x + (y - x) * t;
    PairConfig {
        u1: mix(from.u1, to.u1),
        rho1: mix(from.rho1, to.rho1),
        u2: mix(from.u2, to.u2),
        rho2: mix(from.rho2, to.rho2),
    }
}

fn realize<T: Scalar>(s1: &AnnularSector<T>, s2: &AnnularSector<T>, cfg: &PairConfig<T>) -> UnitPair<T> {
    UnitPair {
        p: s1.point_at(cfg.rho1, cfg.u1),
        q: s2.point_at(cfg.rho2, cfg.u2),
    }
}

/// Bisection for a unit pair on the straight path (in offset/radius
/// coordinates) between a short and a long configuration, both pulled
/// strictly inside any open arc ends.
fn bisect_unit_pair<T: Scalar>(
    s1: &AnnularSector<T>,
    s2: &AnnularSector<T>,
    short: &PairConfig<T>,
    long: &PairConfig<T>,
) -> Option<UnitPair<T>> {
    let one = T::one();
    let dist = |cfg: &PairConfig<T>| realize(s1, s2, cfg).distance();

    let mut frac = T::of(0.125);
    for _ in 0..60 {
        let b1 = offset_bounds(&s1.arc, s1.arc.width() * frac);
        let b2 = offset_bounds(&s2.arc, s2.arc.width() * frac);
        let lo_cfg = clamp_config(*short, b1, b2);
        let hi_cfg = clamp_config(*long, b1, b2);
        if dist(&lo_cfg) < one && dist(&hi_cfg) > one {
            let (mut t0, mut t1) = (T::zero(), T::one());
            for _ in 0..200 {
                let mid = (t0 + t1) * T::of(0.5);
                if mid <= t0 || mid >= t1 {
                    break;
                }
                if dist(&lerp_config(&lo_cfg, &hi_cfg, mid)) < one {
                    t0 = mid;
                } else {
                    t1 = mid;
                }
            }
            let a = realize(s1, s2, &lerp_config(&lo_cfg, &hi_cfg, t0));
            let b = realize(s1, s2, &lerp_config(&lo_cfg, &hi_cfg, t1));
            let pair = if (a.distance() - one).abs() <= (b.distance() - one).abs() {
                a
            } else {
                b
            };
            return Some(pair);
        }
        frac = frac * T::of(0.5);
    }
    None
}

/// Whether some `p ∈ s1`, `q ∈ s2` are exactly unit distance apart.
///
/// Distances within `tol` of an extremum count as that extremum, so a unit
/// distance reached only at an excluded corner is not reported. Returns a
/// witness pair whenever the answer is yes.
pub fn contains_unit_pair<T: Scalar>(
    s1: &AnnularSector<T>,
    s2: &AnnularSector<T>,
    tol: T,
) -> Result<Option<UnitPair<T>>> {
    check_same_annulus(s1, s2)?;
    let (lo, hi) = extremes(s1, s2);
    let one = T::one();

    if (hi.value - one).abs() <= tol {
        return Ok(hi.attained.then(|| realize(s1, s2, &hi.config)));
    }
    if (lo.value - one).abs() <= tol {
        return Ok(lo.attained.then(|| realize(s1, s2, &lo.config)));
    }
    if lo.value < one && one < hi.value {
        return bisect_unit_pair(s1, s2, &lo.config, &hi.config)
            .map(Some)
            .ok_or_else(|| Error::Internal("unit-pair bisection did not bracket 1".into()));
    }
    Ok(None)
}

/// Central angle of a unit chord of the circle with the given radius:
/// `θ = 2·asin(1/(2R))`, equal to `acos(1 − 1/(2R²))`.
pub fn unit_chord_angle<T: Scalar>(outer_radius: T) -> Result<T> {
    if !(outer_radius.is_finite() && outer_radius > T::of(0.5)) {
        return Err(Error::Domain {
            what: "outer_radius",
            value: outer_radius.as_f64(),
            expected: "outer_radius > 1/2",
        });
    }
    Ok(T::of(2.0) * (T::one() / (T::of(2.0) * outer_radius)).asin())
}

/// The arccos form of the unit chord angle, kept as an independent route.
pub fn unit_chord_angle_acos<T: Scalar>(outer_radius: T) -> Result<T> {
    if !(outer_radius.is_finite() && outer_radius > T::of(0.5)) {
        return Err(Error::Domain {
            what: "outer_radius",
            value: outer_radius.as_f64(),
            expected: "outer_radius > 1/2",
        });
    }
    Ok((T::one() - T::one() / (T::of(2.0) * outer_radius * outer_radius)).acos())
}
