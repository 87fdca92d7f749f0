//! Radial colorings of `A_r`: the closed-form radial chromatic number, its
//! threshold table, an explicit optimal coloring and an exact verifier.
//!
//! Orientation convention: angles increase counterclockwise. Sector `i` is the
//! open arc from `boundaries[i]` to `boundaries[i + 1]` (wrapping), and the
//! boundary ray at angle `a` is "clockwise-adjacent" to the sector that ends
//! at `a`. Constructed colorings give every boundary the color of that sector.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    check_half_width, contains_unit_pair, unit_chord_angle, AngularInterval, AnnularSector,
    Annulus, UnitPair,
};
use crate::scalar::Scalar;

/// Color identifier.
pub type Color = u32;

/// A coloring of `A_r` that is constant on each open sector between
/// consecutive boundary rays, with each boundary ray colored separately.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialColoring<T> {
    annulus: Annulus<T>,
    boundaries: Vec<T>,
    sector_colors: Vec<Color>,
    boundary_colors: Vec<Color>,
}

impl<T: Scalar> RadialColoring<T> {
    /// Validates and builds a coloring. Boundaries must lie in `[0, 2π)` and
    /// be strictly increasing; both color lists must match their length.
    pub fn new(
        annulus: Annulus<T>,
        boundaries: Vec<T>,
        sector_colors: Vec<Color>,
        boundary_colors: Vec<Color>,
    ) -> Result<Self> {
        if boundaries.is_empty() {
            return Err(Error::InvalidColoring("at least one boundary is required".into()));
        }
        for (i, &b) in boundaries.iter().enumerate() {
            if !(b.is_finite() && b >= T::zero() && b < T::TAU()) {
                return Err(Error::InvalidColoring(format!(
                    "boundaries[{i}] = {b} is outside [0, 2π)"
                )));
            }
            if i > 0 && b <= boundaries[i - 1] {
                return Err(Error::InvalidColoring(format!(
                    "boundaries[{i}] = {b} does not exceed boundaries[{}] = {}",
                    i - 1,
                    boundaries[i - 1]
                )));
            }
        }
        if sector_colors.len() != boundaries.len() {
            return Err(Error::InvalidColoring(format!(
                "sector_colors has {} entries, expected {}",
                sector_colors.len(),
                boundaries.len()
            )));
        }
        if boundary_colors.len() != boundaries.len() {
            return Err(Error::InvalidColoring(format!(
                "boundary_colors has {} entries, expected {}",
                boundary_colors.len(),
                boundaries.len()
            )));
        }
        Ok(Self {
            annulus,
            boundaries,
            sector_colors,
            boundary_colors,
        })
    }

    pub fn annulus(&self) -> &Annulus<T> {
        &self.annulus
    }

    pub fn boundaries(&self) -> &[T] {
        &self.boundaries
    }

    pub fn sector_colors(&self) -> &[Color] {
        &self.sector_colors
    }

    pub fn boundary_colors(&self) -> &[Color] {
        &self.boundary_colors
    }

    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.is_empty()
    }

    /// Angular width of sector `i`.
    pub fn sector_width(&self, i: usize) -> T {
        let n = self.len();
        if i + 1 < n {
            self.boundaries[i + 1] - self.boundaries[i]
        } else {
            self.boundaries[0] + T::TAU() - self.boundaries[n - 1]
        }
    }

    /// Sector `i` as an annular sector open at both angular ends.
    pub fn sector(&self, i: usize) -> AnnularSector<T> {
        let width = self.sector_width(i).min(T::TAU());
        let arc = AngularInterval::open(self.boundaries[i], width)
            .expect("validated boundaries give positive widths");
        AnnularSector::new(self.annulus, arc)
    }

    /// Boundary `i` as a closed radial segment.
    pub fn boundary(&self, i: usize) -> AnnularSector<T> {
        AnnularSector::radial_segment(self.annulus, self.boundaries[i])
    }

    /// Distinct colors in use, sorted.
    pub fn colors(&self) -> Vec<Color> {
        let mut all: Vec<Color> = self
            .sector_colors
            .iter()
            .chain(&self.boundary_colors)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn color_count(&self) -> usize {
        self.colors().len()
    }

    fn pieces(&self) -> Vec<(Piece, Color)> {
        let mut out = Vec::with_capacity(2 * self.len());
        for i in 0..self.len() {
            out.push((Piece::Sector(i), self.sector_colors[i]));
            out.push((Piece::Boundary(i), self.boundary_colors[i]));
        }
        out
    }

    fn piece(&self, piece: Piece) -> AnnularSector<T> {
        match piece {
            Piece::Sector(i) => self.sector(i),
            Piece::Boundary(i) => self.boundary(i),
        }
    }
}

/// A monochromatic piece of a radial coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Piece {
    Sector(usize),
    Boundary(usize),
}

/// Two same-colored points at unit distance, with the pieces they lie in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation<T> {
    pub color: Color,
    pub pieces: (Piece, Piece),
    pub pair: UnitPair<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Verdict<T> {
    Proper,
    Improper(Violation<T>),
}

impl<T> Verdict<T> {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }

    pub fn violation(&self) -> Option<&Violation<T>> {
        match self {
            Verdict::Proper => None,
            Verdict::Improper(v) => Some(v),
        }
    }
}

/// One row of the radial chromatic number table: `χ = colors` for
/// `previous.max_r < r ≤ max_r` (the last row is open at `½`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Threshold<T> {
    pub colors: u32,
    pub max_r: T,
    pub expr: &'static str,
}

/// `(2 − √3)/(2√3)`: outer radius `1/√3`.
pub fn three_color_threshold<T: Scalar>() -> T {
    let s3 = T::of(3.0).sqrt();
    (T::of(2.0) - s3) / (T::of(2.0) * s3)
}

/// `(2 − √2)/(2√2)`: outer radius `1/√2`.
pub fn four_color_threshold<T: Scalar>() -> T {
    let s2 = T::SQRT_2();
    (T::of(2.0) - s2) / (T::of(2.0) * s2)
}

/// `−½ + √(2/(5 − √5))`: outer radius `1/(2 sin(π/5))`.
pub fn five_color_threshold<T: Scalar>() -> T {
    -T::of(0.5) + (T::of(2.0) / (T::of(5.0) - T::of(5.0).sqrt())).sqrt()
}

/// The four rows of the table, in increasing `r`.
pub fn thresholds<T: Scalar>() -> Vec<Threshold<T>> {
    vec![
        Threshold {
            colors: 3,
            max_r: three_color_threshold(),
            expr: "(2-sqrt(3))/(2*sqrt(3))",
        },
        Threshold {
            colors: 4,
            max_r: four_color_threshold(),
            expr: "(2-sqrt(2))/(2*sqrt(2))",
        },
        Threshold {
            colors: 5,
            max_r: five_color_threshold(),
            expr: "-1/2+sqrt(2/(5-sqrt(5)))",
        },
        Threshold {
            colors: 6,
            max_r: T::of(0.5),
            expr: "1/2",
        },
    ]
}

/// The table row containing `r`.
pub fn threshold_row<T: Scalar>(r: T) -> Result<(Option<Threshold<T>>, Threshold<T>)> {
    check_half_width(r)?;
    let rows = thresholds::<T>();
    let n = radial_chromatic_number(r)?;
    let idx = rows
        .iter()
        .position(|t| t.colors == n)
        .ok_or_else(|| Error::Internal(format!("no table row for N = {n}")))?;
    let prev = idx.checked_sub(1).map(|i| rows[i]);
    Ok((prev, rows[idx]))
}

/// The least number of colors in a proper radial coloring of `A_r`:
/// `⌈2π/θ⌉` with `θ` the unit chord angle at the outer radius. Ratios within
/// the snap tolerance of an integer are taken as that integer so the closed
/// right ends of the table rows evaluate to their own row.
pub fn radial_chromatic_number<T: Scalar>(r: T) -> Result<u32> {
    let annulus = Annulus::new(r)?;
    let theta = unit_chord_angle(annulus.outer_radius())?;
    let ratio = T::TAU() / theta;
    let nearest = ratio.round();
    let n = if (ratio - nearest).abs() <= T::of(T::SNAP_TOLERANCE) {
        nearest
    } else {
        ratio.ceil()
    };
    n.to_u32()
        .ok_or_else(|| Error::Internal(format!("chromatic number {n} not representable")))
}

/// The optimal coloring: `N − 1` unit sectors in distinct colors starting at
/// angle 0, then one leftover sector in color `N − 1`.
pub fn construct_radial_coloring<T: Scalar>(r: T) -> Result<RadialColoring<T>> {
    let annulus = Annulus::new(r)?;
    let theta = unit_chord_angle(annulus.outer_radius())?;
    let n = radial_chromatic_number(r)?;
    let boundaries: Vec<T> = (0..n)
        .map(|k| T::from_u32(k).unwrap() * theta)
        .collect();
    let sector_colors: Vec<Color> = (0..n).collect();
    let boundary_colors: Vec<Color> = (0..n).map(|k| (k + n - 1) % n).collect();
    RadialColoring::new(annulus, boundaries, sector_colors, boundary_colors)
}

/// Checks every pair of same-colored pieces, each piece also against itself,
/// for a unit-distance pair. Returns the first violation found.
pub fn verify_radial_coloring<T: Scalar>(
    coloring: &RadialColoring<T>,
    tol: T,
) -> Result<Verdict<T>> {
    let pieces = coloring.pieces();
    // Self pairs of sectors first: wide sectors are the common failure.
    let order = pieces
        .iter()
        .enumerate()
        .map(|(i, _)| (i, i))
        .chain(
            (0..pieces.len()).flat_map(|i| (i + 1..pieces.len()).map(move |j| (i, j))),
        );
    for (i, j) in order {
        let (pa, ca) = pieces[i];
        let (pb, cb) = pieces[j];
        if ca != cb {
            continue;
        }
        let sa = coloring.piece(pa);
        let sb = coloring.piece(pb);
        if let Some(pair) = contains_unit_pair(&sa, &sb, tol)? {
            return Ok(Verdict::Improper(Violation {
                color: ca,
                pieces: (pa, pb),
                pair,
            }));
        }
    }
    Ok(Verdict::Proper)
}

/// For each color, the width of the smallest arc covering all of its open
/// sectors. Boundary rays do not count. A color owning every sector spans `2π`.
pub fn max_color_class_span<T: Scalar>(coloring: &RadialColoring<T>) -> BTreeMap<Color, T> {
    let mut by_color: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
    for (i, &c) in coloring.sector_colors().iter().enumerate() {
        by_color.entry(c).or_default().push(i);
    }
    let tau = T::TAU();
    by_color
        .into_iter()
        .map(|(color, sectors)| {
            // sectors are in angular order; the span is 2π minus the widest gap
            let mut widest_gap = T::zero();
            for (k, &i) in sectors.iter().enumerate() {
                let next = sectors[(k + 1) % sectors.len()];
                let end = coloring.boundaries()[i] + coloring.sector_width(i);
                let mut gap = coloring.boundaries()[next] - end;
                while gap < T::zero() {
                    gap = gap + tau;
                }
                if gap > widest_gap {
                    widest_gap = gap;
                }
            }
            (color, (tau - widest_gap).max(T::zero()))
        })
        .collect()
}

/// Every proper coloring keeps each color class inside one unit sector.
/// Returns `true` for improper colorings, where nothing is claimed.
pub fn lemma3_holds<T: Scalar>(coloring: &RadialColoring<T>, tol: T) -> Result<bool> {
    if !verify_radial_coloring(coloring, tol)?.is_proper() {
        return Ok(true);
    }
    let theta = unit_chord_angle(coloring.annulus().outer_radius())?;
    Ok(max_color_class_span(coloring)
        .values()
        .all(|&w| w <= theta + T::of(1e-9)))
}
