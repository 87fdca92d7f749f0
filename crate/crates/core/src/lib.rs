//! Unit-distance colorings of the annulus `A_r = {p : ½ − r ≤ ‖p‖ ≤ ½ + r}`.
//!
//! - [`geom`]: annuli, angular intervals, sectors and exact sector-to-sector
//!   distance ranges with unit-pair witnesses.
//! - [`radial`]: the radial chromatic number `⌈2π/θ⌉`, its threshold table,
//!   optimal constructions and an exact verifier for radial colorings.
//! - [`gadgets`]: rod, odd cycle, tri-rod and Moser spindle placements that
//!   certify lower bounds for arbitrary colorings.
//! - [`udg`]: unit-distance graphs and an exact chromatic number solver.
//! - [`io`]: JSON documents.
//!
//! All geometry is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below are the double-precision instantiations most callers want.
//!
//! The unit disk (`r = ½`) is outside the domain. It takes seven radial colors:
//! six unit sectors plus the center point.

pub mod error;
pub mod gadgets;
pub mod geom;
pub mod io;
pub mod point;
pub mod radial;
pub mod scalar;
pub mod udg;

pub use error::{Error, Result};
pub use gadgets::{
    embed_moser_spindle, embed_odd_cycle, embed_rod, embed_trirod, gadget_lower_bound,
    rod_rotation_path, trirod_rotation_path, GadgetEmbedding, GadgetKind, Placement,
};
pub use geom::{
    contains_unit_pair, sector_distance_interval, unit_chord_angle, AngularInterval,
    AnnularSector, Annulus, DistanceInterval, UnitPair,
};
pub use point::Point2;
pub use radial::{
    construct_radial_coloring, lemma3_holds, max_color_class_span, radial_chromatic_number,
    thresholds, verify_radial_coloring, RadialColoring, Threshold, Verdict,
};
pub use scalar::Scalar;
pub use udg::{build_udg, chromatic_number_exact, is_proper, ColoringAssignment, Graph, UnitDistanceGraph};

pub type Point64 = Point2<f64>;
pub type Annulus64 = Annulus<f64>;
pub type AngularInterval64 = AngularInterval<f64>;
pub type AnnularSector64 = AnnularSector<f64>;
pub type DistanceInterval64 = DistanceInterval<f64>;
pub type RadialColoring64 = RadialColoring<f64>;
pub type Threshold64 = Threshold<f64>;
pub type GadgetEmbedding64 = GadgetEmbedding<f64>;
pub type UnitDistanceGraph64 = UnitDistanceGraph<f64>;

pub type Point32 = Point2<f32>;
pub type Annulus32 = Annulus<f32>;
pub type RadialColoring32 = RadialColoring<f32>;
pub type GadgetEmbedding32 = GadgetEmbedding<f32>;
