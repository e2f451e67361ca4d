//! Yao graph spanners on an exact integer lattice.
//!
//! Builds directed Yao graphs Y_k (Euclidean cones) and Y_4^∞ (axis-aligned
//! cones under the L∞ metric with counterclockwise tie-breaking), constructs
//! the short witness paths that certify their spanning ratios, and verifies
//! planarity and stretch bounds against an exact shortest-path oracle.
//!
//! All combinatorial predicates (orientation, crossing, containment, distance
//! comparison, tie detection) are evaluated exactly on integer coordinates;
//! decimal inputs are scaled to the lattice at ingestion.

pub mod analysis;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod paths;
pub mod yao;

pub use error::{Error, Result};
pub use geometry::{
    cone_of, dist, dist2, linf_dist, on_segment, orientation, properly_cross, quadrant_of,
    segments_intersect, Metric, Point, PointSet, Quadrant, Rect, Segment,
};
pub use yao::{build_yao, most_ccw_among, TiePolicy, YaoGraph};
