//! Seeded point-set samplers for instance generation. Deterministic for a
//! fixed seed; all samplers emit lattice coordinates (four decimal digits
//! except the pure grid) and never produce coincident points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{orientation, Point, PointSet};

/// Sampler families. `GridJitter` and `Cluster` stress exact ties and
/// near-ties in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    Uniform,
    Grid,
    GridJitter,
    Convex,
    Cluster,
}

impl Distribution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Grid => "grid",
            Distribution::GridJitter => "grid-jitter",
            Distribution::Convex => "convex",
            Distribution::Cluster => "cluster",
        }
    }
}

/// Fractional digits carried by the jittered samplers: coordinates are
/// multiples of 1e-4 in display units.
const FRAC_DIGITS: u32 = 4;
/// Scaled width of the uniform sampling window ([0, 1000) display units).
const RANGE: i64 = 10_000_000;

pub fn generate(dist: Distribution, n: usize, seed: u64) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidPoints("need at least one point".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match dist {
        Distribution::Uniform => uniform(n, &mut rng),
        Distribution::Grid => grid(n),
        Distribution::GridJitter => grid_jitter(n, &mut rng),
        Distribution::Convex => convex(n, &mut rng),
        Distribution::Cluster => cluster(n, &mut rng),
    }
}

fn uniform(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    let mut seen = HashSet::with_capacity(n);
    let mut coords = Vec::with_capacity(n);
    while coords.len() < n {
        let c = (rng.gen_range(0..RANGE), rng.gen_range(0..RANGE));
        if seen.insert(c) {
            coords.push(c);
        }
    }
    PointSet::from_raw(coords, FRAC_DIGITS)
}

/// Integer grid, row-major from the origin: n = 4 gives the 2×2 grid
/// (0,0), (1,0), (0,1), (1,1).
fn grid(n: usize) -> Result<PointSet> {
    let side = (n as f64).sqrt().ceil() as i64;
    let mut coords = Vec::with_capacity(n);
    'outer: for y in 0..side {
        for x in 0..side {
            coords.push((x, y));
            if coords.len() == n {
                break 'outer;
            }
        }
    }
    PointSet::from_raw(coords, 0)
}

/// Grid with spacing 1.0 display units and jitter up to ±0.2, so points stay
/// distinct by construction while distances nearly tie. Jitter is drawn at
/// six decimal digits: grid structure makes shared coordinates and exact L∞
/// ties likely at coarse resolution, and those degeneracies void the
/// plane-graph guarantee of the L∞ construction (see the planarity notes on
/// [`crate::yao::TiePolicy::MostCounterclockwise`]).
fn grid_jitter(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    let side = (n as f64).sqrt().ceil() as i64;
    let spacing = 1_000_000i64;
    let jitter = 200_000i64;
    let mut coords = Vec::with_capacity(n);
    'outer: for y in 0..side {
        for x in 0..side {
            coords.push((
                x * spacing + rng.gen_range(-jitter..=jitter),
                y * spacing + rng.gen_range(-jitter..=jitter),
            ));
            if coords.len() == n {
                break 'outer;
            }
        }
    }
    PointSet::from_raw(coords, 6)
}

/// Points on a circle at angle-jittered positions. The radius is large
/// enough that rounding to the lattice keeps strict convexity (verified).
fn convex(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    if n == 1 {
        return PointSet::from_raw(vec![(0, 0)], FRAC_DIGITS);
    }
    let radius = 4_000_000f64;
    let step = std::f64::consts::TAU / n as f64;
    let mut coords = Vec::with_capacity(n);
    for i in 0..n {
        let angle = step * (i as f64 + rng.gen_range(-0.4..0.4));
        coords.push((
            (radius * angle.cos()).round() as i64,
            (radius * angle.sin()).round() as i64,
        ));
    }
    let ps = PointSet::from_raw(coords, FRAC_DIGITS)?;
    debug_assert!(strictly_convex(ps.points()));
    Ok(ps)
}

fn strictly_convex(pts: &[Point]) -> bool {
    let n = pts.len();
    if n <= 2 {
        return true;
    }
    (0..n).all(|i| orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) > 0)
}

/// Clustered points on a coarse local lattice: many exact distance ties,
/// which is what stresses the tie policies.
fn cluster(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    let centers = (n / 16).max(1);
    let center_pts: Vec<(i64, i64)> = (0..centers)
        .map(|_| (rng.gen_range(0..RANGE), rng.gen_range(0..RANGE)))
        .collect();
    let offset_step = 1_000i64;
    let mut seen = HashSet::with_capacity(n);
    let mut coords = Vec::with_capacity(n);
    while coords.len() < n {
        let (cx, cy) = center_pts[rng.gen_range(0..centers)];
        let c = (
            cx + offset_step * rng.gen_range(-6..=6),
            cy + offset_step * rng.gen_range(-6..=6),
        );
        if seen.insert(c) {
            coords.push(c);
        }
    }
    PointSet::from_raw(coords, FRAC_DIGITS)
}
