//! Exact planar primitives: lattice points, L2/L∞ metrics, quadrant and cone
//! classification, and segment intersection predicates.
//!
//! Coordinates are stored as integers. Decimal inputs are scaled by a common
//! power of ten at ingestion, so every orientation, containment and
//! distance-comparison predicate below is exact — no epsilon anywhere.
//! Scaling is a similarity transform: stretch ratios, crossings and cone
//! memberships are unchanged, and lengths are divided back by the scale only
//! at display boundaries.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest accepted scaled coordinate magnitude. Keeps `x as f64` exact and
/// all predicate arithmetic far from i128 overflow.
pub const MAX_COORD: i64 = 1 << 53;

/// A node of the input set: scaled integer coordinates plus a dense id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
    pub id: usize,
}

impl Point {
    pub fn new(x: i64, y: i64, id: usize) -> Self {
        Point { x, y, id }
    }
}

/// Distance metric selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    L2,
    Linf,
}

impl Metric {
    pub fn as_str(&self) -> &'static str {
        match self {
            Metric::L2 => "l2",
            Metric::Linf => "linf",
        }
    }

    pub fn parse(s: &str) -> Result<Metric> {
        match s {
            "l2" => Ok(Metric::L2),
            "linf" => Ok(Metric::Linf),
            other => Err(Error::DomainError(format!("unknown metric {other:?}"))),
        }
    }
}

/// Closed segment between two distinct points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Segment> {
        if a.x == b.x && a.y == b.y {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }
}

/// Closed axis-aligned rectangle R(a,b) with diagonal ab. Degenerate (zero
/// width or height) rectangles are allowed; their strict interior is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    lo: (i64, i64),
    hi: (i64, i64),
}

impl Rect {
    /// Rectangle with diagonal `ab`; invariant under swapping the corners.
    pub fn with_diagonal(a: Point, b: Point) -> Rect {
        Rect {
            lo: (a.x.min(b.x), a.y.min(b.y)),
            hi: (a.x.max(b.x), a.y.max(b.y)),
        }
    }

    pub fn from_corners(c1: (i64, i64), c2: (i64, i64)) -> Rect {
        Rect {
            lo: (c1.0.min(c2.0), c1.1.min(c2.1)),
            hi: (c1.0.max(c2.0), c1.1.max(c2.1)),
        }
    }

    /// Closed containment.
    pub fn contains(&self, p: Point) -> bool {
        self.lo.0 <= p.x && p.x <= self.hi.0 && self.lo.1 <= p.y && p.y <= self.hi.1
    }

    /// Open containment; false everywhere on a degenerate rectangle.
    pub fn strictly_interior(&self, p: Point) -> bool {
        self.lo.0 < p.x && p.x < self.hi.0 && self.lo.1 < p.y && p.y < self.hi.1
    }
}

/// One of the four axis-aligned cones at a node.
///
/// Cones are half-open, closed on their counterclockwise boundary ray:
/// Q1 = (0°, 90°] (owns +y), Q2 = (90°, 180°] (owns −x), Q3 owns −y,
/// Q4 owns +x. This is the ownership rule under which the most-
/// counterclockwise L∞ tie rule yields a plane graph; closing the clockwise
/// side instead selects both diagonals of an integer square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4];

    /// 1-based index as used in the geometric statements.
    pub fn index(&self) -> u8 {
        match self {
            Quadrant::Q1 => 1,
            Quadrant::Q2 => 2,
            Quadrant::Q3 => 3,
            Quadrant::Q4 => 4,
        }
    }

    /// 0-based cone index for k = 4 (cone i ↔ quadrant i+1).
    pub fn cone(&self) -> usize {
        self.index() as usize - 1
    }

    pub fn from_index(i: u8) -> Result<Quadrant> {
        match i {
            1 => Ok(Quadrant::Q1),
            2 => Ok(Quadrant::Q2),
            3 => Ok(Quadrant::Q3),
            4 => Ok(Quadrant::Q4),
            _ => Err(Error::DomainError(format!("quadrant index {i} out of 1..=4"))),
        }
    }

    pub fn from_cone(c: usize) -> Result<Quadrant> {
        Quadrant::from_index(c as u8 + 1)
    }
}

#[inline]
fn sign(v: i128) -> i32 {
    (v > 0) as i32 - (v < 0) as i32
}

/// Cross product (p − o) × (q − o), exact.
#[inline]
pub(crate) fn cross(o: Point, p: Point, q: Point) -> i128 {
    let px = (p.x - o.x) as i128;
    let py = (p.y - o.y) as i128;
    let qx = (q.x - o.x) as i128;
    let qy = (q.y - o.y) as i128;
    px * qy - py * qx
}

/// Sign of the orientation of the triple (o, p, q): +1 counterclockwise,
/// −1 clockwise, 0 collinear. Exact.
#[inline]
pub fn orientation(o: Point, p: Point, q: Point) -> i32 {
    sign(cross(o, p, q))
}

/// Exact squared Euclidean distance.
#[inline]
pub fn dist2(p: Point, q: Point) -> i128 {
    let dx = (p.x - q.x) as i128;
    let dy = (p.y - q.y) as i128;
    dx * dx + dy * dy
}

/// Exact L∞ distance (an integer on the lattice).
#[inline]
pub fn linf_dist(p: Point, q: Point) -> i64 {
    (p.x - q.x).abs().max((p.y - q.y).abs())
}

/// Distance in scaled units under the chosen metric.
pub fn dist(p: Point, q: Point, m: Metric) -> f64 {
    match m {
        Metric::L2 => (dist2(p, q) as f64).sqrt(),
        Metric::Linf => linf_dist(p, q) as f64,
    }
}

/// Quadrant of `p` as seen from `origin`. Errors when the points coincide.
pub fn quadrant_of(origin: Point, p: Point) -> Result<Quadrant> {
    let dx = p.x - origin.x;
    let dy = p.y - origin.y;
    if dx == 0 && dy == 0 {
        return Err(Error::DegenerateDirection);
    }
    Ok(if dy > 0 {
        if dx >= 0 {
            Quadrant::Q1
        } else {
            Quadrant::Q2
        }
    } else if dy == 0 {
        if dx > 0 {
            Quadrant::Q4
        } else {
            Quadrant::Q2
        }
    } else if dx <= 0 {
        Quadrant::Q3
    } else {
        Quadrant::Q4
    })
}

/// Index of the half-open cone (i·2π/k, (i+1)·2π/k] containing the direction
/// of `p − origin`, angles measured counterclockwise from the +x axis.
///
/// Exact for k ∈ {1, 2, 4} (sign logic); for other k the boundaries are
/// irrational directions unreachable from the lattice except at the axes, and
/// classification falls back to `atan2`.
pub fn cone_of(origin: Point, p: Point, k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::DomainError("cone count k must be >= 1".into()));
    }
    let dx = p.x - origin.x;
    let dy = p.y - origin.y;
    if dx == 0 && dy == 0 {
        return Err(Error::DegenerateDirection);
    }
    match k {
        1 => Ok(0),
        2 => {
            // cone 0 = (0, π] owns −x; cone 1 = (π, 2π] owns +x.
            if dy > 0 || (dy == 0 && dx < 0) {
                Ok(0)
            } else {
                Ok(1)
            }
        }
        4 => Ok(quadrant_of(origin, p)?.cone()),
        _ => {
            let mut angle = (dy as f64).atan2(dx as f64);
            if angle <= 0.0 {
                angle += std::f64::consts::TAU;
            }
            // angle ∈ (0, 2π]; upper-closed cones via ceil.
            let width = std::f64::consts::TAU / k as f64;
            let idx = (angle / width).ceil() as i64 - 1;
            Ok(idx.clamp(0, k as i64 - 1) as usize)
        }
    }
}

/// True when `p` lies on the closed segment (collinear and inside the box).
pub fn on_segment(s: Segment, p: Point) -> bool {
    orientation(s.a, s.b, p) == 0
        && s.a.x.min(s.b.x) <= p.x
        && p.x <= s.a.x.max(s.b.x)
        && s.a.y.min(s.b.y) <= p.y
        && p.y <= s.a.y.max(s.b.y)
}

/// Positive-length overlap of two collinear segments.
fn collinear_overlap_open(s1: Segment, s2: Segment) -> bool {
    // Project on the dominant axis of s1.
    let horizontal = (s1.a.x - s1.b.x).abs() >= (s1.a.y - s1.b.y).abs();
    let pick = |p: Point| if horizontal { p.x } else { p.y };
    let (lo1, hi1) = (pick(s1.a).min(pick(s1.b)), pick(s1.a).max(pick(s1.b)));
    let (lo2, hi2) = (pick(s2.a).min(pick(s2.b)), pick(s2.a).max(pick(s2.b)));
    lo1.max(lo2) < hi1.min(hi2)
}

/// Proper crossing: the segments share at least one point that is not an
/// endpoint of either. Exact.
pub fn properly_cross(s1: Segment, s2: Segment) -> bool {
    let d1 = orientation(s2.a, s2.b, s1.a);
    let d2 = orientation(s2.a, s2.b, s1.b);
    let d3 = orientation(s1.a, s1.b, s2.a);
    let d4 = orientation(s1.a, s1.b, s2.b);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        // Collinear: proper iff the overlap has positive length.
        return collinear_overlap_open(s1, s2);
    }
    false
}

/// Intersection in the inclusive sense: the segments share any point,
/// endpoints included. Exact.
pub fn segments_intersect(s1: Segment, s2: Segment) -> bool {
    let d1 = orientation(s2.a, s2.b, s1.a);
    let d2 = orientation(s2.a, s2.b, s1.b);
    let d3 = orientation(s1.a, s1.b, s2.a);
    let d4 = orientation(s1.a, s1.b, s2.b);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(s2, s1.a))
        || (d2 == 0 && on_segment(s2, s1.b))
        || (d3 == 0 && on_segment(s1, s2.a))
        || (d4 == 0 && on_segment(s1, s2.b))
}

/// A validated collection of distinct points with a common decimal scale.
///
/// `frac_digits` records how many decimal digits were folded into the integer
/// coordinates; dividing by `scale_divisor()` recovers the original units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    frac_digits: u32,
}

impl PointSet {
    /// Build from raw scaled integer coordinates. Rejects coincident points
    /// and out-of-range coordinates; canonicalizes the scale by removing
    /// common trailing factors of ten.
    pub fn from_raw(coords: Vec<(i64, i64)>, frac_digits: u32) -> Result<PointSet> {
        if coords.is_empty() {
            return Err(Error::InvalidPoints("point set is empty".into()));
        }
        for &(x, y) in &coords {
            if x.abs() > MAX_COORD || y.abs() > MAX_COORD {
                return Err(Error::InvalidPoints(format!(
                    "scaled coordinate ({x}, {y}) exceeds the supported magnitude 2^53"
                )));
            }
        }
        let mut seen: HashMap<(i64, i64), usize> = HashMap::new();
        for (i, &c) in coords.iter().enumerate() {
            if let Some(&first) = seen.get(&c) {
                return Err(Error::CoincidentPoints { first, second: i });
            }
            seen.insert(c, i);
        }
        let (coords, frac_digits) = canonicalize_scale(coords, frac_digits);
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(id, (x, y))| Point::new(x, y, id))
            .collect();
        Ok(PointSet {
            points,
            frac_digits,
        })
    }

    /// Integer coordinates, scale 1.
    pub fn from_integers(coords: Vec<(i64, i64)>) -> Result<PointSet> {
        PointSet::from_raw(coords, 0)
    }

    /// Ingest decimal coordinate strings; all values are scaled by a common
    /// power of ten so the lattice representation is exact.
    pub fn from_decimal_pairs<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<PointSet> {
        let mut parsed = Vec::with_capacity(pairs.len());
        let mut max_digits = 0u32;
        for (i, (xs, ys)) in pairs.iter().enumerate() {
            let x = parse_decimal(xs.as_ref())
                .map_err(|e| Error::InvalidPoints(format!("point {i}: {e}")))?;
            let y = parse_decimal(ys.as_ref())
                .map_err(|e| Error::InvalidPoints(format!("point {i}: {e}")))?;
            max_digits = max_digits.max(x.1).max(y.1);
            parsed.push((x, y));
        }
        let mut coords = Vec::with_capacity(parsed.len());
        for (i, ((xm, xd), (ym, yd))) in parsed.into_iter().enumerate() {
            let x = rescale(xm, xd, max_digits)
                .ok_or_else(|| Error::InvalidPoints(format!("point {i}: x precision overflow")))?;
            let y = rescale(ym, yd, max_digits)
                .ok_or_else(|| Error::InvalidPoints(format!("point {i}: y precision overflow")))?;
            coords.push((x, y));
        }
        PointSet::from_raw(coords, max_digits)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, id: usize) -> Result<Point> {
        self.points.get(id).copied().ok_or(Error::UnknownNode(id))
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn frac_digits(&self) -> u32 {
        self.frac_digits
    }

    /// Divisor mapping scaled integer units back to original units.
    pub fn scale_divisor(&self) -> f64 {
        10f64.powi(self.frac_digits as i32)
    }

    /// Original-unit coordinates (exact per component: integers below 2^53).
    pub fn display_coord(&self, id: usize) -> Result<(f64, f64)> {
        let p = self.get(id)?;
        let d = self.scale_divisor();
        Ok((p.x as f64 / d, p.y as f64 / d))
    }

    /// Lossless decimal rendering of a point's coordinates.
    pub fn decimal_coord(&self, id: usize) -> Result<(String, String)> {
        let p = self.get(id)?;
        Ok((
            render_decimal(p.x, self.frac_digits),
            render_decimal(p.y, self.frac_digits),
        ))
    }
}

fn canonicalize_scale(mut coords: Vec<(i64, i64)>, mut digits: u32) -> (Vec<(i64, i64)>, u32) {
    while digits > 0 && coords.iter().all(|&(x, y)| x % 10 == 0 && y % 10 == 0) {
        for c in coords.iter_mut() {
            c.0 /= 10;
            c.1 /= 10;
        }
        digits -= 1;
    }
    (coords, digits)
}

/// Parse a plain decimal literal into (mantissa, fractional digits).
fn parse_decimal(s: &str) -> std::result::Result<(i128, u32), String> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err("empty coordinate".into());
    }
    let mut idx = 0;
    let negative = match bytes[0] {
        b'-' => {
            idx = 1;
            true
        }
        b'+' => {
            idx = 1;
            false
        }
        _ => false,
    };
    let rest = &s[idx..];
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed decimal {s:?}"));
    }
    if rest.contains('.') && (frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()))
    {
        return Err(format!("malformed decimal {s:?}"));
    }
    if int_part.len() + frac_part.len() > 30 {
        return Err(format!("decimal {s:?} has too many digits"));
    }
    let mut mantissa: i128 = 0;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        mantissa = mantissa * 10 + (b - b'0') as i128;
    }
    if negative {
        mantissa = -mantissa;
    }
    Ok((mantissa, frac_part.len() as u32))
}

fn rescale(mantissa: i128, digits: u32, target_digits: u32) -> Option<i64> {
    let mut v = mantissa;
    for _ in digits..target_digits {
        v = v.checked_mul(10)?;
    }
    if v.abs() > MAX_COORD as i128 {
        return None;
    }
    Some(v as i64)
}

/// Render a scaled integer back to a minimal decimal string.
pub(crate) fn render_decimal(v: i64, digits: u32) -> String {
    if digits == 0 {
        return v.to_string();
    }
    let pow = 10i64.pow(digits);
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    let int = a / pow as u64;
    let frac = a % pow as u64;
    if frac == 0 {
        return format!("{sign}{int}");
    }
    let mut frac_str = format!("{frac:0width$}", width = digits as usize);
    while frac_str.ends_with('0') {
        frac_str.pop();
    }
    format!("{sign}{int}.{frac_str}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y, 0)
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(pt(0, 0), pt(3, 4), Metric::L2), 5.0);
        assert_eq!(dist(pt(0, 0), pt(3, 4), Metric::Linf), 4.0);
        assert_eq!(dist(pt(2, 2), pt(2, 2), Metric::L2), 0.0);
    }

    #[test]
    fn quadrant_interior_and_boundary() {
        let o = pt(0, 0);
        assert_eq!(quadrant_of(o, pt(1, 1)).unwrap(), Quadrant::Q1);
        assert_eq!(quadrant_of(o, pt(-1, 1)).unwrap(), Quadrant::Q2);
        assert_eq!(quadrant_of(o, pt(-1, -1)).unwrap(), Quadrant::Q3);
        assert_eq!(quadrant_of(o, pt(1, -1)).unwrap(), Quadrant::Q4);
        // Boundary rays go to the cone closed on its counterclockwise side.
        assert_eq!(quadrant_of(o, pt(0, 1)).unwrap(), Quadrant::Q1);
        assert_eq!(quadrant_of(o, pt(-1, 0)).unwrap(), Quadrant::Q2);
        assert_eq!(quadrant_of(o, pt(0, -1)).unwrap(), Quadrant::Q3);
        assert_eq!(quadrant_of(o, pt(1, 0)).unwrap(), Quadrant::Q4);
        assert!(matches!(
            quadrant_of(o, o),
            Err(Error::DegenerateDirection)
        ));
    }

    #[test]
    fn quadrant_partition_is_exact() {
        let o = pt(0, 0);
        for dx in -3..=3i64 {
            for dy in -3..=3i64 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let q = quadrant_of(o, pt(dx, dy)).unwrap();
                let members = [
                    dx >= 0 && dy > 0,
                    dx < 0 && dy >= 0,
                    dx <= 0 && dy < 0,
                    dx > 0 && dy <= 0,
                ];
                assert_eq!(members.iter().filter(|&&m| m).count(), 1);
                assert!(members[q.cone()]);
            }
        }
    }

    #[test]
    fn cone_of_matches_quadrants_for_k4() {
        let o = pt(0, 0);
        for dx in -3..=3i64 {
            for dy in -3..=3i64 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let p = pt(dx, dy);
                assert_eq!(
                    cone_of(o, p, 4).unwrap(),
                    quadrant_of(o, p).unwrap().cone()
                );
            }
        }
    }

    #[test]
    fn cone_of_general_k() {
        let o = pt(0, 0);
        // k = 6: the angle-0 ray belongs to the last cone (upper-closed).
        assert_eq!(cone_of(o, pt(1, 0), 6).unwrap(), 5);
        assert_eq!(cone_of(o, pt(-1, 0), 4).unwrap(), 1);
        assert_eq!(cone_of(o, pt(1, 1), 6).unwrap(), 0);
        // Near the π/3 boundary for k = 6: just above lands in cone 1, just
        // below stays in cone 0 (the exact boundary direction is irrational
        // and not representable on the lattice).
        assert_eq!(cone_of(o, pt(1_000_000, 1_732_051), 6).unwrap(), 1);
        assert_eq!(cone_of(o, pt(1_000_000, 1_732_050), 6).unwrap(), 0);
        // k = 8: the diagonal lies exactly on the boundary and is owned by
        // the lower cone.
        assert_eq!(cone_of(o, pt(1, 1), 8).unwrap(), 0);
        assert_eq!(cone_of(o, pt(1, 2), 8).unwrap(), 1);
        assert_eq!(cone_of(o, pt(2, 1), 8).unwrap(), 0);
        assert!(cone_of(o, pt(1, 1), 0).is_err());
        assert_eq!(cone_of(o, pt(-5, -3), 1).unwrap(), 0);
    }

    #[test]
    fn proper_crossing_examples() {
        let seg = |ax, ay, bx, by| Segment::new(pt(ax, ay), pt(bx, by)).unwrap();
        assert!(properly_cross(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
        assert!(!properly_cross(seg(0, 0, 1, 1), seg(1, 1, 2, 0)));
        // Collinear overlap contains non-endpoint shared points.
        assert!(properly_cross(seg(0, 0, 2, 0), seg(1, 0, 3, 0)));
        // Collinear touching at a single shared endpoint is not proper.
        assert!(!properly_cross(seg(0, 0, 2, 0), seg(2, 0, 4, 0)));
        // T-touch: endpoint of one in the interior of the other is not proper.
        assert!(!properly_cross(seg(0, 0, 4, 0), seg(2, 0, 2, 3)));
        // ...but it is an (inclusive) intersection.
        assert!(segments_intersect(seg(0, 0, 4, 0), seg(2, 0, 2, 3)));
        assert!(!segments_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
    }

    #[test]
    fn rect_containment() {
        let r = Rect::with_diagonal(pt(0, 0), pt(2, 2));
        assert!(r.contains(pt(1, 1)) && r.strictly_interior(pt(1, 1)));
        assert!(r.contains(pt(2, 1)) && !r.strictly_interior(pt(2, 1)));
        assert!(!r.contains(pt(3, 1)) && !r.strictly_interior(pt(3, 1)));
        // Degenerate rectangle: closed containment only.
        let d = Rect::with_diagonal(pt(0, 0), pt(4, 0));
        assert!(d.contains(pt(2, 0)));
        assert!(!d.strictly_interior(pt(2, 0)));
        assert_eq!(
            Rect::from_corners((5, 1), (0, 3)),
            Rect::from_corners((0, 1), (5, 3))
        );
    }

    #[test]
    fn pointset_rejects_duplicates_and_canonicalizes() {
        let err = PointSet::from_integers(vec![(0, 0), (1, 1), (0, 0)]).unwrap_err();
        match err {
            Error::CoincidentPoints { first, second } => {
                assert_eq!((first, second), (0, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let ps =
            PointSet::from_decimal_pairs(&[("0.50", "1.00"), ("2.0", "3.50")]).unwrap();
        assert_eq!(ps.frac_digits(), 1);
        assert_eq!(ps.get(0).unwrap(), Point::new(5, 10, 0));
        assert_eq!(ps.decimal_coord(1).unwrap(), ("2".into(), "3.5".into()));
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("12.75").unwrap(), (1275, 2));
        assert_eq!(parse_decimal("-0.5").unwrap(), (-5, 1));
        assert_eq!(parse_decimal("42").unwrap(), (42, 0));
        assert!(parse_decimal("1e3").is_err());
        assert!(parse_decimal(".5").is_err());
        assert!(parse_decimal("1.").is_err());
        assert!(parse_decimal("").is_err());
        let ps = PointSet::from_decimal_pairs(&[("123.4567", "-0.125")]).unwrap();
        assert_eq!(ps.decimal_coord(0).unwrap().0, "123.4567");
        assert_eq!(ps.decimal_coord(0).unwrap().1, "-0.125");
    }
}
