//! Exact planar primitives.
//!
//! Integer points use i128 predicate arithmetic; constructions (intersection
//! points, duals) live in a homogeneous rational plane over `BigInt`.  The
//! [`Kernel`] trait abstracts over the two planes so the hull structures can
//! run on either.
//!
//! Canonical x-order is lexicographic (x, then y).  For bounded integer
//! coordinates this equals the x-order after the shear x' = Kx + y with
//! K = 2^31, and orientation is shear-invariant, so no coordinates are
//! materially transformed; height comparisons account for the shear where it
//! matters (see [`Kernel::cmp_height_at`]).

pub mod dual;
pub mod hull;
pub mod kernel;
pub mod rat;
pub mod sweep;
pub mod wide;

pub use dual::{dual_line_of_point, dual_point_of_line, ray_rotation, RotationQuery};
pub use hull::{hull_cycle, hull_of_path, HullChains};
pub use kernel::{I64Kernel, Kernel, RatKernel};
pub use rat::{HLine, HPoint};
pub use sweep::{edges_conflict, path_crossing, path_is_simple};

use crate::{Error, Result};
use std::cmp::Ordering;

/// Coordinate bound; |x|, |y| <= COORD_LIMIT keeps every two-factor predicate
/// within i128 and makes the lex order agree with the canonical shear.
pub const COORD_LIMIT: i64 = 1 << 30;

/// Shear factor for the canonical non-degeneracy shear x' = Kx + y.
pub const SHEAR_K: i64 = 1 << 31;

/// Integer point.  Derived `Ord` is lexicographic (x, y): the canonical order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

pub const fn pt(x: i64, y: i64) -> Point {
    Point { x, y }
}

impl Point {
    pub fn in_bounds(self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }

    /// Sheared abscissa Kx + y; injective and order-isomorphic to lex (x, y)
    /// for in-bounds points.
    pub fn sheared_x(self) -> i128 {
        (self.x as i128) * (SHEAR_K as i128) + self.y as i128
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of cross(q - p, r - p): `Greater` iff r lies strictly left of the
/// directed line p -> q (counterclockwise turn).
pub fn orient(p: Point, q: Point, r: Point) -> Ordering {
    let ux = (q.x - p.x) as i128;
    let uy = (q.y - p.y) as i128;
    let vx = (r.x - p.x) as i128;
    let vy = (r.y - p.y) as i128;
    (ux * vy - uy * vx).cmp(&0)
}

/// Line a·x + b·y = c, gcd-reduced with the first nonzero of (a, b) positive,
/// so equal point sets have equal representations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Line {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Line {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Line> {
        if a == 0 && b == 0 {
            return Err(Error::invalid("line with a = b = 0"));
        }
        let g = gcd3(a, b, c);
        let (mut a, mut b, mut c) = (a / g, b / g, c / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// Line through two distinct in-bounds points.
    pub fn through(p: Point, q: Point) -> Line {
        debug_assert!(p != q && p.in_bounds() && q.in_bounds());
        let a = q.y - p.y;
        let b = p.x - q.x;
        // |c| <= 2^62 for in-bounds points, so i64 holds it.
        let c = (a as i128 * p.x as i128 + b as i128 * p.y as i128) as i64;
        Line::new(a, b, c).expect("distinct points give a valid line")
    }

    /// a·x + b·y − c in i128 (no overflow for any i64 coefficients/coords).
    pub fn eval(&self, p: Point) -> i128 {
        self.a as i128 * p.x as i128 + self.b as i128 * p.y as i128 - self.c as i128
    }

    /// Sign of a·x + b·y − c; `Greater` is the "positive side".
    pub fn side(&self, p: Point) -> Ordering {
        self.eval(p).cmp(&0)
    }

    pub fn is_vertical(&self) -> bool {
        self.b == 0
    }
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    use num_integer::Integer;
    let g = a.abs().gcd(&b.abs()).gcd(&c.abs());
    if g == 0 { 1 } else { g }
}

/// Closed segment between two distinct points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Segment> {
        if p == q {
            return Err(Error::invalid(format!("degenerate segment at {p}")));
        }
        Ok(Segment { p, q })
    }

    /// Endpoints in lex order.
    pub fn ordered(&self) -> (Point, Point) {
        if self.p <= self.q { (self.p, self.q) } else { (self.q, self.p) }
    }
}

/// Ray from an integer origin with a nonzero integer direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ray {
    pub o: Point,
    pub dx: i64,
    pub dy: i64,
}

impl Ray {
    pub fn new(o: Point, dx: i64, dy: i64) -> Result<Ray> {
        if dx == 0 && dy == 0 {
            return Err(Error::invalid("ray with zero direction"));
        }
        Ok(Ray { o, dx, dy })
    }
}

/// True iff r lies on the closed segment [p, q].
pub fn on_segment(p: Point, q: Point, r: Point) -> bool {
    orient(p, q, r) == Ordering::Equal
        && r.x >= p.x.min(q.x)
        && r.x <= p.x.max(q.x)
        && r.y >= p.y.min(q.y)
        && r.y <= p.y.max(q.y)
}

/// Closed intersection test for two segments (shared endpoints count).
pub fn segments_intersect(s: Segment, t: Segment) -> bool {
    let d1 = orient(t.p, t.q, s.p);
    let d2 = orient(t.p, t.q, s.q);
    let d3 = orient(s.p, s.q, t.p);
    let d4 = orient(s.p, s.q, t.q);
    use Ordering::*;
    if ((d1 == Greater && d2 == Less) || (d1 == Less && d2 == Greater))
        && ((d3 == Greater && d4 == Less) || (d3 == Less && d4 == Greater))
    {
        return true;
    }
    (d1 == Equal && on_segment(t.p, t.q, s.p))
        || (d2 == Equal && on_segment(t.p, t.q, s.q))
        || (d3 == Equal && on_segment(s.p, s.q, t.p))
        || (d4 == Equal && on_segment(s.p, s.q, t.q))
}

/// Proper (interior) crossing: a single interior point of each.
pub fn segments_cross_properly(s: Segment, t: Segment) -> bool {
    let d1 = orient(t.p, t.q, s.p);
    let d2 = orient(t.p, t.q, s.q);
    let d3 = orient(s.p, s.q, t.p);
    let d4 = orient(s.p, s.q, t.q);
    use Ordering::*;
    ((d1 == Greater && d2 == Less) || (d1 == Less && d2 == Greater))
        && ((d3 == Greater && d4 == Less) || (d3 == Less && d4 == Greater))
}

/// Result of a tangent query from a point q against a strictly convex hull.
///
/// For q strictly outside, `right` is the vertex t such that the whole hull
/// lies weakly left of the ray q→t (farthest such vertex if several are
/// collinear with q); `left` symmetrically with weakly right.  q on the hull
/// boundary reports `OnBoundary`, q strictly interior reports `Inside`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangentResult<P> {
    Inside,
    OnBoundary,
    Tangents { left: P, right: P },
}

/// The four common tangents of two disjoint hulls, as vertex pairs (u from
/// the first hull, v from the second), each the lex-least qualifying pair.
/// Sides are relative to the directed line u→v: `outer_left` has both hulls
/// weakly left, `inner_lr` has the first hull weakly left and the second
/// weakly right, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTangents<P> {
    pub outer_left: (P, P),
    pub outer_right: (P, P),
    pub inner_lr: (P, P),
    pub inner_rl: (P, P),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairResult<P> {
    Intersecting,
    Disjoint(PairTangents<P>),
}

/// Hull ∩ line: a miss carries the side of the line the hull lies strictly
/// on (sign convention of [`Line::side`]); a hit carries the lex-ordered
/// chord endpoints, equal for a single touching point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordResult {
    Miss { side: Ordering },
    Chord { a: rat::HPoint, b: rat::HPoint },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_signs() {
        assert_eq!(orient(pt(0, 0), pt(1, 0), pt(0, 1)), Ordering::Greater);
        assert_eq!(orient(pt(0, 0), pt(1, 0), pt(0, -1)), Ordering::Less);
        assert_eq!(orient(pt(0, 0), pt(1, 1), pt(2, 2)), Ordering::Equal);
        // extreme coordinates stay exact
        let m = COORD_LIMIT;
        assert_eq!(orient(pt(-m, -m), pt(m, m - 1), pt(m, m)), Ordering::Greater);
    }

    #[test]
    fn lex_order_matches_shear() {
        let pts = [pt(0, 0), pt(0, 1), pt(1, -5), pt(1, 0), pt(-3, 7)];
        for &p in &pts {
            for &q in &pts {
                assert_eq!(p.cmp(&q), p.sheared_x().cmp(&q.sheared_x()));
            }
        }
    }

    #[test]
    fn line_normalization() {
        let l = Line::new(-2, 4, -6).unwrap();
        assert_eq!(l, Line { a: 1, b: -2, c: 3 });
        let m = Line::new(0, -5, 10).unwrap();
        assert_eq!(m, Line { a: 0, b: 1, c: -2 });
        assert!(Line::new(0, 0, 3).is_err());
    }

    #[test]
    fn line_through_and_side() {
        let l = Line::through(pt(0, -3), pt(1, -1)); // y = 2x - 3
        assert_eq!(l.side(pt(2, 1)), Ordering::Equal);
        assert_eq!(l.side(pt(0, 0)), l.side(pt(0, 100)));
        assert_ne!(l.side(pt(0, 0)), l.side(pt(0, -100)));
        let v = Line::through(pt(5, -2), pt(5, 9));
        assert!(v.is_vertical());
        assert_eq!(v.side(pt(5, 1000)), Ordering::Equal);
    }

    #[test]
    fn segment_intersections() {
        let s = |a, b, c, d| Segment::new(pt(a, b), pt(c, d)).unwrap();
        assert!(segments_cross_properly(s(0, 0, 2, 2), s(0, 2, 2, 0)));
        assert!(!segments_cross_properly(s(0, 0, 2, 2), s(2, 2, 3, 0)));
        assert!(segments_intersect(s(0, 0, 2, 2), s(2, 2, 3, 0)));
        assert!(segments_intersect(s(0, 0, 4, 0), s(2, 0, 2, 5)));
        assert!(!segments_intersect(s(0, 0, 1, 0), s(2, 0, 3, 0)));
        assert!(segments_intersect(s(0, 0, 3, 0), s(1, 0, 2, 0))); // collinear overlap
    }
}
