//! Point–line duality (y = mx − c  ↔  (m, c)), the reduction from primal ray
//! shooting to a dual rotational/translational sweep, and the material shear
//! used where vertical inputs must be eliminated.

use super::rat::{HLine, HPoint};
use super::{Line, Point, Ray, SHEAR_K};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dual of a non-vertical line y = mx − c: the point (m, c).
/// For a·x + b·y = c with b ≠ 0: (−a/b, −c/b).
pub fn dual_point_of_line(l: &Line) -> Option<HPoint> {
    if l.is_vertical() {
        return None;
    }
    Some(HPoint::new((-l.a).into(), (-l.c).into(), l.b.into()))
}

pub fn dual_point_of_hline(l: &HLine) -> Option<HPoint> {
    if l.is_vertical() {
        return None;
    }
    Some(HPoint::new(-l.a(), -l.c(), l.b().clone()))
}

/// Dual of a point p: the line y = p.x·x − p.y.
pub fn dual_line_of_point(p: Point) -> Line {
    Line::new(p.x, -1, p.y).expect("b = -1 is nonzero")
}

pub fn dual_hline_of_hpoint(p: &HPoint) -> HLine {
    HLine::new(p.x().clone(), -p.w(), p.y().clone()).expect("b = -w is nonzero")
}

/// How the dual picture sweeps as a point moves along a primal ray.
#[derive(Clone, Debug)]
pub enum RotationQuery {
    /// Non-vertical ray: the moving point's dual line rotates about the dual
    /// of the supporting line, starting at the dual line of the origin.
    /// `ccw` (slope increasing) iff the primal direction has dx > 0.
    Rotate { pivot: HPoint, start: HLine, ccw: bool },
    /// Vertical ray: duals are scanned by the linear functional
    /// d·z (value of the line z at the origin's abscissa, scaled by a positive
    /// constant); a dual point z = (zx : zy : zw) is on the ray's side iff
    /// d0·zx + d1·zy − threshold·zw is ≥ 0 (`up`) or ≤ 0 (not `up`), and hits
    /// are ordered by moving the functional away from the threshold.
    Lift { d: (BigInt, BigInt), threshold: BigInt, up: bool },
}

/// Supporting line of the ray from `o` with direction `d` (d ≠ 0).
pub fn hline_of_ray(o: &HPoint, d: (&BigInt, &BigInt)) -> HLine {
    let a = d.1 * o.w();
    let b = -(d.0 * o.w());
    let c = d.1 * o.x() - d.0 * o.y();
    HLine::new(a, b, c).expect("nonzero direction gives a valid line")
}

pub fn ray_rotation(o: &HPoint, d: (&BigInt, &BigInt)) -> RotationQuery {
    assert!(!(d.0.is_zero() && d.1.is_zero()), "zero direction");
    if d.0.is_zero() {
        return RotationQuery::Lift {
            d: (o.x().clone(), -o.w()),
            threshold: o.y().clone(),
            up: d.1.is_positive(),
        };
    }
    let support = hline_of_ray(o, d);
    let pivot = dual_point_of_hline(&support).expect("dx != 0 makes the support non-vertical");
    let start = dual_hline_of_hpoint(o);
    RotationQuery::Rotate { pivot, start, ccw: d.0.is_positive() }
}

pub fn ray_rotation_int(r: Ray) -> RotationQuery {
    ray_rotation(&HPoint::from_point(r.o), (&r.dx.into(), &r.dy.into()))
}

// --- material shear x' = Kx + y -------------------------------------------

/// Shear an in-bounds point; the image fits i64 (|x'| < 2^62) but is *not*
/// in-bounds, so only order/orientation predicates may be applied to it.
pub fn shear_point(p: Point) -> Point {
    debug_assert!(p.in_bounds());
    Point { x: p.x * SHEAR_K + p.y, y: p.y }
}

pub fn unshear_point(p: Point) -> Point {
    Point { x: (p.x - p.y) / SHEAR_K, y: p.y }
}

pub fn shear_hpoint(p: &HPoint) -> HPoint {
    let k = BigInt::from(SHEAR_K);
    HPoint::new(p.x() * &k + p.y(), p.y().clone(), p.w().clone())
}

pub fn unshear_hpoint(p: &HPoint) -> HPoint {
    let k = BigInt::from(SHEAR_K);
    HPoint::new(p.x() - p.y(), p.y() * &k, p.w() * &k)
}

/// Image of a line under the shear: a·x + b·y = c becomes
/// a·x' + (bK − a)·y = cK.
pub fn shear_hline(l: &HLine) -> HLine {
    let k = BigInt::from(SHEAR_K);
    HLine::new(l.a().clone(), l.b() * &k - l.a(), l.c() * &k).expect("shear preserves lines")
}

pub fn shear_line(l: &Line) -> HLine {
    shear_hline(&HLine::from_line(*l))
}

/// Sheared direction (K·dx + dy, dy).
pub fn shear_dir(d: (i64, i64)) -> (BigInt, BigInt) {
    (BigInt::from(SHEAR_K) * d.0 + d.1, d.1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, rat::meet_lines};

    #[test]
    fn dual_examples() {
        // y = 2x − 3 dualizes to (2, 3)
        let l = Line::through(pt(0, -3), pt(1, -1));
        assert_eq!(dual_point_of_line(&l).unwrap(), HPoint::from_ints(2, 3));
        // horizontal lines y = 1, y = 2 dualize to (0, −1), (0, −2)
        let h1 = Line::new(0, 1, 1).unwrap();
        let h2 = Line::new(0, 1, 2).unwrap();
        assert_eq!(dual_point_of_line(&h1).unwrap(), HPoint::from_ints(0, -1));
        assert_eq!(dual_point_of_line(&h2).unwrap(), HPoint::from_ints(0, -2));
        // vertical lines have no dual point
        assert!(dual_point_of_line(&Line::new(1, 0, 5).unwrap()).is_none());
    }

    #[test]
    fn dual_involution() {
        for p in [pt(2, 3), pt(-7, 0), pt(0, 0), pt(5, -11)] {
            let l = dual_line_of_point(p);
            assert_eq!(dual_point_of_line(&l).unwrap(), HPoint::from_point(p));
        }
        for (a, b, c) in [(2i64, -1, 3), (0, 1, 7), (5, 3, -2)] {
            let l = HLine::new(a.into(), b.into(), c.into()).unwrap();
            let d = dual_point_of_hline(&l).unwrap();
            assert_eq!(dual_hline_of_hpoint(&d), l);
        }
    }

    #[test]
    fn incidence_preserved() {
        // p on l  ⟺  dual(l) on dual(p)
        let p = pt(2, 1);
        let l = Line::through(pt(0, -3), pt(1, -1)); // y = 2x − 3 passes through (2, 1)
        assert_eq!(l.side(p), std::cmp::Ordering::Equal);
        let dp = dual_line_of_point(p);
        let dl = dual_point_of_line(&l).unwrap();
        assert_eq!(HLine::from_line(dp).side(&dl), std::cmp::Ordering::Equal);
    }

    #[test]
    fn rotation_queries() {
        let r = Ray::new(pt(1, 2), 3, 1).unwrap();
        match ray_rotation_int(r) {
            RotationQuery::Rotate { pivot, start, ccw } => {
                assert!(ccw);
                // the pivot is the dual of the supporting line; the start line
                // passes through it (origin lies on the supporting line)
                assert_eq!(start.side(&pivot), std::cmp::Ordering::Equal);
            }
            _ => panic!("non-vertical ray must rotate"),
        }
        let v = Ray::new(pt(4, -1), 0, -1).unwrap();
        match ray_rotation_int(v) {
            RotationQuery::Lift { d, threshold, up } => {
                assert_eq!(d, (4.into(), (-1).into()));
                assert_eq!(threshold, (-1).into());
                assert!(!up);
            }
            _ => panic!("vertical ray must lift"),
        }
    }

    #[test]
    fn shear_roundtrip_and_incidence() {
        for p in [pt(0, 0), pt(-9, 4), pt(1 << 30, -(1 << 30)), pt(123, -456)] {
            assert_eq!(unshear_point(shear_point(p)), p);
            assert_eq!(unshear_hpoint(&shear_hpoint(&HPoint::from_point(p))), HPoint::from_point(p));
        }
        // sheared line passes through sheared points; intersections commute
        let l = Line::through(pt(-3, 5), pt(7, 2));
        let sl = shear_line(&l);
        for p in [pt(-3, 5), pt(7, 2)] {
            assert_eq!(sl.side(&HPoint::from_point(shear_point(p))), std::cmp::Ordering::Equal);
        }
        let m = Line::through(pt(-3, 2), pt(7, 5));
        let x = meet_lines(&HLine::from_line(l), &HLine::from_line(m)).unwrap();
        let sx = meet_lines(&shear_line(&l), &shear_line(&m)).unwrap();
        assert_eq!(shear_hpoint(&x), sx);
    }

    #[test]
    fn order_preserved_by_shear() {
        let pts = [pt(0, 0), pt(0, 1), pt(1, -5), pt(-2, 3), pt(1, 0)];
        for &p in &pts {
            for &q in &pts {
                assert_eq!(p.cmp(&q), shear_point(p).x.cmp(&shear_point(q).x));
            }
        }
    }
}
