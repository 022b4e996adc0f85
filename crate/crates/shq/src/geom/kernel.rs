//! Kernel abstraction: the hull structures run unchanged over the integer
//! plane (fast i128 predicates) and the rational plane (BigInt, used for dual
//! points and derived constructions).
//!
//! Both planes carry a canonical non-degeneracy shear that breaks x-ties by y:
//! the integer plane uses x' = Kx + y with K = 2^31 (exact for bounded
//! coordinates), the rational plane uses a symbolic infinitesimal x' = x + εy.
//! Orientation is shear-invariant; only order and height comparisons see it.

use super::rat::{cmp_xy_h, cmp_yx_h, orient_h, HLine, HPoint};
use super::{wide, Line, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

pub trait Kernel: Clone + Debug + Default + 'static {
    type Pt: Clone + Debug + PartialEq + Eq + Hash;
    type Li: Clone + Debug + PartialEq;
    type Dir: Clone + Debug;

    /// Canonical (sheared) x-order: lexicographic by (x, y).
    fn cmp_xy(p: &Self::Pt, q: &Self::Pt) -> Ordering;
    fn cmp_yx(p: &Self::Pt, q: &Self::Pt) -> Ordering;
    /// Sign of cross(q−p, r−p); `Greater` = r strictly left of p→q.
    fn orient(p: &Self::Pt, q: &Self::Pt, r: &Self::Pt) -> Ordering;
    /// Sign of a·x + b·y − c at p.
    fn side(l: &Self::Li, p: &Self::Pt) -> Ordering;
    fn line_through(p: &Self::Pt, q: &Self::Pt) -> Self::Li;
    /// Compare d·p with d·q.
    fn cmp_along(d: &Self::Dir, p: &Self::Pt, q: &Self::Pt) -> Ordering;
    /// Left normal of q − p (points to the left of the directed segment).
    fn left_normal(p: &Self::Pt, q: &Self::Pt) -> Self::Dir;
    fn dir_neg(d: &Self::Dir) -> Self::Dir;
    /// (sign of x-component, sign of y-component).
    fn dir_signs(d: &Self::Dir) -> (Ordering, Ordering);
    /// Compare the heights of two edges at the sheared abscissa of f.
    ///
    /// Both edges must be lex-increasing and their sheared spans must contain
    /// the sheared abscissa of f (endpoints allowed).  `Greater` means e1
    /// passes strictly above e2 there (in the sheared plane, where every edge
    /// is x-monotone).
    fn cmp_height_at(e1: (&Self::Pt, &Self::Pt), e2: (&Self::Pt, &Self::Pt), f: &Self::Pt)
        -> Ordering;
    /// Compare the sheared slopes of two lex-increasing edges.
    fn cmp_edge_slopes(e1: (&Self::Pt, &Self::Pt), e2: (&Self::Pt, &Self::Pt)) -> Ordering;
    /// Compare the heights of the edges' supporting lines at the sheared
    /// abscissa of f.  Unlike [`cmp_height_at`] the spans need not contain
    /// f, but neither edge may be canonically vertical (always true on the
    /// integer plane).
    ///
    /// With `D` this comparison and `D'` the slope comparison, the lines
    /// cross left of f's abscissa iff D == D', at it iff D is `Equal`.
    ///
    /// [`cmp_height_at`]: Kernel::cmp_height_at
    fn cmp_ext_height_at(
        e1: (&Self::Pt, &Self::Pt),
        e2: (&Self::Pt, &Self::Pt),
        f: &Self::Pt,
    ) -> Ordering;
    /// Canonical-abscissa order of an exact rational point against a vertex.
    fn cmp_absc_h(hp: &HPoint, p: &Self::Pt) -> Ordering;
    /// The direction (a, b) maximized exactly by the points of largest
    /// a·x + b·y, i.e. the side() > 0 side of the line.
    fn li_normal(l: &Self::Li) -> Self::Dir;
    fn to_hpoint(p: &Self::Pt) -> HPoint;
    fn li_to_hline(l: &Self::Li) -> HLine;
}

/// Integer plane: `Point` coordinates bounded by `COORD_LIMIT`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct I64Kernel;

impl Kernel for I64Kernel {
    type Pt = Point;
    type Li = Line;
    type Dir = (i64, i64);

    fn cmp_xy(p: &Point, q: &Point) -> Ordering {
        p.cmp(q)
    }
    fn cmp_yx(p: &Point, q: &Point) -> Ordering {
        (p.y, p.x).cmp(&(q.y, q.x))
    }
    fn orient(p: &Point, q: &Point, r: &Point) -> Ordering {
        super::orient(*p, *q, *r)
    }
    fn side(l: &Line, p: &Point) -> Ordering {
        l.side(*p)
    }
    fn line_through(p: &Point, q: &Point) -> Line {
        Line::through(*p, *q)
    }
    fn cmp_along(d: &(i64, i64), p: &Point, q: &Point) -> Ordering {
        let dp = d.0 as i128 * p.x as i128 + d.1 as i128 * p.y as i128;
        let dq = d.0 as i128 * q.x as i128 + d.1 as i128 * q.y as i128;
        dp.cmp(&dq)
    }
    fn left_normal(p: &Point, q: &Point) -> (i64, i64) {
        (-(q.y - p.y), q.x - p.x)
    }
    fn dir_neg(d: &(i64, i64)) -> (i64, i64) {
        (-d.0, -d.1)
    }
    fn dir_signs(d: &(i64, i64)) -> (Ordering, Ordering) {
        (d.0.cmp(&0), d.1.cmp(&0))
    }

    fn cmp_height_at(e1: (&Point, &Point), e2: (&Point, &Point), f: &Point) -> Ordering {
        let (p, q) = e1;
        let (r, s) = e2;
        debug_assert!(p < q && r < s);
        let xf = f.sheared_x();
        debug_assert!(p.sheared_x() <= xf && xf <= q.sheared_x());
        debug_assert!(r.sheared_x() <= xf && xf <= s.sheared_x());
        // Endpoint at the fence fixes that edge's height exactly.
        let h1 = if p == f {
            Some(p.y)
        } else if q == f {
            Some(q.y)
        } else {
            None
        };
        let h2 = if r == f {
            Some(r.y)
        } else if s == f {
            Some(s.y)
        } else {
            None
        };
        // A fence that is an edge endpoint pins that edge's height to f.y, so
        // the comparison is an orientation against the other edge's line.
        match (h1, h2) {
            (Some(a), Some(b)) => return a.cmp(&b),
            (Some(_), None) => return Self::orient(r, s, f),
            (None, Some(_)) => return Self::orient(p, q, f).reverse(),
            (None, None) => {}
        }
        // Edge strictly on one side of the other's line decides without
        // division (shear-invariant).
        let or1 = Self::orient(p, q, r);
        let os1 = Self::orient(p, q, s);
        if or1 == Ordering::Less && os1 == Ordering::Less {
            return Ordering::Greater;
        }
        if or1 == Ordering::Greater && os1 == Ordering::Greater {
            return Ordering::Less;
        }
        // Exact interpolation at the fence.
        let d1 = q.sheared_x() - p.sheared_x();
        let d2 = s.sheared_x() - r.sheared_x();
        let n1 = p.y as i128 * d1 + (q.y - p.y) as i128 * (xf - p.sheared_x());
        let n2 = r.y as i128 * d2 + (s.y - r.y) as i128 * (xf - r.sheared_x());
        wide::cmp_frac(n1, d1, n2, d2)
    }

    fn cmp_edge_slopes(e1: (&Point, &Point), e2: (&Point, &Point)) -> Ordering {
        debug_assert!(e1.0 < e1.1 && e2.0 < e2.1);
        // sheared spans are positive, so the cross-multiplied compare is exact
        let d1 = e1.1.sheared_x() - e1.0.sheared_x();
        let d2 = e2.1.sheared_x() - e2.0.sheared_x();
        let y1 = (e1.1.y - e1.0.y) as i128;
        let y2 = (e2.1.y - e2.0.y) as i128;
        (y1 * d2).cmp(&(y2 * d1))
    }

    fn cmp_ext_height_at(e1: (&Point, &Point), e2: (&Point, &Point), f: &Point) -> Ordering {
        let (p, q) = e1;
        let (r, s) = e2;
        debug_assert!(p < q && r < s);
        // Same interpolation as cmp_height_at, but side shortcuts don't apply
        // to line extensions.  |xf − px'| < 2^63 and |Δy| ≤ 2^31 keep the
        // numerators within i128.
        let xf = f.sheared_x();
        let d1 = q.sheared_x() - p.sheared_x();
        let d2 = s.sheared_x() - r.sheared_x();
        let n1 = p.y as i128 * d1 + (q.y - p.y) as i128 * (xf - p.sheared_x());
        let n2 = r.y as i128 * d2 + (s.y - r.y) as i128 * (xf - r.sheared_x());
        wide::cmp_frac(n1, d1, n2, d2)
    }
    fn cmp_absc_h(hp: &HPoint, p: &Point) -> Ordering {
        // (K·x + y)/w against the vertex's sheared abscissa; w > 0.
        let t = BigInt::from(super::SHEAR_K) * hp.x() + hp.y() - BigInt::from(p.sheared_x()) * hp.w();
        t.cmp(&BigInt::zero())
    }
    fn li_normal(l: &Line) -> (i64, i64) {
        (l.a, l.b)
    }

    fn to_hpoint(p: &Point) -> HPoint {
        HPoint::from_point(*p)
    }
    fn li_to_hline(l: &Line) -> HLine {
        HLine::from_line(*l)
    }
}

/// Rational plane: homogeneous `BigInt` points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatKernel;

impl Kernel for RatKernel {
    type Pt = HPoint;
    type Li = HLine;
    type Dir = (BigInt, BigInt);

    fn cmp_xy(p: &HPoint, q: &HPoint) -> Ordering {
        cmp_xy_h(p, q)
    }
    fn cmp_yx(p: &HPoint, q: &HPoint) -> Ordering {
        cmp_yx_h(p, q)
    }
    fn orient(p: &HPoint, q: &HPoint, r: &HPoint) -> Ordering {
        orient_h(p, q, r)
    }
    fn side(l: &HLine, p: &HPoint) -> Ordering {
        l.side(p)
    }
    fn line_through(p: &HPoint, q: &HPoint) -> HLine {
        HLine::through(p, q)
    }
    fn cmp_along(d: &(BigInt, BigInt), p: &HPoint, q: &HPoint) -> Ordering {
        // sign of d·(p − q); w's are positive.
        let t = &d.0 * (p.x() * q.w() - q.x() * p.w()) + &d.1 * (p.y() * q.w() - q.y() * p.w());
        t.cmp(&BigInt::zero())
    }
    fn left_normal(p: &HPoint, q: &HPoint) -> (BigInt, BigInt) {
        // direction q − p is proportional to (xq·wp − xp·wq, yq·wp − yp·wq)
        let dx = q.x() * p.w() - p.x() * q.w();
        let dy = q.y() * p.w() - p.y() * q.w();
        (-dy, dx)
    }
    fn dir_neg(d: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        (-&d.0, -&d.1)
    }
    fn dir_signs(d: &(BigInt, BigInt)) -> (Ordering, Ordering) {
        let s = |v: &BigInt| {
            if v.is_positive() {
                Ordering::Greater
            } else if v.is_negative() {
                Ordering::Less
            } else {
                Ordering::Equal
            }
        };
        (s(&d.0), s(&d.1))
    }

    fn cmp_height_at(e1: (&HPoint, &HPoint), e2: (&HPoint, &HPoint), f: &HPoint) -> Ordering {
        debug_assert_eq!(cmp_xy_h(e1.0, e1.1), Ordering::Less);
        debug_assert_eq!(cmp_xy_h(e2.0, e2.1), Ordering::Less);
        debug_assert!(cmp_xy_h(e1.0, f) != Ordering::Greater && cmp_xy_h(f, e1.1) != Ordering::Greater);
        debug_assert!(cmp_xy_h(e2.0, f) != Ordering::Greater && cmp_xy_h(f, e2.1) != Ordering::Greater);
        let (xp, yp) = (e1.0.x_rat(), e1.0.y_rat());
        let (xq, yq) = (e1.1.x_rat(), e1.1.y_rat());
        let (xr, yr) = (e2.0.x_rat(), e2.0.y_rat());
        let (xs, ys) = (e2.1.x_rat(), e2.1.y_rat());
        let (xf, yf) = (f.x_rat(), f.y_rat());
        let dx1 = &xq - &xp;
        let dy1 = &yq - &yp;
        let dx2 = &xs - &xr;
        let dy2 = &ys - &yr;
        let v1 = dx1.is_zero();
        let v2 = dx2.is_zero();
        // A vertical edge passes through every point of its span, so its
        // height at the fence is exactly yf.
        if v1 && v2 {
            return Ordering::Equal;
        }
        // A(ε) = a0 + ε·dy1·yf over D1 = dx1 + ε·dy1 (and likewise B over D2);
        // the ε² term of A·D2 − B·D1 cancels, leaving a two-term comparison.
        let a0 = &yp * &dx1 + &dy1 * (&xf - &xp);
        let b0 = &yr * &dx2 + &dy2 * (&xf - &xr);
        if v1 {
            return (&yf * &dx2).cmp(&b0);
        }
        if v2 {
            return a0.cmp(&(&yf * &dx1));
        }
        let n0 = &a0 * &dx2 - &b0 * &dx1;
        if !n0.is_zero() {
            return n0.cmp(&BigRational::zero());
        }
        let n1 = &a0 * &dy2 + &yf * &dy1 * &dx2 - &b0 * &dy1 - &yf * &dy2 * &dx1;
        n1.cmp(&BigRational::zero())
    }

    fn cmp_edge_slopes(e1: (&HPoint, &HPoint), e2: (&HPoint, &HPoint)) -> Ordering {
        debug_assert_eq!(cmp_xy_h(e1.0, e1.1), Ordering::Less);
        debug_assert_eq!(cmp_xy_h(e2.0, e2.1), Ordering::Less);
        let dx = |e: (&HPoint, &HPoint)| e.1.x() * e.0.w() - e.0.x() * e.1.w();
        let dy = |e: (&HPoint, &HPoint)| e.1.y() * e.0.w() - e.0.y() * e.1.w();
        let (dx1, dy1) = (dx(e1), dy(e1));
        let (dx2, dy2) = (dx(e2), dy(e2));
        // Sheared dx is dx + ε·dy; a lex-increasing vertical edge has dx = 0,
        // dy > 0, hence slope 1/ε: above every non-vertical slope.  For two
        // non-vertical edges the ε terms cancel exactly.
        match (dx1.is_zero(), dx2.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&dy1 * &dx2).cmp(&(&dy2 * &dx1)),
        }
    }
    fn cmp_ext_height_at(e1: (&HPoint, &HPoint), e2: (&HPoint, &HPoint), f: &HPoint) -> Ordering {
        debug_assert_eq!(cmp_xy_h(e1.0, e1.1), Ordering::Less);
        debug_assert_eq!(cmp_xy_h(e2.0, e2.1), Ordering::Less);
        let (xp, yp) = (e1.0.x_rat(), e1.0.y_rat());
        let (xq, yq) = (e1.1.x_rat(), e1.1.y_rat());
        let (xr, yr) = (e2.0.x_rat(), e2.0.y_rat());
        let (xs, ys) = (e2.1.x_rat(), e2.1.y_rat());
        let (xf, yf) = (f.x_rat(), f.y_rat());
        let dx1 = &xq - &xp;
        let dy1 = &yq - &yp;
        let dx2 = &xs - &xr;
        let dy2 = &ys - &yr;
        // A vertical edge has no line height away from its own abscissa.
        debug_assert!(!dx1.is_zero() && !dx2.is_zero());
        // Same ε-expansion as cmp_height_at; nothing in it needs f in-span.
        let a0 = &yp * &dx1 + &dy1 * (&xf - &xp);
        let b0 = &yr * &dx2 + &dy2 * (&xf - &xr);
        let n0 = &a0 * &dx2 - &b0 * &dx1;
        if !n0.is_zero() {
            return n0.cmp(&BigRational::zero());
        }
        let n1 = &a0 * &dy2 + &yf * &dy1 * &dx2 - &b0 * &dy1 - &yf * &dy2 * &dx1;
        n1.cmp(&BigRational::zero())
    }
    fn cmp_absc_h(hp: &HPoint, p: &HPoint) -> Ordering {
        cmp_xy_h(hp, p)
    }
    fn li_normal(l: &HLine) -> (BigInt, BigInt) {
        (l.a().clone(), l.b().clone())
    }

    fn to_hpoint(p: &HPoint) -> HPoint {
        p.clone()
    }
    fn li_to_hline(l: &HLine) -> HLine {
        l.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Height comparison against direct rational evaluation at an explicit
    // shear x' = x + eps·y.
    fn brute_height_cmp(
        e1: (Point, Point),
        e2: (Point, Point),
        f: Point,
        eps: &BigRational,
    ) -> Ordering {
        let x = |p: Point| BigRational::from_integer(p.x.into()) + eps * BigRational::from_integer(p.y.into());
        let h = |(a, b): (Point, Point)| {
            let (xa, xb, xf) = (x(a), x(b), x(f));
            let ya = BigRational::from_integer(a.y.into());
            let yb = BigRational::from_integer(b.y.into());
            &ya + (&yb - &ya) * (&xf - &xa) / (&xb - &xa)
        };
        h(e1).cmp(&h(e2))
    }

    fn pow2_inv(k: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2u8).pow(k))
    }

    #[test]
    fn i64_height_basic() {
        let e1 = (pt(0, 0), pt(4, 0));
        let e2 = (pt(0, 2), pt(4, 6));
        let f = pt(2, 0);
        assert_eq!(I64Kernel::cmp_height_at((&e1.0, &e1.1), (&e2.0, &e2.1), &f), Ordering::Less);
        // shared endpoint at the fence
        let e3 = (pt(2, 0), pt(5, -1));
        assert_eq!(
            I64Kernel::cmp_height_at((&e1.0, &e1.1), (&e3.0, &e3.1), &pt(2, 0)),
            Ordering::Equal
        );
        // crossing edges, fence left of the crossing
        let e4 = (pt(0, -2), pt(4, 2));
        assert_eq!(
            I64Kernel::cmp_height_at((&e1.0, &e1.1), (&e4.0, &e4.1), &pt(1, 0)),
            Ordering::Greater
        );
    }

    #[test]
    fn i64_height_matches_brute() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let eps = pow2_inv(31);
        for _ in 0..500 {
            let fx = rng.gen_range(2i64..=6);
            let mut y = || rng.gen_range(-40i64..=40);
            let e1 = (pt(0, y()), pt(8, y()));
            let e2 = (pt(1, y()), pt(7, y()));
            let f = pt(fx, y());
            let got = I64Kernel::cmp_height_at((&e1.0, &e1.1), (&e2.0, &e2.1), &f);
            assert_eq!(got, brute_height_cmp(e1, e2, f, &eps), "{e1:?} {e2:?} {f:?}");
        }
    }

    #[test]
    fn rat_height_matches_brute() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        // 2^-200 is far below every branch point for these coordinates, so it
        // behaves as the symbolic infinitesimal.
        let eps = pow2_inv(200);
        let hp = HPoint::from_point;
        for _ in 0..500 {
            let fx = rng.gen_range(2i64..=6);
            let mut y = || rng.gen_range(-40i64..=40);
            let e1 = (pt(0, y()), pt(8, y()));
            let e2 = (pt(1, y()), pt(7, y()));
            let f = pt(fx, y());
            let got = RatKernel::cmp_height_at(
                (&hp(e1.0), &hp(e1.1)),
                (&hp(e2.0), &hp(e2.1)),
                &hp(f),
            );
            assert_eq!(got, brute_height_cmp(e1, e2, f, &eps), "{e1:?} {e2:?} {f:?}");
        }
    }

    #[test]
    fn rat_height_vertical_edges() {
        let hp = HPoint::from_ints;
        // vertical edge passes through the fence point's y
        let v = (hp(2, -3), hp(2, 5));
        let e = (hp(0, 0), hp(4, 0));
        // fence (2, 1): vertical edge height 1, e height ~0
        assert_eq!(
            RatKernel::cmp_height_at((&v.0, &v.1), (&e.0, &e.1), &hp(2, 1)),
            Ordering::Greater
        );
        assert_eq!(
            RatKernel::cmp_height_at((&v.0, &v.1), (&e.0, &e.1), &hp(2, -1)),
            Ordering::Less
        );
        // two vertical edges through the same fence agree
        let v2 = (hp(2, 1), hp(2, 7));
        assert_eq!(
            RatKernel::cmp_height_at((&v.0, &v.1), (&v2.0, &v2.1), &hp(2, 1)),
            Ordering::Equal
        );
    }

    #[test]
    fn i64_height_shared_x_ties() {
        // fence between two points with equal x exercises the shear order
        let e1 = (pt(0, 0), pt(2, 4));
        let e2 = (pt(0, 1), pt(2, 3));
        // at fence (1, 0): e1 height 2, e2 height 2 in the unsheared plane;
        // the shear separates them: e1 rises faster.
        let got = I64Kernel::cmp_height_at((&e1.0, &e1.1), (&e2.0, &e2.1), &pt(1, 0));
        assert_eq!(got, brute_height_cmp(e1, e2, pt(1, 0), &pow2_inv(31)));
    }

    #[test]
    fn ext_height_out_of_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let hp = HPoint::from_point;
        for _ in 0..500 {
            let fx = [-7, 4, 12][rng.gen_range(0..3)];
            let mut y = || rng.gen_range(-40i64..=40);
            let e1 = (pt(0, y()), pt(3, y()));
            let e2 = (pt(5, y()), pt(9, y()));
            // fence in the gap or outside both spans
            let f = pt(fx, y());
            let want = brute_height_cmp(e1, e2, f, &pow2_inv(31));
            assert_eq!(
                I64Kernel::cmp_ext_height_at((&e1.0, &e1.1), (&e2.0, &e2.1), &f),
                want,
                "{e1:?} {e2:?} {f:?}"
            );
            let want = brute_height_cmp(e1, e2, f, &pow2_inv(200));
            assert_eq!(
                RatKernel::cmp_ext_height_at((&hp(e1.0), &hp(e1.1)), (&hp(e2.0), &hp(e2.1)), &hp(f)),
                want,
                "{e1:?} {e2:?} {f:?}"
            );
        }
    }

    #[test]
    fn absc_order_near_vertical() {
        // tiny positive Δx with a large negative Δy: lex on (x, y) pairs
        // disagrees with the sheared abscissa for rational points
        let apex = HPoint::new(BigInt::from(100_001), BigInt::from(-500_000_000i64 * 100_000), BigInt::from(100_000));
        let v = pt(1, 0);
        assert_eq!(I64Kernel::cmp_absc_h(&apex, &v), Ordering::Less);
        assert_eq!(I64Kernel::cmp_absc_h(&HPoint::from_point(v), &v), Ordering::Equal);
        assert_eq!(I64Kernel::cmp_absc_h(&HPoint::from_ints(1, 1), &v), Ordering::Greater);
        // the rational plane orders by the pair itself
        let hv = HPoint::from_ints(1, 0);
        assert_eq!(RatKernel::cmp_absc_h(&apex, &hv), Ordering::Greater);
    }

    #[test]
    fn edge_slopes() {
        let e1 = (pt(0, 0), pt(4, 4));
        let e2 = (pt(1, 0), pt(3, 1));
        assert_eq!(I64Kernel::cmp_edge_slopes((&e1.0, &e1.1), (&e2.0, &e2.1)), Ordering::Greater);
        // same rational slope, different lengths
        let e3 = (pt(-2, -2), pt(0, 0));
        assert_eq!(I64Kernel::cmp_edge_slopes((&e1.0, &e1.1), (&e3.0, &e3.1)), Ordering::Equal);
        let hp = HPoint::from_ints;
        let v = (hp(2, -3), hp(2, 5));
        let e = (hp(0, 0), hp(4, 1));
        assert_eq!(RatKernel::cmp_edge_slopes((&v.0, &v.1), (&e.0, &e.1)), Ordering::Greater);
        assert_eq!(RatKernel::cmp_edge_slopes((&e.0, &e.1), (&e.0, &e.1)), Ordering::Equal);
    }

    #[test]
    fn cmp_along_and_normals() {
        let d = I64Kernel::left_normal(&pt(0, 0), &pt(2, 1));
        assert_eq!(d, (-1, 2));
        assert_eq!(I64Kernel::cmp_along(&d, &pt(0, 5), &pt(0, 0)), Ordering::Greater);
        let hd = RatKernel::left_normal(&HPoint::from_ints(0, 0), &HPoint::from_ints(2, 1));
        assert_eq!(
            RatKernel::cmp_along(&hd, &HPoint::from_ints(0, 5), &HPoint::from_ints(0, 0)),
            Ordering::Greater
        );
    }
}
