//! Homogeneous rational plane over `BigInt`.
//!
//! A point is (x : y : w) with w > 0 and gcd(x, y, w) = 1, so equal rational
//! points have identical representations and derived `Eq`/`Hash` are sound.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HPoint {
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

impl HPoint {
    /// Normalizing constructor; w must be nonzero.
    pub fn new(x: BigInt, y: BigInt, w: BigInt) -> HPoint {
        assert!(!w.is_zero(), "point at infinity");
        let (mut x, mut y, mut w) = (x, y, w);
        if w.is_negative() {
            x = -x;
            y = -y;
            w = -w;
        }
        let g = x.gcd(&y).gcd(&w);
        if !g.is_zero() && g != BigInt::from(1) {
            x /= &g;
            y /= &g;
            w /= &g;
        }
        HPoint { x, y, w }
    }

    pub fn from_point(p: super::Point) -> HPoint {
        HPoint { x: p.x.into(), y: p.y.into(), w: 1.into() }
    }

    pub fn from_ints(x: i64, y: i64) -> HPoint {
        HPoint { x: x.into(), y: y.into(), w: 1.into() }
    }

    pub fn from_rationals(x: BigRational, y: BigRational) -> HPoint {
        let w = x.denom().lcm(y.denom());
        let xn = x.numer() * (&w / x.denom());
        let yn = y.numer() * (&w / y.denom());
        HPoint::new(xn, yn, w)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }
    pub fn y(&self) -> &BigInt {
        &self.y
    }
    pub fn w(&self) -> &BigInt {
        &self.w
    }

    pub fn x_rat(&self) -> BigRational {
        BigRational::new(self.x.clone(), self.w.clone())
    }
    pub fn y_rat(&self) -> BigRational {
        BigRational::new(self.y.clone(), self.w.clone())
    }

    /// Exact integer coordinates, if the point has any.
    pub fn to_point(&self) -> Option<super::Point> {
        if self.w == BigInt::from(1) {
            Some(super::Point { x: i64::try_from(&self.x).ok()?, y: i64::try_from(&self.y).ok()? })
        } else {
            None
        }
    }
}

impl std::fmt::Display for HPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.w == BigInt::from(1) {
            write!(f, "({}, {})", self.x, self.y)
        } else {
            write!(f, "({}/{}, {}/{})", self.x, self.w, self.y, self.w)
        }
    }
}

/// Lexicographic rational order (x, then y): the canonical x-order of the
/// rational plane.
pub fn cmp_xy_h(p: &HPoint, q: &HPoint) -> Ordering {
    (&p.x * &q.w).cmp(&(&q.x * &p.w)).then_with(|| (&p.y * &q.w).cmp(&(&q.y * &p.w)))
}

pub fn cmp_yx_h(p: &HPoint, q: &HPoint) -> Ordering {
    (&p.y * &q.w).cmp(&(&q.y * &p.w)).then_with(|| (&p.x * &q.w).cmp(&(&q.x * &p.w)))
}

impl PartialOrd for HPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_xy_h(self, other)
    }
}

/// Orientation of three rational points; sign of the homogeneous 3x3
/// determinant (all w > 0, so no sign correction).
pub fn orient_h(p: &HPoint, q: &HPoint, r: &HPoint) -> Ordering {
    let d = (&p.x * (&q.y * &r.w - &r.y * &q.w)) - (&p.y * (&q.x * &r.w - &r.x * &q.w))
        + (&p.w * (&q.x * &r.y - &r.x * &q.y));
    d.cmp(&BigInt::zero())
}

/// Line a·x + b·y = c·w in homogeneous form, gcd-reduced with the first
/// nonzero of (a, b) positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl HLine {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<HLine> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::invalid("line with a = b = 0"));
        }
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(HLine { a, b, c })
    }

    pub fn from_line(l: super::Line) -> HLine {
        HLine { a: l.a.into(), b: l.b.into(), c: l.c.into() }
    }

    /// Line through two distinct points.
    pub fn through(p: &HPoint, q: &HPoint) -> HLine {
        debug_assert_ne!(p, q);
        let a = &p.y * &q.w - &q.y * &p.w;
        let b = &q.x * &p.w - &p.x * &q.w;
        let c = &q.x * &p.y - &p.x * &q.y;
        HLine::new(a, b, c).expect("distinct points give a valid line")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Sign of a·x + b·y − c·w.
    pub fn side(&self, p: &HPoint) -> Ordering {
        (&self.a * &p.x + &self.b * &p.y - &self.c * &p.w).cmp(&BigInt::zero())
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Parallel lines have proportional (a, b); with the normalization that
    /// means equal (a, b).
    pub fn parallel_to(&self, other: &HLine) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }
}

/// Intersection point of two lines; `None` if parallel (including equal).
pub fn meet_lines(l1: &HLine, l2: &HLine) -> Option<HPoint> {
    let d = &l1.a * &l2.b - &l2.a * &l1.b;
    if d.is_zero() {
        return None;
    }
    let x = &l1.c * &l2.b - &l2.c * &l1.b;
    let y = &l1.a * &l2.c - &l2.a * &l1.c;
    Some(HPoint::new(x, y, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;

    fn h(x: i64, y: i64, w: i64) -> HPoint {
        HPoint::new(x.into(), y.into(), w.into())
    }

    #[test]
    fn normalization_and_eq() {
        assert_eq!(h(2, 4, 2), h(1, 2, 1));
        assert_eq!(h(1, -1, -2), h(-1, 1, 2));
        assert_eq!(h(3, 6, 4).x_rat(), BigRational::new(3.into(), 4.into()));
    }

    #[test]
    fn orders_and_orientation() {
        assert_eq!(cmp_xy_h(&h(1, 0, 2), &h(2, -5, 3)), Ordering::Less); // 1/2 < 2/3
        assert_eq!(cmp_xy_h(&h(1, 1, 2), &h(2, 3, 4)), Ordering::Less); // tie on x, 1/2 < 3/4
        assert_eq!(orient_h(&h(0, 0, 1), &h(2, 0, 1), &h(1, 1, 3)), Ordering::Greater);
        assert_eq!(orient_h(&h(0, 0, 1), &h(2, 2, 1), &h(3, 3, 7)), Ordering::Equal);
        // agreement with the integer predicate
        for t in [(0i64, 0i64, 1i64, 2i64, 3i64, -1i64), (5, 5, 5, 6, 6, 5)] {
            let (ax, ay, bx, by, cx, cy) = t;
            assert_eq!(
                orient_h(&HPoint::from_ints(ax, ay), &HPoint::from_ints(bx, by), &HPoint::from_ints(cx, cy)),
                super::super::orient(pt(ax, ay), pt(bx, by), pt(cx, cy))
            );
        }
    }

    #[test]
    fn lines_and_meets() {
        let p = h(0, -3, 1);
        let q = h(1, -1, 1);
        let l = HLine::through(&p, &q); // y = 2x - 3
        assert_eq!(l.side(&h(2, 1, 1)), Ordering::Equal);
        assert_eq!(l.side(&h(4, 2, 2)), Ordering::Equal); // (2, 1) again
        let m = HLine::new(1.into(), 1.into(), 0.into()).unwrap(); // x + y = 0
        let x = meet_lines(&l, &m).unwrap();
        assert_eq!(x, h(1, -1, 1));
        let par = HLine::new(2.into(), (-1).into(), 7.into()).unwrap();
        assert!(meet_lines(&l, &par).is_none());
        assert!(par.parallel_to(&l));
    }

    #[test]
    fn from_rationals_roundtrip() {
        let x = BigRational::new(7.into(), (-3).into());
        let y = BigRational::new(1.into(), 6.into());
        let p = HPoint::from_rationals(x.clone(), y.clone());
        assert_eq!(p.x_rat(), x);
        assert_eq!(p.y_rat(), y);
    }
}
