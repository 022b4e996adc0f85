//! Convex hulls of simple paths in O(n) via a deque sweep, split into the two
//! canonical chains.
//!
//! Chains are strictly convex and lex-increasing: `upper` runs from the
//! lex-min to the lex-max vertex along the upper side (left of the sweep
//! direction), `lower` along the lower side.  Both include the two extreme
//! vertices, so a one-point hull has chains of length 1 and any larger hull
//! has chains of length ≥ 2.

use super::Kernel;
use std::cmp::Ordering;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq)]
pub struct HullChains<K: Kernel> {
    pub upper: Vec<K::Pt>,
    pub lower: Vec<K::Pt>,
}

impl<K: Kernel> HullChains<K> {
    pub fn vertex_count(&self) -> usize {
        if self.upper.len() <= 1 {
            self.upper.len()
        } else {
            self.upper.len() + self.lower.len() - 2
        }
    }
}

/// Convex hull of a simple (non-self-intersecting) path of distinct points.
pub fn hull_of_path<K: Kernel>(path: &[K::Pt]) -> HullChains<K> {
    assert!(!path.is_empty(), "hull of empty path");
    // collinear prefix: track lex extremes until a 2-D triple appears
    let mut mn = 0usize;
    let mut mx = 0usize;
    let mut first2d = None;
    for (i, p) in path.iter().enumerate().skip(1) {
        if mn != mx && K::orient(&path[mn], &path[mx], p) != Ordering::Equal {
            first2d = Some(i);
            break;
        }
        if K::cmp_xy(p, &path[mn]) == Ordering::Less {
            mn = i;
        }
        if K::cmp_xy(p, &path[mx]) == Ordering::Greater {
            mx = i;
        }
    }
    let Some(start) = first2d else {
        // every point on one segment
        let lo = path[mn].clone();
        if mn == mx {
            return HullChains { upper: vec![lo.clone()], lower: vec![lo] };
        }
        let hi = path[mx].clone();
        return HullChains { upper: vec![lo.clone(), hi.clone()], lower: vec![lo, hi] };
    };

    // deque holds the hull as a CCW cycle d[0] == d[last] == last added vertex
    let mut d: VecDeque<K::Pt> = VecDeque::with_capacity(16);
    let (a, b, v) = (&path[mn], &path[mx], &path[start]);
    match K::orient(a, b, v) {
        Ordering::Greater => {
            d.extend([v.clone(), a.clone(), b.clone(), v.clone()]);
        }
        Ordering::Less => {
            d.extend([v.clone(), b.clone(), a.clone(), v.clone()]);
        }
        Ordering::Equal => unreachable!("chosen triple is 2-D"),
    }

    let left = |p: &K::Pt, q: &K::Pt, r: &K::Pt| K::orient(p, q, r) == Ordering::Greater;
    for v in &path[start + 1..] {
        if left(&d[0], &d[1], v) && left(&d[d.len() - 2], &d[d.len() - 1], v) {
            continue; // inside (or on) the current hull
        }
        while d.len() >= 3 && !left(&d[0], &d[1], v) {
            d.pop_front();
        }
        d.push_front(v.clone());
        while d.len() >= 3 && !left(&d[d.len() - 2], &d[d.len() - 1], v) {
            d.pop_back();
        }
        d.push_back(v.clone());
    }

    d.pop_back(); // drop duplicated closing vertex
    let mut cycle: Vec<K::Pt> = d.into();
    strip_collinear::<K>(&mut cycle);
    chains_from_cycle::<K>(cycle)
}

/// Remove weakly-convex (collinear-middle) vertices from a CCW cycle.
fn strip_collinear<K: Kernel>(cycle: &mut Vec<K::Pt>) {
    loop {
        let n = cycle.len();
        if n < 3 {
            return;
        }
        let mut keep = Vec::with_capacity(n);
        for i in 0..n {
            let p = &cycle[(i + n - 1) % n];
            let q = &cycle[i];
            let r = &cycle[(i + 1) % n];
            if K::orient(p, q, r) != Ordering::Equal {
                keep.push(i);
            }
        }
        if keep.len() == n {
            return;
        }
        let mut idx = 0usize;
        cycle.retain(|_| {
            let k = keep.contains(&idx);
            idx += 1;
            k
        });
        if cycle.len() < 3 {
            // degenerate cycle collapses to its two lex extremes
            return;
        }
    }
}

/// Split a strictly-convex CCW cycle into lex-increasing chains.
fn chains_from_cycle<K: Kernel>(cycle: Vec<K::Pt>) -> HullChains<K> {
    let n = cycle.len();
    assert!(n >= 3, "cycle must be 2-D");
    let mut mn = 0usize;
    let mut mx = 0usize;
    for i in 1..n {
        if K::cmp_xy(&cycle[i], &cycle[mn]) == Ordering::Less {
            mn = i;
        }
        if K::cmp_xy(&cycle[i], &cycle[mx]) == Ordering::Greater {
            mx = i;
        }
    }
    // CCW from lex-min: lower chain first (below), then upper reversed
    let mut lower = Vec::new();
    let mut i = mn;
    loop {
        lower.push(cycle[i].clone());
        if i == mx {
            break;
        }
        i = (i + 1) % n;
    }
    let mut upper = Vec::new();
    let mut i = mx;
    loop {
        upper.push(cycle[i].clone());
        if i == mn {
            break;
        }
        i = (i + 1) % n;
    }
    upper.reverse();
    HullChains { upper, lower }
}

/// CCW boundary cycle starting at the lex-min vertex.
pub fn hull_cycle<K: Kernel>(h: &HullChains<K>) -> Vec<K::Pt> {
    if h.upper.len() <= 1 {
        return h.upper.clone();
    }
    let mut cycle = h.lower.clone();
    cycle.extend(h.upper[1..h.upper.len() - 1].iter().rev().cloned());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, I64Kernel, Point};

    fn hull(path: &[Point]) -> HullChains<I64Kernel> {
        hull_of_path::<I64Kernel>(path)
    }

    #[test]
    fn triangle() {
        let h = hull(&[pt(0, 0), pt(2, 3), pt(4, 0)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(2, 3), pt(4, 0)]);
        assert_eq!(h.lower, vec![pt(0, 0), pt(4, 0)]);
        assert_eq!(hull_cycle(&h), vec![pt(0, 0), pt(4, 0), pt(2, 3)]);
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn degenerate_paths() {
        let h = hull(&[pt(5, 5)]);
        assert_eq!(h.upper, vec![pt(5, 5)]);
        assert_eq!(h.vertex_count(), 1);

        let h = hull(&[pt(3, 1), pt(0, 0)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(3, 1)]);
        assert_eq!(h.lower, h.upper);

        // all collinear: only the two extremes survive
        let h = hull(&[pt(2, 2), pt(0, 0), pt(3, 3), pt(1, 1)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(3, 3)]);
        assert_eq!(h.vertex_count(), 2);
    }

    #[test]
    fn square_with_interior_and_boundary_points() {
        let h = hull(&[pt(0, 0), pt(2, 1), pt(4, 0), pt(4, 4), pt(2, 2), pt(0, 4), pt(0, 2), pt(2, 4)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(0, 4), pt(4, 4)]);
        assert_eq!(h.lower, vec![pt(0, 0), pt(4, 0), pt(4, 4)]);
        assert_eq!(h.vertex_count(), 4);
    }

    #[test]
    fn vertical_edges_on_hull() {
        // lex order puts equal-x points in y-order; vertical hull edges are fine
        let h = hull(&[pt(0, 0), pt(1, 2), pt(0, 3)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(0, 3), pt(1, 2)]);
        assert_eq!(h.lower, vec![pt(0, 0), pt(1, 2)]);
    }

    #[test]
    fn collinear_prefix() {
        let h = hull(&[pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(3, 2)]);
        assert_eq!(h.upper, vec![pt(0, 0), pt(3, 2)]);
        assert_eq!(h.lower, vec![pt(0, 0), pt(3, 0), pt(3, 2)]);
    }

    #[test]
    fn zigzag_path() {
        let h = hull(&[pt(0, 0), pt(1, 3), pt(2, -1), pt(3, 2), pt(4, -2), pt(5, 1), pt(6, 0)]);
        // (3,2) lies exactly on (1,3)→(5,1) and is stripped; (5,1) is extreme
        assert_eq!(h.upper, vec![pt(0, 0), pt(1, 3), pt(5, 1), pt(6, 0)]);
        assert_eq!(h.lower, vec![pt(0, 0), pt(4, -2), pt(6, 0)]);
    }
}
