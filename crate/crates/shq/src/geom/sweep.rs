//! Plane-sweep crossing detection for polygonal paths.
//!
//! Standard left-to-right sweep over the edges in the canonical (sheared)
//! order: a status list holds the edges cut by the sweep line sorted by
//! height, and only pairs that become neighbors are tested.  Consecutive path
//! edges are allowed to share exactly their common vertex; any other contact
//! between two edges breaks simplicity.  Stops at the first offending pair,
//! which keeps the status order consistent throughout.
//!
//! Edges tying in height at an event (several edges through one point, or
//! collinear overlaps) form a contiguous block in the status order; an
//! insertion is tested against the whole block, not just its two neighbors,
//! so concurrent-point degeneracies cannot hide behind an excused
//! consecutive pair.

use super::kernel::{I64Kernel, Kernel};
use super::{segments_intersect, Point, Segment};
use std::cmp::Ordering;

/// First pair of path edges that breaks simplicity, as edge indices
/// (i, j) with i <= j; edge i joins vertices i and i+1.  i == j flags a
/// zero-length edge.  `None` means the open polyline is simple.
pub fn path_crossing(path: &[Point]) -> Option<(usize, usize)> {
    if path.len() < 2 {
        return None;
    }
    let ne = path.len() - 1;
    let mut edges = Vec::with_capacity(ne);
    for (i, w) in path.windows(2).enumerate() {
        if w[0] == w[1] {
            return Some((i, i));
        }
        let (lo, hi) = if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
        edges.push((lo, hi));
    }

    // events: (point, 0 = insert / 1 = remove, edge); inserts first at equal
    // points so edges meeting end-to-start coexist and get compared
    let mut events = Vec::with_capacity(2 * ne);
    for (i, &(lo, hi)) in edges.iter().enumerate() {
        events.push((lo, 0u8, i));
        events.push((hi, 1u8, i));
    }
    events.sort_unstable();

    let height = |a: usize, b: usize, f: &Point| {
        I64Kernel::cmp_height_at((&edges[a].0, &edges[a].1), (&edges[b].0, &edges[b].1), f)
    };
    // ties (edges through the event point) must order by outgoing slope, or
    // the status list stops being height-sorted once they diverge
    let slope = |a: usize, b: usize| {
        I64Kernel::cmp_edge_slopes((&edges[a].0, &edges[a].1), (&edges[b].0, &edges[b].1))
    };
    let bad = |a: usize, b: usize| edges_conflict(path, a, b);
    let order = |a: usize, b: usize| (a.min(b), a.max(b));

    let mut active: Vec<usize> = Vec::new();
    for &(p, kind, e) in &events {
        if kind == 0 {
            let pos = active
                .binary_search_by(|&a| height(a, e, &p).then_with(|| slope(a, e)).then(a.cmp(&e)))
                .unwrap_err();
            // test against the tie block plus one strict neighbor on each side
            let mut k = pos;
            while k > 0 {
                k -= 1;
                if bad(active[k], e) {
                    return Some(order(active[k], e));
                }
                if height(active[k], e, &p) != Ordering::Equal {
                    break;
                }
            }
            let mut k = pos;
            while k < active.len() {
                if bad(active[k], e) {
                    return Some(order(active[k], e));
                }
                if height(active[k], e, &p) != Ordering::Equal {
                    break;
                }
                k += 1;
            }
            active.insert(pos, e);
        } else {
            let pos = active.iter().position(|&a| a == e).expect("active edge");
            active.remove(pos);
            if pos > 0 && pos < active.len() && bad(active[pos - 1], active[pos]) {
                return Some(order(active[pos - 1], active[pos]));
            }
        }
    }
    None
}

pub fn path_is_simple(path: &[Point]) -> bool {
    path_crossing(path).is_none()
}

/// True iff path edges a and b (a ≠ b) meet in a way that breaks simplicity.
/// Consecutive edges may share exactly their common vertex, so for them only
/// collinear doubling back counts; any contact counts for all other pairs.
pub fn edges_conflict(path: &[Point], a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    if b - a == 1 {
        let s = Segment { p: path[a], q: path[a + 1] };
        let t = Segment { p: path[b], q: path[b + 1] };
        super::orient(s.p, s.q, t.q) == Ordering::Equal && (s.p < path[b]) == (t.q < path[b])
    } else {
        segments_intersect(
            Segment { p: path[a], q: path[a + 1] },
            Segment { p: path[b], q: path[b + 1] },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{rng_from, star_path};
    use crate::geom::pt;
    use rand::Rng;

    // same excusal rule, all pairs, no sweep machinery
    fn brute(path: &[Point]) -> Option<(usize, usize)> {
        for i in 0..path.len().saturating_sub(1) {
            if path[i] == path[i + 1] {
                return Some((i, i));
            }
        }
        for i in 0..path.len().saturating_sub(1) {
            for j in i + 1..path.len() - 1 {
                let s = Segment { p: path[i], q: path[i + 1] };
                let t = Segment { p: path[j], q: path[j + 1] };
                let hit = if j == i + 1 {
                    crate::geom::orient(s.p, s.q, t.q) == Ordering::Equal
                        && (s.p < path[j]) == (t.q < path[j])
                } else {
                    segments_intersect(s, t)
                };
                if hit {
                    return Some((i, j));
                }
            }
        }
        None
    }

    #[test]
    fn simple_fixtures() {
        assert_eq!(path_crossing(&[]), None);
        assert_eq!(path_crossing(&[pt(3, 4)]), None);
        assert_eq!(path_crossing(&[pt(0, 0), pt(1, 1)]), None);
        assert_eq!(path_crossing(&[pt(0, 0), pt(2, 3), pt(4, 1), pt(6, 4), pt(8, 0)]), None);
        // vertical zigzag
        assert_eq!(path_crossing(&[pt(0, 0), pt(0, 5), pt(1, 0), pt(1, 5), pt(2, 0)]), None);
    }

    #[test]
    fn crossing_fixtures() {
        // plain X crossing between edges 0 and 2
        assert_eq!(path_crossing(&[pt(0, 0), pt(4, 4), pt(4, 0), pt(0, 4)]), Some((0, 2)));
        // T-junction: vertex 3 lands on the interior of edge 0
        assert_eq!(path_crossing(&[pt(0, 0), pt(8, 0), pt(8, 4), pt(4, 0)]), Some((0, 2)));
        // repeated vertex (0,0) at positions 0 and 3
        assert_eq!(
            path_crossing(&[pt(0, 0), pt(5, 0), pt(5, 5), pt(0, 0), pt(-5, 5)]).is_some(),
            true
        );
        // zero-length edge
        assert_eq!(path_crossing(&[pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 0)]), Some((1, 1)));
        // collinear doubling back on consecutive edges
        assert_eq!(path_crossing(&[pt(0, 0), pt(10, 0), pt(5, 0), pt(5, 5)]), Some((0, 1)));
        // collinear overlap of non-adjacent edges
        assert_eq!(
            path_crossing(&[pt(0, 0), pt(10, 0), pt(10, 5), pt(3, 0), pt(7, 0)]).is_some(),
            true
        );
        // touching at a shared non-consecutive endpoint only
        assert_eq!(path_crossing(&[pt(0, 0), pt(4, 0), pt(2, 3), pt(0, 0), pt(-3, 1)]).is_some(), true);
    }

    #[test]
    fn matches_brute_on_random_paths() {
        let mut rng = rng_from(1105);
        for trial in 0..400 {
            let n = rng.gen_range(3..28);
            let range = rng.gen_range(3..12);
            let path: Vec<Point> =
                (0..n).map(|_| pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range))).collect();
            assert_eq!(
                path_crossing(&path).is_some(),
                brute(&path).is_some(),
                "trial {trial}: {path:?}"
            );
        }
    }

    #[test]
    fn accepts_star_paths() {
        for seed in 0..30 {
            let path = star_path(&mut rng_from(seed), 60, 40);
            assert_eq!(path_crossing(&path), None, "seed {seed}");
        }
    }

    #[test]
    fn larger_random_paths_match_brute() {
        let mut rng = rng_from(2211);
        for _ in 0..40 {
            let n = rng.gen_range(30..120);
            let range = 1 + (n as i64) / 3;
            let path: Vec<Point> =
                (0..n).map(|_| pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range))).collect();
            assert_eq!(path_crossing(&path).is_some(), brute(&path).is_some());
        }
    }
}
