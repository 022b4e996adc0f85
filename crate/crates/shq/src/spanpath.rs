//! Simple spanning paths with low line-stabbing number.
//!
//! Construction is a kd-style recursive median split alternating the two
//! coordinate orders, leaf size 1, path = in-order leaf visitation; the
//! result is then uncrossed by 2-opt reversals, each applied only when it
//! certainly shrinks the total Euclidean length (the termination
//! certificate).  Stabbing counts are exact with a fixed tie rule, so the
//! ~√n stabbing behavior is a measured property, not a theorem.

use crate::geom::{edges_conflict, path_crossing, Line, Point};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::VecDeque;

/// A spanning order of a point set, points materialized in visit order.
pub struct SpanningPath {
    pts: Vec<Point>,
    order: Vec<u32>,
    verified: bool,
}

impl SpanningPath {
    /// Vertices in visit order.
    pub fn points(&self) -> &[Point] {
        &self.pts
    }

    /// Original index of each visited point.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    /// Whether the crossing sweep certified the path simple.
    pub fn verified_simple(&self) -> bool {
        self.verified
    }
}

/// In-order leaf visitation of a kd split: median by lex (x, y) at even
/// depths, by lex (y, x) at odd ones.
fn kd_order(pts: &[Point]) -> Vec<u32> {
    fn rec(pts: &[Point], idx: &mut [u32], depth: usize) {
        if idx.len() <= 1 {
            return;
        }
        let mid = idx.len() / 2;
        if depth % 2 == 0 {
            idx.select_nth_unstable_by(mid, |&a, &b| pts[a as usize].cmp(&pts[b as usize]));
        } else {
            idx.select_nth_unstable_by(mid, |&a, &b| {
                let (p, q) = (pts[a as usize], pts[b as usize]);
                (p.y, p.x).cmp(&(q.y, q.x))
            });
        }
        let (lo, hi) = idx.split_at_mut(mid);
        rec(pts, lo, depth + 1);
        rec(pts, hi, depth + 1);
    }
    let mut idx: Vec<u32> = (0..pts.len() as u32).collect();
    rec(pts, &mut idx, 0);
    idx
}

fn dist(a: Point, b: Point) -> f64 {
    let dx = (a.x - b.x) as f64;
    let dy = (a.y - b.y) as f64;
    (dx * dx + dy * dy).sqrt()
}

/// Swaps are applied only when the f64 gain clears this margin, which
/// dominates the rounding error of four square roots at in-bounds
/// coordinates; every applied swap then shrinks the true length.
const GAIN_MARGIN: f64 = 1e-4;

/// Length saved by reversing positions [l, r]: only the two boundary edges
/// change.  Positive = improvement.
fn swap_gain(pts: &[Point], l: usize, r: usize) -> f64 {
    let (mut before, mut after) = (0.0, 0.0);
    if l > 0 {
        before += dist(pts[l - 1], pts[l]);
        after += dist(pts[l - 1], pts[r]);
    }
    if r + 1 < pts.len() {
        before += dist(pts[r], pts[r + 1]);
        after += dist(pts[l], pts[r + 1]);
    }
    before - after
}

fn apply(pts: &mut [Point], ord: &mut [u32], l: usize, r: usize) {
    pts[l..=r].reverse();
    ord[l..=r].reverse();
}

/// Reversals that can reroute the conflicting pair (i, j): the classic
/// inner reversal, then prefix/suffix reversals that replace one edge each
/// (needed when the inner move degenerates, e.g. collinear doubling).
fn fix_pair(pts: &mut [Point], ord: &mut [u32], i: usize, j: usize) -> Option<(usize, usize)> {
    let n = pts.len();
    let cands = [(i + 1, j), (0, i), (j + 1, n - 1)];
    for (l, r) in cands {
        if l < r && !(l == 0 && r == n - 1) && swap_gain(pts, l, r) > GAIN_MARGIN {
            apply(pts, ord, l, r);
            return Some((l, r));
        }
    }
    // degenerate contact: take the best strictly improving reversal anywhere
    let mut best = (GAIN_MARGIN, 0, 0);
    for l in 0..n {
        for r in l + 1..n {
            if l == 0 && r == n - 1 {
                continue;
            }
            let g = swap_gain(pts, l, r);
            if g > best.0 {
                best = (g, l, r);
            }
        }
    }
    if best.1 == best.2 {
        return None;
    }
    apply(pts, ord, best.1, best.2);
    Some((best.1, best.2))
}

fn checked_points(points: &[Point]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::invalid("empty point set"));
    }
    if let Some(p) = points.iter().find(|p| !p.in_bounds()) {
        return Err(Error::range(format!("point {p} out of bounds")));
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::invalid(format!("duplicate point {}", w[0])));
    }
    Ok(())
}

/// 2-opt uncrossing of an arbitrary spanning order: conflicts found by the
/// crossing sweep feed a work queue; each applied reversal changes two
/// edges, which are rechecked against the whole path.  Terminates because
/// every swap strictly shrinks the total length.
pub fn uncross(points: &[Point], order: &[u32]) -> Result<SpanningPath> {
    checked_points(points)?;
    let n = points.len();
    if order.len() != n || {
        let mut seen = vec![false; n];
        !order.iter().all(|&i| {
            (i as usize) < n && !std::mem::replace(&mut seen[i as usize], true)
        })
    } {
        return Err(Error::invalid("order is not a permutation of the points"));
    }
    let mut pts: Vec<Point> = order.iter().map(|&i| points[i as usize]).collect();
    let mut ord = order.to_vec();

    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut swaps = 0usize;
    let cap = 64 + 4 * n * n;
    loop {
        while let Some((i, j)) = queue.pop_front() {
            if i >= j || j + 1 >= n || !edges_conflict(&pts, i, j) {
                continue;
            }
            let Some((l, r)) = fix_pair(&mut pts, &mut ord, i, j) else {
                debug_assert!(false, "conflicting pair ({i}, {j}) admits no improving reversal");
                queue.clear();
                break;
            };
            swaps += 1;
            assert!(swaps <= cap, "2-opt failed to settle after {swaps} swaps");
            for e in [l.wrapping_sub(1), r] {
                if e >= n - 1 {
                    continue;
                }
                for f in 0..n - 1 {
                    if f != e && edges_conflict(&pts, e, f) {
                        queue.push_back((e.min(f), e.max(f)));
                    }
                }
            }
        }
        match path_crossing(&pts) {
            None => break,
            Some(p) => queue.push_back(p),
        }
    }
    Ok(SpanningPath { pts, order: ord, verified: true })
}

/// kd-order construction followed by uncrossing.
pub fn build_spanning_path(points: &[Point]) -> Result<SpanningPath> {
    checked_points(points)?;
    uncross(points, &kd_order(points))
}

/// Path edges crossed by the line.  An edge with one endpoint on the line
/// counts iff its other endpoint is strictly on the positive side; edges
/// along the line count zero — each geometric crossing counts once.
pub fn stabbing_count(path: &[Point], l: &Line) -> usize {
    use Ordering::*;
    path.windows(2)
        .filter(|w| {
            matches!(
                (l.side(w[0]), l.side(w[1])),
                (Greater, Less) | (Less, Greater) | (Equal, Greater) | (Greater, Equal)
            )
        })
        .count()
}

/// Median of the stabbing counts over a line sample.
pub fn median_stabbing(path: &[Point], lines: &[Line]) -> usize {
    let mut counts: Vec<usize> = lines.iter().map(|l| stabbing_count(path, l)).collect();
    counts.sort_unstable();
    counts[counts.len() / 2]
}
