//! Deterministic (seeded) generators for points, paths, lines and segments.
//! Used by the CLI `gen` command and throughout the tests.

use crate::geom::{pt, segments_intersect, Line, Point, Segment};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::HashSet;

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n distinct points with coordinates in [-range, range].
pub fn random_points(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Point> {
    assert!(range > 0 && (2 * range + 1).pow(2) as usize >= 2 * n, "range too small for n distinct points");
    let mut seen = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        if seen.insert(p) {
            out.push(p);
        }
    }
    out
}

/// Simple path that is monotone in the canonical x-order.
pub fn monotone_path(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Point> {
    let mut pts = random_points(rng, n, range);
    pts.sort();
    pts
}

/// Simple path visiting points in angular order around the lex-min point.
/// Not x-monotone, so it exercises genuinely path-shaped inputs.
pub fn star_path(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Point> {
    let mut pts = random_points(rng, n, range);
    let c = *pts.iter().min().unwrap();
    pts.retain(|&p| p != c);
    // all remaining points are lex-greater than c: they lie in the half-plane
    // right of vertical-through-c (or straight up), so ccw order around c is a
    // total order given by orientation, with distance breaking collinear ties
    pts.sort_by(|&a, &b| match crate::geom::orient(c, a, b) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => dist2(c, a).cmp(&dist2(c, b)),
    });
    let mut path = vec![c];
    path.extend(pts);
    path
}

fn dist2(a: Point, b: Point) -> i128 {
    let dx = (b.x - a.x) as i128;
    let dy = (b.y - a.y) as i128;
    dx * dx + dy * dy
}

/// n distinct lines a·x + b·y = c through pairs of random points (plus some
/// axis-parallel ones for degeneracy coverage).
pub fn random_lines(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Line> {
    let mut seen = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let l = if out.len() % 7 == 3 {
            // axis-parallel / small-coefficient degenerate cases
            if rng.gen_bool(0.5) {
                Line::new(0, 1, rng.gen_range(-range..=range)).unwrap()
            } else {
                Line::new(1, 0, rng.gen_range(-range..=range)).unwrap()
            }
        } else {
            let p = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
            let q = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
            if p == q {
                continue;
            }
            Line::through(p, q)
        };
        if seen.insert(l) {
            out.push(l);
        }
    }
    out
}

/// n segments with distinct endpoints, intersections allowed.
pub fn random_segments(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Segment> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        let q = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        if p != q {
            out.push(Segment::new(p, q).unwrap());
        }
    }
    out
}

/// n pairwise nonintersecting segments, built by rejection against a uniform
/// grid of the segments accepted so far.
pub fn disjoint_segments(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::with_capacity(n);
    // grid resolution capped so the grid itself stays small
    let target = (n as i64).clamp(1, 256);
    let cell = (2 * range / target + 1).max(1);
    let ncells = (2 * range / cell + 2) as usize;
    let mut grid: Vec<Vec<u32>> = vec![Vec::new(); ncells * ncells];
    let cell_of = |p: Point| -> (usize, usize) {
        (((p.x + range) / cell) as usize, ((p.y + range) / cell) as usize)
    };
    let mut tries = 0u64;
    while out.len() < n {
        tries += 1;
        assert!(tries < 10_000_000, "rejection sampling stalled");
        let p = pt(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        let len = cell.max(2);
        let q = pt(
            (p.x + rng.gen_range(-len..=len)).clamp(-range, range),
            (p.y + rng.gen_range(-len..=len)).clamp(-range, range),
        );
        if p == q {
            continue;
        }
        let s = Segment::new(p, q).unwrap();
        // candidate cells: bounding box of s padded by one cell
        let (cx0, cy0) = cell_of(pt(p.x.min(q.x), p.y.min(q.y)));
        let (cx1, cy1) = cell_of(pt(p.x.max(q.x), p.y.max(q.y)));
        let mut ok = true;
        'scan: for cx in cx0.saturating_sub(1)..=(cx1 + 1).min(ncells - 1) {
            for cy in cy0.saturating_sub(1)..=(cy1 + 1).min(ncells - 1) {
                for &i in &grid[cx * ncells + cy] {
                    if segments_intersect(s, out[i as usize]) {
                        ok = false;
                        break 'scan;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let idx = out.len() as u32;
        out.push(s);
        for cx in cx0..=cx1.min(ncells - 1) {
            for cy in cy0..=cy1.min(ncells - 1) {
                grid[cx * ncells + cy].push(idx);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_points(&mut rng_from(7), 50, 1000);
        let b = random_points(&mut rng_from(7), 50, 1000);
        assert_eq!(a, b);
    }

    #[test]
    fn star_paths_are_simple() {
        for seed in 0..20 {
            let path = star_path(&mut rng_from(seed), 30, 50);
            assert_eq!(path.len(), 30);
            // brute simplicity check
            for i in 1..path.len() {
                for j in i + 2..path.len() {
                    let s = Segment::new(path[i - 1], path[i]).unwrap();
                    let t = Segment::new(path[j - 1], path[j]).unwrap();
                    assert!(
                        !segments_intersect(s, t),
                        "seed {seed}: edges {}-{} and {}-{} intersect",
                        i - 1,
                        i,
                        j - 1,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn disjoint_segments_are_disjoint() {
        let segs = disjoint_segments(&mut rng_from(3), 100, 10_000);
        assert_eq!(segs.len(), 100);
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                assert!(!segments_intersect(segs[i], segs[j]));
            }
        }
    }
}
