//! Brute-force reference implementations.
//!
//! Everything here is written for obviousness, shares only the geometric
//! predicates with the fast structures, and is used to validate them in tests
//! and in the CLI `check` command.

use crate::geom::{
    hull::HullChains, rat::meet_lines, ChordResult, Kernel, PairResult, PairTangents, TangentResult,
};
use std::cmp::Ordering;

/// Convex hull by sort + monotone chain (independent of the deque sweep).
pub fn hull<K: Kernel>(pts: &[K::Pt]) -> HullChains<K> {
    assert!(!pts.is_empty());
    let mut s: Vec<K::Pt> = pts.to_vec();
    s.sort_by(|p, q| K::cmp_xy(p, q));
    s.dedup();
    let build = |keep: Ordering| -> Vec<K::Pt> {
        let mut ch: Vec<K::Pt> = Vec::new();
        for p in &s {
            while ch.len() >= 2 && K::orient(&ch[ch.len() - 2], &ch[ch.len() - 1], p) != keep {
                ch.pop();
            }
            ch.push(p.clone());
        }
        ch
    };
    // upper chain turns strictly clockwise, lower strictly counterclockwise
    HullChains { upper: build(Ordering::Less), lower: build(Ordering::Greater) }
}

/// Position of a point relative to a hull given as a CCW cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Inside,
    Boundary,
    Outside,
}

pub fn locate<K: Kernel>(cycle: &[K::Pt], p: &K::Pt) -> Place {
    match cycle.len() {
        0 => panic!("empty hull"),
        1 => {
            if cycle[0] == *p {
                Place::Boundary
            } else {
                Place::Outside
            }
        }
        2 => {
            if on_hull_segment::<K>(&cycle[0], &cycle[1], p) {
                Place::Boundary
            } else {
                Place::Outside
            }
        }
        n => {
            let mut on_edge = false;
            for i in 0..n {
                match K::orient(&cycle[i], &cycle[(i + 1) % n], p) {
                    Ordering::Less => return Place::Outside,
                    Ordering::Equal => on_edge = true,
                    Ordering::Greater => {}
                }
            }
            if on_edge {
                Place::Boundary
            } else {
                Place::Inside
            }
        }
    }
}

/// Collinear between-test; for collinear points the lex order runs along the
/// line, so the bound check is lexicographic.
fn on_hull_segment<K: Kernel>(a: &K::Pt, b: &K::Pt, p: &K::Pt) -> bool {
    if K::orient(a, b, p) != Ordering::Equal {
        return false;
    }
    let (lo, hi) = if K::cmp_xy(a, b) == Ordering::Greater { (b, a) } else { (a, b) };
    K::cmp_xy(lo, p) != Ordering::Greater && K::cmp_xy(p, hi) != Ordering::Greater
}

/// Extreme point in direction d: maximizes d·p, lex-min among maximizers.
pub fn extreme<K: Kernel>(pts: &[K::Pt], d: &K::Dir) -> K::Pt {
    assert!(!pts.is_empty());
    let mut best = &pts[0];
    for p in &pts[1..] {
        match K::cmp_along(d, p, best) {
            Ordering::Greater => best = p,
            Ordering::Equal => {
                if K::cmp_xy(p, best) == Ordering::Less {
                    best = p;
                }
            }
            Ordering::Less => {}
        }
    }
    best.clone()
}

/// Tangent vertices from q (see `TangentResult` for the contract).
pub fn tangents<K: Kernel>(cycle: &[K::Pt], q: &K::Pt) -> TangentResult<K::Pt> {
    match locate::<K>(cycle, q) {
        Place::Inside => return TangentResult::Inside,
        Place::Boundary => return TangentResult::OnBoundary,
        Place::Outside => {}
    }
    let vs: Vec<&K::Pt> = cycle.iter().collect();
    let qualify = |v: &K::Pt, forbidden: Ordering| -> bool {
        vs.iter().all(|w| K::orient(q, v, w) != forbidden)
    };
    // right tangent: no vertex strictly right of ray q→v
    let right: Vec<&K::Pt> = vs.iter().copied().filter(|v| qualify(v, Ordering::Less)).collect();
    let left: Vec<&K::Pt> = vs.iter().copied().filter(|v| qualify(v, Ordering::Greater)).collect();
    TangentResult::Tangents {
        left: pick_farthest::<K>(q, left),
        right: pick_farthest::<K>(q, right),
    }
}

/// All candidates are collinear with q on a common ray; return the farthest.
fn pick_farthest<K: Kernel>(q: &K::Pt, cands: Vec<&K::Pt>) -> K::Pt {
    let mut best = cands[0];
    for v in &cands[1..] {
        // farther along the ray ⟺ lex-farther from q in the ray direction
        let toward_hi = K::cmp_xy(best, q);
        let c = K::cmp_xy(v, best);
        let farther = match toward_hi {
            Ordering::Greater => c == Ordering::Greater,
            Ordering::Less => c == Ordering::Less,
            Ordering::Equal => K::cmp_xy(v, q) != Ordering::Equal,
        };
        if farther {
            best = v;
        }
    }
    best.clone()
}

/// Hull ∩ line as a lex-ordered chord, or the miss side.
pub fn intersect_line<K: Kernel>(cycle: &[K::Pt], l: &K::Li) -> ChordResult {
    let hl = K::li_to_hline(l);
    let mut hits: Vec<crate::geom::HPoint> = Vec::new();
    let n = cycle.len();
    for i in 0..n {
        let v = &cycle[i];
        if K::side(l, v) == Ordering::Equal {
            hits.push(K::to_hpoint(v));
        }
        if n >= 2 {
            let w = &cycle[(i + 1) % n];
            if i + 1 == n && n == 2 {
                break; // a segment hull has one edge, not two
            }
            let sv = K::side(l, v);
            let sw = K::side(l, w);
            if sv != Ordering::Equal && sw != Ordering::Equal && sv != sw {
                let el = K::line_through(v, w);
                let x = meet_lines(&hl, &K::li_to_hline(&el)).expect("crossing edge not parallel");
                hits.push(x);
            }
        }
    }
    hits.sort();
    hits.dedup();
    match (hits.first(), hits.last()) {
        (Some(a), Some(b)) => ChordResult::Chord { a: a.clone(), b: b.clone() },
        _ => ChordResult::Miss { side: K::side(l, &cycle[0]) },
    }
}

/// Closed intersection test plus the four common tangents for disjoint hulls.
pub fn hull_pair<K: Kernel>(ca: &[K::Pt], cb: &[K::Pt]) -> PairResult<K::Pt> {
    if hulls_meet::<K>(ca, cb) {
        return PairResult::Intersecting;
    }
    // forbidden orientation per hull relative to the directed candidate u→v
    let tangent = |fa: Ordering, fb: Ordering| -> (K::Pt, K::Pt) {
        let mut best: Option<(K::Pt, K::Pt)> = None;
        for u in ca {
            for v in cb {
                let ok_a = ca.iter().all(|w| K::orient(u, v, w) != fa);
                let ok_b = cb.iter().all(|w| K::orient(u, v, w) != fb);
                if ok_a && ok_b {
                    let cand = (u.clone(), v.clone());
                    let better = match &best {
                        None => true,
                        Some(b) => match K::cmp_xy(&cand.0, &b.0) {
                            Ordering::Less => true,
                            Ordering::Equal => K::cmp_xy(&cand.1, &b.1) == Ordering::Less,
                            Ordering::Greater => false,
                        },
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
        }
        best.expect("disjoint hulls have all four tangents")
    };
    PairResult::Disjoint(PairTangents {
        outer_left: tangent(Ordering::Less, Ordering::Less),
        outer_right: tangent(Ordering::Greater, Ordering::Greater),
        inner_lr: tangent(Ordering::Less, Ordering::Greater),
        inner_rl: tangent(Ordering::Greater, Ordering::Less),
    })
}

/// Closed intersection of two hulls given as CCW cycles.
pub fn hulls_meet<K: Kernel>(ca: &[K::Pt], cb: &[K::Pt]) -> bool {
    if ca.iter().any(|p| locate::<K>(cb, p) != Place::Outside)
        || cb.iter().any(|p| locate::<K>(ca, p) != Place::Outside)
    {
        return true;
    }
    let edges = |c: &[K::Pt]| -> Vec<(K::Pt, K::Pt)> {
        match c.len() {
            0 | 1 => vec![],
            2 => vec![(c[0].clone(), c[1].clone())],
            n => (0..n).map(|i| (c[i].clone(), c[(i + 1) % n].clone())).collect(),
        }
    };
    for (a0, a1) in edges(ca) {
        for (b0, b1) in edges(cb) {
            if segs_meet::<K>((&a0, &a1), (&b0, &b1)) {
                return true;
            }
        }
    }
    false
}

/// Closed segment intersection via orientations (generic over the kernel).
pub fn segs_meet<K: Kernel>(s: (&K::Pt, &K::Pt), t: (&K::Pt, &K::Pt)) -> bool {
    let d1 = K::orient(t.0, t.1, s.0);
    let d2 = K::orient(t.0, t.1, s.1);
    let d3 = K::orient(s.0, s.1, t.0);
    let d4 = K::orient(s.0, s.1, t.1);
    use Ordering::*;
    if ((d1 == Greater && d2 == Less) || (d1 == Less && d2 == Greater))
        && ((d3 == Greater && d4 == Less) || (d3 == Less && d4 == Greater))
    {
        return true;
    }
    (d1 == Equal && on_hull_segment::<K>(t.0, t.1, s.0))
        || (d2 == Equal && on_hull_segment::<K>(t.0, t.1, s.1))
        || (d3 == Equal && on_hull_segment::<K>(s.0, s.1, t.0))
        || (d4 == Equal && on_hull_segment::<K>(s.0, s.1, t.1))
}
