//! Point, direction, and line queries against compact hull handles.
//!
//! Every query is a constant number of root-to-leaf descents over the chain
//! trees, so the visit counters stay within a fixed multiple of log2(n).

use super::nav::{chain_pred_edge, chain_succ_edge};
use super::{Arena, CompactHull, Frame, HullTree, Nid, Node, Side, NONE_RANK};
use crate::geom::rat::{cmp_xy_h, meet_lines, HPoint};
use crate::geom::{ChordResult, Kernel, TangentResult};
use crate::{Error, Result};
use std::cmp::Ordering;

/// Extreme vertex of one chain: maximizes d·v, lex-min on a flat edge.
///
/// d·v must be unimodal along the chain (true for the chain's own outward
/// directions); the descent keeps the maximizer inside the live subtree.
pub(crate) fn chain_extreme<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, d: &K::Dir) -> u32 {
    let mut cur = root;
    let mut best = NONE_RANK;
    while !cur.is_none() {
        let nd = f.get(cur);
        match K::cmp_along(d, f.pt(nd.b), f.pt(nd.a)) {
            Ordering::Greater => {
                best = nd.b;
                cur = nd.right;
            }
            Ordering::Less => {
                best = nd.a;
                cur = nd.left;
            }
            Ordering::Equal => return nd.a,
        }
    }
    debug_assert_ne!(best, NONE_RANK);
    best
}

/// Tangent flavors: `Peak` finds t with the chain weakly right of ray q→t,
/// `Valley` weakly left.  Valid only for q lex-outside the chain's span,
/// where the edge orientation signs are monotone along the chain.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flavor {
    Peak,
    Valley,
}

pub(crate) fn chain_tangent<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    q: &K::Pt,
    flavor: Flavor,
) -> u32 {
    let mut cur = root;
    let mut best = NONE_RANK;
    while !cur.is_none() {
        let nd = f.get(cur);
        let s = K::orient(q, f.pt(nd.a), f.pt(nd.b));
        let s = if flavor == Flavor::Valley { s.reverse() } else { s };
        match s {
            Ordering::Greater => {
                best = nd.b;
                cur = nd.right;
            }
            Ordering::Less => {
                best = nd.a;
                cur = nd.left;
            }
            // collinear grazing edge: take the endpoint farther from q
            Ordering::Equal => {
                return if K::cmp_xy(f.pt(nd.a), q) == Ordering::Greater { nd.b } else { nd.a };
            }
        }
    }
    debug_assert_ne!(best, NONE_RANK);
    best
}

/// Tangents from a point lex-inside the hull's span, strictly outside the
/// chain (above the upper chain or below the lower one).  The edge signs
/// along the chain form three runs; the covering edge (always in the middle
/// run) tells leading from trailing.  `tl` picks the right end of the middle
/// run, `tr` the left end; on a grazing edge the contract's farthest rule is
/// exactly the middle-run endpoint, so grazing edges join the middle run.
fn mid_tangents<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    q: &K::Pt,
    cov: &Node,
    outward: Ordering,
) -> (u32, u32) {
    let run = |f: &mut Frame<'_, K>, want_right: bool| -> u32 {
        let mut cur = root;
        let mut best = NONE_RANK;
        while !cur.is_none() {
            let nd = f.get(cur);
            let s = K::orient(f.pt(nd.a), f.pt(nd.b), q);
            if s != outward {
                // middle run (grazing edges included)
                if want_right {
                    best = nd.b;
                    cur = nd.right;
                } else {
                    best = nd.a;
                    cur = nd.left;
                }
            } else if nd.b <= cov.a {
                cur = nd.right; // leading outer run: middle run is to the right
            } else {
                debug_assert!(nd.a >= cov.b);
                cur = nd.left;
            }
        }
        debug_assert_ne!(best, NONE_RANK);
        best
    };
    (run(f, true), run(f, false))
}

/// Chain edge whose lex span covers q (precondition: lo ≤ q ≤ hi lex).
pub(crate) fn covering_edge_at<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, q: &K::Pt) -> Node {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        if K::cmp_xy(q, f.pt(nd.a)) == Ordering::Less {
            cur = nd.left;
        } else if K::cmp_xy(q, f.pt(nd.b)) == Ordering::Greater {
            cur = nd.right;
        } else {
            return nd;
        }
    }
    unreachable!("chain spans its whole lex range");
}

/// Position of a query point relative to a hull, with the covering edge kept
/// for the strictly-above/below cases.
pub(crate) enum PtClass {
    OutLeft,
    OutRight,
    OnBoundary,
    Above(Node),
    Below(Node),
    Inside,
}

pub(crate) fn classify_pt<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    q: &K::Pt,
) -> PtClass {
    match K::cmp_xy(q, f.pt(h.lo)) {
        Ordering::Less => return PtClass::OutLeft,
        Ordering::Equal => return PtClass::OnBoundary,
        Ordering::Greater => {}
    }
    match K::cmp_xy(q, f.pt(h.hi)) {
        Ordering::Greater => return PtClass::OutRight,
        Ordering::Equal => return PtClass::OnBoundary,
        Ordering::Less => {}
    }
    let cov_u = covering_edge_at(f, h.upper, q);
    match K::orient(f.pt(cov_u.a), f.pt(cov_u.b), q) {
        Ordering::Greater => return PtClass::Above(cov_u),
        Ordering::Equal => return PtClass::OnBoundary,
        Ordering::Less => {}
    }
    let cov_l = covering_edge_at(f, h.lower, q);
    match K::orient(f.pt(cov_l.a), f.pt(cov_l.b), q) {
        Ordering::Less => PtClass::Below(cov_l),
        Ordering::Equal => PtClass::OnBoundary,
        Ordering::Greater => PtClass::Inside,
    }
}

pub(crate) fn tangents_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    q: &K::Pt,
) -> TangentResult<u32> {
    if h.is_singleton() {
        return if K::cmp_xy(q, f.pt(h.lo)) == Ordering::Equal {
            TangentResult::OnBoundary
        } else {
            TangentResult::Tangents { left: h.lo, right: h.lo }
        };
    }
    let t = |l, r| TangentResult::Tangents { left: l, right: r };
    match classify_pt(f, h, q) {
        PtClass::OutLeft => {
            let l = chain_tangent(f, h.upper, q, Flavor::Peak);
            let r = chain_tangent(f, h.lower, q, Flavor::Valley);
            t(l, r)
        }
        PtClass::OutRight => {
            let l = chain_tangent(f, h.lower, q, Flavor::Peak);
            let r = chain_tangent(f, h.upper, q, Flavor::Valley);
            t(l, r)
        }
        PtClass::Above(cov) => {
            let (l, r) = mid_tangents(f, h.upper, q, &cov, Ordering::Less);
            t(l, r)
        }
        PtClass::Below(cov) => {
            // mirror of Above: the rank-rightmost middle-run end is the
            // right tangent here, not the left one
            let (r, l) = mid_tangents(f, h.lower, q, &cov, Ordering::Greater);
            t(l, r)
        }
        PtClass::OnBoundary => TangentResult::OnBoundary,
        PtClass::Inside => TangentResult::Inside,
    }
}

/// Extreme vertex of the hull in direction d, tagged with a chain it lies on
/// (the tag is a valid cycle position even when the vertex is lo or hi).
pub(crate) fn extreme_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    d: &K::Dir,
) -> (u32, Side) {
    if h.is_singleton() {
        return (h.lo, Side::Lower);
    }
    let (dx, dy) = K::dir_signs(d);
    match dy {
        Ordering::Greater => (chain_extreme(f, h.upper, d), Side::Upper),
        Ordering::Less => (chain_extreme(f, h.lower, d), Side::Lower),
        Ordering::Equal => match dx {
            // rightmost point; a vertical last edge makes its bottom the
            // lex-min maximizer of x
            Ordering::Greater => {
                let mut cur = h.lower;
                let mut last = None;
                while !cur.is_none() {
                    let nd = f.get(cur);
                    last = Some(nd);
                    cur = nd.right;
                }
                let e = last.expect("non-singleton chain");
                if K::cmp_along(d, f.pt(e.a), f.pt(e.b)) == Ordering::Equal {
                    (e.a, Side::Lower)
                } else {
                    (h.hi, Side::Lower)
                }
            }
            Ordering::Less => (h.lo, Side::Lower),
            Ordering::Equal => unreachable!("zero direction rejected by caller"),
        },
    }
}

/// Cycle neighbors of a hull vertex with side() == Equal on l, for reporting
/// a supporting face.  Strict hulls keep faces to at most one edge.
fn face_chord<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    l: &K::Li,
    r: u32,
) -> ChordResult {
    let mut face: Vec<u32> = vec![r];
    for root in [h.upper, h.lower] {
        if let Some(e) = chain_pred_edge(f, root, r) {
            face.push(e.a);
        }
        if let Some(e) = chain_succ_edge(f, root, r) {
            face.push(e.b);
        }
    }
    face.sort_unstable();
    face.dedup();
    face.retain(|&v| K::side(l, f.pt(v)) == Ordering::Equal);
    let lo = face.iter().copied().min_by(|&a, &b| K::cmp_xy(f.pt(a), f.pt(b))).unwrap();
    let hi = face.iter().copied().max_by(|&a, &b| K::cmp_xy(f.pt(a), f.pt(b))).unwrap();
    ChordResult::Chord { a: K::to_hpoint(f.pt(lo)), b: K::to_hpoint(f.pt(hi)) }
}

/// CCW arc pieces from one cycle position to another.  Positions are
/// (chain, rank); the cycle runs lo→hi along the lower chain and hi→lo along
/// the upper one.  At most three pieces, zero-length ones dropped.
fn arc_pieces(
    lo: u32,
    hi: u32,
    from: (Side, u32),
    to: (Side, u32),
) -> Vec<(Side, u32, u32)> {
    let mut out = Vec::with_capacity(3);
    let (l, u) = (Side::Lower, Side::Upper);
    match (from.0, to.0) {
        (Side::Lower, Side::Lower) => {
            if from.1 <= to.1 {
                out.push((l, from.1, to.1));
            } else {
                out.push((l, from.1, hi));
                out.push((u, hi, lo));
                out.push((l, lo, to.1));
            }
        }
        (Side::Lower, Side::Upper) => {
            out.push((l, from.1, hi));
            out.push((u, hi, to.1));
        }
        (Side::Upper, Side::Upper) => {
            if from.1 >= to.1 {
                out.push((u, from.1, to.1));
            } else {
                out.push((u, from.1, lo));
                out.push((l, lo, hi));
                out.push((u, hi, to.1));
            }
        }
        (Side::Upper, Side::Lower) => {
            out.push((u, from.1, lo));
            out.push((l, lo, to.1));
        }
    }
    out.retain(|p| p.1 != p.2);
    out
}

/// Exact crossing point of l with the chain edge (a, b).
fn edge_cross<K: Kernel>(f: &mut Frame<'_, K>, l: &K::Li, a: u32, b: u32) -> HPoint {
    let el = K::line_through(f.pt(a), f.pt(b));
    meet_lines(&K::li_to_hline(l), &K::li_to_hline(&el)).expect("crossing edge not parallel")
}

/// The single point where the arc's side of l stops being `from`.  The side
/// values are monotone along the arc between the two extremes of l's normal.
fn arc_hit<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    l: &K::Li,
    from: (Side, u32),
    to: (Side, u32),
    from_sign: Ordering,
) -> HPoint {
    for (side, r1, r2) in arc_pieces(h.lo, h.hi, from, to) {
        let s1 = K::side(l, f.pt(r1));
        let s2 = K::side(l, f.pt(r2));
        if s1 != from_sign || s2 == from_sign {
            continue;
        }
        let (root, wlo, whi) = match side {
            Side::Lower => (h.lower, r1, r2),
            Side::Upper => (h.upper, r2, r1),
        };
        let mut cur = root;
        while !cur.is_none() {
            let nd = f.get(cur);
            if nd.b > whi {
                cur = nd.left;
                continue;
            }
            if nd.a < wlo {
                cur = nd.right;
                continue;
            }
            match side {
                Side::Lower => {
                    // transition edge: side(a) == from, side(b) != from
                    if K::side(l, f.pt(nd.b)) == from_sign {
                        cur = nd.right;
                    } else if K::side(l, f.pt(nd.a)) != from_sign {
                        cur = nd.left;
                    } else if K::side(l, f.pt(nd.b)) == Ordering::Equal {
                        return K::to_hpoint(f.pt(nd.b));
                    } else {
                        return edge_cross(f, l, nd.a, nd.b);
                    }
                }
                Side::Upper => {
                    // arc runs right-to-left: side(b) == from, side(a) != from
                    if K::side(l, f.pt(nd.a)) == from_sign {
                        cur = nd.left;
                    } else if K::side(l, f.pt(nd.b)) != from_sign {
                        cur = nd.right;
                    } else if K::side(l, f.pt(nd.a)) == Ordering::Equal {
                        return K::to_hpoint(f.pt(nd.a));
                    } else {
                        return edge_cross(f, l, nd.a, nd.b);
                    }
                }
            }
        }
        unreachable!("transition edge lies inside the piece window");
    }
    unreachable!("one piece contains the side transition");
}

pub(crate) fn intersect_line_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    l: &K::Li,
) -> ChordResult {
    if h.is_singleton() {
        let p = f.pt(h.lo);
        return match K::side(l, p) {
            Ordering::Equal => {
                let hp = K::to_hpoint(p);
                ChordResult::Chord { a: hp.clone(), b: hp }
            }
            side => ChordResult::Miss { side },
        };
    }
    let d = K::li_normal(l);
    let pmax = extreme_core(f, h, &d);
    let smax = K::side(l, f.pt(pmax.0));
    if smax == Ordering::Less {
        return ChordResult::Miss { side: Ordering::Less };
    }
    let neg = K::dir_neg(&d);
    let pmin = extreme_core(f, h, &neg);
    let smin = K::side(l, f.pt(pmin.0));
    if smin == Ordering::Greater {
        return ChordResult::Miss { side: Ordering::Greater };
    }
    if smax == Ordering::Equal {
        return face_chord(f, h, l, pmax.0);
    }
    if smin == Ordering::Equal {
        return face_chord(f, h, l, pmin.0);
    }
    // proper crossing: one hit on each arc between the two extremes
    let from = (pmin.1, pmin.0);
    let to = (pmax.1, pmax.0);
    let h1 = arc_hit(f, h, l, from, to, Ordering::Less);
    let h2 = arc_hit(f, h, l, to, from, Ordering::Greater);
    let (a, b) = if cmp_xy_h(&h1, &h2) == Ordering::Greater { (h2, h1) } else { (h1, h2) };
    ChordResult::Chord { a, b }
}

impl<K: Kernel> HullTree<K> {
    /// Vertex maximizing d·p over the hull, lex-min among maximizers.
    pub fn extreme_point(&self, arena: &mut Arena, h: &CompactHull, d: &K::Dir) -> Result<K::Pt> {
        self.check_handle(h, arena.epoch())?;
        if h.is_empty() {
            return Err(Error::invalid("extreme_point on empty hull"));
        }
        if K::dir_signs(d) == (Ordering::Equal, Ordering::Equal) {
            return Err(Error::invalid("extreme_point with zero direction"));
        }
        let mut f = Frame::for_query(self, arena);
        let (r, _) = extreme_core(&mut f, h, d);
        let p = f.pt(r).clone();
        f.finish(None);
        Ok(p)
    }

    /// Tangent vertices from q; see `TangentResult` for the contract.
    pub fn tangents_from_point(
        &self,
        arena: &mut Arena,
        h: &CompactHull,
        q: &K::Pt,
    ) -> Result<TangentResult<K::Pt>> {
        self.check_handle(h, arena.epoch())?;
        if h.is_empty() {
            return Err(Error::invalid("tangents_from_point on empty hull"));
        }
        let mut f = Frame::for_query(self, arena);
        let res = tangents_core(&mut f, h, q);
        let res = match res {
            TangentResult::Tangents { left, right } => TangentResult::Tangents {
                left: f.pt(left).clone(),
                right: f.pt(right).clone(),
            },
            TangentResult::Inside => TangentResult::Inside,
            TangentResult::OnBoundary => TangentResult::OnBoundary,
        };
        f.finish(None);
        Ok(res)
    }

    /// Hull ∩ line as a lex-ordered chord (exact rational endpoints), or the
    /// side of l the hull misses on.
    pub fn intersect_line(
        &self,
        arena: &mut Arena,
        h: &CompactHull,
        l: &K::Li,
    ) -> Result<ChordResult> {
        self.check_handle(h, arena.epoch())?;
        if h.is_empty() {
            return Err(Error::invalid("intersect_line on empty hull"));
        }
        let mut f = Frame::for_query(self, arena);
        let res = intersect_line_core(&mut f, h, l);
        f.finish(None);
        Ok(res)
    }
}
