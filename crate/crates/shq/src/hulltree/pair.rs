//! Two-hull queries: closed intersection detection and the four common
//! tangents of disjoint hulls.
//!
//! Tangent slots follow [`PairTangents`]: forbidden orientations per hull
//! relative to the directed line u→v, ties broken to the lex-least vertex
//! pair.  Hulls with rank-separated spans are geometrically separated in the
//! sheared plane, so their tangents come from one tandem chain walk each;
//! rank-overlapping spans fall back to alternating point tangents, validated
//! by extreme-point support tests with an exact scan as the safety net.

use super::merge::{chain_root, covering_at_absc, tandem_bridge};
use super::nav::{chain_pred_edge, chain_ranks, chain_succ_edge};
use super::ops::{classify_pt, extreme_core, tangents_core, PtClass};
use super::{Arena, CompactHull, Frame, HullTree, Nid, Node, Side};
use crate::geom::{HPoint, Kernel, PairResult, PairTangents, TangentResult};
use crate::{Error, Result};
use std::cmp::Ordering;

/// Is the (singleton-hull) point inside or on the other hull?
fn point_meets<K: Kernel>(f: &mut Frame<'_, K>, h: &CompactHull, r: u32) -> bool {
    if h.is_singleton() {
        return h.lo == r;
    }
    let q = f.pt(r);
    !matches!(classify_pt(f, h, q), PtClass::OutLeft | PtClass::OutRight | PtClass::Above(_) | PtClass::Below(_))
}

/// Chain edge usable for the slope just right of rank m (m < chain hi).
fn right_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, cov: Node, m: u32) -> Node {
    if cov.b == m {
        chain_succ_edge(f, root, m).expect("rank interior to the chain span")
    } else {
        cov
    }
}

/// Closed intersection of two chain edges, exact in every kernel.  Segments
/// are lex-increasing; the collinear cases reduce to canonical-order
/// betweenness, which is positional order along any common line.
fn edges_meet<K: Kernel>(e1: (&K::Pt, &K::Pt), e2: (&K::Pt, &K::Pt)) -> bool {
    let (a, b) = e1;
    let (c, d) = e2;
    let between = |p: &K::Pt, q: &K::Pt, r: &K::Pt| {
        K::cmp_xy(p, r) != Ordering::Greater && K::cmp_xy(r, q) != Ordering::Greater
    };
    let o1 = K::orient(a, b, c);
    let o2 = K::orient(a, b, d);
    let o3 = K::orient(c, d, a);
    let o4 = K::orient(c, d, b);
    if o1 == Ordering::Equal && between(a, b, c)
        || o2 == Ordering::Equal && between(a, b, d)
        || o3 == Ordering::Equal && between(c, d, a)
        || o4 == Ordering::Equal && between(c, d, b)
    {
        return true;
    }
    o1 == o2.reverse() && o1 != Ordering::Equal && o3 == o4.reverse() && o3 != Ordering::Equal
}

/// The chain edge covering the closed abscissa slab between consecutive ranks
/// ml and ml+1 (no vertex lies strictly between consecutive rank abscissas).
fn slab_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, hp: &HPoint, ml: u32) -> Node {
    let cov = covering_at_absc(f, root, hp).expect("abscissa inside span");
    right_edge(f, root, cov, ml)
}

/// Crossing strictly between the rank abscissas m−1 and m.  With no vertical
/// overlap at either rank the hulls can only meet where an upper edge of one
/// crosses the lower edge of the other, and the covering edges span the whole
/// slab.
fn slab_meets<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    m: u32,
) -> bool {
    let ml = m - 1;
    let hp = K::to_hpoint(f.pt(ml));
    let ua = slab_edge(f, ha.upper, &hp, ml);
    let la = slab_edge(f, ha.lower, &hp, ml);
    let ub = slab_edge(f, hb.upper, &hp, ml);
    let lb = slab_edge(f, hb.lower, &hp, ml);
    edges_meet::<K>((f.pt(ua.a), f.pt(ua.b)), (f.pt(lb.a), f.pt(lb.b)))
        || edges_meet::<K>((f.pt(ub.a), f.pt(ub.b)), (f.pt(la.a), f.pt(la.b)))
}

/// Closed intersection test.
///
/// Rank-separated spans are separated in sheared abscissa, hence disjoint.
/// Otherwise the vertical gap between the hulls is a convex piecewise-linear
/// function of the abscissa, so a binary search over the common rank window
/// walks toward its minimum; a probe seeing overlapping vertical extents is a
/// common point.  The max of the two one-sided gaps can still dip below zero
/// strictly between the final rank and its probed left neighbor, which is
/// exactly an edge crossing inside that slab.
pub(crate) fn detect_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
) -> bool {
    if ha.is_singleton() {
        return point_meets(f, hb, ha.lo);
    }
    if hb.is_singleton() {
        return point_meets(f, ha, hb.lo);
    }
    if ha.hi < hb.lo || hb.hi < ha.lo {
        return false;
    }
    let lo0 = ha.lo.max(hb.lo);
    let mut lo = lo0;
    let mut hi = ha.hi.min(hb.hi);
    loop {
        let m = lo + (hi - lo) / 2;
        let pm = f.pt(m);
        let hp = K::to_hpoint(pm);
        let ua = covering_at_absc(f, ha.upper, &hp).expect("abscissa inside span");
        let la = covering_at_absc(f, ha.lower, &hp).expect("abscissa inside span");
        let ub = covering_at_absc(f, hb.upper, &hp).expect("abscissa inside span");
        let lb = covering_at_absc(f, hb.lower, &hp).expect("abscissa inside span");
        let edge = |e: &Node| (f.pt(e.a), f.pt(e.b));
        let c1 = K::cmp_height_at(edge(&ua), edge(&lb), pm);
        let c2 = K::cmp_height_at(edge(&ub), edge(&la), pm);
        if c1 != Ordering::Less && c2 != Ordering::Less {
            return true; // vertical extents overlap at this abscissa
        }
        if lo == hi {
            // lo only advances past probes that failed, so when it moved the
            // slab (m−1, m) has tested ends and may hide the gap minimum
            return m > lo0 && slab_meets(f, ha, hb, m);
        }
        // one hull passes strictly above the other here; compare the slopes
        // just right of m to walk toward the gap minimum
        let (low_root, low_cov, high_root, high_cov) = if c1 == Ordering::Less {
            (hb.lower, lb, ha.upper, ua)
        } else {
            (ha.lower, la, hb.upper, ub)
        };
        let el = right_edge(f, low_root, low_cov, m);
        let eh = right_edge(f, high_root, high_cov, m);
        if K::cmp_edge_slopes((f.pt(el.a), f.pt(el.b)), (f.pt(eh.a), f.pt(eh.b)))
            == Ordering::Less
        {
            lo = m + 1; // gap still shrinking rightward
        } else {
            hi = m;
        }
    }
}

/// Chain holding the touch vertices for a hull-side condition: a hull weakly
/// left of the rightward directed tangent hangs above it, so the line
/// supports the lower chain, and symmetrically for weakly right.
fn side_chain(forbidden: Ordering) -> Side {
    if forbidden == Ordering::Less {
        Side::Lower
    } else {
        Side::Upper
    }
}

/// Lex-least vertex of h on the tangent line through pt(r) and other.  The
/// touch set of a support line on a strict hull is one vertex or one edge,
/// so checking the cycle neighbors of a known touch suffices.
fn canon_touch<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    r: u32,
    other: &K::Pt,
) -> u32 {
    let p = f.pt(r);
    let mut best = r;
    for root in [h.upper, h.lower] {
        if let Some(e) = chain_pred_edge(f, root, r) {
            if e.a < best && K::orient(other, p, f.pt(e.a)) == Ordering::Equal {
                best = e.a;
            }
        }
        if let Some(e) = chain_succ_edge(f, root, r) {
            if e.b < best && K::orient(other, p, f.pt(e.b)) == Ordering::Equal {
                best = e.b;
            }
        }
    }
    best
}

/// Do all vertices of h avoid the forbidden side of the directed line u→v?
fn supports<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    pu: &K::Pt,
    pv: &K::Pt,
    forbidden: Ordering,
) -> bool {
    let ln = K::left_normal(pu, pv);
    let d = if forbidden == Ordering::Less { K::dir_neg(&ln) } else { ln };
    let (w, _) = extreme_core(f, h, &d);
    K::orient(pu, pv, f.pt(w)) != forbidden
}

fn slot_validate<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    u: u32,
    v: u32,
    fa: Ordering,
    fb: Ordering,
) -> bool {
    let pu = f.pt(u);
    let pv = f.pt(v);
    supports(f, ha, pu, pv, fa) && supports(f, hb, pu, pv, fb)
}

fn canon_pair<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    u: u32,
    v: u32,
) -> (u32, u32) {
    let pu = f.pt(u);
    let pv = f.pt(v);
    (canon_touch(f, ha, u, pv), canon_touch(f, hb, v, pu))
}

/// Hull vertex ranks (cycle order not needed).
fn vertex_ranks<K: Kernel>(f: &mut Frame<'_, K>, h: &CompactHull) -> Vec<u32> {
    if h.is_singleton() {
        return vec![h.lo];
    }
    let mut vs = chain_ranks(f, h.lower, h.lo);
    vs.extend(chain_ranks(f, h.upper, h.lo));
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Exact slot by scanning all vertex pairs; correctness safety net only.
fn slot_scan<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    fa: Ordering,
    fb: Ordering,
) -> (u32, u32) {
    let av = vertex_ranks(f, ha);
    let bv = vertex_ranks(f, hb);
    let mut best: Option<(u32, u32)> = None;
    for &u in &av {
        for &v in &bv {
            if best.is_some_and(|b| b <= (u, v)) {
                continue; // rank order is lex point order
            }
            let pu = f.pt(u);
            let pv = f.pt(v);
            if av.iter().all(|&w| K::orient(pu, pv, f.pt(w)) != fa)
                && bv.iter().all(|&w| K::orient(pu, pv, f.pt(w)) != fb)
            {
                best = Some((u, v));
            }
        }
    }
    best.expect("disjoint hulls have all four common tangents")
}

/// Slot for rank-separated operands (hl entirely rank-left of hr), via one
/// tandem walk over the two side chains the tangent supports.
fn separated_slot<K: Kernel>(
    f: &mut Frame<'_, K>,
    hl: &CompactHull,
    hr: &CompactHull,
    fl: Ordering,
    fr: Ordering,
) -> (u32, u32) {
    let sl = side_chain(fl);
    let sr = side_chain(fr);
    let got = tandem_bridge(
        f,
        chain_root(hl, sl),
        hl.lo,
        hl.hi,
        sl,
        chain_root(hr, sr),
        hr.lo,
        hr.hi,
        sr,
        hl.hi,
        hl.lo,
        hr.hi,
    );
    if let Some((u, v)) = got {
        if slot_validate(f, hl, hr, u, v, fl, fr) {
            return canon_pair(f, hl, hr, u, v);
        }
    }
    slot_scan(f, hl, hr, fl, fr)
}

/// Tangent vertex of h from q satisfying the forbidden-side condition for
/// the second slot position (line directed toward the returned vertex).
fn tangent_toward<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    q: &K::Pt,
    forbidden: Ordering,
) -> Option<u32> {
    match tangents_core(f, h, q) {
        TangentResult::Tangents { left, right } => {
            Some(if forbidden == Ordering::Less { right } else { left })
        }
        _ => None,
    }
}

/// Tangent vertex of h from q for the first slot position (line directed
/// away from the returned vertex, so the forbidden side swaps).
fn tangent_from<K: Kernel>(
    f: &mut Frame<'_, K>,
    h: &CompactHull,
    q: &K::Pt,
    forbidden: Ordering,
) -> Option<u32> {
    match tangents_core(f, h, q) {
        TangentResult::Tangents { left, right } => {
            Some(if forbidden == Ordering::Less { left } else { right })
        }
        _ => None,
    }
}

/// Slot for rank-overlapping disjoint hulls: alternate tangents from the
/// current endpoints until stable (capped), validate, else scan exactly.
fn overlap_slot<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    fa: Ordering,
    fb: Ordering,
) -> (u32, u32) {
    let cap = 4 * f.nbits as usize + 16;
    let mut u = ha.lo;
    let Some(mut v) = tangent_toward(f, hb, f.pt(u), fb) else {
        return slot_scan(f, ha, hb, fa, fb);
    };
    for _ in 0..cap {
        let Some(nu) = tangent_from(f, ha, f.pt(v), fa) else {
            return slot_scan(f, ha, hb, fa, fb);
        };
        let Some(nv) = tangent_toward(f, hb, f.pt(nu), fb) else {
            return slot_scan(f, ha, hb, fa, fb);
        };
        if nu == u && nv == v {
            break;
        }
        u = nu;
        v = nv;
    }
    if slot_validate(f, ha, hb, u, v, fa, fb) {
        canon_pair(f, ha, hb, u, v)
    } else {
        slot_scan(f, ha, hb, fa, fb)
    }
}

/// One tangent slot of geometrically disjoint hulls.
fn compute_slot<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    fa: Ordering,
    fb: Ordering,
) -> (u32, u32) {
    if ha.is_singleton() && hb.is_singleton() {
        return (ha.lo, hb.lo);
    }
    if ha.is_singleton() {
        let q = f.pt(ha.lo);
        let v = tangent_toward(f, hb, q, fb).expect("point strictly outside disjoint hull");
        return (ha.lo, canon_touch(f, hb, v, q));
    }
    if hb.is_singleton() {
        let q = f.pt(hb.lo);
        let u = tangent_from(f, ha, q, fa).expect("point strictly outside disjoint hull");
        return (canon_touch(f, ha, u, q), hb.lo);
    }
    if ha.hi < hb.lo {
        separated_slot(f, ha, hb, fa, fb)
    } else if hb.hi < ha.lo {
        // swapped operands: same slot with the direction (and sides) reversed
        let (v, u) = separated_slot(f, hb, ha, fb.reverse(), fa.reverse());
        (u, v)
    } else {
        overlap_slot(f, ha, hb, fa, fb)
    }
}

pub(crate) fn pair_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
) -> Option<PairTangents<u32>> {
    if detect_core(f, ha, hb) {
        return None;
    }
    use Ordering::{Greater, Less};
    Some(PairTangents {
        outer_left: compute_slot(f, ha, hb, Less, Less),
        outer_right: compute_slot(f, ha, hb, Greater, Greater),
        inner_lr: compute_slot(f, ha, hb, Less, Greater),
        inner_rl: compute_slot(f, ha, hb, Greater, Less),
    })
}

impl<K: Kernel> HullTree<K> {
    /// Do the two hulls intersect as closed convex regions?
    pub fn hulls_intersect(
        &self,
        arena: &mut Arena,
        h1: &CompactHull,
        h2: &CompactHull,
    ) -> Result<bool> {
        self.check_handle(h1, arena.epoch)?;
        self.check_handle(h2, arena.epoch)?;
        if h1.is_empty() || h2.is_empty() {
            return Err(Error::invalid("hulls_intersect on empty hull"));
        }
        let mut f = Frame::for_query(self, arena);
        let hit = detect_core(&mut f, h1, h2);
        f.finish(None);
        Ok(hit)
    }

    /// Closed intersection test plus, for disjoint hulls, the four common
    /// tangents as vertex pairs (see [`PairTangents`]).  Hulls touching in a
    /// single point count as intersecting.
    pub fn hull_pair_tangents(
        &self,
        arena: &mut Arena,
        h1: &CompactHull,
        h2: &CompactHull,
    ) -> Result<PairResult<K::Pt>> {
        self.check_handle(h1, arena.epoch)?;
        self.check_handle(h2, arena.epoch)?;
        if h1.is_empty() || h2.is_empty() {
            return Err(Error::invalid("hull_pair_tangents on empty hull"));
        }
        let mut f = Frame::for_query(self, arena);
        let out = match pair_core(&mut f, h1, h2) {
            None => PairResult::Intersecting,
            Some(t) => {
                let p = |(u, v): (u32, u32)| (f.pt(u).clone(), f.pt(v).clone());
                PairResult::Disjoint(PairTangents {
                    outer_left: p(t.outer_left),
                    outer_right: p(t.outer_right),
                    inner_lr: p(t.inner_lr),
                    inner_rl: p(t.inner_rl),
                })
            }
        };
        f.finish(None);
        Ok(out)
    }
}
