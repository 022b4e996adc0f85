//! Persistent hull merging.
//!
//! The union hull of two vertex-disjoint hulls is assembled from shared
//! subtrees of the inputs plus O(log n) fresh spine nodes, provided the
//! union has at most two bridge edges per side — always true when the
//! inputs' vertex sets are disjoint along the path (the alternation of four
//! or more bridges would force the connecting curves to cross).
//!
//! Routing is by rank span: disjoint spans take one bridge per chain found
//! by a tandem descent; properly overlapping spans locate the single
//! chain-switch gap with a reference-tree descent and bridge across it;
//! nested spans first search the inner hull for a vertex poking outside the
//! outer chain (none: the outer chain is returned fully shared), then
//! bridge both flanks of the poke.  Every non-obvious bridge is validated
//! against both hulls; degenerate tie runs (collinear overlapping edges)
//! fall back to stricter probes and finally to an exact rescan of both
//! chains.

use super::build::{chain_scan, treap_from_chain};
use super::nav::{
    chain_pred_edge, chain_ranks, chain_succ_edge, covering_edge, join, split_ge, split_le,
    RefCursor, RefWin,
};
use super::ops::{chain_extreme, Flavor};
use super::{Arena, CompactHull, Frame, HullTree, Nid, Node, Side, NONE_RANK};
use crate::geom::rat::{meet_lines, orient_h, HPoint};
use crate::geom::Kernel;
use crate::Result;
use std::cmp::Ordering;

pub(crate) fn chain_root(h: &CompactHull, side: Side) -> Nid {
    match side {
        Side::Upper => h.upper,
        Side::Lower => h.lower,
    }
}

/// Descend past nodes whose edge lies outside [wlo, whi].  Window bounds
/// must be chain vertices so edges never straddle them.
fn skip_to_window<K: Kernel>(f: &mut Frame<'_, K>, mut cur: Nid, wlo: u32, whi: u32) -> Nid {
    while !cur.is_none() {
        let nd = f.get(cur);
        if nd.b > whi {
            cur = nd.left;
        } else if nd.a < wlo {
            cur = nd.right;
        } else {
            break;
        }
    }
    cur
}

/// Leftmost and rightmost chain vertices inside the rank window, if any.
fn chain_verts_in<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    wlo: u32,
    whi: u32,
) -> Option<(u32, u32)> {
    let mut lo = None;
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        if nd.a >= wlo {
            lo = Some(nd.a);
            cur = nd.left;
        } else if nd.b >= wlo {
            // chain vertices jump from nd.a to nd.b, nothing in between
            lo = Some(nd.b);
            break;
        } else {
            cur = nd.right;
        }
    }
    let mut hi = None;
    cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        if nd.b <= whi {
            hi = Some(nd.b);
            cur = nd.right;
        } else if nd.a <= whi {
            hi = Some(nd.a);
            break;
        } else {
            cur = nd.left;
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) if l <= h => Some((l, h)),
        _ => None,
    }
}

/// Flavor of the tangent from an external point onto one chain side: the
/// chain must end up weakly on the inward side of the bridge.
fn tangent_flavor(side: Side, q_is_left: bool) -> Flavor {
    match (side, q_is_left) {
        (Side::Upper, true) | (Side::Lower, false) => Flavor::Peak,
        (Side::Upper, false) | (Side::Lower, true) => Flavor::Valley,
    }
}

/// Windowed tangent descent, resumable from a partial tandem state.
fn tangent_resume<K: Kernel>(
    f: &mut Frame<'_, K>,
    mut cur: Nid,
    mut best: u32,
    wlo: u32,
    whi: u32,
    q: &K::Pt,
    flavor: Flavor,
) -> u32 {
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
            Ordering::Equal => {
                return if K::cmp_xy(f.pt(nd.a), q) == Ordering::Greater { nd.b } else { nd.a };
            }
        }
    }
    debug_assert_ne!(best, NONE_RANK);
    best
}

fn tangent_in<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    wlo: u32,
    whi: u32,
    q: &K::Pt,
    flavor: Flavor,
) -> u32 {
    if wlo == whi {
        wlo
    } else {
        tangent_resume(f, root, NONE_RANK, wlo, whi, q, flavor)
    }
}

/// Slide collinear bridge ends outward (u to the left end of a grazing
/// in-window edge, v to the right end) so bridged chains stay strict.
fn snap_bridge<K: Kernel>(
    f: &mut Frame<'_, K>,
    lroot: Nid,
    alo: u32,
    rroot: Nid,
    bhi: u32,
    u: &mut u32,
    v: &mut u32,
) {
    if *u > alo {
        if let Some(e) = chain_pred_edge(f, lroot, *u) {
            if e.a >= alo && K::orient(f.pt(e.a), f.pt(e.b), f.pt(*v)) == Ordering::Equal {
                *u = e.a;
            }
        }
    }
    if *v < bhi {
        if let Some(e) = chain_succ_edge(f, rroot, *v) {
            if e.b <= bhi && K::orient(f.pt(*u), f.pt(e.a), f.pt(e.b)) == Ordering::Equal {
                *v = e.b;
            }
        }
    }
}

/// Common tangent of two rank-separated chain windows, walked in tandem.
///
/// `sep` is a rank with every left-window vertex at or before it and every
/// right-window vertex strictly after; the tangent flavor per window is its
/// hull side (same sides: outer tangent; opposite: inner).  `snap_lo` /
/// `snap_hi` bound the collinear end slides and must be the chains' true
/// extents: the strict bridge end may sit outside the search window when the
/// window boundary splits a collinear run.  Returns `None` when either
/// window holds no chain vertex.
#[allow(clippy::too_many_arguments)]
pub(crate) fn tandem_bridge<K: Kernel>(
    f: &mut Frame<'_, K>,
    lroot: Nid,
    lwlo: u32,
    lwhi: u32,
    fl: Side,
    rroot: Nid,
    rwlo: u32,
    rwhi: u32,
    fr: Side,
    sep: u32,
    snap_lo: u32,
    snap_hi: u32,
) -> Option<(u32, u32)> {
    let (alo, ahi) = chain_verts_in(f, lroot, lwlo, lwhi)?;
    let (blo, bhi) = chain_verts_in(f, rroot, rwlo, rwhi)?;
    debug_assert!(ahi <= sep && sep < blo);
    let (mut u, mut v) = if alo == ahi && blo == bhi {
        (alo, blo)
    } else if alo == ahi {
        let q = f.pt(alo);
        (alo, tangent_in(f, rroot, blo, bhi, q, tangent_flavor(fr, true)))
    } else if blo == bhi {
        let q = f.pt(blo);
        (tangent_in(f, lroot, alo, ahi, q, tangent_flavor(fl, false)), blo)
    } else {
        tandem_core(f, lroot, alo, ahi, fl, rroot, blo, bhi, fr, sep)
    };
    snap_bridge::<K>(f, lroot, snap_lo, rroot, snap_hi, &mut u, &mut v);
    Some((u, v))
}

#[allow(clippy::too_many_arguments)]
fn tandem_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    lroot: Nid,
    alo: u32,
    ahi: u32,
    fl: Side,
    rroot: Nid,
    blo: u32,
    bhi: u32,
    fr: Side,
    sep: u32,
) -> (u32, u32) {
    let sep_pt = f.pt(sep);
    let mut na = lroot;
    let mut nb = rroot;
    let mut u = NONE_RANK;
    let mut v = NONE_RANK;
    loop {
        na = skip_to_window(f, na, alo, ahi);
        nb = skip_to_window(f, nb, blo, bhi);
        match (na.is_none(), nb.is_none()) {
            (true, true) => break,
            (true, false) => {
                debug_assert_ne!(u, NONE_RANK);
                let q = f.pt(u);
                v = tangent_resume(f, nb, v, blo, bhi, q, tangent_flavor(fr, true));
                break;
            }
            (false, true) => {
                debug_assert_ne!(v, NONE_RANK);
                let q = f.pt(v);
                u = tangent_resume(f, na, u, alo, ahi, q, tangent_flavor(fl, false));
                break;
            }
            (false, false) => {}
        }
        let nda = f.get(na);
        let ndb = f.get(nb);
        let ea = (f.pt(nda.a), f.pt(nda.b));
        let eb = (f.pt(ndb.a), f.pt(ndb.b));
        // D' compares slopes, D the supporting-line heights at the
        // separator; both mapped so Greater means "toward this side's
        // outside".  Which half-interval of each edge the tangent vertex
        // cannot lie in follows from which extension supports the other
        // window across the separator.
        let sd1 = fl.out(K::cmp_edge_slopes(ea, eb));
        let sd = fl.out(K::cmp_ext_height_at(ea, eb, sep_pt));
        // Some(true): tangent right of this edge, drop the left half.
        let (da, db) = match (sd1, sd) {
            (Ordering::Greater, Ordering::Greater) => (Some(true), None),
            (Ordering::Greater, Ordering::Equal) => (Some(true), Some(false)),
            (Ordering::Greater, Ordering::Less) => (None, Some(false)),
            (Ordering::Equal, Ordering::Greater) => (Some(true), Some(true)),
            (Ordering::Equal, Ordering::Equal) => return (nda.a, ndb.b),
            (Ordering::Equal, Ordering::Less) => (Some(false), Some(false)),
            (Ordering::Less, Ordering::Greater) => (None, Some(true)),
            (Ordering::Less, Ordering::Equal) => (Some(false), Some(true)),
            (Ordering::Less, Ordering::Less) => (Some(false), None),
        };
        // an opposite-flavor right window reverses its slope monotonicity
        let db = if fl == fr { db } else { db.map(|d| !d) };
        if let Some(keep_right) = da {
            if keep_right {
                u = nda.b;
                na = nda.right;
            } else {
                u = nda.a;
                na = nda.left;
            }
        }
        if let Some(keep_right) = db {
            if keep_right {
                v = ndb.b;
                nb = ndb.right;
            } else {
                v = ndb.a;
                nb = ndb.left;
            }
        }
    }
    debug_assert!(u != NONE_RANK && v != NONE_RANK);
    (u, v)
}

/// Does the line u→v support both hulls on the given side?
pub(crate) fn bridge_supports<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
    u: u32,
    v: u32,
) -> bool {
    let d = match side {
        Side::Upper => K::left_normal(f.pt(u), f.pt(v)),
        Side::Lower => K::left_normal(f.pt(v), f.pt(u)),
    };
    for h in [ha, hb] {
        let r = if h.is_singleton() {
            h.lo
        } else {
            chain_extreme(f, chain_root(h, side), &d)
        };
        if K::cmp_along(&d, f.pt(r), f.pt(u)) == Ordering::Greater {
            return false;
        }
    }
    true
}

fn fence_state<K: Kernel>(
    f: &Frame<'_, K>,
    na: &Node,
    nb: &Node,
    r: u32,
    side: Side,
    strict: bool,
) -> bool {
    let ea = (f.pt(na.a), f.pt(na.b));
    let eb = (f.pt(nb.a), f.pt(nb.b));
    let o = side.out(K::cmp_height_at(ea, eb, f.pt(r)));
    if strict {
        o == Ordering::Greater
    } else {
        o != Ordering::Less
    }
}

/// Reference-tree descent to a gap where the merged chain switches from the
/// first chain to the second: first-chain fences weakly outside at the
/// gap's left vertex and strictly inside at its right one (`strict` flips
/// the tie side, for runs of exactly overlapping edges).
fn flip_gap<K: Kernel>(
    f: &mut Frame<'_, K>,
    ra: Nid,
    rb: Nid,
    side: Side,
    wlo: u32,
    whi: u32,
    strict: bool,
) -> Option<u32> {
    let mut win = RefWin::whole(f);
    let mut ca = RefCursor::root(ra);
    let mut cb = RefCursor::root(rb);
    loop {
        if win.is_leaf() {
            return None;
        }
        let g = win.gap();
        let to_left = if g >= whi {
            true
        } else if g < wlo {
            false
        } else {
            match (ca.fence_edge(f, g), cb.fence_edge(f, g)) {
                (None, None) => return None,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (Some(na), Some(nb)) => {
                    let sl = fence_state(f, &na, &nb, g, side, strict);
                    let sr = fence_state(f, &na, &nb, g + 1, side, strict);
                    if sl && !sr {
                        return Some(g);
                    }
                    !sl
                }
            }
        };
        ca = ca.step(f, g, to_left);
        cb = cb.step(f, g, to_left);
        win = if to_left { win.left() } else { win.right() };
    }
}

/// Validated bridge across a candidate switch gap: the tangent of the parts
/// split at g, or at g−1 when the switch rides a shared vertex abscissa.
#[allow(clippy::too_many_arguments)]
fn gap_bridge<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
    lroot: Nid,
    lwlo: u32,
    rroot: Nid,
    rwhi: u32,
    g: u32,
    snap_lo: u32,
    snap_hi: u32,
) -> Option<(u32, u32)> {
    for k in 0..2 {
        if k == 1 && g == 0 {
            break;
        }
        let (lwhi, rwlo, sep) = if k == 0 { (g, g + 1, g) } else { (g - 1, g, g - 1) };
        if let Some((u, v)) = tandem_bridge(
            f, lroot, lwlo, lwhi, side, rroot, rwlo, rwhi, side, sep, snap_lo, snap_hi,
        ) {
            if bridge_supports(f, ha, hb, side, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Is the vertex at rank r strictly outside the chain?
fn outside_chain<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, side: Side, r: u32) -> bool {
    let Some(cov) = covering_edge(f, root, r) else { return false };
    side.out(K::orient(f.pt(cov.a), f.pt(cov.b), f.pt(r))) == Ordering::Greater
}

/// Covering edge of the chain at an exact rational abscissa.
pub(crate) fn covering_at_absc<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    hp: &HPoint,
) -> Option<Node> {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        if K::cmp_absc_h(hp, f.pt(nd.a)) == Ordering::Less {
            cur = nd.left;
        } else if K::cmp_absc_h(hp, f.pt(nd.b)) == Ordering::Greater {
            cur = nd.right;
        } else {
            return Some(nd);
        }
    }
    None
}

/// The wedge under the two bounding edge-lines stays weakly inside the
/// outer chain across the whole arc (its top is a polyline through the
/// already-tested arc ends and the wedge apex, and the inside is convex),
/// so no vertex between them pokes out.
fn wedge_inside<K: Kernel>(
    f: &mut Frame<'_, K>,
    outer: Nid,
    side: Side,
    arc_lo: u32,
    arc_hi: u32,
    el: Node,
    eh: Node,
) -> bool {
    let l1 = K::li_to_hline(&K::line_through(f.pt(el.a), f.pt(el.b)));
    let l2 = K::li_to_hline(&K::line_through(f.pt(eh.a), f.pt(eh.b)));
    let Some(apex) = meet_lines(&l1, &l2) else { return false };
    // apex abscissa outside the arc: the wedge top over it is one segment
    // between two inside points
    if K::cmp_absc_h(&apex, f.pt(arc_lo)) != Ordering::Greater {
        return true;
    }
    if K::cmp_absc_h(&apex, f.pt(arc_hi)) != Ordering::Less {
        return true;
    }
    let Some(cov) = covering_at_absc(f, outer, &apex) else { return false };
    let a = K::to_hpoint(f.pt(cov.a));
    let b = K::to_hpoint(f.pt(cov.b));
    side.out(orient_h(&a, &b, &apex)) != Ordering::Greater
}

/// First inner-chain vertex strictly outside the outer chain, pruning
/// subtrees whose bounding wedge provably stays inside.
#[allow(clippy::too_many_arguments)]
fn poke_dfs<K: Kernel>(
    f: &mut Frame<'_, K>,
    outer: Nid,
    side: Side,
    cur: Nid,
    arc_lo: u32,
    arc_hi: u32,
    lo_edge: Option<Node>,
    hi_edge: Option<Node>,
) -> Option<u32> {
    if cur.is_none() {
        return None;
    }
    if let (Some(el), Some(eh)) = (lo_edge, hi_edge) {
        if wedge_inside(f, outer, side, arc_lo, arc_hi, el, eh) {
            return None;
        }
    }
    let nd = f.get(cur);
    if outside_chain(f, outer, side, nd.a) {
        return Some(nd.a);
    }
    if outside_chain(f, outer, side, nd.b) {
        return Some(nd.b);
    }
    if let Some(r) = poke_dfs(f, outer, side, nd.left, arc_lo, nd.a, lo_edge, Some(nd)) {
        return Some(r);
    }
    poke_dfs(f, outer, side, nd.right, nd.b, arc_hi, Some(nd), hi_edge)
}

fn find_poke<K: Kernel>(
    f: &mut Frame<'_, K>,
    outer: Nid,
    side: Side,
    hb: &CompactHull,
) -> Option<u32> {
    for r in [hb.lo, hb.hi] {
        if outside_chain(f, outer, side, r) {
            return Some(r);
        }
    }
    poke_dfs(f, outer, side, chain_root(hb, side), hb.lo, hb.hi, None, None)
}

/// Chain of the hull plus one extra vertex s (not among its vertices).
fn insert_vertex<K: Kernel>(f: &mut Frame<'_, K>, h: &CompactHull, side: Side, s: u32) -> Nid {
    let root = chain_root(h, side);
    if h.is_singleton() {
        let (a, b) = if s < h.lo { (s, h.lo) } else { (h.lo, s) };
        return f.alloc(Node { a, b, left: Nid::NONE, right: Nid::NONE });
    }
    let q = f.pt(s);
    if s < h.lo {
        let t = tangent_in(f, root, h.lo, h.hi, q, tangent_flavor(side, true));
        let r = split_ge(f, root, t);
        return join(f, Nid::NONE, (s, t), r);
    }
    if s > h.hi {
        let t = tangent_in(f, root, h.lo, h.hi, q, tangent_flavor(side, false));
        let l = split_le(f, root, t);
        return join(f, l, (t, s), Nid::NONE);
    }
    let cov = covering_edge(f, root, s).expect("rank inside span");
    if side.out(K::orient(f.pt(cov.a), f.pt(cov.b), q)) != Ordering::Greater {
        return root; // weakly inside: the chain is unchanged and fully shared
    }
    let u1 = tangent_in(f, root, h.lo, cov.a, q, tangent_flavor(side, false));
    let u2 = tangent_in(f, root, cov.b, h.hi, q, tangent_flavor(side, true));
    let l = split_le(f, root, u1);
    let r = split_ge(f, root, u2);
    let lm = join(f, l, (u1, s), Nid::NONE);
    join(f, lm, (s, u2), r)
}

/// Exact fallback: rescan both chains' vertices into a fresh chain.
fn rebuild_chain<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
) -> Nid {
    let mut ranks = chain_ranks(f, chain_root(ha, side), ha.lo);
    ranks.extend(chain_ranks(f, chain_root(hb, side), hb.lo));
    ranks.sort_unstable();
    let chain = chain_scan(f, &ranks, side);
    treap_from_chain(f, &chain)
}

/// One chain-switch bridge between a left window on `lroot` and a right one
/// on `rroot`.  Candidate gaps: the fence-flip descent (weak, then strict for
/// tie runs), then the span-boundary gaps, which cover switches lying where
/// only one chain has fences (one hull entirely outside the other there).
#[allow(clippy::too_many_arguments)]
fn flank_bridge<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
    lroot: Nid,
    lwlo: u32,
    rroot: Nid,
    rwhi: u32,
    flip_a: Nid,
    flip_b: Nid,
    boundary: &[u32],
    snap_lo: u32,
    snap_hi: u32,
) -> Option<(u32, u32)> {
    for strict in [false, true] {
        if let Some(g) = flip_gap(f, flip_a, flip_b, side, lwlo, rwhi, strict) {
            if let Some(uv) =
                gap_bridge(f, ha, hb, side, lroot, lwlo, rroot, rwhi, g, snap_lo, snap_hi)
            {
                return Some(uv);
            }
        }
    }
    for &g in boundary {
        if let Some(uv) = gap_bridge(f, ha, hb, side, lroot, lwlo, rroot, rwhi, g, snap_lo, snap_hi)
        {
            return Some(uv);
        }
    }
    None
}

fn merged_nested<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
    ra: Nid,
    rb: Nid,
) -> Nid {
    let Some(vstar) = find_poke(f, ra, side, hb) else {
        return ra; // inner hull fully under the outer chain: share it
    };
    let b1 =
        flank_bridge(f, ha, hb, side, ra, ha.lo, rb, vstar, ra, rb, &[hb.lo - 1], ha.lo, hb.hi);
    let b2 = flank_bridge(f, ha, hb, side, rb, vstar, ra, ha.hi, rb, ra, &[hb.hi], hb.lo, ha.hi);
    if let (Some((u1, v1)), Some((v2, u2))) = (b1, b2) {
        if u1 < v1 && v1 <= v2 && v2 < u2 {
            if v1 == v2 && K::orient(f.pt(u1), f.pt(v1), f.pt(u2)) == Ordering::Equal {
                // the poke vertex sits exactly on the outer support line
                let l = split_le(f, ra, u1);
                let r = split_ge(f, ra, u2);
                return join(f, l, (u1, u2), r);
            }
            let l = split_le(f, ra, u1);
            let mid = split_le(f, rb, v2);
            let mid = split_ge(f, mid, v1);
            let r = split_ge(f, ra, u2);
            let lm = join(f, l, (u1, v1), mid);
            return join(f, lm, (v2, u2), r);
        }
    }
    rebuild_chain(f, ha, hb, side)
}

fn merged_mixed<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
    ra: Nid,
    rb: Nid,
) -> Nid {
    let b = flank_bridge(
        f,
        ha,
        hb,
        side,
        ra,
        ha.lo,
        rb,
        hb.hi,
        ra,
        rb,
        &[hb.lo - 1, ha.hi],
        ha.lo,
        hb.hi,
    );
    if let Some((u, v)) = b {
        let l = split_le(f, ra, u);
        let r = split_ge(f, rb, v);
        return join(f, l, (u, v), r);
    }
    rebuild_chain(f, ha, hb, side)
}

fn merged_chain<K: Kernel>(
    f: &mut Frame<'_, K>,
    ha: &CompactHull,
    hb: &CompactHull,
    side: Side,
) -> Nid {
    debug_assert!(ha.lo < hb.lo);
    if ha.is_singleton() && hb.is_singleton() {
        return f.alloc(Node { a: ha.lo, b: hb.lo, left: Nid::NONE, right: Nid::NONE });
    }
    if hb.is_singleton() {
        return insert_vertex(f, ha, side, hb.lo);
    }
    if ha.is_singleton() {
        return insert_vertex(f, hb, side, ha.lo);
    }
    let ra = chain_root(ha, side);
    let rb = chain_root(hb, side);
    if ha.hi < hb.lo {
        // rank-disjoint spans: exactly one bridge
        let (u, v) = tandem_bridge(
            f, ra, ha.lo, ha.hi, side, rb, hb.lo, hb.hi, side, ha.hi, ha.lo, hb.hi,
        )
        .expect("both spans nonempty");
        let l = split_le(f, ra, u);
        let r = split_ge(f, rb, v);
        return join(f, l, (u, v), r);
    }
    if hb.hi < ha.hi {
        merged_nested(f, ha, hb, side, ra, rb)
    } else {
        merged_mixed(f, ha, hb, side, ra, rb)
    }
}

fn merge_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    tree_id: u32,
    h1: &CompactHull,
    h2: &CompactHull,
) -> CompactHull {
    if h1.is_empty() {
        return *h2;
    }
    if h2.is_empty() {
        return *h1;
    }
    debug_assert_ne!(h1.lo, h2.lo);
    let (ha, hb) = if h2.lo < h1.lo { (h2, h1) } else { (h1, h2) };
    let upper = merged_chain(f, ha, hb, Side::Upper);
    let lower = merged_chain(f, ha, hb, Side::Lower);
    f.hull(tree_id, ha.lo, ha.hi.max(hb.hi), upper, lower)
}

impl<K: Kernel> HullTree<K> {
    /// Union hull of two epoch-0 hulls over this tree, sharing their
    /// subtrees; new spine nodes go to the epoch-0 pool.
    ///
    /// The inputs must be vertex-disjoint and their union hull must have at
    /// most two bridges per chain side, as is the case for hulls of
    /// disjoint rank ranges or, more generally, of disjoint connected
    /// pieces of the path.
    pub fn merge_hulls(&mut self, h1: &CompactHull, h2: &CompactHull) -> Result<CompactHull> {
        self.check_handle(h1, 0)?;
        self.check_handle(h2, 0)?;
        let id = self.id;
        let (mut f, counters) = Frame::for_build(self);
        let out = merge_core(&mut f, id, h1, h2);
        f.finish(Some(counters));
        Ok(out)
    }

    /// As [`merge_hulls`], allocating into the arena; inputs may come from
    /// the epoch-0 pool or the arena's current epoch.
    ///
    /// [`merge_hulls`]: HullTree::merge_hulls
    pub fn merge_hulls_in(
        &self,
        arena: &mut Arena,
        h1: &CompactHull,
        h2: &CompactHull,
    ) -> Result<CompactHull> {
        self.check_handle(h1, arena.epoch)?;
        self.check_handle(h2, arena.epoch)?;
        let mut f = Frame::for_query(self, arena);
        let out = merge_core(&mut f, self.id, h1, h2);
        f.finish(None);
        Ok(out)
    }
}
