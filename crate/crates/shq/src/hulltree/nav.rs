//! Traversal: walks, persistent split/join, covering-edge descents, and the
//! two-slot cursor that tracks one chain during a reference-tree descent.

use super::{Arena, CompactHull, Frame, HullTree, Nid, Node};
use crate::geom::Kernel;
use crate::Result;

pub(crate) fn in_order_edges<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, out: &mut Vec<(u32, u32)>) {
    let mut stack: Vec<Nid> = Vec::new();
    let mut cur = root;
    loop {
        while !cur.is_none() {
            stack.push(cur);
            cur = f.get(cur).left;
        }
        let Some(id) = stack.pop() else { break };
        let nd = f.get(id);
        out.push((nd.a, nd.b));
        cur = nd.right;
    }
}

/// Chain vertex ranks in order.  An edgeless chain is the single vertex `lo`.
pub(crate) fn chain_ranks<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, lo: u32) -> Vec<u32> {
    if root.is_none() {
        return vec![lo];
    }
    let mut es = Vec::new();
    in_order_edges(f, root, &mut es);
    let mut vs = Vec::with_capacity(es.len() + 1);
    vs.push(es[0].0);
    for &(a, b) in &es {
        debug_assert_eq!(a, *vs.last().unwrap(), "chain edges not contiguous");
        vs.push(b);
    }
    debug_assert_eq!(vs[0], lo);
    vs
}

pub(crate) fn leftmost_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid) -> Option<Node> {
    if root.is_none() {
        return None;
    }
    let mut nd = f.get(root);
    while !nd.left.is_none() {
        nd = f.get(nd.left);
    }
    Some(nd)
}

pub(crate) fn rightmost_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid) -> Option<Node> {
    if root.is_none() {
        return None;
    }
    let mut nd = f.get(root);
    while !nd.right.is_none() {
        nd = f.get(nd.right);
    }
    Some(nd)
}

/// Chain edge ending at rank r (edges are sorted by both endpoints).
pub(crate) fn chain_pred_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, r: u32) -> Option<Node> {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        match nd.b.cmp(&r) {
            std::cmp::Ordering::Equal => return Some(nd),
            std::cmp::Ordering::Less => cur = nd.right,
            std::cmp::Ordering::Greater => cur = nd.left,
        }
    }
    None
}

/// Chain edge starting at rank r.
pub(crate) fn chain_succ_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, r: u32) -> Option<Node> {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        match nd.a.cmp(&r) {
            std::cmp::Ordering::Equal => return Some(nd),
            std::cmp::Ordering::Less => cur = nd.right,
            std::cmp::Ordering::Greater => cur = nd.left,
        }
    }
    None
}

/// Edge (a, b) with a <= r <= b, if the chain covers rank r.
pub(crate) fn covering_edge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, r: u32) -> Option<Node> {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        cur = if r < nd.a {
            nd.left
        } else if r > nd.b {
            nd.right
        } else {
            return Some(nd);
        };
    }
    None
}

/// Covering edge within the restricted chain of edges whose spans lie inside
/// ranks [wlo, whi].  Window bounds must be chain vertices.
pub(crate) fn covering_edge_in<K: Kernel>(
    f: &mut Frame<'_, K>,
    root: Nid,
    r: u32,
    wlo: u32,
    whi: u32,
) -> Option<Node> {
    let mut cur = root;
    while !cur.is_none() {
        let nd = f.get(cur);
        cur = if nd.b > whi {
            nd.left
        } else if nd.a < wlo {
            nd.right
        } else if r < nd.a {
            nd.left
        } else if r > nd.b {
            nd.right
        } else {
            return Some(nd);
        };
    }
    None
}

/// Persistent: edges with b <= v.  `v` must be a chain vertex (no edge may
/// straddle it).  Untouched subtrees are shared, so a fully-kept tree
/// returns the original root with zero allocations.
pub(crate) fn split_le<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, v: u32) -> Nid {
    if root.is_none() {
        return Nid::NONE;
    }
    let nd = f.get(root);
    if nd.b <= v {
        let nr = split_le(f, nd.right, v);
        if nr == nd.right {
            return root;
        }
        f.alloc(Node { a: nd.a, b: nd.b, left: nd.left, right: nr })
    } else {
        debug_assert!(nd.a >= v, "split point {} inside edge ({},{})", v, nd.a, nd.b);
        split_le(f, nd.left, v)
    }
}

/// Persistent: edges with a >= v.
pub(crate) fn split_ge<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, v: u32) -> Nid {
    if root.is_none() {
        return Nid::NONE;
    }
    let nd = f.get(root);
    if nd.a >= v {
        let nl = split_ge(f, nd.left, v);
        if nl == nd.left {
            return root;
        }
        f.alloc(Node { a: nd.a, b: nd.b, left: nl, right: nd.right })
    } else {
        debug_assert!(nd.b <= v, "split point {} inside edge ({},{})", v, nd.a, nd.b);
        split_ge(f, nd.right, v)
    }
}

/// Persistent join of two chain-edge trees around a fresh middle edge.
/// `l`'s edges end at `mid.0`, `r`'s start at `mid.1`.  The unique
/// shallowest-reference edge of the union becomes the root, so the result
/// has the same canonical shape a from-scratch build would produce.
pub(crate) fn join<K: Kernel>(f: &mut Frame<'_, K>, l: Nid, mid: (u32, u32), r: Nid) -> Nid {
    debug_assert!(mid.0 < mid.1);
    let lm = f.edge_level(mid.0, mid.1);
    let lnode = if l.is_none() { None } else { Some(f.get(l)) };
    let rnode = if r.is_none() { None } else { Some(f.get(r)) };
    let ll = lnode.map_or(u32::MAX, |nd| f.edge_level(nd.a, nd.b));
    let lr = rnode.map_or(u32::MAX, |nd| f.edge_level(nd.a, nd.b));
    if lm < ll && lm < lr {
        return f.alloc(Node { a: mid.0, b: mid.1, left: l, right: r });
    }
    debug_assert!(ll != lr, "ambiguous join root: levels {} {} {}", lm, ll, lr);
    if ll < lr {
        let nd = lnode.unwrap();
        debug_assert!(lm != ll);
        let nr = join(f, nd.right, mid, r);
        f.alloc(Node { a: nd.a, b: nd.b, left: nd.left, right: nr })
    } else {
        let nd = rnode.unwrap();
        debug_assert!(lm != lr);
        let nl = join(f, l, mid, nd.left);
        f.alloc(Node { a: nd.a, b: nd.b, left: nl, right: nd.right })
    }
}

/// One chain's state during a root-to-leaf reference-tree descent.
///
/// `inside` roots the compact subtree of edges whose spans lie inside the
/// current window; `slot_l`/`slot_r` are the edges crossing the window's
/// boundary fences (if the chain extends past them).  Every transition is
/// O(1), which is what keeps whole descents within O(log n) node visits.
#[derive(Clone, Copy)]
pub(crate) struct RefCursor {
    pub inside: Nid,
    pub slot_l: Nid,
    pub slot_r: Nid,
}

impl RefCursor {
    pub fn root(chain: Nid) -> RefCursor {
        RefCursor { inside: chain, slot_l: Nid::NONE, slot_r: Nid::NONE }
    }

    /// The chain edge covering the fence between ranks g and g+1, if any.
    pub fn fence_edge<K: Kernel>(&self, f: &mut Frame<'_, K>, g: u32) -> Option<Node> {
        for id in [self.inside, self.slot_l, self.slot_r] {
            if !id.is_none() {
                let nd = f.get(id);
                if nd.a <= g && nd.b > g {
                    return Some(nd);
                }
            }
        }
        None
    }

    /// Move into the half on `to_left`'s side of the fence at g.
    pub fn step<K: Kernel>(&self, f: &mut Frame<'_, K>, g: u32, to_left: bool) -> RefCursor {
        let mut nxt = *self;
        let fence = self.fence_nid(f, g);
        if to_left {
            nxt.slot_r = fence;
        } else {
            nxt.slot_l = fence;
        }
        if !self.inside.is_none() {
            let nd = f.get(self.inside);
            if nd.a <= g && nd.b > g {
                nxt.inside = if to_left { nd.left } else { nd.right };
            } else if (nd.b <= g) != to_left {
                nxt.inside = Nid::NONE;
            }
        }
        nxt
    }

    fn fence_nid<K: Kernel>(&self, f: &mut Frame<'_, K>, g: u32) -> Nid {
        for id in [self.inside, self.slot_l, self.slot_r] {
            if !id.is_none() {
                let nd = f.get(id);
                if nd.a <= g && nd.b > g {
                    return id;
                }
            }
        }
        Nid::NONE
    }
}

/// Dyadic rank window of a reference-tree descent, bounds inclusive.
#[derive(Clone, Copy, Debug)]
pub(crate) struct RefWin {
    pub lo: u32,
    pub hi: u32,
}

impl RefWin {
    pub fn whole<K: Kernel>(f: &Frame<'_, K>) -> RefWin {
        RefWin { lo: 0, hi: f.padded_n() - 1 }
    }

    pub fn is_leaf(&self) -> bool {
        self.lo == self.hi
    }

    /// Central fence: between ranks g and g+1.
    pub fn gap(&self) -> u32 {
        self.lo + (self.hi - self.lo) / 2
    }

    pub fn left(&self) -> RefWin {
        RefWin { lo: self.lo, hi: self.gap() }
    }

    pub fn right(&self) -> RefWin {
        RefWin { lo: self.gap() + 1, hi: self.hi }
    }
}

impl<K: Kernel> HullTree<K> {
    /// Hull cycle, counterclockwise from the lexicographic minimum vertex.
    /// Work is proportional to the hull size, not the vertex count.
    pub fn enumerate_hull(&self, arena: &mut Arena, h: &CompactHull) -> Result<Vec<K::Pt>> {
        self.check_handle(h, arena.epoch)?;
        if h.is_empty() {
            return Ok(Vec::new());
        }
        let mut f = Frame::for_query(self, arena);
        let mut cyc: Vec<K::Pt> = Vec::new();
        let lower = chain_ranks(&mut f, h.lower, h.lo);
        for &r in &lower {
            cyc.push(f.pt(r).clone());
        }
        let upper = chain_ranks(&mut f, h.upper, h.lo);
        for &r in upper.iter().rev().skip(1) {
            if r != h.lo {
                cyc.push(f.pt(r).clone());
            }
        }
        f.finish(None);
        Ok(cyc)
    }

    /// Canonical byte serialization of a hull's structure: chain trees in
    /// pre-order with edge ranks.  Equal bytes mean identical shape and
    /// content, independent of node pool layout.
    pub fn snapshot(&self, arena: &mut Arena, h: &CompactHull) -> Result<Vec<u8>> {
        self.check_handle(h, arena.epoch)?;
        let mut out = Vec::new();
        if h.is_empty() {
            return Ok(out);
        }
        out.extend_from_slice(&h.lo.to_le_bytes());
        out.extend_from_slice(&h.hi.to_le_bytes());
        let mut f = Frame::for_query(self, arena);
        for root in [h.upper, h.lower] {
            pre_order_bytes(&mut f, root, &mut out);
        }
        f.finish(None);
        Ok(out)
    }
}

fn pre_order_bytes<K: Kernel>(f: &mut Frame<'_, K>, root: Nid, out: &mut Vec<u8>) {
    if root.is_none() {
        out.push(0xff);
        return;
    }
    let nd = f.get(root);
    out.push(1);
    out.extend_from_slice(&nd.a.to_le_bytes());
    out.extend_from_slice(&nd.b.to_le_bytes());
    pre_order_bytes(f, nd.left, out);
    pre_order_bytes(f, nd.right, out);
}
