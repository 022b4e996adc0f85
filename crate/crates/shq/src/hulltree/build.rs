//! Compact interval tree construction from vertex rank sets.

use super::{CompactHull, Frame, HullTree, Nid, Node, Side};
use crate::geom::Kernel;
use crate::{Error, Result};
use std::cmp::Ordering;

/// Heap-id ancestor test (weak).
pub(crate) fn is_ancestor(anc: u32, desc: u32) -> bool {
    let la = u32::BITS - 1 - anc.leading_zeros();
    let ld = u32::BITS - 1 - desc.leading_zeros();
    la <= ld && (desc >> (ld - la)) == anc
}

/// Hull chain of `ranks` (strictly increasing) on one side, as vertex ranks.
/// Strict: collinear interior vertices are dropped.
pub(crate) fn chain_scan<K: Kernel>(f: &Frame<'_, K>, ranks: &[u32], side: Side) -> Vec<u32> {
    let keep = match side {
        Side::Upper => Ordering::Less,
        Side::Lower => Ordering::Greater,
    };
    let mut st: Vec<u32> = Vec::with_capacity(ranks.len().min(64));
    for &r in ranks {
        while st.len() >= 2 {
            let s1 = st[st.len() - 1];
            let s2 = st[st.len() - 2];
            if K::orient(f.pt(s2), f.pt(s1), f.pt(r)) == keep {
                break;
            }
            st.pop();
        }
        st.push(r);
    }
    st
}

/// Build the canonical compact tree over a chain's edges, given chain
/// vertices in rank order.  One pass with a rightmost-spine stack: each new
/// edge pops spine entries whose reference nodes are not ancestors of its
/// own, adopts the last popped as its left child, and becomes the right
/// child of the surviving top.  Node ids are assigned in post-order.
pub(crate) fn treap_from_chain<K: Kernel>(f: &mut Frame<'_, K>, chain: &[u32]) -> Nid {
    let k = chain.len().saturating_sub(1);
    if k == 0 {
        return Nid::NONE;
    }
    let mut left = vec![usize::MAX; k];
    let mut right = vec![usize::MAX; k];
    let mut refs = vec![0u32; k];
    let mut spine: Vec<usize> = Vec::new();
    for i in 0..k {
        f.tick();
        let (a, b) = (chain[i], chain[i + 1]);
        refs[i] = f.lca(a, b);
        let mut last = usize::MAX;
        while let Some(&top) = spine.last() {
            if is_ancestor(refs[top], refs[i]) {
                break;
            }
            last = top;
            spine.pop();
        }
        if last != usize::MAX {
            debug_assert!(is_ancestor(refs[i], refs[last]));
        }
        left[i] = last;
        if let Some(&top) = spine.last() {
            right[top] = i;
        }
        spine.push(i);
    }
    let root = spine[0];
    emit(f, chain, &left, &right, root)
}

fn emit<K: Kernel>(
    f: &mut Frame<'_, K>,
    chain: &[u32],
    left: &[usize],
    right: &[usize],
    i: usize,
) -> Nid {
    let l = if left[i] == usize::MAX { Nid::NONE } else { emit(f, chain, left, right, left[i]) };
    let r = if right[i] == usize::MAX { Nid::NONE } else { emit(f, chain, left, right, right[i]) };
    f.alloc(Node { a: chain[i], b: chain[i + 1], left: l, right: r })
}

pub(crate) fn build_core<K: Kernel>(
    f: &mut Frame<'_, K>,
    tree_id: u32,
    ranks: &[u32],
) -> CompactHull {
    debug_assert!(ranks.windows(2).all(|w| w[0] < w[1]));
    match ranks {
        [] => CompactHull::EMPTY,
        &[r] => CompactHull {
            tree: tree_id,
            epoch: f.alloc_epoch(),
            lo: r,
            hi: r,
            upper: Nid::NONE,
            lower: Nid::NONE,
        },
        _ => {
            let up = chain_scan::<K>(f, ranks, Side::Upper);
            let dn = chain_scan::<K>(f, ranks, Side::Lower);
            let upper = treap_from_chain(f, &up);
            let lower = treap_from_chain(f, &dn);
            f.hull(tree_id, ranks[0], *ranks.last().unwrap(), upper, lower)
        }
    }
}

impl<K: Kernel> HullTree<K> {
    fn checked_sorted(&self, ranks: &[u32]) -> Result<Vec<u32>> {
        let mut rs = ranks.to_vec();
        rs.sort_unstable();
        rs.dedup();
        if let Some(&last) = rs.last() {
            if last as usize >= self.n() {
                return Err(Error::OutOfRange(format!(
                    "rank {} outside reference tree of {} vertices",
                    last,
                    self.n()
                )));
            }
        }
        Ok(rs)
    }

    /// Hull of a vertex rank set, stored in the epoch-0 pool.
    pub fn build_from_ranks(&mut self, ranks: &[u32]) -> Result<CompactHull> {
        let rs = self.checked_sorted(ranks)?;
        let id = self.id;
        let (mut f, bc) = Frame::for_build(self);
        let h = build_core(&mut f, id, &rs);
        f.finish(Some(bc));
        Ok(h)
    }

    /// Hull of a vertex rank set, stored in `arena`; the handle dies at the
    /// arena's next reset.
    pub fn build_from_ranks_in(&self, arena: &mut super::Arena, ranks: &[u32]) -> Result<CompactHull> {
        let rs = self.checked_sorted(ranks)?;
        let mut f = Frame::for_query(self, arena);
        let h = build_core(&mut f, self.id, &rs);
        f.finish(None);
        Ok(h)
    }
}
