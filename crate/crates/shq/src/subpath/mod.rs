//! Subpath hull index: the convex hull of any contiguous stretch of a simple
//! path in O(log n) time from O(n) persistent storage.
//!
//! The path is cut by a halving tree truncated at L² vertices, L = ⌈log₂ n⌉.
//! Internal nodes carry precomputed hulls of their spans.  Each leaf holds a
//! block partition at granularity L with prefix/suffix hull tables, the
//! merged hulls of the subtrees hanging off every upward path (one per
//! ancestor, each side), and a nested index of the same shape — one level
//! deep — for stretches inside a single leaf.  A query stitches two table
//! hulls and two fresh block fragments with O(log n)-node merges; stretches
//! inside one leaf run the same recipe on the nested index.
//!
//! Results are ordinary hull handles: every hull operation (enumerate,
//! extreme point, tangents, line intersection, merge, two-hull queries)
//! applies, against the reference tree named by the handle.

use crate::geom::{path_crossing, I64Kernel, Point};
use crate::hulltree::{Arena, CompactHull, HullTree};
use crate::{Error, Result};
use std::collections::HashMap;

/// Paths up to this length are verified simple at build time; longer ones
/// are taken on trust (the sweep would dominate the whole build).
pub const SIMPLICITY_CHECK_LIMIT: usize = 1 << 12;

const NONE: u32 = u32::MAX;

/// Decomposition node over the inclusive position span [a, b], with the hull
/// of its vertices.  `leaf` indexes the leaf table, NONE for internal nodes.
struct DNode {
    a: u32,
    b: u32,
    parent: u32,
    left: u32,
    right: u32,
    hull: CompactHull,
    leaf: u32,
}

/// Truncated halving tree over positions [0, n): spans of ≤ cap vertices
/// become leaves.  Levels whose right half would be empty are skipped, so
/// every internal node has two nonempty children whose spans abut.
/// Children precede parents in the returned vector.
fn halving_tree(n: u32, cap: u32) -> (Vec<DNode>, u32) {
    fn rec(nodes: &mut Vec<DNode>, a: u32, n: u32, size: u32, cap: u32) -> u32 {
        let b = ((a as u64 + size as u64).min(n as u64) - 1) as u32;
        if b - a + 1 <= cap {
            nodes.push(DNode {
                a,
                b,
                parent: NONE,
                left: NONE,
                right: NONE,
                hull: CompactHull::EMPTY,
                leaf: NONE,
            });
            return nodes.len() as u32 - 1;
        }
        let half = size / 2;
        if a + half >= n {
            return rec(nodes, a, n, half, cap);
        }
        let l = rec(nodes, a, n, half, cap);
        let r = rec(nodes, a + half, n, half, cap);
        let me = nodes.len() as u32;
        nodes[l as usize].parent = me;
        nodes[r as usize].parent = me;
        nodes.push(DNode { a, b, parent: NONE, left: l, right: r, hull: CompactHull::EMPTY, leaf: NONE });
        me
    }
    let mut nodes = Vec::new();
    let size = (n.max(1) as u64).next_power_of_two() as u32;
    let root = rec(&mut nodes, 0, n, size, cap);
    (nodes, root)
}

fn depths(nodes: &[DNode]) -> Vec<u32> {
    let mut depth = vec![0u32; nodes.len()];
    for idx in (0..nodes.len()).rev() {
        if nodes[idx].parent != NONE {
            depth[idx] = depth[nodes[idx].parent as usize] + 1;
        }
    }
    depth
}

/// Steps from each node up to their lowest common ancestor.
fn lca_steps(nodes: &[DNode], depth: &[u32], mut x: u32, mut y: u32) -> (u32, u32) {
    let (mut sx, mut sy) = (0, 0);
    while depth[x as usize] > depth[y as usize] {
        x = nodes[x as usize].parent;
        sx += 1;
    }
    while depth[y as usize] > depth[x as usize] {
        y = nodes[y as usize].parent;
        sy += 1;
    }
    while x != y {
        x = nodes[x as usize].parent;
        y = nodes[y as usize].parent;
        sx += 1;
        sy += 1;
    }
    (sx, sy)
}

fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Nested index inside one leaf: its own reference tree plus a second-level
/// halving tree truncated at (⌈log₂ m⌉)².  Inner-leaf stretches are built
/// from scratch; larger ones climb to the split ancestor collecting the
/// precomputed hanging hulls, like the outer Case 2 but without tables.
struct Inner {
    tree: HullTree<I64Kernel>,
    nodes: Vec<DNode>,
    depth: Vec<u32>,
    node_at: Vec<u32>,
    leaf_ranks: Vec<Vec<u32>>,
    pos_of_rank: Vec<u32>,
}

/// Per-leaf tables.  Block t covers local positions [t·bl, (t+1)·bl).
struct Leaf {
    bl: u32,
    block_ranks: Vec<Vec<u32>>,
    /// prefix[t]: hull of blocks 0..=t; suffix[t]: hull of blocks t...
    prefix: Vec<CompactHull>,
    suffix: Vec<CompactHull>,
    /// up_right[s]: hull of the path piece from past this leaf's end to the
    /// end of its s-th ancestor's span (EMPTY at s = 0); up_left mirrored on
    /// the low side.
    up_right: Vec<CompactHull>,
    up_left: Vec<CompactHull>,
    inner: Inner,
}

pub struct SubpathHullIndex {
    path: Vec<Point>,
    tree: HullTree<I64Kernel>,
    rank_of_pos: Vec<u32>,
    pos_of_rank: Vec<u32>,
    nodes: Vec<DNode>,
    depth: Vec<u32>,
    node_at: Vec<u32>,
    leaves: Vec<Leaf>,
    /// Inner reference-tree id -> leaf table index, for handle dispatch.
    inner_of_tree: HashMap<u32, u32>,
}

impl SubpathHullIndex {
    /// Builds the index over the given path (vertex order = path order).
    /// Vertices must be distinct, in bounds, and the path simple; simplicity
    /// is verified only up to [`SIMPLICITY_CHECK_LIMIT`] vertices.
    pub fn build(path: Vec<Point>) -> Result<Self> {
        let n = path.len();
        if n == 0 {
            return Err(Error::invalid("empty path"));
        }
        if let Some(p) = path.iter().find(|p| !p.in_bounds()) {
            return Err(Error::range(format!("path vertex {p} out of bounds")));
        }
        let mut sorted = path.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("path repeats the vertex {}", w[0])));
        }
        if n <= SIMPLICITY_CHECK_LIMIT {
            if let Some((i, j)) = path_crossing(&path) {
                return Err(Error::invalid(format!("path not simple: edges {i} and {j} meet")));
            }
        }

        let mut tree = HullTree::<I64Kernel>::new(sorted)?;
        let rank_of_pos: Vec<u32> =
            path.iter().map(|p| tree.rank_of(p).expect("vertex present")).collect();
        let mut pos_of_rank = vec![0u32; n];
        for (pos, &r) in rank_of_pos.iter().enumerate() {
            pos_of_rank[r as usize] = pos as u32;
        }

        let l = ceil_log2(n).max(1);
        let (mut nodes, _root) = halving_tree(n as u32, l * l);
        let depth = depths(&nodes);

        let mut node_at = vec![NONE; n];
        let mut leaf_nodes = Vec::new();
        for (idx, nd) in nodes.iter_mut().enumerate() {
            if nd.left == NONE {
                nd.leaf = leaf_nodes.len() as u32;
                leaf_nodes.push(idx as u32);
                for pos in nd.a..=nd.b {
                    node_at[pos as usize] = idx as u32;
                }
            }
        }

        // one pass in rank order fills every leaf's sorted rank list
        let mut leaf_ranks: Vec<Vec<u32>> = vec![Vec::new(); leaf_nodes.len()];
        for r in 0..n as u32 {
            let nd = &nodes[node_at[pos_of_rank[r as usize] as usize] as usize];
            leaf_ranks[nd.leaf as usize].push(r);
        }

        // children precede parents, so one forward pass builds all span hulls
        for idx in 0..nodes.len() {
            nodes[idx].hull = if nodes[idx].left == NONE {
                tree.build_from_ranks(&leaf_ranks[nodes[idx].leaf as usize])?
            } else {
                let (hl, hr) =
                    (nodes[nodes[idx].left as usize].hull, nodes[nodes[idx].right as usize].hull);
                tree.merge_hulls(&hl, &hr)?
            };
        }

        let mut leaves = Vec::with_capacity(leaf_nodes.len());
        let mut inner_of_tree = HashMap::new();
        for (li, &nid) in leaf_nodes.iter().enumerate() {
            let (a, b) = (nodes[nid as usize].a, nodes[nid as usize].b);
            let ranks = &leaf_ranks[li];

            let mut block_ranks: Vec<Vec<u32>> = vec![Vec::new(); ((b - a) / l + 1) as usize];
            for &r in ranks {
                block_ranks[((pos_of_rank[r as usize] - a) / l) as usize].push(r);
            }
            let blocks: Vec<CompactHull> = block_ranks
                .iter()
                .map(|br| tree.build_from_ranks(br))
                .collect::<Result<_>>()?;
            let mut prefix = blocks.clone();
            for t in 1..prefix.len() {
                prefix[t] = tree.merge_hulls(&prefix[t - 1], &blocks[t])?;
            }
            let mut suffix = blocks;
            for t in (0..suffix.len().saturating_sub(1)).rev() {
                suffix[t] = tree.merge_hulls(&suffix[t], &suffix[t + 1])?;
            }

            let mut up_right = vec![CompactHull::EMPTY];
            let mut up_left = vec![CompactHull::EMPTY];
            let mut z = nid;
            while nodes[z as usize].parent != NONE {
                let p = nodes[z as usize].parent;
                let (pl, pr) = (nodes[p as usize].left, nodes[p as usize].right);
                if pl == z {
                    let h = tree.merge_hulls(up_right.last().unwrap(), &nodes[pr as usize].hull)?;
                    up_right.push(h);
                    up_left.push(*up_left.last().unwrap());
                } else {
                    let g = tree.merge_hulls(&nodes[pl as usize].hull, up_left.last().unwrap())?;
                    up_left.push(g);
                    up_right.push(*up_right.last().unwrap());
                }
                z = p;
            }

            let inner = build_inner(&tree, &pos_of_rank, a, ranks)?;
            inner_of_tree.insert(inner.tree.id(), li as u32);
            leaves.push(Leaf { bl: l, block_ranks, prefix, suffix, up_right, up_left, inner });
        }

        Ok(SubpathHullIndex {
            path,
            tree,
            rank_of_pos,
            pos_of_rank,
            nodes,
            depth,
            node_at,
            leaves,
            inner_of_tree,
        })
    }

    pub fn n(&self) -> usize {
        self.path.len()
    }

    /// Vertex at path position i (0-based).
    pub fn vertex(&self, i: usize) -> Point {
        self.path[i]
    }

    /// Global rank of the vertex at path position i.
    pub fn rank_at(&self, i: usize) -> u32 {
        self.rank_of_pos[i]
    }

    /// The global reference tree (x-sorted vertices).
    pub fn tree(&self) -> &HullTree<I64Kernel> {
        &self.tree
    }

    /// Reference tree a result handle lives in: the global tree for queries
    /// spanning several leaves, a leaf's nested tree otherwise.
    pub fn tree_of(&self, h: &CompactHull) -> Result<&HullTree<I64Kernel>> {
        if h.tree_id() == self.tree.id() {
            return Ok(&self.tree);
        }
        match self.inner_of_tree.get(&h.tree_id()) {
            Some(&li) => Ok(&self.leaves[li as usize].inner.tree),
            None => Err(Error::Mismatch(format!(
                "hull over tree {} does not belong to this index",
                h.tree_id()
            ))),
        }
    }

    /// Hull cycle of a result handle, dispatching to the owning tree.
    pub fn enumerate(&self, arena: &mut Arena, h: &CompactHull) -> Result<Vec<Point>> {
        self.tree_of(h)?.enumerate_hull(arena, h)
    }

    /// Convex hull of path vertices i..=j (0-based, inclusive).
    pub fn subpath_hull(&self, arena: &mut Arena, i: usize, j: usize) -> Result<CompactHull> {
        let n = self.path.len();
        if i > j || j >= n {
            return Err(Error::range(format!("subpath ({i}, {j}) outside 0..{n}")));
        }
        let (i, j) = (i as u32, j as u32);
        let vn = self.node_at[i as usize];
        let un = self.node_at[j as usize];
        if vn == un {
            return self.inner_query(arena, vn, i, j);
        }
        let (sv, su) = lca_steps(&self.nodes, &self.depth, vn, un);
        let lv = &self.leaves[self.nodes[vn as usize].leaf as usize];
        let lu = &self.leaves[self.nodes[un as usize].leaf as usize];
        let h = self.leaf_suffix(arena, vn, lv, i)?;
        let left = self.tree.merge_hulls_in(arena, &h, &lv.up_right[(sv - 1) as usize])?;
        let g = self.leaf_prefix(arena, un, lu, j)?;
        let right = self.tree.merge_hulls_in(arena, &lu.up_left[(su - 1) as usize], &g)?;
        self.tree.merge_hulls_in(arena, &left, &right)
    }

    /// Hull of π(i ..= leaf end): fresh fragment of i's block, then the
    /// suffix table.
    fn leaf_suffix(&self, arena: &mut Arena, vn: u32, lv: &Leaf, i: u32) -> Result<CompactHull> {
        let a = self.nodes[vn as usize].a;
        let t = ((i - a) / lv.bl) as usize;
        let frag: Vec<u32> = lv.block_ranks[t]
            .iter()
            .copied()
            .filter(|&r| self.pos_of_rank[r as usize] >= i)
            .collect();
        let h = self.tree.build_from_ranks_in(arena, &frag)?;
        if t + 1 < lv.suffix.len() {
            self.tree.merge_hulls_in(arena, &h, &lv.suffix[t + 1])
        } else {
            Ok(h)
        }
    }

    /// Hull of π(leaf start ..= j), mirrored.
    fn leaf_prefix(&self, arena: &mut Arena, un: u32, lu: &Leaf, j: u32) -> Result<CompactHull> {
        let a = self.nodes[un as usize].a;
        let t = ((j - a) / lu.bl) as usize;
        let frag: Vec<u32> = lu.block_ranks[t]
            .iter()
            .copied()
            .filter(|&r| self.pos_of_rank[r as usize] <= j)
            .collect();
        let h = self.tree.build_from_ranks_in(arena, &frag)?;
        if t > 0 {
            self.tree.merge_hulls_in(arena, &lu.prefix[t - 1], &h)
        } else {
            Ok(h)
        }
    }

    /// Both ends in one leaf: same split-and-stitch on the nested index,
    /// with scratch fragments at inner-leaf granularity.
    fn inner_query(&self, arena: &mut Arena, vn: u32, i: u32, j: u32) -> Result<CompactHull> {
        let a = self.nodes[vn as usize].a;
        let inner = &self.leaves[self.nodes[vn as usize].leaf as usize].inner;
        let (li, lj) = (i - a, j - a);
        let x = inner.node_at[li as usize];
        let y = inner.node_at[lj as usize];
        let scratch = |arena: &mut Arena, node: u32, lo: u32, hi: u32| -> Result<CompactHull> {
            let frag: Vec<u32> = inner.leaf_ranks[inner.nodes[node as usize].leaf as usize]
                .iter()
                .copied()
                .filter(|&r| (lo..=hi).contains(&inner.pos_of_rank[r as usize]))
                .collect();
            inner.tree.build_from_ranks_in(arena, &frag)
        };
        if x == y {
            return scratch(arena, x, li, lj);
        }
        let (sx, sy) = lca_steps(&inner.nodes, &inner.depth, x, y);
        let mut h = scratch(arena, x, li, u32::MAX)?;
        let mut z = x;
        for _ in 0..sx - 1 {
            let p = inner.nodes[z as usize].parent;
            if inner.nodes[p as usize].left == z {
                let hang = inner.nodes[inner.nodes[p as usize].right as usize].hull;
                h = inner.tree.merge_hulls_in(arena, &h, &hang)?;
            }
            z = p;
        }
        let mut g = scratch(arena, y, 0, lj)?;
        z = y;
        for _ in 0..sy - 1 {
            let p = inner.nodes[z as usize].parent;
            if inner.nodes[p as usize].right == z {
                let hang = inner.nodes[inner.nodes[p as usize].left as usize].hull;
                g = inner.tree.merge_hulls_in(arena, &hang, &g)?;
            }
            z = p;
        }
        inner.tree.merge_hulls_in(arena, &h, &g)
    }

    /// Total nodes in the permanent pools (global tree plus nested trees):
    /// the O(n) space figure.
    pub fn epoch0_nodes(&self) -> usize {
        self.tree.pool_len()
            + self.leaves.iter().map(|l| l.inner.tree.pool_len()).sum::<usize>()
    }

    /// Decomposition spans with their precomputed hulls, leaves included.
    #[cfg(test)]
    pub(crate) fn psi_nodes(&self) -> impl Iterator<Item = (u32, u32, CompactHull)> + '_ {
        self.nodes.iter().map(|nd| (nd.a, nd.b, nd.hull))
    }

    #[cfg(test)]
    pub(crate) fn psi_counts(&self) -> (usize, usize) {
        (self.nodes.len(), self.leaves.iter().map(|l| l.inner.nodes.len()).sum())
    }
}

fn build_inner(
    tree: &HullTree<I64Kernel>,
    global_pos_of_rank: &[u32],
    a: u32,
    ranks: &[u32],
) -> Result<Inner> {
    let m = ranks.len();
    let verts: Vec<Point> = ranks.iter().map(|&r| *tree.point(r)).collect();
    let mut itree = HullTree::<I64Kernel>::new(verts)?;
    let pos_of_rank: Vec<u32> =
        ranks.iter().map(|&r| global_pos_of_rank[r as usize] - a).collect();

    let lm = ceil_log2(m).max(1);
    let (mut nodes, _root) = halving_tree(m as u32, lm * lm);
    let depth = depths(&nodes);

    let mut node_at = vec![NONE; m];
    let mut nleaves = 0;
    for (idx, nd) in nodes.iter_mut().enumerate() {
        if nd.left == NONE {
            nd.leaf = nleaves;
            nleaves += 1;
            for pos in nd.a..=nd.b {
                node_at[pos as usize] = idx as u32;
            }
        }
    }
    let mut leaf_ranks: Vec<Vec<u32>> = vec![Vec::new(); nleaves as usize];
    for r in 0..m as u32 {
        let nd = &nodes[node_at[pos_of_rank[r as usize] as usize] as usize];
        leaf_ranks[nd.leaf as usize].push(r);
    }
    for idx in 0..nodes.len() {
        nodes[idx].hull = if nodes[idx].left == NONE {
            itree.build_from_ranks(&leaf_ranks[nodes[idx].leaf as usize])?
        } else {
            let (hl, hr) =
                (nodes[nodes[idx].left as usize].hull, nodes[nodes[idx].right as usize].hull);
            itree.merge_hulls(&hl, &hr)?
        };
    }
    Ok(Inner { tree: itree, nodes, depth, node_at, leaf_ranks, pos_of_rank })
}

#[cfg(test)]
mod tests;
