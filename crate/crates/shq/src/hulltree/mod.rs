//! Reference interval trees and persistent compact interval trees.
//!
//! A [`HullTree`] owns an x-sorted (lexicographic) vertex array and a
//! reference tree over its ranks: a complete binary tree, padded to a power
//! of two, that exists only as rank arithmetic (no sentinel nodes are
//! materialized).  Convex hull chains over subsets of the vertices are stored
//! as compact interval trees: one node per hull edge, shaped so that each
//! node's edge crosses its reference node's central gap and every parent is
//! the nearest such ancestor.  That shape is unique for a given edge set, so
//! persistent merges produce bit-identical structures regardless of history.
//!
//! Nodes live in one of two pools: the tree's own epoch-0 pool (index-owned,
//! never reset) or a caller-provided [`Arena`] for query-time scratch.  All
//! structures are immutable once built; merges copy only root-to-cut paths.

mod build;
mod merge;
mod nav;
mod ops;
mod pair;


use crate::geom::Kernel;
use crate::{Error, Result};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

/// Node id: low 31 bits index a pool, bit 31 selects arena vs epoch-0 pool,
/// all-ones means "no node".
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Nid(u32);

impl Nid {
    pub(crate) const NONE: Nid = Nid(u32::MAX);
    const ARENA_BIT: u32 = 1 << 31;

    fn pool0(i: usize) -> Nid {
        debug_assert!(i < Self::ARENA_BIT as usize - 1);
        Nid(i as u32)
    }
    fn arena(i: usize) -> Nid {
        debug_assert!(i < Self::ARENA_BIT as usize - 1);
        Nid(i as u32 | Self::ARENA_BIT)
    }
    pub(crate) fn is_none(self) -> bool {
        self == Self::NONE
    }
    fn in_arena(self) -> bool {
        self.0 & Self::ARENA_BIT != 0 && !self.is_none()
    }
    fn idx(self) -> usize {
        (self.0 & !Self::ARENA_BIT) as usize
    }
}

impl std::fmt::Debug for Nid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_none() {
            write!(f, "-")
        } else if self.in_arena() {
            write!(f, "a{}", self.idx())
        } else {
            write!(f, "p{}", self.idx())
        }
    }
}

/// One hull edge (by endpoint ranks, a < b) plus compact-tree children.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Node {
    pub a: u32,
    pub b: u32,
    pub left: Nid,
    pub right: Nid,
}

#[derive(Default)]
pub(crate) struct Pool {
    nodes: Vec<Node>,
}

/// Work counters: `visits` counts node reads and reference-tree descent
/// steps, `allocs` counts fresh nodes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    pub visits: u64,
    pub allocs: u64,
}

impl Counters {
    pub fn total(&self) -> u64 {
        self.visits + self.allocs
    }
}

/// Query-time node arena.  Epochs make stale handles detectable: a
/// `CompactHull` built here is readable only until the next [`reset`], and
/// epoch 0 is reserved for index-owned nodes.
///
/// [`reset`]: Arena::reset
pub struct Arena {
    epoch: u32,
    nodes: Vec<Node>,
    pub counters: Counters,
}

impl Default for Arena {
    fn default() -> Self {
        Arena::new()
    }
}

impl Arena {
    pub fn new() -> Arena {
        Arena { epoch: 1, nodes: Vec::new(), counters: Counters::default() }
    }

    /// Invalidate every hull built in this arena and reclaim its space.
    pub fn reset(&mut self) {
        self.epoch += 1;
        self.nodes.clear();
    }

    pub fn epoch(&self) -> u32 {
        self.epoch
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Handle to one convex hull stored as two compact interval trees.
///
/// `lo`/`hi` are the ranks of the lexicographic extreme vertices (both
/// `NONE_RANK` for the empty hull); the upper chain runs from `lo` to `hi`
/// on the high side in the sheared plane, the lower chain on the low side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CompactHull {
    tree: u32,
    epoch: u32,
    lo: u32,
    hi: u32,
    upper: Nid,
    lower: Nid,
}

pub(crate) const NONE_RANK: u32 = u32::MAX;

impl CompactHull {
    pub const EMPTY: CompactHull = CompactHull {
        tree: u32::MAX,
        epoch: 0,
        lo: NONE_RANK,
        hi: NONE_RANK,
        upper: Nid::NONE,
        lower: Nid::NONE,
    };

    pub fn is_empty(&self) -> bool {
        self.lo == NONE_RANK
    }

    pub fn is_singleton(&self) -> bool {
        !self.is_empty() && self.lo == self.hi
    }

    /// Rank of the lexicographic minimum vertex.
    pub fn lo_rank(&self) -> u32 {
        self.lo
    }

    pub fn hi_rank(&self) -> u32 {
        self.hi
    }

    pub fn epoch(&self) -> u32 {
        self.epoch
    }

    /// Id of the [`HullTree`] this handle belongs to.
    pub fn tree_id(&self) -> u32 {
        self.tree
    }
}

static NEXT_TREE_ID: AtomicU32 = AtomicU32::new(0);

/// Reference tree plus vertex array plus the epoch-0 node pool.
pub struct HullTree<K: Kernel> {
    id: u32,
    verts: Vec<K::Pt>,
    nbits: u32,
    pool: Pool,
    pub build_counters: Counters,
}

impl<K: Kernel> HullTree<K> {
    /// `verts` must be strictly increasing in the canonical (lex) order.
    pub fn new(verts: Vec<K::Pt>) -> Result<Self> {
        if verts.is_empty() {
            return Err(Error::invalid("reference tree needs at least one vertex"));
        }
        for w in verts.windows(2) {
            if K::cmp_xy(&w[0], &w[1]) != std::cmp::Ordering::Less {
                return Err(Error::invalid("vertices not strictly x-sorted"));
            }
        }
        let nbits = usize::BITS - (verts.len() - 1).leading_zeros();
        let id = NEXT_TREE_ID.fetch_add(1, AtomicOrdering::Relaxed);
        Ok(HullTree { id, verts, nbits, pool: Pool::default(), build_counters: Counters::default() })
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    /// Padded leaf count of the reference tree.
    pub fn padded_n(&self) -> u32 {
        1 << self.nbits
    }

    pub fn point(&self, rank: u32) -> &K::Pt {
        &self.verts[rank as usize]
    }

    pub fn rank_of(&self, p: &K::Pt) -> Option<u32> {
        self.verts.binary_search_by(|q| K::cmp_xy(q, p)).ok().map(|i| i as u32)
    }

    /// Number of epoch-0 nodes (index space).
    pub fn pool_len(&self) -> usize {
        self.pool.nodes.len()
    }

    /// Heap id of the lowest common ancestor of leaves i and j; leaves are
    /// `N + rank`, the root is 1, and the answer drops the bits below the
    /// most significant differing one.
    pub fn reference_lca(&self, i: u32, j: u32) -> u32 {
        debug_assert!(i < self.padded_n() && j < self.padded_n());
        let x = self.padded_n() + i;
        let y = self.padded_n() + j;
        let d = x ^ y;
        if d == 0 {
            return x;
        }
        x >> (u32::BITS - d.leading_zeros())
    }

    /// Depth of the reference node at which an edge (a, b) is stored: the
    /// level of lca(a, b), root = 0.  Shallower edges are compact-tree
    /// ancestors of deeper ones when their spans nest.
    pub(crate) fn edge_level(&self, a: u32, b: u32) -> u32 {
        u32::BITS - 1 - self.reference_lca(a, b).leading_zeros()
    }

    /// Zero-allocation hull of one vertex.
    pub fn singleton(&self, rank: u32) -> CompactHull {
        assert!((rank as usize) < self.verts.len());
        CompactHull {
            tree: self.id,
            epoch: 0,
            lo: rank,
            hi: rank,
            upper: Nid::NONE,
            lower: Nid::NONE,
        }
    }

    pub(crate) fn check_handle(&self, h: &CompactHull, arena_epoch: u32) -> Result<()> {
        if h.is_empty() {
            return Ok(());
        }
        if h.tree != self.id {
            return Err(Error::Mismatch(format!(
                "hull belongs to reference tree {} not {}",
                h.tree, self.id
            )));
        }
        if h.epoch != 0 && h.epoch != arena_epoch {
            return Err(Error::Mismatch(format!(
                "hull from arena epoch {} read in epoch {}",
                h.epoch, arena_epoch
            )));
        }
        Ok(())
    }
}

/// Which pools a traversal can see, and where it allocates.
pub(crate) enum Pools<'a> {
    /// Index construction: reads and writes the epoch-0 pool.
    Build(&'a mut Pool),
    /// Queries: reads epoch-0, reads and writes the arena.
    Query { main: &'a Pool, arena: &'a mut Arena },
}

/// Borrowed traversal state: vertex array, rank arithmetic, pools, counters.
pub(crate) struct Frame<'a, K: Kernel> {
    pub verts: &'a [K::Pt],
    pub nbits: u32,
    pools: Pools<'a>,
    pub visits: u64,
    pub allocs: u64,
}

impl<'a, K: Kernel> Frame<'a, K> {
    /// Split-borrows the tree so build counters stay writable alongside.
    pub fn for_build(tree: &'a mut HullTree<K>) -> (Frame<'a, K>, &'a mut Counters) {
        let HullTree { verts, nbits, pool, build_counters, .. } = tree;
        let f = Frame { verts, nbits: *nbits, pools: Pools::Build(pool), visits: 0, allocs: 0 };
        (f, build_counters)
    }

    pub fn for_query(tree: &'a HullTree<K>, arena: &'a mut Arena) -> Frame<'a, K> {
        Frame {
            verts: &tree.verts,
            nbits: tree.nbits,
            pools: Pools::Query { main: &tree.pool, arena },
            visits: 0,
            allocs: 0,
        }
    }

    /// Epoch new hulls built through this frame should carry.
    pub fn alloc_epoch(&self) -> u32 {
        match &self.pools {
            Pools::Build(_) => 0,
            Pools::Query { arena, .. } => arena.epoch,
        }
    }

    /// Merge the frame's counters into the right accumulator.
    pub fn finish(self, tree_counters: Option<&mut Counters>) {
        let c = Counters { visits: self.visits, allocs: self.allocs };
        match self.pools {
            Pools::Build(_) => {
                if let Some(t) = tree_counters {
                    t.visits += c.visits;
                    t.allocs += c.allocs;
                }
            }
            Pools::Query { arena, .. } => {
                arena.counters.visits += c.visits;
                arena.counters.allocs += c.allocs;
            }
        }
    }

    pub fn get(&mut self, id: Nid) -> Node {
        debug_assert!(!id.is_none());
        self.visits += 1;
        match &self.pools {
            Pools::Build(p) => p.nodes[id.idx()],
            Pools::Query { main, arena } => {
                if id.in_arena() {
                    arena.nodes[id.idx()]
                } else {
                    main.nodes[id.idx()]
                }
            }
        }
    }

    pub fn alloc(&mut self, nd: Node) -> Nid {
        debug_assert!(nd.a < nd.b);
        self.allocs += 1;
        match &mut self.pools {
            Pools::Build(p) => {
                debug_assert!(!nd.left.in_arena() && !nd.right.in_arena());
                p.nodes.push(nd);
                Nid::pool0(p.nodes.len() - 1)
            }
            Pools::Query { arena, .. } => {
                arena.nodes.push(nd);
                Nid::arena(arena.nodes.len() - 1)
            }
        }
    }

    /// Count a reference-tree descent step that touches no pool node.
    pub fn tick(&mut self) {
        self.visits += 1;
    }

    pub fn pt(&self, rank: u32) -> &'a K::Pt {
        &self.verts[rank as usize]
    }

    pub fn padded_n(&self) -> u32 {
        1 << self.nbits
    }

    pub fn lca(&self, i: u32, j: u32) -> u32 {
        let x = self.padded_n() + i;
        let y = self.padded_n() + j;
        let d = x ^ y;
        if d == 0 {
            return x;
        }
        x >> (u32::BITS - d.leading_zeros())
    }

    pub fn edge_level(&self, a: u32, b: u32) -> u32 {
        u32::BITS - 1 - self.lca(a, b).leading_zeros()
    }

    /// Build a hull handle; callers supply chain roots and extremes.
    pub fn hull(&self, tree_id: u32, lo: u32, hi: u32, upper: Nid, lower: Nid) -> CompactHull {
        CompactHull { tree: tree_id, epoch: self.alloc_epoch(), lo, hi, upper, lower }
    }
}

/// Upper or lower chain selector.  Predicates flip so chain code is shared:
/// `above` means "outside the hull on this chain's side".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Side {
    Upper,
    Lower,
}

impl Side {
    /// Reorient a height comparison so `Greater` = farther out on this side.
    pub fn out(self, o: std::cmp::Ordering) -> std::cmp::Ordering {
        match self {
            Side::Upper => o,
            Side::Lower => o.reverse(),
        }
    }
}
