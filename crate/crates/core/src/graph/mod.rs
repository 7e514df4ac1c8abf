//! Directed simple graphs and their variants.
//!
//! A [`DirectedGraph`] is a digraph on vertices `1..=n` whose edges point
//! from an upper vertex down to a lower one with respect to a global flow.
//! The simple connected acyclic ones form the basis of the graph operad;
//! relaxations (non-connected, multiple edges, level structures) are the
//! other flavors handled here.
//!
//! The representation deliberately admits invalid states (2-cycles, loops,
//! disconnected graphs): parsing and construction only bounds-check, and
//! [`DirectedGraph::validate`] reports which flavor invariants hold.

mod canon;
mod enumerate;
mod invariants;
mod leveled;
mod text;

pub use canon::{
    aut_order, aut_order_brute, canonical_decorated, canonical_form, CanonicalForm, DecoratedCanon,
};
pub use enumerate::{
    enumerate_labeled, enumerate_multi, iso_classes, labeled_count, labeled_count_edge_filter,
    oriented_count, IsoClass,
};
pub use invariants::{levelization_count, linear_extension_count, linear_extension_count_brute};
pub use leveled::{
    enumerate_leveled, leveled_aut_order, leveled_aut_order_brute, BowtieGraph, LeveledClass,
    LeveledGraph,
};
pub use text::{parse_graph, GraphJson, ParseError};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Hard representation limit on vertex counts. Everything in this crate is
/// desk-scale; twelve vertices is comfortably past every cap and truncation
/// the library exposes.
pub const MAX_VERTICES: usize = 12;

/// The graph flavors the operad suite distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Connected simple DAGs: the operad of directed simple graphs.
    #[serde(rename = "connected-simple")]
    ConnectedSimple,
    /// Simple DAGs, connectivity not required.
    #[serde(rename = "nc-simple")]
    NcSimple,
    /// Connected multigraphs: parallel edges allowed, antiparallel pairs not.
    #[serde(rename = "multi")]
    Multi,
}

impl Flavor {
    pub fn requires_connected(self) -> bool {
        matches!(self, Flavor::ConnectedSimple | Flavor::Multi)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::ConnectedSimple => "connected-simple",
            Flavor::NcSimple => "nc-simple",
            Flavor::Multi => "multi",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    BadVertexCount(usize),
    #[error("vertex index {0} outside 1..={1}")]
    BadVertexIndex(usize, usize),
    #[error("enumeration cap exceeded: n = {requested} > cap {cap} ({which})")]
    CapExceeded {
        which: &'static str,
        cap: usize,
        requested: usize,
    },
    #[error("vertex {0} has no level assignment")]
    MissingLevel(usize),
    #[error("level {0} outside 1..={1}")]
    BadLevel(usize, usize),
}

/// Named invariant violations reported by [`DirectedGraph::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// A vertex with an edge to itself.
    SelfLoop(usize),
    /// Both `i -> j` and `j -> i` are present.
    AntiparallelPair(usize, usize),
    /// The edge relation has a directed cycle, so no global flow exists.
    Acyclicity,
    /// The named vertex is not reachable from vertex 1 in the underlying
    /// undirected graph.
    Connectivity(usize),
    /// An edge does not descend strictly through the level structure.
    LevelOrder(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Violation::AntiparallelPair(i, j) => {
                write!(f, "antiparallel pair between vertices {i} and {j}")
            }
            Violation::Acyclicity => write!(f, "acyclicity: the edge relation has a cycle"),
            Violation::Connectivity(v) => write!(f, "connectivity: vertex {v} is isolated"),
            Violation::LevelOrder(u, v) => {
                write!(f, "level order: edge {u}>{v} does not descend strictly")
            }
        }
    }
}

/// A labeled directed graph on vertices `1..=n`, stored as one successor
/// bitmask per vertex. Internally vertices are `0..n`; the public API is
/// 1-based to match the text formats.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: u8,
    out: [u16; MAX_VERTICES],
}

impl DirectedGraph {
    /// A graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        Ok(DirectedGraph {
            n: n as u8,
            out: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from 1-based `(src, dst)` edge pairs. Duplicate edges
    /// collapse; invalid *invariants* (loops, 2-cycles, disconnection) are
    /// representable and only reported by [`validate`](Self::validate).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n)?;
        for &(src, dst) in edges {
            if src == 0 || src > n {
                return Err(GraphError::BadVertexIndex(src, n));
            }
            if dst == 0 || dst > n {
                return Err(GraphError::BadVertexIndex(dst, n));
            }
            g.out[src - 1] |= 1 << (dst - 1);
        }
        Ok(g)
    }

    /// The single-vertex graph: the operad unit.
    pub fn single() -> Self {
        Self::edgeless(1).unwrap()
    }

    /// The descending chain on `n` vertices: `1 > 2 > ... > n`.
    pub fn chain(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Successor bitmask of 0-based vertex `v`.
    pub(crate) fn succ(&self, v: usize) -> u16 {
        self.out[v]
    }

    /// Predecessor bitmask of 0-based vertex `v`.
    pub(crate) fn pred(&self, v: usize) -> u16 {
        let mut mask = 0u16;
        for u in 0..self.n() {
            if self.out[u] >> v & 1 == 1 {
                mask |= 1 << u;
            }
        }
        mask
    }

    pub(crate) fn set_edge0(&mut self, src: usize, dst: usize) {
        self.out[src] |= 1 << dst;
    }

    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        src >= 1
            && src <= self.n()
            && dst >= 1
            && dst <= self.n()
            && self.out[src - 1] >> (dst - 1) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.out[..self.n()]
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v - 1].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.pred(v - 1).count_ones() as usize
    }

    /// Edges as 1-based pairs in ascending `(src, dst)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for src in 0..self.n() {
            let mut m = self.out[src];
            while m != 0 {
                let dst = m.trailing_zeros() as usize;
                out.push((src + 1, dst + 1));
                m &= m - 1;
            }
        }
        out
    }

    /// Applies a 0-based relabeling: vertex `v` becomes `perm[v]`.
    pub(crate) fn relabel0(&self, perm: &[usize]) -> DirectedGraph {
        let mut g = DirectedGraph {
            n: self.n,
            out: [0; MAX_VERTICES],
        };
        for u in 0..self.n() {
            let mut m = self.out[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                g.out[perm[u]] |= 1 << perm[v];
                m &= m - 1;
            }
        }
        g
    }

    /// Applies a 1-based relabeling permutation (vertex `v` becomes
    /// `perm[v-1]`).
    pub fn relabel(&self, perm: &[usize]) -> DirectedGraph {
        let perm0: Vec<usize> = perm.iter().map(|&p| p - 1).collect();
        self.relabel0(&perm0)
    }

    /// True when the edge relation admits a global top-to-bottom flow.
    pub fn is_acyclic(&self) -> bool {
        // Kahn peeling on bitmasks.
        let n = self.n();
        let mut alive: u16 = if n == 16 { !0 } else { (1 << n) - 1 };
        loop {
            if alive == 0 {
                return true;
            }
            let mut removed = false;
            let mut m = alive;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.pred(v) & alive == 0 {
                    alive &= !(1 << v);
                    removed = true;
                }
            }
            if !removed {
                return false;
            }
        }
    }

    /// True when the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen: u16 = 1;
        loop {
            let mut next = seen;
            let mut m = seen;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.out[v] | self.pred(v);
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == n
    }

    /// Vertex sets of the undirected connected components, each a bitmask,
    /// ordered by lowest vertex.
    pub(crate) fn components(&self) -> Vec<u16> {
        let n = self.n();
        let mut left: u16 = if n == 16 { !0 } else { (1 << n) - 1 };
        let mut comps = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut seen: u16 = 1 << start;
            loop {
                let mut next = seen;
                let mut m = seen;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= self.out[v] | self.pred(v);
                }
                if next == seen {
                    break;
                }
                seen = next;
            }
            comps.push(seen);
            left &= !seen;
        }
        comps
    }

    /// Checks the invariants of the given flavor, reporting every violated
    /// one. An empty list means the graph is a valid element of the flavor.
    pub fn validate(&self, flavor: Flavor) -> Vec<Violation> {
        let mut violations = Vec::new();
        for v in 0..self.n() {
            if self.out[v] >> v & 1 == 1 {
                violations.push(Violation::SelfLoop(v + 1));
            }
        }
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.out[i] >> j & 1 == 1 && self.out[j] >> i & 1 == 1 {
                    violations.push(Violation::AntiparallelPair(i + 1, j + 1));
                }
            }
        }
        if !self.is_acyclic() {
            violations.push(Violation::Acyclicity);
        }
        if flavor.requires_connected() && !self.is_connected() {
            let comps = self.components();
            // Name one vertex outside the first component.
            if let Some(c) = comps.get(1) {
                violations.push(Violation::Connectivity(c.trailing_zeros() as usize + 1));
            }
        }
        violations
    }

    pub fn is_valid(&self, flavor: Flavor) -> bool {
        self.validate(flavor).is_empty()
    }

    /// Longest-path leveling: sinks at level 1, every edge descends
    /// strictly. Returns 1-based levels per vertex; `None` if cyclic.
    pub fn flow_levels(&self) -> Option<Vec<usize>> {
        if !self.is_acyclic() {
            return None;
        }
        let n = self.n();
        let mut level = vec![0usize; n];
        // Vertices in reverse topological order (sinks first).
        let mut done: u16 = 0;
        while (done.count_ones() as usize) < n {
            for v in 0..n {
                if done >> v & 1 == 1 {
                    continue;
                }
                if self.out[v] & !done == 0 {
                    let mut lv = 1;
                    let mut m = self.out[v];
                    while m != 0 {
                        let w = m.trailing_zeros() as usize;
                        m &= m - 1;
                        lv = lv.max(level[w] + 1);
                    }
                    level[v] = lv;
                    done |= 1 << v;
                }
            }
        }
        Some(level)
    }

    /// The disjoint union, labels of `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &DirectedGraph) -> Result<DirectedGraph, GraphError> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        let mut g = DirectedGraph {
            n: n as u8,
            out: [0; MAX_VERTICES],
        };
        g.out[..self.n()].copy_from_slice(&self.out[..self.n()]);
        for v in 0..other.n() {
            g.out[self.n() + v] = other.out[v] << self.n();
        }
        Ok(g)
    }
}

impl PartialOrd for DirectedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The deterministic output order used everywhere: vertex count first, then
/// the sorted edge list lexicographically.
impl Ord for DirectedGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.edges().cmp(&other.edges()))
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_graph(self, None))
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_graph(self, None))
    }
}

/// A connected multigraph: parallel edges allowed, antiparallel pairs and
/// cycles not. Edge multiplicities are stored per ordered support pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiGraph {
    n: usize,
    mult: std::collections::BTreeMap<(usize, usize), u32>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        let mut mult = std::collections::BTreeMap::new();
        for &(src, dst, m) in edges {
            if src == 0 || src > n {
                return Err(GraphError::BadVertexIndex(src, n));
            }
            if dst == 0 || dst > n {
                return Err(GraphError::BadVertexIndex(dst, n));
            }
            if m > 0 {
                *mult.entry((src, dst)).or_insert(0) += m;
            }
        }
        Ok(MultiGraph { n, mult })
    }

    pub fn single() -> Self {
        Self::new(1, &[]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total edge count with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum()
    }

    pub fn multiplicity(&self, src: usize, dst: usize) -> u32 {
        self.mult.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// Support pairs with their multiplicities, ascending.
    pub fn support(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.mult.iter().map(|(&e, &m)| (e, m))
    }

    /// The simple graph obtained by forgetting multiplicities.
    pub fn support_graph(&self) -> DirectedGraph {
        let edges: Vec<_> = self.mult.keys().copied().collect();
        DirectedGraph::new(self.n, &edges).expect("support of a valid multigraph")
    }

    pub fn validate(&self) -> Vec<Violation> {
        let support = self.support_graph();
        support.validate(Flavor::ConnectedSimple)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        let edges: Vec<_> = self
            .mult
            .iter()
            .map(|(&(s, d), &m)| (perm[s - 1], perm[d - 1], m))
            .collect();
        MultiGraph::new(self.n, &edges).expect("relabeling preserves bounds")
    }

    /// Canonical form under vertex relabeling: the minimum relabeled
    /// multigraph over permutations that are automorphisms of the support
    /// canonicalization classes. Exact search, desk scale.
    pub fn canonical(&self) -> MultiGraph {
        let mut best: Option<MultiGraph> = None;
        let perms = crate::graph::canon::candidate_perms_for_multigraph(self);
        for p in perms {
            let cand = self.relabel(&p);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("at least the identity permutation")
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if !self.mult.is_empty() {
            let parts: Vec<String> = self
                .mult
                .iter()
                .map(|(&(s, d), &m)| format!("{s}>{d}x{m}"))
                .collect();
            write!(f, ";e={}", parts.join(","))?;
        }
        Ok(())
    }
}

pub use text::{format_graph, to_dot, to_json};
