//! Level structures on directed simple graphs.
//!
//! A `k`-leveled graph places the vertices on `k` ordered levels (level 1
//! at the bottom) so that every edge descends strictly. Automorphisms must
//! preserve both adjacency and levels. Leveled iso-classes index the gauge
//! product (two levels), its associativity formula (three levels), and the
//! bowtie sums (three levels, single middle vertex).

use super::{canon, DirectedGraph, GraphError, Violation, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeveledGraph {
    graph: DirectedGraph,
    level: [u8; MAX_VERTICES],
    k: u8,
}

impl LeveledGraph {
    /// `levels[v-1]` is the 1-based level of vertex `v`; `k` is the number
    /// of levels (empty ones allowed, so `k` may exceed every assignment).
    pub fn new(graph: DirectedGraph, levels: &[usize], k: usize) -> Result<Self, GraphError> {
        if levels.len() != graph.n() {
            return Err(GraphError::MissingLevel(levels.len() + 1));
        }
        let mut level = [0u8; MAX_VERTICES];
        for (v, &l) in levels.iter().enumerate() {
            if l == 0 || l > k {
                return Err(GraphError::BadLevel(l, k));
            }
            level[v] = l as u8;
        }
        Ok(LeveledGraph {
            graph,
            level,
            k: k as u8,
        })
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// 1-based level of 1-based vertex `v`.
    pub fn level_of(&self, v: usize) -> usize {
        self.level[v - 1] as usize
    }

    /// Vertices per level, bottom first.
    pub fn shape(&self) -> Vec<usize> {
        let mut shape = vec![0usize; self.k()];
        for v in 0..self.n() {
            shape[self.level[v] as usize - 1] += 1;
        }
        shape
    }

    /// 1-based vertices sitting on the given 1-based level.
    pub fn vertices_on(&self, l: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.level_of(v) == l).collect()
    }

    /// Level-structure violations on top of the underlying graph's own
    /// (which are checked per flavor by the caller).
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (s, d) in self.graph.edges() {
            if self.level_of(s) <= self.level_of(d) {
                out.push(Violation::LevelOrder(s, d));
            }
        }
        out
    }

    /// True when each level carries exactly one vertex and `k = n`.
    pub fn is_total(&self) -> bool {
        self.k() == self.n() && self.shape().iter().all(|&s| s == 1)
    }
}

/// Order of the level-preserving automorphism group.
pub fn leveled_aut_order(lg: &LeveledGraph) -> u64 {
    let init: Vec<u64> = (0..lg.n()).map(|v| lg.level[v] as u64).collect();
    leveled_canonical_by_colors(&lg.graph, &init).1
}

/// Brute-force oracle for [`leveled_aut_order`].
pub fn leveled_aut_order_brute(lg: &LeveledGraph) -> u64 {
    let target = canon::encode(&lg.graph);
    let mut count = 0u64;
    for perm in canon::permutations(lg.n()) {
        let preserves_levels = (0..lg.n()).all(|v| lg.level[perm[v]] == lg.level[v]);
        if preserves_levels && canon::encode(&lg.graph.relabel0(&perm)) == target {
            count += 1;
        }
    }
    count
}

/// A leveled iso-class: the canonical representative (vertices labeled
/// bottom level first) and its level-preserving automorphism order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeveledClass {
    pub leveled: LeveledGraph,
    pub aut: u64,
}

/// All iso-classes of leveled graphs with the given level sizes (bottom
/// first). With `connected` set, only connected classes are kept. Vertices
/// of the representatives are labeled level by level from the bottom.
pub fn enumerate_leveled(shape: &[usize], connected: bool) -> Result<Vec<LeveledClass>, GraphError> {
    let total: usize = shape.iter().sum();
    if total == 0 || total > MAX_VERTICES {
        return Err(GraphError::BadVertexCount(total));
    }
    let k = shape.len();
    // 0-based vertex -> 1-based level, bottom block first.
    let mut level = Vec::with_capacity(total);
    for (idx, &size) in shape.iter().enumerate() {
        level.extend(std::iter::repeat(idx + 1).take(size));
    }
    // Admissible edges descend strictly through levels.
    let pairs: Vec<(usize, usize)> = (0..total)
        .flat_map(|u| (0..total).map(move |v| (u, v)))
        .filter(|&(u, v)| level[u] > level[v])
        .collect();
    assert!(pairs.len() < 30, "leveled enumeration is desk-scale");

    let mut seen: std::collections::HashMap<DirectedGraph, u64> = std::collections::HashMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut g = DirectedGraph::edgeless(total)?;
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                g.set_edge0(u, v);
            }
        }
        if connected && !g.is_connected() {
            continue;
        }
        let (canon_graph, aut) = leveled_canonical(&g, &level);
        seen.entry(canon_graph).or_insert(aut);
    }
    let mut out: Vec<LeveledClass> = seen
        .into_iter()
        .map(|(graph, aut)| {
            let lg = LeveledGraph::new(graph, &level, k).expect("canonical relabeling is in-level");
            LeveledClass { leveled: lg, aut }
        })
        .collect();
    out.sort_by(|a, b| a.leveled.graph.cmp(&b.leveled.graph));
    Ok(out)
}

/// Canonical representative under level-preserving relabelings, plus the
/// automorphism order (the number of relabelings reaching the minimum).
fn leveled_canonical(g: &DirectedGraph, level: &[usize]) -> (DirectedGraph, u64) {
    let init: Vec<u64> = level.iter().map(|&l| l as u64).collect();
    leveled_canonical_by_colors(g, &init)
}

fn leveled_canonical_by_colors(g: &DirectedGraph, init: &[u64]) -> (DirectedGraph, u64) {
    let colors = canon::refine_colors(g, init);
    let mut best: Option<[u16; MAX_VERTICES]> = None;
    let mut best_graph = *g;
    let mut aut = 0u64;
    canon::for_each_class_perm(&colors, |perm| {
        let relabeled = g.relabel0(perm);
        let enc = canon::encode(&relabeled);
        match &best {
            Some(b) if enc > *b => {}
            Some(b) if enc == *b => aut += 1,
            _ => {
                best = Some(enc);
                best_graph = relabeled;
                aut = 1;
            }
        }
    });
    (best_graph, aut)
}

/// A 3-leveled graph with exactly one vertex on the middle level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BowtieGraph(LeveledGraph);

impl BowtieGraph {
    pub fn new(lg: LeveledGraph) -> Result<Self, GraphError> {
        if lg.k() != 3 {
            return Err(GraphError::BadLevel(lg.k(), 3));
        }
        let middles = lg.vertices_on(2).len();
        if middles != 1 {
            return Err(GraphError::BadLevel(2, 3));
        }
        Ok(BowtieGraph(lg))
    }

    pub fn leveled(&self) -> &LeveledGraph {
        &self.0
    }

    /// The unique middle vertex, 1-based.
    pub fn middle(&self) -> usize {
        self.0.vertices_on(2)[0]
    }
}
