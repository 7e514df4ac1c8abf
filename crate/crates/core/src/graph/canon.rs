//! Canonical forms, automorphism groups, and decorated iso-classes.
//!
//! Two labeled graphs are isomorphic exactly when their canonical forms are
//! equal. The algorithm is a degree-profile color refinement followed by
//! exact backtracking over the permutations the refinement leaves open;
//! at the scale this crate works at (a dozen vertices) the residual search
//! spaces are tiny. Correctness is cross-checked against brute force over
//! all `n!` permutations in the tests.

use super::{DirectedGraph, MultiGraph, MAX_VERTICES};

/// A canonical representative together with the relabeling that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: DirectedGraph,
    /// 1-based witness: input vertex `v` carries canonical label
    /// `witness[v-1]`.
    pub witness: Vec<usize>,
}

/// A canonical decorated representative. `sign` is the Koszul sign of the
/// relabeling restricted to odd-degree decorations; it is `0` when the
/// class is killed by an automorphism acting with sign `-1` (the graded
/// analogue of `x ∧ x = 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedCanon {
    pub graph: DirectedGraph,
    pub deco: Vec<u8>,
    pub sign: i8,
}

/// Iterated color refinement. Starts from the given vertex invariants and
/// refines by in/out neighbor color multisets until stable. The returned
/// colors are class indices whose order is itself isomorphism-invariant.
pub(super) fn refine_colors(g: &DirectedGraph, init: &[u64]) -> Vec<u32> {
    let n = g.n();
    // Rank the initial invariants.
    let mut colors: Vec<u32> = rank(init);
    loop {
        let mut keys: Vec<(u32, Vec<u32>, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut outs: Vec<u32> = Vec::new();
            let mut m = g.succ(v);
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                outs.push(colors[w]);
            }
            outs.sort_unstable();
            let mut ins: Vec<u32> = Vec::new();
            let mut m = g.pred(v);
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                ins.push(colors[w]);
            }
            ins.sort_unstable();
            keys.push((colors[v], outs, ins));
        }
        let new_colors = rank(&keys);
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

/// Ranks values by sorted order of their keys: equal keys share a rank.
fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

/// Initial invariant: decoration (or 0) plus in/out degrees.
fn init_invariants(g: &DirectedGraph, deco: Option<&[u8]>) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let d = deco.map_or(0, |d| d[v] as u64 + 1);
            d << 32 | (g.succ(v).count_ones() as u64) << 16 | g.pred(v).count_ones() as u64
        })
        .collect()
}

/// Runs `f` over every 0-based relabeling `perm` (vertex `v` goes to
/// position `perm[v]`) compatible with the color classes: positions are
/// blocked by ascending color, all orders within a class are visited.
pub(super) fn for_each_class_perm(colors: &[u32], mut f: impl FnMut(&[usize])) {
    let n = colors.len();
    let ncolors = colors.iter().max().map_or(0, |&c| c as usize + 1);
    // Position offset of each color block.
    let mut counts = vec![0usize; ncolors];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let mut offset = vec![0usize; ncolors];
    let mut acc = 0;
    for c in 0..ncolors {
        offset[c] = acc;
        acc += counts[c];
    }
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        n: usize,
        colors: &[u32],
        offset: &[usize],
        counts: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if v == n {
            f(perm);
            return;
        }
        let c = colors[v] as usize;
        for pos in offset[c]..offset[c] + counts[c] {
            if !used[pos] {
                used[pos] = true;
                perm[v] = pos;
                rec(v + 1, n, colors, offset, counts, perm, used, f);
                used[pos] = false;
            }
        }
    }
    rec(0, n, colors, &offset, &counts, &mut perm, &mut used, &mut f);
}

pub(super) fn encode(g: &DirectedGraph) -> [u16; MAX_VERTICES] {
    let mut rows = [0u16; MAX_VERTICES];
    for v in 0..g.n() {
        rows[v] = g.succ(v);
    }
    rows
}

/// Canonical form of a plain labeled graph.
pub fn canonical_form(g: &DirectedGraph) -> CanonicalForm {
    let colors = refine_colors(g, &init_invariants(g, None));
    let mut best: Option<([u16; MAX_VERTICES], Vec<usize>)> = None;
    for_each_class_perm(&colors, |perm| {
        let cand = encode(&g.relabel0(perm));
        if best.as_ref().map_or(true, |(b, _)| cand < *b) {
            best = Some((cand, perm.to_vec()));
        }
    });
    let (_, perm) = best.expect("graphs have at least one vertex");
    CanonicalForm {
        graph: g.relabel0(&perm),
        witness: perm.iter().map(|&p| p + 1).collect(),
    }
}

/// Canonical form of a decorated graph. `odd[d]` tells whether decoration
/// symbol `d` has odd homological degree; the Koszul sign of the winning
/// relabeling restricted to the odd-decorated vertices is returned, with
/// `sign = 0` when two minimizing relabelings disagree (zero class).
pub fn canonical_decorated(g: &DirectedGraph, deco: &[u8], odd: &[bool]) -> DecoratedCanon {
    assert_eq!(deco.len(), g.n());
    let colors = refine_colors(g, &init_invariants(g, Some(deco)));
    let mut best: Option<[u16; MAX_VERTICES]> = None;
    let mut best_perm: Vec<usize> = Vec::new();
    let mut best_sign = 0i8;
    let mut killed = false;
    for_each_class_perm(&colors, |perm| {
        let cand = encode(&g.relabel0(perm));
        match &best {
            Some(b) if cand > *b => {}
            Some(b) if cand == *b => {
                // Another minimizer: the class dies if it disagrees in sign.
                let s = restricted_sign(perm, deco, odd);
                if s != best_sign {
                    killed = true;
                }
            }
            _ => {
                best = Some(cand);
                best_perm = perm.to_vec();
                best_sign = restricted_sign(perm, deco, odd);
                killed = false;
            }
        }
    });
    let graph = g.relabel0(&best_perm);
    let mut new_deco = vec![0u8; g.n()];
    for v in 0..g.n() {
        new_deco[best_perm[v]] = deco[v];
    }
    DecoratedCanon {
        graph,
        deco: new_deco,
        sign: if killed { 0 } else { best_sign },
    }
}

/// Sign of the permutation induced on the odd-decorated vertices: take the
/// odd positions in input order, look at where the relabeling sends them,
/// and count inversions of that image sequence.
fn restricted_sign(perm: &[usize], deco: &[u8], odd: &[bool]) -> i8 {
    let images: Vec<usize> = (0..deco.len())
        .filter(|&v| odd[deco[v] as usize])
        .map(|v| perm[v])
        .collect();
    let mut inversions = 0usize;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Order of the automorphism group, via the refined search: the canonical
/// encoding is reached by exactly one class-compatible relabeling per
/// automorphism, so counting the minimizers counts the group.
pub fn aut_order(g: &DirectedGraph) -> u64 {
    let colors = refine_colors(g, &init_invariants(g, None));
    let mut best: Option<[u16; MAX_VERTICES]> = None;
    let mut count = 0u64;
    for_each_class_perm(&colors, |perm| {
        let enc = encode(&g.relabel0(perm));
        match &best {
            Some(b) if enc > *b => {}
            Some(b) if enc == *b => count += 1,
            _ => {
                best = Some(enc);
                count = 1;
            }
        }
    });
    count
}

/// Order of the automorphism group by brute force over all `n!` vertex
/// permutations; the independent oracle for [`aut_order`].
pub fn aut_order_brute(g: &DirectedGraph) -> u64 {
    let mut count = 0u64;
    let target = encode(g);
    for perm in permutations(g.n()) {
        if encode(&g.relabel0(&perm)) == target {
            count += 1;
        }
    }
    count
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Relabelings worth trying when canonicalizing a multigraph: the support
/// graph's color classes refined by incident multiplicity profiles.
pub(crate) fn candidate_perms_for_multigraph(m: &MultiGraph) -> Vec<Vec<usize>> {
    let support = m.support_graph();
    let init: Vec<u64> = (0..m.n())
        .map(|v| {
            let mut out_mult = 0u64;
            let mut in_mult = 0u64;
            for ((s, d), k) in m.support() {
                if s == v + 1 {
                    out_mult += k as u64;
                }
                if d == v + 1 {
                    in_mult += k as u64;
                }
            }
            out_mult << 16 | in_mult
        })
        .collect();
    let colors = refine_colors(&support, &init);
    let mut perms = Vec::new();
    for_each_class_perm(&colors, |perm| {
        perms.push(perm.iter().map(|&p| p + 1).collect());
    });
    perms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Flavor;

    fn g(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn chain_relabelings_share_canonical_form() {
        let a = g(2, &[(1, 2)]);
        let b = g(2, &[(2, 1)]);
        assert_eq!(canonical_form(&a).graph, canonical_form(&b).graph);
    }

    #[test]
    fn decorated_chain_relabelings_agree() {
        // 1->2 decorated (x, y) vs 2->1 decorated (y, x): same class.
        let a = canonical_decorated(&g(2, &[(1, 2)]), &[0, 1], &[false, false]);
        let b = canonical_decorated(&g(2, &[(2, 1)]), &[1, 0], &[false, false]);
        assert_eq!(a, b);
        // Different decoration order on the same graph: different class.
        let c = canonical_decorated(&g(2, &[(1, 2)]), &[1, 0], &[false, false]);
        assert_ne!(a, c);
    }

    #[test]
    fn fork_source_position_is_immaterial() {
        // Out-fork from 1 vs out-fork from 2: brute-force every relabeling
        // of the second and confirm the canonical graphs agree.
        let a = g(3, &[(1, 2), (1, 3)]);
        let b = g(3, &[(2, 1), (2, 3)]);
        assert_eq!(canonical_form(&a).graph, canonical_form(&b).graph);
        for perm in permutations(3) {
            let r = b.relabel0(&perm);
            assert_eq!(canonical_form(&r).graph, canonical_form(&a).graph);
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        for graph in crate::graph::enumerate_labeled(4, Flavor::ConnectedSimple, crate::EnumCaps::default())
            .unwrap()
        {
            let c = canonical_form(&graph).graph;
            assert_eq!(canonical_form(&c).graph, c);
        }
    }

    #[test]
    fn witness_maps_input_to_canonical() {
        let graph = g(4, &[(2, 1), (2, 3), (3, 4)]);
        let c = canonical_form(&graph);
        assert_eq!(graph.relabel(&c.witness), c.graph);
    }

    #[test]
    fn aut_matches_brute_force_up_to_n5() {
        for n in 1..=5 {
            for graph in
                crate::graph::enumerate_labeled(n, Flavor::ConnectedSimple, crate::EnumCaps::default())
                    .unwrap()
            {
                assert_eq!(aut_order(&graph), aut_order_brute(&graph), "{graph}");
            }
        }
    }

    #[test]
    fn named_aut_orders() {
        assert_eq!(aut_order(&DirectedGraph::single()), 1);
        // Source fork: one source, two sinks.
        assert_eq!(aut_order(&g(3, &[(1, 2), (1, 3)])), 2);
        // Complete bipartite two tops to two bottoms.
        assert_eq!(aut_order(&g(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])), 4);
    }

    #[test]
    fn isomorphic_iff_equal_canonical_n4() {
        use std::collections::HashMap;
        // Group all labeled connected graphs on 4 vertices by canonical
        // form and confirm each group is exactly one brute-force orbit.
        let all =
            crate::graph::enumerate_labeled(4, Flavor::ConnectedSimple, crate::EnumCaps::default())
                .unwrap();
        let mut by_canon: HashMap<DirectedGraph, Vec<DirectedGraph>> = HashMap::new();
        for graph in &all {
            by_canon
                .entry(canonical_form(graph).graph)
                .or_default()
                .push(*graph);
        }
        for (_, class) in by_canon {
            let rep = class[0];
            let mut orbit: Vec<DirectedGraph> = permutations(4)
                .iter()
                .map(|p| rep.relabel0(p))
                .collect();
            orbit.sort();
            orbit.dedup();
            let mut sorted = class.clone();
            sorted.sort();
            assert_eq!(orbit, sorted);
        }
    }

    #[test]
    fn odd_swap_kills_class() {
        // Fork with both sinks decorated by the same odd symbol: the swap
        // automorphism is odd on decorations, so the class is zero.
        let fork = g(3, &[(1, 2), (1, 3)]);
        let c = canonical_decorated(&fork, &[0, 1, 1], &[false, true]);
        assert_eq!(c.sign, 0);
        // With an even symbol it survives.
        let c = canonical_decorated(&fork, &[0, 1, 1], &[false, false]);
        assert_eq!(c.sign, 1);
        // A chain of two odd vertices has no such automorphism.
        let c = canonical_decorated(&g(2, &[(1, 2)]), &[1, 1], &[false, true]);
        assert_eq!(c.sign, 1);
    }

    #[test]
    fn multigraph_canonical_separates_multiplicity() {
        let a = MultiGraph::new(3, &[(1, 2, 2), (1, 3, 1)]).unwrap();
        let b = MultiGraph::new(3, &[(1, 2, 1), (1, 3, 2)]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        let c = MultiGraph::new(3, &[(1, 2, 1), (1, 3, 1)]).unwrap();
        assert_ne!(a.canonical(), c.canonical());
    }
}
