//! Preferred-extension enumeration through maximal independent sets of
//! the symmetrized conflict graph, with at most 3^(n/3) search-tree
//! leaves.

use std::collections::HashSet;

use crate::af::ArgumentationFramework;
use crate::bitset::{canonical_sort, VertexSet};
use crate::collation::{maximal_subset_collation, unique_max_admissible_of_dag};
use crate::error::{Error, Result};
use crate::stats::SearchStats;

/// Undirected conflict graph: {u, v} is an edge iff u attacks v or v
/// attacks u. Independent sets are exactly the conflict-free sets.
pub struct ConflictGraph {
    adj: Vec<VertexSet>,
}

impl ConflictGraph {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }
}

/// Drops arc directions. Self-loops have no conflict-free reading here;
/// route such inputs through the loop-removal translation first.
pub fn symmetrize(af: &ArgumentationFramework) -> Result<ConflictGraph> {
    if af.has_self_loops() {
        return Err(Error::SelfLoops);
    }
    let adj = (0..af.n()).map(|v| af.neighbors(v)).collect();
    Ok(ConflictGraph { adj })
}

fn mis_node(
    g: &ConflictGraph,
    mut remaining: VertexSet,
    mut chosen: VertexSet,
    depth: usize,
    out: &mut HashSet<VertexSet>,
    stats: &mut SearchStats,
) {
    stats.enter(depth);
    // Isolated vertices are in every maximal independent set.
    loop {
        let isolated = remaining
            .iter()
            .find(|&v| g.neighbors(v).is_disjoint_from(&remaining));
        match isolated {
            Some(v) => {
                remaining.remove(v);
                chosen.insert(v);
            }
            None => break,
        }
    }
    if remaining.is_empty() {
        stats.leaf();
        out.insert(chosen);
        return;
    }
    // Pivot on a minimum-degree vertex v: every maximal independent set
    // contains a member of N[v], and each inclusion of u ∈ N[v] deletes
    // |N[u]| + 1 ≥ deg(v) + 1 vertices, which yields the 3^(n/3) leaf
    // bound.
    let v = remaining
        .iter()
        .min_by_key(|&v| g.neighbors(v).intersection(&remaining).len())
        .unwrap();
    let mut closed = g.neighbors(v).intersection(&remaining);
    closed.insert(v);
    for u in closed.iter() {
        let mut rem = remaining.clone();
        rem.subtract(g.neighbors(u));
        rem.remove(u);
        let mut ch = chosen.clone();
        ch.insert(u);
        mis_node(g, rem, ch, depth + 1, out, stats);
    }
}

/// All maximal independent sets of the conflict graph, deduplicated.
pub fn enumerate_mis(g: &ConflictGraph) -> (Vec<VertexSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut out = HashSet::new();
    let n = g.n();
    mis_node(
        g,
        VertexSet::full(n),
        VertexSet::new(n),
        0,
        &mut out,
        &mut stats,
    );
    let mut sets: Vec<VertexSet> = out.into_iter().collect();
    canonical_sort(&mut sets);
    (sets, stats)
}

/// Enumerates the preferred extensions of a loop-free framework: each
/// maximal independent set of the symmetrization induces an arcless
/// subgraph, so it has a unique maximal admissible subset; collation
/// keeps the inclusion-maximal results.
pub fn mis_preferred_enumerate(
    af: &ArgumentationFramework,
) -> Result<(Vec<VertexSet>, SearchStats)> {
    let g = symmetrize(af)?;
    let (sets, stats) = enumerate_mis(&g);
    let pairs: Vec<(VertexSet, Vec<VertexSet>)> = sets
        .into_iter()
        .map(|s| {
            let umas = unique_max_admissible_of_dag(af, &s)?;
            Ok((s, vec![umas]))
        })
        .collect::<Result<_>>()?;
    let mut out = maximal_subset_collation(af, &pairs);
    canonical_sort(&mut out);
    Ok((out, stats))
}
