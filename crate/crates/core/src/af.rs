//! Core digraph representation and the argumentation-semantics predicates.
//!
//! An argumentation framework is a digraph where an arc (u, v) means
//! "u attacks v". The framework is immutable after construction; every
//! predicate here is pure, so frameworks can be shared freely across
//! concurrent enumeration runs.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Immutable attack digraph with per-vertex neighbor sets and cached
/// 2-cycle / self-loop membership.
#[derive(Clone, Debug)]
pub struct ArgumentationFramework {
    labels: Vec<String>,
    arcs: Vec<(usize, usize)>,
    out_nbrs: Vec<VertexSet>,
    in_nbrs: Vec<VertexSet>,
    two_cycle: VertexSet,
    self_loopers: VertexSet,
}

impl ArgumentationFramework {
    /// Builds a framework from vertex labels and an arc list. Duplicate arcs
    /// are deduplicated; arc endpoints must index into `labels`.
    pub fn new(labels: Vec<String>, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut out_nbrs = vec![VertexSet::new(n); n];
        let mut in_nbrs = vec![VertexSet::new(n); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            out_nbrs[u].insert(v);
            in_nbrs[v].insert(u);
        }
        let mut dedup_arcs = Vec::new();
        for u in 0..n {
            for v in out_nbrs[u].iter() {
                dedup_arcs.push((u, v));
            }
        }
        let mut two_cycle = VertexSet::new(n);
        let mut self_loopers = VertexSet::new(n);
        for u in 0..n {
            if out_nbrs[u].contains(u) {
                self_loopers.insert(u);
            }
            for v in out_nbrs[u].iter() {
                if v != u && out_nbrs[v].contains(u) {
                    two_cycle.insert(u);
                    two_cycle.insert(v);
                }
            }
        }
        Ok(ArgumentationFramework {
            labels,
            arcs: dedup_arcs,
            out_nbrs,
            in_nbrs,
            two_cycle,
            self_loopers,
        })
    }

    /// Convenience constructor with labels "a0", "a1", ...
    pub fn with_default_labels(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Self::new((0..n).map(|i| format!("a{i}")).collect(), arcs)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Deduplicated arc list in (source-ascending, target-ascending) order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn attacks(&self, u: usize, v: usize) -> bool {
        self.out_nbrs[u].contains(v)
    }

    /// Vertices attacked by `v`.
    pub fn targets(&self, v: usize) -> &VertexSet {
        &self.out_nbrs[v]
    }

    /// Vertices attacking `v`.
    pub fn attackers(&self, v: usize) -> &VertexSet {
        &self.in_nbrs[v]
    }

    /// In- or out-neighbors of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.out_nbrs[v].union(&self.in_nbrs[v]);
        s.remove(v);
        s
    }

    /// Vertices on at least one 2-cycle (self-loops do not count).
    pub fn two_cycle_members(&self) -> &VertexSet {
        &self.two_cycle
    }

    pub fn self_loopers(&self) -> &VertexSet {
        &self.self_loopers
    }

    pub fn has_self_loops(&self) -> bool {
        !self.self_loopers.is_empty()
    }

    /// No 2-cycles and no self-loops.
    pub fn is_oriented(&self) -> bool {
        self.two_cycle.is_empty() && self.self_loopers.is_empty()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Number of vertices on at least one 2-cycle, r(G).
    pub fn resolution_order(&self) -> usize {
        self.two_cycle.len()
    }

    /// True iff no arc has both endpoints in `s`. A self-loop on a member
    /// counts as a conflict.
    pub fn is_conflict_free(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.out_nbrs[u].is_disjoint_from(s))
    }

    /// True iff every attacker of `v` is attacked by some member of `s`.
    pub fn is_acceptable(&self, v: usize, s: &VertexSet) -> bool {
        assert!(v < self.n(), "vertex {v} out of range");
        self.in_nbrs[v]
            .iter()
            .all(|a| self.in_nbrs[a].intersects(s))
    }

    pub fn is_admissible(&self, s: &VertexSet) -> bool {
        self.is_conflict_free(s) && s.iter().all(|v| self.is_acceptable(v, s))
    }

    /// Out-degree of `v` within `G[s]`.
    pub fn out_degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.out_nbrs[v].intersection(s).len()
    }

    /// In-degree of `v` within `G[s]`.
    pub fn in_degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.in_nbrs[v].intersection(s).len()
    }

    /// In-degree plus out-degree of `v` within `G[s]`. A 2-cycle partner
    /// counts twice, matching the "total degree" convention.
    pub fn total_degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.out_degree_in(v, s) + self.in_degree_in(v, s)
    }

    /// Is there an arc with both endpoints in `s` whose reverse is also in
    /// `s`, i.e. a 2-cycle inside `G[s]`?
    pub fn two_cycle_members_in(&self, s: &VertexSet) -> VertexSet {
        let mut members = self.empty_set();
        for u in s.iter() {
            for v in self.out_nbrs[u].iter() {
                if v != u && s.contains(v) && self.out_nbrs[v].contains(u) {
                    members.insert(u);
                    members.insert(v);
                }
            }
        }
        members
    }

    /// r(G[s]).
    pub fn resolution_order_in(&self, s: &VertexSet) -> usize {
        self.two_cycle_members_in(s).len()
    }

    /// True iff `G[s]` is acyclic (a self-loop in `s` is a cycle).
    pub fn induces_dag(&self, s: &VertexSet) -> bool {
        // Kahn's algorithm restricted to s.
        let mut indeg: Vec<usize> = (0..self.n())
            .map(|v| if s.contains(v) { self.in_degree_in(v, s) } else { 0 })
            .collect();
        let mut queue: Vec<usize> = s.iter().filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0usize;
        while let Some(v) = queue.pop() {
            seen += 1;
            for w in self.out_nbrs[v].iter() {
                if w != v && s.contains(w) {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push(w);
                    }
                }
            }
        }
        seen == s.len()
    }

    /// The subframework induced by `s`, plus the mapping from new indices
    /// back to indices of `self` (ascending).
    pub fn induced_subframework(&self, s: &VertexSet) -> (ArgumentationFramework, Vec<usize>) {
        let old: Vec<usize> = s.to_vec();
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of_old[v] = i;
        }
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (new_of_old[u], new_of_old[v]))
            .collect();
        let af = ArgumentationFramework::new(labels, &arcs)
            .expect("induced arcs are in range by construction");
        (af, old)
    }

    /// Weakly connected components of `G[s]`, each as a vertex set of `self`.
    pub fn weak_components_in(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut comps = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = self.empty_set();
            let mut stack = vec![start];
            remaining.remove(start);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                let nbrs = self.neighbors(v).intersection(&remaining);
                for w in nbrs.iter() {
                    remaining.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            comps.push(comp);
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> ArgumentationFramework {
        // a -> b -> c
        ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn set(af: &ArgumentationFramework, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(af.n(), vs.iter().copied())
    }

    #[test]
    fn conflict_free() {
        let af = ArgumentationFramework::with_default_labels(2, &[(0, 1)]).unwrap();
        assert!(!af.is_conflict_free(&set(&af, &[0, 1])));
        assert!(af.is_conflict_free(&set(&af, &[0])));
        let two = ArgumentationFramework::with_default_labels(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(two.is_conflict_free(&two.empty_set()));
    }

    #[test]
    fn self_loop_member_conflicts() {
        let af = ArgumentationFramework::with_default_labels(1, &[(0, 0)]).unwrap();
        assert!(!af.is_conflict_free(&set(&af, &[0])));
        assert!(!af.is_admissible(&set(&af, &[0])));
        assert_eq!(af.self_loopers().to_vec(), vec![0]);
        // A self-loop is not a 2-cycle.
        assert_eq!(af.resolution_order(), 0);
    }

    #[test]
    fn acceptable() {
        let af = chain3();
        assert!(af.is_acceptable(2, &set(&af, &[0])));
        assert!(!af.is_acceptable(1, &af.empty_set()));
        let two = ArgumentationFramework::with_default_labels(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(two.is_acceptable(0, &set(&two, &[0])));
    }

    #[test]
    fn admissible() {
        let af = chain3();
        assert!(af.is_admissible(&set(&af, &[0, 2])));
        assert!(!af.is_admissible(&set(&af, &[2])));
        let cyc3 =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(cyc3.is_admissible(&cyc3.empty_set()));
    }

    #[test]
    fn resolution_order() {
        let bidir_tri = ArgumentationFramework::with_default_labels(
            3,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
        )
        .unwrap();
        assert_eq!(bidir_tri.resolution_order(), 3);
        let cyc3 =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cyc3.resolution_order(), 0);
        let mixed =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(mixed.resolution_order(), 2);
    }

    #[test]
    fn induced_subframework() {
        let af = chain3();
        let (sub, map) = af.induced_subframework(&set(&af, &[0, 2]));
        assert_eq!(sub.n(), 2);
        assert!(sub.arcs().is_empty());
        assert_eq!(map, vec![0, 2]);

        let bidir_tri = ArgumentationFramework::with_default_labels(
            3,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
        )
        .unwrap();
        let (sub, _) = bidir_tri.induced_subframework(&set(&bidir_tri, &[0, 1]));
        assert_eq!(sub.arcs(), &[(0, 1), (1, 0)]);

        let (copy, _) = af.induced_subframework(&af.full_set());
        assert_eq!(copy.arcs(), af.arcs());
        assert_eq!(copy.resolution_order(), af.resolution_order());
    }

    #[test]
    fn duplicate_arcs_deduplicated() {
        let af =
            ArgumentationFramework::with_default_labels(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(af.arcs(), &[(0, 1)]);
    }

    #[test]
    fn out_of_range_arc_rejected() {
        assert!(ArgumentationFramework::with_default_labels(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn dag_check() {
        let af = chain3();
        assert!(af.induces_dag(&af.full_set()));
        let cyc3 =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!cyc3.induces_dag(&cyc3.full_set()));
        assert!(cyc3.induces_dag(&set(&cyc3, &[0, 1])));
        let looper = ArgumentationFramework::with_default_labels(1, &[(0, 0)]).unwrap();
        assert!(!looper.induces_dag(&looper.full_set()));
    }
}
