//! The unique-maximal-admissible-subset routine for DAG-inducing sets, and
//! the Maximal Subset Collation step that glues branch results together.

use std::collections::HashSet;

use crate::af::ArgumentationFramework;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// One pass of the undefendable rule applied simultaneously: removes every
/// u in `s` that has an attacker (anywhere in G) which no member of `s`
/// counter-attacks. Returns whether anything was removed.
fn undefendable_pass(af: &ArgumentationFramework, s: &mut VertexSet) -> bool {
    let n = af.n();
    // Vertices of G with no attacker inside s.
    let mut unanswered = af.empty_set();
    for a in 0..n {
        if af.attackers(a).is_disjoint_from(s) {
            unanswered.insert(a);
        }
    }
    let mut removed = false;
    let before = s.clone();
    for u in before.iter() {
        if af.attackers(u).intersects(&unanswered) {
            s.remove(u);
            removed = true;
        }
    }
    removed
}

/// Applies the undefendable rule until fixpoint. The result is the set of
/// vertices of `s` not excluded by the rule; when `G[s]` is a DAG this is
/// the unique maximal admissible subset of `s`.
pub fn undefendable_fixpoint(af: &ArgumentationFramework, s: &VertexSet) -> VertexSet {
    let mut cur = s.clone();
    while undefendable_pass(af, &mut cur) {}
    cur
}

/// The unique maximal admissible subset of a set `s` inducing a DAG,
/// computed by exhausting the undefendable rule.
pub fn unique_max_admissible_of_dag(
    af: &ArgumentationFramework,
    s: &VertexSet,
) -> Result<VertexSet> {
    if !af.induces_dag(s) {
        return Err(Error::NotADag);
    }
    let result = undefendable_fixpoint(af, s);
    debug_assert!(af.is_admissible(&result));
    Ok(result)
}

/// Input to collation: for each branch, the ambient set S_i and its
/// collection C_i of maximal admissible subsets of S_i.
pub type CollationInput = [(VertexSet, Vec<VertexSet>)];

/// Collates branch results: returns exactly the inclusion-maximal elements
/// of the union of all C_i, each once, sorted lexicographically.
///
/// Any T that is a strict subset of some U in the union is the unique
/// maximal admissible subset of U ∩ S_i for its source pair, which is how
/// it gets deleted from the pool.
pub fn maximal_subset_collation(
    af: &ArgumentationFramework,
    inputs: &CollationInput,
) -> Vec<VertexSet> {
    let mut pool: HashSet<VertexSet> = HashSet::new();
    for (_, ci) in inputs {
        pool.extend(ci.iter().cloned());
    }
    let snapshot: Vec<VertexSet> = pool.iter().cloned().collect();
    for u in &snapshot {
        for (si, _) in inputs {
            let meet = u.intersection(si);
            debug_assert!(af.induces_dag(&meet), "admissible ∩ S_i must induce a DAG");
            let m = undefendable_fixpoint(af, &meet);
            if m != *u {
                pool.remove(&m);
            }
        }
    }
    let mut out: Vec<VertexSet> = pool.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{maximal_elements, oracle_mase};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied())
    }

    fn chain3() -> ArgumentationFramework {
        ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn umas_chain() {
        let af = chain3();
        let r = unique_max_admissible_of_dag(&af, &af.full_set()).unwrap();
        assert_eq!(r, set(3, &[0, 2]));
        // Cross-check against the brute-force oracle with full budget.
        let oracle = oracle_mase(&af, &af.full_set(), 3).unwrap();
        assert_eq!(oracle, vec![r]);
    }

    #[test]
    fn umas_unattacked_fixpoint() {
        // Two isolated vertices: the set is its own fixpoint.
        let af = ArgumentationFramework::with_default_labels(2, &[]).unwrap();
        let s = af.full_set();
        assert_eq!(unique_max_admissible_of_dag(&af, &s).unwrap(), s);
    }

    #[test]
    fn umas_single_arc() {
        let af = ArgumentationFramework::with_default_labels(2, &[(0, 1)]).unwrap();
        let r = unique_max_admissible_of_dag(&af, &af.full_set()).unwrap();
        assert_eq!(r, set(2, &[0]));
    }

    #[test]
    fn umas_rejects_cycles() {
        let af =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            unique_max_admissible_of_dag(&af, &af.full_set()),
            Err(Error::NotADag)
        ));
    }

    #[test]
    fn collation_removes_covered_subset() {
        let af = chain3();
        let inputs = vec![
            (set(3, &[0, 1, 2]), vec![set(3, &[0, 2])]),
            (set(3, &[0]), vec![set(3, &[0])]),
        ];
        assert_eq!(
            maximal_subset_collation(&af, &inputs),
            vec![set(3, &[0, 2])]
        );
    }

    #[test]
    fn collation_single_pair_dedups() {
        let af = chain3();
        let inputs = vec![(set(3, &[0, 1, 2]), vec![set(3, &[0, 2]), set(3, &[0, 2])])];
        assert_eq!(
            maximal_subset_collation(&af, &inputs),
            vec![set(3, &[0, 2])]
        );
    }

    #[test]
    fn collation_idempotent_on_repeated_pairs() {
        let af = chain3();
        let pair = (set(3, &[0, 1, 2]), vec![set(3, &[0, 2])]);
        let once = maximal_subset_collation(&af, &[pair.clone()]);
        let twice = maximal_subset_collation(&af, &[pair.clone(), pair]);
        assert_eq!(once, twice);
    }

    #[test]
    fn collation_matches_direct_maximality_filter() {
        // 2-cycle plus pendant: ambient sets from an include/exclude split.
        let af = ArgumentationFramework::with_default_labels(
            3,
            &[(0, 1), (1, 0), (1, 2)],
        )
        .unwrap();
        let s1 = set(3, &[0, 2]);
        let c1 = oracle_mase(&af, &s1, 3).unwrap();
        let s2 = set(3, &[1, 2]);
        let c2 = oracle_mase(&af, &s2, 3).unwrap();
        let collated = maximal_subset_collation(&af, &[(s1, c1.clone()), (s2, c2.clone())]);
        let mut union = c1;
        union.extend(c2);
        let mut direct = maximal_elements(&union);
        direct.sort();
        assert_eq!(collated, direct);
    }
}
