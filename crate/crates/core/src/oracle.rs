//! Brute-force ground truth by exhaustion over all subsets.
//!
//! The oracle exists to be obviously correct; it is capped at
//! [`DEFAULT_ORACLE_LIMIT`] vertices and makes no attempt at sub-2^n
//! performance.

use crate::af::ArgumentationFramework;
use crate::bitset::{canonical_sort, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

fn check_limit(n: usize) -> Result<()> {
    if n > DEFAULT_ORACLE_LIMIT {
        Err(Error::OracleLimit {
            n,
            limit: DEFAULT_ORACLE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// All admissible subsets of V, each exactly once, sorted by size then
/// lexicographically.
pub fn oracle_admissible_sets(af: &ArgumentationFramework) -> Result<Vec<VertexSet>> {
    let n = af.n();
    check_limit(n)?;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s = VertexSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if af.is_admissible(&s) {
            out.push(s);
        }
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// Keeps the inclusion-maximal elements of `sets` (pairwise filter).
pub fn maximal_elements(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if sets
            .iter()
            .any(|t| s.is_subset_of(t) && t.len() > s.len())
        {
            continue;
        }
        if !out.contains(s) {
            out.push(s.clone());
        }
    }
    canonical_sort(&mut out);
    out
}

/// The preferred extensions of `af`: inclusion-maximal admissible sets.
/// When the only admissible set is the empty set, the output is `[{}]`.
pub fn oracle_preferred_extensions(af: &ArgumentationFramework) -> Result<Vec<VertexSet>> {
    let adm = oracle_admissible_sets(af)?;
    Ok(maximal_elements(&adm))
}

/// All T ⊆ s that are admissible, maximal among admissible subsets of `s`
/// (not necessarily preferred), with |s \ T| ≤ k. Negative k yields no
/// results.
pub fn oracle_mase(
    af: &ArgumentationFramework,
    s: &VertexSet,
    k: i64,
) -> Result<Vec<VertexSet>> {
    check_limit(af.n())?;
    if k < 0 {
        return Ok(Vec::new());
    }
    let members = s.to_vec();
    let m = members.len();
    let mut admissible = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let t = VertexSet::from_indices(
            af.n(),
            (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]),
        );
        if af.is_admissible(&t) {
            admissible.push(t);
        }
    }
    let mut out = maximal_elements(&admissible);
    out.retain(|t| (s.len() - t.len()) as i64 <= k);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied())
    }

    #[test]
    fn admissible_sets_two_cycle() {
        let af = ArgumentationFramework::with_default_labels(2, &[(0, 1), (1, 0)]).unwrap();
        let adm = oracle_admissible_sets(&af).unwrap();
        assert_eq!(adm, vec![set(2, &[]), set(2, &[0]), set(2, &[1])]);
    }

    #[test]
    fn admissible_sets_directed_triangle() {
        let af =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(oracle_admissible_sets(&af).unwrap(), vec![set(3, &[])]);
        assert_eq!(oracle_preferred_extensions(&af).unwrap(), vec![set(3, &[])]);
    }

    #[test]
    fn admissible_sets_isolated_vertex() {
        let af = ArgumentationFramework::with_default_labels(1, &[]).unwrap();
        assert_eq!(
            oracle_admissible_sets(&af).unwrap(),
            vec![set(1, &[]), set(1, &[0])]
        );
    }

    #[test]
    fn preferred_bidirectional_triangle() {
        let af = ArgumentationFramework::with_default_labels(
            3,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
        )
        .unwrap();
        let pref = oracle_preferred_extensions(&af).unwrap();
        assert_eq!(pref, vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]);
    }

    #[test]
    fn preferred_disjoint_two_cycles() {
        // 3 disjoint 2-cycles: 2^3 preferred extensions.
        let af = ArgumentationFramework::with_default_labels(
            6,
            &[(0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4)],
        )
        .unwrap();
        assert_eq!(oracle_preferred_extensions(&af).unwrap().len(), 8);
    }

    #[test]
    fn mase_two_cycle() {
        let af = ArgumentationFramework::with_default_labels(2, &[(0, 1), (1, 0)]).unwrap();
        let s = af.full_set();
        assert_eq!(
            oracle_mase(&af, &s, 1).unwrap(),
            vec![set(2, &[0]), set(2, &[1])]
        );
        assert!(oracle_mase(&af, &s, 0).unwrap().is_empty());
        assert!(oracle_mase(&af, &s, -1).unwrap().is_empty());
    }

    #[test]
    fn mase_chain() {
        let af =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            oracle_mase(&af, &af.full_set(), 1).unwrap(),
            vec![set(3, &[0, 2])]
        );
    }

    #[test]
    fn mase_maximality_is_relative_to_s() {
        // chain a -> b -> c with S = {b, c}: {c} is not admissible, and the
        // maximal admissible subset of S is {} (b is attacked by a which no
        // member of any subset of S attacks; c is attacked by b which only a
        // attacks).
        let af =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2)]).unwrap();
        let s = set(3, &[1, 2]);
        assert_eq!(oracle_mase(&af, &s, 2).unwrap(), vec![set(3, &[])]);
    }

    #[test]
    fn mase_with_full_budget_equals_preferred() {
        let af = ArgumentationFramework::with_default_labels(
            4,
            &[(0, 1), (1, 0), (1, 2), (2, 3)],
        )
        .unwrap();
        let pref = oracle_preferred_extensions(&af).unwrap();
        let mase = oracle_mase(&af, &af.full_set(), af.n() as i64).unwrap();
        assert_eq!(pref, mase);
    }

    #[test]
    fn limit_enforced() {
        let af = ArgumentationFramework::with_default_labels(21, &[]).unwrap();
        assert!(matches!(
            oracle_admissible_sets(&af),
            Err(Error::OracleLimit { .. })
        ));
    }
}
