//! Two-phase monotone local search: sample candidate supersets of the
//! 2-cycle part B and the rest D separately from set-containing
//! families, enumerate maximal admissible subsets of each sample with a
//! removal budget, and keep the inclusion-maximal results.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::af::ArgumentationFramework;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::mase::{mase_enumerate, MaseInstance};
use crate::oracle::maximal_elements;
use crate::stats::SearchStats;

/// An (n, p, q)-set-containing family: q-subsets of a universe of size
/// n such that every p-subset lies inside some member.
pub struct SetContainingFamily {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub members: Vec<VertexSet>,
}

fn check_bounds(n: usize, p: usize, q: usize) -> Result<()> {
    if p <= q && q <= n {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "need p <= q <= n, got p={p} q={q} n={n}"
        )))
    }
}

fn for_each_subset(n: usize, q: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..q).collect();
    if q > n {
        return;
    }
    loop {
        f(&idx);
        // Advance to the next q-combination in lexicographic order.
        let mut i = q;
        while i > 0 && idx[i - 1] == (i - 1) + n - q {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..q {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// C(n, k) with overflow detection.
pub fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::BinomialOverflow)?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

/// The family of all q-subsets; trivially set-containing.
pub fn build_family_exhaustive(n: usize, p: usize, q: usize) -> Result<SetContainingFamily> {
    check_bounds(n, p, q)?;
    let mut members = Vec::new();
    for_each_subset(n, q, |idx| {
        members.push(VertexSet::from_indices(n, idx.iter().copied()));
    });
    if q == 0 {
        debug_assert_eq!(members.len(), 1);
    }
    Ok(SetContainingFamily { n, p, q, members })
}

/// Exhaustively verifies the family property: every p-subset of the
/// universe is contained in some member.
pub fn covers_all_p_subsets(family: &SetContainingFamily) -> bool {
    let mut ok = true;
    for_each_subset(family.n, family.p, |idx| {
        if !ok {
            return;
        }
        let s = VertexSet::from_indices(family.n, idx.iter().copied());
        ok = family.members.iter().any(|m| s.is_subset_of(m));
    });
    ok
}

/// Samples ceil((C(n,p)/C(q,p)) * ln(C(n,p)/delta)) uniform q-subsets.
/// For n ≤ 20 coverage is verified exhaustively and the sample is
/// redrawn on failure, so the result is unconditionally valid at that
/// scale; larger universes are only probabilistically covered.
pub fn build_family_random(
    n: usize,
    p: usize,
    q: usize,
    delta: f64,
    seed: u64,
) -> Result<SetContainingFamily> {
    check_bounds(n, p, q)?;
    if !(0.0..1.0).contains(&delta) || delta == 0.0 {
        return Err(Error::InvalidParams("delta must lie in (0, 1)".into()));
    }
    let cnp = binomial(n, p)? as f64;
    let cqp = binomial(q, p)? as f64;
    let m = ((cnp / cqp) * (cnp / delta).ln()).ceil().max(1.0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..64 {
        let mut seen = HashSet::new();
        let mut members = Vec::new();
        for _ in 0..m {
            let pick = rand::seq::index::sample(&mut rng, n, q).into_vec();
            let s = VertexSet::from_indices(n, pick);
            if seen.insert(s.clone()) {
                members.push(s);
            }
        }
        let family = SetContainingFamily { n, p, q, members };
        if n > 20 || covers_all_p_subsets(&family) {
            return Ok(family);
        }
    }
    Err(Error::InvalidParams(
        "random family failed verification repeatedly; use the exhaustive mode".into(),
    ))
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k)
        .map(|i| (((n - i) as f64) / ((i + 1) as f64)).ln())
        .sum()
}

/// Picks the t in [s, universe] minimizing
/// C(universe, t) * 2^(cost_per_removal * (t - s) + cost_per_element * t),
/// the per-sample work of covering s-subsets with t-subsets when each
/// extra removal and each retained element carry the given exponents.
pub fn determine_budget(
    universe: usize,
    s: usize,
    cost_per_removal: f64,
    cost_per_element: f64,
) -> usize {
    assert!(s <= universe);
    let ln2 = std::f64::consts::LN_2;
    let mut best = (s, f64::INFINITY);
    for t in s..=universe {
        let cost = ln_binomial(universe, t)
            + (cost_per_removal * (t - s) as f64 + cost_per_element * t as f64) * ln2;
        if cost < best.1 {
            best = (t, cost);
        }
    }
    best.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug)]
pub struct MlsConfig {
    pub family: FamilyKind,
    /// Per-family failure budget for random families.
    pub delta: f64,
    pub seed: u64,
}

impl Default for MlsConfig {
    fn default() -> Self {
        MlsConfig {
            family: FamilyKind::Exhaustive,
            delta: 0.01,
            seed: 0,
        }
    }
}

fn build_family(
    config: &MlsConfig,
    n: usize,
    p: usize,
    q: usize,
    salt: u64,
) -> Result<SetContainingFamily> {
    match config.family {
        FamilyKind::Exhaustive => build_family_exhaustive(n, p, q),
        FamilyKind::Random => {
            build_family_random(n, p, q, config.delta, config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        }
    }
}

/// Enumerates all preferred extensions of a loop-free framework by
/// monotone local search over the 2-cycle part B and D = V \ B
/// separately: every preferred extension with b members in B and d in D
/// is a maximal admissible subset of some sampled S ∪ T within removal
/// budget (b'-b) + (d'-d). Non-preferred admissible sets also surface
/// and are removed by the final maximality filter.
pub fn mls_enumerate(
    af: &ArgumentationFramework,
    config: &MlsConfig,
) -> Result<(Vec<VertexSet>, SearchStats)> {
    if af.has_self_loops() {
        return Err(Error::SelfLoops);
    }
    let b_vertices: Vec<usize> = af.two_cycle_members().to_vec();
    let d_vertices: Vec<usize> = af
        .two_cycle_members()
        .complement()
        .to_vec();
    let (nb, nd) = (b_vertices.len(), d_vertices.len());

    let mut stats = SearchStats::default();
    let mut acc: HashSet<VertexSet> = HashSet::new();
    for b in 0..=nb {
        let bp = determine_budget(nb, b, 0.5, 0.25);
        let fam_b = build_family(config, nb, b, bp, (1 << 32) | b as u64)?;
        for d in 0..=nd {
            let dp = determine_budget(nd, d, 0.5, 0.0);
            let fam_d = build_family(config, nd, d, dp, (2 << 32) | d as u64)?;
            let k = ((bp - b) + (dp - d)) as i64;
            for s in &fam_b.members {
                for t in &fam_d.members {
                    let mut x = VertexSet::new(af.n());
                    for i in s.iter() {
                        x.insert(b_vertices[i]);
                    }
                    for i in t.iter() {
                        x.insert(d_vertices[i]);
                    }
                    let (res, st) = mase_enumerate(&MaseInstance::new(af, x, k));
                    stats.absorb(&st);
                    acc.extend(res);
                }
            }
        }
    }
    let pool: Vec<VertexSet> = acc.into_iter().collect();
    debug_assert!(pool.iter().all(|s| af.is_admissible(s)));
    Ok((maximal_elements(&pool), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::oracle::oracle_preferred_extensions;
    use rand::{Rng, SeedableRng};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().copied())
    }

    #[test]
    fn exhaustive_family_small() {
        let fam = build_family_exhaustive(3, 1, 2).unwrap();
        let members: Vec<Vec<usize>> = fam.members.iter().map(|m| m.to_vec()).collect();
        assert_eq!(members, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(covers_all_p_subsets(&fam));
        // p = q: every p-set covers itself.
        let fam = build_family_exhaustive(4, 2, 2).unwrap();
        assert_eq!(fam.members.len(), 6);
        assert!(covers_all_p_subsets(&fam));
        // p = 0: any family covers the empty set.
        let fam = build_family_exhaustive(4, 0, 2).unwrap();
        assert!(covers_all_p_subsets(&fam));
        assert!(build_family_exhaustive(3, 2, 1).is_err());
    }

    #[test]
    fn random_family_verified_and_deterministic() {
        let fam = build_family_random(3, 1, 2, 0.01, 42).unwrap();
        assert!(covers_all_p_subsets(&fam));
        assert!(fam.members.len() <= 3);
        assert!(fam.members.iter().all(|m| m.len() == 2));
        let again = build_family_random(3, 1, 2, 0.01, 42).unwrap();
        let a: Vec<Vec<usize>> = fam.members.iter().map(|m| m.to_vec()).collect();
        let b: Vec<Vec<usize>> = again.members.iter().map(|m| m.to_vec()).collect();
        assert_eq!(a, b);
        let single = build_family_random(6, 0, 3, 0.5, 1).unwrap();
        assert!(covers_all_p_subsets(&single));
    }

    #[test]
    fn budget_selection() {
        assert_eq!(determine_budget(5, 5, 0.5, 0.25), 5);
        assert_eq!(determine_budget(0, 0, 0.5, 0.0), 0);
        // universe=4, s=2, exponents (1/2, 0): cost C(4,t)·2^((t-2)/2)
        // is 6, 5.66, 2 for t = 2, 3, 4.
        assert_eq!(determine_budget(4, 2, 0.5, 0.0), 4);
    }

    #[test]
    fn binomial_overflow_detected() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(3, 7).unwrap(), 0);
        assert!(binomial(1000, 500).is_err());
    }

    #[test]
    fn two_triangles() {
        let af = generate::bidir_triangles(2).unwrap();
        let (out, _) = mls_enumerate(&af, &MlsConfig::default()).unwrap();
        assert_eq!(out.len(), 9);
        assert_eq!(out, oracle_preferred_extensions(&af).unwrap());
    }

    #[test]
    fn oriented_input_single_phase() {
        let af =
            ArgumentationFramework::with_default_labels(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (out, _) = mls_enumerate(&af, &MlsConfig::default()).unwrap();
        assert_eq!(out, vec![set(3, &[])]);
    }

    #[test]
    fn random_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..40 {
            let n = rng.gen_range(1..=8);
            let af = generate::random_digraph(
                n,
                rng.gen_range(0.1..0.6),
                [0.0, 0.3, 0.7, 1.0][trial % 4],
                rng.gen(),
            )
            .unwrap();
            let expected = oracle_preferred_extensions(&af).unwrap();
            for config in [
                MlsConfig::default(),
                MlsConfig {
                    family: FamilyKind::Random,
                    ..MlsConfig::default()
                },
            ] {
                let (got, _) = mls_enumerate(&af, &config).unwrap();
                assert_eq!(got, expected, "arcs {:?}", af.arcs());
            }
        }
    }
}
