//! Parameterized branching enumeration of all maximal admissible subsets
//! T of a set S with |S \ T| ≤ k, with measure k/2 + b/4 where b is the
//! resolution order of G[S]. Also the plain 2^k arc-branching fallback.

use crate::af::ArgumentationFramework;
use crate::bitset::{canonical_sort, VertexSet};
use crate::collation::{maximal_subset_collation, undefendable_fixpoint};
use crate::stats::SearchStats;

/// A MASE instance: candidate set, removal budget, and the measure derived
/// from them.
pub struct MaseInstance<'a> {
    pub af: &'a ArgumentationFramework,
    pub s: VertexSet,
    pub k: i64,
}

impl<'a> MaseInstance<'a> {
    pub fn new(af: &'a ArgumentationFramework, s: VertexSet, k: i64) -> Self {
        MaseInstance { af, s, k }
    }

    /// b = r(G[S]).
    pub fn resolution_budget(&self) -> usize {
        self.af.resolution_order_in(&self.s)
    }

    /// μ = k/2 + b/4 in exact quarter units (4μ).
    pub fn measure_quarters(&self) -> i64 {
        2 * self.k + self.resolution_budget() as i64
    }

    pub fn measure(&self) -> f64 {
        self.measure_quarters() as f64 / 4.0
    }
}

/// One application of the undefendable rule: removes the lowest-index
/// u in `s` that has an attacker (anywhere in G) which no member of `s`
/// counter-attacks. Returns the removed vertex.
pub fn apply_undefendable(af: &ArgumentationFramework, s: &mut VertexSet) -> Option<usize> {
    let u = s.iter().find(|&u| {
        af.attackers(u)
            .iter()
            .any(|a| af.attackers(a).is_disjoint_from(s))
    })?;
    s.remove(u);
    Some(u)
}

fn mu4(af: &ArgumentationFramework, s: &VertexSet, k: i64) -> i64 {
    2 * k + af.resolution_order_in(s) as i64
}

/// Budget-consuming simplification: members with self-loops are in no
/// admissible set and are dropped like undefendable ones.
fn simplify(af: &ArgumentationFramework, s: &mut VertexSet, k: &mut i64) {
    loop {
        let looper = s.iter().find(|&u| af.self_loopers().contains(u));
        if let Some(u) = looper {
            s.remove(u);
            *k -= 1;
            continue;
        }
        if apply_undefendable(af, s).is_some() {
            *k -= 1;
            continue;
        }
        break;
    }
}

/// A branch child: new candidate set, new budget, and the advertised
/// minimum measure decrease in quarter units (checked in debug builds
/// after the child's own simplification).
struct Child {
    s: VertexSet,
    k: i64,
    min_dec4: i64,
}

fn include_child(af: &ArgumentationFramework, s: &VertexSet, k: i64, v: usize, min_dec4: i64) -> Child {
    let removed = af.neighbors(v).intersection(s);
    Child {
        s: s.difference(&removed),
        k: k - removed.len() as i64,
        min_dec4,
    }
}

fn exclude_child(s: &VertexSet, k: i64, v: usize, min_dec4: i64) -> Child {
    let mut cs = s.clone();
    cs.remove(v);
    Child { s: cs, k: k - 1, min_dec4 }
}

fn pick_two_cycle_branch_vertex(
    af: &ArgumentationFramework,
    s: &VertexSet,
    tc: &VertexSet,
) -> (usize, usize) {
    let u = tc.first().expect("case 2 requires a 2-cycle");
    let w = af
        .targets(u)
        .intersection(af.attackers(u))
        .intersection(s)
        .first()
        .expect("2-cycle member has a partner in s");
    // Branch on the endpoint with higher total degree; ties go to the
    // lower index.
    if af.total_degree_in(w, s) > af.total_degree_in(u, s) {
        (w, u)
    } else {
        (u, w)
    }
}

fn mase_node(
    af: &ArgumentationFramework,
    mut s: VertexSet,
    mut k: i64,
    depth: usize,
    stats: &mut SearchStats,
    expected: Option<(i64, i64)>,
) -> Vec<VertexSet> {
    stats.enter(depth);
    simplify(af, &mut s, &mut k);

    if let Some((parent_mu4, min_dec4)) = expected {
        debug_assert!(
            parent_mu4 - mu4(af, &s, k) >= min_dec4,
            "branch decreased 4μ by {} < advertised {}",
            parent_mu4 - mu4(af, &s, k),
            min_dec4
        );
    }

    if k < 0 {
        stats.leaf();
        return Vec::new();
    }
    if af.is_conflict_free(&s) {
        stats.leaf();
        let t = undefendable_fixpoint(af, &s);
        return if (s.len() - t.len()) as i64 <= k {
            vec![t]
        } else {
            Vec::new()
        };
    }

    let tc = af.two_cycle_members_in(&s);
    let max_deg = s.iter().map(|v| af.total_degree_in(v, &s)).max().unwrap_or(0);

    let children: Vec<Child> = if tc.is_empty() && max_deg <= 2 {
        // Case 1: oriented, degrees ≤ 2; G[s] is directed cycles plus
        // isolated vertices.
        let v = s
            .iter()
            .find(|&v| af.total_degree_in(v, &s) > 0)
            .expect("not conflict-free, so a non-isolated vertex exists");
        vec![
            include_child(af, &s, k, v, 4),
            exclude_child(&s, k, v, 4),
        ]
    } else if !tc.is_empty() {
        // Case 2: a 2-cycle exists.
        let (v, partner) = pick_two_cycle_branch_vertex(af, &s, &tc);
        let isolated = af.total_degree_in(v, &s) == 2 && af.total_degree_in(partner, &s) == 2;
        if isolated {
            let mut inc = s.clone();
            inc.remove(partner);
            vec![
                Child { s: inc, k: k - 1, min_dec4: 4 },
                exclude_child(&s, k, v, 4),
            ]
        } else {
            vec![
                include_child(af, &s, k, v, 6),
                exclude_child(&s, k, v, 3),
            ]
        }
    } else if max_deg >= 4 {
        // Case 3: a vertex of total degree ≥ 4 (G[s] now oriented).
        let v = s
            .iter()
            .find(|&v| af.total_degree_in(v, &s) >= 4)
            .unwrap();
        vec![
            include_child(af, &s, k, v, 8),
            exclude_child(&s, k, v, 2),
        ]
    } else {
        // Case 4: maximum total degree 3; a vertex with in-degree 1 and
        // out-degree 2 exists, branch on its unique attacker.
        let v = s
            .iter()
            .find(|&v| af.in_degree_in(v, &s) == 1 && af.out_degree_in(v, &s) == 2)
            .expect("degree-3 case guarantees an (1,2) vertex");
        let u = af.attackers(v).intersection(&s).first().unwrap();
        vec![
            include_child(af, &s, k, u, 4),
            exclude_child(&s, k, u, 6),
        ]
    };

    let parent_mu4 = mu4(af, &s, k);
    let mut pairs: Vec<(VertexSet, Vec<VertexSet>)> = Vec::new();
    let mut recursed = false;
    for child in children {
        if child.k < 0 {
            continue;
        }
        recursed = true;
        let cs = child.s.clone();
        let res = mase_node(
            af,
            child.s,
            child.k,
            depth + 1,
            stats,
            Some((parent_mu4, child.min_dec4)),
        );
        pairs.push((cs, res));
    }
    if !recursed {
        stats.leaf();
        return Vec::new();
    }
    maximal_subset_collation(af, &pairs)
}

/// Enumerates all maximal admissible subsets T ⊆ S with |S \ T| ≤ k via
/// the measure-guided branching algorithm. The search tree has at most
/// 2^(k/2 + b/4) leaves.
pub fn mase_enumerate(inst: &MaseInstance) -> (Vec<VertexSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut out = mase_node(inst.af, inst.s.clone(), inst.k, 0, &mut stats, None);
    canonical_sort(&mut out);
    (out, stats)
}

fn mase2k_node(
    af: &ArgumentationFramework,
    s: VertexSet,
    k: i64,
    depth: usize,
    stats: &mut SearchStats,
) -> Vec<VertexSet> {
    stats.enter(depth);
    if af.is_conflict_free(&s) {
        stats.leaf();
        let t = undefendable_fixpoint(af, &s);
        return if (s.len() - t.len()) as i64 <= k {
            vec![t]
        } else {
            Vec::new()
        };
    }
    if k - 1 < 0 {
        stats.leaf();
        return Vec::new();
    }
    // Lowest arc inside G[s]; a self-loop degenerates to a single child.
    let (u, v) = s
        .iter()
        .find_map(|u| af.targets(u).intersection(&s).first().map(|v| (u, v)))
        .expect("not conflict-free, so an arc exists in G[s]");
    let mut endpoints = vec![u];
    if v != u {
        endpoints.push(v);
    }
    let mut pairs = Vec::new();
    for x in endpoints {
        let mut cs = s.clone();
        cs.remove(x);
        let res = mase2k_node(af, cs.clone(), k - 1, depth + 1, stats);
        pairs.push((cs, res));
    }
    maximal_subset_collation(af, &pairs)
}

/// The simple 2^k algorithm: branch on the endpoints of an arbitrary arc
/// inside G[S]. Same contract as [`mase_enumerate`].
pub fn mase_enumerate_2k(inst: &MaseInstance) -> (Vec<VertexSet>, SearchStats) {
    let mut stats = SearchStats::default();
    if inst.k < 0 {
        return (Vec::new(), stats);
    }
    let mut out = mase2k_node(inst.af, inst.s.clone(), inst.k, 0, &mut stats);
    canonical_sort(&mut out);
    (out, stats)
}
