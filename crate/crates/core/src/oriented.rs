//! Branching enumeration of preferred extensions on oriented loop-free
//! graphs with at most phi^n leaves, phi ≈ 1.23205 the positive root of
//! 1 - x^-1 - x^-8.

use crate::af::ArgumentationFramework;
use crate::bitset::{canonical_sort, VertexSet};
use crate::collation::{maximal_subset_collation, unique_max_admissible_of_dag};
use crate::error::{Error, Result};
use crate::stats::SearchStats;

/// Node state: `und` is the set of still-undecided vertices, `def` the
/// queue of deferred vertices resolved in the base case.
///
/// Invariants: und and def are disjoint; each def vertex attacks only
/// vertices queued before it (so G[def] is a DAG); no def vertex attacks
/// an und vertex.
#[derive(Clone, Debug)]
pub struct OrientedState {
    pub und: VertexSet,
    pub def: Vec<usize>,
}

impl OrientedState {
    pub fn root(af: &ArgumentationFramework) -> Self {
        OrientedState {
            und: af.full_set(),
            def: Vec::new(),
        }
    }

    /// Ambient set und ∪ def; the state enumerates its maximal admissible
    /// subsets.
    pub fn ambient(&self) -> VertexSet {
        let mut a = self.und.clone();
        for &v in &self.def {
            a.insert(v);
        }
        debug_assert!(a.len() == self.und.len() + self.def.len());
        a
    }

    #[cfg(debug_assertions)]
    fn check_invariants(&self, af: &ArgumentationFramework) {
        let mut seen = af.empty_set();
        for &v in &self.def {
            assert!(!self.und.contains(v), "und and def must be disjoint");
            assert!(
                af.targets(v).intersection(&self.ambient()).is_subset_of(&seen),
                "def vertex {v} attacks a later def vertex or an und vertex"
            );
            seen.insert(v);
        }
    }
}

/// Moves the lowest-index und vertex with out-degree 0 in G[und] to the
/// back of def. Returns false when no such vertex exists.
pub fn simplify_outdeg0(af: &ArgumentationFramework, state: &mut OrientedState) -> bool {
    let v = state
        .und
        .iter()
        .find(|&v| af.out_degree_in(v, &state.und) == 0);
    match v {
        Some(v) => {
            state.und.remove(v);
            state.def.push(v);
            true
        }
        None => false,
    }
}

/// For the lowest-index und vertex v with in-degree 0 in G[und]: its
/// targets in und are undefendable and are dropped, then v itself moves
/// to def. Returns false when no such vertex exists.
pub fn simplify_indeg0(af: &ArgumentationFramework, state: &mut OrientedState) -> bool {
    let v = state
        .und
        .iter()
        .find(|&v| af.in_degree_in(v, &state.und) == 0);
    match v {
        Some(v) => {
            state.und.subtract(af.targets(v));
            state.und.remove(v);
            state.def.push(v);
            true
        }
        None => false,
    }
}

fn simplify(af: &ArgumentationFramework, state: &mut OrientedState) {
    loop {
        if simplify_outdeg0(af, state) {
            continue;
        }
        if simplify_indeg0(af, state) {
            continue;
        }
        break;
    }
}

/// The arcs of F_n are i → i+1 and i → i+2 (mod n).
fn fn_arcs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])
        .collect()
}

/// Recognizes a weakly connected (2,2)-regular component whose every
/// vertex has adjacent in-neighbors as a copy of F_n. Returns the map
/// from F_n index to component vertex, verified by arc-set equality.
pub fn recognize_fn(af: &ArgumentationFramework, comp: &VertexSet) -> Option<Vec<usize>> {
    let n = comp.len();
    if n < 5 {
        return None;
    }
    let two_in = |v: usize| -> Option<(usize, usize)> {
        let ins = af.attackers(v).intersection(comp);
        let mut it = ins.iter();
        let a = it.next()?;
        let b = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((a, b))
    };
    // Seed v0, v1, v2 with arcs v1→v0, v2→v1, v2→v0, then extend the
    // chain: the next vertex is the other in-neighbor of the one before
    // the current end.
    let v0 = comp.first()?;
    let (x, y) = two_in(v0)?;
    let (v1, v2) = if af.attacks(x, y) {
        (y, x)
    } else if af.attacks(y, x) {
        (x, y)
    } else {
        return None;
    };
    let mut seq = vec![v0, v1, v2];
    let mut in_seq = VertexSet::from_indices(af.n(), seq.iter().copied());
    loop {
        let last = *seq.last().unwrap();
        let prev = seq[seq.len() - 2];
        let (a, b) = two_in(prev)?;
        let other = if a == last { b } else { a };
        if in_seq.contains(other) {
            break;
        }
        seq.push(other);
        in_seq.insert(other);
    }
    if seq.len() != n {
        return None;
    }
    // seq has v_i attacking v_{i-1} and v_{i-2}; F_n indices run the
    // other way around the cycle.
    let mut mapping = vec![0usize; n];
    for (j, m) in mapping.iter_mut().enumerate() {
        *m = seq[(n - j) % n];
    }
    let mut expected: Vec<(usize, usize)> = fn_arcs(n)
        .into_iter()
        .map(|(i, j)| (mapping[i], mapping[j]))
        .collect();
    expected.sort_unstable();
    let mut actual: Vec<(usize, usize)> = af
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| comp.contains(u) && comp.contains(v))
        .collect();
    actual.sort_unstable();
    if expected == actual {
        Some(mapping)
    } else {
        None
    }
}

/// The positive root of 1 - x^-1 - x^-8 = 0, bisected to 1e-9.
pub fn phi() -> f64 {
    let f = |x: f64| 1.0 - x.recip() - x.powi(-8);
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > 1e-9 {
        let mid = (lo + hi) / 2.0;
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

struct Branch {
    state: OrientedState,
    min_dec: usize,
}

fn include(
    af: &ArgumentationFramework,
    state: &OrientedState,
    v: usize,
    extra_excluded: &[usize],
    min_dec: usize,
) -> Branch {
    let mut s = state.clone();
    for &x in extra_excluded {
        s.und.remove(x);
    }
    s.und.subtract(&af.neighbors(v));
    s.und.remove(v);
    s.def.push(v);
    Branch { state: s, min_dec }
}

fn exclude(state: &OrientedState, vs: &[usize], min_dec: usize) -> Branch {
    let mut s = state.clone();
    for &v in vs {
        s.und.remove(v);
    }
    Branch { state: s, min_dec }
}

/// Isolated 3-cycle check for case 2.3: {a,v,b} with all arcs inside.
fn triple_is_isolated(af: &ArgumentationFramework, und: &VertexSet, b: usize, a: usize) -> bool {
    // The triple is a 3-cycle iff b's unique target in und is a.
    af.targets(b).intersection(und).first() == Some(a)
}

fn pick_branches(af: &ArgumentationFramework, state: &OrientedState) -> Result<Vec<Branch>> {
    let und = &state.und;
    let deg = |v: usize| af.total_degree_in(v, und);

    // Case 1: a vertex of total degree ≥ 7.
    if let Some(v) = und.iter().find(|&v| deg(v) >= 7) {
        return Ok(vec![
            include(af, state, v, &[], 8),
            exclude(state, &[v], 1),
        ]);
    }
    // Case 2: a vertex v of in-degree 1; a its attacker, b a target.
    if let Some(v) = und.iter().find(|&v| af.in_degree_in(v, und) == 1) {
        let a = af.attackers(v).intersection(und).first().unwrap();
        let b = af.targets(v).intersection(und).first().unwrap();
        if deg(a) >= 3 || deg(v) >= 3 {
            // 2.1: excluding a leaves v with in-degree 0.
            return Ok(vec![
                include(af, state, a, &[], deg(a) + 1),
                exclude(state, &[a], deg(v) + 1),
            ]);
        }
        if deg(b) >= 3 {
            // 2.2: excluding b drains v then a by out-degree 0.
            return Ok(vec![
                include(af, state, b, &[], deg(b) + 1),
                exclude(state, &[b], 3),
            ]);
        }
        if triple_is_isolated(af, und, b, a) {
            // 2.3 reduction: an isolated 3-cycle meets no admissible set.
            let mut s = state.clone();
            for x in [a, v, b] {
                s.und.remove(x);
            }
            return Ok(vec![Branch { state: s, min_dec: 3 }]);
        }
        // 2.3 branch: chain a→v→b→w, branch on a.
        return Ok(vec![
            include(af, state, a, &[], 4),
            exclude(state, &[a], 3),
        ]);
    }
    // Case 3: some vertex has out-degree > in-degree; it has degree
    // (2,3) or (2,4) by the earlier cases.
    if let Some(v) = und
        .iter()
        .find(|&v| af.out_degree_in(v, und) > af.in_degree_in(v, und))
    {
        let ins: Vec<usize> = af.attackers(v).intersection(und).to_vec();
        debug_assert_eq!(ins.len(), 2);
        if ins.iter().any(|&u| deg(u) == 3) {
            // 3.1: excluding v leaves the (2,1) attacker with out-degree 0.
            return Ok(vec![
                include(af, state, v, &[], deg(v) + 1),
                exclude(state, &[v], 2),
            ]);
        }
        // 3.2: both attackers have degree ≥ 4.
        let (a, b) = (ins[0], ins[1]);
        return Ok(vec![
            include(af, state, a, &[], 5),
            include(af, state, b, &[], 5),
            exclude(state, &[a, b], 6),
        ]);
    }
    // Every vertex now has in-degree = out-degree ∈ {2, 3}; classify
    // weakly connected components.
    let comps = af.weak_components_in(und);
    let regular = |c: &VertexSet, d: usize| c.iter().all(|v| deg(v) == d);
    // Case 4: a (2,2)-regular component.
    if let Some(comp) = comps.iter().find(|c| regular(c, 4)) {
        for v in comp.iter() {
            let ins: Vec<usize> = af.attackers(v).intersection(comp).to_vec();
            debug_assert_eq!(ins.len(), 2);
            let (a, b) = (ins[0], ins[1]);
            if !af.attacks(a, b) && !af.attacks(b, a) {
                // 4.1: non-adjacent attackers.
                return Ok(vec![
                    include(af, state, a, &[], 5),
                    include(af, state, b, &[a], 6),
                    exclude(state, &[a, b], 5),
                ]);
            }
        }
        // 4.2: the component is a copy of F_n.
        let mapping = recognize_fn(af, comp)
            .ok_or_else(|| Error::InvalidParams("case dispatch bug: expected F_n".into()))?;
        let n = comp.len();
        if n % 3 != 0 {
            // Only the trivial admissible extension touches F_n, 3∤n.
            let mut s = state.clone();
            s.und.subtract(comp);
            return Ok(vec![Branch { state: s, min_dec: n }]);
        }
        let (v0, v1) = (mapping[0], mapping[1]);
        // Each branch removes v0 and v1 and drains the acyclic rest of
        // the component by the out-degree-0 rule.
        return Ok(vec![
            include(af, state, v0, &[], n),
            include(af, state, v1, &[], n),
            exclude(state, &[v0, v1], n),
        ]);
    }
    // Case 5: a (3,3)-regular component.
    if let Some(comp) = comps.iter().find(|c| regular(c, 6)) {
        let v = comp.first().unwrap();
        let ins: Vec<usize> = af.attackers(v).intersection(comp).to_vec();
        debug_assert_eq!(ins.len(), 3);
        let mut branches: Vec<Branch> = ins
            .iter()
            .map(|&u| include(af, state, u, &[], 7))
            .collect();
        branches.push(exclude(state, &ins, 7));
        return Ok(branches);
    }
    // Case 6: a mixed component has a (3,3) vertex attacking a (2,2)
    // vertex v; b is v's other attacker.
    for comp in &comps {
        for v in comp.iter().filter(|&v| deg(v) == 4) {
            let ins: Vec<usize> = af.attackers(v).intersection(comp).to_vec();
            debug_assert_eq!(ins.len(), 2);
            if let Some(&a) = ins.iter().find(|&&u| deg(u) == 6) {
                let b = ins.into_iter().find(|&u| u != a).unwrap();
                return Ok(vec![
                    include(af, state, a, &[], 7),
                    include(af, state, b, &[], 5),
                    exclude(state, &[a, b], 5),
                ]);
            }
        }
    }
    Err(Error::InvalidParams(
        "case dispatch bug: no branching case applies".into(),
    ))
}

fn oriented_node(
    af: &ArgumentationFramework,
    mut state: OrientedState,
    depth: usize,
    stats: &mut SearchStats,
) -> Result<Vec<VertexSet>> {
    stats.enter(depth);
    simplify(af, &mut state);
    #[cfg(debug_assertions)]
    state.check_invariants(af);

    if state.und.is_empty() {
        stats.leaf();
        let def_set = state.ambient();
        return Ok(vec![unique_max_admissible_of_dag(af, &def_set)?]);
    }

    let mu = state.und.len();
    let branches = pick_branches(af, &state)?;
    let single = branches.len() == 1;
    let mut pairs: Vec<(VertexSet, Vec<VertexSet>)> = Vec::new();
    for mut branch in branches {
        simplify(af, &mut branch.state);
        debug_assert!(
            mu - branch.state.und.len() >= branch.min_dec,
            "branch decreased |und| by {} < advertised {}",
            mu - branch.state.und.len(),
            branch.min_dec
        );
        let ambient = branch.state.ambient();
        let res = oriented_node(af, branch.state, depth + if single { 0 } else { 1 }, stats)?;
        if single {
            // Reduction, not a branch: results pass through unchanged.
            return Ok(res);
        }
        pairs.push((ambient, res));
    }
    Ok(maximal_subset_collation(af, &pairs))
}

/// Enumerates all preferred extensions of an oriented loop-free graph.
/// The search tree has at most phi^n leaves.
pub fn oriented_enumerate(
    af: &ArgumentationFramework,
) -> Result<(Vec<VertexSet>, SearchStats)> {
    if af.has_self_loops() {
        return Err(Error::SelfLoops);
    }
    if !af.is_oriented() {
        return Err(Error::NotOriented);
    }
    let mut stats = SearchStats::default();
    let mut out = oriented_node(af, OrientedState::root(af), 0, &mut stats)?;
    canonical_sort(&mut out);
    Ok((out, stats))
}
