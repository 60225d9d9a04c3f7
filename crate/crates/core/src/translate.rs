//! Graph translations: loop removal, the 2-cycle-to-4-cycle oriented
//! translation with its extension bijection psi, and the CNF-derived
//! construction used to build instances with a known extension count.

use crate::af::ArgumentationFramework;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Records how a translated framework relates to its source: guard
/// vertex positions and, per source-copy position, the position of its
/// duplicate when one exists.
pub struct TranslationWitness {
    pub source: ArgumentationFramework,
    pub target: ArgumentationFramework,
    /// l1, l2, l3 positions when the loop-guard cycle was added.
    pub loop_guards: Option<[usize; 3]>,
    /// For each source vertex i (copied to target position i): the
    /// position of its duplicate w_i, when i lies on a 2-cycle.
    pub duplicate: Vec<Option<usize>>,
}

/// Whether the loop-removal step runs unconditionally or only when the
/// input actually has self-loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LooplessMode {
    Auto,
    Always,
}

fn loopless_parts(
    af: &ArgumentationFramework,
) -> (Vec<String>, Vec<(usize, usize)>, [usize; 3]) {
    let n = af.n();
    let mut labels = af.labels().to_vec();
    labels.extend(["l1".into(), "l2".into(), "l3".into()]);
    let (l1, l2, l3) = (n, n + 1, n + 2);
    let mut arcs: Vec<(usize, usize)> = af
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| u != v)
        .collect();
    arcs.extend([(l1, l2), (l2, l3), (l3, l1)]);
    for v in af.self_loopers().iter() {
        arcs.push((l1, v));
    }
    (labels, arcs, [l1, l2, l3])
}

/// Replaces every self-loop by an attack from the guard vertex l1, which
/// sits on a directed 3-cycle l1 → l2 → l3 → l1 and is therefore never
/// defendable. Admissible sets are unchanged.
pub fn loopless_translate(af: &ArgumentationFramework) -> TranslationWitness {
    let (labels, arcs, guards) = loopless_parts(af);
    let target = ArgumentationFramework::new(labels, &arcs)
        .expect("loopless construction stays in range");
    TranslationWitness {
        source: af.clone(),
        target,
        loop_guards: Some(guards),
        duplicate: vec![None; af.n()],
    }
}

/// Converts every 2-cycle into a 4-cycle by duplicating each 2-cycle
/// vertex v_i as w_i. Each 2-cycle {v_i, v_j} with i < j becomes
/// v_i → v_j → w_i → w_j → v_i; every one-way arc fans out over the
/// copies that exist. Self-loops are removed first (always, or only when
/// present, per `mode`). The target is oriented and psi is a bijection
/// between the preferred extensions.
pub fn oriented_translate(
    af: &ArgumentationFramework,
    mode: LooplessMode,
) -> TranslationWitness {
    let apply_loopless = match mode {
        LooplessMode::Always => true,
        LooplessMode::Auto => af.has_self_loops(),
    };
    let (mut labels, base_arcs, guards) = if apply_loopless {
        let (l, a, g) = loopless_parts(af);
        (l, a, Some(g))
    } else {
        (af.labels().to_vec(), af.arcs().to_vec(), None)
    };
    let nh = labels.len();
    let inter = ArgumentationFramework::new(labels.clone(), &base_arcs)
        .expect("intermediate construction stays in range");
    debug_assert!(!inter.has_self_loops());

    // w_i exists for each 2-cycle member, appended in ascending order.
    let mut dup = vec![None; nh];
    for i in inter.two_cycle_members().iter() {
        dup[i] = Some(labels.len());
        labels.push(format!("w_{}", inter.label(i)));
    }
    let in_two_cycle =
        |u: usize, v: usize| inter.attacks(u, v) && inter.attacks(v, u);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in inter.arcs() {
        if in_two_cycle(i, j) {
            if i < j {
                let (wi, wj) = (dup[i].unwrap(), dup[j].unwrap());
                arcs.extend([(i, j), (j, wi), (wi, wj), (wj, i)]);
            }
        } else {
            arcs.push((i, j));
            if let Some(wj) = dup[j] {
                arcs.push((i, wj));
            }
            if let Some(wi) = dup[i] {
                arcs.push((wi, j));
                if let Some(wj) = dup[j] {
                    arcs.push((wi, wj));
                }
            }
        }
    }
    let target = ArgumentationFramework::new(labels, &arcs)
        .expect("oriented construction stays in range");
    debug_assert!(target.is_oriented() && !target.has_self_loops());
    TranslationWitness {
        source: af.clone(),
        target,
        loop_guards: guards,
        duplicate: dup,
    }
}

/// psi(S) = S plus the duplicates of S's members that have one.
pub fn apply_psi(witness: &TranslationWitness, s: &VertexSet) -> VertexSet {
    let mut t = VertexSet::new(witness.target.n());
    for v in s.iter() {
        t.insert(v);
        if let Some(Some(w)) = witness.duplicate.get(v) {
            t.insert(*w);
        }
    }
    t
}

/// Inverse of psi on preferred extensions of the target: strips the
/// duplicates. A preferred extension contains v_i iff it contains w_i,
/// and never contains a loop guard; anything else is rejected.
pub fn invert_psi(witness: &TranslationWitness, t: &VertexSet) -> Result<VertexSet> {
    if let Some(guards) = witness.loop_guards {
        if guards.iter().any(|&g| t.contains(g)) {
            return Err(Error::PairingViolation);
        }
    }
    let mut s = VertexSet::new(witness.source.n());
    for (v, d) in witness.duplicate.iter().enumerate() {
        let has_v = t.contains(v);
        if let Some(w) = d {
            if has_v != t.contains(*w) {
                return Err(Error::PairingViolation);
            }
        }
        if has_v && v < witness.source.n() {
            s.insert(v);
        }
    }
    Ok(s)
}

/// A CNF formula over variables 1..=vars; clauses hold DIMACS-signed
/// literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::InvalidParams("empty clause".into()));
            }
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > vars {
                    return Err(Error::InvalidParams(format!(
                        "literal {lit} out of range for {vars} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    /// DIMACS cnf: `p cnf VARS CLAUSES` header, `c` comments,
    /// 0-terminated clause lines.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut vars: Option<usize> = None;
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "cnf" {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `p cnf VARS CLAUSES`".into(),
                    });
                }
                vars = Some(fields[1].parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: "bad variable count".into(),
                })?);
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad literal `{tok}`"),
                })?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        let vars = vars.ok_or(Error::Parse {
            line: 0,
            msg: "missing `p cnf` header".into(),
        })?;
        CnfFormula::new(vars, clauses)
    }

    /// Brute-force satisfying-assignment count; intended for small
    /// formulas only.
    pub fn count_satisfying(&self) -> u64 {
        assert!(self.vars <= 24, "brute-force SAT count capped at 24 vars");
        let mut count = 0;
        for mask in 0u32..(1u32 << self.vars) {
            let ok = self.clauses.iter().all(|clause| {
                clause.iter().any(|&lit| {
                    let bit = mask >> (lit.unsigned_abs() - 1) & 1 == 1;
                    if lit > 0 {
                        bit
                    } else {
                        !bit
                    }
                })
            });
            if ok {
                count += 1;
            }
        }
        count
    }
}

/// Vertex positions of an extended-translation instance.
pub struct ExtendedLayout {
    pub phi: usize,
    /// Original clauses, then one tautology clause z_i ∨ ¬z_i per
    /// variable.
    pub clauses: Vec<usize>,
    /// Positive literal of variable i at `literals[i].0`, negative at
    /// `.1`.
    pub literals: Vec<(usize, usize)>,
    pub a: [usize; 3],
}

/// Builds the framework whose nontrivial admissible extensions are
/// exactly {phi} ∪ assignment-literals (∪ optionally {A1}) for the
/// satisfying assignments of `cnf`. The preferred-extension count is the
/// satisfying-assignment count, or 1 when the formula is unsatisfiable.
pub fn extended_translate(cnf: &CnfFormula) -> (ArgumentationFramework, ExtendedLayout) {
    let (n, m) = (cnf.vars, cnf.clauses.len());
    let mut labels = vec!["phi".to_string()];
    let clauses: Vec<usize> = (1..=m + n).collect();
    for j in 1..=m {
        labels.push(format!("c{j}"));
    }
    for i in 1..=n {
        labels.push(format!("t{i}"));
    }
    let lit_base = 1 + m + n;
    let mut literals = Vec::with_capacity(n);
    for i in 1..=n {
        labels.push(format!("z{i}"));
        labels.push(format!("nz{i}"));
        literals.push((lit_base + 2 * (i - 1), lit_base + 2 * (i - 1) + 1));
    }
    let a = [lit_base + 2 * n, lit_base + 2 * n + 1, lit_base + 2 * n + 2];
    labels.extend(["A0".into(), "A1".into(), "A2".into()]);

    let lit_vertex = |lit: i32| {
        let (pos, neg) = literals[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            pos
        } else {
            neg
        }
    };
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for &cj in &clauses {
        arcs.push((cj, 0));
    }
    for &(pos, neg) in &literals {
        arcs.extend([(pos, neg), (neg, pos)]);
    }
    for (j, clause) in cnf.clauses.iter().enumerate() {
        for &lit in clause {
            arcs.push((lit_vertex(lit), clauses[j]));
        }
    }
    for i in 1..=n {
        let taut = clauses[m + i - 1];
        let (pos, neg) = literals[i - 1];
        arcs.extend([(pos, taut), (neg, taut)]);
    }
    arcs.push((0, a[0]));
    arcs.extend([(a[0], a[1]), (a[1], a[2]), (a[2], a[0])]);
    for &(pos, neg) in &literals {
        arcs.extend([(a[0], pos), (a[0], neg)]);
    }
    let af = ArgumentationFramework::new(labels, &arcs)
        .expect("extended construction stays in range");
    (
        af,
        ExtendedLayout {
            phi: 0,
            clauses,
            literals,
            a,
        },
    )
}
