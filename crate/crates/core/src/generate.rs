//! Instance generators: extremal families, random digraphs with a
//! controlled 2-cycle fraction, and CNF-derived frameworks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::translate::{extended_translate, oriented_translate, CnfFormula, LooplessMode};

fn disjoint_union(blocks: &[ArgumentationFramework]) -> ArgumentationFramework {
    let mut arcs = Vec::new();
    let mut n = 0;
    for block in blocks {
        arcs.extend(block.arcs().iter().map(|&(u, v)| (u + n, v + n)));
        n += block.n();
    }
    ArgumentationFramework::with_default_labels(n, &arcs).unwrap()
}

fn bidir_triangle() -> ArgumentationFramework {
    ArgumentationFramework::with_default_labels(
        3,
        &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
    )
    .unwrap()
}

/// k disjoint bidirectional triangles: 3k vertices, 3^k preferred
/// extensions, the tight instance for the 3^(n/3) bound.
pub fn bidir_triangles(k: usize) -> Result<ArgumentationFramework> {
    Ok(disjoint_union(&vec![bidir_triangle(); k]))
}

/// k disjoint 2-cycles: 2k vertices, 2^k preferred extensions.
pub fn two_cycles(k: usize) -> Result<ArgumentationFramework> {
    let pair = ArgumentationFramework::with_default_labels(2, &[(0, 1), (1, 0)]).unwrap();
    Ok(disjoint_union(&vec![pair; k]))
}

/// F_n: vertices 0..n with arcs i → i+1 and i → i+2 (mod n). Oriented
/// only for n ≥ 5.
pub fn fn_graph(n: usize) -> Result<ArgumentationFramework> {
    if n < 5 {
        return Err(Error::InvalidParams(format!("Fn requires n >= 5, got {n}")));
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])
        .collect();
    ArgumentationFramework::with_default_labels(n, &arcs)
}

/// k disjoint oriented translations of the bidirectional triangle: 6k
/// vertices, 3^k preferred extensions, the oriented lower-bound block.
pub fn oriented_triangles(k: usize) -> Result<ArgumentationFramework> {
    let block = oriented_translate(&bidir_triangle(), LooplessMode::Auto).target;
    Ok(disjoint_union(&vec![block; k]))
}

/// Random digraph with roughly `two_cycle_fraction` of the vertices on
/// 2-cycles: marks ceil(fraction * n) vertices, pairs them into
/// 2-cycles, then adds each remaining arc with probability `arc_prob`
/// unless it would create a new 2-cycle. Never emits self-loops.
pub fn random_digraph(
    n: usize,
    arc_prob: f64,
    two_cycle_fraction: f64,
    seed: u64,
) -> Result<ArgumentationFramework> {
    if !(0.0..=1.0).contains(&arc_prob) || !(0.0..=1.0).contains(&two_cycle_fraction) {
        return Err(Error::InvalidParams(
            "arc probability and 2-cycle fraction must lie in [0, 1]".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut has_arc = vec![false; n * n];
    let add = |arcs: &mut Vec<(usize, usize)>, has_arc: &mut Vec<bool>, u: usize, v: usize| {
        if !has_arc[u * n + v] {
            has_arc[u * n + v] = true;
            arcs.push((u, v));
        }
    };
    let marked_count = (two_cycle_fraction * n as f64).ceil() as usize;
    let mut marked: Vec<usize> = (0..n).collect();
    marked.shuffle(&mut rng);
    marked.truncate(marked_count);
    if marked.len() >= 2 {
        for pair in marked.chunks(2) {
            // An odd leftover pairs with the first marked vertex.
            let (u, v) = (pair[0], *pair.get(1).unwrap_or(&marked[0]));
            add(&mut arcs, &mut has_arc, u, v);
            add(&mut arcs, &mut has_arc, v, u);
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u == v || has_arc[u * n + v] || has_arc[v * n + u] {
                continue;
            }
            if rng.gen_bool(arc_prob) {
                add(&mut arcs, &mut has_arc, u, v);
            }
        }
    }
    ArgumentationFramework::with_default_labels(n, &arcs)
}

/// The extremal packing: floor(r*n/3) bidirectional triangles plus
/// floor((1-r)*n/6) oriented-translated triangles, giving
/// 3^(rn/3) * 3^((1-r)n/6) preferred extensions.
pub fn lower_bound(n: usize, r: f64) -> Result<ArgumentationFramework> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidParams("r must lie in [0, 1]".into()));
    }
    let bidir = (r * n as f64 / 3.0).floor() as usize;
    let oriented = ((1.0 - r) * n as f64 / 6.0).floor() as usize;
    let mut blocks = vec![bidir_triangle(); bidir];
    blocks.extend(vec![
        oriented_translate(&bidir_triangle(), LooplessMode::Auto).target;
        oriented
    ]);
    Ok(disjoint_union(&blocks))
}

/// Parses a CLI generator spec `KIND:PARAMS` with comma-separated
/// params, e.g. `bidirTriangles:2` or `randomDigraph:10,0.3,0.5`.
pub fn generate(spec: &str, seed: u64) -> Result<ArgumentationFramework> {
    let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
    let fields: Vec<&str> = if params.is_empty() {
        Vec::new()
    } else {
        params.split(',').collect()
    };
    let arity = |want: usize| -> Result<()> {
        if fields.len() == want {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "{kind} expects {want} parameter(s), got {}",
                fields.len()
            )))
        }
    };
    let int = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad integer `{s}`")))
    };
    let float = |s: &str| -> Result<f64> {
        s.trim()
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad number `{s}`")))
    };
    match kind {
        "bidirTriangles" => {
            arity(1)?;
            bidir_triangles(int(fields[0])?)
        }
        "twoCycles" => {
            arity(1)?;
            two_cycles(int(fields[0])?)
        }
        "Fn" => {
            arity(1)?;
            fn_graph(int(fields[0])?)
        }
        "orientedTriangle" => {
            arity(1)?;
            oriented_triangles(int(fields[0])?)
        }
        "randomDigraph" => {
            arity(3)?;
            random_digraph(int(fields[0])?, float(fields[1])?, float(fields[2])?, seed)
        }
        "fromCnf" => {
            arity(1)?;
            let text = std::fs::read_to_string(fields[0])?;
            let cnf = CnfFormula::parse_dimacs(&text)?;
            Ok(extended_translate(&cnf).0)
        }
        "lowerBound" => {
            arity(2)?;
            lower_bound(int(fields[0])?, float(fields[1])?)
        }
        other => Err(Error::InvalidParams(format!("unknown generator `{other}`"))),
    }
}
