//! Algorithm selection by 2-cycle fraction r: the oriented-translation
//! route below 0.6684, monotone local search in the middle band, and
//! the independent-set enumerator from 0.8005 upward.

use crate::af::ArgumentationFramework;
use crate::bitset::{canonical_sort, VertexSet};
use crate::error::Result;
use crate::mase::{mase_enumerate_2k, MaseInstance};
use crate::mis::mis_preferred_enumerate;
use crate::mls::{mls_enumerate, MlsConfig};
use crate::oracle::oracle_preferred_extensions;
use crate::oriented::oriented_enumerate;
use crate::stats::SearchStats;
use crate::translate::{invert_psi, loopless_translate, oriented_translate, LooplessMode};

/// Crossover points of the per-algorithm running-time bases over
/// r = (2-cycle vertices) / n; the boundary band (0.8004, 0.8005) is
/// assigned to local search.
pub const ORIENTED_MLS_THRESHOLD: f64 = 0.6684;
pub const MLS_MIS_THRESHOLD: f64 = 0.8005;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmKind {
    Auto,
    Oracle,
    Mis,
    Oriented,
    Mls,
    Mase2k,
}

impl AlgorithmKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "auto" => AlgorithmKind::Auto,
            "oracle" => AlgorithmKind::Oracle,
            "mis" => AlgorithmKind::Mis,
            "oriented" => AlgorithmKind::Oriented,
            "mls" => AlgorithmKind::Mls,
            "mase2k" => AlgorithmKind::Mase2k,
            _ => return None,
        })
    }
}

/// Runs `f` on a loop-free version of `af` and maps the extensions back;
/// self-loopers never appear in preferred extensions, so the loop-guard
/// translation changes nothing but the vertex set.
fn via_loopless<F>(af: &ArgumentationFramework, f: F) -> Result<(Vec<VertexSet>, SearchStats)>
where
    F: FnOnce(&ArgumentationFramework) -> Result<(Vec<VertexSet>, SearchStats)>,
{
    if !af.has_self_loops() {
        return f(af);
    }
    let w = loopless_translate(af);
    let (res, stats) = f(&w.target)?;
    let mapped = res
        .into_iter()
        .map(|t| invert_psi(&w, &t))
        .collect::<Result<Vec<_>>>()?;
    Ok((mapped, stats))
}

fn run_oriented(af: &ArgumentationFramework) -> Result<(Vec<VertexSet>, SearchStats)> {
    let w = oriented_translate(af, LooplessMode::Auto);
    let (res, stats) = oriented_enumerate(&w.target)?;
    let mut mapped = res
        .into_iter()
        .map(|t| invert_psi(&w, &t))
        .collect::<Result<Vec<_>>>()?;
    canonical_sort(&mut mapped);
    Ok((mapped, stats))
}

/// Enumerates all preferred extensions of `af` with the requested
/// algorithm; `auto` picks by the r thresholds. Returns the extensions,
/// the search statistics, and the name of the algorithm actually run.
pub fn dispatch(
    af: &ArgumentationFramework,
    mode: AlgorithmKind,
    mls_config: &MlsConfig,
) -> Result<(Vec<VertexSet>, SearchStats, &'static str)> {
    if af.n() == 0 {
        return Ok((vec![VertexSet::new(0)], SearchStats::default(), "trivial"));
    }
    match mode {
        AlgorithmKind::Auto => {
            let r = af.resolution_order() as f64 / af.n() as f64;
            if r < ORIENTED_MLS_THRESHOLD {
                dispatch(af, AlgorithmKind::Oriented, mls_config)
            } else if r < MLS_MIS_THRESHOLD {
                dispatch(af, AlgorithmKind::Mls, mls_config)
            } else {
                dispatch(af, AlgorithmKind::Mis, mls_config)
            }
        }
        AlgorithmKind::Oracle => {
            let out = oracle_preferred_extensions(af)?;
            Ok((out, SearchStats::default(), "oracle"))
        }
        AlgorithmKind::Mis => {
            let (out, stats) = via_loopless(af, mis_preferred_enumerate)?;
            Ok((out, stats, "mis"))
        }
        AlgorithmKind::Oriented => {
            let (out, stats) = run_oriented(af)?;
            Ok((out, stats, "oriented"))
        }
        AlgorithmKind::Mls => {
            let (out, stats) = via_loopless(af, |g| mls_enumerate(g, mls_config))?;
            Ok((out, stats, "mls"))
        }
        AlgorithmKind::Mase2k => {
            let inst = MaseInstance::new(af, af.full_set(), af.n() as i64);
            let (out, stats) = mase_enumerate_2k(&inst);
            Ok((out, stats, "mase2k"))
        }
    }
}
