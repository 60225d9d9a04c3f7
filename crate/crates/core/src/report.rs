//! Machine-readable run summary emitted by the CLI as one JSON object
//! per line.

use serde::Serialize;

use crate::stats::SearchStats;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    /// Where the instance came from: a path or a generator spec.
    pub instance: String,
    /// Algorithm actually executed (dispatch may resolve `auto`).
    pub algorithm: String,
    pub n: usize,
    /// Fraction of vertices on 2-cycles.
    pub r: f64,
    pub extension_count: usize,
    pub stats: SearchStats,
    pub wall_ms: f64,
}
