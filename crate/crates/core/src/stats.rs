use serde::Serialize;

/// Search-tree instrumentation of a branching run. The leaf count is the
/// empirical side of every runtime bound we check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Nodes that did not branch further.
    pub leaves: u64,
    /// Total recursion nodes.
    pub nodes: u64,
    /// Deepest recursion level reached (root = 0).
    pub max_depth: usize,
}

impl SearchStats {
    pub fn enter(&mut self, depth: usize) {
        self.nodes += 1;
        if depth > self.max_depth {
            self.max_depth = depth;
        }
    }

    pub fn leaf(&mut self) {
        self.leaves += 1;
    }

    pub fn absorb(&mut self, other: &SearchStats) {
        self.leaves += other.leaves;
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}
