//! Independent web-rewriting oracle for A2 skein evaluations.
//!
//! Webs are stored as rotation-system combinatorial maps: directed edges made
//! of half-edge pairs, trivalent sinks and sources, 4-valent crossings, and
//! clasp boxes, embedded in a disk whose boundary carries the web's endpoints.
//! Evaluation expands clasp boxes by their defining recursions, resolves
//! crossings by the skein relation, and rewrites circles, bigons and square
//! faces until only non-elliptic webs remain. Everything is computed by local
//! graph rewriting; no closed-form web evaluations are consulted, so this
//! crate can serve as an independent check of them.

pub mod basis;
pub mod braid;
pub mod catalogue;
pub mod diagram;
pub mod pair;
pub mod reduce;
pub mod skein;
pub mod textfmt;

pub use diagram::{Attach, VertexKind, WebDiagram};
pub use skein::SkeinElement;

use thiserror::Error;

/// Errors from oracle construction and evaluation.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error("rewrite budget exhausted (limit {limit}); raise A2REP_BUDGET if intended")]
    BudgetExceeded { limit: u64 },
    #[error("malformed diagram: {0}")]
    Invalid(String),
    #[error("diagram parse error: {0}")]
    Parse(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("gram matrix is singular")]
    SingularGram,
}

/// Step counter guarding all rewriting loops.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    left: u64,
}

impl Budget {
    /// Reads the limit from A2REP_BUDGET (default 1_000_000).
    pub fn from_env() -> Self {
        let limit = std::env::var("A2REP_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(1_000_000);
        Budget { limit, left: limit }
    }

    pub fn with_limit(limit: u64) -> Self {
        Budget { limit, left: limit }
    }

    pub fn step(&mut self) -> Result<(), OracleError> {
        if self.left == 0 {
            return Err(OracleError::BudgetExceeded { limit: self.limit });
        }
        self.left -= 1;
        Ok(())
    }
}
