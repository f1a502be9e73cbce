//! Deductive arguments built from a propositional knowledge base, and the
//! attack relation between them.

mod builder;
mod table;

use std::fmt;

use thiserror::Error;

use crate::af::AfError;
use crate::logic::{Formula, LogicError};

pub use builder::{
    attacks, build_arguments, canonical_undercut_claim, check_argument, framework_from_kb,
    BuilderConfig, InvariantViolation,
};
pub use table::ArgumentTable;

/// A support set drawn from a knowledge base together with the claim it
/// entails. Support formulas keep the knowledge base's order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructuredArgument {
    pub id: String,
    pub support: Vec<Formula>,
    pub claim: Formula,
}

impl StructuredArgument {
    pub fn new(id: impl Into<String>, support: Vec<Formula>, claim: Formula) -> Self {
        StructuredArgument {
            id: id.into(),
            support,
            claim,
        }
    }

    /// True when both arguments have the same support set and claim.
    pub fn same_content(&self, other: &StructuredArgument) -> bool {
        self.claim == other.claim
            && self.support.len() == other.support.len()
            && self.support.iter().all(|f| other.support.contains(f))
    }
}

impl fmt::Display for StructuredArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support: Vec<String> = self.support.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "argument({}, [{}], {}).",
            self.id,
            support.join("; "),
            self.claim
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgError {
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Af(#[from] AfError),
    #[error("max_support_size must be at least 1")]
    InvalidConfig,
    #[error("canonical undercut needs a non-empty support")]
    EmptySupport,
    #[error("subset search exceeded the node budget of {0}")]
    Budget(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl ArgError {
    pub fn is_resource(&self) -> bool {
        match self {
            ArgError::Budget(_) => true,
            ArgError::Logic(e) => e.is_resource(),
            ArgError::Af(AfError::Resource(_)) => true,
            _ => false,
        }
    }
}
