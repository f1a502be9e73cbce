//! Abstract argumentation frameworks and their extension-based and
//! labelling-based semantics.

mod dot;
mod framework;
mod random;
mod semantics;

use thiserror::Error;

pub use dot::framework_to_dot;
pub use framework::Framework;
pub use random::random_framework;
pub use semantics::{
    all_statuses, argument_status, argument_status_with, defends, enumerate_extensions,
    enumerate_extensions_with, format_set, grounded_extension, is_conflict_free, legal_labellings,
    legal_labellings_with, semantic_labellings, Extension, Label, Labelling, Semantics,
    SolverConfig, Status,
};

pub(crate) use dot::escape as dot_escape;
pub(crate) use framework::{is_identifier, parse_fact, split_fact, strip_comment};
pub(crate) use semantics::status_over;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AfError {
    #[error("unknown node '{0}'")]
    UnknownNode(String),
    #[error("duplicate node '{0}'")]
    DuplicateNode(String),
    #[error("unknown semantics '{0}'")]
    UnknownSemantics(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: attack endpoint '{node}' is not a declared argument")]
    DanglingAttack { line: usize, node: String },
    #[error("no {0} labelling exists")]
    NoLabelling(Semantics),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}
