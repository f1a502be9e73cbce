//! Value-based argumentation: audiences, audience-relative defeat and
//! acceptability, and orderings over the practices arguments stand for.

mod framework;
mod practice;
mod random;
mod semantics;

use thiserror::Error;

use crate::af::AfError;

pub use framework::{valpref, Audience, ValueFramework};
pub use practice::{hasse_to_dot, practice_ordering, PracticeOrdering};
pub use random::random_value_framework;
pub use semantics::{
    acceptable_to, admissible_for, admissible_for_with, conflict_free_for,
    conflict_free_for_strict, conflict_free_for_with, defeats_for, preferred_for_audience,
    preferred_for_audience_with, reduce_for_audience, status_for_audience, statuses_for_audience,
    ConflictReading,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VafError {
    #[error(transparent)]
    Af(#[from] AfError),
    #[error("unknown value '{0}'")]
    UnknownValue(String),
    #[error("unknown audience '{0}'")]
    UnknownAudience(String),
    #[error("argument '{0}' has no value")]
    MissingValue(String),
    #[error("argument '{0}' has no practice")]
    UnmappedPractice(String),
    #[error("audience '{0}' declared twice")]
    DuplicateAudience(String),
    #[error("audience '{audience}' is not a total order: {detail}")]
    AudienceNotTotal { audience: String, detail: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dominance relation has a cycle through '{0}'")]
    Cycle(String),
}
