//! Propositional formulas, their concrete syntax, and a truth-table oracle.

mod formula;
mod kb;
mod parse;
mod truth;

use thiserror::Error;

pub use formula::{render_formula, Atom, Formula};
pub use kb::KnowledgeBase;
pub use parse::parse_formula;
pub use truth::{
    entails, entails_bounded, evaluate, is_consistent, is_consistent_bounded, Interpretation,
    ModelSet, Universe, DEFAULT_ATOM_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("invalid atom name '{0}'")]
    InvalidAtom(String),
    #[error("interpretation has no value for atom '{0}'")]
    MissingAtom(String),
    #[error("{count} atoms exceed the truth-table bound of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error("duplicate formula '{0}'")]
    DuplicateFormula(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<LogicError>,
    },
}

impl LogicError {
    /// True for errors caused by the truth-table size bound.
    pub fn is_resource(&self) -> bool {
        match self {
            LogicError::TooManyAtoms { .. } => true,
            LogicError::AtLine { source, .. } => source.is_resource(),
            _ => false,
        }
    }
}
