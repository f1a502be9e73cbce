//! Syntactic checking for the quantified relevant logic DKQ: first-order
//! formulas, the thirteen axiom schemes, the four rules and derivations.

mod derivation;
mod formula;
mod schemes;

use thiserror::Error;

pub use derivation::{
    check_derivation, check_derivation_with, check_rule, parse_derivation, Derivation,
    DerivationLine, Justification, LineFault, Rule, Warning,
};
pub use formula::{is_variable_name, parse_fo, substitute, FoFormula, Term};
pub use schemes::{match_axiom, match_axiom_in, schemes, Binding, Scheme, SchemeSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DkqError {
    #[error("syntax error at offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("substituting would capture '{var}' in {formula}")]
    Capture { var: String, formula: String },
    #[error("{rule} takes {expected} premise(s), got {found}")]
    Arity {
        rule: Rule,
        expected: usize,
        found: usize,
    },
    #[error("{0} is unbound")]
    Unbound(String),
    #[error("unknown scheme set '{0}' (expected printed or corrected)")]
    UnknownSchemeSet(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {index}: {fault}")]
    Line { index: usize, fault: LineFault },
}
