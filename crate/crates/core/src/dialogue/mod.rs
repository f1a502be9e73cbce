//! Dialogical logic games between a Proponent and an Opponent: local and
//! structural rules, scripted play, transcripts and winning-strategy search.

mod moves;
mod rules;
mod search;
mod state;
mod transcript;

use thiserror::Error;

use crate::logic::LogicError;

pub use moves::{Agent, Function, Move, MoveKind, Payload, Request, Target, Thesis};
pub use rules::{RuleSet, Style};
pub use search::{proponent_wins, Strategy, StrategyResult};
pub use state::{initial_state, DialogueState, Violation};
pub use transcript::{
    parse_script, play_script, render_transcript, Transcript, TranscriptRow, PRELUDE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DialogueError {
    #[error("move {counter} is illegal: {violation}")]
    Illegal {
        counter: usize,
        violation: Violation,
    },
    #[error("search exceeded the depth cap of {0} moves")]
    DepthCap(usize),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("invalid rule set: {0}")]
    InvalidRules(String),
    #[error("script line {line}: {msg}")]
    Script { line: usize, msg: String },
    #[error(transparent)]
    Logic(#[from] LogicError),
}
