use argval::af::AfError;
use argval::argument::ArgError;
use argval::dialogue::DialogueError;
use argval::dkq::DkqError;
use argval::logic::LogicError;
use argval::vaf::VafError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Well-formed input with no acceptable answer.
    #[error("{0}")]
    Semantic(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Semantic(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<LogicError> for CliError {
    fn from(e: LogicError) -> Self {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<AfError> for CliError {
    fn from(e: AfError) -> Self {
        match e {
            AfError::NoLabelling(_) => CliError::Semantic(e.to_string()),
            AfError::Resource(_) => CliError::Resource(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<VafError> for CliError {
    fn from(e: VafError) -> Self {
        match e {
            VafError::Af(inner) => inner.into(),
            VafError::Cycle(_) => CliError::Semantic(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ArgError> for CliError {
    fn from(e: ArgError) -> Self {
        match e {
            ArgError::Af(inner) => inner.into(),
            ArgError::Logic(inner) => inner.into(),
            e if e.is_resource() => CliError::Resource(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<DialogueError> for CliError {
    fn from(e: DialogueError) -> Self {
        match e {
            DialogueError::DepthCap(_) => CliError::Resource(e.to_string()),
            DialogueError::Illegal { .. } => CliError::Semantic(e.to_string()),
            DialogueError::Logic(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DkqError> for CliError {
    fn from(e: DkqError) -> Self {
        match e {
            DkqError::Line { .. } => CliError::Semantic(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
