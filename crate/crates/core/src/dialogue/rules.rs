use std::fmt;
use std::str::FromStr;

use super::moves::Agent;
use super::DialogueError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Style {
    /// An agent may answer any earlier attack on its moves.
    Classical,
    /// An agent may answer only the latest attack it has not yet answered.
    Intuitionistic,
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Classical => "classical",
            Style::Intuitionistic => "intuitionistic",
        })
    }
}

/// Structural rules of a dialogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet {
    pub style: Style,
    /// How often the Opponent may attack one move in one way, or answer one attack.
    pub rank_o: u32,
    /// Same bound for the Proponent.
    pub rank_p: u32,
    /// The Proponent may attack the Opponent's `~p` only after the Opponent
    /// attacked a Proponent assertion of `~p`.
    pub negative_literal: bool,
    /// The Opponent may not assert an atom the Proponent is committed to.
    pub d11_atom_restriction: bool,
    /// Maximum number of moves after the prelude explored by strategy search.
    pub depth_cap: usize,
}

impl RuleSet {
    pub const PRESETS: [&'static str; 4] = ["classical", "intuitionistic", "d11", "d11-nl"];

    pub fn classical() -> Self {
        RuleSet {
            style: Style::Classical,
            rank_o: 2,
            rank_p: 2,
            negative_literal: false,
            d11_atom_restriction: false,
            depth_cap: 64,
        }
    }

    pub fn intuitionistic() -> Self {
        RuleSet {
            style: Style::Intuitionistic,
            ..RuleSet::classical()
        }
    }

    /// Ranks 1/1 with the Opponent's atom restriction.
    pub fn d11() -> Self {
        RuleSet {
            rank_o: 1,
            rank_p: 1,
            d11_atom_restriction: true,
            ..RuleSet::classical()
        }
    }

    /// [`RuleSet::d11`] plus the negative-literal attack rule.
    pub fn d11_nl() -> Self {
        RuleSet {
            negative_literal: true,
            ..RuleSet::d11()
        }
    }

    pub fn preset(name: &str) -> Result<Self, DialogueError> {
        match name {
            "classical" => Ok(RuleSet::classical()),
            "intuitionistic" => Ok(RuleSet::intuitionistic()),
            "d11" => Ok(RuleSet::d11()),
            "d11-nl" => Ok(RuleSet::d11_nl()),
            other => Err(DialogueError::UnknownPreset(other.to_string())),
        }
    }

    pub fn rank(&self, agent: Agent) -> u32 {
        match agent {
            Agent::Proponent => self.rank_p,
            Agent::Opponent => self.rank_o,
        }
    }

    pub fn validate(&self) -> Result<(), DialogueError> {
        if self.rank_o == 0 || self.rank_p == 0 {
            return Err(DialogueError::InvalidRules("ranks must be positive".into()));
        }
        if self.depth_cap == 0 {
            return Err(DialogueError::InvalidRules(
                "depth_cap must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl FromStr for RuleSet {
    type Err = DialogueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleSet::preset(s)
    }
}
