use super::moves::{Agent, Move, Thesis};
use super::rules::RuleSet;
use super::state::{initial_state, DialogueState};
use super::DialogueError;

/// A Proponent winning strategy: one answer to every Opponent choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    ProponentMove {
        mv: Move,
        next: Box<Strategy>,
    },
    /// Empty when the Opponent is stuck.
    OpponentChoices(Vec<(Move, Strategy)>),
}

impl Strategy {
    /// Longest play (in moves) the strategy can lead to.
    pub fn depth(&self) -> usize {
        match self {
            Strategy::ProponentMove { next, .. } => 1 + next.depth(),
            Strategy::OpponentChoices(cs) => {
                cs.iter().map(|(_, s)| 1 + s.depth()).max().unwrap_or(0)
            }
        }
    }

    /// Number of distinct plays covered.
    pub fn leaves(&self) -> usize {
        match self {
            Strategy::ProponentMove { next, .. } => next.leaves(),
            Strategy::OpponentChoices(cs) if cs.is_empty() => 1,
            Strategy::OpponentChoices(cs) => cs.iter().map(|(_, s)| s.leaves()).sum(),
        }
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        match self {
            Strategy::ProponentMove { mv, next } => {
                out.push_str(&format!("{:indent$}{mv}\n", ""));
                next.render_into(indent, out);
            }
            Strategy::OpponentChoices(cs) if cs.is_empty() => {
                out.push_str(&format!("{:indent$}(Opponent cannot move)\n", ""));
            }
            Strategy::OpponentChoices(cs) => {
                for (mv, s) in cs {
                    out.push_str(&format!("{:indent$}{mv}\n", ""));
                    s.render_into(indent + 2, out);
                }
            }
        }
    }

    /// Indented tree, one move per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyResult {
    pub winner: Agent,
    /// Present exactly when the Proponent wins.
    pub strategy: Option<Strategy>,
}

/// Searches for a Proponent winning strategy from the initial position.
pub fn proponent_wins(thesis: &Thesis, rules: &RuleSet) -> Result<StrategyResult, DialogueError> {
    rules.validate()?;
    let state = initial_state(thesis.clone(), *rules);
    let strategy = solve(&state)?;
    Ok(StrategyResult {
        winner: if strategy.is_some() {
            Agent::Proponent
        } else {
            Agent::Opponent
        },
        strategy,
    })
}

fn solve(state: &DialogueState) -> Result<Option<Strategy>, DialogueError> {
    let moves = state.legal_moves();
    if !moves.is_empty() && state.plays() >= state.rules.depth_cap {
        return Err(DialogueError::DepthCap(state.rules.depth_cap));
    }
    match state.to_move {
        Agent::Proponent => {
            for mv in moves {
                let next = state.apply_move(&mv)?;
                if let Some(s) = solve(&next)? {
                    return Ok(Some(Strategy::ProponentMove {
                        mv,
                        next: Box::new(s),
                    }));
                }
            }
            Ok(None)
        }
        Agent::Opponent => {
            let mut choices = Vec::with_capacity(moves.len());
            for mv in moves {
                let next = state.apply_move(&mv)?;
                match solve(&next)? {
                    Some(s) => choices.push((mv, s)),
                    None => return Ok(None),
                }
            }
            Ok(Some(Strategy::OpponentChoices(choices)))
        }
    }
}
