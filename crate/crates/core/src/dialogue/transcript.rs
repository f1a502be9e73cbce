use crate::logic::{parse_formula, Formula};

use super::moves::{Agent, Function, Move, Payload, Request, Target, Thesis};
use super::rules::RuleSet;
use super::state::{initial_state, DialogueState};
use super::DialogueError;

/// History positions occupied by the thesis and the rank declarations.
pub const PRELUDE: usize = 3;

/// One move as it appears in a dialogue table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptRow {
    pub agent: Agent,
    pub expression: String,
    /// Counter of the move attacked or answered; absent for the thesis.
    pub reference: Option<usize>,
    pub function: Option<Function>,
    pub counter: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub thesis: Thesis,
    pub rules: RuleSet,
    pub rows: Vec<TranscriptRow>,
    /// Set once the agent to move is stuck.
    pub winner: Option<Agent>,
    pub to_move: Agent,
}

impl Transcript {
    pub fn of(state: &DialogueState) -> Transcript {
        let rows = state
            .history
            .iter()
            .enumerate()
            .filter_map(|(p, m)| {
                let counter = DialogueState::counter_of(p)?;
                Some(TranscriptRow {
                    agent: m.agent,
                    expression: m.payload.to_string(),
                    reference: m.target.and_then(|t| DialogueState::counter_of(t.position)),
                    function: m.function,
                    counter,
                })
            })
            .collect();
        Transcript {
            thesis: state.thesis.clone(),
            rules: state.rules,
            rows,
            winner: state.winner(),
            to_move: state.to_move,
        }
    }
}

/// Replays `script` after the prelude; stops at the first illegal move.
pub fn play_script(
    thesis: &Thesis,
    rules: &RuleSet,
    script: &[Move],
) -> Result<Transcript, DialogueError> {
    rules.validate()?;
    let mut state = initial_state(thesis.clone(), *rules);
    for mv in script {
        state = state.apply_move(mv)?;
    }
    Ok(Transcript::of(&state))
}

const STUCK: &str = "⊗";

fn counter_cell(k: usize) -> String {
    format!("({k})")
}

fn reference_cell(r: Option<usize>) -> String {
    r.map(|r| r.to_string()).unwrap_or_default()
}

/// Fixed-width two-column table. Opponent cells read `(k) expr ref`,
/// Proponent cells `ref expr (k)`; a stuck agent gets `⊗`.
pub fn render_transcript(t: &Transcript) -> String {
    // Pair each Opponent move with the Proponent reply that follows it.
    let mut pairs: Vec<(Option<&TranscriptRow>, Option<&TranscriptRow>)> = Vec::new();
    for row in &t.rows {
        match row.agent {
            Agent::Opponent => pairs.push((Some(row), None)),
            Agent::Proponent => match pairs.last_mut() {
                Some((Some(_), p @ None)) => *p = Some(row),
                _ => pairs.push((None, Some(row))),
            },
        }
    }
    let mut stuck_o = false;
    let mut stuck_p = false;
    match t.winner {
        Some(Agent::Opponent) => match pairs.last() {
            Some((Some(_), None)) => stuck_p = true,
            _ => {
                pairs.push((None, None));
                stuck_p = true;
            }
        },
        Some(Agent::Proponent) => {
            pairs.push((None, None));
            stuck_o = true;
        }
        None => {}
    }

    let ew = t
        .rows
        .iter()
        .map(|r| r.expression.chars().count())
        .max()
        .unwrap_or(0)
        .max(1);
    let cw = t
        .rows
        .iter()
        .map(|r| counter_cell(r.counter).len())
        .max()
        .unwrap_or(3);
    let rw = t
        .rows
        .iter()
        .map(|r| reference_cell(r.reference).len())
        .max()
        .unwrap_or(0)
        .max(1);
    let o_cell = |r: &TranscriptRow| {
        format!(
            "{:<cw$}  {:<ew$}  {:>rw$}",
            counter_cell(r.counter),
            r.expression,
            reference_cell(r.reference)
        )
    };
    let p_cell = |r: &TranscriptRow| {
        format!(
            "{:>rw$}  {:<ew$}  {:<cw$}",
            reference_cell(r.reference),
            r.expression,
            counter_cell(r.counter)
        )
    };
    let width = cw + ew + rw + 4;
    let last = pairs.len().saturating_sub(1);
    let mut lines = vec![
        format!(" {:^width$} | {:^width$}", "Opponent", "Proponent")
            .trim_end()
            .to_string(),
        format!("-{}-+-{}-", "-".repeat(width), "-".repeat(width)),
    ];
    for (i, (o, p)) in pairs.iter().enumerate() {
        let left = match o {
            Some(r) => o_cell(r),
            None if stuck_o && i == last => format!("{:<cw$}  {STUCK}", ""),
            None => String::new(),
        };
        let right = match p {
            Some(r) => p_cell(r),
            None if stuck_p && i == last => format!("{:>rw$}  {STUCK}", ""),
            None => String::new(),
        };
        lines.push(format!(" {left:<width$} | {right}").trim_end().to_string());
    }
    if let Some(w) = t.winner {
        lines.push(format!("-{}-+-{}-", "-".repeat(width), "-".repeat(width)));
        lines.push(format!("The {} wins", w.name()));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn script_err(line: usize, msg: impl Into<String>) -> DialogueError {
    DialogueError::Script {
        line,
        msg: msg.into(),
    }
}

fn parse_payload(text: &str, line: usize) -> Result<Payload, DialogueError> {
    if let Some(r) = Request::from_token(text) {
        return Ok(Payload::Request(r));
    }
    if let Some(inner) = text.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| script_err(line, "unterminated premise list"))?;
        let premises = inner
            .split(';')
            .map(|s| parse_formula(s.trim()))
            .collect::<Result<Vec<Formula>, _>>()
            .map_err(|e| script_err(line, e.to_string()))?;
        return Ok(Payload::Grant(premises));
    }
    parse_formula(text)
        .map(Payload::Assert)
        .map_err(|e| script_err(line, e.to_string()))
}

/// Parses one move per line: `O|P attack|defend <counter>[:slot] <payload>`.
/// Counters are dialogue counters (thesis 0, first play 1); `#` starts a comment.
pub fn parse_script(text: &str) -> Result<Vec<Move>, DialogueError> {
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut parts = body.splitn(4, char::is_whitespace);
        let (Some(agent), Some(function), Some(reference), Some(payload)) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(script_err(
                line,
                "expected '<agent> <attack|defend> <counter> <payload>'",
            ));
        };
        let agent = match agent {
            "O" => Agent::Opponent,
            "P" => Agent::Proponent,
            other => return Err(script_err(line, format!("unknown agent '{other}'"))),
        };
        let function = match function {
            "attack" => Function::Attack,
            "defend" | "defence" => Function::Defence,
            other => return Err(script_err(line, format!("unknown function '{other}'"))),
        };
        let (counter, slot) = match reference.split_once(':') {
            Some((c, s)) => (c, s),
            None => (reference, "0"),
        };
        let counter: usize = counter
            .parse()
            .map_err(|_| script_err(line, format!("bad counter '{reference}'")))?;
        let slot: usize = slot
            .parse()
            .map_err(|_| script_err(line, format!("bad slot in '{reference}'")))?;
        let payload = parse_payload(payload.trim(), line)?;
        moves.push(Move {
            agent,
            payload,
            target: Some(Target {
                position: DialogueState::position_of(counter),
                slot,
            }),
            function: Some(function),
        });
    }
    Ok(moves)
}
