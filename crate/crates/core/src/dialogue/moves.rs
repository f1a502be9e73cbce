use std::fmt;
use std::str::FromStr;

use crate::logic::{parse_formula, Formula, LogicError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Agent {
    Proponent,
    Opponent,
}

impl Agent {
    pub fn other(self) -> Agent {
        match self {
            Agent::Proponent => Agent::Opponent,
            Agent::Opponent => Agent::Proponent,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Agent::Proponent => 'P',
            Agent::Opponent => 'O',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Agent::Proponent => "Proponent",
            Agent::Opponent => "Opponent",
        }
    }
}

impl fmt::Display for Agent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A conclusion claimed to follow from premises; a bare formula when there
/// are no premises.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Thesis {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Thesis {
    pub fn formula(conclusion: Formula) -> Self {
        Thesis {
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn sequent(premises: Vec<Formula>, conclusion: Formula) -> Self {
        Thesis {
            premises,
            conclusion,
        }
    }

    pub fn is_sequent(&self) -> bool {
        !self.premises.is_empty()
    }
}

impl fmt::Display for Thesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.premises.is_empty() {
            write!(f, "{}", self.conclusion)
        } else {
            let ps: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
            write!(f, "{} [{}]", self.conclusion, ps.join(", "))
        }
    }
}

/// Accepts `c`, `c [p1, p2]` and `p1, p2 |- c`.
impl FromStr for Thesis {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let list = |ps: &str| -> Result<Vec<Formula>, LogicError> {
            ps.split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(parse_formula)
                .collect()
        };
        if let Some((ps, c)) = s.split_once("|-") {
            return Ok(Thesis::sequent(list(ps)?, parse_formula(c)?));
        }
        if let Some((c, rest)) = s.split_once('[') {
            if let Some(ps) = rest.trim_end().strip_suffix(']') {
                return Ok(Thesis::sequent(list(ps)?, parse_formula(c)?));
            }
        }
        Ok(Thesis::formula(parse_formula(s)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Request {
    /// `?L`: left conjunct.
    Left,
    /// `?R`: right conjunct.
    Right,
    /// `?v`: either disjunct.
    Disjunct,
    /// `?`: challenge to an atomic thesis.
    Challenge,
}

impl Request {
    pub fn token(self) -> &'static str {
        match self {
            Request::Left => "?L",
            Request::Right => "?R",
            Request::Disjunct => "?v",
            Request::Challenge => "?",
        }
    }

    pub fn from_token(s: &str) -> Option<Request> {
        match s {
            "?L" => Some(Request::Left),
            "?R" => Some(Request::Right),
            "?v" | "?|" => Some(Request::Disjunct),
            "?" => Some(Request::Challenge),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Payload {
    Thesis(Thesis),
    Rank(u32),
    Assert(Formula),
    /// The Opponent's concession of every premise of a sequent thesis.
    Grant(Vec<Formula>),
    Request(Request),
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Thesis(t) => write!(f, "{t}"),
            Payload::Rank(r) => write!(f, "n:={r}"),
            Payload::Assert(g) => write!(f, "{g}"),
            Payload::Grant(ps) => {
                let ps: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", ps.join("; "))
            }
            Payload::Request(r) => f.write_str(r.token()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Assert,
    Request,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Function {
    Attack,
    Defence,
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Function::Attack => "attack",
            Function::Defence => "defend",
        })
    }
}

/// A history position, and for multi-formula assertions (granted premises)
/// the index of the formula meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Target {
    pub position: usize,
    pub slot: usize,
}

impl Target {
    pub fn at(position: usize) -> Self {
        Target { position, slot: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    pub agent: Agent,
    pub payload: Payload,
    /// Absent only for the thesis and the rank declarations.
    pub target: Option<Target>,
    pub function: Option<Function>,
}

impl Move {
    pub fn attack(agent: Agent, position: usize, payload: Payload) -> Self {
        Move {
            agent,
            payload,
            target: Some(Target::at(position)),
            function: Some(Function::Attack),
        }
    }

    pub fn defend(agent: Agent, position: usize, payload: Payload) -> Self {
        Move {
            agent,
            payload,
            target: Some(Target::at(position)),
            function: Some(Function::Defence),
        }
    }

    pub fn kind(&self) -> MoveKind {
        match self.payload {
            Payload::Request(_) => MoveKind::Request,
            _ => MoveKind::Assert,
        }
    }

    /// Formulas this move asserts.
    pub fn asserted(&self) -> Vec<&Formula> {
        match &self.payload {
            Payload::Thesis(t) if !t.is_sequent() => vec![&t.conclusion],
            Payload::Assert(f) => vec![f],
            Payload::Grant(ps) => ps.iter().collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.kind() == MoveKind::Request {
            ""
        } else {
            "!"
        };
        write!(f, "{}-{mark}{}", self.agent.letter(), self.payload)?;
        if let (Some(t), Some(func)) = (self.target, self.function) {
            // Dialogue counter: the rank declarations take positions 1 and 2.
            let counter = if t.position == 0 { 0 } else { t.position - 2 };
            write!(
                f,
                " [{counter}, {}]",
                if func == Function::Attack { "A" } else { "D" }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thesis_forms() {
        let a: Thesis = "y [a, a -> y]".parse().unwrap();
        let b: Thesis = "a, a -> y |- y".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "y [a, a -> y]");
        assert_eq!(a.to_string().parse::<Thesis>().unwrap(), a);
        let c: Thesis = "a & ~a".parse().unwrap();
        assert!(!c.is_sequent());
        assert!("a [b".parse::<Thesis>().is_err());
    }
}
