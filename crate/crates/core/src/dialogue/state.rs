use std::collections::BTreeSet;
use std::fmt;

use crate::logic::Formula;

use super::moves::{Agent, Function, Move, Payload, Request, Target, Thesis};
use super::rules::{RuleSet, Style};
use super::transcript::PRELUDE;
use super::DialogueError;

/// Why a move is not allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotYourTurn,
    MalformedMove,
    UnknownTarget(usize),
    /// The targeted position asserts nothing that can be attacked this way.
    LocalRule(String),
    /// Intuitionistic play: only the latest unanswered attack may be answered.
    StyleRule {
        latest: Option<usize>,
    },
    RankExhausted {
        rank: u32,
    },
    RepeatedMove,
    /// The Opponent answers a Proponent attack by a defence or by a
    /// counter-attack, not both.
    MixedReply(usize),
    ProponentAtom(String),
    OpponentAtomRestriction(String),
    NegativeLiteral(String),
}

impl Violation {
    /// Short stable name of the rule.
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::NotYourTurn => "alternation",
            Violation::MalformedMove => "move-form",
            Violation::UnknownTarget(_) => "target",
            Violation::LocalRule(_) => "local-rule",
            Violation::StyleRule { .. } => "intuitionistic-defence",
            Violation::RankExhausted { .. } => "rank",
            Violation::RepeatedMove => "repetition",
            Violation::MixedReply(_) => "single-reply",
            Violation::ProponentAtom(_) => "proponent-atom",
            Violation::OpponentAtomRestriction(_) => "d11-atom-restriction",
            Violation::NegativeLiteral(_) => "negative-literal",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.rule())?;
        match self {
            Violation::NotYourTurn => write!(f, "it is the other agent's turn"),
            Violation::MalformedMove => write!(f, "move lacks a target or function"),
            Violation::UnknownTarget(p) => write!(f, "no move at position {p} can be targeted"),
            Violation::LocalRule(m) => write!(f, "{m}"),
            Violation::StyleRule { latest: Some(p) } => {
                write!(f, "only the attack at position {p} may be answered")
            }
            Violation::StyleRule { latest: None } => write!(f, "no attack is open"),
            Violation::RankExhausted { rank } => write!(f, "rank {rank} already used up"),
            Violation::RepeatedMove => write!(f, "identical move already played"),
            Violation::MixedReply(p) => write!(f, "the attack at position {p} was already answered the other way"),
            Violation::ProponentAtom(a) => write!(
                f,
                "the Proponent may assert '{a}' only after the Opponent did, or when committed to its negation"
            ),
            Violation::OpponentAtomRestriction(a) => {
                write!(f, "the Proponent is already committed to '{a}'")
            }
            Violation::NegativeLiteral(g) => write!(
                f,
                "'{g}' may be attacked only after the Opponent attacked the Proponent's '{g}'"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialogueState {
    pub thesis: Thesis,
    pub rules: RuleSet,
    pub history: Vec<Move>,
    pub to_move: Agent,
}

/// Thesis at position 0, the Opponent's rank at 1, the Proponent's at 2.
pub fn initial_state(thesis: Thesis, rules: RuleSet) -> DialogueState {
    let history = vec![
        Move {
            agent: Agent::Proponent,
            payload: Payload::Thesis(thesis.clone()),
            target: None,
            function: None,
        },
        Move {
            agent: Agent::Opponent,
            payload: Payload::Rank(rules.rank_o),
            target: None,
            function: None,
        },
        Move {
            agent: Agent::Proponent,
            payload: Payload::Rank(rules.rank_p),
            target: None,
            function: None,
        },
    ];
    DialogueState {
        thesis,
        rules,
        history,
        to_move: Agent::Opponent,
    }
}

/// What a position asserts, as seen by the local rules.
enum Assertion<'a> {
    Formula(&'a Formula),
    Sequent(&'a Thesis),
}

/// Attack payloads allowed against an assertion, each with its attack form.
fn local_attacks(a: &Assertion<'_>, at_thesis: bool) -> Vec<(Payload, u8)> {
    match a {
        Assertion::Sequent(t) => vec![(Payload::Grant(t.premises.clone()), 0)],
        Assertion::Formula(f) => match f {
            Formula::Not(g) => vec![(Payload::Assert((**g).clone()), 0)],
            Formula::Implies(l, _) => vec![(Payload::Assert((**l).clone()), 0)],
            Formula::And(..) => vec![
                (Payload::Request(Request::Left), 1),
                (Payload::Request(Request::Right), 2),
            ],
            Formula::Or(..) => vec![(Payload::Request(Request::Disjunct), 3)],
            Formula::Atom(_) if at_thesis => vec![(Payload::Request(Request::Challenge), 4)],
            Formula::Atom(_) => Vec::new(),
        },
    }
}

/// Defence payloads answering `attack` on an assertion.
fn local_defences(a: &Assertion<'_>, attack: &Payload) -> Vec<Payload> {
    match (a, attack) {
        (Assertion::Sequent(t), Payload::Grant(_)) => vec![Payload::Assert(t.conclusion.clone())],
        (Assertion::Formula(Formula::And(l, _)), Payload::Request(Request::Left)) => {
            vec![Payload::Assert((**l).clone())]
        }
        (Assertion::Formula(Formula::And(_, r)), Payload::Request(Request::Right)) => {
            vec![Payload::Assert((**r).clone())]
        }
        (Assertion::Formula(Formula::Or(l, r)), Payload::Request(Request::Disjunct)) => {
            vec![
                Payload::Assert((**l).clone()),
                Payload::Assert((**r).clone()),
            ]
        }
        (Assertion::Formula(Formula::Implies(_, r)), Payload::Assert(_)) => {
            vec![Payload::Assert((**r).clone())]
        }
        (Assertion::Formula(f @ Formula::Atom(_)), Payload::Request(Request::Challenge)) => {
            vec![Payload::Assert((*f).clone())]
        }
        _ => Vec::new(),
    }
}

fn attack_form(a: &Assertion<'_>, payload: &Payload, at_thesis: bool) -> Option<u8> {
    local_attacks(a, at_thesis)
        .into_iter()
        .find(|(p, _)| p == payload)
        .map(|(_, form)| form)
}

/// Closure of `formulas` under conjunct elimination.
fn conjunct_closure<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> BTreeSet<&'a Formula> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<&Formula> = formulas.into_iter().collect();
    while let Some(f) = stack.pop() {
        if out.insert(f) {
            if let Formula::And(l, r) = f {
                stack.push(l);
                stack.push(r);
            }
        }
    }
    out
}

impl DialogueState {
    /// Number of moves played after the prelude.
    pub fn plays(&self) -> usize {
        self.history.len() - PRELUDE
    }

    fn assertion(&self, target: Target) -> Option<Assertion<'_>> {
        let mv = self.history.get(target.position)?;
        match &mv.payload {
            Payload::Thesis(t) if t.is_sequent() => {
                (target.slot == 0).then_some(Assertion::Sequent(t))
            }
            Payload::Thesis(t) => (target.slot == 0).then_some(Assertion::Formula(&t.conclusion)),
            Payload::Assert(f) => (target.slot == 0).then_some(Assertion::Formula(f)),
            Payload::Grant(ps) => ps.get(target.slot).map(Assertion::Formula),
            _ => None,
        }
    }

    fn asserted_by(&self, agent: Agent) -> impl Iterator<Item = &Formula> {
        self.history
            .iter()
            .filter(move |m| m.agent == agent)
            .flat_map(|m| m.asserted())
    }

    /// The thesis conclusion and every formula the Proponent asserted in a defence.
    fn defended_by_proponent(&self) -> BTreeSet<&Formula> {
        std::iter::once(&self.thesis.conclusion)
            .chain(
                self.history
                    .iter()
                    .filter(|m| {
                        m.agent == Agent::Proponent && m.function == Some(Function::Defence)
                    })
                    .flat_map(|m| m.asserted()),
            )
            .collect()
    }

    /// Formulas the Proponent is committed to.
    fn proponent_commitments(&self) -> BTreeSet<&Formula> {
        conjunct_closure(self.asserted_by(Agent::Proponent))
    }

    fn count(&self, agent: Agent, function: Function, pred: impl Fn(&Move) -> bool) -> u32 {
        self.history
            .iter()
            .filter(|m| m.agent == agent && m.function == Some(function) && pred(m))
            .count() as u32
    }

    /// Attack positions by the other agent on `agent`'s moves.
    fn attacks_on(&self, agent: Agent) -> Vec<usize> {
        (PRELUDE..self.history.len())
            .filter(|&p| {
                let m = &self.history[p];
                m.agent == agent.other()
                    && m.function == Some(Function::Attack)
                    && m.target
                        .map(|t| self.history[t.position].agent == agent)
                        .unwrap_or(false)
            })
            .collect()
    }

    /// Checks `mv` against every rule; `Ok` means it is legal.
    pub fn check_move(&self, mv: &Move) -> Result<(), Violation> {
        let x = self.to_move;
        if mv.agent != x {
            return Err(Violation::NotYourTurn);
        }
        let (Some(target), Some(function)) = (mv.target, mv.function) else {
            return Err(Violation::MalformedMove);
        };
        if matches!(mv.payload, Payload::Thesis(_) | Payload::Rank(_)) {
            return Err(Violation::MalformedMove);
        }
        let Some(tmove) = self.history.get(target.position) else {
            return Err(Violation::UnknownTarget(target.position));
        };
        if tmove.agent == x {
            return Err(Violation::UnknownTarget(target.position));
        }
        let rank = self.rules.rank(x);
        match function {
            Function::Attack => {
                let Some(assertion) = self.assertion(target) else {
                    return Err(Violation::UnknownTarget(target.position));
                };
                let at_thesis = target.position == 0;
                let Some(form) = attack_form(&assertion, &mv.payload, at_thesis) else {
                    return Err(Violation::LocalRule(format!(
                        "'{}' is not an attack on the move at position {}",
                        mv.payload, target.position
                    )));
                };
                let used = self.count(x, Function::Attack, |m| {
                    m.target == Some(target)
                        && attack_form(&assertion, &m.payload, at_thesis) == Some(form)
                });
                if used >= rank {
                    return Err(Violation::RankExhausted { rank });
                }
                if self.rules.negative_literal && x == Agent::Proponent {
                    if let Assertion::Formula(f @ Formula::Not(inner)) = &assertion {
                        if inner.is_atom() && !self.opponent_attacked_proponent(f) {
                            return Err(Violation::NegativeLiteral(f.to_string()));
                        }
                    }
                }
            }
            Function::Defence => {
                if tmove.function != Some(Function::Attack) {
                    return Err(Violation::LocalRule(format!(
                        "the move at position {} is not an attack",
                        target.position
                    )));
                }
                let attacked = tmove.target.expect("attacks carry a target");
                if self.history[attacked.position].agent != x {
                    return Err(Violation::LocalRule(format!(
                        "the attack at position {} is not aimed at this agent",
                        target.position
                    )));
                }
                let assertion = self
                    .assertion(attacked)
                    .expect("recorded attacks target assertions");
                if !local_defences(&assertion, &tmove.payload).contains(&mv.payload) {
                    return Err(Violation::LocalRule(format!(
                        "'{}' does not answer the attack at position {}",
                        mv.payload, target.position
                    )));
                }
                if self.rules.style == Style::Intuitionistic {
                    let latest = self
                        .attacks_on(x)
                        .into_iter()
                        .filter(|&a| {
                            self.count(x, Function::Defence, |m| m.target == Some(Target::at(a)))
                                == 0
                        })
                        .max();
                    if latest != Some(target.position) {
                        return Err(Violation::StyleRule { latest });
                    }
                }
                let used = self.count(x, Function::Defence, |m| m.target == Some(target));
                if used >= rank {
                    return Err(Violation::RankExhausted { rank });
                }
            }
        }
        if self.history.iter().any(|m| m == mv) {
            return Err(Violation::RepeatedMove);
        }
        if x == Agent::Opponent && tmove.function == Some(Function::Attack) {
            let other = match function {
                Function::Attack => Function::Defence,
                Function::Defence => Function::Attack,
            };
            if self.count(x, other, |m| {
                m.target.is_some_and(|t| t.position == target.position)
            }) > 0
            {
                return Err(Violation::MixedReply(target.position));
            }
        }
        match x {
            Agent::Proponent => {
                // Under the d11 restriction a conjunction commits to each conjunct;
                // otherwise only the thesis and the Proponent's defences count.
                let own: BTreeSet<&Formula> = if self.rules.d11_atom_restriction {
                    self.proponent_commitments()
                } else {
                    self.defended_by_proponent()
                };
                let from_o: BTreeSet<&Formula> = self.asserted_by(Agent::Opponent).collect();
                for f in mv.asserted().into_iter().filter(|f| f.is_atom()) {
                    let negated = Formula::not(f.clone());
                    if !from_o.contains(f) && !own.contains(&negated) {
                        return Err(Violation::ProponentAtom(f.to_string()));
                    }
                }
            }
            Agent::Opponent => {
                if self.rules.d11_atom_restriction {
                    let commitments = self.proponent_commitments();
                    for f in mv.asserted().into_iter().filter(|f| f.is_atom()) {
                        if commitments.contains(f) {
                            return Err(Violation::OpponentAtomRestriction(f.to_string()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the Opponent has attacked a Proponent assertion of `f`.
    fn opponent_attacked_proponent(&self, f: &Formula) -> bool {
        self.history.iter().any(|m| {
            m.agent == Agent::Opponent
                && m.function == Some(Function::Attack)
                && m.target.is_some_and(|t| {
                    self.history[t.position].agent == Agent::Proponent
                        && matches!(self.assertion(t), Some(Assertion::Formula(g)) if g == f)
                })
        })
    }

    /// Every move the local rules produce for the agent to move, before the
    /// structural filters.
    fn candidates(&self) -> Vec<Move> {
        let x = self.to_move;
        let mut out = Vec::new();
        for (p, m) in self.history.iter().enumerate() {
            if m.agent == x {
                continue;
            }
            let slots = match &m.payload {
                Payload::Grant(ps) => ps.len(),
                Payload::Thesis(_) | Payload::Assert(_) => 1,
                _ => 0,
            };
            for slot in 0..slots {
                let target = Target { position: p, slot };
                let assertion = self.assertion(target).expect("slot exists");
                for (payload, _) in local_attacks(&assertion, p == 0) {
                    out.push(Move {
                        agent: x,
                        payload,
                        target: Some(target),
                        function: Some(Function::Attack),
                    });
                }
            }
            if m.function == Some(Function::Attack) {
                let attacked = m.target.expect("attacks carry a target");
                if self.history[attacked.position].agent == x {
                    let assertion = self
                        .assertion(attacked)
                        .expect("attack target is an assertion");
                    for payload in local_defences(&assertion, &m.payload) {
                        out.push(Move::defend(x, p, payload));
                    }
                }
            }
        }
        out
    }

    /// Legal moves, ordered by target position, then payload rendering.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut moves: Vec<Move> = self
            .candidates()
            .into_iter()
            .filter(|m| self.check_move(m).is_ok())
            .collect();
        moves.sort_by_cached_key(|m| {
            let t = m.target.expect("plays carry a target");
            (t.position, t.slot, m.payload.to_string(), m.function)
        });
        moves.dedup();
        moves
    }

    pub fn apply_move(&self, mv: &Move) -> Result<DialogueState, DialogueError> {
        self.check_move(mv)
            .map_err(|violation| DialogueError::Illegal {
                counter: self.plays() + 1,
                violation,
            })?;
        let mut next = self.clone();
        next.history.push(mv.clone());
        next.to_move = self.to_move.other();
        Ok(next)
    }

    /// The winner once the agent to move is stuck.
    pub fn winner(&self) -> Option<Agent> {
        self.legal_moves().is_empty().then(|| self.to_move.other())
    }

    /// Display counter of a history position: the thesis is 0 and plays
    /// count from 1, skipping the rank declarations.
    pub fn counter_of(position: usize) -> Option<usize> {
        match position {
            0 => Some(0),
            1 | 2 => None,
            p => Some(p - PRELUDE + 1),
        }
    }

    /// Inverse of [`DialogueState::counter_of`].
    pub fn position_of(counter: usize) -> usize {
        if counter == 0 {
            0
        } else {
            counter + PRELUDE - 1
        }
    }
}
