use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::logic::Formula;

use super::DkqError;

/// Identifiers starting with `u`..`z` are variables; anything else is a constant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    pub fn from_name(name: &str) -> Term {
        if is_variable_name(name) {
            Term::Var(name.to_string())
        } else {
            Term::Const(name.to_string())
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_variable_name(name: &str) -> bool {
    matches!(name.chars().next(), Some('u'..='z'))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoFormula {
    /// A propositional atom is a predicate with no arguments.
    Pred(String, Vec<Term>),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Implies(Box<FoFormula>, Box<FoFormula>),
    Forall(String, Box<FoFormula>),
    /// Particular quantifier: parsed and printed, but no scheme mentions it.
    Exists(String, Box<FoFormula>),
}

impl FoFormula {
    pub fn atom(name: &str) -> Self {
        FoFormula::Pred(name.to_string(), Vec::new())
    }

    pub fn pred(name: &str, args: Vec<Term>) -> Self {
        FoFormula::Pred(name.to_string(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: FoFormula) -> Self {
        FoFormula::Not(Box::new(f))
    }

    pub fn and(l: FoFormula, r: FoFormula) -> Self {
        FoFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: FoFormula, r: FoFormula) -> Self {
        FoFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: FoFormula, r: FoFormula) -> Self {
        FoFormula::Implies(Box::new(l), Box::new(r))
    }

    pub fn forall(var: &str, body: FoFormula) -> Self {
        FoFormula::Forall(var.to_string(), Box::new(body))
    }

    pub fn exists(var: &str, body: FoFormula) -> Self {
        FoFormula::Exists(var.to_string(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            FoFormula::Pred(_, args) => {
                for t in args {
                    if let Term::Var(v) = t {
                        if !bound.contains(v) {
                            out.insert(v.clone());
                        }
                    }
                }
            }
            FoFormula::Not(g) => g.collect_free(bound, out),
            FoFormula::And(l, r) | FoFormula::Or(l, r) | FoFormula::Implies(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            FoFormula::Forall(v, g) | FoFormula::Exists(v, g) => {
                bound.push(v.clone());
                g.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_free(&self, var: &str) -> bool {
        self.free_vars().contains(var)
    }

    pub fn mentions_exists(&self) -> bool {
        match self {
            FoFormula::Pred(..) => false,
            FoFormula::Exists(..) => true,
            FoFormula::Not(g) | FoFormula::Forall(_, g) => g.mentions_exists(),
            FoFormula::And(l, r) | FoFormula::Or(l, r) | FoFormula::Implies(l, r) => {
                l.mentions_exists() || r.mentions_exists()
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            FoFormula::Forall(..) | FoFormula::Exists(..) => 0,
            FoFormula::Implies(..) => 1,
            FoFormula::Or(..) => 2,
            FoFormula::And(..) => 3,
            FoFormula::Not(_) => 4,
            FoFormula::Pred(..) => 5,
        }
    }
}

impl From<&Formula> for FoFormula {
    fn from(f: &Formula) -> Self {
        match f {
            Formula::Atom(a) => FoFormula::atom(a.name()),
            Formula::Not(g) => FoFormula::not(g.as_ref().into()),
            Formula::And(l, r) => FoFormula::and(l.as_ref().into(), r.as_ref().into()),
            Formula::Or(l, r) => FoFormula::or(l.as_ref().into(), r.as_ref().into()),
            Formula::Implies(l, r) => FoFormula::implies(l.as_ref().into(), r.as_ref().into()),
        }
    }
}

/// Replaces every free occurrence of `var` by `term`.
pub fn substitute(f: &FoFormula, var: &str, term: &Term) -> Result<FoFormula, DkqError> {
    Ok(match f {
        FoFormula::Pred(name, args) => FoFormula::Pred(
            name.clone(),
            args.iter()
                .map(|t| match t {
                    Term::Var(v) if v == var => term.clone(),
                    other => other.clone(),
                })
                .collect(),
        ),
        FoFormula::Not(g) => FoFormula::not(substitute(g, var, term)?),
        FoFormula::And(l, r) => {
            FoFormula::and(substitute(l, var, term)?, substitute(r, var, term)?)
        }
        FoFormula::Or(l, r) => FoFormula::or(substitute(l, var, term)?, substitute(r, var, term)?),
        FoFormula::Implies(l, r) => {
            FoFormula::implies(substitute(l, var, term)?, substitute(r, var, term)?)
        }
        FoFormula::Forall(v, g) | FoFormula::Exists(v, g) => {
            if v == var || !g.is_free(var) {
                f.clone()
            } else if matches!(term, Term::Var(t) if t == v) {
                return Err(DkqError::Capture {
                    var: v.clone(),
                    formula: f.to_string(),
                });
            } else {
                let body = Box::new(substitute(g, var, term)?);
                match f {
                    FoFormula::Forall(..) => FoFormula::Forall(v.clone(), body),
                    _ => FoFormula::Exists(v.clone(), body),
                }
            }
        }
    })
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &FoFormula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            FoFormula::Pred(name, args) if args.is_empty() => f.write_str(name),
            FoFormula::Pred(name, args) => {
                let args: Vec<&str> = args.iter().map(Term::name).collect();
                write!(f, "{name}({})", args.join(","))
            }
            FoFormula::Not(g) => {
                f.write_str("~")?;
                write_child(f, g, g.precedence() < p)
            }
            FoFormula::And(l, r) | FoFormula::Or(l, r) => {
                let op = if matches!(self, FoFormula::And(..)) {
                    " & "
                } else {
                    " | "
                };
                write_child(f, l, l.precedence() < p)?;
                f.write_str(op)?;
                write_child(f, r, r.precedence() <= p)
            }
            FoFormula::Implies(l, r) => {
                write_child(f, l, l.precedence() <= p)?;
                f.write_str(" -> ")?;
                write_child(f, r, r.precedence() < p)
            }
            FoFormula::Forall(v, g) => write!(f, "forall {v}. {g}"),
            FoFormula::Exists(v, g) => write!(f, "exists {v}. {g}"),
        }
    }
}

impl fmt::Debug for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    Comma,
    Dot,
    Forall,
    Exists,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Not => "'~'".into(),
        Tok::And => "'&'".into(),
        Tok::Or => "'|'".into(),
        Tok::Implies => "'->'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::Dot => "'.'".into(),
        Tok::Forall => "'forall'".into(),
        Tok::Exists => "'exists'".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, DkqError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Implies,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '∀' => Tok::Forall,
            '∃' => Tok::Exists,
            '-' => {
                chars.next();
                if chars.peek().map(|&(_, c)| c) != Some('>') {
                    return Err(DkqError::Syntax {
                        offset: i,
                        msg: "expected '->'".into(),
                    });
                }
                Tok::Implies
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let tok = match name.as_str() {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(name),
                };
                out.push((i, tok));
                continue;
            }
            other => {
                return Err(DkqError::Syntax {
                    offset: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn error(&self, expected: &str) -> DkqError {
        let found = self
            .peek()
            .map(describe)
            .unwrap_or_else(|| "end of input".into());
        DkqError::Syntax {
            offset: self.offset(),
            msg: format!("expected {expected}, found {found}"),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<FoFormula, DkqError> {
        if matches!(self.peek(), Some(Tok::Forall | Tok::Exists)) {
            return self.quantified();
        }
        let left = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            Ok(FoFormula::implies(left, self.formula()?))
        } else {
            Ok(left)
        }
    }

    fn quantified(&mut self) -> Result<FoFormula, DkqError> {
        let universal = self.peek() == Some(&Tok::Forall);
        self.pos += 1;
        let var = match self.peek() {
            Some(Tok::Ident(v)) if is_variable_name(v) => v.clone(),
            _ => return Err(self.error("a variable (u..z)")),
        };
        self.pos += 1;
        self.eat(&Tok::Dot);
        let body = self.formula()?;
        Ok(if universal {
            FoFormula::forall(&var, body)
        } else {
            FoFormula::exists(&var, body)
        })
    }

    fn disjunction(&mut self) -> Result<FoFormula, DkqError> {
        let mut left = self.conjunction()?;
        while self.eat(&Tok::Or) {
            left = FoFormula::or(left, self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<FoFormula, DkqError> {
        let mut left = self.unary()?;
        while self.eat(&Tok::And) {
            left = FoFormula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<FoFormula, DkqError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(FoFormula::not(self.unary()?))
            }
            Some(Tok::Forall | Tok::Exists) => self.quantified(),
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("')'"));
                }
                Ok(f)
            }
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                if !self.eat(&Tok::LParen) {
                    return Ok(FoFormula::atom(&name));
                }
                let mut args = Vec::new();
                loop {
                    match self.peek() {
                        Some(Tok::Ident(t)) => {
                            args.push(Term::from_name(t));
                            self.pos += 1;
                        }
                        _ => return Err(self.error("a term")),
                    }
                    if self.eat(&Tok::RParen) {
                        break;
                    }
                    if !self.eat(&Tok::Comma) {
                        return Err(self.error("',' or ')'"));
                    }
                }
                Ok(FoFormula::Pred(name, args))
            }
            _ => Err(self.error("a formula")),
        }
    }
}

/// Parses `~ & | ->`, `forall x. F`, `exists x. F` and predicates `P(x,c)`.
pub fn parse_fo(text: &str) -> Result<FoFormula, DkqError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.error("end of input"));
    }
    Ok(f)
}

impl FromStr for FoFormula {
    type Err = DkqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_fo(s)
    }
}
