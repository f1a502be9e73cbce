use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::formula::{is_variable_name, substitute, FoFormula, Term};
use super::DkqError;

/// Scheme pattern over metavariables `A`..`D`, a bound-variable metavariable
/// and the substitution instance `A(t/x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Pat {
    Meta(char),
    Not(Box<Pat>),
    And(Box<Pat>, Box<Pat>),
    Or(Box<Pat>, Box<Pat>),
    Implies(Box<Pat>, Box<Pat>),
    Forall(Box<Pat>),
    Subst(char),
}

fn m(c: char) -> Pat {
    Pat::Meta(c)
}
fn not(p: Pat) -> Pat {
    Pat::Not(Box::new(p))
}
fn and(l: Pat, r: Pat) -> Pat {
    Pat::And(Box::new(l), Box::new(r))
}
fn or(l: Pat, r: Pat) -> Pat {
    Pat::Or(Box::new(l), Box::new(r))
}
fn imp(l: Pat, r: Pat) -> Pat {
    Pat::Implies(Box::new(l), Box::new(r))
}
fn all(p: Pat) -> Pat {
    Pat::Forall(Box::new(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SchemeSet {
    /// The thirteen schemes as printed, duplicates and all.
    #[default]
    Printed,
    /// Standard relevant-logic forms for schemes 5, 6, 11, 12 and 13.
    Corrected,
}

impl FromStr for SchemeSet {
    type Err = DkqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(SchemeSet::Printed),
            "corrected" => Ok(SchemeSet::Corrected),
            other => Err(DkqError::UnknownSchemeSet(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    pub id: u32,
    pub text: &'static str,
    pattern: Pat,
    /// The bound variable may not occur free in this metavariable.
    not_free_in: Option<char>,
}

impl Scheme {
    fn new(id: u32, text: &'static str, pattern: Pat) -> Self {
        Scheme {
            id,
            text,
            pattern,
            not_free_in: None,
        }
    }

    fn proviso(mut self, meta: char) -> Self {
        self.not_free_in = Some(meta);
        self
    }

    /// Witnessing substitution when `f` is an instance of this scheme.
    pub fn matches(&self, f: &FoFormula) -> Option<Binding> {
        let mut b = Binding::default();
        if !unify(&self.pattern, f, &mut b) {
            return None;
        }
        if let Some(meta) = self.not_free_in {
            let var = b.variable.as_ref()?;
            if b.formulas.get(&meta)?.is_free(var) {
                return None;
            }
        }
        Some(b)
    }

    /// Builds the instance of this scheme under `b`.
    pub fn instantiate(&self, b: &Binding) -> Result<FoFormula, DkqError> {
        build(&self.pattern, b)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.id, self.text)
    }
}

pub fn schemes(set: SchemeSet) -> Vec<Scheme> {
    let distrib = || {
        imp(
            and(m('A'), or(m('B'), m('C'))),
            or(and(m('A'), m('B')), m('C')),
        )
    };
    let mut out = vec![
        Scheme::new(1, "A -> A", imp(m('A'), m('A'))),
        Scheme::new(2, "A & B -> A", imp(and(m('A'), m('B')), m('A'))),
        Scheme::new(3, "A & B -> B", imp(and(m('A'), m('B')), m('B'))),
        Scheme::new(4, "A & (B | C) -> (A & B) | C", distrib()),
        Scheme::new(5, "A & (B | C) -> (A & B) | C", distrib()),
        Scheme::new(
            6,
            "(A -> B) & (B -> C) -> (A -> B & C)",
            imp(
                and(imp(m('A'), m('B')), imp(m('B'), m('C'))),
                imp(m('A'), and(m('B'), m('C'))),
            ),
        ),
        Scheme::new(
            7,
            "(A -> B) & (B -> C) -> (A -> C)",
            imp(
                and(imp(m('A'), m('B')), imp(m('B'), m('C'))),
                imp(m('A'), m('C')),
            ),
        ),
        Scheme::new(
            8,
            "(A -> ~B) -> (B -> ~A)",
            imp(imp(m('A'), not(m('B'))), imp(m('B'), not(m('A')))),
        ),
        Scheme::new(9, "~~A -> A", imp(not(not(m('A'))), m('A'))),
        Scheme::new(10, "A | ~A", or(m('A'), not(m('A')))),
        Scheme::new(11, "A -> A(t/x)", imp(m('A'), Pat::Subst('A'))),
        Scheme::new(
            12,
            "(A -> B) -> (A -> forall x. B)",
            imp(imp(m('A'), m('B')), imp(m('A'), all(m('B')))),
        ),
        Scheme::new(
            13,
            "A | B -> A | forall x. B",
            imp(or(m('A'), m('B')), or(m('A'), all(m('B')))),
        ),
    ];
    if set == SchemeSet::Corrected {
        out[4] = Scheme::new(
            5,
            "A & (B | C) -> (A & B) | (A & C)",
            imp(
                and(m('A'), or(m('B'), m('C'))),
                or(and(m('A'), m('B')), and(m('A'), m('C'))),
            ),
        );
        out[5] = Scheme::new(
            6,
            "(A -> B) & (A -> C) -> (A -> B & C)",
            imp(
                and(imp(m('A'), m('B')), imp(m('A'), m('C'))),
                imp(m('A'), and(m('B'), m('C'))),
            ),
        );
        out[10] = Scheme::new(
            11,
            "(forall x. A) -> A(t/x)",
            imp(all(m('A')), Pat::Subst('A')),
        );
        out[11] = Scheme::new(
            12,
            "(forall x. (A -> B)) -> (A -> forall x. B)",
            imp(all(imp(m('A'), m('B'))), imp(m('A'), all(m('B')))),
        )
        .proviso('A');
        out[12] = Scheme::new(
            13,
            "(forall x. (A | B)) -> A | forall x. B",
            imp(all(or(m('A'), m('B'))), or(m('A'), all(m('B')))),
        )
        .proviso('A');
    }
    out
}

/// Metavariable assignment witnessing a scheme instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Binding {
    pub formulas: BTreeMap<char, FoFormula>,
    /// The quantified or substituted variable `x`.
    pub variable: Option<String>,
    /// The term `t` of `A(t/x)`.
    pub term: Option<Term>,
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .formulas
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        if let Some(x) = &self.variable {
            parts.push(format!("x:{x}"));
        }
        if let Some(t) = &self.term {
            parts.push(format!("t:{t}"));
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn bind_var(b: &mut Binding, v: &str) -> bool {
    match &b.variable {
        Some(x) => x == v,
        None => {
            b.variable = Some(v.to_string());
            true
        }
    }
}

fn unify(p: &Pat, f: &FoFormula, b: &mut Binding) -> bool {
    match (p, f) {
        (Pat::Meta(c), _) => match b.formulas.get(c) {
            Some(g) => g == f,
            None => {
                b.formulas.insert(*c, f.clone());
                true
            }
        },
        (Pat::Not(p), FoFormula::Not(g)) => unify(p, g, b),
        (Pat::And(pl, pr), FoFormula::And(l, r))
        | (Pat::Or(pl, pr), FoFormula::Or(l, r))
        | (Pat::Implies(pl, pr), FoFormula::Implies(l, r)) => unify(pl, l, b) && unify(pr, r, b),
        (Pat::Forall(p), FoFormula::Forall(v, g)) => bind_var(b, v) && unify(p, g, b),
        (Pat::Subst(c), _) => {
            let Some(a) = b.formulas.get(c).cloned() else {
                return false;
            };
            match substitution_witness(&a, f, b.variable.as_deref()) {
                Some((x, t)) => {
                    b.variable = Some(x);
                    b.term = Some(t);
                    true
                }
                None => false,
            }
        }
        _ => false,
    }
}

/// Term found in `g` where `f` has its first free occurrence of `var`.
fn term_at_free(f: &FoFormula, g: &FoFormula, var: &str) -> Option<Term> {
    match (f, g) {
        (FoFormula::Pred(n1, a1), FoFormula::Pred(n2, a2)) if n1 == n2 && a1.len() == a2.len() => {
            a1.iter()
                .zip(a2)
                .find(|(s, _)| matches!(s, Term::Var(v) if v == var))
                .map(|(_, t)| t.clone())
        }
        (FoFormula::Not(f1), FoFormula::Not(g1)) => term_at_free(f1, g1, var),
        (FoFormula::And(l1, r1), FoFormula::And(l2, r2))
        | (FoFormula::Or(l1, r1), FoFormula::Or(l2, r2))
        | (FoFormula::Implies(l1, r1), FoFormula::Implies(l2, r2)) => {
            term_at_free(l1, l2, var).or_else(|| term_at_free(r1, r2, var))
        }
        (FoFormula::Forall(v1, f1), FoFormula::Forall(v2, g1))
        | (FoFormula::Exists(v1, f1), FoFormula::Exists(v2, g1))
            if v1 == v2 && v1 != var =>
        {
            term_at_free(f1, g1, var)
        }
        _ => None,
    }
}

/// Finds `x` and `t` with `a(t/x) = g`, the variable fixed when given.
fn substitution_witness(
    a: &FoFormula,
    g: &FoFormula,
    fixed: Option<&str>,
) -> Option<(String, Term)> {
    let candidates: Vec<String> = match fixed {
        Some(x) => vec![x.to_string()],
        None => a.free_vars().into_iter().collect(),
    };
    for x in &candidates {
        if !a.is_free(x) {
            continue;
        }
        if let Some(t) = term_at_free(a, g, x) {
            if substitute(a, x, &t).ok().as_ref() == Some(g) {
                return Some((x.clone(), t));
            }
        }
    }
    // Vacuous substitution.
    if a == g {
        let x = fixed
            .map(str::to_string)
            .or_else(|| candidates.first().cloned())
            .unwrap_or_else(|| "x".to_string());
        let t = Term::Var(x.clone());
        return Some((x, t));
    }
    None
}

fn build(p: &Pat, b: &Binding) -> Result<FoFormula, DkqError> {
    let meta = |c: &char| {
        b.formulas
            .get(c)
            .cloned()
            .ok_or_else(|| DkqError::Unbound(format!("metavariable {c}")))
    };
    let var = || {
        b.variable
            .clone()
            .filter(|v| is_variable_name(v))
            .ok_or_else(|| DkqError::Unbound("variable x".into()))
    };
    Ok(match p {
        Pat::Meta(c) => meta(c)?,
        Pat::Not(q) => FoFormula::not(build(q, b)?),
        Pat::And(l, r) => FoFormula::and(build(l, b)?, build(r, b)?),
        Pat::Or(l, r) => FoFormula::or(build(l, b)?, build(r, b)?),
        Pat::Implies(l, r) => FoFormula::implies(build(l, b)?, build(r, b)?),
        Pat::Forall(q) => FoFormula::Forall(var()?, Box::new(build(q, b)?)),
        Pat::Subst(c) => {
            let t = b
                .term
                .clone()
                .ok_or_else(|| DkqError::Unbound("term t".into()))?;
            substitute(&meta(c)?, &var()?, &t)?
        }
    })
}

/// Every printed scheme `f` instantiates, in id order.
pub fn match_axiom(f: &FoFormula) -> Vec<(u32, Binding)> {
    match_axiom_in(SchemeSet::Printed, f)
}

pub fn match_axiom_in(set: SchemeSet, f: &FoFormula) -> Vec<(u32, Binding)> {
    schemes(set)
        .iter()
        .filter_map(|s| s.matches(f).map(|b| (s.id, b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dkq::parse_fo;

    fn ids(s: &str) -> Vec<u32> {
        match_axiom(&parse_fo(s).unwrap())
            .into_iter()
            .map(|(i, _)| i)
            .collect()
    }

    #[test]
    fn printed_examples() {
        let m = match_axiom(&parse_fo("(p & q) -> p").unwrap());
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].0, 2);
        assert_eq!(m[0].1.to_string(), "{A:p, B:q}");
        assert_eq!(ids("p | ~p"), [10]);
        assert!(ids("p -> q").is_empty());
        assert_eq!(ids("p & (q | r) -> (p & q) | r"), [4, 5]);
        assert_eq!(ids("p -> p"), [1, 11]);
    }

    #[test]
    fn quantifier_schemes() {
        assert_eq!(ids("P(x) -> P(c)"), [11]);
        assert_eq!(ids("(p -> Q(x)) -> (p -> forall x. Q(x))"), [12]);
        assert_eq!(ids("p | Q(x) -> p | forall x. Q(x)"), [13]);
        assert!(ids("P(x) & Q(x) -> P(c) & Q(d)").is_empty());
    }

    #[test]
    fn corrected_set() {
        let c = |s: &str| -> Vec<u32> {
            match_axiom_in(SchemeSet::Corrected, &parse_fo(s).unwrap())
                .into_iter()
                .map(|(i, _)| i)
                .collect()
        };
        assert_eq!(c("(forall x. P(x)) -> P(c)"), [11]);
        assert!(c("P(x) -> P(c)").is_empty());
        assert_eq!(c("(forall x. (p -> Q(x))) -> (p -> forall x. Q(x))"), [12]);
        assert!(c("(forall x. (P(x) -> Q(x))) -> (P(x) -> forall x. Q(x))").is_empty());
        assert_eq!(c("p & (q | r) -> (p & q) | (p & r)"), [5]);
    }

    #[test]
    fn instantiate_round_trip() {
        for s in schemes(SchemeSet::Printed) {
            let mut b = Binding::default();
            for (c, f) in [('A', "P(x)"), ('B', "q"), ('C', "~r"), ('D', "s")] {
                b.formulas.insert(c, parse_fo(f).unwrap());
            }
            b.variable = Some("x".into());
            b.term = Some(Term::Const("c".into()));
            let inst = s.instantiate(&b).unwrap();
            assert!(s.matches(&inst).is_some(), "{s}: {inst}");
        }
    }
}
