use std::fmt;

use super::formula::{is_variable_name, parse_fo, FoFormula};
use super::schemes::{schemes, SchemeSet};
use super::DkqError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `A, A -> B => B`
    Mp,
    /// `A, B => A & B`
    Adj,
    /// `(A -> B) -> (C -> D) => (B -> C) -> (A -> D)`
    Affix,
    /// `A => forall x. A`
    Gen,
}

impl Rule {
    pub fn arity(self) -> usize {
        match self {
            Rule::Mp | Rule::Adj => 2,
            Rule::Affix | Rule::Gen => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Mp => "mp",
            Rule::Adj => "adj",
            Rule::Affix => "affix",
            Rule::Gen => "gen",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether one application of `rule` to `premises` yields `conclusion`.
/// For `mp` the two premises may come in either order.
pub fn check_rule(
    rule: Rule,
    premises: &[FoFormula],
    conclusion: &FoFormula,
) -> Result<bool, DkqError> {
    if premises.len() != rule.arity() {
        return Err(DkqError::Arity {
            rule,
            expected: rule.arity(),
            found: premises.len(),
        });
    }
    let mp = |a: &FoFormula, ab: &FoFormula| matches!(ab, FoFormula::Implies(l, r) if **l == *a && **r == *conclusion);
    Ok(match rule {
        Rule::Mp => mp(&premises[0], &premises[1]) || mp(&premises[1], &premises[0]),
        Rule::Adj => *conclusion == FoFormula::and(premises[0].clone(), premises[1].clone()),
        Rule::Affix => match (&premises[0], conclusion) {
            (FoFormula::Implies(ab, cd), FoFormula::Implies(bc, ad)) => {
                match (&**ab, &**cd, &**bc, &**ad) {
                    (
                        FoFormula::Implies(a, b),
                        FoFormula::Implies(c, d),
                        FoFormula::Implies(b2, c2),
                        FoFormula::Implies(a2, d2),
                    ) => a == a2 && b == b2 && c == c2 && d == d2,
                    _ => false,
                }
            }
            _ => false,
        },
        Rule::Gen => matches!(conclusion, FoFormula::Forall(_, body) if **body == premises[0]),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Axiom(u32),
    Premise,
    Mp(usize, usize),
    Adj(usize, usize),
    Affix(usize),
    /// The variable is optional; when given it must be the one generalised.
    Gen(usize, Option<String>),
}

impl Justification {
    fn cited(&self) -> Vec<usize> {
        match self {
            Justification::Axiom(_) | Justification::Premise => Vec::new(),
            Justification::Mp(i, j) | Justification::Adj(i, j) => vec![*i, *j],
            Justification::Affix(i) | Justification::Gen(i, _) => vec![*i],
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom(id) => write!(f, "axiom {id}"),
            Justification::Premise => write!(f, "premise"),
            Justification::Mp(i, j) => write!(f, "mp {i},{j}"),
            Justification::Adj(i, j) => write!(f, "adj {i},{j}"),
            Justification::Affix(i) => write!(f, "affix {i}"),
            Justification::Gen(i, None) => write!(f, "gen {i}"),
            Justification::Gen(i, Some(x)) => write!(f, "gen {i} {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationLine {
    pub index: usize,
    pub formula: FoFormula,
    pub justification: Justification,
}

impl fmt::Display for DerivationLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}. {} [{}]",
            self.index, self.formula, self.justification
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Derivation {
    /// When empty, `premise` lines may assume anything.
    pub premises: Vec<FoFormula>,
    pub lines: Vec<DerivationLine>,
}

impl Derivation {
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.premises.is_empty() {
            let ps: Vec<String> = self.premises.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("premises: {}\n", ps.join("; ")));
        }
        for l in &self.lines {
            out.push_str(&format!("{l}\n"));
        }
        out
    }
}

/// Why a line fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineFault {
    IndexOrder,
    UnknownScheme(u32),
    NotInstance(u32),
    NotPremise,
    ForwardReference(usize),
    BadRule(Rule),
    GenVariable(String),
}

impl fmt::Display for LineFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineFault::IndexOrder => write!(f, "line numbers must increase"),
            LineFault::UnknownScheme(id) => write!(f, "no axiom scheme {id}"),
            LineFault::NotInstance(id) => {
                write!(f, "not an instance of scheme {id} (unification failed)")
            }
            LineFault::NotPremise => write!(f, "not among the declared premises"),
            LineFault::ForwardReference(i) => {
                write!(f, "cites line {i}, which is not an earlier line")
            }
            LineFault::BadRule(r) => write!(f, "not a correct application of {r}"),
            LineFault::GenVariable(x) => write!(f, "does not generalise on '{x}'"),
        }
    }
}

/// Non-fatal remark about a checked line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub index: usize,
    pub msg: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.index, self.msg)
    }
}

pub fn check_derivation(d: &Derivation) -> Result<Vec<Warning>, DkqError> {
    check_derivation_with(d, SchemeSet::Printed)
}

/// Checks every line in order and stops at the first failure.
pub fn check_derivation_with(d: &Derivation, set: SchemeSet) -> Result<Vec<Warning>, DkqError> {
    let table = schemes(set);
    let mut warnings = Vec::new();
    let mut seen: Vec<(usize, &FoFormula)> = Vec::new();
    for line in &d.lines {
        let fail = |fault| DkqError::Line {
            index: line.index,
            fault,
        };
        if line.index == 0 || seen.last().is_some_and(|(i, _)| *i >= line.index) {
            return Err(fail(LineFault::IndexOrder));
        }
        let mut cited = Vec::new();
        for i in line.justification.cited() {
            match seen.iter().find(|(k, _)| *k == i) {
                Some((_, f)) => cited.push((*f).clone()),
                None => return Err(fail(LineFault::ForwardReference(i))),
            }
        }
        let f = &line.formula;
        match &line.justification {
            Justification::Axiom(id) => {
                let scheme = table
                    .iter()
                    .find(|s| s.id == *id)
                    .ok_or_else(|| fail(LineFault::UnknownScheme(*id)))?;
                if scheme.matches(f).is_none() {
                    return Err(fail(LineFault::NotInstance(*id)));
                }
            }
            Justification::Premise => {
                if !d.premises.is_empty() && !d.premises.contains(f) {
                    return Err(fail(LineFault::NotPremise));
                }
            }
            Justification::Mp(..)
            | Justification::Adj(..)
            | Justification::Affix(_)
            | Justification::Gen(..) => {
                let rule = match line.justification {
                    Justification::Mp(..) => Rule::Mp,
                    Justification::Adj(..) => Rule::Adj,
                    Justification::Affix(_) => Rule::Affix,
                    _ => Rule::Gen,
                };
                if !check_rule(rule, &cited, f)? {
                    return Err(fail(LineFault::BadRule(rule)));
                }
                if let (Justification::Gen(_, Some(x)), FoFormula::Forall(v, _)) =
                    (&line.justification, f)
                {
                    if x != v {
                        return Err(fail(LineFault::GenVariable(x.clone())));
                    }
                }
            }
        }
        if f.mentions_exists() {
            warnings.push(Warning {
                index: line.index,
                msg: "the particular quantifier has no axioms; it is carried along unchecked"
                    .into(),
            });
        }
        seen.push((line.index, f));
    }
    Ok(warnings)
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let mut words = text.split_whitespace();
    let head = words.next().ok_or("empty justification")?;
    let rest: Vec<&str> = words.collect();
    let index = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("bad line number '{s}'"))
    };
    let pair = |rest: &[&str]| -> Result<(usize, usize), String> {
        let joined = rest.join("");
        let (i, j) = joined
            .split_once(',')
            .ok_or_else(|| format!("{head} needs two line numbers 'i,j'"))?;
        Ok((index(i)?, index(j)?))
    };
    match (head, rest.as_slice()) {
        ("premise", []) => Ok(Justification::Premise),
        ("axiom", [id]) => id
            .parse()
            .map(Justification::Axiom)
            .map_err(|_| format!("bad scheme id '{id}'")),
        ("mp", r) if !r.is_empty() => pair(r).map(|(i, j)| Justification::Mp(i, j)),
        ("adj", r) if !r.is_empty() => pair(r).map(|(i, j)| Justification::Adj(i, j)),
        ("affix", [i]) => Ok(Justification::Affix(index(i)?)),
        ("gen", [i]) => Ok(Justification::Gen(index(i)?, None)),
        ("gen", [i, x]) if is_variable_name(x) => {
            Ok(Justification::Gen(index(i)?, Some(x.to_string())))
        }
        _ => Err(format!("unrecognised justification '{text}'")),
    }
}

/// Reads `n. <formula> [<justification>]` lines, with an optional
/// `premises: f1; f2` header. `#` starts a comment.
pub fn parse_derivation(text: &str) -> Result<Derivation, DkqError> {
    let mut d = Derivation::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| DkqError::Parse { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(ps) = body.strip_prefix("premises:") {
            if !d.lines.is_empty() {
                return Err(err("premises must come before the first line".into()));
            }
            for p in ps.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                d.premises
                    .push(parse_fo(p).map_err(|e| err(e.to_string()))?);
            }
            continue;
        }
        let (num, rest) = body
            .split_once('.')
            .ok_or_else(|| err("expected 'n. <formula> [<justification>]'".into()))?;
        let index: usize = num
            .trim()
            .parse()
            .map_err(|_| err(format!("bad line number '{}'", num.trim())))?;
        let rest = rest.trim_end();
        let (formula, just) = rest
            .strip_suffix(']')
            .and_then(|r| r.rsplit_once('['))
            .ok_or_else(|| err("missing '[justification]'".into()))?;
        let formula = parse_fo(formula.trim()).map_err(|e| err(e.to_string()))?;
        let justification = parse_justification(just.trim()).map_err(err)?;
        d.lines.push(DerivationLine {
            index,
            formula,
            justification,
        });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fo(s: &str) -> FoFormula {
        parse_fo(s).unwrap()
    }

    #[test]
    fn rules() {
        assert!(check_rule(Rule::Mp, &[fo("p"), fo("p -> q")], &fo("q")).unwrap());
        assert!(!check_rule(Rule::Mp, &[fo("q"), fo("p -> q")], &fo("q")).unwrap());
        assert!(check_rule(Rule::Adj, &[fo("p"), fo("q")], &fo("p & q")).unwrap());
        assert!(!check_rule(Rule::Adj, &[fo("p"), fo("q")], &fo("q & p")).unwrap());
        assert!(check_rule(
            Rule::Affix,
            &[fo("(p -> q) -> (r -> s)")],
            &fo("(q -> r) -> (p -> s)")
        )
        .unwrap());
        assert!(check_rule(Rule::Gen, &[fo("P(x)")], &fo("forall x. P(x)")).unwrap());
        assert!(matches!(
            check_rule(Rule::Mp, &[fo("p")], &fo("q")),
            Err(DkqError::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn small_derivations() {
        let d = parse_derivation("1. p -> p [axiom 1]").unwrap();
        assert!(check_derivation(&d).unwrap().is_empty());
        let d = parse_derivation("1. p [premise]\n2. forall x. p [gen 1]").unwrap();
        check_derivation(&d).unwrap();
        let d = parse_derivation("1. p -> q [axiom 1]").unwrap();
        assert_eq!(
            check_derivation(&d),
            Err(DkqError::Line {
                index: 1,
                fault: LineFault::NotInstance(1)
            })
        );
    }

    #[test]
    fn failures() {
        let check = |s: &str| check_derivation(&parse_derivation(s).unwrap()).unwrap_err();
        assert!(matches!(
            check("1. p [mp 2,3]"),
            DkqError::Line {
                fault: LineFault::ForwardReference(2),
                ..
            }
        ));
        assert!(matches!(
            check("1. p -> p [axiom 14]"),
            DkqError::Line {
                fault: LineFault::UnknownScheme(14),
                ..
            }
        ));
        assert!(matches!(
            check("2. p [premise]\n1. q [premise]"),
            DkqError::Line {
                index: 1,
                fault: LineFault::IndexOrder
            }
        ));
        assert!(matches!(
            check("premises: p\n1. q [premise]"),
            DkqError::Line {
                fault: LineFault::NotPremise,
                ..
            }
        ));
        assert!(matches!(
            check("1. P(x) [premise]\n2. forall x. P(x) [gen 1 y]"),
            DkqError::Line {
                fault: LineFault::GenVariable(_),
                ..
            }
        ));
        assert!(matches!(
            check("1. p [premise]\n2. p & q [adj 1,1]"),
            DkqError::Line {
                index: 2,
                fault: LineFault::BadRule(Rule::Adj)
            }
        ));
    }

    #[test]
    fn particular_quantifier_is_flagged() {
        let d = parse_derivation("1. exists x. P(x) [premise]").unwrap();
        assert_eq!(check_derivation(&d).unwrap().len(), 1);
    }

    #[test]
    fn parse_errors_and_round_trip() {
        for bad in [
            "1 p [premise]",
            "1. p",
            "x. p [premise]",
            "1. p [frobnicate]",
            "1. p & [premise]",
        ] {
            assert!(
                matches!(parse_derivation(bad), Err(DkqError::Parse { line: 1, .. })),
                "{bad}"
            );
        }
        let text = "premises: p; p -> q\n1. p [premise]\n2. p -> q [premise]\n3. q [mp 1,2]\n4. forall x. q [gen 3 x]\n";
        let d = parse_derivation(text).unwrap();
        assert_eq!(d.render(), text);
        check_derivation(&d).unwrap();
    }
}
