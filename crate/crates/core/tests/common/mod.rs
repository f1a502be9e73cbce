//! Independent oracles shared by the integration tests. Nothing here calls the
//! solvers under test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use argval::af::Framework;
use argval::dkq::FoFormula;
use argval::logic::Formula;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub type Set = BTreeSet<String>;

pub fn set(ids: &[&str]) -> Set {
    ids.iter().map(|s| s.to_string()).collect()
}

/// Literal powerset definitions over an explicit edge list.
pub struct PowersetOracle {
    pub nodes: Vec<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl PowersetOracle {
    pub fn new(f: &Framework) -> Self {
        PowersetOracle {
            nodes: f.nodes().to_vec(),
            edges: f
                .attacks()
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .collect(),
        }
    }

    fn att(&self, x: &str, y: &str) -> bool {
        self.edges.contains(&(x.to_string(), y.to_string()))
    }

    pub fn subsets(&self) -> Vec<Set> {
        let n = self.nodes.len();
        (0u32..1 << n)
            .map(|m| {
                (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.nodes[i].clone())
                    .collect()
            })
            .collect()
    }

    pub fn conflict_free(&self, s: &Set) -> bool {
        s.iter().all(|x| s.iter().all(|y| !self.att(x, y)))
    }

    pub fn defends(&self, s: &Set, x: &str) -> bool {
        self.nodes
            .iter()
            .filter(|z| self.att(z, x))
            .all(|z| s.iter().any(|d| self.att(d, z)))
    }

    pub fn admissible(&self, s: &Set) -> bool {
        self.conflict_free(s) && s.iter().all(|x| self.defends(s, x))
    }

    pub fn complete(&self, s: &Set) -> bool {
        self.admissible(s)
            && self
                .nodes
                .iter()
                .all(|x| !self.defends(s, x) || s.contains(x))
    }

    pub fn stable(&self, s: &Set) -> bool {
        self.conflict_free(s)
            && self
                .nodes
                .iter()
                .filter(|x| !s.contains(*x))
                .all(|x| s.iter().any(|d| self.att(d, x)))
    }

    /// Least fixpoint of the characteristic function.
    pub fn grounded(&self) -> Set {
        let mut s = Set::new();
        loop {
            let next: Set = self
                .nodes
                .iter()
                .filter(|x| self.defends(&s, x))
                .cloned()
                .collect();
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn extensions(&self, semantics: &str) -> Vec<Set> {
        let all = self.subsets();
        let mut out: Vec<Set> = match semantics {
            "admissible" => all.into_iter().filter(|s| self.admissible(s)).collect(),
            "complete" => all.into_iter().filter(|s| self.complete(s)).collect(),
            "stable" => all.into_iter().filter(|s| self.stable(s)).collect(),
            "grounded" => vec![self.grounded()],
            "preferred" => {
                let adm: Vec<Set> = all.into_iter().filter(|s| self.admissible(s)).collect();
                adm.iter()
                    .filter(|s| !adm.iter().any(|t| t != *s && s.is_subset(t)))
                    .cloned()
                    .collect()
            }
            other => panic!("unknown semantics {other}"),
        };
        out.sort_by(|a, b| a.iter().cmp(b.iter()));
        out
    }
}

/// Truth-table evaluation by direct recursion over the formula tree.
pub fn eval(f: &Formula, v: &BTreeMap<String, bool>) -> bool {
    match f {
        Formula::Atom(a) => v[a.name()],
        Formula::Not(g) => !eval(g, v),
        Formula::And(l, r) => eval(l, v) && eval(r, v),
        Formula::Or(l, r) => eval(l, v) || eval(r, v),
        Formula::Implies(l, r) => !eval(l, v) || eval(r, v),
    }
}

fn atoms_into(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Atom(a) => {
            out.insert(a.name().to_string());
        }
        Formula::Not(g) => atoms_into(g, out),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            atoms_into(l, out);
            atoms_into(r, out);
        }
    }
}

pub fn valuations(fs: &[&Formula]) -> Vec<BTreeMap<String, bool>> {
    let mut atoms = BTreeSet::new();
    for f in fs {
        atoms_into(f, &mut atoms);
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    (0u64..1 << atoms.len())
        .map(|m| {
            atoms
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), m >> i & 1 == 1))
                .collect()
        })
        .collect()
}

pub fn oracle_entails(premises: &[Formula], goal: &Formula) -> bool {
    let mut all: Vec<&Formula> = premises.iter().collect();
    all.push(goal);
    valuations(&all)
        .iter()
        .all(|v| !premises.iter().all(|p| eval(p, v)) || eval(goal, v))
}

pub fn oracle_valid(f: &Formula) -> bool {
    oracle_entails(&[], f)
}

/// Fills a scheme's printed text by string replacement: `A(t/x)` becomes `A`
/// with every `x` renamed to `c`, and each metavariable letter becomes its
/// parenthesised formula. Generated formulas never contain the letters A to C
/// or quantifiers, so the replacement is unambiguous.
pub fn fill(text: &str, a: &FoFormula, b: &FoFormula, c: &FoFormula) -> String {
    let at = a.to_string().replace('x', "c");
    let text = text.replace("A(t/x)", "\u{0}");
    let mut out = String::new();
    for ch in text.chars() {
        match ch {
            'A' => out.push_str(&format!("({a})")),
            'B' => out.push_str(&format!("({b})")),
            'C' => out.push_str(&format!("({c})")),
            '\u{0}' => out.push_str(&format!("({at})")),
            other => out.push(other),
        }
    }
    out
}

/// Swaps one binary connective of one line for another, or drops or adds
/// one negation.
pub fn tampers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    for (k, line) in lines.iter().enumerate() {
        let Some(dot) = line.find(". ") else { continue };
        let Some(open) = line.rfind(" [") else {
            continue;
        };
        let body = &line[dot + 2..open];
        for (pos, tok) in body
            .match_indices(['&', '|'])
            .map(|(p, t)| (p, t.to_string()))
            .chain(body.match_indices("->").map(|(p, t)| (p, t.to_string())))
        {
            for rep in ["&", "|", "->"] {
                if rep == tok {
                    continue;
                }
                let tampered = format!("{}{rep}{}", &body[..pos], &body[pos + tok.len()..]);
                let mut new_lines: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
                new_lines[k] = format!("{}{}{}", &line[..dot + 2], tampered, &line[open..]);
                out.push(new_lines.join("\n"));
            }
        }
        let negations = body.match_indices('~').map(|(p, _)| (p, 1, ""));
        let operands = body
            .char_indices()
            .filter(|(p, ch)| {
                ch.is_ascii_alphabetic()
                    && (*p == 0 || !body.as_bytes()[p - 1].is_ascii_alphanumeric())
            })
            .map(|(p, _)| (p, 0, "~"));
        for (pos, cut, insert) in negations.chain(operands) {
            if body[pos..].starts_with("forall") {
                continue;
            }
            let tampered = format!("{}{insert}{}", &body[..pos], &body[pos + cut..]);
            let mut new_lines: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
            new_lines[k] = format!("{}{}{}", &line[..dot + 2], tampered, &line[open..]);
            out.push(new_lines.join("\n"));
        }
    }
    out
}
