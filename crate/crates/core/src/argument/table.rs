use std::collections::{BTreeMap, BTreeSet};

use crate::af::Framework;
use crate::logic::parse_formula;

use super::builder::attacks;
use super::{ArgError, StructuredArgument};

/// Arguments keyed by id, in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArgumentTable {
    args: Vec<StructuredArgument>,
}

impl ArgumentTable {
    pub fn new(args: Vec<StructuredArgument>) -> Result<Self, ArgError> {
        let mut ids = BTreeSet::new();
        for a in &args {
            if !ids.insert(a.id.clone()) {
                return Err(ArgError::Af(crate::af::AfError::DuplicateNode(
                    a.id.clone(),
                )));
            }
        }
        Ok(ArgumentTable { args })
    }

    pub fn arguments(&self) -> &[StructuredArgument] {
        &self.args
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&StructuredArgument> {
        self.args.iter().find(|a| a.id == id)
    }

    /// Id of the argument with the same support set and claim as `arg`.
    pub fn find(&self, arg: &StructuredArgument) -> Option<&str> {
        self.args
            .iter()
            .find(|a| a.same_content(arg))
            .map(|a| a.id.as_str())
    }

    /// Framework over the table's ids with every pairwise attack.
    pub fn attack_framework(&self) -> Result<Framework, ArgError> {
        let mut edges = Vec::new();
        for x in &self.args {
            for y in &self.args {
                if attacks(x, y)? {
                    edges.push((x.id.as_str(), y.id.as_str()));
                }
            }
        }
        Ok(Framework::new(
            self.args.iter().map(|a| a.id.clone()),
            edges,
        )?)
    }

    /// Renames arguments; unmapped ids are kept.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Result<Self, ArgError> {
        ArgumentTable::new(
            self.args
                .iter()
                .map(|a| {
                    let mut b = a.clone();
                    if let Some(n) = map.get(&a.id) {
                        b.id = n.clone();
                    }
                    b
                })
                .collect(),
        )
    }

    /// One `argument(<id>, [<formula>; ...], <formula>).` line per argument.
    pub fn render(&self) -> String {
        self.args.iter().map(|a| format!("{a}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<Self, ArgError> {
        let mut args = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| ArgError::Parse {
                line: n + 1,
                msg: msg.to_string(),
            };
            let body = line
                .strip_prefix("argument(")
                .and_then(|s| s.strip_suffix(")."))
                .ok_or_else(|| err("expected argument(<id>, [<formulas>], <claim>)."))?;
            let (id, rest) = body.split_once(',').ok_or_else(|| err("missing id"))?;
            let rest = rest.trim();
            let open = rest.strip_prefix('[').ok_or_else(|| err("expected '['"))?;
            let (support, claim) = open.split_once(']').ok_or_else(|| err("expected ']'"))?;
            let claim = claim
                .trim()
                .strip_prefix(',')
                .ok_or_else(|| err("expected ',' before the claim"))?;
            let wrap = |e| ArgError::Parse {
                line: n + 1,
                msg: format!("{e}"),
            };
            let support = support
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_formula(s).map_err(wrap))
                .collect::<Result<Vec<_>, _>>()?;
            let claim = parse_formula(claim.trim()).map_err(wrap)?;
            args.push(StructuredArgument::new(id.trim(), support, claim));
        }
        ArgumentTable::new(args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Formula;

    #[test]
    fn render_and_parse() {
        let t = ArgumentTable::new(vec![
            StructuredArgument::new(
                "A1",
                vec![Formula::atom("a"), parse_formula("a -> y").unwrap()],
                Formula::atom("y"),
            ),
            StructuredArgument::new(
                "A2",
                vec![Formula::atom("r"), parse_formula("r -> ~a").unwrap()],
                parse_formula("~(a & (a -> y))").unwrap(),
            ),
        ])
        .unwrap();
        let text = t.render();
        assert_eq!(
            text.lines().next().unwrap(),
            "argument(A1, [a; a -> y], y)."
        );
        assert_eq!(ArgumentTable::parse(&text).unwrap(), t);
        let fw = t.attack_framework().unwrap();
        assert_eq!(fw.attacks().collect::<Vec<_>>(), [("A2", "A1")]);
    }

    #[test]
    fn parse_errors() {
        assert!(ArgumentTable::parse("argument(A1, a, y).").is_err());
        assert!(ArgumentTable::parse("argument(A1, [a], ).").is_err());
        assert!(ArgumentTable::parse("arg(A1).").is_err());
    }
}
