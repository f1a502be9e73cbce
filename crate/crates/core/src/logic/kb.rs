use std::collections::BTreeSet;

use super::formula::{Atom, Formula};
use super::parse::parse_formula;
use super::LogicError;

/// Insertion-ordered set of formulas.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    formulas: Vec<Formula>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `f`, rejecting a syntactic duplicate.
    pub fn insert(&mut self, f: Formula) -> Result<(), LogicError> {
        if self.formulas.contains(&f) {
            return Err(LogicError::DuplicateFormula(f.to_string()));
        }
        self.formulas.push(f);
        Ok(())
    }

    pub fn from_formulas<I: IntoIterator<Item = Formula>>(items: I) -> Result<Self, LogicError> {
        let mut kb = KnowledgeBase::new();
        for f in items {
            kb.insert(f)?;
        }
        Ok(kb)
    }

    /// Parses the line-oriented KB format: one formula per line, `#` comments.
    pub fn parse(text: &str) -> Result<Self, LogicError> {
        let mut kb = KnowledgeBase::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let wrap = |e: LogicError| LogicError::AtLine {
                line: n + 1,
                source: Box::new(e),
            };
            let f = parse_formula(line).map_err(wrap)?;
            kb.insert(f).map_err(wrap)?;
        }
        Ok(kb)
    }

    pub fn render(&self) -> String {
        self.formulas.iter().map(|f| format!("{f}\n")).collect()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulas.iter()
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.formulas.contains(f)
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.formulas.iter().position(|g| g == f)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            f.collect_atoms(&mut out);
        }
        out
    }
}

impl<'a> IntoIterator for &'a KnowledgeBase {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.formulas.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_kb_text() {
        let kb = KnowledgeBase::parse("# header\na\n\na -> y  # comment\n").unwrap();
        assert_eq!(kb.len(), 2);
        assert_eq!(kb.formulas()[1].to_string(), "a -> y");
    }

    #[test]
    fn duplicates_rejected_with_line() {
        let err = KnowledgeBase::parse("a\nb\na\n").unwrap_err();
        match err {
            LogicError::AtLine { line, source } => {
                assert_eq!(line, 3);
                assert!(matches!(*source, LogicError::DuplicateFormula(_)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn render_round_trips() {
        let kb = KnowledgeBase::parse("a\n(a -> b) -> c\n~(a & b)\n").unwrap();
        assert_eq!(KnowledgeBase::parse(&kb.render()).unwrap(), kb);
    }
}
