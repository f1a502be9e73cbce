use std::collections::BTreeSet;
use std::fmt;

use super::LogicError;

/// A sentential variable. Names start with a lowercase ASCII letter followed by
/// ASCII alphanumerics or underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self, LogicError> {
        let name = name.into();
        if is_atom_name(&name) {
            Ok(Atom(name))
        } else {
            Err(LogicError::InvalidAtom(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Propositional formula. Equality is syntactic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds an atom, panicking on an invalid name. Intended for literals in
    /// code and tests; use [`Atom::new`] for untrusted input.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom name"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    /// Left-nested conjunction of the given formulas, or `None` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Option<Formula> {
        items.into_iter().reduce(Formula::and)
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Formula::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) | Formula::Atom(_) => 4,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Not(inner) => {
                f.write_str("~")?;
                inner.write_prec(f, 4)?;
            }
            // `->` is right-associative, `&` and `|` left-associative.
            Formula::Implies(l, r) => {
                l.write_prec(f, 2)?;
                f.write_str(" -> ")?;
                r.write_prec(f, 1)?;
            }
            Formula::Or(l, r) => {
                l.write_prec(f, 2)?;
                f.write_str(" | ")?;
                r.write_prec(f, 3)?;
            }
            Formula::And(l, r) => {
                l.write_prec(f, 3)?;
                f.write_str(" & ")?;
                r.write_prec(f, 4)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Canonical text with minimal parentheses; `parse_formula(render_formula(f)) == f`.
pub fn render_formula(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn renders_with_minimal_parentheses() {
        assert_eq!(render_formula(&Formula::implies(a("a"), a("y"))), "a -> y");
        assert_eq!(
            render_formula(&Formula::or(Formula::and(a("a"), a("b")), a("c"))),
            "a & b | c"
        );
        assert_eq!(
            render_formula(&Formula::and(a("a"), Formula::or(a("b"), a("c")))),
            "a & (b | c)"
        );
        assert_eq!(
            render_formula(&Formula::implies(Formula::implies(a("a"), a("b")), a("c"))),
            "(a -> b) -> c"
        );
        assert_eq!(
            render_formula(&Formula::implies(a("a"), Formula::implies(a("b"), a("c")))),
            "a -> b -> c"
        );
        assert_eq!(
            render_formula(&Formula::not(Formula::and(a("a"), a("b")))),
            "~(a & b)"
        );
        assert_eq!(render_formula(&Formula::not(Formula::not(a("a")))), "~~a");
    }

    #[test]
    fn atom_names() {
        assert!(Atom::new("a").is_ok());
        assert!(Atom::new("x_1B").is_ok());
        assert!(Atom::new("A").is_err());
        assert!(Atom::new("1a").is_err());
        assert!(Atom::new("").is_err());
    }
}
