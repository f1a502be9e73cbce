//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := disj ("->" formula)?
//! disj    := conj ("|" conj)*
//! conj    := neg ("&" neg)*
//! neg     := "~" neg | atom | "(" formula ")"
//! atom    := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! The unicode connectives `¬ ∧ ∨ →` are accepted as aliases.

use super::formula::{Atom, Formula};
use super::LogicError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Ident(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Ident(s) => format!("'{s}'"),
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let mut out = Vec::new();
    let mut iter = text.char_indices().peekable();
    while let Some(&(i, c)) = iter.peek() {
        match c {
            c if c.is_whitespace() => {
                iter.next();
            }
            '~' | '¬' => {
                iter.next();
                out.push((i, Tok::Not));
            }
            '&' | '∧' => {
                iter.next();
                out.push((i, Tok::And));
            }
            '|' | '∨' => {
                iter.next();
                out.push((i, Tok::Or));
            }
            '→' => {
                iter.next();
                out.push((i, Tok::Arrow));
            }
            '(' => {
                iter.next();
                out.push((i, Tok::LParen));
            }
            ')' => {
                iter.next();
                out.push((i, Tok::RParen));
            }
            '-' => {
                iter.next();
                match iter.peek() {
                    Some(&(_, '>')) => {
                        iter.next();
                        out.push((i, Tok::Arrow));
                    }
                    _ => {
                        return Err(LogicError::Syntax {
                            offset: i,
                            expected: vec!["'->'".into()],
                            found: "'-'".into(),
                        })
                    }
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut end = i;
                while let Some(&(j, d)) = iter.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        iter.next();
                    } else {
                        break;
                    }
                }
                out.push((i, Tok::Ident(text[i..end].to_string())));
            }
            other => {
                return Err(LogicError::Syntax {
                    offset: i,
                    expected: vec!["formula".into()],
                    found: format!("'{other}'"),
                })
            }
        }
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

    fn error(&self, expected: &[&str]) -> LogicError {
        LogicError::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self
                .peek()
                .map(Tok::describe)
                .unwrap_or_else(|| "end of input".into()),
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disj()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.conj()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            acc = Formula::or(acc, self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.neg()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            acc = Formula::and(acc, self.neg()?);
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<Formula, LogicError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.neg()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error(&["')'", "'&'", "'|'", "'->'"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match Atom::new(name) {
                Ok(atom) => {
                    self.pos += 1;
                    Ok(Formula::Atom(atom))
                }
                Err(_) => Err(self.error(&["atom"])),
            },
            _ => Err(self.error(&["'~'", "'('", "atom"])),
        }
    }
}

/// Parses a formula; errors carry the byte offset and the expected-token set.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.error(&["'&'", "'|'", "'->'", "end of input"]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_formula("a -> y").unwrap(),
            Formula::implies(a("a"), a("y"))
        );
        assert_eq!(
            parse_formula("~~a").unwrap(),
            Formula::not(Formula::not(a("a")))
        );
        assert_eq!(
            parse_formula("a & b | c").unwrap(),
            Formula::or(Formula::and(a("a"), a("b")), a("c"))
        );
    }

    #[test]
    fn associativity() {
        assert_eq!(
            parse_formula("a -> b -> c").unwrap(),
            Formula::implies(a("a"), Formula::implies(a("b"), a("c")))
        );
        assert_eq!(
            parse_formula("a & b & c").unwrap(),
            Formula::and(Formula::and(a("a"), a("b")), a("c"))
        );
        assert_eq!(
            parse_formula("a | b | c").unwrap(),
            Formula::or(Formula::or(a("a"), a("b")), a("c"))
        );
        assert_eq!(
            parse_formula("~a & b").unwrap(),
            Formula::and(Formula::not(a("a")), a("b"))
        );
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse_formula("¬(a ∧ (a → y))").unwrap(),
            parse_formula("~(a & (a -> y))").unwrap()
        );
    }

    #[test]
    fn syntax_errors_report_offset_and_expectation() {
        match parse_formula("a & ") {
            Err(LogicError::Syntax {
                offset, expected, ..
            }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"atom".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_formula("(a | b") {
            Err(LogicError::Syntax {
                offset, expected, ..
            }) => {
                assert_eq!(offset, 6);
                assert!(expected.contains(&"')'".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_formula("a b").is_err());
        assert!(parse_formula("A").is_err());
        assert!(parse_formula("a - b").is_err());
        assert!(parse_formula("").is_err());
    }
}
