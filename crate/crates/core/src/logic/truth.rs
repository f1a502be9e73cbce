use std::collections::{BTreeMap, BTreeSet};

use super::formula::{Atom, Formula};
use super::LogicError;

/// Default cap on the number of distinct atoms a truth table may range over.
pub const DEFAULT_ATOM_BOUND: usize = 20;

/// Assignment of truth values to atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Interpretation {
    assignment: BTreeMap<Atom, bool>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: Atom, value: bool) {
        self.assignment.insert(atom, value);
    }

    pub fn with(mut self, name: &str, value: bool) -> Self {
        self.set(Atom::new(name).expect("valid atom name"), value);
        self
    }

    pub fn get(&self, atom: &Atom) -> Option<bool> {
        self.assignment.get(atom).copied()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.assignment.keys()
    }
}

impl FromIterator<(Atom, bool)> for Interpretation {
    fn from_iter<T: IntoIterator<Item = (Atom, bool)>>(iter: T) -> Self {
        Interpretation {
            assignment: iter.into_iter().collect(),
        }
    }
}

/// Classical valuation. Fails if `i` leaves an atom of `f` unassigned.
pub fn evaluate(f: &Formula, i: &Interpretation) -> Result<bool, LogicError> {
    Ok(match f {
        Formula::Atom(a) => i
            .get(a)
            .ok_or_else(|| LogicError::MissingAtom(a.name().to_string()))?,
        Formula::Not(g) => !evaluate(g, i)?,
        Formula::And(l, r) => evaluate(l, i)? && evaluate(r, i)?,
        Formula::Or(l, r) => evaluate(l, i)? || evaluate(r, i)?,
        Formula::Implies(l, r) => !evaluate(l, i)? || evaluate(r, i)?,
    })
}

/// A fixed, indexed atom universe. Assignments are bitmasks over the indices.
#[derive(Debug, Clone)]
pub struct Universe {
    atoms: Vec<Atom>,
}

impl Universe {
    pub fn new<'a, I>(formulas: I, bound: usize) -> Result<Self, LogicError>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let mut set = BTreeSet::new();
        for f in formulas {
            f.collect_atoms(&mut set);
        }
        if set.len() > bound {
            return Err(LogicError::TooManyAtoms {
                count: set.len(),
                limit: bound,
            });
        }
        Ok(Universe {
            atoms: set.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn model_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    fn index(&self, a: &Atom) -> usize {
        self.atoms
            .binary_search(a)
            .expect("atom belongs to the universe")
    }

    /// Evaluates `f` under the assignment encoded by `mask` (bit k = atom k).
    pub fn eval(&self, f: &Formula, mask: u64) -> bool {
        match f {
            Formula::Atom(a) => mask >> self.index(a) & 1 == 1,
            Formula::Not(g) => !self.eval(g, mask),
            Formula::And(l, r) => self.eval(l, mask) && self.eval(r, mask),
            Formula::Or(l, r) => self.eval(l, mask) || self.eval(r, mask),
            Formula::Implies(l, r) => !self.eval(l, mask) || self.eval(r, mask),
        }
    }

    pub fn interpretation(&self, mask: u64) -> Interpretation {
        self.atoms
            .iter()
            .enumerate()
            .map(|(k, a)| (a.clone(), mask >> k & 1 == 1))
            .collect()
    }

    /// The set of satisfying assignments of `f`, as a bitset over all masks.
    pub fn models(&self, f: &Formula) -> ModelSet {
        let n = self.model_count();
        let mut bits = vec![0u64; n.div_ceil(64)];
        for mask in 0..n {
            if self.eval(f, mask as u64) {
                bits[mask / 64] |= 1 << (mask % 64);
            }
        }
        ModelSet { bits, len: n }
    }
}

/// Bitset of assignments over a [`Universe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSet {
    bits: Vec<u64>,
    len: usize,
}

impl ModelSet {
    pub fn full(universe: &Universe) -> Self {
        let len = universe.model_count();
        let mut bits = vec![u64::MAX; len.div_ceil(64)];
        if !len.is_multiple_of(64) {
            let last = bits.len() - 1;
            bits[last] = (1u64 << (len % 64)) - 1;
        }
        ModelSet { bits, len }
    }

    pub fn intersect(&self, other: &ModelSet) -> ModelSet {
        ModelSet {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn complement(&self) -> ModelSet {
        let mut out = ModelSet {
            bits: self.bits.iter().map(|b| !b).collect(),
            len: self.len,
        };
        if !self.len.is_multiple_of(64) {
            let last = out.bits.len() - 1;
            out.bits[last] &= (1u64 << (self.len % 64)) - 1;
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|b| *b == 0)
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ModelSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }
}

/// `gamma ⊨ phi` by exhaustive truth table, with the default atom bound.
pub fn entails(gamma: &[Formula], phi: &Formula) -> Result<bool, LogicError> {
    entails_bounded(gamma, phi, DEFAULT_ATOM_BOUND)
}

pub fn entails_bounded(gamma: &[Formula], phi: &Formula, bound: usize) -> Result<bool, LogicError> {
    let u = Universe::new(gamma.iter().chain(std::iter::once(phi)), bound)?;
    Ok((0..u.model_count() as u64).all(|m| !gamma.iter().all(|g| u.eval(g, m)) || u.eval(phi, m)))
}

pub fn is_consistent(gamma: &[Formula]) -> Result<bool, LogicError> {
    is_consistent_bounded(gamma, DEFAULT_ATOM_BOUND)
}

pub fn is_consistent_bounded(gamma: &[Formula], bound: usize) -> Result<bool, LogicError> {
    let u = Universe::new(gamma, bound)?;
    Ok((0..u.model_count() as u64).any(|m| gamma.iter().all(|g| u.eval(g, m))))
}
