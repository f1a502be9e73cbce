use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::framework::Framework;
use super::AfError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Admissible,
    Complete,
    Grounded,
    Stable,
    Preferred,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Stable,
        Semantics::Preferred,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Stable => "stable",
            Semantics::Preferred => "preferred",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = AfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.name() == s)
            .ok_or_else(|| AfError::UnknownSemantics(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Extension {
    pub members: BTreeSet<String>,
    pub semantics: Semantics,
}

impl Extension {
    pub fn contains(&self, id: &str) -> bool {
        self.members.contains(id)
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_set(&self.members))
    }
}

/// Renders a set of ids as `{a,b,c}`.
pub fn format_set(ids: &BTreeSet<String>) -> String {
    let items: Vec<&str> = ids.iter().map(String::as_str).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
    Undec,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Labelling {
    pub assignment: BTreeMap<String, Label>,
}

impl Labelling {
    pub fn label(&self, id: &str) -> Option<Label> {
        self.assignment.get(id).copied()
    }

    pub fn with_label(&self, label: Label) -> BTreeSet<String> {
        self.assignment
            .iter()
            .filter(|(_, l)| **l == label)
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn in_set(&self) -> BTreeSet<String> {
        self.with_label(Label::In)
    }

    pub fn out_set(&self) -> BTreeSet<String> {
        self.with_label(Label::Out)
    }

    pub fn undec_set(&self) -> BTreeSet<String> {
        self.with_label(Label::Undec)
    }

    /// Checks the complete-labelling conditions against `f`.
    pub fn is_legal(&self, f: &Framework) -> bool {
        if self.assignment.len() != f.len() {
            return false;
        }
        f.nodes().iter().all(|n| {
            let Some(l) = self.label(n) else { return false };
            let att = f.attackers_of(n).expect("node of f");
            let all_out = att.iter().all(|a| self.label(a) == Some(Label::Out));
            let some_in = att.iter().any(|a| self.label(a) == Some(Label::In));
            match l {
                Label::In => all_out,
                Label::Out => some_in,
                Label::Undec => !all_out && !some_in,
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Justified,
    Overruled,
    Defensible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Justified => "justified",
            Status::Overruled => "overruled",
            Status::Defensible => "defensible",
        })
    }
}

/// Resource limits for the exhaustive semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_nodes: usize,
    /// Maximum number of search-tree nodes visited per enumeration.
    pub max_steps: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_nodes: 200,
            max_steps: 20_000_000,
        }
    }
}

pub fn is_conflict_free(s: &BTreeSet<String>, f: &Framework) -> Result<bool, AfError> {
    let mask = f.require_set(s)?;
    Ok(conflict_free_mask(&mask, f))
}

fn conflict_free_mask(mask: &[bool], f: &Framework) -> bool {
    (0..f.len())
        .filter(|&i| mask[i])
        .all(|i| f.targets_idx(i).iter().all(|&j| !mask[j]))
}

/// Every attacker of `x` is attacked by some member of `s`.
pub fn defends(s: &BTreeSet<String>, x: &str, f: &Framework) -> Result<bool, AfError> {
    let mask = f.require_set(s)?;
    let j = f.require(x)?;
    Ok(defends_mask(&mask, j, f))
}

fn defends_mask(mask: &[bool], j: usize, f: &Framework) -> bool {
    f.attackers_idx(j)
        .iter()
        .all(|&a| f.attackers_idx(a).iter().any(|&d| mask[d]))
}

/// Least fixed point of the characteristic function.
pub fn grounded_extension(f: &Framework) -> Extension {
    Extension {
        members: f.ids(&grounded_mask(f)),
        semantics: Semantics::Grounded,
    }
}

fn grounded_mask(f: &Framework) -> Vec<bool> {
    let mut s = vec![false; f.len()];
    loop {
        let next: Vec<bool> = (0..f.len()).map(|j| defends_mask(&s, j, f)).collect();
        if next == s {
            return s;
        }
        s = next;
    }
}

fn grounded_labelling(f: &Framework) -> Labelling {
    let s = grounded_mask(f);
    let assignment = f
        .nodes()
        .iter()
        .enumerate()
        .map(|(j, n)| {
            let l = if s[j] {
                Label::In
            } else if f.attackers_idx(j).iter().any(|&a| s[a]) {
                Label::Out
            } else {
                Label::Undec
            };
            (n.clone(), l)
        })
        .collect();
    Labelling { assignment }
}

/// Which labelling family the search enumerates.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    /// in: all attackers out; out: exactly the nodes attacked by an in node.
    Admissible,
    /// Legal labellings: additionally undec iff neither condition holds.
    Complete,
}

struct Search<'a> {
    f: &'a Framework,
    family: Family,
    steps: u64,
    max_steps: u64,
    out: Vec<Vec<Label>>,
}

impl Search<'_> {
    /// Forces labels implied by the current partial assignment. Returns false on conflict.
    fn propagate(&self, lab: &mut [Option<Label>]) -> bool {
        let f = self.f;
        loop {
            let mut changed = false;
            for j in 0..f.len() {
                let att = f.attackers_idx(j);
                let some_in = att.iter().any(|&a| lab[a] == Some(Label::In));
                let all_assigned = att.iter().all(|&a| lab[a].is_some());
                let all_out = att.iter().all(|&a| lab[a] == Some(Label::Out));
                match lab[j] {
                    Some(Label::In) => {
                        for &a in att {
                            match lab[a] {
                                None => {
                                    lab[a] = Some(Label::Out);
                                    changed = true;
                                }
                                Some(Label::Out) => {}
                                Some(_) => return false,
                            }
                        }
                    }
                    Some(Label::Out) => {
                        if all_assigned && !some_in {
                            return false;
                        }
                    }
                    Some(Label::Undec) => {
                        if some_in {
                            return false;
                        }
                        if self.family == Family::Complete && all_out {
                            return false;
                        }
                    }
                    None => {
                        if some_in {
                            lab[j] = Some(Label::Out);
                            changed = true;
                        } else if self.family == Family::Complete && all_out {
                            lab[j] = Some(Label::In);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, mut lab: Vec<Option<Label>>) -> Result<(), AfError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(AfError::Resource(format!(
                "labelling search exceeded {} steps",
                self.max_steps
            )));
        }
        if !self.propagate(&mut lab) {
            return Ok(());
        }
        match lab.iter().position(Option::is_none) {
            None => {
                self.out
                    .push(lab.into_iter().map(|l| l.expect("assigned")).collect());
                Ok(())
            }
            Some(j) => {
                for l in [Label::In, Label::Out, Label::Undec] {
                    let mut next = lab.clone();
                    next[j] = Some(l);
                    self.run(next)?;
                }
                Ok(())
            }
        }
    }
}

fn search(f: &Framework, family: Family, cfg: &SolverConfig) -> Result<Vec<Vec<Label>>, AfError> {
    if f.len() > cfg.max_nodes {
        return Err(AfError::Resource(format!(
            "{} nodes exceed the bound of {}",
            f.len(),
            cfg.max_nodes
        )));
    }
    let mut s = Search {
        f,
        family,
        steps: 0,
        max_steps: cfg.max_steps,
        out: Vec::new(),
    };
    s.run(vec![None; f.len()])?;
    Ok(s.out)
}

fn to_labelling(f: &Framework, labels: &[Label]) -> Labelling {
    Labelling {
        assignment: f
            .nodes()
            .iter()
            .cloned()
            .zip(labels.iter().copied())
            .collect(),
    }
}

/// All legal (complete) labellings, sorted by in-set.
pub fn legal_labellings(f: &Framework) -> Result<Vec<Labelling>, AfError> {
    legal_labellings_with(f, &SolverConfig::default())
}

pub fn legal_labellings_with(f: &Framework, cfg: &SolverConfig) -> Result<Vec<Labelling>, AfError> {
    let mut out: Vec<Labelling> = search(f, Family::Complete, cfg)?
        .iter()
        .map(|l| to_labelling(f, l))
        .collect();
    sort_labellings(&mut out);
    Ok(out)
}

fn sort_labellings(v: &mut [Labelling]) {
    v.sort_by_key(|l| l.in_set().into_iter().collect::<Vec<_>>());
}

fn maximal_in(labellings: Vec<Labelling>) -> Vec<Labelling> {
    let sets: Vec<BTreeSet<String>> = labellings.iter().map(Labelling::in_set).collect();
    labellings
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            !sets
                .iter()
                .enumerate()
                .any(|(k, s)| k != *i && sets[*i].is_subset(s) && sets[*i] != *s)
        })
        .map(|(_, l)| l)
        .collect()
}

/// Labellings selected by a semantics.
pub fn semantic_labellings(
    f: &Framework,
    sem: Semantics,
    cfg: &SolverConfig,
) -> Result<Vec<Labelling>, AfError> {
    let mut out = match sem {
        Semantics::Grounded => vec![grounded_labelling(f)],
        Semantics::Admissible => search(f, Family::Admissible, cfg)?
            .iter()
            .map(|l| to_labelling(f, l))
            .collect(),
        Semantics::Complete => legal_labellings_with(f, cfg)?,
        Semantics::Stable => legal_labellings_with(f, cfg)?
            .into_iter()
            .filter(|l| l.assignment.values().all(|x| *x != Label::Undec))
            .collect(),
        Semantics::Preferred => maximal_in(legal_labellings_with(f, cfg)?),
    };
    sort_labellings(&mut out);
    Ok(out)
}

pub fn enumerate_extensions(f: &Framework, sem: Semantics) -> Result<Vec<Extension>, AfError> {
    enumerate_extensions_with(f, sem, &SolverConfig::default())
}

/// Extensions of `sem`, sorted by member sequence.
pub fn enumerate_extensions_with(
    f: &Framework,
    sem: Semantics,
    cfg: &SolverConfig,
) -> Result<Vec<Extension>, AfError> {
    Ok(semantic_labellings(f, sem, cfg)?
        .into_iter()
        .map(|l| Extension {
            members: l.in_set(),
            semantics: sem,
        })
        .collect())
}

pub fn argument_status(f: &Framework, x: &str, sem: Semantics) -> Result<Status, AfError> {
    argument_status_with(f, x, sem, &SolverConfig::default())
}

/// Justified if in under every selected labelling, overruled if out under
/// every one, defensible otherwise.
pub fn argument_status_with(
    f: &Framework,
    x: &str,
    sem: Semantics,
    cfg: &SolverConfig,
) -> Result<Status, AfError> {
    f.require(x)?;
    let labs = semantic_labellings(f, sem, cfg)?;
    status_over(&labs, x, sem)
}

pub(crate) fn status_over(labs: &[Labelling], x: &str, sem: Semantics) -> Result<Status, AfError> {
    if labs.is_empty() {
        return Err(AfError::NoLabelling(sem));
    }
    if labs.iter().all(|l| l.label(x) == Some(Label::In)) {
        Ok(Status::Justified)
    } else if labs.iter().all(|l| l.label(x) == Some(Label::Out)) {
        Ok(Status::Overruled)
    } else {
        Ok(Status::Defensible)
    }
}

/// Status of every node, in node order.
pub fn all_statuses(
    f: &Framework,
    sem: Semantics,
    cfg: &SolverConfig,
) -> Result<Vec<(String, Status)>, AfError> {
    let labs = semantic_labellings(f, sem, cfg)?;
    f.nodes()
        .iter()
        .map(|n| Ok((n.clone(), status_over(&labs, n, sem)?)))
        .collect()
}
