use std::collections::BTreeSet;

use crate::af::Framework;
use crate::logic::{
    entails_bounded, is_consistent_bounded, Formula, KnowledgeBase, ModelSet, Universe,
    DEFAULT_ATOM_BOUND,
};

use super::table::ArgumentTable;
use super::{ArgError, StructuredArgument};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuilderConfig {
    pub max_support_size: usize,
    /// When set, only these claims are considered.
    pub claim_targets: Option<Vec<Formula>>,
    pub allow_inconsistent_support: bool,
    pub atom_bound: usize,
    /// Maximum number of support subsets examined.
    pub node_budget: u64,
}

impl Default for BuilderConfig {
    fn default() -> Self {
        BuilderConfig {
            max_support_size: 3,
            claim_targets: None,
            allow_inconsistent_support: false,
            atom_bound: DEFAULT_ATOM_BOUND,
            node_budget: 1_000_000,
        }
    }
}

impl BuilderConfig {
    pub fn with_targets(targets: Vec<Formula>) -> Self {
        BuilderConfig {
            claim_targets: Some(targets),
            ..BuilderConfig::default()
        }
    }
}

/// `¬(φ1 ∧ … ∧ φn)` over the support, conjoined left to right.
pub fn canonical_undercut_claim(arg: &StructuredArgument) -> Result<Formula, ArgError> {
    Formula::conjunction(arg.support.iter().cloned())
        .map(Formula::not)
        .ok_or(ArgError::EmptySupport)
}

/// Claim-rebut-support or undermining.
///
/// The attacker's claim is inconsistent with the target's support, or the
/// attacker's support entails the negation of some member of the target's
/// support.
pub fn attacks(
    attacker: &StructuredArgument,
    target: &StructuredArgument,
) -> Result<bool, ArgError> {
    let mut rebut = target.support.clone();
    rebut.push(attacker.claim.clone());
    if !is_consistent_bounded(&rebut, DEFAULT_ATOM_BOUND)? {
        return Ok(true);
    }
    for phi in &target.support {
        if entails_bounded(
            &attacker.support,
            &Formula::not(phi.clone()),
            DEFAULT_ATOM_BOUND,
        )? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A failed argument invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantViolation {
    NotInKb(Formula),
    DoesNotEntail,
    Inconsistent,
    NotMinimal(Formula),
    Empty,
}

/// Checks support ⊆ KB, entailment, consistency and subset-minimality.
pub fn check_argument(
    arg: &StructuredArgument,
    kb: &KnowledgeBase,
    allow_inconsistent: bool,
) -> Result<Vec<InvariantViolation>, ArgError> {
    let mut out = Vec::new();
    if arg.support.is_empty() {
        out.push(InvariantViolation::Empty);
    }
    for f in &arg.support {
        if !kb.contains(f) {
            out.push(InvariantViolation::NotInKb(f.clone()));
        }
    }
    if !entails_bounded(&arg.support, &arg.claim, DEFAULT_ATOM_BOUND)? {
        out.push(InvariantViolation::DoesNotEntail);
    } else {
        for (i, f) in arg.support.iter().enumerate() {
            let mut rest = arg.support.clone();
            rest.remove(i);
            if entails_bounded(&rest, &arg.claim, DEFAULT_ATOM_BOUND)? {
                out.push(InvariantViolation::NotMinimal(f.clone()));
            }
        }
    }
    if !allow_inconsistent && !is_consistent_bounded(&arg.support, DEFAULT_ATOM_BOUND)? {
        out.push(InvariantViolation::Inconsistent);
    }
    Ok(out)
}

struct Search<'a> {
    kb: &'a KnowledgeBase,
    cfg: &'a BuilderConfig,
    universe: Universe,
    kb_models: Vec<ModelSet>,
    visited: u64,
}

impl Search<'_> {
    /// Every in-bounds support subset (as KB indices) with its model set,
    /// ordered by size, then by index sequence.
    fn supports(&mut self) -> Result<Vec<(Vec<usize>, ModelSet)>, ArgError> {
        let n = self.kb.len();
        let mut out = Vec::new();
        let mut layer: Vec<(Vec<usize>, ModelSet)> =
            vec![(Vec::new(), ModelSet::full(&self.universe))];
        for _ in 0..self.cfg.max_support_size.min(n) {
            let mut next = Vec::new();
            for (idx, models) in &layer {
                let start = idx.last().map_or(0, |l| l + 1);
                for k in start..n {
                    self.visited += 1;
                    if self.visited > self.cfg.node_budget {
                        return Err(ArgError::Budget(self.cfg.node_budget));
                    }
                    let m = models.intersect(&self.kb_models[k]);
                    if m.is_empty() && !self.cfg.allow_inconsistent_support {
                        // Every superset is inconsistent as well.
                        continue;
                    }
                    let mut s = idx.clone();
                    s.push(k);
                    next.push((s, m));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }
}

fn models_of(universe: &Universe, kb_models: &[ModelSet], idx: &[usize]) -> ModelSet {
    idx.iter().fold(ModelSet::full(universe), |acc, &k| {
        acc.intersect(&kb_models[k])
    })
}

/// Every argument whose support is a consistent, subset-minimal subset of the
/// KB of bounded size entailing one of the candidate claims. Ordered by support
/// size, then by rendering; ids are `arg1, arg2, ...` in that order.
pub fn build_arguments(
    kb: &KnowledgeBase,
    cfg: &BuilderConfig,
) -> Result<Vec<StructuredArgument>, ArgError> {
    if cfg.max_support_size == 0 {
        return Err(ArgError::InvalidConfig);
    }
    let targets = cfg.claim_targets.clone();
    let universe = Universe::new(kb.iter().chain(targets.iter().flatten()), cfg.atom_bound)?;
    let kb_models: Vec<ModelSet> = kb.iter().map(|f| universe.models(f)).collect();
    let mut search = Search {
        kb,
        cfg,
        universe: universe.clone(),
        kb_models: kb_models.clone(),
        visited: 0,
    };
    let supports = search.supports()?;

    let mut claims: Vec<Formula> = match &targets {
        Some(t) => t.clone(),
        None => kb
            .iter()
            .flat_map(|f| [f.clone(), Formula::not(f.clone())])
            .collect(),
    };
    let mut claim_set: BTreeSet<Formula> = claims.iter().cloned().collect();
    let mut found: Vec<(Vec<usize>, Formula)> = Vec::new();
    let mut seen: BTreeSet<(Vec<usize>, Formula)> = BTreeSet::new();
    let mut done = 0;
    // Without targets, canonical undercuts of built arguments become new claims
    // until no new claim appears.
    loop {
        let fresh: Vec<Formula> = claims[done..].to_vec();
        done = claims.len();
        let fresh_models: Vec<ModelSet> = fresh.iter().map(|c| universe.models(c)).collect();
        let mut new_args = Vec::new();
        for (idx, m) in &supports {
            for (c, cm) in fresh.iter().zip(&fresh_models) {
                if !m.is_subset(cm) {
                    continue;
                }
                let minimal = (0..idx.len()).all(|drop| {
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, k)| *k)
                        .collect();
                    !models_of(&universe, &kb_models, &rest).is_subset(cm)
                });
                if minimal && seen.insert((idx.clone(), c.clone())) {
                    new_args.push((idx.clone(), c.clone()));
                }
            }
        }
        if targets.is_none() {
            for (idx, _) in &new_args {
                let undercut = Formula::not(
                    Formula::conjunction(idx.iter().map(|&k| kb.formulas()[k].clone()))
                        .expect("supports are non-empty"),
                );
                if claim_set.insert(undercut.clone()) {
                    claims.push(undercut);
                }
            }
        }
        found.extend(new_args);
        if done == claims.len() {
            break;
        }
    }

    let mut args: Vec<(usize, String, StructuredArgument)> = found
        .into_iter()
        .map(|(idx, claim)| {
            let support: Vec<Formula> = idx.iter().map(|&k| kb.formulas()[k].clone()).collect();
            let key = format!(
                "{} |- {}",
                support
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
                claim
            );
            (
                support.len(),
                key,
                StructuredArgument::new("", support, claim),
            )
        })
        .collect();
    args.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(args
        .into_iter()
        .enumerate()
        .map(|(i, (_, _, mut a))| {
            a.id = format!("arg{}", i + 1);
            a
        })
        .collect())
}

/// Builds the arguments and the framework of all pairwise attacks between them.
pub fn framework_from_kb(
    kb: &KnowledgeBase,
    cfg: &BuilderConfig,
) -> Result<(Framework, ArgumentTable), ArgError> {
    let args = build_arguments(kb, cfg)?;
    let table = ArgumentTable::new(args)?;
    let framework = table.attack_framework()?;
    Ok((framework, table))
}
