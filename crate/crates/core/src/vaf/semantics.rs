use std::collections::BTreeSet;

use crate::af::{
    all_statuses, semantic_labellings, status_over, Extension, Framework, Semantics, SolverConfig,
    Status,
};

use super::framework::{valpref, Audience, ValueFramework};
use super::VafError;

/// How conflict-freeness for an audience is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConflictReading {
    /// No member defeats-for-the-audience another member.
    #[default]
    Defeat,
    /// No member attacks another, and no two members' values are ordered by
    /// the audience. Bars almost every mixed-value set.
    StrictDef10,
}

/// `x` defeats `y` for `aud`: `x` attacks `y` and `aud` does not strictly
/// prefer the value of `y` to the value of `x`.
pub fn defeats_for(
    aud: &Audience,
    x: &str,
    y: &str,
    vf: &ValueFramework,
) -> Result<bool, VafError> {
    let vx = vf.value_of(x)?;
    let vy = vf.value_of(y)?;
    Ok(vf.base().has_attack(x, y) && !valpref(aud, vy, vx)?)
}

/// Same nodes, keeping exactly the defeat-for-`aud` edges.
pub fn reduce_for_audience(vf: &ValueFramework, aud: &Audience) -> Result<Framework, VafError> {
    let mut keep = Vec::new();
    for (x, y) in vf.base().attacks() {
        if defeats_for(aud, x, y, vf)? {
            keep.push((x.to_string(), y.to_string()));
        }
    }
    Ok(vf.base().with_attacks(keep)?)
}

fn check_members(s: &BTreeSet<String>, vf: &ValueFramework) -> Result<(), VafError> {
    for x in s {
        vf.value_of(x)?;
    }
    Ok(())
}

pub fn conflict_free_for(
    aud: &Audience,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
) -> Result<bool, VafError> {
    conflict_free_for_with(aud, s, vf, ConflictReading::Defeat)
}

/// Literal reading: no attack and no value preference between members.
pub fn conflict_free_for_strict(
    aud: &Audience,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
) -> Result<bool, VafError> {
    conflict_free_for_with(aud, s, vf, ConflictReading::StrictDef10)
}

pub fn conflict_free_for_with(
    aud: &Audience,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
    reading: ConflictReading,
) -> Result<bool, VafError> {
    check_members(s, vf)?;
    for x in s {
        for y in s {
            if in_conflict(aud, x, y, vf, reading)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn in_conflict(
    aud: &Audience,
    x: &str,
    y: &str,
    vf: &ValueFramework,
    reading: ConflictReading,
) -> Result<bool, VafError> {
    Ok(match reading {
        ConflictReading::Defeat => defeats_for(aud, x, y, vf)?,
        ConflictReading::StrictDef10 => {
            vf.base().has_attack(x, y) || valpref(aud, vf.value_of(x)?, vf.value_of(y)?)?
        }
    })
}

/// Every defeater-for-`aud` of `x` is defeated-for-`aud` by a member of `s`.
pub fn acceptable_to(
    aud: &Audience,
    x: &str,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
) -> Result<bool, VafError> {
    check_members(s, vf)?;
    vf.value_of(x)?;
    for z in vf.base().nodes() {
        if defeats_for(aud, z, x, vf)? {
            let mut answered = false;
            for m in s {
                if defeats_for(aud, m, z, vf)? {
                    answered = true;
                    break;
                }
            }
            if !answered {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn admissible_for(
    aud: &Audience,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
) -> Result<bool, VafError> {
    admissible_for_with(aud, s, vf, ConflictReading::Defeat)
}

pub fn admissible_for_with(
    aud: &Audience,
    s: &BTreeSet<String>,
    vf: &ValueFramework,
    reading: ConflictReading,
) -> Result<bool, VafError> {
    if !conflict_free_for_with(aud, s, vf, reading)? {
        return Ok(false);
    }
    for x in s {
        if !acceptable_to(aud, x, s, vf)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Precomputed defeat and conflict relations for one audience.
struct Tables {
    n: usize,
    defeat: Vec<Vec<bool>>,
    conflict: Vec<Vec<bool>>,
}

impl Tables {
    fn new(
        vf: &ValueFramework,
        aud: &Audience,
        reading: ConflictReading,
    ) -> Result<Self, VafError> {
        let nodes = vf.base().nodes();
        let n = nodes.len();
        let mut defeat = vec![vec![false; n]; n];
        let mut conflict = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                defeat[i][j] = defeats_for(aud, &nodes[i], &nodes[j], vf)?;
                conflict[i][j] = in_conflict(aud, &nodes[i], &nodes[j], vf, reading)?;
            }
        }
        Ok(Tables {
            n,
            defeat,
            conflict,
        })
    }

    fn acceptable(&self, x: usize, s: &[bool]) -> bool {
        (0..self.n)
            .filter(|&z| self.defeat[z][x])
            .all(|z| (0..self.n).any(|m| s[m] && self.defeat[m][z]))
    }
}

/// The ⊆-maximal admissible-for-`aud` sets, computed from the definitions
/// directly rather than through [`reduce_for_audience`].
pub fn preferred_for_audience(
    vf: &ValueFramework,
    aud: &Audience,
) -> Result<Vec<Extension>, VafError> {
    preferred_for_audience_with(vf, aud, ConflictReading::Defeat, &SolverConfig::default())
}

pub fn preferred_for_audience_with(
    vf: &ValueFramework,
    aud: &Audience,
    reading: ConflictReading,
    cfg: &SolverConfig,
) -> Result<Vec<Extension>, VafError> {
    let t = Tables::new(vf, aud, reading)?;
    let mut admissible: Vec<Vec<bool>> = Vec::new();
    let mut steps = 0u64;
    let mut current = vec![false; t.n];
    collect_admissible(
        &t,
        0,
        &mut current,
        &mut admissible,
        &mut steps,
        cfg.max_steps,
    )?;
    let maximal: Vec<&Vec<bool>> = admissible
        .iter()
        .filter(|s| {
            !admissible
                .iter()
                .any(|o| o != *s && (0..t.n).all(|i| !s[i] || o[i]))
        })
        .collect();
    let nodes = vf.base().nodes();
    let mut out: Vec<Extension> = maximal
        .into_iter()
        .map(|s| Extension {
            members: (0..t.n)
                .filter(|&i| s[i])
                .map(|i| nodes[i].clone())
                .collect(),
            semantics: Semantics::Preferred,
        })
        .collect();
    out.sort_by_key(|e| e.members.iter().cloned().collect::<Vec<_>>());
    Ok(out)
}

fn collect_admissible(
    t: &Tables,
    i: usize,
    current: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
    steps: &mut u64,
    max_steps: u64,
) -> Result<(), VafError> {
    *steps += 1;
    if *steps > max_steps {
        return Err(VafError::Af(crate::af::AfError::Resource(format!(
            "admissible-set search exceeded {max_steps} steps"
        ))));
    }
    if i == t.n {
        if (0..t.n)
            .filter(|&x| current[x])
            .all(|x| t.acceptable(x, current))
        {
            out.push(current.clone());
        }
        return Ok(());
    }
    collect_admissible(t, i + 1, current, out, steps, max_steps)?;
    let clash =
        t.conflict[i][i] || (0..i).any(|k| current[k] && (t.conflict[k][i] || t.conflict[i][k]));
    if !clash {
        current[i] = true;
        collect_admissible(t, i + 1, current, out, steps, max_steps)?;
        current[i] = false;
    }
    Ok(())
}

/// Status of `x` over the preferred labellings of the audience-reduced framework.
pub fn status_for_audience(
    vf: &ValueFramework,
    aud: &Audience,
    x: &str,
) -> Result<Status, VafError> {
    let reduced = reduce_for_audience(vf, aud)?;
    vf.value_of(x)?;
    let labs = semantic_labellings(&reduced, Semantics::Preferred, &SolverConfig::default())?;
    Ok(status_over(&labs, x, Semantics::Preferred)?)
}

pub fn statuses_for_audience(
    vf: &ValueFramework,
    aud: &Audience,
    cfg: &SolverConfig,
) -> Result<Vec<(String, Status)>, VafError> {
    let reduced = reduce_for_audience(vf, aud)?;
    Ok(all_statuses(&reduced, Semantics::Preferred, cfg)?)
}
