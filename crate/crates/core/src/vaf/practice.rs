use std::collections::{BTreeMap, BTreeSet};

use crate::af::{dot_escape, SolverConfig, Status};

use super::framework::{Audience, ValueFramework};
use super::semantics::{defeats_for, statuses_for_audience};
use super::VafError;

/// Strict dominance between practices, derived from one audience's verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PracticeOrdering {
    pub practices: BTreeSet<String>,
    pub dominates: BTreeSet<(String, String)>,
}

/// `p` dominates `q` when a justified argument of `p` defeats-for-`aud` an
/// argument of `q` and no justified argument of `q` defeats-for-`aud` one of `p`.
pub fn practice_ordering(
    vf: &ValueFramework,
    aud: &Audience,
    practice_map: &BTreeMap<String, String>,
) -> Result<PracticeOrdering, VafError> {
    if let Some(n) = vf
        .base()
        .nodes()
        .iter()
        .find(|n| !practice_map.contains_key(*n))
    {
        return Err(VafError::UnmappedPractice(n.clone()));
    }
    let justified: BTreeSet<String> = statuses_for_audience(vf, aud, &SolverConfig::default())?
        .into_iter()
        .filter(|(_, s)| *s == Status::Justified)
        .map(|(n, _)| n)
        .collect();
    let practices: BTreeSet<String> = practice_map.values().cloned().collect();
    let nodes = vf.base().nodes();
    // beats[p][q]: some justified node of p defeats some node of q
    let mut beats: BTreeSet<(String, String)> = BTreeSet::new();
    for x in nodes.iter().filter(|n| justified.contains(*n)) {
        for y in nodes {
            let (px, py) = (&practice_map[x], &practice_map[y]);
            if px != py && defeats_for(aud, x, y, vf)? {
                beats.insert((px.clone(), py.clone()));
            }
        }
    }
    let dominates = beats
        .iter()
        .filter(|(p, q)| !beats.contains(&(q.clone(), p.clone())))
        .cloned()
        .collect();
    Ok(PracticeOrdering {
        practices,
        dominates,
    })
}

/// DOT digraph of the transitive reduction of `po.dominates`.
pub fn hasse_to_dot(po: &PracticeOrdering) -> Result<String, VafError> {
    let names: Vec<&String> = po
        .practices
        .iter()
        .chain(po.dominates.iter().flat_map(|(p, q)| [p, q]))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let idx = |s: &String| names.binary_search(&s).expect("collected name");
    let n = names.len();
    let mut reach = vec![vec![false; n]; n];
    for (p, q) in &po.dominates {
        reach[idx(p)][idx(q)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let via = reach[k].clone();
                for (r, v) in reach[i].iter_mut().zip(via) {
                    *r |= v;
                }
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| reach[i][i]) {
        return Err(VafError::Cycle(names[i].clone()));
    }
    let mut out = String::from("digraph hasse {\n");
    for name in &names {
        out.push_str(&format!("  \"{}\";\n", dot_escape(name)));
    }
    for (p, q) in &po.dominates {
        let (i, j) = (idx(p), idx(q));
        if !(0..n).any(|k| reach[i][k] && reach[k][j]) {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                dot_escape(p),
                dot_escape(q)
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
