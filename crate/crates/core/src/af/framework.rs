use std::collections::{BTreeMap, BTreeSet};

use super::AfError;

/// Abstract argumentation framework: sorted node ids and an attack relation.
///
/// Nodes are kept in lexicographic order; every index-based method refers to
/// that order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Framework {
    nodes: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl Framework {
    /// Builds a framework, rejecting duplicate nodes and dangling attacks.
    pub fn new<N, S, A, T>(nodes: N, attacks: A) -> Result<Self, AfError>
    where
        N: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut set = BTreeSet::new();
        for n in nodes {
            let n = n.into();
            if !set.insert(n.clone()) {
                return Err(AfError::DuplicateNode(n));
            }
        }
        let nodes: Vec<String> = set.into_iter().collect();
        let mut f = Framework {
            attackers: vec![Vec::new(); nodes.len()],
            targets: vec![Vec::new(); nodes.len()],
            nodes,
            attacks: BTreeSet::new(),
        };
        for (x, y) in attacks {
            let i = f.require(x.as_ref())?;
            let j = f.require(y.as_ref())?;
            f.attacks.insert((i, j));
        }
        for &(i, j) in &f.attacks {
            f.attackers[j].push(i);
            f.targets[i].push(j);
        }
        Ok(f)
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index_of(id).is_some()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.binary_search_by(|n| n.as_str().cmp(id)).ok()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize, AfError> {
        self.index_of(id)
            .ok_or_else(|| AfError::UnknownNode(id.to_string()))
    }

    pub(crate) fn require_set<'a, I>(&self, ids: I) -> Result<Vec<bool>, AfError>
    where
        I: IntoIterator<Item = &'a String>,
    {
        let mut mask = vec![false; self.len()];
        for id in ids {
            mask[self.require(id)?] = true;
        }
        Ok(mask)
    }

    /// Attack pairs in canonical order.
    pub fn attacks(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attacks
            .iter()
            .map(|&(i, j)| (self.nodes[i].as_str(), self.nodes[j].as_str()))
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn has_attack(&self, x: &str, y: &str) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.attacks.contains(&(i, j)),
            _ => false,
        }
    }

    pub fn attackers_of(&self, id: &str) -> Result<Vec<&str>, AfError> {
        let j = self.require(id)?;
        Ok(self.attackers[j]
            .iter()
            .map(|&i| self.nodes[i].as_str())
            .collect())
    }

    pub(crate) fn attackers_idx(&self, j: usize) -> &[usize] {
        &self.attackers[j]
    }

    pub(crate) fn targets_idx(&self, i: usize) -> &[usize] {
        &self.targets[i]
    }

    /// Sub-framework induced by `keep`.
    pub fn restrict<'a, I>(&self, keep: I) -> Result<Framework, AfError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut kept = BTreeSet::new();
        for id in keep {
            self.require(id)?;
            kept.insert(id.to_string());
        }
        let edges: Vec<(&str, &str)> = self
            .attacks()
            .filter(|(x, y)| kept.contains(*x) && kept.contains(*y))
            .collect();
        Framework::new(kept.iter().cloned(), edges)
    }

    /// Same nodes, different attack relation.
    pub fn with_attacks<A, T>(&self, attacks: A) -> Result<Framework, AfError>
    where
        A: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        Framework::new(self.nodes.iter().cloned(), attacks)
    }

    /// Renames nodes through `map`; unmapped nodes keep their id.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Result<Framework, AfError> {
        let name = |n: &str| map.get(n).cloned().unwrap_or_else(|| n.to_string());
        let edges: Vec<(String, String)> =
            self.attacks().map(|(x, y)| (name(x), name(y))).collect();
        Framework::new(self.nodes.iter().map(|n| name(n)), edges)
    }

    pub(crate) fn ids(&self, mask: &[bool]) -> BTreeSet<String> {
        mask.iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| self.nodes[i].clone())
            .collect()
    }

    /// Serializes to the apx-style text format read by [`Framework::parse_apx`].
    pub fn to_apx(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            out.push_str(&format!("arg({n}).\n"));
        }
        for (x, y) in self.attacks() {
            out.push_str(&format!("att({x},{y}).\n"));
        }
        out
    }

    /// Parses `arg(<id>).` / `att(<id>,<id>).` lines. `%` and `#` start comments.
    pub fn parse_apx(text: &str) -> Result<Framework, AfError> {
        let mut nodes: Vec<String> = Vec::new();
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        let mut seen_edges = BTreeSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let (name, args) =
                parse_fact(line).map_err(|msg| AfError::Parse { line: n + 1, msg })?;
            match (name, args.as_slice()) {
                ("arg", [id]) => {
                    if !seen.insert(id.clone()) {
                        return Err(AfError::Parse {
                            line: n + 1,
                            msg: format!("duplicate argument '{id}'"),
                        });
                    }
                    nodes.push(id.clone());
                }
                ("att", [x, y]) => {
                    if !seen_edges.insert((x.clone(), y.clone())) {
                        return Err(AfError::Parse {
                            line: n + 1,
                            msg: format!("duplicate attack ({x},{y})"),
                        });
                    }
                    edges.push((n + 1, x.clone(), y.clone()));
                }
                _ => {
                    return Err(AfError::Parse {
                        line: n + 1,
                        msg: format!("unknown directive '{name}/{}'", args.len()),
                    })
                }
            }
        }
        for (line, x, y) in &edges {
            for end in [x, y] {
                if !seen.contains(end) {
                    return Err(AfError::DanglingAttack {
                        line: *line,
                        node: end.clone(),
                    });
                }
            }
        }
        Framework::new(
            nodes,
            edges.iter().map(|(_, x, y)| (x.as_str(), y.as_str())),
        )
    }
}

pub(crate) fn strip_comment(raw: &str) -> &str {
    let cut = raw.find(['%', '#']).unwrap_or(raw.len());
    raw[..cut].trim()
}

/// Splits `name(...).` into its name and the raw text between the parentheses.
pub(crate) fn split_fact(line: &str) -> Result<(&str, &str), String> {
    let body = line
        .strip_suffix('.')
        .ok_or_else(|| "missing terminating '.'".to_string())?
        .trim_end();
    let open = body.find('(').ok_or_else(|| "expected '('".to_string())?;
    let inner = body[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| "expected ')'".to_string())?;
    let name = body[..open].trim();
    if name.is_empty() {
        return Err("missing directive name".into());
    }
    Ok((name, inner))
}

/// Splits `name(a, b, ...).` into its name and trimmed identifier arguments.
pub(crate) fn parse_fact(line: &str) -> Result<(&str, Vec<String>), String> {
    let (name, inner) = split_fact(line)?;
    let args: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
    if let Some(bad) = args.iter().find(|a| !is_identifier(a)) {
        return Err(format!("invalid identifier '{bad}'"));
    }
    Ok((name, args))
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_checks() {
        let f = Framework::new(["b", "a"], [("a", "b")]).unwrap();
        assert_eq!(f.nodes(), ["a", "b"]);
        assert!(f.has_attack("a", "b"));
        assert!(!f.has_attack("b", "a"));
        assert!(matches!(
            Framework::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(AfError::DuplicateNode(_))
        ));
        assert!(matches!(
            Framework::new(["a"], [("a", "z")]),
            Err(AfError::UnknownNode(_))
        ));
    }

    #[test]
    fn apx_round_trip() {
        let text = "arg(A).\narg(B).\n% comment\natt(A,B).\n";
        let f = Framework::parse_apx(text).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.attack_count(), 1);
        assert_eq!(Framework::parse_apx(&f.to_apx()).unwrap(), f);
    }

    #[test]
    fn apx_errors() {
        assert!(matches!(
            Framework::parse_apx("att(a,b).\n"),
            Err(AfError::DanglingAttack { line: 1, .. })
        ));
        assert!(matches!(
            Framework::parse_apx("arg(a).\nfoo(a).\n"),
            Err(AfError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Framework::parse_apx("arg(a).\narg(a).\n"),
            Err(AfError::Parse { line: 2, .. })
        ));
        assert!(Framework::parse_apx("arg(a)\n").is_err());
        assert!(Framework::parse_apx("").unwrap().is_empty());
    }

    #[test]
    fn restrict_keeps_induced_edges() {
        let f = Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let g = f.restrict(["a", "b"]).unwrap();
        assert_eq!(g.attacks().collect::<Vec<_>>(), [("a", "b")]);
    }
}
