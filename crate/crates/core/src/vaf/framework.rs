use std::collections::{BTreeMap, BTreeSet};

use crate::af::{is_identifier, parse_fact, split_fact, strip_comment, Framework};

use super::VafError;

/// A named total order over values, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audience {
    pub name: String,
    pub order: Vec<String>,
}

impl Audience {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        order: impl IntoIterator<Item = S>,
    ) -> Self {
        Audience {
            name: name.into(),
            order: order.into_iter().map(Into::into).collect(),
        }
    }

    pub fn rank(&self, value: &str) -> Option<usize> {
        self.order.iter().position(|v| v == value)
    }
}

/// Audience-strict preference: `v1` precedes `v2` in the audience's order.
pub fn valpref(aud: &Audience, v1: &str, v2: &str) -> Result<bool, VafError> {
    let r1 = aud
        .rank(v1)
        .ok_or_else(|| VafError::UnknownValue(v1.to_string()))?;
    let r2 = aud
        .rank(v2)
        .ok_or_else(|| VafError::UnknownValue(v2.to_string()))?;
    Ok(r1 < r2)
}

/// A framework whose arguments promote values, judged by several audiences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueFramework {
    base: Framework,
    values: BTreeSet<String>,
    value_map: BTreeMap<String, String>,
    audiences: Vec<Audience>,
    practices: BTreeMap<String, String>,
}

impl ValueFramework {
    /// Validates that `value_map` is total over the nodes and that every
    /// audience is a total order over exactly the mapped values.
    pub fn new(
        base: Framework,
        value_map: BTreeMap<String, String>,
        audiences: Vec<Audience>,
    ) -> Result<Self, VafError> {
        for k in value_map.keys() {
            if !base.contains(k) {
                return Err(VafError::Af(crate::af::AfError::UnknownNode(k.clone())));
            }
        }
        if let Some(n) = base.nodes().iter().find(|n| !value_map.contains_key(*n)) {
            return Err(VafError::MissingValue(n.clone()));
        }
        let values: BTreeSet<String> = value_map.values().cloned().collect();
        let mut names = BTreeSet::new();
        for aud in &audiences {
            if !names.insert(aud.name.clone()) {
                return Err(VafError::DuplicateAudience(aud.name.clone()));
            }
            let listed: BTreeSet<String> = aud.order.iter().cloned().collect();
            if listed.len() != aud.order.len() {
                return Err(VafError::AudienceNotTotal {
                    audience: aud.name.clone(),
                    detail: "a value is listed twice".into(),
                });
            }
            if let Some(v) = values.difference(&listed).next() {
                return Err(VafError::AudienceNotTotal {
                    audience: aud.name.clone(),
                    detail: format!("value '{v}' is not ranked"),
                });
            }
            if let Some(v) = listed.difference(&values).next() {
                return Err(VafError::AudienceNotTotal {
                    audience: aud.name.clone(),
                    detail: format!("value '{v}' is not promoted by any argument"),
                });
            }
        }
        Ok(ValueFramework {
            base,
            values,
            value_map,
            audiences,
            practices: BTreeMap::new(),
        })
    }

    /// Attaches a practice map; every key must be a node.
    pub fn with_practices(mut self, practices: BTreeMap<String, String>) -> Result<Self, VafError> {
        if let Some(k) = practices.keys().find(|k| !self.base.contains(k)) {
            return Err(VafError::Af(crate::af::AfError::UnknownNode(k.clone())));
        }
        self.practices = practices;
        Ok(self)
    }

    pub fn base(&self) -> &Framework {
        &self.base
    }

    pub fn values(&self) -> &BTreeSet<String> {
        &self.values
    }

    pub fn value_map(&self) -> &BTreeMap<String, String> {
        &self.value_map
    }

    pub fn value_of(&self, node: &str) -> Result<&str, VafError> {
        self.value_map
            .get(node)
            .map(String::as_str)
            .ok_or_else(|| VafError::Af(crate::af::AfError::UnknownNode(node.to_string())))
    }

    pub fn audiences(&self) -> &[Audience] {
        &self.audiences
    }

    pub fn audience(&self, name: &str) -> Result<&Audience, VafError> {
        self.audiences
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| VafError::UnknownAudience(name.to_string()))
    }

    pub fn practices(&self) -> &BTreeMap<String, String> {
        &self.practices
    }

    /// Parses the VAF text format: AF lines plus `val/2`, `audience/2`
    /// (`audience(name, v1 > v2 > ...).`) and `practice/2` facts.
    pub fn parse(text: &str) -> Result<Self, VafError> {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        let mut seen_nodes = BTreeSet::new();
        let mut vals = BTreeMap::new();
        let mut auds = Vec::new();
        let mut practices = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |msg: String| VafError::Parse { line: line_no, msg };
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let (name, inner) = split_fact(line).map_err(err)?;
            if name == "audience" {
                let (aname, order) = inner
                    .split_once(',')
                    .ok_or_else(|| err("expected audience(<name>, <v1> > <v2> ...)".into()))?;
                let aname = aname.trim();
                let order: Vec<String> = match order.trim() {
                    "" => Vec::new(),
                    o => o.split('>').map(|v| v.trim().to_string()).collect(),
                };
                if let Some(bad) = std::iter::once(aname)
                    .chain(order.iter().map(String::as_str))
                    .find(|s| !is_identifier(s))
                {
                    return Err(err(format!("invalid identifier '{bad}'")));
                }
                auds.push(Audience::new(aname, order));
                continue;
            }
            let (name, args) = parse_fact(line).map_err(err)?;
            match (name, args.as_slice()) {
                ("arg", [id]) => {
                    if !seen_nodes.insert(id.clone()) {
                        return Err(err(format!("duplicate argument '{id}'")));
                    }
                    nodes.push(id.clone());
                }
                ("att", [x, y]) => edges.push((line_no, x.clone(), y.clone())),
                ("val", [x, v]) => {
                    if vals.insert(x.clone(), v.clone()).is_some() {
                        return Err(err(format!("second value for '{x}'")));
                    }
                }
                ("practice", [x, p]) => {
                    if practices.insert(x.clone(), p.clone()).is_some() {
                        return Err(err(format!("second practice for '{x}'")));
                    }
                }
                _ => return Err(err(format!("unknown directive '{name}/{}'", args.len()))),
            }
        }
        for (line, x, y) in &edges {
            for end in [x, y] {
                if !seen_nodes.contains(end) {
                    return Err(VafError::Af(crate::af::AfError::DanglingAttack {
                        line: *line,
                        node: end.clone(),
                    }));
                }
            }
        }
        let base = Framework::new(
            nodes,
            edges.iter().map(|(_, x, y)| (x.as_str(), y.as_str())),
        )?;
        ValueFramework::new(base, vals, auds)?.with_practices(practices)
    }

    /// Serializes to the text format read by [`ValueFramework::parse`].
    pub fn to_text(&self) -> String {
        let mut out = self.base.to_apx();
        for (x, v) in &self.value_map {
            out.push_str(&format!("val({x},{v}).\n"));
        }
        for a in &self.audiences {
            out.push_str(&format!("audience({}, {}).\n", a.name, a.order.join(" > ")));
        }
        for (x, p) in &self.practices {
            out.push_str(&format!("practice({x},{p}).\n"));
        }
        out
    }
}
