use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::CliError;

/// Defaults read from a `key = value` file; command-line flags win.
#[derive(Debug, Default)]
pub struct Config {
    values: BTreeMap<String, String>,
}

const KEYS: [&str; 12] = [
    "semantics",
    "audience",
    "reading",
    "preset",
    "depth_cap",
    "schemes",
    "max_support_size",
    "atom_bound",
    "node_budget",
    "max_steps",
    "output",
    "seed",
];

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::input(format!("config line {}: expected key = value", i + 1))
            })?;
            let k = k.trim();
            if !KEYS.contains(&k) {
                return Err(CliError::input(format!(
                    "config line {}: unknown key '{k}'",
                    i + 1
                )));
            }
            values.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn str(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `flag` if given, else the config value, else `None`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        self.str(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| CliError::input(format!("config key '{key}': {e}")))
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_pick() {
        let c = Config::parse("# defaults\nsemantics = stable\ndepth_cap=8\n").unwrap();
        assert_eq!(
            c.pick::<String>(None, "semantics").unwrap().as_deref(),
            Some("stable")
        );
        assert_eq!(c.pick(Some(3usize), "depth_cap").unwrap(), Some(3));
        assert_eq!(c.pick::<usize>(None, "depth_cap").unwrap(), Some(8));
        assert_eq!(c.pick::<usize>(None, "seed").unwrap(), None);
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("semantics").is_err());
        assert!(Config::parse("depth_cap = x")
            .unwrap()
            .pick::<usize>(None, "depth_cap")
            .is_err());
    }
}
