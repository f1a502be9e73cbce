use std::fmt::Write as _;
use std::path::Path;

use argval::af::{
    all_statuses, enumerate_extensions_with, format_set, framework_to_dot, semantic_labellings,
    Framework, Semantics, SolverConfig,
};
use argval::argument::{framework_from_kb, BuilderConfig};
use argval::dialogue::{
    parse_script, play_script, proponent_wins, render_transcript, RuleSet, Thesis,
};
use argval::dkq::{
    check_derivation_with, match_axiom_in, parse_derivation, parse_fo, schemes, SchemeSet,
};
use argval::logic::{parse_formula, KnowledgeBase};
use argval::vaf::{
    hasse_to_dot, practice_ordering, preferred_for_audience_with, random_value_framework,
    reduce_for_audience, statuses_for_audience, Audience, ConflictReading, ValueFramework,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::config::Config;
use crate::error::CliError;
use crate::DotKind;

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map(|s| s.replace("\r\n", "\n"))
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn solver_config(config: &Config) -> Result<SolverConfig, CliError> {
    let mut cfg = SolverConfig::default();
    if let Some(steps) = config.pick::<u64>(None, "max_steps")? {
        cfg.max_steps = steps;
    }
    Ok(cfg)
}

pub fn solve(
    config: &Config,
    file: &Path,
    semantics: Option<String>,
    status: bool,
    labellings: bool,
) -> Result<String, CliError> {
    let af = Framework::parse_apx(&read(file)?)?;
    let sem: Semantics = config
        .pick(semantics, "semantics")?
        .unwrap_or_else(|| "preferred".into())
        .parse()?;
    let cfg = solver_config(config)?;
    let mut out = String::new();
    if labellings {
        for l in semantic_labellings(&af, sem, &cfg)? {
            writeln!(
                out,
                "in={} out={} undec={}",
                format_set(&l.in_set()),
                format_set(&l.out_set()),
                format_set(&l.undec_set())
            )
            .unwrap();
        }
    } else {
        let exts = enumerate_extensions_with(&af, sem, &cfg)?;
        if exts.is_empty() {
            return Err(CliError::Semantic(format!("no {sem} extension exists")));
        }
        for e in exts {
            writeln!(out, "{e}").unwrap();
        }
    }
    if status {
        out.push('\n');
        for (node, st) in all_statuses(&af, sem, &cfg)? {
            writeln!(out, "{node} {st}").unwrap();
        }
    }
    Ok(out)
}

fn reading(config: &Config, flag: Option<String>) -> Result<ConflictReading, CliError> {
    match config.pick(flag, "reading")?.as_deref() {
        None | Some("defeat") => Ok(ConflictReading::Defeat),
        Some("strict") => Ok(ConflictReading::StrictDef10),
        Some(other) => Err(CliError::input(format!(
            "unknown reading '{other}' (expected defeat or strict)"
        ))),
    }
}

fn selected_audiences<'a>(
    vf: &'a ValueFramework,
    config: &Config,
    flag: Option<String>,
) -> Result<Vec<&'a Audience>, CliError> {
    match config.pick(flag, "audience")? {
        Some(name) => Ok(vec![vf.audience(&name)?]),
        None => Ok(vf.audiences().iter().collect()),
    }
}

pub fn vaf(
    config: &Config,
    file: &Path,
    audience: Option<String>,
    reading_flag: Option<String>,
) -> Result<String, CliError> {
    let vf = ValueFramework::parse(&read(file)?)?;
    let reading = reading(config, reading_flag)?;
    let cfg = solver_config(config)?;
    let mut blocks = Vec::new();
    for aud in selected_audiences(&vf, config, audience)? {
        let mut out = String::new();
        writeln!(out, "audience {}: {}", aud.name, aud.order.join(" > ")).unwrap();
        for e in preferred_for_audience_with(&vf, aud, reading, &cfg)? {
            writeln!(out, "preferred: {e}").unwrap();
        }
        for (node, st) in statuses_for_audience(&vf, aud, &cfg)? {
            writeln!(out, "{node} {st}").unwrap();
        }
        if !vf.practices().is_empty() {
            let po = practice_ordering(&vf, aud, vf.practices())?;
            let pairs: Vec<String> = po
                .dominates
                .iter()
                .map(|(p, q)| format!("{p} > {q}"))
                .collect();
            writeln!(out, "ordering: {}", pairs.join(", ")).unwrap();
        }
        blocks.push(out);
    }
    Ok(blocks.join("\n"))
}

#[allow(clippy::too_many_arguments)]
pub fn build(
    config: &Config,
    file: &Path,
    claims: Vec<String>,
    claims_file: Option<&Path>,
    max_support_size: Option<usize>,
    allow_inconsistent: bool,
    af_out: Option<&Path>,
) -> Result<String, CliError> {
    let kb = KnowledgeBase::parse(&read(file)?)?;
    let mut targets = Vec::new();
    for c in &claims {
        targets.push(parse_formula(c)?);
    }
    if let Some(path) = claims_file {
        for line in read(path)?.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                targets.push(parse_formula(line)?);
            }
        }
    }
    let mut cfg = BuilderConfig {
        claim_targets: (!targets.is_empty()).then_some(targets),
        allow_inconsistent_support: allow_inconsistent,
        ..BuilderConfig::default()
    };
    if let Some(n) = config.pick(max_support_size, "max_support_size")? {
        cfg.max_support_size = n;
    }
    if let Some(n) = config.pick::<usize>(None, "atom_bound")? {
        cfg.atom_bound = n;
    }
    if let Some(n) = config.pick::<u64>(None, "node_budget")? {
        cfg.node_budget = n;
    }
    let (af, table) = framework_from_kb(&kb, &cfg)?;
    if let Some(path) = af_out {
        std::fs::write(path, af.to_apx())
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(format!("{}\n{}", table.render(), af.to_apx()))
}

pub fn dialogue(
    config: &Config,
    thesis: &str,
    preset: Option<String>,
    script: Option<&Path>,
    decide: bool,
    strategy: bool,
    depth_cap: Option<usize>,
) -> Result<String, CliError> {
    let thesis: Thesis = thesis.parse()?;
    let mut rules: RuleSet = config
        .pick(preset, "preset")?
        .unwrap_or_else(|| "classical".into())
        .parse()?;
    if let Some(cap) = config.pick(depth_cap, "depth_cap")? {
        rules.depth_cap = cap;
    }
    if decide {
        let result = proponent_wins(&thesis, &rules)?;
        let mut out = format!("The {} wins\n", result.winner.name());
        if let (true, Some(s)) = (strategy, &result.strategy) {
            out.push_str(&s.render());
        }
        return Ok(out);
    }
    let moves = match script {
        Some(path) => parse_script(&read(path)?)?,
        None => Vec::new(),
    };
    Ok(render_transcript(&play_script(&thesis, &rules, &moves)?))
}

pub fn dkq(
    config: &Config,
    file: Option<&Path>,
    scheme_flag: Option<String>,
    matches: Option<String>,
) -> Result<String, CliError> {
    let set: SchemeSet = match config.pick(scheme_flag, "schemes")? {
        Some(name) => name.parse()?,
        None => SchemeSet::default(),
    };
    if let Some(text) = matches {
        let f = parse_fo(&text)?;
        let table = schemes(set);
        let mut out = String::new();
        for (id, binding) in match_axiom_in(set, &f) {
            let scheme = table
                .iter()
                .find(|s| s.id == id)
                .expect("matched scheme exists");
            writeln!(out, "{scheme}  {binding}").unwrap();
        }
        if out.is_empty() {
            out.push_str("no scheme matches\n");
        }
        return Ok(out);
    }
    let path = file.ok_or_else(|| CliError::input("missing derivation file"))?;
    let d = parse_derivation(&read(path)?)?;
    let warnings = check_derivation_with(&d, set)?;
    let mut out = String::from("ok\n");
    for w in warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    Ok(out)
}

fn load_vaf_or_af(path: &Path) -> Result<Result<ValueFramework, Framework>, CliError> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "vaf") {
        Ok(Ok(ValueFramework::parse(&text)?))
    } else {
        Ok(Err(Framework::parse_apx(&text)?))
    }
}

pub fn dot(
    config: &Config,
    file: &Path,
    kind: DotKind,
    audience: Option<String>,
) -> Result<String, CliError> {
    let loaded = load_vaf_or_af(file)?;
    if kind == DotKind::Af {
        return Ok(match &loaded {
            Ok(vf) => framework_to_dot(vf.base()),
            Err(af) => framework_to_dot(af),
        });
    }
    let vf = loaded.map_err(|_| CliError::input("reduced and hasse output need a .vaf file"))?;
    let audiences = selected_audiences(&vf, config, audience)?;
    let [aud] = audiences.as_slice() else {
        return Err(CliError::input("choose one audience with --audience"));
    };
    match kind {
        DotKind::Reduced => Ok(framework_to_dot(&reduce_for_audience(&vf, aud)?)),
        _ => Ok(hasse_to_dot(&practice_ordering(&vf, aud, vf.practices())?)?),
    }
}

pub fn random(
    seed: u64,
    nodes: usize,
    density: f64,
    values: Option<usize>,
) -> Result<String, CliError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(CliError::input("density must lie in [0, 1]"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    Ok(match values {
        Some(v) => random_value_framework(&mut rng, nodes, density, v).to_text(),
        None => argval::af::random_framework(&mut rng, nodes, density).to_apx(),
    })
}
