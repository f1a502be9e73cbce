mod common;

use std::collections::BTreeSet;

use argval::argument::{
    attacks, build_arguments, check_argument, framework_from_kb, ArgError, ArgumentTable,
    BuilderConfig, StructuredArgument,
};
use argval::logic::{parse_formula, Formula, KnowledgeBase};
use common::{oracle_entails, read_fixture};
use proptest::prelude::*;

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn kb(name: &str) -> KnowledgeBase {
    KnowledgeBase::parse(&read_fixture(name)).unwrap()
}

fn claims() -> Vec<Formula> {
    read_fixture("kb0.claims")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(f)
        .collect()
}

fn arg(support: &[&str], claim: &str) -> StructuredArgument {
    StructuredArgument::new("x", support.iter().map(|s| f(s)).collect(), f(claim))
}

fn find<'a>(table: &'a ArgumentTable, want: &StructuredArgument) -> &'a str {
    table
        .arguments()
        .iter()
        .find(|a| a.same_content(want))
        .map(|a| a.id.as_str())
        .unwrap_or_else(|| panic!("missing {want}"))
}

fn oracle_consistent(fs: &[Formula]) -> bool {
    !oracle_entails(fs, &f("p & ~p"))
}

fn oracle_attacks(x: &StructuredArgument, y: &StructuredArgument) -> bool {
    let mut rebut = y.support.clone();
    rebut.push(x.claim.clone());
    !oracle_consistent(&rebut)
        || y.support
            .iter()
            .any(|phi| oracle_entails(&x.support, &Formula::not(phi.clone())))
}

/// Every subset of size at most `max` that is a consistent, minimal support
/// for one of the targets.
fn oracle_arguments(
    kb: &[Formula],
    targets: &[Formula],
    max: usize,
) -> BTreeSet<(Vec<Formula>, Formula)> {
    let n = kb.len();
    let mut out = BTreeSet::new();
    for m in 1u32..1 << n {
        if m.count_ones() as usize > max {
            continue;
        }
        let s: Vec<Formula> = (0..n)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| kb[i].clone())
            .collect();
        if !oracle_consistent(&s) {
            continue;
        }
        for c in targets {
            let minimal = (0..s.len()).all(|d| {
                let rest: Vec<Formula> = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != d)
                    .map(|(_, g)| g.clone())
                    .collect();
                !oracle_entails(&rest, c)
            });
            if oracle_entails(&s, c) && minimal {
                out.insert((s.clone(), c.clone()));
            }
        }
    }
    out
}

#[test]
fn kb0_land_use_arguments() {
    let kb0 = kb("kb0.kb");
    let (af, table) = framework_from_kb(&kb0, &BuilderConfig::with_targets(claims())).unwrap();
    let a1 = find(&table, &arg(&["a", "a -> y"], "y"));
    let a2 = find(&table, &arg(&["r", "r -> ~a"], "~(a & (a -> y))"));
    let a3 = find(&table, &arg(&["y", "y -> ~r"], "~(r & (r -> ~a))"));
    assert!(af.has_attack(a2, a1));
    assert!(af.has_attack(a3, a2));
    assert!(!af.has_attack(a1, a2));
    for a in table.arguments() {
        assert!(check_argument(a, &kb0, false).unwrap().is_empty(), "{a}");
    }
}

#[test]
fn kb1_extends_kb0() {
    let cfg = BuilderConfig::with_targets(claims());
    let small = build_arguments(&kb("kb0.kb"), &cfg).unwrap();
    let large = build_arguments(&kb("kb1.kb"), &cfg).unwrap();
    for a in &small {
        assert!(large.iter().any(|b| b.same_content(a)), "{a}");
    }
}

#[test]
fn all_arguments_satisfy_invariants() {
    let kb0 = kb("kb0.kb");
    let cfg = BuilderConfig {
        max_support_size: 2,
        ..BuilderConfig::default()
    };
    let args = build_arguments(&kb0, &cfg).unwrap();
    assert!(!args.is_empty());
    for a in &args {
        assert!(a.support.len() <= 2);
        assert!(check_argument(a, &kb0, false).unwrap().is_empty(), "{a}");
        assert!(!attacks(a, a).unwrap(), "{a}");
    }
    let ids: BTreeSet<&str> = args.iter().map(|a| a.id.as_str()).collect();
    assert_eq!(ids.len(), args.len());
}

#[test]
fn resource_and_config_errors() {
    let kb0 = kb("kb0.kb");
    let zero = BuilderConfig {
        max_support_size: 0,
        ..BuilderConfig::default()
    };
    assert_eq!(build_arguments(&kb0, &zero), Err(ArgError::InvalidConfig));
    let tight = BuilderConfig {
        node_budget: 3,
        ..BuilderConfig::default()
    };
    let err = build_arguments(&kb0, &tight).unwrap_err();
    assert!(err.is_resource());
    let narrow = BuilderConfig {
        atom_bound: 2,
        ..BuilderConfig::default()
    };
    assert!(build_arguments(&kb0, &narrow).unwrap_err().is_resource());
}

#[test]
fn table_round_trip() {
    let (_, table) =
        framework_from_kb(&kb("kb0.kb"), &BuilderConfig::with_targets(claims())).unwrap();
    assert_eq!(ArgumentTable::parse(&table.render()).unwrap(), table);
    assert!(matches!(
        ArgumentTable::parse("argument(a1, [a], a).\nargument(a2 [a], a).\n"),
        Err(ArgError::Parse { line: 2, .. })
    ));
}

fn small_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(&["a", "b", "c"][..]).prop_map(Formula::atom);
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::implies(l, r)),
        ]
    })
}

fn kb_strategy() -> impl Strategy<Value = KnowledgeBase> {
    prop::collection::btree_set(small_formula(), 1..=5)
        .prop_map(|fs| KnowledgeBase::from_formulas(fs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn builder_matches_subset_oracle(
        kb in kb_strategy(),
        targets in prop::collection::btree_set(small_formula(), 1..=3),
        max in 1usize..=3,
    ) {
        let targets: Vec<Formula> = targets.into_iter().collect();
        let cfg = BuilderConfig { max_support_size: max, ..BuilderConfig::with_targets(targets.clone()) };
        let got: BTreeSet<(Vec<Formula>, Formula)> = build_arguments(&kb, &cfg)
            .unwrap()
            .into_iter()
            .map(|a| (a.support, a.claim))
            .collect();
        prop_assert_eq!(got, oracle_arguments(kb.formulas(), &targets, max));
    }

    #[test]
    fn attack_matches_oracle(kb in kb_strategy()) {
        let cfg = BuilderConfig { max_support_size: 2, ..BuilderConfig::default() };
        let args = build_arguments(&kb, &cfg).unwrap();
        for x in args.iter().take(12) {
            prop_assert!(!attacks(x, x).unwrap());
            for y in args.iter().take(12) {
                prop_assert_eq!(attacks(x, y).unwrap(), oracle_attacks(x, y), "{} {}", x, y);
            }
        }
    }

    #[test]
    fn built_arguments_keep_invariants(kb in kb_strategy()) {
        let cfg = BuilderConfig { max_support_size: 3, ..BuilderConfig::default() };
        for a in build_arguments(&kb, &cfg).unwrap() {
            prop_assert!(check_argument(&a, &kb, false).unwrap().is_empty(), "{}", a);
        }
    }
}
