mod common;

use argval::dialogue::{
    initial_state, parse_script, play_script, proponent_wins, render_transcript, Agent,
    DialogueError, DialogueState, RuleSet, Thesis, Violation, PRELUDE,
};
use argval::logic::{parse_formula, Formula};
use common::{oracle_valid, read_fixture};
use proptest::prelude::*;

fn thesis(s: &str) -> Thesis {
    s.parse().unwrap()
}

fn wins(t: &str, rules: RuleSet) -> bool {
    proponent_wins(&thesis(t), &rules).unwrap().winner == Agent::Proponent
}

fn formula_strategy(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(&["a", "b"][..]).prop_map(Formula::atom);
    leaf.prop_recursive(depth, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::implies(l, r)),
        ]
    })
}

#[test]
fn table3_transcript_is_byte_exact() {
    let moves = parse_script(&read_fixture("table3.script")).unwrap();
    let t = play_script(&thesis("a & ~a"), &RuleSet::classical(), &moves).unwrap();
    assert_eq!(t.winner, Some(Agent::Opponent));
    assert_eq!(render_transcript(&t), read_fixture("table3.txt"));
}

#[test]
fn table4_transcript_is_byte_exact() {
    let moves = parse_script(&read_fixture("table4.script")).unwrap();
    let t = play_script(&thesis("a & ~a"), &RuleSet::d11(), &moves).unwrap();
    assert_eq!(t.winner, Some(Agent::Proponent));
    assert_eq!(render_transcript(&t), read_fixture("table4.txt"));
}

#[test]
fn table3_final_move_is_illegal_under_d11() {
    let moves = parse_script(&read_fixture("table3.script")).unwrap();
    match play_script(&thesis("a & ~a"), &RuleSet::d11(), &moves) {
        Err(DialogueError::Illegal {
            counter: 5,
            violation,
        }) => {
            assert!(
                matches!(violation, Violation::OpponentAtomRestriction(_)),
                "{violation}"
            )
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn decision_corpus() {
    let classical_valid = [
        "a | ~a",
        "a -> a",
        "~~a -> a",
        "((a -> b) -> a) -> a",
        "(a & b) -> (b & a)",
        "~(a & ~a)",
        "(a -> b) -> (~b -> ~a)",
        "a -> (b -> a)",
    ];
    for t in classical_valid {
        assert!(wins(t, RuleSet::classical()), "{t}");
        assert!(oracle_valid(&parse_formula(t).unwrap()), "{t}");
    }
    for t in ["a", "a -> b", "a | b", "a & ~a", "(a -> b) -> (b -> a)"] {
        assert!(!wins(t, RuleSet::classical()), "{t}");
    }
    assert!(!wins("a | ~a", RuleSet::intuitionistic()));
    assert!(!wins("((a -> b) -> a) -> a", RuleSet::intuitionistic()));
    assert!(wins("a -> ~~a", RuleSet::intuitionistic()));
    assert!(wins("a & ~a", RuleSet::d11()));
    assert!(wins("a -> (~a -> b)", RuleSet::d11()));
    assert!(!wins("a -> (~a -> b)", RuleSet::d11_nl()));
    assert!(!wins("(a & ~a) -> b", RuleSet::d11_nl()));
}

#[test]
fn sequent_theses() {
    assert!(wins("a, a -> y |- y", RuleSet::classical()));
    assert!(!wins("a -> y |- y", RuleSet::classical()));
    assert_eq!(thesis("y [a, a -> y]"), thesis("a, a -> y |- y"));
}

#[test]
fn presets_and_depth_cap() {
    for name in RuleSet::PRESETS {
        assert!(RuleSet::preset(name).is_ok(), "{name}");
    }
    assert!(RuleSet::preset("lorenzen").is_err());
    let mut tight = RuleSet::classical();
    tight.depth_cap = 1;
    assert!(matches!(
        proponent_wins(&thesis("((a -> b) -> a) -> a"), &tight),
        Err(DialogueError::DepthCap(1))
    ));
}

/// Every formula over two atoms with at most two nested connectives.
fn shallow_formulas() -> Vec<Formula> {
    let mut layer = vec![Formula::atom("a"), Formula::atom("b")];
    for _ in 0..2 {
        let mut next = layer.clone();
        for x in &layer {
            next.push(Formula::not(x.clone()));
            for y in &layer {
                next.push(Formula::and(x.clone(), y.clone()));
                next.push(Formula::or(x.clone(), y.clone()));
                next.push(Formula::implies(x.clone(), y.clone()));
            }
        }
        next.sort();
        next.dedup();
        layer = next;
    }
    layer
}

#[test]
fn shallow_formulas_match_truth_tables() {
    let all = shallow_formulas();
    assert!(all.len() > 700);
    for f in &all {
        let t = Thesis::formula(f.clone());
        let classical =
            proponent_wins(&t, &RuleSet::classical()).unwrap().winner == Agent::Proponent;
        let intuitionistic = proponent_wins(&t, &RuleSet::intuitionistic())
            .unwrap()
            .winner
            == Agent::Proponent;
        assert_eq!(classical, oracle_valid(f), "{f}");
        assert!(!intuitionistic || classical, "{f}");
    }
}

#[test]
fn counters_and_positions() {
    assert_eq!(DialogueState::counter_of(0), Some(0));
    assert_eq!(DialogueState::counter_of(1), None);
    assert_eq!(DialogueState::counter_of(PRELUDE), Some(1));
    for c in 0..20 {
        assert_eq!(
            DialogueState::counter_of(DialogueState::position_of(c)),
            Some(c)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn classical_wins_only_tautologies(f in formula_strategy(3)) {
        let r = proponent_wins(&Thesis::formula(f.clone()), &RuleSet::classical()).unwrap();
        if r.winner == Agent::Proponent {
            prop_assert!(oracle_valid(&f), "{}", f);
        }
    }

    #[test]
    fn intuitionistic_wins_only_tautologies(f in formula_strategy(3)) {
        let r = proponent_wins(&Thesis::formula(f.clone()), &RuleSet::intuitionistic()).unwrap();
        if r.winner == Agent::Proponent {
            prop_assert!(oracle_valid(&f), "{}", f);
        }
    }

    #[test]
    fn random_plays_alternate_and_terminate(
        f in formula_strategy(3),
        preset in prop::sample::select(&RuleSet::PRESETS[..]),
        choices in prop::collection::vec(any::<prop::sample::Index>(), 300),
    ) {
        let mut state = initial_state(Thesis::formula(f.clone()), RuleSet::preset(preset).unwrap());
        let mut ended = false;
        for pick in &choices {
            let legal = state.legal_moves();
            prop_assert_eq!(&legal, &state.legal_moves());
            if legal.is_empty() {
                prop_assert_eq!(state.winner(), Some(state.to_move.other()));
                ended = true;
                break;
            }
            let mv = pick.get(&legal).clone();
            prop_assert_eq!(mv.agent, state.to_move);
            prop_assert!(state.check_move(&mv).is_ok());
            let next = state.apply_move(&mv).unwrap();
            prop_assert_eq!(next.to_move, state.to_move.other());
            prop_assert_eq!(next.history.len(), state.history.len() + 1);
            state = next;
        }
        prop_assert!(ended, "{} under {} did not end in {} plays", f, preset, choices.len());
        let plays: Vec<Agent> = state.history[PRELUDE..].iter().map(|m| m.agent).collect();
        for (i, a) in plays.iter().enumerate() {
            prop_assert_eq!(*a, if i % 2 == 0 { Agent::Opponent } else { Agent::Proponent });
        }
    }
}
