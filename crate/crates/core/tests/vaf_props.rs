mod common;

use std::collections::BTreeMap;

use argval::af::SolverConfig;
use argval::af::{enumerate_extensions, Framework, Semantics, Status};
use argval::vaf::{
    defeats_for, practice_ordering, preferred_for_audience, preferred_for_audience_with,
    random_value_framework, reduce_for_audience, status_for_audience, Audience, ConflictReading,
    VafError, ValueFramework,
};
use common::{read_fixture, set, PowersetOracle, Set};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn load(name: &str) -> ValueFramework {
    ValueFramework::parse(&read_fixture(name)).unwrap()
}

fn preferred(vf: &ValueFramework, aud: &str) -> Vec<Set> {
    preferred_for_audience(vf, vf.audience(aud).unwrap())
        .unwrap()
        .into_iter()
        .map(|e| e.members)
        .collect()
}

/// Defeat edges recomputed from ranks: an attack survives unless the target's
/// value sits strictly earlier in the audience order.
fn oracle_defeats(vf: &ValueFramework, aud: &Audience) -> Vec<(String, String)> {
    let rank = |x: &str| {
        aud.order
            .iter()
            .position(|v| *v == vf.value_map()[x])
            .unwrap()
    };
    vf.base()
        .attacks()
        .filter(|(x, y)| rank(y) >= rank(x))
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect()
}

fn oracle_preferred(vf: &ValueFramework, aud: &Audience) -> Vec<Set> {
    let reduced = Framework::new(vf.base().nodes().to_vec(), oracle_defeats(vf, aud)).unwrap();
    PowersetOracle::new(&reduced).extensions("preferred")
}

fn vaf_strategy() -> impl Strategy<Value = ValueFramework> {
    (any::<u64>(), 0usize..=7, 0.0f64..0.6, 1usize..=3).prop_map(|(seed, n, d, v)| {
        random_value_framework(&mut StdRng::seed_from_u64(seed), n, d, v)
    })
}

#[test]
fn kb0_audiences() {
    let vf = load("vaf_kb0.vaf");
    assert_eq!(preferred(&vf, "audience_y"), vec![set(&["A1", "A3", "A4"])]);
    assert_eq!(preferred(&vf, "audience_w"), vec![set(&["A2", "A3", "A4"])]);
    let y = vf.audience("audience_y").unwrap();
    assert_eq!(
        status_for_audience(&vf, y, "A1").unwrap(),
        Status::Justified
    );
    assert_eq!(
        status_for_audience(&vf, y, "A2").unwrap(),
        Status::Overruled
    );
    let w = vf.audience("audience_w").unwrap();
    assert_eq!(
        status_for_audience(&vf, w, "A1").unwrap(),
        Status::Overruled
    );
    assert!(defeats_for(w, "A4", "A1", &vf).unwrap());
    assert!(!defeats_for(y, "A4", "A1", &vf).unwrap());
}

#[test]
fn kb0_practice_orderings() {
    let vf = load("vaf_kb0.vaf");
    let pair = |p: &str, q: &str| (p.to_string(), q.to_string());
    let y = practice_ordering(&vf, vf.audience("audience_y").unwrap(), vf.practices()).unwrap();
    assert_eq!(
        y.dominates.iter().cloned().collect::<Vec<_>>(),
        vec![pair("agriculture", "restoration")]
    );
    let w = practice_ordering(&vf, vf.audience("audience_w").unwrap(), vf.practices()).unwrap();
    assert_eq!(
        w.dominates.iter().cloned().collect::<Vec<_>>(),
        vec![pair("restoration", "agriculture")]
    );
    let partial: BTreeMap<String, String> = [("A1".to_string(), "agriculture".to_string())].into();
    assert!(matches!(
        practice_ordering(&vf, vf.audience("audience_y").unwrap(), &partial),
        Err(VafError::UnmappedPractice(_))
    ));
}

#[test]
fn kb1_audiences() {
    let vf = load("vaf_kb1.vaf");
    assert_eq!(
        preferred(&vf, "audience_y"),
        vec![set(&["A1", "A3", "A5", "A7"])]
    );
    assert_eq!(preferred(&vf, "audience_w"), vec![set(&["A2", "A5", "A7"])]);
}

#[test]
fn strict_reading_is_narrower() {
    let vf = load("vaf_kb0.vaf");
    let y = vf.audience("audience_y").unwrap();
    let strict = preferred_for_audience_with(
        &vf,
        y,
        ConflictReading::StrictDef10,
        &SolverConfig::default(),
    )
    .unwrap();
    for e in &strict {
        let vals: Set = e
            .members
            .iter()
            .map(|x| vf.value_of(x).unwrap().to_string())
            .collect();
        assert!(vals.len() <= 1, "{e}");
    }
}

#[test]
fn malformed_audiences_are_rejected() {
    let base = "arg(a).\narg(b).\natt(a,b).\nval(a,x).\nval(b,y).\n";
    assert!(matches!(
        ValueFramework::parse(&format!("{base}audience(one, x).\n")),
        Err(VafError::AudienceNotTotal { .. })
    ));
    assert!(matches!(
        ValueFramework::parse(&format!("{base}audience(one, x > y > z).\n")),
        Err(VafError::AudienceNotTotal { .. })
    ));
    assert!(matches!(
        ValueFramework::parse("arg(a).\narg(b).\nval(a,x).\n"),
        Err(VafError::MissingValue(_))
    ));
    assert!(matches!(
        ValueFramework::parse("arg(a).\nval(a,x).\nfoo(a).\n"),
        Err(VafError::Parse { line: 3, .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn preferred_matches_reduced_oracle(vf in vaf_strategy()) {
        for aud in vf.audiences() {
            let got: Vec<Set> = preferred_for_audience(&vf, aud).unwrap().into_iter().map(|e| e.members).collect();
            prop_assert_eq!(got, oracle_preferred(&vf, aud), "{}", aud.name);
        }
    }

    #[test]
    fn reduction_keeps_exactly_the_defeats(vf in vaf_strategy()) {
        for aud in vf.audiences() {
            let reduced = reduce_for_audience(&vf, aud).unwrap();
            let got: Vec<(String, String)> = reduced.attacks().map(|(x, y)| (x.to_string(), y.to_string())).collect();
            let mut want = oracle_defeats(&vf, aud);
            want.sort();
            let mut got = got;
            got.sort();
            prop_assert_eq!(got, want);
            for (x, y) in reduced.attacks() {
                prop_assert!(vf.base().has_attack(x, y));
            }
        }
    }

    #[test]
    fn single_value_is_plain_preferred(seed in any::<u64>(), n in 0usize..=7, d in 0.0f64..0.6) {
        let vf = random_value_framework(&mut StdRng::seed_from_u64(seed), n, d, 1);
        let plain: Vec<Set> = enumerate_extensions(vf.base(), Semantics::Preferred)
            .unwrap()
            .into_iter()
            .map(|e| e.members)
            .collect();
        for aud in vf.audiences() {
            let got: Vec<Set> = preferred_for_audience(&vf, aud).unwrap().into_iter().map(|e| e.members).collect();
            prop_assert_eq!(&got, &plain);
        }
    }

    #[test]
    fn text_round_trip(vf in vaf_strategy()) {
        prop_assert_eq!(ValueFramework::parse(&vf.to_text()).unwrap(), vf);
    }
}
