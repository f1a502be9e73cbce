use std::collections::BTreeMap;

use rand::Rng;

use crate::af::random_framework;

use super::framework::{Audience, ValueFramework};

fn permutations(items: &[String]) -> Vec<Vec<String>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Random value framework over values `v0..v{values-1}` with one audience per
/// total order of the values actually used.
pub fn random_value_framework<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    density: f64,
    values: usize,
) -> ValueFramework {
    let base = random_framework(rng, n, density);
    let values = values.max(1);
    let map: BTreeMap<String, String> = base
        .nodes()
        .iter()
        .map(|x| (x.clone(), format!("v{}", rng.gen_range(0..values))))
        .collect();
    let used: Vec<String> = map
        .values()
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let audiences = permutations(&used)
        .into_iter()
        .enumerate()
        .map(|(i, order)| Audience::new(format!("aud{i}"), order))
        .collect();
    ValueFramework::new(base, map, audiences).expect("generated framework is well-formed")
}
