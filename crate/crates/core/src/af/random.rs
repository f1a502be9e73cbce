use rand::Rng;

use super::framework::Framework;

/// Random framework with `n` nodes named `n00, n01, ...`; each ordered pair,
/// self-loops included, is an attack with probability `density`.
pub fn random_framework<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Framework {
    let names: Vec<String> = (0..n).map(|i| format!("n{i:02}")).collect();
    let mut edges = Vec::new();
    for x in &names {
        for y in &names {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((x.clone(), y.clone()));
            }
        }
    }
    Framework::new(names.iter().cloned(), edges).expect("generated ids are unique")
}
