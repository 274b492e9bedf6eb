//! Fixed frameworks and the seeded random corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::af::{random_af, ArgumentationFramework};

fn build(names: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
    ArgumentationFramework::new(names, attacks).expect("fixture is well formed")
}

/// The eight named fixtures, smallest first.
pub fn fixtures() -> Vec<(&'static str, ArgumentationFramework)> {
    vec![
        ("empty", ArgumentationFramework::empty()),
        ("single", build(&["a"], &[])),
        ("self-attacker", build(&["a"], &[("a", "a")])),
        ("chain", build(&["a", "b"], &[("a", "b")])),
        ("mutual", mutual_attack()),
        ("3-cycle", build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])),
        ("4-cycle", build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])),
        ("mutual-plus-chain", build(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("b", "c")])),
    ]
}

/// `a ⇄ b`.
pub fn mutual_attack() -> ArgumentationFramework {
    build(&["a", "b"], &[("a", "b"), ("b", "a")])
}

/// Parameters of a seeded random corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    pub p_list: Vec<f64>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 7,
            count: 200,
            n_max: 8,
            p_list: vec![0.1, 0.25, 0.5],
        }
    }
}

/// Draws `count` frameworks: size uniform in `1..=n_max`, attack probability
/// uniform over `p_list`, and a fresh generator seed for each, all from one
/// master generator.
pub fn corpus(spec: &CorpusSpec) -> Vec<ArgumentationFramework> {
    assert!(spec.n_max >= 1, "n_max must be at least 1");
    assert!(!spec.p_list.is_empty(), "p_list must not be empty");
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let n = master.random_range(1..=spec.n_max);
            let p = spec.p_list[master.random_range(0..spec.p_list.len())];
            let seed: u64 = master.random();
            random_af(n, p, seed)
        })
        .collect()
}
