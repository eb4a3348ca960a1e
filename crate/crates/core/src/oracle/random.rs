//! Reproducible pseudo-random GSEs.
//!
//! A ChaCha8 stream seeded with `seed` draws, for each of the
//! `num_event_pairs` events `r1, r2, …` in turn and for each state in
//! order, a numerator uniform in `0..=d`; the value is `numerator / d`.
//! Missing complements are added as `r<k>'`, constants are implicit, and
//! events equal as functions are merged.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::events::EventSet;
use crate::rational::{ratio, Rational};

pub fn random_gse(
    num_states: usize,
    num_event_pairs: usize,
    denominator_bound: u32,
    seed: u64,
) -> EventSet {
    assert!(
        num_states > 0 && denominator_bound > 0,
        "parameters must be positive"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = i64::from(denominator_bound);
    let states = (1..=num_states).map(|i| format!("s{i}")).collect();
    let events = (1..=num_event_pairs)
        .map(|k| {
            let values: Vec<Rational> = (0..num_states)
                .map(|_| ratio(rng.gen_range(0..=d), d))
                .collect();
            (format!("r{k}"), values)
        })
        .collect();
    EventSet::build(states, events, true).expect("generated values lie in [0,1]")
}

/// Parameters of the `index`-th member of a random corpus: up to 4 states,
/// up to 5 event pairs (so at most 12 members) and denominators 1 to 4.
pub fn corpus_parameters(seed: u64, index: u64) -> (usize, usize, u32, u64) {
    let instance = seed.wrapping_add(index);
    let mut rng = ChaCha8Rng::seed_from_u64(instance ^ 0x9e37_79b9_7f4a_7c15);
    let states = rng.gen_range(1..=4);
    let pairs = rng.gen_range(0..=5);
    let d = rng.gen_range(1..=4);
    (states, pairs, d, instance)
}

/// `count` random GSEs derived from `seed`, tagged with their generator
/// parameters.
pub fn random_corpus(count: u64, seed: u64) -> Vec<((usize, usize, u32, u64), EventSet)> {
    (0..count)
        .map(|i| {
            let p = corpus_parameters(seed, i);
            (p, random_gse(p.0, p.1, p.2, p.3))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_parameters() {
        assert_eq!(random_gse(1, 0, 5, 7), fixtures::two());
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_gse(3, 4, 6, 99), random_gse(3, 4, 6, 99));
    }

    #[test]
    fn corpus_bounds() {
        for (params, g) in random_corpus(200, 1) {
            assert!((1..=4).contains(&params.0));
            assert!(g.len() <= 12);
            assert_eq!(g.num_states(), params.0);
        }
    }
}
