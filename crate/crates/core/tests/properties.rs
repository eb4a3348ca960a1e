use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use nek::oracle::{canonical_code, enumerate_up_to, is_isomorphic, random_gse, state_vertices};
use nek::states::{is_state, Optimum, StateProgram};
use nek::{classify, ClassifyOptions, InvolutivePoset};

fn permuted(p: &InvolutivePoset, perm: &[usize]) -> InvolutivePoset {
    let n = p.len();
    let mut labels = vec![String::new(); n];
    let mut leq = vec![false; n * n];
    let mut prime = vec![0; n];
    for i in 0..n {
        labels[perm[i]] = format!("x{}", p.label(i));
        prime[perm[i]] = perm[p.prime(i)];
        for j in 0..n {
            leq[perm[i] * n + perm[j]] = p.leq(i, j);
        }
    }
    InvolutivePoset::from_relation(labels, leq, prime).unwrap()
}

fn small_posets() -> Vec<InvolutivePoset> {
    enumerate_up_to(6).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_gse_is_a_gse(states in 1usize..=4, pairs in 0usize..=5, d in 1u32..=4, seed in any::<u64>()) {
        let g = random_gse(states, pairs, d, seed);
        prop_assert!(g.len() <= 2 * pairs + 2);
        for (i, m) in g.members().iter().enumerate() {
            let complement: Vec<BigRational> =
                m.values().iter().map(|v| BigRational::one() - v).collect();
            let j = g.index_of_values(&complement);
            prop_assert_eq!(j, Some(g.complement_of(i)));
            for (k, other) in g.members().iter().enumerate() {
                let pointwise = m.values().iter().zip(other.values()).all(|(a, b)| a <= b);
                prop_assert_eq!(g.leq(i, k), pointwise);
            }
        }
        prop_assert!(g.members()[g.zero()].values().iter().all(Zero::is_zero));
        prop_assert!(g.members()[g.one()].values().iter().all(One::is_one));
    }

    #[test]
    fn classification_is_consistent(states in 1usize..=4, pairs in 0usize..=5, d in 1u32..=4, seed in any::<u64>()) {
        let g = random_gse(states, pairs, d, seed);
        let r = classify(&g, ClassifyOptions::default());
        prop_assert!(r.violations().is_empty(), "{}", r.human(true));
        prop_assert_eq!(r.machine(true), classify(&g, ClassifyOptions::default()).machine(true));
    }

    #[test]
    fn canonical_code_ignores_labelling(index in any::<prop::sample::Index>(), shuffle in any::<[u64; 8]>()) {
        let posets = small_posets();
        let p = &posets[index.index(posets.len())];
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (shuffle[i % 8] % (i as u64 + 1)) as usize);
        }
        let q = permuted(p, &perm);
        prop_assert_eq!(canonical_code(p), canonical_code(&q));
        prop_assert!(is_isomorphic(p, &q));
    }

    #[test]
    fn lp_optimum_matches_vertices(index in any::<prop::sample::Index>(), coeffs in prop::collection::vec(-3i64..=3, 6)) {
        let posets = small_posets();
        let p = &posets[index.index(posets.len())];
        let terms: Vec<(usize, BigRational)> = p
            .elements()
            .zip(coeffs.iter().cycle())
            .map(|(x, &c)| (x, BigRational::from_integer(c.into())))
            .collect();
        let vertices = state_vertices(p);
        let best = vertices
            .iter()
            .map(|v| terms.iter().map(|(x, c)| c * v.value(*x)).sum::<BigRational>())
            .max();
        match StateProgram::new(p).maximize(&terms).unwrap() {
            Optimum::Attained { value, witness } => {
                prop_assert!(is_state(p, &witness.values));
                let at_witness: BigRational = terms.iter().map(|(x, c)| c * witness.value(*x)).sum();
                prop_assert_eq!(&at_witness, &value);
                prop_assert_eq!(Some(value), best);
            }
            Optimum::Infeasible => prop_assert!(vertices.is_empty()),
        }
    }
}

#[test]
fn non_isomorphic_posets_have_distinct_codes() {
    let posets = small_posets();
    let mut codes: Vec<_> = posets.iter().map(canonical_code).collect();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), posets.len());
}
