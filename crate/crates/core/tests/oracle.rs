use std::collections::BTreeSet;

use nek::oracle::brute::{brute_classes, brute_code, MAX_BRUTE_SIZE};
use nek::oracle::{enumerate_involutive_posets, full_proper_exists};
use nek::states::{embed, is_full, is_proper_set, is_state, synthesize_full_proper, Synthesis};

#[test]
fn enumeration_matches_brute_force() {
    for n in 2..=MAX_BRUTE_SIZE {
        let enumerated = enumerate_involutive_posets(n).unwrap();
        let codes: BTreeSet<Vec<u8>> = enumerated.iter().map(brute_code).collect();
        assert_eq!(codes.len(), enumerated.len(), "duplicate classes at n={n}");
        assert_eq!(codes, brute_classes(n), "n={n}");
    }
}

#[test]
fn synthesis_agrees_with_vertex_oracle() {
    let mut found = 0;
    let mut impossible = 0;
    for n in 2..=6 {
        for p in enumerate_involutive_posets(n).unwrap() {
            let oracle = full_proper_exists(&p);
            match synthesize_full_proper(&p).unwrap() {
                Synthesis::Found { states, .. } => {
                    assert!(oracle, "{p:?}");
                    assert!(states.members.iter().all(|m| is_state(&p, &m.values)));
                    assert!(is_full(&p, &states.members).unwrap().holds());
                    assert!(is_proper_set(&p, &states.members).unwrap().holds());
                    embed(&p, &states).unwrap();
                    found += 1;
                }
                Synthesis::Impossible { .. } => {
                    assert!(!oracle, "{p:?}");
                    impossible += 1;
                }
            }
        }
    }
    assert!(found > 0 && impossible > 0);
}
