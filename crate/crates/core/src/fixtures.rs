//! Named structures used throughout the tests, the acceptance suite and
//! the verification corpus.

use crate::events::EventSet;
use crate::poset::InvolutivePoset;
use crate::rational::{int, ratio, Rational};

fn states(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("s{i}")).collect()
}

fn subset_label(mask: u32, n: usize) -> String {
    let digits: String = (0..n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| char::from_digit(i as u32 + 1, 10).expect("n <= 9"))
        .collect();
    format!("e{digits}")
}

fn indicator(mask: u32, n: usize) -> Vec<Rational> {
    (0..n).map(|i| int(i64::from(mask >> i & 1))).collect()
}

/// Indicator events of all subsets of an `n`-element state set (`n <= 9`)
/// accepted by `keep`.
fn indicator_gse(n: usize, keep: impl Fn(u32) -> bool) -> EventSet {
    assert!((1..=9).contains(&n));
    let full = (1u32 << n) - 1;
    let events = (1..full)
        .filter(|&m| keep(m))
        .map(|m| (subset_label(m, n), indicator(m, n)))
        .collect();
    EventSet::build(states(n), events, false).expect("indicator GSE")
}

/// Indicators of the even-sized subsets of an `n`-set. `even(4)` is MO3.
pub fn even(n: usize) -> EventSet {
    indicator_gse(n, |m| m.count_ones() % 2 == 0)
}

/// Indicators of all subsets of a `k`-set: the Boolean algebra `2^k`.
pub fn boolean(k: usize) -> EventSet {
    indicator_gse(k, |_| true)
}

/// `{0, 1}` over one state.
pub fn two() -> EventSet {
    EventSet::build(states(1), vec![], false).expect("two-element GSE")
}

/// `{0, p, p', 1}` with `p = (1/3, 2/3)`.
pub fn mo1() -> EventSet {
    EventSet::build(
        states(2),
        vec![
            ("p".into(), vec![ratio(1, 3), ratio(2, 3)]),
            ("p'".into(), vec![ratio(2, 3), ratio(1, 3)]),
        ],
        false,
    )
    .expect("MO1")
}

/// Benzene ring realized by `a = (1/5, 3/5)` and `b = (3/10, 7/10)`.
pub fn hex() -> EventSet {
    EventSet::build(
        states(2),
        vec![
            ("a".into(), vec![ratio(1, 5), ratio(3, 5)]),
            ("b".into(), vec![ratio(3, 10), ratio(7, 10)]),
            ("not_a".into(), vec![ratio(4, 5), ratio(2, 5)]),
            ("not_b".into(), vec![ratio(7, 10), ratio(3, 10)]),
        ],
        false,
    )
    .expect("HEX")
}

/// `{0, 3/10, 7/10, 1}` over one state; not complemented.
pub fn single_state_low() -> EventSet {
    EventSet::build(
        states(1),
        vec![
            ("lo".into(), vec![ratio(3, 10)]),
            ("hi".into(), vec![ratio(7, 10)]),
        ],
        false,
    )
    .expect("single-state GSE")
}

/// `{0, 1/4, 1/2, 3/4, 1}` over one state: an NGFE closed under sums of
/// two orthogonal members that is not an algebra.
pub fn quarters() -> EventSet {
    EventSet::build(
        states(1),
        vec![
            ("q1".into(), vec![ratio(1, 4)]),
            ("q2".into(), vec![ratio(1, 2)]),
            ("q3".into(), vec![ratio(3, 4)]),
        ],
        false,
    )
    .expect("quarters GSE")
}

/// Every GSE fixture with its name.
pub fn named_gse() -> Vec<(&'static str, EventSet)> {
    vec![
        ("two", two()),
        ("mo1", mo1()),
        ("hex", hex()),
        ("even4", even(4)),
        ("even6", even(6)),
        ("bool1", boolean(1)),
        ("bool2", boolean(2)),
        ("bool3", boolean(3)),
        ("single_state_low", single_state_low()),
        ("quarters", quarters()),
    ]
}

pub fn all_gse() -> Vec<EventSet> {
    named_gse().into_iter().map(|(_, g)| g).collect()
}

pub fn chain2() -> InvolutivePoset {
    InvolutivePoset::validate(&["0", "1"], &[("0", "1")], &[("0", "1")]).expect("2-chain")
}

/// `0 < c < 1` with `c' = c`.
pub fn chain3() -> InvolutivePoset {
    InvolutivePoset::validate(&["0", "c", "1"], &[("0", "c"), ("c", "1")], &[("c", "c")])
        .expect("3-chain")
}

/// `0 < a < b < 1` with `a' = b`.
pub fn chain4() -> InvolutivePoset {
    InvolutivePoset::validate(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1")],
        &[("a", "b")],
    )
    .expect("4-chain")
}

/// `0, 1` and `n` incomparable complement pairs `a_i, b_i`.
pub fn mo_poset(n: usize) -> InvolutivePoset {
    let mut elements = vec!["0".to_string()];
    let mut gens = Vec::new();
    let mut primes = Vec::new();
    for i in 1..=n {
        let (a, b) = (format!("a{i}"), format!("b{i}"));
        for x in [&a, &b] {
            gens.push(("0".to_string(), x.clone()));
            gens.push((x.clone(), "1".to_string()));
        }
        primes.push((a.clone(), b.clone()));
        elements.push(a);
        elements.push(b);
    }
    elements.push("1".to_string());
    InvolutivePoset::validate(&elements, &gens, &primes).expect("MO_n")
}

pub fn hex_poset() -> InvolutivePoset {
    InvolutivePoset::validate(
        &["0", "a", "b", "not_a", "not_b", "1"],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "not_b"),
            ("not_b", "not_a"),
            ("not_a", "1"),
        ],
        &[("a", "not_a"), ("b", "not_b")],
    )
    .expect("hexagon")
}

pub fn named_posets() -> Vec<(&'static str, InvolutivePoset)> {
    vec![
        ("chain2", chain2()),
        ("chain3", chain3()),
        ("chain4", chain4()),
        ("mo1", mo_poset(1)),
        ("mo2", mo_poset(2)),
        ("hex", hex_poset()),
    ]
}
