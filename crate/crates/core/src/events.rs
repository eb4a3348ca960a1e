//! Numerical events over a finite state set and the sets of them closed
//! under complement (GSEs).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poset::{InvolutivePoset, PosetError};
use crate::rational::{format_rational, half, in_unit_interval, Rational};
use crate::witness::{Verdict, WitnessKind};

pub const ZERO_LABEL: &str = "0";
pub const ONE_LABEL: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EventError {
    #[error("state set is empty")]
    EmptyStates,
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("event `{label}` has {got} values, expected {expected}")]
    WrongArity {
        label: String,
        expected: usize,
        got: usize,
    },
    #[error("event `{label}`: value {value} is outside [0,1]")]
    ValueOutOfRange { label: String, value: String },
    #[error("complement of event `{0}` is missing")]
    MissingComplement(String),
    #[error("duplicate event label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is reserved for a constant event")]
    ReservedLabel(String),
    #[error("events are defined over different state sets")]
    StateMismatch,
    #[error("sum requires orthogonal events")]
    NotOrthogonal,
    #[error("difference requires p <= q")]
    NotBelow,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A function from the states to `[0,1]`, stored in state order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalEvent {
    values: Vec<Rational>,
}

impl NumericalEvent {
    pub fn new(values: Vec<Rational>) -> Result<Self, EventError> {
        if let Some(v) = values.iter().find(|v| !in_unit_interval(v)) {
            return Err(EventError::ValueOutOfRange {
                label: String::new(),
                value: format_rational(v),
            });
        }
        Ok(NumericalEvent { values })
    }

    pub fn constant(states: usize, value: Rational) -> Self {
        NumericalEvent {
            values: vec![value; states],
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, state: usize) -> &Rational {
        &self.values[state]
    }

    pub fn num_states(&self) -> usize {
        self.values.len()
    }

    pub fn complement(&self) -> Self {
        NumericalEvent {
            values: self.values.iter().map(|v| Rational::one() - v).collect(),
        }
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// `p ⊥ q` iff `p <= 1 - q` pointwise.
    pub fn orthogonal(&self, other: &Self) -> Result<bool, EventError> {
        self.same_states(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a + b <= Rational::one()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, EventError> {
        if !self.orthogonal(other)? {
            return Err(EventError::NotOrthogonal);
        }
        Ok(NumericalEvent {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `self - below`, defined when `below <= self`.
    pub fn diff(&self, below: &Self) -> Result<Self, EventError> {
        self.same_states(below)?;
        if !below.leq(self) {
            return Err(EventError::NotBelow);
        }
        Ok(NumericalEvent {
            values: self
                .values
                .iter()
                .zip(&below.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(One::is_one)
    }

    /// Not constant 0 or 1, not pointwise `<= 1/2` and not pointwise `>= 1/2`.
    pub fn is_varying(&self) -> bool {
        let h = half();
        !self.is_zero()
            && !self.is_one()
            && !self.values.iter().all(|v| *v <= h)
            && !self.values.iter().all(|v| *v >= h)
    }

    pub fn is_proper(&self) -> bool {
        self.is_zero() || self.is_one() || self.is_varying()
    }

    pub fn is_zero_one_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    fn same_states(&self, other: &Self) -> Result<(), EventError> {
        if self.values.len() == other.values.len() {
            Ok(())
        } else {
            Err(EventError::StateMismatch)
        }
    }
}

impl fmt::Display for NumericalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(v))?;
        }
        f.write_str(")")
    }
}

/// Pointwise sum of any number of value vectors; may leave `[0,1]`.
pub(crate) fn raw_sum<'a>(
    states: usize,
    parts: impl IntoIterator<Item = &'a NumericalEvent>,
) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); states];
    for p in parts {
        for (a, v) in acc.iter_mut().zip(&p.values) {
            *a += v;
        }
    }
    acc
}

/// A finite set of numerical events containing 0 and 1 and closed under
/// complement, with its induced pointwise order.
///
/// Members are ordered 0, then the remaining events by label, then 1.
#[derive(Clone, Debug)]
pub struct EventSet {
    states: Vec<String>,
    labels: Vec<String>,
    members: Vec<NumericalEvent>,
    index: HashMap<Vec<Rational>, usize>,
    poset: InvolutivePoset,
}

impl PartialEq for EventSet {
    fn eq(&self, other: &Self) -> bool {
        self.states == other.states && self.labels == other.labels && self.members == other.members
    }
}

impl EventSet {
    /// Builds a GSE. Constants are added, events equal as functions are
    /// merged (the first label in label order survives, constants keep
    /// `0`/`1`), and with `autoclose` missing complements are added under
    /// the label `<label>'`.
    pub fn build(
        states: Vec<String>,
        events: Vec<(String, Vec<Rational>)>,
        autoclose: bool,
    ) -> Result<Self, EventError> {
        if states.is_empty() {
            return Err(EventError::EmptyStates);
        }
        let mut seen_states = std::collections::HashSet::new();
        for s in &states {
            if !seen_states.insert(s.as_str()) {
                return Err(EventError::DuplicateState(s.clone()));
            }
        }
        let k = states.len();
        let mut by_label: BTreeMap<String, NumericalEvent> = BTreeMap::new();
        for (label, values) in events {
            if values.len() != k {
                return Err(EventError::WrongArity {
                    label,
                    expected: k,
                    got: values.len(),
                });
            }
            let event = NumericalEvent::new(values).map_err(|e| match e {
                EventError::ValueOutOfRange { value, .. } => EventError::ValueOutOfRange {
                    label: label.clone(),
                    value,
                },
                other => other,
            })?;
            let reserved = (label == ZERO_LABEL && !event.is_zero())
                || (label == ONE_LABEL && !event.is_one());
            if reserved {
                return Err(EventError::ReservedLabel(label));
            }
            if by_label.insert(label.clone(), event).is_some() {
                return Err(EventError::DuplicateLabel(label));
            }
        }

        let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
        let mut members = vec![NumericalEvent::constant(k, Rational::zero())];
        let mut labels = vec![ZERO_LABEL.to_string()];
        index.insert(members[0].values.clone(), 0);
        let one = NumericalEvent::constant(k, Rational::one());
        let mut middle: Vec<(String, NumericalEvent)> = Vec::new();
        let mut middle_index: HashMap<Vec<Rational>, usize> = HashMap::new();
        for (label, event) in by_label {
            if event.is_zero() || event.is_one() || middle_index.contains_key(&event.values) {
                continue;
            }
            middle_index.insert(event.values.clone(), middle.len());
            middle.push((label, event));
        }
        let mut used: std::collections::HashSet<String> =
            middle.iter().map(|(l, _)| l.clone()).collect();
        used.insert(ZERO_LABEL.into());
        used.insert(ONE_LABEL.into());
        let mut added = Vec::new();
        for (label, event) in &middle {
            let c = event.complement();
            if middle_index.contains_key(&c.values) || added.iter().any(|(_, e)| *e == c) {
                continue;
            }
            if !autoclose {
                return Err(EventError::MissingComplement(label.clone()));
            }
            let mut name = format!("{label}'");
            while used.contains(&name) {
                name.push('\'');
            }
            used.insert(name.clone());
            added.push((name, c));
        }
        middle.extend(added);
        middle.sort_by(|a, b| a.0.cmp(&b.0));
        for (label, event) in middle {
            index.insert(event.values.clone(), members.len());
            labels.push(label);
            members.push(event);
        }
        index.insert(one.values.clone(), members.len());
        labels.push(ONE_LABEL.to_string());
        members.push(one);

        let n = members.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = members[i].leq(&members[j]);
            }
        }
        let prime = members
            .iter()
            .map(|m| index[&m.complement().values])
            .collect();
        let poset = InvolutivePoset::from_relation(labels.clone(), leq, prime)?;
        Ok(EventSet {
            states,
            labels,
            members,
            index,
            poset,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[NumericalEvent] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &NumericalEvent {
        &self.members[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index_of_values(&self, values: &[Rational]) -> Option<usize> {
        self.index.get(values).copied()
    }

    pub fn index_of(&self, event: &NumericalEvent) -> Option<usize> {
        self.index_of_values(&event.values)
    }

    pub fn poset(&self) -> &InvolutivePoset {
        &self.poset
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.members.len() - 1
    }

    pub fn complement_of(&self, i: usize) -> usize {
        self.poset.prime(i)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, self.poset.prime(j))
    }

    /// Member index of the pointwise sum of the given members, if that sum
    /// is a member.
    pub fn sum_index(&self, parts: &[usize]) -> Option<usize> {
        let s = raw_sum(self.num_states(), parts.iter().map(|&i| &self.members[i]));
        self.index_of_values(&s)
    }

    /// Member index of `q - p` (for `p <= q`), if it is a member.
    pub fn diff_index(&self, q: usize, p: usize) -> Option<usize> {
        let d: Vec<Rational> = self.members[q]
            .values
            .iter()
            .zip(&self.members[p].values)
            .map(|(a, b)| a - b)
            .collect();
        self.index_of_values(&d)
    }

    pub fn all_proper(&self) -> Verdict {
        match self.members.iter().position(|m| !m.is_proper()) {
            Some(i) => Verdict::fails(WitnessKind::NotProper, [i]),
            None => Verdict::Holds,
        }
    }

    /// The induced poset is an orthoposet.
    pub fn is_complemented(&self) -> Verdict {
        self.poset.is_orthoposet()
    }

    /// `p ⊥ q` implies `p + q ∈ P`.
    pub fn check_axiom3(&self) -> Verdict {
        let n = self.len();
        for p in 0..n {
            for q in p..n {
                if self.orthogonal(p, q) && self.sum_index(&[p, q]).is_none() {
                    return Verdict::fails(WitnessKind::Axiom3, [p, q]);
                }
            }
        }
        Verdict::Holds
    }

    /// `p ⊥ q ⊥ r ⊥ p` implies `p + q + r ∈ P`. The three need not be
    /// distinct.
    pub fn check_axiom4(&self) -> Verdict {
        let n = self.len();
        for p in 0..n {
            for q in p..n {
                if !self.orthogonal(p, q) {
                    continue;
                }
                for r in q..n {
                    if self.orthogonal(q, r)
                        && self.orthogonal(r, p)
                        && self.sum_index(&[p, q, r]).is_none()
                    {
                        return Verdict::fails(WitnessKind::Axiom4, [p, q, r]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_algebra(&self) -> Verdict {
        match self.check_axiom3() {
            Verdict::Holds => self.check_axiom4(),
            failed => failed,
        }
    }

    pub fn is_concrete_valued(&self) -> Verdict {
        match self.members.iter().position(|m| !m.is_zero_one_valued()) {
            Some(i) => Verdict::fails(WitnessKind::FractionalValue, [i]),
            None => Verdict::Holds,
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    #[test]
    fn complement_examples() {
        let zero = NumericalEvent::constant(2, int(0));
        assert!(zero.complement().is_one());
        let p = NumericalEvent::new(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert_eq!(p.complement().values(), &[ratio(2, 3), ratio(1, 3)]);
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn orthogonality_examples() {
        let zero = NumericalEvent::constant(2, int(0));
        let p = NumericalEvent::new(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert!(zero.orthogonal(&p).unwrap());
        assert!(p.orthogonal(&p.complement()).unwrap());
        let r = NumericalEvent::new(vec![ratio(3, 10), ratio(3, 5)]).unwrap();
        assert!(!r.orthogonal(&r).unwrap());
        let single = NumericalEvent::new(vec![int(0)]).unwrap();
        assert_eq!(single.orthogonal(&p), Err(EventError::StateMismatch));
    }

    #[test]
    fn sum_and_difference() {
        let p = NumericalEvent::new(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert!(p.sum(&p.complement()).unwrap().is_one());
        let zero = NumericalEvent::constant(2, int(0));
        assert_eq!(p.diff(&zero).unwrap(), p);
        let a = NumericalEvent::new(vec![ratio(1, 5), ratio(3, 5)]).unwrap();
        let b = NumericalEvent::new(vec![ratio(3, 10), ratio(7, 10)]).unwrap();
        assert_eq!(b.diff(&a).unwrap().values(), &[ratio(1, 10), ratio(1, 10)]);
        assert_eq!(a.diff(&b), Err(EventError::NotBelow));
        assert_eq!(b.sum(&b), Err(EventError::NotOrthogonal));
    }

    #[test]
    fn varying_and_proper() {
        let one = NumericalEvent::constant(3, int(1));
        assert!(one.is_proper() && !one.is_varying());
        let p = NumericalEvent::new(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert!(p.is_varying() && p.is_proper());
        let low = NumericalEvent::new(vec![ratio(3, 10)]).unwrap();
        assert!(!low.is_proper());
    }

    #[test]
    fn build_examples() {
        let g = EventSet::build(vec!["s1".into()], vec![], false).unwrap();
        assert_eq!(g.len(), 2);
        let mo1 = EventSet::build(
            vec!["s1".into(), "s2".into()],
            vec![("p".into(), vec![ratio(1, 3), ratio(2, 3)])],
            true,
        )
        .unwrap();
        assert_eq!(mo1.labels(), &["0", "p", "p'", "1"]);
        assert_eq!(fixtures::even(4).len(), 8);
    }

    #[test]
    fn build_errors() {
        let s = || vec!["s1".to_string()];
        assert_eq!(
            EventSet::build(vec![], vec![], false).unwrap_err(),
            EventError::EmptyStates
        );
        assert!(matches!(
            EventSet::build(s(), vec![("a".into(), vec![ratio(5, 4)])], true).unwrap_err(),
            EventError::ValueOutOfRange { .. }
        ));
        assert_eq!(
            EventSet::build(s(), vec![("a".into(), vec![ratio(1, 4)])], false).unwrap_err(),
            EventError::MissingComplement("a".into())
        );
        assert_eq!(
            EventSet::build(
                s(),
                vec![
                    ("a".into(), vec![ratio(1, 4)]),
                    ("a".into(), vec![ratio(3, 4)])
                ],
                false
            )
            .unwrap_err(),
            EventError::DuplicateLabel("a".into())
        );
        assert!(matches!(
            EventSet::build(s(), vec![("a".into(), vec![int(1), int(0)])], false).unwrap_err(),
            EventError::WrongArity { .. }
        ));
    }

    #[test]
    fn duplicates_merge_as_functions() {
        let g = EventSet::build(
            vec!["s".into()],
            vec![
                ("a".into(), vec![ratio(1, 4)]),
                ("b".into(), vec![ratio(1, 4)]),
                ("c".into(), vec![ratio(3, 4)]),
                ("z".into(), vec![int(1)]),
            ],
            false,
        )
        .unwrap();
        assert_eq!(g.labels(), &["0", "a", "c", "1"]);
    }

    #[test]
    fn complemented_examples() {
        assert!(fixtures::mo1().is_complemented().holds());
        assert!(!fixtures::single_state_low().is_complemented().holds());
        assert!(fixtures::two().is_complemented().holds());
    }

    #[test]
    fn axiom_examples() {
        let mo1 = fixtures::mo1();
        assert!(mo1.check_axiom3().holds() && mo1.check_axiom4().holds());
        let hex = fixtures::hex();
        let w = hex.check_axiom3();
        let labels: Vec<_> = hex.poset().witness_labels(w.witness().unwrap());
        assert_eq!(labels, vec!["a", "not_b"]);
        assert_eq!(
            hex.sum_index(&[1, 4]),
            None,
            "a + b' = (9/10, 9/10) is not a member"
        );
        let e4 = fixtures::even(4);
        assert!(e4.check_axiom3().holds() && e4.check_axiom4().holds());
    }

    #[test]
    fn axiom4_catches_repeated_self_orthogonal_members() {
        // {0, 1/4, 1/2, 3/4, 1}: closed under pairwise sums but 1/4+1/4+3/4 > 1.
        let g = fixtures::quarters();
        assert!(g.check_axiom3().holds());
        let w = g.check_axiom4();
        assert!(!w.holds());
    }

    #[test]
    fn concrete_valued_examples() {
        assert!(fixtures::even(4).is_concrete_valued().holds());
        assert!(!fixtures::mo1().is_concrete_valued().holds());
        assert!(fixtures::two().is_concrete_valued().holds());
    }

    #[test]
    fn induced_order_is_pointwise() {
        for g in fixtures::all_gse() {
            for i in 0..g.len() {
                assert!(g.leq(0, i) && g.leq(i, g.one()));
                assert_eq!(g.complement_of(g.complement_of(i)), i);
                for j in 0..g.len() {
                    assert_eq!(g.leq(i, j), g.member(i).leq(g.member(j)));
                }
            }
        }
    }
}
