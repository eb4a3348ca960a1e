//! Finite bounded posets carrying an antitone involution.
//!
//! Elements are indices `0..len()`; the input order is the canonical total
//! order used by every scan, so reported counterexamples are reproducible.

use std::collections::HashMap;

use thiserror::Error;

use crate::witness::{ElementWitnessPair, PreconditionError, Verdict, WitnessKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("antisymmetry violation: `{0}` <= `{1}` <= `{0}`")]
    Antisymmetry(String, String),
    #[error("no unique minimum")]
    NoBottom,
    #[error("no unique maximum")]
    NoTop,
    #[error("prime is not an involution at `{0}`")]
    NotInvolution(String),
    #[error("prime undefined for `{0}`")]
    PrimeUndefined(String),
    #[error("prime not antitone: `{0}` <= `{1}` but not `{1}'` <= `{0}'`")]
    NotAntitone(String, String),
    #[error("prime of the bottom element is not the top element")]
    PrimeBottomNotTop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutivePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
    prime: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl InvolutivePoset {
    /// Validates a poset given by element labels, order generators and
    /// complement pairs. The order is the reflexive-transitive closure of
    /// the generators; each pair `(a, b)` sets `a' = b` and `b' = a`. When
    /// neither extremal element is mentioned by a pair, they are paired
    /// with each other.
    pub fn validate<S: AsRef<str>>(
        elements: &[S],
        generators: &[(S, S)],
        prime_pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(s.as_ref().to_string()))
        };
        let gens = generators
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        let mut prime: Vec<Option<usize>> = vec![None; labels.len()];
        for (a, b) in prime_pairs {
            let (a, b) = (lookup(a)?, lookup(b)?);
            for (x, y) in [(a, b), (b, a)] {
                match prime[x] {
                    Some(z) if z != y => return Err(PosetError::NotInvolution(labels[x].clone())),
                    _ => prime[x] = Some(y),
                }
            }
        }
        Self::from_generators(labels, &gens, prime)
    }

    /// Index-level constructor; see [`InvolutivePoset::validate`].
    pub fn from_generators(
        labels: Vec<String>,
        generators: &[(usize, usize)],
        mut prime: Vec<Option<usize>>,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in generators {
            leq[a * n + b] = true;
        }
        // Warshall closure, row-wise.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(PosetError::Antisymmetry(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b * n + x]))
            .ok_or(PosetError::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x * n + t]))
            .ok_or(PosetError::NoTop)?;
        if prime[bottom].is_none() && prime[top].is_none() {
            prime[bottom] = Some(top);
            prime[top] = Some(bottom);
        }
        let prime = prime
            .iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| PosetError::PrimeUndefined(labels[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_relation(labels, leq, prime)
    }

    /// Builds from an already-closed relation matrix (row-major, `leq[i*n+j]`
    /// means `i <= j`) and a total prime map, checking every invariant.
    pub fn from_relation(
        labels: Vec<String>,
        leq: Vec<bool>,
        prime: Vec<usize>,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        assert_eq!(leq.len(), n * n, "relation matrix size");
        assert_eq!(prime.len(), n, "prime map size");
        for i in 0..n {
            if !leq[i * n + i] {
                // Non-reflexive input is closed here rather than rejected.
                return Self::from_generators(
                    labels,
                    &pairs_of(&leq, n),
                    prime.into_iter().map(Some).collect(),
                );
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(PosetError::Antisymmetry(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
                if leq[i * n + j] {
                    for k in 0..n {
                        if leq[j * n + k] && !leq[i * n + k] {
                            return Self::from_generators(
                                labels,
                                &pairs_of(&leq, n),
                                prime.into_iter().map(Some).collect(),
                            );
                        }
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b * n + x]))
            .ok_or(PosetError::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x * n + t]))
            .ok_or(PosetError::NoTop)?;
        for i in 0..n {
            let p = prime[i];
            if p >= n || prime[p] != i {
                return Err(PosetError::NotInvolution(labels[i].clone()));
            }
        }
        if prime[bottom] != top {
            return Err(PosetError::PrimeBottomNotTop);
        }
        for i in 0..n {
            for j in 0..n {
                if leq[i * n + j] && !leq[prime[j] * n + prime[i]] {
                    return Err(PosetError::NotAntitone(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        Ok(InvolutivePoset {
            labels,
            leq,
            prime,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn prime(&self, x: usize) -> usize {
        self.prime[x]
    }

    pub fn prime_map(&self) -> &[usize] {
        &self.prime
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Minimal elements above the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        let b = self.bottom;
        self.elements()
            .filter(|&x| x != b && !self.elements().any(|y| self.lt(b, y) && self.lt(y, x)))
            .collect()
    }

    pub fn is_atom(&self, x: usize) -> bool {
        x != self.bottom
            && !self
                .elements()
                .any(|y| self.lt(self.bottom, y) && self.lt(y, x))
    }

    /// Number of covering steps in a longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        let mut order: Vec<usize> = self.elements().filter(|&y| self.leq(y, x)).collect();
        order.sort_by_key(|&y| self.elements().filter(|&z| self.leq(z, y)).count());
        let mut h = vec![0usize; self.len()];
        for &y in &order {
            h[y] = order
                .iter()
                .filter(|&&z| self.lt(z, y))
                .map(|&z| h[z] + 1)
                .max()
                .unwrap_or(0);
        }
        h[x]
    }

    pub fn meet(&self, p: usize, q: usize) -> Option<usize> {
        let lower: Vec<usize> = self
            .elements()
            .filter(|&x| self.leq(x, p) && self.leq(x, q))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&x| self.leq(x, m)))
    }

    pub fn join(&self, p: usize, q: usize) -> Option<usize> {
        let upper: Vec<usize> = self
            .elements()
            .filter(|&x| self.leq(p, x) && self.leq(q, x))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&j| upper.iter().all(|&x| self.leq(j, x)))
    }

    /// Join of a nonempty set of elements, if it exists.
    pub fn join_all(&self, xs: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = self
            .elements()
            .filter(|&u| xs.iter().all(|&x| self.leq(x, u)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&j| upper.iter().all(|&u| self.leq(j, u)))
    }

    pub fn meet_table(&self) -> Vec<Option<usize>> {
        let n = self.len();
        let mut t = vec![None; n * n];
        for p in 0..n {
            for q in p..n {
                let m = self.meet(p, q);
                t[p * n + q] = m;
                t[q * n + p] = m;
            }
        }
        t
    }

    pub fn join_table(&self) -> Vec<Option<usize>> {
        let n = self.len();
        let mut t = vec![None; n * n];
        for p in 0..n {
            for q in p..n {
                let j = self.join(p, q);
                t[p * n + q] = j;
                t[q * n + p] = j;
            }
        }
        t
    }

    /// Every pair has a meet and a join; the witness is the first pair
    /// (in index order) lacking one.
    pub fn is_lattice(&self) -> Verdict {
        for p in self.elements() {
            for q in (p + 1)..self.len() {
                if self.join(p, q).is_none() {
                    return Verdict::fails(WitnessKind::MissingJoin, [p, q]);
                }
                if self.meet(p, q).is_none() {
                    return Verdict::fails(WitnessKind::MissingMeet, [p, q]);
                }
            }
        }
        Verdict::Holds
    }

    /// `x ∨ x' = 1` and `x ∧ x' = 0` for every element.
    pub fn is_orthoposet(&self) -> Verdict {
        for x in self.elements() {
            let xp = self.prime(x);
            if self.join(x, xp) != Some(self.top) || self.meet(x, xp) != Some(self.bottom) {
                return Verdict::fails(WitnessKind::NotComplemented, [x]);
            }
        }
        Verdict::Holds
    }

    /// `p <= q` implies `q = p ∨ (q ∧ p')`. Requires an orthoposet.
    pub fn is_orthomodular(&self) -> Result<Verdict, PreconditionError> {
        if !self.is_orthoposet().holds() {
            return Err(PreconditionError::NotOrthoposet);
        }
        for p in self.elements() {
            for q in self.elements() {
                if !self.leq(p, q) {
                    continue;
                }
                let ok = self
                    .meet(q, self.prime(p))
                    .and_then(|m| self.join(p, m))
                    .is_some_and(|j| j == q);
                if !ok {
                    return Ok(Verdict::fails(WitnessKind::OrthomodularFailure, [p, q]));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples. Requires a lattice.
    pub fn is_distributive(&self) -> Result<Verdict, PreconditionError> {
        if !self.is_lattice().holds() {
            return Err(PreconditionError::NotLattice);
        }
        let n = self.len();
        let meet = self.meet_table();
        let join = self.join_table();
        let m = |a: usize, b: usize| meet[a * n + b].expect("lattice meet");
        let j = |a: usize, b: usize| join[a * n + b].expect("lattice join");
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        return Ok(Verdict::fails(WitnessKind::DistributiveFailure, [x, y, z]));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Lattice, orthoposet and orthomodular.
    pub fn is_orthomodular_lattice(&self) -> bool {
        self.is_lattice().holds() && self.is_orthomodular().map(|v| v.holds()).unwrap_or(false)
    }

    pub fn witness_labels(&self, w: &ElementWitnessPair) -> Vec<&str> {
        w.elements.iter().map(|&e| self.label(e)).collect()
    }
}

fn pairs_of(leq: &[bool], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if leq[i * n + j] {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn chain2() -> InvolutivePoset {
        InvolutivePoset::validate(&["0", "1"], &[("0", "1")], &[("0", "1")]).unwrap()
    }

    pub fn chain3() -> InvolutivePoset {
        InvolutivePoset::validate(
            &["0", "c", "1"],
            &[("0", "c"), ("c", "1")],
            &[("0", "1"), ("c", "c")],
        )
        .unwrap()
    }

    pub fn mo1() -> InvolutivePoset {
        InvolutivePoset::validate(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
            &[("p", "q")],
        )
        .unwrap()
    }

    /// Benzene ring: 0 < a < b < 1, 0 < b' < a' < 1.
    pub fn hex() -> InvolutivePoset {
        InvolutivePoset::validate(
            &["0", "a", "b", "nb", "na", "1"],
            &[
                ("0", "a"),
                ("a", "b"),
                ("b", "1"),
                ("0", "nb"),
                ("nb", "na"),
                ("na", "1"),
            ],
            &[("a", "na"), ("b", "nb")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain_is_valid() {
        let p = chain2();
        assert_eq!(p.bottom(), 0);
        assert_eq!(p.top(), 1);
        assert_eq!(p.prime(0), 1);
        assert_eq!(p.atoms(), vec![1]);
    }

    #[test]
    fn three_chain_self_complementary_middle() {
        let p = chain3();
        assert_eq!(p.prime(1), 1);
        assert_eq!(p.atoms(), vec![1]);
        assert_eq!(p.height(p.top()), 2);
    }

    #[test]
    fn cycle_is_antisymmetry_violation() {
        let err = InvolutivePoset::validate(&["0", "a", "1"], &[("0", "a"), ("a", "0")], &[])
            .unwrap_err();
        assert!(matches!(err, PosetError::Antisymmetry(..)));
    }

    #[test]
    fn validation_errors() {
        let no_top = InvolutivePoset::validate(&["0", "a", "b"], &[("0", "a"), ("0", "b")], &[]);
        assert_eq!(no_top.unwrap_err(), PosetError::NoTop);
        let no_bottom = InvolutivePoset::validate(&["a", "b", "1"], &[("a", "1"), ("b", "1")], &[]);
        assert_eq!(no_bottom.unwrap_err(), PosetError::NoBottom);
        let conflict = InvolutivePoset::validate(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            &[("a", "b"), ("a", "a")],
        );
        assert!(matches!(
            conflict.unwrap_err(),
            PosetError::NotInvolution(_)
        ));
        let undefined = InvolutivePoset::validate(&["0", "a", "1"], &[("0", "a"), ("a", "1")], &[]);
        assert!(matches!(
            undefined.unwrap_err(),
            PosetError::PrimeUndefined(_)
        ));
        // 0 < a < b < 1 with a, b self-complementary is not antitone.
        let not_antitone = InvolutivePoset::validate(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1")],
            &[("a", "a"), ("b", "b"), ("0", "1")],
        );
        assert!(matches!(
            not_antitone.unwrap_err(),
            PosetError::NotAntitone(..)
        ));
        let bad_bottom = InvolutivePoset::validate(
            &["0", "a", "1"],
            &[("0", "a"), ("a", "1")],
            &[("0", "a"), ("1", "1")],
        );
        assert_eq!(bad_bottom.unwrap_err(), PosetError::PrimeBottomNotTop);
        let dup = InvolutivePoset::validate(&["0", "0"], &[], &[]);
        assert!(matches!(dup.unwrap_err(), PosetError::DuplicateElement(_)));
    }

    #[test]
    fn revalidation_is_identity() {
        for p in [chain2(), chain3(), mo1(), hex()] {
            let again = InvolutivePoset::from_relation(
                p.labels().to_vec(),
                p.relation().to_vec(),
                p.prime_map().to_vec(),
            )
            .unwrap();
            assert_eq!(again, p);
            let from_covers = InvolutivePoset::from_generators(
                p.labels().to_vec(),
                &p.covers(),
                p.prime_map().iter().map(|&x| Some(x)).collect(),
            )
            .unwrap();
            assert_eq!(from_covers, p);
        }
    }

    #[test]
    fn meets_and_joins() {
        let p = mo1();
        for x in p.elements() {
            assert_eq!(p.meet(x, x), Some(x));
            assert_eq!(p.join(x, x), Some(x));
        }
        assert_eq!(p.join(1, 2), Some(3));
        assert_eq!(p.meet(1, 2), Some(0));
    }

    #[test]
    fn lattice_and_ortho_checks() {
        assert!(chain2().is_lattice().holds());
        assert!(!chain3().is_orthoposet().holds());
        assert!(mo1().is_orthoposet().holds());
        assert!(hex().is_orthoposet().holds());
        assert!(hex().is_lattice().holds());
        assert_eq!(
            chain3().is_orthomodular(),
            Err(PreconditionError::NotOrthoposet)
        );
        assert!(mo1().is_orthomodular().unwrap().holds());
        let h = hex();
        let w = h.is_orthomodular().unwrap();
        assert_eq!(
            w,
            Verdict::fails(WitnessKind::OrthomodularFailure, [1, 2]),
            "a ∨ (b ∧ a') = a ≠ b"
        );
        assert!(chain2().is_distributive().unwrap().holds());
        assert!(mo1().is_distributive().unwrap().holds());
    }

    #[test]
    fn de_morgan_on_fixtures() {
        for p in [chain2(), chain3(), mo1(), hex()] {
            for x in p.elements() {
                for y in p.elements() {
                    if let Some(j) = p.join(x, y) {
                        assert_eq!(p.meet(p.prime(x), p.prime(y)), Some(p.prime(j)));
                    }
                }
            }
        }
    }
}
