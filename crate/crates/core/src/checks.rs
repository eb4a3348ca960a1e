//! Structural properties of GSEs: NGFE, atom decompositions, the
//! properties (P), (U), (T), (SJ), closure under sums of orthogonal atoms,
//! the difference-equals-meet condition, and the set representation.

use std::collections::HashMap;

use thiserror::Error;

use crate::events::{raw_sum, EventSet};
use crate::rational::Rational;
use crate::witness::{ElementWitnessPair, PreconditionError, Verdict, WitnessKind};

pub const DEFAULT_MAX_NODES: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error("search cap of {0} nodes exceeded")]
    CapExceeded(u64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Node budget shared by one exhaustive search.
#[derive(Clone, Copy, Debug)]
pub struct SearchCap {
    pub max_nodes: u64,
}

impl Default for SearchCap {
    fn default() -> Self {
        SearchCap {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

struct Budget {
    used: u64,
    max: u64,
}

impl Budget {
    fn new(cap: SearchCap) -> Self {
        Budget {
            used: 0,
            max: cap.max_nodes,
        }
    }

    fn tick(&mut self) -> Result<(), CheckError> {
        self.used += 1;
        if self.used > self.max {
            Err(CheckError::CapExceeded(self.max))
        } else {
            Ok(())
        }
    }
}

/// A set of atoms whose pointwise sum is `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDecomposition {
    pub target: usize,
    /// Sorted member indices. The splitting procedure may repeat an atom
    /// when the GSE has self-orthogonal atoms; see [`AtomDecomposition::is_set`].
    pub atoms: Vec<usize>,
}

impl AtomDecomposition {
    pub fn is_set(&self) -> bool {
        self.atoms.windows(2).all(|w| w[0] != w[1])
    }
}

/// `p <= q` implies `q - p ∈ P`.
pub fn check_property_p(g: &EventSet) -> Verdict {
    for p in 0..g.len() {
        for q in 0..g.len() {
            if g.leq(p, q) && g.diff_index(q, p).is_none() {
                return Verdict::fails(WitnessKind::DifferenceMissing, [p, q]);
            }
        }
    }
    Verdict::Holds
}

/// First splitting pair `(p1, p2)` with `p1 + p2 = p`, both nonzero, in
/// ascending order of `p1`.
fn first_split(g: &EventSet, p: usize) -> Option<(usize, usize)> {
    (1..g.len()).find_map(|p1| {
        if p1 == p || !g.leq(p1, p) {
            return None;
        }
        g.diff_index(p, p1)
            .filter(|&p2| p2 != g.zero())
            .map(|p2| (p1, p2))
    })
}

/// Every nonzero non-atom is the sum of two nonzero members.
pub fn is_ngfe(g: &EventSet) -> Verdict {
    let poset = g.poset();
    for p in 1..g.len() {
        if !poset.is_atom(p) && first_split(g, p).is_none() {
            return Verdict::fails(WitnessKind::NoSplit, [p]);
        }
    }
    Verdict::Holds
}

/// Splits `p` recursively into atoms, always taking the first splitting
/// pair.
pub fn atom_decomposition(g: &EventSet, p: usize) -> Result<AtomDecomposition, CheckError> {
    if p >= g.len() {
        return Err(PreconditionError::OutOfRange(p).into());
    }
    if p == g.zero() {
        return Err(PreconditionError::ZeroElement.into());
    }
    if !is_ngfe(g).holds() {
        return Err(PreconditionError::NotNgfe.into());
    }
    let poset = g.poset();
    let mut atoms = Vec::new();
    let mut stack = vec![p];
    while let Some(x) = stack.pop() {
        if poset.is_atom(x) {
            atoms.push(x);
            continue;
        }
        let (a, b) = first_split(g, x).ok_or_else(|| {
            CheckError::Inconsistent(format!("no splitting pair for `{}` in an NGFE", g.label(x)))
        })?;
        stack.push(b);
        stack.push(a);
    }
    atoms.sort_unstable();
    Ok(AtomDecomposition { target: p, atoms })
}

/// All sets of distinct atoms summing to `p`.
pub fn all_atom_decompositions(
    g: &EventSet,
    p: usize,
    cap: SearchCap,
) -> Result<Vec<Vec<usize>>, CheckError> {
    let mut budget = Budget::new(cap);
    decompositions(g, p, &g.poset().atoms(), &mut budget)
}

fn decompositions(
    g: &EventSet,
    p: usize,
    atoms: &[usize],
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, CheckError> {
    if p == g.zero() {
        return Err(PreconditionError::ZeroElement.into());
    }
    let target = g.member(p).values();
    let below: Vec<usize> = atoms.iter().copied().filter(|&a| g.leq(a, p)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let zero = vec![Rational::from_integer(0.into()); g.num_states()];
    search_decompositions(g, target, &below, 0, &mut chosen, zero, &mut out, budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_decompositions(
    g: &EventSet,
    target: &[Rational],
    atoms: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    partial: Vec<Rational>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<(), CheckError> {
    if !chosen.is_empty() && partial.as_slice() == target {
        out.push(chosen.clone());
        return Ok(());
    }
    for i in start..atoms.len() {
        budget.tick()?;
        let a = atoms[i];
        let next: Vec<Rational> = partial
            .iter()
            .zip(g.member(a).values())
            .map(|(x, y)| x + y)
            .collect();
        if next.iter().zip(target).any(|(x, t)| x > t) {
            continue;
        }
        chosen.push(a);
        search_decompositions(g, target, atoms, i + 1, chosen, next, out, budget)?;
        chosen.pop();
    }
    Ok(())
}

fn all_decompositions(g: &EventSet, cap: SearchCap) -> Result<Vec<Vec<Vec<usize>>>, CheckError> {
    let atoms = g.poset().atoms();
    let mut budget = Budget::new(cap);
    let mut out = vec![Vec::new()];
    for p in 1..g.len() {
        out.push(decompositions(g, p, &atoms, &mut budget)?);
    }
    Ok(out)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// For nonzero `p, q` and any decompositions `A_p`, `A_q`:
/// `p <= q` iff `A_p ⊆ A_q`. Every nonzero member must have at least one
/// decomposition into distinct atoms.
pub fn check_property_u(g: &EventSet, cap: SearchCap) -> Result<Verdict, CheckError> {
    if !is_ngfe(g).holds() {
        return Err(PreconditionError::NotNgfe.into());
    }
    let decs = all_decompositions(g, cap)?;
    if let Some(p) = (1..g.len()).find(|&p| decs[p].is_empty()) {
        return Ok(Verdict::fails(WitnessKind::NoDecomposition, [p]));
    }
    // Diagonal first: a member with two decompositions is the basic failure.
    let pairs = (1..g.len()).map(|p| (p, p)).chain(
        (1..g.len()).flat_map(|p| (1..g.len()).filter(move |&q| q != p).map(move |q| (p, q))),
    );
    for (p, q) in pairs {
        let leq = g.leq(p, q);
        for ap in &decs[p] {
            for aq in &decs[q] {
                if leq != is_subset(ap, aq) {
                    let w = ElementWitnessPair::new(WitnessKind::DecompositionMismatch, [p, q])
                        .with_detail(vec![ap.clone(), aq.clone()]);
                    return Ok(Verdict::Fails(w));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Member `p` mapped to its unique atom set `A_p`; index 0 maps to `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteRepresentation {
    pub atoms: Vec<usize>,
    pub sets: Vec<Vec<usize>>,
}

/// The set representation of an NGFE with property (U), verified to be an
/// order isomorphism onto its image under inclusion.
pub fn concrete_representation(
    g: &EventSet,
    cap: SearchCap,
) -> Result<ConcreteRepresentation, CheckError> {
    if !check_property_u(g, cap)?.holds() {
        return Err(PreconditionError::PropertyUFails.into());
    }
    let decs = all_decompositions(g, cap)?;
    let mut sets = vec![Vec::new()];
    for (p, d) in decs.iter().enumerate().skip(1) {
        if d.len() != 1 {
            return Err(CheckError::Inconsistent(format!(
                "`{}` has {} decompositions under (U)",
                g.label(p),
                d.len()
            )));
        }
        sets.push(d[0].clone());
    }
    let atoms = g.poset().atoms();
    if sets[g.one()] != atoms {
        return Err(CheckError::Inconsistent(
            "A_1 is not the full atom set".into(),
        ));
    }
    for p in 0..g.len() {
        for q in 0..g.len() {
            if g.leq(p, q) != is_subset(&sets[p], &sets[q]) {
                return Err(CheckError::Inconsistent(format!(
                    "representation is not an order isomorphism at `{}`, `{}`",
                    g.label(p),
                    g.label(q)
                )));
            }
        }
    }
    if g.all_proper().holds() {
        for p in 0..g.len() {
            let complement: Vec<usize> = atoms
                .iter()
                .copied()
                .filter(|a| !sets[p].contains(a))
                .collect();
            if sets[g.complement_of(p)] != complement {
                return Err(CheckError::Inconsistent(format!(
                    "A_p' is not the complement of A_p at `{}`",
                    g.label(p)
                )));
            }
        }
    }
    Ok(ConcreteRepresentation { atoms, sets })
}

/// For every `p, q` exactly one `r >= p, q` has no nonzero member below
/// both `r - p` and `r - q`. Requires property (P).
pub fn check_property_t(g: &EventSet) -> Result<Verdict, CheckError> {
    if !check_property_p(g).holds() {
        return Err(PreconditionError::NotGfe.into());
    }
    let n = g.len();
    for p in 0..n {
        for q in p..n {
            let mut found = Vec::new();
            for r in 0..n {
                if !(g.leq(p, r) && g.leq(q, r)) {
                    continue;
                }
                let (dp, dq) = match (g.diff_index(r, p), g.diff_index(r, q)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Err(CheckError::Inconsistent(
                            "difference missing although (P) holds".into(),
                        ))
                    }
                };
                if !(1..n).any(|u| g.leq(u, dp) && g.leq(u, dq)) {
                    found.push(r);
                }
            }
            if found.len() != 1 {
                let w = ElementWitnessPair::new(WitnessKind::NoUniqueBound, [p, q])
                    .with_detail(vec![found]);
                return Ok(Verdict::Fails(w));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Every finite list of pairwise orthogonal atoms sums to a member. An atom
/// may occur more than once when it is orthogonal to itself; a list whose
/// sum leaves `[0,1]` is a counterexample.
pub fn check_orth_atom_sums_closed(g: &EventSet, cap: SearchCap) -> Result<Verdict, CheckError> {
    let atoms = g.poset().atoms();
    let mut budget = Budget::new(cap);
    let mut chosen = Vec::new();
    let zero = vec![Rational::from_integer(0.into()); g.num_states()];
    let found = orth_sum_search(g, &atoms, 0, &mut chosen, zero, &mut budget)?;
    Ok(match found {
        Some(list) => Verdict::fails(WitnessKind::OrthogonalSumMissing, list),
        None => Verdict::Holds,
    })
}

fn orth_sum_search(
    g: &EventSet,
    atoms: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    partial: Vec<Rational>,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, CheckError> {
    for i in start..atoms.len() {
        let a = atoms[i];
        if !chosen.iter().all(|&c| g.orthogonal(c, a)) {
            continue;
        }
        budget.tick()?;
        let next: Vec<Rational> = partial
            .iter()
            .zip(g.member(a).values())
            .map(|(x, y)| x + y)
            .collect();
        chosen.push(a);
        if g.index_of_values(&next).is_none() {
            return Ok(Some(chosen.clone()));
        }
        if let Some(w) = orth_sum_search(g, atoms, i, chosen, next, budget)? {
            return Ok(Some(w));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Which elements (SJ) ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SjBase {
    Atoms,
    Elements,
}

/// Whether (SJ) must hold for every ordering of a set or for some ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SjOrdering {
    All,
    Some,
}

fn require_gfe_oml(g: &EventSet) -> Result<(), CheckError> {
    if !check_property_p(g).holds() {
        return Err(PreconditionError::NotGfe.into());
    }
    if !g.poset().is_orthomodular_lattice() {
        return Err(PreconditionError::NotOrthomodularLattice.into());
    }
    Ok(())
}

/// One step: with `s = sum(prefix)` and `t = s + next`, `t` is a member
/// and `t ∧ s' = next`. Returns `t` on success.
fn sj_step(g: &EventSet, prefix: &[usize], next: usize) -> Option<usize> {
    let s = g.sum_index(prefix)?;
    let mut all = prefix.to_vec();
    all.push(next);
    let t = g.sum_index(&all)?;
    let m = g.poset().meet(t, g.complement_of(s))?;
    (m == next).then_some(t)
}

/// Checks the stepwise condition on one ordered sequence of pairwise
/// orthogonal members, and that every passing partial sum is the join of
/// its terms.
pub fn check_sj_sequence(g: &EventSet, seq: &[usize]) -> Result<bool, CheckError> {
    require_gfe_oml(g)?;
    for (i, &a) in seq.iter().enumerate() {
        if a >= g.len() {
            return Err(PreconditionError::OutOfRange(a).into());
        }
        if a == g.zero() {
            return Err(PreconditionError::ZeroElement.into());
        }
        if seq[..i].iter().any(|&b| b == a || !g.orthogonal(a, b)) {
            return Err(PreconditionError::NotOrthogonal.into());
        }
    }
    for m in 1..seq.len() {
        match sj_step(g, &seq[..m], seq[m]) {
            None => return Ok(false),
            Some(t) => {
                if g.poset().join_all(&seq[..=m]) != Some(t) {
                    return Err(CheckError::Inconsistent(format!(
                        "partial sum `{}` is not the join of its terms",
                        g.label(t)
                    )));
                }
            }
        }
    }
    Ok(true)
}

/// Pairwise orthogonal sets of distinct nonzero members drawn from `base`,
/// ordered by size then lexicographically.
fn orthogonal_sets(
    g: &EventSet,
    base: &[usize],
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, CheckError> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, start)) = stack.pop() {
        for (i, &b) in base.iter().enumerate().skip(start) {
            if set.iter().all(|&c| g.orthogonal(c, b)) {
                budget.tick()?;
                let mut next = set.clone();
                next.push(b);
                stack.push((next.clone(), i + 1));
                out.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Property (SJ) over the chosen base and ordering reading. Requires a GFE
/// whose poset is an orthomodular lattice.
pub fn check_property_sj(
    g: &EventSet,
    base: SjBase,
    ordering: SjOrdering,
    cap: SearchCap,
) -> Result<Verdict, CheckError> {
    require_gfe_oml(g)?;
    let candidates: Vec<usize> = match base {
        SjBase::Atoms => g.poset().atoms(),
        SjBase::Elements => (1..g.len()).collect(),
    };
    let mut budget = Budget::new(cap);
    let sets = orthogonal_sets(g, &candidates, &mut budget)?;
    let mut good: HashMap<Vec<usize>, bool> = HashMap::new();
    for set in &sets {
        if set.len() == 1 {
            good.insert(set.clone(), true);
            continue;
        }
        let mut any = false;
        for (k, &a) in set.iter().enumerate() {
            budget.tick()?;
            let mut prefix = set.clone();
            prefix.remove(k);
            let step = sj_step(g, &prefix, a).is_some();
            match ordering {
                SjOrdering::All => {
                    if !step {
                        let mut seq = prefix;
                        seq.push(a);
                        return Ok(Verdict::fails(WitnessKind::SumJoinFailure, seq));
                    }
                    if g.poset().join_all(set) != g.sum_index(set) {
                        return Err(CheckError::Inconsistent(
                            "stepwise condition holds but sum is not the join".into(),
                        ));
                    }
                    any = true;
                }
                SjOrdering::Some => {
                    if step && good.get(&prefix).copied().unwrap_or(false) {
                        any = true;
                        break;
                    }
                }
            }
        }
        if !any {
            return Ok(Verdict::fails(WitnessKind::SumJoinFailure, set.clone()));
        }
        good.insert(set.clone(), true);
    }
    Ok(Verdict::Holds)
}

/// For `p <= q`, `q - p` is a member and equals `q ∧ p'`. Requires an
/// ortholattice.
pub fn check_prop3_condition(g: &EventSet) -> Result<Verdict, CheckError> {
    let poset = g.poset();
    if !(poset.is_lattice().holds() && poset.is_orthoposet().holds()) {
        return Err(PreconditionError::NotOrtholattice.into());
    }
    for p in 0..g.len() {
        for q in 0..g.len() {
            if !g.leq(p, q) {
                continue;
            }
            let meet = poset.meet(q, poset.prime(p));
            match g.diff_index(q, p) {
                None => return Ok(Verdict::fails(WitnessKind::DifferenceMissing, [p, q])),
                Some(d) if Some(d) != meet => {
                    return Ok(Verdict::fails(WitnessKind::DifferenceNotMeet, [p, q]))
                }
                Some(_) => {}
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `p ⊥ q` implies `p + q` is the join of `p` and `q`; the witness is the
/// first orthogonal pair where it fails.
pub fn check_sum_is_join(g: &EventSet) -> Verdict {
    for p in 0..g.len() {
        for q in p..g.len() {
            if g.orthogonal(p, q) {
                let sum = raw_sum(g.num_states(), [g.member(p), g.member(q)]);
                if g.index_of_values(&sum) != g.poset().join(p, q)
                    || g.index_of_values(&sum).is_none()
                {
                    return Verdict::fails(WitnessKind::SumJoinFailure, [p, q]);
                }
            }
        }
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn idx(g: &EventSet, l: &str) -> usize {
        g.index_of_label(l).unwrap()
    }

    fn labels(g: &EventSet, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| g.label(x).to_string()).collect()
    }

    #[test]
    fn property_p_examples() {
        assert!(check_property_p(&fixtures::even(4)).holds());
        let hex = fixtures::hex();
        let w = check_property_p(&hex);
        assert_eq!(labels(&hex, &w.witness().unwrap().elements), ["a", "b"]);
        assert!(check_property_p(&fixtures::two()).holds());
    }

    #[test]
    fn ngfe_examples() {
        assert!(is_ngfe(&fixtures::even(4)).holds());
        assert!(is_ngfe(&fixtures::mo1()).holds());
        let hex = fixtures::hex();
        let w = is_ngfe(&hex);
        assert_eq!(labels(&hex, &w.witness().unwrap().elements), ["b"]);
    }

    #[test]
    fn lemma3_procedure() {
        let g = fixtures::even(4);
        let d = atom_decomposition(&g, g.one()).unwrap();
        assert_eq!(labels(&g, &d.atoms), ["e12", "e34"]);
        let a = idx(&g, "e13");
        assert_eq!(atom_decomposition(&g, a).unwrap().atoms, vec![a]);
        let mo1 = fixtures::mo1();
        let d = atom_decomposition(&mo1, mo1.one()).unwrap();
        assert_eq!(labels(&mo1, &d.atoms), ["p", "p'"]);
        assert_eq!(
            atom_decomposition(&g, 0),
            Err(CheckError::Precondition(PreconditionError::ZeroElement))
        );
        let hex = fixtures::hex();
        assert_eq!(
            atom_decomposition(&hex, 1),
            Err(CheckError::Precondition(PreconditionError::NotNgfe))
        );
    }

    #[test]
    fn all_decompositions_examples() {
        let g = fixtures::even(4);
        let decs = all_atom_decompositions(&g, g.one(), SearchCap::default()).unwrap();
        let named: Vec<Vec<String>> = decs.iter().map(|d| labels(&g, d)).collect();
        assert_eq!(
            named,
            vec![vec!["e12", "e34"], vec!["e13", "e24"], vec!["e14", "e23"]]
        );
        let e12 = idx(&g, "e12");
        assert_eq!(
            all_atom_decompositions(&g, e12, SearchCap::default()).unwrap(),
            vec![vec![e12]]
        );
        let two = fixtures::two();
        assert_eq!(
            all_atom_decompositions(&two, 1, SearchCap::default()).unwrap(),
            vec![vec![1]]
        );
    }

    #[test]
    fn property_u_examples() {
        let g = fixtures::even(4);
        let w = check_property_u(&g, SearchCap::default()).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.elements, vec![g.one(), g.one()]);
        assert_eq!(labels(&g, &w.detail[0]), ["e12", "e34"]);
        assert_eq!(labels(&g, &w.detail[1]), ["e13", "e24"]);
        assert!(check_property_u(&fixtures::two(), SearchCap::default())
            .unwrap()
            .holds());
        assert!(
            check_property_u(&fixtures::boolean(3), SearchCap::default())
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn concrete_representation_examples() {
        let two = fixtures::two();
        let r = concrete_representation(&two, SearchCap::default()).unwrap();
        assert_eq!(r.sets, vec![vec![], vec![1]]);
        let cube = fixtures::boolean(3);
        let r = concrete_representation(&cube, SearchCap::default()).unwrap();
        for p in 0..cube.len() {
            let singletons: Vec<String> = labels(&cube, &r.sets[p]);
            let expected: Vec<String> = cube
                .label(p)
                .trim_start_matches('e')
                .chars()
                .filter(|c| c.is_ascii_digit())
                .map(|c| format!("e{c}"))
                .collect();
            if p == 0 {
                assert!(singletons.is_empty());
            } else if p == cube.one() {
                assert_eq!(singletons, ["e1", "e2", "e3"]);
            } else {
                assert_eq!(singletons, expected);
            }
        }
        let mo1 = fixtures::mo1();
        let r = concrete_representation(&mo1, SearchCap::default()).unwrap();
        assert_eq!(r.sets, vec![vec![], vec![1], vec![2], vec![1, 2]]);
        assert_eq!(
            concrete_representation(&fixtures::even(4), SearchCap::default()),
            Err(CheckError::Precondition(PreconditionError::PropertyUFails))
        );
    }

    #[test]
    fn property_t_examples() {
        let e4 = fixtures::even(4);
        assert!(check_property_t(&e4).unwrap().holds());
        let e6 = fixtures::even(6);
        let w = check_property_t(&e6).unwrap();
        assert_eq!(labels(&e6, &w.witness().unwrap().elements), ["e12", "e13"]);
        assert!(check_property_t(&fixtures::two()).unwrap().holds());
        assert_eq!(
            check_property_t(&fixtures::hex()),
            Err(CheckError::Precondition(PreconditionError::NotGfe))
        );
    }

    #[test]
    fn orth_atom_sums_examples() {
        let cap = SearchCap::default();
        assert!(check_orth_atom_sums_closed(&fixtures::even(4), cap)
            .unwrap()
            .holds());
        assert!(check_orth_atom_sums_closed(&fixtures::mo1(), cap)
            .unwrap()
            .holds());
        assert!(check_orth_atom_sums_closed(&fixtures::two(), cap)
            .unwrap()
            .holds());
        let q = fixtures::quarters();
        let w = check_orth_atom_sums_closed(&q, cap).unwrap();
        assert_eq!(w.witness().unwrap().elements, vec![1; 5]);
    }

    #[test]
    fn sj_sequences() {
        let g = fixtures::even(4);
        let seq = [idx(&g, "e12"), idx(&g, "e34")];
        assert!(check_sj_sequence(&g, &seq).unwrap());
        assert!(check_sj_sequence(&g, &seq[..1]).unwrap());
        let cube = fixtures::boolean(3);
        let atoms = cube.poset().atoms();
        assert_eq!(atoms.len(), 3);
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for perm in perms {
            let seq: Vec<usize> = perm.iter().map(|&i| atoms[i]).collect();
            assert!(check_sj_sequence(&cube, &seq).unwrap());
        }
        assert_eq!(
            check_sj_sequence(&g, &[idx(&g, "e12"), idx(&g, "e13")]),
            Err(CheckError::Precondition(PreconditionError::NotOrthogonal))
        );
    }

    #[test]
    fn sj_property_readings_on_algebras() {
        let cap = SearchCap::default();
        for g in [fixtures::even(4), fixtures::boolean(3), fixtures::mo1()] {
            for base in [SjBase::Atoms, SjBase::Elements] {
                for ord in [SjOrdering::All, SjOrdering::Some] {
                    assert!(check_property_sj(&g, base, ord, cap).unwrap().holds());
                }
            }
        }
    }

    #[test]
    fn prop3_examples() {
        let hex = fixtures::hex();
        let w = check_prop3_condition(&hex).unwrap();
        assert_eq!(labels(&hex, &w.witness().unwrap().elements), ["a", "b"]);
        assert!(check_prop3_condition(&fixtures::even(4)).unwrap().holds());
        assert!(check_prop3_condition(&fixtures::two()).unwrap().holds());
    }

    #[test]
    fn cap_is_reported() {
        let tiny = SearchCap { max_nodes: 2 };
        assert_eq!(
            check_orth_atom_sums_closed(&fixtures::even(4), tiny),
            Err(CheckError::CapExceeded(2))
        );
    }
}
