//! States on involutive posets, full and proper state sets, their exact
//! LP-based synthesis, and the passage between posets with such state sets
//! and GSEs of proper events.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::events::{EventError, EventSet};
use crate::lp::{LinearProgram, LpError, LpOutcome};
use crate::poset::InvolutivePoset;
use crate::rational::{half, in_unit_interval, Rational};
use crate::witness::{PreconditionError, Verdict, WitnessKind};

/// Values of a candidate state, indexed like the poset's elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateVector {
    pub values: Vec<Rational>,
}

impl StateVector {
    pub fn new(values: Vec<Rational>) -> Self {
        StateVector { values }
    }

    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSet {
    pub members: Vec<StateVector>,
    pub full: bool,
    pub proper: bool,
}

impl StateSet {
    /// Deduplicates by value (first occurrence kept) and evaluates both flags.
    pub fn new(
        poset: &InvolutivePoset,
        members: Vec<StateVector>,
    ) -> Result<Self, PreconditionError> {
        let mut unique: Vec<StateVector> = Vec::new();
        for m in members {
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        let full = is_full(poset, &unique)?.holds();
        let proper = is_proper_set(poset, &unique)?.holds();
        Ok(StateSet {
            members: unique,
            full,
            proper,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Boundary values, monotonicity and `m(p') = 1 - m(p)`.
pub fn is_state(poset: &InvolutivePoset, m: &[Rational]) -> bool {
    if m.len() != poset.len() || !m.iter().all(in_unit_interval) {
        return false;
    }
    if !m[poset.bottom()].is_zero() || !m[poset.top()].is_one() {
        return false;
    }
    for p in poset.elements() {
        if m[poset.prime(p)] != Rational::one() - &m[p] {
            return false;
        }
        for q in poset.elements() {
            if poset.leq(p, q) && m[p] > m[q] {
                return false;
            }
        }
    }
    true
}

fn require_states(poset: &InvolutivePoset, set: &[StateVector]) -> Result<(), PreconditionError> {
    if set.iter().all(|m| is_state(poset, &m.values)) {
        Ok(())
    } else {
        Err(PreconditionError::NotAState)
    }
}

/// Every pair `p ≰ q` is separated by some `m(p) > m(q)`; the witness is
/// the first unseparated pair.
pub fn is_full(poset: &InvolutivePoset, set: &[StateVector]) -> Result<Verdict, PreconditionError> {
    require_states(poset, set)?;
    for p in poset.elements() {
        for q in poset.elements() {
            if !poset.leq(p, q) && !set.iter().any(|m| m.values[p] > m.values[q]) {
                return Ok(Verdict::fails(WitnessKind::NotSeparated, [p, q]));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Whenever some member is nonzero at `p` and some member differs from one
/// at `p`, there are members strictly below and strictly above 1/2 at `p`.
pub fn is_proper_set(
    poset: &InvolutivePoset,
    set: &[StateVector],
) -> Result<Verdict, PreconditionError> {
    require_states(poset, set)?;
    let h = half();
    for p in poset.elements() {
        let premise =
            set.iter().any(|m| !m.values[p].is_zero()) && set.iter().any(|m| !m.values[p].is_one());
        if !premise {
            continue;
        }
        let below = set.iter().any(|m| m.values[p] < h);
        let above = set.iter().any(|m| m.values[p] > h);
        if !(below && above) {
            return Ok(Verdict::fails(WitnessKind::NoHalfCrossing, [p]));
        }
    }
    Ok(Verdict::Holds)
}

/// How one element's state value depends on the orbit variables.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Affine {
    Constant(Rational),
    /// `x_k`
    Var(usize),
    /// `1 - x_k`
    Complement(usize),
}

/// The state polytope in orbit coordinates: one variable per complement
/// pair, with `0`, `1` and self-complementary elements fixed.
#[derive(Clone, Debug)]
pub struct StateProgram {
    exprs: Vec<Affine>,
    num_vars: usize,
    base: LinearProgram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimum {
    Attained {
        value: Rational,
        witness: StateVector,
    },
    Infeasible,
}

impl StateProgram {
    pub fn new(poset: &InvolutivePoset) -> Self {
        let mut exprs = vec![Affine::Constant(Rational::zero()); poset.len()];
        let mut num_vars = 0;
        for x in poset.elements() {
            let px = poset.prime(x);
            exprs[x] = if x == poset.bottom() {
                Affine::Constant(Rational::zero())
            } else if x == poset.top() {
                Affine::Constant(Rational::one())
            } else if px == x {
                Affine::Constant(half())
            } else if x < px {
                num_vars += 1;
                Affine::Var(num_vars - 1)
            } else {
                continue;
            };
        }
        for x in poset.elements() {
            let px = poset.prime(x);
            if px < x && x != poset.top() && x != poset.bottom() {
                if let Affine::Var(k) = exprs[px] {
                    exprs[x] = Affine::Complement(k);
                }
            }
        }
        let mut base = LinearProgram::new(num_vars);
        for k in 0..num_vars {
            let mut row = vec![Rational::zero(); num_vars];
            row[k] = Rational::one();
            base.add_constraint(row, Rational::one())
                .expect("dimension");
        }
        let mut program = StateProgram {
            exprs,
            num_vars,
            base,
        };
        for (p, q) in poset.covers() {
            // m(p) - m(q) <= 0
            let (mut row, c) = program.linear(&[(p, Rational::one()), (q, -Rational::one())]);
            program
                .base
                .add_constraint(std::mem::take(&mut row), -c)
                .expect("dimension");
        }
        program
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn program(&self) -> &LinearProgram {
        &self.base
    }

    /// Coefficients and constant of `Σ w · m(x)` in orbit coordinates.
    fn linear(&self, terms: &[(usize, Rational)]) -> (Vec<Rational>, Rational) {
        let mut row = vec![Rational::zero(); self.num_vars];
        let mut constant = Rational::zero();
        for (x, w) in terms {
            match &self.exprs[*x] {
                Affine::Constant(c) => constant += w * c,
                Affine::Var(k) => row[*k] += w,
                Affine::Complement(k) => {
                    constant += w;
                    row[*k] -= w;
                }
            }
        }
        (row, constant)
    }

    /// Expands an orbit-coordinate point to a value per element.
    pub fn expand(&self, point: &[Rational]) -> StateVector {
        StateVector::new(
            self.exprs
                .iter()
                .map(|e| match e {
                    Affine::Constant(c) => c.clone(),
                    Affine::Var(k) => point[*k].clone(),
                    Affine::Complement(k) => Rational::one() - &point[*k],
                })
                .collect(),
        )
    }

    /// Maximizes `Σ w · m(x)` over all states.
    pub fn maximize(&self, terms: &[(usize, Rational)]) -> Result<Optimum, LpError> {
        let (row, constant) = self.linear(terms);
        let mut lp = self.base.clone();
        lp.objective = row;
        lp.objective_constant = constant;
        Ok(match lp.solve()? {
            LpOutcome::Infeasible => Optimum::Infeasible,
            LpOutcome::Optimal { value, point } => {
                debug_assert!(lp.is_feasible_point(&point));
                Optimum::Attained {
                    value,
                    witness: self.expand(&point),
                }
            }
        })
    }

    pub fn minimize(&self, terms: &[(usize, Rational)]) -> Result<Optimum, LpError> {
        let negated: Vec<(usize, Rational)> = terms.iter().map(|(x, w)| (*x, -w)).collect();
        Ok(match self.maximize(&negated)? {
            Optimum::Attained { value, witness } => Optimum::Attained {
                value: -value,
                witness,
            },
            Optimum::Infeasible => Optimum::Infeasible,
        })
    }
}

/// Exact certificate produced while synthesizing a state set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `max m(p) - m(q)` over all states, for `p ≰ q`.
    Separation {
        p: usize,
        q: usize,
        optimum: Rational,
    },
    /// `min m(p)` and `max m(p)` over all states.
    Properness {
        p: usize,
        min: Rational,
        max: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Impossibility {
    /// No state separates `p ≰ q`.
    NoFullSet { p: usize, q: usize },
    /// Every state keeps `p` on one side of 1/2.
    NoProperSet { p: usize },
    /// The state polytope is empty.
    NoStates,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Synthesis {
    Found {
        states: StateSet,
        certificates: Vec<Certificate>,
    },
    Impossible {
        reason: Impossibility,
        certificates: Vec<Certificate>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StatesError {
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error(transparent)]
    Event(#[from] EventError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Decides whether the poset admits a full and proper set of states and,
/// if so, returns one built from LP vertex witnesses.
pub fn synthesize_full_proper(poset: &InvolutivePoset) -> Result<Synthesis, StatesError> {
    let program = StateProgram::new(poset);
    let mut certificates = Vec::new();
    let mut witnesses = Vec::new();
    for p in poset.elements() {
        for q in poset.elements() {
            if poset.leq(p, q) {
                continue;
            }
            let terms = [(p, Rational::one()), (q, -Rational::one())];
            match program.maximize(&terms)? {
                Optimum::Infeasible => {
                    return Ok(Synthesis::Impossible {
                        reason: Impossibility::NoStates,
                        certificates,
                    })
                }
                Optimum::Attained { value, witness } => {
                    let separated = value > Rational::zero();
                    certificates.push(Certificate::Separation {
                        p,
                        q,
                        optimum: value,
                    });
                    if !separated {
                        return Ok(Synthesis::Impossible {
                            reason: Impossibility::NoFullSet { p, q },
                            certificates,
                        });
                    }
                    witnesses.push(witness);
                }
            }
        }
    }
    let h = half();
    for p in poset.elements() {
        if p == poset.bottom() || p == poset.top() {
            continue;
        }
        let terms = [(p, Rational::one())];
        let (min, low) = match program.minimize(&terms)? {
            Optimum::Attained { value, witness } => (value, witness),
            Optimum::Infeasible => {
                return Ok(Synthesis::Impossible {
                    reason: Impossibility::NoStates,
                    certificates,
                })
            }
        };
        let (max, high) = match program.maximize(&terms)? {
            Optimum::Attained { value, witness } => (value, witness),
            Optimum::Infeasible => {
                return Ok(Synthesis::Impossible {
                    reason: Impossibility::NoStates,
                    certificates,
                })
            }
        };
        let crosses = min < h && max > h;
        certificates.push(Certificate::Properness { p, min, max });
        if !crosses {
            return Ok(Synthesis::Impossible {
                reason: Impossibility::NoProperSet { p },
                certificates,
            });
        }
        witnesses.push(low);
        witnesses.push(high);
    }
    for w in &witnesses {
        if !is_state(poset, &w.values) {
            return Err(StatesError::Inconsistent(
                "LP witness is not a state".into(),
            ));
        }
    }
    let states = StateSet::new(poset, witnesses)?;
    if !(states.full && states.proper) {
        return Err(StatesError::Inconsistent(
            "collected witnesses are not full and proper".into(),
        ));
    }
    // In a full set, any p other than 0 and 1 meets the premise of properness.
    for p in poset.elements() {
        if p == poset.bottom() || p == poset.top() {
            continue;
        }
        let premise = states.members.iter().any(|m| !m.values[p].is_zero())
            && states.members.iter().any(|m| !m.values[p].is_one());
        if !premise {
            return Err(StatesError::Inconsistent(format!(
                "full set leaves `{}` constant at 0 or 1",
                poset.label(p)
            )));
        }
    }
    Ok(Synthesis::Found {
        states,
        certificates,
    })
}

/// The GSE realizing a poset through a full and proper state set, with the
/// element-to-member map.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub gse: EventSet,
    /// `member_of[x]` is the GSE member index of element `x`.
    pub member_of: Vec<usize>,
}

/// Maps each element `p` to the event `(m(p))_{m ∈ M}` and verifies that
/// the map is an isomorphism of bounded involutive posets onto a GSE of
/// proper events.
pub fn embed(poset: &InvolutivePoset, set: &StateSet) -> Result<Embedding, StatesError> {
    let recheck = StateSet::new(poset, set.members.clone())?;
    if !(recheck.full && recheck.proper) || set.members.is_empty() {
        return Err(PreconditionError::NotFullProper.into());
    }
    let states: Vec<String> = (1..=set.len()).map(|i| format!("s{i}")).collect();
    let image =
        |x: usize| -> Vec<Rational> { set.members.iter().map(|m| m.values[x].clone()).collect() };
    let events = poset
        .elements()
        .filter(|&x| x != poset.bottom() && x != poset.top())
        .map(|x| (poset.label(x).to_string(), image(x)))
        .collect();
    let gse = EventSet::build(states, events, false)?;
    let member_of = poset
        .elements()
        .map(|x| gse.index_of_values(&image(x)))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| StatesError::Inconsistent("image event missing".into()))?;
    if gse.len() != poset.len() {
        return Err(StatesError::Inconsistent(
            "embedding is not injective".into(),
        ));
    }
    for p in poset.elements() {
        if gse.complement_of(member_of[p]) != member_of[poset.prime(p)] {
            return Err(StatesError::Inconsistent("complement not preserved".into()));
        }
        if !gse.member(member_of[p]).is_proper() {
            return Err(StatesError::Inconsistent(format!(
                "image of `{}` is not proper",
                poset.label(p)
            )));
        }
        for q in poset.elements() {
            if poset.leq(p, q) != gse.leq(member_of[p], member_of[q]) {
                return Err(StatesError::Inconsistent("order not reflected".into()));
            }
        }
    }
    Ok(Embedding { gse, member_of })
}

/// The point states `m_s(p) = p(s)` of a GSE, on its induced poset.
pub fn states_of_gse(g: &EventSet) -> Result<StateSet, StatesError> {
    let members = (0..g.num_states())
        .map(|s| StateVector::new(g.members().iter().map(|e| e.value(s).clone()).collect()))
        .collect();
    let set = StateSet::new(g.poset(), members)?;
    if !set.full {
        return Err(StatesError::Inconsistent(
            "point states are not full".into(),
        ));
    }
    if set.proper != g.all_proper().holds() {
        return Err(StatesError::Inconsistent(
            "properness of point states disagrees with properness of events".into(),
        ));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    fn sv(v: &[Rational]) -> StateVector {
        StateVector::new(v.to_vec())
    }

    #[test]
    fn is_state_examples() {
        assert!(is_state(&fixtures::chain2(), &[int(0), int(1)]));
        let c3 = fixtures::chain3();
        assert!(is_state(&c3, &[int(0), ratio(1, 2), int(1)]));
        assert!(!is_state(&c3, &[int(0), ratio(1, 3), int(1)]));
        let mo1 = fixtures::mo_poset(1);
        assert!(is_state(&mo1, &[int(0), ratio(1, 4), ratio(3, 4), int(1)]));
    }

    #[test]
    fn lp_examples() {
        let mo2 = fixtures::mo_poset(2);
        let p = StateProgram::new(&mo2);
        match p.maximize(&[(1, int(1))]).unwrap() {
            Optimum::Attained { value, .. } => assert_eq!(value, int(1)),
            other => panic!("{other:?}"),
        }
        let c4 = fixtures::chain4();
        let p = StateProgram::new(&c4);
        match p.maximize(&[(1, int(1)), (2, int(-1))]).unwrap() {
            Optimum::Attained { value, .. } => assert_eq!(value, int(0)),
            other => panic!("{other:?}"),
        }
        let c3 = fixtures::chain3();
        let p = StateProgram::new(&c3);
        assert_eq!(p.num_vars(), 0);
        match p.maximize(&[(1, int(1))]).unwrap() {
            Optimum::Attained { value, witness } => {
                assert_eq!(value, ratio(1, 2));
                assert!(is_state(&c3, &witness.values));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn full_examples() {
        let c2 = fixtures::chain2();
        assert!(is_full(&c2, &[sv(&[int(0), int(1)])]).unwrap().holds());
        let mo1 = fixtures::mo_poset(1);
        let m1 = sv(&[int(0), ratio(1, 4), ratio(3, 4), int(1)]);
        let m2 = sv(&[int(0), ratio(3, 4), ratio(1, 4), int(1)]);
        let w = is_full(&mo1, std::slice::from_ref(&m1)).unwrap();
        assert_eq!(w, Verdict::fails(WitnessKind::NotSeparated, [1, 2]));
        assert!(is_full(&mo1, &[m1.clone(), m2.clone()]).unwrap().holds());
        let bad = sv(&[int(0), ratio(1, 4), ratio(1, 4), int(1)]);
        assert_eq!(is_full(&mo1, &[bad]), Err(PreconditionError::NotAState));
    }

    #[test]
    fn proper_examples() {
        let c3 = fixtures::chain3();
        assert!(is_proper_set(&c3, &[]).unwrap().holds());
        let w = is_proper_set(&c3, &[sv(&[int(0), ratio(1, 2), int(1)])]).unwrap();
        assert_eq!(w, Verdict::fails(WitnessKind::NoHalfCrossing, [1]));
        let mo1 = fixtures::mo_poset(1);
        let m1 = sv(&[int(0), ratio(1, 4), ratio(3, 4), int(1)]);
        let m2 = sv(&[int(0), ratio(3, 4), ratio(1, 4), int(1)]);
        assert!(is_proper_set(&mo1, &[m1, m2]).unwrap().holds());
    }

    #[test]
    fn synthesis_examples() {
        match synthesize_full_proper(&fixtures::mo_poset(2)).unwrap() {
            Synthesis::Found { states, .. } => {
                assert!(states.len() >= 4);
                assert!(states.full && states.proper);
            }
            other => panic!("{other:?}"),
        }
        match synthesize_full_proper(&fixtures::chain3()).unwrap() {
            Synthesis::Impossible { reason, .. } => {
                assert_eq!(reason, Impossibility::NoProperSet { p: 1 })
            }
            other => panic!("{other:?}"),
        }
        match synthesize_full_proper(&fixtures::chain2()).unwrap() {
            Synthesis::Found { states, .. } => {
                assert_eq!(states.members, vec![sv(&[int(0), int(1)])]);
                assert!(states.full && states.proper);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn embed_examples() {
        let c2 = fixtures::chain2();
        let set = StateSet::new(&c2, vec![sv(&[int(0), int(1)])]).unwrap();
        let e = embed(&c2, &set).unwrap();
        assert_eq!(e.gse, fixtures::two());

        let mo1 = fixtures::mo_poset(1);
        let m1 = sv(&[int(0), ratio(1, 4), ratio(3, 4), int(1)]);
        let m2 = sv(&[int(0), ratio(3, 4), ratio(1, 4), int(1)]);
        let set = StateSet::new(&mo1, vec![m1, m2]).unwrap();
        let e = embed(&mo1, &set).unwrap();
        assert_eq!(e.gse.num_states(), 2);
        let a1 = e.gse.member(e.member_of[1]);
        assert_eq!(a1.values(), &[ratio(1, 4), ratio(3, 4)]);
        let b1 = e.gse.member(e.member_of[2]);
        assert_eq!(b1.values(), &[ratio(3, 4), ratio(1, 4)]);

        let c3 = fixtures::chain3();
        let set = StateSet::new(&c3, vec![sv(&[int(0), ratio(1, 2), int(1)])]).unwrap();
        assert_eq!(
            embed(&c3, &set),
            Err(StatesError::Precondition(PreconditionError::NotFullProper))
        );
    }

    #[test]
    fn states_of_gse_examples() {
        let s = states_of_gse(&fixtures::mo1()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.full && s.proper);
        let s = states_of_gse(&fixtures::single_state_low()).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.full && !s.proper);
        let s = states_of_gse(&fixtures::two()).unwrap();
        assert!(s.full && s.proper);
    }

    #[test]
    fn round_trip_from_gse() {
        for g in fixtures::all_gse() {
            if !g.all_proper().holds() {
                continue;
            }
            let set = states_of_gse(&g).unwrap();
            let e = embed(g.poset(), &set).unwrap();
            for x in 0..g.len() {
                assert_eq!(e.gse.member(e.member_of[x]), g.member(x));
            }
        }
    }
}
