use std::fmt;

use thiserror::Error;

/// What a counterexample demonstrates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    MissingMeet,
    MissingJoin,
    NotComplemented,
    OrthomodularFailure,
    DistributiveFailure,
    NotProper,
    FractionalValue,
    Axiom3,
    Axiom4,
    DifferenceMissing,
    NoSplit,
    NoDecomposition,
    DecompositionMismatch,
    NoUniqueBound,
    OrthogonalSumMissing,
    SumJoinFailure,
    DifferenceNotMeet,
    NotSeparated,
    NoHalfCrossing,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::MissingMeet => "missing-meet",
            WitnessKind::MissingJoin => "missing-join",
            WitnessKind::NotComplemented => "not-complemented",
            WitnessKind::OrthomodularFailure => "orthomodular-failure",
            WitnessKind::DistributiveFailure => "distributive-failure",
            WitnessKind::NotProper => "not-proper",
            WitnessKind::FractionalValue => "fractional-value",
            WitnessKind::Axiom3 => "axiom3",
            WitnessKind::Axiom4 => "axiom4",
            WitnessKind::DifferenceMissing => "difference-missing",
            WitnessKind::NoSplit => "no-split",
            WitnessKind::NoDecomposition => "no-decomposition",
            WitnessKind::DecompositionMismatch => "decomposition-mismatch",
            WitnessKind::NoUniqueBound => "no-unique-bound",
            WitnessKind::OrthogonalSumMissing => "orthogonal-sum-missing",
            WitnessKind::SumJoinFailure => "sum-join-failure",
            WitnessKind::DifferenceNotMeet => "difference-not-meet",
            WitnessKind::NotSeparated => "not-separated",
            WitnessKind::NoHalfCrossing => "no-half-crossing",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A counterexample: a tag plus the element indices involved, in the
/// order the failing scan visited them. `detail` carries extra groups of
/// elements, such as the two atom decompositions that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementWitnessPair {
    pub kind: WitnessKind,
    pub elements: Vec<usize>,
    pub detail: Vec<Vec<usize>>,
}

impl ElementWitnessPair {
    pub fn new(kind: WitnessKind, elements: impl Into<Vec<usize>>) -> Self {
        ElementWitnessPair {
            kind,
            elements: elements.into(),
            detail: Vec::new(),
        }
    }

    pub fn with_detail(mut self, detail: Vec<Vec<usize>>) -> Self {
        self.detail = detail;
        self
    }
}

/// Outcome of a boolean check that reports its first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(ElementWitnessPair),
}

impl Verdict {
    pub fn fails(kind: WitnessKind, elements: impl Into<Vec<usize>>) -> Self {
        Verdict::Fails(ElementWitnessPair::new(kind, elements))
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&ElementWitnessPair> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// A check was asked of a structure that does not meet its hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("structure is not an orthoposet")]
    NotOrthoposet,
    #[error("structure is not a lattice")]
    NotLattice,
    #[error("structure is not an ortholattice")]
    NotOrtholattice,
    #[error("structure is not an orthomodular lattice")]
    NotOrthomodularLattice,
    #[error("structure is not a GFE (property (P) fails)")]
    NotGfe,
    #[error("structure is not an NGFE")]
    NotNgfe,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("atoms are not pairwise orthogonal")]
    NotOrthogonal,
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("state set is not full and proper")]
    NotFullProper,
    #[error("value vector is not a state")]
    NotAState,
    #[error("property (U) does not hold")]
    PropertyUFails,
}
