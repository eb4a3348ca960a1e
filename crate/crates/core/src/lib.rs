//! Classification of finite sets of numerical events and synthesis of
//! full, proper state sets on involutive posets.

pub mod checks;
pub mod classify;
pub mod cli;
pub mod events;
pub mod fixtures;
pub mod format;
pub mod lp;
pub mod oracle;
pub mod poset;
pub mod rational;
pub mod states;
pub mod witness;

pub use classify::{classify, ClassificationReport, ClassifyOptions, Flag, Outcome};
pub use events::{EventError, EventSet, NumericalEvent};
pub use poset::{InvolutivePoset, PosetError};
pub use states::{StateSet, StateVector};
pub use witness::{ElementWitnessPair, PreconditionError, Verdict, WitnessKind};
