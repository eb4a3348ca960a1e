//! Ground truth by exhaustion: enumeration of small involutive posets up to
//! isomorphism, an independent brute-force enumerator, a vertex-enumeration
//! decision procedure for full and proper state sets, random GSEs, and
//! corpus-wide verification.

pub mod brute;
pub mod canon;
pub mod enumerate;
pub mod random;
pub mod verify;
pub mod vertices;

pub use canon::{canonical_code, canonical_poset, is_isomorphic};
pub use enumerate::{enumerate_involutive_posets, enumerate_up_to, EnumerationError};
pub use random::{random_corpus, random_gse};
pub use verify::{verify_theorems, Corpus, Instance, Provenance, VerificationReport};
pub use vertices::{full_proper_exists, state_vertices};
