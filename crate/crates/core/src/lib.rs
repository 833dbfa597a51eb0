//! Non-flat assumption-based argumentation, closed-extension semantics for
//! bipolar argumentation frameworks, and the translation between them.

pub mod aba;
pub mod baf;
pub mod error;
pub mod harness;
pub mod idset;
pub mod instantiate;
pub mod labels;
pub mod reductions;
pub mod semantics;

pub use aba::{AbaBuilder, AbaFramework, Argument, AssumptionSet, Rule};
pub use baf::{Baf, BafBuilder, Extension, Pbaf, PremiseSet};
pub use error::{Error, ParseErrorKind, Result};
pub use idset::{ArgId, AtomId, DenseId, IdSet, PremiseId};
pub use labels::Labels;
pub use semantics::{DefenseMode, Semantics, Task, DEFAULT_MAX_ENUMERATION};
