//! Abstract argumentation frameworks, their encodings into two-valued,
//! three-valued and fuzzy propositional logics, equational semantics, and a
//! harness that checks the correspondences between them on fixtures and
//! random corpora.

pub mod af;
pub mod equational;
mod error;
pub mod formula;
pub mod logic;
pub mod semantics;
pub mod verify;

pub use af::{parse_apx, parse_tgf, random_af, ArgumentId, ArgumentationFramework};
pub use error::{Error, Result};
pub use formula::{encode_normal, encode_regular, Formula};
pub use logic::{Assignment, Limits, LogicSystem, Negation, TNorm, TruthValue};
pub use equational::EquationalSystem;
pub use semantics::SemanticsName;
pub use verify::{TheoremId, VerificationReport, VerifyParams};
