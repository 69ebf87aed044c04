//! Exact rational verification of the kinematic identities.
//!
//! [`full_ledger`] runs every registered identity over seeded rational
//! samples and records a verdict with an exact witness;
//! [`invariant_velocity_audit`] tabulates how the algebra treats the eight
//! sign triples ±ε_A.

pub mod audit;
pub mod exact;
pub mod inputs;
pub mod ledger;
pub mod registry;

use thiserror::Error;

pub use audit::{invariant_velocity_audit, CandidateVerdict, InvariantVelocityTable};
pub use exact::{Jet, RationalCoMomentum, RationalFourVector, RationalVelocity, Q};
pub use inputs::{ExactInputs, ExactSampler, Slot};
pub use ledger::{
    full_ledger, ledger_with_samples, verify_identity, Ledger, LedgerEntry, Verdict, Witness,
    DEFAULT_LEDGER_SAMPLES, DEFAULT_SEED,
};
pub use registry::{registry, Identity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
