//! Exhaustive enumeration of small topologies, canonical forms, the
//! fixture corpus runner and the counterexample miner.

pub mod canonical;
pub mod enumerate;
pub mod fixture;
pub mod goal;
pub mod miner;

pub use canonical::{canonical_form, canonical_spaces, CanonicalKey, CanonicalSpace};
pub use enumerate::{enumerate_topologies, MAX_ENUMERATION_POINTS};
pub use fixture::{run_corpus, ClaimOutcome, FixtureResult, FixtureStatus};
pub use goal::Goal;
pub use miner::{find_strictness_witness, mine, MineOutcome};
