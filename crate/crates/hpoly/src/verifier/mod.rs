//! Exhaustive small-graph verification: labeled enumeration, an executable
//! check registry, corpus sweeps with deterministic reports, and a miner for
//! polynomial collisions.

pub mod checks;
pub mod collisions;
pub mod enumerate;
pub mod report;

pub use checks::{run_checks, CheckId, CheckOutcome, Verdict};
pub use collisions::{mine_collisions, CollisionPair, CollisionReport, BATTERY_ALPHAS};
pub use enumerate::{
    check_order, enumerate_graphs, labeled_count, EnumerateOptions, VerifierError,
    FULL_ENUMERATION_LIMIT, OPT_IN_ENUMERATION_LIMIT,
};
pub use report::{verify_corpus, CheckTally, FailureWitness, VerificationReport, WITNESS_CAP};
