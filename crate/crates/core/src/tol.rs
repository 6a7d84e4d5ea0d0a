//! Tolerance constants used across the verifier ladders.
//!
//! Every check reports a max-abs defect; these constants pin the pass/fail
//! thresholds used by the test suite and the CLI defaults.

/// Default pass/fail tolerance for verifier ladders (CLI `--tol` default).
pub const DEFAULT: f64 = 1e-9;

/// Expected residual on clean bundled data (pentagon, unitarity, zig-zag).
pub const CLEAN_DATA: f64 = 1e-10;

/// Tight tolerance for identities that are exact up to rounding.
pub const NEAR_EXACT: f64 = 1e-12;

/// Threshold above which a deliberately perturbed input must fail.
pub const NEGATIVE_CONTROL: f64 = 1e-4;

/// Rank / pivoting cutoff for orthonormalization of projector columns.
pub const RANK_CUTOFF: f64 = 1e-8;

/// Environment variable overriding the default tolerance in the CLI.
pub const TOL_ENV_VAR: &str = "QKIT_TOL";
