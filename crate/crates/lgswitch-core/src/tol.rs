//! Centralized numerical tolerances.
//!
//! Two tiers cover the whole crate: `IDENTITY` for single algebraic
//! identities evaluated in a handful of f64 operations, and `CHAINED` for
//! quantities assembled from longer pipelines (interferometer algebra,
//! correlation sums over many scenarios) where rounding accumulates.

/// Algebraic identities checked in O(10) floating-point operations.
pub const IDENTITY: f64 = 1e-12;

/// Identities at the end of chained pipelines (switch runs, table sums over
/// random ensembles).
pub const CHAINED: f64 = 1e-10;

/// Relative truncation tolerance for the matrix-exponential power series.
pub const SERIES_REL: f64 = 1e-14;

/// Magnitude below which an overlap counts as a vanishing post-selection.
pub const OVERLAP: f64 = 1e-12;

/// Pattern-search default stopping step.
pub const SEARCH_STEP: f64 = 1e-9;
