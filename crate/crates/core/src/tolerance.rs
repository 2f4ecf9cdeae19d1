//! Numerical tolerances shared by constructors, law checks and tests.
//!
//! Everything is binary64. The law tolerance leaves a few ulps of headroom
//! over the rounding of short Hamilton product chains.

/// Admission tolerance for unit vectors: `| |v| − 1 | ≤ UNIT`.
pub const UNIT: f64 = 1e-10;

/// Magnitudes at or below this are treated as zero.
pub const ZERO: f64 = 1e-12;

/// Relative tolerance for algebraic law checks.
pub const ALG: f64 = 1e-9;

/// Absolute per-component tolerance for reconstructions.
pub const RECON: f64 = 1e-12;

/// Relative residual between two values: `|actual − expected| / max(1, |expected|)`.
pub fn relative(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(1.0)
}
