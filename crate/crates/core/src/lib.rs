//! Quaternion involutions.
//!
//! For any unit vector `ν` the map `q → −νqν` is an involution of the
//! quaternions: it is self-inverse, linear, and preserves products in the
//! same order. This crate provides the underlying quaternion arithmetic,
//! the involution family with its composition and rotation laws, the
//! expression of the conjugate as a sum of three perpendicular involutions,
//! and projection of vectors and quaternions onto an axis or an
//! orthonormal triad.
//!
//! ```
//! use quatinv::{involute, InvolutionAxis, Quaternion};
//!
//! let q = Quaternion::new(1.0, 2.0, 3.0, 4.0).unwrap();
//! let alpha = involute(q, &InvolutionAxis::i());
//! assert_eq!(alpha, Quaternion::new(1.0, 2.0, -3.0, -4.0).unwrap());
//! ```

mod error;
pub mod involution;
pub mod laws;
pub mod projection;
pub mod quaternion;
pub mod tolerance;

pub use error::{Error, Result};
pub use involution::{
    chernov_alpha, chernov_beta, chernov_gamma, complete_triad, compose_involutions,
    conjugate_via_involutions, involute, involute_about_triad_product, reflect_vector,
    rotation_of_composition, InvolutionAxis, OrthonormalTriad, Rotation,
};
pub use projection::{
    decompose, scalar_and_vector_parts, split, split_quaternion, BasisDecomposition,
    ParallelPerpSplit,
};
pub use quaternion::{Quaternion, ScalarVectorForm, UnitVector3, Vector3};
