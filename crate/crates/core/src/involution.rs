//! The involution family `q → −νqν`.
//!
//! Every unit vector `ν` defines an involution of the quaternions. It fixes
//! the scalar part and reflects the vector part in the line through `ν`.
//! Involutions about perpendicular axes commute, and for a right-handed
//! triad `ν₁ν₂ = ν₃` two of them compose to the third. Two involutions about
//! arbitrary axes compose to a rotation of the vector part by twice the angle
//! between the axes.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, UnitVector3, Vector3};
use crate::tolerance;

/// Axes closer than this (in radians) to parallel or antiparallel have no
/// well-defined rotation axis under composition.
pub const NEAR_PARALLEL: f64 = 1e-6;

/// The axis `ν` of the involution `q → −νqν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvolutionAxis(UnitVector3);

impl InvolutionAxis {
    pub fn new(axis: UnitVector3) -> Self {
        Self(axis)
    }

    pub fn i() -> Self {
        Self(UnitVector3::I)
    }

    pub fn j() -> Self {
        Self(UnitVector3::J)
    }

    pub fn k() -> Self {
        Self(UnitVector3::K)
    }

    pub fn unit(&self) -> UnitVector3 {
        self.0
    }

    pub fn direction(&self) -> Vector3 {
        self.0.direction()
    }

    pub fn apply(&self, q: Quaternion) -> Quaternion {
        involute(q, self)
    }
}

impl From<UnitVector3> for InvolutionAxis {
    fn from(u: UnitVector3) -> Self {
        Self(u)
    }
}

/// Computes `−νqν` by two Hamilton products.
pub fn involute(q: Quaternion, axis: &InvolutionAxis) -> Quaternion {
    let nu = axis.0.to_quaternion();
    -(nu * q * nu)
}

/// `−iqi = w + ix − jy − kz`
pub fn chernov_alpha(q: Quaternion) -> Quaternion {
    involute(q, &InvolutionAxis::i())
}

/// `−jqj = w − ix + jy − kz`
pub fn chernov_beta(q: Quaternion) -> Quaternion {
    involute(q, &InvolutionAxis::j())
}

/// `−kqk = w − ix − jy + kz`
pub fn chernov_gamma(q: Quaternion) -> Quaternion {
    involute(q, &InvolutionAxis::k())
}

/// Applies the involution about `first`, then the one about `second`.
///
/// The result keeps the scalar part of `q` and rotates its vector part about
/// `first × second` by twice the angle between the axes.
pub fn compose_involutions(
    q: Quaternion,
    first: &InvolutionAxis,
    second: &InvolutionAxis,
) -> Quaternion {
    involute(involute(q, first), second)
}

/// Reflects `v` in the line through the axis.
pub fn reflect_vector(v: Vector3, axis: &InvolutionAxis) -> Vector3 {
    involute(v.to_quaternion(), axis).vector()
}

/// Rotation produced by composing two involutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    /// Normalized `first × second`; `None` when the axes are within
    /// [`NEAR_PARALLEL`] of parallel or antiparallel.
    pub axis: Option<UnitVector3>,
    /// Twice the angle between the involution axes, in `[0, 2π]`.
    pub angle: f64,
}

/// Describes `compose_involutions(_, first, second)` as an axis-angle rotation.
pub fn rotation_of_composition(first: &InvolutionAxis, second: &InvolutionAxis) -> Rotation {
    let a = first.direction();
    let b = second.direction();
    let cross = a.cross(&b);
    let theta = cross.norm().atan2(a.dot(&b));
    let axis = if theta < NEAR_PARALLEL || PI - theta < NEAR_PARALLEL {
        None
    } else {
        UnitVector3::normalize(cross).ok()
    };
    Rotation {
        axis,
        angle: 2.0 * theta,
    }
}

/// Three mutually perpendicular unit vectors with `ν₁ν₂ = ν₃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthonormalTriad {
    nu1: UnitVector3,
    nu2: UnitVector3,
    nu3: UnitVector3,
}

impl OrthonormalTriad {
    /// Validates perpendicularity (pairwise `|νᵢ·νⱼ| ≤` [`tolerance::UNIT`])
    /// and handedness (`ν₁ν₂ = ν₃` within [`tolerance::ALG`]).
    pub fn new(nu1: UnitVector3, nu2: UnitVector3, nu3: UnitVector3) -> Result<Self> {
        for (name, d) in [
            ("nu1·nu2", nu1.dot(&nu2)),
            ("nu1·nu3", nu1.dot(&nu3)),
            ("nu2·nu3", nu2.dot(&nu3)),
        ] {
            if d.abs() > tolerance::UNIT {
                return Err(Error::InvalidTriad(format!("{name} = {d:e}")));
            }
        }
        let residual =
            (nu1.to_quaternion() * nu2.to_quaternion()).max_abs_diff(&nu3.to_quaternion());
        if residual > tolerance::ALG {
            return Err(Error::InvalidTriad(format!(
                "nu1 nu2 differs from nu3 by {residual:e} (left-handed?)"
            )));
        }
        Ok(Self { nu1, nu2, nu3 })
    }

    /// `(i, j, k)`.
    pub fn canonical() -> Self {
        Self {
            nu1: UnitVector3::I,
            nu2: UnitVector3::J,
            nu3: UnitVector3::K,
        }
    }

    pub fn nu1(&self) -> UnitVector3 {
        self.nu1
    }

    pub fn nu2(&self) -> UnitVector3 {
        self.nu2
    }

    pub fn nu3(&self) -> UnitVector3 {
        self.nu3
    }

    pub fn units(&self) -> [UnitVector3; 3] {
        [self.nu1, self.nu2, self.nu3]
    }

    pub fn axes(&self) -> [InvolutionAxis; 3] {
        self.units().map(InvolutionAxis::new)
    }
}

/// Builds a right-handed triad whose first element is `nu1`.
///
/// `nu2` comes from the coordinate axis least aligned with `nu1` (ties go to
/// x, then y, then z), orthogonalized against `nu1` and normalized. `nu3` is
/// the vector part of `nu1 nu2`.
pub fn complete_triad(nu1: UnitVector3) -> OrthonormalTriad {
    let n = nu1.direction();
    let dots = n.to_array().map(f64::abs);
    let mut pick = 0;
    for (idx, d) in dots.iter().enumerate().skip(1) {
        if *d < dots[pick] {
            pick = idx;
        }
    }
    let e = [Vector3::X, Vector3::Y, Vector3::Z][pick];
    let nu2 = UnitVector3::normalize(e - n * n.dot(&e))
        .expect("least-aligned coordinate axis is never parallel to a unit vector");
    let nu3 = UnitVector3::new((nu1.to_quaternion() * nu2.to_quaternion()).vector())
        .expect("product of perpendicular unit vectors has unit length");
    debug_assert!(OrthonormalTriad::new(nu1, nu2, nu3).is_ok());
    OrthonormalTriad { nu1, nu2, nu3 }
}

/// Applies the involutions about `ν₁`, `ν₂`, `ν₃` in turn. For a valid triad
/// this returns `q` up to rounding.
pub fn involute_about_triad_product(q: Quaternion, triad: &OrthonormalTriad) -> Quaternion {
    triad.axes().iter().fold(q, involute)
}

/// `½(q̄ν₁ + q̄ν₂ + q̄ν₃ − q)`, which equals the conjugate of `q`.
pub fn conjugate_via_involutions(q: Quaternion, triad: &OrthonormalTriad) -> Quaternion {
    let [a, b, c] = triad.axes();
    (involute(q, &a) + involute(q, &b) + involute(q, &c) - q) * 0.5
}
