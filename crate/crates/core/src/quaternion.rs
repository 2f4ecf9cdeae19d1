//! Quaternion and vector arithmetic in binary64.
//!
//! A quaternion `q = w + ix + jy + kz` multiplies by the Hamilton rules
//! `i² = j² = k² = ijk = −1`. Vectors are quaternions with zero scalar part;
//! unit vectors square to `−1`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::tolerance;

/// A quaternion `w + ix + jy + kz` with finite components.
///
/// Constructors reject NaN and infinities. Arithmetic operators do not
/// re-check, so products of very large values can still overflow.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::raw(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::raw(0.0, 0.0, 0.0, 1.0);

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [w, x, y, z].iter().all(|c| c.is_finite()) {
            Ok(Self::raw(w, x, y, z))
        } else {
            Err(Error::NonFinite("quaternion"))
        }
    }

    pub fn from_scalar(a: f64) -> Result<Self> {
        Self::new(a, 0.0, 0.0, 0.0)
    }

    pub(crate) const fn raw(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    #[inline]
    pub fn w(&self) -> f64 {
        self.w
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.z
    }

    /// Scalar part, `w`.
    #[inline]
    pub fn scalar(&self) -> f64 {
        self.w
    }

    /// Vector part, `ix + jy + kz`.
    #[inline]
    pub fn vector(&self) -> Vector3 {
        Vector3::raw(self.x, self.y, self.z)
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// `w − ix − jy − kz`.
    pub fn conjugate(&self) -> Self {
        Self::raw(self.w, -self.x, -self.y, -self.z)
    }

    /// Sum of squares of the components (the squared modulus).
    pub fn norm(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn modulus(&self) -> f64 {
        self.norm().sqrt()
    }

    /// `q̄ / |q|²`. Fails when the norm is at or below [`tolerance::ZERO`].
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n <= tolerance::ZERO {
            return Err(Error::NotInvertible);
        }
        Ok(self.conjugate() / n)
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Splits into `a + μb` with `b ≥ 0`. `μ` is absent when `b` is within
    /// [`tolerance::ZERO`] of zero.
    pub fn to_scalar_vector(&self) -> ScalarVectorForm {
        let v = self.vector();
        let b = v.norm();
        let mu = if b > tolerance::ZERO {
            Some(UnitVector3::raw(v / b))
        } else {
            None
        };
        ScalarVectorForm { a: self.w, b, mu }
    }

    pub fn from_scalar_vector(form: &ScalarVectorForm) -> Self {
        form.to_quaternion()
    }
}

impl Mul for Quaternion {
    type Output = Self;

    /// Hamilton product.
    #[inline]
    fn mul(self, r: Self) -> Self {
        Self::raw(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;

    fn mul(self, s: f64) -> Self {
        Self::raw(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;

    fn div(self, s: f64) -> Self {
        Self::raw(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Self::raw(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::raw(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        Self::raw(-self.w, -self.x, -self.y, -self.z)
    }
}

impl From<Vector3> for Quaternion {
    fn from(v: Vector3) -> Self {
        v.to_quaternion()
    }
}

impl From<UnitVector3> for Quaternion {
    fn from(v: UnitVector3) -> Self {
        v.to_quaternion()
    }
}

impl TryFrom<[f64; 4]> for Quaternion {
    type Error = Error;

    fn try_from(c: [f64; 4]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        for (c, unit) in [(self.x, 'i'), (self.y, 'j'), (self.z, 'k')] {
            if c.is_sign_negative() {
                write!(f, "-{}{unit}", -c)?;
            } else {
                write!(f, "+{c}{unit}")?;
            }
        }
        Ok(())
    }
}

/// A 3-vector, identified with the pure quaternion `ix + jy + kz`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3 {
    x: f64,
    y: f64,
    z: f64,
}

impl Vector3 {
    pub const ZERO: Self = Self::raw(0.0, 0.0, 0.0);
    pub const X: Self = Self::raw(1.0, 0.0, 0.0);
    pub const Y: Self = Self::raw(0.0, 1.0, 0.0);
    pub const Z: Self = Self::raw(0.0, 0.0, 1.0);

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self::raw(x, y, z))
        } else {
            Err(Error::NonFinite("vector"))
        }
    }

    pub(crate) const fn raw(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, r: &Self) -> f64 {
        self.x * r.x + self.y * r.y + self.z * r.z
    }

    pub fn cross(&self, r: &Self) -> Self {
        Self::raw(
            self.y * r.z - self.z * r.y,
            self.z * r.x - self.x * r.z,
            self.x * r.y - self.y * r.x,
        )
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    /// Embeds as a quaternion with zero scalar part.
    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::raw(0.0, self.x, self.y, self.z)
    }

    /// Quaternion product `uv` of two vectors. Its scalar part is `−u·v`
    /// and its vector part is `u × v`; swapping the operands conjugates it.
    pub fn quaternion_product(&self, rhs: &Self) -> Quaternion {
        self.to_quaternion() * rhs.to_quaternion()
    }

    pub fn normalize(&self) -> Result<UnitVector3> {
        UnitVector3::normalize(*self)
    }
}

impl Add for Vector3 {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Self::raw(self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for Vector3 {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::raw(self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Neg for Vector3 {
    type Output = Self;

    fn neg(self) -> Self {
        Self::raw(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Self;

    fn mul(self, s: f64) -> Self {
        Self::raw(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vector3 {
    type Output = Self;

    fn div(self, s: f64) -> Self {
        Self::raw(self.x / s, self.y / s, self.z / s)
    }
}

impl Mul<Vector3> for f64 {
    type Output = Vector3;

    fn mul(self, v: Vector3) -> Vector3 {
        v * self
    }
}

impl TryFrom<[f64; 3]> for Vector3 {
    type Error = Error;

    fn try_from(c: [f64; 3]) -> Result<Self> {
        Self::new(c[0], c[1], c[2])
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// A vector whose length is within [`tolerance::UNIT`] of one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3(Vector3);

impl UnitVector3 {
    pub const I: Self = Self(Vector3::X);
    pub const J: Self = Self(Vector3::Y);
    pub const K: Self = Self(Vector3::Z);

    /// Admits `v` unchanged if it already has unit length.
    pub fn new(v: Vector3) -> Result<Self> {
        let norm = v.norm();
        if (norm - 1.0).abs() <= tolerance::UNIT {
            Ok(Self(v))
        } else {
            Err(Error::NotUnit { norm })
        }
    }

    /// Scales `v` to unit length.
    pub fn normalize(v: Vector3) -> Result<Self> {
        let norm = v.norm();
        if norm <= tolerance::ZERO {
            return Err(Error::ZeroVector);
        }
        Self::new(v / norm)
    }

    pub(crate) const fn raw(v: Vector3) -> Self {
        Self(v)
    }

    #[inline]
    pub fn direction(&self) -> Vector3 {
        self.0
    }

    pub fn to_quaternion(&self) -> Quaternion {
        self.0.to_quaternion()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.dot(&other.0)
    }
}

impl Neg for UnitVector3 {
    type Output = Self;

    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl From<UnitVector3> for Vector3 {
    fn from(u: UnitVector3) -> Self {
        u.0
    }
}

/// The form `a + μb`: scalar `a`, vector-part modulus `b ≥ 0` and unit
/// direction `μ`, which is absent exactly when `b` is negligible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarVectorForm {
    a: f64,
    b: f64,
    mu: Option<UnitVector3>,
}

impl ScalarVectorForm {
    pub fn new(a: f64, b: f64, mu: Option<UnitVector3>) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite("scalar-vector form"));
        }
        if b < 0.0 {
            return Err(Error::InvalidScalarVector("modulus b is negative"));
        }
        match (b > tolerance::ZERO, mu.is_some()) {
            (true, false) => Err(Error::InvalidScalarVector("b > 0 requires a direction")),
            (false, true) => Err(Error::InvalidScalarVector("b = 0 admits no direction")),
            _ => Ok(Self { a, b, mu }),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn mu(&self) -> Option<UnitVector3> {
        self.mu
    }

    pub fn to_quaternion(&self) -> Quaternion {
        match self.mu {
            Some(mu) => {
                let v = mu.direction() * self.b;
                Quaternion::raw(self.a, v.x, v.y, v.z)
            }
            None => Quaternion::raw(self.a, 0.0, 0.0, 0.0),
        }
    }
}
