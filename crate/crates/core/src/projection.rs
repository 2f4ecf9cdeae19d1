//! Projection by involution.
//!
//! Adding a vector to its involution about `ν` cancels the part
//! perpendicular to `ν`; subtracting cancels the parallel part. The same
//! sums applied to a quaternion keep the scalar part with the parallel
//! component, so the perpendicular remainder is a pure vector.

use crate::involution::{involute, reflect_vector, InvolutionAxis, OrthonormalTriad};
use crate::quaternion::{Quaternion, Vector3};

/// A vector resolved along and across an axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallelPerpSplit {
    pub parallel: Vector3,
    pub perpendicular: Vector3,
}

impl ParallelPerpSplit {
    pub fn reconstruct(&self) -> Vector3 {
        self.parallel + self.perpendicular
    }
}

/// `v∥ = ½(v + v̄ν)`, `v⊥ = ½(v − v̄ν)`.
pub fn split(v: Vector3, axis: &InvolutionAxis) -> ParallelPerpSplit {
    let reflected = reflect_vector(v, axis);
    ParallelPerpSplit {
        parallel: (v + reflected) * 0.5,
        perpendicular: (v - reflected) * 0.5,
    }
}

/// Splits `q` into the component in the Argand plane of `ν` (scalar part
/// plus vector part along `ν`) and the vector perpendicular to `ν`.
pub fn split_quaternion(q: Quaternion, axis: &InvolutionAxis) -> (Quaternion, Vector3) {
    let involuted = involute(q, axis);
    let parallel = (q + involuted) * 0.5;
    // the scalar parts cancel up to rounding
    let perpendicular = ((q - involuted) * 0.5).vector();
    (parallel, perpendicular)
}

/// `a = ½(q + q̄)`, `b = ½(q − q̄)`.
pub fn scalar_and_vector_parts(q: Quaternion) -> (f64, Vector3) {
    let conj = q.conjugate();
    let a = ((q + conj) * 0.5).scalar();
    let b = ((q - conj) * 0.5).vector();
    (a, b)
}

/// Coordinates of a quaternion in the basis `1, ν₁, ν₂, ν₃`:
/// `q = a + ν₁α + ν₂β + ν₃γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisDecomposition {
    a: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    triad: OrthonormalTriad,
}

impl BasisDecomposition {
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn coefficients(&self) -> [f64; 4] {
        [self.a, self.alpha, self.beta, self.gamma]
    }

    pub fn triad(&self) -> &OrthonormalTriad {
        &self.triad
    }

    /// The vectors `bᵢ = νᵢ·coefficientᵢ`.
    pub fn components(&self) -> [Vector3; 3] {
        let [n1, n2, n3] = self.triad.units();
        [
            n1.direction() * self.alpha,
            n2.direction() * self.beta,
            n3.direction() * self.gamma,
        ]
    }

    pub fn reconstruct(&self) -> Quaternion {
        let [b1, b2, b3] = self.components();
        let b = b1 + b2 + b3;
        Quaternion::raw(self.a, b.x(), b.y(), b.z())
    }
}

/// Resolves `q` against a triad. The vector part comes from the conjugate,
/// each `bᵢ` from the involution projection onto `νᵢ`, and the signed
/// coefficient is `bᵢ·νᵢ`.
pub fn decompose(q: Quaternion, triad: &OrthonormalTriad) -> BasisDecomposition {
    let (a, b) = scalar_and_vector_parts(q);
    let [alpha, beta, gamma] = triad
        .units()
        .map(|nu| split(b, &nu.into()).parallel.dot(&nu.direction()));
    BasisDecomposition {
        a,
        alpha,
        beta,
        gamma,
        triad: *triad,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::complete_triad;
    use crate::quaternion::UnitVector3;
    use crate::tolerance;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z).unwrap()
    }

    fn v(x: f64, y: f64, z: f64) -> Vector3 {
        Vector3::new(x, y, z).unwrap()
    }

    #[test]
    fn split_examples() {
        let i = InvolutionAxis::i();
        let s = split(v(1.0, 2.0, 0.0), &i);
        assert_eq!(s.parallel, Vector3::X);
        assert_eq!(s.perpendicular, v(0.0, 2.0, 0.0));

        let s = split(v(3.0, 0.0, 0.0), &i);
        assert_eq!(
            (s.parallel, s.perpendicular),
            (v(3.0, 0.0, 0.0), Vector3::ZERO)
        );
        let s = split(v(0.0, -1.0, 5.0), &i);
        assert_eq!(
            (s.parallel, s.perpendicular),
            (Vector3::ZERO, v(0.0, -1.0, 5.0))
        );
    }

    #[test]
    fn split_is_idempotent_on_parallel_part() {
        let nu: InvolutionAxis = UnitVector3::normalize(v(0.2, -0.7, 0.4)).unwrap().into();
        let s = split(v(3.0, 1.0, -2.0), &nu);
        let again = split(s.parallel, &nu);
        assert!(again.perpendicular.norm() <= tolerance::ALG);
        assert!(again.parallel.max_abs_diff(&s.parallel) <= tolerance::ALG);
    }

    #[test]
    fn split_quaternion_examples() {
        let i = InvolutionAxis::i();
        assert_eq!(
            split_quaternion(q(1.0, 2.0, 3.0, 0.0), &i),
            (q(1.0, 2.0, 0.0, 0.0), v(0.0, 3.0, 0.0))
        );
        assert_eq!(
            split_quaternion(q(-4.0, 0.0, 0.0, 0.0), &i),
            (q(-4.0, 0.0, 0.0, 0.0), Vector3::ZERO)
        );
        assert_eq!(
            split_quaternion(q(0.0, 0.0, 3.0, 0.0), &i),
            (Quaternion::ZERO, v(0.0, 3.0, 0.0))
        );
    }

    #[test]
    fn scalar_and_vector_parts_examples() {
        assert_eq!(
            scalar_and_vector_parts(q(1.0, 2.0, 3.0, 4.0)),
            (1.0, v(2.0, 3.0, 4.0))
        );
        assert_eq!(
            scalar_and_vector_parts(Quaternion::ZERO),
            (0.0, Vector3::ZERO)
        );
        assert_eq!(
            scalar_and_vector_parts(v(-1.0, 0.5, 9.0).to_quaternion()),
            (0.0, v(-1.0, 0.5, 9.0))
        );
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(q(1.0, 2.0, 3.0, 4.0), &OrthonormalTriad::canonical());
        assert_eq!(d.coefficients(), [1.0, 2.0, 3.0, 4.0]);
        assert_eq!(d.reconstruct(), q(1.0, 2.0, 3.0, 4.0));

        let t = complete_triad(UnitVector3::normalize(v(1.0, -3.0, 2.0)).unwrap());
        let d = decompose(q(2.5, 0.0, 0.0, 0.0), &t);
        assert_eq!(d.coefficients(), [2.5, 0.0, 0.0, 0.0]);
    }
}
