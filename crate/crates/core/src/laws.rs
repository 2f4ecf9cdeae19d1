//! Randomized verification of the algebraic laws.
//!
//! [`run_suite`] draws random quaternions, vectors, axes and triads from a
//! seeded ChaCha generator and measures the worst residual of every law.
//! Where a law is checked against an independent formula (dot and cross
//! products, reflection in a line, projection by dot product, axis-angle
//! rotation), that formula is written out here componentwise rather than
//! through the crate's quaternion routines.
//!
//! Two entries are expected to fail: multiplicativity of `q → ν₁qν₂`
//! with `ν₁ ≠ ν₂`, and same-order multiplicativity of the conjugate. For
//! those the suite searches for a counterexample and reports it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::involution::{
    compose_involutions, conjugate_via_involutions, involute, involute_about_triad_product,
    reflect_vector, InvolutionAxis, OrthonormalTriad,
};
use crate::projection::{decompose, scalar_and_vector_parts, split};
use crate::quaternion::{Quaternion, UnitVector3, Vector3};
use crate::tolerance;

/// Relative residual above which a difference counts as a genuine
/// counterexample rather than rounding.
pub const WITNESS_THRESHOLD: f64 = 1e-6;

/// Random inputs for law checks. Components are uniform in `[−10, 10]`.
pub mod sample {
    use super::*;

    pub const RANGE: f64 = 10.0;

    pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> f64 {
        rng.random_range(-RANGE..=RANGE)
    }

    pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
        Quaternion::raw(scalar(rng), scalar(rng), scalar(rng), scalar(rng))
    }

    pub fn vector<R: Rng + ?Sized>(rng: &mut R) -> Vector3 {
        Vector3::raw(scalar(rng), scalar(rng), scalar(rng))
    }

    /// Uniform on the sphere, by rejection from the unit cube.
    pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> UnitVector3 {
        loop {
            let v = Vector3::raw(
                rng.random_range(-1.0..=1.0),
                rng.random_range(-1.0..=1.0),
                rng.random_range(-1.0..=1.0),
            );
            let n2 = v.norm_squared();
            if n2 > 1e-4 && n2 <= 1.0 {
                return UnitVector3::normalize(v).expect("norm bounded away from zero");
            }
        }
    }

    pub fn axis<R: Rng + ?Sized>(rng: &mut R) -> InvolutionAxis {
        unit_vector(rng).into()
    }

    /// A unit vector perpendicular to `nu`.
    pub fn perpendicular_to<R: Rng + ?Sized>(rng: &mut R, nu: &UnitVector3) -> UnitVector3 {
        let n = nu.direction();
        loop {
            let r = unit_vector(rng).direction();
            let p = r - n * n.dot(&r);
            if p.norm() > 1e-2 {
                let p = UnitVector3::normalize(p).expect("norm bounded away from zero");
                // one more pass removes the residual component along n
                let p = p.direction() - n * n.dot(&p.direction());
                return UnitVector3::normalize(p).expect("already nearly unit");
            }
        }
    }

    /// A uniformly oriented right-handed triad.
    pub fn triad<R: Rng + ?Sized>(rng: &mut R) -> OrthonormalTriad {
        let nu1 = unit_vector(rng);
        let nu2 = perpendicular_to(rng, &nu1);
        let nu3 = UnitVector3::normalize(nu1.direction().cross(&nu2.direction()))
            .expect("cross of perpendicular unit vectors has unit length");
        OrthonormalTriad::new(nu1, nu2, nu3).expect("Gram-Schmidt triad is orthonormal")
    }

    /// Two unit vectors at angle `theta` from each other.
    pub fn axes_at_angle<R: Rng + ?Sized>(rng: &mut R, theta: f64) -> (UnitVector3, UnitVector3) {
        let a = unit_vector(rng);
        let p = perpendicular_to(rng, &a);
        let b = a.direction() * theta.cos() + p.direction() * theta.sin();
        (a, UnitVector3::normalize(b).expect("unit combination"))
    }
}

/// Componentwise `u·v`.
fn dot_oracle(u: &Vector3, v: &Vector3) -> f64 {
    u.x() * v.x() + u.y() * v.y() + u.z() * v.z()
}

/// Componentwise `u × v`.
fn cross_oracle(u: &Vector3, v: &Vector3) -> [f64; 3] {
    [
        u.y() * v.z() - u.z() * v.y(),
        u.z() * v.x() - u.x() * v.z(),
        u.x() * v.y() - u.y() * v.x(),
    ]
}

/// Rodrigues rotation of `v` by `angle` about unit `k`.
fn rotate_oracle(v: &Vector3, k: &Vector3, angle: f64) -> [f64; 3] {
    let (s, c) = angle.sin_cos();
    let kv = cross_oracle(k, v);
    let kd = dot_oracle(k, v) * (1.0 - c);
    [
        v.x() * c + kv[0] * s + k.x() * kd,
        v.y() * c + kv[1] * s + k.y() * kd,
        v.z() * c + kv[2] * s + k.z() * kd,
    ]
}

fn rel_q(actual: &Quaternion, expected: &Quaternion) -> f64 {
    actual.max_abs_diff(expected) / expected.modulus().max(1.0)
}

fn rel_v(actual: &Vector3, expected: &[f64; 3]) -> f64 {
    let e = Vector3::raw(expected[0], expected[1], expected[2]);
    actual.max_abs_diff(&e) / e.norm().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// A law expected to fail did fail; the counterexample is recorded.
    WitnessFound,
    /// A law expected to fail held on every trial.
    WitnessMissing,
}

impl Outcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, Outcome::Pass | Outcome::WitnessFound)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawResult {
    pub name: &'static str,
    pub outcome: Outcome,
    pub trials: usize,
    /// Worst residual seen, or for expected failures the witness residual.
    pub residual: f64,
    pub tolerance: f64,
    /// Trial index of the first counterexample, for expected failures.
    pub witness_trial: Option<usize>,
}

impl fmt::Display for LawResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            Outcome::Pass | Outcome::Fail => write!(
                f,
                "{:<13} {:<52} trials={} worst={:.3e} tol={:e}",
                if self.outcome == Outcome::Pass {
                    "PASS"
                } else {
                    "FAIL"
                },
                self.name,
                self.trials,
                self.residual,
                self.tolerance,
            ),
            Outcome::WitnessFound => write!(
                f,
                "{:<13} {}: counterexample found (trial {}, residual {:.3e})",
                "EXPECTED-FAIL",
                self.name,
                self.witness_trial.unwrap_or_default(),
                self.residual,
            ),
            Outcome::WitnessMissing => write!(
                f,
                "{:<13} {}: no counterexample in {} trials",
                "FAIL", self.name, self.trials,
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub trials: usize,
    pub seed: u64,
    pub results: Vec<LawResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome.is_ok())
    }

    pub fn get(&self, name: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "law verification: trials={} seed={}",
            self.trials, self.seed
        )?;
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        let failed = self.results.iter().filter(|r| !r.outcome.is_ok()).count();
        if failed == 0 {
            write!(f, "all {} laws hold", self.results.len())
        } else {
            write!(f, "{failed} of {} laws FAILED", self.results.len())
        }
    }
}

struct Suite {
    rng: ChaCha8Rng,
    trials: usize,
    results: Vec<LawResult>,
}

impl Suite {
    fn law(
        &mut self,
        name: &'static str,
        tolerance: f64,
        trial: impl FnMut(&mut ChaCha8Rng) -> f64,
    ) {
        let worst = self.worst(trial);
        self.record(name, tolerance, worst, worst < tolerance);
    }

    /// A law that must hold bit-for-bit.
    fn exact_law(&mut self, name: &'static str, trial: impl FnMut(&mut ChaCha8Rng) -> f64) {
        let worst = self.worst(trial);
        self.record(name, 0.0, worst, worst == 0.0);
    }

    fn worst(&mut self, mut trial: impl FnMut(&mut ChaCha8Rng) -> f64) -> f64 {
        let mut worst = 0.0_f64;
        for _ in 0..self.trials {
            let r = trial(&mut self.rng);
            if r.is_nan() || r > worst {
                worst = r;
            }
            if worst.is_nan() {
                break;
            }
        }
        worst
    }

    fn record(&mut self, name: &'static str, tolerance: f64, worst: f64, pass: bool) {
        let outcome = if pass { Outcome::Pass } else { Outcome::Fail };
        self.results.push(LawResult {
            name,
            outcome,
            trials: self.trials,
            residual: worst,
            tolerance,
            witness_trial: None,
        });
    }

    fn expect_counterexample(
        &mut self,
        name: &'static str,
        mut trial: impl FnMut(&mut ChaCha8Rng) -> f64,
    ) {
        let mut found = None;
        for n in 0..self.trials {
            let r = trial(&mut self.rng);
            if r > WITNESS_THRESHOLD {
                found = Some((n, r));
                break;
            }
        }
        self.results.push(LawResult {
            name,
            outcome: if found.is_some() {
                Outcome::WitnessFound
            } else {
                Outcome::WitnessMissing
            },
            trials: self.trials,
            residual: found.map_or(0.0, |(_, r)| r),
            tolerance: WITNESS_THRESHOLD,
            witness_trial: found.map(|(n, _)| n),
        });
    }
}

/// Runs every law `trials` times with a generator seeded from `seed`.
/// Identical arguments give identical reports.
pub fn run_suite(trials: usize, seed: u64) -> Report {
    use sample::*;

    let mut s = Suite {
        rng: ChaCha8Rng::seed_from_u64(seed),
        trials,
        results: Vec::new(),
    };
    let alg = tolerance::ALG;
    let recon = tolerance::RECON;

    // Quaternion arithmetic.
    s.law("unit vector squares to -1", alg, |rng| {
        let nu = unit_vector(rng).to_quaternion();
        rel_q(&(nu * nu), &-Quaternion::ONE)
    });
    s.law("vector product = -dot + cross", alg, |rng| {
        let (u, v) = (vector(rng), vector(rng));
        let p = u.quaternion_product(&v);
        let expected = Quaternion::raw(-dot_oracle(&u, &v), 0.0, 0.0, 0.0);
        let c = cross_oracle(&u, &v);
        let expected = expected + Vector3::raw(c[0], c[1], c[2]).to_quaternion();
        rel_q(&p, &expected)
    });
    s.law("swapping vector product conjugates", alg, |rng| {
        let (u, v) = (vector(rng), vector(rng));
        rel_q(
            &v.quaternion_product(&u),
            &u.quaternion_product(&v).conjugate(),
        )
    });
    s.law("perpendicular vectors anticommute", alg, |rng| {
        let nu = unit_vector(rng);
        let u = nu.direction() * scalar(rng);
        let v = perpendicular_to(rng, &nu).direction() * scalar(rng);
        rel_q(&u.quaternion_product(&v), &-v.quaternion_product(&u))
    });
    s.law("modulus is multiplicative", alg, |rng| {
        let (p, q) = (quaternion(rng), quaternion(rng));
        let expected = p.modulus() * q.modulus();
        tolerance::relative((p * q).modulus(), expected)
    });
    s.law("q q^-1 = 1", alg, |rng| {
        let q = quaternion(rng);
        match q.inverse() {
            Ok(inv) => rel_q(&(q * inv), &Quaternion::ONE),
            Err(_) => 0.0,
        }
    });
    s.law("scalar-vector form round trip", recon, |rng| {
        let q = quaternion(rng);
        Quaternion::from_scalar_vector(&q.to_scalar_vector()).max_abs_diff(&q)
    });
    s.law("unit vector product = -cos t + n sin t", alg, |rng| {
        let theta = rng.random_range(0.01..=std::f64::consts::PI - 0.01);
        let (u, v) = axes_at_angle(rng, theta);
        let c = cross_oracle(&u.direction(), &v.direction());
        let s = Vector3::raw(c[0], c[1], c[2]);
        let n = s * (1.0 / s.norm());
        let expected =
            Quaternion::raw(-theta.cos(), 0.0, 0.0, 0.0) + (n * theta.sin()).to_quaternion();
        rel_q(&u.direction().quaternion_product(&v.direction()), &expected)
    });

    // Involution axioms.
    s.law("axiom 1: self-inverse", alg, |rng| {
        let (q, nu) = (quaternion(rng), axis(rng));
        rel_q(&involute(involute(q, &nu), &nu), &q)
    });
    s.law("axiom 2: additive", alg, |rng| {
        let (a, b, nu) = (quaternion(rng), quaternion(rng), axis(rng));
        rel_q(
            &involute(a + b, &nu),
            &(involute(a, &nu) + involute(b, &nu)),
        )
    });
    s.law("axiom 2: homogeneous", alg, |rng| {
        let (q, lambda, nu) = (quaternion(rng), scalar(rng), axis(rng));
        rel_q(&involute(q * lambda, &nu), &(involute(q, &nu) * lambda))
    });
    s.law("axiom 3: multiplicative, same order", alg, |rng| {
        let (a, b, nu) = (quaternion(rng), quaternion(rng), axis(rng));
        rel_q(
            &involute(a * b, &nu),
            &(involute(a, &nu) * involute(b, &nu)),
        )
    });
    s.expect_counterexample("q→ν₁qν₂ multiplicativity", |rng| {
        let (a, b) = (quaternion(rng), quaternion(rng));
        let n1 = unit_vector(rng).to_quaternion();
        let n2 = unit_vector(rng).to_quaternion();
        let f = |q: Quaternion| n1 * q * n2;
        rel_q(&f(a * b), &(f(a) * f(b)))
    });

    // Conjugate.
    s.law("conjugate reverses products", alg, |rng| {
        let (a, b) = (quaternion(rng), quaternion(rng));
        rel_q(&(a * b).conjugate(), &(b.conjugate() * a.conjugate()))
    });
    s.expect_counterexample("conjugate same-order multiplicativity", |rng| {
        let (a, b) = (quaternion(rng), quaternion(rng));
        rel_q(&(a * b).conjugate(), &(a.conjugate() * b.conjugate()))
    });
    s.law(
        "conjugate = half sum of triad involutions minus q",
        alg,
        |rng| {
            let (q, t) = (quaternion(rng), triad(rng));
            rel_q(&conjugate_via_involutions(q, &t), &q.conjugate())
        },
    );

    // Composition.
    s.law("perpendicular involutions commute", alg, |rng| {
        let q = quaternion(rng);
        let n1 = unit_vector(rng);
        let n2 = perpendicular_to(rng, &n1);
        let (a, b) = (n1.into(), n2.into());
        rel_q(
            &compose_involutions(q, &a, &b),
            &compose_involutions(q, &b, &a),
        )
    });
    s.law("double composition over triad", alg, |rng| {
        let (q, t) = (quaternion(rng), triad(rng));
        let [a, b, c] = t.axes();
        rel_q(&compose_involutions(q, &a, &b), &involute(q, &c))
    });
    s.law("triple composition is identity", alg, |rng| {
        let (q, t) = (quaternion(rng), triad(rng));
        rel_q(&involute_about_triad_product(q, &t), &q)
    });
    s.law("rotation by twice the axis angle", alg, |rng| {
        let theta = rng.random_range(0.01..=std::f64::consts::PI - 0.01);
        let (a, b) = axes_at_angle(rng, theta);
        let v = vector(rng);
        let c = cross_oracle(&a.direction(), &b.direction());
        let k = Vector3::raw(c[0], c[1], c[2]);
        let k = k * (1.0 / k.norm());
        let expected = rotate_oracle(&v, &k, 2.0 * theta);
        let out = compose_involutions(v.to_quaternion(), &a.into(), &b.into());
        rel_v(&out.vector(), &expected).max(out.scalar().abs())
    });

    // Geometry.
    s.law("involution fixes scalar part", alg, |rng| {
        let (q, nu) = (quaternion(rng), axis(rng));
        tolerance::relative(involute(q, &nu).scalar(), q.scalar())
    });
    s.law("involution preserves modulus", alg, |rng| {
        let (q, nu) = (quaternion(rng), axis(rng));
        tolerance::relative(involute(q, &nu).modulus(), q.modulus())
    });
    s.law("involution reflects in the axis line", alg, |rng| {
        let (v, nu) = (vector(rng), unit_vector(rng));
        let n = nu.direction();
        let d = 2.0 * dot_oracle(&v, &n);
        let expected = [d * n.x() - v.x(), d * n.y() - v.y(), d * n.z() - v.z()];
        rel_v(&reflect_vector(v, &nu.into()), &expected)
    });
    s.law(
        "three perpendicular involutions negate a vector",
        alg,
        |rng| {
            let (v, t) = (vector(rng).to_quaternion(), triad(rng));
            let [a, b, c] = t.axes();
            rel_q(&(involute(v, &a) + involute(v, &b) + involute(v, &c)), &-v)
        },
    );

    // Projection.
    s.law("split reconstructs and is orthogonal", alg, |rng| {
        let (v, nu) = (vector(rng), unit_vector(rng));
        let sp = split(v, &nu.into());
        let n = nu.direction();
        let recon = sp.reconstruct().max_abs_diff(&v) / v.norm().max(1.0);
        let across = sp.perpendicular.dot(&n).abs() / v.norm().max(1.0);
        let along = sp.parallel.cross(&n).norm() / v.norm().max(1.0);
        recon.max(across).max(along)
    });
    s.law("split matches dot-product projection", alg, |rng| {
        let (v, nu) = (vector(rng), unit_vector(rng));
        let sp = split(v, &nu.into());
        let n = nu.direction();
        let d = dot_oracle(&v, &n);
        let par = [d * n.x(), d * n.y(), d * n.z()];
        let perp = [v.x() - par[0], v.y() - par[1], v.z() - par[2]];
        rel_v(&sp.parallel, &par).max(rel_v(&sp.perpendicular, &perp))
    });
    s.law("split is idempotent on the parallel part", alg, |rng| {
        let (v, nu) = (vector(rng), axis(rng));
        let par = split(v, &nu).parallel;
        let again = split(par, &nu);
        (again.perpendicular.norm() / v.norm().max(1.0))
            .max(again.parallel.max_abs_diff(&par) / v.norm().max(1.0))
    });
    s.exact_law("scalar and vector parts match fields", |rng| {
        let q = quaternion(rng);
        let (a, b) = scalar_and_vector_parts(q);
        q.max_abs_diff(&Quaternion::raw(a, b.x(), b.y(), b.z()))
    });
    s.law("basis decomposition reconstructs", recon, |rng| {
        let (q, t) = (quaternion(rng), triad(rng));
        decompose(q, &t).reconstruct().max_abs_diff(&q)
    });
    s.law("basis coefficients equal dot products", alg, |rng| {
        let (q, t) = (quaternion(rng), triad(rng));
        let d = decompose(q, &t);
        let b = q.vector();
        let coeffs = [d.alpha(), d.beta(), d.gamma()];
        t.units()
            .iter()
            .zip(coeffs)
            .map(|(nu, c)| tolerance::relative(c, dot_oracle(&b, &nu.direction())))
            .fold(0.0, f64::max)
    });

    Report {
        trials,
        seed,
        results: s.results,
    }
}
