//! Rotations, boosts and Bondi k-calculus in the light-cone algebra, plus
//! infinitesimal Lorentz transformations induced by SL(2,C) on spinors.

use crate::clifford::{sandwich, Multivector, Signature};
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VersorKind {
    Rotation,
    Boost,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Versor {
    pub element: Multivector,
    pub kind: VersorKind,
}

impl Versor {
    /// g a g^-1
    pub fn apply(&self, a: &Multivector) -> Result<Multivector> {
        sandwich(&self.element, a)
    }

    pub fn inverse(&self) -> Result<Versor> {
        Ok(Versor {
            element: self.element.versor_inverse()?,
            kind: self.kind,
        })
    }
}

/// `cos(t/2) + B sin(t/2)` when B^2 = -1, `cosh(t/2) + B sinh(t/2)` when
/// B^2 = +1. The plane is normalized first.
pub fn rotor(plane: &Multivector, angle: f64) -> Result<Versor> {
    let scale = plane.max_abs().max(1e-300);
    let off_grade = (plane - &plane.grade_project(2)).max_abs();
    if off_grade > 1e-12 * scale {
        return Err(Error::NotABlade { residual: off_grade });
    }
    let sq = plane * plane;
    let blade_residual = sq.non_scalar_norm();
    if blade_residual > 1e-12 * scale * scale {
        return Err(Error::NotABlade {
            residual: blade_residual,
        });
    }
    let s = sq.scalar_part();
    if s.abs() <= 1e-12 * scale * scale {
        return Err(Error::NullPlane { square: s });
    }
    let unit = plane.scale(1.0 / s.abs().sqrt());
    let one = Multivector::one(plane.signature());
    let half = angle / 2.0;
    let (element, kind) = if s < 0.0 {
        (one.scale(half.cos()) + unit.scale(half.sin()), VersorKind::Rotation)
    } else {
        (one.scale(half.cosh()) + unit.scale(half.sinh()), VersorKind::Boost)
    };
    Ok(Versor { element, kind })
}

/// Bondi factor sqrt((1+v)/(1-v)).
pub fn k_factor(v: f64) -> Result<f64> {
    if !(v.abs() < 1.0) {
        return Err(Error::Domain(format!("|v| = {} must be below 1", v.abs())));
    }
    Ok(((1.0 + v) / (1.0 - v)).sqrt())
}

/// Rapidity atanh(v).
pub fn rapidity(v: f64) -> Result<f64> {
    k_factor(v).map(f64::ln)
}

/// Boost along e01 = e0 e1 in C(1,1); for v > 0 it scales e0+e1 by 1/k and
/// e0-e1 by k.
pub fn boost(v: f64) -> Result<Versor> {
    let sig = Arc::new(Signature::lightcone());
    boost_in(&sig, v)
}

/// Boost in any algebra whose first two generators are time-like and
/// space-like (C(1,1), C(1,3)).
pub fn boost_in(sig: &Arc<Signature>, v: f64) -> Result<Versor> {
    let lambda = rapidity(v)?;
    rotor(&Multivector::basis(sig, 0b11), lambda)
}

/// Relativistic velocity addition (v1 + v2) / (1 + v1 v2).
pub fn add_velocities(v1: f64, v2: f64) -> Result<f64> {
    k_factor(v1)?;
    k_factor(v2)?;
    Ok((v1 + v2) / (1.0 + v1 * v2))
}

/// `(t + x, t - x)`.
pub fn lightcone_coords(t: f64, x: f64) -> (f64, f64) {
    (t + x, t - x)
}

pub fn from_lightcone(u: f64, w: f64) -> (f64, f64) {
    ((u + w) / 2.0, (u - w) / 2.0)
}

/// Event located by a radar pulse sent at t1 and received back at t2.
pub fn radar_event(t1: f64, t2: f64) -> (f64, f64) {
    ((t2 + t1) / 2.0, (t2 - t1) / 2.0)
}

/// Light-cone coordinates seen by an observer with Bondi factor k:
/// `(u, w) -> (u / k, k w)`.
pub fn lorentz_lightcone(k: f64, (u, w): (f64, f64)) -> (f64, f64) {
    (u / k, k * w)
}

/// Spacetime vector `t e0 + x e1` in C(1,1).
pub fn event_vector(sig: &Arc<Signature>, t: f64, x: f64) -> Multivector {
    let mut m = Multivector::zero(sig);
    m.set(0b01, t);
    m.set(0b10, x);
    m
}

/// Infinitesimal SL(2,C) element `1 + eps [[alpha, beta], [gamma, delta]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

impl SpinorParams {
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64, delta: Complex64) -> Self {
        SpinorParams {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    /// Parameters of the conjugate spinor that induce the same Lorentz
    /// generator: `A = conj(delta), B = -conj(gamma), C = -conj(beta),
    /// D = conj(alpha)`.
    pub fn conjugate_partner(&self) -> SpinorParams {
        SpinorParams {
            alpha: self.delta.conj(),
            beta: -self.gamma.conj(),
            gamma: -self.beta.conj(),
            delta: self.alpha.conj(),
        }
    }

    /// Inverse of `conjugate_partner`.
    pub fn from_conjugate(p: &SpinorParams) -> SpinorParams {
        SpinorParams {
            alpha: p.delta.conj(),
            beta: -p.gamma.conj(),
            gamma: -p.beta.conj(),
            delta: p.alpha.conj(),
        }
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.alpha, self.beta], [self.gamma, self.delta]]
    }

    pub fn trace(&self) -> Complex64 {
        self.alpha + self.delta
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Representation {
    /// Acts on (xi, eta) building x = (|xi|^2+|eta|^2, ...).
    Fundamental,
    /// Acts on (sigma, tau) building y = (-(|sigma|^2+|tau|^2), ...).
    Conjugate,
}

/// Generator `omega` with `dx/d eps = omega . x` (row-major) for trace-free
/// parameters.
pub fn infinitesimal_lorentz(params: &SpinorParams, rep: Representation) -> [[f64; 4]; 4] {
    let p = match rep {
        Representation::Fundamental => *params,
        Representation::Conjugate => SpinorParams::from_conjugate(params),
    };
    let (al, be, ga, de) = (p.alpha, p.beta, p.gamma, p.delta);
    let i = Complex64::i();
    let a1 = (i * (-be + be.conj() - ga + ga.conj())).re / 2.0;
    let a2 = (be + be.conj() - ga - ga.conj()).re / 2.0;
    let a3 = (i * (-al + al.conj() + de - de.conj())).re / 2.0;
    let a4 = (-be - be.conj() - ga - ga.conj()).re / 2.0;
    let a5 = (i * (-be + be.conj() + ga - ga.conj())).re / 2.0;
    let a6 = (-al - al.conj() + de + de.conj()).re / 2.0;
    [
        [0.0, -a4, -a5, -a6],
        [-a4, 0.0, a3, -a2],
        [-a5, -a3, 0.0, a1],
        [-a6, a2, -a1, 0.0],
    ]
}

/// Null vector `(|xi|^2+|eta|^2, 2 Re(xi eta*), -2 Im(xi eta*), |xi|^2-|eta|^2)`.
pub fn spinor_null_vector(xi: Complex64, eta: Complex64) -> [f64; 4] {
    let c = xi * eta.conj();
    [
        xi.norm_sqr() + eta.norm_sqr(),
        2.0 * c.re,
        -2.0 * c.im,
        xi.norm_sqr() - eta.norm_sqr(),
    ]
}

/// Conjugate-spinor vector `(-(|s|^2+|t|^2), 2 Re(s t*), -2 Im(s t*), |s|^2-|t|^2)`.
pub fn conjugate_null_vector(sigma: Complex64, tau: Complex64) -> [f64; 4] {
    let mut y = spinor_null_vector(sigma, tau);
    y[0] = -y[0];
    y
}

/// Spinor moved by `1 + eps M`.
pub fn apply_infinitesimal(
    params: &SpinorParams,
    eps: f64,
    (xi, eta): (Complex64, Complex64),
) -> (Complex64, Complex64) {
    let m = params.matrix();
    (
        xi + (m[0][0] * xi + m[0][1] * eta) * eps,
        eta + (m[1][0] * xi + m[1][1] * eta) * eps,
    )
}

pub fn mat_vec(m: &[[f64; 4]; 4], x: &[f64; 4]) -> [f64; 4] {
    let mut y = [0.0; 4];
    for (yi, row) in y.iter_mut().zip(m) {
        *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn quarter_turn_rotor() {
        let p = Arc::new(Signature::pauli());
        let e12 = Multivector::e(&p, &[1, 2]).unwrap();
        let g = rotor(&e12, FRAC_PI_2).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let expected = (Multivector::one(&p) + e12.clone()).scale(r);
        assert!(g.element.approx_eq(&expected, 1e-15));
        assert_eq!(g.kind, VersorKind::Rotation);
    }

    #[test]
    fn quaternion_quarter_turn_sends_e1_to_e2() {
        let q = Arc::new(Signature::quaternion());
        let e1 = Multivector::e(&q, &[1]).unwrap();
        let e2 = Multivector::e(&q, &[2]).unwrap();
        let g = rotor(&Multivector::e(&q, &[1, 2]).unwrap(), FRAC_PI_2).unwrap();
        assert!(g.apply(&e1).unwrap().approx_eq(&e2, 1e-15));
    }

    #[test]
    fn k_examples() {
        assert!((k_factor(0.6).unwrap() - 2.0).abs() < 1e-15);
        assert!(k_factor(1.0).is_err());
        assert!(k_factor(-1.5).is_err());
        assert!(k_factor(f64::NAN).is_err());
    }

    #[test]
    fn boost_halves_forward_null_vector() {
        let g = boost(0.6).unwrap();
        assert_eq!(g.kind, VersorKind::Boost);
        let sig = g.element.signature().clone();
        let n = event_vector(&sig, 1.0, 1.0);
        let out = g.apply(&n).unwrap();
        assert!(out.approx_eq(&n.scale(0.5), 1e-15));
        let m = event_vector(&sig, 1.0, -1.0);
        assert!(g.apply(&m).unwrap().approx_eq(&m.scale(2.0), 1e-14));
    }

    #[test]
    fn rejects_bad_planes() {
        let d = Arc::new(Signature::dirac());
        let e01 = Multivector::e(&d, &[0, 1]).unwrap();
        let e23 = Multivector::e(&d, &[2, 3]).unwrap();
        assert!(matches!(rotor(&(&e01 + &e23), 1.0), Err(Error::NotABlade { .. })));
        let e02 = Multivector::e(&d, &[0, 2]).unwrap();
        let e12 = Multivector::e(&d, &[1, 2]).unwrap();
        // (e01 + e12) is a blade e1 (e2 - e0) with null square
        assert!(matches!(rotor(&(&e01 + &e12), 1.0), Err(Error::NullPlane { .. })));
        assert!(rotor(&e02, 1.0).is_ok());
        let e1 = Multivector::e(&d, &[1]).unwrap();
        assert!(matches!(rotor(&e1, 1.0), Err(Error::NotABlade { .. })));
    }

    #[test]
    fn radar_and_lightcone() {
        let (t, x) = radar_event(1.0, 3.0);
        assert_eq!((t, x), (2.0, 1.0));
        assert_eq!(lightcone_coords(t, x), (3.0, 1.0));
        let k = 2.0;
        let (u, w) = lorentz_lightcone(k, (3.0, 1.0));
        // t1' = k t1 and t2 = k t2'
        assert_eq!(w, k * 1.0);
        assert_eq!(3.0, k * u);
    }
}
