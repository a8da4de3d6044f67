//! Spinors as elements of minimal left ideals, their bilinear densities and
//! the null vectors they generate.

use crate::clifford::{Multivector, Scalar, Signature};
use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

const TOL: f64 = 1e-12;

/// `(1 + u) / 2`; requires `u^2 = 1`.
pub fn make_idempotent<T: Scalar>(u: &Multivector<T>) -> Result<Multivector<T>> {
    let sq = u * u;
    let one = Multivector::one(u.signature());
    let residual = sq.distance(&one);
    if residual > TOL * u.max_abs().max(1.0).powi(2) {
        return Err(Error::NotUnitSquare { residual });
    }
    Ok((one + u).scale_real(0.5))
}

pub fn is_idempotent<T: Scalar>(e: &Multivector<T>, tol: f64) -> bool {
    (e * e).approx_eq(e, tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// `psi * eps` (left) or `eps * conj(psi)` (right).
#[derive(Clone, Debug, PartialEq)]
pub struct IdealElement<T: Scalar = f64> {
    pub psi: Multivector<T>,
    pub idempotent: Multivector<T>,
    pub side: Side,
}

impl<T: Scalar> IdealElement<T> {
    pub fn new(psi: Multivector<T>, idempotent: Multivector<T>, side: Side) -> Result<Self> {
        if psi.signature() != idempotent.signature() {
            return Err(Error::SignatureMismatch {
                left: psi.signature().to_string(),
                right: idempotent.signature().to_string(),
            });
        }
        let residual = (&idempotent * &idempotent).distance(&idempotent);
        if residual > TOL {
            return Err(Error::NotIdempotent { residual });
        }
        Ok(IdealElement {
            psi,
            idempotent,
            side,
        })
    }

    pub fn value(&self) -> Multivector<T> {
        match self.side {
            Side::Left => &self.psi * &self.idempotent,
            Side::Right => &self.idempotent * self.psi.clifford_conjugate(),
        }
    }

    /// Partner in the opposite ideal.
    pub fn partner(&self) -> IdealElement<T> {
        IdealElement {
            psi: self.psi.clone(),
            idempotent: self.idempotent.clone(),
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
        }
    }

    /// `rho_hat = psi eps conj(psi)`.
    pub fn density(&self) -> Multivector<T> {
        &self.psi * &self.idempotent * self.psi.clifford_conjugate()
    }

    /// Same spinor after the frame change `eps -> g eps g^-1`, `psi -> g psi g^-1`.
    pub fn transformed(&self, g: &Multivector<T>) -> Result<IdealElement<T>> {
        let inv = g.versor_inverse()?;
        Ok(IdealElement {
            psi: g * &self.psi * &inv,
            idempotent: g * &self.idempotent * &inv,
            side: self.side,
        })
    }
}

/// Density `rho_hat = Psi_L Psi_R` of a left ideal element.
pub fn density<T: Scalar>(psi: &IdealElement<T>) -> Result<Multivector<T>> {
    if psi.side != Side::Left {
        return Err(Error::WrongIdempotent("density needs a left ideal element".into()));
    }
    Ok(psi.density())
}

/// Even element `g0 + g1 e23 + g2 e31 + g3 e12` of the Pauli algebra.
pub fn pauli_even(g: [f64; 4]) -> Multivector {
    let sig = Arc::new(Signature::pauli());
    let mut m = Multivector::zero(&sig);
    m.set(0, g[0]);
    m.set(0b110, g[1]); // e23
    m.set(0b101, -g[2]); // e31 = -e13
    m.set(0b011, g[3]); // e12
    m
}

/// `(1 + e3) / 2` in C(3,0).
pub fn pauli_idempotent() -> Multivector {
    let sig = Arc::new(Signature::pauli());
    make_idempotent(&Multivector::basis(&sig, 0b100)).unwrap()
}

/// Hopf map through the algebra: `psi (1 + e3) psi~ = v0 + v1 e1 + v2 e2 + v3 e3`.
pub fn hopf_map(g: [f64; 4]) -> Result<[f64; 4]> {
    let psi = pauli_even(g);
    let sig = psi.signature().clone();
    let one_e3 = Multivector::one(&sig) + Multivector::basis(&sig, 0b100);
    let v = &psi * &one_e3 * psi.reversion();
    let residual = (v.grade_project(2) + v.grade_project(3)).max_abs();
    if residual > 1e-12 * v.max_abs().max(1.0) {
        return Err(Error::Domain(format!("Hopf image has grade 2/3 part {residual:e}")));
    }
    Ok([v.coeff(0), v.coeff(0b001), v.coeff(0b010), v.coeff(0b100)])
}

/// Closed-form Hopf map.
pub fn hopf_closed_form(g: [f64; 4]) -> [f64; 4] {
    let [g0, g1, g2, g3] = g;
    [
        g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3,
        2.0 * (g1 * g3 - g0 * g2),
        2.0 * (g0 * g1 + g2 * g3),
        g0 * g0 - g1 * g1 - g2 * g2 + g3 * g3,
    ]
}

/// Null vector `v0 e0 + v.e` in C(3,1) with e0^2 = -1.
pub fn lift_null_vector(v: [f64; 4]) -> Result<Multivector> {
    let sig = Arc::new(Signature::null_lift());
    let m = Multivector::vector(&sig, &v)?;
    let sq = (&m * &m).max_abs();
    let scale = v.iter().map(|x| x * x).fold(0.0, f64::max).max(1.0);
    if sq > 1e-10 * scale {
        return Err(Error::NotNull { residual: sq });
    }
    Ok(m)
}

/// Null vector from a two-spinor: the Hermitian matrix
/// `[[t+z, x-iy], [x+iy, t-z]] = 2 psi psi^dagger`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PenroseVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl PenroseVector {
    pub fn as_array(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let c = |re, im| Complex64::new(re, im);
        [
            [c(self.t + self.z, 0.0), c(self.x, -self.y)],
            [c(self.x, self.y), c(self.t - self.z, 0.0)],
        ]
    }

    /// t^2 - x^2 - y^2 - z^2 (the determinant of the matrix).
    pub fn interval(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }
}

pub fn penrose_matrix(psi1: Complex64, psi2: Complex64) -> PenroseVector {
    let c = psi1 * psi2.conj();
    PenroseVector {
        t: psi1.norm_sqr() + psi2.norm_sqr(),
        x: 2.0 * c.re,
        y: -2.0 * c.im,
        z: psi1.norm_sqr() - psi2.norm_sqr(),
    }
}

/// Linear map between the even coordinates `g` of a Pauli spinor and the
/// real coordinates `(a, b, c, d)` of the ideal form
/// `(a + e123 d)(1+e3)/2 + (c + e123 b)(e1 + e13)/2`, with
/// `psi1 = a + i d`, `psi2 = c + i b`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliDictionary {
    /// `g = g_from_abcd * (a, b, c, d)`.
    pub g_from_abcd: [[f64; 4]; 4],
    pub abcd_from_g: [[f64; 4]; 4],
}

impl PauliDictionary {
    /// Solves `pauli_even(g) (1+e3)/2 = ideal form(a,b,c,d)` by least squares
    /// on the unit inputs.
    pub fn solve() -> Result<Self> {
        let sig = Arc::new(Signature::pauli());
        let eps = pauli_idempotent();
        let e = |blade: usize| Multivector::<f64>::basis(&sig, blade);
        let one = Multivector::one(&sig);
        let e123 = e(0b111);
        let e1_e13 = (e(0b001) + e(0b101)).scale(0.5);
        let ideal = |abcd: [f64; 4]| -> Multivector {
            let [a, b, c, d] = abcd;
            (one.scale(a) + e123.scale(d)) * &eps + (one.scale(c) + e123.scale(b)) * &e1_e13
        };
        let nb = sig.blade_count();
        let mut design = DMatrix::<f64>::zeros(nb, 4);
        for k in 0..4 {
            let mut g = [0.0; 4];
            g[k] = 1.0;
            let col = pauli_even(g) * &eps;
            for r in 0..nb {
                design[(r, k)] = col.coeff(r);
            }
        }
        let normal = design.transpose() * &design;
        let inv = normal.try_inverse().ok_or(Error::Singular)?;
        let pinv = inv * design.transpose();
        let mut g_from_abcd = [[0.0; 4]; 4];
        for k in 0..4 {
            let mut abcd = [0.0; 4];
            abcd[k] = 1.0;
            let target = ideal(abcd);
            let rhs = DVector::from_iterator(nb, target.coeffs().iter().copied());
            let g = &pinv * &rhs;
            let back = pauli_even([g[0], g[1], g[2], g[3]]) * &eps;
            let residual = back.distance(&target);
            if residual > 1e-12 {
                return Err(Error::Domain(format!("ideal form not reachable: {residual:e}")));
            }
            for (row, gi) in g_from_abcd.iter_mut().zip(g.iter()) {
                row[k] = clean(*gi);
            }
        }
        let m = nalgebra::Matrix4::from_fn(|i, j| g_from_abcd[i][j]);
        let minv = m.try_inverse().ok_or(Error::Singular)?;
        let mut abcd_from_g = [[0.0; 4]; 4];
        for (i, row) in abcd_from_g.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = clean(minv[(i, j)]);
            }
        }
        Ok(PauliDictionary {
            g_from_abcd,
            abcd_from_g,
        })
    }

    pub fn psi_from_g(&self, g: [f64; 4]) -> (Complex64, Complex64) {
        let abcd = apply4(&self.abcd_from_g, g);
        let [a, b, c, d] = abcd;
        (Complex64::new(a, d), Complex64::new(c, b))
    }

    pub fn g_from_psi(&self, psi1: Complex64, psi2: Complex64) -> [f64; 4] {
        apply4(&self.g_from_abcd, [psi1.re, psi2.im, psi2.re, psi1.im])
    }

    /// Left ideal element `psi (1+e3)/2` for the column spinor `(psi1, psi2)`.
    pub fn ideal_element(&self, psi1: Complex64, psi2: Complex64) -> IdealElement {
        IdealElement {
            psi: pauli_even(self.g_from_psi(psi1, psi2)),
            idempotent: pauli_idempotent(),
            side: Side::Left,
        }
    }
}

fn clean(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < 1e-12 {
        r + 0.0
    } else {
        x
    }
}

fn apply4(m: &[[f64; 4]; 4], v: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(&v).map(|(a, b)| a * b).sum();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chirality {
    Plus,
    Minus,
}

/// Pseudoscalar e_1...e_n of the signature.
pub fn pseudoscalar<T: Scalar>(sig: &Arc<Signature>) -> Multivector<T> {
    Multivector::basis(sig, sig.blade_count() - 1)
}

/// `(1 +- i e_top) / 2` applied from the left.
pub fn chirality_projector<T: Scalar>(sig: &Arc<Signature>, c: Chirality) -> Result<Multivector<T>> {
    let i = T::imaginary_unit().ok_or(Error::RealRing)?;
    let gamma = pseudoscalar::<T>(sig).scale(i);
    let residual = (&gamma * &gamma).distance(&Multivector::one(sig));
    if residual > TOL {
        return Err(Error::NotUnitSquare { residual });
    }
    let sign = match c {
        Chirality::Plus => 1.0,
        Chirality::Minus => -1.0,
    };
    Ok((Multivector::one(sig) + gamma.scale_real(sign)).scale_real(0.5))
}

pub fn chirality_project<T: Scalar>(psi: &Multivector<T>, c: Chirality) -> Result<Multivector<T>> {
    Ok(chirality_projector(psi.signature(), c)? * psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_from_unit_square() {
        let p = Arc::new(Signature::pauli());
        let e = make_idempotent(&Multivector::<f64>::basis(&p, 0b100)).unwrap();
        assert!(is_idempotent(&e, 1e-15));
        let q = Arc::new(Signature::quaternion());
        assert!(matches!(
            make_idempotent(&Multivector::<f64>::basis(&q, 1)),
            Err(Error::NotUnitSquare { .. })
        ));
    }

    #[test]
    fn schrodinger_density() {
        let s = Arc::new(Signature::schrodinger());
        let (a, b) = (0.3, -1.2);
        let mut psi = Multivector::scalar(&s, a);
        psi.set(1, b);
        let el = IdealElement::new(psi, Multivector::one(&s), Side::Left).unwrap();
        let rho = density(&el).unwrap();
        assert!((rho.scalar_part() - (a * a + b * b)).abs() < 1e-15);
        assert_eq!(rho.coeff(1), 0.0);
    }

    #[test]
    fn hopf_routes_agree() {
        let g = [0.3, -0.7, 1.1, 0.2];
        let a = hopf_map(g).unwrap();
        let b = hopf_closed_form(g);
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() < 1e-14, "{a:?} {b:?}");
        }
        let m = lift_null_vector(a).unwrap();
        assert!((&m * &m).max_abs() < 1e-12);
        assert!(matches!(lift_null_vector([1.0, 0.0, 0.0, 0.5]), Err(Error::NotNull { .. })));
    }

    #[test]
    fn penrose_examples() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(penrose_matrix(one, zero).as_array(), [1.0, 0.0, 0.0, 1.0]);
        assert_eq!(penrose_matrix(one, one).as_array(), [2.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn dictionary_entries() {
        let d = PauliDictionary::solve().unwrap();
        // g0 = a, g1 = b, g2 = -c, g3 = d
        let expected = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        assert_eq!(d.g_from_abcd, expected);
    }

    #[test]
    fn real_ring_rejected_for_chirality() {
        let d = Arc::new(Signature::dirac());
        let psi = Multivector::<f64>::one(&d);
        assert_eq!(chirality_project(&psi, Chirality::Plus), Err(Error::RealRing));
    }
}
