//! Finite Weyl algebra generated by the shift U and clock V with
//! `UV = omega VU`, `U^n = V^n = 1`, `omega = exp(2 pi i / n)`.
//!
//! Elements are stored over the basis `R(j,k) = tau^(-jk) U^j V^k` with
//! `tau = exp(pi i / n)`, so the half power of omega is single valued.
//! The matrix representation is `U e_k = e_(k-1)`, `V e_k = omega^k e_k`.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C;
use std::f64::consts::PI;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct WeylAlgebra {
    n: usize,
    /// `tau^m` for `m = 0..2n`.
    tau: Vec<C>,
    pub delta_x: f64,
    pub delta_p: f64,
}

/// Coefficients over `R(j,k)`, stored at `j * n + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylElement {
    n: usize,
    coeffs: Vec<C>,
}

impl WeylElement {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize, k: usize) -> C {
        self.coeffs[(j % self.n) * self.n + k % self.n]
    }

    fn check(&self, other: &WeylElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check(other)?;
        Ok(WeylElement {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.add(&other.scale(C::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C) -> WeylElement {
        WeylElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Largest coefficient modulus of the difference.
    pub fn distance(&self, other: &WeylElement) -> Result<f64> {
        Ok(self.sub(other)?.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max))
    }

    /// Coefficient of `R(0,0)`.
    pub fn scalar_part(&self) -> C {
        self.coeffs[0]
    }

    /// Matrix trace, `n` times the scalar part.
    pub fn trace(&self) -> C {
        self.coeffs[0] * self.n as f64
    }
}

impl WeylAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_scales(n, 1.0, 1.0)
    }

    pub fn with_scales(n: usize, delta_x: f64, delta_p: f64) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        let tau = (0..2 * n).map(|m| C::from_polar(1.0, PI * m as f64 / n as f64)).collect();
        Ok(WeylAlgebra {
            n,
            tau,
            delta_x,
            delta_p,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `tau^m` for any integer m.
    pub fn tau_pow(&self, m: i64) -> C {
        self.tau[m.rem_euclid(2 * self.n as i64) as usize]
    }

    /// `omega^m`.
    pub fn omega_pow(&self, m: i64) -> C {
        self.tau_pow(2 * m)
    }

    fn check(&self, x: &WeylElement) -> Result<()> {
        if x.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.n,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> WeylElement {
        WeylElement {
            n: self.n,
            coeffs: vec![C::new(0.0, 0.0); self.n * self.n],
        }
    }

    pub fn basis(&self, j: usize, k: usize) -> WeylElement {
        let mut x = self.zero();
        x.coeffs[(j % self.n) * self.n + k % self.n] = C::new(1.0, 0.0);
        x
    }

    pub fn identity(&self) -> WeylElement {
        self.basis(0, 0)
    }

    /// `U = R(1, 0)`.
    pub fn shift(&self) -> WeylElement {
        self.basis(1, 0)
    }

    /// `U^-1 = R(n-1, 0)`.
    pub fn shift_inverse(&self) -> WeylElement {
        self.basis(self.n - 1, 0)
    }

    /// `V = R(0, 1)`.
    pub fn clock(&self) -> WeylElement {
        self.basis(0, 1)
    }

    /// `V^-1 = R(0, n-1)`.
    pub fn clock_inverse(&self) -> WeylElement {
        self.basis(0, self.n - 1)
    }

    pub fn from_coeffs(&self, coeffs: Vec<C>) -> Result<WeylElement> {
        if coeffs.len() != self.n * self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n * self.n,
                got: coeffs.len(),
            });
        }
        Ok(WeylElement { n: self.n, coeffs })
    }

    /// Phase in `R(j,k) R(l,m) = phase R(j+l, k+m)`, indices in `0..n`.
    pub fn product_phase(&self, j: usize, k: usize, l: usize, m: usize) -> C {
        let n = self.n;
        let (jj, kk) = ((j + l) % n, (k + m) % n);
        let e = (jj * kk) as i64 - (j * k) as i64 - (l * m) as i64 - 2 * (k * l) as i64;
        self.tau_pow(e)
    }

    pub fn product(&self, x: &WeylElement, y: &WeylElement) -> Result<WeylElement> {
        self.check(x)?;
        self.check(y)?;
        let n = self.n;
        let mut out = self.zero();
        for (a, &cx) in x.coeffs.iter().enumerate() {
            if cx == C::new(0.0, 0.0) {
                continue;
            }
            let (j, k) = (a / n, a % n);
            for (b, &cy) in y.coeffs.iter().enumerate() {
                if cy == C::new(0.0, 0.0) {
                    continue;
                }
                let (l, m) = (b / n, b % n);
                let idx = ((j + l) % n) * n + (k + m) % n;
                out.coeffs[idx] += cx * cy * self.product_phase(j, k, l, m);
            }
        }
        Ok(out)
    }

    /// Hermitian adjoint: `R(j,k)^dagger = tau^(jk - JK) R(J,K)`, `J = -j`, `K = -k`.
    pub fn adjoint(&self, x: &WeylElement) -> Result<WeylElement> {
        self.check(x)?;
        let n = self.n;
        let mut out = self.zero();
        for (a, c) in x.coeffs.iter().enumerate() {
            let (j, k) = (a / n, a % n);
            let (jj, kk) = ((n - j) % n, (n - k) % n);
            out.coeffs[jj * n + kk] += c.conj() * self.tau_pow((j * k) as i64 - (jj * kk) as i64);
        }
        Ok(out)
    }

    /// n x n clock-and-shift representation.
    pub fn to_matrix(&self, x: &WeylElement) -> Result<DMatrix<C>> {
        self.check(x)?;
        let n = self.n;
        let mut m = DMatrix::zeros(n, n);
        for (a, &c) in x.coeffs.iter().enumerate() {
            if c == C::new(0.0, 0.0) {
                continue;
            }
            let (j, k) = (a / n, a % n);
            let pre = c * self.tau_pow(-((j * k) as i64));
            // U^j V^k e_col = omega^(k col) e_(col - j)
            for col in 0..n {
                m[((col + n - j) % n, col)] += pre * self.omega_pow((k * col) as i64);
            }
        }
        Ok(m)
    }

    /// Inverse of [`to_matrix`](Self::to_matrix): `c_jk = tr(R(j,k)^dagger M) / n`.
    pub fn from_matrix(&self, m: &DMatrix<C>) -> Result<WeylElement> {
        let n = self.n;
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.nrows(),
            });
        }
        let mut out = self.zero();
        for j in 0..n {
            for k in 0..n {
                // R(j,k)^dagger M has trace sum_col conj(R[row,col]) M[row,col]
                let mut acc = C::new(0.0, 0.0);
                for col in 0..n {
                    let row = (col + n - j) % n;
                    acc += (self.omega_pow((k * col) as i64) * self.tau_pow(-((j * k) as i64))).conj() * m[(row, col)];
                }
                out.coeffs[j * n + k] = acc / n as f64;
            }
        }
        Ok(out)
    }

    pub fn inverse(&self, x: &WeylElement) -> Result<WeylElement> {
        let m = self.to_matrix(x)?;
        let inv = m.try_inverse().ok_or(Error::Singular)?;
        self.from_matrix(&inv)
    }

    /// `x y x^-1`.
    pub fn conjugate(&self, x: &WeylElement, y: &WeylElement) -> Result<WeylElement> {
        let inv = self.inverse(x)?;
        self.product(&self.product(x, y)?, &inv)
    }

    /// `epsilon_j = (1/n) sum_k omega^(-jk) R(0,k)`, the x-points.
    pub fn idempotent_x(&self, j: usize) -> WeylElement {
        let n = self.n;
        let mut x = self.zero();
        for k in 0..n {
            x.coeffs[k] = self.omega_pow(-((j * k) as i64)) / n as f64;
        }
        x
    }

    /// `epsilon'_j = (1/n) sum_k omega^(-jk) R(k,0)`, the p-points.
    pub fn idempotent_p(&self, j: usize) -> WeylElement {
        let n = self.n;
        let mut x = self.zero();
        for k in 0..n {
            x.coeffs[k * n] = self.omega_pow(-((j * k) as i64)) / n as f64;
        }
        x
    }

    /// `T x T^-1` with `T = U^-1`, sending `epsilon_j` to `epsilon_(j+1)`.
    /// Conjugating by U itself runs the other way, to `epsilon_(j-1)`.
    pub fn translate_idempotent(&self, x: &WeylElement) -> Result<WeylElement> {
        self.product(&self.product(&self.shift_inverse(), x)?, &self.shift())
    }

    /// `V x V^-1`, sending `epsilon'_j` to `epsilon'_(j+1)`.
    pub fn translate_momentum(&self, x: &WeylElement) -> Result<WeylElement> {
        self.product(&self.product(&self.clock(), x)?, &self.clock_inverse())
    }

    /// `X = delta_x sum_k k epsilon_k`.
    pub fn position_element(&self) -> WeylElement {
        (0..self.n).fold(self.zero(), |acc, k| {
            acc.add(&self.idempotent_x(k).scale(C::new(self.delta_x * k as f64, 0.0)))
                .expect("same order")
        })
    }

    /// `P = delta_p sum_j j epsilon'_j`.
    pub fn momentum_element(&self) -> WeylElement {
        (0..self.n).fold(self.zero(), |acc, j| {
            acc.add(&self.idempotent_p(j).scale(C::new(self.delta_p * j as f64, 0.0)))
                .expect("same order")
        })
    }

    /// Ascending eigenvalues of a Hermitian element.
    pub fn hermitian_eigenvalues(&self, x: &WeylElement) -> Result<Vec<f64>> {
        let m = self.to_matrix(x)?;
        let herm = (&m - m.adjoint()).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if herm > 1e-10 {
            return Err(Error::Domain(format!("element is not Hermitian ({herm:e})")));
        }
        let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        Ok(ev)
    }

    /// Discrete Fourier element, matrix `Z_jk = omega^(-jk) / sqrt(n)`,
    /// with `epsilon'_j = Z^-1 epsilon_j Z`.
    pub fn fourier_element(&self) -> WeylElement {
        let n = self.n;
        let s = 1.0 / (n as f64).sqrt();
        let m = DMatrix::from_fn(n, n, |j, k| self.omega_pow(-((j * k) as i64)) * s);
        self.from_matrix(&m).expect("square of the right order")
    }

    /// `Z = n^(-3/2) sum_(i,j,k) omega^(j(i-k)) R(j-i, k)` taken literally.
    /// It is not unitary for n >= 3 and fails [`fourier_residual`](Self::fourier_residual).
    pub fn fourier_element_literal(&self) -> WeylElement {
        let n = self.n;
        let mut z = self.zero();
        let norm = (n as f64).powf(-1.5);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let phase = self.omega_pow(j as i64 * (i as i64 - k as i64));
                    z.coeffs[((j + n - i) % n) * n + k] += phase * norm;
                }
            }
        }
        z
    }

    /// `max_j |epsilon'_j - Z^-1 epsilon_j Z|`; infinite when Z is singular.
    pub fn fourier_residual(&self, z: &WeylElement) -> Result<f64> {
        let zinv = match self.inverse(z) {
            Ok(v) => v,
            Err(Error::Singular) => return Ok(f64::INFINITY),
            Err(e) => return Err(e),
        };
        let mut worst: f64 = 0.0;
        for j in 0..self.n {
            let c = self.product(&self.product(&zinv, &self.idempotent_x(j))?, z)?;
            worst = worst.max(c.distance(&self.idempotent_p(j))?);
        }
        Ok(worst)
    }

    /// `|Z Z^dagger - 1|` in the matrix representation.
    pub fn unitarity_residual(&self, z: &WeylElement) -> Result<f64> {
        let m = self.to_matrix(z)?;
        let d = &m * m.adjoint() - DMatrix::identity(self.n, self.n);
        Ok(d.iter().map(|c| c.norm()).fold(0.0, f64::max))
    }

    /// `|tr(epsilon_j epsilon'_l)|` for all `j, l`, row-major.
    pub fn overlaps(&self) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for j in 0..self.n {
            let ej = self.idempotent_x(j);
            for l in 0..self.n {
                out.push(self.product(&ej, &self.idempotent_p(l))?.trace().norm());
            }
        }
        Ok(out)
    }

    /// Moduli of the coefficients of `x` over `R(j,k)`, row-major.
    pub fn coefficient_profile(&self, x: &WeylElement) -> Result<Vec<f64>> {
        self.check(x)?;
        Ok(x.coeffs.iter().map(|c| c.norm()).collect())
    }
}

/// Largest entry modulus of `a - b`.
pub fn matrix_distance(a: &DMatrix<C>, b: &DMatrix<C>) -> f64 {
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bounds() {
        assert!(matches!(WeylAlgebra::new(1), Err(Error::InvalidOrder(1))));
        assert!(matches!(WeylAlgebra::new(65), Err(Error::InvalidOrder(65))));
    }

    #[test]
    fn matrix_round_trip() {
        let w = WeylAlgebra::new(5).unwrap();
        for j in 0..5 {
            for k in 0..5 {
                let b = w.basis(j, k);
                let back = w.from_matrix(&w.to_matrix(&b).unwrap()).unwrap();
                assert!(back.distance(&b).unwrap() < 1e-13);
            }
        }
    }

    #[test]
    fn commutation() {
        for n in 2..=8 {
            let w = WeylAlgebra::new(n).unwrap();
            let uv = w.product(&w.shift(), &w.clock()).unwrap();
            let vu = w.product(&w.clock(), &w.shift()).unwrap();
            assert!(uv.distance(&vu.scale(w.omega_pow(1))).unwrap() < 1e-14);
        }
    }

    #[test]
    fn structure_constants_match_matrices() {
        for n in 2..=8 {
            let w = WeylAlgebra::new(n).unwrap();
            for a in 0..n * n {
                for b in 0..n * n {
                    let (x, y) = (w.basis(a / n, a % n), w.basis(b / n, b % n));
                    let m = w.to_matrix(&w.product(&x, &y).unwrap()).unwrap();
                    let mm = w.to_matrix(&x).unwrap() * w.to_matrix(&y).unwrap();
                    assert!(matrix_distance(&m, &mm) < 1e-12, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn adjoint_matches_matrix() {
        let w = WeylAlgebra::new(6).unwrap();
        for a in 0..36 {
            let x = w.basis(a / 6, a % 6);
            let m = w.to_matrix(&w.adjoint(&x).unwrap()).unwrap();
            assert!(matrix_distance(&m, &w.to_matrix(&x).unwrap().adjoint()) < 1e-13);
        }
    }

    #[test]
    fn fourier_substitute_passes_literal_fails() {
        for n in 2..=12 {
            let w = WeylAlgebra::new(n).unwrap();
            let z = w.fourier_element();
            assert!(w.fourier_residual(&z).unwrap() < 1e-10, "n={n}");
            assert!(w.unitarity_residual(&z).unwrap() < 1e-12);
        }
        for n in 3..=12 {
            let w = WeylAlgebra::new(n).unwrap();
            assert!(w.fourier_residual(&w.fourier_element_literal()).unwrap() > 1e-6, "n={n}");
        }
    }

    #[test]
    fn x_eigenvalue_action() {
        let w = WeylAlgebra::with_scales(5, 0.5, 1.0).unwrap();
        let x = w.position_element();
        let e2 = w.idempotent_x(2);
        let lhs = w.product(&x, &e2).unwrap();
        assert!(lhs.distance(&e2.scale(C::new(1.0, 0.0))).unwrap() < 1e-14);
    }
}
