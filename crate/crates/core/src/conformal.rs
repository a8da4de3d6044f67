//! Conformal C(2,4) in its 8x8 complex representation, bi-twistors and the
//! translation operator.
//!
//! Representation: `beta_mu = 1 (x) gamma_mu`, `beta4 = sigma1 (x) gamma5`,
//! `beta5 = sigma1 sigma3 (x) gamma5` with the Weyl basis
//! `gamma_mu = [[0, sigma-bar_mu], [sigma_mu, 0]]` and
//! `gamma5 = gamma0 gamma1 gamma2 gamma3` (so gamma5^2 = -1).
//! A bi-twistor stores `(lambda2, rho2)` in components 0..4 and
//! `(lambda1, rho1)` in components 4..8.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

type C = Complex64;
pub type Spinor2 = [C; 2];

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn pauli(k: usize) -> DMatrix<C> {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match k {
        0 => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        1 => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        3 => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => unreachable!(),
    }
}

fn kron(a: &DMatrix<C>, b: &DMatrix<C>) -> DMatrix<C> {
    a.kronecker(b)
}

fn block(tl: &DMatrix<C>, tr: &DMatrix<C>, bl: &DMatrix<C>, br: &DMatrix<C>) -> DMatrix<C> {
    let n = tl.nrows();
    let mut m = DMatrix::zeros(2 * n, 2 * n);
    m.view_mut((0, 0), (n, n)).copy_from(tl);
    m.view_mut((0, n), (n, n)).copy_from(tr);
    m.view_mut((n, 0), (n, n)).copy_from(bl);
    m.view_mut((n, n), (n, n)).copy_from(br);
    m
}

/// Dirac matrices gamma0..gamma3 in the Weyl basis.
pub fn gammas() -> [DMatrix<C>; 4] {
    let z = DMatrix::<C>::zeros(2, 2);
    std::array::from_fn(|mu| {
        let s = pauli(mu);
        let sbar = if mu == 0 { s.clone() } else { -s.clone() };
        block(&z, &sbar, &s, &z)
    })
}

pub fn gamma5() -> DMatrix<C> {
    let g = gammas();
    &g[0] * &g[1] * &g[2] * &g[3]
}

/// The six generators beta0..beta5 as 8x8 matrices.
#[derive(Clone, Debug)]
pub struct ConformalRep {
    pub betas: [DMatrix<C>; 6],
}

impl Default for ConformalRep {
    fn default() -> Self {
        Self::new()
    }
}

impl ConformalRep {
    pub fn new() -> Self {
        let g = gammas();
        let g5 = gamma5();
        let one = pauli(0);
        let s1 = pauli(1);
        let s1s3 = &s1 * pauli(3);
        let betas = std::array::from_fn(|a| match a {
            0..=3 => kron(&one, &g[a]),
            4 => kron(&s1, &g5),
            _ => kron(&s1s3, &g5),
        });
        ConformalRep { betas }
    }

    /// Metric signs beta_A^2 = (+, -, -, -, -, +).
    pub const SQUARES: [f64; 6] = [1.0, -1.0, -1.0, -1.0, -1.0, 1.0];

    /// `P_mu = beta_mu (beta4 - beta5) / 2`.
    pub fn momentum(&self, mu: usize) -> DMatrix<C> {
        (&self.betas[mu] * (&self.betas[4] - &self.betas[5])) * c(0.5, 0.0)
    }

    /// `U(dx) = 1 - dx^mu P_mu`.
    pub fn translation(&self, dx: [f64; 4]) -> DMatrix<C> {
        let mut u = DMatrix::<C>::identity(8, 8);
        for (mu, &d) in dx.iter().enumerate() {
            u -= self.momentum(mu) * c(d, 0.0);
        }
        u
    }

    /// `beta_A xi^A`.
    pub fn incidence(&self, xi: [f64; 6]) -> DMatrix<C> {
        let mut m = DMatrix::<C>::zeros(8, 8);
        for (b, &x) in self.betas.iter().zip(&xi) {
            m += b * c(x, 0.0);
        }
        m
    }
}

/// Eight-component conformal spinor split into its four Weyl blocks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiTwistor {
    pub lambda1: Spinor2,
    pub lambda2: Spinor2,
    pub rho1: Spinor2,
    pub rho2: Spinor2,
}

impl BiTwistor {
    pub fn to_vector(&self) -> DVector<C> {
        let v = [
            self.lambda2[0],
            self.lambda2[1],
            self.rho2[0],
            self.rho2[1],
            self.lambda1[0],
            self.lambda1[1],
            self.rho1[0],
            self.rho1[1],
        ];
        DVector::from_row_slice(&v)
    }

    pub fn from_vector(v: &DVector<C>) -> Result<Self> {
        if v.len() != 8 {
            return Err(Error::DimensionMismatch {
                expected: 8,
                got: v.len(),
            });
        }
        Ok(BiTwistor {
            lambda2: [v[0], v[1]],
            rho2: [v[2], v[3]],
            lambda1: [v[4], v[5]],
            rho1: [v[6], v[7]],
        })
    }

    /// Bi-twistor at the origin light cone: `(lambda1, 0, rho1, 0)`.
    pub fn at_origin(lambda1: Spinor2, rho1: Spinor2) -> Self {
        let z = [c(0.0, 0.0); 2];
        BiTwistor {
            lambda1,
            lambda2: z,
            rho1,
            rho2: z,
        }
    }

    pub fn max_abs_diff(&self, other: &BiTwistor) -> f64 {
        (self.to_vector() - other.to_vector()).camax()
    }
}

/// `x^mu = xi^mu / (xi4 + xi5)`.
pub fn projective_coords(xi: [f64; 6]) -> Result<[f64; 4]> {
    let d = xi[4] + xi[5];
    let scale = xi.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    if d.abs() <= 1e-15 * scale {
        return Err(Error::PointAtInfinity);
    }
    Ok([xi[0] / d, xi[1] / d, xi[2] / d, xi[3] / d])
}

fn sigma_dot(dx: [f64; 4], sign: f64) -> [[C; 2]; 2] {
    // dx0 + sign * sigma . dx
    let [t, x, y, z] = dx;
    [
        [c(t + sign * z, 0.0), c(sign * x, -sign * y)],
        [c(sign * x, sign * y), c(t - sign * z, 0.0)],
    ]
}

fn mul2(m: [[C; 2]; 2], v: Spinor2, k: C) -> Spinor2 {
    [
        (m[0][0] * v[0] + m[0][1] * v[1]) * k,
        (m[1][0] * v[0] + m[1][1] * v[1]) * k,
    ]
}

fn add2(a: Spinor2, b: Spinor2) -> Spinor2 {
    [a[0] + b[0], a[1] + b[1]]
}

/// Block form of `U(dx)`:
/// `lambda2 += -i (dx0 - sigma.dx) rho1`, `rho2 += i (dx0 + sigma.dx) lambda1`.
pub fn translate_bitwistor(psi: &BiTwistor, dx: [f64; 4]) -> BiTwistor {
    let i = c(0.0, 1.0);
    BiTwistor {
        lambda1: psi.lambda1,
        rho1: psi.rho1,
        lambda2: add2(psi.lambda2, mul2(sigma_dot(dx, -1.0), psi.rho1, -i)),
        rho2: add2(psi.rho2, mul2(sigma_dot(dx, 1.0), psi.lambda1, i)),
    }
}

/// Penrose twistor `(omega, pi)` pair carried by a bi-twistor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Twistor {
    pub upper: Spinor2,
    pub lower: Spinor2,
}

/// `(lambda1, rho2)` and `(lambda2, rho1)`.
pub fn split_twistors(psi: &BiTwistor) -> (Twistor, Twistor) {
    (
        Twistor {
            upper: psi.lambda1,
            lower: psi.rho2,
        },
        Twistor {
            upper: psi.lambda2,
            lower: psi.rho1,
        },
    )
}

/// Residuals of the four block relations carried by `(beta_A xi^A) Psi = 0`:
///
/// 1. `(xi4+xi5) lambda2 = -i (xi0 - sigma.xi) rho1`
/// 2. `(xi4-xi5) lambda1 = -i (xi0 - sigma.xi) rho2`
/// 3. `(xi4+xi5) rho2 = i (xi0 + sigma.xi) lambda1`
/// 4. `(xi4-xi5) rho1 = i (xi0 + sigma.xi) lambda2`
pub fn incidence_relations(xi: [f64; 6], psi: &BiTwistor) -> [f64; 4] {
    let i = c(0.0, 1.0);
    let x4 = [xi[0], xi[1], xi[2], xi[3]];
    let plus = c(xi[4] + xi[5], 0.0);
    let minus = c(xi[4] - xi[5], 0.0);
    let norm = |a: Spinor2, b: Spinor2| ((a[0] - b[0]).norm()).max((a[1] - b[1]).norm());
    let scale = |s: Spinor2, k: C| [s[0] * k, s[1] * k];
    [
        norm(scale(psi.lambda2, plus), mul2(sigma_dot(x4, -1.0), psi.rho1, -i)),
        norm(scale(psi.lambda1, minus), mul2(sigma_dot(x4, -1.0), psi.rho2, -i)),
        norm(scale(psi.rho2, plus), mul2(sigma_dot(x4, 1.0), psi.lambda1, i)),
        norm(scale(psi.rho1, minus), mul2(sigma_dot(x4, 1.0), psi.lambda2, i)),
    ]
}

/// Orthonormal basis of the kernel of `beta_A xi^A` (singular values below `tol`).
pub fn incidence_kernel(rep: &ConformalRep, xi: [f64; 6], tol: f64) -> Vec<BiTwistor> {
    let m = rep.incidence(xi);
    // kernel of M = eigenvectors of M^dagger M with zero eigenvalue
    let h = m.adjoint() * &m;
    let eig = nalgebra::SymmetricEigen::new(h);
    let mut out = Vec::new();
    for (k, &lam) in eig.eigenvalues.iter().enumerate() {
        if lam.abs() <= tol {
            let v: DVector<C> = eig.eigenvectors.column(k).into_owned();
            out.push(BiTwistor::from_vector(&v).expect("length 8"));
        }
    }
    out
}
