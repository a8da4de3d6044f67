use super::scalar::Scalar;
use super::signature::Signature;
use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::Rng;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Dense element of a Clifford algebra, indexed by blade bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<T: Scalar = f64> {
    sig: Arc<Signature>,
    coeffs: Vec<T>,
}

fn same(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn mismatch(a: &Signature, b: &Signature) -> Error {
    Error::SignatureMismatch {
        left: format!("{a} {:?}", a.squares()),
        right: format!("{b} {:?}", b.squares()),
    }
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Multivector {
            sig: sig.clone(),
            coeffs: vec![T::zero(); sig.blade_count()],
        }
    }

    pub fn scalar(sig: &Arc<Signature>, value: T) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::scalar(sig, T::one())
    }

    /// Basis blade by bitmask.
    pub fn basis(sig: &Arc<Signature>, blade: usize) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[blade] = T::one();
        m
    }

    /// Product of labelled generators, e.g. `e(&sig, &[2, 1])` is e21 = -e12.
    pub fn e(sig: &Arc<Signature>, labels: &[usize]) -> Result<Self> {
        let (sign, blade) = sig.blade_from_labels(labels)?;
        let mut m = Self::zero(sig);
        m.coeffs[blade] = T::from_f64(sign as f64);
        Ok(m)
    }

    pub fn from_coeffs(sig: &Arc<Signature>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::DimensionMismatch {
                expected: sig.blade_count(),
                got: coeffs.len(),
            });
        }
        Ok(Multivector {
            sig: sig.clone(),
            coeffs,
        })
    }

    /// Vector `sum v_i e_i` over generators in bit order.
    pub fn vector(sig: &Arc<Signature>, components: &[T]) -> Result<Self> {
        if components.len() != sig.dim() {
            return Err(Error::DimensionMismatch {
                expected: sig.dim(),
                got: components.len(),
            });
        }
        let mut m = Self::zero(sig);
        for (i, &c) in components.iter().enumerate() {
            m.coeffs[1 << i] = c;
        }
        Ok(m)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: usize) -> T {
        self.coeffs[blade]
    }

    pub fn set(&mut self, blade: usize, value: T) {
        self.coeffs[blade] = value;
    }

    /// Coefficient of a labelled blade, with the reordering sign applied.
    pub fn get(&self, labels: &[usize]) -> Result<T> {
        let (sign, blade) = self.sig.blade_from_labels(labels)?;
        Ok(self.coeffs[blade] * T::from_f64(sign as f64))
    }

    fn map_blades(&self, f: impl Fn(usize) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| if f(b) { -c } else { c })
            .collect();
        Multivector {
            sig: self.sig.clone(),
            coeffs,
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if !same(&self.sig, &other.sig) {
            return Err(mismatch(&self.sig, &other.sig));
        }
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == T::zero() {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == T::zero() {
                    continue;
                }
                let (s, r) = self.sig.blade_product(a, b);
                if s > 0 {
                    out[r] += ca * cb;
                } else {
                    out[r] -= ca * cb;
                }
            }
        }
        Ok(Multivector {
            sig: self.sig.clone(),
            coeffs: out,
        })
    }

    /// Reversion: grade k picks up (-1)^(k(k-1)/2).
    pub fn reversion(&self) -> Self {
        self.map_blades(|b| (Signature::grade(b) / 2) % 2 == 1)
    }

    /// Grade involution: grade k picks up (-1)^k.
    pub fn grade_involution(&self) -> Self {
        self.map_blades(|b| Signature::grade(b) % 2 == 1)
    }

    /// Clifford conjugation: reversion composed with grade involution.
    pub fn clifford_conjugate(&self) -> Self {
        self.map_blades(|b| {
            let k = Signature::grade(b);
            ((k / 2) + k) % 2 == 1
        })
    }

    /// Complex conjugation of the coefficients (identity over the reals).
    pub fn coeff_conj(&self) -> Self {
        Multivector {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn grade_project(&self, k: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| {
                if Signature::grade(b) == k {
                    c
                } else {
                    T::zero()
                }
            })
            .collect();
        Multivector {
            sig: self.sig.clone(),
            coeffs,
        }
    }

    pub fn even_part(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| {
                if Signature::grade(b).is_multiple_of(2) {
                    c
                } else {
                    T::zero()
                }
            })
            .collect();
        Multivector {
            sig: self.sig.clone(),
            coeffs,
        }
    }

    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    /// trace = N * scalar part with N = 2^floor(n/2).
    pub fn trace(&self) -> T {
        self.coeffs[0] * T::from_f64(self.sig.trace_factor())
    }

    /// Largest coefficient modulus outside the scalar slot.
    pub fn non_scalar_norm(&self) -> f64 {
        self.coeffs[1..]
            .iter()
            .map(|c| c.modulus())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.modulus()).fold(0.0, f64::max)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.modulus() * c.modulus())
            .sum::<f64>()
            .sqrt()
    }

    /// Max coefficient distance; infinite when signatures differ.
    pub fn distance(&self, other: &Self) -> f64 {
        if !same(&self.sig, &other.sig) {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a - b).modulus())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn scale(&self, k: T) -> Self {
        Multivector {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(T::from_f64(k))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same(&self.sig, &other.sig) {
            return Err(mismatch(&self.sig, &other.sig));
        }
        Ok(Multivector {
            sig: self.sig.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// g~ / (g g~) when g g~ is a nonzero scalar.
    pub fn versor_inverse(&self) -> Result<Self> {
        let rev = self.reversion();
        let p = self.geometric_product(&rev)?;
        let s = p.scalar_part();
        let scale = s.modulus().max(1.0);
        let residual = p.non_scalar_norm();
        if residual > 1e-12 * scale || s.modulus() <= 1e-300 {
            return Err(Error::NotInvertible {
                residual: residual.max(if s.modulus() <= 1e-300 { 1.0 } else { 0.0 }),
            });
        }
        Ok(rev.scale(T::one() / s))
    }

    /// Same element over the complex numbers.
    pub fn complexify(&self) -> Multivector<Complex64> {
        Multivector {
            sig: self.sig.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Complex64::new(c.re(), c.im()))
                .collect(),
        }
    }
}

impl Multivector<f64> {
    /// Coefficients drawn uniformly from [-1, 1].
    pub fn random<R: Rng + ?Sized>(sig: &Arc<Signature>, rng: &mut R) -> Self {
        let coeffs = (0..sig.blade_count())
            .map(|_| rng.gen_range(-1.0..=1.0))
            .collect();
        Multivector {
            sig: sig.clone(),
            coeffs,
        }
    }
}

impl Multivector<Complex64> {
    pub fn random_complex<R: Rng + ?Sized>(sig: &Arc<Signature>, rng: &mut R) -> Self {
        let coeffs = (0..sig.blade_count())
            .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
            .collect();
        Multivector {
            sig: sig.clone(),
            coeffs,
        }
    }

    /// Real part when every imaginary coefficient is below `tol`.
    pub fn to_real(&self, tol: f64) -> Option<Multivector<f64>> {
        if self.coeffs.iter().any(|c| c.im.abs() > tol) {
            return None;
        }
        Some(Multivector {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|c| c.re).collect(),
        })
    }
}

/// Checked geometric product.
pub fn geometric_product<T: Scalar>(
    a: &Multivector<T>,
    b: &Multivector<T>,
) -> Result<Multivector<T>> {
    a.geometric_product(b)
}

/// g a g^-1 with the versor inverse of g.
pub fn sandwich<T: Scalar>(g: &Multivector<T>, a: &Multivector<T>) -> Result<Multivector<T>> {
    let inv = g.versor_inverse()?;
    g.geometric_product(a)?.geometric_product(&inv)
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, &c) in self.coeffs.iter().enumerate() {
            if c == T::zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == 0 {
                write!(f, "{}", c.format())?;
            } else {
                write!(f, "{}*{}", c.format(), self.sig.blade_name(b))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operators panic on signature mismatch; the `try_*` methods return errors.

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl<T: Scalar> Mul for &Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        self.geometric_product(rhs)
            .expect("signature mismatch in *")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        Multivector {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Multivector<T> {
            type Output = Multivector<T>;
            fn $m(self, rhs: Self) -> Multivector<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Multivector<T>> for Multivector<T> {
            type Output = Multivector<T>;
            fn $m(self, rhs: &Multivector<T>) -> Multivector<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Scalar> $tr<Multivector<T>> for &Multivector<T> {
            type Output = Multivector<T>;
            fn $m(self, rhs: Multivector<T>) -> Multivector<T> {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        -&self
    }
}
