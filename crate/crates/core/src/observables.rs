//! Coefficient extraction by traces, expectation values against a density
//! element and the Pauli spin vector.

use crate::clifford::{Multivector, Scalar, Signature};
use crate::error::{Error, Result};
use crate::spinor::{pauli_idempotent, IdealElement, Side};
use std::sync::Arc;

/// `b^A = tr(B rev(e_A)) / (N scalar(e_A rev(e_A)))`.
pub fn extract_coefficient<T: Scalar>(b: &Multivector<T>, blade: usize) -> T {
    let sig = b.signature();
    let ea = Multivector::<T>::basis(sig, blade);
    let rev = ea.reversion();
    let norm = (&ea * &rev).scalar_part().re();
    (b * &rev).trace() / T::from_f64(sig.trace_factor() * norm)
}

/// All coefficients of an element recovered through traces.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearInvariantSet<T: Scalar = f64> {
    pub signature: Arc<Signature>,
    pub coefficients: Vec<T>,
}

impl<T: Scalar> BilinearInvariantSet<T> {
    pub fn extract(b: &Multivector<T>) -> Self {
        BilinearInvariantSet {
            signature: b.signature().clone(),
            coefficients: (0..b.signature().blade_count())
                .map(|blade| extract_coefficient(b, blade))
                .collect(),
        }
    }

    /// `sum_A b^A e_A`.
    pub fn reconstruct(&self) -> Multivector<T> {
        Multivector::from_coeffs(&self.signature, self.coefficients.clone()).expect("length matches signature")
    }

    /// Coefficients of grade `k` with their blade index.
    pub fn grade(&self, k: u32) -> Vec<(usize, T)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(blade, _)| Signature::grade(*blade) == k)
            .map(|(blade, &c)| (blade, c))
            .collect()
    }
}

/// `<B> = tr(B rho)`, divided by `tr(rho)` when `normalize` is set.
pub fn expectation<T: Scalar>(b: &Multivector<T>, rho: &Multivector<T>, normalize: bool) -> Result<T> {
    let raw = b.geometric_product(rho)?.trace();
    if !normalize {
        return Ok(raw);
    }
    let tr = rho.trace();
    if tr.modulus() < 1e-300 {
        return Err(Error::ZeroTrace);
    }
    Ok(raw / tr)
}

fn check_pauli_left(psi: &IdealElement) -> Result<()> {
    if psi.side != Side::Left {
        return Err(Error::WrongIdempotent("spin needs a left ideal element".into()));
    }
    let eps = pauli_idempotent();
    if psi.idempotent.signature() != eps.signature() || psi.idempotent.distance(&eps) > 1e-12 {
        return Err(Error::WrongIdempotent(format!(
            "spin vector is defined for (1 + e3)/2, got {}",
            psi.idempotent
        )));
    }
    Ok(())
}

/// `rho S = psi e3 psi~` as `(rho S1, rho S2, rho S3)`.
pub fn spin_vector(psi: &IdealElement) -> Result<[f64; 3]> {
    check_pauli_left(psi)?;
    let sig = psi.psi.signature().clone();
    let v = &psi.psi * Multivector::basis(&sig, 0b100) * psi.psi.reversion();
    Ok([v.coeff(0b001), v.coeff(0b010), v.coeff(0b100)])
}

/// `rho = scalar(psi psi~)`.
pub fn pauli_density(psi: &IdealElement) -> Result<f64> {
    check_pauli_left(psi)?;
    Ok((&psi.psi * psi.psi.reversion()).scalar_part())
}

/// `<S_j> = rho S_j / (2 rho)`, so that spin up along e3 gives `+1/2`.
pub fn spin_expectation(psi: &IdealElement) -> Result<[f64; 3]> {
    let s = spin_vector(psi)?;
    let rho = pauli_density(psi)?;
    if rho.abs() < 1e-300 {
        return Err(Error::ZeroTrace);
    }
    Ok(s.map(|c| c / (2.0 * rho)))
}

/// Sign between the left and right derivative terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeForm {
    Symmetric,
    Antisymmetric,
}

/// `1/2 { tr[B (d psi) eps conj(psi)] +- tr[B~ psi eps conj(d psi)] }`.
pub fn differential_expectation<T: Scalar>(
    b: &Multivector<T>,
    psi: &Multivector<T>,
    dpsi: &Multivector<T>,
    eps: &Multivector<T>,
    form: DerivativeForm,
) -> Result<T> {
    for m in [psi, dpsi, eps] {
        if m.coeffs().iter().any(|c| !c.modulus().is_finite()) {
            return Err(Error::Domain("non-finite derivative input".into()));
        }
    }
    let left = b
        .geometric_product(dpsi)?
        .geometric_product(eps)?
        .geometric_product(&psi.clifford_conjugate())?
        .trace();
    let right = b
        .reversion()
        .geometric_product(psi)?
        .geometric_product(eps)?
        .geometric_product(&dpsi.clifford_conjugate())?
        .trace();
    let half = T::from_f64(0.5);
    Ok(match form {
        DerivativeForm::Symmetric => (left + right) * half,
        DerivativeForm::Antisymmetric => (left - right) * half,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::PauliDictionary;
    use num_complex::Complex64;

    #[test]
    fn extract_simple() {
        let sig = Arc::new(Signature::pauli());
        let b = Multivector::scalar(&sig, 3.0) + Multivector::basis(&sig, 1).scale(2.0);
        assert_eq!(extract_coefficient(&b, 0), 3.0);
        assert_eq!(extract_coefficient(&b, 1), 2.0);
    }

    #[test]
    fn bivector_sign_in_dirac() {
        let sig = Arc::new(Signature::dirac());
        let (_, blade) = sig.blade_from_labels(&[1, 2]).unwrap();
        let b = Multivector::<f64>::basis(&sig, blade).scale(5.0);
        let tr = (&b * &Multivector::basis(&sig, blade)).trace();
        assert!((extract_coefficient(&b, blade) - (-tr / 4.0)).abs() < 1e-12);
    }

    #[test]
    fn spin_up_and_down() {
        let d = PauliDictionary::solve().unwrap();
        let up = d.ideal_element(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(spin_expectation(&up).unwrap(), [0.0, 0.0, 0.5]);
        let down = d.ideal_element(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        assert_eq!(spin_expectation(&down).unwrap(), [0.0, 0.0, -0.5]);
        let x = d.ideal_element(Complex64::new(0.5f64.sqrt(), 0.0), Complex64::new(0.5f64.sqrt(), 0.0));
        let s = spin_expectation(&x).unwrap();
        assert!((s[0] - 0.5).abs() < 1e-12 && s[1].abs() < 1e-12 && s[2].abs() < 1e-12);
    }

    #[test]
    fn wrong_idempotent_rejected() {
        let sig = Arc::new(Signature::pauli());
        let eps = crate::spinor::make_idempotent(&Multivector::basis(&sig, 1)).unwrap();
        let el = IdealElement::new(Multivector::one(&sig), eps, Side::Left).unwrap();
        assert!(matches!(spin_vector(&el), Err(Error::WrongIdempotent(_))));
    }

    #[test]
    fn zero_trace() {
        let sig = Arc::new(Signature::pauli());
        let rho = Multivector::<f64>::basis(&sig, 1);
        assert!(matches!(
            expectation(&Multivector::one(&sig), &rho, true),
            Err(Error::ZeroTrace)
        ));
    }
}
