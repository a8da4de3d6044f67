//! Browser bindings for the demo page. Each export wraps a plain function
//! that native tests call directly.

use process_algebra::export::{self, Cell};
use process_algebra::lorentz;
use process_algebra::weyl::WeylAlgebra;
use process_algebra::{Multivector, Signature};
use std::sync::Arc;
use wasm_bindgen::prelude::*;

/// Boost of the event `(t, x)` by velocity `v`:
/// `[t', x', u', w', k]` with `u = t + x`, `w = t - x`.
pub fn boost_event(v: f64, t: f64, x: f64) -> Result<Vec<f64>, String> {
    let sig = Arc::new(Signature::lightcone());
    let b = lorentz::boost(v).map_err(|e| e.to_string())?;
    let event = Multivector::vector(&sig, &[t, x]).map_err(|e| e.to_string())?;
    let moved = b.apply(&event).map_err(|e| e.to_string())?;
    let (t2, x2) = (moved.coeff(0b01), moved.coeff(0b10));
    let k = lorentz::k_factor(v).map_err(|e| e.to_string())?;
    Ok(vec![t2, x2, t2 + x2, t2 - x2, k])
}

/// Flattened `(x, Q numeric, Q analytic)` triples for a Gaussian.
pub fn potential_profile(sigma: f64, mass: f64, sites: usize) -> Result<Vec<f64>, String> {
    let data = export::quantum_potential_profile(sigma, mass, sites).map_err(|e| e.to_string())?;
    Ok(data
        .rows
        .iter()
        .flatten()
        .filter_map(|c| match c {
            Cell::Num(v) => Some(*v),
            _ => None,
        })
        .collect())
}

/// Row-major `|tr(eps_j eps'_l)|`.
pub fn overlap_matrix(n: usize) -> Result<Vec<f64>, String> {
    let w = WeylAlgebra::new(n).map_err(|e| e.to_string())?;
    w.overlaps().map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn boost_light_cone(v: f64, t: f64, x: f64) -> Result<Vec<f64>, JsError> {
    boost_event(v, t, x).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn quantum_potential_profile(sigma: f64, mass: f64, sites: usize) -> Result<Vec<f64>, JsError> {
    potential_profile(sigma, mass, sites).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn weyl_overlaps(n: usize) -> Result<Vec<f64>, JsError> {
    overlap_matrix(n).map_err(|e| JsError::new(&e))
}
