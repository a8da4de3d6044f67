use super::grid::{FieldGrid, Grid};
use crate::clifford::{Multivector, Signature};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::Arc;

/// External potential V(x).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Potential {
    Free,
    /// `m omega^2 |x|^2 / 2`
    Harmonic { mass: f64, omega: f64 },
}

impl Potential {
    pub fn at(&self, x: &[f64]) -> f64 {
        match *self {
            Potential::Free => 0.0,
            Potential::Harmonic { mass, omega } => {
                0.5 * mass * omega * omega * x.iter().map(|v| v * v).sum::<f64>()
            }
        }
    }
}

/// Analytic Schrodinger solutions (hbar = 1). Multi-dimensional packets are
/// products of identical 1D packets along each axis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveSpec {
    /// `A exp(i (k.x - omega t))` with `omega = |k|^2 / 2m`.
    PlaneWave { amplitude: f64, k: Vec<f64>, mass: f64 },
    /// Free Gaussian packet of initial width sigma centred at x0 with mean
    /// wavenumber k0.
    Gaussian { x0: f64, k0: f64, sigma: f64, mass: f64 },
    /// Coherent state of the oscillator with initial centre q0 and momentum p0.
    Coherent { q0: f64, p0: f64, omega: f64, mass: f64 },
}

impl WaveSpec {
    pub fn mass(&self) -> f64 {
        match *self {
            WaveSpec::PlaneWave { mass, .. }
            | WaveSpec::Gaussian { mass, .. }
            | WaveSpec::Coherent { mass, .. } => mass,
        }
    }

    pub fn potential(&self) -> Potential {
        match *self {
            WaveSpec::Coherent { omega, mass, .. } => Potential::Harmonic { mass, omega },
            _ => Potential::Free,
        }
    }

    /// Angular frequency of the plane wave.
    pub fn plane_wave_omega(k: &[f64], mass: f64) -> f64 {
        k.iter().map(|v| v * v).sum::<f64>() / (2.0 * mass)
    }

    pub fn value(&self, x: &[f64], t: f64) -> Complex64 {
        let i = Complex64::i();
        match self {
            WaveSpec::PlaneWave { amplitude, k, mass } => {
                let omega = Self::plane_wave_omega(k, *mass);
                let phase: f64 = k.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() - omega * t;
                (i * phase).exp() * *amplitude
            }
            WaveSpec::Gaussian { x0, k0, sigma, mass } => x
                .iter()
                .map(|&xi| gaussian_1d(xi, t, *x0, *k0, *sigma, *mass))
                .product(),
            WaveSpec::Coherent { q0, p0, omega, mass } => x
                .iter()
                .map(|&xi| coherent_1d(xi, t, *q0, *p0, *omega, *mass))
                .product(),
        }
    }

    /// `psi = a + e b` in the Schrodinger algebra C(0,1) at every site.
    pub fn sample(&self, grid: &Grid, t: f64) -> FieldGrid {
        let sig = Arc::new(Signature::schrodinger());
        let values = (0..grid.len())
            .map(|idx| {
                let z = self.value(&grid.coords(idx), t);
                let mut m = Multivector::scalar(&sig, z.re);
                m.set(1, z.im);
                m
            })
            .collect();
        FieldGrid {
            grid: grid.clone(),
            values,
        }
    }

    pub fn sample_series(&self, grid: &Grid, t0: f64, dt: f64, count: usize) -> TimeSeries {
        TimeSeries {
            dt,
            t0,
            slices: (0..count).map(|n| self.sample(grid, t0 + n as f64 * dt)).collect(),
        }
    }
}

fn gaussian_1d(x: f64, t: f64, x0: f64, k0: f64, sigma: f64, m: f64) -> Complex64 {
    let i = Complex64::i();
    let alpha = Complex64::new(1.0, t / (2.0 * m * sigma * sigma));
    let d = x - x0;
    let exponent = (-d * d / (4.0 * sigma * sigma) + i * k0 * d - i * k0 * k0 * t / (2.0 * m)) / alpha;
    (2.0 * PI * sigma * sigma).powf(-0.25) * alpha.powf(-0.5) * exponent.exp()
}

fn coherent_1d(x: f64, t: f64, q0: f64, p0: f64, w: f64, m: f64) -> Complex64 {
    let i = Complex64::i();
    let q = q0 * (w * t).cos() + p0 / (m * w) * (w * t).sin();
    let p = p0 * (w * t).cos() - m * w * q0 * (w * t).sin();
    let exponent = -m * w / 2.0 * (x - q).powi(2) + i * (p * (x - q / 2.0) - w * t / 2.0);
    (m * w / PI).powf(0.25) * exponent.exp()
}

/// Equally spaced time slices of one field.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub dt: f64,
    pub t0: f64,
    pub slices: Vec<FieldGrid>,
}
