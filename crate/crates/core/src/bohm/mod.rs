//! Bohmian quantities of Schrodinger fields written in the algebra C(0,1),
//! where the generator e plays the role of i: `psi = a + e b = R exp(e S)`.
//!
//! Everything is discretised with second-order central differences, so
//! residuals built from analytic solutions shrink like h^2 + dt^2.

mod grid;
mod waves;

pub use grid::{Boundary, FieldGrid, Grid, ScalarField};
pub use waves::{Potential, TimeSeries, WaveSpec};

use crate::clifford::{Multivector, Scalar, Signature};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::Arc;

/// Amplitudes below this are treated as nodes.
pub const NODE_TOLERANCE: f64 = 1e-12;

/// Residuals at or below this level are rounding noise.
pub const RESIDUAL_FLOOR: f64 = 1e-9;

/// `D f = sum_j e_j d_j f` for a frame of vectors, one per grid axis.
#[derive(Clone, Debug)]
pub struct DiracOperator<T: Scalar = f64> {
    pub frame: Vec<Multivector<T>>,
}

impl<T: Scalar> DiracOperator<T> {
    pub fn new(frame: Vec<Multivector<T>>) -> Self {
        DiracOperator { frame }
    }

    /// Frame from generator labels, e.g. `[1, 2, 3]` in C(3,0).
    pub fn from_labels(sig: &Arc<Signature>, labels: &[usize]) -> Result<Self> {
        let frame = labels
            .iter()
            .map(|&l| Multivector::e(sig, &[l]))
            .collect::<Result<_>>()?;
        Ok(DiracOperator { frame })
    }

    fn check(&self, f: &FieldGrid<T>) -> Result<()> {
        if self.frame.len() != f.grid.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.grid.dim(),
                got: self.frame.len(),
            });
        }
        Ok(())
    }

    /// `sum_j e_j (d_j f)`.
    pub fn left(&self, f: &FieldGrid<T>) -> Result<FieldGrid<T>> {
        self.check(f)?;
        let mut out: Vec<Multivector<T>> = f.values.iter().map(|v| Multivector::zero(v.signature())).collect();
        for (axis, e) in self.frame.iter().enumerate() {
            let d = f.derivative(axis);
            for (o, v) in out.iter_mut().zip(&d.values) {
                *o = o.try_add(&e.geometric_product(v)?)?;
            }
        }
        Ok(FieldGrid {
            grid: f.grid.clone(),
            values: out,
        })
    }

    /// `sum_j (d_j f) e_j`.
    pub fn right(&self, f: &FieldGrid<T>) -> Result<FieldGrid<T>> {
        self.check(f)?;
        let mut out: Vec<Multivector<T>> = f.values.iter().map(|v| Multivector::zero(v.signature())).collect();
        for (axis, e) in self.frame.iter().enumerate() {
            let d = f.derivative(axis);
            for (o, v) in out.iter_mut().zip(&d.values) {
                *o = o.try_add(&v.geometric_product(e)?)?;
            }
        }
        Ok(FieldGrid {
            grid: f.grid.clone(),
            values: out,
        })
    }

    /// Scalar squares `e_j^2`, the weights of `D^2` on smooth fields.
    pub fn metric_weights(&self) -> Result<Vec<f64>> {
        self.frame
            .iter()
            .map(|e| {
                let sq = e * e;
                if sq.non_scalar_norm() > 1e-12 {
                    Err(Error::NotUnitSquare {
                        residual: sq.non_scalar_norm(),
                    })
                } else {
                    Ok(sq.scalar_part().re())
                }
            })
            .collect()
    }
}

pub fn dirac_left<T: Scalar>(f: &FieldGrid<T>, frame: &[Multivector<T>]) -> Result<FieldGrid<T>> {
    DiracOperator::new(frame.to_vec()).left(f)
}

pub fn dirac_right<T: Scalar>(f: &FieldGrid<T>, frame: &[Multivector<T>]) -> Result<FieldGrid<T>> {
    DiracOperator::new(frame.to_vec()).right(f)
}

/// Amplitude and unwrapped phase of a C(0,1) field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarField {
    pub amplitude: ScalarField,
    pub phase: ScalarField,
    /// Sites where the amplitude is below [`NODE_TOLERANCE`].
    pub nodes: Vec<usize>,
}

impl PolarField {
    pub fn density(&self) -> ScalarField {
        self.amplitude.map(|r| r * r)
    }

    pub fn is_node(&self, idx: usize) -> bool {
        self.amplitude.values[idx] < NODE_TOLERANCE
    }
}

fn wrap(phi: f64) -> f64 {
    let w = (phi + PI).rem_euclid(2.0 * PI) - PI;
    if w == -PI {
        PI
    } else {
        w
    }
}

fn check_schrodinger<T: Scalar>(psi: &FieldGrid<T>) -> Result<()> {
    let sig = psi.values[0].signature();
    if sig.squares() != [-1] {
        return Err(Error::SignatureMismatch {
            left: sig.to_string(),
            right: "C(0,1)".into(),
        });
    }
    Ok(())
}

/// `R = sqrt(a^2 + b^2)`, `S = atan2(b, a)` unwrapped along the last axis
/// and, for the first site of each line, along the preceding axes.
pub fn decompose_polar(psi: &FieldGrid) -> Result<PolarField> {
    check_schrodinger(psi)?;
    let g = &psi.grid;
    let raw: Vec<f64> = psi.values.iter().map(|v| v.coeff(1).atan2(v.coeff(0))).collect();
    let amplitude: Vec<f64> = psi.values.iter().map(|v| v.coeff(0).hypot(v.coeff(1))).collect();
    let mut phase = raw.clone();
    let unwrap_axis = |idx: usize| -> Option<usize> {
        let mi = g.multi_index(idx);
        (0..g.dim()).rev().find(|&a| mi[a] > 0)
    };
    for idx in 0..g.len() {
        if let Some(axis) = unwrap_axis(idx) {
            let prev = idx - g.len() / g.shape[..=axis].iter().product::<usize>();
            phase[idx] = phase[prev] + wrap(raw[idx] - raw[prev]);
        }
    }
    let nodes = amplitude
        .iter()
        .enumerate()
        .filter(|(_, &r)| r < NODE_TOLERANCE)
        .map(|(i, _)| i)
        .collect();
    Ok(PolarField {
        amplitude: ScalarField {
            grid: g.clone(),
            values: amplitude,
        },
        phase: ScalarField {
            grid: g.clone(),
            values: phase,
        },
        nodes,
    })
}

/// Bohm momentum `P = grad S`.
pub fn bohm_momentum(polar: &PolarField) -> Vec<ScalarField> {
    polar.phase.gradient()
}

/// Momentum from the bilinear `psi(x+h) conj(psi(x-h)) = R R' exp(e dS)`,
/// which needs no unwrapping.
pub fn momentum_bilinear(psi: &FieldGrid) -> Result<Vec<ScalarField>> {
    check_schrodinger(psi)?;
    let g = &psi.grid;
    (0..g.dim())
        .map(|axis| {
            let values = (0..g.len())
                .map(|i| match (g.neighbor(i, axis, -1), g.neighbor(i, axis, 1)) {
                    (Some(m), Some(p)) => {
                        let z = &psi.values[p] * psi.values[m].clifford_conjugate();
                        Ok(z.coeff(1).atan2(z.coeff(0)) / (2.0 * g.spacing))
                    }
                    _ => Ok(f64::NAN),
                })
                .collect::<Result<_>>()?;
            Ok(ScalarField {
                grid: g.clone(),
                values,
            })
        })
        .collect()
}

fn check_slice(series: &TimeSeries, n: usize) -> Result<()> {
    if series.slices.len() < 3 {
        return Err(Error::InsufficientSlices {
            needed: 3,
            got: series.slices.len(),
        });
    }
    if n == 0 || n + 1 >= series.slices.len() {
        return Err(Error::Domain(format!(
            "slice {n} has no neighbours in a series of {}",
            series.slices.len()
        )));
    }
    check_schrodinger(&series.slices[n])
}

/// Bohm energy `E = -dS/dt` at slice `n` from the wrapped phase difference.
pub fn bohm_energy(series: &TimeSeries, n: usize) -> Result<ScalarField> {
    check_slice(series, n)?;
    let before = decompose_polar(&series.slices[n - 1])?;
    let after = decompose_polar(&series.slices[n + 1])?;
    let values = before
        .phase
        .values
        .iter()
        .zip(&after.phase.values)
        .map(|(s0, s1)| -wrap(s1 - s0) / (2.0 * series.dt))
        .collect();
    Ok(ScalarField {
        grid: series.slices[n].grid.clone(),
        values,
    })
}

/// Energy from the bilinear `psi(t+dt) conj(psi(t-dt))` in the algebra.
pub fn energy_bilinear(series: &TimeSeries, n: usize) -> Result<ScalarField> {
    check_slice(series, n)?;
    let (a, b) = (&series.slices[n - 1], &series.slices[n + 1]);
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(p0, p1)| {
            let z = p1 * p0.clifford_conjugate();
            -z.coeff(1).atan2(z.coeff(0)) / (2.0 * series.dt)
        })
        .collect();
    Ok(ScalarField {
        grid: a.grid.clone(),
        values,
    })
}

/// `rho E = (da/dt) b - a (db/dt)` with central time differences.
pub fn energy_density_first_order(series: &TimeSeries, n: usize) -> Result<ScalarField> {
    check_slice(series, n)?;
    let (p0, p, p1) = (&series.slices[n - 1], &series.slices[n], &series.slices[n + 1]);
    let dt2 = 2.0 * series.dt;
    let values = (0..p.grid.len())
        .map(|i| {
            let da = (p1.values[i].coeff(0) - p0.values[i].coeff(0)) / dt2;
            let db = (p1.values[i].coeff(1) - p0.values[i].coeff(1)) / dt2;
            da * p.values[i].coeff(1) - p.values[i].coeff(0) * db
        })
        .collect();
    Ok(ScalarField {
        grid: p.grid.clone(),
        values,
    })
}

/// Real field with masked sites.
#[derive(Clone, Debug, PartialEq)]
pub struct MaskedField {
    pub grid: Grid,
    pub values: Vec<Option<f64>>,
}

impl MaskedField {
    pub fn max_abs(&self, keep: impl Fn(usize) -> bool) -> f64 {
        self.values
            .iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .filter_map(|(_, v)| v.map(f64::abs))
            .fold(0.0, f64::max)
    }
}

/// `Q = -lap(R) / (2 m R)`, masked where R < [`NODE_TOLERANCE`].
pub fn quantum_potential(polar: &PolarField, mass: f64) -> MaskedField {
    let lap = polar.amplitude.laplacian();
    let values = polar
        .amplitude
        .values
        .iter()
        .zip(&lap.values)
        .map(|(&r, &l)| (r >= NODE_TOLERANCE).then(|| -l / (2.0 * mass * r)))
        .collect();
    MaskedField {
        grid: polar.amplitude.grid.clone(),
        values,
    }
}

/// `Q(x)` for the amplitude `exp(-x^2 / 4 sigma^2)`.
pub fn gaussian_quantum_potential(x: f64, sigma: f64, mass: f64) -> f64 {
    1.0 / (4.0 * mass * sigma * sigma) - x * x / (8.0 * mass * sigma.powi(4))
}

/// `H psi = -lap(psi) / 2m + V psi` with the compact Laplacian.
pub fn hamiltonian(psi: &FieldGrid, potential: &Potential, mass: f64) -> FieldGrid {
    let lap = psi.laplacian();
    let values = lap
        .values
        .iter()
        .zip(&psi.values)
        .enumerate()
        .map(|(i, (l, p))| l.scale(-0.5 / mass) + p.scale(potential.at(&psi.grid.coords(i))))
        .collect();
    FieldGrid {
        grid: psi.grid.clone(),
        values,
    }
}

/// `e d(rho_hat)/dt - [(H psi) conj(psi) - psi conj(H psi)]` at slice `n`.
pub fn liouville_residual(series: &TimeSeries, n: usize, potential: &Potential, mass: f64) -> Result<FieldGrid> {
    check_slice(series, n)?;
    let p = &series.slices[n];
    let sig = p.values[0].signature().clone();
    let e = Multivector::<f64>::basis(&sig, 1);
    let h = hamiltonian(p, potential, mass);
    let rho = |f: &FieldGrid, i: usize| &f.values[i] * f.values[i].clifford_conjugate();
    let values = (0..p.grid.len())
        .map(|i| {
            let drho = (rho(&series.slices[n + 1], i) - rho(&series.slices[n - 1], i)).scale(0.5 / series.dt);
            let comm = &h.values[i] * p.values[i].clifford_conjugate() - &p.values[i] * h.values[i].clifford_conjugate();
            &e * drho - comm
        })
        .collect();
    Ok(FieldGrid {
        grid: p.grid.clone(),
        values,
    })
}

/// Continuity residual `d(rho)/dt + div(rho grad S / m)` at slice `n`.
pub fn conservation_residual(series: &TimeSeries, n: usize, mass: f64) -> Result<ScalarField> {
    check_slice(series, n)?;
    let polar = decompose_polar(&series.slices[n])?;
    let rho0 = decompose_polar(&series.slices[n - 1])?.density();
    let rho1 = decompose_polar(&series.slices[n + 1])?.density();
    let rho = polar.density();
    let grad = bohm_momentum(&polar);
    let mut values: Vec<f64> = rho1
        .values
        .iter()
        .zip(&rho0.values)
        .map(|(a, b)| (a - b) / (2.0 * series.dt))
        .collect();
    for (axis, ds) in grad.iter().enumerate() {
        let flux = ScalarField {
            grid: rho.grid.clone(),
            values: rho.values.iter().zip(&ds.values).map(|(r, s)| r * s / mass).collect(),
        };
        for (v, d) in values.iter_mut().zip(flux.derivative(axis).values) {
            *v += d;
        }
    }
    Ok(ScalarField {
        grid: rho.grid,
        values,
    })
}

/// Quantum Hamilton-Jacobi residual `dS/dt + |grad S|^2/2m + Q + V` at slice `n`.
pub fn qhj_residual(series: &TimeSeries, n: usize, potential: &Potential, mass: f64) -> Result<MaskedField> {
    check_slice(series, n)?;
    let polar = decompose_polar(&series.slices[n])?;
    let energy = bohm_energy(series, n)?;
    let grad = bohm_momentum(&polar);
    let q = quantum_potential(&polar, mass);
    let g = &polar.phase.grid;
    let values = (0..g.len())
        .map(|i| {
            q.values[i].map(|qi| {
                let p2: f64 = grad.iter().map(|d| d.values[i] * d.values[i]).sum();
                -energy.values[i] + p2 / (2.0 * mass) + qi + potential.at(&g.coords(i))
            })
        })
        .collect();
    Ok(MaskedField {
        grid: g.clone(),
        values,
    })
}

/// Same residual from the anticommutator form
/// `e[(dpsi/dt) conj(psi) - psi conj(dpsi/dt)] - [(H psi) conj(psi) + psi conj(H psi)]`
/// divided by `-2 rho`.
pub fn qhj_residual_algebraic(series: &TimeSeries, n: usize, potential: &Potential, mass: f64) -> Result<MaskedField> {
    check_slice(series, n)?;
    let p = &series.slices[n];
    let sig = p.values[0].signature().clone();
    let e = Multivector::<f64>::basis(&sig, 1);
    let h = hamiltonian(p, potential, mass);
    let values = (0..p.grid.len())
        .map(|i| {
            let psi = &p.values[i];
            let rho = (psi * psi.clifford_conjugate()).scalar_part();
            if rho.sqrt() < NODE_TOLERANCE {
                return None;
            }
            let dpsi = (&series.slices[n + 1].values[i] - &series.slices[n - 1].values[i]).scale(0.5 / series.dt);
            let lhs = &e * (&dpsi * psi.clifford_conjugate() - psi * dpsi.clifford_conjugate());
            let rhs = &h.values[i] * psi.clifford_conjugate() + psi * h.values[i].clifford_conjugate();
            Some((lhs - rhs).scalar_part() / (-2.0 * rho))
        })
        .collect();
    Ok(MaskedField {
        grid: p.grid.clone(),
        values,
    })
}

/// `sum rho h^d`.
pub fn total_probability(psi: &FieldGrid) -> Result<f64> {
    Ok(decompose_polar(psi)?.density().integral())
}

/// Max-norm residuals over interior sites (two steps from clamped edges)
/// and interior time slices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub liouville: f64,
    pub conservation: f64,
    pub qhj: f64,
    pub qhj_algebraic: f64,
}

impl Residuals {
    pub fn as_array(&self) -> [f64; 4] {
        [self.liouville, self.conservation, self.qhj, self.qhj_algebraic]
    }

    pub const NAMES: [&'static str; 4] = ["liouville", "conservation", "qhj", "qhj_algebraic"];
}

pub fn bohm_residuals(series: &TimeSeries, potential: &Potential, mass: f64) -> Result<Residuals> {
    if series.slices.len() < 3 {
        return Err(Error::InsufficientSlices {
            needed: 3,
            got: series.slices.len(),
        });
    }
    let g = series.slices[0].grid.clone();
    let interior = |i: usize| g.is_interior(i, 2);
    let mut r = Residuals {
        liouville: 0.0,
        conservation: 0.0,
        qhj: 0.0,
        qhj_algebraic: 0.0,
    };
    for n in 1..series.slices.len() - 1 {
        r.liouville = r.liouville.max(liouville_residual(series, n, potential, mass)?.max_norm(interior));
        let c = conservation_residual(series, n, mass)?;
        r.conservation = r.conservation.max(
            c.values
                .iter()
                .enumerate()
                .filter(|(i, _)| interior(*i))
                .map(|(_, v)| v.abs())
                .fold(0.0, f64::max),
        );
        r.qhj = r.qhj.max(qhj_residual(series, n, potential, mass)?.max_abs(interior));
        r.qhj_algebraic = r
            .qhj_algebraic
            .max(qhj_residual_algebraic(series, n, potential, mass)?.max_abs(interior));
    }
    Ok(r)
}

/// One level of a refinement study.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub level: usize,
    pub h: f64,
    pub dt: f64,
    pub residuals: Residuals,
}

/// Setup of a refinement study on the cube `[lo, hi]^dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudySetup {
    pub wave: WaveSpec,
    pub dim: usize,
    pub lo: f64,
    pub hi: f64,
    /// Sites per axis at level 0.
    pub sites: usize,
    pub dt: f64,
    /// Time of the middle slice.
    pub t: f64,
    pub boundary: Boundary,
}

impl StudySetup {
    pub fn grid(&self, level: usize) -> Result<Grid> {
        let n = (self.sites - 1) * (1 << level) + 1;
        let h = (self.hi - self.lo) / match self.boundary {
            Boundary::Clamped => (n - 1) as f64,
            Boundary::Periodic => n as f64,
        };
        let shape = vec![n; self.dim];
        Grid::new(&shape, h, &vec![self.lo; self.dim], self.boundary)
    }
}

/// Residuals on successive grids with `h` and `dt` halved together.
pub fn convergence_study(setup: &StudySetup, levels: usize) -> Result<Vec<ConvergenceRow>> {
    (0..levels)
        .map(|level| {
            let grid = setup.grid(level)?;
            let dt = setup.dt / (1 << level) as f64;
            let series = setup.wave.sample_series(&grid, setup.t - dt, dt, 3);
            let residuals = bohm_residuals(&series, &setup.wave.potential(), setup.wave.mass())?;
            Ok(ConvergenceRow {
                level,
                h: grid.spacing,
                dt,
                residuals,
            })
        })
        .collect()
}

/// Ratios of successive values.
pub fn ratios(values: &[f64]) -> Vec<f64> {
    values.windows(2).map(|w| w[0] / w[1]).collect()
}

/// Least-squares slope of log(residual) against log(h).
pub fn loglog_slope(h: &[f64], r: &[f64]) -> f64 {
    let xs: Vec<f64> = h.iter().map(|v| v.ln()).collect();
    let ys: Vec<f64> = r.iter().map(|v| v.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Second-order convergence: every ratio within `4 +- 0.8`, or every value
/// at or below [`RESIDUAL_FLOOR`].
pub fn second_order(values: &[f64]) -> bool {
    if values.iter().all(|&v| v <= RESIDUAL_FLOOR) {
        return true;
    }
    ratios(values).iter().all(|r| (r - 4.0).abs() <= 0.8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_range() {
        assert!((wrap(3.0 * PI) - PI).abs() < 1e-12);
        assert!((wrap(-0.5) + 0.5).abs() < 1e-15);
        assert!((wrap(2.0 * PI + 0.1) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn insufficient_slices() {
        let g = Grid::interval(0.0, 1.0, 11).unwrap();
        let w = WaveSpec::PlaneWave {
            amplitude: 1.0,
            k: vec![1.0],
            mass: 1.0,
        };
        let s = w.sample_series(&g, 0.0, 0.1, 2);
        assert!(matches!(
            bohm_residuals(&s, &Potential::Free, 1.0),
            Err(Error::InsufficientSlices { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn phase_is_unwrapped() {
        let g = Grid::interval(0.0, 20.0, 401).unwrap();
        let w = WaveSpec::PlaneWave {
            amplitude: 1.0,
            k: vec![1.3],
            mass: 1.0,
        };
        let polar = decompose_polar(&w.sample(&g, 0.0)).unwrap();
        for i in 1..g.len() {
            let ds = polar.phase.values[i] - polar.phase.values[i - 1];
            assert!((ds - 1.3 * g.spacing).abs() < 1e-12);
        }
        assert!(polar.nodes.is_empty());
    }

    #[test]
    fn node_is_flagged() {
        let g = Grid::interval(-1.0, 1.0, 5).unwrap();
        let sig = Arc::new(Signature::schrodinger());
        let values = (0..5).map(|i| Multivector::scalar(&sig, i as f64 - 2.0)).collect();
        let f = FieldGrid::new(&g, values).unwrap();
        let p = decompose_polar(&f).unwrap();
        assert_eq!(p.nodes, vec![2]);
        assert!(quantum_potential(&p, 1.0).values[2].is_none());
    }

    #[test]
    fn dirac_frame_must_match_grid() {
        let g = Grid::new(&[6, 6], 0.1, &[0.0, 0.0], Boundary::Periodic).unwrap();
        let sig = Arc::new(Signature::pauli());
        let f = FieldGrid::new(&g, vec![Multivector::<f64>::one(&sig); g.len()]).unwrap();
        let d = DiracOperator::from_labels(&sig, &[1, 2, 3]).unwrap();
        assert!(matches!(d.left(&f), Err(Error::DimensionMismatch { .. })));
    }
}
