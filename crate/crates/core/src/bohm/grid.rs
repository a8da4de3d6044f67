use crate::clifford::{Multivector, Scalar};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    Periodic,
    Clamped,
}

/// Uniform Cartesian grid in 1 to 3 dimensions, row-major with the last
/// axis fastest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub shape: Vec<usize>,
    pub spacing: f64,
    pub origin: Vec<f64>,
    pub boundary: Boundary,
}

impl Grid {
    pub fn new(shape: &[usize], spacing: f64, origin: &[f64], boundary: Boundary) -> Result<Self> {
        if shape.is_empty() || shape.len() > 3 {
            return Err(Error::Grid(format!("dimension {} outside 1..=3", shape.len())));
        }
        if origin.len() != shape.len() {
            return Err(Error::DimensionMismatch {
                expected: shape.len(),
                got: origin.len(),
            });
        }
        if shape.iter().any(|&n| n < 5) {
            return Err(Error::Grid("each axis needs at least 5 sites".into()));
        }
        if !(spacing > 0.0) {
            return Err(Error::Grid(format!("spacing {spacing} must be positive")));
        }
        Ok(Grid {
            shape: shape.to_vec(),
            spacing,
            origin: origin.to_vec(),
            boundary,
        })
    }

    /// 1D grid covering `[a, b]` with `n` sites (clamped) .
    pub fn interval(a: f64, b: f64, n: usize) -> Result<Self> {
        Self::new(&[n], (b - a) / (n - 1) as f64, &[a], Boundary::Clamped)
    }

    pub fn dim(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn stride(&self, axis: usize) -> usize {
        self.shape[axis + 1..].iter().product()
    }

    pub fn multi_index(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim()];
        for axis in (0..self.dim()).rev() {
            out[axis] = idx % self.shape[axis];
            idx /= self.shape[axis];
        }
        out
    }

    pub fn coords(&self, idx: usize) -> Vec<f64> {
        self.multi_index(idx)
            .iter()
            .zip(&self.origin)
            .map(|(&i, &o)| o + i as f64 * self.spacing)
            .collect()
    }

    /// Site `offset` steps along `axis`, wrapping when periodic.
    pub fn neighbor(&self, idx: usize, axis: usize, offset: isize) -> Option<usize> {
        let i = self.multi_index(idx)[axis] as isize;
        let n = self.shape[axis] as isize;
        let j = i + offset;
        let j = match self.boundary {
            Boundary::Periodic => j.rem_euclid(n),
            Boundary::Clamped if (0..n).contains(&j) => j,
            Boundary::Clamped => return None,
        };
        Some((idx as isize + (j - i) * self.stride(axis) as isize) as usize)
    }

    /// At least `width` sites from every clamped edge.
    pub fn is_interior(&self, idx: usize, width: usize) -> bool {
        match self.boundary {
            Boundary::Periodic => true,
            Boundary::Clamped => self
                .multi_index(idx)
                .iter()
                .zip(&self.shape)
                .all(|(&i, &n)| i >= width && i + width < n),
        }
    }
}

/// Real field sampled on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarField {
    pub grid: Grid,
    pub values: Vec<f64>,
}

impl ScalarField {
    pub fn from_fn(grid: &Grid, f: impl Fn(&[f64]) -> f64) -> Self {
        ScalarField {
            grid: grid.clone(),
            values: (0..grid.len()).map(|i| f(&grid.coords(i))).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        ScalarField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Central first derivative; second-order one-sided at clamped edges.
    pub fn derivative(&self, axis: usize) -> ScalarField {
        let g = &self.grid;
        let h = g.spacing;
        let v = &self.values;
        let values = (0..g.len())
            .map(|i| match (g.neighbor(i, axis, -1), g.neighbor(i, axis, 1)) {
                (Some(m), Some(p)) => (v[p] - v[m]) / (2.0 * h),
                (None, Some(p)) => {
                    let p2 = g.neighbor(i, axis, 2).unwrap();
                    (-3.0 * v[i] + 4.0 * v[p] - v[p2]) / (2.0 * h)
                }
                (Some(m), None) => {
                    let m2 = g.neighbor(i, axis, -2).unwrap();
                    (3.0 * v[i] - 4.0 * v[m] + v[m2]) / (2.0 * h)
                }
                (None, None) => unreachable!("axis shorter than 2"),
            })
            .collect();
        ScalarField {
            grid: g.clone(),
            values,
        }
    }

    /// Compact three-point second derivative; one-sided at clamped edges.
    pub fn second_derivative(&self, axis: usize) -> ScalarField {
        let g = &self.grid;
        let h2 = g.spacing * g.spacing;
        let v = &self.values;
        let values = (0..g.len())
            .map(|i| match (g.neighbor(i, axis, -1), g.neighbor(i, axis, 1)) {
                (Some(m), Some(p)) => (v[p] - 2.0 * v[i] + v[m]) / h2,
                (None, Some(p)) => {
                    let (p2, p3) = (g.neighbor(i, axis, 2).unwrap(), g.neighbor(i, axis, 3).unwrap());
                    (2.0 * v[i] - 5.0 * v[p] + 4.0 * v[p2] - v[p3]) / h2
                }
                (Some(m), None) => {
                    let (m2, m3) = (g.neighbor(i, axis, -2).unwrap(), g.neighbor(i, axis, -3).unwrap());
                    (2.0 * v[i] - 5.0 * v[m] + 4.0 * v[m2] - v[m3]) / h2
                }
                (None, None) => unreachable!("axis shorter than 2"),
            })
            .collect();
        ScalarField {
            grid: g.clone(),
            values,
        }
    }

    pub fn laplacian(&self) -> ScalarField {
        let mut out = self.second_derivative(0);
        for axis in 1..self.grid.dim() {
            let d = self.second_derivative(axis);
            for (o, v) in out.values.iter_mut().zip(d.values) {
                *o += v;
            }
        }
        out
    }

    pub fn gradient(&self) -> Vec<ScalarField> {
        (0..self.grid.dim()).map(|a| self.derivative(a)).collect()
    }

    /// Riemann sum `sum f h^d`.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.spacing.powi(self.grid.dim() as i32)
    }
}

/// Multivector-valued field.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid<T: Scalar = f64> {
    pub grid: Grid,
    pub values: Vec<Multivector<T>>,
}

impl<T: Scalar> FieldGrid<T> {
    pub fn new(grid: &Grid, values: Vec<Multivector<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(first) = values.first() {
            if values.iter().any(|v| v.signature() != first.signature()) {
                return Err(Error::Grid("mixed signatures in one field".into()));
            }
        }
        Ok(FieldGrid {
            grid: grid.clone(),
            values,
        })
    }

    /// Applies `sum w_k f(i + o_k) * scale` componentwise; zero at sites
    /// where a tap falls outside a clamped grid.
    fn apply_taps(&self, axis: usize, taps: &[(isize, f64)], scale: f64) -> Vec<Multivector<T>> {
        let g = &self.grid;
        (0..g.len())
            .map(|i| {
                let mut acc = Multivector::zero(self.values[i].signature());
                if taps.iter().all(|&(o, _)| g.neighbor(i, axis, o).is_some()) {
                    for &(o, w) in taps {
                        let j = g.neighbor(i, axis, o).unwrap();
                        acc = acc + self.values[j].scale_real(w * scale);
                    }
                }
                acc
            })
            .collect()
    }

    /// Central first derivative; clamped edges use one-sided stencils.
    pub fn derivative(&self, axis: usize) -> FieldGrid<T> {
        let g = &self.grid;
        let h = g.spacing;
        let values = (0..g.len())
            .map(|i| {
                let taps: &[(isize, f64)] = match (g.neighbor(i, axis, -1), g.neighbor(i, axis, 1)) {
                    (Some(_), Some(_)) => &[(-1, -0.5), (1, 0.5)],
                    (None, _) => &[(0, -1.5), (1, 2.0), (2, -0.5)],
                    (_, None) => &[(0, 1.5), (-1, -2.0), (-2, 0.5)],
                };
                let mut acc = Multivector::zero(self.values[i].signature());
                for &(o, w) in taps {
                    let j = g.neighbor(i, axis, o).expect("axis has >= 5 sites");
                    acc = acc + self.values[j].scale_real(w / h);
                }
                acc
            })
            .collect();
        FieldGrid {
            grid: g.clone(),
            values,
        }
    }

    /// Compact Laplacian (3-point per axis); clamped edges copy zero.
    pub fn laplacian(&self) -> FieldGrid<T> {
        let g = &self.grid;
        let h2 = g.spacing * g.spacing;
        let values = (0..g.len())
            .map(|i| {
                let mut acc = Multivector::zero(self.values[i].signature());
                for axis in 0..g.dim() {
                    if let (Some(m), Some(p)) = (g.neighbor(i, axis, -1), g.neighbor(i, axis, 1)) {
                        acc = acc
                            + (&self.values[p] + &self.values[m] - self.values[i].scale_real(2.0))
                                .scale_real(1.0 / h2);
                    }
                }
                acc
            })
            .collect();
        FieldGrid {
            grid: g.clone(),
            values,
        }
    }

    /// Wide Laplacian `sum_j w_j (f(x+2h) - 2f + f(x-2h)) / 4h^2`; zero at
    /// sites closer than two steps to a clamped edge.
    pub fn wide_laplacian(&self, weights: &[f64]) -> FieldGrid<T> {
        let g = &self.grid;
        let h2 = g.spacing * g.spacing;
        let mut values: Vec<Multivector<T>> =
            self.values.iter().map(|v| Multivector::zero(v.signature())).collect();
        for (axis, &w) in weights.iter().enumerate() {
            let part = self.apply_taps(axis, &[(-2, 1.0), (0, -2.0), (2, 1.0)], w / (4.0 * h2));
            for (v, p) in values.iter_mut().zip(&part) {
                *v = &*v + p;
            }
        }
        FieldGrid {
            grid: g.clone(),
            values,
        }
    }

    pub fn component(&self, blade: usize) -> ScalarField {
        ScalarField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.coeff(blade).re()).collect(),
        }
    }

    /// Largest coefficient modulus over sites selected by `keep`.
    pub fn max_norm(&self, keep: impl Fn(usize) -> bool) -> f64 {
        self.values
            .iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, v)| v.max_abs())
            .fold(0.0, f64::max)
    }
}
