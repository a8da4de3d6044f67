//! Plot-ready datasets written as CSV (comma separator, dot decimal, LF)
//! or serialized as records.

use crate::bohm::{self, Grid, Residuals, WaveSpec};
use crate::error::{Error, Result};
use crate::spinor;
use crate::verify::standard_studies;
use crate::weyl::WeylAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::io::Write;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dataset {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Dataset {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn column(&self, header: &str) -> Option<Vec<&Cell>> {
        let k = self.headers.iter().position(|h| h == header)?;
        Some(self.rows.iter().map(|r| &r[k]).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DatasetKind {
    LightconeSamples,
    BohmResiduals,
    QuantumPotentialProfile,
    WeylPoints,
}

impl DatasetKind {
    pub const ALL: [DatasetKind; 4] = [
        DatasetKind::LightconeSamples,
        DatasetKind::BohmResiduals,
        DatasetKind::QuantumPotentialProfile,
        DatasetKind::WeylPoints,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DatasetKind::LightconeSamples => "lightcone-samples",
            DatasetKind::BohmResiduals => "bohm-residuals",
            DatasetKind::QuantumPotentialProfile => "quantum-potential-profile",
            DatasetKind::WeylPoints => "weyl-points",
        }
    }
}

impl FromStr for DatasetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DatasetKind::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown dataset '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmitParams {
    pub seed: u64,
    pub count: usize,
    pub sigma: f64,
    pub mass: f64,
    pub sites: usize,
    pub n: usize,
    pub levels: usize,
}

impl Default for EmitParams {
    fn default() -> Self {
        EmitParams {
            seed: 42,
            count: 100,
            sigma: 1.0,
            mass: 1.0,
            sites: 201,
            n: 8,
            levels: 4,
        }
    }
}

pub fn emit(kind: DatasetKind, p: &EmitParams) -> Result<Dataset> {
    match kind {
        DatasetKind::LightconeSamples => lightcone_samples(p.count, p.seed),
        DatasetKind::BohmResiduals => bohm_residuals(p.levels),
        DatasetKind::QuantumPotentialProfile => quantum_potential_profile(p.sigma, p.mass, p.sites),
        DatasetKind::WeylPoints => weyl_points(p.n),
    }
}

fn headers(h: &[&str]) -> Vec<String> {
    h.iter().map(|s| s.to_string()).collect()
}

/// Null vectors from the Hopf map of random spinors, lifted to C(3,1).
pub fn lightcone_samples(count: usize, seed: u64) -> Result<Dataset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let g = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        let v = spinor::hopf_map(g)?;
        let lifted = spinor::lift_null_vector(v)?;
        let mut row: Vec<Cell> = v.iter().map(|&c| Cell::Num(c)).collect();
        row.push(Cell::Num((&lifted * &lifted).scalar_part().abs()));
        rows.push(row);
    }
    Ok(Dataset {
        name: DatasetKind::LightconeSamples.name().into(),
        headers: headers(&[
            "t (natural units)",
            "x (natural units)",
            "y (natural units)",
            "z (natural units)",
            "null residual (natural units^2)",
        ]),
        rows,
    })
}

/// Interior residual maxima over a refinement study for each standard wave.
pub fn bohm_residuals(levels: usize) -> Result<Dataset> {
    let mut rows = Vec::new();
    for (name, setup) in standard_studies() {
        for r in bohm::convergence_study(&setup, levels)? {
            let mut row = vec![
                Cell::Text(name.replace(' ', "-")),
                Cell::Int(r.level as i64),
                Cell::Num(r.h),
                Cell::Num(r.dt),
            ];
            row.extend(r.residuals.as_array().iter().map(|&v| Cell::Num(v)));
            rows.push(row);
        }
    }
    let mut h = headers(&["wave", "level", "h (length)", "dt (time)"]);
    h.extend(Residuals::NAMES.iter().map(|n| format!("{n} (max abs, hbar = 1)")));
    Ok(Dataset {
        name: DatasetKind::BohmResiduals.name().into(),
        headers: h,
        rows,
    })
}

/// Q(x) of a Gaussian at t = 0 by finite differences next to the closed form.
/// Edge sites, where no centred stencil exists, are omitted.
pub fn quantum_potential_profile(sigma: f64, mass: f64, sites: usize) -> Result<Dataset> {
    if !(sigma > 0.0 && mass > 0.0) {
        return Err(Error::Domain("sigma and mass must be positive".into()));
    }
    let g = Grid::interval(-5.0 * sigma, 5.0 * sigma, sites)?;
    let wave = WaveSpec::Gaussian {
        x0: 0.0,
        k0: 0.0,
        sigma,
        mass,
    };
    let polar = bohm::decompose_polar(&wave.sample(&g, 0.0))?;
    let q = bohm::quantum_potential(&polar, mass);
    let rows = (0..g.len())
        .filter(|&i| g.is_interior(i, 1))
        .filter_map(|i| {
            let x = g.coords(i)[0];
            q.values[i].map(|v| {
                vec![
                    Cell::Num(x),
                    Cell::Num(v),
                    Cell::Num(bohm::gaussian_quantum_potential(x, sigma, mass)),
                ]
            })
        })
        .collect();
    Ok(Dataset {
        name: DatasetKind::QuantumPotentialProfile.name().into(),
        headers: headers(&["x (length)", "Q numeric (energy)", "Q analytic (energy)"]),
        rows,
    })
}

/// Every (x-point, p-point) pair with `|tr(eps_j eps'_l)|`.
pub fn weyl_points(n: usize) -> Result<Dataset> {
    let w = WeylAlgebra::new(n)?;
    let overlaps = w.overlaps()?;
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for l in 0..n {
            rows.push(vec![
                Cell::Text(format!("x{j}")),
                Cell::Text(format!("p{l}")),
                Cell::Num(j as f64 * w.delta_x),
                Cell::Num(l as f64 * w.delta_p),
                Cell::Num(overlaps[j * n + l]),
            ]);
        }
    }
    Ok(Dataset {
        name: DatasetKind::WeylPoints.name().into(),
        headers: headers(&[
            "x point",
            "p point",
            "x (length)",
            "p (momentum)",
            "overlap (dimensionless)",
        ]),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lightcone_is_deterministic_and_lf() {
        let a = lightcone_samples(10, 3).unwrap().to_csv_string().unwrap();
        let b = lightcone_samples(10, 3).unwrap().to_csv_string().unwrap();
        assert_eq!(a, b);
        assert!(!a.contains('\r'));
        assert_eq!(a.lines().count(), 11);
    }

    #[test]
    fn weyl_overlaps_are_one_over_n() {
        let d = weyl_points(8).unwrap();
        assert_eq!(d.rows.len(), 64);
        for c in d.column("overlap (dimensionless)").unwrap() {
            let Cell::Num(v) = c else { panic!() };
            assert!((v - 0.125).abs() < 1e-12);
        }
    }

    #[test]
    fn profile_tracks_closed_form() {
        let d = quantum_potential_profile(1.0, 1.0, 401).unwrap();
        for r in &d.rows {
            let (Cell::Num(a), Cell::Num(b)) = (&r[1], &r[2]) else { panic!() };
            assert!((a - b).abs() < 1e-3);
        }
    }
}
