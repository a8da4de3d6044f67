//! Multiplication tables, both of Clifford blades and of extensives
//! composed in the process groupoid.

use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::groupoid::{build_clifford, compose, Composite, CompositionMode, Extensive, Metric, ProcessAlgebra};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// Largest algebra rendered as a full blade table.
pub const MAX_TABLE_GENERATORS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductTable {
    pub title: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

impl ProductTable {
    pub fn cell(&self, row: &str, col: &str) -> Option<&str> {
        let r = self.row_labels.iter().position(|l| l == row)?;
        let c = self.col_labels.iter().position(|l| l == col)?;
        Some(&self.cells[r][c])
    }
}

impl fmt::Display for ProductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .row_labels
            .iter()
            .chain(&self.col_labels)
            .chain(self.cells.iter().flatten())
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        writeln!(f, "{}", self.title)?;
        write!(f, "{:>width$} |", "")?;
        for c in &self.col_labels {
            write!(f, " {c:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((width + 1) * (self.col_labels.len() + 1) + 1))?;
        for (label, row) in self.row_labels.iter().zip(&self.cells) {
            write!(f, "{label:>width$} |")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn signed(sign: f64, label: &str) -> String {
    if sign < 0.0 {
        format!("-{label}")
    } else {
        label.to_string()
    }
}

/// Blade-by-blade table of a real Clifford algebra with at most four generators.
pub fn full_table(sig: &Arc<Signature>) -> Result<ProductTable> {
    if sig.dim() > MAX_TABLE_GENERATORS {
        return Err(Error::TableTooLarge {
            blades: sig.blade_count(),
        });
    }
    let labels: Vec<String> = (0..sig.blade_count()).map(|b| sig.blade_name(b)).collect();
    let cells = (0..sig.blade_count())
        .map(|a| {
            (0..sig.blade_count())
                .map(|b| {
                    let (s, c) = sig.blade_product(a, b);
                    signed(s as f64, &labels[c])
                })
                .collect()
        })
        .collect();
    Ok(ProductTable {
        title: format!("{sig} blade products"),
        row_labels: labels.clone(),
        col_labels: labels,
        cells,
    })
}

/// Generator-by-generator products `e_i e_j`; the diagonal gives the
/// squares and off-diagonal pairs anticommute.
pub fn generator_table(sig: &Arc<Signature>) -> ProductTable {
    let gens: Vec<usize> = (0..sig.dim()).map(|i| 1 << i).collect();
    let labels: Vec<String> = gens.iter().map(|&b| sig.blade_name(b)).collect();
    let cells = gens
        .iter()
        .map(|&a| {
            gens.iter()
                .map(|&b| {
                    let (s, c) = sig.blade_product(a, b);
                    signed(s as f64, &sig.blade_name(c))
                })
                .collect()
        })
        .collect();
    ProductTable {
        title: format!("{sig} generator products"),
        row_labels: labels.clone(),
        col_labels: labels,
        cells,
    }
}

/// Pairs `(i, j)` with `e_i e_j + e_j e_i != 0`, expected empty for i != j.
pub fn anticommutation_failures(sig: &Arc<Signature>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..sig.dim() {
        for j in 0..sig.dim() {
            if i == j {
                continue;
            }
            let (a, b) = (Multivector::<f64>::basis(sig, 1 << i), Multivector::<f64>::basis(sig, 1 << j));
            if (&a * &b + &b * &a).max_abs() != 0.0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// A process algebra together with the extensives used as table headings.
#[derive(Clone, Debug)]
pub struct ProcessPresentation {
    pub algebra: ProcessAlgebra,
    pub headings: Vec<Extensive>,
}

impl ProcessPresentation {
    pub fn metric(&self) -> &Metric {
        &self.algebra.metric
    }
}

/// `{[P0 P1], [P0 P2]}` with all points of metric +1, giving C(0,2).
pub fn quaternion_process() -> Result<ProcessPresentation> {
    let mut m = Metric::new();
    let (p0, p1, p2) = (m.add("P0", 1), m.add("P1", 1), m.add("P2", 1));
    let gens = [Extensive::new(p0, p1), Extensive::new(p0, p2)];
    Ok(ProcessPresentation {
        algebra: build_clifford(&gens, &m)?,
        headings: vec![gens[0], gens[1], Extensive::new(p1, p2)],
    })
}

/// `{[P0 T], [P0 P]}` with metric(T) = -1, metric(P) = +1, giving C(1,1).
pub fn spacetime_process() -> Result<ProcessPresentation> {
    let mut m = Metric::new();
    let (p0, t, p) = (m.add("P0", 1), m.add("T", -1), m.add("P", 1));
    let gens = [Extensive::new(p0, t), Extensive::new(p0, p)];
    Ok(ProcessPresentation {
        algebra: build_clifford(&gens, &m)?,
        headings: vec![gens[0], gens[1], Extensive::new(p, t)],
    })
}

/// `{[P0 a], [P0 b], [P0 c]}` with metric -1 on a, b, c, giving C(3,0).
pub fn pauli_process() -> Result<ProcessPresentation> {
    let mut m = Metric::new();
    let p0 = m.add("P0", 1);
    let pts: Vec<_> = ["a", "b", "c"].iter().map(|n| m.add(n, -1)).collect();
    let gens: Vec<Extensive> = pts.iter().map(|&p| Extensive::new(p0, p)).collect();
    let mut headings = gens.clone();
    headings.extend([
        Extensive::new(pts[0], pts[1]),
        Extensive::new(pts[0], pts[2]),
        Extensive::new(pts[1], pts[2]),
    ]);
    Ok(ProcessPresentation {
        algebra: build_clifford(&gens, &m)?,
        headings,
    })
}

fn render_composite(z: &Composite, p: &ProcessPresentation) -> Result<String> {
    let metric = p.metric();
    match z {
        Composite::Undefined => Ok("undefined".into()),
        Composite::Zero => Ok("0".into()),
        Composite::Arrow(x) if x.is_unit() => {
            let v = x.unit_value(metric)?;
            Ok(signed(v, &format!("{}", v.abs())))
        }
        Composite::Arrow(x) => {
            for h in &p.headings {
                if (h.source, h.target) == (x.source, x.target) {
                    return Ok(signed(x.strength * h.strength, &h.label(metric)));
                }
                if (h.source, h.target) == (x.target, x.source) {
                    return Ok(signed(-x.strength * h.strength, &h.label(metric)));
                }
            }
            Ok(signed(x.strength, &x.label(metric)))
        }
    }
}

/// Composition table of the headings with an identity row and column,
/// e.g. `[P0P1] o [P0P2] = -[P1P2]`.
pub fn process_table(p: &ProcessPresentation, mode: CompositionMode) -> Result<ProductTable> {
    let metric = p.metric();
    let mut labels = vec!["1".to_string()];
    labels.extend(p.headings.iter().map(|h| h.label(metric)));
    let mut cells = Vec::new();
    for r in 0..=p.headings.len() {
        let mut row = Vec::new();
        for c in 0..=p.headings.len() {
            let cell = match (r, c) {
                (0, 0) => "1".to_string(),
                (0, c) => labels[c].clone(),
                (r, 0) => labels[r].clone(),
                (r, c) => render_composite(&compose(&p.headings[r - 1], &p.headings[c - 1], metric, mode)?, p)?,
            };
            row.push(cell);
        }
        cells.push(row);
    }
    Ok(ProductTable {
        title: format!("{} process table", p.algebra.signature),
        row_labels: labels.clone(),
        col_labels: labels,
        cells,
    })
}

/// Same table computed with geometric products of the images, to compare
/// with [`process_table`].
pub fn image_table(p: &ProcessPresentation) -> Result<ProductTable> {
    let metric = p.metric();
    let images: Vec<Multivector> = p.headings.iter().map(|h| p.algebra.image(h)).collect::<Result<_>>()?;
    let mut labels = vec!["1".to_string()];
    labels.extend(p.headings.iter().map(|h| h.label(metric)));
    let sig = p.algebra.signature.clone();
    let mut all = vec![Multivector::one(&sig)];
    all.extend(images.iter().cloned());
    let name = |m: &Multivector| -> String {
        for (i, cand) in all.iter().enumerate() {
            if m.approx_eq(cand, 1e-12) {
                return labels[i].clone();
            }
            if m.approx_eq(&-cand, 1e-12) {
                return signed(-1.0, &labels[i]);
            }
        }
        m.to_string()
    };
    let cells = all.iter().map(|a| all.iter().map(|b| name(&(a * b))).collect()).collect();
    Ok(ProductTable {
        title: format!("{sig} image table"),
        row_labels: labels.clone(),
        col_labels: labels,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn process_and_image_tables_agree() {
        for p in [quaternion_process(), spacetime_process(), pauli_process()] {
            let p = p.unwrap();
            let a = process_table(&p, CompositionMode::Groupoid).unwrap();
            let b = image_table(&p).unwrap();
            for (ra, rb) in a.cells.iter().zip(&b.cells) {
                for (ca, cb) in ra.iter().zip(rb) {
                    if ca != "undefined" {
                        assert_eq!(ca, cb, "{}", a.title);
                    }
                }
            }
        }
    }

    #[test]
    fn too_large() {
        let sig = Arc::new(Signature::new(3, 2).unwrap());
        assert!(matches!(full_table(&sig), Err(Error::TableTooLarge { blades: 32 })));
        assert!(anticommutation_failures(&sig).is_empty());
    }

    #[test]
    fn quaternion_signs() {
        let t = generator_table(&Arc::new(Signature::quaternion()));
        assert_eq!(t.cells[0][0], "-1");
        assert_eq!(t.cells[0][1], "e12");
        assert_eq!(t.cells[1][0], "-e12");
    }
}
