//! Process groupoid: oriented extensives `[A B]` between points, their
//! partial composition, the Clifford algebra they generate, and iterants.

use crate::clifford::{Multivector, Signature};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Index of a point in a [`Metric`].
pub type Point = usize;

/// Named points with their metric sign, `[PP] = metric(P)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    names: Vec<String>,
    signs: Vec<i8>,
}

impl Metric {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: &str, sign: i8) -> Point {
        self.names.push(name.into());
        self.signs.push(sign);
        self.names.len() - 1
    }

    pub fn sign(&self, p: Point) -> Result<f64> {
        self.signs
            .get(p)
            .map(|&s| s as f64)
            .ok_or(Error::UnknownPoint(p))
    }

    pub fn name(&self, p: Point) -> &str {
        &self.names[p]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Oriented process `strength * [source target]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Extensive {
    pub source: Point,
    pub target: Point,
    pub strength: f64,
}

impl Extensive {
    pub fn new(source: Point, target: Point) -> Self {
        Extensive {
            source,
            target,
            strength: 1.0,
        }
    }

    pub fn with_strength(mut self, s: f64) -> Self {
        self.strength = s;
        self
    }

    /// `[A B] = -[B A]`.
    pub fn reversed(&self) -> Self {
        Extensive {
            source: self.target,
            target: self.source,
            strength: -self.strength,
        }
    }

    /// A degenerate extensive `[P P]`, which acts as a scalar.
    pub fn is_unit(&self) -> bool {
        self.source == self.target
    }

    /// Scalar value `strength * metric(P)` of a unit.
    pub fn unit_value(&self, metric: &Metric) -> Result<f64> {
        Ok(self.strength * metric.sign(self.source)?)
    }

    /// Orientation with `source <= target`.
    pub fn normalized(&self) -> Self {
        if self.source <= self.target {
            *self
        } else {
            self.reversed()
        }
    }

    pub fn label(&self, metric: &Metric) -> String {
        format!("[{}{}]", metric.name(self.source), metric.name(self.target))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompositionMode {
    /// Orientation-normalized composition; non-composable pairs are undefined.
    Groupoid,
    /// `[AB][CD] = delta_BC [AD]`; non-composable pairs give zero.
    Incidence,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Composite {
    Arrow(Extensive),
    Undefined,
    Zero,
}

impl Composite {
    pub fn arrow(&self) -> Option<Extensive> {
        match self {
            Composite::Arrow(e) => Some(*e),
            _ => None,
        }
    }

    /// Same process: both units with equal scalar value, or equal arrows
    /// after orientation normalization.
    pub fn equivalent(&self, other: &Composite, metric: &Metric, tol: f64) -> Result<bool> {
        Ok(match (self, other) {
            (Composite::Arrow(a), Composite::Arrow(b)) => match (a.is_unit(), b.is_unit()) {
                (true, true) => (a.unit_value(metric)? - b.unit_value(metric)?).abs() <= tol,
                (false, false) => {
                    let (a, b) = (a.normalized(), b.normalized());
                    a.source == b.source
                        && a.target == b.target
                        && (a.strength - b.strength).abs() <= tol
                }
                _ => false,
            },
            (Composite::Undefined, Composite::Undefined) | (Composite::Zero, Composite::Zero) => {
                true
            }
            _ => false,
        })
    }
}

/// Composes `a` then `b`: `[A B] o [B C] = metric(B) [A C]`.
///
/// In groupoid mode either factor may be reversed (with a sign) to find a
/// shared point, and units multiply as scalars.
pub fn compose(a: &Extensive, b: &Extensive, metric: &Metric, mode: CompositionMode) -> Result<Composite> {
    for p in [a.source, a.target, b.source, b.target] {
        metric.sign(p)?;
    }
    match mode {
        CompositionMode::Incidence => Ok(if a.target == b.source {
            Composite::Arrow(Extensive {
                source: a.source,
                target: b.target,
                strength: a.strength * b.strength,
            })
        } else {
            Composite::Zero
        }),
        CompositionMode::Groupoid => {
            if a.is_unit() {
                let v = a.unit_value(metric)?;
                return Ok(Composite::Arrow(b.with_strength(b.strength * v)));
            }
            if b.is_unit() {
                let v = b.unit_value(metric)?;
                return Ok(Composite::Arrow(a.with_strength(a.strength * v)));
            }
            let candidates = [
                (*a, *b),
                (*a, b.reversed()),
                (a.reversed(), *b),
                (a.reversed(), b.reversed()),
            ];
            for (x, y) in candidates {
                if x.target == y.source {
                    let m = metric.sign(x.target)?;
                    return Ok(Composite::Arrow(Extensive {
                        source: x.source,
                        target: y.target,
                        strength: m * x.strength * y.strength,
                    }));
                }
            }
            Ok(Composite::Undefined)
        }
    }
}

/// Clifford algebra generated by extensives `[P0 Pi]` sharing the point `P0`.
#[derive(Clone, Debug)]
pub struct ProcessAlgebra {
    pub signature: Arc<Signature>,
    pub base: Point,
    pub targets: Vec<Point>,
    pub metric: Metric,
}

impl ProcessAlgebra {
    /// Image of an extensive among `{P0, P1, ...}`:
    /// `[P0 Pi] -> e_i`, `[Pi Pj] -> -metric(P0) e_i e_j`, `[P P] -> metric(P)`.
    pub fn image(&self, x: &Extensive) -> Result<Multivector> {
        let sig = &self.signature;
        let slot = |p: Point| -> Option<usize> {
            if p == self.base {
                None
            } else {
                self.targets.iter().position(|&t| t == p)
            }
        };
        let known = |p: Point| p == self.base || self.targets.contains(&p);
        if !known(x.source) {
            return Err(Error::UnknownPoint(x.source));
        }
        if !known(x.target) {
            return Err(Error::UnknownPoint(x.target));
        }
        if x.is_unit() {
            return Ok(Multivector::scalar(sig, x.unit_value(&self.metric)?));
        }
        let m0 = self.metric.sign(self.base)?;
        let gen = |i: usize| Multivector::<f64>::basis(sig, 1 << i);
        let value = match (slot(x.source), slot(x.target)) {
            (None, Some(j)) => gen(j),
            (Some(i), None) => -gen(i),
            (Some(i), Some(j)) => (gen(i) * gen(j)).scale(-m0),
            (None, None) => unreachable!("non-unit with both ends at the base point"),
        };
        Ok(value.scale(x.strength))
    }

    /// Basis extensives: the generators then `[Pi Pj]` for i < j.
    pub fn basis_extensives(&self) -> Vec<Extensive> {
        let mut out: Vec<Extensive> = self
            .targets
            .iter()
            .map(|&t| Extensive::new(self.base, t))
            .collect();
        for (i, &a) in self.targets.iter().enumerate() {
            for &b in &self.targets[i + 1..] {
                out.push(Extensive::new(a, b));
            }
        }
        out
    }
}

/// Builds the Clifford algebra of generators `[P0 Pi]`:
/// `[P0 Pi]^2 = -[P0 Pi][Pi P0] = -metric(Pi) metric(P0)`.
///
/// Every composable pair of basis extensives is checked against the
/// geometric product of their images.
pub fn build_clifford(generators: &[Extensive], metric: &Metric) -> Result<ProcessAlgebra> {
    let base = generators.first().ok_or(Error::NoCommonSource)?.source;
    if generators.iter().any(|g| g.source != base) {
        return Err(Error::NoCommonSource);
    }
    let mut targets = Vec::new();
    for g in generators {
        if g.target == base || targets.contains(&g.target) {
            return Err(Error::InconsistentMetric(format!(
                "generator {} repeats a point",
                g.label(metric)
            )));
        }
        targets.push(g.target);
    }
    let m0 = metric.sign(base)?;
    let mut squares = Vec::new();
    for &t in &targets {
        squares.push((-metric.sign(t)? * m0) as i8);
    }
    let algebra = ProcessAlgebra {
        signature: Arc::new(Signature::from_squares(&squares)?),
        base,
        targets,
        metric: metric.clone(),
    };
    let mut basis = algebra.basis_extensives();
    basis.push(Extensive::new(base, base));
    for x in &basis {
        for y in &basis {
            if let Composite::Arrow(z) = compose(x, y, metric, CompositionMode::Groupoid)? {
                let lhs = algebra.image(x)? * algebra.image(y)?;
                let rhs = algebra.image(&z)?;
                if !lhs.approx_eq(&rhs, 1e-12) {
                    return Err(Error::InconsistentMetric(format!(
                        "{} o {} does not close",
                        x.label(metric),
                        y.label(metric)
                    )));
                }
            }
        }
    }
    Ok(algebra)
}

/// Iterant `[A, B]` with componentwise product and sum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Iterant {
    pub a: f64,
    pub b: f64,
}

impl Iterant {
    pub fn new(a: f64, b: f64) -> Self {
        Iterant { a, b }
    }
}

impl std::ops::Mul for Iterant {
    type Output = Iterant;
    fn mul(self, r: Iterant) -> Iterant {
        Iterant::new(self.a * r.a, self.b * r.b)
    }
}

impl std::ops::Add for Iterant {
    type Output = Iterant;
    fn add(self, r: Iterant) -> Iterant {
        Iterant::new(self.a + r.a, self.b + r.b)
    }
}

impl std::ops::Sub for Iterant {
    type Output = Iterant;
    fn sub(self, r: Iterant) -> Iterant {
        Iterant::new(self.a - r.a, self.b - r.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IterantOp {
    /// a: [A,B] -> [B,0]
    Lower,
    /// a^dagger: [A,B] -> [0,A]
    Raise,
    /// [A,B] -> [B,A]
    SigmaX,
    /// [A,B] -> [A,-B]
    SigmaZ,
    /// [A,B] -> [0,B]
    Project,
    /// [A,B] -> [A,A]
    LeftIdealFirst,
    /// [A,B] -> [B,B]
    LeftIdealSecond,
}

impl IterantOp {
    pub const ALL: [IterantOp; 7] = [
        IterantOp::Lower,
        IterantOp::Raise,
        IterantOp::SigmaX,
        IterantOp::SigmaZ,
        IterantOp::Project,
        IterantOp::LeftIdealFirst,
        IterantOp::LeftIdealSecond,
    ];
}

/// Tabulated action of the named operators.
pub fn apply_operator(op: IterantOp, x: Iterant) -> Iterant {
    let Iterant { a, b } = x;
    match op {
        IterantOp::Lower => Iterant::new(b, 0.0),
        IterantOp::Raise => Iterant::new(0.0, a),
        IterantOp::SigmaX => Iterant::new(b, a),
        IterantOp::SigmaZ => Iterant::new(a, -b),
        IterantOp::Project => Iterant::new(0.0, b),
        IterantOp::LeftIdealFirst => Iterant::new(a, a),
        IterantOp::LeftIdealSecond => Iterant::new(b, b),
    }
}

/// Linear map on iterants, `[A', B'] = M [A, B]`; operators compose as
/// 2x2 matrices so sums and products of the primitives can be formed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterantMap(pub [[f64; 2]; 2]);

impl IterantMap {
    pub fn lower() -> Self {
        IterantMap([[0.0, 1.0], [0.0, 0.0]])
    }

    pub fn raise() -> Self {
        IterantMap([[0.0, 0.0], [1.0, 0.0]])
    }

    pub fn identity() -> Self {
        IterantMap([[1.0, 0.0], [0.0, 1.0]])
    }

    /// Multiplication by a fixed iterant.
    pub fn multiply_by(x: Iterant) -> Self {
        IterantMap([[x.a, 0.0], [0.0, x.b]])
    }

    pub fn apply(&self, x: Iterant) -> Iterant {
        let m = self.0;
        Iterant::new(m[0][0] * x.a + m[0][1] * x.b, m[1][0] * x.a + m[1][1] * x.b)
    }

    /// `self` after `other`.
    pub fn then_after(&self, other: &IterantMap) -> IterantMap {
        let (a, b) = (self.0, other.0);
        let mut m = [[0.0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        IterantMap(m)
    }

    pub fn plus(&self, other: &IterantMap) -> IterantMap {
        let mut m = self.0;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += other.0[i][j];
            }
        }
        IterantMap(m)
    }

    pub fn minus(&self, other: &IterantMap) -> IterantMap {
        self.plus(&IterantMap([
            [-other.0[0][0], -other.0[0][1]],
            [-other.0[1][0], -other.0[1][1]],
        ]))
    }
}

/// The named operators built from `a` and `a^dagger`.
pub fn composed_operator(op: IterantOp) -> IterantMap {
    let (a, ad) = (IterantMap::lower(), IterantMap::raise());
    match op {
        IterantOp::Lower => a,
        IterantOp::Raise => ad,
        IterantOp::SigmaX => a.plus(&ad),
        IterantOp::SigmaZ => a.minus(&ad),
        IterantOp::Project => ad.then_after(&a),
        IterantOp::LeftIdealFirst => a.then_after(&ad).plus(&ad),
        IterantOp::LeftIdealSecond => ad.then_after(&a).plus(&a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quaternion_points() -> (Metric, [Point; 3]) {
        let mut m = Metric::new();
        let p0 = m.add("P0", 1);
        let p1 = m.add("P1", 1);
        let p2 = m.add("P2", 1);
        (m, [p0, p1, p2])
    }

    #[test]
    fn compose_examples() {
        let (m, [p0, p1, p2]) = quaternion_points();
        let g = CompositionMode::Groupoid;
        let r = compose(&Extensive::new(p0, p1), &Extensive::new(p1, p2), &m, g).unwrap();
        assert_eq!(r, Composite::Arrow(Extensive::new(p0, p2)));
        let sq = compose(&Extensive::new(p0, p1), &Extensive::new(p0, p1), &m, g).unwrap();
        assert_eq!(sq.arrow().unwrap().unit_value(&m).unwrap(), -1.0);
        let mut m4 = m.clone();
        let p3 = m4.add("P3", 1);
        let u = compose(&Extensive::new(p0, p1), &Extensive::new(p2, p3), &m4, g).unwrap();
        assert_eq!(u, Composite::Undefined);
        let z = compose(
            &Extensive::new(p0, p1),
            &Extensive::new(p2, p3),
            &m4,
            CompositionMode::Incidence,
        )
        .unwrap();
        assert_eq!(z, Composite::Zero);
    }

    #[test]
    fn unknown_point() {
        let (m, _) = quaternion_points();
        let r = compose(&Extensive::new(0, 9), &Extensive::new(9, 1), &m, CompositionMode::Groupoid);
        assert_eq!(r, Err(Error::UnknownPoint(9)));
    }

    #[test]
    fn build_quaternion_and_lightcone() {
        let (m, [p0, p1, p2]) = quaternion_points();
        let q = build_clifford(&[Extensive::new(p0, p1), Extensive::new(p0, p2)], &m).unwrap();
        assert_eq!(q.signature.squares(), &[-1, -1]);

        let mut m = Metric::new();
        let p0 = m.add("P0", 1);
        let t = m.add("T", -1);
        let p = m.add("P", 1);
        let l = build_clifford(&[Extensive::new(p0, t), Extensive::new(p0, p)], &m).unwrap();
        assert_eq!(l.signature.squares(), &[1, -1]);
    }

    #[test]
    fn build_pauli() {
        let mut m = Metric::new();
        let p0 = m.add("P0", 1);
        let gens: Vec<_> = (1..=3)
            .map(|i| Extensive::new(p0, m.add(&format!("P{i}"), -1)))
            .collect();
        let a = build_clifford(&gens, &m).unwrap();
        assert_eq!(a.signature.squares(), &[1, 1, 1]);
    }

    #[test]
    fn build_rejects_bad_input() {
        let mut m = Metric::new();
        let p0 = m.add("P0", -1);
        let p1 = m.add("P1", 1);
        let p2 = m.add("P2", 1);
        assert!(matches!(
            build_clifford(&[Extensive::new(p0, p1), Extensive::new(p1, p2)], &m),
            Err(Error::NoCommonSource)
        ));
        assert!(build_clifford(&[Extensive::new(p0, p1), Extensive::new(p0, 7)], &m).is_err());
    }

    #[test]
    fn iterant_table() {
        let x = Iterant::new(2.0, 3.0);
        assert_eq!(apply_operator(IterantOp::Lower, Iterant::new(2.0, 0.0)), Iterant::new(0.0, 0.0));
        assert_eq!(apply_operator(IterantOp::Raise, Iterant::new(0.0, 3.0)), Iterant::new(0.0, 0.0));
        for op in IterantOp::ALL {
            if op == IterantOp::SigmaZ {
                assert_eq!(composed_operator(op).apply(x), Iterant::new(3.0, -2.0));
            } else {
                assert_eq!(composed_operator(op).apply(x), apply_operator(op, x), "{op:?}");
            }
        }
        let commutator = IterantMap::lower()
            .then_after(&IterantMap::raise())
            .minus(&IterantMap::raise().then_after(&IterantMap::lower()));
        assert_eq!(commutator.apply(x), apply_operator(IterantOp::SigmaZ, x));
        assert_eq!(
            IterantMap::multiply_by(Iterant::new(0.0, 1.0)).apply(x),
            apply_operator(IterantOp::Project, x)
        );
    }
}
