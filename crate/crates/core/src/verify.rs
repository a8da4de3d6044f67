//! Named verification suites. Every randomized check draws from
//! `ChaCha8Rng::seed_from_u64(seed)`, so a seed fixes the report.

use crate::bohm::{self, Boundary, DiracOperator, FieldGrid, Grid, StudySetup, WaveSpec};
use crate::clifford::{Multivector, Signature};
use crate::conformal::{self, BiTwistor, ConformalRep};
use crate::error::{Error, Result};
use crate::groupoid::{
    apply_operator, compose, composed_operator, Composite, CompositionMode, Extensive, Iterant, IterantMap,
    IterantOp, Metric,
};
use crate::lorentz::{self, Representation, SpinorParams};
use crate::observables::{self, BilinearInvariantSet, DerivativeForm};
use crate::spinor::{self, Chirality, PauliDictionary};
use crate::tables::{self, ProductTable};
use crate::weyl::WeylAlgebra;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub version: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.note.is_none())
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for c in &self.checks {
            let status = match (c.pass, &c.note) {
                (true, Some(_)) => "NOTE",
                (true, None) => "ok",
                (false, _) => "FAIL",
            };
            write!(f, "  {status:<4} {:<58} {:>11.3e} <= {:.0e}", c.name, c.residual, c.tolerance)?;
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        write!(f, "  {} checks, {} failed", self.checks.len(), failed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Groupoid,
    Rotors,
    Kcalculus,
    Hopf,
    Chirality,
    Twistor,
    Bohm,
    Expectation,
    Weyl,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Groupoid,
        Suite::Rotors,
        Suite::Kcalculus,
        Suite::Hopf,
        Suite::Chirality,
        Suite::Twistor,
        Suite::Bohm,
        Suite::Expectation,
        Suite::Weyl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Groupoid => "groupoid",
            Suite::Rotors => "rotors",
            Suite::Kcalculus => "kcalculus",
            Suite::Hopf => "hopf",
            Suite::Chirality => "chirality",
            Suite::Twistor => "twistor",
            Suite::Bohm => "bohm",
            Suite::Expectation => "expectation",
            Suite::Weyl => "weyl",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Weyl orders to check; `2..=12` by default.
    pub weyl_orders: Vec<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 42,
            weyl_orders: (2..=12).collect(),
        }
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn within(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.0.push(Check {
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            note: None,
        });
    }

    /// Count of failing cases; passes only at zero.
    fn exact(&mut self, name: impl Into<String>, failures: usize) {
        self.within(name, failures as f64, 0.0);
    }

    /// Known disagreement with a stated identity, reported but not failed.
    fn mismatch(&mut self, name: impl Into<String>, residual: f64, note: &str) {
        self.0.push(Check {
            name: name.into(),
            residual,
            tolerance: 0.0,
            pass: true,
            note: Some(note.to_string()),
        });
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                for mut c in run(s, opts)?.checks {
                    c.name = format!("{}/{}", s.name(), c.name);
                    all.push(c);
                }
            }
            all
        }
        s => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut c = Checks::default();
            match s {
                Suite::Groupoid => groupoid_suite(&mut c, &mut rng)?,
                Suite::Rotors => rotor_suite(&mut c, &mut rng)?,
                Suite::Kcalculus => kcalculus_suite(&mut c, &mut rng)?,
                Suite::Hopf => hopf_suite(&mut c, &mut rng)?,
                Suite::Chirality => chirality_suite(&mut c, &mut rng)?,
                Suite::Twistor => twistor_suite(&mut c, &mut rng)?,
                Suite::Bohm => bohm_suite(&mut c)?,
                Suite::Expectation => expectation_suite(&mut c, &mut rng)?,
                Suite::Weyl => weyl_suite(&mut c, &opts.weyl_orders)?,
                Suite::All => unreachable!(),
            }
            c.0
        }
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        checks,
        seed: opts.seed,
        version: crate::VERSION.to_string(),
    })
}

/// Generator table of C(0,2) with the identity row and column.
pub const QUATERNION_TABLE: [[&str; 4]; 4] = [
    ["1", "[P0P1]", "[P0P2]", "[P1P2]"],
    ["[P0P1]", "-1", "-[P1P2]", "[P0P2]"],
    ["[P0P2]", "[P1P2]", "-1", "-[P0P1]"],
    ["[P1P2]", "-[P0P2]", "[P0P1]", "-1"],
];

/// Generator table of C(1,1) with the identity row and column.
pub const SPACETIME_TABLE: [[&str; 4]; 4] = [
    ["1", "[P0T]", "[P0P]", "[PT]"],
    ["[P0T]", "1", "[PT]", "[P0P]"],
    ["[P0P]", "-[PT]", "-1", "[P0T]"],
    ["[PT]", "-[P0P]", "-[P0T]", "1"],
];

/// Entries of `table` that differ from `expected`.
pub fn table_mismatches(table: &ProductTable, expected: &[[&str; 4]; 4]) -> usize {
    let mut bad = 0;
    for (r, row) in expected.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if table.cells.get(r).and_then(|x| x.get(c)).map(String::as_str) != Some(*cell) {
                bad += 1;
            }
        }
    }
    bad
}

fn groupoid_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let q = tables::quaternion_process()?;
    let m = q.metric().clone();
    let (p0, p1, p2) = (0, 1, 2);
    let ab = compose(&Extensive::new(p0, p1), &Extensive::new(p1, p2), &m, CompositionMode::Groupoid)?;
    c.exact(
        "[P0P1] o [P1P2] = [P0P2]",
        usize::from(!ab.equivalent(&Composite::Arrow(Extensive::new(p0, p2)), &m, 0.0)?),
    );
    let sq = compose(&Extensive::new(p0, p1), &Extensive::new(p0, p1), &m, CompositionMode::Groupoid)?;
    let v = sq.arrow().filter(|x| x.is_unit()).map(|x| x.unit_value(&m)).transpose()?;
    c.exact("[P0P1] o [P0P1] = -1", usize::from(v != Some(-1.0)));

    let mut m4 = Metric::new();
    for name in ["P0", "P1", "P2", "P3"] {
        m4.add(name, 1);
    }
    let (x, y) = (Extensive::new(0, 1), Extensive::new(2, 3));
    c.exact(
        "disjoint extensives are undefined",
        usize::from(compose(&x, &y, &m4, CompositionMode::Groupoid)? != Composite::Undefined),
    );
    c.exact(
        "incidence mode gives zero for disjoint extensives",
        usize::from(compose(&x, &y, &m4, CompositionMode::Incidence)? != Composite::Zero),
    );
    let inc = compose(&Extensive::new(0, 1), &Extensive::new(1, 2), &m4, CompositionMode::Incidence)?;
    c.exact(
        "incidence mode [AB][BC] = [AC]",
        usize::from(inc != Composite::Arrow(Extensive::new(0, 2))),
    );

    let (assoc, orient) = groupoid_laws(6, rng)?;
    c.exact("associativity on 6 points (exhaustive, 5 metrics)", assoc);
    c.exact("extensives sharing one point anticommute", orient);

    let squares = [
        (tables::quaternion_process()?, vec![-1i8, -1]),
        (tables::spacetime_process()?, vec![1, -1]),
        (tables::pauli_process()?, vec![1, 1, 1]),
    ];
    for (p, expected) in squares {
        c.exact(
            format!("build_clifford gives {}", p.algebra.signature),
            usize::from(p.algebra.signature.squares() != expected.as_slice()),
        );
    }
    let tq = tables::process_table(&tables::quaternion_process()?, CompositionMode::Groupoid)?;
    c.exact("C(0,2) table entries", table_mismatches(&tq, &QUATERNION_TABLE));
    let ts = tables::process_table(&tables::spacetime_process()?, CompositionMode::Groupoid)?;
    c.exact("C(1,1) table entries", table_mismatches(&ts, &SPACETIME_TABLE));

    iterant_checks(c, rng);
    Ok(())
}

/// Exhaustive associativity and orientation failures over all extensives on
/// `n` points for five metrics (all +1, then random).
pub fn groupoid_laws(n: usize, rng: &mut ChaCha8Rng) -> Result<(usize, usize)> {
    let mut assoc = 0;
    let mut orient = 0;
    for trial in 0..5 {
        let mut m = Metric::new();
        for p in 0..n {
            let s = if trial == 0 || rng.gen_bool(0.5) { 1 } else { -1 };
            m.add(&format!("P{p}"), s);
        }
        let all: Vec<Extensive> = (0..n)
            .flat_map(|a| (0..n).map(move |b| Extensive::new(a, b)))
            .collect();
        let g = CompositionMode::Groupoid;
        for a in &all {
            for b in &all {
                let ab = compose(a, b, &m, g)?;
                let shared = [a.source, a.target]
                    .iter()
                    .filter(|p| [b.source, b.target].contains(p))
                    .count();
                if !a.is_unit() && !b.is_unit() && shared == 1 {
                    let ba = compose(b, a, &m, g)?;
                    let neg = ba.arrow().map(|x| Composite::Arrow(x.with_strength(-x.strength)));
                    if !neg.is_some_and(|z| ab.equivalent(&z, &m, 0.0).unwrap_or(false)) {
                        orient += 1;
                    }
                }
                let Composite::Arrow(abx) = ab else { continue };
                for cc in &all {
                    let Composite::Arrow(bc) = compose(b, cc, &m, g)? else { continue };
                    let left = compose(&abx, cc, &m, g)?;
                    let right = compose(a, &bc, &m, g)?;
                    if matches!(left, Composite::Arrow(_))
                        && matches!(right, Composite::Arrow(_))
                        && !left.equivalent(&right, &m, 0.0)?
                    {
                        assoc += 1;
                    }
                }
            }
        }
    }
    Ok((assoc, orient))
}

fn iterant_checks(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let samples: Vec<Iterant> = (0..100)
        .map(|_| Iterant::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
        .collect();
    let count = |f: &dyn Fn(Iterant) -> bool| samples.iter().filter(|&&x| !f(x)).count();
    let z = Iterant::new(0.0, 0.0);
    let act = apply_operator;
    c.exact("a [A,B] = [B,0]", count(&|x| act(IterantOp::Lower, x) == Iterant::new(x.b, 0.0)));
    c.exact("a+ [A,B] = [0,A]", count(&|x| act(IterantOp::Raise, x) == Iterant::new(0.0, x.a)));
    c.exact("sigma_x [A,B] = [B,A]", count(&|x| act(IterantOp::SigmaX, x) == Iterant::new(x.b, x.a)));
    c.exact("p [A,B] = [0,B]", count(&|x| act(IterantOp::Project, x) == Iterant::new(0.0, x.b)));
    c.exact(
        "psi_L1 [A,B] = [A,A]",
        count(&|x| act(IterantOp::LeftIdealFirst, x) == Iterant::new(x.a, x.a)),
    );
    c.exact(
        "psi_L2 [A,B] = [B,B]",
        count(&|x| act(IterantOp::LeftIdealSecond, x) == Iterant::new(x.b, x.b)),
    );
    c.exact("vacuum a [A,0] = 0", count(&|x| act(IterantOp::Lower, Iterant::new(x.a, 0.0)) == z));
    c.exact("plenum a+ [0,B] = 0", count(&|x| act(IterantOp::Raise, Iterant::new(0.0, x.b)) == z));
    for op in [
        IterantOp::SigmaX,
        IterantOp::Project,
        IterantOp::LeftIdealFirst,
        IterantOp::LeftIdealSecond,
    ] {
        c.exact(
            format!("{op:?} composed from a, a+ matches its action"),
            count(&|x| composed_operator(op).apply(x) == act(op, x)),
        );
    }
    c.exact(
        "product [A,B][C,D] = [AC,BD] and sum",
        samples
            .windows(2)
            .filter(|w| {
                w[0] * w[1] != Iterant::new(w[0].a * w[1].a, w[0].b * w[1].b)
                    || w[0] + w[1] != Iterant::new(w[0].a + w[1].a, w[0].b + w[1].b)
            })
            .count(),
    );
    c.exact("[1,1] is the identity", count(&|x| x * Iterant::new(1.0, 1.0) == x));
    let (a, ad) = (IterantMap::lower(), IterantMap::raise());
    let commutator = a.then_after(&ad).minus(&ad.then_after(&a));
    c.exact(
        "sigma_z action equals a a+ - a+ a",
        count(&|x| commutator.apply(x) == act(IterantOp::SigmaZ, x)),
    );
    let bad = count(&|x| composed_operator(IterantOp::SigmaZ).apply(x) == act(IterantOp::SigmaZ, x));
    c.mismatch(
        "sigma_z = a - a+ (cases differing from [A,-B])",
        bad as f64,
        "expected mismatch: a - a+ gives [B,-A]",
    );
}

fn rotor_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let q = Arc::new(Signature::quaternion());
    let (e1, e2) = (Multivector::<f64>::basis(&q, 1), Multivector::<f64>::basis(&q, 2));
    let e12 = &e1 * &e2;
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let t = rng.gen_range(0.0..2.0 * PI);
        let g = lorentz::rotor(&e12, t)?;
        let got = g.apply(&e1)?;
        worst = worst.max(got.distance(&(e1.scale(t.cos()) + e2.scale(t.sin()))));
    }
    c.within("C(0,2) g e1 g^-1 = cos e1 + sin e2 (1000 angles)", worst, 1e-12);

    let p = Arc::new(Signature::pauli());
    let (f1, f2) = (Multivector::<f64>::basis(&p, 1), Multivector::<f64>::basis(&p, 2));
    let f12 = &f1 * &f2;
    let (mut worst, mut comp, mut norm): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..200 {
        let (t1, t2) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
        let g = lorentz::rotor(&f12, t1)?;
        worst = worst.max(g.apply(&f1)?.distance(&(f1.scale(t1.cos()) - f2.scale(t1.sin()))));
        let g12 = &g.element * &lorentz::rotor(&f12, t2)?.element;
        comp = comp.max(g12.distance(&lorentz::rotor(&f12, t1 + t2)?.element));
        let v = Multivector::vector(&p, &[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])?;
        let w = g.apply(&v)?;
        norm = norm.max(((&w * &w).scalar_part() - (&v * &v).scalar_part()).abs());
    }
    c.within("C(3,0) g e1 g^-1 = cos e1 - sin e2", worst, 1e-12);
    c.within("g(t1) g(t2) = g(t1 + t2)", comp, 1e-12);
    c.within("rotation preserves v^2", norm, 1e-12);
    let bad_planes = [&f1 + &f12, Multivector::basis(&p, 0b011) + Multivector::basis(&p, 0b100)];
    c.exact(
        "non-bivector planes rejected",
        bad_planes.iter().filter(|b| lorentz::rotor(b, 1.0).is_ok()).count(),
    );
    Ok(())
}

fn kcalculus_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let sig = Arc::new(Signature::lightcone());
    let (e0, e1) = (Multivector::<f64>::basis(&sig, 1), Multivector::<f64>::basis(&sig, 2));
    let (fwd, back) = (&e0 + &e1, &e0 - &e1);
    let (mut sand, mut kk, mut comp, mut lc): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..200 {
        let (v1, v2) = (rng.gen_range(-0.99..=0.99), rng.gen_range(-0.99..=0.99));
        let k = lorentz::k_factor(v1)?;
        let b = lorentz::boost(v1)?;
        sand = sand
            .max(b.apply(&fwd)?.distance(&fwd.scale(1.0 / k)))
            .max(b.apply(&back)?.distance(&back.scale(k)));
        let v12 = lorentz::add_velocities(v1, v2)?;
        kk = kk.max((k * lorentz::k_factor(v2)? - lorentz::k_factor(v12)?).abs());
        let g = &b.element * &lorentz::boost(v2)?.element;
        comp = comp.max(g.distance(&lorentz::boost(v12)?.element));
        let (t, x) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let moved = b.apply(&lorentz::event_vector(&sig, t, x))?;
        let (u, w) = lorentz::lorentz_lightcone(k, lorentz::lightcone_coords(t, x));
        let (t2, x2) = (moved.coeff(0b01), moved.coeff(0b10));
        lc = lc.max((t2 + x2 - u).abs()).max((t2 - x2 - w).abs());
    }
    c.within("boost sends e0+-e1 to k^-+1 (e0+-e1) (200 velocities)", sand, 1e-12);
    c.within("k(v1) k(v2) = k(v1 + v2 relativistic)", kk, 1e-12);
    c.within("boost(v1) boost(v2) = boost(v1 + v2 relativistic)", comp, 1e-12);
    c.within("boost acts as (u, w) -> (u/k, k w) on light-cone coordinates", lc, 1e-12);

    let (mut fd, mut conj, mut inv): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let h = 1e-5;
    for _ in 0..50 {
        let mut z = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let (al, be, ga) = (z(), z(), z());
        let p = SpinorParams::new(al, be, ga, -al);
        let (xi, eta) = (z(), z());
        let omega = lorentz::infinitesimal_lorentz(&p, Representation::Fundamental);
        let x = lorentz::spinor_null_vector(xi, eta);
        let plus = lorentz::apply_infinitesimal(&p, h, (xi, eta));
        let minus = lorentz::apply_infinitesimal(&p, -h, (xi, eta));
        let (xp, xm) = (lorentz::spinor_null_vector(plus.0, plus.1), lorentz::spinor_null_vector(minus.0, minus.1));
        let ox = lorentz::mat_vec(&omega, &x);
        for k in 0..4 {
            fd = fd.max(((xp[k] - xm[k]) / (2.0 * h) - ox[k]).abs());
        }
        let cp = p.conjugate_partner();
        let (s, t) = (z(), z());
        let y = lorentz::conjugate_null_vector(s, t);
        let (yp, ym) = (
            lorentz::apply_infinitesimal(&cp, h, (s, t)),
            lorentz::apply_infinitesimal(&cp, -h, (s, t)),
        );
        let (yp, ym) = (lorentz::conjugate_null_vector(yp.0, yp.1), lorentz::conjugate_null_vector(ym.0, ym.1));
        let oy = lorentz::mat_vec(&lorentz::infinitesimal_lorentz(&cp, Representation::Conjugate), &y);
        for k in 0..4 {
            conj = conj.max(((yp[k] - ym[k]) / (2.0 * h) - oy[k]).abs());
        }
        let (m, n) = (p.matrix(), cp.matrix());
        for i in 0..2 {
            for j in 0..2 {
                inv = inv.max((n[i][j] + m[j][i].conj()).norm());
            }
        }
    }
    c.within("spinor generator moves the null vector by omega x", fd, 1e-8);
    c.within("conjugate spinor induces the same omega", conj, 1e-8);
    c.within("conjugate generator is -M^dagger (Lambda2 = Lambda^dagger^-1)", inv, 1e-15);
    Ok(())
}

fn random_g(rng: &mut ChaCha8Rng) -> [f64; 4] {
    [0; 4].map(|_| rng.gen_range(-1.0..1.0))
}

fn hopf_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let dict = PauliDictionary::solve()?;
    let (mut closed, mut null, mut pen, mut interval): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..1000 {
        let g = random_g(rng);
        let v = spinor::hopf_map(g)?;
        let w = spinor::hopf_closed_form(g);
        closed = closed.max((0..4).map(|k| (v[k] - w[k]).abs()).fold(0.0, f64::max));
        let lifted = spinor::lift_null_vector(v)?;
        null = null.max((&lifted * &lifted).max_abs() / (v[0] * v[0]));
        let (p1, p2) = dict.psi_from_g(g);
        let pm = spinor::penrose_matrix(p1, p2);
        pen = pen.max((0..4).map(|k| (pm.as_array()[k] - v[k]).abs()).fold(0.0, f64::max));
        interval = interval.max(pm.interval().abs() / (v[0] * v[0]));
    }
    c.within("psi (1+e3) psi~ matches the closed-form Hopf map (1000 states)", closed, 1e-12);
    c.within("lifted C(3,1) vector squares to zero (relative to v0^2)", null, 1e-12);
    c.within("Penrose matrix equals Hopf image under the solved dictionary", pen, 1e-12);
    c.within("Penrose vector is null (relative to t^2)", interval, 1e-12);
    let expected = [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, -1.0, 0.0], [0.0, 0.0, 0.0, 1.0]];
    c.exact(
        "dictionary g = (a, b, -c, d)",
        usize::from(dict.g_from_abcd != expected),
    );
    Ok(())
}

fn chirality_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    type M = Multivector<Complex64>;
    let sig = Arc::new(Signature::dirac());
    let one = M::one(&sig);
    let pp: M = spinor::chirality_projector(&sig, Chirality::Plus)?;
    let pm: M = spinor::chirality_projector(&sig, Chirality::Minus)?;
    c.within("P+ + P- = 1", (&pp + &pm).distance(&one), 1e-15);
    c.within("P+^2 = P+, P-^2 = P-", (&pp * &pp).distance(&pp).max((&pm * &pm).distance(&pm)), 1e-15);
    c.within("P+ P- = 0", (&pp * &pm).max_abs(), 1e-15);
    let i = Complex64::i();
    let ie5 = spinor::pseudoscalar::<Complex64>(&sig).scale(i);
    let mut split: f64 = 0.0;
    for _ in 0..100 {
        let psi = M::random_complex(&sig, rng);
        let (a, b) = (spinor::chirality_project(&psi, Chirality::Plus)?, spinor::chirality_project(&psi, Chirality::Minus)?);
        split = split
            .max((&a + &b).distance(&psi))
            .max((&ie5 * &a).distance(&a))
            .max((&ie5 * &b).distance(&(-&b)));
    }
    c.within("psi = P+ psi + P- psi with i e5 eigenvalues +-1", split, 1e-12);

    let e = |labels: &[usize]| M::e(&sig, labels);
    let (e0, e2, e3) = (e(&[0])?, e(&[2])?, e(&[3])?);
    let (e03, e13, e01, e12, e023) = (e(&[0, 3])?, e(&[1, 3])?, e(&[0, 1])?, e(&[1, 2])?, e(&[0, 2, 3])?);
    let quarter = Complex64::new(0.25, 0.0);
    let minus = (&one - &ie5).scale(quarter);
    let plus = (&one + &ie5).scale(quarter);
    let listed = [
        (&minus * &(&one - &e03), -1.0),
        (&minus * &(&e13 + &e01), -1.0),
        (&plus * &(&e0 - &e3), 1.0),
        (&plus * &(&e2 + &e023), 1.0),
    ];
    let eps = (&one - &e03) * (&one + &e12.scale(i)).scale(quarter);
    let mut ideal: f64 = 0.0;
    let mut chir: f64 = 0.0;
    for (x, s) in &listed {
        ideal = ideal.max((x * &eps).distance(x));
        chir = chir.max((&ie5 * x).distance(&x.scale(Complex64::new(*s, 0.0))));
    }
    c.within("listed components lie in the left ideal of (1-e03)(1+i e12)/4", ideal, 1e-15);
    c.within("first pair has i e5 = -1, second pair +1", chir, 1e-15);
    let real = spinor::chirality_projector::<f64>(&sig, Chirality::Plus);
    c.exact("real ring rejected", usize::from(real != Err(Error::RealRing)));
    Ok(())
}

fn rand_spinor(rng: &mut ChaCha8Rng) -> spinor_types::S2 {
    [0; 2].map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

mod spinor_types {
    pub type S2 = [num_complex::Complex64; 2];
}

/// Null 6-vector `xi` whose projective point is `x`, scaled by `s`.
pub fn null_xi(x: [f64; 4], s: f64) -> [f64; 6] {
    let x2 = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    let (plus, minus) = (s, x2 * s);
    [x[0] * s, x[1] * s, x[2] * s, x[3] * s, (plus + minus) / 2.0, (plus - minus) / 2.0]
}

fn twistor_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let rep = ConformalRep::new();
    let id = DMatrix::<Complex64>::identity(8, 8);
    let mut anti: f64 = 0.0;
    for a in 0..6 {
        for b in 0..6 {
            let ac = &rep.betas[a] * &rep.betas[b] + &rep.betas[b] * &rep.betas[a];
            let want = if a == b {
                &id * Complex64::new(2.0 * ConformalRep::SQUARES[a], 0.0)
            } else {
                DMatrix::zeros(8, 8)
            };
            anti = anti.max((ac - want).camax());
        }
    }
    c.within("beta anticommutators give squares (+,-,-,-,-,+)", anti, 0.0);
    let n = &rep.betas[4] - &rep.betas[5];
    c.within("(beta4 - beta5)^2 = 0", (&n * &n).camax(), 0.0);

    let (mut group, mut block, mut incidence): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..100 {
        let mut dx = || [0; 4].map(|_| rng.gen_range(-2.0..2.0));
        let (a, b) = (dx(), dx());
        let ab = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
        let lhs = rep.translation(a) * rep.translation(b);
        group = group.max((lhs - rep.translation(ab)).camax());
        let psi = BiTwistor::at_origin(rand_spinor(rng), rand_spinor(rng));
        let moved = BiTwistor::from_vector(&(rep.translation(a) * psi.to_vector()))?;
        block = block.max(moved.max_abs_diff(&conformal::translate_bitwistor(&psi, a)));
        let xi = null_xi(a, 1.0);
        let r = conformal::incidence_relations(xi, &moved);
        incidence = incidence.max(r.iter().fold(0.0, |m: f64, v| m.max(*v)));
    }
    c.within("U(a) U(b) = U(a + b)", group, 1e-12);
    c.within("block translation matches the 8x8 operator", block, 1e-12);
    c.within("translated origin bi-twistor satisfies the incidence relations at x", incidence, 1e-12);

    let origin = conformal::incidence_kernel(&rep, [0.0, 0.0, 0.0, 0.0, 1.0, 1.0], 1e-10);
    let off = origin
        .iter()
        .map(|v| v.lambda2.iter().chain(&v.rho2).map(|z| z.norm()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    c.exact("origin kernel is 4-dimensional", origin.len().abs_diff(4));
    c.within("origin kernel has lambda2 = rho2 = 0", off, 1e-12);

    let (mut lines, mut literal): (f64, f64) = (0.0, 0.0);
    for _ in 0..20 {
        let x = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        let xi = null_xi(x, rng.gen_range(0.5..2.0));
        let kernel = conformal::incidence_kernel(&rep, xi, 1e-9);
        if kernel.len() != 4 {
            lines = f64::INFINITY;
            continue;
        }
        for v in &kernel {
            let r = conformal::incidence_relations(xi, v);
            lines = lines.max(r.iter().fold(0.0, |m: f64, v| m.max(*v)));
            literal = literal.max(lambda2_second_line(xi, v));
        }
    }
    c.within("kernel of beta.xi obeys the four block relations", lines, 1e-10);
    c.mismatch(
        "second relation with lambda2 in place of lambda1",
        literal,
        "expected mismatch: holds with lambda1",
    );
    c.exact(
        "xi4 + xi5 = 0 is the point at infinity",
        usize::from(conformal::projective_coords([1.0, 0.0, 0.0, 1.0, 1.0, -1.0]) != Err(Error::PointAtInfinity)),
    );
    Ok(())
}

fn lambda2_second_line(xi: [f64; 6], v: &BiTwistor) -> f64 {
    let i = Complex64::i();
    let minus = Complex64::new(xi[4] - xi[5], 0.0);
    let [t, x, y, z] = [xi[0], xi[1], xi[2], xi[3]];
    let m = [
        [Complex64::new(t - z, 0.0), Complex64::new(-x, y)],
        [Complex64::new(-x, -y), Complex64::new(t + z, 0.0)],
    ];
    (0..2)
        .map(|r| (v.lambda2[r] * minus - (m[r][0] * v.rho2[0] + m[r][1] * v.rho2[1]) * (-i)).norm())
        .fold(0.0, f64::max)
}

/// Refinement study settings used by the suite and the acceptance tests.
pub fn standard_studies() -> Vec<(&'static str, StudySetup)> {
    let base = |wave: WaveSpec, lo: f64, hi: f64| StudySetup {
        wave,
        dim: 1,
        lo,
        hi,
        sites: 201,
        dt: 0.05,
        t: 0.3,
        boundary: Boundary::Clamped,
    };
    vec![
        (
            "plane wave",
            base(
                WaveSpec::PlaneWave {
                    amplitude: 1.0,
                    k: vec![1.5],
                    mass: 1.0,
                },
                -5.0,
                5.0,
            ),
        ),
        (
            "free Gaussian",
            base(
                WaveSpec::Gaussian {
                    x0: 0.0,
                    k0: 1.0,
                    sigma: 1.0,
                    mass: 1.0,
                },
                -5.0,
                5.0,
            ),
        ),
        (
            "coherent state",
            base(
                WaveSpec::Coherent {
                    q0: 0.5,
                    p0: 0.3,
                    omega: 1.0,
                    mass: 1.0,
                },
                -5.0,
                5.0,
            ),
        ),
    ]
}

/// Worst deviation of successive residual ratios from 4, or 0 when all
/// levels sit at or below the rounding floor.
pub fn ratio_deviation(values: &[f64]) -> f64 {
    if values.iter().all(|&v| v <= bohm::RESIDUAL_FLOOR) {
        return 0.0;
    }
    bohm::ratios(values).iter().map(|r| (r - 4.0).abs()).fold(0.0, f64::max)
}

fn bohm_suite(c: &mut Checks) -> Result<()> {
    let g = Grid::interval(-5.0, 5.0, 401)?;
    let interior = |i: usize| g.is_interior(i, 2);
    let (k, m) = (1.5, 1.0);
    let plane = WaveSpec::PlaneWave {
        amplitude: 1.0,
        k: vec![k],
        mass: m,
    };
    let omega = WaveSpec::plane_wave_omega(&[k], m);
    let series = plane.sample_series(&g, 0.0, 1e-3, 3);
    let e = bohm::bohm_energy(&series, 1)?;
    let eb = bohm::energy_bilinear(&series, 1)?;
    let polar = bohm::decompose_polar(&series.slices[1])?;
    let p = bohm::bohm_momentum(&polar);
    let pb = bohm::momentum_bilinear(&series.slices[1])?;
    let dev = |vals: &[f64], target: f64| {
        vals.iter()
            .enumerate()
            .filter(|(i, _)| interior(*i))
            .map(|(_, v)| (v - target).abs())
            .fold(0.0, f64::max)
    };
    c.within("plane wave E = omega (phase route)", dev(&e.values, omega), 1e-10);
    c.within("plane wave E = omega (bilinear route)", dev(&eb.values, omega), 1e-10);
    c.within("plane wave P = k (phase route)", dev(&p[0].values, k), 1e-10);
    c.within("plane wave P = k (bilinear route)", dev(&pb[0].values, k), 1e-10);

    let gauss = WaveSpec::Gaussian {
        x0: 0.0,
        k0: 1.0,
        sigma: 1.0,
        mass: 1.0,
    };
    let gs = gauss.sample_series(&g, 0.2, 1e-3, 3);
    let (e1, e2) = (bohm::bohm_energy(&gs, 1)?, bohm::energy_bilinear(&gs, 1)?);
    c.within(
        "energy routes agree on the Gaussian",
        dev(&e1.values.iter().zip(&e2.values).map(|(a, b)| a - b).collect::<Vec<_>>(), 0.0),
        1e-10,
    );
    let g0 = bohm::decompose_polar(&gauss.sample(&g, 0.0))?;
    let env = (0..g.len())
        .map(|i| {
            let x = g.coords(i)[0];
            (g0.amplitude.values[i] - (2.0 * PI).powf(-0.25) * (-x * x / 4.0).exp()).abs()
        })
        .fold(0.0, f64::max);
    c.within("Gaussian amplitude matches its envelope", env, 1e-12);
    let centre = g.len() / 2;
    c.within(
        "Gaussian P(centre) = k0",
        (bohm::bohm_momentum(&g0)[0].values[centre] - 1.0).abs(),
        1e-6,
    );
    let wide = Grid::interval(-12.0, 12.0, 961)?;
    let (pr0, pr1) = (
        bohm::total_probability(&gauss.sample(&wide, 0.0))?,
        bohm::total_probability(&gauss.sample(&wide, 1.0))?,
    );
    c.within("total probability conserved (t = 0 to 1)", (pr0 - pr1).abs(), 1e-8);

    let mut qerr = Vec::new();
    for level in 0..4 {
        let n = 100 * (1 << level) + 1;
        let gq = Grid::interval(-5.0, 5.0, n)?;
        let pq = bohm::decompose_polar(&gauss.sample(&gq, 0.0))?;
        let q = bohm::quantum_potential(&pq, 1.0);
        let err = (0..gq.len())
            .filter(|&i| gq.is_interior(i, 1))
            .filter_map(|i| q.values[i].map(|v| (v - bohm::gaussian_quantum_potential(gq.coords(i)[0], 1.0, 1.0)).abs()))
            .fold(0.0, f64::max);
        qerr.push(err);
    }
    c.within("quantum potential error falls 4x per halving", ratio_deviation(&qerr), 0.8);

    for (name, setup) in standard_studies() {
        let rows = bohm::convergence_study(&setup, 4)?;
        for (k, label) in bohm::Residuals::NAMES.iter().enumerate() {
            let vals: Vec<f64> = rows.iter().map(|r| r.residuals.as_array()[k]).collect();
            c.within(format!("{name}: {label} ratio within 4 +- 0.8"), ratio_deviation(&vals), 0.8);
        }
        let gauss_like = name != "plane wave";
        if gauss_like {
            let h: Vec<f64> = rows.iter().map(|r| r.h).collect();
            let q: Vec<f64> = rows.iter().map(|r| r.residuals.qhj).collect();
            c.within(format!("{name}: qhj log-log slope 2 +- 0.2"), (bohm::loglog_slope(&h, &q) - 2.0).abs(), 0.2);
        }
    }

    let sig = Arc::new(Signature::pauli());
    let g3 = Grid::new(&[9, 9, 9], 0.1, &[0.0; 3], Boundary::Clamped)?;
    let values = (0..g3.len())
        .map(|i| {
            let x = g3.coords(i);
            let mut v = Multivector::scalar(&sig, (x[0] * 1.3).sin() * x[1].cos());
            v.set(0b001, x[2] * x[0] * x[0]);
            v.set(0b110, (x[1] - x[2]).exp());
            v
        })
        .collect();
    let f = FieldGrid::new(&g3, values)?;
    let d = DiracOperator::from_labels(&sig, &[1, 2, 3])?;
    let dd = d.left(&d.left(&f)?)?;
    let lap = f.wide_laplacian(&d.metric_weights()?);
    let resid = dd
        .values
        .iter()
        .zip(&lap.values)
        .enumerate()
        .filter(|(i, _)| g3.is_interior(*i, 2))
        .map(|(_, (a, b))| a.distance(b))
        .fold(0.0, f64::max);
    c.within("D^2 f equals the wide Laplacian on interior sites", resid, 1e-12);
    Ok(())
}

fn expectation_suite(c: &mut Checks, rng: &mut ChaCha8Rng) -> Result<()> {
    let sigs = [
        Signature::quaternion(),
        Signature::lightcone(),
        Signature::pauli(),
        Signature::dirac(),
        Signature::conformal(),
    ];
    for s in sigs {
        let sig = Arc::new(s);
        let mut worst: f64 = 0.0;
        let mut cyc: f64 = 0.0;
        for _ in 0..20 {
            let b = Multivector::<f64>::random(&sig, rng);
            worst = worst.max(BilinearInvariantSet::extract(&b).reconstruct().distance(&b));
            let a = Multivector::<f64>::random(&sig, rng);
            cyc = cyc.max(((&a * &b).trace() - (&b * &a).trace()).abs());
        }
        c.within(format!("{sig} extraction round trip"), worst, 1e-12);
        c.within(format!("{sig} trace cyclicity"), cyc, 1e-12);
    }

    let dict = PauliDictionary::solve()?;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let up = observables::spin_expectation(&dict.ideal_element(one, zero))?;
    let down = observables::spin_expectation(&dict.ideal_element(zero, one))?;
    c.exact("spin up = (0, 0, 1/2)", usize::from(up != [0.0, 0.0, 0.5]));
    c.exact("spin down = (0, 0, -1/2)", usize::from(down != [0.0, 0.0, -0.5]));
    let (mut mag, mut comp): (f64, f64) = (0.0, 0.0);
    for _ in 0..500 {
        let [a, b] = rand_spinor(rng);
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (p1, p2) = (a / n, b / n);
        let s = observables::spin_expectation(&dict.ideal_element(p1, p2))?;
        mag = mag.max(((s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt() - 0.5).abs());
        let x = p1 * p2.conj() + p2 * p1.conj();
        let y = Complex64::i() * (p1 * p2.conj() - p2 * p1.conj());
        let z = p1.norm_sqr() - p2.norm_sqr();
        let rho_s = observables::spin_vector(&dict.ideal_element(p1, p2))?;
        comp = comp.max((rho_s[0] - x.re).abs()).max((rho_s[1] - y.re).abs()).max((rho_s[2] - z).abs());
    }
    c.within("|<S>| = 1/2 for 500 normalized states", mag, 1e-12);
    c.within("rho S matches the two-spinor components", comp, 1e-12);

    let sig = Arc::new(Signature::pauli());
    let rho_up = spinor::pauli_idempotent();
    let e3 = Multivector::<f64>::basis(&sig, 0b100);
    c.within(
        "<e3> on (1+e3)/2, normalized, is 1",
        (observables::expectation(&e3, &rho_up, true)? - 1.0).abs(),
        1e-15,
    );
    c.within(
        "scalar part of e3 (1+e3)/2 is 1/2",
        ((&e3 * &rho_up).scalar_part() - 0.5).abs(),
        1e-15,
    );
    c.exact(
        "zero trace rejected",
        usize::from(observables::expectation(&e3, &e3, true) != Err(Error::ZeroTrace)),
    );

    let s = Arc::new(Signature::schrodinger());
    let e = Multivector::<f64>::basis(&s, 1);
    let eps = Multivector::one(&s);
    let (k, mass) = (1.5, 1.0);
    let w = WaveSpec::plane_wave_omega(&[k], mass);
    let (mut pe, mut ee): (f64, f64) = (0.0, 0.0);
    for _ in 0..50 {
        let (x, t) = (rng.gen_range(-5.0..5.0), rng.gen_range(0.0..2.0));
        let phase = k * x - w * t;
        let psi = Multivector::scalar(&s, phase.cos()) + e.scale(phase.sin());
        let dx = &e * &psi.scale(k);
        let dt = &e * &psi.scale(-w);
        let rho = (&psi * psi.clifford_conjugate()).scalar_part();
        let p = observables::differential_expectation(&-&e, &psi, &dx, &eps, DerivativeForm::Antisymmetric)?;
        let en = observables::differential_expectation(&e, &psi, &dt, &eps, DerivativeForm::Antisymmetric)?;
        pe = pe.max((p - rho * k).abs());
        ee = ee.max((en - rho * w).abs());
    }
    c.within("plane wave: -e d/dx expectation = rho k", pe, 1e-12);
    c.within("plane wave: e d/dt expectation = rho omega", ee, 1e-12);
    let psi = spinor::pauli_even(random_g(rng));
    let eps3 = spinor::pauli_idempotent();
    let sym = observables::differential_expectation(&e3, &psi, &psi, &eps3, DerivativeForm::Symmetric)?;
    let rho = &psi * &eps3 * psi.clifford_conjugate();
    c.within(
        "with the derivative suppressed the symmetric form is tr(B rho)",
        (sym - observables::expectation(&e3, &rho, false)?).abs(),
        1e-12,
    );
    Ok(())
}

fn weyl_suite(c: &mut Checks, orders: &[usize]) -> Result<()> {
    let (mut comm, mut res, mut orth, mut idem) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut cyc, mut down, mut vcyc, mut xl, mut pl, mut xact) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut four, mut unit, mut over, mut literal) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut orbit_missing = 0;
    for &n in orders {
        let w = WeylAlgebra::with_scales(n, 0.25, 0.5)?;
        let uv = w.product(&w.shift(), &w.clock())?;
        let vu = w.product(&w.clock(), &w.shift())?;
        comm = comm.max(uv.distance(&vu.scale(w.omega_pow(1)))?);
        let (mut un, mut vn) = (w.identity(), w.identity());
        for _ in 0..n {
            un = w.product(&un, &w.shift())?;
            vn = w.product(&vn, &w.clock())?;
        }
        comm = comm.max(un.distance(&w.identity())?).max(vn.distance(&w.identity())?);
        for family in [0, 1] {
            let eps = |j: usize| if family == 0 { w.idempotent_x(j) } else { w.idempotent_p(j) };
            let mut sum = w.zero();
            for j in 0..n {
                let ej = eps(j);
                sum = sum.add(&ej)?;
                idem = idem.max(w.product(&ej, &ej)?.distance(&ej)?);
                for l in 0..n {
                    if l != j {
                        orth = orth.max(w.product(&ej, &eps(l))?.distance(&w.zero())?);
                    }
                }
            }
            res = res.max(sum.distance(&w.identity())?);
        }
        let mut seen = vec![false; n];
        let mut cur = w.idempotent_x(0);
        for j in 0..n {
            let next = w.translate_idempotent(&cur)?;
            cyc = cyc.max(next.distance(&w.idempotent_x((j + 1) % n))?);
            if let Some(hit) = (0..n).find(|&l| cur.distance(&w.idempotent_x(l)).map(|d| d < 1e-12).unwrap_or(false)) {
                seen[hit] = true;
            }
            let by_u = w.product(&w.product(&w.shift(), &w.idempotent_x(j))?, &w.shift_inverse())?;
            down = down.max(by_u.distance(&w.idempotent_x((j + n - 1) % n))?);
            vcyc = vcyc.max(w.translate_momentum(&w.idempotent_p(j))?.distance(&w.idempotent_p((j + 1) % n))?);
            cur = next;
        }
        orbit_missing += seen.iter().filter(|s| !**s).count();
        let xs = w.hermitian_eigenvalues(&w.position_element())?;
        let ps = w.hermitian_eigenvalues(&w.momentum_element())?;
        for j in 0..n {
            xl = xl.max((xs[j] - j as f64 * w.delta_x).abs());
            pl = pl.max((ps[j] - j as f64 * w.delta_p).abs());
            let ej = w.idempotent_x(j);
            xact = xact.max(
                w.product(&w.position_element(), &ej)?
                    .distance(&ej.scale(Complex64::new(j as f64 * w.delta_x, 0.0)))?,
            );
        }
        let z = w.fourier_element();
        four = four.max(w.fourier_residual(&z)?);
        unit = unit.max(w.unitarity_residual(&z)?);
        for v in w.overlaps()? {
            over = over.max((v - 1.0 / n as f64).abs());
        }
        if n >= 3 {
            literal = literal.max(w.fourier_residual(&w.fourier_element_literal())?);
        }
    }
    c.within("UV = omega VU, U^n = V^n = 1", comm, 1e-12);
    c.within("both idempotent families sum to 1", res, 1e-12);
    c.within("idempotents are orthogonal", orth, 1e-12);
    c.within("idempotents square to themselves", idem, 1e-12);
    c.within("U^-1 eps_j U = eps_(j+1)", cyc, 1e-12);
    c.exact("translation orbit visits every x-point", orbit_missing);
    c.within("U eps_j U^-1 = eps_(j-1)", down, 1e-12);
    c.within("V eps'_j V^-1 = eps'_(j+1)", vcyc, 1e-12);
    c.within("X eigenvalues are j delta_x", xl, 1e-12);
    c.within("P eigenvalues are j delta_p", pl, 1e-12);
    c.within("X eps_j = j delta_x eps_j", xact, 1e-12);
    c.within("eps'_j = Z^-1 eps_j Z with the discrete Fourier Z", four, 1e-10);
    c.within("Z Z^dagger = 1", unit, 1e-12);
    c.within("|tr(eps_j eps'_l)| = 1/n", over, 1e-12);
    if orders.iter().any(|&n| n >= 3) {
        c.mismatch(
            "literal Z coefficient formula",
            literal,
            "expected mismatch: not unitary for n >= 3",
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn same_seed_same_report() {
        let opts = VerifyOptions {
            seed: 7,
            ..Default::default()
        };
        assert_eq!(run(Suite::Hopf, &opts).unwrap(), run(Suite::Hopf, &opts).unwrap());
    }
}
