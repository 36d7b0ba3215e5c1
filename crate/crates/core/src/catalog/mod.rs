//! Named subalgebras of `sp(4, R)` with their expected invariants.
//!
//! Every entry is stored as an explicit generator set, possibly depending on a sign `eps` or
//! a real parameter `a` / `lambda`. Verification recomputes closure, dimension, the first
//! prolongation and the finite-type verdict, and compares them with the stored expectations.

mod goursat;

pub use goursat::{
    goursat_quintuple, goursat_subalgebra, sl2_bracket, table_one, GoursatError, GoursatQuintuple, Sl2Part,
};

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact_linalg::{q, qi, Matrix, Scalar, Subspace};
use crate::prolongation::{finite_type_verdict, LinearSubalgebra, ProlongError, WitnessGrid};
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("entry {entry} has no parameter {param:?}")]
    UnknownParameter { entry: String, param: String },
    #[error("entry {entry} needs parameter {param:?}")]
    MissingParameter { entry: String, param: String },
    #[error("entry {entry}: illegal value {value} for parameter {param} ({rule})")]
    IllegalParameter { entry: String, param: String, value: String, rule: &'static str },
    #[error(transparent)]
    Prolong(#[from] ProlongError),
}

/// Admissible values of a catalog parameter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamKind {
    /// `+1` or `-1`.
    Sign,
    /// `-1`, `0` or `+1`.
    SignOrZero,
    NonZero,
    Positive,
    Any,
}

impl ParamKind {
    fn admits(self, v: &Scalar) -> bool {
        match self {
            ParamKind::Sign => v.abs().is_one(),
            ParamKind::SignOrZero => v.is_zero() || v.abs().is_one(),
            ParamKind::NonZero => !v.is_zero(),
            ParamKind::Positive => v.is_positive(),
            ParamKind::Any => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Sign => "sign",
            ParamKind::SignOrZero => "sign-or-zero",
            ParamKind::NonZero => "nonzero",
            ParamKind::Positive => "positive",
            ParamKind::Any => "any",
        }
    }

    pub fn rule(self) -> &'static str {
        match self {
            ParamKind::Sign => "must be 1 or -1",
            ParamKind::SignOrZero => "must be -1, 0 or 1",
            ParamKind::NonZero => "must be nonzero",
            ParamKind::Positive => "must be positive",
            ParamKind::Any => "any rational",
        }
    }

    /// Representative values used when verifying the whole catalog.
    pub fn samples(self) -> Vec<Scalar> {
        match self {
            ParamKind::Sign => vec![qi(-1), qi(1)],
            ParamKind::SignOrZero => vec![qi(-1), qi(0), qi(1)],
            ParamKind::NonZero => vec![qi(-1), qi(1), qi(2)],
            ParamKind::Positive => vec![qi(1), qi(2), q(1, 3)],
            ParamKind::Any => vec![qi(-1), qi(0), qi(1), qi(2), q(1, 2)],
        }
    }
}

pub type Params = BTreeMap<String, Scalar>;

/// Formats parameters as `a=2,eps=-1`, or `-` when there are none.
pub fn format_params(p: &Params) -> String {
    if p.is_empty() {
        return "-".to_string();
    }
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// Parses `name=value` pairs.
pub fn parse_params(items: &[String]) -> Result<Params, String> {
    let mut p = Params::new();
    for it in items {
        let (k, v) = it.split_once('=').ok_or_else(|| format!("expected name=value, got {it:?}"))?;
        let v = crate::exact_linalg::parse_rational(v).map_err(|e| e.to_string())?;
        p.insert(k.trim().to_string(), v);
    }
    Ok(p)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expected {
    pub dim: usize,
    pub finite: bool,
    pub dim_h1: Option<usize>,
}

type Builder = fn(&Params) -> Vec<SymTensor<Scalar>>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub group: &'static str,
    pub label: &'static str,
    pub params: Vec<(&'static str, ParamKind)>,
    pub expected: Expected,
    build: Builder,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).finish()
    }
}

impl CatalogEntry {
    pub fn check_params(&self, p: &Params) -> Result<(), CatalogError> {
        for k in p.keys() {
            if !self.params.iter().any(|(n, _)| n == k) {
                return Err(CatalogError::UnknownParameter { entry: self.name.into(), param: k.clone() });
            }
        }
        for (n, kind) in &self.params {
            let v = p
                .get(*n)
                .ok_or_else(|| CatalogError::MissingParameter { entry: self.name.into(), param: n.to_string() })?;
            if !kind.admits(v) {
                return Err(CatalogError::IllegalParameter {
                    entry: self.name.into(),
                    param: n.to_string(),
                    value: v.to_string(),
                    rule: kind.rule(),
                });
            }
        }
        Ok(())
    }

    pub fn generators(&self, p: &Params) -> Result<Vec<SymTensor<Scalar>>, CatalogError> {
        self.check_params(p)?;
        Ok((self.build)(p))
    }

    pub fn instantiate(&self, p: &Params) -> Result<LinearSubalgebra, CatalogError> {
        Ok(LinearSubalgebra::new(space(), &self.generators(p)?)?)
    }

    /// All combinations of representative parameter values.
    pub fn sample_params(&self) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for (n, kind) in &self.params {
            let mut next = Vec::new();
            for p in &out {
                for v in kind.samples() {
                    let mut p = p.clone();
                    p.insert(n.to_string(), v);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }
}

pub fn space() -> SymplecticSpace {
    SymplecticSpace::new(2)
}

/// Parses a tensor literal over `R^4`.
pub fn t(s: &str) -> SymTensor<Scalar> {
    space().parse(s).expect("valid tensor literal")
}

fn lc(terms: &[(Scalar, SymTensor<Scalar>)]) -> SymTensor<Scalar> {
    terms.iter().fold(SymTensor::zero(), |acc, (c, x)| acc.add(&x.scale(c)))
}

fn par(p: &Params, k: &str) -> Scalar {
    p.get(k).cloned().unwrap_or_else(Scalar::zero)
}

/// `e0 = (p1^2 + p2^2)/2`.
pub fn e0() -> SymTensor<Scalar> {
    t("1/2*p1^2 + 1/2*p2^2")
}

/// `e1 = (p1^2 - p2^2)/2`.
pub fn e1() -> SymTensor<Scalar> {
    t("1/2*p1^2 - 1/2*p2^2")
}

/// `e2 = p1 p2`.
pub fn e2() -> SymTensor<Scalar> {
    t("p1*p2")
}

/// `F = -(p1 q1 + p2 q2)/2`.
pub fn big_f() -> SymTensor<Scalar> {
    t("-1/2*p1*q1 - 1/2*p2*q2")
}

/// `K1 = (p1 q1 - p2 q2)/2`.
pub fn k1() -> SymTensor<Scalar> {
    t("1/2*p1*q1 - 1/2*p2*q2")
}

/// `K2 = (p1 q2 + p2 q1)/2`.
pub fn k2() -> SymTensor<Scalar> {
    t("1/2*p1*q2 + 1/2*p2*q1")
}

/// `L3 = -(p1 q2 - p2 q1)/2`.
pub fn l3() -> SymTensor<Scalar> {
    t("-1/2*p1*q2 + 1/2*p2*q1")
}

/// Lorentzian quadratic form `4 x1 x3 - x2^2` on `x1 p1^2 + x2 p1 p2 + x3 p2^2`.
///
/// `e0` has norm 1 while `e1` and `e2` have norm -1.
pub fn lorentz_norm(x: &SymTensor<Scalar>) -> Scalar {
    -crate::prolongation::s2p_discriminant(&space(), x)
}

fn basis_map(images: [&str; 4]) -> Matrix<Scalar> {
    let cols: Vec<Vec<Scalar>> = images
        .iter()
        .map(|src| {
            let v = t(src);
            (0..4).map(|k| v.linear_coefficient(k)).collect()
        })
        .collect();
    Matrix::from_cols(4, cols).expect("4x4")
}

/// Complex structure `p_j -> q_j`, `q_j -> -p_j`, compatible with a definite metric.
pub fn complex_structure_j() -> Matrix<Scalar> {
    basis_map(["q1", "q2", "-p1", "-p2"])
}

/// Complex structure whose associated metric has signature (2, 2).
pub fn complex_structure_split() -> Matrix<Scalar> {
    basis_map(["q1", "-q2", "-p1", "p2"])
}

/// Complex structure with `J* Omega = -Omega`.
pub fn complex_structure_anti() -> Matrix<Scalar> {
    basis_map(["p2", "-p1", "-q2", "q1"])
}

/// Elements of `sp(4, R)` commuting with the given matrix.
pub fn commutant(m: &Matrix<Scalar>) -> Subspace<Scalar> {
    let s = space();
    let basis = s.sym_basis(2);
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| {
            let a = s.quad_to_matrix(&SymTensor::monomial(b.clone(), Scalar::one())).expect("quadratic");
            a.commutator(m).to_vec()
        })
        .collect();
    let mat = Matrix::from_cols(16, cols).expect("shape");
    Subspace::span(basis.len(), &mat.kernel()).expect("shape")
}

fn fixed(src: &'static [&'static str]) -> Vec<SymTensor<Scalar>> {
    src.iter().map(|x| t(x)).collect()
}

macro_rules! entry {
    ($name:expr, $group:expr, $label:expr, [$($p:expr),*], ($dim:expr, $fin:expr, $h1:expr), $build:expr) => {
        CatalogEntry {
            name: $name,
            group: $group,
            label: $label,
            params: vec![$($p),*],
            expected: Expected { dim: $dim, finite: $fin, dim_h1: $h1 },
            build: $build,
        }
    };
}

const EPS: (&str, ParamKind) = ("eps", ParamKind::Sign);
const EPS0: (&str, ParamKind) = ("eps", ParamKind::SignOrZero);

fn u2() -> Vec<SymTensor<Scalar>> {
    fixed(&["p1^2 + q1^2", "p2^2 + q2^2", "p1*p2 + q1*q2", "p1*q2 - p2*q1"])
}

fn u11() -> Vec<SymTensor<Scalar>> {
    fixed(&["p1^2 + q1^2", "p2^2 + q2^2", "p1*p2 - q1*q2", "p1*q2 + p2*q1"])
}

fn sl2_irreducible() -> Vec<SymTensor<Scalar>> {
    fixed(&["p1*q2 + p2^2", "3*p1*q1 + p2*q2", "3*p2*q1 - q2^2"])
}

fn gl_p() -> Vec<SymTensor<Scalar>> {
    fixed(&["p1*q1", "p1*q2", "p2*q1", "p2*q2"])
}

fn d412(p: &Params) -> Vec<SymTensor<Scalar>> {
    vec![t("p1*q1").add(&t("p2^2").scale(&par(p, "eps"))), t("p2*q1")]
}

fn eps_line(p: &Params) -> Vec<SymTensor<Scalar>> {
    vec![t("p2^2 + q2^2").add(&t("p1^2").scale(&par(p, "eps")))]
}

/// The full catalog, sorted by name.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut v = vec![
        // maximal subalgebras
        entry!("maximal/s1", "maximal", "sp(V1)+sp(V2)", [], (6, false, Some(8)), |_| fixed(&[
            "p1^2", "p1*q1", "q1^2", "p2^2", "p2*q2", "q2^2"
        ])),
        entry!("maximal/s2", "maximal", "u(2)", [], (4, true, Some(0)), |_| u2()),
        entry!("maximal/s3", "maximal", "u(1,1)", [], (4, true, Some(0)), |_| u11()),
        entry!("maximal/s4", "maximal", "sl(2,C)", [], (6, false, Some(8)), |_| sl2c()),
        entry!("maximal/s5", "maximal", "sl(2,R) on S^3(R^2)", [], (3, true, Some(0)), |_| sl2_irreducible()),
        entry!("maximal/p1", "maximal", "p1", [], (7, false, Some(10)), |_| crate::prolongation::Parabolic::P1
            .generators()),
        entry!("maximal/p2", "maximal", "p2", [], (7, false, Some(11)), |_| crate::prolongation::Parabolic::P2
            .generators()),
        // maximal subalgebras of finite type
        entry!("main/u2", "main", "u(2)", [], (4, true, Some(0)), |_| u2()),
        entry!("main/u11", "main", "u(1,1)", [], (4, true, Some(0)), |_| u11()),
        entry!("main/gl(P)", "main", "gl(P)", [], (4, true, Some(0)), |_| gl_p()),
        entry!("main/sl2^4", "main", "sl(2,R) on S^3(R^2)", [], (3, true, Some(0)), |_| sl2_irreducible()),
        entry!("main/so2+diag", "main", "so(2)+R diag(1,-1)", [], (2, true, Some(0)), |_| fixed(&[
            "p1^2 + q1^2",
            "p2*q2"
        ])),
        entry!("main/D_{4,12}", "main", "D_{4,12}", [EPS], (2, true, Some(0)), d412),
        entry!("main/line", "main", "R(p2^2+q2^2+eps p1^2)", [EPS], (1, true, Some(0)), eps_line),
        // finite type inside s1
        entry!("s1/h1-split", "s1", "Cartan pair (diag, diag)", [], (2, true, Some(0)), |_| fixed(&["p1*q1", "p2*q2"])),
        entry!("s1/h1-compact", "s1", "Cartan pair (so2, so2)", [], (2, true, Some(0)), |_| fixed(&[
            "p1^2 + q1^2",
            "p2^2 + q2^2"
        ])),
        entry!("s1/h1-mixed", "s1", "Cartan pair (so2, diag)", [], (2, true, Some(0)), |_| fixed(&[
            "p1^2 + q1^2",
            "p2*q2"
        ])),
        entry!("s1/h2", "s1", "diagonal sl(2)", [], (3, true, Some(0)), |_| fixed(&[
            "p1^2 + p2^2",
            "p1*q1 + p2*q2",
            "q1^2 + q2^2"
        ])),
        entry!("s1/h3", "s1", "twisted diagonal sl(2)", [], (3, true, Some(0)), |_| fixed(&[
            "p1^2 - p2^2",
            "p1*q1 + p2*q2",
            "q1^2 - q2^2"
        ])),
        // finite type inside p1
        entry!("p1/co(1,2)", "p1", "co(1,2)", [], (4, true, Some(0)), |_| gl_p()),
        entry!("p1/DF_{3,5}", "p1", "DF_{3,5}", [], (3, true, Some(0)), |_| vec![big_f(), k1(), e2()]),
        entry!("p1/DF_{5,3}", "p1", "DF_{5,3}", [], (3, true, Some(0)), |_| vec![big_f(), l3(), e0()]),
        entry!("p1/D_{4,12}", "p1", "D_{4,12}", [EPS], (2, true, Some(0)), table_d412),
        entry!("p1/D_{4,13}", "p1", "D_{4,13}", [EPS], (2, true, Some(0)), table_d413),
        entry!("p1/D_{6,14}", "p1", "D_{6,14}", [EPS], (2, true, Some(0)), table_d614),
        // normal forms in p1
        entry!("p1-table/F_{6,5}", "p1-table", "F_{6,5}", [], (1, true, Some(0)), |_| vec![e2()]),
        entry!("p1-table/F_{6,6}", "p1-table", "F_{6,6}", [], (1, true, Some(0)), |_| vec![e0()]),
        entry!("p1-table/F_{3,5}", "p1-table", "F_{3,5}", [], (2, true, Some(0)), |_| vec![k1(), e2()]),
        entry!("p1-table/F_{5,3}", "p1-table", "F_{5,3}", [], (2, true, Some(0)), |_| vec![l3(), e0()]),
        entry!("p1-table/DF_{6,5}", "p1-table", "DF_{6,5}", [], (2, true, Some(0)), |_| vec![big_f(), e2()]),
        entry!("p1-table/DF_{6,6}", "p1-table", "DF_{6,6}", [], (2, true, Some(0)), |_| vec![big_f(), e0()]),
        entry!("p1-table/DF_{3,5}", "p1-table", "DF_{3,5}", [], (3, true, Some(0)), |_| vec![big_f(), k1(), e2()]),
        entry!("p1-table/DF_{5,3}", "p1-table", "DF_{5,3}", [], (3, true, Some(0)), |_| vec![big_f(), l3(), e0()]),
        entry!("p1-table/Ft_{3,9}", "p1-table", "F~_{3,9}", [("a", ParamKind::NonZero)], (1, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), k1()), (par(p, "a"), e2())])]
        }),
        entry!("p1-table/Ft_{4,7}", "p1-table", "F~_{4,7}", [EPS], (1, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), k2()), (Scalar::one(), l3()), (par(p, "eps"), e0().add(&e1()))])]
        }),
        entry!("p1-table/Ft_{5,6}", "p1-table", "F~_{5,6}", [("a", ParamKind::NonZero)], (1, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), l3()), (par(p, "a"), e0())])]
        }),
        entry!("p1-table/D_{4,12}", "p1-table", "D_{4,12}", [EPS], (2, true, Some(0)), table_d412),
        entry!("p1-table/D_{4,13}", "p1-table", "D_{4,13}", [EPS], (2, true, Some(0)), table_d413),
        entry!("p1-table/D_{4,13}-alt", "p1-table", "D_{4,13}", [EPS], (2, true, Some(0)), |p| {
            vec![t("p1*q1 + 3*p2*q2"), t("p2*q1").add(&t("p1^2").scale(&par(p, "eps")))]
        }),
        entry!("p1-table/D_{6,13}", "p1-table", "D_{6,13}", [("a", ParamKind::Positive)], (2, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), big_f()), (par(p, "a"), k1())]), e2()]
        }),
        entry!("p1-table/D_{6,14}", "p1-table", "D_{6,14}", [EPS], (2, true, Some(0)), table_d614),
        entry!("p1-table/D_{6,15}", "p1-table", "D_{6,15}", [("a", ParamKind::NonZero)], (2, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), big_f()), (par(p, "a"), l3())]), e0()]
        }),
        entry!("p1-table/D_{6,22}", "p1-table", "D_{6,22}", [EPS], (1, true, Some(0)), |p| {
            vec![lc(&[(Scalar::one(), big_f()), (Scalar::one(), k1()), (par(p, "eps"), e0().add(&e1()))])]
        }),
        // finite type inside p2
        entry!("p2/1", "p2", "span(p2q2, p1q1, p1p2)", [], (3, true, Some(0)), |_| fixed(&["p2*q2", "p1*q1", "p1*p2"])),
        entry!("p2/2", "p2", "span(p2^2+q2^2, p1q1)", [], (2, true, Some(0)), |_| fixed(&["p2^2 + q2^2", "p1*q1"])),
        entry!("p2/3", "p2", "span(p2q2+eps p1^2, p1p2)", [EPS], (2, true, Some(0)), |p| {
            vec![t("p2*q2").add(&t("p1^2").scale(&par(p, "eps"))), t("p1*p2")]
        }),
        entry!("p2/4", "p2", "R(p2^2+q2^2+eps p1^2)", [EPS], (1, true, Some(0)), eps_line),
        entry!("p2/5", "p2", "span(p2^2+eps p1^2, p1q1+p2q2)", [EPS], (2, true, Some(0)), |p| {
            vec![t("p2^2").add(&t("p1^2").scale(&par(p, "eps"))), t("p1*q1 + p2*q2")]
        }),
        entry!("p2/6", "p2", "span(p2^2+eps p1q2, 3p1q1+p2q2)", [EPS], (2, true, Some(0)), |p| {
            vec![t("p2^2").add(&t("p1*q2").scale(&par(p, "eps"))), t("3*p1*q1 + p2*q2")]
        }),
        // subalgebras of p2 arising in the case analysis
        entry!("p2-cases/i", "p2-cases", "span(p2^2, p2q2+eps p1^2, p1p2)", [EPS0], (3, false, None), |p| {
            vec![t("p2^2"), t("p2*q2").add(&t("p1^2").scale(&par(p, "eps"))), t("p1*p2")]
        }),
        entry!("p2-cases/ii", "p2-cases", "span(p2^2+eps p1^2, p1p2)", [EPS], (2, false, None), |p| {
            vec![t("p2^2").add(&t("p1^2").scale(&par(p, "eps"))), t("p1*p2")]
        }),
        entry!("p2-cases/iii", "p2-cases", "span(p2q2+eps p1^2, p1p2)", [EPS0], (2, true, Some(0)), |p| {
            vec![t("p2*q2").add(&t("p1^2").scale(&par(p, "eps"))), t("p1*p2")]
        }),
        entry!("p2-cases/iv", "p2-cases", "R p1p2", [], (1, true, Some(0)), |_| fixed(&["p1*p2"])),
        entry!("p2-cases/v", "p2-cases", "sl(W)", [], (3, false, Some(4)), |_| fixed(&["p2^2", "p2*q2", "q2^2"])),
        entry!("p2-cases/vi", "p2-cases", "span(p2^2, p2q2+eps p1^2)", [EPS0], (2, false, None), |p| {
            vec![t("p2^2"), t("p2*q2").add(&t("p1^2").scale(&par(p, "eps")))]
        }),
        entry!("p2-cases/vii", "p2-cases", "R(p2q2+eps p1^2)", [EPS0], (1, true, Some(0)), |p| {
            vec![t("p2*q2").add(&t("p1^2").scale(&par(p, "eps")))]
        }),
        entry!("p2-cases/viii", "p2-cases", "R(p2^2+q2^2+eps p1^2)", [EPS0], (1, true, Some(0)), eps_line),
        entry!("p2-cases/ix", "p2-cases", "R(p2^2+eps p1^2)", [EPS], (1, true, Some(0)), |p| {
            vec![t("p2^2").add(&t("p1^2").scale(&par(p, "eps")))]
        }),
        entry!("p2-cases/x", "p2-cases", "R(p2^2+eps p1q2)", [EPS], (1, true, Some(0)), |p| {
            vec![t("p2^2").add(&t("p1*q2").scale(&par(p, "eps")))]
        }),
        entry!(
            "p2-nonsplit/lambda",
            "p2-nonsplit",
            "span(p1p2, p1q1+lambda p2q2)",
            [("lambda", ParamKind::Any)],
            (2, true, Some(0)),
            |p| { vec![t("p1*p2"), t("p1*q1").add(&t("p2*q2").scale(&par(p, "lambda")))] }
        ),
        entry!("p2-nonsplit/eps", "p2-nonsplit", "span(p1p2, p1q1+eps p2^2)", [EPS], (2, true, Some(0)), |p| {
            vec![t("p1*p2"), t("p1*q1").add(&t("p2^2").scale(&par(p, "eps")))]
        }),
    ];
    v.sort_by(|a, b| a.name.cmp(b.name));
    v
}

fn sl2c() -> Vec<SymTensor<Scalar>> {
    fixed(&["p1^2 - p2^2", "p1*p2", "p1*q1 + p2*q2", "p1*q2 - p2*q1", "q1^2 - q2^2", "q1*q2"])
}

fn table_d412(p: &Params) -> Vec<SymTensor<Scalar>> {
    let eps = par(p, "eps");
    vec![lc(&[(Scalar::one(), big_f()), (-Scalar::one(), k1()), (eps, e0().sub(&e1()))]), k2().add(&l3())]
}

fn table_d413(p: &Params) -> Vec<SymTensor<Scalar>> {
    let eps = par(p, "eps");
    vec![
        lc(&[(Scalar::one(), big_f()), (q(1, 2), k1())]),
        lc(&[(Scalar::one(), k2()), (Scalar::one(), l3()), (eps, e0().add(&e1()))]),
    ]
}

fn table_d614(p: &Params) -> Vec<SymTensor<Scalar>> {
    let eps = par(p, "eps");
    vec![lc(&[(Scalar::one(), big_f()), (Scalar::one(), k1()), (eps, e0().add(&e1()))]), e2()]
}

/// Looks up entries by exact name, or else by label.
pub fn lookup(name: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let all = catalog();
    if all.iter().any(|e| e.name == name) {
        return Ok(all.into_iter().filter(|e| e.name == name).collect());
    }
    let hits: Vec<CatalogEntry> = all.into_iter().filter(|e| e.label == name).collect();
    if hits.is_empty() {
        Err(CatalogError::UnknownEntry(name.to_string()))
    } else {
        Ok(hits)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub name: String,
    pub params: Params,
    pub dim: usize,
    pub dim_h1: usize,
    pub verdict: &'static str,
    pub evidence: String,
    pub expected: Expected,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_entry(entry: &CatalogEntry, p: &Params, grid: &WitnessGrid) -> Result<VerifyReport, CatalogError> {
    entry.check_params(p)?;
    let mut failures = Vec::new();
    let (dim, dim_h1, verdict, evidence) = match entry.instantiate(p) {
        Ok(h) => {
            let r = finite_type_verdict(&h, grid);
            let ev = r.evidence(&space());
            (r.dim, r.dim_h1, r.verdict, ev)
        }
        Err(CatalogError::Prolong(ProlongError::NotSubalgebra(i, j))) => {
            failures.push(format!("not closed: [g{i}, g{j}]"));
            let dim = space().span(2, &entry.generators(p)?).map(|s| s.dim()).unwrap_or(0);
            (dim, 0, crate::prolongation::TypeVerdict::Undecided, "not a subalgebra".to_string())
        }
        Err(e) => return Err(e),
    };
    let ex = &entry.expected;
    if dim != ex.dim {
        failures.push(format!("dim {dim} != expected {}", ex.dim));
    }
    if let Some(h1) = ex.dim_h1 {
        if h1 != dim_h1 {
            failures.push(format!("dim_h1 {dim_h1} != expected {h1}"));
        }
    }
    let ok_type = if ex.finite { verdict.is_finite() } else { verdict.is_infinite() };
    if !ok_type {
        failures.push(format!(
            "verdict {} != expected {}",
            verdict.label(),
            if ex.finite { "finite" } else { "infinite" }
        ));
    }
    Ok(VerifyReport {
        name: entry.name.to_string(),
        params: p.clone(),
        dim,
        dim_h1,
        verdict: verdict.label(),
        evidence,
        expected: ex.clone(),
        failures,
    })
}

/// Verifies every entry at every representative parameter value, ordered by name and parameters.
pub fn verify_all(grid: &WitnessGrid) -> Vec<VerifyReport> {
    let jobs: Vec<(CatalogEntry, Params)> = catalog()
        .into_iter()
        .flat_map(|e| {
            let ps = e.sample_params();
            let name = e.name;
            ps.into_iter().map(move |p| (lookup(name).expect("present").remove(0), p))
        })
        .collect();
    let mut out: Vec<VerifyReport> =
        jobs.par_iter().map(|(e, p)| verify_entry(e, p, grid).expect("sample parameters are admissible")).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| format_params(&a.params).cmp(&format_params(&b.params))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique() {
        let c = catalog();
        for w in c.windows(2) {
            assert_ne!(w[0].name, w[1].name);
        }
    }

    #[test]
    fn illegal_parameters() {
        let e = lookup("p1-table/D_{6,13}").unwrap().remove(0);
        let mut p = Params::new();
        p.insert("a".into(), qi(-1));
        assert!(matches!(e.check_params(&p), Err(CatalogError::IllegalParameter { .. })));
        p.insert("a".into(), qi(1));
        assert!(e.check_params(&p).is_ok());
        assert!(matches!(e.check_params(&Params::new()), Err(CatalogError::MissingParameter { .. })));
    }

    #[test]
    fn stored_generators_match_commutants() {
        let s = space();
        let check = |name: &str, m: Matrix<Scalar>| {
            let e = lookup(name).unwrap().remove(0);
            let h = s.span(2, &e.generators(&Params::new()).unwrap()).unwrap();
            assert_eq!(h, commutant(&m), "{name}");
        };
        check("maximal/s2", complex_structure_j());
        check("maximal/s3", complex_structure_split());
        check("maximal/s4", complex_structure_anti());
    }

    #[test]
    fn complex_structures() {
        let s = space();
        let om = s.omega_matrix();
        let minus_one = Matrix::<Scalar>::identity(4).scale(&qi(-1));
        for j in [complex_structure_j(), complex_structure_split(), complex_structure_anti()] {
            assert_eq!(j.mul(&j), minus_one);
        }
        assert_eq!(complex_structure_j().transpose().mul(&om).mul(&complex_structure_j()), om);
        assert_eq!(complex_structure_anti().transpose().mul(&om).mul(&complex_structure_anti()), om.scale(&qi(-1)));
    }

    #[test]
    fn whole_catalog_verifies() {
        let bad: Vec<_> = verify_all(&WitnessGrid::default()).into_iter().filter(|r| !r.passed()).collect();
        for r in &bad {
            eprintln!("{} {}: {:?}", r.name, format_params(&r.params), r.failures);
        }
        assert!(bad.is_empty());
    }

    #[test]
    fn lorentz_norms() {
        assert_eq!(lorentz_norm(&e0()), qi(1));
        assert_eq!(lorentz_norm(&e1()), qi(-1));
        assert_eq!(lorentz_norm(&e2()), qi(-1));
        // S^2(P) part of the first generator of p2/5
        let item5 = |eps: i64| {
            let mut p = Params::new();
            p.insert("eps".into(), qi(eps));
            lorentz_norm(&lookup("p2/5").unwrap()[0].generators(&p).unwrap()[0])
        };
        assert!(item5(-1) < qi(0));
        assert!(item5(1) > qi(0));
    }

    #[test]
    fn d413_forms_coincide() {
        let s = space();
        for eps in [-1, 1] {
            let mut p = Params::new();
            p.insert("eps".into(), qi(eps));
            let a = s.span(2, &lookup("p1-table/D_{4,13}").unwrap()[0].generators(&p).unwrap()).unwrap();
            let b = s.span(2, &lookup("p1-table/D_{4,13}-alt").unwrap()[0].generators(&p).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }
}
