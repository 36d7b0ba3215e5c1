//! Symplectic Lie algebras, their left-symmetric product and the associated Fedosov connection.

use std::fmt::Write as _;

use num::Zero;
use thiserror::Error;

use crate::exact_linalg::{parse_rational, LinalgError, Matrix, Scalar};
use crate::lie::{LieError, StructureConstants};

pub mod corpus;
pub mod lsa;
pub mod nomizu;

pub use lsa::{fedosov_report, FedosovReport, Product};
pub use nomizu::{nomizu_solutions, NomizuData, NomizuSolutions};

#[derive(Debug, Error)]
pub enum FedosovError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("not a symplectic Lie algebra: {0}")]
    Invalid(String),
    #[error("inconsistent reductive data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A Lie algebra with a bilinear form `omega`, not yet checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticLieAlgebra {
    pub name: String,
    pub g: StructureConstants,
    pub omega: Matrix<Scalar>,
}

/// Outcome of the symplectic checks; failures are localized to basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymplecticVerdict {
    pub omega_antisymmetric: bool,
    pub omega_nondegenerate: bool,
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    /// Triples where the cyclic sum of `omega([x, y], z)` does not vanish.
    pub cocycle_failures: Vec<(usize, usize, usize)>,
}

impl SymplecticVerdict {
    pub fn is_valid(&self) -> bool {
        self.omega_antisymmetric
            && self.omega_nondegenerate
            && self.jacobi_failures.is_empty()
            && self.cocycle_failures.is_empty()
    }

    pub fn describe(&self) -> String {
        let mut out = Vec::new();
        if !self.omega_antisymmetric {
            out.push("omega not antisymmetric".to_string());
        }
        if !self.omega_nondegenerate {
            out.push("omega degenerate".to_string());
        }
        if let Some(t) = self.jacobi_failures.first() {
            out.push(format!("jacobi fails on {t:?}"));
        }
        if let Some(t) = self.cocycle_failures.first() {
            out.push(format!("cocycle fails on {t:?}"));
        }
        if out.is_empty() {
            "valid".into()
        } else {
            out.join("; ")
        }
    }
}

/// `sum_k a_k b_l omega_{kl}`.
pub(crate) fn form(m: &Matrix<Scalar>, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                s += ai * bj * &m[(i, j)];
            }
        }
    }
    s
}

impl SymplecticLieAlgebra {
    pub fn new(name: impl Into<String>, g: StructureConstants, omega: Matrix<Scalar>) -> Self {
        SymplecticLieAlgebra { name: name.into(), g, omega }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn omega(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        form(&self.omega, x, y)
    }

    pub fn check(&self) -> SymplecticVerdict {
        let d = self.dim();
        let omega_antisymmetric =
            self.omega.rows() == d && self.omega.transpose() == self.omega.scale(&-Scalar::from_integer(1.into()));
        let omega_nondegenerate = self.omega.rows() == d && self.omega.rank() == d;
        let mut cocycle_failures = Vec::new();
        if omega_antisymmetric {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        let e = |t| self.g.basis_vector(t);
                        let s = self.omega(self.g.get(i, j), &e(k))
                            + self.omega(self.g.get(j, k), &e(i))
                            + self.omega(self.g.get(k, i), &e(j));
                        if !s.is_zero() {
                            cocycle_failures.push((i, j, k));
                        }
                    }
                }
            }
        }
        SymplecticVerdict {
            omega_antisymmetric,
            omega_nondegenerate,
            jacobi_failures: self.g.jacobi_failures(),
            cocycle_failures,
        }
    }

    /// Parses the text format
    ///
    /// ```text
    /// # comment
    /// name heis3+R
    /// dim 4
    /// [1,2] = e3
    /// [1,3] = 2*e4 - 1/2*e2
    /// omega(1,3) = 1
    /// ```
    ///
    /// Indices are 1-based; `omega(i,j) = c` also sets `omega(j,i) = -c`.
    pub fn parse(text: &str) -> Result<Self, FedosovError> {
        let mut name = String::from("unnamed");
        let mut g: Option<StructureConstants> = None;
        let mut omega: Option<Matrix<Scalar>> = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let err = |reason: String| FedosovError::Parse { line: ln + 1, reason };
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("name") {
                name = rest.trim().to_string();
            } else if let Some(rest) = line.strip_prefix("dim") {
                let d: usize = rest.trim().parse().map_err(|_| err(format!("bad dimension {:?}", rest.trim())))?;
                g = Some(StructureConstants::abelian(d));
                omega = Some(Matrix::zeros(d, d));
            } else {
                let (lhs, rhs) = line.split_once('=').ok_or_else(|| err("expected '='".into()))?;
                let (gg, om) = match (g.as_mut(), omega.as_mut()) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(err("'dim' must come first".into())),
                };
                let d = gg.dim();
                let index = |s: &str| -> Result<usize, FedosovError> {
                    let i: usize = s.trim().parse().map_err(|_| err(format!("bad index {s:?}")))?;
                    if i == 0 || i > d {
                        return Err(err(format!("index {i} out of range 1..={d}")));
                    }
                    Ok(i - 1)
                };
                let lhs = lhs.trim();
                if let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                    let (a, b) = inner.split_once(',').ok_or_else(|| err("expected [i,j]".into()))?;
                    let (i, j) = (index(a)?, index(b)?);
                    let v = parse_vector(rhs, d).map_err(err)?;
                    if i > j {
                        gg.set(j, i, v.into_iter().map(|x| -x).collect()).map_err(|e| err(e.to_string()))?;
                    } else {
                        gg.set(i, j, v).map_err(|e| err(e.to_string()))?;
                    }
                } else if let Some(inner) = lhs.strip_prefix("omega(").and_then(|s| s.strip_suffix(')')) {
                    let (a, b) = inner.split_once(',').ok_or_else(|| err("expected omega(i,j)".into()))?;
                    let (i, j) = (index(a)?, index(b)?);
                    let c = parse_rational(rhs.trim()).map_err(|e| err(e.to_string()))?;
                    if i == j && !c.is_zero() {
                        return Err(err("omega(i,i) must vanish".into()));
                    }
                    om[(j, i)] = -c.clone();
                    om[(i, j)] = c;
                } else {
                    return Err(err(format!("unrecognized line {line:?}")));
                }
            }
        }
        match (g, omega) {
            (Some(g), Some(omega)) => Ok(SymplecticLieAlgebra { name, g, omega }),
            _ => Err(FedosovError::Parse { line: 0, reason: "missing 'dim' line".into() }),
        }
    }

    /// Inverse of [`SymplecticLieAlgebra::parse`].
    pub fn to_text(&self) -> String {
        let d = self.dim();
        let mut s = format!("name {}\ndim {d}\n", self.name);
        for i in 0..d {
            for j in i + 1..d {
                let v = self.g.get(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    let _ = writeln!(s, "[{},{}] = {}", i + 1, j + 1, format_vector(v));
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                if !self.omega[(i, j)].is_zero() {
                    let _ = writeln!(s, "omega({},{}) = {}", i + 1, j + 1, self.omega[(i, j)]);
                }
            }
        }
        s
    }
}

/// `e3 - 1/2*e4` style vector over basis `e1..ed`.
pub fn format_vector(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Scalar::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        let term = if a == Scalar::from_integer(1.into()) { format!("e{}", k + 1) } else { format!("{a}*e{}", k + 1) };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn parse_vector(s: &str, d: usize) -> Result<Vec<Scalar>, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut v = vec![Scalar::zero(); d];
    if compact == "0" {
        return Ok(v);
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with(['+', '-', '*', '/']) {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let t = t.strip_prefix('+').unwrap_or(&t);
        let (coef, basis) = match t.rsplit_once('*') {
            Some((c, b)) => (parse_rational(c).map_err(|e| e.to_string())?, b.to_string()),
            None => match t.strip_prefix('-') {
                Some(b) => (-Scalar::from_integer(1.into()), b.to_string()),
                None => (Scalar::from_integer(1.into()), t.to_string()),
            },
        };
        let k: usize = basis
            .strip_prefix('e')
            .and_then(|x| x.parse().ok())
            .filter(|k| (1..=d).contains(k))
            .ok_or_else(|| format!("bad basis vector {basis:?}"))?;
        v[k - 1] += coef;
    }
    Ok(v)
}
