//! Subalgebras of `s1 = sp(V1) + sp(V2)` via Goursat quintuples `(A, A0, B, B0, theta)`.
//!
//! Each factor is identified with `sl(2, R)` through the basis `(p_i^2, p_i q_i, q_i^2)`.
//! `theta` is an isomorphism `A/A0 -> B/B0`, written as a matrix between the canonical
//! complement bases of `A0` in `A` and `B0` in `B`.

use num::{One, Zero};
use thiserror::Error;

use super::space;
use crate::exact_linalg::{qi, LinalgError, Matrix, Scalar, Subspace};
use crate::prolongation::{LinearSubalgebra, ProlongError};
use crate::weyl_poisson::SymTensor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoursatError {
    #[error("subalgebra is not contained in sp(V1)+sp(V2)")]
    NotInS1,
    #[error("{0} is not a subalgebra of sl(2)")]
    NotSubalgebra(&'static str),
    #[error("{0} is not an ideal of {1}")]
    NotIdeal(&'static str, &'static str),
    #[error("theta has shape {0}x{1}, expected {2}x{3}")]
    ThetaShape(usize, usize, usize, usize),
    #[error("theta is not invertible")]
    ThetaSingular,
    #[error("theta does not preserve brackets on complement vectors {0} and {1}")]
    ThetaNotHomomorphism(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Prolong(#[from] ProlongError),
}

/// Standard subalgebras of `sl(2, R)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sl2Part {
    Zero,
    /// Split Cartan subalgebra `R p q`.
    Diag,
    /// Compact Cartan subalgebra `R (p^2 + q^2)`.
    So2,
    /// Nilpotent line `R p^2`.
    N2,
    /// Borel subalgebra `span(p^2, p q)`.
    B2,
    Full,
}

impl Sl2Part {
    pub fn subspace(self) -> Subspace<Scalar> {
        let v = |a: i64, b: i64, c: i64| vec![qi(a), qi(b), qi(c)];
        let vs = match self {
            Sl2Part::Zero => vec![],
            Sl2Part::Diag => vec![v(0, 1, 0)],
            Sl2Part::So2 => vec![v(1, 0, 1)],
            Sl2Part::N2 => vec![v(1, 0, 0)],
            Sl2Part::B2 => vec![v(1, 0, 0), v(0, 1, 0)],
            Sl2Part::Full => vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)],
        };
        Subspace::span(3, &vs).expect("length 3")
    }
}

fn embed(factor: usize, v: &[Scalar]) -> SymTensor<Scalar> {
    let s = space();
    let (p, q) = (s.p(factor) as u8, s.q(factor) as u8);
    SymTensor::from_terms([(v[0].clone(), vec![p, p]), (v[1].clone(), vec![p, q]), (v[2].clone(), vec![q, q])])
}

fn read(factor: usize, t: &SymTensor<Scalar>) -> Vec<Scalar> {
    let s = space();
    let (p, q) = (s.p(factor) as u8, s.q(factor) as u8);
    [vec![p, p], vec![p, q], vec![q, q]]
        .into_iter()
        .map(|m| t.coefficient(&crate::weyl_poisson::Monomial::new(m)))
        .collect()
}

/// Bracket of `sl(2, R)` in the basis `(p^2, p q, q^2)`.
pub fn sl2_bracket(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    read(1, &space().poisson_bracket(&embed(1, x), &embed(1, y)))
}

fn is_subalgebra(a: &Subspace<Scalar>) -> bool {
    a.basis().iter().all(|x| a.basis().iter().all(|y| a.contains(&sl2_bracket(x, y))))
}

fn is_ideal(i: &Subspace<Scalar>, a: &Subspace<Scalar>) -> bool {
    i.is_subspace_of(a) && a.basis().iter().all(|x| i.basis().iter().all(|y| i.contains(&sl2_bracket(x, y))))
}

fn coords_in(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    Matrix::from_cols(3, basis.to_vec()).ok()?.solve(v)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoursatQuintuple {
    pub a: Subspace<Scalar>,
    pub a0: Subspace<Scalar>,
    pub b: Subspace<Scalar>,
    pub b0: Subspace<Scalar>,
    pub theta: Matrix<Scalar>,
}

impl GoursatQuintuple {
    /// Quintuple with `theta` given on the canonical complement bases.
    pub fn new(
        a: Subspace<Scalar>,
        a0: Subspace<Scalar>,
        b: Subspace<Scalar>,
        b0: Subspace<Scalar>,
        theta: Matrix<Scalar>,
    ) -> Result<Self, GoursatError> {
        let g = GoursatQuintuple { a, a0, b, b0, theta };
        g.validate()?;
        Ok(g)
    }

    /// Quintuple with trivial `A0`, `B0`, `theta = 0`.
    pub fn product(a: Sl2Part, b: Sl2Part) -> Self {
        GoursatQuintuple::new(a.subspace(), a.subspace(), b.subspace(), b.subspace(), Matrix::zeros(0, 0))
            .expect("product quintuple is valid")
    }

    /// Graph `{x + theta x}` of an automorphism of the subalgebra `f`.
    pub fn graph(f: Sl2Part, theta: Matrix<Scalar>) -> Result<Self, GoursatError> {
        GoursatQuintuple::new(f.subspace(), Sl2Part::Zero.subspace(), f.subspace(), Sl2Part::Zero.subspace(), theta)
    }

    pub fn complement_a(&self) -> Vec<Vec<Scalar>> {
        self.a0.complement_in(&self.a).expect("validated")
    }

    pub fn complement_b(&self) -> Vec<Vec<Scalar>> {
        self.b0.complement_in(&self.b).expect("validated")
    }

    fn validate(&self) -> Result<(), GoursatError> {
        if !is_subalgebra(&self.a) {
            return Err(GoursatError::NotSubalgebra("A"));
        }
        if !is_subalgebra(&self.b) {
            return Err(GoursatError::NotSubalgebra("B"));
        }
        if !is_ideal(&self.a0, &self.a) {
            return Err(GoursatError::NotIdeal("A0", "A"));
        }
        if !is_ideal(&self.b0, &self.b) {
            return Err(GoursatError::NotIdeal("B0", "B"));
        }
        let (ca, cb) = (self.complement_a(), self.complement_b());
        if self.theta.rows() != cb.len() || self.theta.cols() != ca.len() {
            return Err(GoursatError::ThetaShape(self.theta.rows(), self.theta.cols(), cb.len(), ca.len()));
        }
        if ca.len() != cb.len() || (!ca.is_empty() && self.theta.inverse().is_none()) {
            return Err(GoursatError::ThetaSingular);
        }
        let apply = |k: usize| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); 3];
            for (j, d) in cb.iter().enumerate() {
                for (o, x) in out.iter_mut().zip(d) {
                    *o += &self.theta[(j, k)] * x;
                }
            }
            out
        };
        let theta_of = |v: &[Scalar]| -> Option<Vec<Scalar>> {
            let r = self.a0.reduce(v);
            let c = coords_in(&ca, &r)?;
            let mut out = vec![Scalar::zero(); 3];
            for (k, ck) in c.iter().enumerate() {
                for (o, x) in out.iter_mut().zip(apply(k)) {
                    *o += ck * &x;
                }
            }
            Some(out)
        };
        for i in 0..ca.len() {
            for j in i + 1..ca.len() {
                let lhs = theta_of(&sl2_bracket(&ca[i], &ca[j])).ok_or(GoursatError::ThetaNotHomomorphism(i, j))?;
                let rhs = sl2_bracket(&apply(i), &apply(j));
                let diff: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
                if !self.b0.contains(&diff) {
                    return Err(GoursatError::ThetaNotHomomorphism(i, j));
                }
            }
        }
        Ok(())
    }
}

/// `{a + b : a in A, b in B, theta(a + A0) = b + B0}` as a subalgebra of `sp(4, R)`.
pub fn goursat_subalgebra(g: &GoursatQuintuple) -> Result<LinearSubalgebra, GoursatError> {
    let mut gens: Vec<SymTensor<Scalar>> = Vec::new();
    gens.extend(g.a0.basis().iter().map(|v| embed(1, v)));
    gens.extend(g.b0.basis().iter().map(|v| embed(2, v)));
    let cb = g.complement_b();
    for (k, c) in g.complement_a().iter().enumerate() {
        let mut img = vec![Scalar::zero(); 3];
        for (j, d) in cb.iter().enumerate() {
            for (o, x) in img.iter_mut().zip(d) {
                *o += &g.theta[(j, k)] * x;
            }
        }
        gens.push(embed(1, c).add(&embed(2, &img)));
    }
    Ok(LinearSubalgebra::new(space(), &gens)?)
}

/// Recovers the quintuple of a subalgebra of `s1`.
pub fn goursat_quintuple(h: &LinearSubalgebra) -> Result<GoursatQuintuple, GoursatError> {
    let mut pairs = Vec::new();
    for t in h.basis_tensors() {
        let (x, y) = (read(1, &t), read(2, &t));
        if embed(1, &x).add(&embed(2, &y)) != t {
            return Err(GoursatError::NotInS1);
        }
        pairs.push((x, y));
    }
    let six: Vec<Vec<Scalar>> = pairs.iter().map(|(x, y)| x.iter().chain(y).cloned().collect()).collect();
    let hs = Subspace::span(6, &six)?;
    let first = Subspace::span(6, &(0..3).map(unit6).collect::<Vec<_>>())?;
    let second = Subspace::span(6, &(3..6).map(unit6).collect::<Vec<_>>())?;
    let a = Subspace::span(3, &pairs.iter().map(|p| p.0.clone()).collect::<Vec<_>>())?;
    let b = Subspace::span(3, &pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>())?;
    let a0 = Subspace::span(3, &hs.intersection(&first).basis().iter().map(|v| v[..3].to_vec()).collect::<Vec<_>>())?;
    let b0 = Subspace::span(3, &hs.intersection(&second).basis().iter().map(|v| v[3..].to_vec()).collect::<Vec<_>>())?;
    let ca = a0.complement_in(&a)?;
    let cb = b0.complement_in(&b)?;
    let mut theta = Matrix::zeros(cb.len(), ca.len());
    let firsts: Vec<Vec<Scalar>> = pairs.iter().map(|p| p.0.clone()).collect();
    for (k, c) in ca.iter().enumerate() {
        let m = Matrix::from_cols(3, firsts.clone())?;
        let lam = m.solve(c).expect("complement vector lies in the projection");
        let mut img = vec![Scalar::zero(); 3];
        for (l, (_, y)) in lam.iter().zip(&pairs) {
            for (o, x) in img.iter_mut().zip(y) {
                *o += l * x;
            }
        }
        let r = b0.reduce(&img);
        let coords = coords_in(&cb, &r).expect("image lies in B");
        for (j, cj) in coords.into_iter().enumerate() {
            theta[(j, k)] = cj;
        }
    }
    GoursatQuintuple::new(a, a0, b, b0, theta)
}

fn unit6(i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 6];
    v[i] = Scalar::one();
    v
}

fn diag(xs: &[i64]) -> Matrix<Scalar> {
    let mut m = Matrix::zeros(xs.len(), xs.len());
    for (i, &x) in xs.iter().enumerate() {
        m[(i, i)] = qi(x);
    }
    m
}

/// Representative quintuples of the finite-type subalgebras of `s1`.
///
/// Products of `0`, `R diag` and `so(2)` in either factor, and graphs of automorphisms of
/// `R diag`, `so(2)`, `n2`, `b2` and `sl(2)` (including `Ad diag(1, -1)` on the last two).
pub fn table_one() -> Vec<(String, GoursatQuintuple)> {
    let small = [("0", Sl2Part::Zero), ("diag", Sl2Part::Diag), ("so2", Sl2Part::So2)];
    let mut out = Vec::new();
    for (na, a) in small {
        for (nb, b) in small {
            out.push((format!("product {na} x {nb}"), GoursatQuintuple::product(a, b)));
        }
    }
    let graphs: Vec<(&str, Sl2Part, Matrix<Scalar>)> = vec![
        ("graph diag id", Sl2Part::Diag, diag(&[1])),
        ("graph diag -id", Sl2Part::Diag, diag(&[-1])),
        ("graph diag 2id", Sl2Part::Diag, diag(&[2])),
        ("graph so2 id", Sl2Part::So2, diag(&[1])),
        ("graph so2 -id", Sl2Part::So2, diag(&[-1])),
        ("graph n2 id", Sl2Part::N2, diag(&[1])),
        ("graph n2 -id", Sl2Part::N2, diag(&[-1])),
        ("graph b2 id", Sl2Part::B2, diag(&[1, 1])),
        ("graph b2 twisted", Sl2Part::B2, diag(&[-1, 1])),
        ("graph sl2 id", Sl2Part::Full, diag(&[1, 1, 1])),
        ("graph sl2 twisted", Sl2Part::Full, diag(&[-1, 1, -1])),
    ];
    for (n, f, th) in graphs {
        out.push((n.to_string(), GoursatQuintuple::graph(f, th).expect("table quintuple is valid")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_table() {
        for (name, g) in table_one() {
            let h = goursat_subalgebra(&g).unwrap();
            assert_eq!(goursat_quintuple(&h).unwrap(), g, "{name}");
        }
    }

    #[test]
    fn bad_theta_rejected() {
        let bad = GoursatQuintuple::graph(Sl2Part::B2, diag(&[1, 2]));
        assert!(matches!(bad, Err(GoursatError::ThetaNotHomomorphism(0, 1))));
        let so2_into_diag = GoursatQuintuple::new(
            Sl2Part::So2.subspace(),
            Sl2Part::Zero.subspace(),
            Sl2Part::Diag.subspace(),
            Sl2Part::Zero.subspace(),
            diag(&[1]),
        );
        assert!(so2_into_diag.is_ok());
        let not_ideal = GoursatQuintuple::new(
            Sl2Part::B2.subspace(),
            Sl2Part::Diag.subspace(),
            Sl2Part::N2.subspace(),
            Sl2Part::Zero.subspace(),
            diag(&[1]),
        );
        assert!(matches!(not_ideal, Err(GoursatError::NotIdeal("A0", "A"))));
    }
}
