//! Prolongations of linear subalgebras of `sp(V)` and finite-type verdicts.
//!
//! For `h` in `S^2(V)` the `k`-th prolongation is
//! `h^(k) = { T in S^{k+2}(V) : [T, v] in h^(k-1) for every v in V }`.

use num::Zero;
use thiserror::Error;

use crate::exact_linalg::{Field, GScalar, LinalgError, Matrix, Scalar, Subspace};
use crate::weyl_poisson::{Monomial, SymTensor, SymplecticSpace, WeylError};

/// Default largest prolongation degree computed by [`prolong_chain`] callers.
pub const DEFAULT_KMAX: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProlongError {
    #[error("generators do not span a subalgebra: [g{0}, g{1}] leaves the span")]
    NotSubalgebra(usize, usize),
    #[error("closed forms are only available for n = 2 (got n = {0})")]
    UnsupportedDimension(usize),
    #[error("cannot parse witness grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A subalgebra of `sp(V) = S^2(V)` with closure verified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSubalgebra {
    space: SymplecticSpace,
    sub: Subspace<Scalar>,
}

impl LinearSubalgebra {
    /// Span of the generators; fails unless the span is closed under the bracket.
    pub fn new(space: SymplecticSpace, gens: &[SymTensor<Scalar>]) -> Result<Self, ProlongError> {
        let sub = space.span(2, gens)?;
        Self::from_subspace(space, sub)
    }

    pub fn from_subspace(space: SymplecticSpace, sub: Subspace<Scalar>) -> Result<Self, ProlongError> {
        if let Some((i, j)) = closure_violation(&space, &sub) {
            return Err(ProlongError::NotSubalgebra(i, j));
        }
        Ok(LinearSubalgebra { space, sub })
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn subspace(&self) -> &Subspace<Scalar> {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn basis_tensors(&self) -> Vec<SymTensor<Scalar>> {
        self.sub.basis().iter().map(|b| self.space.from_coords(2, b)).collect()
    }

    pub fn contains(&self, t: &SymTensor<Scalar>) -> bool {
        self.space.to_coords(t, 2).map(|c| self.sub.contains(&c)).unwrap_or(false)
    }
}

/// First pair of canonical basis elements whose bracket leaves the span, if any.
pub fn closure_violation<F: Field>(space: &SymplecticSpace, sub: &Subspace<F>) -> Option<(usize, usize)> {
    let ts: Vec<SymTensor<F>> = sub.basis().iter().map(|b| space.from_coords(2, b)).collect();
    for i in 0..ts.len() {
        for j in i + 1..ts.len() {
            let br = space.poisson_bracket(&ts[i], &ts[j]);
            let c = space.to_coords(&br, 2).expect("bracket of quadratics is quadratic");
            if !sub.contains(&c) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Matrix of `T -> [T, e_v]` from `S^{d}(V)` to `S^{d-1}(V)`.
pub fn ad_matrix<F: Field>(space: &SymplecticSpace, d: usize, v: usize) -> Matrix<F> {
    let src = space.sym_basis(d);
    let var = space.var::<F>(v);
    let cols: Vec<Vec<F>> = src
        .iter()
        .map(|m| {
            let br = space.poisson_bracket(&SymTensor::monomial(m.clone(), F::one()), &var);
            space.to_coords(&br, d - 1).expect("homogeneous")
        })
        .collect();
    Matrix::from_cols(space.dim_sym(d - 1), cols).expect("consistent shape")
}

/// `{T in S^{d}(V) : [T, v] in prev}` where `prev` lies in `S^{d-1}(V)`.
pub fn prolong_once<F: Field>(space: &SymplecticSpace, prev: &Subspace<F>, d: usize) -> Subspace<F> {
    let target = space.dim_sym(d);
    if prev.is_zero() {
        return Subspace::zero(target);
    }
    let ann = prev.annihilator();
    if ann.is_zero() {
        return Subspace::full(target);
    }
    let mut rows = Vec::new();
    for v in 0..space.dim() {
        let a = ad_matrix::<F>(space, d, v);
        for f in ann.basis() {
            let row: Vec<F> = (0..target)
                .map(|c| {
                    let mut s = F::zero();
                    for (r, fr) in f.iter().enumerate() {
                        if !fr.is_zero() && !a[(r, c)].is_zero() {
                            s += fr.clone() * a[(r, c)].clone();
                        }
                    }
                    s
                })
                .collect();
            rows.push(row);
        }
    }
    let m = Matrix::from_rows(target, rows).expect("consistent shape");
    Subspace::span(target, &m.kernel()).expect("consistent shape")
}

/// The chain `h^(0) = h, h^(1), ..., h^(kmax)`; level `k` is a subspace of `S^{k+2}(V)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProlongationChain {
    pub levels: Vec<Subspace<Scalar>>,
}

impl ProlongationChain {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Subspace::dim).collect()
    }

    pub fn level(&self, k: usize) -> Option<&Subspace<Scalar>> {
        self.levels.get(k)
    }
}

pub fn prolong_chain(h: &LinearSubalgebra, kmax: usize) -> ProlongationChain {
    let space = h.space();
    let mut levels = vec![h.subspace().clone()];
    for k in 1..=kmax {
        let next = prolong_once(&space, &levels[k - 1], k + 2);
        levels.push(next);
    }
    ProlongationChain { levels }
}

/// `h^(k)` computed in one step: `T` such that every `k`-fold bracket with basis vectors lies in `h`.
pub fn prolong_direct(h: &LinearSubalgebra, k: usize) -> Subspace<Scalar> {
    let space = h.space();
    let d = k + 2;
    if k == 0 {
        return h.subspace().clone();
    }
    let ann = h.subspace().annihilator();
    let target = space.dim_sym(d);
    if ann.is_zero() {
        return Subspace::full(target);
    }
    let ads: Vec<Vec<Matrix<Scalar>>> =
        (0..k).map(|step| (0..space.dim()).map(|v| ad_matrix(&space, d - step, v)).collect()).collect();
    let mut rows = Vec::new();
    let nv = space.dim();
    let mut tuple = vec![0usize; k];
    loop {
        let mut comp = ads[0][tuple[0]].clone();
        for step in 1..k {
            comp = ads[step][tuple[step]].mul(&comp);
        }
        for f in ann.basis() {
            let fm = Matrix::from_rows(f.len(), vec![f.clone()]).expect("row");
            rows.push(fm.mul(&comp).row(0).to_vec());
        }
        let mut pos = 0;
        loop {
            if pos == k {
                let m = Matrix::from_rows(target, rows).expect("consistent shape");
                return Subspace::span(target, &m.kernel()).expect("consistent shape");
            }
            tuple[pos] += 1;
            if tuple[pos] < nv {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// The two parabolic subalgebras of `sp(4, R)` with closed-form prolongations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parabolic {
    /// `Q v P + S^2(P)`, the stabilizer of the Lagrangian plane `P = span(p1, p2)`.
    P1,
    /// `S^2(W) + R p1 q1 + p1 W + R p1^2` with `W = span(p2, q2)`, the stabilizer of the line `R p1`.
    P2,
}

impl Parabolic {
    pub fn generators(self) -> Vec<SymTensor<Scalar>> {
        let s = SymplecticSpace::new(2);
        let src = match self {
            Parabolic::P1 => ["p1*q1", "p1*q2", "p2*q1", "p2*q2", "p1^2", "p1*p2", "p2^2"],
            Parabolic::P2 => ["p2^2", "p2*q2", "q2^2", "p1*q1", "p1*p2", "p1*q2", "p1^2"],
        };
        src.iter().map(|x| s.parse(x).expect("valid literal")).collect()
    }

    pub fn algebra(self) -> LinearSubalgebra {
        LinearSubalgebra::new(SymplecticSpace::new(2), &self.generators()).expect("parabolic is closed")
    }
}

/// Closed form of the `k`-th prolongation of a parabolic subalgebra of `sp(4, R)`.
///
/// `p1^(k) = Q v S^{k+1}(P) + S^{k+2}(P)` and
/// `p2^(k) = R p1^{k+1} q1 + sum_{i+j=k+2} S^i(W) v p1^j`.
pub fn parabolic_prolong_closed_form(which: Parabolic, k: usize) -> Subspace<Scalar> {
    let s = SymplecticSpace::new(2);
    let d = k + 2;
    let (p1, q1) = (s.p(1), s.q(1));
    let keep = |m: &Monomial| -> bool {
        let qs = m.indices().iter().filter(|&&x| x as usize >= 2).count();
        match which {
            Parabolic::P1 => qs <= 1,
            Parabolic::P2 => m.multiplicity(q1) == 0 || (m.multiplicity(q1) == 1 && m.multiplicity(p1) == d - 1),
        }
    };
    let basis = s.sym_basis(d);
    let vs: Vec<Vec<Scalar>> = basis
        .iter()
        .enumerate()
        .filter(|(_, m)| keep(m))
        .map(|(i, _)| {
            let mut v = vec![Scalar::zero(); basis.len()];
            v[i] = num::One::one();
            v
        })
        .collect();
    Subspace::span(basis.len(), &vs).expect("consistent shape")
}

/// Coefficients tried by the bounded rank-one search unless configured otherwise.
pub const DEFAULT_GRID: &str = "0,1,-1,2,-2,i,-i,1+i,1-i,-1+i,-1-i";

/// Coefficient grid used by the bounded rank-one search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessGrid(pub Vec<GScalar>);

impl Default for WitnessGrid {
    fn default() -> Self {
        WitnessGrid::parse(DEFAULT_GRID).expect("valid default grid")
    }
}

impl WitnessGrid {
    /// Comma-separated Gaussian rational literals.
    pub fn parse(s: &str) -> Result<Self, ProlongError> {
        let vals: Result<Vec<GScalar>, _> = s.split(',').map(|x| x.trim().parse::<GScalar>()).collect();
        let vals = vals.map_err(|e| ProlongError::Grid(e.to_string()))?;
        if vals.is_empty() {
            return Err(ProlongError::Grid("empty grid".into()));
        }
        Ok(WitnessGrid(vals))
    }
}

fn is_rank_one(space: &SymplecticSpace, t: &SymTensor<GScalar>) -> bool {
    !t.is_zero() && space.quad_to_matrix(t).map(|m| m.rank() == 1).unwrap_or(false)
}

/// Discriminant `x2^2 - 4 x1 x3` of `x1 p1^2 + x2 p1 p2 + x3 p2^2`; it vanishes exactly on rank-one elements.
pub fn s2p_discriminant<F: Field>(space: &SymplecticSpace, t: &SymTensor<F>) -> F {
    let (x1, x2, x3) = s2p_coords(space, t);
    x2.clone() * x2 - F::from_int(4) * x1 * x3
}

fn s2p_coords<F: Field>(space: &SymplecticSpace, t: &SymTensor<F>) -> (F, F, F) {
    let (a, b) = (space.p(1) as u8, space.p(2) as u8);
    (
        t.coefficient(&Monomial::new(vec![a, a])),
        t.coefficient(&Monomial::new(vec![a, b])),
        t.coefficient(&Monomial::new(vec![b, b])),
    )
}

fn in_s2p<F: Field>(space: &SymplecticSpace, t: &SymTensor<F>) -> bool {
    space.n() == 2 && t.terms().all(|(m, _)| m.indices().iter().all(|&x| (x as usize) < 2))
}

/// Exact search for a rank-one element in subspaces of `S^2(P)` when `n = 2`.
fn s2p_witness(space: &SymplecticSpace, basis: &[SymTensor<GScalar>]) -> Option<SymTensor<GScalar>> {
    if basis.is_empty() || !basis.iter().all(|b| in_s2p(space, b)) {
        return None;
    }
    let u = &basis[0];
    let a = s2p_discriminant(space, u);
    if a.is_zero() {
        return Some(u.clone());
    }
    let w = basis.get(1)?;
    let c = s2p_discriminant(space, w);
    if c.is_zero() {
        return Some(w.clone());
    }
    let (u1, u2, u3) = s2p_coords(space, u);
    let (w1, w2, w3) = s2p_coords(space, w);
    let two = GScalar::from_int(2);
    let four = GScalar::from_int(4);
    let b = two.clone() * u2 * w2 - four * (u1 * w3 + u3 * w1);
    let disc = b.clone() * b.clone() - GScalar::from_int(4) * a.clone() * c;
    let root = disc.sqrt()?;
    let alpha = (-b + root) / (two * a);
    Some(u.scale(&alpha).add(w))
}

/// A nonzero element of rank one in the complexification of `h`, if one is found.
///
/// The search is exact for subspaces of `S^2(P)` whose discriminant equation splits over the
/// Gaussian rationals; otherwise basis elements and pairwise grid combinations are tried.
pub fn rank_one_witness(h: &LinearSubalgebra, grid: &WitnessGrid) -> Option<SymTensor<GScalar>> {
    let space = h.space();
    let basis: Vec<SymTensor<GScalar>> = h.basis_tensors().iter().map(|t| t.complexify()).collect();
    if let Some(w) = s2p_witness(&space, &basis) {
        if is_rank_one(&space, &w) {
            return Some(w);
        }
    }
    if let Some(b) = basis.iter().find(|b| is_rank_one(&space, b)) {
        return Some(b.clone());
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            for a in grid.0.iter().filter(|a| !a.is_zero()) {
                for b in grid.0.iter().filter(|b| !b.is_zero()) {
                    let t = basis[i].scale(a).add(&basis[j].scale(b));
                    if is_rank_one(&space, &t) {
                        return Some(t);
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InfiniteEvidence {
    /// A rank-one element `u^2` of the complexification; its powers `u^{k+2}` lie in every prolongation.
    RankOneWitness(SymTensor<GScalar>),
    /// `h^(1) != 0` inside `sp(4, R)`, where finite type is equivalent to a vanishing first prolongation.
    NonvanishingFirstProlongation { dim_h1: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TypeVerdict {
    Finite,
    Infinite(InfiniteEvidence),
    Undecided,
}

impl TypeVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, TypeVerdict::Finite)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, TypeVerdict::Infinite(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            TypeVerdict::Finite => "finite",
            TypeVerdict::Infinite(_) => "infinite",
            TypeVerdict::Undecided => "undecided",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteTypeReport {
    pub dim: usize,
    pub dim_h1: usize,
    pub verdict: TypeVerdict,
}

impl FiniteTypeReport {
    /// Short description of the evidence behind the verdict.
    pub fn evidence(&self, space: &SymplecticSpace) -> String {
        match &self.verdict {
            TypeVerdict::Finite => "h1=0".to_string(),
            TypeVerdict::Infinite(InfiniteEvidence::RankOneWitness(w)) => {
                format!("rank-one witness {}", space.format(w))
            }
            TypeVerdict::Infinite(InfiniteEvidence::NonvanishingFirstProlongation { dim_h1 }) => {
                format!("h1 has dimension {dim_h1} in sp(4,R)")
            }
            TypeVerdict::Undecided => format!("h1 has dimension {} and no rank-one witness was found", self.dim_h1),
        }
    }
}

pub fn finite_type_verdict(h: &LinearSubalgebra, grid: &WitnessGrid) -> FiniteTypeReport {
    let space = h.space();
    let h1 = prolong_once(&space, h.subspace(), 3);
    let dim_h1 = h1.dim();
    let verdict = if dim_h1 == 0 {
        TypeVerdict::Finite
    } else if let Some(w) = rank_one_witness(h, grid) {
        TypeVerdict::Infinite(InfiniteEvidence::RankOneWitness(w))
    } else if space.n() == 2 {
        TypeVerdict::Infinite(InfiniteEvidence::NonvanishingFirstProlongation { dim_h1 })
    } else {
        TypeVerdict::Undecided
    };
    FiniteTypeReport { dim: h.dim(), dim_h1, verdict }
}
