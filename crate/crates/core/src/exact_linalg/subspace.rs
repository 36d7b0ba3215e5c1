//! Subspaces of `F^d` in canonical reduced row-echelon form.

use super::{Field, LinalgError, Matrix};

/// A subspace of `F^ambient`, stored as the nonzero rows of its reduced row-echelon basis.
///
/// The representation is canonical, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![F::zero(); ambient];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self, LinalgError> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(ambient, vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace: the unique representative vanishing on all pivots.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= c.clone() * y.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Combination of the canonical basis with the given coefficients.
    pub fn combine(&self, coeffs: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += c.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in sum");
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &v).expect("consistent lengths")
    }

    /// Annihilator with respect to the standard bilinear pairing.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.ambient, self.basis.clone()).expect("consistent lengths");
        Self::span(self.ambient, &m.kernel()).expect("consistent lengths")
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in intersection");
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Canonical basis of a complement of `self` inside `larger`.
    ///
    /// Each vector is reduced modulo `self`, so cosets of `self` in `larger` have unique
    /// coordinates with respect to the returned basis.
    pub fn complement_in(&self, larger: &Self) -> Result<Vec<Vec<F>>, LinalgError> {
        if !self.is_subspace_of(larger) {
            return Err(LinalgError::NotContained);
        }
        let reduced: Vec<Vec<F>> = larger.basis.iter().map(|b| self.reduce(b)).collect();
        Ok(Self::span(self.ambient, &reduced)?.basis)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        let vs: Vec<Vec<G>> = self.basis.iter().map(|b| b.iter().map(&f).collect()).collect();
        Subspace::span(self.ambient, &vs).expect("consistent lengths")
    }
}
