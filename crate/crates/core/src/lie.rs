//! Finite-dimensional Lie algebras given by structure constants.

use num::Zero;
use thiserror::Error;

use crate::exact_linalg::{Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("index {0} out of range for an algebra of dimension {1}")]
    Index(usize, usize),
    #[error("bracket of e{0} with itself must vanish")]
    SelfBracket(usize),
    #[error("bracket vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
}

/// Structure constants `[e_i, e_j] = sum_k c[i][j][k] e_k`, kept antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<Vec<Scalar>>>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, c: vec![vec![vec![Scalar::zero(); dim]; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Vec<Scalar>) -> Result<(), LieError> {
        if i >= self.dim || j >= self.dim {
            return Err(LieError::Index(i.max(j), self.dim));
        }
        if v.len() != self.dim {
            return Err(LieError::Length { expected: self.dim, found: v.len() });
        }
        if i == j {
            if v.iter().all(|x| x.is_zero()) {
                return Ok(());
            }
            return Err(LieError::SelfBracket(i));
        }
        self.c[j][i] = v.iter().map(|x| -x.clone()).collect();
        self.c[i][j] = v;
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = num::One::one();
        v
    }

    /// Matrix of `ad x` in the basis `e_k`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix<Scalar> {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|k| self.bracket(x, &self.basis_vector(k))).collect();
        Matrix::from_cols(self.dim, cols).expect("square")
    }

    /// Triples `(i, j, k)` with `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_failures().is_empty()
    }

    /// `[a, b]` for subspaces of the algebra.
    pub fn bracket_spaces(&self, a: &Subspace<Scalar>, b: &Subspace<Scalar>) -> Subspace<Scalar> {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim, &vs).expect("consistent lengths")
    }

    /// Dimensions of the lower central series, down to stabilization.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = Subspace::full(self.dim);
        let mut cur = full.clone();
        let mut dims = vec![cur.dim()];
        loop {
            let next = self.bracket_spaces(&full, &cur);
            if next == cur {
                break;
            }
            dims.push(next.dim());
            cur = next;
        }
        dims
    }

    /// Dimensions of the derived series, down to stabilization.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut cur = Subspace::full(self.dim);
        let mut dims = vec![cur.dim()];
        loop {
            let next = self.bracket_spaces(&cur, &cur);
            if next == cur {
                break;
            }
            dims.push(next.dim());
            cur = next;
        }
        dims
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0)
    }

    /// Killing form `tr(ad x ad y)` on basis vectors.
    pub fn killing_form(&self) -> Matrix<Scalar> {
        let ads: Vec<Matrix<Scalar>> = (0..self.dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                k[(i, j)] = ads[i].mul(&ads[j]).trace();
            }
        }
        k
    }

    /// Nonzero structure constants as `(i, j, k, c)` with `i < j`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in self.c[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::qi;

    fn heis() -> StructureConstants {
        let mut s = StructureConstants::abelian(3);
        s.set(0, 1, vec![qi(0), qi(0), qi(1)]).unwrap();
        s
    }

    #[test]
    fn heisenberg_series() {
        let h = heis();
        assert!(h.is_lie());
        assert_eq!(h.lower_central_series(), vec![3, 1, 0]);
        assert!(h.is_nilpotent());
        assert!(h.killing_form().is_zero());
    }

    #[test]
    fn sl2_not_solvable() {
        let mut s = StructureConstants::abelian(3);
        // h, e, f
        s.set(0, 1, vec![qi(0), qi(2), qi(0)]).unwrap();
        s.set(0, 2, vec![qi(0), qi(0), qi(-2)]).unwrap();
        s.set(1, 2, vec![qi(1), qi(0), qi(0)]).unwrap();
        assert!(s.is_lie());
        assert!(!s.is_solvable());
        assert_eq!(s.killing_form()[(0, 0)], qi(8));
    }

    #[test]
    fn broken_jacobi_detected() {
        let mut s = StructureConstants::abelian(3);
        s.set(0, 1, vec![qi(0), qi(0), qi(1)]).unwrap();
        s.set(0, 2, vec![qi(1), qi(0), qi(0)]).unwrap();
        s.set(1, 2, vec![qi(1), qi(0), qi(0)]).unwrap();
        assert_eq!(s.jacobi_failures(), vec![(0, 1, 2)]);
    }
}
