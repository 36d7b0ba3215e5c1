//! Finite-dimensional Lie algebras of formal vector fields and their order filtration.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use super::{FormalField, RealizationError};
use crate::exact_linalg::{Matrix, Scalar, Subspace};
use crate::lie::StructureConstants;

/// A Lie algebra spanned by explicit formal vector fields.
#[derive(Clone, Debug)]
pub struct FieldAlgebra<E: FormalField> {
    labels: Vec<String>,
    basis: Vec<E>,
    structure: StructureConstants,
}

fn coord_matrix<E: FormalField>(keys: &[E::Key], elems: &[E]) -> Matrix<Scalar> {
    let cols: Vec<Vec<Scalar>> = elems
        .iter()
        .map(|e| {
            let c = e.coords();
            keys.iter().map(|k| c.get(k).cloned().unwrap_or_else(Scalar::zero)).collect()
        })
        .collect();
    Matrix::from_cols(keys.len(), cols).expect("consistent shape")
}

impl<E: FormalField> FieldAlgebra<E> {
    /// Checks linear independence and closure, and records structure constants.
    pub fn new(labels: Vec<String>, basis: Vec<E>) -> Result<Self, RealizationError> {
        assert_eq!(labels.len(), basis.len(), "one label per basis element");
        let d = basis.len();
        let mut brackets = vec![vec![None; d]; d];
        let mut keys: BTreeSet<E::Key> = basis.iter().flat_map(|e| e.coords().into_keys()).collect();
        for i in 0..d {
            for j in i + 1..d {
                let b = basis[i].bracket(&basis[j]);
                keys.extend(b.coords().into_keys());
                brackets[i][j] = Some(b);
            }
        }
        let keys: Vec<E::Key> = keys.into_iter().collect();
        let m = coord_matrix(&keys, &basis);
        if m.rank() < d {
            return Err(RealizationError::LinearlyDependent);
        }
        let mut structure = StructureConstants::abelian(d);
        for i in 0..d {
            for j in i + 1..d {
                let b = brackets[i][j].take().expect("computed");
                let target = coord_matrix(&keys, std::slice::from_ref(&b)).col(0);
                let x = m
                    .solve(&target)
                    .ok_or_else(|| RealizationError::NotClosed(labels[i].clone(), labels[j].clone()))?;
                structure.set(i, j, x).expect("valid indices");
            }
        }
        Ok(FieldAlgebra { labels, basis, structure })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }

    /// Element with the given coefficients on the basis.
    pub fn element(&self, coeffs: &[Scalar]) -> E {
        let mut terms = coeffs.iter().zip(&self.basis).filter(|(c, _)| !c.is_zero());
        match terms.next() {
            None => E::zero_like(&self.basis[0]),
            Some((c, e)) => terms.fold(e.scale(c), |acc, (c, e)| acc.add(&e.scale(c))),
        }
    }

    /// Triples of basis elements on which the Jacobi identity fails, computed on the fields themselves.
    pub fn jacobi_failures_direct(&self) -> Vec<(usize, usize, usize)> {
        let b = &self.basis;
        let mut bad = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                for k in j + 1..b.len() {
                    let s = b[i]
                        .bracket(&b[j].bracket(&b[k]))
                        .add(&b[j].bracket(&b[k].bracket(&b[i])))
                        .add(&b[k].bracket(&b[i].bracket(&b[j])));
                    if s.coords().values().any(|c| !c.is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// `g_m`: elements whose components all have weight at least `m`.
    pub fn filtration_level(&self, m: i64) -> Subspace<Scalar> {
        let keys: BTreeSet<E::Key> =
            self.basis.iter().flat_map(|e| e.coords().into_keys()).filter(|k| E::weight(k) < m).collect();
        let keys: Vec<E::Key> = keys.into_iter().collect();
        if keys.is_empty() {
            return Subspace::full(self.dim());
        }
        let mat = coord_matrix(&keys, &self.basis);
        Subspace::span(self.dim(), &mat.kernel()).expect("consistent shape")
    }

    pub fn order_filtration(&self) -> FiltrationReport {
        let ev = self.filtration_level(0);
        let rank = self.dim() - ev.dim();
        let mut levels = vec![Subspace::full(self.dim())];
        let mut m = 0;
        loop {
            let g = self.filtration_level(m);
            let done = g.is_zero();
            levels.push(g);
            if done {
                break;
            }
            m += 1;
        }
        let stability = levels[1].clone();
        let g1 = levels[2].clone();
        let kernel = self.isotropy_kernel(&stability);
        FiltrationReport {
            dim: self.dim(),
            transitive: rank == E::MANIFOLD_DIM,
            stability_dim: stability.dim(),
            isotropy_dim: stability.dim() - g1.dim(),
            isotropy_kernel_dim: kernel.dim(),
            levels: levels.iter().map(Subspace::dim).collect(),
            g1_equals_kernel: g1 == kernel,
        }
    }

    /// `{z in k : [z, g] in k}`, the kernel of the isotropy representation of `k` on `g/k`.
    pub fn isotropy_kernel(&self, k: &Subspace<Scalar>) -> Subspace<Scalar> {
        let d = self.dim();
        if k.is_zero() {
            return Subspace::zero(d);
        }
        let ann = k.annihilator();
        let mut rows = Vec::new();
        for i in 0..d {
            let ei = self.structure.basis_vector(i);
            for f in ann.basis() {
                let row: Vec<Scalar> = k
                    .basis()
                    .iter()
                    .map(|z| {
                        let br = self.structure.bracket(z, &ei);
                        f.iter().zip(&br).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
                    })
                    .collect();
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return k.clone();
        }
        let mat = Matrix::from_rows(k.dim(), rows).expect("shape");
        let zs: Vec<Vec<Scalar>> = mat.kernel().iter().map(|t| k.combine(t)).collect();
        Subspace::span(d, &zs).expect("shape")
    }

    /// Nonzero structure constants as text lines `[a, b] = c*e + ...`.
    pub fn structure_lines(&self) -> Vec<String> {
        let mut by_pair: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        for (i, j, k, c) in self.structure.nonzero() {
            by_pair.entry((i, j)).or_default().push(format!("{c}*[{}]", self.labels[k]));
        }
        by_pair
            .into_iter()
            .map(|((i, j), terms)| format!("[{}, {}] = {}", self.labels[i], self.labels[j], terms.join(" + ")))
            .collect()
    }
}

/// Dimensions attached to the order filtration `g = g_{-1} > g_0 > g_1 > ...`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiltrationReport {
    pub dim: usize,
    /// Evaluation at the origin is onto.
    pub transitive: bool,
    /// `dim g_0`.
    pub stability_dim: usize,
    /// `dim g_0 / g_1`.
    pub isotropy_dim: usize,
    /// Dimension of the kernel of the isotropy representation of `g_0` on `g/g_0`.
    pub isotropy_kernel_dim: usize,
    /// `dim g_m` for `m = -1, 0, 1, ...` down to zero.
    pub levels: Vec<usize>,
    /// Whether `g_1` coincides with the kernel of the isotropy representation.
    pub g1_equals_kernel: bool,
}
