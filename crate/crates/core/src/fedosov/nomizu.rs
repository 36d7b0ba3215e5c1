//! Invariant torsion-free connections on reductive homogeneous spaces via Nomizu maps.
//!
//! Data: `g = h + m` with `h` given by matrices acting on `m`, and `[m, m]` given by its `h`- and
//! `m`-components. A Nomizu map `L : m -> h` is written `L(e_i) = sum_a t_{ia} H_a`.

use num::Zero;

use super::FedosovError;
use crate::exact_linalg::{Matrix, Scalar, Subspace};
use crate::lie::StructureConstants;
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

#[derive(Clone, Debug)]
pub struct NomizuData {
    pub name: String,
    /// Basis `H_a` of `h` as matrices on `m`.
    pub h: Vec<Matrix<Scalar>>,
    /// `[e_i, e_j] = (h-coordinates, m-coordinates)`, antisymmetric.
    pub bracket: Vec<Vec<(Vec<Scalar>, Vec<Scalar>)>>,
}

impl NomizuData {
    /// Data with `[m, m] = 0`.
    pub fn flat(name: impl Into<String>, h: Vec<Matrix<Scalar>>, d: usize) -> Self {
        let z = (vec![Scalar::zero(); h.len()], vec![Scalar::zero(); d]);
        NomizuData { name: name.into(), bracket: vec![vec![z; d]; d], h }
    }

    pub fn dim_m(&self) -> usize {
        self.bracket.len()
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, hpart: Vec<Scalar>, mpart: Vec<Scalar>) {
        let neg = |v: &[Scalar]| v.iter().map(|x| -x.clone()).collect::<Vec<_>>();
        self.bracket[j][i] = (neg(&hpart), neg(&mpart));
        self.bracket[i][j] = (hpart, mpart);
    }

    /// Structure constants of `h + m` (basis `H_1..H_r, e_1..e_d`), after checking that the
    /// `H_a` are independent and span a subalgebra.
    pub fn total_algebra(&self) -> Result<StructureConstants, FedosovError> {
        let (r, d) = (self.h.len(), self.dim_m());
        let hspan = Subspace::span(d * d, &self.h.iter().map(Matrix::to_vec).collect::<Vec<_>>())?;
        if hspan.dim() != r {
            return Err(FedosovError::Inconsistent("isotropy matrices are linearly dependent".into()));
        }
        let hmat = Matrix::from_cols(d * d, self.h.iter().map(Matrix::to_vec).collect())?;
        let hcoords = |m: &Matrix<Scalar>| hmat.solve(&m.to_vec());
        let mut g = StructureConstants::abelian(r + d);
        for a in 0..r {
            for b in a + 1..r {
                let c = hcoords(&self.h[a].commutator(&self.h[b]))
                    .ok_or_else(|| FedosovError::Inconsistent(format!("[H{}, H{}] leaves h", a + 1, b + 1)))?;
                let mut v = c;
                v.extend(vec![Scalar::zero(); d]);
                g.set(a, b, v)?;
            }
            for i in 0..d {
                let mut v = vec![Scalar::zero(); r];
                v.extend(self.h[a].col(i));
                g.set(a, r + i, v)?;
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                let (hp, mp) = &self.bracket[i][j];
                let mut v = hp.clone();
                v.extend(mp.iter().cloned());
                g.set(r + i, r + j, v)?;
            }
        }
        if let Some(t) = g.jacobi_failures().first() {
            return Err(FedosovError::Inconsistent(format!("Jacobi identity fails on {t:?}")));
        }
        Ok(g)
    }
}

/// Affine solution set `particular + kernel` of the Nomizu system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NomizuSolutions {
    pub unknowns: usize,
    pub equations: usize,
    /// `t_{ia}` of one solution, if the system is consistent.
    pub particular: Option<Vec<Vec<Scalar>>>,
    /// Dimension of the homogeneous solution space.
    pub homogeneous_dim: usize,
}

impl NomizuSolutions {
    /// `None` for infinitely many solutions.
    pub fn count(&self) -> Option<usize> {
        match (&self.particular, self.homogeneous_dim) {
            (None, _) => Some(0),
            (Some(_), 0) => Some(1),
            _ => None,
        }
    }
}

/// Solves torsion-freeness `L(x)y - L(y)x = pi_m [x, y]` and, when `equivariant`, also
/// `L([h, x]) = [h, L(x)]` for `h` in the isotropy algebra.
pub fn nomizu_solutions(data: &NomizuData, equivariant: bool) -> Result<NomizuSolutions, FedosovError> {
    data.total_algebra()?;
    let (r, d) = (data.h.len(), data.dim_m());
    let n = r * d;
    let idx = |i: usize, a: usize| i * r + a;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for row_r in 0..d {
                let mut row = vec![Scalar::zero(); n];
                for a in 0..r {
                    row[idx(i, a)] += data.h[a][(row_r, j)].clone();
                    row[idx(j, a)] -= data.h[a][(row_r, i)].clone();
                }
                rows.push(row);
                rhs.push(data.bracket[i][j].1[row_r].clone());
            }
        }
    }
    if equivariant {
        for b in 0..r {
            let comms: Vec<Matrix<Scalar>> = (0..r).map(|a| data.h[b].commutator(&data.h[a])).collect();
            for i in 0..d {
                for rr in 0..d {
                    for s in 0..d {
                        let mut row = vec![Scalar::zero(); n];
                        for k in 0..d {
                            let hb = &data.h[b][(k, i)];
                            if hb.is_zero() {
                                continue;
                            }
                            for a in 0..r {
                                row[idx(k, a)] += hb * &data.h[a][(rr, s)];
                            }
                        }
                        for a in 0..r {
                            row[idx(i, a)] -= comms[a][(rr, s)].clone();
                        }
                        rows.push(row);
                        rhs.push(Scalar::zero());
                    }
                }
            }
        }
    }
    let equations = rows.len();
    let m = Matrix::from_rows(n, rows)?;
    let particular = m.solve(&rhs).map(|t| t.chunks(r.max(1)).map(<[Scalar]>::to_vec).collect());
    Ok(NomizuSolutions { unknowns: n, equations, particular, homogeneous_dim: n - m.rank() })
}

fn matrices(tensors: &[&str]) -> Vec<Matrix<Scalar>> {
    let s = SymplecticSpace::new(2);
    tensors
        .iter()
        .map(|t| {
            let x: SymTensor<Scalar> = s.parse(t).expect("valid tensor");
            s.quad_to_matrix(&x).expect("quadratic")
        })
        .collect()
}

/// `u(2)` acting on `R^4`.
pub fn u2_matrices() -> Vec<Matrix<Scalar>> {
    matrices(&["p1^2 + q1^2", "p2^2 + q2^2", "p1*p2 + q1*q2", "p1*q2 - p2*q1"])
}

/// All of `sp(R^4)`.
pub fn sp4_matrices() -> Vec<Matrix<Scalar>> {
    let s = SymplecticSpace::new(2);
    s.sym_basis(2)
        .into_iter()
        .map(|m| s.quad_to_matrix(&SymTensor::monomial(m, Scalar::from_integer(1.into()))).expect("quadratic"))
        .collect()
}

/// Symmetric space with isotropy `u(2)` and `[x, y] = R(x, y)` for the curvature tensor
/// `R(x,y)z = <y,z>x - <x,z>y + <Jy,z>Jx - <Jx,z>Jy + 2<x,Jy>Jz` of constant holomorphic curvature.
pub fn u2_symmetric_space() -> Result<NomizuData, FedosovError> {
    let h = u2_matrices();
    let d = 4;
    let j = crate::catalog::complex_structure_j();
    let hmat = Matrix::from_cols(d * d, h.iter().map(Matrix::to_vec).collect())?;
    let e = |i: usize| (0..d).map(|k| Scalar::from_integer(i64::from(k == i).into())).collect::<Vec<_>>();
    let dot = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).fold(Scalar::zero(), |s, (x, y)| s + x * y);
    let outer = |a: &[Scalar], b: &[Scalar]| {
        Matrix::from_rows(d, a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect()).expect("square")
    };
    let mut data = NomizuData::flat("u2-symmetric", h, d);
    for a in 0..d {
        for b in a + 1..d {
            let (x, y) = (e(a), e(b));
            let (jx, jy) = (j.mul_vec(&x), j.mul_vec(&y));
            let r = outer(&x, &y)
                .sub(&outer(&y, &x))
                .add(&outer(&jx, &jy))
                .sub(&outer(&jy, &jx))
                .add(&j.scale(&(dot(&x, &jy) * Scalar::from_integer(2.into()))));
            let coords = hmat
                .solve(&r.to_vec())
                .ok_or_else(|| FedosovError::Inconsistent("curvature leaves the isotropy algebra".into()))?;
            data.set_bracket(a, b, coords, vec![Scalar::zero(); d]);
        }
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nomizu_counts() {
        let sp = NomizuData::flat("sp4", sp4_matrices(), 4);
        assert_eq!(nomizu_solutions(&sp, false).unwrap().homogeneous_dim, 20);
        let flat = NomizuData::flat("u2-flat", u2_matrices(), 4);
        assert_eq!(nomizu_solutions(&flat, true).unwrap().count(), Some(1));
        let sym = u2_symmetric_space().unwrap();
        assert_eq!(nomizu_solutions(&sym, true).unwrap().count(), Some(1));
        let trivial = NomizuData::flat("abelian", vec![], 4);
        let s = nomizu_solutions(&trivial, true).unwrap();
        assert_eq!(s.count(), Some(1));
    }
}
