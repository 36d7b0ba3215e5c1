//! First Chevalley-Eilenberg cohomology and the nonsplitting check inside `p2`.

use num::Zero;

use super::RealizationError;
use crate::exact_linalg::{Matrix, Scalar, Subspace};
use crate::lie::StructureConstants;
use crate::prolongation::closure_violation;
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

/// `H^1(g, M)` with representatives as cochains `c = (c(e_0), ..., c(e_{m-1}))` concatenated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Report {
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

/// Checks `rho[e_i, e_j] = [rho_i, rho_j]`.
pub fn check_representation(g: &StructureConstants, rho: &[Matrix<Scalar>]) -> Result<(), RealizationError> {
    let m = g.dim();
    for i in 0..m {
        for j in i + 1..m {
            let mut lhs = Matrix::zeros(rho[0].rows(), rho[0].cols());
            for (k, c) in g.get(i, j).iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&rho[k].scale(c));
                }
            }
            if lhs != rho[i].commutator(&rho[j]) {
                return Err(RealizationError::NotRepresentation(i, j));
            }
        }
    }
    Ok(())
}

pub fn ce_h1(g: &StructureConstants, rho: &[Matrix<Scalar>]) -> Result<H1Report, RealizationError> {
    let m = g.dim();
    assert_eq!(rho.len(), m, "one matrix per basis element");
    if m == 0 {
        return Ok(H1Report { dim_cocycles: 0, dim_coboundaries: 0, dim: 0, representatives: vec![] });
    }
    let d = rho[0].rows();
    check_representation(g, rho)?;
    let n = m * d;
    // Cocycle condition c([e_i, e_j]) - rho_i c(e_j) + rho_j c(e_i) = 0, one row per output coordinate.
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for r in 0..d {
                let mut row = vec![Scalar::zero(); n];
                for (k, c) in g.get(i, j).iter().enumerate() {
                    row[k * d + r] += c.clone();
                }
                for s in 0..d {
                    row[j * d + s] -= rho[i][(r, s)].clone();
                    row[i * d + s] += rho[j][(r, s)].clone();
                }
                rows.push(row);
            }
        }
    }
    let z = if rows.is_empty() { Subspace::full(n) } else { Subspace::span(n, &Matrix::from_rows(n, rows)?.kernel())? };
    let bvecs: Vec<Vec<Scalar>> = (0..d)
        .map(|s| (0..m).flat_map(|i| (0..d).map(move |r| (i, r))).map(|(i, r)| rho[i][(r, s)].clone()).collect())
        .collect();
    let b = Subspace::span(n, &bvecs)?;
    let representatives = b.complement_in(&z)?;
    Ok(H1Report { dim_cocycles: z.dim(), dim_coboundaries: b.dim(), dim: representatives.len(), representatives })
}

/// Structure constants of `span(basis)` under the Poisson bracket and the matrices of its action
/// on `span(module)`. Both spans must be homogeneous.
pub fn bracket_module(
    space: &SymplecticSpace,
    basis: &[SymTensor<Scalar>],
    module: &[SymTensor<Scalar>],
) -> Result<(StructureConstants, Vec<Matrix<Scalar>>), RealizationError> {
    let coords_in =
        |ts: &[SymTensor<Scalar>], t: &SymTensor<Scalar>, what: &str| -> Result<Vec<Scalar>, RealizationError> {
            let deg = ts[0].degree().unwrap_or(0);
            let span = space.span(deg, ts)?;
            let v = space.to_coords(t, deg)?;
            // Coordinates relative to `ts` itself, not the reduced basis.
            let mat =
                Matrix::from_cols(v.len(), ts.iter().map(|x| space.to_coords(x, deg)).collect::<Result<_, _>>()?)?;
            if !span.contains(&v) {
                return Err(RealizationError::NotInvariant(format!("{} in {what}", space.format(t))));
            }
            Ok(mat.solve(&v).expect("contained"))
        };
    let m = basis.len();
    let mut g = StructureConstants::abelian(m);
    for i in 0..m {
        for j in i + 1..m {
            let br = space.poisson_bracket(&basis[i], &basis[j]);
            let c = if br.is_zero() { vec![Scalar::zero(); m] } else { coords_in(basis, &br, "algebra")? };
            g.set(i, j, c)?;
        }
    }
    let d = module.len();
    let mut rho = Vec::new();
    for x in basis {
        let mut cols = Vec::new();
        for v in module {
            let br = space.poisson_bracket(x, v);
            cols.push(if br.is_zero() { vec![Scalar::zero(); d] } else { coords_in(module, &br, "module")? });
        }
        rho.push(Matrix::from_cols(d, cols)?);
    }
    Ok((g, rho))
}

#[derive(Clone, Debug)]
pub struct NonsplitReport {
    /// `X + c(X) + psi(X)` for each basis element `X`.
    pub generators: Vec<SymTensor<Scalar>>,
    pub closed: bool,
    /// First pair violating `c[X,Y] = [c(X),Y] + [X,c(Y)]`.
    pub cocycle_violation: Option<(usize, usize)>,
    /// First pair violating `psi[X,Y] = [c(X),c(Y)]`.
    pub psi_violation: Option<(usize, usize)>,
}

/// Checks whether `{X + c(X) + psi(X)}` is a subalgebra, with `X` running over `hbar`.
///
/// `c` and `psi` are given by their values on the basis of `hbar`; `hbar` must be closed.
pub fn nonsplit_check(
    space: &SymplecticSpace,
    hbar: &[SymTensor<Scalar>],
    c: &[SymTensor<Scalar>],
    psi: &[SymTensor<Scalar>],
) -> Result<NonsplitReport, RealizationError> {
    assert!(hbar.len() == c.len() && c.len() == psi.len(), "one value per basis element");
    let (g, _) = bracket_module(space, hbar, hbar)?;
    let lin = |vals: &[SymTensor<Scalar>], coeffs: &[Scalar]| {
        coeffs.iter().zip(vals).fold(SymTensor::zero(), |acc, (a, v)| acc.add(&v.scale(a)))
    };
    let mut cocycle_violation = None;
    let mut psi_violation = None;
    for i in 0..hbar.len() {
        for j in i + 1..hbar.len() {
            let br = g.get(i, j);
            let lhs_c = lin(c, br);
            let rhs_c = space.poisson_bracket(&c[i], &hbar[j]).add(&space.poisson_bracket(&hbar[i], &c[j]));
            if cocycle_violation.is_none() && lhs_c != rhs_c {
                cocycle_violation = Some((i, j));
            }
            if psi_violation.is_none() && lin(psi, br) != space.poisson_bracket(&c[i], &c[j]) {
                psi_violation = Some((i, j));
            }
        }
    }
    let generators: Vec<SymTensor<Scalar>> = (0..hbar.len()).map(|i| hbar[i].add(&c[i]).add(&psi[i])).collect();
    let sub = space.span(2, &generators)?;
    let closed = sub.dim() == hbar.len() && closure_violation(space, &sub).is_none();
    Ok(NonsplitReport { generators, closed, cocycle_violation, psi_violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_algebra_and_trivial_module() {
        let r = ce_h1(&StructureConstants::abelian(0), &[]).unwrap();
        assert_eq!(r.dim, 0);
        let r = ce_h1(&StructureConstants::abelian(2), &[Matrix::zeros(1, 1), Matrix::zeros(1, 1)]).unwrap();
        assert_eq!(r.dim, 2);
    }
}
