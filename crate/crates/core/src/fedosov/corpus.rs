//! Symplectic Lie algebras used for regression checks.

use num::Zero;

use super::SymplecticLieAlgebra;
use crate::exact_linalg::{Matrix, Scalar};
use crate::lie::StructureConstants;

fn s(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Brackets `[i, j] = sum c e_k` as `(i, j, &[(c, k)])`, 1-based.
pub type Brackets<'a> = &'a [(usize, usize, &'a [(i64, usize)])];

/// Algebra of dimension `d` from 1-based brackets and 1-based `omega(i, j) = c` entries.
pub fn build(name: &str, d: usize, brackets: Brackets, omega: &[(usize, usize, i64)]) -> SymplecticLieAlgebra {
    let mut g = StructureConstants::abelian(d);
    for (i, j, terms) in brackets {
        let mut v = vec![Scalar::zero(); d];
        for (c, k) in terms.iter() {
            v[k - 1] += s(*c);
        }
        g.set(i - 1, j - 1, v).expect("valid bracket");
    }
    let mut w = Matrix::zeros(d, d);
    for (i, j, c) in omega {
        w[(i - 1, j - 1)] = s(*c);
        w[(j - 1, i - 1)] = s(-c);
    }
    SymplecticLieAlgebra::new(name, g, w)
}

/// Closed 2-forms: antisymmetric matrices whose cyclic sums vanish.
pub fn closed_two_forms(g: &StructureConstants) -> Vec<Matrix<Scalar>> {
    let d = g.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let coeff = |w: &[Scalar], a: &[Scalar], b: usize| -> Vec<Scalar> {
        // contribution of omega(a, e_b) to each pair coordinate
        let _ = w;
        let mut row = vec![Scalar::zero(); pairs.len()];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if j == b {
                row[p] += a[i].clone();
            }
            if i == b {
                row[p] -= a[j].clone();
            }
        }
        row
    };
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let mut row = coeff(&[], g.get(i, j), k);
                for (r, x) in row.iter_mut().zip(coeff(&[], g.get(j, k), i)) {
                    *r += x;
                }
                for (r, x) in row.iter_mut().zip(coeff(&[], g.get(k, i), j)) {
                    *r += x;
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..pairs.len()).map(|p| (0..pairs.len()).map(|q| s(i64::from(p == q))).collect()).collect()
    } else {
        Matrix::from_rows(pairs.len(), rows).expect("shape").kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut w = Matrix::zeros(d, d);
            for (p, &(i, j)) in pairs.iter().enumerate() {
                w[(i, j)] = v[p].clone();
                w[(j, i)] = -v[p].clone();
            }
            w
        })
        .collect()
}

/// The regression corpus: eight nilpotent algebras of dimension 4 and 6 plus two solvable ones.
pub fn corpus() -> Vec<SymplecticLieAlgebra> {
    let heis: Brackets = &[(1, 2, &[(1, 3)])];
    let n4: Brackets = &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 4)])];
    vec![
        build("abelian4", 4, &[], &[(1, 3, 1), (2, 4, 1)]),
        build("aff", 2, &[(1, 2, &[(1, 2)])], &[(1, 2, 1)]),
        build("heis3+R", 4, heis, &[(1, 3, 1), (2, 4, 1)]),
        build("n4", 4, n4, &[(1, 4, 1), (2, 3, 1)]),
        build("heis3+R3", 6, heis, &[(1, 3, 1), (2, 4, 1), (5, 6, 1)]),
        build("n4+R2", 6, n4, &[(1, 4, 1), (2, 3, 1), (5, 6, 1)]),
        build("heis3+heis3", 6, &[(1, 2, &[(1, 3)]), (4, 5, &[(1, 6)])], &[(1, 3, 1), (4, 6, 1), (2, 5, 1)]),
        build(
            "free-2step-3",
            6,
            &[(1, 2, &[(1, 4)]), (1, 3, &[(1, 5)]), (2, 3, &[(1, 6)])],
            &[(1, 6, 1), (2, 5, 2), (3, 4, 1)],
        ),
        build(
            "filiform6",
            6,
            &[(1, 2, &[(1, 3)]), (1, 3, &[(1, 4)]), (1, 4, &[(1, 5)]), (1, 5, &[(1, 6)])],
            &[(1, 6, 1), (2, 5, -1), (3, 4, 1)],
        ),
        build("aff+aff", 4, &[(1, 2, &[(1, 2)]), (3, 4, &[(1, 4)])], &[(1, 2, 1), (3, 4, 1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_counts() {
        let c = corpus();
        assert_eq!(closed_two_forms(&c[0].g).len(), 6);
        assert_eq!(closed_two_forms(&c[1].g).len(), 1);
    }

    #[test]
    fn corpus_is_symplectic() {
        for a in corpus() {
            assert!(a.check().is_valid(), "{}: {}", a.name, a.check().describe());
            for w in closed_two_forms(&a.g) {
                assert!(SymplecticLieAlgebra::new("", a.g.clone(), w).check().cocycle_failures.is_empty());
            }
        }
    }
}
