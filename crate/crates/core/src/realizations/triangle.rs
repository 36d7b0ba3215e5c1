//! Triangle modules of polynomials on the plane, written in the complex coordinate `z = x + iy`.
//!
//! The node `P^{k,l}` is spanned by `z^m zbar^n` with `k = m + n` and `l = m - n`. A top node
//! `(k0, l0)` generates the triangle of all nodes below it under `d/dz` and `d/dzbar`.

use std::collections::BTreeSet;

use num::Zero;

use super::plane::{euler, rotation, PlaneVF};
use super::series::Poly;
use super::RealizationError;
use crate::exact_linalg::{Field, GScalar, Scalar, Subspace};

/// A node `z^m zbar^n`.
pub type Node = (u32, u32);

/// `z^m zbar^n` as a polynomial in `x, y`.
pub fn node_poly((m, n): Node) -> Poly<GScalar> {
    let z = Poly::monomial((1, 0), GScalar::from_int(1)).add(&Poly::monomial((0, 1), GScalar::i()));
    let zb = Poly::monomial((1, 0), GScalar::from_int(1)).add(&Poly::monomial((0, 1), -GScalar::i()));
    z.pow(m).mul(&zb.pow(n))
}

fn real_part(p: &Poly<GScalar>) -> Poly<Scalar> {
    p.map(|c| c.re.clone())
}

fn imag_part(p: &Poly<GScalar>) -> Poly<Scalar> {
    p.map(|c| c.im.clone())
}

/// Nodes below the top `(k, l)`, excluding the constant.
pub fn triangle_nodes(k: i64, l: i64) -> Result<BTreeSet<Node>, RealizationError> {
    if k < 1 || l.abs() > k || (k - l) % 2 != 0 {
        return Err(RealizationError::BadTop { k, l });
    }
    let m0 = ((k + l) / 2) as u32;
    let n0 = ((k - l) / 2) as u32;
    let mut out = BTreeSet::new();
    for m in 0..=m0 {
        for n in 0..=n0 {
            if (m, n) != (0, 0) {
                out.insert((m, n));
            }
        }
    }
    Ok(out)
}

/// Union of triangles with real polynomial basis.
#[derive(Clone, Debug)]
pub struct TriangleModule {
    pub tops: Vec<(i64, i64)>,
    pub nodes: BTreeSet<Node>,
}

impl TriangleModule {
    /// The node set must be closed under conjugation `(m, n) -> (n, m)` to admit a real form.
    pub fn new(tops: &[(i64, i64)]) -> Result<Self, RealizationError> {
        let mut nodes = BTreeSet::new();
        for (k, l) in tops {
            nodes.extend(triangle_nodes(*k, *l)?);
        }
        if let Some(&(m, n)) = nodes.iter().find(|(m, n)| !nodes.contains(&(*n, *m))) {
            return Err(RealizationError::NotSymmetric { m, n });
        }
        Ok(TriangleModule { tops: tops.to_vec(), nodes })
    }

    /// Real basis: `Re z^m zbar^n` for `m >= n` and `Im z^m zbar^n` for `m > n`.
    pub fn real_basis(&self) -> Vec<(String, Poly<Scalar>)> {
        let mut out = Vec::new();
        for &(m, n) in self.nodes.iter().filter(|(m, n)| m >= n) {
            let p = node_poly((m, n));
            out.push((format!("Re z^{m}zb^{n}"), real_part(&p)));
            if m > n {
                out.push((format!("Im z^{m}zb^{n}"), imag_part(&p)));
            }
        }
        out
    }

    /// Checks `E = k` and `J = i l` on every node. Returns the first failing node.
    pub fn eigenvalue_failure(&self) -> Option<Node> {
        let (e, j) = (euler(), rotation());
        self.nodes.iter().copied().find(|&(m, n)| {
            let p = node_poly((m, n));
            let k = GScalar::from_int(i64::from(m + n));
            let il = GScalar::new(Scalar::zero(), Scalar::from_integer((i64::from(m) - i64::from(n)).into()));
            e.apply(&p) != p.scale(&k) || j.apply(&p) != p.scale(&il)
        })
    }

    /// First `(field index, basis index)` whose image leaves the span modulo constants.
    pub fn invariance_failure(&self, fields: &[PlaneVF]) -> Option<(usize, usize)> {
        invariance_failure(fields, &self.real_basis().into_iter().map(|(_, p)| p).collect::<Vec<_>>())
    }
}

/// First `(field, function)` index pair with `X(f)` outside `span(fs)` modulo constants.
pub fn invariance_failure(fields: &[PlaneVF], fs: &[Poly<Scalar>]) -> Option<(usize, usize)> {
    let keys: BTreeSet<(u32, u32)> = fs.iter().flat_map(|f| f.terms().map(|(e, _)| *e)).collect();
    let keys: Vec<_> = keys.into_iter().collect();
    let coords = |p: &Poly<Scalar>| -> Option<Vec<Scalar>> {
        if p.terms().any(|(e, _)| *e != (0, 0) && !keys.contains(e)) {
            return None;
        }
        Some(keys.iter().map(|e| p.coefficient(*e)).collect())
    };
    let span = Subspace::span(keys.len(), &fs.iter().filter_map(coords).collect::<Vec<_>>()).expect("shape");
    for (a, x) in fields.iter().enumerate() {
        for (b, f) in fs.iter().enumerate() {
            match coords(&x.apply(f).without_constant()) {
                Some(v) if span.contains(&v) => {}
                _ => return Some((a, b)),
            }
        }
    }
    None
}
