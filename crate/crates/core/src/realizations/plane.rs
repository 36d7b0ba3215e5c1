//! Polynomial vector fields on the plane.

use std::collections::BTreeMap;

use num::One;

use super::series::{Exps, Poly};
use super::FormalField;
use crate::exact_linalg::{Field, Scalar};
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

/// Vector field `X0 d/du0 + X1 d/du1` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct PlaneVF {
    pub comps: [Poly<Scalar>; 2],
}

impl PlaneVF {
    pub fn new(c0: Poly<Scalar>, c1: Poly<Scalar>) -> Self {
        PlaneVF { comps: [c0, c1] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a field from `(coefficient, (a, b), component)` terms `c u0^a u1^b d/du_comp`.
    pub fn from_terms(terms: &[(Scalar, Exps, usize)]) -> Self {
        let mut v = Self::zero();
        for (c, e, i) in terms {
            v.comps[*i].add_term(*e, c.clone());
        }
        v
    }

    /// The coordinate translation `d/du_i`.
    pub fn translation(i: usize) -> Self {
        Self::from_terms(&[(Scalar::one(), (0, 0), i)])
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        PlaneVF::new(self.comps[0].add(&o.comps[0]), self.comps[1].add(&o.comps[1]))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        PlaneVF::new(self.comps[0].scale(s), self.comps[1].scale(s))
    }

    /// Derivative of a function along the field.
    pub fn apply<F: Field>(&self, f: &Poly<F>) -> Poly<F> {
        let mut out = Poly::zero();
        for i in 0..2 {
            let ci = self.comps[i].map(|c| F::from_scalar(c.clone()));
            out = out.add(&ci.mul(&f.partial(i)));
        }
        out
    }

    pub fn lie_bracket(&self, o: &Self) -> Self {
        PlaneVF::new(
            self.apply(&o.comps[0]).sub(&o.apply(&self.comps[0])),
            self.apply(&o.comps[1]).sub(&o.apply(&self.comps[1])),
        )
    }

    /// Value at the origin.
    pub fn at_origin(&self) -> [Scalar; 2] {
        [self.comps[0].constant_term(), self.comps[1].constant_term()]
    }

    /// Standard area form at the origin evaluated on the values of two fields.
    ///
    /// Normalized so that for Hamiltonian fields it equals the constant term of the Poisson
    /// bracket of their Hamiltonians.
    pub fn origin_form(&self, o: &Self) -> Scalar {
        let [x0, x1] = self.at_origin();
        let [y0, y1] = o.at_origin();
        x1 * y0 - x0 * y1
    }

    /// Divergence of `rho * X`, truncated at total degree `d`.
    pub fn weighted_divergence(&self, rho: &Poly<Scalar>, d: u32) -> Poly<Scalar> {
        let a = rho.mul(&self.comps[0]).truncate(d + 1).partial(0);
        let b = rho.mul(&self.comps[1]).truncate(d + 1).partial(1);
        a.add(&b).truncate(d)
    }

    /// Hamiltonian field `{H, u0} d/du0 + {H, u1} d/du1` of a tensor in the variables `(u0, u1)`.
    ///
    /// The plane coordinates are identified with the basis vectors `vars` of `space`.
    pub fn from_hamiltonian(space: &SymplecticSpace, h: &SymTensor<Scalar>, vars: [usize; 2]) -> Self {
        let mut comps = [Poly::zero(), Poly::zero()];
        for (i, comp) in comps.iter_mut().enumerate() {
            let (t, c) = space.poisson_bracket_full(h, &space.var(vars[i]));
            comp.add_term((0, 0), c);
            for (m, coef) in t.terms() {
                let e = (m.multiplicity(vars[0]) as u32, m.multiplicity(vars[1]) as u32);
                assert_eq!((e.0 + e.1) as usize, m.degree(), "Hamiltonian uses only the plane variables");
                comp.add_term(e, coef.clone());
            }
        }
        PlaneVF { comps }
    }

    pub fn format(&self, names: [&str; 2]) -> String {
        let mut parts = Vec::new();
        for i in 0..2 {
            if !self.comps[i].is_zero() {
                parts.push(format!("({})*d/d{}", self.comps[i].format(names), names[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Coordinate key of a plane field: component and exponent pair.
pub type PlaneKey = (u8, Exps);

impl FormalField for PlaneVF {
    type Key = PlaneKey;
    const MANIFOLD_DIM: usize = 2;

    fn bracket(&self, o: &Self) -> Self {
        self.lie_bracket(o)
    }

    fn coords(&self) -> BTreeMap<PlaneKey, Scalar> {
        let mut m = BTreeMap::new();
        for i in 0..2 {
            for (e, c) in self.comps[i].terms() {
                m.insert((i as u8, *e), c.clone());
            }
        }
        m
    }

    fn weight(k: &PlaneKey) -> i64 {
        (k.1 .0 + k.1 .1) as i64 - 1
    }

    fn describe(&self) -> String {
        self.format(["x", "y"])
    }

    fn add(&self, o: &Self) -> Self {
        PlaneVF::add(self, o)
    }

    fn scale(&self, s: &Scalar) -> Self {
        PlaneVF::scale(self, s)
    }

    fn zero_like(&self) -> Self {
        PlaneVF::zero()
    }
}

/// Euler field `E = x d/dx + y d/dy`.
pub fn euler() -> PlaneVF {
    PlaneVF::from_terms(&[(Scalar::one(), (1, 0), 0), (Scalar::one(), (0, 1), 1)])
}

/// Rotation field `J = x d/dy - y d/dx`.
pub fn rotation() -> PlaneVF {
    PlaneVF::from_terms(&[(Scalar::one(), (1, 0), 1), (-Scalar::one(), (0, 1), 0)])
}
