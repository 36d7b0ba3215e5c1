//! Model of the full prolongation of `p2`: `Der(R[[y]]) + (R[[y]] (x) sp(W)^(inf) + R_+[[y]])`.
//!
//! The middle summand is written with plane vector fields on `W`. Brackets are
//! `[y^i X, y^j Y] = y^{i+j}[X, Y] + y^{i+j} Omega_o(X, Y) xi` (the second term only when
//! `i + j > 0`), vector fields on the line act by derivation, and the `xi` part is a space of
//! functions of `y` modulo constants.

use std::collections::BTreeMap;

use num::Zero;

use super::plane::PlaneVF;
use super::series::{Exps, Poly};
use super::FormalField;
use crate::exact_linalg::Scalar;
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct P2Element {
    /// Coefficient `a(y)` of `d/dy`.
    pub a: Poly<Scalar>,
    /// `X_i` by power `i` of `y`.
    pub x: BTreeMap<u32, PlaneVF>,
    /// Function `f(y)` without constant term.
    pub f: Poly<Scalar>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum P2Key {
    Der(u32),
    I3(u32, u8, Exps),
    Xi(u32),
}

fn ypow(k: u32) -> Poly<Scalar> {
    Poly::monomial((k, 0), Scalar::from(num::BigInt::from(1)))
}

impl P2Element {
    /// `a(y) d/dy`.
    pub fn vector_field(a: Poly<Scalar>) -> Self {
        P2Element { a, ..Default::default() }
    }

    /// `y^power X`.
    pub fn plane(power: u32, x: PlaneVF) -> Self {
        let mut e = P2Element::default();
        if !x.is_zero() {
            e.x.insert(power, x);
        }
        e
    }

    /// `y^power X_H` for a Hamiltonian `H` in the variables `p2, q2` of `R^4`.
    pub fn from_tensor(power: u32, h: &SymTensor<Scalar>) -> Self {
        let s = SymplecticSpace::new(2);
        Self::plane(power, PlaneVF::from_hamiltonian(&s, h, [s.p(2), s.q(2)]))
    }

    /// `f(y)` in the `xi` part; the constant term is dropped.
    pub fn function(f: Poly<Scalar>) -> Self {
        P2Element { f: f.without_constant(), ..Default::default() }
    }

    pub fn y_power(k: u32) -> Self {
        Self::function(ypow(k))
    }

    fn add_plane(&mut self, k: u32, v: PlaneVF) {
        let cur = self.x.remove(&k).unwrap_or_default().add(&v);
        if !cur.is_zero() {
            self.x.insert(k, cur);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = P2Element { a: self.a.add(&o.a), x: self.x.clone(), f: self.f.add(&o.f) };
        for (k, v) in &o.x {
            e.add_plane(*k, v.clone());
        }
        e
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut e = P2Element { a: self.a.scale(s), x: BTreeMap::new(), f: self.f.scale(s) };
        for (k, v) in &self.x {
            e.add_plane(*k, v.scale(s));
        }
        e
    }

    /// `a(y) d/dy` applied to `sum_j y^j Y_j`.
    fn derive_planes(a: &Poly<Scalar>, ys: &BTreeMap<u32, PlaneVF>) -> BTreeMap<u32, PlaneVF> {
        let mut out = P2Element::default();
        for (j, yv) in ys {
            if *j == 0 {
                continue;
            }
            for ((m, _), c) in a.terms() {
                out.add_plane(m + j - 1, yv.scale(&(c * Scalar::from(num::BigInt::from(*j)))));
            }
        }
        out.x
    }

    pub fn lie_bracket(&self, o: &Self) -> Self {
        let mut e =
            P2Element { a: self.a.mul(&o.a.partial(0)).sub(&o.a.mul(&self.a.partial(0))), ..Default::default() };
        let mut f = self.a.mul(&o.f.partial(0)).sub(&o.a.mul(&self.f.partial(0)));
        for (i, xv) in &self.x {
            for (j, yv) in &o.x {
                e.add_plane(i + j, xv.lie_bracket(yv));
                if i + j > 0 {
                    f.add_term((i + j, 0), xv.origin_form(yv));
                }
            }
        }
        for (k, v) in Self::derive_planes(&self.a, &o.x) {
            e.add_plane(k, v);
        }
        for (k, v) in Self::derive_planes(&o.a, &self.x) {
            e.add_plane(k, v.scale(&-Scalar::from(num::BigInt::from(1))));
        }
        e.f = f.without_constant();
        e
    }

    pub fn format(&self) -> String {
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format!("({})*d/dy", self.a.format(["y", "_"])));
        }
        for (k, v) in &self.x {
            let vf = v.format(["u", "v"]);
            parts.push(match k {
                0 => format!("[{vf}]"),
                1 => format!("y*[{vf}]"),
                _ => format!("y^{k}*[{vf}]"),
            });
        }
        if !self.f.is_zero() {
            parts.push(format!("xi({})", self.f.format(["y", "_"])));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl FormalField for P2Element {
    type Key = P2Key;
    const MANIFOLD_DIM: usize = 4;

    fn bracket(&self, o: &Self) -> Self {
        self.lie_bracket(o)
    }

    fn coords(&self) -> BTreeMap<P2Key, Scalar> {
        let mut m = BTreeMap::new();
        for ((k, _), c) in self.a.terms() {
            m.insert(P2Key::Der(*k), c.clone());
        }
        for (i, v) in &self.x {
            for comp in 0..2 {
                for (e, c) in v.comps[comp].terms() {
                    m.insert(P2Key::I3(*i, comp as u8, *e), c.clone());
                }
            }
        }
        for ((k, _), c) in self.f.terms() {
            m.insert(P2Key::Xi(*k), c.clone());
        }
        m.retain(|_, c| !c.is_zero());
        m
    }

    fn weight(k: &P2Key) -> i64 {
        match k {
            P2Key::Der(m) => *m as i64 - 1,
            P2Key::I3(i, _, (a, b)) => (i + a + b) as i64 - 1,
            P2Key::Xi(m) => *m as i64 - 2,
        }
    }

    fn describe(&self) -> String {
        self.format()
    }

    fn add(&self, o: &Self) -> Self {
        P2Element::add(self, o)
    }

    fn scale(&self, s: &Scalar) -> Self {
        P2Element::scale(self, s)
    }

    fn zero_like(&self) -> Self {
        P2Element::default()
    }
}
