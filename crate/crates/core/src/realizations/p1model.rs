//! Model of the full prolongation of `p1`: `Der(R[[x, y]]) + R_+[[x, y]]`.
//!
//! Vector fields on the plane act on the abelian ideal of functions modulo constants.

use std::collections::BTreeMap;

use num::Zero;

use super::plane::PlaneVF;
use super::series::{Exps, Poly};
use super::FormalField;
use crate::exact_linalg::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct P1Element {
    pub v: PlaneVF,
    /// Function without constant term.
    pub f: Poly<Scalar>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum P1Key {
    Vf(u8, Exps),
    Fn(Exps),
}

impl P1Element {
    pub fn field(v: PlaneVF) -> Self {
        P1Element { v, f: Poly::zero() }
    }

    pub fn function(f: Poly<Scalar>) -> Self {
        P1Element { v: PlaneVF::zero(), f: f.without_constant() }
    }

    pub fn lie_bracket(&self, o: &Self) -> Self {
        P1Element { v: self.v.lie_bracket(&o.v), f: self.v.apply(&o.f).sub(&o.v.apply(&self.f)).without_constant() }
    }

    pub fn format(&self) -> String {
        match (self.v.is_zero(), self.f.is_zero()) {
            (true, true) => "0".into(),
            (false, true) => self.v.format(["x", "y"]),
            (true, false) => format!("xi({})", self.f.format(["x", "y"])),
            (false, false) => format!("{} + xi({})", self.v.format(["x", "y"]), self.f.format(["x", "y"])),
        }
    }
}

impl FormalField for P1Element {
    type Key = P1Key;
    const MANIFOLD_DIM: usize = 4;

    fn bracket(&self, o: &Self) -> Self {
        self.lie_bracket(o)
    }

    fn coords(&self) -> BTreeMap<P1Key, Scalar> {
        let mut m: BTreeMap<P1Key, Scalar> =
            self.v.coords().into_iter().map(|((i, e), c)| (P1Key::Vf(i, e), c)).collect();
        for (e, c) in self.f.terms() {
            m.insert(P1Key::Fn(*e), c.clone());
        }
        m.retain(|_, c| !c.is_zero());
        m
    }

    fn weight(k: &P1Key) -> i64 {
        match k {
            P1Key::Vf(_, (a, b)) => (a + b) as i64 - 1,
            P1Key::Fn((a, b)) => (a + b) as i64 - 2,
        }
    }

    fn describe(&self) -> String {
        self.format()
    }

    fn add(&self, o: &Self) -> Self {
        P1Element { v: self.v.add(&o.v), f: self.f.add(&o.f) }
    }

    fn scale(&self, s: &Scalar) -> Self {
        P1Element { v: self.v.scale(s), f: self.f.scale(s) }
    }

    fn zero_like(&self) -> Self {
        P1Element::default()
    }
}
