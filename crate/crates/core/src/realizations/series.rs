//! Polynomials in one or two variables with exact coefficients.

use std::collections::BTreeMap;

use crate::exact_linalg::{Field, Scalar};

/// Exponent pair; one-variable polynomials use only the first slot.
pub type Exps = (u32, u32);

/// Polynomial in at most two variables, optionally truncated at a total degree.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Poly<F: Field> {
    terms: BTreeMap<Exps, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn monomial(e: Exps, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn constant(c: F) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(if i == 0 { (1, 0) } else { (0, 1) }, F::one())
    }

    pub fn add_term(&mut self, e: Exps, c: F) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e).or_insert_with(F::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: Exps) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coefficient((0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn without_constant(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&(0, 0));
        p
    }

    /// Drops all terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        Poly { terms: self.terms.iter().filter(|((a, b), _)| a + b <= d).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, c.clone() * s.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                p.add_term((a + c, b + d), x.clone() * y.clone());
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }

    /// Multiplies by `y^k` in the one-variable case (`x^k` in slot zero).
    pub fn shift(&self, k: u32) -> Self {
        Poly { terms: self.terms.iter().map(|((a, b), c)| ((a + k, *b), c.clone())).collect() }
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in &self.terms {
            let (k, e) = if i == 0 { (*a, (a.saturating_sub(1), *b)) } else { (*b, (*a, b.saturating_sub(1))) };
            if k > 0 {
                p.add_term(e, c.clone() * F::from_int(k as i64));
            }
        }
        p
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, f(c));
        }
        p
    }

    /// Series inverse up to total degree `d`; requires an invertible constant term.
    pub fn inverse_series(&self, d: u32) -> Option<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let inv0 = F::one() / c0.clone();
        // 1/(c0 (1 + s)) = inv0 * sum (-s)^m with s = (self - c0)/c0
        let s = self.without_constant().scale(&inv0);
        let mut acc = Self::constant(F::one());
        let mut term = Self::constant(F::one());
        for _ in 0..d {
            term = term.mul(&s).scale(&-F::one()).truncate(d);
            acc = acc.add(&term);
        }
        Some(acc.scale(&inv0).truncate(d))
    }

    /// Text form in variables named by `names`.
    pub fn format(&self, names: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let (neg, abs) = c.split_sign();
            s.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mut factors = Vec::new();
            for (e, n) in [(*a, names[0]), (*b, names[1])] {
                match e {
                    0 => {}
                    1 => factors.push(n.to_string()),
                    _ => factors.push(format!("{n}^{e}")),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if abs != F::one() {
                    s.push_str(&format!("{abs}*"));
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl Poly<Scalar> {
    pub fn complexify(&self) -> Poly<crate::exact_linalg::GScalar> {
        self.map(|c| crate::exact_linalg::GScalar::real(c.clone()))
    }
}
