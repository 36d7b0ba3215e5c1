//! Symmetric tensors on a symplectic vector space with the Poisson bracket.
//!
//! The space `V = R^{2n}` has basis `p1..pn, q1..qn` (indices `0..n` and `n..2n`) with
//! `Omega(p_i, q_i) = -1` and `Omega(q_i, p_i) = 1`. The symmetric algebra carries the bracket
//! `[U, W] = sum_{a,b} Omega(u_a, w_b) (U \ u_a)(W \ w_b)`, taken modulo constants, under which
//! `S^2(V)` is `sp(V)` acting on `S^1(V) = V`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact_linalg::{Field, GScalar, LinalgError, Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("expected a homogeneous tensor of degree {expected}, found {found}")]
    Degree { expected: usize, found: String },
    #[error("matrix is not in sp(2n)")]
    NotSymplectic,
    #[error("matrix has shape {0}x{1}, expected {2}x{2}")]
    MatrixShape(usize, usize, usize),
    #[error("variable {0:?} is not a basis vector of R^{1}")]
    Variable(String, usize),
    #[error("cannot parse tensor {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A monomial in the symmetric algebra: a sorted multiset of basis indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn new(mut idx: Vec<u8>) -> Self {
        idx.sort_unstable();
        Monomial(idx)
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![i as u8])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&x| x as usize == i).count()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Monomial::new(v)
    }

    /// Removes one occurrence of `i`, if present.
    pub fn remove_one(&self, i: usize) -> Option<Monomial> {
        let pos = self.0.iter().position(|&x| x as usize == i)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Monomial(v))
    }

    /// Distinct indices with their multiplicities.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((i, e)) if *i == x as usize => *e += 1,
                _ => out.push((x as usize, 1)),
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A polynomial without constant term in the symmetric algebra `S(V)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymTensor<F: Field> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for SymTensor<F> {
    fn default() -> Self {
        SymTensor { terms: BTreeMap::new() }
    }
}

impl<F: Field> SymTensor<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut t = Self::zero();
        t.add_term(m, c);
        t
    }

    /// Builds a tensor from `(coefficient, indices)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (F, Vec<u8>)>) -> Self {
        let mut t = Self::zero();
        for (c, idx) in terms {
            t.add_term(Monomial::new(idx), c);
        }
        t
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() || m.degree() == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(F::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` for zero or inhomogeneous tensors.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, k: usize) -> Self {
        SymTensor {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.clone();
        for (m, c) in &o.terms {
            t.add_term(m.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        SymTensor { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                t.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        t
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SymTensor<G> {
        let mut t = SymTensor::zero();
        for (m, c) in &self.terms {
            t.add_term(m.clone(), f(c));
        }
        t
    }

    /// Partial derivative with respect to basis variable `i` (constants dropped).
    pub fn partial(&self, i: usize) -> Self {
        let mut t = Self::zero();
        for (m, c) in &self.terms {
            let k = m.multiplicity(i);
            if k > 0 {
                let rest = m.remove_one(i).expect("present");
                t.add_term(rest, c.clone() * F::from_int(k as i64));
            }
        }
        t
    }

    /// Coefficient of the degree-one part on variable `i`.
    pub fn linear_coefficient(&self, i: usize) -> F {
        self.coefficient(&Monomial::var(i))
    }
}

impl SymTensor<Scalar> {
    pub fn complexify(&self) -> SymTensor<GScalar> {
        self.map(|c| GScalar::real(c.clone()))
    }
}

/// The symplectic vector space `R^{2n}` in the basis `p1..pn, q1..qn`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticSpace {
    n: usize,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && 2 * n <= u8::MAX as usize, "unsupported symplectic dimension");
        SymplecticSpace { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `Omega(e_i, e_j)` on basis vectors.
    pub fn omega(&self, i: usize, j: usize) -> i64 {
        let n = self.n;
        if i < n && j == i + n {
            -1
        } else if i >= n && j + n == i {
            1
        } else {
            0
        }
    }

    pub fn omega_matrix(&self) -> Matrix<Scalar> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = Scalar::from_int(self.omega(i, j));
            }
        }
        m
    }

    /// Index of `p_i` (1-based `i`).
    pub fn p(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n);
        i - 1
    }

    /// Index of `q_i` (1-based `i`).
    pub fn q(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n);
        self.n + i - 1
    }

    pub fn label(&self, i: usize) -> String {
        if i < self.n {
            format!("p{}", i + 1)
        } else {
            format!("q{}", i - self.n + 1)
        }
    }

    pub fn var<F: Field>(&self, i: usize) -> SymTensor<F> {
        SymTensor::monomial(Monomial::var(i), F::one())
    }

    /// `Omega(u, w)` for degree-one tensors.
    pub fn omega_form<F: Field>(&self, u: &SymTensor<F>, w: &SymTensor<F>) -> Result<F, WeylError> {
        self.require_degree(u, 1)?;
        self.require_degree(w, 1)?;
        Ok(self.poisson_bracket_full(u, w).1)
    }

    /// Poisson bracket modulo constants.
    pub fn poisson_bracket<F: Field>(&self, a: &SymTensor<F>, b: &SymTensor<F>) -> SymTensor<F> {
        self.poisson_bracket_full(a, b).0
    }

    /// Poisson bracket split into its non-constant part and its constant term.
    pub fn poisson_bracket_full<F: Field>(&self, a: &SymTensor<F>, b: &SymTensor<F>) -> (SymTensor<F>, F) {
        let mut out = SymTensor::zero();
        let mut constant = F::zero();
        for (u, x) in &a.terms {
            for (k, ku) in u.exponents() {
                let l = if k < self.n { k + self.n } else { k - self.n };
                let om = self.omega(k, l);
                for (w, y) in &b.terms {
                    let lw = w.multiplicity(l);
                    if lw == 0 {
                        continue;
                    }
                    let c = x.clone() * y.clone() * F::from_int(om * (ku * lw) as i64);
                    let du = u.remove_one(k).expect("present");
                    let dw = w.remove_one(l).expect("present");
                    let m = du.mul(&dw);
                    if m.degree() == 0 {
                        constant += c;
                    } else {
                        out.add_term(m, c);
                    }
                }
            }
        }
        (out, constant)
    }

    /// Action `uv . w = Omega(u, w) v + Omega(v, w) u` of `S^2(V)` on `V`.
    pub fn quad_action<F: Field>(&self, a: &SymTensor<F>, v: &SymTensor<F>) -> Result<SymTensor<F>, WeylError> {
        self.require_degree_or_zero(a, 2)?;
        self.require_degree_or_zero(v, 1)?;
        Ok(self.poisson_bracket(a, v))
    }

    /// Matrix of `w -> [A, w]` on `V` (columns are images of basis vectors).
    pub fn quad_to_matrix<F: Field>(&self, a: &SymTensor<F>) -> Result<Matrix<F>, WeylError> {
        self.require_degree_or_zero(a, 2)?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for l in 0..d {
            let img = self.poisson_bracket(a, &self.var(l));
            for k in 0..d {
                m[(k, l)] = img.linear_coefficient(k);
            }
        }
        Ok(m)
    }

    pub fn is_symplectic_matrix<F: Field>(&self, m: &Matrix<F>) -> bool {
        let d = self.dim();
        if m.rows() != d || m.cols() != d {
            return false;
        }
        let om = self.omega_matrix().map(|x| F::from_scalar(x.clone()));
        m.transpose().mul(&om).add(&om.mul(m)).is_zero()
    }

    /// Inverse of [`quad_to_matrix`](Self::quad_to_matrix) on `sp(V)`.
    pub fn matrix_to_quad<F: Field>(&self, m: &Matrix<F>) -> Result<SymTensor<F>, WeylError> {
        let d = self.dim();
        if m.rows() != d || m.cols() != d {
            return Err(WeylError::MatrixShape(m.rows(), m.cols(), d));
        }
        if !self.is_symplectic_matrix(m) {
            return Err(WeylError::NotSymplectic);
        }
        let basis = self.sym_basis(2);
        let cols: Vec<Vec<F>> = basis
            .iter()
            .map(|b| self.quad_to_matrix(&SymTensor::monomial(b.clone(), F::one())).map(|x| x.to_vec()))
            .collect::<Result<_, _>>()?;
        let a = Matrix::from_cols(d * d, cols)?;
        let x = a.solve(&m.to_vec()).ok_or(WeylError::NotSymplectic)?;
        Ok(self.from_coords(2, &x))
    }

    /// `dim S^k(V) = C(2n + k - 1, k)`.
    pub fn dim_sym(&self, k: usize) -> usize {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num *= (2 * self.n + i) as u128;
            den *= (i + 1) as u128;
        }
        (num / den) as usize
    }

    /// Monomials of degree `k` in canonical order.
    pub fn sym_basis(&self, k: usize) -> Vec<Monomial> {
        fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
            if cur.len() == k {
                out.push(Monomial(cur.clone()));
                return;
            }
            for i in start..d {
                cur.push(i as u8);
                rec(i, d, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::with_capacity(self.dim_sym(k));
        rec(0, self.dim(), k, &mut Vec::new(), &mut out);
        out
    }

    /// Coordinates of a degree-`k` tensor in the monomial basis of `S^k(V)`.
    pub fn to_coords<F: Field>(&self, t: &SymTensor<F>, k: usize) -> Result<Vec<F>, WeylError> {
        self.require_degree_or_zero(t, k)?;
        Ok(self.sym_basis(k).iter().map(|m| t.coefficient(m)).collect())
    }

    pub fn from_coords<F: Field>(&self, k: usize, v: &[F]) -> SymTensor<F> {
        let mut t = SymTensor::zero();
        for (m, c) in self.sym_basis(k).into_iter().zip(v) {
            t.add_term(m, c.clone());
        }
        t
    }

    /// Span of homogeneous tensors of degree `k` as a subspace of `S^k(V)`.
    pub fn span<F: Field>(&self, k: usize, ts: &[SymTensor<F>]) -> Result<Subspace<F>, WeylError> {
        let vs: Vec<Vec<F>> = ts.iter().map(|t| self.to_coords(t, k)).collect::<Result<_, _>>()?;
        Ok(Subspace::span(self.dim_sym(k), &vs)?)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.exponents()
            .into_iter()
            .map(|(i, e)| if e == 1 { self.label(i) } else { format!("{}^{}", self.label(i), e) })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Text form `c*m + c*m - ...`; accepted back by [`parse`](Self::parse).
    pub fn format<F: Field>(&self, t: &SymTensor<F>) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in t.terms.iter().enumerate() {
            let (neg, abs) = c.split_sign();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if abs != F::one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(&self.format_monomial(m));
        }
        s
    }

    pub fn parse<F: Field>(&self, input: &str) -> Result<SymTensor<F>, WeylError> {
        let err = |reason: &str| WeylError::Parse { input: input.to_string(), reason: reason.to_string() };
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Ok(SymTensor::zero());
        }
        if text.is_empty() {
            return Err(err("empty input"));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for ch in text.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') && !cur.ends_with('^') {
                if !cur.is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                } else if !chunks.is_empty() || neg {
                    return Err(err("dangling sign"));
                }
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if depth != 0 {
            return Err(err("unbalanced parentheses"));
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        chunks.push((neg, cur));

        let mut t = SymTensor::zero();
        for (neg, chunk) in chunks {
            let mut coeff = if neg { -F::one() } else { F::one() };
            let mut idx: Vec<u8> = Vec::new();
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if factor.starts_with('p') || factor.starts_with('q') {
                    let (var, exp) = match factor.split_once('^') {
                        Some((v, e)) => (v, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                        None => (factor, 1),
                    };
                    let i = self.parse_var(var)?;
                    idx.extend(std::iter::repeat_n(i as u8, exp));
                } else {
                    coeff *= F::parse_literal(factor)?;
                }
            }
            if idx.is_empty() {
                return Err(err("constant terms are not allowed"));
            }
            t.add_term(Monomial::new(idx), coeff);
        }
        Ok(t)
    }

    pub fn parse_var(&self, v: &str) -> Result<usize, WeylError> {
        let bad = || WeylError::Variable(v.to_string(), self.dim());
        let (kind, num) = v.split_at(1);
        let i: usize = num.parse().map_err(|_| bad())?;
        if i == 0 || i > self.n {
            return Err(bad());
        }
        match kind {
            "p" => Ok(i - 1),
            "q" => Ok(self.n + i - 1),
            _ => Err(bad()),
        }
    }

    fn require_degree<F: Field>(&self, t: &SymTensor<F>, k: usize) -> Result<(), WeylError> {
        match t.degree() {
            Some(d) if d == k => Ok(()),
            _ => Err(WeylError::Degree { expected: k, found: self.describe_degree(t) }),
        }
    }

    fn require_degree_or_zero<F: Field>(&self, t: &SymTensor<F>, k: usize) -> Result<(), WeylError> {
        if t.is_zero() {
            Ok(())
        } else {
            self.require_degree(t, k)
        }
    }

    fn describe_degree<F: Field>(&self, t: &SymTensor<F>) -> String {
        match t.degree() {
            Some(d) => d.to_string(),
            None if t.is_zero() => "zero".to_string(),
            None => "mixed".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> SymplecticSpace {
        SymplecticSpace::new(2)
    }

    fn t(s: &str) -> SymTensor<Scalar> {
        sp().parse(s).unwrap()
    }

    #[test]
    fn quad_action_values() {
        let s = sp();
        assert_eq!(s.quad_action(&t("q1*p1"), &t("p1")).unwrap(), t("p1"));
        assert_eq!(s.quad_action(&t("q1*p1"), &t("q1")).unwrap(), t("-q1"));
        assert_eq!(s.quad_action(&t("p1*p2"), &t("q1")).unwrap(), t("-p2"));
        assert_eq!(s.quad_action(&t("p1*p2"), &t("q2")).unwrap(), t("-p1"));
        assert_eq!(s.quad_action(&t("p1*q2"), &t("q1")).unwrap(), t("-q2"));
        assert_eq!(s.quad_action(&t("p1*q2"), &t("p2")).unwrap(), t("p1"));
        assert_eq!(s.quad_action(&t("p1^2"), &t("q1")).unwrap(), t("-2*p1"));
        assert!(s.quad_action(&t("p1^3"), &t("q1")).is_err());
    }

    #[test]
    fn bracket_values() {
        let s = sp();
        assert_eq!(s.poisson_bracket(&t("q1*p1"), &t("p1^2")), t("2*p1^2"));
        assert_eq!(s.poisson_bracket(&t("p1"), &t("q1*p1")), t("-p1"));
        assert!(s.poisson_bracket(&t("p1"), &t("q1")).is_zero());
        assert_eq!(s.omega_form(&t("p1"), &t("q1")).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn dims() {
        let s = sp();
        assert_eq!((s.dim_sym(2), s.dim_sym(3), s.dim_sym(4)), (10, 20, 35));
        assert_eq!(s.sym_basis(3).len(), 20);
    }

    #[test]
    fn matrix_roundtrip() {
        let s = sp();
        let a = t("p1*q2 - 1/2*q1^2 + 3*p2^2");
        let m = s.quad_to_matrix(&a).unwrap();
        assert!(s.is_symplectic_matrix(&m));
        assert_eq!(s.matrix_to_quad(&m).unwrap(), a);
        assert_eq!(s.matrix_to_quad(&Matrix::<Scalar>::identity(4)), Err(WeylError::NotSymplectic));
    }

    #[test]
    fn text_roundtrip() {
        let s = sp();
        for src in ["p1^2*q2 - 1/2*p1*q1 + 3*p2", "-q2^3", "0", "2*p1 + (1+i)*q1"] {
            let x: SymTensor<GScalar> = s.parse(src).unwrap();
            assert_eq!(s.parse::<GScalar>(&s.format(&x)).unwrap(), x, "{src}");
        }
        assert!(s.parse::<Scalar>("3").is_err());
        assert!(s.parse::<Scalar>("p3").is_err());
    }
}
