//! Finite-dimensional transitive algebras in the two abstract models.
//!
//! `K1` algebras live in the model of the full prolongation of `p2`:
//! `aff(R) + gbar + P^k_+`, or `aff(R) + (s + P^N (x) n) + P^k_+` for the affine bases.
//! `K2` algebras live in the model of the full prolongation of `p1`: `gtilde + xi` with `xi`
//! a space of polynomials on the plane.

use std::fmt;
use std::str::FromStr;

use num::One;

use super::algebra::{FieldAlgebra, FiltrationReport};
use super::p1model::P1Element;
use super::p2model::P2Element;
use super::plane::{euler, rotation, PlaneVF};
use super::series::Poly;
use super::triangle::{invariance_failure, TriangleModule};
use super::RealizationError;
use crate::exact_linalg::{parse_rational, q, Scalar};
use crate::weyl_poisson::{SymTensor, SymplecticSpace};

/// Primitive symplectic plane algebras used as `K1` bases.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum K1Base {
    Hyperbolic,
    Sphere,
    Sl2Aff,
    Euclid,
}

impl K1Base {
    pub const ALL: [K1Base; 4] = [K1Base::Hyperbolic, K1Base::Sphere, K1Base::Sl2Aff, K1Base::Euclid];

    pub fn name(self) -> &'static str {
        match self {
            K1Base::Hyperbolic => "hyperbolic",
            K1Base::Sphere => "sphere",
            K1Base::Sl2Aff => "sl2aff",
            K1Base::Euclid => "euclid",
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, K1Base::Sl2Aff | K1Base::Euclid)
    }

    /// Density `rho` of the preserved area form `rho dx dy`, truncated at degree `d`.
    pub fn area_density(self, d: u32) -> Poly<Scalar> {
        let r2 = Poly::monomial((2, 0), Scalar::one()).add(&Poly::monomial((0, 2), Scalar::one()));
        let base = match self {
            K1Base::Sphere => Poly::constant(Scalar::one()).add(&r2),
            K1Base::Hyperbolic => Poly::constant(Scalar::one()).sub(&r2),
            _ => return Poly::constant(Scalar::one()),
        };
        let inv = base.inverse_series(d).expect("unit constant term");
        inv.mul(&inv).truncate(d)
    }
}

impl fmt::Display for K1Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for K1Base {
    type Err = RealizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        K1Base::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| RealizationError::UnknownBase(s.to_string()))
    }
}

fn vf(terms: &[(i64, (u32, u32), usize)]) -> PlaneVF {
    let t: Vec<_> = terms.iter().map(|(c, e, i)| (Scalar::from_integer((*c).into()), *e, *i)).collect();
    PlaneVF::from_terms(&t)
}

fn ham(s: &str) -> SymTensor<Scalar> {
    SymplecticSpace::new(2).parse(s).expect("valid tensor")
}

fn plane_ham(s: &str) -> PlaneVF {
    let space = SymplecticSpace::new(2);
    PlaneVF::from_hamiltonian(&space, &ham(s), [space.p(2), space.q(2)])
}

/// Labelled plane fields.
pub type NamedFields = Vec<(String, PlaneVF)>;

/// Plane realization of a `K1` base as `(semisimple or full part, translation part)`.
///
/// The hyperbolic and sphere algebras are the isometries of the Poincare disc and the round
/// sphere in stereographic coordinates; they have no separate translation part.
pub fn k1_plane_fields(base: K1Base) -> (NamedFields, NamedFields) {
    let named = |v: Vec<(&str, PlaneVF)>| v.into_iter().map(|(n, x)| (n.to_string(), x)).collect::<Vec<_>>();
    match base {
        K1Base::Hyperbolic => (
            named(vec![
                ("X1", vf(&[(1, (0, 0), 0), (-1, (2, 0), 0), (1, (0, 2), 0), (-2, (1, 1), 1)])),
                ("X2", vf(&[(-2, (1, 1), 0), (1, (0, 0), 1), (1, (2, 0), 1), (-1, (0, 2), 1)])),
                ("J", rotation()),
            ]),
            vec![],
        ),
        K1Base::Sphere => (
            named(vec![
                ("X1", vf(&[(1, (0, 0), 0), (1, (2, 0), 0), (-1, (0, 2), 0), (2, (1, 1), 1)])),
                ("X2", vf(&[(2, (1, 1), 0), (1, (0, 0), 1), (-1, (2, 0), 1), (1, (0, 2), 1)])),
                ("J", rotation()),
            ]),
            vec![],
        ),
        K1Base::Sl2Aff => (
            named(vec![("p2^2", plane_ham("p2^2")), ("p2*q2", plane_ham("p2*q2")), ("q2^2", plane_ham("q2^2"))]),
            named(vec![("p2", plane_ham("p2")), ("q2", plane_ham("q2"))]),
        ),
        K1Base::Euclid => (
            named(vec![("p2^2+q2^2", plane_ham("p2^2 + q2^2"))]),
            named(vec![("p2", plane_ham("p2")), ("q2", plane_ham("q2"))]),
        ),
    }
}

/// Dimensions predicted by the structure of a `K1` algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KExpected {
    pub dim: usize,
    pub stability_dim: usize,
    pub isotropy_dim: usize,
    pub isotropy_kernel_nonzero: bool,
}

#[derive(Clone, Debug)]
pub struct K1Realization {
    pub base: K1Base,
    pub k: u32,
    pub n: u32,
    pub algebra: FieldAlgebra<P2Element>,
    pub filtration: FiltrationReport,
    pub expected: KExpected,
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    /// The quotient by the canonical ideal is the chosen primitive plane algebra, acting transitively.
    pub base_ok: bool,
    /// Every plane field preserves the base's area form up to the truncation degree (advisory for
    /// the hyperbolic and sphere bases).
    pub area_preserved: bool,
    pub truncation: u32,
}

impl K1Realization {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let f = &self.filtration;
        let e = &self.expected;
        if !self.jacobi_failures.is_empty() {
            out.push(format!("jacobi fails on {:?}", self.jacobi_failures));
        }
        if f.dim != e.dim {
            out.push(format!("dim {} expected {}", f.dim, e.dim));
        }
        if !f.transitive {
            out.push("not transitive".into());
        }
        if f.stability_dim != e.stability_dim {
            out.push(format!("stability dim {} expected {}", f.stability_dim, e.stability_dim));
        }
        if f.isotropy_dim != e.isotropy_dim {
            out.push(format!("isotropy dim {} expected {}", f.isotropy_dim, e.isotropy_dim));
        }
        if (f.isotropy_kernel_dim > 0) != e.isotropy_kernel_nonzero {
            out.push(format!("isotropy kernel dim {}", f.isotropy_kernel_dim));
        }
        if !self.base_ok {
            out.push("base algebra mismatch".into());
        }
        if !self.area_preserved && self.base.is_affine() {
            out.push("area form not preserved".into());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Default truncation degree for series checks.
pub fn default_truncation(k: u32) -> u32 {
    (2 * k + 2).max(8)
}

fn y_poly(m: u32) -> Poly<Scalar> {
    Poly::monomial((m, 0), Scalar::one())
}

/// Builds `aff(R) + gbar + P^k_+` (`n = 0`) or `aff(R) + (s + P^n (x) n) + P^k_+`.
pub fn build_k1(base: K1Base, k: u32, n: u32) -> Result<K1Realization, RealizationError> {
    build_k1_truncated(base, k, n, default_truncation(k))
}

/// As [`build_k1`], with the area-form check carried out to degree `truncation`.
pub fn build_k1_truncated(base: K1Base, k: u32, n: u32, truncation: u32) -> Result<K1Realization, RealizationError> {
    let bad =
        |name: &str, reason: &str| RealizationError::InvalidParameter { name: name.into(), reason: reason.into() };
    if k < 1 {
        return Err(bad("k", "need k >= 1"));
    }
    if truncation < 1 {
        return Err(bad("truncation", "need a positive degree"));
    }
    if !base.is_affine() && n > 0 {
        return Err(bad("N", "only the affine bases take N > 0"));
    }
    if 2 * n > k {
        return Err(bad("N", "need 2N <= k"));
    }
    let (semi, trans) = k1_plane_fields(base);
    let mut labels = vec!["d/dy".to_string(), "y*d/dy".to_string()];
    let mut basis = vec![P2Element::vector_field(y_poly(0)), P2Element::vector_field(y_poly(1))];
    for (name, x) in &semi {
        labels.push(format!("[{name}]"));
        basis.push(P2Element::plane(0, x.clone()));
    }
    for i in 0..=n {
        for (name, x) in &trans {
            labels.push(if i == 0 { format!("[{name}]") } else { format!("y^{i}*[{name}]") });
            basis.push(P2Element::plane(i, x.clone()));
        }
    }
    for m in 1..=k {
        labels.push(format!("xi(y^{m})"));
        basis.push(P2Element::y_power(m));
    }
    let algebra = FieldAlgebra::new(labels, basis)?;
    let filtration = algebra.order_filtration();
    let jacobi_failures = algebra.jacobi_failures_direct();

    let plane_fields: Vec<PlaneVF> = semi.iter().chain(&trans).map(|(_, x)| x.clone()).collect();
    let plane_labels: Vec<String> = semi.iter().chain(&trans).map(|(l, _)| l.clone()).collect();
    let base_ok =
        FieldAlgebra::new(plane_labels, plane_fields.clone()).map(|a| a.order_filtration().transitive).unwrap_or(false);
    let rho = base.area_density(truncation);
    let area_preserved = plane_fields.iter().all(|x| x.weighted_divergence(&rho, truncation).is_zero());

    let kbar = match base {
        K1Base::Sl2Aff => 3,
        _ => 1,
    };
    let dim_n = trans.len();
    let (k, n_us) = (k as usize, n as usize);
    let expected = KExpected {
        dim: 2 + semi.len() + (n_us + 1) * dim_n + k,
        stability_dim: 1 + kbar + (k - 1) + n_us * dim_n,
        isotropy_dim: 1 + kbar + usize::from(k >= 2) + if n >= 1 { dim_n } else { 0 },
        isotropy_kernel_nonzero: k > 2 || n >= 2,
    };
    Ok(K1Realization {
        base,
        k: k as u32,
        n,
        algebra,
        filtration,
        expected,
        jacobi_failures,
        base_ok,
        area_preserved,
        truncation,
    })
}

/// Transitive affine-type plane algebras used as `K2` bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum K2Base {
    Sl2Aff2,
    Gl2Aff2,
    Conf,
    /// `span(d/dx, d/dy, alpha E - J)`.
    Euc(Scalar),
}

impl K2Base {
    pub fn name(&self) -> String {
        match self {
            K2Base::Sl2Aff2 => "sl2aff2".into(),
            K2Base::Gl2Aff2 => "gl2aff2".into(),
            K2Base::Conf => "conf".into(),
            K2Base::Euc(a) => format!("euc:{a}"),
        }
    }

    /// Named plane fields; the translations come first.
    pub fn fields(&self) -> Vec<(String, PlaneVF)> {
        let mut out =
            vec![("d/dx".to_string(), PlaneVF::translation(0)), ("d/dy".to_string(), PlaneVF::translation(1))];
        let lin = |name: &str, x: PlaneVF| (name.to_string(), x);
        match self {
            K2Base::Sl2Aff2 => {
                out.push(lin("x*d/dy", vf(&[(1, (1, 0), 1)])));
                out.push(lin("y*d/dx", vf(&[(1, (0, 1), 0)])));
                out.push(lin("x*d/dx-y*d/dy", vf(&[(1, (1, 0), 0), (-1, (0, 1), 1)])));
            }
            K2Base::Gl2Aff2 => {
                out.push(lin("x*d/dx", vf(&[(1, (1, 0), 0)])));
                out.push(lin("x*d/dy", vf(&[(1, (1, 0), 1)])));
                out.push(lin("y*d/dx", vf(&[(1, (0, 1), 0)])));
                out.push(lin("y*d/dy", vf(&[(1, (0, 1), 1)])));
            }
            K2Base::Conf => {
                out.push(lin("E", euler()));
                out.push(lin("J", rotation()));
            }
            K2Base::Euc(a) => {
                out.push((format!("{a}*E-J"), euler().scale(a).add(&rotation().scale(&-Scalar::one()))));
            }
        }
        out
    }
}

impl fmt::Display for K2Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for K2Base {
    type Err = RealizationError;

    /// Accepts `sl2aff2`, `gl2aff2`, `conf` and `euc:ALPHA` (also `euc_ALPHA`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sl2aff2" => Ok(K2Base::Sl2Aff2),
            "gl2aff2" => Ok(K2Base::Gl2Aff2),
            "conf" => Ok(K2Base::Conf),
            _ => {
                let alpha = s
                    .strip_prefix("euc:")
                    .or_else(|| s.strip_prefix("euc_"))
                    .ok_or_else(|| RealizationError::UnknownBase(s.to_string()))?;
                parse_rational(alpha).map(K2Base::Euc).map_err(|_| RealizationError::InvalidParameter {
                    name: "alpha".into(),
                    reason: format!("not a rational: {alpha}"),
                })
            }
        }
    }
}

/// Specification of the function part `xi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum XiSpec {
    /// All monomials of degree `1..=k`.
    Polynomial(u32),
    /// Real form of a union of triangle modules given by their tops `(k, l)`.
    Triangles(Vec<(i64, i64)>),
}

impl FromStr for XiSpec {
    type Err = RealizationError;

    /// `P3` for polynomials up to degree 3; `W(1,1)+W(1,-1)` for triangle tops.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RealizationError::InvalidParameter { name: "xi".into(), reason: format!("cannot parse {s:?}") };
        if let Some(k) = s.strip_prefix('P') {
            return k.parse().map(XiSpec::Polynomial).map_err(|_| bad());
        }
        let mut tops = Vec::new();
        for part in s.split('+') {
            let inner = part.trim().strip_prefix("W(").and_then(|p| p.strip_suffix(')')).ok_or_else(bad)?;
            let (k, l) = inner.split_once(',').ok_or_else(bad)?;
            tops.push((k.trim().parse().map_err(|_| bad())?, l.trim().parse().map_err(|_| bad())?));
        }
        Ok(XiSpec::Triangles(tops))
    }
}

impl fmt::Display for XiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XiSpec::Polynomial(k) => write!(f, "P{k}"),
            XiSpec::Triangles(t) => {
                let parts: Vec<String> = t.iter().map(|(k, l)| format!("W({k},{l})")).collect();
                f.write_str(&parts.join("+"))
            }
        }
    }
}

/// Named basis of `xi`.
pub fn xi_basis(spec: &XiSpec) -> Result<Vec<(String, Poly<Scalar>)>, RealizationError> {
    match spec {
        XiSpec::Polynomial(k) => {
            if *k < 1 {
                return Err(RealizationError::InvalidParameter {
                    name: "xi".into(),
                    reason: "need degree >= 1".into(),
                });
            }
            let mut out = Vec::new();
            for d in 1..=*k {
                for a in (0..=d).rev() {
                    let p = Poly::monomial((a, d - a), Scalar::one());
                    out.push((p.format(["x", "y"]), p));
                }
            }
            Ok(out)
        }
        XiSpec::Triangles(tops) => Ok(TriangleModule::new(tops)?.real_basis()),
    }
}

#[derive(Clone, Debug)]
pub struct K2Realization {
    pub base: K2Base,
    pub xi: XiSpec,
    pub algebra: FieldAlgebra<P1Element>,
    pub filtration: FiltrationReport,
    pub expected: KExpected,
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    /// For triangle specs: `E` and `J` act on every node with the predicted eigenvalues.
    pub eigenvalues_ok: bool,
}

impl K2Realization {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (f, e) = (&self.filtration, &self.expected);
        if !self.jacobi_failures.is_empty() {
            out.push(format!("jacobi fails on {:?}", self.jacobi_failures));
        }
        if f.dim != e.dim {
            out.push(format!("dim {} expected {}", f.dim, e.dim));
        }
        if !f.transitive {
            out.push("not transitive".into());
        }
        if f.stability_dim != e.stability_dim {
            out.push(format!("stability dim {} expected {}", f.stability_dim, e.stability_dim));
        }
        if f.isotropy_dim != e.isotropy_dim {
            out.push(format!("isotropy dim {} expected {}", f.isotropy_dim, e.isotropy_dim));
        }
        if !self.eigenvalues_ok {
            out.push("triangle eigenvalues wrong".into());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Builds `gtilde + xi` after checking that `xi` is invariant modulo constants.
pub fn build_k2(base: K2Base, xi: XiSpec) -> Result<K2Realization, RealizationError> {
    let fields = base.fields();
    let funcs = xi_basis(&xi)?;
    let plain: Vec<PlaneVF> = fields.iter().map(|(_, x)| x.clone()).collect();
    let polys: Vec<Poly<Scalar>> = funcs.iter().map(|(_, p)| p.clone()).collect();
    if let Some((a, b)) = invariance_failure(&plain, &polys) {
        return Err(RealizationError::NotInvariant(format!("{} applied to {}", fields[a].0, funcs[b].0)));
    }
    let eigenvalues_ok = match &xi {
        XiSpec::Triangles(t) => TriangleModule::new(t)?.eigenvalue_failure().is_none(),
        XiSpec::Polynomial(_) => true,
    };
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for (name, x) in fields.iter() {
        labels.push(name.clone());
        basis.push(P1Element::field(x.clone()));
    }
    for (name, p) in &funcs {
        labels.push(format!("xi({name})"));
        basis.push(P1Element::function(p.clone()));
    }
    let algebra = FieldAlgebra::new(labels, basis)?;
    let filtration = algebra.order_filtration();
    let jacobi_failures = algebra.jacobi_failures_direct();
    let ktilde = fields.len() - 2;
    let deg = |d: u32| polys.iter().filter(|p| p.degree() == Some(d)).count();
    let high = polys.iter().filter(|p| p.degree().is_some_and(|d| d >= 2)).count();
    let expected = KExpected {
        dim: fields.len() + polys.len(),
        stability_dim: ktilde + high,
        isotropy_dim: ktilde + deg(2),
        isotropy_kernel_nonzero: polys.iter().any(|p| p.degree().is_some_and(|d| d >= 3)),
    };
    Ok(K2Realization { base, xi, algebra, filtration, expected, jacobi_failures, eigenvalues_ok })
}

/// Representative parameter value for `euc_alpha`.
pub fn default_alpha() -> Scalar {
    q(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = build_k1(K1Base::Sphere, 2, 0).unwrap();
        assert_eq!((s.filtration.dim, s.filtration.stability_dim), (7, 3));
        let a = build_k1(K1Base::Sl2Aff, 2, 1).unwrap();
        assert_eq!(a.filtration.dim, 11);
        let h = build_k1(K1Base::Hyperbolic, 1, 0).unwrap();
        assert_eq!(h.filtration.isotropy_dim, 2);
        let c = build_k2(K2Base::Conf, "W(1,1)+W(1,-1)".parse().unwrap()).unwrap();
        assert_eq!(c.filtration.dim, 6);
        let u = build_k2(K2Base::Sl2Aff2, XiSpec::Polynomial(1)).unwrap();
        assert_eq!(u.filtration.dim, 7);
        assert!(build_k2(K2Base::Conf, "W(2,2)".parse().unwrap()).is_err());
        assert!(build_k1(K1Base::Sphere, 2, 1).is_err());
        assert!(build_k1(K1Base::Euclid, 1, 1).is_err());
    }

    #[test]
    fn hyperbolic_and_sphere_preserve_their_area_forms() {
        for b in [K1Base::Hyperbolic, K1Base::Sphere] {
            assert!(build_k1(b, 1, 0).unwrap().area_preserved, "{b}");
        }
    }
}

#[cfg(test)]
mod sweep {
    use super::*;

    #[test]
    fn all_small_cases_pass() {
        for b in K1Base::ALL {
            for k in 1..=3 {
                for n in 0..=1 {
                    if let Ok(r) = build_k1(b, k, n) {
                        assert!(r.passed(), "{b} k={k} N={n}: {:?} {:?}", r.failures(), r.filtration);
                    }
                }
            }
        }
        for b in [K2Base::Sl2Aff2, K2Base::Gl2Aff2, K2Base::Conf, K2Base::Euc(default_alpha())] {
            for k in 1..=3 {
                let r = build_k2(b.clone(), XiSpec::Polynomial(k)).unwrap();
                assert!(r.passed(), "{b} P{k}: {:?}", r.failures());
            }
        }
        for b in [K2Base::Conf, K2Base::Euc(default_alpha())] {
            let r = build_k2(b.clone(), "W(3,1)+W(3,-1)+W(2,0)".parse().unwrap()).unwrap();
            assert!(r.passed(), "{b}: {:?}", r.failures());
        }
    }
}
