//! Randomized checks of the algebraic invariants.

use proptest::prelude::*;

use sympro::exact_linalg::{q, qi, Matrix, Scalar, Subspace};
use sympro::fedosov::corpus::corpus;
use sympro::fedosov::SymplecticLieAlgebra;
use sympro::prolongation::{
    prolong_chain, prolong_direct, prolong_once, rank_one_witness, LinearSubalgebra, WitnessGrid,
};
use sympro::realizations::cohomology::{bracket_module, ce_h1};
use sympro::realizations::Poly;
use sympro::record::Record;
use sympro::weyl_poisson::{SymTensor, SymplecticSpace};

fn sp() -> SymplecticSpace {
    SymplecticSpace::new(2)
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(a, b)| q(a, b))
}

fn small() -> impl Strategy<Value = Scalar> {
    prop_oneof![3 => Just(qi(0)), 2 => (-2i64..=2).prop_map(qi)]
}

/// Homogeneous tensor of degree `d` in four variables with sparse small coefficients.
fn homogeneous(d: usize) -> impl Strategy<Value = SymTensor<Scalar>> {
    let n = sp().dim_sym(d);
    prop::collection::vec(small(), n).prop_map(move |c| sp().from_coords(d, &c))
}

fn tensor() -> impl Strategy<Value = SymTensor<Scalar>> {
    (1usize..=4).prop_flat_map(homogeneous)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![2 => Just(qi(0)), 3 => rational()], cols), rows)
        .prop_map(move |r| Matrix::from_rows(cols, r).unwrap())
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace<Scalar>> {
    prop::collection::vec(prop::collection::vec(small(), ambient), 0..=ambient)
        .prop_map(move |vs| Subspace::span(ambient, &vs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), m.cols());
        for v in ker {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x == &qi(0)));
        }
    }

    #[test]
    fn echelon_is_idempotent(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let (e, piv) = m.rref();
        let (e2, piv2) = e.rref();
        prop_assert_eq!(e, e2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn grassmann_identity(a in subspace(5), b in subspace(5)) {
        prop_assert_eq!(a.dim() + b.dim(), a.sum(&b).dim() + a.intersection(&b).dim());
        prop_assert!(a.intersection(&b).is_subspace_of(&a));
        prop_assert_eq!(Subspace::span(5, a.basis()).unwrap(), a);
    }

    #[test]
    fn poisson_antisymmetry_and_grading(a in tensor(), b in tensor()) {
        let s = sp();
        let ab = s.poisson_bracket_full(&a, &b);
        let ba = s.poisson_bracket_full(&b, &a);
        prop_assert_eq!(ab.0.clone(), ba.0.scale(&qi(-1)));
        prop_assert_eq!(ab.1, -ba.1);
        if let (Some(i), Some(j)) = (a.degree(), b.degree()) {
            prop_assert!(ab.0.is_zero() || ab.0.degree() == Some(i + j - 2));
        }
    }

    #[test]
    fn poisson_jacobi(a in tensor(), b in tensor(), c in tensor()) {
        let s = sp();
        let br = |x: &SymTensor<Scalar>, y: &SymTensor<Scalar>| s.poisson_bracket(x, y);
        let sum = br(&a, &br(&b, &c)).add(&br(&b, &br(&c, &a))).add(&br(&c, &br(&a, &b)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn quad_to_matrix_is_a_homomorphism(a in homogeneous(2), b in homogeneous(2)) {
        let s = sp();
        let ma = s.quad_to_matrix(&a).unwrap();
        let mb = s.quad_to_matrix(&b).unwrap();
        prop_assert!(s.is_symplectic_matrix(&ma));
        prop_assert_eq!(s.quad_to_matrix(&s.poisson_bracket(&a, &b)).unwrap(), ma.commutator(&mb));
        prop_assert_eq!(s.matrix_to_quad(&ma).unwrap(), a);
    }

    #[test]
    fn quad_action_on_vectors(u in homogeneous(1), v in homogeneous(1), w in homogeneous(1)) {
        // uv . w = Omega(u, w) v + Omega(v, w) u
        prop_assume!(!u.is_zero() && !v.is_zero() && !w.is_zero());
        let s = sp();
        let lhs = s.quad_action(&u.mul(&v), &w).unwrap();
        let rhs = v.scale(&s.omega_form(&u, &w).unwrap()).add(&u.scale(&s.omega_form(&v, &w).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_text_roundtrip(t in tensor()) {
        let s = sp();
        prop_assert_eq!(s.parse::<Scalar>(&s.format(&t)).unwrap(), t);
    }

    #[test]
    fn record_roundtrip(
        kind in "[a-z][a-z0-9-]{0,8}",
        fields in prop::collection::vec(("[a-z_]{1,6}", "[ -~]{0,12}"), 0..5),
    ) {
        let r = fields.iter().fold(Record::new(kind), |r, (k, v)| r.field(k.clone(), v));
        prop_assert_eq!(Record::parse(&r.to_string()), Some(r));
    }

    #[test]
    fn truncated_series_inverse(c in prop::collection::vec(small(), 6)) {
        let mut p = Poly::constant(qi(1));
        for (i, x) in c.iter().enumerate() {
            p.add_term(((i % 3) as u32 + 1, (i / 3) as u32), x.clone());
        }
        let inv = p.inverse_series(5).unwrap();
        prop_assert_eq!(p.mul(&inv).truncate(5), Poly::constant(qi(1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Random subspaces of S^2(V) that happen to be subalgebras: spans of random basis monomials
    /// closed up under brackets.
    #[test]
    fn chain_matches_direct_and_vanishing_propagates(mask in 1u16..(1 << 10)) {
        let s = sp();
        let basis = s.sym_basis(2);
        let mut gens: Vec<SymTensor<Scalar>> =
            (0..10).filter(|i| mask & (1 << i) != 0).map(|i| SymTensor::monomial(basis[i].clone(), qi(1))).collect();
        // close under brackets
        loop {
            let span = s.span(2, &gens).unwrap();
            let extra = gens.iter().flat_map(|a| gens.iter().map(|b| s.poisson_bracket(a, b)))
                .find(|c| !c.is_zero() && !span.contains(&s.to_coords(c, 2).unwrap()));
            match extra {
                Some(c) => gens.push(c),
                None => break,
            }
        }
        let h = LinearSubalgebra::new(s, &gens).unwrap();
        let chain = prolong_chain(&h, 3);
        for k in 1..=3 {
            prop_assert_eq!(chain.level(k).unwrap(), &prolong_direct(&h, k));
            if chain.levels[k - 1].is_zero() {
                prop_assert!(chain.levels[k].is_zero());
            }
        }
        if let Some(w) = rank_one_witness(&h, &WitnessGrid::default()) {
            prop_assert_eq!(s.quad_to_matrix(&w).unwrap().rank(), 1);
        }
    }

    #[test]
    fn prolongation_is_monotone(a in subspace(10), b in subspace(10)) {
        let s = sp();
        let big = a.sum(&b);
        let (mut x, mut y) = (a, big);
        for d in 3..=4 {
            x = prolong_once(&s, &x, d);
            y = prolong_once(&s, &y, d);
            prop_assert!(x.is_subspace_of(&y));
        }
    }

    #[test]
    fn trivial_module_cohomology_is_abelianization(mask in 1u8..(1 << 3)) {
        // subalgebras of sl(W) spanned by monomials, acting trivially on R p1^2
        let s = sp();
        let pool = ["p2^2", "p2*q2", "q2^2"];
        let alg: Vec<SymTensor<Scalar>> =
            (0..3).filter(|i| mask & (1 << i) != 0).map(|i| s.parse(pool[i]).unwrap()).collect();
        prop_assume!(LinearSubalgebra::new(s, &alg).is_ok());
        let (g, rho) = bracket_module(&s, &alg, &[s.parse("p1^2").unwrap()]).unwrap();
        let derived = g.bracket_spaces(&Subspace::full(g.dim()), &Subspace::full(g.dim()));
        prop_assert_eq!(ce_h1(&g, &rho).unwrap().dim, g.dim() - derived.dim());
    }
}

#[test]
fn algebra_text_roundtrip_on_corpus() {
    for a in corpus() {
        assert_eq!(SymplecticLieAlgebra::parse(&a.to_text()).unwrap(), a);
    }
}
