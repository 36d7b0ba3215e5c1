use sympro::exact_linalg::{qi, Scalar};
use sympro::realizations::cohomology::{bracket_module, ce_h1, nonsplit_check};
use sympro::realizations::families::{build_k1, build_k2, K1Base, K2Base, XiSpec};
use sympro::realizations::{P2Element, Poly};
use sympro::weyl_poisson::{SymTensor, SymplecticSpace};

fn s() -> SymplecticSpace {
    SymplecticSpace::new(2)
}

fn ts(xs: &[&str]) -> Vec<SymTensor<Scalar>> {
    xs.iter().map(|x| s().parse(x).unwrap()).collect()
}

fn h1(alg: &[&str], module: &[&str]) -> (usize, Vec<Vec<Scalar>>) {
    let (g, rho) = bracket_module(&s(), &ts(alg), &ts(module)).unwrap();
    let r = ce_h1(&g, &rho).unwrap();
    (r.dim, r.representatives)
}

#[test]
fn ce_h1_with_values_in_p1_squared() {
    let m = ["p1^2"];
    assert_eq!(h1(&["p2^2"], &m).0, 1);
    assert_eq!(h1(&["p2*q2"], &m).0, 1);
    let (d, reps) = h1(&["p2^2", "p2*q2"], &m);
    assert_eq!(d, 1);
    // c(p2^2) = 0, c(p2 q2) = p1^2 up to scale
    assert!(reps[0][0] == qi(0) && reps[0][1] != qi(0));
}

#[test]
fn ce_h1_with_values_in_p1_w() {
    let m = ["p1*p2", "p1*q2"];
    let (d, reps) = h1(&["p2^2"], &m);
    assert_eq!(d, 1);
    // the class is represented by c(p2^2) = p1 q2
    assert_eq!(reps[0][0], qi(0));
    assert_ne!(reps[0][1], qi(0));
    for alg in [&["p2^2", "p2*q2", "q2^2"][..], &["p2*q2"], &["p2^2 + q2^2"], &["p2^2", "p2*q2"]] {
        assert_eq!(h1(alg, &m).0, 0, "{alg:?}");
    }
}

#[test]
fn trivial_module_matches_abelianization() {
    // H^1 with trivial coefficients is Hom(g/[g,g], M)
    for (alg, ab) in [(&["p2^2", "p2*q2"][..], 1), (&["p2^2", "p2*q2", "q2^2"], 0), (&["p2^2", "p1^2"], 2)] {
        assert_eq!(h1(alg, &["p1^2"]).0, ab, "{alg:?}");
    }
}

#[test]
fn representation_is_checked() {
    use sympro::exact_linalg::Matrix;
    use sympro::lie::StructureConstants;
    let mut g = StructureConstants::abelian(2);
    g.set(0, 1, vec![qi(0), qi(1)]).unwrap();
    let rho = vec![Matrix::identity(1), Matrix::identity(1)];
    assert!(ce_h1(&g, &rho).is_err());
}

#[test]
fn nonsplit_examples() {
    let sp = s();
    let x = nonsplit_check(&sp, &ts(&["p2^2"]), &ts(&["p1*q2"]), &[SymTensor::zero()]).unwrap();
    assert!(x.closed);
    let hb = ts(&["p2^2", "p2*q2"]);
    let zero = vec![SymTensor::zero(), SymTensor::zero()];
    assert!(nonsplit_check(&sp, &hb, &zero, &zero).unwrap().closed);
    let psi = vec![sp.parse("p1^2").unwrap(), SymTensor::zero()];
    let bad = nonsplit_check(&sp, &hb, &zero, &psi).unwrap();
    assert!(!bad.closed);
    assert_eq!(bad.psi_violation, Some((0, 1)));
    assert_eq!(bad.cocycle_violation, None);
}

#[test]
fn p2_bracket_examples() {
    let a = P2Element::from_tensor(1, &s().parse("p2").unwrap());
    let b = P2Element::from_tensor(1, &s().parse("q2").unwrap());
    assert_eq!(a.lie_bracket(&b), P2Element::function(Poly::monomial((2, 0), qi(-1))));
    let dy = P2Element::vector_field(Poly::constant(qi(1)));
    assert_eq!(dy.lie_bracket(&P2Element::y_power(2)), P2Element::function(Poly::monomial((1, 0), qi(2))));
}

#[test]
fn k1_frozen_dimensions() {
    // (base, k, N) -> (dim, stability, isotropy, kernel nonzero), counted by hand from the decomposition
    let cases = [
        (K1Base::Sphere, 2, 0, 7, 3, 3, false),
        (K1Base::Hyperbolic, 1, 0, 6, 2, 2, false),
        (K1Base::Sphere, 3, 0, 8, 4, 3, true),
        (K1Base::Sl2Aff, 2, 1, 11, 7, 7, false),
        (K1Base::Euclid, 1, 0, 6, 2, 2, false),
        (K1Base::Euclid, 3, 1, 10, 6, 5, true),
    ];
    for (b, k, n, dim, st, iso, ker) in cases {
        let r = build_k1(b, k, n).unwrap();
        let f = &r.filtration;
        assert_eq!(
            (f.dim, f.stability_dim, f.isotropy_dim, f.isotropy_kernel_dim > 0),
            (dim, st, iso, ker),
            "{b} {k} {n}"
        );
        assert!(r.jacobi_failures.is_empty());
        assert!(r.algebra.structure().is_lie());
    }
}

#[test]
fn k2_frozen_dimensions() {
    let conf = build_k2(K2Base::Conf, "W(1,1)+W(1,-1)".parse().unwrap()).unwrap();
    assert_eq!((conf.filtration.dim, conf.filtration.stability_dim), (6, 2));
    let a = build_k2(K2Base::Sl2Aff2, XiSpec::Polynomial(1)).unwrap();
    assert_eq!((a.filtration.dim, a.filtration.stability_dim), (7, 3));
    let g = build_k2(K2Base::Gl2Aff2, XiSpec::Polynomial(2)).unwrap();
    assert_eq!((g.filtration.dim, g.filtration.stability_dim, g.filtration.isotropy_dim), (11, 7, 7));
    assert!(build_k2(K2Base::Conf, "W(1,1)".parse().unwrap()).is_err());
    assert!(build_k2(K2Base::Sl2Aff2, "W(2,2)+W(2,-2)".parse().unwrap()).is_err());
}
