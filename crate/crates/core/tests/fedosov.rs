use sympro::exact_linalg::{q, qi, Scalar};
use sympro::fedosov::corpus::{build, corpus};
use sympro::fedosov::lsa::{check_left_symmetric, lsa_from_symplectic, Product};
use sympro::fedosov::{fedosov_report, nomizu, SymplecticLieAlgebra};

fn aff() -> SymplecticLieAlgebra {
    build("aff", 2, &[(1, 2, &[(1, 2)])], &[(1, 2, 1)])
}

#[test]
fn corpus_passes_every_check() {
    let all = corpus();
    assert!(all.len() >= 8);
    let nilpotent = all.iter().filter(|a| a.g.is_nilpotent() && (4..=6).contains(&a.dim())).count();
    assert!(nilpotent >= 5);
    for a in &all {
        let r = fedosov_report(a).unwrap();
        assert!(r.passed(), "{}: {:?}", a.name, r.failures());
        if r.nilpotent {
            assert!(r.ricci.is_zero() && r.kappa.is_zero(), "{}", a.name);
        }
    }
}

#[test]
fn symplectic_check_examples() {
    let good = build("h", 4, &[(1, 2, &[(1, 3)])], &[(1, 3, 1), (2, 4, 1)]);
    assert!(good.check().is_valid());
    let bad = build("h", 4, &[(1, 2, &[(1, 3)])], &[(1, 2, 1), (3, 4, 1)]);
    let v = bad.check();
    assert!(!v.is_valid());
    assert_eq!(v.cocycle_failures, vec![(0, 1, 3)]);
    assert!(lsa_from_symplectic(&bad).is_err());
}

/// Product, connection and curvature for aff(R) written out by hand.
#[test]
fn aff_against_hand_computation() {
    let a = aff();
    let p = lsa_from_symplectic(&a).unwrap();
    let z = qi(0);
    // e1e1 = -e1, e1e2 = 0, e2e1 = -e2, e2e2 = 0
    assert_eq!(p.table[0][0], vec![qi(-1), z.clone()]);
    assert_eq!(p.table[0][1], vec![z.clone(), z.clone()]);
    assert_eq!(p.table[1][0], vec![z.clone(), qi(-1)]);
    assert_eq!(p.table[1][1], vec![z.clone(), z.clone()]);
    let r = fedosov_report(&a).unwrap();
    assert_eq!(r.ricci[(0, 0)], q(2, 9));
    assert_eq!(r.kappa[(0, 0)], qi(1));
    assert!(r.solvable && !r.nilpotent);

    // Independent oracle: nabla_x y = 2/3 xy - 1/3 yx on the table above, then
    // ric(e1, e1) = sum_k [R(e1, e_k) e1]_k with R(x,y) = [nabla_x, nabla_y] - nabla_[x,y].
    let mul = |x: [Scalar; 2], y: [Scalar; 2]| -> [Scalar; 2] {
        // only e1e1 = -e1 and e2e1 = -e2 are nonzero
        [-(&x[0] * &y[0]), -(&x[1] * &y[0])]
    };
    let nab = |x: [Scalar; 2], y: [Scalar; 2]| -> [Scalar; 2] {
        let a = mul(x.clone(), y.clone());
        let b = mul(y, x);
        [q(2, 3) * &a[0] - q(1, 3) * &b[0], q(2, 3) * &a[1] - q(1, 3) * &b[1]]
    };
    let e1 = [qi(1), qi(0)];
    let e2 = [qi(0), qi(1)];
    let br = |x: &[Scalar; 2], y: &[Scalar; 2]| [qi(0), &x[0] * &y[1] - &x[1] * &y[0]];
    let curv = |x: [Scalar; 2], y: [Scalar; 2], w: [Scalar; 2]| -> [Scalar; 2] {
        let a = nab(x.clone(), nab(y.clone(), w.clone()));
        let b = nab(y.clone(), nab(x.clone(), w.clone()));
        let c = nab(br(&x, &y), w);
        [&a[0] - &b[0] - &c[0], &a[1] - &b[1] - &c[1]]
    };
    let ric11 = curv(e1.clone(), e1.clone(), e1.clone())[0].clone() + curv(e1.clone(), e2, e1)[1].clone();
    assert_eq!(ric11, q(2, 9));
    // tr R_{e1} = -2 = 2 tr L_{e1}
    assert_eq!(p.right(&[qi(1), qi(0)]).trace(), qi(-2));
    assert_eq!(p.left(&[qi(1), qi(0)]).trace(), qi(-1));
}

#[test]
fn perturbed_product_fails() {
    let a = aff();
    let mut p: Product = lsa_from_symplectic(&a).unwrap();
    assert!(check_left_symmetric(&p, &a).passed());
    p.table[1][1][0] = qi(1);
    let v = check_left_symmetric(&p, &a);
    assert!(v.left_symmetry_failures.contains(&(0, 1, 1)));
    assert!(v.compatibility_failures.is_empty());
}

#[test]
fn commutative_case_of_connection() {
    // abelian algebra: product zero, connection zero, curvature zero
    let a = build("ab", 4, &[], &[(1, 3, 1), (2, 4, 1)]);
    let r = fedosov_report(&a).unwrap();
    assert!(r.product.is_zero() && r.connection.is_zero());
    assert!(r.curvature.iter().flatten().all(|m| m.is_zero()));
}

#[test]
fn heis_lsa_is_nilpotent() {
    let a = build("h", 4, &[(1, 2, &[(1, 3)])], &[(1, 3, 1), (2, 4, 1)]);
    let p = lsa_from_symplectic(&a).unwrap();
    for i in 0..4 {
        let mut e = vec![qi(0); 4];
        e[i] = qi(1);
        let l = p.left(&e);
        let l4 = l.mul(&l).mul(&l).mul(&l);
        assert!(l4.is_zero());
    }
}

#[test]
fn algebra_text_roundtrip() {
    for a in corpus() {
        assert_eq!(SymplecticLieAlgebra::parse(&a.to_text()).unwrap(), a);
    }
}

#[test]
fn nomizu_uniqueness() {
    let sp = nomizu::NomizuData::flat("sp4", nomizu::sp4_matrices(), 4);
    assert_eq!(nomizu::nomizu_solutions(&sp, false).unwrap().homogeneous_dim, 20);
    let sym = nomizu::u2_symmetric_space().unwrap();
    let s = nomizu::nomizu_solutions(&sym, true).unwrap();
    assert_eq!(s.count(), Some(1));
    assert!(s.particular.unwrap().iter().flatten().all(|x| x == &qi(0)));
}
