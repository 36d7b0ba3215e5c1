//! Left-symmetric product, connection, curvature, Ricci tensor and trace identities.

use num::Zero;

use super::{form, FedosovError, SymplecticLieAlgebra, SymplecticVerdict};
use crate::exact_linalg::{q, Matrix, Scalar};

/// Bilinear product `e_i e_j = sum_k table[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub table: Vec<Vec<Vec<Scalar>>>,
}

fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (u, v) in acc.iter_mut().zip(x) {
        *u += a * v;
    }
}

fn lin(a: &Scalar, x: &[Scalar], b: &Scalar, y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); x.len()];
    axpy(&mut out, a, x);
    axpy(&mut out, b, y);
    out
}

impl Product {
    pub fn zero(d: usize) -> Self {
        Product { table: vec![vec![vec![Scalar::zero(); d]; d]; d] }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), &self.table[i][j]);
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::from_integer(1.into());
        v
    }

    /// `L_x : y -> xy`.
    pub fn left(&self, x: &[Scalar]) -> Matrix<Scalar> {
        let cols = (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_cols(self.dim(), cols).expect("square")
    }

    /// `R_x : y -> yx`.
    pub fn right(&self, x: &[Scalar]) -> Matrix<Scalar> {
        let cols = (0..self.dim()).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_cols(self.dim(), cols).expect("square")
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().flatten().all(Zero::is_zero)
    }
}

/// Product solving `omega(xy, z) = -omega(y, [x, z])`.
pub fn lsa_from_symplectic(a: &SymplecticLieAlgebra) -> Result<Product, FedosovError> {
    let v = a.check();
    if !v.is_valid() {
        return Err(FedosovError::Invalid(v.describe()));
    }
    let d = a.dim();
    let wt = a.omega.transpose();
    let mut p = Product::zero(d);
    for i in 0..d {
        for j in 0..d {
            let ej = a.g.basis_vector(j);
            let rhs: Vec<Scalar> = (0..d).map(|k| -form(&a.omega, &ej, a.g.get(i, k))).collect();
            p.table[i][j] = wt.solve(&rhs).expect("omega is nondegenerate");
        }
    }
    Ok(p)
}

/// Failures of `(xy)z - x(yz) = (yx)z - y(xz)` and of `xy - yx = [x, y]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LsaVerdict {
    pub left_symmetry_failures: Vec<(usize, usize, usize)>,
    pub compatibility_failures: Vec<(usize, usize)>,
}

impl LsaVerdict {
    pub fn passed(&self) -> bool {
        self.left_symmetry_failures.is_empty() && self.compatibility_failures.is_empty()
    }
}

pub fn check_left_symmetric(p: &Product, a: &SymplecticLieAlgebra) -> LsaVerdict {
    let d = p.dim();
    let e = |i| a.g.basis_vector(i);
    let one = Scalar::from_integer(1.into());
    let mone = -one.clone();
    let mut v = LsaVerdict::default();
    for i in 0..d {
        for j in 0..d {
            if i < j && lin(&one, &p.table[i][j], &mone, &p.table[j][i]) != a.g.get(i, j) {
                v.compatibility_failures.push((i, j));
            }
            for k in 0..d {
                let lhs = lin(&one, &p.mul(&p.table[i][j], &e(k)), &mone, &p.mul(&e(i), &p.table[j][k]));
                let rhs = lin(&one, &p.mul(&p.table[j][i], &e(k)), &mone, &p.mul(&e(j), &p.table[i][k]));
                if lhs != rhs {
                    v.left_symmetry_failures.push((i, j, k));
                }
            }
        }
    }
    v
}

/// `nabla_{e_i} e_j` by the closed formula `2/3 xy - 1/3 yx`.
pub fn connection(p: &Product) -> Product {
    let d = p.dim();
    let mut c = Product::zero(d);
    for i in 0..d {
        for j in 0..d {
            c.table[i][j] = lin(&q(2, 3), &p.table[i][j], &q(-1, 3), &p.table[j][i]);
        }
    }
    c
}

/// `nabla = nabla^o + (N(x, y) + N(y, x)) / 3` with `N` solved from
/// `omega(N(x, y), z) = -omega(xy, z) - omega(y, xz)`.
pub fn connection_via_n(p: &Product, a: &SymplecticLieAlgebra) -> Product {
    let d = p.dim();
    let wt = a.omega.transpose();
    let mut n = Product::zero(d);
    for i in 0..d {
        for j in 0..d {
            let ej = a.g.basis_vector(j);
            let rhs: Vec<Scalar> = (0..d)
                .map(|k| -form(&a.omega, &p.table[i][j], &a.g.basis_vector(k)) - form(&a.omega, &ej, &p.table[i][k]))
                .collect();
            n.table[i][j] = wt.solve(&rhs).expect("omega is nondegenerate");
        }
    }
    let mut c = Product::zero(d);
    let third = q(1, 3);
    for i in 0..d {
        for j in 0..d {
            let mut v = p.table[i][j].clone();
            axpy(&mut v, &third, &n.table[i][j]);
            axpy(&mut v, &third, &n.table[j][i]);
            c.table[i][j] = v;
        }
    }
    c
}

/// Basis index triple.
pub type Triple = (usize, usize, usize);

/// Torsion and `omega`-compatibility failures of a connection table.
pub fn connection_failures(c: &Product, a: &SymplecticLieAlgebra) -> (Vec<(usize, usize)>, Vec<Triple>) {
    let d = c.dim();
    let one = Scalar::from_integer(1.into());
    let mut torsion = Vec::new();
    let mut compat = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i < j && lin(&one, &c.table[i][j], &-one.clone(), &c.table[j][i]) != a.g.get(i, j) {
                torsion.push((i, j));
            }
            for k in 0..d {
                let s = form(&a.omega, &c.table[i][j], &a.g.basis_vector(k))
                    + form(&a.omega, &a.g.basis_vector(j), &c.table[i][k]);
                if !s.is_zero() {
                    compat.push((i, j, k));
                }
            }
        }
    }
    (torsion, compat)
}

/// `nabla_x` as a matrix.
fn nabla(c: &Product, x: &[Scalar]) -> Matrix<Scalar> {
    c.left(x)
}

/// `R(e_i, e_j) = [nabla_i, nabla_j] - nabla_{[e_i, e_j]}` computed from the definition.
pub fn curvature_direct(c: &Product, a: &SymplecticLieAlgebra) -> Vec<Vec<Matrix<Scalar>>> {
    let d = c.dim();
    let nb: Vec<Matrix<Scalar>> = (0..d).map(|i| nabla(c, &a.g.basis_vector(i))).collect();
    (0..d).map(|i| (0..d).map(|j| nb[i].commutator(&nb[j]).sub(&nabla(c, a.g.get(i, j)))).collect()).collect()
}

/// `R(x, y) = -1/9 [R_x, R_y] - 2/9 L_{[x,y]} + 1/9 R_{[x,y]}` in terms of the product.
pub fn curvature_closed(p: &Product, a: &SymplecticLieAlgebra) -> Vec<Vec<Matrix<Scalar>>> {
    let d = p.dim();
    let rs: Vec<Matrix<Scalar>> = (0..d).map(|i| p.right(&a.g.basis_vector(i))).collect();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let br = a.g.get(i, j);
                    rs[i]
                        .commutator(&rs[j])
                        .scale(&q(-1, 9))
                        .add(&p.left(br).scale(&q(-2, 9)))
                        .add(&p.right(br).scale(&q(1, 9)))
                })
                .collect()
        })
        .collect()
}

/// `ric(x, y) = 1/9 (tr L_{xy} + tr(L_x L_y))`.
pub fn ricci_closed(p: &Product) -> Matrix<Scalar> {
    let d = p.dim();
    let ls: Vec<Matrix<Scalar>> = (0..d).map(|i| p.left(&p.basis(i))).collect();
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = (p.left(&p.table[i][j]).trace() + ls[i].mul(&ls[j]).trace()) * q(1, 9);
        }
    }
    m
}

/// `ric(x, y) = tr(z -> R(x, z) y)` from a curvature table.
pub fn ricci_from_curvature(r: &[Vec<Matrix<Scalar>>]) -> Matrix<Scalar> {
    let d = r.len();
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            // the map z -> R(e_i, z) e_j has column k equal to R(e_i, e_k) e_j
            let mut t = Scalar::zero();
            for (k, rk) in r[i].iter().enumerate() {
                t += rk[(k, j)].clone();
            }
            m[(i, j)] = t;
        }
    }
    m
}

/// Index tuples where the four trace identities fail.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceIdentities {
    /// `omega(xy, z) + omega(zy, x) = 0`.
    pub item1: Vec<(usize, usize, usize)>,
    /// Cyclic sum of `omega(xy, z)` vanishes.
    pub item2: Vec<(usize, usize, usize)>,
    /// `tr(R_x R_y) = tr R_{xy} = 2 tr L_{xy}`.
    pub item3: Vec<(usize, usize)>,
    /// `tr(R_x R_y) = 2 tr(R_y L_x) = 2 tr(R_x L_y)`.
    pub item4: Vec<(usize, usize)>,
    /// `tr R_x = 2 tr L_x`.
    pub linear: Vec<usize>,
}

impl TraceIdentities {
    pub fn passed(&self) -> bool {
        self.item1.is_empty()
            && self.item2.is_empty()
            && self.item3.is_empty()
            && self.item4.is_empty()
            && self.linear.is_empty()
    }
}

pub fn trace_identities(p: &Product, a: &SymplecticLieAlgebra) -> TraceIdentities {
    let d = p.dim();
    let e = |i| p.basis(i);
    let two = Scalar::from_integer(2.into());
    let ls: Vec<Matrix<Scalar>> = (0..d).map(|i| p.left(&e(i))).collect();
    let rs: Vec<Matrix<Scalar>> = (0..d).map(|i| p.right(&e(i))).collect();
    let mut t = TraceIdentities::default();
    for i in 0..d {
        if rs[i].trace() != &two * ls[i].trace() {
            t.linear.push(i);
        }
        for j in 0..d {
            for k in 0..d {
                let w = |x: &[Scalar], y: &[Scalar]| form(&a.omega, x, y);
                if !(w(&p.table[i][j], &e(k)) + w(&p.table[k][j], &e(i))).is_zero() {
                    t.item1.push((i, j, k));
                }
                if !(w(&p.table[i][j], &e(k)) + w(&p.table[j][k], &e(i)) + w(&p.table[k][i], &e(j))).is_zero() {
                    t.item2.push((i, j, k));
                }
            }
            let rr = rs[i].mul(&rs[j]).trace();
            let xy = &p.table[i][j];
            if rr != p.right(xy).trace() || rr != &two * p.left(xy).trace() {
                t.item3.push((i, j));
            }
            if rr != &two * rs[j].mul(&ls[i]).trace() || rr != &two * rs[i].mul(&ls[j]).trace() {
                t.item4.push((i, j));
            }
        }
    }
    t
}

/// Left trace form `kappa(x, y) = tr(L_x L_y)`.
pub fn left_trace_form(p: &Product) -> Matrix<Scalar> {
    let d = p.dim();
    let ls: Vec<Matrix<Scalar>> = (0..d).map(|i| p.left(&p.basis(i))).collect();
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = ls[i].mul(&ls[j]).trace();
        }
    }
    m
}

/// Everything computed for one symplectic Lie algebra.
#[derive(Clone, Debug)]
pub struct FedosovReport {
    pub name: String,
    pub dim: usize,
    pub verdict: SymplecticVerdict,
    pub product: Product,
    pub lsa: LsaVerdict,
    pub connection: Product,
    pub connection_routes_agree: bool,
    pub torsion_failures: Vec<(usize, usize)>,
    pub compatibility_failures: Vec<(usize, usize, usize)>,
    pub curvature: Vec<Vec<Matrix<Scalar>>>,
    pub curvature_routes_agree: bool,
    pub ricci: Matrix<Scalar>,
    pub ricci_routes_agree: bool,
    pub identities: TraceIdentities,
    pub nilpotent: bool,
    pub solvable: bool,
    pub lower_central: Vec<usize>,
    pub derived: Vec<usize>,
    pub kappa: Matrix<Scalar>,
    pub killing: Matrix<Scalar>,
    /// `nilpotent => ric = 0 and kappa = 0`, `kappa = 0 => solvable`.
    pub implications_hold: bool,
}

impl FedosovReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        push(self.lsa.passed(), "left-symmetric axioms");
        push(self.connection_routes_agree, "connection routes differ");
        push(self.torsion_failures.is_empty(), "torsion");
        push(self.compatibility_failures.is_empty(), "omega not parallel");
        push(self.curvature_routes_agree, "curvature routes differ");
        push(self.ricci_routes_agree, "ricci routes differ");
        push(self.ricci == self.ricci.transpose(), "ricci not symmetric");
        push(self.identities.passed(), "trace identities");
        push(self.implications_hold, "nilpotency implications");
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

pub fn fedosov_report(a: &SymplecticLieAlgebra) -> Result<FedosovReport, FedosovError> {
    let verdict = a.check();
    let product = lsa_from_symplectic(a)?;
    let lsa = check_left_symmetric(&product, a);
    let conn = connection(&product);
    let connection_routes_agree = conn == connection_via_n(&product, a);
    let (torsion_failures, compatibility_failures) = connection_failures(&conn, a);
    let curvature = curvature_direct(&conn, a);
    let curvature_routes_agree = curvature == curvature_closed(&product, a);
    let ricci = ricci_closed(&product);
    let ricci_routes_agree = ricci == ricci_from_curvature(&curvature);
    let identities = trace_identities(&product, a);
    let kappa = left_trace_form(&product);
    let nilpotent = a.g.is_nilpotent();
    let solvable = a.g.is_solvable();
    let implications_hold = (!nilpotent || (ricci.is_zero() && kappa.is_zero())) && (!kappa.is_zero() || solvable);
    Ok(FedosovReport {
        name: a.name.clone(),
        dim: a.dim(),
        verdict,
        lsa,
        connection: conn,
        connection_routes_agree,
        torsion_failures,
        compatibility_failures,
        curvature,
        curvature_routes_agree,
        ricci,
        ricci_routes_agree,
        identities,
        nilpotent,
        solvable,
        lower_central: a.g.lower_central_series(),
        derived: a.g.derived_series(),
        killing: a.g.killing_form(),
        kappa,
        product,
        implications_hold,
    })
}
