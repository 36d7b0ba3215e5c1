//! Subcommand implementations. Each returns the output lines and an overall pass flag.

use std::path::Path;

use sympro::catalog::{self, format_params, parse_params, verify_all, verify_entry, VerifyReport};
use sympro::exact_linalg::{Matrix, Scalar};
use sympro::fedosov::{fedosov_report, format_vector, SymplecticLieAlgebra};
use sympro::prolongation::{finite_type_verdict, prolong_chain, LinearSubalgebra};
use sympro::realizations::cohomology::{bracket_module, ce_h1 as compute_h1};
use sympro::realizations::families::{build_k1_truncated, build_k2, default_truncation, K2Base, XiSpec};
use sympro::realizations::{FieldAlgebra, FiltrationReport, FormalField};
use sympro::record::Record;
use sympro::weyl_poisson::SymTensor;

use crate::input;

pub struct Output {
    pub lines: Vec<Record>,
    pub passed: bool,
}

type Res = Result<Output, String>;

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn format_matrix(m: &Matrix<Scalar>) -> String {
    m.to_rows().iter().map(|r| join(r)).collect::<Vec<_>>().join(";")
}

pub fn catalog_list() -> Res {
    let lines = catalog::catalog()
        .iter()
        .map(|e| {
            let params: Vec<String> = e.params.iter().map(|(n, k)| format!("{n}:{}", k.name())).collect();
            Record::new("entry")
                .field("name", e.name)
                .field("group", e.group)
                .field("label", e.label)
                .field("params", if params.is_empty() { "-".into() } else { params.join(",") })
                .field("expected_dim", e.expected.dim)
                .field("expected_type", if e.expected.finite { "finite" } else { "infinite" })
                .field("expected_h1", e.expected.dim_h1.map_or("-".into(), |h| h.to_string()))
        })
        .collect();
    Ok(Output { lines, passed: true })
}

fn verify_record(r: &VerifyReport) -> Record {
    Record::new("verify")
        .field("name", &r.name)
        .field("params", format_params(&r.params))
        .field("dim", r.dim)
        .field("dim_h1", r.dim_h1)
        .field("verdict", r.verdict)
        .field("evidence", &r.evidence)
        .field("status", status(r.passed()))
        .field("failures", if r.failures.is_empty() { "-".into() } else { r.failures.join("; ") })
}

pub fn catalog_verify(name: Option<&str>, params: &[String]) -> Res {
    let grid = input::grid()?;
    let reports: Vec<VerifyReport> = match name {
        None => {
            if !params.is_empty() {
                return Err("--param needs an entry name".into());
            }
            verify_all(&grid)
        }
        Some(name) => {
            let given = parse_params(params)?;
            let mut out = Vec::new();
            for e in catalog::lookup(name).map_err(|e| e.to_string())? {
                let sets =
                    if given.is_empty() && !e.params.is_empty() { e.sample_params() } else { vec![given.clone()] };
                for p in sets {
                    out.push(verify_entry(&e, &p, &grid).map_err(|e| e.to_string())?);
                }
            }
            out
        }
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut lines: Vec<Record> = reports.iter().map(verify_record).collect();
    lines.push(
        Record::new("summary")
            .field("total", reports.len())
            .field("passed", reports.len() - failed)
            .field("failed", failed),
    );
    Ok(Output { lines, passed: failed == 0 })
}

fn load_subalgebra(path: &Path) -> Result<LinearSubalgebra, String> {
    let (space, gens) = input::parse_gens(&input::read(path)?)?;
    LinearSubalgebra::new(space, &gens).map_err(|e| e.to_string())
}

pub fn prolong(path: &Path, kmax: usize) -> Res {
    let h = load_subalgebra(path)?;
    let chain = prolong_chain(&h, kmax);
    let dims = chain.dims();
    let mut lines: Vec<Record> =
        dims.iter().enumerate().map(|(k, d)| Record::new("level").field("k", k).field("dim", d)).collect();
    lines.push(
        Record::new("chain")
            .field("n", h.space().n())
            .field("dims", join(&dims))
            .field("vanishes", dims.last() == Some(&0)),
    );
    Ok(Output { lines, passed: true })
}

pub fn finite_type(path: &Path) -> Res {
    let h = load_subalgebra(path)?;
    let r = finite_type_verdict(&h, &input::grid()?);
    let line = Record::new("finite-type")
        .field("n", h.space().n())
        .field("dim", r.dim)
        .field("dim_h1", r.dim_h1)
        .field("verdict", r.verdict.label())
        .field("evidence", r.evidence(&h.space()));
    Ok(Output { lines: vec![line], passed: true })
}

fn algebra_lines<E: FormalField>(a: &FieldAlgebra<E>) -> Vec<Record> {
    let mut lines: Vec<Record> = a
        .labels()
        .iter()
        .zip(a.basis())
        .enumerate()
        .map(|(i, (l, e))| Record::new("basis").field("index", i + 1).field("label", l).field("field", e.describe()))
        .collect();
    lines.extend(a.structure_lines().into_iter().map(|s| Record::new("bracket").field("value", s)));
    lines
}

fn filtration_record(f: &FiltrationReport) -> Record {
    Record::new("filtration")
        .field("dim", f.dim)
        .field("transitive", f.transitive)
        .field("stability_dim", f.stability_dim)
        .field("isotropy_dim", f.isotropy_dim)
        .field("isotropy_kernel_dim", f.isotropy_kernel_dim)
        .field("levels", join(&f.levels))
}

fn failures_record(kind: &str, failures: &[String]) -> Record {
    Record::new(kind)
        .field("status", status(failures.is_empty()))
        .field("failures", if failures.is_empty() { "-".into() } else { failures.join("; ") })
}

pub fn realize_k1(base: &str, k: u32, n: u32, truncation: Option<u32>) -> Res {
    let base = base.parse().map_err(|e: sympro::realizations::RealizationError| e.to_string())?;
    let r = build_k1_truncated(base, k, n, truncation.unwrap_or_else(|| default_truncation(k)))
        .map_err(|e| e.to_string())?;
    let mut lines = vec![Record::new("thmK1").field("base", r.base).field("k", r.k).field("N", r.n)];
    lines.extend(algebra_lines(&r.algebra));
    lines.push(filtration_record(&r.filtration));
    lines.push(
        Record::new("expected")
            .field("dim", r.expected.dim)
            .field("stability_dim", r.expected.stability_dim)
            .field("isotropy_dim", r.expected.isotropy_dim)
            .field("isotropy_kernel_nonzero", r.expected.isotropy_kernel_nonzero),
    );
    lines.push(
        Record::new("area-form")
            .field("truncation", r.truncation)
            .field("preserved", r.area_preserved)
            .field("advisory", !r.base.is_affine()),
    );
    let failures = r.failures();
    lines.push(failures_record("summary", &failures));
    Ok(Output { lines, passed: failures.is_empty() })
}

pub fn realize_k2(base: &str, xi: &str) -> Res {
    let base: K2Base = base.parse().map_err(|e: sympro::realizations::RealizationError| e.to_string())?;
    let xi: XiSpec = xi.parse().map_err(|e: sympro::realizations::RealizationError| e.to_string())?;
    let r = build_k2(base, xi).map_err(|e| e.to_string())?;
    let mut lines = vec![Record::new("thmK2").field("base", &r.base).field("xi", &r.xi)];
    lines.extend(algebra_lines(&r.algebra));
    lines.push(filtration_record(&r.filtration));
    lines.push(
        Record::new("expected")
            .field("dim", r.expected.dim)
            .field("stability_dim", r.expected.stability_dim)
            .field("isotropy_dim", r.expected.isotropy_dim),
    );
    let failures = r.failures();
    lines.push(failures_record("summary", &failures));
    Ok(Output { lines, passed: failures.is_empty() })
}

pub fn fedosov(path: &Path, report: &str) -> Res {
    let full = match report {
        "summary" => false,
        "full" => true,
        other => return Err(format!("unknown report kind {other:?}")),
    };
    let a = SymplecticLieAlgebra::parse(&input::read(path)?).map_err(|e| e.to_string())?;
    let v = a.check();
    let head = Record::new("algebra").field("name", &a.name).field("dim", a.dim()).field("valid", v.is_valid());
    if !v.is_valid() {
        let line = head.field("reason", v.describe());
        return Ok(Output { lines: vec![line], passed: false });
    }
    let r = fedosov_report(&a).map_err(|e| e.to_string())?;
    let mut lines = vec![head];
    lines.push(
        Record::new("series")
            .field("lower_central", join(&r.lower_central))
            .field("derived", join(&r.derived))
            .field("nilpotent", r.nilpotent)
            .field("solvable", r.solvable),
    );
    if full {
        let d = r.dim;
        for (kind, table) in [("product", &r.product), ("connection", &r.connection)] {
            for i in 0..d {
                for j in 0..d {
                    lines.push(
                        Record::new(kind)
                            .field("i", i + 1)
                            .field("j", j + 1)
                            .field("value", format_vector(&table.table[i][j])),
                    );
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                lines.push(
                    Record::new("curvature")
                        .field("i", i + 1)
                        .field("j", j + 1)
                        .field("value", format_matrix(&r.curvature[i][j])),
                );
            }
        }
    }
    let ric_zero = r.ricci.is_zero();
    lines.push(Record::new("ricci").field("value", format_matrix(&r.ricci)).field("zero", ric_zero));
    lines.push(Record::new("kappa").field("value", format_matrix(&r.kappa)).field("zero", r.kappa.is_zero()));
    lines.push(Record::new("killing").field("value", format_matrix(&r.killing)).field("zero", r.killing.is_zero()));
    let checks = [
        ("left-symmetric", r.lsa.passed()),
        ("connection-routes", r.connection_routes_agree),
        ("torsion-free", r.torsion_failures.is_empty()),
        ("omega-parallel", r.compatibility_failures.is_empty()),
        ("curvature-routes", r.curvature_routes_agree),
        ("ricci-routes", r.ricci_routes_agree),
        ("ricci-symmetric", r.ricci == r.ricci.transpose()),
        ("trace-identities", r.identities.passed()),
        ("nilpotency-implications", r.implications_hold),
    ];
    for (name, ok) in checks {
        lines.push(Record::new("check").field("name", name).field("status", status(ok)));
    }
    let failures = r.failures();
    lines.push(failures_record("summary", &failures));
    Ok(Output { lines, passed: failures.is_empty() })
}

pub fn ce_h1(algebra: &str, module: &str, n: usize) -> Res {
    if n == 0 {
        return Err("n must be positive".into());
    }
    let space = sympro::weyl_poisson::SymplecticSpace::new(n);
    let alg = input::parse_list(&space, algebra)?;
    let m = input::parse_list(&space, module)?;
    if alg.is_empty() || m.is_empty() {
        return Err("algebra and module need at least one tensor each".into());
    }
    let (g, rho) = bracket_module(&space, &alg, &m).map_err(|e| e.to_string())?;
    let r = compute_h1(&g, &rho).map_err(|e| e.to_string())?;
    let mut lines = vec![Record::new("h1")
        .field("dim", r.dim)
        .field("cocycles", r.dim_cocycles)
        .field("coboundaries", r.dim_coboundaries)];
    let d = m.len();
    for (idx, c) in r.representatives.iter().enumerate() {
        let values: Vec<String> = alg
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let v =
                    c[i * d..(i + 1) * d].iter().zip(&m).fold(SymTensor::zero(), |acc, (a, t)| acc.add(&t.scale(a)));
                let shown = if v.is_zero() { "0".to_string() } else { space.format(&v) };
                format!("c({}) = {shown}", space.format(x))
            })
            .collect();
        lines.push(Record::new("cocycle").field("index", idx + 1).field("value", values.join("; ")));
    }
    Ok(Output { lines, passed: true })
}
