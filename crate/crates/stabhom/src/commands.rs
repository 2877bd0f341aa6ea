//! The `stabhom` subcommands, as functions from parsed arguments to a JSON value and an exit code.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use stabhom_core::algebra::{
    indec_injective, indec_projective, radical, regular_module, simple, socle, top, Algebra, Representation, Side,
    Submodule,
};
use stabhom_core::catalog::{draw_module, Fixture};
use stabhom_core::exactla::Field;
use stabhom_core::fpfun::{fp_defect, fp_dim, FpFunctor};
use stabhom_core::homology::{ext1, hom_basis, star_dual, tensor, transpose};
use stabhom_core::stable::{
    bass_torsion, cotorsion_quotient, cotorsion_trace, fp_certificate, stable_hom, tensor_substab, torsion_radical,
    torsionless_quotient, Certificate, CertificateKind, Flavor, TorsionMethod,
};

use crate::format::{matrix_to_spec, read_algebra, read_functor, read_module, FormatError, ModuleFile};
use crate::laws::{is_self_injective, named_probes, stream_rng};
use crate::report::{select_laws, verify, AlgebraDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FINITE: i32 = 3;

/// A command failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Failure {
        let code = match e {
            FormatError::Core(stabhom_core::Error::NotFiniteDimensional(_)) => EXIT_NOT_FINITE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<stabhom_core::Error> for Failure {
    fn from(e: stabhom_core::Error) -> Failure {
        FormatError::Core(e).into()
    }
}

pub struct Output {
    pub value: Value,
    pub code: i32,
}

impl Output {
    fn ok(value: impl Serialize) -> Output {
        Output { value: serde_json::to_value(value).expect("serializable"), code: EXIT_OK }
    }
}

pub type CommandResult = Result<Output, Failure>;

/// An algebra argument: a JSON file, or a fixture name optionally suffixed with a field
/// (`kronecker`, `a2:2`, `dual-numbers:q`). Fixtures default to 𝔽₅.
pub fn load_algebra(arg: &str) -> Result<Algebra, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(read_algebra(path)?);
    }
    let (name, field) = match arg.split_once(':') {
        Some((n, f)) => (n, Some(f)),
        None => (arg, None),
    };
    let usage = |message: String| Failure { code: EXIT_USAGE, message };
    let fixture = Fixture::from_name(name)
        .ok_or_else(|| usage(format!("{arg}: no such file, and not a fixture name")))?;
    let field = match field {
        None => Field::prime(5)?,
        Some("q") | Some("Q") => Field::Rational,
        Some(p) => Field::prime(p.parse().map_err(|_| usage(format!("{arg}: bad field {p:?}")))?)?,
    };
    Ok(fixture.build(field))
}

fn dims(m: &Representation) -> Vec<usize> {
    m.dims().to_vec()
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

pub fn info(algebra: &Algebra) -> CommandResult {
    let n = algebra.num_vertices();
    let per_vertex = |f: fn(&Algebra, usize, Side) -> stabhom_core::Result<Representation>| -> Result<Value, Failure> {
        let mut out = serde_json::Map::new();
        for v in 0..n {
            out.insert(algebra.vertex_name(v).to_string(), json!(dims(&f(algebra, v, Side::Left)?)));
        }
        Ok(Value::Object(out))
    };
    let mut blocks = serde_json::Map::new();
    for u in 0..n {
        for w in 0..n {
            let size = algebra.basis_block(u, w).len();
            if size > 0 {
                blocks.insert(format!("{}->{}", algebra.vertex_name(u), algebra.vertex_name(w)), json!(size));
            }
        }
    }
    Ok(Output::ok(json!({
        "dim": algebra.dim(),
        "vertices": algebra.quiver().vertices(),
        "path_basis_sizes": blocks,
        "radical_dim": algebra.jacobson_radical_dim(),
        "radical_length": algebra.radical_length(),
        "projectives": per_vertex(indec_projective)?,
        "injectives": per_vertex(indec_injective)?,
        "simples": per_vertex(simple)?,
        "hereditary": algebra.is_hereditary(),
        "self_injective": is_self_injective(algebra)?,
    })))
}

fn subspaces(s: &Submodule) -> Value {
    Value::Array(s.spaces().iter().map(|sp| json!(matrix_to_spec(sp.basis()))).collect())
}

fn certificate_value(c: &Certificate) -> Value {
    json!({
        "sequence": c.terms.iter().map(dims).collect::<Vec<_>>(),
        "approximation_summands": c.approximation.summands,
        "exact": c.is_exact(),
        "vanishing_ext_dims": c.vanishing,
        "defect_isomorphism": c.defect_iso.is_isomorphism(),
    })
}

pub fn invariants(a: &Representation) -> CommandResult {
    let alg = a.algebra();
    let side = a.side();
    let torsion = bass_torsion(a, TorsionMethod::Reject)?;
    let (torsionless, _) = torsionless_quotient(a)?;
    let (cotorsion, _) = cotorsion_quotient(a)?;
    let trace = cotorsion_trace(a)?;
    let covariant = fp_certificate(a, CertificateKind::CovariantUnderline)?;
    let contravariant = fp_certificate(a, CertificateKind::ContravariantOverline)?;
    let mut stable = Vec::new();
    for b in named_probes(alg, side) {
        stable.push(json!({
            "probe": dims(&b),
            "hom": hom_basis(a, &b)?.dim(),
            "underline": stable_hom(a, &b, Flavor::ModuloProjectives)?.dim(),
            "overline": stable_hom(a, &b, Flavor::ModuloInjectives)?.dim(),
            "underline_into": stable_hom(&b, a, Flavor::ModuloProjectives)?.dim(),
            "overline_into": stable_hom(&b, a, Flavor::ModuloInjectives)?.dim(),
        }));
    }
    let mut out = json!({
        "side": side_name(side),
        "dims": dims(a),
        "radical": radical(a).dims(),
        "top": dims(&top(a).0),
        "socle": socle(a).dims(),
        "torsion": torsion.dims(),
        "torsionless_quotient": dims(&torsionless),
        "cotorsion_quotient": dims(&cotorsion),
        "cotorsion_trace": trace.dims(),
        "star_dual": dims(&star_dual(a)?.module),
        "transpose": dims(&transpose(a)?.module),
        "certificates": {
            "covariant_underline": certificate_value(&covariant),
            "contravariant_overline": certificate_value(&contravariant),
        },
        "stable_hom": stable,
    });
    if side == Side::Right {
        out["torsion_radical"] = json!(torsion_radical(a)?.dim());
    }
    Ok(Output::ok(out))
}

pub fn stablehom(a: &Representation, b: &Representation) -> CommandResult {
    let under = stable_hom(a, b, Flavor::ModuloProjectives)?;
    let over = stable_hom(a, b, Flavor::ModuloInjectives)?;
    Ok(Output::ok(json!({
        "hom": under.hom.dim(),
        "ext1": ext1(a, b)?.dim(),
        "underline": {"factoring_through_projectives": under.factoring.dim(), "dim": under.dim()},
        "overline": {"factoring_through_injectives": over.factoring.dim(), "dim": over.dim()},
    })))
}

pub fn tensor_cmd(a: &Representation, b: &Representation) -> CommandResult {
    let t = tensor(a, b)?;
    let sub = tensor_substab(a, b)?;
    let tr = transpose(a)?.module;
    Ok(Output::ok(json!({
        "tensor": t.dim(),
        "substabilized": sub.dim(),
        "transpose": dims(&tr),
        "ext1_transpose": ext1(&tr, b)?.dim(),
    })))
}

pub fn functor(f: &FpFunctor, at: &[(String, Representation)]) -> CommandResult {
    let x = f.x();
    let (names, modules): (Vec<String>, Vec<Representation>) = if at.is_empty() {
        let probes = named_probes(x.algebra(), x.side());
        let n = x.algebra().num_vertices();
        let labels = ["S", "P", "I"];
        let names = (0..probes.len()).map(|i| format!("{}({})", labels[i / n], x.algebra().vertex_name(i % n))).collect();
        (names, probes)
    } else {
        at.iter().cloned().unzip()
    };
    let mut values = serde_json::Map::new();
    for (name, b) in names.iter().zip(&modules) {
        values.insert(name.clone(), json!(fp_dim(f, b)?));
    }
    let defect = fp_defect(f)?;
    Ok(Output::ok(json!({
        "variance": format!("{:?}", f.variance).to_lowercase(),
        "side": side_name(x.side()),
        "defect": dims(&defect.module),
        "at_regular": fp_dim(f, &regular_module(x.algebra(), x.side()))?,
        "values": values,
    })))
}

pub fn verify_cmd(algebra: &Algebra, seed: u64, count: usize, max_dim: usize, laws: Option<&[String]>) -> CommandResult {
    let laws = select_laws(laws).map_err(|e| Failure { code: EXIT_USAGE, message: e.to_string() })?;
    let report = verify(algebra, seed, count, max_dim, &laws);
    let code = if report.passed { EXIT_OK } else { EXIT_LAW_FAILURE };
    Ok(Output { value: serde_json::to_value(&report).expect("serializable"), code })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Search {
    /// Modules with 𝔱(𝔱(a)) ≠ 𝔱(a).
    TNonidempotent,
    /// Modules where 𝔮(a) -> 𝔮(𝔮(a)) is not an isomorphism.
    QNoncotorsion,
}

/// Searches `budget` generated modules per algebra (alternating sides) and reports any witness
/// with both subspaces recomputed directly. Never asserts that no witness exists.
pub fn catalog(algebras: &[(String, Algebra)], search: Search, budget: usize, seed: u64, max_dim: usize) -> CommandResult {
    let mut results = Vec::new();
    for (name, alg) in algebras {
        let mut rng = stream_rng(seed, 0);
        let mut findings = Vec::new();
        for i in 0..budget {
            let side = if i % 2 == 0 { Side::Left } else { Side::Right };
            let a = draw_module(alg, side, max_dim, &mut rng).module;
            match search {
                Search::TNonidempotent => {
                    let t = bass_torsion(&a, TorsionMethod::Reject)?;
                    let (tm, incl) = t.to_module();
                    let tt = bass_torsion(&tm, TorsionMethod::Reject)?;
                    if !tt.is_whole() {
                        let tt_in_a = tt.image_under(&incl)?;
                        findings.push(json!({
                            "index": i,
                            "module": ModuleFile::bare(&a),
                            "torsion": subspaces(&t),
                            "torsion_of_torsion": subspaces(&tt_in_a),
                        }));
                    }
                }
                Search::QNoncotorsion => {
                    let (q, _) = cotorsion_quotient(&a)?;
                    let tr = cotorsion_trace(&q)?;
                    if !tr.is_zero() {
                        findings.push(json!({
                            "index": i,
                            "module": ModuleFile::bare(&a),
                            "cotorsion_trace": subspaces(&cotorsion_trace(&a)?),
                            "cotorsion_trace_of_quotient": subspaces(&tr),
                        }));
                    }
                }
            }
        }
        let summary = if findings.is_empty() {
            "none found within budget".to_string()
        } else {
            format!("{} witness(es) found", findings.len())
        };
        results.push(json!({
            "algebra": name,
            "descriptor": AlgebraDescriptor::new(alg),
            "tested": budget,
            "summary": summary,
            "findings": findings,
        }));
    }
    let search = match search {
        Search::TNonidempotent => "t-nonidempotent",
        Search::QNoncotorsion => "q-noncotorsion",
    };
    Ok(Output::ok(json!({"search": search, "budget": budget, "seed": seed, "max_dim": max_dim, "algebras": results})))
}

pub fn read_module_arg(path: &str, algebra: &Algebra) -> Result<Representation, Failure> {
    Ok(read_module(Path::new(path), algebra)?)
}

pub fn read_functor_arg(path: &str, algebra: &Algebra) -> Result<FpFunctor, Failure> {
    Ok(read_functor(Path::new(path), algebra)?)
}

/// Renders a JSON value as indented `key: value` lines.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && (!x.is_array() || flat_array(x))) => {
            Some(serde_json::to_string(v).expect("serializable"))
        }
        _ => None,
    }
}

fn flat_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render(v, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// One `PASS`/`FAIL` line per law, then the totals.
pub fn render_verify_text(value: &Value) -> String {
    let mut out = String::new();
    if let Some(laws) = value["laws"].as_array() {
        for law in laws {
            let status = if law["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} checks)\n", law["name"].as_str().unwrap_or(""), law["checks"]));
            if let Some(values) = law["witness"]["values"].as_object() {
                for (k, v) in values {
                    out.push_str(&format!("    {k}: {}\n", v.as_str().unwrap_or("")));
                }
            }
        }
    }
    out.push_str(&format!(
        "modules tested: {}, checks run: {}, {}\n",
        value["counts"]["modules_tested"],
        value["counts"]["checks_run"],
        if value["passed"].as_bool() == Some(true) { "all laws pass" } else { "law failures" }
    ));
    out
}
