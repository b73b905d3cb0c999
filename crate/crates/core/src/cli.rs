//! Command-line front end. Every command produces a [`Report`]; the exit
//! code is 0 on success, 1 when a mathematical check fails and 2 on usage or
//! input errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Kind};
use crate::catalog::{self, fingerprint, CATALOG};
use crate::cohomology::{chevalley_dims, harrison_h2, CohomologyDims};
use crate::current::current_algebra;
use crate::error::{Error, Result};
use crate::io::{emit_algebra, parse_algebra, parse_cochains};
use crate::report::{subspace_json, subspace_text, vector_json, vector_text, Outcome, Report};
use crate::rigidity::{rigid_in_lpq, rigidity_certificate, truncated_deformation_check, TruncatedDeformation};
use crate::scalar::{Field, Scalar};
use crate::structure::{find_idempotents, find_unit, is_nilalgebra, orthogonal_decomposition, pierce, series};

#[derive(Parser, Debug)]
#[command(name = "currentalg", version, about = "Exact computations with current Lie algebras g (x) A")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Base field the inputs are read over (Q or Qi).
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi or associativity/commutativity identities.
    Validate { file: String },
    /// Fingerprint and structure of an algebra, or of every `*.json` in a
    /// directory with `--all`.
    Analyze {
        #[arg(long)]
        all: bool,
        path: String,
    },
    /// Chevalley cohomology dimensions of a Lie algebra with adjoint
    /// coefficients.
    Cohomology {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: u8,
        file: String,
    },
    /// Harrison H^2 of a commutative associative algebra.
    Harrison { file: String },
    /// Build the current algebra g (x) A and print its algebra file.
    Current {
        g: String,
        a: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pierce decomposition at an idempotent (`1,0,...` or `auto`).
    Pierce {
        file: String,
        #[arg(long, default_value = "auto")]
        idempotent: String,
    },
    /// Rigidity certificate from H^2.
    Rigidity { file: String },
    /// Rigidity of g (x) A among current algebras of the same shape.
    RigidPq { g: String, a: String },
    /// Check a truncated polynomial deformation mu + t phi_1 + t^2 phi_2 + ...
    Deform {
        file: String,
        #[arg(long)]
        cochain: String,
        #[arg(long)]
        order: usize,
    },
    /// List the catalog or emit one of its algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Emit `name` with parameters, as `real-rigid 3 1` or `real-rigid(3,1)`.
    Emit {
        name: String,
        params: Vec<usize>,
    },
}

/// Where `-` reads from.
struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    field: Option<Field>,
}

impl Ctx<'_> {
    fn source(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
        }
    }

    fn algebra(&mut self, path: &str) -> Result<Algebra> {
        let alg = parse_algebra(&self.source(path)?)?;
        match self.field {
            Some(f) => alg.over_field(f),
            None => Ok(alg),
        }
    }
}

/// Parses `argv` and runs the command, writing the report to `out` and clap
/// diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { stdin, field: cli.field };
    let name = command_name(&cli.command);
    let (report, payload) = match execute(&cli.command, &mut ctx) {
        Ok(r) => r,
        Err(e) => (Report::from_error(name, &e), None),
    };
    let text = if cli.json {
        report.to_json()
    } else if let Some(p) = payload.filter(|_| report.outcome == Outcome::Ok) {
        p
    } else {
        report.to_text()
    };
    if out.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    report.exit_code()
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Analyze { .. } => "analyze",
        Command::Cohomology { .. } => "cohomology",
        Command::Harrison { .. } => "harrison",
        Command::Current { .. } => "current",
        Command::Pierce { .. } => "pierce",
        Command::Rigidity { .. } => "rigidity",
        Command::RigidPq { .. } => "rigid-pq",
        Command::Deform { .. } => "deform",
        Command::Catalog { .. } => "catalog",
    }
}

/// A report, plus raw text that replaces the text form when the command's
/// natural output is a file (`current`, `catalog emit`).
type Executed = (Report, Option<String>);

fn execute(c: &Command, ctx: &mut Ctx<'_>) -> Result<Executed> {
    let name = command_name(c);
    match c {
        Command::Validate { file } => Ok((validate(&ctx.algebra(file)?), None)),
        Command::Analyze { all: false, path } => Ok((analyze(&ctx.algebra(path)?)?, None)),
        Command::Analyze { all: true, path } => Ok((analyze_all(Path::new(path), ctx.field)?, None)),
        Command::Cohomology { degree, file } => {
            let g = ctx.algebra(file)?;
            g.require_identities()?;
            let d = chevalley_dims(&g, *degree as usize)?;
            Ok((dims_report(name, &format!("H{degree}"), &g, &d), None))
        }
        Command::Harrison { file } => {
            let a = ctx.algebra(file)?;
            a.require_identities()?;
            Ok((dims_report(name, "Harrison H2", &a, &harrison_h2(&a)?), None))
        }
        Command::Current { g, a, output } => {
            let (g, a) = (ctx.algebra(g)?, ctx.algebra(a)?);
            let c = current_algebra(&g, &a)?;
            let text = emit_algebra(&c);
            let mut report = Report::new(
                name,
                Outcome::Ok,
                format!("{} = {} (x) {}, dim {}", c.name(), g.name(), a.name(), c.dim()),
            )
            .data(json!({ "algebra": serde_json::from_str::<Value>(&text).expect("emitted text is JSON") }));
            if let Some(path) = output {
                std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                report = report.row("written", path.display());
                return Ok((report, None));
            }
            Ok((report, Some(text)))
        }
        Command::Pierce { file, idempotent } => pierce_cmd(&ctx.algebra(file)?, idempotent),
        Command::Rigidity { file } => {
            let g = ctx.algebra(file)?;
            let c = rigidity_certificate(&g)?;
            let r = Report::new(name, Outcome::Ok, format!("H2 = {}, {}", c.h2_dims.dim_h, c.verdict))
                .row("algebra", g.name())
                .row("dim Z2", c.h2_dims.dim_z)
                .row("dim B2", c.h2_dims.dim_b)
                .row("dim H2", c.h2_dims.dim_h)
                .row("orbit dim", c.orbit_dim)
                .data(json!({ "algebra": g.name(), "certificate": c }));
            Ok((r, None))
        }
        Command::RigidPq { g, a } => {
            let (g, a) = (ctx.algebra(g)?, ctx.algebra(a)?);
            let c = rigid_in_lpq(&g, &a)?;
            let (p, q) = (g.dim(), a.dim());
            let r = Report::new(
                name,
                Outcome::Ok,
                format!(
                    "H2(g) = {}, Harrison H2(A) = {}, {} in L({p},{q})",
                    c.h2_lie.dim_h, c.h2_harrison.dim_h, c.verdict
                ),
            )
            .row("g", g.name())
            .row("A", a.name())
            .row("dim H2(g)", c.h2_lie.dim_h)
            .row("dim Harrison H2(A)", c.h2_harrison.dim_h)
            .data(json!({ "g": g.name(), "a": a.name(), "p": p, "q": q, "certificate": c }));
            Ok((r, None))
        }
        Command::Deform { file, cochain, order } => {
            let g = ctx.algebra(file)?;
            let (field, cochains) = parse_cochains(&ctx.source(cochain)?)?;
            if field != g.field() && !(field == Field::Q && g.field() == Field::Qi) {
                return Err(Error::FieldMismatch { left: g.field(), right: field });
            }
            let d = TruncatedDeformation::new(g.clone(), cochains, *order)?;
            let rep = truncated_deformation_check(&d);
            let (outcome, summary) = match &rep.first_obstruction {
                None => (Outcome::Ok, format!("Jacobi holds through order {order}")),
                Some(o) => (
                    Outcome::CheckFailed,
                    format!(
                        "obstruction at order {} on (X{}, X{}, X{})",
                        o.order, o.triple[0], o.triple[1], o.triple[2]
                    ),
                ),
            };
            let mut r = Report::new(name, outcome, summary)
                .row("algebra", g.name())
                .row("cochains", d.cochains().len())
                .row("order", order)
                .row("ok up to", rep.ok_up_to.map_or("none".to_string(), |k| k.to_string()));
            if let Some(o) = &rep.first_obstruction {
                r = r.row("residual", vector_text(&o.residual));
            }
            Ok((r.data(json!({ "algebra": g.name(), "order": order, "result": rep })), None))
        }
        Command::Catalog { action: CatalogAction::List } => {
            let mut r = Report::new(name, Outcome::Ok, format!("{} families", CATALOG.len()));
            let mut entries = Vec::new();
            for e in CATALOG {
                let sig = if e.params.is_empty() {
                    e.name.to_string()
                } else {
                    format!("{}({})", e.name, e.params.join(","))
                };
                r = r.row(sig.clone(), format!("{}: {}", e.kind, e.description));
                entries
                    .push(json!({ "name": e.name, "params": e.params, "kind": e.kind, "description": e.description }));
            }
            Ok((r.data(json!({ "entries": entries })), None))
        }
        Command::Catalog { action: CatalogAction::Emit { name: spec, params } } => {
            let alg = if params.is_empty() { catalog::make_from_spec(spec)? } else { catalog::make(spec, params)? };
            let alg = match ctx.field {
                Some(f) => alg.over_field(f)?,
                None => alg,
            };
            let text = emit_algebra(&alg);
            let r = Report::new(name, Outcome::Ok, format!("{}, dim {}", alg.name(), alg.dim()))
                .data(json!({ "algebra": serde_json::from_str::<Value>(&text).expect("emitted text is JSON") }));
            Ok((r, Some(text)))
        }
    }
}

fn identity_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Lie => "Jacobi",
        Kind::AssocComm => "associativity",
    }
}

/// At most this many violations are listed.
const MAX_WITNESSES: usize = 20;

fn validate(alg: &Algebra) -> Report {
    let rep = alg.check_identities();
    let id = identity_name(alg.kind());
    let outcome = if rep.pass { Outcome::Ok } else { Outcome::CheckFailed };
    let summary =
        if rep.pass { format!("{id}: pass") } else { format!("{id}: FAIL ({} violations)", rep.violations.len()) };
    let mut r = Report::new("validate", outcome, summary)
        .row("algebra", alg.name())
        .row("kind", alg.kind())
        .row("field", alg.field())
        .row("dim", alg.dim());
    for v in rep.violations.iter().take(MAX_WITNESSES) {
        r = r.row(format!("({}, {}, {}) e{}", v.i, v.j, v.k, v.s), &v.residual);
    }
    r.data(json!({
        "algebra": alg.name(),
        "kind": alg.kind(),
        "pass": rep.pass,
        "violation_count": rep.violations.len(),
        "violations": rep.violations.iter().take(MAX_WITNESSES).collect::<Vec<_>>(),
    }))
}

fn dims_report(command: &str, label: &str, alg: &Algebra, d: &CohomologyDims) -> Report {
    Report::new(command, Outcome::Ok, format!("{label} = {}", d.dim_h))
        .row("algebra", alg.name())
        .row("dim Z", d.dim_z)
        .row("dim B", d.dim_b)
        .row("dim H", d.dim_h)
        .data(json!({ "algebra": alg.name(), "dims": d }))
}

fn analyze(alg: &Algebra) -> Result<Report> {
    let v = validate(alg);
    if v.outcome != Outcome::Ok {
        return Ok(Report { command: "analyze".into(), ..v });
    }
    let fp = fingerprint(alg)?;
    let mut r = Report::new("analyze", Outcome::Ok, format!("{} ({}, dim {})", alg.name(), alg.kind(), alg.dim()));
    let mut data = json!({ "algebra": alg.name(), "fingerprint": fp });
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    r = r.row("center dim", opt(fp.center_dim)).row("der dim", fp.der_dim).row("h2 dim", fp.h2_dim);
    match alg.kind() {
        Kind::Lie => {
            let s = series(alg)?;
            let dims = |v: &[crate::linalg::Subspace]| v.iter().map(|x| x.dim()).collect::<Vec<_>>();
            r = r
                .row("h1 dim", opt(fp.h1_dim))
                .row("derived series", format!("{:?}", dims(&s.derived)))
                .row("lower central series", format!("{:?}", dims(&s.lower_central)))
                .row("solvable", s.is_solvable)
                .row("nilpotent", s.is_nilpotent);
            data["derived_series"] = json!(dims(&s.derived));
            data["lower_central_series"] = json!(dims(&s.lower_central));
        }
        Kind::AssocComm => {
            let unit = find_unit(alg)?;
            r = r
                .row("unit", unit.as_ref().map_or("none".to_string(), |u| vector_text(u)))
                .row("nilalgebra", is_nilalgebra(alg)?)
                .row("idempotents", fp.idempotent_count.map_or("-".to_string(), |c| c.to_string()));
            data["unit"] = unit.as_ref().map_or(Value::Null, |u| vector_json(u));
            match orthogonal_decomposition(alg) {
                Ok(d) => {
                    let dims: Vec<usize> = d.components.iter().map(|c| c.dim()).collect();
                    r = r.row("components", format!("{dims:?}")).row("nil residual", d.nil_residual.dim());
                    data["decomposition"] = json!({
                        "component_dims": dims,
                        "idempotents": d.idempotents.iter().map(|e| vector_json(e)).collect::<Vec<_>>(),
                        "nil_residual_dim": d.nil_residual.dim(),
                    });
                }
                Err(Error::Nilalgebra | Error::SearchBound(_)) => data["decomposition"] = Value::Null,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(r.data(data))
}

/// Analyzes every `*.json` file of a directory concurrently; the worst
/// per-file outcome decides the exit code.
fn analyze_all(dir: &Path, field: Option<Field>) -> Result<Report> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let one = |path: &Path| -> Report {
        let run = || -> Result<Report> {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let alg = parse_algebra(&text)?;
            analyze(&match field {
                Some(f) => alg.over_field(f)?,
                None => alg,
            })
        };
        run().unwrap_or_else(|e| Report::from_error("analyze", &e))
    };
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|p| s.spawn(move || one(p))).collect();
        handles.into_iter().map(|h| h.join().expect("analysis thread panicked")).collect()
    });
    let mut outcome = Outcome::Ok;
    let mut r = Report::new("analyze", Outcome::Ok, String::new());
    let mut entries = Vec::new();
    for (p, rep) in files.iter().zip(&reports) {
        outcome = outcome.worst(rep.outcome);
        r = r.row(p.display().to_string(), &rep.summary);
        entries.push(json!({ "path": p.display().to_string(), "outcome": rep.outcome, "summary": rep.summary, "data": rep.data }));
    }
    r.outcome = outcome;
    r.summary = format!("{} files analyzed", files.len());
    Ok(r.data(json!({ "files": entries })))
}

fn parse_vector(csv: &str, alg: &Algebra) -> Result<Vec<Scalar>> {
    let v = csv
        .split(',')
        .map(|x| x.trim().parse::<Scalar>().map_err(|e| Error::InvalidParameter(format!("idempotent: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: v.len() });
    }
    if let Some(x) = v.iter().find(|x| !alg.field().contains(x)) {
        return Err(Error::InvalidParameter(format!("coefficient {x} is not in {}", alg.field())));
    }
    Ok(v)
}

fn pierce_cmd(alg: &Algebra, idempotent: &str) -> Result<Executed> {
    alg.require_kind(Kind::AssocComm)?;
    alg.require_identities()?;
    let targets = if idempotent == "auto" { find_idempotents(alg)? } else { vec![parse_vector(idempotent, alg)?] };
    let mut r = Report::new("pierce", Outcome::Ok, String::new()).row("algebra", alg.name());
    let mut splits = Vec::new();
    for e in &targets {
        let s = pierce(alg, e)?;
        r = r.row(
            format!("e = {}", vector_text(e)),
            format!("A11 = {}, A00 = {}", subspace_text(&s.a11), subspace_text(&s.a00)),
        );
        splits
            .push(json!({ "idempotent": vector_json(e), "a11": subspace_json(&s.a11), "a00": subspace_json(&s.a00) }));
    }
    r.summary = match targets.as_slice() {
        [] => "no nonzero idempotents".to_string(),
        [_] => "Pierce decomposition".to_string(),
        many => format!("Pierce decompositions at {} idempotents", many.len()),
    };
    Ok((r.data(json!({ "algebra": alg.name(), "splits": splits })), None))
}
