//! Command-line surface of the `leibxmod` binary.
//!
//! Exit codes: 0 when the input is valid and the requested property holds,
//! 1 when it is invalid or a precondition fails, 2 when it cannot be read.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::extensions::{classify, prop41_crosscheck, six_term_report, stem_cover_of_perfect, Extension};
use crate::homology::hl;
use crate::ratlin::{format_rational, RatMatrix};
use crate::report::ValidityReport;
use crate::tensor::{exterior_product, exterior_square_data, schur_multiplier};
use crate::xmod::CrossedModule;
use format::{encode, load, to_canonical_string, Object};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("unreadable input: {0}")]
    Unreadable(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Unreadable(_) => 2,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "leibxmod", version, about = "Exact computations with Leibniz crossed modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print a machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the primary output to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate any fixture file.
    Check { path: PathBuf },
    /// Schur multiplier of a crossed module.
    Multiplier { path: PathBuf },
    /// Exterior square of a crossed module, or the exterior product of two with a common base.
    Exterior {
        path: PathBuf,
        other: Option<PathBuf>,
    },
    /// Central, stem extension and stem cover flags with the equivalent criteria.
    #[command(alias = "classify")]
    ClassifyExtension { path: PathBuf },
    /// The six-term exact sequence of a central extension, node by node.
    #[command(alias = "verify")]
    VerifySequence { path: PathBuf },
    /// Total crossed module of the universal stem cover of a perfect crossed module.
    Stemcover { path: PathBuf },
    /// Largest Lie quotient of a crossed module.
    Liezation { path: PathBuf },
    /// Dimension of Leibniz homology in the given degree.
    Hl { path: PathBuf, degree: usize },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub json: Value,
    /// A fixture document, for commands that construct one.
    pub artifact: Option<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn main() -> std::process::ExitCode {
    let ex = run(std::env::args_os());
    print!("{}", ex.stdout);
    eprint!("{}", ex.stderr);
    std::process::ExitCode::from(ex.code as u8)
}

pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (msg, String::new()) } else { (String::new(), msg) };
            return Execution { code, stdout, stderr };
        }
    };
    match execute(&cli.command) {
        Err(e) => Execution {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Ok(out) => {
            let code = if out.ok { 0 } else { 1 };
            let primary = match (&out.artifact, cli.json) {
                (Some(doc), _) => doc.clone(),
                (None, true) => render_json(&out.json),
                (None, false) => out.text.clone(),
            };
            match &cli.out {
                None => Execution {
                    code,
                    stdout: primary,
                    stderr: String::new(),
                },
                Some(p) => match std::fs::write(p, &primary) {
                    Ok(()) => Execution {
                        code,
                        stdout: if cli.json { render_json(&out.json) } else { out.text },
                        stderr: String::new(),
                    },
                    Err(e) => Execution {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", p.display()),
                    },
                },
            }
        }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Check { path } => cmd_check(path),
        Command::Multiplier { path } => cmd_multiplier(path),
        Command::Exterior { path, other } => cmd_exterior(path, other.as_deref()),
        Command::ClassifyExtension { path } => cmd_classify(path),
        Command::VerifySequence { path } => cmd_verify(path),
        Command::Stemcover { path } => cmd_stemcover(path),
        Command::Liezation { path } => cmd_liezation(path),
        Command::Hl { path, degree } => cmd_hl(path, *degree),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array(
        m.row_vectors()
            .map(|r| Value::Array(r.iter().map(|c| Value::String(format_rational(c))).collect()))
            .collect(),
    )
}

fn validity(obj: &Object) -> ValidityReport {
    match obj {
        Object::Algebra(a) => a.check_leibniz(),
        Object::Action(a) => a.check(),
        Object::XMod(x) => x.check(),
        Object::Hom(f) => {
            let mut r = f.source().check();
            r.merge(f.target().check());
            r.merge(f.check());
            r.subject = format!("homomorphism {} -> {}", f.source().name(), f.target().name());
            r
        }
        Object::Extension { name, projection } => {
            let mut r = projection.source().check();
            r.merge(projection.target().check());
            r.merge(projection.check());
            r.record_flag("projection surjective", &[], projection.is_surjective());
            r.subject = format!("extension {name}");
            r
        }
    }
}

fn object_name(obj: &Object) -> String {
    match obj {
        Object::Algebra(a) => a.name().to_string(),
        Object::Action(a) => format!("{} on {}", a.actor().name(), a.acted().name()),
        Object::XMod(x) => x.name().to_string(),
        Object::Hom(f) => format!("{} -> {}", f.source().name(), f.target().name()),
        Object::Extension { name, .. } => name.clone(),
    }
}

fn require_valid(obj: &Object) -> Result<(), CliError> {
    let r = validity(obj);
    if r.is_valid() {
        Ok(())
    } else {
        Err(CliError::Invalid(r.to_string().trim_end().to_string()))
    }
}

fn wrong_kind(path: &Path, obj: &Object, want: &str) -> CliError {
    CliError::Invalid(format!("{}: expected {want}, found {}", path.display(), obj.kind()))
}

fn load_xmod(path: &Path) -> Result<CrossedModule, CliError> {
    match load(path)? {
        Object::XMod(x) => {
            require_valid(&Object::XMod(x.clone()))?;
            Ok(x)
        }
        Object::Algebra(a) => {
            require_valid(&Object::Algebra(a.clone()))?;
            Ok(CrossedModule::identity(&a))
        }
        other => Err(wrong_kind(path, &other, "xmod or algebra")),
    }
}

fn load_extension(path: &Path) -> Result<Extension, CliError> {
    let obj = load(path)?;
    require_valid(&obj)?;
    match obj {
        Object::Extension { name, projection } => Ok(Extension::from_projection(name, projection)?),
        Object::Hom(f) => {
            let name = format!("{} -> {}", f.source().name(), f.target().name());
            Ok(Extension::from_projection(name, f)?)
        }
        other => Err(wrong_kind(path, &other, "extension")),
    }
}

pub fn cmd_check(path: &Path) -> Result<Outcome, CliError> {
    let obj = load(path)?;
    let report = validity(&obj);
    Ok(Outcome {
        ok: report.is_valid(),
        text: report.to_string(),
        json: json!({
            "kind": obj.kind(),
            "name": object_name(&obj),
            "valid": report.is_valid(),
            "report": report,
        }),
        artifact: None,
    })
}

pub fn cmd_multiplier(path: &Path) -> Result<Outcome, CliError> {
    let xm = load_xmod(path)?;
    let m = schur_multiplier(&xm)?;
    let (t, b, r) = m.triple();
    let (qn, qq) = (m.data.qn.dim(), m.data.qq.dim());
    let mut text = String::new();
    let _ = writeln!(text, "crossed module {} with dims {:?}", xm.name(), xm.dims());
    let _ = writeln!(text, "q∧n: {qn}, q∧q: {qq}");
    let _ = writeln!(text, "M = ({t}, {b}), rank δ| = {r}");
    let _ = writeln!(text, "M is abelian with trivial action; all brackets vanish");
    if t > 0 && b > 0 {
        let _ = writeln!(text, "δ| =");
        for row in m.multiplier.delta().row_vectors() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            let _ = writeln!(text, "  [{}]", cells.join(", "));
        }
    }
    Ok(Outcome {
        ok: true,
        text,
        json: json!({
            "xmod": xm.name(),
            "dims": xm.dims(),
            "exterior": {"q^n": qn, "q^q": qq},
            "multiplier": {
                "dims": [t, b],
                "rank": r,
                "delta": matrix_json(m.multiplier.delta()),
                "abelian": true,
            },
        }),
        artifact: None,
    })
}

pub fn cmd_exterior(path: &Path, other: Option<&Path>) -> Result<Outcome, CliError> {
    let eta = load_xmod(path)?;
    if let Some(p) = other {
        let delta = load_xmod(p)?;
        let ext = exterior_product(&eta, &delta)?;
        let c = ext.checks();
        let name = ext.algebra().name().to_string();
        let text = format!(
            "{name}: dim {} ({} generators, {} relations)\nbracket descends {}  representatives consistent {}  Leibniz {}\n",
            ext.dim(),
            ext.ambient_dim(),
            ext.relations().dim(),
            mark(c.bracket_descends),
            mark(c.representatives_consistent),
            mark(c.leibniz)
        );
        return Ok(Outcome {
            ok: c.all(),
            text,
            json: json!({
                "product": name,
                "dim": ext.dim(),
                "generators": ext.ambient_dim(),
                "relations": ext.relations().dim(),
                "checks": c,
            }),
            artifact: None,
        });
    }
    let d = exterior_square_data(&eta)?;
    let checks = [d.qn.checks(), d.qq.checks()];
    let ok = checks.iter().all(|c| c.all());
    let k = d.phi.kernel();
    let text = format!(
        "({}, {}, id∧δ) over {}\nq∧n: {}, q∧q: {}, rank id∧δ = {}\nimage of φ: {:?}, kernel of φ: {:?}\nwell-defined {}\n",
        d.qn.algebra().name(),
        d.qq.algebra().name(),
        eta.name(),
        d.qn.dim(),
        d.qq.dim(),
        d.id_wedge_delta.matrix().rank(),
        d.phi.image().dims(),
        k.dims(),
        mark(ok)
    );
    Ok(Outcome {
        ok,
        text,
        json: json!({
            "xmod": eta.name(),
            "q^n": d.qn.dim(),
            "q^q": d.qq.dim(),
            "rank": d.id_wedge_delta.matrix().rank(),
            "image": d.phi.image().dims(),
            "kernel": k.dims(),
            "checks": {"q^n": checks[0], "q^q": checks[1]},
        }),
        artifact: None,
    })
}

pub fn cmd_classify(path: &Path) -> Result<Outcome, CliError> {
    let e = load_extension(path)?;
    let c = classify(&e)?;
    let mut text = format!(
        "{}\ncentral {} stem {} cover {}\n",
        e.name(),
        mark(c.central),
        mark(c.stem_extension),
        mark(c.stem_cover)
    );
    let mut doc = json!({"extension": e.name(), "classification": c});
    if c.central {
        let p = prop41_crosscheck(&e)?;
        let _ = writeln!(
            text,
            "stem criteria: kernel in derived {}  θ* onto {}  kernel -> total_ab zero {}  total_ab ≅ quotient_ab {}  agree {}",
            mark(p.stem),
            mark(p.theta_surjective),
            mark(p.kernel_to_abelianization_zero),
            mark(p.abelianizations_isomorphic),
            mark(p.part_i_agrees())
        );
        let _ = writeln!(
            text,
            "cover criteria: kernel ≅ M {}  θ* bijective {}  M(total) -> M(quotient) zero {}  agree {}",
            mark(p.cover),
            mark(p.theta_bijective),
            mark(p.multiplier_map_zero),
            mark(p.part_ii_agrees())
        );
        doc["criteria"] = json!(p);
        doc["criteria_agree"] = json!(p.agrees());
        return Ok(Outcome {
            ok: p.agrees(),
            text,
            json: doc,
            artifact: None,
        });
    }
    text.push_str("not central: criteria not evaluated\n");
    Ok(Outcome {
        ok: true,
        text,
        json: doc,
        artifact: None,
    })
}

pub fn cmd_verify(path: &Path) -> Result<Outcome, CliError> {
    let e = load_extension(path)?;
    if !e.is_central() {
        return Err(CliError::Invalid(format!("{}: not central", e.name())));
    }
    let r = six_term_report(&e)?;
    let exact_nodes = r.nodes.iter().filter(|n| n.exact).count();
    let mut text = format!("{}\n", e.name());
    for (m, n) in r.maps.iter().zip(&r.nodes) {
        let _ = writeln!(text, "  {} (rank {}, {})", m.name, m.top.rank(), m.base.rank());
        let _ = writeln!(
            text,
            "{} {}: image {:?}, kernel {:?}",
            mark(n.exact),
            n.node,
            n.incoming_image.dims(),
            n.outgoing_kernel.dims()
        );
    }
    if let Some(last) = r.maps.last() {
        let _ = writeln!(text, "  {} (rank {}, {})", last.name, last.top.rank(), last.base.rank());
    }
    let _ = writeln!(text, "{} onto quotient_ab", mark(r.end_surjective));
    let _ = writeln!(text, "exact at {exact_nodes}/{} interior nodes", r.nodes.len());
    let five = r.five_term();
    let _ = writeln!(
        text,
        "five-term: exact at {}/{} interior nodes",
        five.nodes.iter().filter(|n| n.exact).count(),
        five.nodes.len()
    );
    if !r.first_map_well_defined {
        text.push_str("note: the first map is not well defined on the chosen generators\n");
    }
    Ok(Outcome {
        ok: r.is_exact(),
        text,
        json: json!({"six_term": r.summary(), "five_term": five.summary()}),
        artifact: None,
    })
}

fn artifact_outcome(xm: &CrossedModule, text: String, mut doc: Value) -> Outcome {
    let file = encode(&Object::XMod(xm.clone()));
    doc["fixture"] = serde_json::to_value(&file).expect("fixture documents serialize");
    Outcome {
        ok: true,
        text,
        json: doc,
        artifact: Some(to_canonical_string(&file)),
    }
}

pub fn cmd_stemcover(path: &Path) -> Result<Outcome, CliError> {
    let xm = load_xmod(path)?;
    let e = stem_cover_of_perfect(&xm)?;
    let total = e.total();
    let text = format!(
        "stem cover {} of {}: dims {:?}, kernel {:?}\n",
        total.name(),
        xm.name(),
        total.dims(),
        e.kernel().dims()
    );
    let doc = json!({"xmod": xm.name(), "total": total.name(), "dims": total.dims(), "kernel": e.kernel().dims()});
    Ok(artifact_outcome(total, text, doc))
}

pub fn cmd_liezation(path: &Path) -> Result<Outcome, CliError> {
    let xm = load_xmod(path)?;
    let (l, _) = xm.liezation()?;
    let text = format!("{} of {}: dims {:?}\n", l.name(), xm.name(), l.dims());
    let doc = json!({"xmod": xm.name(), "liezation": l.name(), "dims": l.dims()});
    Ok(artifact_outcome(&l, text, doc))
}

pub fn cmd_hl(path: &Path, degree: usize) -> Result<Outcome, CliError> {
    let a = match load(path)? {
        Object::Algebra(a) => a,
        other => return Err(wrong_kind(path, &other, "algebra")),
    };
    require_valid(&Object::Algebra(a.clone()))?;
    let d = hl(&a, degree)?;
    Ok(Outcome {
        ok: true,
        text: format!("{d}\n"),
        json: json!({"algebra": a.name(), "degree": degree, "dim": d}),
        artifact: None,
    })
}
