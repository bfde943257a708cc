//! The `tenfold` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! mathematics rejects it (the report then carries a checkable witness),
//! and 2 for malformed input or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use tenfold_core::clifford::{
    brauer_wall, brauer_wall_complex, clifford_complex, clifford_real, verify_periodicity, CliffordError,
    CliffordSignature, MapCertificate,
};
use tenfold_core::divclass::{self, canonical, realify, ClassificationReport, ClassifyError, TenfoldClass};
use tenfold_core::repthree::{
    commutant, complexify, fs_indicator, fs_string, rep_report, AnyRep, GroundField, GroupRep, RepError,
    DEFAULT_CLOSURE_CAP,
};
use tenfold_core::scalar::{Rational, Scalar};
use tenfold_core::selftest::{self, Fault, Section};
use tenfold_core::superalg::{AlgebraError, AnyAlgebra, SuperAlgebra};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REJECTED: u8 = 1;
pub const EXIT_MALFORMED: u8 = 2;

pub const CLOSURE_CAP_VAR: &str = "TENFOLD_CLOSURE_CAP";

#[derive(Parser, Debug)]
#[command(name = "tenfold", version, about = "Exact super division algebras, Clifford algebras and the threefold way")]
struct Cli {
    /// Emit machine-readable JSON instead of prose.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a superalgebra is a super division algebra and name its class.
    Classify {
        file: PathBuf,
        /// Accept a complex algebra by viewing it as a real one.
        #[arg(long)]
        realify: bool,
    },
    /// Emit one of the ten canonical super division algebras.
    Canon {
        label: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Build a real or complex Clifford algebra.
    Clifford(CliffordArgs),
    /// Graded tensor product of two algebras.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Invert an element of an algebra.
    Invert {
        file: PathBuf,
        /// Coordinates as a JSON array, or comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Commutant and Schur type of a finite matrix group.
    Commutant { file: PathBuf },
    /// Frobenius–Schur indicator of an irreducible representation.
    Fs { file: PathBuf },
    /// Verify Cl(p+1,q+1) ≅ Cl(p,q) ⊗ Cl(1,1) by an explicit generator map.
    Periodicity {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Run the bundled self-test corpus.
    Selftest {
        /// Run only these sections (tenfold, clifford, periodicity, class4, threefold).
        #[arg(long = "section")]
        sections: Vec<Section>,
        #[arg(long, hide = true)]
        corrupt_canonical: Option<String>,
    },
}

#[derive(Args, Debug)]
struct CliffordArgs {
    #[arg(long, requires = "q", conflicts_with = "complex_n")]
    p: Option<usize>,
    #[arg(long, requires = "p", conflicts_with = "complex_n")]
    q: Option<usize>,
    #[arg(long = "complex-n", required_unless_present = "p")]
    complex_n: Option<usize>,
    /// Classify instead of emitting the table.
    #[arg(long)]
    classify: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

/// What a command produced: a JSON value, its prose rendering and a status.
struct Outcome {
    code: u8,
    json: Value,
    prose: String,
}

impl Outcome {
    fn ok(json: Value, prose: String) -> Outcome {
        Outcome { code: EXIT_OK, json, prose }
    }

    fn rejected(json: Value, prose: String) -> Outcome {
        Outcome {
            code: EXIT_REJECTED,
            json,
            prose,
        }
    }
}

/// Input the tool cannot act on. Reported on stderr with exit status 2.
#[derive(Debug)]
struct Malformed(String);

impl<E: std::fmt::Display> From<E> for Malformed {
    fn from(e: E) -> Self {
        Malformed(e.to_string())
    }
}

type CmdResult = Result<Outcome, Malformed>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string(&outcome.json).expect("reports serialize")
            } else {
                outcome.prose.trim_end().to_string()
            };
            let _ = writeln!(out, "{text}");
            outcome.code
        }
        Err(Malformed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MALFORMED
        }
    }
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Classify { file, realify } => cmd_classify(&file, realify),
        Command::Canon { label, output } => cmd_canon(&label, output.as_deref()),
        Command::Clifford(args) => cmd_clifford(args),
        Command::Tensor { a, b, output } => cmd_tensor(&a, &b, output.as_deref()),
        Command::Invert { file, element } => cmd_invert(&file, &element),
        Command::Commutant { file } => cmd_commutant(&file),
        Command::Fs { file } => cmd_fs(&file),
        Command::Periodicity { p, q } => cmd_periodicity(p, q),
        Command::Selftest {
            sections,
            corrupt_canonical,
        } => cmd_selftest(sections, corrupt_canonical),
    }
}

fn read(path: &Path) -> Result<String, Malformed> {
    std::fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn read_algebra(path: &Path) -> Result<AnyAlgebra, Malformed> {
    AnyAlgebra::from_json(&read(path)?).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn closure_cap() -> Result<usize, Malformed> {
    match std::env::var(CLOSURE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Malformed(format!("{CLOSURE_CAP_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

fn read_rep(path: &Path) -> Result<Result<AnyRep, RepError>, Malformed> {
    use tenfold_core::repthree::RepFormatError;
    match AnyRep::from_json(&read(path)?, closure_cap()?) {
        Ok(rep) => Ok(Ok(rep)),
        Err(RepFormatError::Rep(e @ RepError::ClosureExceeded(_))) => Ok(Err(e)),
        Err(e) => Err(Malformed(format!("{}: {e}", path.display()))),
    }
}

/// Writes an algebra to `output`, or returns it as the report.
fn emit_algebra(alg: &AnyAlgebra, output: Option<&Path>, what: &str) -> CmdResult {
    let text = alg.to_json();
    match output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(
                json!({ "written": path.display().to_string(), "dim": alg.dim(), "algebra": what }),
                format!("wrote {what} (dim {}) to {}", alg.dim(), path.display()),
            ))
        }
        None => Ok(Outcome::ok(serde_json::from_str(&text)?, text)),
    }
}

fn classification_outcome(alg: &SuperAlgebra<Rational>, result: Result<ClassificationReport, ClassifyError>, extra: Value) -> Outcome {
    match result {
        Ok(report) => {
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            merge(&mut value, extra);
            Outcome::ok(value, classification_prose(alg, &report))
        }
        Err(e) => rejection(alg, &e, extra),
    }
}

fn merge(value: &mut Value, extra: Value) {
    if let (Value::Object(map), Value::Object(more)) = (value, extra) {
        map.extend(more);
    }
}

fn rejection(alg: &SuperAlgebra<Rational>, e: &ClassifyError, extra: Value) -> Outcome {
    let (reason, witness, text) = match e {
        ClassifyError::NotDivision(w) => ("not_division", Some(w), w.describe(alg)),
        ClassifyError::NotSuperDivision(w) => ("not_super_division", Some(w), w.describe(alg)),
        ClassifyError::InternalContradiction(msg) => ("internal_contradiction", None, msg.clone()),
    };
    let mut value = json!({
        "rejected": reason,
        "witness": witness,
        "witness_text": text,
    });
    merge(&mut value, extra);
    Outcome::rejected(value, format!("rejected: {e}\nwitness: {text}"))
}

fn classification_prose(alg: &SuperAlgebra<Rational>, report: &ClassificationReport) -> String {
    let mut s = format!(
        "label: {}\neven part: {:?} (dim {}), odd part dim {}\n",
        report.class,
        report.even_witness.label(),
        report.even_dim,
        report.odd_dim
    );
    if let Some(e) = &report.chosen_e {
        s.push_str(&format!("chosen e: {}\n", alg.format_coords(e)));
    }
    if let Some(e) = &report.recentered_e {
        s.push_str(&format!("recentered e: {}\n", alg.format_coords(e)));
    }
    if let Some(l) = &report.e_square {
        s.push_str(&format!("e² = {l}\n"));
    }
    s.push_str("trace:\n");
    for (k, step) in report.trace.iter().enumerate() {
        s.push_str(&format!("  {}. {step}\n", k + 1));
    }
    s
}

fn cmd_classify(file: &Path, allow_complex: bool) -> CmdResult {
    let alg = match read_algebra(file)? {
        AnyAlgebra::Real(a) => a,
        AnyAlgebra::Complex(a) if allow_complex => realify(&a),
        AnyAlgebra::Complex(_) => {
            return Err(Malformed(
                "classify works over the real field; pass --realify to view a complex algebra as a real one".into(),
            ))
        }
    };
    let result = divclass::classify(&alg);
    Ok(classification_outcome(&alg, result, json!({})))
}

fn cmd_canon(label: &str, output: Option<&Path>) -> CmdResult {
    let class = TenfoldClass::from_label(label).ok_or_else(|| {
        let all: Vec<_> = TenfoldClass::ALL.iter().map(|c| c.label()).collect();
        Malformed(format!("unknown label {label:?}; expected one of {}", all.join(", ")))
    })?;
    emit_algebra(&canonical(class).into(), output, class.label())
}

fn cmd_clifford(args: CliffordArgs) -> CmdResult {
    let (alg, name, extra) = match (args.p, args.q, args.complex_n) {
        (Some(p), Some(q), None) => {
            let sig = CliffordSignature::new(p, q)?;
            let extra = json!({ "signature": { "p": p, "q": q }, "brauer_wall": brauer_wall(sig) });
            (AnyAlgebra::from(clifford_real(sig)), sig.to_string(), extra)
        }
        (None, None, Some(n)) => {
            let alg = clifford_complex(n)?;
            let extra = json!({ "signature": { "complex_n": n }, "brauer_wall": brauer_wall_complex(n) });
            (AnyAlgebra::from(alg), format!("Cl_{n}(C)"), extra)
        }
        _ => return Err(Malformed("give either --p and --q or --complex-n".into())),
    };
    if !args.classify {
        return emit_algebra(&alg, args.output.as_deref(), &name);
    }
    let real = match alg {
        AnyAlgebra::Real(a) => a,
        AnyAlgebra::Complex(a) => realify(&a),
    };
    let result = divclass::classify(&real);
    let bw = extra["brauer_wall"]["value"].clone();
    let mut outcome = classification_outcome(&real, result, extra);
    outcome.prose = format!("{name}, Brauer–Wall class {bw}\n{}", outcome.prose);
    Ok(outcome)
}

fn cmd_tensor(a: &Path, b: &Path, output: Option<&Path>) -> CmdResult {
    let (x, y) = (read_algebra(a)?, read_algebra(b)?);
    let product = x.tensor(&y).map_err(|e| match e {
        AlgebraError::FieldMismatch => Malformed("both algebras must be over the same field".into()),
        e => Malformed(e.to_string()),
    })?;
    emit_algebra(&product, output, "tensor product")
}

fn parse_coords<F: Scalar>(text: &str, dim: usize) -> Result<Vec<F>, Malformed> {
    let text = text.trim();
    let coords: Vec<F> = if text.starts_with('[') {
        serde_json::from_str(text)?
    } else {
        text.split(',')
            .map(|s| serde_json::from_value(Value::String(s.trim().to_string())))
            .collect::<Result<_, _>>()?
    };
    if coords.len() != dim {
        return Err(Malformed(format!("element has {} coordinates, algebra has dimension {dim}", coords.len())));
    }
    Ok(coords)
}

fn invert_in<F: Scalar>(alg: &SuperAlgebra<F>, text: &str) -> CmdResult {
    let coords: Vec<F> = parse_coords(text, alg.dim())?;
    let shown = alg.format_coords(&coords);
    match alg.invert_coords(&coords) {
        Ok(inv) => Ok(Outcome::ok(
            json!({ "element": coords, "inverse": inv, "inverse_text": alg.format_coords(&inv) }),
            format!("({shown})⁻¹ = {}", alg.format_coords(&inv)),
        )),
        Err(e) => Ok(Outcome::rejected(
            json!({ "element": coords, "rejected": "not_invertible", "witness_text": shown }),
            format!("rejected: {e}\nwitness: {shown} has no two-sided inverse"),
        )),
    }
}

fn cmd_invert(file: &Path, element: &str) -> CmdResult {
    match read_algebra(file)? {
        AnyAlgebra::Real(a) => invert_in(&a, element),
        AnyAlgebra::Complex(a) => invert_in(&a, element),
    }
}

fn closure_rejection(e: RepError) -> Outcome {
    Outcome::rejected(
        json!({ "rejected": "closure_exceeded", "witness_text": e.to_string() }),
        format!("rejected: {e}"),
    )
}

fn commutant_of<F: GroundField>(rep: &GroupRep<F>) -> Outcome {
    let report = rep_report(rep);
    let c = commutant(rep);
    let mut prose = format!(
        "group order {}\ncommutant dimension {}\ntype {}\n",
        report.order,
        report.commutant_dim,
        report.schur_type.as_str()
    );
    if let Err(w) = &c.division_type {
        let real = F::real_form(&c.algebra);
        prose.push_str(&format!("witness: {}\n", w.describe(&real)));
    }
    Outcome::ok(serde_json::to_value(&report).expect("reports serialize"), prose)
}

fn cmd_commutant(file: &Path) -> CmdResult {
    Ok(match read_rep(file)? {
        Ok(AnyRep::Real(rep)) => commutant_of(&rep),
        Ok(AnyRep::Complex(rep)) => commutant_of(&rep),
        Err(e) => closure_rejection(e),
    })
}

fn cmd_fs(file: &Path) -> CmdResult {
    let rep = match read_rep(file)? {
        Ok(AnyRep::Real(rep)) => complexify(&rep),
        Ok(AnyRep::Complex(rep)) => rep,
        Err(e) => return Ok(closure_rejection(e)),
    };
    let mut report = rep_report(&rep);
    Ok(match fs_indicator(&rep) {
        Ok(v) => {
            report.fs = Some(fs_string(v));
            Outcome::ok(
                serde_json::to_value(&report).expect("reports serialize"),
                format!("group order {}\nFrobenius–Schur indicator {}\n", report.order, fs_string(v)),
            )
        }
        Err(e) => {
            let c = commutant(&rep);
            // A commutant element that is not a multiple of the identity.
            let witness = c.basis.iter().find(|m| {
                let d = m[(0, 0)].clone();
                (0..m.rows()).any(|i| (0..m.cols()).any(|j| m[(i, j)] != if i == j { d.clone() } else { Scalar::zero() }))
            });
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            merge(
                &mut value,
                json!({ "rejected": "not_irreducible", "witness": witness.map(|m| m.data().to_vec()) }),
            );
            let shown = witness.map(|m| format!("{m:?}")).unwrap_or_default();
            Outcome::rejected(
                value,
                format!("rejected: {e}\nwitness: non-scalar intertwiner {shown}"),
            )
        }
    })
}

fn certificate_prose(cert: &MapCertificate) -> String {
    let mut s = format!("{} ≅ {}\n", cert.source, cert.target);
    for (k, name) in cert.image_names.iter().enumerate() {
        s.push_str(&format!("  e{} ↦ {name}\n", k + 1));
    }
    s.push_str(&format!("images square correctly, anticommute, and span dimension {}\n", cert.span_dim));
    s
}

fn cmd_periodicity(p: usize, q: usize) -> CmdResult {
    let sig = CliffordSignature::new(p, q)?;
    if sig.generators() + 2 > tenfold_core::clifford::MAX_GENERATORS {
        return Err(Malformed(format!("Cl({},{}) exceeds the generator cap", p + 1, q + 1)));
    }
    Ok(match verify_periodicity(sig) {
        Ok(cert) => Outcome::ok(serde_json::to_value(&cert).expect("certificates serialize"), certificate_prose(&cert)),
        Err(e @ (CliffordError::RelationFailure(_) | CliffordError::SpanDeficient { .. } | CliffordError::ImageNotOdd { .. })) => {
            Outcome::rejected(json!({ "rejected": "certificate_failed", "witness_text": e.to_string() }), format!("rejected: {e}"))
        }
        Err(e) => return Err(e.into()),
    })
}

#[derive(Serialize)]
struct SelftestJson<'a> {
    passed: bool,
    sections: &'a [selftest::SectionReport],
}

fn cmd_selftest(sections: Vec<Section>, corrupt: Option<String>) -> CmdResult {
    let fault = match corrupt {
        Some(label) => Some(Fault::CorruptCanonical(
            TenfoldClass::from_label(&label).ok_or_else(|| Malformed(format!("unknown label {label:?}")))?,
        )),
        None => None,
    };
    let report = selftest::run(&selftest::Options { sections, fault });
    let value = serde_json::to_value(SelftestJson {
        passed: report.passed(),
        sections: &report.sections,
    })
    .expect("reports serialize");
    let outcome = if report.passed() {
        Outcome::ok(value, report.matrix())
    } else {
        Outcome::rejected(value, report.matrix())
    };
    Ok(outcome)
}
