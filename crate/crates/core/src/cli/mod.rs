//! Command-line front end: presentation files in, reports out.
//!
//! Exit codes: 0 pass or certified, 1 parse error, 2 invalid presentation,
//! 3 refuted, 4 inconclusive, 5 unmet precondition.

mod format;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::classify::{classify, constant_term};
use crate::error::{Result, SpbwError};
use crate::gradings::{associated_quasicommutative, grading_dims, GradingSpec};
use crate::koszul::{abar_equivalence_check, koszul_certificate, tensor_resolution_check, KoszulMode, Verdict};
use crate::skewcore::{validate_presentation_seeded, ExprParser, Presentation, SkewRing, DEFAULT_SPOT_CHECKS};

pub use format::{parse_presentation, parse_scalar, print_presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "spbw", version, about = "Skew PBW extensions: normal forms, classification and Koszul certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Homological and internal degree bounds.
    #[arg(long, global = true, num_args = 2, value_names = ["H", "D"])]
    pub bounds: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the presentation, including all overlaps.
    Validate { file: PathBuf },
    /// Report the sub-classes the extension belongs to.
    Classify { file: PathBuf },
    /// Normal form of an expression.
    Nf { file: PathBuf, expr: String },
    /// Normal form of a product.
    Mul { file: PathBuf, a: String, b: String },
    /// Dimensions of graded components.
    Hilbert {
        file: PathBuf,
        #[arg(default_value = "standard")]
        grading: GradingSpec,
        /// Bound on the first degree.
        d: Option<u32>,
        /// Bound on the second degree.
        x: Option<u32>,
    },
    /// The associated quasi-commutative extension.
    Gr { file: PathBuf },
    /// Augmentation data and the constant-term map.
    Aug { file: PathBuf },
    /// Bounded Koszulity certificate.
    Koszul {
        file: PathBuf,
        #[arg(default_value = "classical")]
        mode: KoszulMode,
        h: Option<usize>,
        d: Option<u32>,
    },
    /// Tensored base resolution check.
    TensorCheck {
        file: PathBuf,
        h: Option<usize>,
        j: Option<u32>,
        x: Option<u32>,
    },
    /// Generalized Koszulity of A next to classical Koszulity of A / rad.
    Abar {
        file: PathBuf,
        h: Option<usize>,
        d: Option<u32>,
    },
}

pub fn exit_code(e: &SpbwError) -> i32 {
    match e {
        SpbwError::Parse { .. } | SpbwError::UnknownIdentifier(_) => EXIT_PARSE,
        e if e.is_validation_failure() => EXIT_INVALID,
        _ => EXIT_PRECONDITION,
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::CertifiedToBounds => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

struct Ctx<'a> {
    json: bool,
    seed: u64,
    bounds: Option<(usize, u32)>,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) {
        let s = if self.json {
            serde_json::to_string_pretty(value).expect("serializable report")
        } else {
            text()
        };
        let _ = writeln!(self.out, "{s}");
    }
}

fn read(file: &PathBuf) -> Result<Presentation> {
    let text = std::fs::read_to_string(file).map_err(|e| SpbwError::Parse {
        line: 0,
        msg: format!("{}: {e}", file.display()),
    })?;
    parse_presentation(&text)
}

fn load_ring(file: &PathBuf) -> Result<SkewRing> {
    SkewRing::new(read(file)?)
}

fn parse_expr(ring: &SkewRing, src: &str) -> Result<crate::skewcore::SkewElement> {
    let parser = ExprParser {
        field: ring.base().field(),
        base_names: ring.base().names(),
        skew_names: &ring.presentation().xnames,
    };
    Ok(ring.normal_form(&parser.parse(src)?))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_command(cmd: &Command, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        Command::Validate { file } => {
            let pres = read(file)?;
            let report = validate_presentation_seeded(&pres, ctx.seed, DEFAULT_SPOT_CHECKS)?;
            let json = report.to_json();
            ctx.emit(&json, || {
                let mut s = format!(
                    "{}: {} overlaps, {} spot checks",
                    if report.passed() { "valid" } else { "INVALID" },
                    report.overlaps_checked,
                    report.spot_checks
                );
                for f in &report.failures {
                    s.push_str(&format!("\n  {f}"));
                }
                s
            });
            if let Some(w) = report.failures.first() {
                let _ = writeln!(ctx.err, "witness: {w}");
                return Ok(EXIT_INVALID);
            }
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let ring = load_ring(file)?;
            let r = classify(ring.presentation())?;
            ctx.emit(&r, || {
                [
                    ("constant", r.constant),
                    ("pre_commutative", r.pre_commutative),
                    ("quasi_commutative", r.quasi_commutative),
                    ("endomorphism_type", r.endomorphism_type),
                    ("derivation_type", r.derivation_type),
                    ("semi_commutative", r.semi_commutative),
                    ("r_augmented", r.r_augmented),
                    ("augmented_over_K", r.augmented_over_k),
                ]
                .iter()
                .map(|(k, v)| format!("{k}: {}", yes_no(*v)))
                .chain(std::iter::once(format!(
                    "bijective: {}",
                    serde_json::to_value(r.bijective).unwrap().as_str().unwrap()
                )))
                .collect::<Vec<_>>()
                .join("\n")
            });
            Ok(EXIT_OK)
        }
        Command::Nf { file, expr } => {
            let ring = load_ring(file)?;
            let a = parse_expr(&ring, expr)?;
            let s = ring.format(&a);
            ctx.emit(&json!({ "normal_form": s }), || s.clone());
            Ok(EXIT_OK)
        }
        Command::Mul { file, a, b } => {
            let ring = load_ring(file)?;
            let p = ring.multiply(&parse_expr(&ring, a)?, &parse_expr(&ring, b)?);
            let s = ring.format(&p);
            ctx.emit(&json!({ "product": s }), || s.clone());
            Ok(EXIT_OK)
        }
        Command::Hilbert { file, grading, d, x } => {
            let ring = load_ring(file)?;
            let db = d.or(ctx.bounds.map(|b| b.1)).unwrap_or(6);
            let xb = x.unwrap_or(db);
            let dims = grading_dims(ring.presentation(), *grading, (db, xb))?;
            ctx.emit(&dims, || {
                dims.entries
                    .iter()
                    .filter(|(_, &v)| v > 0)
                    .map(|((j, k), v)| format!("({j}, {k}): {v}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(EXIT_OK)
        }
        Command::Gr { file } => {
            let ring = load_ring(file)?;
            let gr = associated_quasicommutative(ring.presentation())?;
            let text = print_presentation(&gr);
            ctx.emit(&json!({ "presentation": text }), || text.trim_end().to_string());
            Ok(EXIT_OK)
        }
        Command::Aug { file } => {
            let ring = load_ring(file)?;
            let pres = ring.presentation();
            let report = classify(pres)?;
            let mut witnesses = Vec::new();
            let f = |a: &crate::skewcore::SkewElement| constant_term(&ring, a).map(|t| t.value);
            for &(i, j) in pres.relations.keys() {
                let prod = ring.multiply(&ring.var(j), &ring.var(i));
                let lhs = f(&prod)?;
                if !lhs.is_zero() {
                    witnesses.push(json!({
                        "left": pres.xnames[j],
                        "right": pres.xnames[i],
                        "constant_term_of_product": ring.base().format(&lhs),
                        "product_of_constant_terms": "0",
                    }));
                }
            }
            for i in 0..ring.n() {
                for k in 0..ring.base().m() {
                    let prod = ring.multiply(&ring.var(i), &ring.from_base(ring.base().var(k)));
                    let lhs = f(&prod)?;
                    if !lhs.is_zero() {
                        witnesses.push(json!({
                            "left": pres.xnames[i],
                            "right": ring.base().names()[k],
                            "constant_term_of_product": ring.base().format(&lhs),
                            "product_of_constant_terms": "0",
                        }));
                    }
                }
            }
            let is_ring_hom = report.pre_commutative && report.endomorphism_type;
            let value = json!({
                "r_augmented": report.r_augmented,
                "augmented_over_K": report.augmented_over_k,
                "constant_term_is_ring_hom": is_ring_hom,
                "multiplicativity_witnesses": witnesses,
            });
            ctx.emit(&value, || {
                let mut s = format!(
                    "r_augmented: {}\naugmented_over_K: {}\nconstant term is a ring map: {}",
                    yes_no(report.r_augmented),
                    yes_no(report.augmented_over_k),
                    yes_no(is_ring_hom)
                );
                for w in &witnesses {
                    s.push_str(&format!(
                        "\n  f({}*{}) = {} but f({})f({}) = 0",
                        w["left"].as_str().unwrap(),
                        w["right"].as_str().unwrap(),
                        w["constant_term_of_product"].as_str().unwrap(),
                        w["left"].as_str().unwrap(),
                        w["right"].as_str().unwrap()
                    ));
                }
                s
            });
            Ok(EXIT_OK)
        }
        Command::Koszul { file, mode, h, d } => {
            let pres = load_ring(file)?.presentation().clone();
            let h = h.or(ctx.bounds.map(|b| b.0)).unwrap_or(4);
            let d = d.or(ctx.bounds.map(|b| b.1)).unwrap_or(h as u32 + 4);
            let cert = koszul_certificate(&pres, *mode, h, d)?;
            ctx.emit(&cert, || certificate_text(&cert));
            Ok(verdict_code(cert.verdict))
        }
        Command::TensorCheck { file, h, j, x } => {
            let pres = load_ring(file)?.presentation().clone();
            let h = h.or(ctx.bounds.map(|b| b.0)).unwrap_or(2);
            let j = j.or(ctx.bounds.map(|b| b.1)).unwrap_or(4);
            let x = x.unwrap_or(3);
            let report = tensor_resolution_check(&pres, h, (j, x))?;
            ctx.emit(&report, || {
                format!(
                    "{}\nranks: {:?}\nexact: {}\ngenerated in base degree i: {}\ndegree-0 homology is A_0: {}\nd^2 = 0: {}",
                    if report.verified { "verified" } else { "NOT verified" },
                    report.ranks,
                    yes_no(report.exact),
                    yes_no(report.generated_in_degree),
                    yes_no(report.degree_zero_matches),
                    yes_no(report.d_squared_zero)
                )
            });
            Ok(if report.verified { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Abar { file, h, d } => {
            let pres = load_ring(file)?.presentation().clone();
            let h = h.or(ctx.bounds.map(|b| b.0)).unwrap_or(4);
            let d = d.or(ctx.bounds.map(|b| b.1)).unwrap_or(h as u32 + 4);
            let report = abar_equivalence_check(&pres, h, d)?;
            ctx.emit(&report, || {
                format!(
                    "generalized (A): {}\nclassical (A/rad): {}\nagree: {}",
                    certificate_text(&report.generalized),
                    certificate_text(&report.quotient),
                    yes_no(report.agree)
                )
            });
            Ok(if report.agree { EXIT_OK } else { EXIT_REFUTED })
        }
    }
}

fn certificate_text(cert: &crate::koszul::KoszulCertificate) -> String {
    let verdict = serde_json::to_value(cert.verdict).unwrap();
    let mut s = format!(
        "{} (H = {}, D = {})",
        verdict.as_str().unwrap(),
        cert.bounds.homological,
        cert.bounds.internal
    );
    for step in &cert.steps {
        let gens: Vec<String> = step
            .generators
            .iter()
            .map(|g| match g.secondary {
                Some(b) => format!("{}x({}, {})", g.count, g.degree, b),
                None => format!("{}x{}", g.count, g.degree),
            })
            .collect();
        s.push_str(&format!("\n  P{}: {}", step.i, if gens.is_empty() { "0".into() } else { gens.join(" ") }));
    }
    if let Some(w) = &cert.witness {
        s.push_str(&format!("\n  witness: {}", w.message));
    }
    for n in &cert.notes {
        s.push_str(&format!("\n  note: {n}"));
    }
    s
}

/// Runs a parsed command line; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let bounds = match cli.bounds.as_deref() {
        Some([h, d]) => Some((*h as usize, *d)),
        _ => None,
    };
    let mut ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        bounds,
        out,
        err,
    };
    match run_command(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}
