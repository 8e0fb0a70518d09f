use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use arrangeops::arrangement::{
    classify_rank3, compose_hat, count_bounded_regions, decompose_generators, encode_tuple, normalize,
    permutahedron_chain, reduced_word, upper_envelope, z_project,
};
use arrangeops::chain::chain_compose;
use arrangeops::geometry::Point2;
use arrangeops::interval::{chat_compose, tiling_compose};
use arrangeops::io::{arrangement_json, map_json, point_json, Document, DocumentError, Payload};
use arrangeops::rational::parse_rational;
use arrangeops::samplers::{run_named_law_suite, OPERAD_NAMES};
use arrangeops::scattering::{run_yang_baxter_suite, RMatrixTheory};
use arrangeops::svg::{render_svg, RenderOptions};
use arrangeops::Arrangement;

/// Exact operads of planar rooted line arrangements.
///
/// Documents are JSON files holding one of `arrangement`, `tiling`, `points`
/// or `chain`, with every rational written as a string. A tiling of `n`
/// lengths, a point configuration of `n + 1` points, a chain of `n + 1`
/// vertices and an arrangement of `n + 1` lines all have arity `n`.
///
/// Exit codes: 0 success, 1 I/O or usage error, 2 validation failure,
/// 3 law or Yang-Baxter failure.
#[derive(Debug, Parser)]
#[command(name = "arrangeops", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a document is well formed and report its arity.
    Validate { file: PathBuf },
    /// Partial composition `A ∘ᵢ B` of two documents of the same kind.
    Compose {
        a: PathBuf,
        /// 1-based slot of A.
        index: usize,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moving frame, normalized arrangement and its matrix tuple.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank-2 base plus rank-3 generators with their slots.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Type of a rank-3 arrangement.
    Classify { file: PathBuf },
    /// Translate every line through the point `--at q,t`.
    Project {
        file: PathBuf,
        #[arg(long, value_name = "Q,T")]
        at: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertices of the upper envelope.
    Envelope { file: PathBuf },
    /// Number of bounded regions cut out by the lines.
    Regions { file: PathBuf },
    /// Ordered partitions swept out over time.
    Permutahedron { file: PathBuf },
    /// Reduced word of a generic arrangement.
    ReducedWord { file: PathBuf },
    /// Numeric Yang-Baxter check of a built-in theory.
    YbCheck {
        /// identity, flip, broken, skew, yang or yang:eta=<float>.
        #[arg(long)]
        theory: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, env = "ARRANGEOPS_SEED", default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Sequential and parallel associativity on seeded samples.
    Laws {
        /// An operad name or `all`.
        #[arg(long, default_value = "all")]
        operad: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = "ARRANGEOPS_SEED", default_value_t = 7)]
        seed: u64,
    },
    /// SVG drawing of an arrangement.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Highlight the upper envelope.
        #[arg(long)]
        envelope: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{code}: {message}")]
    Invalid { code: String, message: String },
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) => 1,
            CliError::Invalid { .. } => 2,
            CliError::Failed(_) => 3,
        }
    }

    fn invalid(code: impl Into<String>, message: impl ToString) -> Self {
        CliError::Invalid {
            code: code.into(),
            message: message.to_string(),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::invalid(e.code(), e)
    }
}

fn read(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Document::parse(&text)?)
}

fn read_arrangement(path: &Path) -> Result<Arrangement, CliError> {
    match read(path)?.payload {
        Payload::Arrangement(a) => Ok(a),
        other => Err(CliError::invalid(
            "WrongKind",
            format!("expected an arrangement, found {}", other.kind()),
        )),
    }
}

fn write(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
                path: PathBuf::from("<stdout>"),
                source: e,
            }),
            _ => Ok(()),
        },
    }
}

fn emit(v: &Value, out: Option<&Path>) -> Result<(), CliError> {
    write(&serde_json::to_string_pretty(v).expect("values serialize"), out)
}

fn parse_point(s: &str) -> Result<Point2, CliError> {
    let bad = || CliError::Usage(format!("--at expects `q,t` with rationals, got `{s}`"));
    let (q, t) = s.split_once(',').ok_or_else(bad)?;
    let q = parse_rational(q.trim()).map_err(|_| bad())?;
    let t = parse_rational(t.trim()).map_err(|_| bad())?;
    Ok(Point2::new(q, t))
}

fn compose(a: &Document, i: usize, b: &Document) -> Result<Payload, CliError> {
    let out_of_range = |e: arrangeops::IndexOutOfRange| CliError::invalid("IndexOutOfRange", e);
    Ok(match (&a.payload, &b.payload) {
        (Payload::Arrangement(p), Payload::Arrangement(q)) => {
            Payload::Arrangement(compose_hat(p, i, q).map_err(out_of_range)?)
        }
        (Payload::Tiling(p), Payload::Tiling(q)) => Payload::Tiling(tiling_compose(p, i, q).map_err(out_of_range)?),
        (Payload::Points(p), Payload::Points(q)) => Payload::Points(chat_compose(p, i, q).map_err(out_of_range)?),
        (Payload::Chain(p), Payload::Chain(q)) => Payload::Chain(chain_compose(p, i, q).map_err(out_of_range)?),
        (p, q) => {
            return Err(CliError::invalid(
                "KindMismatch",
                format!("cannot compose {} with {}", p.kind(), q.kind()),
            ))
        }
    })
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Validate { file } => {
            let doc = read(&file)?;
            let mut report = json!({
                "valid": true,
                "kind": doc.payload.kind(),
                "arity": doc.payload.arity(),
            });
            if let Payload::Arrangement(a) = &doc.payload {
                report["rank"] = json!(a.rank());
            }
            emit(&report, None)
        }
        Command::Compose { a, index, b, out } => {
            let (a, b) = (read(&a)?, read(&b)?);
            let doc = Document::new(compose(&a, index, &b)?);
            write(&doc.to_pretty_string(), out.as_deref())
        }
        Command::Normalize { file, out } => {
            let p = read_arrangement(&file)?;
            let (n, frame) = normalize(&p);
            let tuple: Vec<Value> = encode_tuple(&n).matrices().iter().map(map_json).collect();
            emit(
                &json!({
                    "frame": map_json(&frame),
                    "normalized": arrangement_json(n.arrangement()),
                    "tuple": tuple,
                }),
                out.as_deref(),
            )
        }
        Command::Decompose { file, out } => {
            let p = read_arrangement(&file)?;
            let (base, gens) = decompose_generators(&p);
            let gens: Vec<Value> = gens
                .iter()
                .map(|(slot, g)| json!({"slot": slot, "arrangement": arrangement_json(g)}))
                .collect();
            emit(
                &json!({"base": arrangement_json(&base), "generators": gens}),
                out.as_deref(),
            )
        }
        Command::Classify { file } => {
            let p = read_arrangement(&file)?;
            let ty = classify_rank3(&p).map_err(|e| CliError::invalid(format!("{e:?}"), &e))?;
            emit(&json!({"type": ty}), None)
        }
        Command::Project { file, at, out } => {
            let at = parse_point(&at)?;
            let p = read_arrangement(&file)?;
            let z = z_project(&p, &at).map_err(|e| CliError::invalid(format!("{e:?}"), &e))?;
            write(
                &Document::new(Payload::Arrangement(z)).to_pretty_string(),
                out.as_deref(),
            )
        }
        Command::Envelope { file } => {
            let p = read_arrangement(&file)?;
            let vertices: Vec<Value> = upper_envelope(&p).iter().map(point_json).collect();
            emit(&json!({"vertices": vertices}), None)
        }
        Command::Regions { file } => {
            let p = read_arrangement(&file)?;
            emit(&json!({"bounded_regions": count_bounded_regions(&p)}), None)
        }
        Command::Permutahedron { file } => {
            let p = read_arrangement(&file)?;
            emit(
                &serde_json::to_value(permutahedron_chain(&p)).expect("chain serializes"),
                None,
            )
        }
        Command::ReducedWord { file } => {
            let p = read_arrangement(&file)?;
            let word = reduced_word(&p).map_err(|e| CliError::invalid("NotGeneric", &e))?;
            emit(&json!({"word": word}), None)
        }
        Command::YbCheck {
            theory,
            samples,
            seed,
            tolerance,
        } => {
            let th = RMatrixTheory::from_name(&theory).map_err(|e| CliError::Usage(format!("--theory: {e}")))?;
            let report = run_yang_baxter_suite(&th, samples, seed, tolerance);
            emit(
                &json!({
                    "theory": report.theory,
                    "samples": report.samples,
                    "seed": seed,
                    "tolerance": tolerance,
                    "max_residual": report.max_residual,
                    "failures": report.failures.len(),
                    "passed": report.passed(),
                }),
                None,
            )?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{}: {} of {} samples above tolerance",
                    report.theory,
                    report.failures.len(),
                    samples
                )))
            }
        }
        Command::Laws { operad, samples, seed } => {
            let names: Vec<&str> = if operad == "all" {
                OPERAD_NAMES.to_vec()
            } else {
                vec![operad.as_str()]
            };
            let mut results = Vec::new();
            let mut failed = Vec::new();
            for name in names {
                let report =
                    run_named_law_suite(name, samples, seed).map_err(|e| CliError::Usage(format!("--operad: {e}")))?;
                if !report.passed() {
                    failed.push(name);
                }
                let first = report
                    .sequential
                    .failures
                    .iter()
                    .chain(&report.parallel.failures)
                    .next()
                    .map(|f| json!({"sample": f.sample, "inputs": f.inputs, "lhs": f.lhs, "rhs": f.rhs}));
                results.push(json!({
                    "operad": name,
                    "samples": samples,
                    "sequential_failures": report.sequential.failures.len(),
                    "parallel_failures": report.parallel.failures.len(),
                    "first_failure": first,
                }));
            }
            emit(&json!({"seed": seed, "results": results}), None)?;
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "associativity fails for {}",
                    failed.join(", ")
                )))
            }
        }
        Command::Render { file, out, envelope } => {
            let p = read_arrangement(&file)?;
            let svg = render_svg(
                &p,
                &RenderOptions {
                    envelope,
                    ..Default::default()
                },
            );
            write(&svg, Some(&out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: bad usage"));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
