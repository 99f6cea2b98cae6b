//! `nullfil`: check operators, construct families, classify solutions and run
//! the theorem-verification suite.
//!
//! Exit codes: 0 pass, 1 identity violation or suite failure, 2 malformed
//! input, 3 singular parameter, 4 unclassified regime.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nullfil::families::{construct, ConstructedOperator, FamilyDescriptor};
use nullfil::operators::PrintedEquation;
use nullfil::solver::{classify, run_suite, SuiteConfig};
use nullfil::{check_identity, Error, HomogeneousOperator, IdentityKind, MatrixOperator, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const EXIT_VIOLATION: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_SINGULAR: u8 = 3;
const EXIT_UNCLASSIFIED: u8 = 4;

#[derive(Parser)]
#[command(name = "nullfil", version, about = "Rota-type operators on null-filiform algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check an operator (matrix or homogeneous JSON) against an identity.
    Check {
        /// Operator JSON file; stdin when omitted or `-`.
        input: Option<String>,
        #[arg(long)]
        identity: String,
        /// Exact scalar, e.g. `1/2`; rota-baxter and differential only.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the operator named by a family descriptor.
    Construct {
        /// Descriptor JSON, `@path` to read a file, or `-` for stdin.
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate every solution family of a classified regime.
    Classify {
        #[arg(long)]
        identity: String,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        n: usize,
        /// Random points at which each family is re-checked exactly.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the full verification suite.
    VerifyTheorems {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Flip one sign in the named displayed equation form.
        #[arg(long, hide = true)]
        inject_mutant: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MALFORMED,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularParameter { .. } | Error::Pole { .. } => EXIT_SINGULAR,
            Error::UnclassifiedRegime(_) => EXIT_UNCLASSIFIED,
            _ => EXIT_MALFORMED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            input,
            identity,
            weight,
            format,
        } => cmd_check(input.as_deref(), &identity, weight.as_deref(), format),
        Command::Construct { family, format } => cmd_construct(&family, format),
        Command::Classify {
            identity,
            weight,
            degree,
            n,
            trials,
            seed,
            format,
        } => cmd_classify(&identity, weight.as_deref(), degree, n, trials, seed, format),
        Command::VerifyTheorems {
            n_max,
            samples,
            seed,
            trials,
            format,
            inject_mutant,
        } => cmd_verify(n_max, samples, seed, trials, format, inject_mutant.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_source(path: Option<&str>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        None | Some("-") => io::stdin()
            .read_to_string(&mut text)
            .map(|_| text)
            .map_err(|e| Failure::malformed(format!("stdin: {e}"))),
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::malformed(format!("{p}: {e}"))),
    }
}

fn kind_of(identity: &str, weight: Option<&str>) -> Result<IdentityKind, Failure> {
    let w = weight
        .map(|w| w.parse::<Scalar>().map_err(|e| Failure::malformed(format!("--weight: {e}"))))
        .transpose()?;
    Ok(IdentityKind::from_parts(identity, w)?)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

/// Deserializes with the path of the first invalid field in the diagnostic.
fn from_value<T: serde::de::DeserializeOwned>(value: Value, what: &str) -> Result<T, Failure> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            Failure::malformed(format!("{what}: {inner}"))
        } else {
            Failure::malformed(format!("{what}: field `{path}`: {inner}"))
        }
    })
}

/// Picks the operator form by its distinguishing field so that serde names
/// the first invalid field in its error.
fn parse_operator(text: &str) -> Result<MatrixOperator, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Failure::malformed(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::malformed("operator must be a JSON object"))?;
    if obj.contains_key("psi") {
        let h: HomogeneousOperator = from_value(value, "homogeneous operator")?;
        Ok(ConstructedOperator::Homogeneous(h).to_matrix())
    } else if obj.contains_key("matrix") {
        from_value(value, "matrix operator")
    } else {
        Err(Failure::malformed("missing field `psi` or `matrix`"))
    }
}

fn render_vector(coeffs: &[Scalar]) -> String {
    let parts: Vec<String> = coeffs.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn cmd_check(input: Option<&str>, identity: &str, weight: Option<&str>, format: Format) -> Outcome {
    let kind = kind_of(identity, weight)?;
    let op = parse_operator(&read_source(input)?)?;
    let report = check_identity(&kind, &op);
    match format {
        Format::Json => print_json(&report),
        Format::Text => match &report.witness {
            None => println!("pass: {kind}"),
            Some(w) => println!(
                "fail: {kind} at (e{}, e{}): lhs = {}, rhs = {}",
                w.i,
                w.j,
                render_vector(w.lhs.coeffs()),
                render_vector(w.rhs.coeffs())
            ),
        },
    }
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}

fn cmd_construct(family: &str, format: Format) -> Outcome {
    let text = match family {
        "-" => read_source(None)?,
        f if f.starts_with('@') => read_source(Some(&f[1..]))?,
        f => f.to_string(),
    };
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::malformed(format!("family descriptor: invalid JSON: {e}")))?;
    let desc: FamilyDescriptor = from_value(value, "family descriptor")?;
    let op = construct(&desc)?;
    match (format, &op) {
        (Format::Text, ConstructedOperator::Homogeneous(h)) => {
            println!("degree {} psi = {}", h.degree(), render_vector(h.psi()))
        }
        (Format::Text, ConstructedOperator::Matrix(m)) => {
            for r in m.rows() {
                println!("{}", render_vector(r));
            }
        }
        (Format::Json, _) => print_json(&op),
    }
    Ok(0)
}

fn cmd_classify(
    identity: &str,
    weight: Option<&str>,
    degree: usize,
    n: usize,
    trials: usize,
    seed: u64,
    format: Format,
) -> Outcome {
    let kind = kind_of(identity, weight)?;
    let result = classify(&kind, degree, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unsound = None;
    for (i, f) in result.families.iter().enumerate() {
        for _ in 0..trials {
            let point = f.random_point(&mut rng, 1000);
            let m = f.matrix_at(&point)?;
            if !check_identity(&kind, &m).passed() && unsound.is_none() {
                unsound = Some((i, point));
            }
        }
    }
    match format {
        Format::Json => print_json(&result.to_json()),
        Format::Text => {
            println!("{kind} degree {degree} n={n}: {} families", result.families.len());
            for (i, f) in result.families.iter().enumerate() {
                let mut line = format!(
                    "  {}. ({})  free [{}]",
                    i + 1,
                    f.render_psi().join(", "),
                    f.free_names().join(", ")
                );
                let excluded: Vec<String> =
                    f.excluded().iter().map(|(p, v)| format!("{p} = {v}")).collect();
                if !excluded.is_empty() {
                    line.push_str(&format!("  excluding {}", excluded.join(", ")));
                }
                for s in f.singular() {
                    line.push_str(&format!("  excluding {s} = 0"));
                }
                println!("{line}");
            }
            for note in &result.notes {
                println!("  unresolved: {note}");
            }
        }
    }
    if let Some((i, point)) = unsound {
        let p: Vec<String> = point.iter().map(Scalar::to_string).collect();
        eprintln!("family {} fails the identity at ({})", i + 1, p.join(", "));
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

fn cmd_verify(
    n_max: usize,
    samples: usize,
    seed: u64,
    trials: usize,
    format: Format,
    mutant: Option<&str>,
) -> Outcome {
    let mutant = mutant
        .map(|m| m.parse::<PrintedEquation>())
        .transpose()?;
    let config = SuiteConfig {
        n_max,
        samples,
        seed,
        trials,
        mutant,
    };
    let report = run_suite(&config);
    match format {
        Format::Json => print_json(&report),
        Format::Text => {
            for row in &report.rows {
                println!("{row}");
            }
            println!(
                "{} rows: {} pass, {} finding, {} fail",
                report.rows.len(),
                report.passed,
                report.findings,
                report.failed
            );
        }
    }
    Ok(if report.all_passed() { 0 } else { EXIT_VIOLATION })
}
