//! The `ratrig` command line. JSON reports go to standard output and
//! diagnostics to standard error.
//!
//! Exit codes: 0 success, 1 a law check failed or a pinned value deviated,
//! 2 usage or configuration error, 3 degenerate input.

use clap::{Parser, Subcommand};

use crate::affine::{analyze_triangle, VectorTriangle};
use crate::codec::{
    parse_form, parse_vec, parse_vecs, to_json, TriangleReportJson, TripodReportJson,
};
use crate::error::Error;
use crate::examples::{self, ExampleName};
use crate::field::FieldSpec;
use crate::projective::{analyze_tripod, Tripod};
use crate::verify::{self, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ratrig",
    version,
    about = "Exact rational trigonometry over ℚ and prime fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a vector triangle.
    Triangle {
        /// `rational` or `prime:<p>`.
        #[arg(long, default_value = "rational")]
        field: String,
        /// `euclidean`, `minkowski` or a JSON 3×3 matrix of scalar strings.
        #[arg(long, default_value = "euclidean")]
        form: String,
        /// JSON array of three scalar strings.
        #[arg(long)]
        v1: String,
        #[arg(long)]
        v2: String,
        /// Defaults to `-v1 - v2`; otherwise the three must sum to zero.
        #[arg(long)]
        v3: Option<String>,
    },
    /// Analyze a tripod of three projective points.
    Tripod {
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long, default_value = "euclidean")]
        form: String,
        /// JSON array of three representatives.
        #[arg(long)]
        points: String,
    },
    /// Sweep every identity over random or exhaustive samples.
    Verify {
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long, default_value = "euclidean")]
        form: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
        /// Enumerate every tuple over F_p instead of sampling; the field becomes prime:<p>.
        #[arg(long, value_name = "P")]
        exhaustive: Option<u64>,
    },
    /// Replay a worked example.
    Example {
        /// methane, minkowski-affine or minkowski-projective.
        name: String,
        /// Common edge quadrance for methane.
        #[arg(long = "Q", value_name = "Q")]
        q: Option<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_degenerate_input() {
        EXIT_DEGENERATE
    } else {
        EXIT_USAGE
    }
}

fn report(json: String, failed: bool) -> Outcome {
    Outcome {
        code: if failed { EXIT_LAW_FAILED } else { EXIT_OK },
        stdout: json,
        stderr: if failed {
            "error: a law check failed\n".into()
        } else {
            String::new()
        },
    }
}

pub fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Triangle {
            field,
            form,
            v1,
            v2,
            v3,
        } => {
            let spec: FieldSpec = field.parse()?;
            let b = parse_form(spec, form)?;
            let (v1, v2) = (parse_vec(spec, v1)?, parse_vec(spec, v2)?);
            let t = match v3 {
                Some(v3) => VectorTriangle::new(v1, v2, parse_vec(spec, v3)?)?,
                None => VectorTriangle::from_two(v1, v2)?,
            };
            let r = analyze_triangle(&b, &t)?;
            Ok(report(
                to_json(&TriangleReportJson::new(&b, &t, &r)),
                r.any_failed(),
            ))
        }
        Command::Tripod {
            field,
            form,
            points,
        } => {
            let spec: FieldSpec = field.parse()?;
            let b = parse_form(spec, form)?;
            let [p1, p2, p3] = parse_vecs(spec, points)?;
            let t = Tripod::from_vectors(&p1, &p2, &p3)?;
            let r = analyze_tripod(&b, &t)?;
            Ok(report(
                to_json(&TripodReportJson::new(&b, &t, &r)),
                r.any_failed(),
            ))
        }
        Command::Verify {
            field,
            form,
            seed,
            cases,
            exhaustive,
        } => {
            let (spec, mode, note) = match *exhaustive {
                Some(p) => {
                    let spec = FieldSpec::prime(p)?;
                    let note = (field.parse::<FieldSpec>().ok() != Some(spec))
                        .then(|| format!("note: exhaustive sweep runs over {spec}, not {field}\n"));
                    (spec, Mode::Exhaustive { prime: p }, note)
                }
                None => (
                    field.parse()?,
                    Mode::Random {
                        seed: *seed,
                        cases: *cases,
                    },
                    None,
                ),
            };
            let b = parse_form(spec, form)?;
            let summary = verify::run(&b, mode)?;
            let mut out = report(to_json(&summary), summary.failures > 0);
            if summary.failures > 0 {
                out.stderr = format!("error: {} identity evaluations failed\n", summary.failures);
            }
            out.stderr = note.unwrap_or_default() + &out.stderr;
            Ok(out)
        }
        Command::Example { name, q } => {
            let name: ExampleName = name.parse()?;
            let q = q
                .as_deref()
                .map(|s| FieldSpec::rational().parse(s))
                .transpose()?;
            let out = examples::run(name, q.as_ref())?;
            let mut o = report(to_json(&out), out.any_failed());
            for d in out.deviations() {
                o.stderr.push_str(&format!("deviation: {d}\n"));
            }
            Ok(o)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(&cli.command).unwrap_or_else(|e| Outcome {
        code: exit_code(&e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}
