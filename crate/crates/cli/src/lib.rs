//! Command-line front end: argument parsing, JSON reports and the golden suite.

mod commands;
pub mod golden;
mod input;
pub mod report;

use clap::{Args, Parser, Subcommand};
use gorenstein::FieldSpec;
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gorenstein", version, about = "Graded Artinian Gorenstein algebras via inverse systems")]
pub struct Cli {
    /// Field characteristic: 0 for the rationals, otherwise a prime.
    #[arg(long = "char", global = true)]
    pub char: Option<u64>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Macaulay bounds and O-sequences.
    #[command(subcommand)]
    Oseq(OseqCmd),
    /// Inverse systems and dual generators.
    #[command(subcommand)]
    Inv(InvCmd),
    /// Nets of quadrics in four variables.
    #[command(subcommand)]
    Net(NetCmd),
    /// Gorenstein sequences.
    #[command(subcommand)]
    Gor(GorCmd),
    /// Free resolutions.
    #[command(subcommand)]
    Res(ResCmd),
    /// Run the golden fixtures.
    Golden(GoldenArgs),
}

#[derive(Subcommand, Debug)]
pub enum OseqCmd {
    /// Macaulay expansion of c in degree d.
    Expand {
        #[arg(short)]
        c: i64,
        #[arg(short)]
        d: i64,
    },
    /// c^(d).
    Growth {
        #[arg(short)]
        c: i64,
        #[arg(short)]
        d: i64,
    },
    /// O-sequence test.
    Check {
        #[arg(short = 'H')]
        h: String,
    },
    /// Symmetry and the SI condition.
    Si {
        #[arg(short = 'H')]
        h: String,
    },
    /// Gotzmann regularity of a Hilbert polynomial, given directly or as p_{c,d}.
    Regularity {
        #[arg(long, conflicts_with_all = ["c", "d"])]
        poly: Option<String>,
        #[arg(short, requires = "d")]
        c: Option<i64>,
        #[arg(short, requires = "c")]
        d: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum InvCmd {
    /// Hilbert function and generators of Ann(F).
    Hilbert {
        #[arg(short)]
        f: String,
    },
    /// Degree-d slice of Ann(F).
    Ann {
        #[arg(short)]
        f: String,
        #[arg(short)]
        d: u32,
    },
    /// α(J) for a ternary G and the shapes of B and C.
    Alpha {
        #[arg(short)]
        g: String,
    },
    /// Analysis of F = G + WZ^[j-1], optionally under G + λZ^[j].
    W2 {
        #[arg(short)]
        g: String,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
    },
    /// I = (J', wx, wy, wz, w^j − g).
    BuildVw {
        #[arg(short)]
        g: String,
        #[arg(long)]
        gpoly: String,
    },
    /// Sum of j-th divided powers of the given linear forms.
    Powersum {
        #[arg(short)]
        p: String,
        #[arg(short)]
        j: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum NetCmd {
    /// Stratum, relations, common factor and Hilbert prefix of a net.
    Classify {
        #[arg(short)]
        v: String,
    },
    /// Dimension of the PGL(4) orbit of a net.
    OrbitDim {
        #[arg(short)]
        v: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GorCmd {
    /// Decide whether H is a Gorenstein sequence.
    Decide {
        #[arg(short = 'H')]
        h: String,
    },
    /// Largest and smallest b for H = (1,4,7,h,b,...).
    Bmax { h: i64 },
    /// Whether the Gorenstein locus meets the V,W family for H.
    Ch {
        #[arg(short = 'H')]
        h: String,
    },
    /// dim R_j/(I²)_j and the V,W tangent identity.
    Tangent {
        #[arg(short)]
        f: String,
    },
    /// Two members with Hilbert function H in different strata.
    Witness {
        #[arg(short = 'H')]
        h: String,
    },
    /// Monomial ideal with Hilbert function T from the J or K family.
    Monomial {
        #[arg(short = 'T')]
        t: String,
        #[arg(long)]
        family: Option<char>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ResCmd {
    /// Assemble the complex for (J, g, j) from the alternating matrix phi.
    Build {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        g: String,
        #[arg(short)]
        j: u32,
    },
    /// Check compositions, minimality, Euler characteristic and Betti symmetry.
    Verify {
        #[arg(short)]
        c: String,
        #[arg(short = 'H')]
        h: String,
        /// Last degree of the Euler characteristic check (default j + 4).
        #[arg(long)]
        up_to: Option<i64>,
    },
    /// Koszul complex on x, y, z.
    Koszul,
}

#[derive(Args, Debug)]
pub struct GoldenArgs {
    /// Read fixtures from this directory instead of the built-in set.
    #[arg(long)]
    pub dir: Option<std::path::PathBuf>,
    /// Write the built-in fixtures to this directory and exit.
    #[arg(long, conflicts_with = "dir")]
    pub export: Option<std::path::PathBuf>,
}

/// What a command produced: its results, the seed if it used one, and whether a check failed.
pub struct Outcome {
    pub results: Value,
    pub seed: Option<u64>,
    pub failed: bool,
}

/// Output of a full invocation.
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<gorenstein::Error>() {
        Some(err) if err.is_verification() => EXIT_VERIFICATION,
        _ => EXIT_DOMAIN,
    }
}

fn field_flag(c: Option<u64>) -> anyhow::Result<Option<FieldSpec>> {
    Ok(match c {
        Some(c) => Some(FieldSpec::from_characteristic(c)?),
        None => None,
    })
}

/// Runs a command and returns its report, without writing `--out`.
pub fn execute(cli: &Cli, echo: &[String]) -> anyhow::Result<(Value, bool)> {
    let field = field_flag(cli.char)?;
    let mut log = report::InputLog::default();
    if let Some(c) = cli.char {
        input::scalar_arg(&mut log, "char", &c.to_string());
    }
    let out = commands::dispatch(&cli.command, field, cli.seed, &mut log)?;
    Ok((report::build(echo, &log, out.results, out.seed), out.failed))
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("gorenstein".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Execution { code, stdout: text, stderr: String::new() }
            } else {
                Execution { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = echo_args(&args);
    match execute(&cli, &echo) {
        Ok((rep, failed)) => {
            let text = report::emit(&rep);
            let code = if failed { EXIT_VERIFICATION } else { EXIT_OK };
            match &cli.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Execution { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Execution {
                        code: EXIT_DOMAIN,
                        stdout: String::new(),
                        stderr: format!("error: writing {}: {e}\n", path.display()),
                    },
                },
                None => Execution { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Execution {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

/// Arguments with `--out` and its value removed.
fn echo_args(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--out" {
            skip = true;
        } else if !a.starts_with("--out=") {
            out.push(a.clone());
        }
    }
    out
}
