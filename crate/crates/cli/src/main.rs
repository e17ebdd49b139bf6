use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use prelie_witt_cli::commands::{
    cmd_classify, cmd_cocycle, cmd_gen, cmd_modules, cmd_verify, FamilyFlags,
};
use prelie_witt_cli::table::FieldTag;

/// Exact construction, verification, classification and central extension
/// of graded left-symmetric structures on the Witt and Virasoro algebras.
///
/// Reports go to stdout as `key=value` lines; human-readable notes go to
/// stderr. Exit codes: 0 success/clean, 1 verification defects, 2 invalid
/// parameters, 3 parse error, 4 precondition failure.
///
/// Sweep parallelism is capped by the environment variable
/// `PRELIE_WITT_THREADS` (a positive integer).
#[derive(Parser)]
#[command(name = "prelie-witt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name: v-alpha-eps, v-beta-k, novikov, chapoton-a,
    /// chapoton-b or w1.
    #[arg(long)]
    family: Option<String>,
    /// Weight parameter (scalar literal).
    #[arg(long)]
    alpha: Option<String>,
    /// Deformation parameter (scalar literal).
    #[arg(long)]
    eps: Option<String>,
    /// Anti-diagonal parameter (scalar literal).
    #[arg(long)]
    beta: Option<String>,
    /// Integer weight offset of the v-beta-k family.
    #[arg(long)]
    k: Option<i64>,
    /// Parameter of the chapoton-a family (scalar literal).
    #[arg(long)]
    a: Option<String>,
    /// Parameter of the chapoton-b family (scalar literal).
    #[arg(long)]
    b: Option<String>,
}

impl From<&FamilyArgs> for FamilyFlags {
    fn from(args: &FamilyArgs) -> FamilyFlags {
        FamilyFlags {
            family: args.family.clone(),
            alpha: args.alpha.clone(),
            eps: args.eps.clone(),
            beta: args.beta.clone(),
            k: args.k,
            a: args.a.clone(),
            b: args.b.clone(),
        }
    }
}

fn parse_field(value: &str) -> Result<FieldTag, String> {
    match value {
        "gaussian" => Ok(FieldTag::Gaussian),
        "symbolic" => Ok(FieldTag::Symbolic),
        other => Err(format!("unknown field `{other}` (gaussian or symbolic)")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family's structure table on an index window.
    ///
    /// Concrete scalars use the gaussian literal grammar (e.g. `1/2`,
    /// `-2+1/3i`); with `--field symbolic`, parameters are expressions in
    /// the formal generators `alpha` and `eps`, and omitted parameters
    /// default to those generators.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Window half-width N (indices -N..=N).
        #[arg(short = 'N', long = "window")]
        window: i64,
        /// Output path for the table file.
        #[arg(long)]
        out: PathBuf,
        /// Scalar field: gaussian or symbolic.
        #[arg(long, default_value = "gaussian", value_parser = parse_field)]
        field: FieldTag,
    },
    /// Sweep the commutator and left-symmetry identities over a table.
    Verify {
        /// Structure table file.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Fit a structure table to the classified families (concrete field
    /// only) and print its isomorphism orbit.
    Classify {
        /// Structure table file.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Solve the central-extension conditions over a verified base
    /// (concrete field only).
    Cocycle {
        /// Structure table file for the base (alternative to family
        /// flags).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Window half-width N for the identity instances.
        #[arg(short = 'N', long = "window")]
        window: i64,
        /// Optional output path for the solved cocycle table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the bracket law on one of the weight modules.
    Modules {
        /// Module spec: feigin-fuchs, a-prime-01, a-alpha or b-beta.
        #[arg(long)]
        spec: String,
        /// Weight parameter (scalar literal).
        #[arg(long)]
        alpha: Option<String>,
        /// Second parameter (scalar literal).
        #[arg(long)]
        beta: Option<String>,
        /// Window half-width N.
        #[arg(short = 'N', long = "window")]
        window: i64,
        /// Scalar field: gaussian or symbolic.
        #[arg(long, default_value = "gaussian", value_parser = parse_field)]
        field: FieldTag,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Gen {
            family,
            window,
            out: out_path,
            field,
        } => cmd_gen(&family.into(), *field, *window, out_path, &mut out),
        Command::Verify { input } => cmd_verify(input, &mut out),
        Command::Classify { input } => cmd_classify(input, &mut out),
        Command::Cocycle {
            input,
            family,
            window,
            out: out_path,
        } => cmd_cocycle(
            input.as_deref(),
            &family.into(),
            *window,
            out_path.as_deref(),
            &mut out,
        ),
        Command::Modules {
            spec,
            alpha,
            beta,
            window,
            field,
        } => cmd_modules(
            spec,
            alpha.as_deref(),
            beta.as_deref(),
            *field,
            *window,
            &mut out,
        ),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
