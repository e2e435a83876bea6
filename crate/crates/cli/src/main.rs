use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypergirth::geometry::GeometrySpec;
use hypergirth_cli::commands::{self, PlanArgs, Streams};
use hypergirth_cli::ops::{greedy_spec, parse_big, Op, TemplateSpec};
use hypergirth_cli::pipeline::PipelineOptions;
use hypergirth_cli::{oracle_budget, CliError};
use num_bigint::BigUint;

/// High-girth hypergraph constructions with exact verification.
///
/// Exit codes: 0 ok, 1 i/o, 2 parse or usage, 3 precondition,
/// 4 resource budget, 5 verification failure.
#[derive(Parser)]
#[command(name = "hypergirth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a bipartite incidence graph (bgt).
    Gen {
        #[command(subcommand)]
        geometry: Geometry,
    },
    /// Apply one transformation to a file.
    Transform {
        #[command(subcommand)]
        kind: Transform,
    },
    /// Compute the girth of a hgt or bgt file.
    Girth {
        input: PathBuf,
        /// Cross-check with the exhaustive oracle up to this cycle length
        /// (16 when given without a value).
        #[arg(long, num_args = 0..=1, default_missing_value = "16")]
        oracle_max: Option<u32>,
        /// Test hook: report a wrong fast-path girth.
        #[arg(long, hide = true)]
        corrupt_fast_path: bool,
    },
    /// Choose parameters for N vertices, or certify explicit (m, n).
    Plan {
        #[arg(long)]
        girth: u32,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        r: u64,
        /// Target vertex count, as a decimal of any length.
        #[arg(long = "N", value_parser = big, conflicts_with_all = ["m", "n"])]
        n_target: Option<BigUint>,
        #[arg(long, requires = "n")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        n: Option<u64>,
        /// Certificate output; printed after the summary when absent.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Run a recipe, verifying girth after every stage.
    Pipeline {
        recipe: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Record wall-clock time per stage (makes the report run-dependent).
        #[arg(long)]
        with_timings: bool,
    },
    /// Summarize a file, or re-verify a certificate or pipeline report.
    Report { file: PathBuf },
}

#[derive(Subcommand)]
enum Geometry {
    /// Projective plane PG(2, q).
    Plane {
        #[arg(long)]
        q: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Symplectic quadrangle W(q).
    Quadrangle {
        #[arg(long)]
        q: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split Cayley hexagon H(q).
    Hexagon {
        #[arg(long)]
        q: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded greedy graph with a girth floor.
    Greedy {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        girth: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Greedy report destination; stderr when absent.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Transform {
    /// Neighborhood hypergraph of a bipartite graph.
    Nbhd {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace every edge with k copies of a template.
    Substitute {
        input: PathBuf,
        /// edge:R, path:LEN:R or file:PATH
        #[arg(long)]
        template: String,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cut every edge into disjoint r-subsets.
    Split {
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Add isolated vertices up to N.
    Pad {
        input: PathBuf,
        #[arg(long, value_parser = big)]
        to: BigUint,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn big(s: &str) -> Result<BigUint, String> {
    parse_big(s).map_err(|e| e.to_string())
}

fn run(cli: Cli, io: &mut Streams) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { geometry } => {
            let (spec, output, report) = match geometry {
                Geometry::Plane { q, output } => (GeometrySpec::Plane { q }, output, None),
                Geometry::Quadrangle { q, output } => (GeometrySpec::Quadrangle { q }, output, None),
                Geometry::Hexagon { q, output } => (GeometrySpec::Hexagon { q }, output, None),
                Geometry::Greedy {
                    left,
                    right,
                    deg,
                    girth,
                    seed,
                    output,
                    report,
                } => (greedy_spec(left, right, deg, girth, seed), output, report),
            };
            commands::gen(&spec, output.as_deref(), report.as_deref(), io)
        }
        Command::Transform { kind } => {
            let (op, input, output) = match kind {
                Transform::Nbhd { input, output } => (Op::Nbhd, input, output),
                Transform::Substitute {
                    input,
                    template,
                    k,
                    output,
                } => {
                    let template: TemplateSpec = template.parse()?;
                    (Op::Substitute { template, k }, input, output)
                }
                Transform::Split { input, r, output } => (Op::Split { r }, input, output),
                Transform::Pad { input, to, output } => (Op::Pad { to }, input, output),
            };
            commands::transform(&op, &input, output.as_deref(), io)
        }
        Command::Girth {
            input,
            oracle_max,
            corrupt_fast_path,
        } => commands::girth(&input, oracle_max, oracle_budget()?, corrupt_fast_path, io),
        Command::Plan {
            girth,
            p,
            r,
            n_target,
            m,
            n,
            cert,
        } => commands::plan(
            &PlanArgs {
                girth,
                p,
                r,
                n_target,
                m,
                n,
                cert,
            },
            io,
        ),
        Command::Pipeline {
            recipe,
            out_dir,
            with_timings,
        } => {
            let opts = PipelineOptions {
                out_dir,
                with_timings,
                oracle_budget: oracle_budget()?,
            };
            commands::pipeline(&recipe, &opts, io)
        }
        Command::Report { file } => commands::report(&file, io),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let mut io = Streams {
        out: &mut out,
        err: &mut err,
    };
    let result = run(cli, &mut io);
    let _ = io.out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
