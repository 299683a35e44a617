//! Command-line front door: build polygons, search sign vectors,
//! reproduce the comparison tables, verify the construction's
//! invariants, and render figures.

mod commands;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use construct::ConstructError;
use render::RenderError;
use report::ReportError;
use signopt::SignOptError;

/// A failed invocation: what to print on stderr and which code to exit
/// with. 2 means a parameter problem, 3 an engine capacity limit, 4 a
/// violated invariant or validation failure.
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

pub type CmdResult<T> = Result<T, CmdError>;

fn signopt_code(e: &SignOptError) -> i32 {
    match e {
        SignOptError::Parameter(_) => 2,
        SignOptError::Capacity(_) => 3,
        SignOptError::Numerical(_) => 4,
    }
}

fn construct_code(e: &ConstructError) -> i32 {
    match e {
        ConstructError::Parameter(_) | ConstructError::OutOfScope(_) => 2,
        ConstructError::SignOpt(inner) => signopt_code(inner),
        _ => 4,
    }
}

impl From<SignOptError> for CmdError {
    fn from(e: SignOptError) -> Self {
        CmdError { code: signopt_code(&e), message: e.to_string() }
    }
}

impl From<ConstructError> for CmdError {
    fn from(e: ConstructError) -> Self {
        CmdError { code: construct_code(&e), message: e.to_string() }
    }
}

impl From<ReportError> for CmdError {
    fn from(e: ReportError) -> Self {
        let code = match &e {
            ReportError::Construct(inner) => construct_code(inner),
            ReportError::SignOpt(inner) => signopt_code(inner),
            ReportError::Parse(_) => 2,
            ReportError::Ordering(_) => 4,
        };
        CmdError { code, message: e.to_string() }
    }
}

impl From<RenderError> for CmdError {
    fn from(e: RenderError) -> Self {
        CmdError { code: 2, message: e.to_string() }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError { code: 2, message: format!("io failure: {e}") }
    }
}

/// Which sign-vector engine a command should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    /// Pick per size: exhaustive, then meet-in-the-middle, then blocks.
    Auto,
    /// Enumerate every canonical vector.
    Exhaustive,
    /// Meet-in-the-middle over two half-spaces.
    Mitm,
    /// Repeated block expansion of a smaller optimum.
    Block,
}

#[derive(Parser)]
#[command(name = "smallpoly", version, about = "Convex small polygons with near-maximal perimeter and width")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polygon and emit it as JSON.
    Build(BuildArgs),
    /// Minimize the signed sine sum and report M, sigma, delta, and the vector.
    Msearch(MsearchArgs),
    /// Emit the perimeter/width comparison table.
    Table(TableArgs),
    /// Run the per-size invariant suite and print a PASS/FAIL ledger.
    Verify(VerifyArgs),
    /// Draw a polygon as an SVG figure.
    Render(RenderArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Build the regular n-gon baseline instead of the chain polygon.
    #[arg(long, conflicts_with = "reinhardt")]
    regular: bool,
    /// Build the Reinhardt polygon over this odd base m instead.
    #[arg(long, value_name = "M")]
    reinhardt: Option<u32>,
}

#[derive(Args)]
struct EngineArgs {
    /// Sign-vector engine.
    #[arg(long, value_enum, default_value_t = EngineArg::Block)]
    engine: EngineArg,
    /// Memory ceiling for the meet-in-the-middle table, in MiB.
    /// Falls back to SMALLPOLY_MITM_MEMORY_BUDGET_MB, then 2048.
    #[arg(long, value_name = "MB")]
    mitm_memory_budget_mb: Option<u64>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    engine: EngineArgs,
    /// Force the turning angle to zero to demonstrate the closure check.
    #[arg(long)]
    debug_delta_zero: bool,
    /// Write the JSON here and print a metrics summary instead.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct MsearchArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Sign-vector engine.
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Memory ceiling for the meet-in-the-middle table, in MiB.
    #[arg(long, value_name = "MB")]
    mitm_memory_budget_mb: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    /// Comma-separated vertex counts.
    #[arg(long, default_value = "16,32,64,128")]
    n: String,
    #[command(flatten)]
    engine: EngineArgs,
    /// csv or json.
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated vertex counts.
    #[arg(long, default_value = "16,32,64")]
    n: String,
    /// Run the zero-turning-angle diagnostic, which must fail closure.
    #[arg(long)]
    debug_delta_zero: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    engine: EngineArgs,
    /// Canvas edge in pixels.
    #[arg(long, default_value_t = 600)]
    canvas_px: u32,
    /// Empty border as a fraction of the canvas.
    #[arg(long, default_value_t = 0.08)]
    margin_frac: f64,
    /// Boundary color.
    #[arg(long, default_value = "blue")]
    side_color: String,
    /// Diameter-chord color.
    #[arg(long, default_value = "black")]
    diameter_color: String,
    /// Number the vertices.
    #[arg(long)]
    labels: bool,
    /// Caption under the figure.
    #[arg(long, default_value = "")]
    caption: String,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build(args) => commands::build(args),
        Command::Msearch(args) => commands::msearch(args),
        Command::Table(args) => commands::table(args),
        Command::Verify(args) => commands::run_verify(args),
        Command::Render(args) => commands::render_figure(args),
    };
    match outcome {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
