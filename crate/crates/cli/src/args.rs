use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "akalg", version, about = "Exact Schur elements and identity checks for Ariki-Koike algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur elements by every requested method, one record per multipartition.
    Schur(SchurArgs),
    /// Runs named verification suites.
    Verify(VerifyArgs),
    /// Lists the standard tableaux of one multipartition with d(t), residues and γ_t.
    Tableaux(ShapeArgs),
    /// Emits the matrix units f̃_st of one multipartition.
    Units(ShapeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendKind {
    Symbolic,
    Eval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Number of cyclotomic parameters Q_1..Q_r.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=7))]
    pub r: u64,
    /// Rank: the algebra has generators T_0..T_{n-1}.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = BackendKind::Symbolic)]
    pub backend: BackendKind,
    /// Seed for the evaluation point; required with `--backend eval`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest symbolic algebra dimension r^n·n! accepted.
    #[arg(long, default_value_t = 200)]
    pub max_dim: usize,
}

#[derive(Args, Debug)]
pub struct SchurArgs {
    #[command(flatten)]
    pub common: Common,
    /// Restrict to one multipartition, e.g. `((2),(1))`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Methods to compare (comma separated): trace, gamma, hook, symbol.
    #[arg(long, value_delimiter = ',', default_value = "trace,gamma,hook,symbol")]
    pub method: Vec<String>,
    /// Evaluate at a point instead, e.g. `q=1,Q1=-1,Q2=1`.
    #[arg(long)]
    pub specialize: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Suites (comma separated) or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<String>,
    /// Methods compared by the schur suite.
    #[arg(long, value_delimiter = ',', default_value = "trace,gamma,hook,symbol")]
    pub method: Vec<String>,
    /// Keep only records for this multipartition (and records without one).
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub lambda: String,
}
