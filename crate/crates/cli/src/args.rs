use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "daha", version, about = "Exact Jack polynomial and rational qKZ toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the artifact to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallelism: Option<u16>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Phi,
    Interp,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Non-symmetric Jack polynomial ξ_λ over ℚ(κ).
    Jack(LambdaArgs),
    /// Shifted non-symmetric Jack polynomial E_λ over ℚ(κ).
    ShiftedJack {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Phi)]
        method: MethodArg,
    },
    /// ξ_λ (or E_λ with --method) at a rational κ.
    Specialize {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        kappa: String,
        /// Specialize the shifted polynomial built by this method.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Checks singularity of ξ_λ and shifted singularity of E_λ at κ₀.
    SingularCheck(SingularTarget),
    /// Checks the dDAHA relations in both representations.
    Relations {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        deg: usize,
    },
    /// Lists the singular values -l/m with 2 ≤ l ≤ n and m ≤ bound.
    SingularValues {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Builds the polynomial qKZ solution attached to a singular family.
    QkzBuild {
        #[command(flatten)]
        family: FamilyArgs,
        /// Subdivision d_1,…,d_N of n.
        #[arg(long, value_name = "D1,..,DN")]
        d: String,
        /// Also run every exact check (and the numeric one when --samples > 0).
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Verifies a serialized qKZ solution.
    QkzVerify {
        /// JSON file produced by qkz-build.
        #[arg(long, value_name = "FILE")]
        input: std::path::PathBuf,
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        kappa: String,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Checks the three-case formula for T_i E_μ.
    TAction {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Args, Debug)]
pub struct LambdaArgs {
    /// Number of variables (optional, must match the composition).
    #[arg(long)]
    pub n: Option<usize>,
    /// Composition, comma separated.
    #[arg(long, value_name = "A,B,..")]
    pub lambda: String,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub l: u32,
}

#[derive(Args, Debug)]
pub struct SingularTarget {
    #[arg(long)]
    pub n: Option<usize>,
    /// Explicit composition (requires --kappa).
    #[arg(long, requires = "kappa", conflicts_with_all = ["k", "r", "s", "m", "l"])]
    pub lambda: Option<String>,
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    pub kappa: Option<String>,
    #[arg(long, requires_all = ["r", "s", "m", "l"])]
    pub k: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
}

#[derive(Args, Debug)]
pub struct NumericArgs {
    /// Twist parameters p_1,…,p_N (defaults to all ones).
    #[arg(long, value_name = "P1,..,PN", allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Random sample points for the numeric check (0 skips it).
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
