//! Command-line arguments.

use clap::{Args, Parser, Subcommand, ValueEnum};
use weylwalk::paths::GraphKind;
use weylwalk::rational::parse_q_list;
use weylwalk::rootdata::CartanType;
use weylwalk::{Caps, RatWeight, Weight};

#[derive(Parser, Debug)]
#[command(name = "weylwalk", version, about = "Central measures and random walks on Littelmann-path graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub caps: CapArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    /// Largest representation dimension enumerated.
    #[arg(long, global = true, env = "WEYLWALK_DIM_CAP", default_value_t = Caps::default().dim)]
    pub dim_cap: u64,
    /// Largest number of vertices on a growth-graph level.
    #[arg(long, global = true, env = "WEYLWALK_LEVEL_CAP", default_value_t = Caps::default().level)]
    pub level_cap: usize,
    /// Largest number of words enumerated for exact laws.
    #[arg(long, global = true, env = "WEYLWALK_ENUM_CAP", default_value_t = Caps::default().enumeration)]
    pub enum_cap: u64,
}

impl CapArgs {
    pub fn caps(&self) -> Result<Caps, String> {
        if self.dim_cap == 0 || self.level_cap == 0 || self.enum_cap == 0 {
            return Err("caps must be positive".into());
        }
        Ok(Caps { dim: self.dim_cap, level: self.level_cap, enumeration: self.enum_cap })
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan data and Weyl group.
    Root {
        #[command(subcommand)]
        action: RootAction,
    },
    /// The crystal of Littelmann paths of `δ`.
    Crystal {
        #[command(subcommand)]
        action: CrystalAction,
    },
    /// Free or chamber growth graphs with path counts.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Dominant faces of the weight polytope.
    Polytope {
        #[command(subcommand)]
        action: PolytopeAction,
    },
    /// Central measures and their kernels.
    Measure {
        #[command(subcommand)]
        action: MeasureAction,
    },
    /// The drift map and its inverse.
    Drift {
        #[command(subcommand)]
        action: DriftAction,
    },
    /// Sample walks, or run a law-of-large-numbers check with `--reps`.
    Sample(SampleArgs),
    /// Run acceptance checks.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum RootAction {
    Info {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: CartanType,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    /// Cartan type, e.g. `A2`, `B3`, `G2`.
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    pub ty: CartanType,
    /// Dominant weight in fundamental-weight coordinates, e.g. `1,0`.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub delta: Weight,
}

#[derive(Subcommand, Debug)]
pub enum CrystalAction {
    Build {
        #[command(flatten)]
        model: ModelArgs,
        /// Emit Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Free,
    Chamber,
}

impl From<Mode> for GraphKind {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Free => GraphKind::Free,
            Mode::Chamber => GraphKind::Chamber,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum GraphAction {
    Build {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = Mode::Chamber)]
        mode: Mode,
        /// Number of levels.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolytopeAction {
    Faces {
        #[command(flatten)]
        model: ModelArgs,
        /// Also locate this point (fractions or decimals).
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        m: Option<RatWeight>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasureAction {
    Eval {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = Mode::Chamber)]
        mode: Mode,
        /// Drift of the measure (fractions or decimals).
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        m: RatWeight,
        /// Vertex at which to evaluate `p(λ, n)` and the kernel row.
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        lambda: Option<Weight>,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DriftAction {
    Invert {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        m: RatWeight,
    },
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t = Mode::Chamber)]
    pub mode: Mode,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub m: RatWeight,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    /// With more than one repetition, report the law-of-large-numbers check.
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or a criterion number from 1 to 10.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    /// Run on this model instead of the whole suite.
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type, requires = "delta")]
    pub ty: Option<CartanType>,
    #[arg(long, value_parser = parse_weight, requires = "ty")]
    pub delta: Option<Weight>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    One(u8),
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    if s == "all" {
        return Ok(Suite::All);
    }
    match s.parse::<u8>() {
        Ok(n) if (1..=10).contains(&n) => Ok(Suite::One(n)),
        _ => Err(format!("'{s}' is neither 'all' nor a criterion 1..10")),
    }
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse::<CartanType>().map_err(|e| format!("'{s}': {e}"))
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    let mut out = Vec::new();
    for tok in s.split(',') {
        out.push(tok.trim().parse::<i64>().map_err(|_| format!("'{tok}' is not an integer"))?);
    }
    if out.is_empty() || out.len() > weylwalk::MAX_RANK {
        return Err(format!("'{s}' needs 1 to {} coordinates", weylwalk::MAX_RANK));
    }
    Ok(Weight::new(&out))
}

fn parse_point(s: &str) -> Result<RatWeight, String> {
    let v = parse_q_list(s).map_err(|e| e.to_string())?;
    if v.is_empty() || v.len() > weylwalk::MAX_RANK {
        return Err(format!("'{s}' needs 1 to {} coordinates", weylwalk::MAX_RANK));
    }
    Ok(RatWeight::new(&v))
}
