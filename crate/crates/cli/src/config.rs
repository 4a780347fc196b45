//! Command-line surface and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use psilab_core::FieldChoice;

#[derive(Debug, Parser)]
#[command(name = "psilab", version, about = "Principal symmetric ideals: construction, inverse systems, betti tables and equivariant syzygies")]
pub struct Cli {
    /// Coefficient field: `q` (rationals) or `fp:<p>` (prime field).
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldChoice,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A polynomial given by file, or sampled from `(n, d, seed, bound)`.
#[derive(Debug, Clone, Args)]
pub struct PolySource {
    /// Polynomial file in the text syntax, e.g. `x1^2 - x2^2 + x1*x2`.
    #[arg(long)]
    pub poly: Option<PathBuf>,
    /// Number of variables (defaults to the largest index in the file).
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree of the sampled generator.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient bound for sampling: coefficients are nonzero integers in [−bound, bound].
    #[arg(long, default_value_t = 100)]
    pub bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiMode {
    Oracle,
    Formula,
    Both,
}

impl BettiMode {
    pub fn from_flags(oracle: bool, formula: bool) -> Self {
        if oracle {
            BettiMode::Oracle
        } else if formula {
            BettiMode::Formula
        } else {
            BettiMode::Both
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a seeded general homogeneous polynomial.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Build the explicit generator with variable-disjoint binomials and check dim I_d.
    Construct {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dimension of the orbit span of a polynomial.
    OrbitDim {
        #[command(flatten)]
        source: PolySource,
    },
    /// A graded piece of the inverse system.
    Inverse {
        #[command(flatten)]
        source: PolySource,
        /// The component (I^⊥)_{−j} is returned.
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Hilbert function, socle and narrowness classification.
    Classify {
        #[command(flatten)]
        source: PolySource,
        /// Degree cap for the artinian check.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Betti table by Koszul homology and/or the closed form.
    Betti {
        #[command(flatten)]
        source: PolySource,
        /// Koszul homology only.
        #[arg(long, conflicts_with_all = ["formula", "both"])]
        oracle: bool,
        /// Closed form only.
        #[arg(long, conflicts_with_all = ["oracle", "both"])]
        formula: bool,
        /// Both, compared (the default).
        #[arg(long, conflicts_with_all = ["oracle", "formula"])]
        both: bool,
    },
    /// Minimal resolution of the residue field and the Golod / Koszul properties.
    GolodCheck {
        #[command(flatten)]
        source: PolySource,
        #[arg(long, default_value_t = 4)]
        max_i: usize,
        /// Resource guard: maximal number of matrix entries held at once.
        #[arg(long, default_value_t = 400_000_000)]
        max_entries: usize,
    },
    /// Linear relations of the inverse-system generators m_λ − t_λ m_(d).
    Linrel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// JSON map from partitions to values, e.g. `{"2,1": "3", "1,1,1": "-1/2"}`.
        #[arg(long, conflicts_with_all = ["t_zero", "t_seed"])]
        t: Option<String>,
        /// Use t = 0.
        #[arg(long, conflicts_with = "t_seed")]
        t_zero: bool,
        /// Seeded integer parameters in [1, 1000].
        #[arg(long)]
        t_seed: Option<u64>,
    },
    /// Specht decomposition of Tor_i(A, k)_j.
    Equivariant {
        #[command(flatten)]
        source: PolySource,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<i32>,
    },
    /// Decomposition of a Schur character restricted to the symmetric group.
    Restrict {
        /// Partition, e.g. `3,1` or `(3,1)`.
        #[arg(long)]
        schur: String,
        #[arg(long)]
        n: usize,
    },
    /// Run the verification suites.
    VerifyPaper {
        /// One of all, cubic-n5, formula, fewvar, hilbert-socle, inverse-systems,
        /// linrel, duality, golod, equivariant, restriction.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text,
    Json,
}

/// Settings shared by every command.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub field: FieldChoice,
    pub seed: Option<u64>,
    pub coeff_bound: Option<u64>,
    pub degree_cap: Option<usize>,
    pub max_homological_i: Option<usize>,
    pub output: Output,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let mut cfg = RunConfig {
            n: None,
            d: None,
            field: cli.field,
            seed: None,
            coeff_bound: None,
            degree_cap: None,
            max_homological_i: None,
            output: if cli.json { Output::Json } else { Output::Text },
        };
        let take_source = |cfg: &mut RunConfig, s: &PolySource| {
            cfg.n = s.n;
            cfg.d = s.d;
            if s.poly.is_none() {
                cfg.seed = Some(s.seed);
                cfg.coeff_bound = Some(s.bound);
            }
        };
        match &cli.command {
            Command::Sample { n, d, seed, bound } => {
                cfg.n = Some(*n);
                cfg.d = Some(*d);
                cfg.seed = Some(*seed);
                cfg.coeff_bound = Some(*bound);
            }
            Command::Construct { d, n } => {
                cfg.n = *n;
                cfg.d = Some(*d);
            }
            Command::OrbitDim { source } | Command::Betti { source, .. } | Command::Equivariant { source, .. } => take_source(&mut cfg, source),
            Command::Inverse { source, cap, .. } | Command::Classify { source, cap } => {
                take_source(&mut cfg, source);
                cfg.degree_cap = *cap;
            }
            Command::GolodCheck { source, max_i, .. } => {
                take_source(&mut cfg, source);
                cfg.max_homological_i = Some(*max_i);
            }
            Command::Linrel { n, d, t_seed, .. } => {
                cfg.n = Some(*n);
                cfg.d = Some(*d);
                cfg.seed = *t_seed;
            }
            Command::Restrict { n, .. } => cfg.n = Some(*n),
            Command::VerifyPaper { .. } => {}
        }
        cfg
    }

    /// Validates the prime-field hypothesis `p > n·d` once `n` and `d` are known.
    pub fn validate(&self, n: usize, d: usize) -> psilab_core::Result<()> {
        self.field.validate(n, d)
    }
}
