//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "symcert", version, about = "Exact algebra for symmetric-polynomial ideals")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Number of variables.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Variable names, comma separated (default x1..xn).
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Monomial order: lex or degrevlex.
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: String,
    /// Generators: p<k>, h<k>, e<k>, s[l1,l2,..], d<i>(<gen>) or polynomial text.
    #[arg(long, global = true)]
    pub gens: Option<String>,
    /// S-pair budget per Gröbner computation.
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_spairs: u64,
    /// Node budget for weight enumeration.
    #[arg(long, global = true, default_value_t = 200_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_enum: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include wall-clock timing in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Run data-parallel work on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Pow,
    Scale,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResidueFamily {
    /// p_c modulo <p_1, ..., p_(n-1)>.
    P,
    /// h_c modulo <h_1, h_4> in three variables.
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NewtonWhich {
    Eq1,
    Eq2,
    Eq3,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Expand one symmetric polynomial or generator expression.
    Gen {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Ring arithmetic. pow takes an exponent and scale a rational as second operand.
    Arith {
        #[arg(value_enum)]
        op: ArithOp,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Formal partial derivative in variable `--var` (1-based).
    Derive {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        var: usize,
    },
    /// Reduced Gröbner basis of --gens.
    Gb,
    /// Normal form of `--f` and membership in `--ideal` (or --gens).
    Member {
        #[arg(long)]
        f: String,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Equality of two ideals.
    Equal {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Krull dimension, height, and whether the radical is the irrelevant ideal.
    Dim,
    /// Whether --gens form a regular sequence.
    Regseq,
    /// Jacobian matrix, optionally with its minor ideal of size `--minors`.
    Jacobian {
        #[arg(long)]
        minors: Option<usize>,
        /// Keep rows as computed instead of dividing by their content.
        #[arg(long)]
        raw: bool,
    },
    /// Primality certificate for --gens.
    Prime,
    /// Join two prime ideals in disjoint variable sets.
    Combine {
        #[arg(long)]
        left: String,
        #[arg(long)]
        left_n: usize,
        #[arg(long)]
        right: String,
        #[arg(long)]
        right_n: usize,
    },
    /// Sufficient arithmetic condition for <p_a, p_b> to be prime.
    Precheck {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Weights n <= bound of vanishing sums of k-th powers of m-th roots of unity.
    Weights {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Whether a sum of powers of a primitive m-th root of unity vanishes.
    Vanish {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        /// Exponents, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        exps: String,
    },
    /// The m-th cyclotomic polynomial.
    Cyclotomic {
        #[arg(long)]
        m: u64,
    },
    /// Residue class of p_c or h_c.
    Residue {
        #[arg(value_enum)]
        family: ResidueFamily,
        #[arg(long)]
        c: u32,
    },
    /// Defect of a Newton identity (always zero).
    Newton {
        #[arg(value_enum)]
        which: NewtonWhich,
        #[arg(long)]
        index: u32,
    },
    /// Strong Lefschetz check for S/(--gens).
    Slp {
        /// Linear form (default x1 + ... + xn).
        #[arg(long, conflicts_with = "random_ell")]
        ell: Option<String>,
        /// Draw ℓ with coefficients in 1..=99 from --seed.
        #[arg(long)]
        random_ell: bool,
    },
    /// Hilbert function and standard monomials of S/(--gens).
    Hilbert,
    /// Initial ideal of --gens in --order.
    Initial,
    /// Conjecture sweep: ckw3, pab-regularity or h1-even.
    Scan {
        kind: String,
        #[arg(long)]
        max: u32,
        /// JSONL file of finished rows; read on start, appended as rows finish.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Run the fixture corpus.
    Fixtures {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Arith { .. } => "arith",
            Command::Derive { .. } => "derive",
            Command::Gb => "gb",
            Command::Member { .. } => "member",
            Command::Equal { .. } => "equal",
            Command::Dim => "dim",
            Command::Regseq => "regseq",
            Command::Jacobian { .. } => "jacobian",
            Command::Prime => "prime",
            Command::Combine { .. } => "combine",
            Command::Precheck { .. } => "precheck",
            Command::Weights { .. } => "weights",
            Command::Vanish { .. } => "vanish",
            Command::Cyclotomic { .. } => "cyclotomic",
            Command::Residue { .. } => "residue",
            Command::Newton { .. } => "newton",
            Command::Slp { .. } => "slp",
            Command::Hilbert => "hilbert",
            Command::Initial => "initial",
            Command::Scan { .. } => "scan",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}
