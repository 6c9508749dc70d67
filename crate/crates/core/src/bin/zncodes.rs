//! Command-line front end: ring inspection, orthogonal-module computation,
//! code construction, minimality checking, length bounds, and minimum-length
//! search.
//!
//! Exit codes: 0 success, 1 error, 2 "ran fine but the checked code is not
//! minimal" (so pipelines can tell mathematical negatives from failures).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use zncodes::constructions::{build_recipe, RecipeName};
use zncodes::io::{parse_matrix, write_matrix};
use zncodes::{
    bounds_report, classify_root_word, double_perp, is_minimal_code, is_minimal_code_oracle,
    is_minimal_codeword, is_minimal_codeword_oracle, monotonicity_check, perp_basis, search_m_min,
    LinearCode, RingSpec, SearchConstraints, ZnVec, DEFAULT_THRESHOLD,
};

#[derive(Parser)]
#[command(name = "zncodes", version, about = "Minimal linear codes over Z_n")]
struct Cli {
    /// Cap on exhaustive enumerations (number of vectors).
    #[arg(long, global = true, env = "ZNCODES_THRESHOLD", default_value_t = DEFAULT_THRESHOLD)]
    threshold: u128,
    /// Worker threads for parallel sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Emit a key-sorted JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the structure of Z_n.
    RingInfo {
        #[arg(long)]
        n: u64,
    },
    /// Classify a vector and compute a generating set of its perp.
    Perp {
        #[arg(long)]
        n: u64,
        /// Comma-separated residues, e.g. "2,1,0".
        #[arg(long, value_delimiter = ',')]
        vector: Vec<u64>,
    },
    /// Emit a named column-set construction in the matrix text format.
    Construct {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum)]
        recipe: Recipe,
    },
    /// Decide minimality of the code in a matrix file.
    Check {
        /// Path to a matrix text file ("-" for standard input).
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Check this single message (comma-separated) instead of the whole code.
        #[arg(long, value_delimiter = ',')]
        message: Option<Vec<u64>>,
        /// Check every nonzero message instead of unit-orbit representatives.
        #[arg(long)]
        full_sweep: bool,
    },
    /// Report length bounds for minimal codes of dimension k over Z_n.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustively find the least length admitting a minimal code.
    SearchMmin {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m_cap: usize,
        /// Drop the k=1 requirement that the column set contain a unit.
        #[arg(long)]
        no_unit_constraint: bool,
        /// Restrict candidate columns to root words.
        #[arg(long)]
        root_words_only: bool,
        /// Additionally verify lengths m_min+1 .. m_min+EXTRA stay minimal.
        #[arg(long, default_value_t = 0)]
        verify_extra: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Recipe {
    Lambda0,
    Lambda0Bi,
    OnedimNaive,
    OnedimGcd,
    RootWordsModUnits,
}

impl From<Recipe> for RecipeName {
    fn from(r: Recipe) -> RecipeName {
        match r {
            Recipe::Lambda0 => RecipeName::Lambda0,
            Recipe::Lambda0Bi => RecipeName::Lambda0Bi,
            Recipe::OnedimNaive => RecipeName::OneDimNaive,
            Recipe::OnedimGcd => RecipeName::OneDimGcd,
            Recipe::RootWordsModUnits => RecipeName::RootWordsModUnits,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Oracle,
    Criterion,
    Both,
}

fn print_json<T: serde::Serialize>(value: &T) -> zncodes::Result<()> {
    // serde_json maps are ordered, so round-tripping through Value sorts keys
    let v = serde_json::to_value(value).expect("report serialization");
    println!("{}", serde_json::to_string_pretty(&v).expect("json printing"));
    Ok(())
}

fn run(cli: &Cli) -> zncodes::Result<bool> {
    match &cli.command {
        Command::RingInfo { n } => {
            let ring = RingSpec::new(*n)?;
            if cli.json {
                print_json(&json!({
                    "n": ring.n(),
                    "shape": ring.shape().name(),
                    "factors": ring.factors(),
                    "phi": ring.phi(),
                    "units": ring.units().len(),
                    "zero_divisors": ring.zero_divisors().len(),
                }))?;
            } else {
                println!("Z_{}", ring.n());
                println!("shape: {}", ring.shape().name());
                let factors: Vec<String> = ring
                    .factors()
                    .iter()
                    .map(|(p, e)| format!("{p}^{e}"))
                    .collect();
                println!("factorization: {}", factors.join(" * "));
                println!("phi(n): {}", ring.phi());
                println!("units: {}", ring.units().len());
                println!("zero divisors: {}", ring.zero_divisors().len());
            }
            Ok(true)
        }
        Command::Perp { n, vector } => {
            let ring = RingSpec::new(*n)?;
            let v = ZnVec::new(ring, vector.clone());
            let class = classify_root_word(&v);
            let basis = perp_basis(&v)?;
            let span = basis.span()?;
            let dp = double_perp(&v)?;
            if cli.json {
                print_json(&json!({
                    "classification": class,
                    "basis": basis,
                    "perp_cardinality": span.cardinality().to_string(),
                    "double_perp_cardinality": dp.cardinality().to_string(),
                }))?;
            } else {
                println!("v = {v} over Z_{n}");
                println!("root word: {}", class.is_root);
                if let Some(w) = class.witness {
                    println!("annihilated by: {w}");
                }
                println!("perp generators:");
                for g in &basis.generators {
                    println!("  {g}");
                }
                println!("perp cardinality: {}", span.cardinality());
                println!("double perp cardinality: {}", dp.cardinality());
            }
            Ok(true)
        }
        Command::Construct { n, k, recipe } => {
            let ring = RingSpec::new(*n)?;
            let (lambda, recipe) = build_recipe((*recipe).into(), &ring, *k)?;
            if cli.json {
                let columns: Vec<&[u64]> =
                    lambda.columns().iter().map(|c| c.entries()).collect();
                print_json(&json!({
                    "recipe": recipe.name,
                    "n": ring.n(),
                    "k": lambda.k(),
                    "m": lambda.m(),
                    "predicted_length": recipe.predicted_length.map(|l| l.to_string()),
                    "columns": columns,
                }))?;
            } else {
                print!("{}", write_matrix(&lambda));
            }
            Ok(true)
        }
        Command::Check {
            input,
            method,
            message,
            full_sweep,
        } => {
            let text = if input == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(input)?
            };
            let lambda = parse_matrix(&text)?;
            let code = LinearCode::new(lambda)?;
            let reports = match (message, method) {
                (Some(msg), m) => {
                    let v = ZnVec::new(code.ring().clone(), msg.clone());
                    let mut rs = Vec::new();
                    if *m != Method::Criterion {
                        rs.push(is_minimal_codeword_oracle(&v, &code, cli.threshold)?);
                    }
                    if *m != Method::Oracle {
                        rs.push(is_minimal_codeword(&v, &code)?);
                    }
                    rs
                }
                (None, m) => {
                    let mut rs = Vec::new();
                    if *m != Method::Criterion {
                        rs.push(is_minimal_code_oracle(&code, cli.threshold)?);
                    }
                    if *m != Method::Oracle {
                        rs.push(is_minimal_code(&code, cli.threshold, *full_sweep)?);
                    }
                    rs
                }
            };
            let verdict = reports.iter().all(|r| r.verdict);
            if reports.iter().any(|r| r.verdict != verdict) {
                return Err(zncodes::Error::Unsupported(
                    "oracle and criterion disagree; this indicates an internal bug".into(),
                ));
            }
            if cli.json {
                print_json(&json!({
                    "injective_encoding": code.injective_encoding(),
                    "reports": reports,
                }))?;
            } else {
                for r in &reports {
                    println!(
                        "[{}, {}]_{} code, method {:?}: {}",
                        r.m,
                        r.k,
                        r.n,
                        r.method,
                        if r.verdict { "minimal" } else { "not minimal" }
                    );
                    if let Some(ce) = &r.counterexample {
                        println!("  counterexample: {}", ce.reason);
                    }
                    for f in &r.per_message_failures {
                        println!("  fails at message {:?}", f);
                    }
                }
            }
            Ok(verdict)
        }
        Command::Bounds { n, k } => {
            let ring = RingSpec::new(*n)?;
            let report = bounds_report(&ring, *k, cli.threshold)?;
            if cli.json {
                print_json(&report)?;
            } else {
                println!("bounds for dimension {k} over Z_{n}:");
                println!("  upper (construction length): {}", report.upper_bound);
                if let Some(p) = report.projective_bound {
                    println!("  root-word orbits: {p}");
                }
                if let Some(lo) = report.lower_bound_exact {
                    println!("  lower (exact quotient): {lo}");
                }
                if let Some(lo) = report.lower_bound_paper {
                    println!("  lower (closed form): {lo}");
                }
                for note in &report.notes {
                    println!("  note: {note}");
                }
            }
            Ok(true)
        }
        Command::SearchMmin {
            n,
            k,
            m_cap,
            no_unit_constraint,
            root_words_only,
            verify_extra,
        } => {
            let ring = RingSpec::new(*n)?;
            let constraints = SearchConstraints {
                require_unit_column: !no_unit_constraint,
                root_words_only: *root_words_only,
            };
            let report = search_m_min(&ring, *k, *m_cap, constraints, cli.threshold)?;
            let longer_ok = if *verify_extra > 0 && report.witness.is_some() {
                Some(monotonicity_check(&report, &ring, *verify_extra, cli.threshold)?)
            } else {
                None
            };
            if cli.json {
                print_json(&json!({
                    "report": report,
                    "longer_lengths_verified": longer_ok,
                }))?;
            } else {
                match report.m_min {
                    Some(m) => {
                        println!("m_min({k}; {n}) = {m}");
                        println!("witness columns:");
                        for c in report.witness.as_ref().expect("witness present") {
                            let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                            println!("  ({})", parts.join(","));
                        }
                    }
                    None => println!("no minimal code of length <= {m_cap} found"),
                }
                println!(
                    "examined {} subsets, pruned {}, pool size {}",
                    report.subsets_examined, report.subsets_pruned, report.candidates
                );
                if let Some(ok) = longer_ok {
                    println!(
                        "lengths up to m_min+{verify_extra} verified minimal: {ok}"
                    );
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .expect("rayon pool is configured once, before any parallel work");
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
