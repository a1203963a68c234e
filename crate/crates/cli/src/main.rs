mod instance;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hghopf::hopf::{antipode_takeuchi, chi_direct, chi_polynomial, AntipodeSign, Species};
use hghopf::orientations::{chi_formula, count_pairs};
use hghopf::submonoids::count_tree_pairs;
use hghopf::verify::{resolve_scope, run_suite, CheckOptions};
use hghopf::RationalPoly;
use num::BigInt;

use instance::Instance;

/// Ground sets larger than this are only evaluated directly up to
/// `GUARD_N` unless forced.
const GUARD_VERTICES: usize = 10;
const GUARD_N: u64 = 6;

#[derive(Parser)]
#[command(name = "hghopf", version, about = "Basic invariant of hypergraphs and related species")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant polynomial of an instance.
    Poly {
        /// Instance file; standard input when absent or `-`.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Lift the size guard on direct summation.
        #[arg(long)]
        force: bool,
    },
    /// Evaluate the invariant at an integer; negative values are checked
    /// against the count of weakly compatible pairs.
    Eval {
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        force: bool,
    },
    /// Print the antipode as a linear combination.
    Antipode {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
    /// Run the verification suites.
    Check {
        /// Comma-separated suites or groups: all, lemmas, invariants,
        /// submonoids, or suite names.
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per Hopf axiom and species.
        #[arg(long, default_value_t = 200)]
        axiom_cases: usize,
        /// Use the antipode without signs (expected to fail reciprocity).
        #[arg(long)]
        unsigned_antipode: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Coeffs,
    Csv,
}

enum Failure {
    Mismatch(String),
    Invalid(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

fn read_instance(file: &Option<PathBuf>) -> Result<Instance, Failure> {
    let (name, text) = match file {
        Some(path) if path.as_os_str() != "-" => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Invalid(format!("standard input: {e}")))?;
            ("<stdin>".to_string(), text)
        }
    };
    instance::parse(&text).map_err(|e| Failure::Invalid(format!("{name}: {e}")))
}

fn guard(inst: &Instance, n: u64, force: bool) -> Result<(), Failure> {
    let k = inst.ground().len();
    if k > GUARD_VERTICES && n > GUARD_N && !force {
        return Err(Failure::Guard(format!(
            "{k} vertices at n = {n}: direct summation is refused above {GUARD_VERTICES} vertices for n > {GUARD_N}; pass --force to run it anyway"
        )));
    }
    Ok(())
}

fn render(p: &RationalPoly, format: Format) -> String {
    let coeffs = p.to_coeff_strings();
    match format {
        Format::Human => format!("{p}\ncoefficients: {}", serde_json::to_string(&coeffs).expect("strings")),
        Format::Coeffs => serde_json::to_string(&coeffs).expect("strings"),
        Format::Csv => {
            let mut out = String::from("degree,coefficient");
            for (i, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("\n{i},{c}"));
            }
            out
        }
    }
}

fn formula(inst: &Instance) -> Result<RationalPoly, Failure> {
    inst.as_hypergraph()
        .map(|h| chi_formula(&h))
        .ok_or_else(|| Failure::Invalid("the formula method applies to hypergraph, graph and simplicial instances".into()))
}

fn cmd_poly(file: &Option<PathBuf>, method: Method, format: Format, force: bool) -> Result<String, Failure> {
    let inst = read_instance(file)?;
    let direct = || -> Result<RationalPoly, Failure> {
        guard(&inst, inst.ground().len() as u64, force)?;
        Ok(with_species!(&inst, x => chi_polynomial(x)))
    };
    match method {
        Method::Direct => Ok(render(&direct()?, format)),
        Method::Formula => Ok(render(&formula(&inst)?, format)),
        Method::Both => {
            let (d, f) = (direct()?, formula(&inst)?);
            if d == f {
                Ok(render(&d, format))
            } else {
                Err(Failure::Mismatch(format!("methods disagree\ndirect:  {d}\nformula: {f}")))
            }
        }
    }
}

/// Pairs (orientation or binary tree, coloring with `[n]`) in weak
/// compatibility.
fn weak_pairs(inst: &Instance, n: usize) -> BigInt {
    match inst {
        Instance::Paths(alpha) => alpha
            .paths()
            .iter()
            .map(|p| BigInt::from(count_tree_pairs(p.len(), n, false)))
            .product(),
        other => BigInt::from(count_pairs(&other.as_hypergraph().expect("hypergraph kinds"), n, false)),
    }
}

fn cmd_eval(file: &Option<PathBuf>, n: i64, force: bool) -> Result<String, Failure> {
    let inst = read_instance(file)?;
    if n >= 0 {
        guard(&inst, n as u64, force)?;
        return Ok(with_species!(&inst, x => chi_direct(x, n as usize)).to_string());
    }
    let k = inst.ground().len();
    guard(&inst, (k as u64).max(n.unsigned_abs()), force)?;
    let value = with_species!(&inst, x => chi_polynomial(x))
        .eval_integer(n)
        .expect("integer-valued polynomial");
    let pairs = weak_pairs(&inst, n.unsigned_abs() as usize);
    let signed = if k % 2 == 0 { pairs.clone() } else { -pairs.clone() };
    let verdict = if value == signed { "MATCH" } else { "MISMATCH" };
    let report = format!("value: {value}\npairs: {pairs}\nverdict: {verdict}");
    if value == signed {
        Ok(report)
    } else {
        Err(Failure::Mismatch(report))
    }
}

fn cmd_antipode(file: &Option<PathBuf>, max_vertices: usize) -> Result<String, Failure> {
    let inst = read_instance(file)?;
    let k = inst.ground().len();
    if k == 0 {
        return Ok("empty instance: the antipode is the identity".into());
    }
    if k > max_vertices {
        return Err(Failure::Guard(format!(
            "{k} vertices exceed --max-vertices {max_vertices}: the antipode sums over all ordered set partitions, whose number grows faster than k!"
        )));
    }
    Ok(with_species!(&inst, x => {
        let s = antipode_takeuchi(x);
        s.terms().map(|(t, c)| format!("{c} × {}", t.fmt_term())).collect::<Vec<_>>().join("\n")
    }))
}

fn cmd_check(scope: &str, seed: u64, axiom_cases: usize, unsigned: bool) -> Result<String, Failure> {
    let suites = resolve_scope(scope).map_err(|e| Failure::Invalid(e.to_string()))?;
    let opts = CheckOptions {
        seed,
        antipode_sign: if unsigned { AntipodeSign::Unsigned } else { AntipodeSign::Takeuchi },
        axiom_cases,
    };
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&name| s.spawn(|| run_suite(name, &opts))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    let lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    let text = lines.join("\n");
    if reports.iter().all(|r| r.passed()) {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly { file, method, format, force } => cmd_poly(file, *method, *format, *force),
        Command::Eval { file, n, force } => cmd_eval(file, *n, *force),
        Command::Antipode { file, max_vertices } => cmd_antipode(file, *max_vertices),
        Command::Check { scope, seed, axiom_cases, unsigned_antipode } => {
            cmd_check(scope, *seed, *axiom_cases, *unsigned_antipode)
        }
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Mismatch(report) => println!("{report}"),
                Failure::Invalid(why) => eprintln!("error: {why}"),
                Failure::Guard(why) => eprintln!("refused: {why}"),
            }
            ExitCode::from(code)
        }
    }
}
