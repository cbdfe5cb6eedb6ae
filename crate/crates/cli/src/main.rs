//! Command-line front end: compute `X_G`, chromatic polynomials and insertion
//! tableaux, and run the exhaustive identity checks.
//!
//! Exit codes: 0 success, 1 identity failure, 2 parse or usage error,
//! 3 size cap exceeded, 4 precondition violated.

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chromsym::combin::{chromatic_symmetric_function, Sequencing, SEQUENCING_CAP};
use chromsym::expansions::{chromatic_polynomial, xi_transfer};
use chromsym::io::{load, qsym_to_json, sww_output_to_json, sym_to_json, Input};
use chromsym::qsym::sym_to_fundamental;
use chromsym::tableaux::sww_insert;
use chromsym::{BigInt, Basis, Error, QSymFn, SymFn};

#[derive(Parser)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions and their quasi-symmetric expansions")]
struct Cli {
    /// Aligned text instead of JSON
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// X_G of a graph (or of the incomparability graph of a poset)
    Xg {
        /// file path, or a fixture such as graph:K3 or poset:N
        input: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        #[arg(long, default_value_t = SEQUENCING_CAP)]
        max_vertices: usize,
    },
    /// Value of the chromatic polynomial at n
    Chrompoly {
        input: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = SEQUENCING_CAP)]
        max_vertices: usize,
    },
    /// Exhaustive check of an identity over all labelled objects up to a size
    Verify {
        #[arg(value_enum)]
        identity: verify::Identity,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// worker threads; 0 picks one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Insertion and recording tableaux of one sequencing of a poset
    Sww {
        poset: String,
        /// comma-separated element names, e.g. d,a,c,b
        #[arg(long)]
        sequencing: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    Mt,
    P,
    E,
    H,
    S,
    Xi,
    #[value(name = "Q")]
    Q,
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::NotThreePlusOneFree(_) | Error::ContainsN(_) => 4,
            Error::InsertionInvariant(_) => 1,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

fn load_capped(input: &str, cap: usize) -> Result<Input, CliError> {
    let loaded = load(input)?;
    let n = loaded.graph().len();
    if n > cap {
        return Err(Error::CapExceeded { what: "vertex count", size: n, cap }.into());
    }
    Ok(loaded)
}

fn human_sym(f: &SymFn) -> String {
    let rows: Vec<(String, String)> = f.terms().map(|(l, c)| (c.to_string(), format!("{}[{l}]", f.basis()))).collect();
    aligned(&rows)
}

fn human_qsym(f: &QSymFn) -> String {
    let rows: Vec<(String, String)> =
        f.terms().map(|(s, c)| (c.to_string(), format!("Q[{{{s}}},{}]", s.degree()))).collect();
    aligned(&rows)
}

fn aligned(rows: &[(String, String)]) -> String {
    if rows.is_empty() {
        return "0".into();
    }
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().map(|(a, b)| format!("{a:>w$}  {b}")).collect::<Vec<_>>().join("\n")
}

fn cmd_xg(input: &str, basis: BasisArg, cap: usize, human: bool) -> Result<String, CliError> {
    let g = load_capped(input, cap)?.graph();
    let x: SymFn = chromatic_symmetric_function(&g);
    let target = match basis {
        BasisArg::Q => {
            let q = sym_to_fundamental(&x)?;
            return Ok(if human { human_qsym(&q) } else { qsym_to_json(&q).to_string() });
        }
        BasisArg::Xi => None,
        BasisArg::M => Some(Basis::M),
        BasisArg::Mt => Some(Basis::MTilde),
        BasisArg::P => Some(Basis::P),
        BasisArg::E => Some(Basis::E),
        BasisArg::H => Some(Basis::H),
        BasisArg::S => Some(Basis::S),
    };
    let f = match target {
        Some(b) => x.convert(b)?,
        None => xi_transfer(&sym_to_fundamental(&x)?),
    };
    Ok(if human { human_sym(&f) } else { sym_to_json(&f).to_string() })
}

fn cmd_chrompoly(input: &str, n: u64, cap: usize, human: bool) -> Result<String, CliError> {
    let g = load_capped(input, cap)?.graph();
    let poly = chromatic_polynomial(&g)?;
    let value = poly.eval(&BigInt::from(n));
    Ok(if human { format!("P({n}) = {value}\nP(n) = {poly}") } else { value.to_string() })
}

fn cmd_sww(input: &str, sequencing: &str, human: bool) -> Result<String, CliError> {
    let p = match load(input)? {
        Input::Poset(p) => p,
        Input::Graph(_) => return Err(CliError::usage(format!("{input} is a graph, expected a poset"))),
    };
    let names: Vec<&str> = sequencing.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let s = Sequencing::from_names(p.names(), &names)?;
    let out = sww_insert(&p, &s)?;
    if !human {
        return Ok(sww_output_to_json(&out, p.names()).to_string());
    }
    let mut lines = vec![format!("insertion: {}", out.insertion.display_with(p.names()))];
    lines.push(format!("recording: {}", out.recording));
    let trace = sww_output_to_json(&out, p.names());
    for step in trace["trace"].as_array().into_iter().flatten() {
        let actions: Vec<String> = step["actions"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|a| {
                let mut s = format!("{} row {}", a["action"].as_str().unwrap_or(""), a["row"]);
                if let Some(b) = a.get("bumped").and_then(Value::as_str) {
                    s += &format!(" out {b}");
                }
                s
            })
            .collect();
        lines.push(format!("  {}: {}", step["element"].as_str().unwrap_or(""), actions.join("; ")));
    }
    Ok(lines.join("\n"))
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    let out = match cli.command {
        Command::Xg { input, basis, max_vertices } => cmd_xg(&input, basis, max_vertices, cli.human)?,
        Command::Chrompoly { input, n, max_vertices } => cmd_chrompoly(&input, n, max_vertices, cli.human)?,
        Command::Sww { poset, sequencing } => cmd_sww(&poset, &sequencing, cli.human)?,
        Command::Verify { identity, max_size, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::usage(format!("cannot start workers: {e}")))?;
            let summary = pool.install(|| verify::run(identity, max_size))?;
            let code = if summary.passed() { 0 } else { 1 };
            let text = if cli.human { summary.human() } else { summary.to_json().to_string() };
            return Ok((text, code));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let human = cli.human;
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            if human {
                eprintln!("error: {}", e.message);
            } else {
                eprintln!("{}", json!({"error": e.message, "exit_code": e.code}));
            }
            ExitCode::from(e.code)
        }
    }
}
