//! Command-line front end: parse a diagram, compute invariants, print
//! tables or JSON.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse/validation error,
//! 3 resource-guard refusal.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use mubar::diagram::{self, LinkDiagram, MoveSpec};
use mubar::error::MilnorError;
use mubar::linking;
use mubar::milnor::{MilnorEngine, MilnorTable};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "mubar", about = "Linking numbers and Milnor invariants of links", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Path to a PD-code file (one diagram per file, or per line)
    #[arg(long, value_name = "PATH", conflicts_with = "braid")]
    pd: Option<String>,
    /// Braid word such as "1 -2 1", closed up into a link
    #[arg(long, value_name = "WORD", requires = "strands")]
    braid: Option<String>,
    /// Strand count for --braid
    #[arg(long, value_name = "N")]
    strands: Option<usize>,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the linking matrix (diagonal: writhe)
    Lk(LkArgs),
    /// Print the Milnor invariant table up to length k
    Milnor(MilnorArgs),
    /// Apply local moves and print the moved diagram plus summaries
    Moves(MovesArgs),
    /// Cross-check mu against the independent series fixed-point oracle
    Oracle(OracleArgs),
}

#[derive(Args)]
struct LkArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct MilnorArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Maximum invariant length
    #[arg(short, default_value_t = 3)]
    k: usize,
    /// Override the table-size resource guard
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct MovesArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Moves to apply, in order. Examples: "r1:arc=2,sign=-1",
    /// "r1:arc=2,sign=1,over_first", "r1rm:crossing=0",
    /// "r2:over=1,under=5,sign=1", "r2rm:c1=0,c2=1",
    /// "r3:c1=0,c2=1,lower=2", "cc:crossing=0", "scc:crossing=0",
    /// "delta:a=0,b=1,c=2"
    #[arg(long = "apply", value_name = "MOVE")]
    moves: Vec<String>,
    /// Apply this many random R1/R2/R3 moves instead
    #[arg(long, value_name = "N", conflicts_with = "moves")]
    random: Option<usize>,
    /// Seed for --random
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also print Milnor tables up to this length
    #[arg(short)]
    k: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Index sequence, e.g. "1,2,3"
    #[arg(short = 'I', long = "sequence", value_name = "SEQ")]
    sequence: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's rendering but pin the usage exit code
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

#[derive(Debug)]
struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn parse(message: impl ToString) -> Self {
        Self { code: EXIT_PARSE, message: message.to_string() }
    }
}

impl From<MilnorError> for CmdError {
    fn from(e: MilnorError) -> Self {
        let code = match e {
            MilnorError::ResourceGuard { .. } => EXIT_GUARD,
            _ => EXIT_PARSE,
        };
        Self { code, message: e.to_string() }
    }
}

/// Reads the requested diagrams; a multi-line PD file yields one per line.
fn load_diagrams(input: &InputArgs) -> Result<Vec<LinkDiagram>, CmdError> {
    match (&input.pd, &input.braid) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| CmdError::parse(format!("{path}: {e}")))?;
            let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            if lines.is_empty() {
                return Err(CmdError::parse(format!("{path}: no PD code found")));
            }
            lines
                .into_iter()
                .map(|line| diagram::parse_pd(line).map_err(CmdError::parse))
                .collect()
        }
        (None, Some(word)) => {
            let strands = input.strands.ok_or_else(|| CmdError::usage("--braid needs --strands"))?;
            Ok(vec![diagram::parse_braid(word, strands).map_err(CmdError::parse)?])
        }
        _ => Err(CmdError::usage("exactly one of --pd or --braid is required")),
    }
}

fn lk_json(d: &LinkDiagram) -> Value {
    let m = linking::linking_matrix(d);
    json!({ "components": d.component_count(), "matrix": m.rows() })
}

fn cmd_lk(args: &LkArgs) -> Result<(), CmdError> {
    for d in load_diagrams(&args.input)? {
        if args.input.json {
            println!("{}", lk_json(&d));
        } else {
            println!("linking matrix (diagonal: writhe):");
            print!("{}", linking::linking_matrix(&d));
        }
    }
    Ok(())
}

fn big_to_json(v: &BigInt) -> Result<Value, CmdError> {
    v.to_i64()
        .map(Value::from)
        .ok_or_else(|| CmdError::parse(format!("coefficient {v} exceeds the JSON integer range")))
}

fn table_json(t: &MilnorTable) -> Result<Value, CmdError> {
    let mut entries = Vec::new();
    for (seq, e) in &t.entries {
        entries.push(json!({
            "I": seq,
            "mu": big_to_json(&e.mu)?,
            "delta": big_to_json(&e.delta)?,
            "mu_bar": big_to_json(&e.mu_bar)?,
            "exact": e.exact,
        }));
    }
    Ok(json!({
        "k": t.k,
        "entries": entries,
        "first_nonvanishing": t.first_nonvanishing,
    }))
}

fn print_table(t: &MilnorTable) {
    println!("Milnor invariants up to length {} ({} components):", t.k, t.n);
    for (seq, e) in &t.entries {
        let seq_text: String = seq.iter().map(|i| i.to_string()).collect();
        let marker = if e.exact { " (exact)" } else { "" };
        println!("  mu_bar({seq_text}) = {}{marker}", e.residue());
    }
    match t.first_nonvanishing {
        Some(l) => println!("first non-vanishing length: {l}"),
        None => println!("all invariants vanish up to length {}", t.k),
    }
}

fn cmd_milnor(args: &MilnorArgs) -> Result<(), CmdError> {
    if args.k < 2 {
        return Err(CmdError::usage("-k must be at least 2"));
    }
    for d in load_diagrams(&args.input)? {
        let table = MilnorEngine::new(&d).table(args.k, args.force)?;
        if args.input.json {
            println!("{}", table_json(&table)?);
        } else {
            print_table(&table);
        }
    }
    Ok(())
}

fn parse_kv(body: &str) -> Result<(Vec<(String, String)>, Vec<String>), CmdError> {
    let mut pairs = Vec::new();
    let mut flags = Vec::new();
    for part in body.split(',').filter(|p| !p.is_empty()) {
        match part.split_once('=') {
            Some((k, v)) => pairs.push((k.trim().to_string(), v.trim().to_string())),
            None => flags.push(part.trim().to_string()),
        }
    }
    Ok((pairs, flags))
}

fn kv_get(pairs: &[(String, String)], key: &str, spec: &str) -> Result<usize, CmdError> {
    pairs
        .iter()
        .find(|(k, _)| k == key)
        .and_then(|(_, v)| v.parse().ok())
        .ok_or_else(|| CmdError::usage(format!("move '{spec}' needs {key}=<number>")))
}

fn kv_sign(pairs: &[(String, String)], spec: &str) -> Result<i8, CmdError> {
    let v = pairs
        .iter()
        .find(|(k, _)| k == "sign")
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| CmdError::usage(format!("move '{spec}' needs sign=+1|-1")))?;
    match v {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(CmdError::usage(format!("move '{spec}': bad sign {v}"))),
    }
}

fn parse_move(spec: &str) -> Result<MoveSpec, CmdError> {
    let (kind, body) = spec.split_once(':').unwrap_or((spec, ""));
    let (pairs, flags) = parse_kv(body)?;
    let m = match kind {
        "r1" => MoveSpec::R1Insert {
            arc: kv_get(&pairs, "arc", spec)?,
            sign: kv_sign(&pairs, spec)?,
            over_first: flags.iter().any(|f| f == "over_first"),
        },
        "r1rm" => MoveSpec::R1Remove { crossing: kv_get(&pairs, "crossing", spec)? },
        "r2" => MoveSpec::R2Insert {
            over: kv_get(&pairs, "over", spec)?,
            under: kv_get(&pairs, "under", spec)?,
            sign: kv_sign(&pairs, spec)?,
        },
        "r2rm" => MoveSpec::R2Remove { first: kv_get(&pairs, "c1", spec)?, second: kv_get(&pairs, "c2", spec)? },
        "r3" => MoveSpec::R3 {
            over_first: kv_get(&pairs, "c1", spec)?,
            over_second: kv_get(&pairs, "c2", spec)?,
            lower: kv_get(&pairs, "lower", spec)?,
        },
        "cc" => MoveSpec::CrossingChange { crossing: kv_get(&pairs, "crossing", spec)? },
        "scc" => MoveSpec::SelfCrossingChange { crossing: kv_get(&pairs, "crossing", spec)? },
        "delta" => MoveSpec::DeltaMove {
            strands: [kv_get(&pairs, "a", spec)?, kv_get(&pairs, "b", spec)?, kv_get(&pairs, "c", spec)?],
        },
        other => return Err(CmdError::usage(format!("unknown move kind '{other}'"))),
    };
    Ok(m)
}

fn summary_json(d: &LinkDiagram, k: Option<usize>) -> Result<Value, CmdError> {
    let mut out = json!({ "lk": lk_json(d) });
    if let Some(k) = k {
        let table = MilnorEngine::new(d).table(k, false)?;
        out["milnor"] = table_json(&table)?;
    }
    Ok(out)
}

fn print_summary(label: &str, d: &LinkDiagram, k: Option<usize>) -> Result<(), CmdError> {
    println!("{label} linking matrix (diagonal: writhe):");
    print!("{}", linking::linking_matrix(d));
    if let Some(k) = k {
        let table = MilnorEngine::new(d).table(k, false)?;
        print_table(&table);
    }
    Ok(())
}

fn cmd_moves(args: &MovesArgs) -> Result<(), CmdError> {
    if let Some(k) = args.k {
        if k < 2 {
            return Err(CmdError::usage("-k must be at least 2"));
        }
    }
    for d in load_diagrams(&args.input)? {
        let mut moved = d.clone();
        let mut applied = Vec::new();
        if let Some(count) = args.random {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let (result, moves) = diagram::random_move_sequence(&d, count, &mut rng);
            moved = result;
            applied = moves.iter().map(|m| format!("{m:?}")).collect();
        } else {
            for spec in &args.moves {
                let m = parse_move(spec)?;
                moved = diagram::apply_move(&moved, &m).map_err(CmdError::parse)?;
                applied.push(spec.clone());
            }
        }
        let pd = diagram::emit_pd(&moved);
        if args.input.json {
            println!(
                "{}",
                json!({
                    "moves": applied,
                    "pd": pd,
                    "before": summary_json(&d, args.k)?,
                    "after": summary_json(&moved, args.k)?,
                })
            );
        } else {
            println!("applied {} move(s)", applied.len());
            print_summary("before:", &d, args.k)?;
            print_summary("after:", &moved, args.k)?;
            println!("pd: {pd}");
        }
    }
    Ok(())
}

fn parse_sequence(text: &str) -> Result<Vec<usize>, CmdError> {
    let seq: Result<Vec<usize>, _> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>())
        .collect();
    let seq = seq.map_err(|_| CmdError::usage(format!("bad index sequence '{text}'")))?;
    if seq.len() < 2 {
        return Err(CmdError::usage("index sequence needs at least two entries"));
    }
    Ok(seq)
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), CmdError> {
    let seq = parse_sequence(&args.sequence)?;
    for d in load_diagrams(&args.input)? {
        let mut engine = MilnorEngine::new(&d);
        let main = engine.mu(&seq)?;
        let oracle = engine.oracle_mu(&seq)?;
        let verdict = if main == oracle { "MATCH" } else { "MISMATCH" };
        if args.input.json {
            println!(
                "{}",
                json!({
                    "I": seq,
                    "main": big_to_json(&main)?,
                    "oracle": big_to_json(&oracle)?,
                    "match": main == oracle,
                })
            );
        } else {
            let seq_text: String = seq.iter().map(|i| i.to_string()).collect();
            println!("I={seq_text} main={main} oracle={oracle} {verdict}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match &cli.command {
        Command::Lk(args) => cmd_lk(args),
        Command::Milnor(args) => cmd_milnor(args),
        Command::Moves(args) => cmd_moves(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}
