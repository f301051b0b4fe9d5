//! `membrane` — command-line front end for the active-membranes toolkit.
//!
//! Exit codes: 0 = Accept/success, 1 = Reject, 2 = usage or parse error,
//! 3 = Invalid/NonConfluent, 4 = bound exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use active_membranes::analysis::{analyze, predict_verdict};
use active_membranes::circuit::Circuit;
use active_membranes::error::Error;
use active_membranes::families::{
    build_family_dtt, build_family_m, compile_semiuniform, parity_family, uniform_to_ctt,
    uniform_to_dtt, RSpec, TtReduction, UniformFamily, GRAPH_VERTEX_CAP,
};
use active_membranes::parse::{parse_multiset, parse_system, serialize_system, SerializeMode};
use active_membranes::semantics::{explore, run, ExploreResult, Mode, Verdict};
use active_membranes::tm::{build_config_graph, graph_accepts, parse_input, parse_program, BoundFn};
use active_membranes::{MembraneSystem, Multiset};

const EXIT_ACCEPT: u8 = 0;
const EXIT_REJECT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_BOUND: u8 = 4;

#[derive(Parser)]
#[command(name = "membrane", version, about = "Active membrane system toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one seeded computation of a membrane system.
    Simulate {
        file: PathBuf,
        /// Input multiset, e.g. `a*2, b` (requires an input membrane).
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "recogniser1")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: u64,
        /// Write the full configuration trace as JSON to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustively explore all computations and report confluence.
    Explore {
        file: PathBuf,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "recogniser1")]
        mode: String,
        #[arg(long, default_value_t = 100_000)]
        max_configs: usize,
    },
    /// Dependency-graph analysis and single-object verdict prediction.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "recogniser1")]
        mode: String,
    },
    /// Compile a register program on an input into a membrane system.
    CompileTm {
        prog: PathBuf,
        /// Input word: a bit string or `1^k`.
        #[arg(long)]
        input: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a family member and decide one word (or a whole table).
    Family {
        #[command(subcommand)]
        builder: FamilyBuilder,
    },
    /// Synthesize or evaluate circuits derived from uniform families.
    Circuit {
        #[command(subcommand)]
        action: CircuitAction,
    },
    /// Evaluate a truth-table reduction of a uniform family.
    Reduce {
        /// One of `dtt`, `ctt`, `m`.
        kind: String,
        desc: PathBuf,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum FamilyBuilder {
    /// Semi-uniform PARITY family.
    Parity {
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        all_up_to: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        max_configs: usize,
    },
    /// Semi-uniform family compiled from a register program per word.
    FromTm {
        #[arg(long)]
        prog: PathBuf,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        all_up_to: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        max_configs: usize,
    },
    /// Uniform family with machine and complement graphs (recogniser≥1).
    MFamily {
        #[command(flatten)]
        spec: UniformArgs,
    },
    /// Uniform acknowledger family with machine graphs only.
    DttFamily {
        #[command(flatten)]
        spec: UniformArgs,
    },
}

#[derive(clap::Args)]
struct UniformArgs {
    /// Register program file for the tally language.
    #[arg(long)]
    prog: PathBuf,
    /// Query derivation: `bin-prefix` or `one-positions`.
    #[arg(long, default_value = "bin-prefix")]
    r: String,
    /// Query length bound, a polynomial in n such as `2n`.
    #[arg(long, default_value = "2n")]
    q: String,
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    all_up_to: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    max_configs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded(_) => EXIT_BOUND,
        _ => EXIT_USAGE,
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Accept => EXIT_ACCEPT,
        Verdict::Reject => EXIT_REJECT,
        Verdict::Invalid(_) => EXIT_INVALID,
        Verdict::BoundExceeded => EXIT_BOUND,
    }
}

fn explore_code(r: &ExploreResult) -> u8 {
    match r {
        ExploreResult::ConfluentAccept => EXIT_ACCEPT,
        ExploreResult::ConfluentReject => EXIT_REJECT,
        ExploreResult::NonConfluent | ExploreResult::InvalidRun(_) => EXIT_INVALID,
        ExploreResult::BoundExceeded => EXIT_BOUND,
    }
}

fn explore_name(r: &ExploreResult) -> String {
    match r {
        ExploreResult::ConfluentAccept => "ConfluentAccept".into(),
        ExploreResult::ConfluentReject => "ConfluentReject".into(),
        ExploreResult::NonConfluent => "NonConfluent".into(),
        ExploreResult::InvalidRun(reason) => format!("InvalidRun({reason})"),
        ExploreResult::BoundExceeded => "BoundExceeded".into(),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Family(format!("cannot read {}: {e}", path.display())))
}

fn load_system(path: &Path, word: &Option<String>) -> Result<(MembraneSystem, Option<Multiset>), Error> {
    let sys = parse_system(&read_file(path)?)?;
    let input = match word {
        Some(w) => Some(parse_multiset(&sys, w)?),
        None => None,
    };
    Ok((sys, input))
}

fn dispatch(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Simulate { file, word, mode, seed, max_steps, trace } => {
            let mode: Mode = mode.parse()?;
            let (sys, input) = load_system(&file, &word)?;
            let result = run(&sys, input.as_ref(), mode, seed, max_steps, trace.is_some())?;
            println!("verdict: {}", result.verdict);
            println!("steps: {}", result.steps);
            if let Some(out) = trace {
                let json: Vec<serde_json::Value> = result
                    .trace
                    .as_ref()
                    .expect("trace requested")
                    .iter()
                    .map(|c| c.to_json(&sys))
                    .collect();
                std::fs::write(&out, serde_json::to_string_pretty(&json).unwrap())
                    .map_err(|e| Error::Family(format!("cannot write {}: {e}", out.display())))?;
                println!("trace: {} configurations", json.len());
            }
            Ok(verdict_code(&result.verdict))
        }
        Command::Explore { file, word, mode, max_configs } => {
            let mode: Mode = mode.parse()?;
            let (sys, input) = load_system(&file, &word)?;
            let report = explore(&sys, input.as_ref(), mode, max_configs)?;
            println!("result: {}", explore_name(&report.result));
            println!("states: {}", report.states);
            println!("halting-leaves: {}", report.halting_leaves);
            println!("max-depth: {}", report.max_depth);
            Ok(explore_code(&report.result))
        }
        Command::Analyze { file, word, mode } => {
            let mode: Mode = mode.parse()?;
            let (sys, input) = load_system(&file, &word)?;
            let rows = analyze(&sys, input.as_ref())?;
            println!("{:<24} {:<12} {:<12}", "node", "reaches-yes", "reaches-no");
            for row in &rows {
                println!(
                    "{:<24} {:<12} {:<12}",
                    format!("({}, {})", sys.obj_name(row.node.object), sys.tree.name(row.node.label)),
                    row.reaches_yes,
                    row.reaches_no
                );
            }
            let verdict = predict_verdict(&sys, input.as_ref(), mode)?;
            println!("predicted: {verdict}");
            Ok(verdict_code(&verdict))
        }
        Command::CompileTm { prog, input, output } => {
            let program = parse_program(&read_file(&prog)?)?;
            let bits = parse_input(&input)?;
            let sys = compile_semiuniform(&program, &bits, GRAPH_VERTEX_CAP)?;
            std::fs::write(&output, serialize_system(&sys, SerializeMode::Compact))
                .map_err(|e| Error::Family(format!("cannot write {}: {e}", output.display())))?;
            println!("wrote {} ({} objects, {} rules)", output.display(), sys.num_objects(), sys.rules.len());
            Ok(EXIT_ACCEPT)
        }
        Command::Family { builder } => run_family(builder),
        Command::Circuit { action } => run_circuit(action),
        Command::Reduce { kind, desc, word } => run_reduce(&kind, &desc, &word),
    }
}

/// Reports one explore verdict, or a table over all words up to a length.
fn word_table(
    verdict_of: impl Fn(&str) -> Result<ExploreResult, Error>,
    word: Option<String>,
    all_up_to: Option<usize>,
) -> Result<u8, Error> {
    match (word, all_up_to) {
        (Some(w), None) => {
            let r = verdict_of(&w)?;
            println!("{}: {}", w, explore_name(&r));
            Ok(explore_code(&r))
        }
        (None, Some(n)) => {
            for len in 1..=n {
                for v in 0..(1u64 << len) {
                    let w: String = (0..len)
                        .map(|i| if v >> (len - 1 - i) & 1 == 1 { '1' } else { '0' })
                        .collect();
                    let r = verdict_of(&w)?;
                    println!("{}: {}", w, explore_name(&r));
                }
            }
            Ok(EXIT_ACCEPT)
        }
        _ => Err(Error::Family("give exactly one of --word or --all-up-to".into())),
    }
}

fn parse_rspec(r: &str) -> Result<RSpec, Error> {
    match r {
        "bin-prefix" => Ok(RSpec::BinPrefix),
        "one-positions" => Ok(RSpec::OnePositions),
        other => Err(Error::Family(format!("unknown r specification `{other}`"))),
    }
}

fn build_uniform(args: &UniformArgs, dtt: bool) -> Result<UniformFamily, Error> {
    let prog = parse_program(&read_file(&args.prog)?)?;
    let r = parse_rspec(&args.r)?;
    let q = BoundFn::parse(&args.q)?;
    Ok(if dtt { build_family_dtt(prog, r, q) } else { build_family_m(prog, r, q) })
}

fn run_family(builder: FamilyBuilder) -> Result<u8, Error> {
    match builder {
        FamilyBuilder::Parity { word, all_up_to, max_configs } => word_table(
            |w| {
                let sys = parity_family(w)?;
                Ok(explore(&sys, None, Mode::Recogniser, max_configs)?.result)
            },
            word,
            all_up_to,
        ),
        FamilyBuilder::FromTm { prog, word, all_up_to, max_configs } => {
            let program = parse_program(&read_file(&prog)?)?;
            word_table(
                |w| {
                    let bits = parse_input(w)?;
                    let sys = compile_semiuniform(&program, &bits, GRAPH_VERTEX_CAP)?;
                    Ok(explore(&sys, None, Mode::Recogniser1, max_configs)?.result)
                },
                word,
                all_up_to,
            )
        }
        FamilyBuilder::MFamily { spec } => {
            let fam = build_uniform(&spec, false)?;
            word_table(|w| fam.explore_word(w, spec.max_configs), spec.word.clone(), spec.all_up_to)
        }
        FamilyBuilder::DttFamily { spec } => {
            let fam = build_uniform(&spec, true)?;
            word_table(|w| fam.explore_word(w, spec.max_configs), spec.word.clone(), spec.all_up_to)
        }
    }
}

#[derive(Subcommand)]
enum CircuitAction {
    /// Synthesize the circuit of a uniform family at one input length.
    Synth {
        desc: PathBuf,
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Evaluate a synthesized circuit on a word.
    Eval {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
}

/// Parses a family descriptor file with `builder`, `prog`, `r`, `q` lines;
/// the program path is resolved relative to the descriptor's directory.
fn load_descriptor(path: &Path) -> Result<UniformFamily, Error> {
    let text = read_file(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut builder = None;
    let mut prog_path = None;
    let mut r = "bin-prefix".to_string();
    let mut q = "2n".to_string();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::syntax(idx + 1, 1, "expected `key value`"))?;
        let value = value.trim().to_string();
        match key {
            "builder" => builder = Some(value),
            "prog" => prog_path = Some(dir.join(value)),
            "r" => r = value,
            "q" => q = value,
            other => return Err(Error::syntax(idx + 1, 1, format!("unknown key `{other}`"))),
        }
    }
    let builder = builder.ok_or_else(|| Error::Family("descriptor misses `builder`".into()))?;
    let prog_path = prog_path.ok_or_else(|| Error::Family("descriptor misses `prog`".into()))?;
    let prog = parse_program(&read_file(&prog_path)?)?;
    let r = parse_rspec(&r)?;
    let q = BoundFn::parse(&q)?;
    match builder.as_str() {
        "m-family" => Ok(build_family_m(prog, r, q)),
        "dtt-family" => Ok(build_family_dtt(prog, r, q)),
        other => Err(Error::Family(format!("unknown builder `{other}`"))),
    }
}

fn run_circuit(action: CircuitAction) -> Result<u8, Error> {
    match action {
        CircuitAction::Synth { desc, n, output } => {
            let fam = load_descriptor(&desc)?;
            let circuit = active_membranes::families::synthesize_circuit(&fam, n)?;
            std::fs::write(&output, circuit.to_text())
                .map_err(|e| Error::Family(format!("cannot write {}: {e}", output.display())))?;
            println!(
                "wrote {} ({} gates, depth {} beyond encoder)",
                output.display(),
                circuit.gates.len(),
                circuit.depth_beyond_encoder()
            );
            Ok(EXIT_ACCEPT)
        }
        CircuitAction::Eval { file, word } => {
            let circuit = Circuit::parse(&read_file(&file)?)?;
            let bits: Vec<bool> = word
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::MalformedBits(word.clone())),
                })
                .collect::<Result<_, _>>()?;
            let out = circuit.eval(&bits)?;
            println!("output: {}", u8::from(out));
            Ok(if out { EXIT_ACCEPT } else { EXIT_REJECT })
        }
    }
}

fn print_reduction(red: &TtReduction) {
    for (q, a) in red.queries.iter().zip(&red.answers) {
        println!(
            "query <{},{}> = 1^{} ({}): {}",
            q.ordinal, q.n, q.unary_len, q.object, a
        );
    }
    for (name, term) in &red.constant_terms {
        println!("constant {name}: {term}");
    }
    println!("verdict: {}", red.verdict);
}

fn run_reduce(kind: &str, desc: &Path, word: &str) -> Result<u8, Error> {
    let fam = load_descriptor(desc)?;
    match kind {
        "dtt" => {
            let red = uniform_to_dtt(&fam, word)?;
            print_reduction(&red);
            Ok(verdict_code(&red.verdict))
        }
        "ctt" => {
            let red = uniform_to_ctt(&fam, word)?;
            print_reduction(&red);
            Ok(verdict_code(&red.verdict))
        }
        "m" => {
            // many-one: a single unary query answered by the machine itself
            let queries = fam.r.queries(word)?;
            if queries.len() != 1 {
                return Err(Error::IdentityArity(queries.len()));
            }
            let u = queries[0];
            let graph = build_config_graph(&fam.prog, &vec![true; u as usize], GRAPH_VERTEX_CAP)?;
            let answer = graph_accepts(&graph);
            println!("query 1^{u}: {answer}");
            let verdict = if answer { Verdict::Accept } else { Verdict::Reject };
            println!("verdict: {verdict}");
            Ok(verdict_code(&verdict))
        }
        other => Err(Error::Family(format!("unknown reduction kind `{other}`"))),
    }
}
