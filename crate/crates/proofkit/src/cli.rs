//! Command-line front end.
//!
//! One binary, eight subcommands: `check`, `solve`, `compress`,
//! `interpolate`, `reorder`, `extract-lemmas`, `dot`, and `bench`. Exit
//! codes are uniform across them:
//!
//! | code | meaning                                              |
//! |------|------------------------------------------------------|
//! | 0    | success                                              |
//! | 1    | input violates a format or contract, or verification failed |
//! | 2    | bad invocation (flags, paths, value syntax)          |
//! | 3    | a resource limit was hit (conflict budget, oracle size) |
//!
//! Runs are deterministic: the same seed and the same input files produce
//! byte-identical stdout and output files. The seed comes from `--seed`,
//! falling back to the `PROOFKIT_SEED` environment variable, then to 0. The
//! one deliberate exception is the `time_ms` column of metrics CSV files,
//! which records measured wall time.
//!
//! Proof inputs are TraceCheck files; formula inputs are DIMACS CNF.
//! `compress` and `bench` accept either — files ending in `.cnf` or
//! `.dimacs` are solved first (that solve provides the time reference for
//! `--ratio`), anything else is parsed as a proof.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::compress::{run_pipeline, write_csv, CompressionMetrics, PipelinePlan};
use crate::interpolate::{
    extract_ab_mixed, itp_mcmillan, itp_mcmillan_prime, label_variables, pivot_reordering_with,
    scan_unordered, verify_interpolant, InterpolantFormula, VariableLabeling,
};
use crate::proof_core::{ResolutionProof, Var};
use crate::proof_io::{
    export_dot, parse_dimacs, parse_partition, parse_tracecheck_with, split_partitions,
    write_dimacs, write_tracecheck, CnfFormula, TraceCheckOptions,
};
use crate::sat_engine::{SolveResult, Solver, SolverConfig};
use crate::transform::CompressionStrategy;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV_VAR: &str = "PROOFKIT_SEED";

/// Fallback time budget (seconds) when neither `--time-limit` nor `--ratio`
/// is given — effectively unbounded at the scales this tool targets, kept
/// finite so budget arithmetic stays total.
const DEFAULT_TIME_LIMIT: f64 = 3600.0;

/// A fully parsed invocation.
#[derive(Parser, Debug)]
#[command(
    name = "proofkit",
    version,
    about = "Check, compress, reorder, and interpolate resolution refutations",
    propagate_version = true
)]
pub struct RunConfig {
    /// Seed for randomized tie-breaking (default: $PROOFKIT_SEED, then 0).
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a proof for legality; exit 0 iff it is legal.
    Check {
        /// TraceCheck proof file.
        proof: PathBuf,
        #[command(flatten)]
        trust: TrustFlag,
    },
    /// Solve a DIMACS CNF, writing a proof when it is unsatisfiable.
    Solve {
        /// DIMACS CNF file.
        cnf: PathBuf,
        /// Write the refutation here as TraceCheck.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Abort with exit code 3 after this many conflicts.
        #[arg(long, default_value_t = SolverConfig::default().max_conflicts)]
        max_conflicts: u64,
    },
    /// Compress a proof with a pipeline of rewriting stages.
    Compress {
        /// TraceCheck proof, or DIMACS CNF (`.cnf`/`.dimacs`) solved first.
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Write the compressed proof here as TraceCheck.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Append a metrics row to this CSV file (header written if new).
        #[arg(long)]
        metrics: Option<PathBuf>,
        #[command(flatten)]
        trust: TrustFlag,
    },
    /// Derive a Craig interpolant for an unsatisfiable (A, B) split.
    Interpolate {
        /// A-partition CNF — or the combined CNF when --partition is given.
        input_a: PathBuf,
        /// B-partition CNF.
        #[arg(required_unless_present = "partition", conflicts_with = "partition")]
        input_b: Option<PathBuf>,
        /// Partition index file (`<clause-index> <a|b>` per clause).
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Interpolation system.
        #[arg(long, value_enum, default_value_t = Algo::Mcmillan)]
        algo: Algo,
        /// Reorder pivots first so the interpolant takes this shape.
        #[arg(long, value_enum)]
        reorder: Option<TargetShape>,
        /// During --reorder, refuse rewrites that duplicate nodes.
        #[arg(long, requires = "reorder")]
        linear: bool,
        /// Check the interpolant against the partitions (≤ 24 variables).
        #[arg(long)]
        verify: bool,
        /// Also write the interpolant as DIMACS CNF (fails if not clausal).
        #[arg(long)]
        dimacs: Option<PathBuf>,
    },
    /// Rewrite a proof so light pivots are resolved closer to the leaves.
    Reorder {
        /// TraceCheck proof file.
        proof: PathBuf,
        /// Light variables: a comma-separated list (`5,6,7,8`) or a file of
        /// whitespace-separated variable numbers.
        #[arg(long)]
        light: String,
        /// Refuse rewrites that duplicate nodes (may leave contexts
        /// unordered; the remainder is reported).
        #[arg(long)]
        linear: bool,
        /// Write the reordered proof here (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        trust: TrustFlag,
    },
    /// Cut maximal subproofs pivoting only on mixed variables, leaving
    /// their root clauses behind as theory lemmas.
    ExtractLemmas {
        /// TraceCheck proof file.
        proof: PathBuf,
        /// Mixed variables: a comma-separated list or a file (see --light).
        #[arg(long)]
        mixed: String,
        /// Write the residual proof here as TraceCheck.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        trust: TrustFlag,
    },
    /// Render a proof as GraphViz DOT.
    Dot {
        /// TraceCheck proof file.
        proof: PathBuf,
        /// Write the drawing here (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        trust: TrustFlag,
    },
    /// Run a compression plan over every instance in a directory.
    Bench {
        /// Directory of `.cnf`/`.dimacs`/`.trace` instances.
        dir: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Write per-instance metrics to this CSV file.
        #[arg(long)]
        metrics: Option<PathBuf>,
        /// Worker threads (default: one per CPU).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        trust: TrustFlag,
    },
}

/// Stage list and budget knobs shared by `compress` and `bench`.
#[derive(Args, Debug)]
struct PipelineArgs {
    /// Comma-separated stages: pu, sh, rp, rpi, re.
    #[arg(long, default_value = "pu,sh,rpi,re")]
    plan: String,
    /// Global iterations of the stage list.
    #[arg(long, default_value_t = 1)]
    loops: u32,
    /// Traversals per `re` stage.
    #[arg(long, default_value_t = 3)]
    travs: u32,
    /// Total time budget in seconds (wins over --ratio).
    #[arg(long)]
    time_limit: Option<f64>,
    /// Time budget as a fraction of this run's solve time (CNF inputs only).
    #[arg(long)]
    ratio: Option<f64>,
}

/// `--no-validate`: skip comparing stated clauses against recomputed
/// resolvents while parsing proofs.
#[derive(Args, Debug)]
struct TrustFlag {
    /// Trust stated clauses instead of validating them during parsing.
    #[arg(long = "no-validate")]
    no_validate: bool,
}

impl TrustFlag {
    fn options(&self) -> TraceCheckOptions {
        TraceCheckOptions { validate: !self.no_validate }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    /// McMillan's system.
    Mcmillan,
    /// The dual system (McMillan-prime).
    McmillanPrime,
}

impl Algo {
    fn interpolate(
        self,
        proof: &ResolutionProof,
        labeling: &VariableLabeling,
    ) -> Result<InterpolantFormula, crate::interpolate::InterpolationError> {
        match self {
            Algo::Mcmillan => itp_mcmillan(proof, labeling),
            Algo::McmillanPrime => itp_mcmillan_prime(proof, labeling),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TargetShape {
    /// Lift A-local pivots leafward (clausal interpolants under mcmillan).
    Cnf,
    /// Lift B-local pivots leafward (dual shape under mcmillan-prime).
    Dnf,
}

/// A failed run, carrying the exit code it maps to.
#[derive(Debug)]
enum CliError {
    /// Exit 1: input content broke a format or contract, or a requested
    /// verification did not hold.
    Violation(String),
    /// Exit 2: the invocation itself is unusable.
    Usage(String),
    /// Exit 3: a resource limit was hit.
    Resource(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Violation(m) | CliError::Usage(m) | CliError::Resource(m) => m,
        }
    }
}

type RunResult = Result<(), CliError>;

/// Parses `args` (including the program name) and runs the invocation,
/// returning the process exit status.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let seed = match resolve_seed(config.seed) {
        Ok(seed) => seed,
        Err(e) => {
            eprintln!("proofkit: {}", e.message());
            return e.code();
        }
    };
    match run(config.command, seed) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("proofkit: {}", e.message());
            e.code()
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!("{SEED_ENV_VAR}={text} is not an unsigned integer"))
        }),
        Err(_) => Ok(0),
    }
}

fn run(command: Command, seed: u64) -> RunResult {
    match command {
        Command::Check { proof, trust } => check(&proof, trust.options()),
        Command::Solve { cnf, output, max_conflicts } => {
            solve(&cnf, output.as_deref(), seed, max_conflicts)
        }
        Command::Compress { input, pipeline, output, metrics, trust } => {
            compress(&input, &pipeline, output.as_deref(), metrics.as_deref(), trust.options(), seed)
        }
        Command::Interpolate {
            input_a,
            input_b,
            partition,
            algo,
            reorder,
            linear,
            verify,
            dimacs,
        } => interpolate(
            &input_a,
            input_b.as_deref(),
            partition.as_deref(),
            algo,
            reorder,
            linear,
            verify,
            dimacs.as_deref(),
            seed,
        ),
        Command::Reorder { proof, light, linear, output, trust } => {
            reorder(&proof, &light, linear, output.as_deref(), trust.options())
        }
        Command::ExtractLemmas { proof, mixed, output, trust } => {
            extract_lemmas(&proof, &mixed, output.as_deref(), trust.options())
        }
        Command::Dot { proof, output, trust } => dot(&proof, output.as_deref(), trust.options()),
        Command::Bench { dir, pipeline, metrics, jobs, trust } => {
            bench(&dir, &pipeline, metrics.as_deref(), jobs, trust.options(), seed)
        }
    }
}

// ---------------------------------------------------------------- file I/O

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, contents: &str) -> RunResult {
    fs::write(path, contents)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_proof(path: &Path, options: TraceCheckOptions) -> Result<ResolutionProof, CliError> {
    let text = read(path)?;
    parse_tracecheck_with(&text, options)
        .map_err(|e| CliError::Violation(format!("{}: {e}", path.display())))
}

fn load_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    let text = read(path)?;
    let (cnf, _comments) = parse_dimacs(&text)
        .map_err(|e| CliError::Violation(format!("{}: {e}", path.display())))?;
    Ok(cnf)
}

fn is_cnf_path(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref(),
        Some("cnf") | Some("dimacs")
    )
}

fn emit(output: Option<&Path>, contents: &str) -> RunResult {
    match output {
        Some(path) => write_out(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

// ------------------------------------------------------------- var lists

/// `5,6,7,8` inline, or a path to a file of whitespace- or comma-separated
/// variable numbers.
fn parse_var_set(spec: &str) -> Result<BTreeSet<Var>, CliError> {
    if let Some(vars) = try_parse_inline_vars(spec) {
        return Ok(vars);
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Usage(format!(
            "{spec}: neither a comma-separated variable list nor a readable file ({e})"
        ))
    })?;
    let mut vars = BTreeSet::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        match token.parse::<u32>() {
            Ok(n) if n > 0 => {
                vars.insert(Var::new(n));
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "{}: `{token}` is not a variable number",
                    path.display()
                )))
            }
        }
    }
    Ok(vars)
}

fn try_parse_inline_vars(spec: &str) -> Option<BTreeSet<Var>> {
    let mut vars = BTreeSet::new();
    for token in spec.split(',') {
        match token.trim().parse::<u32>() {
            Ok(n) if n > 0 => {
                vars.insert(Var::new(n));
            }
            _ => return None,
        }
    }
    Some(vars)
}

// ------------------------------------------------------------ subcommands

fn check(path: &Path, options: TraceCheckOptions) -> RunResult {
    let proof = load_proof(path, options)?;
    let report = proof.check_legal();
    if report.is_legal() {
        let root = proof.node(proof.root()).clause();
        let kind = if root.is_empty() {
            "legal refutation".to_string()
        } else {
            format!("legal proof of {root}")
        };
        println!(
            "{kind}: {} nodes, {} edges, {} leaf clauses",
            proof.node_count(),
            proof.edge_count(),
            proof.reachable_leaf_clauses().len()
        );
        Ok(())
    } else {
        for violation in &report.violations {
            eprintln!("{violation}");
        }
        Err(CliError::Violation(format!(
            "{}: {} legality violation(s)",
            path.display(),
            report.violations.len()
        )))
    }
}

fn solve_timed(
    cnf: &CnfFormula,
    seed: u64,
    max_conflicts: u64,
) -> Result<(SolveResult, Duration), CliError> {
    let solver = Solver::new(SolverConfig { seed, max_conflicts });
    let started = Instant::now();
    let result = solver.solve(cnf).map_err(|limit| CliError::Resource(limit.to_string()))?;
    Ok((result, started.elapsed()))
}

fn solve(path: &Path, output: Option<&Path>, seed: u64, max_conflicts: u64) -> RunResult {
    let cnf = load_cnf(path)?;
    let (result, _elapsed) = solve_timed(&cnf, seed, max_conflicts)?;
    match result {
        SolveResult::Sat { model } => {
            println!("s SATISFIABLE");
            let mut line = String::from("v");
            for (i, &value) in model.iter().enumerate() {
                let n = i as i64 + 1;
                let _ = write!(line, " {}", if value { n } else { -n });
            }
            line.push_str(" 0");
            println!("{line}");
            if output.is_some() {
                eprintln!("proofkit: satisfiable, no proof written");
            }
            Ok(())
        }
        SolveResult::Unsat { proof } => {
            println!("s UNSATISFIABLE");
            if let Some(out) = output {
                let text = write_tracecheck(&proof)
                    .map_err(|e| CliError::Violation(e.to_string()))?;
                write_out(out, &text)?;
            }
            Ok(())
        }
    }
}

/// Resolves the `--time-limit`/`--ratio` pair against an optional measured
/// solve time. Absolute seconds win; a ratio without a solve reference is a
/// usage error.
fn resolve_budget(args: &PipelineArgs, solve_time: Option<Duration>) -> Result<Duration, CliError> {
    if let Some(seconds) = args.time_limit {
        if !seconds.is_finite() || seconds < 0.0 {
            return Err(CliError::Usage(format!("--time-limit {seconds} is not a duration")));
        }
        return Ok(Duration::from_secs_f64(seconds));
    }
    if let Some(ratio) = args.ratio {
        if !ratio.is_finite() || ratio < 0.0 {
            return Err(CliError::Usage(format!("--ratio {ratio} is not a fraction")));
        }
        return match solve_time {
            Some(t) => Ok(t.mul_f64(ratio)),
            None => Err(CliError::Usage(
                "--ratio needs a solve-time reference: give a CNF input, or use --time-limit"
                    .to_string(),
            )),
        };
    }
    Ok(Duration::from_secs_f64(DEFAULT_TIME_LIMIT))
}

/// Loads an instance for compression: proofs are parsed, formulas are
/// solved (providing the ratio reference). Satisfiable formulas are a
/// contract violation here.
fn load_instance(
    path: &Path,
    options: TraceCheckOptions,
    seed: u64,
) -> Result<(ResolutionProof, Option<Duration>), CliError> {
    if is_cnf_path(path) {
        let cnf = load_cnf(path)?;
        let (result, elapsed) = solve_timed(&cnf, seed, SolverConfig::default().max_conflicts)?;
        match result.into_proof() {
            Some(proof) => Ok((proof, Some(elapsed))),
            None => Err(CliError::Violation(format!(
                "{}: satisfiable, nothing to compress",
                path.display()
            ))),
        }
    } else {
        Ok((load_proof(path, options)?, None))
    }
}

fn build_plan(args: &PipelineArgs, budget: Duration) -> Result<PipelinePlan, CliError> {
    if args.loops == 0 {
        return Err(CliError::Usage("--loops must be at least 1".to_string()));
    }
    PipelinePlan::parse(&args.plan, args.travs, args.loops, budget)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn append_metrics(path: &Path, rows: &[(String, CompressionMetrics)]) -> RunResult {
    let mut text = Vec::new();
    if path.exists() {
        // Append data rows only; the header is already there.
        for (name, m) in rows {
            text.extend_from_slice(m.csv_row(name).as_bytes());
            text.push(b'\n');
        }
        let mut existing = fs::read(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        existing.extend_from_slice(&text);
        fs::write(path, existing).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    } else {
        write_csv(&mut text, rows).expect("writing to a Vec cannot fail");
        fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn compress(
    input: &Path,
    pipeline: &PipelineArgs,
    output: Option<&Path>,
    metrics_path: Option<&Path>,
    options: TraceCheckOptions,
    seed: u64,
) -> RunResult {
    let (mut proof, solve_time) = load_instance(input, options, seed)?;
    let budget = resolve_budget(pipeline, solve_time)?;
    let plan = build_plan(pipeline, budget)?;
    let metrics = run_pipeline(&mut proof, &plan, &CompressionStrategy);
    let report = proof.check_legal();
    if !report.is_legal() {
        return Err(CliError::Violation(format!(
            "compressed proof failed its legality check ({} violations)",
            report.violations.len()
        )));
    }
    println!(
        "{}: nodes {} -> {}, edges {} -> {}, core {} -> {}",
        plan.name(),
        metrics.nodes_before,
        metrics.nodes_after,
        metrics.edges_before,
        metrics.edges_after,
        metrics.core_before,
        metrics.core_after
    );
    if let Some(out) = output {
        let text = write_tracecheck(&proof).map_err(|e| CliError::Violation(e.to_string()))?;
        write_out(out, &text)?;
    }
    if let Some(csv) = metrics_path {
        append_metrics(csv, &[(instance_name(input), metrics)])?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn interpolate(
    input_a: &Path,
    input_b: Option<&Path>,
    partition: Option<&Path>,
    algo: Algo,
    target: Option<TargetShape>,
    linear: bool,
    verify: bool,
    dimacs_out: Option<&Path>,
    seed: u64,
) -> RunResult {
    let (a, b) = match (input_b, partition) {
        (Some(b_path), None) => (load_cnf(input_a)?, load_cnf(b_path)?),
        (None, Some(index_path)) => {
            let combined = load_cnf(input_a)?;
            let index = read(index_path)?;
            let tags = parse_partition(&index, combined.len())
                .map_err(|e| CliError::Violation(format!("{}: {e}", index_path.display())))?;
            split_partitions(&combined, &tags)
        }
        // clap enforces exactly one of the two forms.
        _ => unreachable!("clap guarantees either a B file or a partition index"),
    };
    let mut combined = a.clone();
    for clause in b.iter() {
        combined.push(clause.clone());
    }
    let (result, _elapsed) =
        solve_timed(&combined, seed, SolverConfig::default().max_conflicts)?;
    let mut proof = match result.into_proof() {
        Some(proof) => proof,
        None => {
            return Err(CliError::Violation(
                "A ∧ B is satisfiable; no interpolant exists".to_string(),
            ))
        }
    };
    let labeling = label_variables(&a, &b);
    if let Some(shape) = target {
        let light = match shape {
            TargetShape::Cnf => labeling.light_for_cnf(),
            TargetShape::Dnf => labeling.light_for_dnf(),
        };
        let report = pivot_reordering_with(&mut proof, &light, linear);
        if !report.is_ordered() {
            eprintln!(
                "proofkit: {} context(s) left unordered under --linear; \
                 the interpolant shape is only partially normalized",
                report.count()
            );
        }
    }
    let interpolant = algo
        .interpolate(&proof, &labeling)
        .map_err(|e| CliError::Violation(e.to_string()))?;
    if verify {
        let ok = verify_interpolant(&a, &b, &interpolant)
            .map_err(|e| CliError::Resource(e.to_string()))?;
        if !ok {
            return Err(CliError::Violation(format!(
                "interpolant failed verification: {interpolant}"
            )));
        }
        eprintln!("proofkit: interpolant verified");
    }
    println!("{interpolant}");
    if let Some(path) = dimacs_out {
        match interpolant.to_cnf() {
            Some(cnf) => write_out(path, &write_dimacs(&cnf))?,
            None => {
                return Err(CliError::Violation(format!(
                    "interpolant is not in CNF shape, cannot write DIMACS: {interpolant}"
                )))
            }
        }
    }
    Ok(())
}

fn reorder(
    path: &Path,
    light_spec: &str,
    linear: bool,
    output: Option<&Path>,
    options: TraceCheckOptions,
) -> RunResult {
    let mut proof = load_proof(path, options)?;
    let light = parse_var_set(light_spec)?;
    let before = scan_unordered(&proof, &light).count();
    let report = pivot_reordering_with(&mut proof, &light, linear);
    eprintln!("proofkit: unordered contexts {before} -> {}", report.count());
    let text = write_tracecheck(&proof).map_err(|e| CliError::Violation(e.to_string()))?;
    emit(output, &text)
}

fn extract_lemmas(
    path: &Path,
    mixed_spec: &str,
    output: Option<&Path>,
    options: TraceCheckOptions,
) -> RunResult {
    let mut proof = load_proof(path, options)?;
    let mixed = parse_var_set(mixed_spec)?;
    let lemmas = extract_ab_mixed(&mut proof, &mixed).map_err(|e| {
        CliError::Violation(format!("{e}; reorder with --light over the mixed variables first"))
    })?;
    let mut out = String::new();
    for (clause, _node) in &lemmas {
        for lit in clause.to_dimacs() {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    print!("{out}");
    eprintln!("proofkit: {} lemma(s), {} node(s) remain", lemmas.len(), proof.node_count());
    if let Some(path) = output {
        let text = write_tracecheck(&proof).map_err(|e| CliError::Violation(e.to_string()))?;
        write_out(path, &text)?;
    }
    Ok(())
}

fn dot(path: &Path, output: Option<&Path>, options: TraceCheckOptions) -> RunResult {
    let proof = load_proof(path, options)?;
    emit(output, &export_dot(&proof))
}

fn bench(
    dir: &Path,
    pipeline: &PipelineArgs,
    metrics_path: Option<&Path>,
    jobs: Option<usize>,
    options: TraceCheckOptions,
    seed: u64,
) -> RunResult {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            is_cnf_path(p)
                || p.extension().and_then(|e| e.to_str()).is_some_and(|e| {
                    e.eq_ignore_ascii_case("trace")
                })
        })
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Usage(format!(
            "{}: no .cnf, .dimacs, or .trace instances found",
            dir.display()
        )));
    }

    let work = |path: &PathBuf| -> Result<(String, CompressionMetrics), CliError> {
        let (mut proof, solve_time) = load_instance(path, options, seed)?;
        let budget = resolve_budget(pipeline, solve_time)?;
        let plan = build_plan(pipeline, budget)?;
        let metrics = run_pipeline(&mut proof, &plan, &CompressionStrategy);
        let report = proof.check_legal();
        if !report.is_legal() {
            return Err(CliError::Violation(format!(
                "{}: compressed proof failed its legality check",
                path.display()
            )));
        }
        Ok((instance_name(path), metrics))
    };
    let results: Vec<Result<(String, CompressionMetrics), CliError>> = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("--jobs {n}: {e}")))?
            .install(|| paths.par_iter().map(work).collect()),
        None => paths.par_iter().map(work).collect(),
    };
    let mut rows = Vec::with_capacity(results.len());
    for result in results {
        rows.push(result?);
    }

    let n = rows.len() as f64;
    let mean = |f: fn(&CompressionMetrics) -> f64| {
        rows.iter().map(|(_, m)| f(m)).sum::<f64>() / n
    };
    println!(
        "{}: {} instance(s), mean RedNodes% {:.1}, mean RedEdges% {:.1}, mean RedCore% {:.1}",
        build_plan(pipeline, Duration::ZERO)?.name(),
        rows.len(),
        mean(CompressionMetrics::red_nodes_pct),
        mean(CompressionMetrics::red_edges_pct),
        mean(CompressionMetrics::red_core_pct)
    );
    if let Some(csv) = metrics_path {
        append_metrics(csv, &rows)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_var_lists_parse_and_files_are_detected() {
        let vars = parse_var_set("5,6,7,8").unwrap();
        assert_eq!(
            vars.into_iter().map(Var::number).collect::<Vec<_>>(),
            vec![5, 6, 7, 8]
        );
        assert!(matches!(parse_var_set("/no/such/file"), Err(CliError::Usage(_))));
    }

    #[test]
    fn var_files_accept_whitespace_and_commas() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("light.vars");
        fs::write(&path, "5 6\n7,8\n").unwrap();
        let vars = parse_var_set(path.to_str().unwrap()).unwrap();
        assert_eq!(
            vars.into_iter().map(Var::number).collect::<Vec<_>>(),
            vec![5, 6, 7, 8]
        );
    }

    #[test]
    fn budgets_prefer_absolute_over_ratio() {
        let args = |time_limit, ratio| PipelineArgs {
            plan: "rpi".to_string(),
            loops: 1,
            travs: 3,
            time_limit,
            ratio,
        };
        let solve = Some(Duration::from_secs(10));
        assert_eq!(
            resolve_budget(&args(Some(2.0), Some(0.5)), solve).unwrap(),
            Duration::from_secs(2)
        );
        assert_eq!(resolve_budget(&args(None, Some(0.5)), solve).unwrap(), Duration::from_secs(5));
        assert!(matches!(
            resolve_budget(&args(None, Some(0.5)), None),
            Err(CliError::Usage(_))
        ));
        assert_eq!(
            resolve_budget(&args(None, None), None).unwrap(),
            Duration::from_secs_f64(DEFAULT_TIME_LIMIT)
        );
    }

    #[test]
    fn seed_resolution_prefers_the_flag() {
        assert_eq!(resolve_seed(Some(7)).unwrap(), 7);
        // The environment fallback is exercised in the binary-level tests;
        // reading the process environment here would race other tests.
    }

    #[test]
    fn command_line_shapes_parse() {
        assert!(RunConfig::try_parse_from(["proofkit", "check", "p.trace"]).is_ok());
        assert!(RunConfig::try_parse_from([
            "proofkit",
            "interpolate",
            "ab.cnf",
            "--partition",
            "ab.part",
            "--algo",
            "mcmillan-prime",
            "--reorder",
            "dnf",
            "--verify",
        ])
        .is_ok());
        // A B-file and a partition index are mutually exclusive.
        assert!(RunConfig::try_parse_from([
            "proofkit",
            "interpolate",
            "a.cnf",
            "b.cnf",
            "--partition",
            "ab.part",
        ])
        .is_err());
        // One of them is required.
        assert!(RunConfig::try_parse_from(["proofkit", "interpolate", "a.cnf"]).is_err());
        // --linear without --reorder is rejected.
        assert!(RunConfig::try_parse_from([
            "proofkit",
            "interpolate",
            "a.cnf",
            "b.cnf",
            "--linear",
        ])
        .is_err());
    }
}
