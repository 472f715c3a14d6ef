//! Command-line front end for `qindset`: runs the algorithms on DIMACS files or
//! generated instances, sweeps sizes for scaling experiments, and runs the
//! verification suites.

mod instance;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qindset::adversary::{audit_flips, build_gadget, flip_relation_counts, Family};
use qindset::algorithms::{greedy_coloring, k_independent_set, maximal_is_with, maximum_is, PivotRule};
use qindset::bench::{fit_exponent, mean_by_size};
use qindset::graph::{gen_random, to_dimacs};
use qindset::oct::{min_oct, InnerSolver};
use qindset::rng::{derive_seed, seeded};
use qindset::verify::{verify_suite, Scope, VerifyOptions};
use qindset::{AccessModel, CostModelConfig, Graph, GraphOracle, VertexSet};
use serde::Serialize;

pub use instance::GenSpec;
pub use report::{RunReport, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "qindset", version, about = "Independent-set algorithms under a quantum query cost model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Maximal independent set by repeated neighbour search.
    MaximalIs {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Pivot::Lowest)]
        pivot: Pivot,
    },
    /// Maximum independent set by amplified randomized branching.
    MaximumIs {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Compare the result with the brute-force independence number.
        #[arg(long)]
        check: bool,
    },
    /// Independent set of a given size.
    #[command(name = "k-is")]
    KIs {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        k: usize,
    },
    /// Minimum odd cycle transversal.
    Oct {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Inner::Exact)]
        inner: Inner,
    },
    /// Greedy colouring by peeling maximal independent sets.
    Color {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Lower-bound gadget families and their flip counts.
    Adversary {
        /// Family to build; both when omitted.
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Flip every vertex pair and re-evaluate (small n only).
        #[arg(long)]
        audit: bool,
        /// Write the gadget (or the last one, with both families) as DIMACS.
        #[arg(long)]
        dimacs: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Scaling sweep over random graphs, one row per (size, rep).
    Bench {
        #[arg(value_enum)]
        algo: BenchAlgo,
        #[arg(long, value_delimiter = ',', default_value = "32,64,128,256")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Oracle-equivalence and invariant suites.
    Verify {
        /// Comma-separated scopes; all when omitted.
        #[arg(long, value_delimiter = ',')]
        scope: Vec<Scope>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        random_nmax: Option<usize>,
        #[arg(long = "Nmax", default_value_t = 1024)]
        big_n_max: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        mc_trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct InstanceArgs {
    /// DIMACS edge file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// random:<n>:<p>, path:<n>, cycle:<n>, complete:<n>, gadgetA:<n>, gadgetB:<n> or petersen.
    #[arg(long)]
    pub gen: Option<GenSpec>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value = "matrix")]
    pub model: AccessModel,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write CSV here instead of JSON to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also print JSON to stdout when writing CSV.
    #[arg(long)]
    pub json: bool,
    /// Repetitions (default 1, or 20 for bench).
    #[arg(long)]
    pub reps: Option<usize>,
    /// Probability that a simulated quantum search fails.
    #[arg(long, default_value_t = 0.0)]
    pub fail_prob: f64,
    /// Amplitude amplification constant.
    #[arg(long, default_value_t = 1.0)]
    pub budget_scale: f64,
}

impl RunArgs {
    fn cfg(&self) -> CostModelConfig {
        CostModelConfig {
            failure_probability: self.fail_prob,
            amplification_constant: self.budget_scale,
            ..CostModelConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pivot {
    Lowest,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Inner {
    Exact,
    Amplified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    MaximalIs,
    MaximumIs,
    Color,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 on a runtime error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match command {
        Command::MaximalIs { instance, run, pivot } => {
            let rule = match pivot {
                Pivot::Lowest => PivotRule::LowestIndex,
                Pivot::Random => PivotRule::Random,
            };
            single("maximal-is", &instance, &run, out, |g, rep| {
                let mut o = GraphOracle::new(g, run.model);
                let r = maximal_is_with(&mut o, &run.cfg(), rule, &mut seeded(rep.run_seed))?;
                rep.model = run.model.to_string();
                rep.params = format!("pivot={};fail_prob={}", pivot_name(pivot), run.fail_prob);
                set_result(rep, &r.set);
                rep.set_ledger(&r.ledger);
                if r.failed_searches > 0 {
                    rep.notes = format!("failed_searches={}", r.failed_searches);
                }
                Ok(())
            })
        }
        Command::MaximumIs { instance, run, check } => single("maximum-is", &instance, &run, out, |g, rep| {
            let mut r = maximum_is(g, &run.cfg(), &mut seeded(rep.run_seed))?;
            rep.params = format!("budget_scale={}", run.budget_scale);
            set_result(rep, &r.set);
            rep.charged_cost = r.charged_cost;
            rep.trials = r.trials;
            if check {
                rep.notes = format!("optimal={}", r.check_optimality(g)?);
            }
            Ok(())
        }),
        Command::KIs { instance, run, k } => single("k-is", &instance, &run, out, |g, rep| {
            let r = k_independent_set(g, k)?;
            rep.params = format!("k={k}");
            rep.charged_cost = r.cost.value.ceil() as u64;
            rep.notes = format!("found={};cost_exponent={}", r.set.is_some(), r.cost.exponent);
            if let Some(s) = &r.set {
                set_result(rep, s);
            }
            Ok(())
        }),
        Command::Oct { instance, run, inner } => single("oct", &instance, &run, out, |g, rep| {
            let solver = match inner {
                Inner::Exact => InnerSolver::Exact,
                Inner::Amplified => InnerSolver::Amplified,
            };
            let r = min_oct(g, solver, &run.cfg(), &mut seeded(rep.run_seed))?;
            rep.params = format!("inner={};budget_scale={}", inner_name(inner), run.budget_scale);
            set_result(rep, &r.transversal);
            rep.charged_cost = r.charged_cost;
            rep.trials = r.candidates;
            let mut notes = vec![format!("invalid_candidates={}", r.invalid_candidates)];
            if r.per_component {
                notes.push("per_component=true".into());
            }
            rep.notes = notes.join(";");
            Ok(())
        }),
        Command::Color { instance, run } => single("color", &instance, &run, out, |g, rep| {
            let mut o = GraphOracle::new(g, run.model);
            let c = greedy_coloring(&mut o, &run.cfg(), &mut seeded(rep.run_seed))?;
            rep.model = run.model.to_string();
            rep.params = format!("fail_prob={}", run.fail_prob);
            rep.result_size = c.k;
            rep.result_set = c.classes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("|");
            rep.set_ledger(&c.ledger);
            rep.notes = format!("max_round_cost={}", c.round_costs.iter().max().copied().unwrap_or(0));
            Ok(())
        }),
        Command::Adversary { family, n, audit, dimacs, run } => {
            let families = family.map_or(vec![Family::A, Family::B], |f| vec![f]);
            let counts = flip_relation_counts(n)?;
            let mut rows = Vec::new();
            for fam in families {
                let start = Instant::now();
                let inst = build_gadget(fam, n)?;
                let mut rep = blank("adversary", &format!("gen:gadget{fam}:{n}"), &inst.graph, run.seed, 0, run.seed);
                rep.params = format!("family={fam};n={n}");
                rep.result_size = usize::from(inst.f()?);
                let mut notes = vec![
                    format!("f={}", u8::from(inst.f()?)),
                    format!("m={}", counts.m),
                    format!("m_prime={}", counts.m_prime),
                    format!("bound={:.6}", counts.bound),
                ];
                if audit {
                    let a = audit_flips(fam, n)?;
                    rep.trials = a.pairs_tried;
                    notes.push(format!("cross_family={}", a.cross_family));
                    notes.push(format!("f_changed={}", a.f_changed));
                    notes.push(format!("consistent={}", a.consistent()));
                }
                rep.notes = notes.join(";");
                if let Some(path) = &dimacs {
                    std::fs::write(path, to_dimacs(&inst.graph))?;
                }
                rep.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
                rows.push(rep);
            }
            emit(&run, &rows, out)
        }
        Command::Bench { algo, sizes, density, run } => bench(algo, &sizes, density, &run, out, err),
        Command::Verify { scope, nmax, random_nmax, big_n_max, samples, mc_trials, seed, out: path, json } => {
            let scopes = if scope.is_empty() { Scope::ALL.to_vec() } else { scope };
            let opts = VerifyOptions { nmax, random_nmax, samples, mc_trials, big_n_max, seed };
            let report = verify_suite(&scopes, &opts)?;
            if let Some(path) = &path {
                #[derive(Serialize)]
                struct Row<'a> {
                    schema_version: u32,
                    scope: &'a str,
                    cases: u64,
                    failures: u64,
                    passed: bool,
                    first_counterexample: &'a str,
                }
                let rows: Vec<Row> = report
                    .checks
                    .iter()
                    .map(|c| Row {
                        schema_version: SCHEMA_VERSION,
                        scope: c.scope.name(),
                        cases: c.cases,
                        failures: c.failures,
                        passed: c.passed(),
                        first_counterexample: c.counterexamples.first().map_or("", String::as_str),
                    })
                    .collect();
                report::write_csv(path, &rows)?;
            }
            if path.is_none() || json {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            }
            for c in &report.checks {
                writeln!(err, "{}: {} ({} cases, {} failures)", c.scope, if c.passed() { "pass" } else { "FAIL" }, c.cases, c.failures)?;
            }
            Ok(())
        }
    }
}

fn pivot_name(p: Pivot) -> &'static str {
    match p {
        Pivot::Lowest => "lowest",
        Pivot::Random => "random",
    }
}

fn inner_name(i: Inner) -> &'static str {
    match i {
        Inner::Exact => "exact",
        Inner::Amplified => "amplified",
    }
}

fn set_result(rep: &mut RunReport, s: &VertexSet) {
    rep.result_size = s.len();
    rep.result_set = s.to_string();
}

fn blank(command: &str, source: &str, g: &Graph, seed: u64, rep: usize, run_seed: u64) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        command: command.into(),
        source: source.into(),
        n: g.n(),
        m: g.m(),
        seed,
        rep,
        run_seed,
        model: "none".into(),
        params: String::new(),
        result_size: 0,
        result_set: String::new(),
        matrix_queries: 0,
        list_queries: 0,
        degree_queries: 0,
        charged_cost: 0,
        trials: 0,
        notes: String::new(),
        wall_time_ms: 0.0,
    }
}

/// Runs `body` once per repetition on the instance; repetition `r` draws its
/// randomness from `derive_seed(seed, [r])`.
fn single<F>(command: &str, instance: &InstanceArgs, run: &RunArgs, out: &mut dyn Write, mut body: F) -> Result<()>
where
    F: FnMut(&Graph, &mut RunReport) -> Result<()>,
{
    run.cfg().validate()?;
    let source = match (&instance.input, &instance.gen) {
        (Some(p), None) => instance::Source::File(p.clone()),
        (None, Some(g)) => instance::Source::Gen(g.clone()),
        _ => bail!("exactly one of --input and --gen is required"),
    };
    let (g, label) = source.load(run.seed)?;
    let mut rows = Vec::new();
    for r in 0..run.reps.unwrap_or(1) {
        let start = Instant::now();
        let mut rep = blank(command, &label, &g, run.seed, r, derive_seed(run.seed, &[r as u64]));
        body(&g, &mut rep)?;
        rep.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        rows.push(rep);
    }
    emit(run, &rows, out)
}

fn emit(run: &RunArgs, rows: &[RunReport], out: &mut dyn Write) -> Result<()> {
    if let Some(path) = &run.out {
        report::write_csv(path, rows)?;
    }
    if run.out.is_none() || run.json {
        report::write_json_lines(out, rows)?;
    }
    Ok(())
}

fn bench(algo: BenchAlgo, sizes: &[usize], density: f64, run: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let cfg = run.cfg();
    cfg.validate()?;
    let reps = run.reps.unwrap_or(20);
    let command = match algo {
        BenchAlgo::MaximalIs => "bench:maximal-is",
        BenchAlgo::MaximumIs => "bench:maximum-is",
        BenchAlgo::Color => "bench:color",
    };
    let mut rows = Vec::new();
    for &n in sizes {
        for r in 0..reps {
            let start = Instant::now();
            let instance_seed = derive_seed(run.seed, &[n as u64, r as u64]);
            let g = gen_random(n, density, instance_seed)?;
            let mut rep = blank(command, &format!("gen:random:{n}:{density}"), &g, instance_seed, r, instance_seed.wrapping_add(1));
            let mut rng = seeded(rep.run_seed);
            match algo {
                BenchAlgo::MaximalIs => {
                    let mut o = GraphOracle::new(&g, run.model);
                    let res = maximal_is_with(&mut o, &cfg, PivotRule::LowestIndex, &mut rng)?;
                    rep.model = run.model.to_string();
                    set_result(&mut rep, &res.set);
                    rep.set_ledger(&res.ledger);
                }
                BenchAlgo::Color => {
                    let mut o = GraphOracle::new(&g, run.model);
                    let c = greedy_coloring(&mut o, &cfg, &mut rng)?;
                    rep.model = run.model.to_string();
                    rep.result_size = c.k;
                    rep.set_ledger(&c.ledger);
                }
                BenchAlgo::MaximumIs => {
                    let res = maximum_is(&g, &cfg, &mut rng)?;
                    set_result(&mut rep, &res.set);
                    rep.charged_cost = res.charged_cost;
                    rep.trials = res.trials;
                }
            }
            rep.params = format!("density={density};fail_prob={}", run.fail_prob);
            rep.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
            rows.push(rep);
        }
    }
    emit(run, &rows, out)?;

    let points: Vec<(f64, f64)> = mean_rows(&rows);
    if points.len() >= 3 && points.iter().all(|p| p.1 > 0.0) {
        let fit = fit_exponent(&points)?;
        writeln!(
            err,
            "fit: cost ~ n^{:.4} (intercept {:.4}, max log residual {:.4})",
            fit.exponent, fit.intercept, fit.max_residual
        )?;
    }
    Ok(())
}

/// Mean model cost (charge plus degree probes) per size.
fn mean_rows(rows: &[RunReport]) -> Vec<(f64, f64)> {
    let as_sweep: Vec<qindset::bench::SweepRow> = rows
        .iter()
        .map(|r| qindset::bench::SweepRow {
            n: r.n,
            rep: r.rep,
            seed: r.seed,
            m: r.m,
            set_size: r.result_size,
            ledger: qindset::QueryLedger {
                matrix_queries: r.matrix_queries,
                list_queries: r.list_queries,
                degree_queries: r.degree_queries,
                charged_cost: r.charged_cost,
            },
        })
        .collect();
    mean_by_size(&as_sweep, |r| r.ledger.model_cost() as f64)
}
