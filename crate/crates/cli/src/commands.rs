//! Subcommands. Each returns its output and exit code instead of exiting,
//! so the whole surface can be driven from tests.

use crate::certificate::Certificate;
use crate::claims::{campaign_lines, registry, run_claim, unsat_witness, with_jobs, ClaimError, ClaimOptions};
use crate::render;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridlink_construct::{counterexample_instance, solve_constructive, Trace};
use gridlink_core::{
    format_instance, format_linkage, is_k_path_pairable, parse_instance, validate_linkage, CampaignConfig, GridGraph,
    Instance, Limits, Linkage, Mode, Oracle, SolveOptions, Status, Verdict, Vertex,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::time::Duration;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Outcome {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_USAGE }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gridlink", version, about = "Weak linkage solving and certification on grid graphs")]
pub struct Cli {
    /// Worker threads for campaigns (default: all available).
    #[arg(long, global = true, env = "GRIDLINK_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct LimitArgs {
    /// Search node budget per instance.
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Time budget per instance, in seconds.
    #[arg(long)]
    pub time_limit: Option<u64>,
}

impl LimitArgs {
    fn limits(&self, base: Limits) -> Limits {
        Limits {
            max_nodes: self.node_limit.unwrap_or(base.max_nodes),
            max_time: self.time_limit.map_or(base.max_time, Duration::from_secs),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Constructive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CampaignMode {
    Exhaustive,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a weak linkage for an instance file.
    Solve {
        #[arg(long)]
        file: String,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
        #[command(flatten)]
        limits: LimitArgs,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Check the paths given in an instance file.
    Verify {
        #[arg(long)]
        file: String,
    },
    /// Decide k-path-pairability of a grid, exhaustively or on a sample.
    Pp {
        #[arg(long)]
        rows: i64,
        #[arg(long)]
        cols: i64,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: CampaignMode,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Certify one local routing statement over all its configurations.
    Lemma {
        #[arg(long)]
        name: String,
        /// All eight placements of the local frame instead of NW only.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Refute the five-pair instance for one placement of t1 and t5.
    Counterexample {
        #[arg(long, value_parser = parse_vertex)]
        t1: Vertex,
        #[arg(long, value_parser = parse_vertex)]
        t5: Vertex,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Draw the linkage of an instance file.
    Render {
        #[arg(long)]
        file: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run a registered claim and print its certificate.
    Certify {
        #[arg(long, required_unless_present = "list")]
        claim: Option<String>,
        /// List claim ids and statements.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Lemma claims: north-west placement only.
        #[arg(long)]
        nw_only: bool,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        json: bool,
        /// Also write the certificate to this file.
        #[arg(long)]
        out: Option<String>,
    },
}

/// Accepts `r,c` or `(r,c)`.
pub fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (r, c) = inner.split_once(',').ok_or_else(|| format!("'{s}' is not ROW,COL"))?;
    let num = |x: &str| x.trim().parse::<u8>().map_err(|_| format!("'{x}' is not a coordinate"));
    Ok(Vertex::new(num(r)?, num(c)?))
}

fn load(file: &str) -> Result<Instance, Outcome> {
    let text = std::fs::read_to_string(file).map_err(|e| Outcome::usage(format!("{file}: {e}")))?;
    parse_instance(&text).map_err(|e| Outcome::usage(format!("{file}: {e}")))
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text, EXIT_OK),
                _ => Outcome { stdout: String::new(), stderr: text, code: EXIT_USAGE },
            }
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let jobs = cli.jobs.unwrap_or(0);
    match cli.command {
        Command::Solve { file, method, limits, json } => solve(&file, method, limits.limits(Limits::default()), json),
        Command::Verify { file } => verify(&file),
        Command::Pp { rows, cols, k, mode, samples, seed, limits } => {
            pp(rows, cols, k, mode, samples, seed, jobs, limits.limits(Limits::default()))
        }
        Command::Lemma { name, exhaustive } => {
            let opts = ClaimOptions { jobs, all_orientations: exhaustive, ..ClaimOptions::default() };
            certificate_outcome(run_claim(&format!("lemma-{name}"), &opts), false, None)
        }
        Command::Counterexample { t1, t5, limits } => {
            counterexample(t1, t5, limits.limits(Limits { max_nodes: u64::MAX, max_time: Duration::from_secs(600) }))
        }
        Command::Render { file, format } => render_file(&file, format),
        Command::Certify { claim, list, samples, seed, nw_only, limits, json, out } => {
            if list {
                let mut s = String::new();
                for (id, stmt) in registry() {
                    let _ = writeln!(s, "{id:<16} {stmt}");
                }
                return Outcome::ok(s, EXIT_OK);
            }
            let opts = ClaimOptions {
                jobs,
                samples,
                seed,
                limits: limits.limits(Limits::default()),
                all_orientations: !nw_only,
            };
            let claim = claim.unwrap_or_default();
            certificate_outcome(run_claim(&claim, &opts), json, out.as_deref())
        }
    }
}

fn certificate_code(c: &Certificate) -> i32 {
    if !c.complete {
        EXIT_INCOMPLETE
    } else if c.holds {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn certificate_outcome(r: Result<Certificate, ClaimError>, json: bool, out: Option<&str>) -> Outcome {
    let c = match r {
        Ok(c) => c,
        Err(e @ ClaimError::Unknown(_)) => return Outcome::usage(e.to_string()),
        Err(e) => return Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_FAIL },
    };
    let text = if json { serde_json::to_string_pretty(&c).expect("serializable") + "\n" } else { c.to_text() };
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome::usage(format!("{path}: {e}"));
        }
    }
    Outcome::ok(text, certificate_code(&c))
}

fn status_code(s: &Status) -> i32 {
    match s {
        Status::Sat(_) => EXIT_OK,
        Status::Unsat => EXIT_FAIL,
        Status::Timeout => EXIT_INCOMPLETE,
    }
}

#[derive(Serialize)]
struct SolveJson<'a> {
    status: &'a str,
    method: &'a str,
    nodes: Option<u64>,
    paths: Vec<Vec<Vertex>>,
    trace: Option<&'a Trace>,
}

fn paths_of(l: Option<&Linkage>) -> Vec<Vec<Vertex>> {
    l.map(|l| l.paths().iter().map(|p| p.vertices().to_vec()).collect()).unwrap_or_default()
}

fn constructive_fits(inst: &Instance) -> bool {
    inst.grid.rows() == 6 && inst.grid.cols() == 6 && inst.pairing.len() == 4
}

fn solve(file: &str, method: Method, limits: Limits, json: bool) -> Outcome {
    let inst = match load(file) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let mut stderr = String::new();
    if method == Method::Constructive && constructive_fits(&inst) {
        return match solve_constructive(&inst.pairing) {
            Ok((l, trace)) => {
                let stdout = if json {
                    let report = SolveJson {
                        status: "SAT",
                        method: "constructive",
                        nodes: None,
                        paths: paths_of(Some(&l)),
                        trace: Some(&trace),
                    };
                    serde_json::to_string_pretty(&report).expect("serializable") + "\n"
                } else {
                    constructive_text(&l, &trace)
                };
                Outcome { stdout, stderr, code: EXIT_OK }
            }
            Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_INCOMPLETE },
        };
    }
    if method == Method::Constructive {
        stderr.push_str("note: the constructive solver covers 4 pairs on the 6x6 grid; using the oracle\n");
    }
    let opts = SolveOptions { limits, ..SolveOptions::default() };
    let report = match Oracle::new(&inst.grid).solve(&inst.pairing, &opts) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("{file}: {e}")),
    };
    let linkage = match &report.status {
        Status::Sat(l) => Some(l),
        _ => None,
    };
    let stdout = if json {
        let r = SolveJson {
            status: report.status.label(),
            method: "oracle",
            nodes: Some(report.nodes_expanded),
            paths: paths_of(linkage),
            trace: None,
        };
        serde_json::to_string_pretty(&r).expect("serializable") + "\n"
    } else {
        let mut s = format!("status: {}\nmethod: oracle\nnodes: {}\n", report.status.label(), report.nodes_expanded);
        if let Some(l) = linkage {
            s.push_str(&format_linkage(l));
        }
        s
    };
    Outcome { stdout, stderr, code: status_code(&report.status) }
}

fn constructive_text(l: &Linkage, trace: &Trace) -> String {
    let mut s = format!("status: SAT\nmethod: constructive\ncase: {}\n", trace.label);
    match &trace.fallback {
        Some(why) => {
            let _ = writeln!(s, "fallback: oracle ({why})");
        }
        None => s.push_str("fallback: none\n"),
    }
    s.push_str(&format_linkage(l));
    for (n, st) in trace.steps.iter().enumerate() {
        let lemma = st.lemma.map_or(String::new(), |id| format!(" [{}]", id.name()));
        let _ = writeln!(s, "step {}: {}{lemma}", n + 1, st.what);
        for (i, p) in &st.paths {
            let _ = writeln!(s, "  pair {}: {p}", i + 1);
        }
    }
    s
}

fn verify(file: &str) -> Outcome {
    let inst = match load(file) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let Some(l) = inst.linkage else {
        return Outcome::usage(format!("{file}: no 'path' lines to verify"));
    };
    match validate_linkage(&inst.grid, &inst.pairing, &l) {
        Ok(()) => Outcome::ok("valid\n".into(), EXIT_OK),
        Err(vs) => {
            let mut s = String::from("invalid\n");
            for v in vs {
                let _ = writeln!(s, "  {v}");
            }
            Outcome::ok(s, EXIT_FAIL)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn pp(rows: i64, cols: i64, k: usize, mode: CampaignMode, samples: u64, seed: u64, jobs: usize, limits: Limits) -> Outcome {
    let g = match GridGraph::new(rows, cols) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if k == 0 {
        return Outcome::usage("k must be at least 1");
    }
    let mode = match mode {
        CampaignMode::Exhaustive => Mode::Exhaustive,
        CampaignMode::Sample => Mode::Sampled { samples, seed },
    };
    let cfg = CampaignConfig { limits, jobs, ..CampaignConfig::default() };
    let r = match with_jobs(jobs, || is_k_path_pairable(&g, k, mode, &cfg)) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let statement = format!("The {rows}x{cols} grid is {k}-path-pairable.");
    let mut c = Certificate::new("pp", &statement, mode.seed());
    campaign_lines(&mut c, &r);
    if r.verdict == Verdict::NotPairable {
        unsat_witness(&mut c, &g, &r);
        c.holds = false;
    }
    c.wall_time_ms = r.wall_time_ms;
    c.line("pairable", match r.verdict {
        Verdict::Pairable => "true",
        Verdict::NotPairable => "false",
        Verdict::NoCounterexampleInSample => "no counterexample in sample",
        Verdict::Incomplete => "undecided",
    });
    Outcome::ok(c.to_text(), certificate_code(&c))
}

fn counterexample(t1: Vertex, t5: Vertex, limits: Limits) -> Outcome {
    let g = GridGraph::new(6, 6).expect("positive size");
    let p = match counterexample_instance(t1, t5) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("t1={t1}, t5={t5}: {e}")),
    };
    let opts = SolveOptions { limits, ..SolveOptions::default() };
    let r = Oracle::new(&g).solve(&p, &opts).expect("validated instance");
    let mut c = Certificate::new(
        "counterexample",
        "The five-pair instance with eight terminals in the NW quadrant has no weak linkage.",
        None,
    );
    c.line("t1", t1);
    c.line("t5", t5);
    c.line("status", r.status.label());
    c.line("nodes", r.nodes_expanded);
    c.witnesses.push(format_instance(&g, &p));
    match &r.status {
        Status::Unsat => {}
        Status::Sat(l) => {
            c.holds = false;
            c.witnesses[0].push_str(&format_linkage(l));
        }
        Status::Timeout => c.complete = false,
    }
    c.wall_time_ms = r.elapsed.as_millis() as u64;
    Outcome::ok(c.to_text(), certificate_code(&c))
}

fn render_file(file: &str, format: Format) -> Outcome {
    let inst = match load(file) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let Some(l) = inst.linkage else {
        return Outcome::usage(format!("{file}: no 'path' lines to render"));
    };
    let drawn = match format {
        Format::Ascii => render::ascii(&inst.grid, &inst.pairing, &l),
        Format::Svg => render::svg(&inst.grid, &inst.pairing, &l),
    };
    match drawn {
        Ok(s) => Outcome::ok(s, EXIT_OK),
        Err(vs) => {
            let mut s = String::from("error: refusing to render an invalid linkage\n");
            for v in vs {
                let _ = writeln!(s, "  {v}");
            }
            Outcome { stdout: String::new(), stderr: s, code: EXIT_FAIL }
        }
    }
}
