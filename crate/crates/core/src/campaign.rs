//! Exhaustive and sampled path-pairability campaigns.
//!
//! Work is split into fixed-size index chunks. Chunks are solved in parallel
//! in batches of [`BATCH_CHUNKS`] and merged in index order, so a report
//! depends only on the inputs, never on the number of worker threads.

use crate::enumerate::{seeded_sample, Canonicalizer, EnumerateError, PairingSpace};
use crate::grid::{GridGraph, Vertex};
use crate::instance::format_instance;
use crate::linkage::Pairing;
use crate::oracle::{Limits, Oracle, PruneConfig, SolveOptions, Status};
use crate::validate::validate_linkage;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

const BATCH_CHUNKS: u64 = 64;
const MAX_RECORDED_TIMEOUTS: usize = 16;

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

impl Mode {
    pub fn seed(self) -> Option<u64> {
        match self {
            Mode::Sampled { seed, .. } => Some(seed),
            Mode::Exhaustive => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub limits: Limits,
    pub prune: PruneConfig,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub jobs: usize,
    /// Refuse exhaustive campaigns over more pairings than this.
    pub max_instances: u128,
    /// Stop after the batch containing the first UNSAT instance.
    pub stop_at_first_unsat: bool,
    pub chunk_size: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            limits: Limits::default(),
            prune: PruneConfig::default(),
            jobs: 0,
            max_instances: 200_000_000,
            stop_at_first_unsat: true,
            chunk_size: 2048,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exhaustive, complete, no UNSAT instance.
    Pairable,
    /// An UNSAT instance was found.
    NotPairable,
    /// Sampled or region-restricted campaign without UNSAT instances.
    NoCounterexampleInSample,
    /// Budget exhaustion left some instance undecided.
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: u64,
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub rows: u8,
    pub cols: u8,
    pub k: usize,
    pub mode: Mode,
    /// Size of the full pairing space.
    pub total_pairings: u64,
    /// Exhaustive mode: whether only orbit representatives were solved.
    pub canonical: bool,
    /// Instances actually solved; equals `sat + unsat + timeout`.
    pub examined: u64,
    pub sat: u64,
    pub unsat: u64,
    pub timeout: u64,
    /// SAT witnesses rejected by [`validate_linkage`].
    pub invalid_witnesses: u64,
    pub nodes: u64,
    pub first_unsat: Option<Witness>,
    pub timeouts: Vec<Witness>,
    pub verdict: Verdict,
    /// Terminal region of a restricted search; `None` for the whole graph.
    pub region: Option<Vec<Vertex>>,
    pub wall_time_ms: u64,
}

impl CampaignReport {
    pub fn is_complete(&self) -> bool {
        self.verdict != Verdict::Incomplete
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    sat: u64,
    unsat: u64,
    timeout: u64,
    invalid: u64,
    nodes: u64,
    first_unsat: Option<(u64, Pairing)>,
    timeouts: Vec<(u64, Pairing)>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.examined += other.examined;
        self.sat += other.sat;
        self.unsat += other.unsat;
        self.timeout += other.timeout;
        self.invalid += other.invalid;
        self.nodes += other.nodes;
        if self.first_unsat.is_none() {
            self.first_unsat = other.first_unsat;
        }
        for t in other.timeouts {
            if self.timeouts.len() < MAX_RECORDED_TIMEOUTS {
                self.timeouts.push(t);
            }
        }
    }
}

fn solve_chunk(g: &GridGraph, oracle: &Oracle, opts: &SolveOptions, items: impl Iterator<Item = (u64, Pairing)>) -> Tally {
    let mut t = Tally::default();
    for (index, p) in items {
        let report = oracle.solve(&p, opts).expect("enumerated pairings are valid");
        t.examined += 1;
        t.nodes += report.nodes_expanded;
        match report.status {
            Status::Sat(l) => {
                t.sat += 1;
                if validate_linkage(g, &p, &l).is_err() {
                    t.invalid += 1;
                }
            }
            Status::Unsat => {
                t.unsat += 1;
                if t.first_unsat.is_none() {
                    t.first_unsat = Some((index, p));
                }
            }
            Status::Timeout => {
                t.timeout += 1;
                if t.timeouts.len() < MAX_RECORDED_TIMEOUTS {
                    t.timeouts.push((index, p));
                }
            }
        }
    }
    t
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, CampaignError> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CampaignError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Run chunks `0..chunks` in ordered batches.
fn run_chunks(chunks: u64, stop_at_first_unsat: bool, solve: impl Fn(u64) -> Tally + Sync) -> Tally {
    let mut total = Tally::default();
    let mut next = 0;
    while next < chunks {
        let end = (next + BATCH_CHUNKS).min(chunks);
        let results: Vec<Tally> = (next..end).into_par_iter().map(&solve).collect();
        for r in results {
            total.absorb(r);
        }
        next = end;
        if stop_at_first_unsat && total.first_unsat.is_some() {
            break;
        }
    }
    total
}

/// Decide whether `g` is `k`-path-pairable over all pairings (canonical
/// representatives only) or over a seeded uniform sample.
pub fn is_k_path_pairable(g: &GridGraph, k: usize, mode: Mode, config: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    let start = Instant::now();
    let space = PairingSpace::new(g, k)?;
    let oracle = Oracle::new(g);
    let opts = SolveOptions { limits: config.limits, prune: config.prune, ..SolveOptions::default() };
    let chunk = config.chunk_size.max(1);
    let tally = match mode {
        Mode::Exhaustive => {
            if space.total() > config.max_instances {
                return Err(EnumerateError::TooMany { count: space.total(), cap: config.max_instances }.into());
            }
            let canon = Canonicalizer::new(g);
            let total = space.total() as u64;
            let chunks = total.div_ceil(chunk);
            with_pool(config.jobs, || {
                run_chunks(chunks, config.stop_at_first_unsat, |c| {
                    let lo = c * chunk;
                    let items = space
                        .range(lo as u128, (lo + chunk) as u128)
                        .zip(lo..)
                        .filter(|(p, _)| canon.is_canonical(p))
                        .map(|(p, i)| (i, p));
                    solve_chunk(g, &oracle, &opts, items)
                })
            })?
        }
        Mode::Sampled { samples, seed } => {
            let vertices: Vec<Vertex> = space.vertices().to_vec();
            let chunks = samples.div_ceil(chunk);
            with_pool(config.jobs, || {
                run_chunks(chunks, config.stop_at_first_unsat, |c| {
                    let lo = c * chunk;
                    let hi = (lo + chunk).min(samples);
                    let items = (lo..hi).map(|i| (i, seeded_sample(&vertices, k, seed, i)));
                    solve_chunk(g, &oracle, &opts, items)
                })
            })?
        }
    };
    Ok(build_report(g, k, mode, &space, tally, None, start))
}

/// Search pairings with all terminals in `region`, in index order, for one
/// with no weak linkage in `g`. Every instance is solved; no symmetry
/// reduction is applied.
pub fn search_unsat_in_region(
    g: &GridGraph,
    k: usize,
    region: &[Vertex],
    config: &CampaignConfig,
) -> Result<CampaignReport, CampaignError> {
    let start = Instant::now();
    let space = PairingSpace::over(region.to_vec(), k)?;
    if space.total() > config.max_instances {
        return Err(EnumerateError::TooMany { count: space.total(), cap: config.max_instances }.into());
    }
    let oracle = Oracle::new(g);
    let opts = SolveOptions { limits: config.limits, prune: config.prune, ..SolveOptions::default() };
    let chunk = config.chunk_size.max(1);
    let chunks = (space.total() as u64).div_ceil(chunk);
    let tally = with_pool(config.jobs, || {
        run_chunks(chunks, config.stop_at_first_unsat, |c| {
            let lo = c * chunk;
            let items = space.range(lo as u128, (lo + chunk) as u128).zip(lo..).map(|(p, i)| (i, p));
            solve_chunk(g, &oracle, &opts, items)
        })
    })?;
    Ok(build_report(g, k, Mode::Exhaustive, &space, tally, Some(region.to_vec()), start))
}

fn build_report(
    g: &GridGraph,
    k: usize,
    mode: Mode,
    space: &PairingSpace,
    tally: Tally,
    region: Option<Vec<Vertex>>,
    start: Instant,
) -> CampaignReport {
    let verdict = if tally.unsat > 0 {
        Verdict::NotPairable
    } else if tally.timeout > 0 {
        Verdict::Incomplete
    } else if matches!(mode, Mode::Exhaustive) && region.is_none() {
        Verdict::Pairable
    } else {
        Verdict::NoCounterexampleInSample
    };
    let witness = |(index, p): (u64, Pairing)| Witness { index, instance: format_instance(g, &p) };
    CampaignReport {
        rows: g.rows(),
        cols: g.cols(),
        k,
        mode,
        total_pairings: u64::try_from(space.total()).unwrap_or(u64::MAX),
        canonical: matches!(mode, Mode::Exhaustive) && region.is_none(),
        examined: tally.examined,
        sat: tally.sat,
        unsat: tally.unsat,
        timeout: tally.timeout,
        invalid_witnesses: tally.invalid,
        nodes: tally.nodes,
        first_unsat: tally.first_unsat.map(witness),
        timeouts: tally.timeouts.into_iter().map(witness).collect(),
        verdict,
        region,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PpReport {
    /// Largest certified `k`; a lower bound only when `complete` is false.
    pub value: usize,
    /// True when `value` is exact or equals `kmax`.
    pub complete: bool,
    pub campaigns: Vec<CampaignReport>,
}

/// Largest `k ≤ kmax` for which exhaustive search finds `g` `k`-path-pairable.
pub fn pp_number(g: &GridGraph, kmax: usize, config: &CampaignConfig) -> Result<PpReport, CampaignError> {
    let mut campaigns = Vec::new();
    let mut value = 0;
    for k in 1..=kmax {
        let report = is_k_path_pairable(g, k, Mode::Exhaustive, config)?;
        let verdict = report.verdict;
        campaigns.push(report);
        match verdict {
            Verdict::Pairable => value = k,
            Verdict::NotPairable => return Ok(PpReport { value, complete: true, campaigns }),
            _ => return Ok(PpReport { value, complete: false, campaigns }),
        }
    }
    Ok(PpReport { value, complete: true, campaigns })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakLinkReport {
    pub linked: bool,
    pub complete: bool,
    pub quadruples: u64,
    /// `(u1, v1, u2, v2)` with no edge-disjoint `u1v1`- and `u2v2`-paths.
    pub first_failure: Option<[Vertex; 4]>,
}

/// Whether every two vertex pairs of `g`, not necessarily distinct, can be
/// joined by edge-disjoint paths.
pub fn check_weakly_2_linked(g: &GridGraph, limits: Limits) -> WeakLinkReport {
    let oracle = Oracle::new(g);
    let vs = g.vertices();
    let mut pairs = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i..] {
            pairs.push((a, b));
        }
    }
    let opts = SolveOptions { limits, allow_coincident: true, ..SolveOptions::default() };
    let mut report = WeakLinkReport { linked: true, complete: true, quadruples: 0, first_failure: None };
    for (i, &first) in pairs.iter().enumerate() {
        for &second in &pairs[i..] {
            report.quadruples += 1;
            let p = Pairing::new_unchecked(vec![first, second]);
            match oracle.solve(&p, &opts).expect("vertices of g").status {
                Status::Sat(_) => {}
                Status::Unsat => {
                    report.linked = false;
                    report.first_failure = Some([first.0, first.1, second.0, second.1]);
                    return report;
                }
                Status::Timeout => report.complete = false,
            }
        }
    }
    report
}
