//! Registry of checkable claims, each run as a campaign that ends in a
//! [`Certificate`].

use crate::certificate::Certificate;
use gridlink_construct::{constructive_campaign, counterexample_instance};
use gridlink_core::{
    is_k_path_pairable, parse_instance, pp_number, search_unsat_in_region, seeded_sample, v, CampaignConfig,
    CampaignError, CampaignReport, GridGraph, Limits, Mode, Oracle, Pairing, PruneConfig, SolveOptions, Status,
    Verdict, Vertex,
};
use gridlink_lemmas::{certify, CertifyOptions, LemmaId};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim '{0}'; see `gridlink certify --list`")]
    Unknown(String),
    #[error(transparent)]
    Campaign(#[from] CampaignError),
}

#[derive(Clone, Debug)]
pub struct ClaimOptions {
    /// Worker threads; 0 uses all available.
    pub jobs: usize,
    pub samples: u64,
    pub seed: u64,
    pub limits: Limits,
    /// Lemma claims: every placement of the local frame instead of NW only.
    pub all_orientations: bool,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        ClaimOptions {
            jobs: 0,
            samples: 100_000,
            seed: 7,
            limits: Limits::default(),
            all_orientations: true,
        }
    }
}

/// Number of `(t1, t5)` placements checked for the five-pair instance.
pub const PLACEMENTS: usize = 10;

const FIXED: [(&str, &str); 7] = [
    ("pp22", "The 2x2 grid is 1-path-pairable and not 2-path-pairable."),
    ("pp33", "The 3x3 grid is 2-path-pairable and not 3-path-pairable."),
    ("pp44", "The 4x4 grid is 3-path-pairable and not 4-path-pairable."),
    ("g55", "The 5x5 grid is not 4-path-pairable."),
    (
        "g66-k5",
        "The 6x6 grid is not 5-path-pairable: the five-pair instance with eight terminals in the NW quadrant \
         has no weak linkage, wherever the two remaining terminals are placed.",
    ),
    ("g66-k4-sample", "Every pairing of 4 pairs of distinct vertices of the 6x6 grid has a weak linkage (sampled)."),
    (
        "constructive",
        "The case-analysis solver returns a valid linkage for every sampled 4-pair pairing of the 6x6 grid.",
    ),
];

/// Claim ids with their statements, lemma claims last.
pub fn registry() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = FIXED.iter().map(|&(id, s)| (id.to_string(), s.to_string())).collect();
    for l in LemmaId::ALL {
        out.push((format!("lemma-{}", l.name()), l.statement().to_string()));
    }
    out
}

fn statement(id: &str) -> Option<String> {
    registry().into_iter().find(|(k, _)| k == id).map(|(_, s)| s)
}

fn config(opts: &ClaimOptions) -> CampaignConfig {
    CampaignConfig { limits: opts.limits, jobs: opts.jobs, ..CampaignConfig::default() }
}

/// Run `f` on a pool of `jobs` threads, or the ambient pool for 0.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Re-decide a witness with pruning switched off and no node budget, so an
/// UNSAT verdict does not rest on the cut rules.
pub fn refute_unpruned(g: &GridGraph, instance: &str) -> Status {
    let p = match parse_instance(instance) {
        Ok(inst) => inst.pairing,
        Err(_) => return Status::Timeout,
    };
    let opts = SolveOptions {
        limits: Limits { max_nodes: u64::MAX, max_time: Duration::from_secs(600) },
        prune: PruneConfig::NONE,
        ..SolveOptions::default()
    };
    Oracle::new(g).solve(&p, &opts).map(|r| r.status).unwrap_or(Status::Timeout)
}

pub(crate) fn campaign_lines(c: &mut Certificate, r: &CampaignReport) {
    let tag = format!("k{}", r.k);
    c.line(&format!("{tag}.mode"), match r.mode {
        Mode::Exhaustive if r.region.is_some() => "region search".to_string(),
        Mode::Exhaustive => "exhaustive, canonical representatives".to_string(),
        Mode::Sampled { samples, seed } => format!("sampled {samples} (seed {seed})"),
    });
    if let Some(region) = &r.region {
        let vs: Vec<String> = region.iter().map(|x| x.to_string()).collect();
        c.line(&format!("{tag}.region"), vs.join(" "));
    }
    c.line(&format!("{tag}.total_pairings"), r.total_pairings);
    c.line(&format!("{tag}.examined"), r.examined);
    c.line(&format!("{tag}.sat"), r.sat);
    c.line(&format!("{tag}.unsat"), r.unsat);
    c.line(&format!("{tag}.timeout"), r.timeout);
    c.line(&format!("{tag}.invalid_witnesses"), r.invalid_witnesses);
    c.line(&format!("{tag}.verdict"), format!("{:?}", r.verdict));
    if !r.is_complete() {
        c.complete = false;
    }
    if r.invalid_witnesses > 0 {
        c.holds = false;
    }
}

/// Record the first UNSAT instance of `r` and its independent refutation.
pub(crate) fn unsat_witness(c: &mut Certificate, g: &GridGraph, r: &CampaignReport) -> bool {
    let Some(w) = &r.first_unsat else {
        c.line(&format!("k{}.witness", r.k), "none found");
        return false;
    };
    let again = refute_unpruned(g, &w.instance);
    c.line(&format!("k{}.witness_index", r.k), w.index);
    c.line(&format!("k{}.witness_recheck_unpruned", r.k), again.label());
    c.witnesses.push(w.instance.clone());
    again == Status::Unsat
}

fn pp_claim(c: &mut Certificate, side: i64, expected: usize, opts: &ClaimOptions) -> Result<(), ClaimError> {
    let g = GridGraph::new(side, side).expect("positive size");
    let r = pp_number(&g, expected + 1, &config(opts))?;
    for camp in &r.campaigns {
        campaign_lines(c, camp);
    }
    c.line("pp", r.value);
    let refuted = r.campaigns.last().is_some_and(|last| unsat_witness(c, &g, last));
    c.complete &= r.complete;
    c.holds &= r.value == expected && refuted;
    Ok(())
}

/// Terminals confined to the top two rows.
fn top_rows(g: &GridGraph) -> Vec<Vertex> {
    g.vertices().into_iter().filter(|x| x.row <= 2).collect()
}

fn pp44(c: &mut Certificate, opts: &ClaimOptions) -> Result<(), ClaimError> {
    let g = GridGraph::new(4, 4).expect("positive size");
    let k3 = is_k_path_pairable(&g, 3, Mode::Exhaustive, &config(opts))?;
    campaign_lines(c, &k3);
    let k4 = search_unsat_in_region(&g, 4, &top_rows(&g), &config(opts))?;
    campaign_lines(c, &k4);
    let refuted = unsat_witness(c, &g, &k4);
    c.holds &= k3.verdict == Verdict::Pairable && refuted;
    Ok(())
}

fn g55(c: &mut Certificate, opts: &ClaimOptions) -> Result<(), ClaimError> {
    let g = GridGraph::new(5, 5).expect("positive size");
    let k4 = search_unsat_in_region(&g, 4, &top_rows(&g), &config(opts))?;
    campaign_lines(c, &k4);
    c.holds &= unsat_witness(c, &g, &k4);
    Ok(())
}

/// `(t1, t5)` placements: the far bottom corners first, then seeded draws
/// from the free vertices.
pub fn refutation_placements(seed: u64) -> Vec<(Vertex, Vertex)> {
    let g = GridGraph::new(6, 6).expect("positive size");
    let fixed = counterexample_instance(v(6, 1), v(6, 6)).expect("valid placement");
    let taken: Vec<Vertex> = fixed.pairs()[1..4].iter().flat_map(|&(s, t)| [s, t]).chain([v(1, 1), v(2, 2)]).collect();
    let free: Vec<Vertex> = g.vertices().into_iter().filter(|x| !taken.contains(x)).collect();
    let mut out = vec![(v(6, 1), v(6, 6))];
    let mut i = 0;
    while out.len() < PLACEMENTS {
        let (a, b) = seeded_sample(&free, 1, seed, i).pairs()[0];
        i += 1;
        if !out.contains(&(a, b)) {
            out.push((a, b));
        }
    }
    out
}

/// Oracle verdict for one placement, searched without a node budget.
pub fn refute_placement(t1: Vertex, t5: Vertex, max_time: Duration) -> (Pairing, Status, u64) {
    let g = GridGraph::new(6, 6).expect("positive size");
    let p = counterexample_instance(t1, t5).expect("placement avoids the fixed terminals");
    let opts = SolveOptions { limits: Limits { max_nodes: u64::MAX, max_time }, ..SolveOptions::default() };
    let r = Oracle::new(&g).solve(&p, &opts).expect("valid instance");
    (p, r.status, r.nodes_expanded)
}

fn g66_k5(c: &mut Certificate, opts: &ClaimOptions) {
    let g = GridGraph::new(6, 6).expect("positive size");
    let placements = refutation_placements(opts.seed);
    let results: Vec<_> = with_jobs(opts.jobs, || {
        use rayon::prelude::*;
        placements.par_iter().map(|&(t1, t5)| refute_placement(t1, t5, opts.limits.max_time)).collect()
    });
    for (i, ((t1, t5), (p, status, nodes))) in placements.iter().zip(results).enumerate() {
        c.line(&format!("placement {}", i + 1), format!("t1={t1} t5={t5} {} nodes={nodes}", status.label()));
        match status {
            Status::Unsat => {}
            Status::Timeout => c.complete = false,
            Status::Sat(_) => {
                c.holds = false;
                c.witnesses.push(gridlink_core::format_instance(&g, &p));
            }
        }
    }
    if !c.complete {
        c.holds = false;
    }
}

fn sample(opts: &ClaimOptions) -> Vec<Pairing> {
    let vs = GridGraph::new(6, 6).expect("positive size").vertices();
    (0..opts.samples).map(|i| seeded_sample(&vs, 4, opts.seed, i)).collect()
}

fn g66_k4_sample(c: &mut Certificate, opts: &ClaimOptions) -> Result<(), ClaimError> {
    let g = GridGraph::new(6, 6).expect("positive size");
    let mode = Mode::Sampled { samples: opts.samples, seed: opts.seed };
    let cfg = CampaignConfig { stop_at_first_unsat: false, ..config(opts) };
    let r = is_k_path_pairable(&g, 4, mode, &cfg)?;
    campaign_lines(c, &r);
    if let Some(w) = &r.first_unsat {
        c.witnesses.push(w.instance.clone());
    }
    c.holds &= r.sat == opts.samples && r.invalid_witnesses == 0;
    c.complete &= r.timeout == 0;
    Ok(())
}

fn constructive(c: &mut Certificate, opts: &ClaimOptions) {
    let ps = sample(opts);
    let s = with_jobs(opts.jobs, || constructive_campaign(&ps));
    c.line("instances", s.instances);
    c.line("invalid", s.invalid);
    c.line("unclassified", s.unclassified);
    c.line("fallbacks", s.fallbacks());
    for (case, t) in &s.by_case {
        let rate = if t.solved == 0 { 0.0 } else { t.fallbacks as f64 / t.solved as f64 };
        c.line(&format!("case {case}"), format!("{} solved, {} fallbacks ({:.4}%)", t.solved, t.fallbacks, 100.0 * rate));
    }
    c.holds &= s.invalid == 0 && s.unclassified == 0 && s.instances == opts.samples;
}

fn lemma(c: &mut Certificate, id: LemmaId, opts: &ClaimOptions) {
    let copts = CertifyOptions {
        all_orientations: opts.all_orientations,
        limits: opts.limits,
        jobs: opts.jobs,
        ..CertifyOptions::default()
    };
    let cert = certify(id, &copts);
    c.line("configurations", cert.configurations);
    for (part, n) in &cert.parts {
        c.line(&format!("part {part}"), n);
    }
    c.line("violations", cert.violations);
    if let Some(v) = &cert.first_violation {
        c.line("first_violation", v);
    }
    for n in &cert.notes {
        c.line("note", n);
    }
    c.line("orientations", if opts.all_orientations { "all 8" } else { "NW only" });
    c.complete &= cert.complete;
    c.holds &= cert.passed();
}

/// Run a registered claim.
pub fn run_claim(id: &str, opts: &ClaimOptions) -> Result<Certificate, ClaimError> {
    let stmt = statement(id).ok_or_else(|| ClaimError::Unknown(id.to_string()))?;
    let seeded = matches!(id, "g66-k5" | "g66-k4-sample" | "constructive");
    let mut c = Certificate::new(id, &stmt, seeded.then_some(opts.seed));
    let start = Instant::now();
    match id {
        "pp22" => pp_claim(&mut c, 2, 1, opts)?,
        "pp33" => pp_claim(&mut c, 3, 2, opts)?,
        "pp44" => pp44(&mut c, opts)?,
        "g55" => g55(&mut c, opts)?,
        "g66-k5" => g66_k5(&mut c, opts),
        "g66-k4-sample" => g66_k4_sample(&mut c, opts)?,
        "constructive" => constructive(&mut c, opts),
        other => {
            let name = other.strip_prefix("lemma-").unwrap_or(other);
            let l = LemmaId::from_name(name).ok_or_else(|| ClaimError::Unknown(id.to_string()))?;
            lemma(&mut c, l, opts);
        }
    }
    c.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placements_are_distinct_and_free() {
        let ps = refutation_placements(1);
        assert_eq!(ps.len(), PLACEMENTS);
        assert_eq!(ps[0], (v(6, 1), v(6, 6)));
        for &(a, b) in &ps {
            assert!(counterexample_instance(a, b).is_ok());
        }
        assert_eq!(ps, refutation_placements(1));
    }

    #[test]
    fn registry_names_resolve() {
        let ids: Vec<String> = registry().into_iter().map(|(id, _)| id).collect();
        assert!(ids.contains(&"lemma-heavy4".to_string()));
        assert!(matches!(run_claim("nope", &ClaimOptions::default()), Err(ClaimError::Unknown(_))));
    }

    #[test]
    fn small_grid_claim() {
        let c = run_claim("pp22", &ClaimOptions::default()).unwrap();
        assert!(c.holds && c.complete, "{}", c.to_text());
        assert_eq!(c.witnesses.len(), 1);
    }
}
