//! The constructive solver: normalize, run the case handler, fall back to
//! the oracle when a step fails.

use crate::builder::{grid, oracle, Attempt, Builder};
use crate::label::{case_of, fitting, Case, CaseLabel};
use crate::{cases_a, cases_b};
use gridlink_core::{validate_linkage, Linkage, Pairing, Path, SolveOptions, Status, Symmetry};
use gridlink_lemmas::LemmaId;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Distinct normal positions tried before falling back.
const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("the constructive solver handles 4 pairs of distinct vertices of the 6x6 grid")]
    WrongShape,
    #[error("oracle fallback did not find a linkage: {0}")]
    Fallback(String),
}

/// One construction step, in the coordinates and pair numbering of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub case: String,
    pub what: String,
    pub lemma: Option<LemmaId>,
    /// Pair index and the path piece it received.
    pub paths: Vec<(usize, Path)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    /// The case, with the symmetry of the normal position actually used.
    pub label: CaseLabel,
    pub steps: Vec<Step>,
    /// Why the case handler was abandoned, when the oracle finished the job.
    pub fallback: Option<String>,
}

fn run(case: Case, b: &mut Builder) -> Attempt<()> {
    match case {
        Case::A1 => cases_a::a1(b),
        Case::A2 => cases_a::a2(b),
        Case::A3(t) => cases_a::a3(t, b),
        Case::A4_1 => cases_a::a4_1(b),
        Case::A4_2 => cases_a::a4_2(b),
        Case::A4_3 => cases_a::a4_3(b),
        Case::B1 => cases_b::b1(b),
        Case::B2 => cases_b::b2(b),
        Case::B3 => cases_b::b3(b),
        Case::B4_1 => cases_b::b4_1(b),
        Case::B4_2 => cases_b::b4_2(b),
    }
}

fn check_shape(p: &Pairing) -> Result<(), ConstructError> {
    let g = grid();
    let ts: Vec<_> = p.terminals().collect();
    let distinct = ts.iter().enumerate().all(|(i, x)| !ts[..i].contains(x));
    if p.len() != 4 || !distinct || !ts.iter().all(|&x| g.contains(x)) {
        return Err(ConstructError::WrongShape);
    }
    Ok(())
}

/// Solve a 4-pair pairing of the 6×6 grid by the case analysis. Every
/// returned linkage has passed [`validate_linkage`].
pub fn solve_constructive(p: &Pairing) -> Result<(Linkage, Trace), ConstructError> {
    check_shape(p)?;
    let g = grid();
    let case = case_of(p);
    let mut seen: Vec<Pairing> = Vec::new();
    let mut first_sym = None;
    let mut last_err = String::from("no normal position");
    for (var, np) in fitting(case, p) {
        first_sym.get_or_insert(var.sym);
        if seen.contains(&np) {
            continue;
        }
        if seen.len() == MAX_ATTEMPTS {
            break;
        }
        seen.push(np.clone());
        let mut b = Builder::new(np.pairs().to_vec());
        let outcome = run(case, &mut b).and_then(|()| b.finish());
        let paths = match outcome {
            Ok(paths) => paths,
            Err(e) => {
                log::debug!("{case} via {}: {e}", var.sym);
                last_err = e;
                continue;
            }
        };
        let mut restored = vec![Path::default(); 4];
        for (i, path) in paths.iter().enumerate() {
            let (orig, q) = var.restore(i, path);
            restored[orig] = q;
        }
        let linkage = Linkage::new(restored);
        if let Err(v) = validate_linkage(g, p, &linkage) {
            log::warn!("{case} via {} built an invalid linkage: {v:?}", var.sym);
            last_err = format!("invalid construction: {v:?}");
            continue;
        }
        let steps = b
            .steps
            .iter()
            .map(|st| Step {
                case: case.name(),
                what: st.what.clone(),
                lemma: st.lemma,
                paths: st.paths.iter().map(|(i, q)| var.restore(*i, q)).collect(),
            })
            .collect();
        let label = CaseLabel { case, symmetry: var.sym };
        return Ok((linkage, Trace { label, steps, fallback: None }));
    }
    log::info!("{case}: falling back to the oracle ({last_err})");
    let report = oracle().solve(p, &SolveOptions::default()).map_err(|e| ConstructError::Fallback(e.to_string()))?;
    let label = CaseLabel { case, symmetry: first_sym.unwrap_or(Symmetry::IDENTITY) };
    match report.status {
        Status::Sat(l) => {
            if let Err(v) = validate_linkage(g, p, &l) {
                return Err(ConstructError::Fallback(format!("invalid oracle linkage: {v:?}")));
            }
            let step = Step {
                case: case.name(),
                what: "oracle search".into(),
                lemma: None,
                paths: l.paths().iter().cloned().enumerate().collect(),
            };
            Ok((l, Trace { label, steps: vec![step], fallback: Some(last_err) }))
        }
        other => Err(ConstructError::Fallback(other.label().to_string())),
    }
}

/// Per-case tallies of a constructive campaign.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTally {
    pub solved: u64,
    pub fallbacks: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveSummary {
    pub instances: u64,
    /// Outputs that failed validation or errors from the solver.
    pub invalid: u64,
    pub unclassified: u64,
    pub by_case: BTreeMap<String, CaseTally>,
}

impl ConstructiveSummary {
    pub fn fallbacks(&self) -> u64 {
        self.by_case.values().map(|t| t.fallbacks).sum()
    }

    fn absorb(&mut self, other: ConstructiveSummary) {
        self.instances += other.instances;
        self.invalid += other.invalid;
        self.unclassified += other.unclassified;
        for (k, v) in other.by_case {
            let e = self.by_case.entry(k).or_default();
            e.solved += v.solved;
            e.fallbacks += v.fallbacks;
        }
    }
}

fn solve_one(p: &Pairing) -> ConstructiveSummary {
    let mut s = ConstructiveSummary { instances: 1, ..Default::default() };
    if fitting(case_of(p), p).is_empty() {
        s.unclassified += 1;
    }
    match solve_constructive(p) {
        Ok((l, trace)) => {
            let entry = s.by_case.entry(trace.label.case.name()).or_default();
            entry.solved += 1;
            if trace.fallback.is_some() {
                entry.fallbacks += 1;
            }
            if validate_linkage(grid(), p, &l).is_err() {
                s.invalid += 1;
            }
        }
        Err(_) => s.invalid += 1,
    }
    s
}

/// Solve `pairings` in parallel and tally outcomes by case.
pub fn constructive_campaign(pairings: &[Pairing]) -> ConstructiveSummary {
    pairings
        .par_iter()
        .map(solve_one)
        .reduce(ConstructiveSummary::default, |mut a, b| {
            a.absorb(b);
            a
        })
}
