//! Seeded random-ensemble validation with deterministic JSON reports.
//!
//! Graph `i` of a run draws everything from a ChaCha8 stream seeded with
//! [`graph_seed`]`(seed, i)`, the `i`-th output of a SplitMix64 generator
//! started at the master seed. Graphs are processed in parallel and merged
//! back in index order, so the report depends on the configuration only.

mod checks;
mod config;
mod corpus;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::{CheckRecord, CheckSpec, Status};
pub use config::{
    CheckConfig, EnsembleConfig, GraphFamily, Model, ProbabilitySpan, Span, Suite,
};
pub use corpus::{
    read_counterexamples, replay_counterexamples, write_counterexamples, Counterexample,
    ReplayOutcome, COUNTEREXAMPLE_G6, COUNTEREXAMPLE_JSON,
};

use crate::error::Result;
use crate::extend::{Guards, VerdictMemo};
use crate::graph::io::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::lab::{GraphProfile, ParameterResult};
use crate::rational::Rational;

pub const SCHEMA_VERSION: u32 = 1;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `mix(seed + (index + 1)·γ)`: output `index` of SplitMix64 seeded with `seed`.
pub fn graph_seed(seed: u64, index: u64) -> u64 {
    splitmix64_mix(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// An exact parameter as reported: `{num, den, witness}`, `"inf"`, or
/// `null` when unavailable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParameterRecord {
    Finite {
        num: i64,
        den: i64,
        witness: Option<VertexSet>,
    },
    Infinite,
}

impl ParameterRecord {
    fn from_result(p: &ParameterResult) -> Option<Self> {
        let w = p.as_ref().ok()?;
        Some(match (w.value.numer(), w.value.denom()) {
            (Some(num), Some(den)) => ParameterRecord::Finite {
                num,
                den,
                witness: w.witness.clone(),
            },
            _ => ParameterRecord::Infinite,
        })
    }

    pub fn value(&self) -> Rational {
        match self {
            ParameterRecord::Finite { num, den, .. } => Rational::new(*num, *den),
            ParameterRecord::Infinite => Rational::infinity(),
        }
    }
}

impl Serialize for ParameterRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            num: i64,
            den: i64,
            witness: &'a Option<VertexSet>,
        }
        match self {
            ParameterRecord::Finite { num, den, witness } => Wire {
                num: *num,
                den: *den,
                witness,
            }
            .serialize(s),
            ParameterRecord::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ParameterRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Finite {
                num: i64,
                den: i64,
                witness: Option<VertexSet>,
            },
            Text(String),
        }
        match Wire::deserialize(d)? {
            Wire::Finite { num, den, witness } => Ok(ParameterRecord::Finite { num, den, witness }),
            Wire::Text(t) if t == "inf" => Ok(ParameterRecord::Infinite),
            Wire::Text(t) => Err(serde::de::Error::custom(format!("expected \"inf\", got {t:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<GraphFamily>,
    pub order: usize,
    pub edges: usize,
    pub girth: Option<usize>,
    pub kappa: usize,
    pub binding: Option<ParameterRecord>,
    pub toughness: Option<ParameterRecord>,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub evaluated: usize,
    pub applicable: usize,
    pub holds: usize,
    pub violations: usize,
    pub skipped_guard: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub graph: usize,
    pub check: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    /// Graphs with at least one applicable check.
    pub graphs_applicable: usize,
    pub totals: Tally,
    pub by_check: BTreeMap<String, Tally>,
    pub violations: Vec<Finding>,
    pub errors: Vec<Finding>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<EnsembleConfig>,
    pub graphs: Vec<GraphRecord>,
    pub summary: Summary,
    /// Wall-clock time; kept out of the JSON so reruns compare byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunReport {
    fn assemble(config: Option<EnsembleConfig>, graphs: Vec<GraphRecord>, started: Instant) -> Self {
        let mut summary = Summary {
            graphs: graphs.len(),
            ..Default::default()
        };
        for g in &graphs {
            if g.checks.iter().any(|c| c.applicable) {
                summary.graphs_applicable += 1;
            }
            for c in &g.checks {
                for tally in [&mut summary.totals, summary.by_check.entry(c.id.clone()).or_default()] {
                    tally.evaluated += 1;
                    tally.applicable += c.applicable as usize;
                    match c.status {
                        Status::Holds => tally.holds += 1,
                        Status::Violation => tally.violations += 1,
                        Status::SkippedGuard => tally.skipped_guard += 1,
                        Status::Error => tally.errors += 1,
                        Status::NotApplicable => {}
                    }
                }
                let finding = || Finding {
                    graph: g.index,
                    check: c.id.clone(),
                };
                match c.status {
                    Status::Violation => summary.violations.push(finding()),
                    Status::Error => summary.errors.push(finding()),
                    _ => {}
                }
            }
        }
        RunReport {
            schema: SCHEMA_VERSION,
            config,
            graphs,
            summary,
            elapsed: started.elapsed(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Zero violations and zero internal errors.
    pub fn is_clean(&self) -> bool {
        self.summary.violations.is_empty() && self.summary.errors.is_empty()
    }
}

/// A graph to be checked, with where it came from.
#[derive(Debug, Clone)]
pub struct Sample {
    pub graph: Graph,
    pub family: Option<GraphFamily>,
}

fn draw(config: &EnsembleConfig, index: usize) -> Result<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(config.seed, index as u64));
    let order = rng.gen_range(config.orders.min..=config.orders.max);
    let family = match config.model {
        Model::Gnp => {
            let p = config.probability.expect("validated");
            let j = rng.gen_range(0..=p.steps);
            GraphFamily::Gnp {
                p: p.point(j),
                seed: rng.gen(),
            }
        }
        Model::RandomRegular => {
            let degrees = config.regular_degrees(order);
            GraphFamily::RandomRegular {
                d: degrees[rng.gen_range(0..degrees.len())],
                seed: rng.gen(),
            }
        }
        Model::GeneratorGrid => unreachable!("grid graphs are not sampled"),
    };
    Ok(Sample {
        graph: family.build(order)?,
        family: Some(family),
    })
}

/// Graphs a configuration describes, in index order.
pub fn ensemble_graphs(config: &EnsembleConfig) -> Result<Vec<Sample>> {
    config.validate()?;
    match config.model {
        Model::GeneratorGrid => GraphFamily::grid(config.orders)
            .into_iter()
            .map(|(order, family)| {
                Ok(Sample {
                    graph: family.build(order)?,
                    family: Some(family),
                })
            })
            .collect(),
        _ => (0..config.samples)
            .into_par_iter()
            .map(|i| draw(config, i))
            .collect(),
    }
}

/// Runs `checks` on one graph.
pub fn check_graph(
    index: usize,
    sample: &Sample,
    checks: &[CheckSpec],
    guards: &Guards,
) -> GraphRecord {
    let g = &sample.graph;
    let profile = GraphProfile::compute(g, guards);
    let mut memo = VerdictMemo::new();
    GraphRecord {
        index,
        graph6: to_graph6(g),
        family: sample.family,
        order: g.order(),
        edges: g.edge_count(),
        girth: profile.girth,
        kappa: profile.kappa,
        binding: ParameterRecord::from_result(&profile.binding),
        toughness: ParameterRecord::from_result(&profile.toughness),
        checks: checks
            .iter()
            .map(|c| c.run_memo(g, sample.family.as_ref(), &profile, guards, &mut memo))
            .collect(),
    }
}

fn check_all(samples: &[Sample], checks: &[CheckSpec], guards: &Guards) -> Vec<GraphRecord> {
    samples
        .par_iter()
        .enumerate()
        .map(|(i, s)| check_graph(i, s, checks, guards))
        .collect()
}

/// Generates the configured graphs, runs every check, and persists any
/// counterexamples under `output_dir`.
pub fn run_ensemble(config: &EnsembleConfig) -> Result<RunReport> {
    let started = Instant::now();
    let checks = config.expanded_checks()?;
    let samples = ensemble_graphs(config)?;
    let records = check_all(&samples, &checks, &config.guards);
    let report = RunReport::assemble(Some(config.clone()), records, started);
    if let Some(dir) = &config.output_dir {
        write_counterexamples(dir, &report, &checks)?;
    }
    Ok(report)
}

/// Runs the given checks over an explicit corpus.
pub fn run_corpus(corpus: &[Graph], checks: &[CheckSpec], guards: &Guards) -> Result<RunReport> {
    let started = Instant::now();
    for c in checks {
        c.validate()?;
    }
    let samples: Vec<Sample> = corpus
        .iter()
        .map(|g| Sample {
            graph: g.clone(),
            family: None,
        })
        .collect();
    Ok(RunReport::assemble(None, check_all(&samples, checks, guards), started))
}

/// The two reduction properties on every graph of `corpus`: `(n,k)` ⇒
/// `(n+2, k−2)` for `1 ≤ n ≤ max_n`, `2 ≤ k ≤ max_k`, and `k`-extendable ⇒
/// every `G − e` is `(k−1)`-extendable for `1 ≤ k ≤ max_k`.
pub fn verify_reductions(
    corpus: &[Graph],
    max_n: usize,
    max_k: usize,
    guards: &Guards,
) -> Result<RunReport> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        for k in 2..=max_k {
            checks.push(CheckSpec::Ly01 { n, k });
        }
    }
    for k in 1..=max_k {
        checks.push(CheckSpec::P88 { k });
    }
    run_corpus(corpus, &checks, guards)
}
