use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::checks::CheckSpec;
use crate::error::{Error, Result};
use crate::extend::Guards;
use crate::graph::io::from_graph6;
use crate::graph::Graph;
use crate::lab::{sharpness_construction, TheoremId, TheoremParams};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// Erdős–Rényi `G(n, p)`.
    Gnp,
    /// Uniform pairing model, rejecting loops and multi-edges.
    RandomRegular,
    /// Named families (cycles, paths, complete and complete bipartite graphs,
    /// Petersen, sharpness constructions) with order in range. `samples` is ignored.
    GeneratorGrid,
}

/// Inclusive integer range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub min: usize,
    pub max: usize,
}

impl Span {
    fn check(&self, what: &str) -> Result<()> {
        if self.min > self.max {
            return Err(Error::invalid(format!("{what}: empty range {}..={}", self.min, self.max)));
        }
        Ok(())
    }
}

/// Grid `min + (max − min)·j/steps`, `j = 0..=steps`, sampled uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilitySpan {
    pub min: Rational,
    pub max: Rational,
    #[serde(default = "default_steps")]
    pub steps: u32,
}

fn default_steps() -> u32 {
    8
}

impl ProbabilitySpan {
    pub fn point(&self, j: u32) -> Rational {
        if self.steps == 0 {
            return self.min;
        }
        self.min + (self.max - self.min) * Rational::new(j as i64, self.steps as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// `b ≥ 4/3` ⇒ perfect matching (even order, connected).
    Woodall,
    /// `t ≥ 1` ⇒ perfect matching (even order, connected).
    Chvatal,
    /// Perfect matching ⇔ no `S` with `c₀(G−S) > |S|`, by exhaustive scan.
    Tutte,
    /// Even order without a perfect matching yields a verified barrier.
    Barrier,
    /// Partition, factor-critical `D`-components and the deficiency formula.
    GallaiEdmonds,
    /// Ledger of the canonical non-`k`-extendability certificate.
    Ledger,
    /// `(n,k)`-extendable with `n ≥ 1`, `k ≥ 2` ⇒ `(n+2, k−2)`-extendable.
    Ly01,
    /// `k`-extendable ⇒ `G − e` is `(k−1)`-extendable for every edge.
    P88,
    /// Non-`n`-factor-critical certificates bound toughness and connectivity.
    ToughnessBound,
    /// Toughness, connectivity and non-factor-criticality of the sharpness family.
    Sharpness,
}

/// One entry of the `checks` list: either a theorem with parameter and
/// `eps` grids, or a property suite with its own integer grids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<TheoremParams>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eps: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub k: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub n: Vec<usize>,
}

impl CheckConfig {
    pub fn theorem(id: TheoremId, params: Vec<TheoremParams>, eps: Vec<Rational>) -> Self {
        CheckConfig {
            theorem: Some(id),
            suite: None,
            params,
            eps,
            k: vec![],
            n: vec![],
        }
    }

    pub fn suite(suite: Suite) -> Self {
        CheckConfig {
            theorem: None,
            suite: Some(suite),
            params: vec![],
            eps: vec![],
            k: vec![],
            n: vec![],
        }
    }

    pub fn with_k(mut self, k: Vec<usize>) -> Self {
        self.k = k;
        self
    }

    pub fn with_n(mut self, n: Vec<usize>) -> Self {
        self.n = n;
        self
    }

    pub fn with_eps(mut self, eps: Vec<Rational>) -> Self {
        self.eps = eps;
        self
    }

    /// Cartesian expansion into concrete checks.
    pub fn expand(&self) -> Result<Vec<CheckSpec>> {
        let nonempty = |name: &str, len: usize| -> Result<()> {
            if len == 0 {
                return Err(Error::invalid(format!("check needs a nonempty `{name}` list")));
            }
            Ok(())
        };
        let at_least = |name: &str, values: &[usize], min: usize| -> Result<()> {
            match values.iter().find(|&&v| v < min) {
                Some(v) => Err(Error::invalid(format!("`{name}` = {v} is below {min}"))),
                None => Ok(()),
            }
        };
        let positive_eps = |eps: &[Rational]| -> Result<()> {
            match eps.iter().find(|e| !e.is_positive() || e.is_infinite()) {
                Some(e) => Err(Error::invalid(format!("eps = {e} must be positive and finite"))),
                None => Ok(()),
            }
        };
        match (self.theorem, self.suite) {
            (Some(theorem), None) => {
                nonempty("params", self.params.len())?;
                nonempty("eps", self.eps.len())?;
                positive_eps(&self.eps)?;
                if !self.k.is_empty() || !self.n.is_empty() {
                    return Err(Error::invalid("theorem checks take integers through `params`"));
                }
                let mut out = Vec::new();
                for &params in &self.params {
                    for &eps in &self.eps {
                        out.push(CheckSpec::Theorem { theorem, params, eps });
                    }
                }
                // Surfaces wrong parameter bundles before any graph is drawn.
                for spec in &out {
                    spec.validate()?;
                }
                Ok(out)
            }
            (None, Some(suite)) => {
                if !self.params.is_empty() {
                    return Err(Error::invalid("suites take `k`/`n` lists, not `params`"));
                }
                positive_eps(&self.eps)?;
                let unused = |name: &str, len: usize| -> Result<()> {
                    if len > 0 {
                        return Err(Error::invalid(format!("suite {suite:?} takes no `{name}`")));
                    }
                    Ok(())
                };
                match suite {
                    Suite::Ledger => {
                        nonempty("k", self.k.len())?;
                        at_least("k", &self.k, 1)?;
                        unused("n", self.n.len())?;
                        Ok(self
                            .k
                            .iter()
                            .map(|&k| CheckSpec::Ledger { k, eps: self.eps.clone() })
                            .collect())
                    }
                    Suite::Ly01 => {
                        nonempty("n", self.n.len())?;
                        nonempty("k", self.k.len())?;
                        at_least("n", &self.n, 1)?;
                        at_least("k", &self.k, 2)?;
                        unused("eps", self.eps.len())?;
                        let mut out = Vec::new();
                        for &n in &self.n {
                            for &k in &self.k {
                                out.push(CheckSpec::Ly01 { n, k });
                            }
                        }
                        Ok(out)
                    }
                    Suite::P88 => {
                        nonempty("k", self.k.len())?;
                        at_least("k", &self.k, 1)?;
                        unused("n", self.n.len())?;
                        unused("eps", self.eps.len())?;
                        Ok(self.k.iter().map(|&k| CheckSpec::P88 { k }).collect())
                    }
                    Suite::ToughnessBound => {
                        nonempty("n", self.n.len())?;
                        at_least("n", &self.n, 1)?;
                        unused("k", self.k.len())?;
                        unused("eps", self.eps.len())?;
                        Ok(self.n.iter().map(|&n| CheckSpec::ToughnessBound { n }).collect())
                    }
                    simple => {
                        unused("k", self.k.len())?;
                        unused("n", self.n.len())?;
                        unused("eps", self.eps.len())?;
                        Ok(vec![match simple {
                            Suite::Woodall => CheckSpec::Woodall,
                            Suite::Chvatal => CheckSpec::Chvatal,
                            Suite::Tutte => CheckSpec::Tutte,
                            Suite::Barrier => CheckSpec::Barrier,
                            Suite::GallaiEdmonds => CheckSpec::GallaiEdmonds,
                            _ => CheckSpec::Sharpness,
                        }])
                    }
                }
            }
            _ => Err(Error::invalid("each check names exactly one of `theorem` or `suite`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleConfig {
    pub model: Model,
    pub orders: Span,
    /// Required for [`Model::Gnp`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probability: Option<ProbabilitySpan>,
    /// Degree range for [`Model::RandomRegular`]; defaults to `3..=n−1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Span>,
    #[serde(default)]
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<CheckConfig>,
    #[serde(default)]
    pub guards: Guards,
    /// Where counterexamples are written, if anywhere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
}

impl EnsembleConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: EnsembleConfig =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.orders.check("orders")?;
        match self.model {
            Model::Gnp => {
                let p = self
                    .probability
                    .ok_or_else(|| Error::invalid("model gnp needs `probability`"))?;
                if p.min < Rational::zero() || p.min > p.max || p.max > Rational::one() {
                    return Err(Error::invalid(format!(
                        "probability range {}..={} must lie inside [0, 1]",
                        p.min, p.max
                    )));
                }
            }
            Model::RandomRegular => {
                for n in self.orders.min..=self.orders.max {
                    if self.regular_degrees(n).is_empty() {
                        return Err(Error::invalid(format!("no admissible degree for order {n}")));
                    }
                }
            }
            Model::GeneratorGrid => {}
        }
        if let Some(d) = self.degrees {
            d.check("degrees")?;
        }
        self.expanded_checks().map(drop)
    }

    pub fn expanded_checks(&self) -> Result<Vec<CheckSpec>> {
        let mut out = Vec::new();
        for c in &self.checks {
            out.extend(c.expand()?);
        }
        Ok(out)
    }

    /// Degrees `d < n` in range with `n·d` even.
    pub(crate) fn regular_degrees(&self, n: usize) -> Vec<usize> {
        let span = self.degrees.unwrap_or(Span {
            min: 3,
            max: n.saturating_sub(1),
        });
        (span.min..=span.max.min(n.saturating_sub(1)))
            .filter(|d| (n * d).is_multiple_of(2))
            .collect()
    }
}

/// Provenance of a generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphFamily {
    Gnp { p: Rational, seed: u64 },
    RandomRegular { d: usize, seed: u64 },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Petersen,
    Sharpness { n: usize, t: usize, r: usize },
}

const PETERSEN_G6: &str = "IheA@GUAo";

impl GraphFamily {
    pub fn build(&self, order: usize) -> Result<Graph> {
        match *self {
            GraphFamily::Gnp { p, seed } => crate::graph::random_graph(order, p, seed),
            GraphFamily::RandomRegular { d, seed } => crate::graph::random_regular(order, d, seed),
            GraphFamily::Cycle { n } => Graph::cycle(n),
            GraphFamily::Path { n } => Ok(Graph::path(n)),
            GraphFamily::Complete { n } => Ok(Graph::complete(n)),
            GraphFamily::CompleteBipartite { a, b } => Ok(Graph::complete_bipartite(a, b)),
            GraphFamily::Petersen => from_graph6(PETERSEN_G6),
            GraphFamily::Sharpness { n, t, r } => sharpness_construction(n, t, r),
        }
    }

    /// Deterministic named graphs with order in `orders`.
    pub fn grid(orders: Span) -> Vec<(usize, GraphFamily)> {
        let mut out = Vec::new();
        for n in orders.min..=orders.max {
            if n >= 3 {
                out.push((n, GraphFamily::Cycle { n }));
            }
            if n >= 1 {
                out.push((n, GraphFamily::Path { n }));
                out.push((n, GraphFamily::Complete { n }));
            }
            for a in 1..=n / 2 {
                out.push((n, GraphFamily::CompleteBipartite { a, b: n - a }));
            }
            if n == 10 {
                out.push((n, GraphFamily::Petersen));
            }
            for sn in 3..=6 {
                for t in 1..=3 {
                    for r in 1..=5 {
                        if (sn + t) + (t + 1) + r == n {
                            out.push((n, GraphFamily::Sharpness { n: sn, t, r }));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Gnp { p, seed } => write!(f, "gnp(p={p}, seed={seed})"),
            GraphFamily::RandomRegular { d, seed } => write!(f, "regular(d={d}, seed={seed})"),
            GraphFamily::Cycle { n } => write!(f, "C{n}"),
            GraphFamily::Path { n } => write!(f, "P{n}"),
            GraphFamily::Complete { n } => write!(f, "K{n}"),
            GraphFamily::CompleteBipartite { a, b } => write!(f, "K{a},{b}"),
            GraphFamily::Petersen => f.write_str("Petersen"),
            GraphFamily::Sharpness { n, t, r } => write!(f, "sharpness({n},{t},{r})"),
        }
    }
}
