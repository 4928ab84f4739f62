//! Decision procedures for k-extendability, n-factor-criticality,
//! (n,k)-extendability and E(m,n)-extendability.
//!
//! Every check walks its configurations in a fixed order (vertex sets in
//! colex order, matchings in lexicographic order) and certifies the first
//! failure, so verdicts and certificates are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, VertexSet};
use crate::matching::{
    has_perfect_matching, matching_number, max_matching, KMatchings, Matching,
    DEFAULT_ENUMERATION_LIMIT,
};
use crate::structure::{barrier_certificate, BarrierCertificate};

/// Resource ceilings. Exceeding one is an error, never a "holds" verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Guards {
    /// Configurations `(S, M, N)` examined by one extendability check.
    pub max_configurations: u64,
    /// Matchings yielded by one enumeration stream.
    pub max_enumeration: u64,
    /// Largest order accepted by the exact binding number and toughness scans.
    pub max_parameter_order: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_configurations: 100_000_000,
            max_enumeration: DEFAULT_ENUMERATION_LIMIT,
            max_parameter_order: 24,
        }
    }
}

/// How the two edge sets of an E(m,n) query may interact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmnMode {
    /// `M` and `N` are matchings sharing no edge; they may share vertices.
    #[default]
    EdgeDisjoint,
    /// `M ∪ N` must itself be a matching.
    VertexDisjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// The residual graph has no perfect matching; `barrier` proves it.
    NoPerfectMatching,
    /// `G − S` has no matching of the required size.
    NoMatchingOfSize { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendabilityCertificate {
    pub removed_vertices: VertexSet,
    pub required_matching: Matching,
    pub forbidden_edges: Vec<Edge>,
    pub reason: FailureReason,
    /// Barrier of the residual graph, in the host graph's vertex ids.
    pub barrier: Option<BarrierCertificate>,
}

impl ExtendabilityCertificate {
    /// `G − removed − V(M) − E(N)`, relabelled, with its new→old id map.
    pub fn residual(&self, g: &Graph) -> (Graph, Vec<usize>) {
        let drop = self.removed_vertices.union(&self.required_matching.vertices());
        g.remove_edges(&self.forbidden_edges).remove_vertices(&drop)
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.removed_vertices)?;
        self.required_matching.validate(g)?;
        Matching::from_edges_unchecked(self.forbidden_edges.iter().copied())
            .edges()
            .iter()
            .try_for_each(|&(u, v)| {
                if !g.has_edge(u, v) {
                    return Err(Error::invalid(format!("forbidden ({u},{v}) is not an edge")));
                }
                if self.required_matching.contains_edge(u, v) {
                    return Err(Error::invalid(format!("({u},{v}) both required and forbidden")));
                }
                Ok(())
            })?;
        if !self.removed_vertices.is_disjoint(&self.required_matching.vertices()) {
            return Err(Error::invalid("required matching touches removed vertices"));
        }
        match self.reason {
            FailureReason::NoMatchingOfSize { k } => {
                let (h, _) = g.remove_vertices(&self.removed_vertices);
                if matching_number(&h) >= k {
                    return Err(Error::invalid(format!("G - S does contain a {k}-matching")));
                }
                Ok(())
            }
            FailureReason::NoPerfectMatching => {
                let barrier = self
                    .barrier
                    .as_ref()
                    .ok_or_else(|| Error::invalid("missing barrier"))?;
                let (h, map) = self.residual(g);
                let to_local = |s: &VertexSet| -> Result<VertexSet> {
                    s.iter()
                        .map(|v| {
                            map.binary_search(&v)
                                .map_err(|_| Error::invalid(format!("vertex {v} not in residual")))
                        })
                        .collect()
                };
                let local = BarrierCertificate {
                    s: to_local(&barrier.s)?,
                    fc_components: barrier
                        .fc_components
                        .iter()
                        .map(to_local)
                        .collect::<Result<_>>()?,
                };
                local.verify(&h)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendabilityVerdict {
    pub holds: bool,
    pub certificate: Option<ExtendabilityCertificate>,
    pub checked_count: u64,
}

struct Counter {
    count: u64,
    limit: u64,
}

impl Counter {
    fn new(guards: &Guards) -> Self {
        Counter {
            count: 0,
            limit: guards.max_configurations,
        }
    }

    fn tick(&mut self) -> Result<()> {
        if self.count == self.limit {
            return Err(Error::ResourceLimit {
                what: "extendability configurations".into(),
                limit: self.limit,
            });
        }
        self.count += 1;
        Ok(())
    }

    fn holds(self) -> ExtendabilityVerdict {
        ExtendabilityVerdict {
            holds: true,
            certificate: None,
            checked_count: self.count,
        }
    }

    fn fails(self, cert: ExtendabilityCertificate) -> ExtendabilityVerdict {
        ExtendabilityVerdict {
            holds: false,
            certificate: Some(cert),
            checked_count: self.count,
        }
    }
}

/// Fixed-size subsets of `0..n` in colex order.
pub struct Combinations {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

pub fn combinations(n: usize, size: usize) -> Combinations {
    Combinations {
        current: (0..size).collect(),
        n,
        done: size > n,
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet::new(self.current.clone());
        let k = self.current.len();
        let mut i = 0;
        while i < k {
            let cap = if i + 1 < k { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < cap {
                break;
            }
            i += 1;
        }
        if i == k {
            self.done = true;
        } else {
            self.current[i] += 1;
            for (j, slot) in self.current[..i].iter_mut().enumerate() {
                *slot = j;
            }
        }
        Some(out)
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    require(g.is_connected(), || "graph must be connected".into())
}

/// Residual `h` (ids mapped by `map`) has no perfect matching: build the
/// certificate with its barrier translated back to host ids.
fn no_pm_certificate(
    h: &Graph,
    map: &[usize],
    removed: VertexSet,
    required: Matching,
    forbidden: Vec<Edge>,
) -> ExtendabilityCertificate {
    let barrier = barrier_certificate(h)
        .expect("residual has even order")
        .expect("residual has no perfect matching");
    let lift = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
    ExtendabilityCertificate {
        removed_vertices: removed,
        required_matching: required,
        forbidden_edges: forbidden,
        reason: FailureReason::NoPerfectMatching,
        barrier: Some(BarrierCertificate {
            s: lift(&barrier.s),
            fc_components: barrier.fc_components.iter().map(lift).collect(),
        }),
    }
}

/// Perfect matchings found so far, in host ids. A configuration that one of
/// them already satisfies needs no fresh search.
struct PmCache(Vec<Vec<Edge>>);

impl PmCache {
    const CAPACITY: usize = 64;

    fn new() -> Self {
        PmCache(Vec::new())
    }

    fn covers(&self, required: &[Edge], forbidden: &[Edge]) -> bool {
        self.0.iter().any(|pm| {
            required.iter().all(|e| pm.binary_search(e).is_ok())
                && forbidden.iter().all(|e| pm.binary_search(e).is_err())
        })
    }

    /// Looks for a perfect matching of `h` (ids mapped by `map`); a hit is
    /// stored together with `extra`, the edges already fixed outside `h`.
    fn search(&mut self, h: &Graph, map: &[usize], extra: &[Edge]) -> bool {
        let mm = max_matching(h);
        if 2 * mm.len() != h.order() {
            return false;
        }
        if self.0.len() < Self::CAPACITY {
            let mut pm: Vec<Edge> = mm
                .edges()
                .iter()
                .map(|&(u, v)| edge(map[u], map[v]))
                .chain(extra.iter().copied())
                .collect();
            pm.sort_unstable();
            self.0.push(pm);
        }
        true
    }
}

pub fn is_k_extendable(g: &Graph, k: usize) -> Result<ExtendabilityVerdict> {
    is_k_extendable_with(g, k, &Guards::default())
}

/// Every `k`-matching extends to a perfect matching (and `G` has one).
pub fn is_k_extendable_with(g: &Graph, k: usize, guards: &Guards) -> Result<ExtendabilityVerdict> {
    let n = g.order();
    require_connected(g)?;
    require(n.is_multiple_of(2), || format!("k-extendability needs even order, got {n}"))?;
    require(n >= 2 * k + 2, || {
        format!("k-extendability needs |V| >= 2k+2 = {}, got {n}", 2 * k + 2)
    })?;
    let mut counter = Counter::new(guards);
    counter.tick()?;
    if !has_perfect_matching(g) {
        let ident: Vec<usize> = (0..n).collect();
        let cert = no_pm_certificate(g, &ident, VertexSet::empty(), Matching::empty(), vec![]);
        return Ok(counter.fails(cert));
    }
    if k == 0 {
        return Ok(counter.holds());
    }
    let mut cache = PmCache::new();
    for m in KMatchings::new(g, k, guards.max_enumeration) {
        let m = m?;
        counter.tick()?;
        if cache.covers(m.edges(), &[]) {
            continue;
        }
        let (h, map) = g.remove_vertices(&m.vertices());
        if !cache.search(&h, &map, m.edges()) {
            let cert = no_pm_certificate(&h, &map, VertexSet::empty(), m, vec![]);
            return Ok(counter.fails(cert));
        }
    }
    Ok(counter.holds())
}

pub fn is_n_factor_critical(g: &Graph, n: usize) -> Result<ExtendabilityVerdict> {
    is_n_factor_critical_with(g, n, &Guards::default())
}

/// `G − S` has a perfect matching for every `|S| = n`.
pub fn is_n_factor_critical_with(
    g: &Graph,
    n: usize,
    guards: &Guards,
) -> Result<ExtendabilityVerdict> {
    let order = g.order();
    require_connected(g)?;
    require(order >= n, || format!("cannot delete {n} vertices from {order}"))?;
    require(order % 2 == n % 2, || {
        format!("n-factor-criticality needs |V| = {order} and n = {n} of equal parity")
    })?;
    let mut counter = Counter::new(guards);
    for s in combinations(order, n) {
        counter.tick()?;
        let (h, map) = g.remove_vertices(&s);
        if !has_perfect_matching(&h) {
            let cert = no_pm_certificate(&h, &map, s, Matching::empty(), vec![]);
            return Ok(counter.fails(cert));
        }
    }
    Ok(counter.holds())
}

pub fn is_nk_extendable(g: &Graph, n: usize, k: usize) -> Result<ExtendabilityVerdict> {
    is_nk_extendable_with(g, n, k, &Guards::default())
}

/// For every `|S| = n`, `G − S` has a `k`-matching and every `k`-matching of
/// `G − S` extends to a perfect matching of `G − S`.
pub fn is_nk_extendable_with(
    g: &Graph,
    n: usize,
    k: usize,
    guards: &Guards,
) -> Result<ExtendabilityVerdict> {
    let order = g.order();
    require_connected(g)?;
    require(order >= n + 2 * k + 2, || {
        format!("(n,k)-extendability needs |V| >= n+2k+2 = {}, got {order}", n + 2 * k + 2)
    })?;
    require(order % 2 == n % 2, || {
        format!("(n,k)-extendability needs |V| = {order} and n = {n} of equal parity")
    })?;
    let mut counter = Counter::new(guards);
    for s in combinations(order, n) {
        let (h, map) = g.remove_vertices(&s);
        if matching_number(&h) < k {
            counter.tick()?;
            return Ok(counter.fails(ExtendabilityCertificate {
                removed_vertices: s,
                required_matching: Matching::empty(),
                forbidden_edges: vec![],
                reason: FailureReason::NoMatchingOfSize { k },
                barrier: None,
            }));
        }
        let mut cache = PmCache::new();
        for m in KMatchings::new(&h, k, guards.max_enumeration) {
            let m = m?;
            counter.tick()?;
            if cache.covers(m.edges(), &[]) {
                continue;
            }
            let (r, rmap) = h.remove_vertices(&m.vertices());
            if !cache.search(&r, &rmap, m.edges()) {
                let host_map: Vec<usize> = rmap.iter().map(|&v| map[v]).collect();
                let lifted = Matching::from_edges_unchecked(
                    m.edges().iter().map(|&(u, v)| (map[u], map[v])),
                );
                let cert = no_pm_certificate(&r, &host_map, s, lifted, vec![]);
                return Ok(counter.fails(cert));
            }
        }
    }
    Ok(counter.holds())
}

pub fn is_emn_extendable(g: &Graph, m: usize, n: usize) -> Result<ExtendabilityVerdict> {
    is_emn_extendable_with(g, m, n, EmnMode::default(), &Guards::default())
}

/// `G` has a perfect matching and, for every `m`-matching `M` and every
/// `n`-matching `N` sharing no edge with `M` (no vertex, under
/// [`EmnMode::VertexDisjoint`]), some perfect matching contains `M` and avoids `N`.
///
/// Pairs are visited with `M` outermost, each in lexicographic order.
pub fn is_emn_extendable_with(
    g: &Graph,
    m: usize,
    n: usize,
    mode: EmnMode,
    guards: &Guards,
) -> Result<ExtendabilityVerdict> {
    let order = g.order();
    require_connected(g)?;
    require(order.is_multiple_of(2), || format!("E(m,n)-extendability needs even order, got {order}"))?;
    require(order >= 2 * m + 2 * n + 2, || {
        format!(
            "E(m,n)-extendability needs |V| >= 2m+2n+2 = {}, got {order}",
            2 * m + 2 * n + 2
        )
    })?;
    let mut counter = Counter::new(guards);
    counter.tick()?;
    if !has_perfect_matching(g) {
        let ident: Vec<usize> = (0..order).collect();
        let cert = no_pm_certificate(g, &ident, VertexSet::empty(), Matching::empty(), vec![]);
        return Ok(counter.fails(cert));
    }
    let mut cache = PmCache::new();
    for required in KMatchings::new(g, m, guards.max_enumeration) {
        let required = required?;
        let used = required.vertices();
        let rest = match mode {
            EmnMode::EdgeDisjoint => g.remove_edges(required.edges()),
            EmnMode::VertexDisjoint => {
                let cut: Vec<Edge> = g
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(u, v)| used.contains(u) || used.contains(v))
                    .collect();
                g.remove_edges(&cut)
            }
        };
        for forbidden in KMatchings::new(&rest, n, guards.max_enumeration) {
            let forbidden = forbidden?;
            counter.tick()?;
            if cache.covers(required.edges(), forbidden.edges()) {
                continue;
            }
            let (h, map) = g.remove_edges(forbidden.edges()).remove_vertices(&used);
            if !cache.search(&h, &map, required.edges()) {
                let cert = no_pm_certificate(
                    &h,
                    &map,
                    VertexSet::empty(),
                    required,
                    forbidden.edges().to_vec(),
                );
                return Ok(counter.fails(cert));
            }
        }
    }
    Ok(counter.holds())
}

/// One of the four extendability properties with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum Property {
    KExtendable { k: usize },
    FactorCritical { n: usize },
    NkExtendable { n: usize, k: usize },
    Emn { m: usize, n: usize, mode: EmnMode },
}

impl Property {
    pub fn decide(&self, g: &Graph, guards: &Guards) -> Result<ExtendabilityVerdict> {
        match *self {
            Property::KExtendable { k } => is_k_extendable_with(g, k, guards),
            Property::FactorCritical { n } => is_n_factor_critical_with(g, n, guards),
            Property::NkExtendable { n, k } => is_nk_extendable_with(g, n, k, guards),
            Property::Emn { m, n, mode } => is_emn_extendable_with(g, m, n, mode, guards),
        }
    }
}

/// Verdicts already computed for one graph, so several checks asking the
/// same question share one search.
#[derive(Debug, Default)]
pub struct VerdictMemo(std::collections::HashMap<Property, Result<ExtendabilityVerdict>>);

impl VerdictMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// `g` must be the same graph on every call.
    pub fn decide(&mut self, g: &Graph, property: Property, guards: &Guards) -> Result<ExtendabilityVerdict> {
        self.0
            .entry(property)
            .or_insert_with(|| property.decide(g, guards))
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(edges: &[Edge]) -> Matching {
        Matching::from_edges_unchecked(edges.iter().copied())
    }

    #[test]
    fn colex_combinations() {
        let all: Vec<Vec<usize>> = combinations(4, 2).map(|s| s.into_vec()).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(10, 4).count(), 210);
    }

    #[test]
    fn k_extendable_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(is_k_extendable(&c6, 1).unwrap().holds);
        let v = is_k_extendable(&c6, 2).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.required_matching, m(&[(0, 1), (3, 4)]));
        cert.verify(&c6).unwrap();
        assert!(is_k_extendable(&Graph::complete(4), 1).unwrap().holds);
        assert!(is_k_extendable(&c6, 0).unwrap().holds);
    }

    #[test]
    fn k_extendable_preconditions() {
        assert!(is_k_extendable(&Graph::cycle(5).unwrap(), 1).is_err());
        assert!(is_k_extendable(&Graph::complete(4), 2).is_err());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_k_extendable(&two_edges, 1).is_err());
    }

    #[test]
    fn k_extendable_requires_a_perfect_matching() {
        // K_{1,5} has no 2-matching, so only the perfect-matching requirement can fail
        let star = Graph::complete_bipartite(1, 5);
        let v = is_k_extendable(&star, 2).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert!(cert.required_matching.is_empty());
        cert.verify(&star).unwrap();
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_n_factor_critical(&Graph::complete(5), 3).unwrap().holds);
        assert!(is_n_factor_critical(&Graph::cycle(5).unwrap(), 1).unwrap().holds);
        assert!(is_n_factor_critical(&Graph::cycle(5).unwrap(), 2).is_err());
        let v = is_n_factor_critical(&Graph::cycle(6).unwrap(), 2).unwrap();
        assert!(!v.holds);
        // colex order visits {0,1} first (fine), then {0,2}
        let cert = v.certificate.unwrap();
        assert_eq!(cert.removed_vertices, VertexSet::new(vec![0, 2]));
        cert.verify(&Graph::cycle(6).unwrap()).unwrap();
    }

    #[test]
    fn nk_examples() {
        assert!(is_nk_extendable(&Graph::complete(6), 2, 1).unwrap().holds);
        assert!(is_nk_extendable(&Graph::complete(6), 2, 2).is_err());
        let c6 = Graph::cycle(6).unwrap();
        let (a, b) = (is_nk_extendable(&c6, 0, 2).unwrap(), is_k_extendable(&c6, 2).unwrap());
        assert_eq!((a.holds, a.certificate), (b.holds, b.certificate));
    }

    #[test]
    fn nk_without_k_matching() {
        // removing the centre of K_{1,6} leaves no edge
        let g = Graph::complete_bipartite(1, 6);
        let v = is_nk_extendable(&g, 1, 1).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.reason, FailureReason::NoMatchingOfSize { k: 1 });
        assert_eq!(cert.removed_vertices, VertexSet::new(vec![0]));
        cert.verify(&g).unwrap();
    }

    #[test]
    fn emn_examples() {
        assert!(is_emn_extendable(&Graph::complete(6), 1, 1).unwrap().holds);
        let c6 = Graph::cycle(6).unwrap();
        assert!(is_emn_extendable(&c6, 0, 1).unwrap().holds);
        let v = is_emn_extendable(&c6, 1, 1).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.required_matching, m(&[(0, 1)]));
        assert_eq!(cert.forbidden_edges, vec![(2, 3)]);
        cert.verify(&c6).unwrap();
        assert_eq!(is_emn_extendable(&c6, 1, 0).unwrap(), is_k_extendable(&c6, 1).unwrap());
    }

    #[test]
    fn strict_mode_skips_touching_pairs() {
        let c6 = Graph::cycle(6).unwrap();
        let v = is_emn_extendable_with(&c6, 1, 1, EmnMode::VertexDisjoint, &Guards::default())
            .unwrap();
        assert!(!v.holds);
        assert_eq!(v.certificate.unwrap().forbidden_edges, vec![(2, 3)]);
        let loose = is_emn_extendable(&c6, 1, 1).unwrap();
        // (0,1) with (1,2) is examined only in the edge-disjoint reading
        assert!(loose.checked_count > v.checked_count);
    }

    #[test]
    fn guard_is_an_error_not_a_verdict() {
        let guards = Guards {
            max_configurations: 3,
            ..Guards::default()
        };
        let r = is_k_extendable_with(&Graph::complete(8), 1, &guards);
        assert!(matches!(r, Err(Error::ResourceLimit { limit: 3, .. })));
    }

    #[test]
    fn forged_certificates_fail_verification() {
        let k6 = Graph::complete(6);
        let fake = ExtendabilityCertificate {
            removed_vertices: VertexSet::empty(),
            required_matching: m(&[(0, 1)]),
            forbidden_edges: vec![],
            reason: FailureReason::NoPerfectMatching,
            barrier: Some(BarrierCertificate {
                s: VertexSet::empty(),
                fc_components: vec![VertexSet::new(vec![2, 3, 4, 5])],
            }),
        };
        assert!(fake.verify(&k6).is_err());
    }
}
