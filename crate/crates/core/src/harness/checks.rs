use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::config::GraphFamily;
use crate::error::{Error, Result};
use crate::extend::{Guards, Property, VerdictMemo};
use crate::graph::{Graph, VertexSet};
use crate::lab::{
    binding_bound_ledger, evaluate_memo, evaluate_profile, toughness_certificate_bound, GraphProfile, TheoremId,
    TheoremParams, Unavailable,
};
use crate::matching::{has_perfect_matching, matching_number, KMatchings};
use crate::rational::Rational;
use crate::structure::{barrier_certificate, gallai_edmonds, is_factor_critical};

/// A single concrete check, as stored alongside persisted counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum CheckSpec {
    Theorem {
        theorem: TheoremId,
        params: TheoremParams,
        eps: Rational,
    },
    Woodall,
    Chvatal,
    Tutte,
    Barrier,
    GallaiEdmonds,
    Ledger {
        k: usize,
        #[serde(default)]
        eps: Vec<Rational>,
    },
    Ly01 {
        n: usize,
        k: usize,
    },
    P88 {
        k: usize,
    },
    ToughnessBound {
        n: usize,
    },
    Sharpness,
}

impl fmt::Display for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckSpec::Theorem { theorem, params, eps } => {
                write!(f, "{theorem}")?;
                for (name, v) in [("m", params.m), ("n", params.n), ("k", params.k), ("g", params.girth)] {
                    if let Some(v) = v {
                        write!(f, " {name}={v}")?;
                    }
                }
                if params.mode != Default::default() {
                    f.write_str(" strict")?;
                }
                write!(f, " eps={eps}")
            }
            CheckSpec::Woodall => f.write_str("woodall"),
            CheckSpec::Chvatal => f.write_str("chvatal"),
            CheckSpec::Tutte => f.write_str("tutte"),
            CheckSpec::Barrier => f.write_str("barrier"),
            CheckSpec::GallaiEdmonds => f.write_str("gallai_edmonds"),
            CheckSpec::Ledger { k, .. } => write!(f, "ledger k={k}"),
            CheckSpec::Ly01 { n, k } => write!(f, "ly01 n={n} k={k}"),
            CheckSpec::P88 { k } => write!(f, "p88 k={k}"),
            CheckSpec::ToughnessBound { n } => write!(f, "toughness_bound n={n}"),
            CheckSpec::Sharpness => f.write_str("sharpness"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Antecedent verified and consequent confirmed.
    Holds,
    /// Antecedent verified and consequent refuted.
    Violation,
    NotApplicable,
    /// A resource guard stopped the check; never counted as holding.
    SkippedGuard,
    /// Internal failure: a certificate did not verify or a call errored.
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub applicable: bool,
    /// Outcome of the consequent when decided, even if not applicable.
    pub holds: Option<bool>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    fn new(spec: &CheckSpec) -> Self {
        CheckRecord {
            id: spec.to_string(),
            applicable: false,
            holds: None,
            status: Status::NotApplicable,
            certificate: None,
            detail: None,
        }
    }

    fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.detail = Some(why.into());
        self
    }

    /// Antecedent held; `holds` is the consequent.
    fn decided(mut self, holds: bool) -> Self {
        self.applicable = true;
        self.holds = Some(holds);
        self.status = if holds { Status::Holds } else { Status::Violation };
        self
    }

    fn with_certificate(mut self, cert: Value) -> Self {
        self.certificate = Some(cert);
        self
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn from_error(spec: &CheckSpec, e: &Error) -> Self {
        let mut r = CheckRecord::new(spec);
        r.status = match e {
            Error::ResourceLimit { .. } => Status::SkippedGuard,
            _ => Status::Error,
        };
        r.detail = Some(e.to_string());
        r
    }

    fn from_unavailable(spec: &CheckSpec, u: &Unavailable) -> Self {
        match u {
            Unavailable::Guard(m) => {
                let mut r = CheckRecord::new(spec);
                r.status = Status::SkippedGuard;
                r.detail = Some(m.clone());
                r
            }
            Unavailable::Undefined(m) => CheckRecord::new(spec).not_applicable(m.clone()),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

impl CheckSpec {
    /// Rejects parameter combinations that can never be evaluated.
    pub fn validate(&self) -> Result<()> {
        match self {
            CheckSpec::Theorem { theorem, params, eps } => {
                evaluate_profile(
                    *theorem,
                    &Graph::empty(0),
                    &GraphProfile {
                        order: 0,
                        connected: true,
                        girth: None,
                        kappa: 0,
                        binding: Err(Unavailable::Undefined(String::new())),
                        toughness: Err(Unavailable::Undefined(String::new())),
                    },
                    *params,
                    *eps,
                    &Guards::default(),
                )
                .map(drop)
            }
            CheckSpec::Ly01 { n, k } if *n < 1 || *k < 2 => {
                Err(Error::invalid(format!("ly01 needs n >= 1 and k >= 2, got ({n},{k})")))
            }
            CheckSpec::P88 { k } if *k < 1 => Err(Error::invalid("p88 needs k >= 1")),
            CheckSpec::Ledger { k, .. } if *k < 1 => Err(Error::invalid("ledger needs k >= 1")),
            CheckSpec::ToughnessBound { n } if *n < 1 => {
                Err(Error::invalid("toughness_bound needs n >= 1"))
            }
            _ => Ok(()),
        }
    }

    pub fn run(
        &self,
        g: &Graph,
        family: Option<&GraphFamily>,
        profile: &GraphProfile,
        guards: &Guards,
    ) -> CheckRecord {
        self.run_memo(g, family, profile, guards, &mut VerdictMemo::new())
    }

    /// [`CheckSpec::run`] sharing extendability verdicts through `memo`,
    /// which must only ever have seen `g`.
    pub fn run_memo(
        &self,
        g: &Graph,
        family: Option<&GraphFamily>,
        profile: &GraphProfile,
        guards: &Guards,
        memo: &mut VerdictMemo,
    ) -> CheckRecord {
        match self.run_inner(g, family, profile, guards, memo) {
            Ok(r) => r,
            Err(e) => CheckRecord::from_error(self, &e),
        }
    }

    fn run_inner(
        &self,
        g: &Graph,
        family: Option<&GraphFamily>,
        profile: &GraphProfile,
        guards: &Guards,
        memo: &mut VerdictMemo,
    ) -> Result<CheckRecord> {
        let rec = CheckRecord::new(self);
        let order = g.order();
        let even_connected = order >= 2 && order.is_multiple_of(2) && profile.connected;
        match self {
            CheckSpec::Theorem { theorem, params, eps } => {
                let report = evaluate_memo(*theorem, g, profile, *params, *eps, guards, memo)?;
                let mut rec = rec;
                rec.applicable = report.applicable;
                rec.holds = report.conclusion_checked;
                rec.status = match (report.applicable, report.conclusion_checked) {
                    (true, Some(true)) => Status::Holds,
                    (true, Some(false)) => Status::Violation,
                    (true, None) => Status::SkippedGuard,
                    (false, _) => Status::NotApplicable,
                };
                rec.detail = report.skipped.clone();
                if let Some(cert) = &report.certificate {
                    rec.certificate = Some(to_value(cert));
                }
                Ok(rec)
            }
            CheckSpec::Woodall | CheckSpec::Chvatal => {
                if !even_connected {
                    return Ok(rec.not_applicable("needs even order and a connected graph"));
                }
                let (param, bound) = match self {
                    CheckSpec::Woodall => (&profile.binding, Rational::new(4, 3)),
                    _ => (&profile.toughness, Rational::one()),
                };
                let value = match param {
                    Ok(w) => w.value,
                    Err(u) => return Ok(CheckRecord::from_unavailable(self, u)),
                };
                if value < bound {
                    return Ok(rec.not_applicable(format!("{value} < {bound}")));
                }
                let holds = has_perfect_matching(g);
                let rec = rec.decided(holds);
                Ok(if holds {
                    rec
                } else {
                    rec.with_certificate(to_value(&barrier_certificate(g)?))
                })
            }
            CheckSpec::Tutte => {
                let limit = guards.max_parameter_order.min(63);
                if order > limit {
                    return Err(Error::ResourceLimit {
                        what: format!("exhaustive Tutte scan on {order} vertices"),
                        limit: limit as u64,
                    });
                }
                let violator = exhaustive_tutte_violator(g);
                let pm = has_perfect_matching(g);
                let rec = rec.decided(pm == violator.is_none());
                Ok(match violator {
                    Some(s) if pm => rec.with_certificate(to_value(&s)),
                    _ => rec,
                })
            }
            CheckSpec::Barrier => {
                if order % 2 == 1 || has_perfect_matching(g) {
                    return Ok(rec.not_applicable("odd order or has a perfect matching"));
                }
                let cert = barrier_certificate(g)?;
                let verified = cert.as_ref().map(|c| c.verify(g));
                let rec = rec.decided(matches!(verified, Some(Ok(()))));
                Ok(match (cert, verified) {
                    (Some(c), Some(Ok(()))) => rec.with_certificate(to_value(&c)),
                    (_, Some(Err(e))) => rec.with_detail(e.to_string()),
                    _ => rec.with_detail("no barrier produced"),
                })
            }
            CheckSpec::GallaiEdmonds => {
                let ge = gallai_edmonds(g);
                let failure = gallai_edmonds_failure(g, &ge);
                let rec = rec.decided(failure.is_none()).with_certificate(to_value(&ge));
                Ok(match failure {
                    Some(why) => rec.with_detail(why),
                    None => rec,
                })
            }
            CheckSpec::Ledger { k, eps } => run_ledger(self, rec, g, *k, eps, profile, guards, memo),
            CheckSpec::Ly01 { n, k } => {
                if !profile.connected || order % 2 != n % 2 || order < n + 2 * k + 2 {
                    return Ok(rec.not_applicable("(n,k)-extendability undefined here"));
                }
                if !memo.decide(g, Property::NkExtendable { n: *n, k: *k }, guards)?.holds {
                    return Ok(rec.not_applicable("not (n,k)-extendable"));
                }
                let v = memo.decide(g, Property::NkExtendable { n: n + 2, k: k - 2 }, guards)?;
                let rec = rec.decided(v.holds);
                Ok(match v.certificate {
                    Some(c) => rec.with_certificate(to_value(&c)),
                    None => rec,
                })
            }
            CheckSpec::P88 { k } => {
                if !even_connected || order < 2 * k + 2 {
                    return Ok(rec.not_applicable("k-extendability undefined here"));
                }
                if !memo.decide(g, Property::KExtendable { k: *k }, guards)?.holds {
                    return Ok(rec.not_applicable("not k-extendable"));
                }
                for &(u, v) in g.edges() {
                    let h = g.remove_edges(&[(u, v)]);
                    if !h.is_connected() {
                        return Ok(rec
                            .decided(false)
                            .with_detail(format!("G - ({u},{v}) is disconnected")));
                    }
                    let verdict = Property::KExtendable { k: k - 1 }.decide(&h, guards)?;
                    if !verdict.holds {
                        return Ok(rec.decided(false).with_certificate(json!({
                            "edge": [u, v],
                            "certificate": verdict.certificate,
                        })));
                    }
                }
                Ok(rec.decided(true))
            }
            CheckSpec::ToughnessBound { n } => {
                if !profile.connected || order % 2 != n % 2 || order < n + 2 {
                    return Ok(rec.not_applicable("n-factor-criticality undefined here"));
                }
                let verdict = memo.decide(g, Property::FactorCritical { n: *n }, guards)?;
                let Some(cert) = verdict.certificate else {
                    return Ok(rec.not_applicable("n-factor-critical"));
                };
                let s = cert.removed_vertices.clone();
                let t = cert.barrier.as_ref().expect("no-PM certificate carries a barrier").s.clone();
                let tb = toughness_certificate_bound(g, *n, &s, &t, guards)?;
                Ok(rec
                    .decided(tb.toughness_within && tb.kappa_within)
                    .with_certificate(json!({ "s": s, "t": t, "bound": tb })))
            }
            CheckSpec::Sharpness => {
                let Some(&GraphFamily::Sharpness { n, t, r }) = family else {
                    return Ok(rec.not_applicable("not a sharpness construction"));
                };
                let mut problems = Vec::new();
                let expected_t = Rational::from(n + t) / Rational::from(t + 2);
                match &profile.toughness {
                    Ok(w) if w.value == expected_t => {}
                    Ok(w) => problems.push(format!("toughness {} != {expected_t}", w.value)),
                    Err(u) => return Ok(CheckRecord::from_unavailable(self, u)),
                }
                if profile.kappa != n + t {
                    problems.push(format!("kappa {} != {}", profile.kappa, n + t));
                }
                if order % 2 == n % 2 && memo.decide(g, Property::FactorCritical { n }, guards)?.holds {
                    problems.push(format!("({n},{t},{r}) is {n}-factor-critical"));
                }
                let rec = rec.decided(problems.is_empty());
                Ok(if problems.is_empty() {
                    rec
                } else {
                    rec.with_detail(problems.join("; "))
                })
            }
        }
    }
}

/// Some `S` with `c₀(G−S) > |S|`, scanning all subsets.
fn exhaustive_tutte_violator(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    (0..1u64 << n).map(VertexSet::from_mask).find(|s| {
        g.odd_component_count(s).expect("subset of V") > s.len()
    })
}

fn gallai_edmonds_failure(g: &Graph, ge: &crate::structure::GallaiEdmonds) -> Option<String> {
    let all = ge.d.union(&ge.a).union(&ge.c);
    if all != g.vertices()
        || !ge.d.is_disjoint(&ge.a)
        || !ge.d.is_disjoint(&ge.c)
        || !ge.a.is_disjoint(&ge.c)
    {
        return Some("D, A, C do not partition V".into());
    }
    let comps = ge.d_components(g);
    if let Some(c) = comps.iter().find(|c| !is_factor_critical(&g.induced(c).0)) {
        return Some(format!("D-component {c} is not factor-critical"));
    }
    let lhs = comps.len() as i64 - ge.a.len() as i64;
    let rhs = g.order() as i64 - 2 * matching_number(g) as i64;
    (lhs != rhs).then(|| format!("c(G[D]) - |A| = {lhs} but |V| - 2nu = {rhs}"))
}

#[allow(clippy::too_many_arguments)]
fn run_ledger(
    spec: &CheckSpec,
    rec: CheckRecord,
    g: &Graph,
    k: usize,
    eps: &[Rational],
    profile: &GraphProfile,
    guards: &Guards,
    memo: &mut VerdictMemo,
) -> Result<CheckRecord> {
    let order = g.order();
    if !profile.connected || order % 2 == 1 || order < 2 * k + 2 {
        return Ok(rec.not_applicable("k-extendability undefined here"));
    }
    let verdict = memo.decide(g, Property::KExtendable { k }, guards)?;
    let Some(cert) = verdict.certificate else {
        return Ok(rec.not_applicable("k-extendable"));
    };
    // Without a perfect matching in G any k-matching certifies; take the first.
    let (m, barrier_s) = if cert.required_matching.len() == k {
        let s = cert.barrier.expect("no-PM certificate carries a barrier").s;
        (cert.required_matching, s)
    } else {
        let Some(m) = KMatchings::new(g, k, guards.max_enumeration).next() else {
            return Ok(rec.not_applicable("no k-matching"));
        };
        let m = m?;
        let (h, map) = g.remove_vertices(&m.vertices());
        let b = barrier_certificate(&h)?.expect("G - V(M) has no perfect matching");
        (m, b.s.iter().map(|v| map[v]).collect())
    };
    let ledger = binding_bound_ledger(g, k, &m, &barrier_s)?;
    let binding = match &profile.binding {
        Ok(w) => w.value,
        Err(u) => return Ok(CheckRecord::from_unavailable(spec, u)),
    };
    let mut problems = Vec::new();
    if binding > ledger.bound() {
        problems.push(format!("b = {binding} exceeds min(f, h) = {}", ledger.bound()));
    }
    let mut audits = Vec::new();
    if let Some(g0) = ledger.g0 {
        for &e in eps {
            if e >= Rational::new(1, g0 as i64) || !ledger.binding_hypothesis(binding, e) {
                continue;
            }
            let audit = ledger.audit_claims(e)?;
            if !audit.all_hold() {
                problems.push(format!("claims fail at eps = {e}"));
            }
            audits.push(audit);
        }
    }
    let rec = rec
        .decided(problems.is_empty())
        .with_certificate(json!({ "ledger": ledger, "audits": audits }));
    Ok(if problems.is_empty() {
        rec
    } else {
        rec.with_detail(problems.join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::sharpness_construction;

    fn run(spec: CheckSpec, g: &Graph, family: Option<&GraphFamily>) -> CheckRecord {
        let guards = Guards::default();
        spec.run(g, family, &GraphProfile::compute(g, &guards), &guards)
    }

    #[test]
    fn suites_on_small_graphs() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(run(CheckSpec::Tutte, &c6, None).status, Status::Holds);
        assert_eq!(run(CheckSpec::GallaiEdmonds, &c6, None).status, Status::Holds);
        assert_eq!(run(CheckSpec::Barrier, &c6, None).status, Status::NotApplicable);
        let star = Graph::complete_bipartite(1, 5);
        assert_eq!(run(CheckSpec::Barrier, &star, None).status, Status::Holds);
        assert_eq!(run(CheckSpec::Chvatal, &c6, None).status, Status::Holds);
        assert_eq!(run(CheckSpec::Woodall, &c6, None).status, Status::NotApplicable);
        assert_eq!(run(CheckSpec::Woodall, &Graph::complete(6), None).status, Status::Holds);
    }

    #[test]
    fn ledger_on_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        let r = run(CheckSpec::Ledger { k: 2, eps: vec![Rational::new(1, 10)] }, &c6, None);
        assert_eq!(r.status, Status::Holds);
        let ledger = &r.certificate.unwrap()["ledger"];
        assert_eq!(ledger["f"], json!({"num": 4, "den": 1}));
    }

    #[test]
    fn ledger_without_perfect_matching() {
        let g = Graph::complete_bipartite(2, 4);
        let r = run(CheckSpec::Ledger { k: 1, eps: vec![] }, &g, None);
        assert_eq!(r.status, Status::Holds);
    }

    #[test]
    fn reductions_on_complete_graph() {
        let k8 = Graph::complete(8);
        assert_eq!(run(CheckSpec::Ly01 { n: 1, k: 2 }, &Graph::complete(9), None).status, Status::Holds);
        assert_eq!(run(CheckSpec::P88 { k: 2 }, &k8, None).status, Status::Holds);
        // C8 is 1-extendable and every C8 - e is a path with a perfect matching
        assert_eq!(run(CheckSpec::P88 { k: 1 }, &Graph::cycle(8).unwrap(), None).status, Status::Holds);
        assert_eq!(run(CheckSpec::P88 { k: 2 }, &Graph::cycle(8).unwrap(), None).status, Status::NotApplicable);
    }

    #[test]
    fn sharpness_suite() {
        let fam = GraphFamily::Sharpness { n: 4, t: 1, r: 3 };
        let g = sharpness_construction(4, 1, 3).unwrap();
        assert_eq!(run(CheckSpec::Sharpness, &g, Some(&fam)).status, Status::Holds);
        assert_eq!(run(CheckSpec::Sharpness, &g, None).status, Status::NotApplicable);
        let tb = run(CheckSpec::ToughnessBound { n: 4 }, &g, None);
        assert_eq!(tb.status, Status::Holds);
    }

    #[test]
    fn theorem_spec_labels() {
        let spec = CheckSpec::Theorem {
            theorem: TheoremId::ToughnessEmnExtendable,
            params: TheoremParams { m: Some(1), n: Some(2), ..Default::default() },
            eps: Rational::new(1, 2),
        };
        assert_eq!(spec.to_string(), "3.3 m=1 n=2 eps=1/2");
        assert!(spec.validate().is_ok());
        let bad = CheckSpec::Theorem {
            theorem: TheoremId::ToughnessEmnExtendable,
            params: TheoremParams { k: Some(1), ..Default::default() },
            eps: Rational::new(1, 2),
        };
        assert!(bad.validate().is_err());
    }
}
