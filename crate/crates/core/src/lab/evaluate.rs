//! Exact hypothesis evaluation for the six extension results, with the
//! conclusion decided by the extendability checkers where the guards allow.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{binding_threshold, g0_of_girth, threshold_n};
use crate::error::{Error, Result};
use crate::extend::{EmnMode, ExtendabilityCertificate, Guards, Property, VerdictMemo};
use crate::graph::Graph;
use crate::params::{binding_number_with, toughness_with, ParameterWitness};
use crate::rational::Rational;

/// The six results, identified on the command line as `2.2` … `3.3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// girth `g`, `b > (g0+1)/g0 + ε`, large order ⇒ k-extendable
    GirthBindingExtendable,
    /// `b > 4/3 + ε`, large order ⇒ (n,k)-extendable
    BindingNkExtendable,
    /// `b > 4/3 + ε`, large order ⇒ E(m,n)-extendable
    BindingEmnExtendable,
    /// `t ≥ 1 + ε`, `κ > (n−2)(1+ε)/ε`, parity ⇒ n-factor-critical
    ToughnessFactorCritical,
    /// `t ≥ 1 + ε`, `κ > (2k−2)(1+ε)/ε` ⇒ k-extendable
    ToughnessExtendable,
    /// `t ≥ 1 + ε`, `κ > (2m+2n−2)(1+ε)/ε` ⇒ E(m,n)-extendable
    ToughnessEmnExtendable,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::GirthBindingExtendable,
        TheoremId::BindingNkExtendable,
        TheoremId::BindingEmnExtendable,
        TheoremId::ToughnessFactorCritical,
        TheoremId::ToughnessExtendable,
        TheoremId::ToughnessEmnExtendable,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            TheoremId::GirthBindingExtendable => "2.2",
            TheoremId::BindingNkExtendable => "2.3",
            TheoremId::BindingEmnExtendable => "2.4",
            TheoremId::ToughnessFactorCritical => "3.1",
            TheoremId::ToughnessExtendable => "3.2",
            TheoremId::ToughnessEmnExtendable => "3.3",
        }
    }

    /// Results with no order threshold: every applicable graph must satisfy the conclusion.
    pub fn threshold_free(&self) -> bool {
        matches!(
            self,
            TheoremId::ToughnessFactorCritical
                | TheoremId::ToughnessExtendable
                | TheoremId::ToughnessEmnExtendable
        )
    }

    fn uses_binding(&self) -> bool {
        !self.threshold_free()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code() == s)
            .ok_or_else(|| Error::invalid(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TheoremParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Girth bound `g` for the girth-dependent result; defaults to 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<usize>,
    #[serde(skip_serializing_if = "is_default_mode")]
    pub mode: EmnMode,
}

fn is_default_mode(m: &EmnMode) -> bool {
    *m == EmnMode::default()
}

impl TheoremParams {
    fn check(&self, id: TheoremId) -> Result<()> {
        let (need_k, need_n, need_m) = match id {
            TheoremId::GirthBindingExtendable | TheoremId::ToughnessExtendable => (true, false, false),
            TheoremId::BindingNkExtendable => (true, true, false),
            TheoremId::BindingEmnExtendable | TheoremId::ToughnessEmnExtendable => (false, true, true),
            TheoremId::ToughnessFactorCritical => (false, true, false),
        };
        let check = |name: &str, value: Option<usize>, needed: bool| -> Result<()> {
            match (value, needed) {
                (Some(0), true) => Err(Error::invalid(format!("{id} needs {name} >= 1"))),
                (None, true) => Err(Error::invalid(format!("{id} needs parameter {name}"))),
                (Some(_), false) => Err(Error::invalid(format!("{id} takes no parameter {name}"))),
                _ => Ok(()),
            }
        };
        check("k", self.k, need_k)?;
        check("n", self.n, need_n)?;
        check("m", self.m, need_m)?;
        if self.girth.is_some() && id != TheoremId::GirthBindingExtendable {
            return Err(Error::invalid(format!("{id} takes no girth parameter")));
        }
        if let Some(g) = self.girth {
            g0_of_girth(g)?;
        }
        Ok(())
    }
}

/// Why an exact parameter is missing from a [`GraphProfile`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "message", rename_all = "snake_case")]
pub enum Unavailable {
    /// The scan was refused by a guard.
    Guard(String),
    /// The parameter is not defined for this graph.
    Undefined(String),
}

impl Unavailable {
    fn from_error(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Unavailable::Guard(e.to_string()),
            other => Unavailable::Undefined(other.to_string()),
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Unavailable::Guard(m) | Unavailable::Undefined(m) => m,
        }
    }
}

pub type ParameterResult = std::result::Result<ParameterWitness, Unavailable>;

/// Graph invariants shared by all evaluations on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphProfile {
    pub order: usize,
    pub connected: bool,
    pub girth: Option<usize>,
    pub kappa: usize,
    pub binding: ParameterResult,
    pub toughness: ParameterResult,
}

impl GraphProfile {
    pub fn compute(g: &Graph, guards: &Guards) -> Self {
        GraphProfile {
            order: g.order(),
            connected: g.is_connected(),
            girth: g.girth(),
            kappa: g.vertex_connectivity(),
            binding: binding_number_with(g, guards).map_err(Unavailable::from_error),
            toughness: toughness_with(g, guards).map_err(Unavailable::from_error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub required: String,
    pub observed: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub params: TheoremParams,
    pub eps: Rational,
    pub hypotheses: Vec<Hypothesis>,
    /// Every hypothesis holds.
    pub applicable: bool,
    /// The conclusion as decided by the checker, when decidable within the guards.
    pub conclusion_checked: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ExtendabilityCertificate>,
    /// Why the conclusion was not decided, if it was not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl TheoremReport {
    /// The result is refuted: it applies but its conclusion fails.
    pub fn is_violation(&self) -> bool {
        self.applicable && self.conclusion_checked == Some(false)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }
}

struct Builder {
    hyps: Vec<Hypothesis>,
}

impl Builder {
    fn push(&mut self, name: &str, required: String, observed: String, satisfied: bool) {
        self.hyps.push(Hypothesis {
            name: name.into(),
            required,
            observed,
            satisfied,
        });
    }

    fn all(&self) -> bool {
        self.hyps.iter().all(|h| h.satisfied)
    }
}

fn param_value(p: &ParameterResult) -> std::result::Result<Rational, String> {
    p.as_ref().map(|w| w.value).map_err(|e| e.message().to_string())
}

pub fn evaluate(
    id: TheoremId,
    g: &Graph,
    params: TheoremParams,
    eps: Rational,
    guards: &Guards,
) -> Result<TheoremReport> {
    let profile = GraphProfile::compute(g, guards);
    evaluate_profile(id, g, &profile, params, eps, guards)
}

/// [`evaluate`] reusing precomputed invariants of `g`.
pub fn evaluate_profile(
    id: TheoremId,
    g: &Graph,
    profile: &GraphProfile,
    params: TheoremParams,
    eps: Rational,
    guards: &Guards,
) -> Result<TheoremReport> {
    evaluate_memo(id, g, profile, params, eps, guards, &mut VerdictMemo::new())
}

/// [`evaluate_profile`] sharing extendability verdicts through `memo`.
pub fn evaluate_memo(
    id: TheoremId,
    g: &Graph,
    profile: &GraphProfile,
    params: TheoremParams,
    eps: Rational,
    guards: &Guards,
    memo: &mut VerdictMemo,
) -> Result<TheoremReport> {
    params.check(id)?;
    if !eps.is_positive() || eps.is_infinite() {
        return Err(Error::invalid(format!("eps must be a positive rational, got {eps}")));
    }
    let order = profile.order;
    let mut b = Builder { hyps: Vec::new() };
    let mut skipped = None;

    let (k, n, m) = (params.k.unwrap_or(0), params.n.unwrap_or(0), params.m.unwrap_or(0));

    if id.uses_binding() {
        let (g0, target) = match id {
            TheoremId::GirthBindingExtendable => {
                let girth = params.girth.unwrap_or(3);
                let g0 = g0_of_girth(girth)?;
                b.push(
                    "girth",
                    format!(">= {girth}"),
                    profile.girth.map_or("inf".into(), |x| x.to_string()),
                    profile.girth.is_none_or(|x| x >= girth),
                );
                (g0, k)
            }
            TheoremId::BindingNkExtendable => (3, k + 2 * n),
            _ => (3, m + n),
        };
        let eps_ok = eps < Rational::new(1, g0 as i64);
        b.push("eps", format!("< 1/{g0}"), eps.to_string(), eps_ok);
        let threshold = binding_threshold(g0, eps);
        match param_value(&profile.binding) {
            Ok(v) => b.push("binding", format!("> {threshold}"), v.to_string(), v > threshold),
            Err(e) => {
                b.push("binding", format!("> {threshold}"), "unavailable".into(), false);
                skipped = Some(e);
            }
        }
        let big = if eps_ok { Some(threshold_n(target, g0, eps)?) } else { None };
        b.push(
            "order_threshold",
            big.map_or("undefined".into(), |x| format!(">= {x}")),
            order.to_string(),
            big.is_some_and(|x| order as u64 >= x),
        );
    } else {
        let needed = Rational::one() + eps;
        match param_value(&profile.toughness) {
            Ok(v) => b.push("toughness", format!(">= {needed}"), v.to_string(), v >= needed),
            Err(e) => {
                b.push("toughness", format!(">= {needed}"), "unavailable".into(), false);
                skipped = Some(e);
            }
        }
        let lead: i64 = match id {
            TheoremId::ToughnessFactorCritical => n as i64 - 2,
            TheoremId::ToughnessExtendable => 2 * k as i64 - 2,
            _ => 2 * (m + n) as i64 - 2,
        };
        let kappa_bound = Rational::integer(lead) * (Rational::one() + eps) / eps;
        b.push(
            "connectivity",
            format!("> {kappa_bound}"),
            profile.kappa.to_string(),
            Rational::from(profile.kappa) > kappa_bound,
        );
    }

    // Preconditions built into the conclusion's definition.
    b.push("connected", "true".into(), profile.connected.to_string(), profile.connected);
    let (parity_name, parity_ok, min_order) = match id {
        TheoremId::ToughnessFactorCritical => ("order_parity", order % 2 == n % 2, n),
        TheoremId::BindingNkExtendable => ("order_parity", order % 2 == n % 2, n + 2 * k + 2),
        TheoremId::GirthBindingExtendable | TheoremId::ToughnessExtendable => {
            ("even_order", order.is_multiple_of(2), 2 * k + 2)
        }
        _ => ("even_order", order.is_multiple_of(2), 2 * m + 2 * n + 2),
    };
    b.push(
        parity_name,
        if parity_name == "even_order" { "even".into() } else { format!("= {n} mod 2") },
        (order % 2).to_string(),
        parity_ok,
    );
    b.push("min_order", format!(">= {min_order}"), order.to_string(), order >= min_order);

    let definable = profile.connected && parity_ok && order >= min_order;
    let property = match id {
        TheoremId::GirthBindingExtendable | TheoremId::ToughnessExtendable => {
            Property::KExtendable { k }
        }
        TheoremId::BindingNkExtendable => Property::NkExtendable { n, k },
        TheoremId::ToughnessFactorCritical => Property::FactorCritical { n },
        TheoremId::BindingEmnExtendable | TheoremId::ToughnessEmnExtendable => Property::Emn {
            m,
            n,
            mode: params.mode,
        },
    };
    let decided = definable.then(|| memo.decide(g, property, guards));
    let (conclusion_checked, certificate) = match decided {
        Some(Ok(v)) => (Some(v.holds), v.certificate),
        Some(Err(e @ Error::ResourceLimit { .. })) => {
            skipped = Some(e.to_string());
            (None, None)
        }
        Some(Err(e)) => return Err(e),
        None => {
            skipped.get_or_insert_with(|| "conclusion undefined for this graph".into());
            (None, None)
        }
    };

    let applicable = b.all();
    Ok(TheoremReport {
        theorem_id: id,
        params,
        eps,
        hypotheses: b.hyps,
        applicable,
        conclusion_checked,
        certificate,
        skipped,
    })
}
