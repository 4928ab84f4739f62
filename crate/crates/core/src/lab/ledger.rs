use serde::{Deserialize, Serialize};

use super::{binding_threshold, claim_bounds, g0_of_girth};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::Matching;
use crate::rational::Rational;
use crate::structure::is_factor_critical;

/// Quantities recomputed from a non-extendability certificate `(M, S)`:
/// the factor-critical components `C_1, …, C_{s+q}` of `G − V(M) − S`
/// sorted by order (ties by smallest vertex), `U = ∪_{i≥2} C_i`, the rest `W`,
/// and the two neighbourhood ratios `f ≥ |N(U)|/|U|`, `h ≥ |N(W)|/|W|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BindingBoundLedger {
    pub order: usize,
    pub k: usize,
    /// `None` for forests.
    pub g0: Option<usize>,
    pub s: usize,
    pub q: usize,
    pub components: Vec<VertexSet>,
    pub component_orders: Vec<usize>,
    /// Number of order-1 components.
    pub l: usize,
    /// `max{2, l + 1}`.
    pub r: usize,
    pub u: VertexSet,
    pub w: VertexSet,
    pub f: Rational,
    pub h: Rational,
}

impl BindingBoundLedger {
    /// `min{f, h}`, an upper bound on `b(G)`.
    pub fn bound(&self) -> Rational {
        self.f.min(self.h)
    }

    /// `Σ_{i=r}^{s+q} |C_i|`.
    pub fn tail_sum(&self) -> usize {
        self.component_orders
            .iter()
            .skip(self.r - 1)
            .sum()
    }

    /// Evaluates the four claim inequalities against the bounds for `eps`.
    pub fn audit_claims(&self, eps: Rational) -> Result<ClaimAudit> {
        let g0 = self
            .g0
            .ok_or_else(|| Error::invalid("claim audit needs a graph with a cycle"))?;
        let bounds = claim_bounds(self.k, g0, eps)?;
        let two_k_s = 2 * self.k + self.s;
        Ok(ClaimAudit {
            g0,
            eps,
            claim1: two_k_s + 2 > self.r,
            claim2: (self.tail_sum() as u64) < bounds.sum_c_bound(self.s),
            claim3: Rational::from(self.s) < bounds.s_max,
            claim4: Rational::from(self.l) < bounds.l_max,
            s_max: bounds.s_max,
            l_max: bounds.l_max,
        })
    }

    /// True when `b > (g0+1)/g0 + eps`, i.e. when the claims are expected to hold.
    pub fn binding_hypothesis(&self, binding: Rational, eps: Rational) -> bool {
        self.g0
            .is_some_and(|g0| binding > binding_threshold(g0, eps))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimAudit {
    pub g0: usize,
    pub eps: Rational,
    /// `2k + s > r − 2`
    pub claim1: bool,
    /// `Σ_{i=r} |C_i| < g0(2k + s)`
    pub claim2: bool,
    /// `s < s_max`
    pub claim3: bool,
    /// `l < l_max`
    pub claim4: bool,
    pub s_max: Rational,
    pub l_max: Rational,
}

impl ClaimAudit {
    pub fn all_hold(&self) -> bool {
        self.claim1 && self.claim2 && self.claim3 && self.claim4
    }
}

pub fn binding_bound_ledger(
    g: &Graph,
    k: usize,
    m: &Matching,
    s: &VertexSet,
) -> Result<BindingBoundLedger> {
    m.validate(g)?;
    if m.len() != k {
        return Err(Error::invalid(format!("expected a {k}-matching, got {} edges", m.len())));
    }
    g.check_set(s)?;
    let covered = m.vertices();
    if !s.is_disjoint(&covered) {
        return Err(Error::invalid("S must avoid V(M)"));
    }
    let removed = s.union(&covered);
    let mut comps: Vec<VertexSet> = g
        .components_avoiding(&removed)
        .into_iter()
        .filter(|c| is_factor_critical(&g.induced(c).0))
        .collect();
    comps.sort_by_key(|c| (c.len(), c.min()));
    let s_len = s.len();
    if comps.len() < s_len + 2 {
        return Err(Error::invalid(format!(
            "fc(G - V(M) - S) = {} is below |S| + 2 = {}",
            comps.len(),
            s_len + 2
        )));
    }
    let q = comps.len() - s_len;
    if q % 2 == 1 {
        return Err(Error::invalid(format!("q = {q} must be even")));
    }
    let orders: Vec<usize> = comps.iter().map(VertexSet::len).collect();
    let l = orders.iter().take_while(|&&o| o == 1).count();
    let r = 2.max(l + 1);
    let n = g.order();
    let u: VertexSet = comps[1..].iter().flat_map(|c| c.iter()).collect();
    let w = g.vertices().difference(&u.union(&removed));
    let tail: usize = orders.iter().skip(r - 1).sum();
    let from_two: usize = orders[1..].iter().sum();
    let f = Rational::from(2 * k + s_len + tail) / Rational::from(r - 2 + tail);
    let h = Rational::from(n - from_two) / Rational::from(n - 2 * k - s_len - from_two);
    let g0 = g.girth().map(|gi| g0_of_girth(gi).expect("girth is at least 3"));
    Ok(BindingBoundLedger {
        order: n,
        k,
        g0,
        s: s_len,
        q,
        components: comps,
        component_orders: orders,
        l,
        r,
        u,
        w,
        f,
        h,
    })
}
