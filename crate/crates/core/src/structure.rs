//! Gallai–Edmonds decomposition and the certificates it yields: Tutte sets
//! (`c₀(G−S) > |S|`) and barriers (`fc(G−S) ≥ |S| + 2`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::{has_perfect_matching, matching_number};

/// True iff `|V|` is odd and `G − v` has a perfect matching for every `v`.
/// `K1` is factor-critical.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n.is_multiple_of(2) {
        return false;
    }
    (0..n).all(|v| {
        let (h, _) = g.remove_vertices(&VertexSet::new(vec![v]));
        has_perfect_matching(&h)
    })
}

/// `(D, A, C)`: `D` is the set of vertices missed by some maximum matching,
/// `A = N(D) ∖ D`, `C` the remaining vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiEdmonds {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
}

impl GallaiEdmonds {
    /// Components of `G[D]`, in original ids.
    pub fn d_components(&self, g: &Graph) -> Vec<VertexSet> {
        let (h, map) = g.induced(&self.d);
        h.components()
            .into_iter()
            .map(|c| c.iter().map(|v| map[v]).collect())
            .collect()
    }

    /// `c(G[D]) − |A|`, equal to `|V| − 2ν(G)`.
    pub fn deficiency(&self, g: &Graph) -> usize {
        self.d_components(g).len() - self.a.len()
    }
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let nu = matching_number(g);
    let d: VertexSet = (0..g.order())
        .filter(|&v| {
            let (h, _) = g.remove_vertices(&VertexSet::new(vec![v]));
            matching_number(&h) == nu
        })
        .collect();
    let a = g
        .neighborhood(&d)
        .expect("D is a vertex subset")
        .difference(&d);
    let c = g.vertices().difference(&d.union(&a));
    GallaiEdmonds { d, a, c }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteCertificate {
    pub s: VertexSet,
    pub odd_components: Vec<VertexSet>,
}

impl TutteCertificate {
    /// Checks that the listed sets are exactly the odd components of `G − S`
    /// and that there are more of them than `|S|`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.s)?;
        let odd: Vec<VertexSet> = g
            .components_avoiding(&self.s)
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .collect();
        if odd != self.odd_components {
            return Err(Error::invalid("listed sets are not the odd components of G - S"));
        }
        if odd.len() <= self.s.len() {
            return Err(Error::invalid(format!(
                "c0(G-S) = {} does not exceed |S| = {}",
                odd.len(),
                self.s.len()
            )));
        }
        Ok(())
    }
}

/// `None` iff `G` has a perfect matching; otherwise `S = A(G)` with its odd components.
pub fn tutte_violator(g: &Graph) -> Option<TutteCertificate> {
    if has_perfect_matching(g) {
        return None;
    }
    let ge = gallai_edmonds(g);
    let odd_components = g
        .components_avoiding(&ge.a)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect();
    Some(TutteCertificate {
        s: ge.a,
        odd_components,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierCertificate {
    pub s: VertexSet,
    pub fc_components: Vec<VertexSet>,
}

impl BarrierCertificate {
    /// Checks that every listed set is a factor-critical component of `G − S`,
    /// that the sets are distinct, and that there are at least `|S| + 2` of them.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.s)?;
        let comps = g.components_avoiding(&self.s);
        let mut listed = self.fc_components.clone();
        listed.sort();
        if listed.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("a component is listed twice"));
        }
        for c in &self.fc_components {
            if !comps.contains(c) {
                return Err(Error::invalid(format!("{c} is not a component of G - S")));
            }
            let (h, _) = g.induced(c);
            if !is_factor_critical(&h) {
                return Err(Error::invalid(format!("component {c} is not factor-critical")));
            }
        }
        if self.fc_components.len() < self.s.len() + 2 {
            return Err(Error::invalid(format!(
                "fc(G-S) = {} is below |S| + 2 = {}",
                self.fc_components.len(),
                self.s.len() + 2
            )));
        }
        Ok(())
    }
}

/// For even order: `None` iff `G` has a perfect matching, otherwise the
/// canonical barrier `S = A(G)` with the components of `G[D]`.
pub fn barrier_certificate(g: &Graph) -> Result<Option<BarrierCertificate>> {
    if g.order() % 2 == 1 {
        return Err(Error::invalid(format!(
            "barrier certificates need even order, got {}",
            g.order()
        )));
    }
    if has_perfect_matching(g) {
        return Ok(None);
    }
    let ge = gallai_edmonds(g);
    let fc_components = ge.d_components(g);
    Ok(Some(BarrierCertificate {
        s: ge.a,
        fc_components,
    }))
}

/// `fc(G − S)`: components of `G − S` inducing factor-critical subgraphs.
pub fn count_fc_components(g: &Graph, removed: &VertexSet) -> Result<usize> {
    g.check_set(removed)?;
    Ok(g.components_avoiding(removed)
        .iter()
        .filter(|c| is_factor_critical(&g.induced(c).0))
        .count())
}
