//! Exact binding number and toughness by subset scans over bitmasks.
//!
//! Both scans are exponential; orders above [`Guards::max_parameter_order`]
//! are refused. Among optimal witnesses the smallest set wins, then the
//! colex-first one (colex order on equal-size sets is numeric order of the
//! bitmask).

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extend::Guards;
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterWitness {
    pub value: Rational,
    /// `None` only for the toughness of a complete graph.
    pub witness: Option<VertexSet>,
}

/// Candidate `num/den` attained by `mask`.
#[derive(Clone, Copy)]
struct Candidate {
    num: u64,
    den: u64,
    mask: u64,
}

impl Candidate {
    fn key_cmp(&self, other: &Candidate) -> Ordering {
        (self.num * other.den)
            .cmp(&(other.num * self.den))
            .then(self.mask.count_ones().cmp(&other.mask.count_ones()))
            .then(self.mask.cmp(&other.mask))
    }

    fn into_witness(self) -> ParameterWitness {
        ParameterWitness {
            value: Rational::new(self.num as i64, self.den as i64),
            witness: Some(VertexSet::from_mask(self.mask)),
        }
    }
}

fn masks(g: &Graph, max_order: usize) -> Result<Vec<u64>> {
    let limit = max_order.min(63);
    if g.order() > limit {
        return Err(Error::ResourceLimit {
            what: format!("exact parameter scan on {} vertices", g.order()),
            limit: limit as u64,
        });
    }
    Ok(g.adjacency_masks().expect("order checked"))
}

pub fn binding_number(g: &Graph) -> Result<ParameterWitness> {
    binding_number_with(g, &Guards::default())
}

/// `b(G) = min |N(S)|/|S|` over nonempty `S` with `N(S) ≠ V(G)`.
/// Undefined on fewer than two vertices.
pub fn binding_number_with(g: &Graph, guards: &Guards) -> Result<ParameterWitness> {
    let n = g.order();
    if n < 2 {
        return Err(Error::UndefinedParameter(format!(
            "binding number needs at least 2 vertices, got {n}"
        )));
    }
    let adj = masks(g, guards.max_parameter_order)?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<Candidate> = None;
    // Depth-first over include/exclude decisions. Once N(S) = V every
    // superset also covers V, so that subtree is skipped.
    fn walk(
        v: usize,
        set: u64,
        nbhd: u64,
        adj: &[u64],
        full: u64,
        best: &mut Option<Candidate>,
    ) {
        if v == adj.len() {
            if set != 0 && nbhd != full {
                let c = Candidate {
                    num: nbhd.count_ones() as u64,
                    den: set.count_ones() as u64,
                    mask: set,
                };
                if best.is_none_or(|b| c.key_cmp(&b) == Ordering::Less) {
                    *best = Some(c);
                }
            }
            return;
        }
        walk(v + 1, set, nbhd, adj, full, best);
        let grown = nbhd | adj[v];
        if grown != full {
            walk(v + 1, set | (1 << v), grown, adj, full, best);
        }
    }
    walk(0, 0, 0, &adj, full, &mut best);
    best.map(Candidate::into_witness).ok_or_else(|| {
        Error::UndefinedParameter(format!(
            "binding number: no nonempty S with N(S) != V on {n} vertices"
        ))
    })
}

fn component_count(alive: u64, adj: &[u64]) -> u32 {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let mut frontier = rest & rest.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

pub fn toughness(g: &Graph) -> Result<ParameterWitness> {
    toughness_with(g, &Guards::default())
}

/// `t(G) = min |S|/c(G−S)` over vertex cut-sets; `+∞` for complete graphs and
/// `0` (witness `∅`) for disconnected graphs.
pub fn toughness_with(g: &Graph, guards: &Guards) -> Result<ParameterWitness> {
    if g.is_complete() {
        return Ok(ParameterWitness {
            value: Rational::infinity(),
            witness: None,
        });
    }
    if !g.is_connected() {
        return Ok(ParameterWitness {
            value: Rational::zero(),
            witness: Some(VertexSet::empty()),
        });
    }
    let adj = masks(g, guards.max_parameter_order)?;
    let n = g.order();
    let full = (1u64 << n) - 1;
    let mut best: Option<Candidate> = None;
    for set in 1..full {
        let size = set.count_ones() as u64;
        let remaining = n as u64 - size;
        if remaining < 2 {
            continue;
        }
        // c(G−S) ≤ n − |S|, so |S|/(n−|S|) bounds the ratio from below
        if let Some(b) = best {
            if size * b.den > b.num * remaining {
                continue;
            }
        }
        let c = component_count(full & !set, &adj) as u64;
        if c < 2 {
            continue;
        }
        let cand = Candidate {
            num: size,
            den: c,
            mask: set,
        };
        if best.is_none_or(|b| cand.key_cmp(&b) == Ordering::Less) {
            best = Some(cand);
        }
    }
    Ok(best.expect("a connected non-complete graph has a cut-set").into_witness())
}
