use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extend::Guards;
use crate::graph::{Graph, VertexSet};
use crate::params::toughness_with;
use crate::rational::Rational;

/// `K_{n+t} + ((t+1)K_1 ∪ K_r)`: the hub `K_{n+t}` takes ids `0..n+t`, the
/// isolated vertices follow, then the `K_r`.
///
/// Toughness is `(n+t)/(t+2)` and connectivity `n+t`, yet deleting any `n`
/// hub vertices leaves `t+2` odd pieces against `t` hub vertices.
pub fn sharpness_construction(n: usize, t: usize, r: usize) -> Result<Graph> {
    if n == 0 || t == 0 || r == 0 {
        return Err(Error::invalid(format!("n, t, r must be positive, got ({n},{t},{r})")));
    }
    let hub = Graph::complete(n + t);
    let rim = Graph::empty(t + 1).disjoint_union(&Graph::complete(r));
    Ok(hub.join(&rim))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessBound {
    /// `(|S| + |T|)/(|T| + 2)`
    pub bound: Rational,
    pub toughness: Rational,
    pub kappa: usize,
    /// `t(G) ≤ bound`
    pub toughness_within: bool,
    /// `κ(G) ≤ n + |T|`
    pub kappa_within: bool,
}

/// Given `|S| = n` and a Tutte set `T` of `G − S` (`c₀(G−S−T) ≥ |T| + 2`),
/// returns `(|S|+|T|)/(|T|+2)` together with the two consequences it implies.
pub fn toughness_certificate_bound(
    g: &Graph,
    n: usize,
    s: &VertexSet,
    t: &VertexSet,
    guards: &Guards,
) -> Result<ToughnessBound> {
    g.check_set(s)?;
    g.check_set(t)?;
    if s.len() != n {
        return Err(Error::invalid(format!("|S| = {} but n = {n}", s.len())));
    }
    if !s.is_disjoint(t) {
        return Err(Error::invalid("T must avoid S"));
    }
    let odd = g.odd_component_count(&s.union(t))?;
    if odd < t.len() + 2 {
        return Err(Error::invalid(format!(
            "c0(G - S - T) = {odd} is below |T| + 2 = {}",
            t.len() + 2
        )));
    }
    let bound = Rational::from(n + t.len()) / Rational::from(t.len() + 2);
    let toughness = toughness_with(g, guards)?.value;
    let kappa = g.vertex_connectivity();
    Ok(ToughnessBound {
        bound,
        toughness,
        kappa,
        toughness_within: toughness <= bound,
        kappa_within: kappa <= n + t.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extend::is_n_factor_critical;

    #[test]
    fn construction_shape() {
        let g = sharpness_construction(4, 1, 3).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.vertex_connectivity(), 5);
        assert_eq!(crate::params::toughness(&g).unwrap().value, Rational::new(5, 3));
        let v = is_n_factor_critical(&g, 4).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert!(cert.removed_vertices.iter().all(|x| x < 5));
        assert!(sharpness_construction(0, 1, 1).is_err());
    }

    #[test]
    fn certificate_bound_on_construction() {
        let g = sharpness_construction(4, 1, 3).unwrap();
        let s = VertexSet::new(vec![0, 1, 2, 3]);
        let t = VertexSet::new(vec![4]);
        let tb = toughness_certificate_bound(&g, 4, &s, &t, &Guards::default()).unwrap();
        assert_eq!(tb.bound, Rational::new(5, 3));
        assert_eq!(tb.toughness, tb.bound);
        assert!(tb.toughness_within && tb.kappa_within);
        // T = ∅ leaves the hub vertex 4 joining everything
        assert!(toughness_certificate_bound(&g, 4, &s, &VertexSet::empty(), &Guards::default())
            .is_err());
        assert!(toughness_certificate_bound(&g, 3, &s, &t, &Guards::default()).is_err());
    }
}
