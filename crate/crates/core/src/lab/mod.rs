//! Quantitative side of the binding-number and toughness extension results:
//! proof-internal bounds, certificate ledgers, the connectivity-sharpness
//! construction and exact hypothesis evaluation.

mod evaluate;
mod ledger;
mod sharpness;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use evaluate::{
    evaluate, evaluate_memo, evaluate_profile, GraphProfile, Hypothesis, ParameterResult, TheoremId,
    TheoremParams, TheoremReport, Unavailable,
};
pub use ledger::{binding_bound_ledger, BindingBoundLedger, ClaimAudit};
pub use sharpness::{sharpness_construction, toughness_certificate_bound, ToughnessBound};

/// Smallest odd integer `≥ g`: `2⌊g/2⌋ + 1`.
pub fn g0_of_girth(g: usize) -> Result<usize> {
    if g < 3 {
        return Err(Error::invalid(format!("girth must be at least 3, got {g}")));
    }
    Ok(2 * (g / 2) + 1)
}

/// `(g0 + 1)/g0 + ε`, the binding-number threshold.
pub fn binding_threshold(g0: usize, eps: Rational) -> Rational {
    Rational::new(g0 as i64 + 1, g0 as i64) + eps
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofBounds {
    pub k: usize,
    pub g0: usize,
    pub eps: Rational,
    /// `max{2(g0−1)k, 2k/(g0·ε)}`; `s` lies strictly below it.
    pub s_max: Rational,
    /// `max{2g0k + 1, 2k/(g0·ε) + 1}`; `l` lies strictly below it.
    pub l_max: Rational,
    /// Order from which the final ratio can no longer exceed the threshold.
    pub threshold: u64,
}

impl ProofBounds {
    /// Upper bound `g0(2k + s)` on the total order of the non-singleton components.
    pub fn sum_c_bound(&self, s: usize) -> u64 {
        (self.g0 * (2 * self.k + s)) as u64
    }
}

fn check_bound_args(k: usize, g0: usize, eps: Rational) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if g0 < 3 || g0.is_multiple_of(2) {
        return Err(Error::invalid(format!("g0 must be odd and at least 3, got {g0}")));
    }
    if eps <= Rational::zero() || eps >= Rational::new(1, g0 as i64) {
        return Err(Error::invalid(format!("eps = {eps} must lie in (0, 1/{g0})")));
    }
    Ok(())
}

fn s_l_max(k: usize, g0: usize, eps: Rational) -> (Rational, Rational) {
    let k_r = Rational::from(k);
    let g0_r = Rational::from(g0);
    let two_k = Rational::from(2 * k);
    let tail = two_k / (g0_r * eps);
    let s_max = (Rational::from(2 * (g0 - 1)) * k_r).max(tail);
    let l_max = Rational::from(2 * g0 * k + 1).max(tail + Rational::one());
    (s_max, l_max)
}

pub fn claim_bounds(k: usize, g0: usize, eps: Rational) -> Result<ProofBounds> {
    check_bound_args(k, g0, eps)?;
    let (s_max, l_max) = s_l_max(k, g0, eps);
    Ok(ProofBounds {
        k,
        g0,
        eps,
        s_max,
        l_max,
        threshold: threshold_n(k, g0, eps)?,
    })
}

/// Numerator and denominator offsets of the final ratio
/// `(|G| − a)/(|G| − b)` with `a = 2kg0 + g0·s + l`, `b = 2k + 2kg0 + (g0+1)s + l`.
pub fn contra_offsets(k: usize, g0: usize, s: usize, l: usize) -> (i128, i128) {
    let (k, g0, s, l) = (k as i128, g0 as i128, s as i128, l as i128);
    let a = 2 * k * g0 + g0 * s + l;
    let b = 2 * k + 2 * k * g0 + (g0 + 1) * s + l;
    (a, b)
}

/// The final ratio at `order`, or `None` where its denominator is not positive.
pub fn contra_ratio(order: u64, k: usize, g0: usize, s: usize, l: usize) -> Option<Rational> {
    let (a, b) = contra_offsets(k, g0, s, l);
    let order = order as i128;
    (order > b).then(|| Rational::new((order - a) as i64, (order - b) as i64))
}

/// Minimal `N` such that for every `|G| ≥ N` and every integer `0 ≤ s ≤ ⌊s_max⌋`,
/// `0 ≤ l ≤ ⌊l_max⌋` the final ratio has positive denominator and is at most
/// `(g0+1)/g0 + ε`.
pub fn threshold_n(k: usize, g0: usize, eps: Rational) -> Result<u64> {
    check_bound_args(k, g0, eps)?;
    let (s_max, l_max) = s_l_max(k, g0, eps);
    let s_hi = s_max.floor().expect("finite") as usize;
    let l_hi = l_max.floor().expect("finite") as usize;
    let tau = binding_threshold(g0, eps);
    let (tn, td) = (
        tau.numer().expect("finite") as i128,
        tau.denom().expect("finite") as i128,
    );
    let mut grid = Vec::with_capacity((s_hi + 1) * (l_hi + 1));
    for s in 0..=s_hi {
        for l in 0..=l_hi {
            let (a, b) = contra_offsets(k, g0, s, l);
            // b − a = 2k + s > 0, so each ratio strictly decreases once |G| > b
            assert!(b > a, "ratio must be decreasing in the order");
            grid.push((a, b));
        }
    }
    let ok = |order: i128| {
        grid.iter()
            .all(|&(a, b)| order > b && (order - a) * td <= tn * (order - b))
    };
    let b_max = grid.iter().map(|&(_, b)| b).max().expect("grid is nonempty");
    let mut lo = b_max + 1;
    let mut hi = lo.max(1);
    while !ok(hi) {
        hi = hi.checked_mul(2).ok_or_else(|| Error::ResourceLimit {
            what: "threshold search".into(),
            limit: i64::MAX as u64,
        })?;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo as u64)
}
