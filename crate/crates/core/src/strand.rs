//! Closed formula for the linear strand of the powers of `J_G`, for closed
//! `K_4`-free graphs.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, LabeledGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrandError {
    #[error("graph is not closed in its labeling: edge {{{i},{k}}} without {{{i},{j}}} and {{{j},{k}}}")]
    NotClosed { i: usize, j: usize, k: usize },
    #[error("graph contains the 4-clique {0:?}")]
    HasK4([usize; 4]),
    #[error("the power must be at least 1")]
    ZeroPower,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `s` symbols.
pub fn multiset_count(s: u64, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    if s == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(s + d as u64 - 1, d as u64)
}

/// `beta_{i, 2m+i}` of `J_G^m` for a closed `K_4`-free graph with `e` edges
/// and `t` triangles.
pub fn linear_strand_formula(e: u64, t: u64, m: u64, i: u64) -> BigUint {
    multiset_count(e, m as i64 - i as i64) * binomial(2 * t, i)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrandProfile {
    pub e: u64,
    pub t: u64,
    pub m: u64,
    /// `strand[i] = beta_{i, 2m+i}` for `0 <= i <= m + 2t`.
    #[serde(serialize_with = "serialize_big")]
    pub strand: Vec<BigUint>,
}

fn serialize_big<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let n: serde_json::Number = x.to_string().parse().expect("decimal integer");
        seq.serialize_element(&n)?;
    }
    seq.end()
}

impl StrandProfile {
    pub fn from_counts(e: u64, t: u64, m: u64) -> StrandProfile {
        let strand = (0..=m + 2 * t).map(|i| linear_strand_formula(e, t, m, i)).collect();
        StrandProfile { e, t, m, strand }
    }

    /// Entry `i`, zero past the stored support.
    pub fn entry(&self, i: usize) -> BigUint {
        self.strand.get(i).cloned().unwrap_or_default()
    }

    /// Entries up to the last nonzero one.
    pub fn support(&self) -> &[BigUint] {
        let end = self.strand.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1);
        &self.strand[..end]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }
}

/// Strand profile of `J_G^m`, refusing graphs outside the formula's scope.
pub fn strand_profile(graph: &LabeledGraph, m: u64) -> Result<StrandProfile, StrandError> {
    if m == 0 {
        return Err(StrandError::ZeroPower);
    }
    if let Some((i, j, k)) = graph.closed_violation() {
        return Err(StrandError::NotClosed { i, j, k });
    }
    if let Some(&q) = graph.four_cliques().first() {
        return Err(StrandError::HasK4(q));
    }
    Ok(StrandProfile::from_counts(graph.edge_count() as u64, graph.triangles().len() as u64, m))
}

/// Ranks of the linear strand of the Koszul complex on `2t` regular
/// elements over a polynomial ring in `e` variables, truncated to the power
/// `m`: the `i`-th free module is `i`-subsets of the sequence times
/// monomials of degree `m - i` in the `e` variables. Computed from Pascal's
/// triangle and a stars-and-bars table rather than the closed formula.
pub fn strand_complex_ranks(e: u64, t: u64, m: u64) -> Vec<(u64, BigUint)> {
    let r = 2 * t as usize;
    let m = m as usize;
    // subsets[i] = C(r, i)
    let mut subsets = vec![BigUint::one()];
    for _ in 0..r {
        let mut next = vec![BigUint::one(); subsets.len() + 1];
        for i in 1..subsets.len() {
            next[i] = &subsets[i - 1] + &subsets[i];
        }
        subsets = next;
    }
    // monos[d] = monomials of degree d in e symbols, by adding one symbol at a time
    let mut monos = vec![BigUint::zero(); m + 1];
    monos[0] = BigUint::one();
    for _ in 0..e {
        for d in 1..=m {
            let prev = monos[d - 1].clone();
            monos[d] += prev;
        }
    }
    (0..=m.min(r)).map(|i| (i as u64, &subsets[i] * &monos[m - i])).collect()
}
