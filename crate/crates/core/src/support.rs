//! ε-approximate supports of coefficient vectors.
//!
//! A vector `a` is ε-supported on `M` (w.r.t. the p-norm) when
//! `‖a|_{M^c}‖_p ≤ ε ‖a‖_p`. [`minimal_support`] returns a smallest such `M`
//! by keeping the largest-modulus entries first; since dropping the largest
//! entries is what minimizes the tail, the greedy prefix has minimum
//! cardinality.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::pnorm::{abs_pow, p_norm, restricted_p_norm, root, CoefficientVector};
use crate::{Error, Result};

/// Absolute slack when comparing an attained ε against a requested level.
pub const EPS_TOLERANCE: f64 = 1e-12;

/// A sorted, duplicate-free index set. Serialized as 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SupportSet {
    indices: Vec<usize>,
}

impl SupportSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        Self { indices: (0..n).collect() }
    }

    /// Builds a set from 1-based indices. Zero and repeated indices are rejected.
    pub fn from_one_based(indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::domain("support indices are 1-based; got 0"));
        }
        let mut v: Vec<usize> = indices.iter().map(|&j| j - 1).collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("support indices must be distinct"));
        }
        Ok(Self { indices: v })
    }

    pub fn from_zero_based(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self { indices: v }
    }

    /// Cardinality `o(M)`.
    pub fn cardinality(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.indices
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|&j| j + 1).collect()
    }

    /// Membership of a zero-based index.
    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    /// `{1, …, n} \ self`.
    pub fn complement(&self, n: usize) -> Self {
        Self { indices: (0..n).filter(|&j| !self.contains(j)).collect() }
    }

    /// Errors unless every index lies in `{1, …, n}`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.indices.last() {
            Some(&last) if last >= n => Err(Error::IndexOutOfRange { index: last + 1, n }),
            _ => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for SupportSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_one_based(&v)
    }
}

impl From<SupportSet> for Vec<usize> {
    fn from(s: SupportSet) -> Self {
        s.one_based()
    }
}

pub(crate) fn check_level(name: &str, eps: f64) -> Result<()> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::domain(format!("{name} = {eps} must lie in [0, 1)")));
    }
    Ok(())
}

/// The smallest ε for which `a` is ε-supported on `m`: `‖a|_{M^c}‖_p / ‖a‖_p`.
pub fn epsilon_of_support(a: &CoefficientVector, m: &SupportSet, p: f64) -> Result<f64> {
    m.check_within(a.len())?;
    let total = p_norm(a, p)?;
    if total == 0.0 {
        return Err(Error::ZeroVector);
    }
    let tail = restricted_p_norm(a, &m.complement(a.len()), p)?;
    Ok(tail / total)
}

pub fn is_epsilon_supported(a: &CoefficientVector, m: &SupportSet, eps: f64, p: f64) -> Result<bool> {
    check_level("eps", eps)?;
    Ok(epsilon_of_support(a, m, p)? <= eps + EPS_TOLERANCE)
}

/// Indices ordered by decreasing modulus, ties by ascending index.
fn magnitude_order(a: &CoefficientVector) -> Vec<usize> {
    let mags: Vec<f64> = a.as_slice().iter().map(|z| z.norm()).collect();
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| mags[j].partial_cmp(&mags[i]).unwrap_or(Ordering::Equal).then(i.cmp(&j)));
    order
}

/// A minimum-cardinality ε-support, chosen greedily from the largest entries.
pub fn minimal_support(a: &CoefficientVector, eps: f64, p: f64) -> Result<SupportSet> {
    check_level("eps", eps)?;
    let total = p_norm(a, p)?;
    if total == 0.0 {
        return Err(Error::ZeroVector);
    }
    let order = magnitude_order(a);
    let n = order.len();
    // tails[k] = Σ |a|^p over order[k..], accumulated from the small end.
    let mut tails = vec![0.0; n + 1];
    for k in (0..n).rev() {
        tails[k] = tails[k + 1] + abs_pow(a.as_slice()[order[k]], p);
    }
    let start = (1..=n).find(|&k| root(tails[k], p) / total <= eps + EPS_TOLERANCE).unwrap_or(n);
    // Confirm with the predicate itself so the result never disagrees with it
    // because of a different summation order.
    for k in start..=n {
        let m = SupportSet::from_zero_based(order[..k].iter().copied());
        if is_epsilon_supported(a, &m, eps, p)? {
            return Ok(m);
        }
    }
    Ok(SupportSet::full(n))
}

/// Minimal support sizes along a non-decreasing grid of ε levels.
pub fn support_profile(a: &CoefficientVector, p: f64, grid: &[f64]) -> Result<Vec<(f64, usize)>> {
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::domain("eps grid must be non-decreasing"));
    }
    grid.iter().map(|&eps| Ok((eps, minimal_support(a, eps, p)?.cardinality()))).collect()
}
