//! Scalar and vector ℓ^p arithmetic.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::support::SupportSet;
use crate::{Error, Result};

/// Smallest admissible exponent is `1 + P_MIN_MARGIN`.
const P_MIN_MARGIN: f64 = 1e-9;
/// Exponents at or above this are rejected.
const P_MAX: f64 = 1e9;

/// An exponent `p ∈ (1, ∞)` together with its Hölder conjugate `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderPair {
    p: f64,
    q: f64,
}

impl HolderPair {
    pub fn new(p: f64) -> Result<Self> {
        let q = conjugate_index(p)?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// True when this is the Hilbert-space exponent `p = q = 2`.
    pub fn is_hilbert(&self) -> bool {
        (self.p - 2.0).abs() <= 1e-12
    }
}

fn check_exponent(p: f64) -> Result<()> {
    if !p.is_finite() || p <= 1.0 + P_MIN_MARGIN || p >= P_MAX {
        return Err(Error::domain(format!("exponent p = {p} must lie in (1 + {P_MIN_MARGIN:e}, {P_MAX:e})")));
    }
    Ok(())
}

/// Returns `q` with `1/p + 1/q = 1`.
pub fn conjugate_index(p: f64) -> Result<f64> {
    check_exponent(p)?;
    Ok(p / (p - 1.0))
}

/// `|z|^p`, with `0^p = 0`.
#[inline]
pub(crate) fn abs_pow(z: Complex64, p: f64) -> f64 {
    let r = z.norm();
    if r == 0.0 {
        0.0
    } else {
        (p * r.ln()).exp()
    }
}

#[inline]
pub(crate) fn root(sum: f64, p: f64) -> f64 {
    if sum == 0.0 {
        0.0
    } else {
        (sum.ln() / p).exp()
    }
}

/// `(Σ |z_j|^p)^(1/p)` over a raw slice; `p ≥ 1` is the caller's job.
pub(crate) fn norm_of_slice(z: &[Complex64], p: f64) -> f64 {
    root(z.iter().map(|&v| abs_pow(v, p)).sum(), p)
}

/// A nonempty sequence of finite complex coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct CoefficientVector(Vec<Complex64>);

impl CoefficientVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("coefficient vector must have n >= 1 entries"));
        }
        if let Some(j) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::domain(format!("entry {} is not finite", j + 1)));
        }
        Ok(Self(entries))
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `j` (1-based): the coordinate functional `ζ_j`.
    pub fn coordinate(&self, j: usize) -> Result<Complex64> {
        if j == 0 || j > self.0.len() {
            return Err(Error::IndexOutOfRange { index: j, n: self.0.len() });
        }
        Ok(self.0[j - 1])
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self(self.0.iter().map(|&z| z * lambda).collect())
    }
}

impl TryFrom<Vec<Complex64>> for CoefficientVector {
    type Error = Error;

    fn try_from(v: Vec<Complex64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CoefficientVector> for Vec<Complex64> {
    fn from(v: CoefficientVector) -> Self {
        v.0
    }
}

fn check_norm_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::domain(format!("norm exponent p = {p} must be >= 1")));
    }
    Ok(())
}

/// `(Σ_j |v_j|^p)^(1/p)`.
pub fn p_norm(v: &CoefficientVector, p: f64) -> Result<f64> {
    check_norm_exponent(p)?;
    Ok(norm_of_slice(v.as_slice(), p))
}

/// `(Σ_{j∈S} |v_j|^p)^(1/p)`; zero for the empty set.
pub fn restricted_p_norm(v: &CoefficientVector, s: &SupportSet, p: f64) -> Result<f64> {
    check_norm_exponent(p)?;
    s.check_within(v.len())?;
    let sum: f64 = s.zero_based().iter().map(|&j| abs_pow(v.0[j], p)).sum();
    Ok(root(sum, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn real(v: &[f64]) -> CoefficientVector {
        CoefficientVector::from_real(v).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate_index(2.0).unwrap(), 2.0);
        assert!((conjugate_index(4.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((conjugate_index(1.5).unwrap() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn conjugate_rejects_out_of_range() {
        for p in [1.0, 0.5, -2.0, 1.0 + 1e-10, f64::INFINITY, f64::NAN, 1e9] {
            assert!(matches!(conjugate_index(p), Err(Error::Domain(_))), "p = {p}");
        }
    }

    #[test]
    fn conjugate_is_an_involution() {
        for p in [1.1, 1.5, 2.0, 3.0, 10.0] {
            let back = conjugate_index(conjugate_index(p).unwrap()).unwrap();
            assert!((back - p).abs() <= 1e-12 * p, "p = {p}, back = {back}");
        }
    }

    #[test]
    fn holder_pair_relation() {
        for p in [1.1, 1.5, 2.0, 3.0, 10.0, 1e6] {
            let h = HolderPair::new(p).unwrap();
            assert!((1.0 / h.p() + 1.0 / h.q() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn norm_examples() {
        assert_eq!(p_norm(&real(&[1.0, 0.0, 0.0]), 2.0).unwrap(), 1.0);
        assert!((p_norm(&real(&[3.0, 4.0]), 2.0).unwrap() - 5.0).abs() < 1e-14);
        let v = p_norm(&real(&[1.0; 4]), 4.0).unwrap();
        assert!((v - 4f64.powf(0.25)).abs() < 1e-14);
        assert!((v - 1.41421356).abs() < 1e-8);
        assert_eq!(p_norm(&real(&[0.0, 0.0]), 1.5).unwrap(), 0.0);
        assert!(matches!(p_norm(&real(&[1.0]), 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn restricted_norm_examples() {
        let s = SupportSet::from_one_based(&[1, 2]).unwrap();
        let v = restricted_p_norm(&real(&[3.0, 4.0, 12.0]), &s, 2.0).unwrap();
        assert!((v - 5.0).abs() < 1e-14);
        let empty = SupportSet::empty();
        assert_eq!(restricted_p_norm(&real(&[1.0, 2.0, 3.0]), &empty, 2.0).unwrap(), 0.0);
        let s = SupportSet::from_one_based(&[2, 3]).unwrap();
        let v = restricted_p_norm(&real(&[1.0; 4]), &s, 3.0).unwrap();
        assert!((v - 2f64.powf(1.0 / 3.0)).abs() < 1e-14);
        let s = SupportSet::from_one_based(&[4]).unwrap();
        assert!(matches!(restricted_p_norm(&real(&[1.0; 3]), &s, 2.0), Err(Error::IndexOutOfRange { index: 4, n: 3 })));
    }

    #[test]
    fn vector_rejects_bad_input() {
        assert!(CoefficientVector::new(vec![]).is_err());
        assert!(CoefficientVector::from_real(&[1.0, f64::NAN]).is_err());
        assert!(CoefficientVector::from_real(&[f64::INFINITY]).is_err());
        let v = real(&[5.0, 7.0]);
        assert_eq!(v.coordinate(2).unwrap().re, 7.0);
        assert!(v.coordinate(0).is_err());
    }

    fn cvec(max_len: usize) -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 1..max_len)
            .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
    }

    proptest! {
        #[test]
        fn homogeneity(v in cvec(16), re in -5.0..5.0f64, im in -5.0..5.0f64, p in 1.0..6.0f64) {
            let v = CoefficientVector::new(v).unwrap();
            let lambda = Complex64::new(re, im);
            let lhs = p_norm(&v.scale(lambda), p).unwrap();
            let rhs = lambda.norm() * p_norm(&v, p).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
        }

        #[test]
        fn triangle(pair in (1usize..16).prop_flat_map(|n| (
            prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), n),
            prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), n))),
            p in 1.0..8.0f64)
        {
            let to = |v: &[(f64, f64)]| CoefficientVector::new(
                v.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap();
            let u = to(&pair.0);
            let w = to(&pair.1);
            let sum = CoefficientVector::new(
                u.as_slice().iter().zip(w.as_slice()).map(|(a, b)| a + b).collect()).unwrap();
            let lhs = p_norm(&sum, p).unwrap();
            let rhs = p_norm(&u, p).unwrap() + p_norm(&w, p).unwrap();
            prop_assert!(lhs <= rhs + 1e-12 * rhs.max(1.0));
        }

        #[test]
        fn partition_identity(v in cvec(16), mask in any::<u16>(), p in 1.0..6.0f64) {
            let v = CoefficientVector::new(v).unwrap();
            let n = v.len();
            let s = SupportSet::from_zero_based((0..n).filter(|j| mask >> j & 1 == 1));
            let a = restricted_p_norm(&v, &s, p).unwrap().powf(p);
            let b = restricted_p_norm(&v, &s.complement(n), p).unwrap().powf(p);
            let total = p_norm(&v, p).unwrap().powf(p);
            prop_assert!((a + b - total).abs() <= 1e-10 * total.max(f64::MIN_POSITIVE));
        }

        // The counting step (Σ_{S} |v_j|)^p ≤ o(S)^{p/q} Σ_{S} |v_j|^p.
        #[test]
        fn holder_counting_step(v in cvec(16), mask in any::<u16>(), p in 1.01..6.0f64) {
            let v = CoefficientVector::new(v).unwrap();
            let q = conjugate_index(p).unwrap();
            let idx: Vec<usize> = (0..v.len()).filter(|j| mask >> j & 1 == 1).collect();
            let l1: f64 = idx.iter().map(|&j| v.as_slice()[j].norm()).sum();
            let lp: f64 = idx.iter().map(|&j| v.as_slice()[j].norm().powf(p)).sum();
            let lhs = l1.powf(p);
            let rhs = (idx.len() as f64).powf(p / q) * lp;
            prop_assert!(lhs <= rhs * (1.0 + 1e-10) + f64::MIN_POSITIVE);
        }
    }
}
