//! Both sides of the approximate-support inequalities, and the compressed
//! operators whose norms sit between them.
//!
//! For supports `M` (of `θ_f x`) and `N` (of `θ_g x`), the operator
//! `V = P_M A P_N` satisfies
//!
//! ```text
//! max{1 − ε − δ, 0} ≤ ‖V‖_{p→p} ≤ max|A| · o(M)^(1/p) · o(N)^(1/q)
//! ```
//!
//! and `W = P_N B P_M` satisfies the mirrored chain with `max|B|` and the
//! exponents swapped. The upper bound holds for any matrix; the lower bound
//! needs `A` to be an ℓ^p isometry.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{analysis_in_g, complex_normal, stream_rng, BasisPair, VectorInX};
use crate::matrix::CMatrix;
use crate::pnorm::{abs_pow, norm_of_slice, CoefficientVector, HolderPair};
use crate::support::{check_level, minimal_support, SupportSet};
use crate::{Error, Result};

/// Slack below which an inequality counts as violated.
pub const HOLDS_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_RESTARTS: usize = 16;
pub const DEFAULT_ITERS: usize = 200;
const CONVERGENCE_RTOL: f64 = 1e-10;

/// Which compression of the transition matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorKind {
    /// `P_M A P_N`
    V,
    /// `P_N B P_M`
    W,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedOperator {
    matrix: CMatrix,
    row_support: SupportSet,
    col_support: SupportSet,
    kind: OperatorKind,
    holder: HolderPair,
}

impl ProjectedOperator {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn row_support(&self) -> &SupportSet {
        &self.row_support
    }

    pub fn col_support(&self) -> &SupportSet {
        &self.col_support
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn holder(&self) -> HolderPair {
        self.holder
    }

    pub fn p(&self) -> f64 {
        self.holder.p()
    }
}

/// One check of both inequalities for a single vector.
///
/// Supports are the greedy minimal ones (`support_rule = "greedy-minimal"`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub eps: f64,
    pub delta: f64,
    pub support_rule: String,
    #[serde(rename = "M")]
    pub m_support: SupportSet,
    #[serde(rename = "N")]
    pub n_support: SupportSet,
    #[serde(rename = "lhs_ME")]
    pub lhs_me: f64,
    #[serde(rename = "rhs_ME")]
    pub rhs_me: f64,
    #[serde(rename = "lhs_ME2")]
    pub lhs_me2: f64,
    #[serde(rename = "rhs_ME2")]
    pub rhs_me2: f64,
    #[serde(rename = "slack_ME")]
    pub slack_me: f64,
    #[serde(rename = "slack_ME2")]
    pub slack_me2: f64,
    pub holds: bool,
    pub hypothesis_met: bool,
}

pub const SUPPORT_RULE: &str = "greedy-minimal";

/// Zeroes every entry outside `s`.
pub fn canonical_projection(s: &SupportSet, z: &CoefficientVector) -> Result<CoefficientVector> {
    s.check_within(z.len())?;
    let zero = Complex64::new(0.0, 0.0);
    CoefficientVector::new(
        z.as_slice().iter().enumerate().map(|(j, &v)| if s.contains(j) { v } else { zero }).collect(),
    )
}

pub fn build_projected_operator(
    pair: &BasisPair,
    m: &SupportSet,
    n: &SupportSet,
    kind: OperatorKind,
) -> Result<ProjectedOperator> {
    let dim = pair.n();
    m.check_within(dim)?;
    n.check_within(dim)?;
    let (source, rows, cols) = match kind {
        OperatorKind::V => (pair.transition(), m, n),
        OperatorKind::W => (pair.inverse_transition(), n, m),
    };
    let mut matrix = CMatrix::zeros(dim, dim);
    for &j in rows.zero_based() {
        for &k in cols.zero_based() {
            matrix[(j, k)] = source[(j, k)];
        }
    }
    Ok(ProjectedOperator { matrix, row_support: rows.clone(), col_support: cols.clone(), kind, holder: pair.holder() })
}

/// The coherence-counting bound on `‖V‖` (or `‖W‖`).
pub fn operator_norm_upper(pair: &BasisPair, m: &SupportSet, n: &SupportSet, kind: OperatorKind) -> f64 {
    let (p, q) = (pair.p(), pair.q());
    let om = m.cardinality() as f64;
    let on = n.cardinality() as f64;
    match kind {
        OperatorKind::V => pair.mu_a() * om.powf(1.0 / p) * on.powf(1.0 / q),
        OperatorKind::W => pair.mu_b() * on.powf(1.0 / p) * om.powf(1.0 / q),
    }
}

fn ratio(matrix: &CMatrix, y: &[Complex64], p: f64) -> f64 {
    norm_of_slice(&matrix.mul_vec(y), p) / norm_of_slice(y, p)
}

/// `‖op·y‖_p / ‖y‖_p`, a certified lower bound on `‖op‖_{p→p}`.
pub fn witness_lower_bound(op: &ProjectedOperator, y: &CoefficientVector) -> Result<f64> {
    if y.len() != op.matrix.cols() {
        return Err(Error::DimensionMismatch { expected: op.matrix.cols(), got: y.len() });
    }
    if y.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(ratio(&op.matrix, y.as_slice(), op.p()))
}

/// Result of [`estimate_p_operator_norm`]: the best ratio found and the vector attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub maximizer: CoefficientVector,
}

/// Duality map of ℓ^r: the unit ℓ^{r'} vector `u` with `⟨u, v⟩ = ‖v‖_r`.
fn dual(v: &[Complex64], r: f64) -> Vec<Complex64> {
    let norm = norm_of_slice(v, r);
    let scale = abs_pow(Complex64::new(norm, 0.0), r - 1.0);
    v.iter()
        .map(|&z| {
            let m = z.norm();
            if m == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (z / m) * (abs_pow(z, r - 1.0) / scale)
            }
        })
        .collect()
}

/// One run of the nonlinear power method `x ← dual_q(Aᴴ dual_p(A x))`.
fn power_run(a: &CMatrix, start: Vec<Complex64>, p: f64, q: f64, iters: usize) -> (f64, Vec<Complex64>) {
    let mut x = start;
    let mut best = (ratio(a, &x, p), x.clone());
    let mut last = best.0;
    for _ in 0..iters {
        let y = a.mul_vec(&x);
        if norm_of_slice(&y, p) == 0.0 {
            break;
        }
        let z = a.adjoint_mul_vec(&dual(&y, p));
        let zx: f64 = z.iter().zip(&x).map(|(zi, xi)| (zi.conj() * xi).re).sum();
        let stationary = norm_of_slice(&z, q) <= zx * (1.0 + 1e-15);
        if norm_of_slice(&z, q) == 0.0 {
            break;
        }
        x = dual(&z, q);
        let value = ratio(a, &x, p);
        if value > best.0 {
            best = (value, x.clone());
        }
        if stationary || (value - last).abs() <= CONVERGENCE_RTOL * value.abs() {
            break;
        }
        last = value;
    }
    best
}

/// Estimates `‖op‖_{p→p}` from below by the nonlinear power method with
/// `restarts` starting points. Restart 0 starts from the coordinate vector of
/// the heaviest column; the others from seeded complex Gaussian vectors.
///
/// For `p = 2` this is the power method on `AᴴA` and converges to the
/// largest singular value; for other `p` it is a local-ascent heuristic and
/// only the lower-bound property is guaranteed.
pub fn estimate_p_operator_norm(op: &ProjectedOperator, restarts: usize, iters: usize, seed: u64) -> NormEstimate {
    let a = &op.matrix;
    let n = a.cols();
    let (p, q) = (op.holder.p(), op.holder.q());
    let restarts = restarts.max(1);
    let heaviest = (0..n)
        .map(|k| (k, norm_of_slice(&(0..a.rows()).map(|j| a[(j, k)]).collect::<Vec<_>>(), p)))
        .fold((0, -1.0), |acc, c| if c.1 > acc.1 { c } else { acc })
        .0;
    let best = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let start = if r == 0 {
                let mut e = vec![Complex64::new(0.0, 0.0); n];
                e[heaviest] = Complex64::new(1.0, 0.0);
                e
            } else {
                let mut rng = stream_rng(seed, r as u64);
                loop {
                    let v = complex_normal(&mut rng, n);
                    if norm_of_slice(&v, p) > 0.0 {
                        let s = norm_of_slice(&v, p);
                        break v.into_iter().map(|z| z / s).collect();
                    }
                }
            };
            let (value, x) = power_run(a, start, p, q, iters.max(1));
            (r, value, x)
        })
        .reduce_with(|l, r| if r.1 > l.1 || (r.1 == l.1 && r.0 < l.0) { r } else { l })
        .expect("at least one restart");
    NormEstimate { value: best.1, maximizer: CoefficientVector::new(best.2).expect("power iterate is finite") }
}

/// `max{1 − ε − δ, 0}`.
pub fn clamped_level(eps: f64, delta: f64) -> f64 {
    (1.0 - eps - delta).max(0.0)
}

/// Right-hand sides `(max{1−ε−δ,0}/max|A|, max{1−ε−δ,0}/max|B|)`.
pub fn rhs_bounds(pair: &BasisPair, eps: f64, delta: f64) -> Result<(f64, f64)> {
    check_level("eps", eps)?;
    check_level("delta", delta)?;
    let level = clamped_level(eps, delta);
    Ok((level / pair.mu_a(), level / pair.mu_b()))
}

/// Checks both inequalities for `x` using greedy minimal ε- and δ-supports.
/// Pairs whose isometry was not verified still get a report, with
/// `hypothesis_met = false`.
pub fn verify_uncertainty(pair: &BasisPair, x: &VectorInX, eps: f64, delta: f64) -> Result<VerificationReport> {
    check_level("eps", eps)?;
    check_level("delta", delta)?;
    if x.f_coords.is_zero() {
        return Err(Error::ZeroVector);
    }
    let p = pair.p();
    let q = pair.q();
    let a = &x.f_coords;
    let b = analysis_in_g(pair, x)?;
    let m = minimal_support(a, eps, p)?;
    let n = minimal_support(&b, delta, p)?;
    let om = m.cardinality() as f64;
    let on = n.cardinality() as f64;
    let lhs_me = om.powf(1.0 / p) * on.powf(1.0 / q);
    let lhs_me2 = om.powf(1.0 / q) * on.powf(1.0 / p);
    let (rhs_me, rhs_me2) = rhs_bounds(pair, eps, delta)?;
    let slack_me = lhs_me - rhs_me;
    let slack_me2 = lhs_me2 - rhs_me2;
    Ok(VerificationReport {
        eps,
        delta,
        support_rule: SUPPORT_RULE.to_string(),
        m_support: m,
        n_support: n,
        lhs_me,
        rhs_me,
        lhs_me2,
        rhs_me2,
        slack_me,
        slack_me2,
        holds: slack_me >= -HOLDS_TOLERANCE && slack_me2 >= -HOLDS_TOLERANCE,
        hypothesis_met: pair.is_verified(),
    })
}

/// Hilbert-space form: `o(M)·o(N) ≥ max{1−ε−δ,0}² / max|A|²`. For the
/// Fourier pair this is `n·(1−ε−δ)²`.
pub fn hilbert_corollary_bound(pair: &BasisPair, eps: f64, delta: f64) -> Result<f64> {
    if !pair.holder().is_hilbert() {
        return Err(Error::WrongExponent(pair.p()));
    }
    check_level("eps", eps)?;
    check_level("delta", delta)?;
    let level = clamped_level(eps, delta);
    Ok(level * level / (pair.mu_a() * pair.mu_a()))
}
