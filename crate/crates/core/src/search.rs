//! Tightness witnesses: vectors whose supports leave little or no slack.

use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{complex_normal, make_fourier_pair, stream_rng, BasisPair, VectorInX};
use crate::bounds::{verify_uncertainty, VerificationReport};
use crate::pnorm::CoefficientVector;
use crate::support::check_level;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x: VectorInX,
    pub eps: f64,
    pub delta: f64,
    pub report: VerificationReport,
}

/// The Dirac comb `1_{1, 1+m, 1+2m, …}/√m` in dimension `n = m²`, checked
/// against the Fourier pair at `ε = δ = 0`. Its transform is again a comb
/// with `m` teeth, so both inequalities hold with equality.
pub fn picket_fence(m: usize) -> Result<Witness> {
    if m == 0 {
        return Err(Error::domain("picket fence needs m >= 1"));
    }
    let n = m.checked_mul(m).ok_or_else(|| Error::domain("m too large"))?;
    let pair = make_fourier_pair(n)?;
    let height = 1.0 / (m as f64).sqrt();
    let coords =
        (0..n).map(|j| if j % m == 0 { Complex64::new(height, 0.0) } else { Complex64::new(0.0, 0.0) }).collect();
    let x = VectorInX::new(CoefficientVector::new(coords)?);
    let report = verify_uncertainty(&pair, &x, 0.0, 0.0)?;
    Ok(Witness { x, eps: 0.0, delta: 0.0, report })
}

/// Candidate `t` of the search. Dense complex Gaussian, sparse with ±1
/// entries, sparse with unimodular entries, and flat combs (every `d`-th
/// index from a random offset, `d | n`) take turns.
fn candidate(n: usize, seed: u64, t: usize) -> Vec<Complex64> {
    let mut rng = stream_rng(seed, t as u64);
    let zero = Complex64::new(0.0, 0.0);
    match t % 4 {
        0 => loop {
            let v = complex_normal(&mut rng, n);
            if v.iter().any(|z| z.norm() > 0.0) {
                break v;
            }
        },
        1 | 2 => {
            let size = rng.random_range(1..=n);
            let mut v = vec![zero; n];
            for j in sample(&mut rng, n, size) {
                v[j] = if t % 4 == 1 {
                    Complex64::new(if rng.random_bool(0.5) { 1.0 } else { -1.0 }, 0.0)
                } else {
                    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
                };
            }
            v
        }
        _ => {
            let divisors: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
            let spacing = divisors[rng.random_range(0..divisors.len())];
            let offset = rng.random_range(0..spacing);
            (0..n).map(|j| if j % spacing == offset { Complex64::new(1.0, 0.0) } else { zero }).collect()
        }
    }
}

/// Seeded random search for the vector with the smallest slack in the first
/// inequality. Ties go to the earliest trial. Deterministic in `(trials, seed)`.
pub fn random_tightness_search(pair: &BasisPair, eps: f64, delta: f64, trials: usize, seed: u64) -> Result<Witness> {
    check_level("eps", eps)?;
    check_level("delta", delta)?;
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let n = pair.n();
    let reports: Vec<(usize, VectorInX, VerificationReport)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let x = VectorInX::new(CoefficientVector::new(candidate(n, seed, t))?);
            let report = verify_uncertainty(pair, &x, eps, delta)?;
            Ok((t, x, report))
        })
        .collect::<Result<_>>()?;
    let (_, x, report) = reports
        .into_iter()
        .reduce(|best, next| if next.2.slack_me < best.2.slack_me { next } else { best })
        .expect("trials >= 1");
    Ok(Witness { x, eps, delta, report })
}

/// One report per `(ε, δ)` grid point.
pub fn slack_landscape(pair: &BasisPair, x: &VectorInX, grid: &[(f64, f64)]) -> Result<Vec<VerificationReport>> {
    grid.iter().map(|&(eps, delta)| verify_uncertainty(pair, x, eps, delta)).collect()
}
