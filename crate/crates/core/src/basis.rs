//! Pairs of p-orthonormal bases, represented by their transition matrix.
//!
//! With bases `({f_j}, {τ_j})` and `({g_k}, {ω_k})` of the same space, the
//! transition matrix is `A[j][k] = f_j(ω_k)` and its inverse is
//! `B[k][j] = g_k(τ_j)`. A vector `x` is stored through its f-coordinates
//! `a = θ_f x`; its g-coordinates are `θ_g x = B a`.
//!
//! Both analysis maps are isometries onto ℓ^p exactly when `A` preserves the
//! p-norm. That is checked numerically and recorded as an [`IsometryStatus`];
//! pairs that fail the check are kept and labelled rather than refused.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::matrix::CMatrix;
use crate::pnorm::{norm_of_slice, CoefficientVector, HolderPair};
use crate::{Error, Result};

/// Relative norm error above which a pair is not treated as an isometry.
pub const ISOMETRY_TOLERANCE: f64 = 1e-9;
/// Random trials used when a constructor or loader checks the isometry.
pub const DEFAULT_ISOMETRY_TRIALS: usize = 100;
pub const DEFAULT_ISOMETRY_SEED: u64 = 0;
const PHASE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsometryStatus {
    Verified,
    Assumed,
    Failed,
}

/// Outcome of a numerical isometry check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsometryCheck {
    pub status: IsometryStatus,
    pub max_relative_error: f64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisPair {
    holder: HolderPair,
    a: CMatrix,
    b: CMatrix,
    mu_a: f64,
    mu_b: f64,
    isometry: IsometryCheck,
}

/// Draws a vector with independent standard normal real and imaginary parts.
pub(crate) fn complex_normal(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect()
}

/// A generator for stream `stream` of `seed`; streams are independent, so
/// trials can be evaluated in any order.
pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl BasisPair {
    fn assemble(holder: HolderPair, a: CMatrix, b: CMatrix, isometry: Option<IsometryCheck>) -> Self {
        let mu_a = a.max_abs();
        let mu_b = b.max_abs();
        let placeholder =
            IsometryCheck { status: IsometryStatus::Assumed, max_relative_error: f64::NAN, trials: 0, seed: 0 };
        let mut pair = Self { holder, a, b, mu_a, mu_b, isometry: isometry.unwrap_or(placeholder) };
        if isometry.is_none() {
            pair.isometry = verify_isometry(&pair, DEFAULT_ISOMETRY_TRIALS, DEFAULT_ISOMETRY_SEED);
        }
        pair
    }

    fn check_dimension(a: &CMatrix) -> Result<()> {
        if a.rows() == 0 {
            return Err(Error::domain("dimension n must be at least 1"));
        }
        if !a.is_square() {
            return Err(Error::DimensionMismatch { expected: a.rows(), got: a.cols() });
        }
        Ok(())
    }

    /// Builds a pair from an arbitrary transition matrix. `B` is the LU
    /// inverse; the isometry status comes from [`verify_isometry`] with the
    /// default trials and seed.
    pub fn from_transition(a: CMatrix, p: f64) -> Result<Self> {
        let holder = HolderPair::new(p)?;
        Self::check_dimension(&a)?;
        let (b, _) = a.inverse()?;
        Ok(Self::assemble(holder, a, b, None))
    }

    /// Like [`BasisPair::from_transition`], but skips the isometry check and
    /// records the status as `assumed`.
    pub fn from_transition_unverified(a: CMatrix, p: f64) -> Result<Self> {
        let holder = HolderPair::new(p)?;
        Self::check_dimension(&a)?;
        let (b, _) = a.inverse()?;
        let check = IsometryCheck { status: IsometryStatus::Assumed, max_relative_error: f64::NAN, trials: 0, seed: 0 };
        Ok(Self::assemble(holder, a, b, Some(check)))
    }

    /// The same transition matrix read in a different ℓ^p; the isometry is re-checked.
    pub fn with_exponent(&self, p: f64) -> Result<Self> {
        let holder = HolderPair::new(p)?;
        Ok(Self::assemble(holder, self.a.clone(), self.b.clone(), None))
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn holder(&self) -> HolderPair {
        self.holder
    }

    pub fn p(&self) -> f64 {
        self.holder.p()
    }

    pub fn q(&self) -> f64 {
        self.holder.q()
    }

    /// `A[j][k] = f_j(ω_k)`.
    pub fn transition(&self) -> &CMatrix {
        &self.a
    }

    /// `B[k][j] = g_k(τ_j)`.
    pub fn inverse_transition(&self) -> &CMatrix {
        &self.b
    }

    pub fn mu_a(&self) -> f64 {
        self.mu_a
    }

    pub fn mu_b(&self) -> f64 {
        self.mu_b
    }

    pub fn isometry(&self) -> IsometryCheck {
        self.isometry
    }

    pub fn is_verified(&self) -> bool {
        self.isometry.status == IsometryStatus::Verified
    }

    /// `max(max|AB − I|, max|BA − I|)`.
    pub fn inverse_residual(&self) -> f64 {
        let ab = self.a.matmul(&self.b).max_deviation_from_identity();
        let ba = self.b.matmul(&self.a).max_deviation_from_identity();
        ab.max(ba)
    }

    /// The document read by [`load_pair`].
    pub fn to_matrix_file(&self) -> MatrixFile {
        MatrixFile {
            schema_version: Some("1".to_string()),
            n: self.n(),
            p: self.p(),
            a: self.a.to_rows().into_iter().map(|r| r.into_iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }
}

/// Standard basis against the Fourier basis: `A[j][k] = n^(-1/2) e^{-2πi jk/n}`
/// (zero-based `j, k`), `B = Aᴴ`, `p = 2`.
pub fn make_fourier_pair(n: usize) -> Result<BasisPair> {
    if n == 0 {
        return Err(Error::domain("dimension n must be at least 1"));
    }
    let scale = 1.0 / (n as f64).sqrt();
    // Reduce jk mod n before scaling so large products keep full angle precision.
    let a = CMatrix::from_fn(n, n, |j, k| {
        let angle = -2.0 * PI * ((j * k) % n) as f64 / n as f64;
        Complex64::from_polar(scale, angle)
    });
    let b = a.conj_transpose();
    Ok(BasisPair::assemble(HolderPair::new(2.0)?, a, b, None))
}

/// A phase-weighted permutation: `A[perm(k)][k] = phases[k]`, all else zero.
/// These are the invertible isometries of ℓ^p for `p ≠ 2`. `perm` is 1-based.
pub fn make_generalized_permutation_pair(p: f64, perm: &[usize], phases: &[Complex64]) -> Result<BasisPair> {
    let holder = HolderPair::new(p)?;
    let n = perm.len();
    if n == 0 {
        return Err(Error::domain("dimension n must be at least 1"));
    }
    if phases.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: phases.len() });
    }
    let mut seen = vec![false; n];
    for &target in perm {
        if target == 0 || target > n {
            return Err(Error::InvalidPermutation(format!("image {target} not in 1..={n}")));
        }
        if std::mem::replace(&mut seen[target - 1], true) {
            return Err(Error::InvalidPermutation(format!("image {target} repeated")));
        }
    }
    for (k, z) in phases.iter().enumerate() {
        let modulus = z.norm();
        if !modulus.is_finite() || (modulus - 1.0).abs() > PHASE_TOLERANCE {
            return Err(Error::NonUnimodularPhase { index: k + 1, modulus });
        }
    }
    let mut a = CMatrix::zeros(n, n);
    for k in 0..n {
        a[(perm[k] - 1, k)] = phases[k];
    }
    // Same inverse routine as the file loader, so a genperm pair and its
    // exported-then-loaded copy agree bit for bit.
    let (b, _) = a.inverse()?;
    Ok(BasisPair::assemble(holder, a, b, None))
}

/// A Haar-like random unitary pair (`p = 2`): Gram-Schmidt on a complex Gaussian matrix.
pub fn make_random_unitary_pair(n: usize, seed: u64) -> Result<BasisPair> {
    if n == 0 {
        return Err(Error::domain("dimension n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = complex_normal(&mut rng, n);
        // Two passes of modified Gram-Schmidt.
        for _ in 0..2 {
            for c in &cols {
                let proj: Complex64 = c.iter().zip(&v).map(|(ci, vi)| ci.conj() * vi).sum();
                for (vi, ci) in v.iter_mut().zip(c) {
                    *vi -= proj * ci;
                }
            }
        }
        let norm = norm_of_slice(&v, 2.0);
        if norm < 1e-8 {
            continue;
        }
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    let a = CMatrix::from_fn(n, n, |j, k| cols[k][j]);
    let b = a.conj_transpose();
    Ok(BasisPair::assemble(HolderPair::new(2.0)?, a, b, None))
}

/// On-disk transition matrix: `{"n": …, "p": …, "A": [[[re, im], …], …]}`,
/// row-major with row index `j` and column index `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    /// Written as "1" on export; optional on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<String>,
    pub n: usize,
    pub p: f64,
    #[serde(rename = "A")]
    pub a: Vec<Vec<[f64; 2]>>,
}

/// On-disk generalized permutation: `perm` is 1-based, `phases` are `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenPermFile {
    pub n: usize,
    pub p: f64,
    pub perm: Vec<usize>,
    pub phases: Vec<[f64; 2]>,
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix file serializes")
    }

    /// Checks shape against `n` and builds the matrix.
    pub fn to_matrix(&self) -> Result<CMatrix> {
        let rows: Vec<Vec<Complex64>> =
            self.a.iter().map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
        let m = CMatrix::from_rows(rows)?;
        if m.rows() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: m.rows() });
        }
        if m.cols() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: m.cols() });
        }
        Ok(m)
    }
}

/// Parses a matrix document. `p` overrides the document's own exponent when given.
pub fn parse_pair(text: &str, p: Option<f64>) -> Result<BasisPair> {
    let file = MatrixFile::parse(text)?;
    let a = file.to_matrix()?;
    BasisPair::from_transition(a, p.unwrap_or(file.p))
}

/// Loads a pair from a matrix file; `B` is the numerical inverse and the
/// isometry status is checked with the default trials.
pub fn load_pair(path: impl AsRef<Path>, p: Option<f64>) -> Result<BasisPair> {
    parse_pair(&read_text(path.as_ref())?, p)
}

impl GenPermFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self, p: Option<f64>) -> Result<BasisPair> {
        if self.perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: self.perm.len() });
        }
        let phases: Vec<Complex64> = self.phases.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        make_generalized_permutation_pair(p.unwrap_or(self.p), &self.perm, &phases)
    }
}

pub fn load_generalized_permutation(path: impl AsRef<Path>, p: Option<f64>) -> Result<BasisPair> {
    GenPermFile::parse(&read_text(path.as_ref())?)?.build(p)
}

/// Checks `‖Az‖_p = ‖z‖_p` on `trials` complex Gaussian vectors and on every
/// coordinate vector `e_k`.
pub fn verify_isometry(pair: &BasisPair, trials: usize, seed: u64) -> IsometryCheck {
    let n = pair.n();
    let p = pair.p();
    let a = &pair.a;
    let rel_error = |z: &[Complex64]| {
        let nz = norm_of_slice(z, p);
        if nz == 0.0 {
            return 0.0;
        }
        (norm_of_slice(&a.mul_vec(z), p) - nz).abs() / nz
    };
    let random = (0..trials as u64)
        .into_par_iter()
        .map(|t| rel_error(&complex_normal(&mut stream_rng(seed, t), n)))
        .reduce(|| 0.0, f64::max);
    let coordinate = (0..n)
        .into_par_iter()
        .map(|k| {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[k] = Complex64::new(1.0, 0.0);
            rel_error(&e)
        })
        .reduce(|| 0.0, f64::max);
    let max_relative_error = random.max(coordinate);
    let status =
        if max_relative_error <= ISOMETRY_TOLERANCE { IsometryStatus::Verified } else { IsometryStatus::Failed };
    IsometryCheck { status, max_relative_error, trials, seed }
}

/// `(max|A|, max|B|)`.
pub fn coherence(pair: &BasisPair) -> (f64, f64) {
    (pair.mu_a, pair.mu_b)
}

/// A vector of the underlying space, held through its f-coordinates `θ_f x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorInX {
    pub f_coords: CoefficientVector,
}

impl VectorInX {
    pub fn new(f_coords: CoefficientVector) -> Self {
        Self { f_coords }
    }

    /// The vector whose g-coordinates are `g_coords`: `θ_f x = A θ_g x`.
    pub fn from_g_coords(pair: &BasisPair, g_coords: &CoefficientVector) -> Result<Self> {
        if g_coords.len() != pair.n() {
            return Err(Error::DimensionMismatch { expected: pair.n(), got: g_coords.len() });
        }
        Ok(Self { f_coords: CoefficientVector::new(pair.a.mul_vec(g_coords.as_slice()))? })
    }

    pub fn len(&self) -> usize {
        self.f_coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f_coords.is_empty()
    }
}

/// `θ_g x = B θ_f x`.
pub fn analysis_in_g(pair: &BasisPair, x: &VectorInX) -> Result<CoefficientVector> {
    if x.len() != pair.n() {
        return Err(Error::DimensionMismatch { expected: pair.n(), got: x.len() });
    }
    CoefficientVector::new(pair.b.mul_vec(x.f_coords.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pnorm::p_norm;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn identity_pair(n: usize, p: f64) -> BasisPair {
        make_generalized_permutation_pair(p, &(1..=n).collect::<Vec<_>>(), &vec![c(1.0, 0.0); n]).unwrap()
    }

    #[test]
    fn fourier_examples() {
        let one = make_fourier_pair(1).unwrap();
        assert_eq!(one.transition()[(0, 0)], c(1.0, 0.0));
        assert_eq!(one.mu_a(), 1.0);

        let four = make_fourier_pair(4).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                assert!((four.transition()[(j, k)].norm() - 0.5).abs() < 1e-15);
            }
        }
        assert!((four.mu_a() - 0.5).abs() < 1e-15);
        // Forward kernel sign: A[1][1] = e^{-2πi/4}/2 = -i/2.
        assert!((four.transition()[(1, 1)] - c(0.0, -0.5)).norm() < 1e-15);

        let sixteen = make_fourier_pair(16).unwrap();
        assert!((sixteen.mu_a() - 0.25).abs() < 1e-15);
        assert_eq!(sixteen.mu_a(), sixteen.mu_b());
        assert!(sixteen.is_verified());
        assert!(make_fourier_pair(0).is_err());
    }

    #[test]
    fn generalized_permutation_examples() {
        let id = identity_pair(3, 2.0);
        assert_eq!(id.transition(), &CMatrix::identity(3));

        let swap = make_generalized_permutation_pair(2.0, &[2, 1], &[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let expected =
            CMatrix::from_rows(vec![vec![c(0.0, 0.0), c(0.0, 1.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert_eq!(swap.transition(), &expected);
        assert_eq!(swap.mu_a(), 1.0);
        assert_eq!(coherence(&swap), (1.0, 1.0));

        let phases: Vec<Complex64> = (0..4).map(|k| Complex64::from_polar(1.0, 0.7 * k as f64)).collect();
        let pair = make_generalized_permutation_pair(3.0, &[3, 1, 4, 2], &phases).unwrap();
        assert!(pair.is_verified());
        assert!(pair.inverse_residual() <= 1e-10);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let z = CoefficientVector::new(complex_normal(&mut rng, 4)).unwrap();
        let az = CoefficientVector::new(pair.transition().mul_vec(z.as_slice())).unwrap();
        let (l, r) = (p_norm(&az, 3.0).unwrap(), p_norm(&z, 3.0).unwrap());
        assert!((l - r).abs() <= 1e-12 * r);
    }

    #[test]
    fn generalized_permutation_errors() {
        let ones = vec![c(1.0, 0.0); 3];
        assert!(matches!(make_generalized_permutation_pair(2.0, &[1, 1, 2], &ones), Err(Error::InvalidPermutation(_))));
        assert!(matches!(make_generalized_permutation_pair(2.0, &[1, 2, 4], &ones), Err(Error::InvalidPermutation(_))));
        assert!(matches!(make_generalized_permutation_pair(2.0, &[0, 1, 2], &ones), Err(Error::InvalidPermutation(_))));
        let bad = vec![c(1.0, 0.0), c(1.1, 0.0), c(1.0, 0.0)];
        assert!(matches!(
            make_generalized_permutation_pair(2.0, &[1, 2, 3], &bad),
            Err(Error::NonUnimodularPhase { index: 2, .. })
        ));
        assert!(matches!(make_generalized_permutation_pair(1.0, &[1, 2, 3], &ones), Err(Error::Domain(_))));
    }

    #[test]
    fn isometry_checks() {
        let id = identity_pair(5, 1.5);
        let check = verify_isometry(&id, 10, 1);
        assert_eq!(check.status, IsometryStatus::Verified);
        assert_eq!(check.max_relative_error, 0.0);

        let dft = make_fourier_pair(8).unwrap();
        assert_eq!(verify_isometry(&dft, 100, 0).status, IsometryStatus::Verified);
        let dft3 = dft.with_exponent(3.0).unwrap();
        assert_eq!(dft3.isometry().status, IsometryStatus::Failed);
        // Witness: e_1 maps to a flat vector with ℓ³ norm 8^{-1/6}.
        let e1 = CoefficientVector::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let image = CoefficientVector::new(dft3.transition().mul_vec(e1.as_slice())).unwrap();
        assert!((p_norm(&image, 3.0).unwrap() - 8f64.powf(-1.0 / 6.0)).abs() < 1e-12);

        let same = verify_isometry(&dft3, 20, 9);
        assert_eq!(same, verify_isometry(&dft3, 20, 9));
    }

    #[test]
    fn random_unitary_is_isometry() {
        for n in [1, 2, 5, 9] {
            let pair = make_random_unitary_pair(n, 11).unwrap();
            assert!(pair.is_verified(), "n = {n}");
            assert!(pair.inverse_residual() <= 1e-10);
            assert!(pair.mu_a() >= 1.0 / (n as f64).sqrt() - 1e-12 && pair.mu_a() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn analysis_examples() {
        let id = identity_pair(3, 2.0);
        let x = VectorInX::new(CoefficientVector::from_real(&[1.0, -2.0, 3.0]).unwrap());
        assert_eq!(analysis_in_g(&id, &x).unwrap(), x.f_coords);

        let dft = make_fourier_pair(4).unwrap();
        let e1 = VectorInX::new(CoefficientVector::from_real(&[1.0, 0.0, 0.0, 0.0]).unwrap());
        for z in analysis_in_g(&dft, &e1).unwrap().as_slice() {
            assert!((z - c(0.5, 0.0)).norm() < 1e-15);
        }
        let s = 0.5f64.sqrt();
        let comb = VectorInX::new(CoefficientVector::from_real(&[s, 0.0, s, 0.0]).unwrap());
        let b = analysis_in_g(&dft, &comb).unwrap();
        let expected = [s, 0.0, s, 0.0];
        for (z, e) in b.as_slice().iter().zip(expected) {
            assert!((z - c(e, 0.0)).norm() < 1e-15);
        }
        let short = VectorInX::new(CoefficientVector::from_real(&[1.0]).unwrap());
        assert!(matches!(analysis_in_g(&dft, &short), Err(Error::DimensionMismatch { .. })));
        let back = VectorInX::from_g_coords(&dft, &b).unwrap();
        for (z, w) in back.f_coords.as_slice().iter().zip(comb.f_coords.as_slice()) {
            assert!((z - w).norm() < 1e-15);
        }
    }

    #[test]
    fn matrix_file_parsing() {
        let identity = r#"{"n": 3, "p": 2, "A": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]}"#;
        let pair = parse_pair(identity, None).unwrap();
        assert_eq!(pair.mu_a(), 1.0);
        assert!(pair.is_verified());

        let shear = r#"{"n": 2, "p": 2, "A": [[[1,0],[1,0]],[[0,0],[1,0]]]}"#;
        let pair = parse_pair(shear, None).unwrap();
        assert_eq!(pair.isometry().status, IsometryStatus::Failed);

        let ragged = r#"{"n": 2, "p": 2, "A": [[[1,0],[1,0]],[[0,0]]]}"#;
        assert!(matches!(parse_pair(ragged, None), Err(Error::Parse(_))));
        let wrong_n = r#"{"n": 3, "p": 2, "A": [[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
        assert!(matches!(parse_pair(wrong_n, None), Err(Error::DimensionMismatch { .. })));
        let singular = r#"{"n": 2, "p": 2, "A": [[[1,0],[2,0]],[[2,0],[4,0]]]}"#;
        assert!(matches!(parse_pair(singular, None), Err(Error::Singular { .. })));
        assert!(matches!(parse_pair("{not json", None), Err(Error::Parse(_))));
        assert!(matches!(parse_pair(r#"{"n":1,"p":2,"A":[[[1]]]}"#, None), Err(Error::Parse(_))));
    }

    #[test]
    fn unverified_pairs_are_assumed() {
        let pair = BasisPair::from_transition_unverified(CMatrix::identity(2), 3.0).unwrap();
        assert_eq!(pair.isometry().status, IsometryStatus::Assumed);
        assert!(!pair.is_verified());
    }
}
