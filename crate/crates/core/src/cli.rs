//! Command-line surface. [`Args`] is the clap front end, [`RunConfig`] the
//! validated configuration, and [`run`] produces the output document.
//!
//! JSON documents have the shape
//! `{"schema_version": "1", "command": …, "config": {…}, "result": {…}}`;
//! complex numbers are `[re, im]` and index sets are 1-based. CSV output is a
//! flat projection with one row per report (or per grid point).

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{
    analysis_in_g, complex_normal, load_generalized_permutation, load_pair, make_fourier_pair, BasisPair,
    IsometryStatus, VectorInX,
};
use crate::bounds::{
    build_projected_operator, estimate_p_operator_norm, operator_norm_upper, verify_uncertainty, witness_lower_bound,
    OperatorKind, VerificationReport, DEFAULT_ITERS, DEFAULT_RESTARTS,
};
use crate::pnorm::CoefficientVector;
use crate::search::{picket_fence, random_tightness_search, slack_landscape, Witness};
use crate::support::{check_level, minimal_support};
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

/// Exit status when the pair failed its isometry check.
pub const EXIT_HYPOTHESIS_NOT_MET: i32 = 2;
pub const EXIT_ERROR: i32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Coherences and isometry check of a pair.
    Coherence,
    /// Check both inequalities for one vector.
    Verify,
    /// Minimal support sizes along an ε grid.
    Support,
    /// Random search for a small-slack witness.
    Search,
    /// Dirac comb in dimension m² against the Fourier pair.
    Picket,
    /// One report per (ε, δ) grid point.
    Landscape,
    /// Write the pair's transition matrix in the matrix file format.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairSource {
    Fourier(usize),
    GenPerm(PathBuf),
    Load(PathBuf),
}

impl FromStr for PairSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| {
            Error::Parse(format!("pair source '{s}' must be fourier:<n>, genperm:<file> or load:<file>"))
        })?;
        match kind {
            "fourier" => arg
                .parse()
                .map(PairSource::Fourier)
                .map_err(|_| Error::Parse(format!("fourier dimension '{arg}' is not a positive integer"))),
            "genperm" => Ok(PairSource::GenPerm(arg.into())),
            "load" => Ok(PairSource::Load(arg.into())),
            _ => Err(Error::Parse(format!("unknown pair source kind '{kind}'"))),
        }
    }
}

impl fmt::Display for PairSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSource::Fourier(n) => write!(f, "fourier:{n}"),
            PairSource::GenPerm(p) => write!(f, "genperm:{}", p.display()),
            PairSource::Load(p) => write!(f, "load:{}", p.display()),
        }
    }
}

/// `e1,e2,…[:d1,d2,…]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub eps: Vec<f64>,
    pub delta: Option<Vec<f64>>,
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn list(part: &str) -> Result<Vec<f64>> {
            part.split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("grid value '{t}' is not a number"))))
                .collect()
        }
        match s.split_once(':') {
            Some((e, d)) => Ok(Grid { eps: list(e)?, delta: Some(list(d)?) }),
            None => Ok(Grid { eps: list(s)?, delta: None }),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[f64]| v.iter().map(f64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}", join(&self.eps))?;
        if let Some(d) = &self.delta {
            write!(f, ":{}", join(d))?;
        }
        Ok(())
    }
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(
    name = "uncertainty",
    version,
    about = "Approximate-support uncertainty experiments for p-orthonormal basis pairs"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// fourier:<n> | genperm:<file> | load:<file>
    #[arg(long)]
    pub pair: Option<String>,
    /// Exponent; overrides the pair's own when given.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// e1,e2,…:d1,d2,…
    #[arg(long)]
    pub grid: Option<String>,
    /// Comb spacing for `picket` (dimension m²).
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// JSON array of [re, im] f-coordinates; a seeded random vector otherwise.
    #[arg(long)]
    pub x: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub pair_source: Option<PairSource>,
    pub p: Option<f64>,
    pub eps: f64,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    pub grid: Option<Grid>,
    pub m: usize,
    pub x: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            pair_source: None,
            p: None,
            eps: 0.0,
            delta: 0.0,
            trials: 100,
            seed: 0,
            grid: None,
            m: 2,
            x: None,
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }

    fn echo(&self) -> Value {
        json!({
            "pair": self.pair_source.as_ref().map(ToString::to_string),
            "p": self.p,
            "eps": self.eps,
            "delta": self.delta,
            "trials": self.trials,
            "seed": self.seed,
            "grid": self.grid.as_ref().map(ToString::to_string),
            "m": self.m,
            "x": self.x.as_ref().map(|p| p.display().to_string()),
            "format": self.output_format,
        })
    }
}

impl TryFrom<Args> for RunConfig {
    type Error = Error;

    fn try_from(a: Args) -> Result<Self> {
        Ok(Self {
            command: a.command,
            pair_source: a.pair.as_deref().map(str::parse).transpose()?,
            p: a.p,
            eps: a.eps,
            delta: a.delta,
            trials: a.trials,
            seed: a.seed,
            grid: a.grid.as_deref().map(str::parse).transpose()?,
            m: a.m,
            x: a.x,
            output_format: a.format,
            output_path: a.out,
        })
    }
}

/// The emitted document and the process exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub document: String,
    pub exit_code: i32,
    /// Set when the pair is not a verified isometry.
    pub warning: Option<String>,
}

fn build_pair(config: &RunConfig) -> Result<BasisPair> {
    let source = config.pair_source.as_ref().ok_or_else(|| Error::domain("this command needs --pair"))?;
    match source {
        PairSource::Fourier(n) => {
            let pair = make_fourier_pair(*n)?;
            match config.p {
                Some(p) if p != pair.p() => pair.with_exponent(p),
                _ => Ok(pair),
            }
        }
        PairSource::GenPerm(path) => load_generalized_permutation(path, config.p),
        PairSource::Load(path) => load_pair(path, config.p),
    }
}

fn read_vector(path: &Path) -> Result<CoefficientVector> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn vector_for(config: &RunConfig, pair: &BasisPair) -> Result<VectorInX> {
    let coords = match &config.x {
        Some(path) => read_vector(path)?,
        None => CoefficientVector::new(complex_normal(&mut ChaCha8Rng::seed_from_u64(config.seed), pair.n()))?,
    };
    if coords.len() != pair.n() {
        return Err(Error::DimensionMismatch { expected: pair.n(), got: coords.len() });
    }
    Ok(VectorInX::new(coords))
}

fn pair_summary(pair: &BasisPair) -> Value {
    json!({
        "n": pair.n(),
        "p": pair.p(),
        "q": pair.q(),
        "mu_A": pair.mu_a(),
        "mu_B": pair.mu_b(),
        "isometry": pair.isometry(),
    })
}

fn report_row(r: &VerificationReport) -> ReportRow {
    let join = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    ReportRow {
        eps: r.eps,
        delta: r.delta,
        o_m: r.m_support.cardinality(),
        o_n: r.n_support.cardinality(),
        m: join(r.m_support.one_based()),
        n: join(r.n_support.one_based()),
        lhs_me: r.lhs_me,
        rhs_me: r.rhs_me,
        lhs_me2: r.lhs_me2,
        rhs_me2: r.rhs_me2,
        slack_me: r.slack_me,
        slack_me2: r.slack_me2,
        holds: r.holds,
        hypothesis_met: r.hypothesis_met,
    }
}

#[derive(Serialize)]
struct ReportRow {
    eps: f64,
    delta: f64,
    #[serde(rename = "o_M")]
    o_m: usize,
    #[serde(rename = "o_N")]
    o_n: usize,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "N")]
    n: String,
    #[serde(rename = "lhs_ME")]
    lhs_me: f64,
    #[serde(rename = "rhs_ME")]
    rhs_me: f64,
    #[serde(rename = "lhs_ME2")]
    lhs_me2: f64,
    #[serde(rename = "rhs_ME2")]
    rhs_me2: f64,
    #[serde(rename = "slack_ME")]
    slack_me: f64,
    #[serde(rename = "slack_ME2")]
    slack_me2: f64,
    holds: bool,
    hypothesis_met: bool,
}

#[derive(Serialize)]
struct CoherenceRow {
    n: usize,
    p: f64,
    q: f64,
    #[serde(rename = "mu_A")]
    mu_a: f64,
    #[serde(rename = "mu_B")]
    mu_b: f64,
    isometry_status: IsometryStatus,
    max_relative_error: f64,
    seed: u64,
}

#[derive(Serialize)]
struct ProfileRow {
    eps: f64,
    #[serde(rename = "o_M")]
    o_m: usize,
    #[serde(rename = "o_N")]
    o_n: usize,
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

enum Body {
    Json(Value),
    Csv(String),
    Raw(String),
}

fn proof_chain(pair: &BasisPair, x: &VectorInX, report: &VerificationReport, seed: u64) -> Result<Value> {
    let b = analysis_in_g(pair, x)?;
    let mut out = serde_json::Map::new();
    for (kind, name, applied_to) in [(OperatorKind::V, "V", &b), (OperatorKind::W, "W", &x.f_coords)] {
        let op = build_projected_operator(pair, &report.m_support, &report.n_support, kind)?;
        let estimate = estimate_p_operator_norm(&op, DEFAULT_RESTARTS, DEFAULT_ITERS, seed);
        out.insert(
            name.to_string(),
            json!({
                "upper_bound": operator_norm_upper(pair, &report.m_support, &report.n_support, kind),
                "witness_lower_bound": witness_lower_bound(&op, applied_to)?,
                "norm_estimate": estimate.value,
            }),
        );
    }
    Ok(Value::Object(out))
}

fn landscape_grid(config: &RunConfig) -> Vec<(f64, f64)> {
    match &config.grid {
        None => vec![(config.eps, config.delta)],
        Some(g) => {
            let deltas = g.delta.clone().unwrap_or_else(|| vec![config.delta]);
            g.eps.iter().flat_map(|&e| deltas.iter().map(move |&d| (e, d))).collect()
        }
    }
}

fn witness_json(w: &Witness) -> Value {
    serde_json::to_value(w).expect("witness serializes")
}

/// Executes one command. Errors map to exit status 1 in the binary; a pair
/// that failed its isometry check still yields a document, with exit status 2.
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let csv = config.output_format == OutputFormat::Csv;
    check_level("eps", config.eps)?;
    check_level("delta", config.delta)?;
    let pair = match config.command {
        Command::Picket => None,
        _ => Some(build_pair(config)?),
    };
    let body = match config.command {
        Command::Coherence => {
            let pair = pair.as_ref().expect("pair built");
            if csv {
                let iso = pair.isometry();
                Body::Csv(to_csv(&[CoherenceRow {
                    n: pair.n(),
                    p: pair.p(),
                    q: pair.q(),
                    mu_a: pair.mu_a(),
                    mu_b: pair.mu_b(),
                    isometry_status: iso.status,
                    max_relative_error: iso.max_relative_error,
                    seed: config.seed,
                }])?)
            } else {
                let mut v = pair_summary(pair);
                v["inverse_residual"] = json!(pair.inverse_residual());
                Body::Json(v)
            }
        }
        Command::Verify => {
            let pair = pair.as_ref().expect("pair built");
            let x = vector_for(config, pair)?;
            let report = verify_uncertainty(pair, &x, config.eps, config.delta)?;
            if csv {
                Body::Csv(to_csv(&[report_row(&report)])?)
            } else {
                Body::Json(json!({
                    "pair": pair_summary(pair),
                    "x": x.f_coords,
                    "report": report,
                    "proof_chain": proof_chain(pair, &x, &report, config.seed)?,
                }))
            }
        }
        Command::Support => {
            let pair = pair.as_ref().expect("pair built");
            let x = vector_for(config, pair)?;
            let b = analysis_in_g(pair, &x)?;
            let grid = config.grid.as_ref().map_or_else(|| vec![config.eps], |g| g.eps.clone());
            if grid.windows(2).any(|w| w[1] < w[0]) {
                return Err(Error::domain("eps grid must be non-decreasing"));
            }
            let mut rows = Vec::with_capacity(grid.len());
            let mut profile = Vec::with_capacity(grid.len());
            for &eps in &grid {
                let m = minimal_support(&x.f_coords, eps, pair.p())?;
                let n = minimal_support(&b, eps, pair.p())?;
                rows.push(ProfileRow { eps, o_m: m.cardinality(), o_n: n.cardinality() });
                profile.push(json!({"eps": eps, "o_M": m.cardinality(), "M": m, "o_N": n.cardinality(), "N": n}));
            }
            if csv {
                Body::Csv(to_csv(&rows)?)
            } else {
                Body::Json(json!({"pair": pair_summary(pair), "x": x.f_coords, "profile": profile}))
            }
        }
        Command::Search => {
            let pair = pair.as_ref().expect("pair built");
            let w = random_tightness_search(pair, config.eps, config.delta, config.trials, config.seed)?;
            if csv {
                Body::Csv(to_csv(&[report_row(&w.report)])?)
            } else {
                Body::Json(json!({"pair": pair_summary(pair), "witness": witness_json(&w)}))
            }
        }
        Command::Picket => {
            let w = picket_fence(config.m)?;
            if csv {
                Body::Csv(to_csv(&[report_row(&w.report)])?)
            } else {
                Body::Json(json!({"m": config.m, "n": config.m * config.m, "witness": witness_json(&w)}))
            }
        }
        Command::Landscape => {
            let pair = pair.as_ref().expect("pair built");
            let x = vector_for(config, pair)?;
            let reports = slack_landscape(pair, &x, &landscape_grid(config))?;
            if csv {
                Body::Csv(to_csv(&reports.iter().map(report_row).collect::<Vec<_>>())?)
            } else {
                Body::Json(json!({"pair": pair_summary(pair), "x": x.f_coords, "reports": reports}))
            }
        }
        Command::Export => {
            if csv {
                return Err(Error::domain("export writes the JSON matrix file format only"));
            }
            Body::Raw(pair.as_ref().expect("pair built").to_matrix_file().to_json())
        }
    };
    let mut document = match body {
        Body::Json(result) => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": config.command,
                "config": config.echo(),
                "result": result,
            });
            serde_json::to_string_pretty(&doc).expect("document serializes")
        }
        Body::Csv(s) | Body::Raw(s) => s,
    };
    if !document.ends_with('\n') {
        document.push('\n');
    }
    let failed = pair.as_ref().is_some_and(|p| p.isometry().status == IsometryStatus::Failed);
    let warning = failed.then(|| {
        format!(
            "hypothesis not met: transition matrix is not an l^{} isometry (max relative error {:e})",
            pair.as_ref().map_or(0.0, BasisPair::p),
            pair.as_ref().map_or(0.0, |p| p.isometry().max_relative_error)
        )
    });
    if let Some(path) = &config.output_path {
        std::fs::write(path, &document).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    }
    Ok(RunOutput { document, exit_code: if failed { EXIT_HYPOTHESIS_NOT_MET } else { 0 }, warning })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_source_parsing() {
        assert_eq!("fourier:8".parse::<PairSource>().unwrap(), PairSource::Fourier(8));
        assert_eq!("load:a/b.json".parse::<PairSource>().unwrap(), PairSource::Load("a/b.json".into()));
        assert_eq!("genperm:g.json".parse::<PairSource>().unwrap(), PairSource::GenPerm("g.json".into()));
        assert!("fourier:x".parse::<PairSource>().is_err());
        assert!("dft:4".parse::<PairSource>().is_err());
        assert!("fourier".parse::<PairSource>().is_err());
    }

    #[test]
    fn grid_parsing() {
        let g: Grid = "0,0.1:0.2,0.3".parse().unwrap();
        assert_eq!(g.eps, vec![0.0, 0.1]);
        assert_eq!(g.delta, Some(vec![0.2, 0.3]));
        assert_eq!(g.to_string(), "0,0.1:0.2,0.3");
        let g: Grid = "0.5".parse().unwrap();
        assert_eq!(g.delta, None);
        assert!("a,b".parse::<Grid>().is_err());
    }

    #[test]
    fn landscape_grid_is_a_product() {
        let mut c = RunConfig::new(Command::Landscape);
        c.grid = Some("0,0.1:0.2,0.3".parse().unwrap());
        assert_eq!(landscape_grid(&c), vec![(0.0, 0.2), (0.0, 0.3), (0.1, 0.2), (0.1, 0.3)]);
        c.grid = None;
        c.eps = 0.25;
        assert_eq!(landscape_grid(&c), vec![(0.25, 0.0)]);
    }

    #[test]
    fn out_of_range_eps_is_a_domain_error() {
        let mut c = RunConfig::new(Command::Verify);
        c.pair_source = Some(PairSource::Fourier(4));
        c.eps = 1.5;
        assert!(matches!(run(&c), Err(Error::Domain(_))));
    }

    #[test]
    fn missing_pair_is_an_error() {
        assert!(matches!(run(&RunConfig::new(Command::Coherence)), Err(Error::Domain(_))));
    }
}
