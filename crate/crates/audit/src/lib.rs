//! Seeded audit of algebraic laws.
//!
//! Each law is a claimed identity. [`audit_law`] draws operands, evaluates
//! both sides and tallies agreement within tolerance, keeping the first
//! counterexample. Some laws are invariants of the exponent-form semantics and
//! must always pass; the rest are hypotheses whose pass rate is the finding.
//!
//! Results depend only on the configuration: sample `i` of law `L` at
//! dimension `d` draws from its own generator seeded by `(seed, L, d, i)`, and
//! tallies are reduced in index order, so parallel evaluation matches a
//! sequential run bit for bit.

mod eval;
mod law;
mod report;
mod sample;

use std::collections::BTreeMap;

use hyperspace::json::Number;
use hyperspace::{HyperError, Orientation, Tolerance};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use eval::MODULUS_REL;
pub use law::{Law, LawKind};
pub use report::render_markdown;
pub use sample::sample_seed;

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("invalid audit configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Arithmetic(#[from] HyperError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    #[default]
    Unrestricted,
    /// Every component argument in `(-π/4, π/4)`, hence `a_0 > 0`.
    PositiveRestricted,
}

impl std::str::FromStr for Domain {
    type Err = AuditError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unrestricted" => Ok(Domain::Unrestricted),
            "positive" | "positive_restricted" => Ok(Domain::PositiveRestricted),
            other => Err(AuditError::InvalidConfig(format!("unknown domain `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub dims: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: Tolerance<f64>,
    pub domain: Domain,
    pub orientation: Orientation,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            dims: vec![2, 3, 4],
            samples: 10_000,
            seed: 42,
            tolerance: Tolerance::default(),
            domain: Domain::Unrestricted,
            orientation: Orientation::Anticlockwise,
        }
    }
}

impl AuditConfig {
    pub fn validate(&self) -> Result<(), AuditError> {
        if self.samples == 0 {
            return Err(AuditError::InvalidConfig("samples must be at least 1".into()));
        }
        if self.dims.is_empty() {
            return Err(AuditError::InvalidConfig("no dimensions requested".into()));
        }
        if let Some(d) = self.dims.iter().find(|&&d| d < 2) {
            return Err(AuditError::InvalidConfig(format!("dimension {d} is below 2")));
        }
        if !(self.tolerance.abs_eps > 0.0 && self.tolerance.rel_eps > 0.0) {
            return Err(AuditError::InvalidConfig("tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// The first failing sample of a law: its operands, integer parameters, and
/// the two sides of the check that failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub operands: Vec<Number>,
    pub params: BTreeMap<String, i64>,
    pub check: String,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: Law,
    pub dim: usize,
    pub samples: usize,
    pub passes: usize,
    pub max_dev: f64,
    pub resamples: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawResult {
    pub fn pass_rate(&self) -> f64 {
        self.passes as f64 / self.samples as f64
    }

    pub fn kind(&self) -> LawKind {
        self.law.kind(self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub config: AuditConfig,
    pub results: Vec<LawResult>,
    pub version: String,
    /// Seconds since the epoch; `SOURCE_DATE_EPOCH` wins when set.
    pub timestamp: u64,
}

impl AuditReport {
    pub fn any_failures(&self) -> bool {
        self.results.iter().any(|r| r.passes < r.samples)
    }

    pub fn invariant_failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results
            .iter()
            .filter(|r| r.kind() == LawKind::Invariant && r.passes < r.samples)
    }

    pub fn get(&self, law: Law, dim: usize) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law && r.dim == dim)
    }
}

struct SampleResult {
    pass: bool,
    dev: f64,
    resamples: usize,
    failure: Option<Counterexample>,
}

fn run_sample(law: Law, dim: usize, cfg: &AuditConfig, index: usize) -> SampleResult {
    let seed = sample_seed(cfg.seed, law, dim, index);
    let mut sampler = sample::Sampler::new(seed, cfg.domain, cfg.orientation);
    let ctx = eval::Ctx {
        dim,
        orientation: cfg.orientation,
        tol: &cfg.tolerance,
    };
    let out = eval::evaluate(law, &ctx, &mut sampler);
    let dev = out
        .checks
        .iter()
        .map(eval::Check::deviation)
        .fold(0.0, f64::max);
    let failed = out.checks.iter().find(|c| !c.passes());
    SampleResult {
        pass: failed.is_none(),
        dev,
        resamples: sampler.resamples,
        failure: failed.map(|c| Counterexample {
            index,
            operands: out.operands.clone(),
            params: out.params.clone(),
            check: c.label.to_string(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
            deviation: c.deviation(),
        }),
    }
}

/// Audits one law at one dimension.
pub fn audit_law_at(law: Law, dim: usize, cfg: &AuditConfig) -> Result<LawResult, AuditError> {
    cfg.validate()?;
    if !law.applies_to(dim) {
        return Err(AuditError::InvalidConfig(format!("{law} is not defined at dimension {dim}")));
    }
    let per_sample: Vec<SampleResult> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| run_sample(law, dim, cfg, i))
        .collect();
    let mut result = LawResult {
        law,
        dim,
        samples: cfg.samples,
        passes: 0,
        max_dev: 0.0,
        resamples: 0,
        counterexample: None,
    };
    for s in per_sample {
        result.passes += usize::from(s.pass);
        result.max_dev = result.max_dev.max(s.dev);
        result.resamples += s.resamples;
        if result.counterexample.is_none() {
            result.counterexample = s.failure;
        }
    }
    Ok(result)
}

/// Audits one law at every configured dimension it is defined at.
pub fn audit_law(law: Law, cfg: &AuditConfig) -> Result<Vec<LawResult>, AuditError> {
    cfg.validate()?;
    cfg.dims
        .iter()
        .filter(|&&d| law.applies_to(d))
        .map(|&d| audit_law_at(law, d, cfg))
        .collect()
}

/// Runs `laws` (the default suite when empty) at every applicable dimension.
pub fn run_audit(cfg: &AuditConfig, laws: &[Law]) -> Result<AuditReport, AuditError> {
    cfg.validate()?;
    let laws: Vec<Law> = if laws.is_empty() {
        Law::DEFAULT.to_vec()
    } else {
        laws.to_vec()
    };
    let mut results = Vec::new();
    for law in laws {
        results.extend(audit_law(law, cfg)?);
    }
    Ok(AuditReport {
        config: cfg.clone(),
        results,
        version: hyperspace::VERSION.to_string(),
        timestamp: timestamp(),
    })
}

fn timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        })
}
