//! Sweeping every catalogued claim over an instance grid and collecting a
//! machine-readable report.

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, Claim, ClaimKind};
use crate::run::{run, Outcome, RunConfig, SubCheck, Verdict};
use crate::{ClaimId, Instance, SuiteError};

/// Grid bounds and sampling knobs for a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Check q-congruences at every odd `3 <= n <= n_max`. `0` disables
    /// them (and the series identities, which join any nonempty scan).
    pub n_max: u64,
    /// Check p-adic congruences at these primes.
    pub primes: Vec<u64>,
    /// ... for every exponent `1 <= r <= r_max`.
    pub r_max: u32,
    /// Seed for all deterministic sampling.
    pub seed: u64,
    /// Truncation order for the series identities.
    pub series_order: usize,
    /// Number of sampled (a, b) specializations per parametric claim.
    pub specializations: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            n_max: 0,
            primes: Vec::new(),
            r_max: 1,
            seed: 42,
            series_order: 40,
            specializations: 5,
        }
    }
}

/// Number of sampled parameter tuples per series identity during a scan.
const SCAN_GR_TRIALS: usize = 3;

/// One row of a report: a claim at an instance where it applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportVerdict {
    pub claim: ClaimId,
    pub instance: Instance,
    pub pass: bool,
    pub subchecks: Vec<SubCheck>,
    pub elapsed_ms: u64,
}

/// Aggregate counts over the whole grid. Instances where a claim does not
/// apply are counted here but omitted from the verdict list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

/// The full result of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Version of this tool.
    pub version: String,
    /// The seed every sampling step derived from.
    pub seed: u64,
    /// The grid that was scanned.
    pub config: ScanConfig,
    /// One entry per applicable (claim, instance), in canonical order
    /// (catalog order, then instance order).
    pub verdicts: Vec<ReportVerdict>,
    pub summary: Summary,
}

impl Report {
    /// True when no applicable instance failed.
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// The report with timings zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for v in &mut r.verdicts {
            v.elapsed_ms = 0;
        }
        r
    }
}

fn instances_for(claim: &Claim, config: &ScanConfig) -> Vec<Instance> {
    match claim.kind {
        ClaimKind::QCongruence | ClaimKind::ParametricQCongruence => (3..=config.n_max)
            .filter(|n| n % 2 == 1)
            .map(Instance::OddN)
            .collect(),
        ClaimKind::PAdic => {
            let mut primes = config.primes.clone();
            primes.sort_unstable();
            primes.dedup();
            primes
                .into_iter()
                .flat_map(|p| (1..=config.r_max).map(move |r| Instance::PrimePower { p, r }))
                .collect()
        }
        ClaimKind::SeriesIdentity => {
            if config.n_max >= 1 {
                vec![Instance::Order(config.series_order)]
            } else {
                Vec::new()
            }
        }
    }
}

/// Run every catalogued claim over the grid described by `config`.
pub fn scan(config: &ScanConfig) -> Result<Report, SuiteError> {
    let run_cfg = RunConfig {
        seed: config.seed,
        specializations: config.specializations,
        series_order: config.series_order,
        gr_trials: SCAN_GR_TRIALS,
    };
    let mut verdicts = Vec::new();
    let mut summary = Summary::default();
    for claim in catalog() {
        for instance in instances_for(claim, config) {
            let v: Verdict = run(claim.id, instance, &run_cfg)?;
            match v.outcome {
                Outcome::Pass => {
                    summary.pass += 1;
                    verdicts.push(row(v, true));
                }
                Outcome::Fail => {
                    summary.fail += 1;
                    verdicts.push(row(v, false));
                }
                Outcome::Inapplicable(_) => summary.inapplicable += 1,
            }
        }
    }
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: config.seed,
        config: config.clone(),
        verdicts,
        summary,
    })
}

fn row(v: Verdict, pass: bool) -> ReportVerdict {
    ReportVerdict {
        claim: v.claim,
        instance: v.instance,
        pass,
        subchecks: v.subchecks,
        elapsed_ms: v.elapsed_ms,
    }
}
