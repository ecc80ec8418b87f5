//! Verifying one claim at one concrete instance.

use std::fmt;
use std::time::Instant;

use congruence::{
    check_congruence, modulus_for, sample_params, verify_crt_relations, CongruenceVerdict,
    QModulusClaim,
};
use exact_poly::{BigInt, BigRational, QRat};
use padic::{check_padic, rhs_padic, sum_classical_weighted, PadicClaim};
use qseries::{
    gr_a_sides, gr_sides, rhs_closed, rhs_parametric, sum_a_weighted, sum_b_exponent,
    sum_c_weighted, sum_lemma1_weighted, sum_lemma2_weighted, ClosedFormula, FormalSeries,
    QSeriesError, TwoParameterFormula,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{ClaimId, Instance, SuiteError};

/// Knobs shared by all runners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Seed for every deterministic sampling step.
    pub seed: u64,
    /// Number of sampled (a, b) specializations for parametric claims.
    pub specializations: usize,
    /// Truncation order for the series identities.
    pub series_order: usize,
    /// Number of sampled parameter tuples for the series identities.
    pub gr_trials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            specializations: 5,
            series_order: 40,
            gr_trials: 3,
        }
    }
}

/// The result of checking one claim at one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Every subcheck passed.
    Pass,
    /// At least one subcheck failed.
    Fail,
    /// The claim does not apply at this instance (wrong residue class,
    /// wrong instance type, prime too small, ...). Not a failure.
    Inapplicable(String),
}

impl Outcome {
    /// True exactly for [`Outcome::Pass`].
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("PASS"),
            Outcome::Fail => f.write_str("FAIL"),
            Outcome::Inapplicable(reason) => write!(f, "INAPPLICABLE ({reason})"),
        }
    }
}

/// One atomic check inside a verdict (one truncation, one specialization,
/// one residue comparison, ...).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Full record of checking one claim at one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub claim: ClaimId,
    pub instance: Instance,
    pub outcome: Outcome,
    pub subchecks: Vec<SubCheck>,
    pub elapsed_ms: u64,
}

impl Verdict {
    /// True exactly when the outcome is a pass.
    pub fn passed(&self) -> bool {
        self.outcome.is_pass()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} ({} subchecks, {} ms)",
            self.claim,
            self.instance,
            self.outcome,
            self.subchecks.len(),
            self.elapsed_ms
        )
    }
}

/// Which left-hand side to evaluate: the claimed one, or a deliberately
/// broken variant used by mutation testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LhsVariant {
    Standard,
    /// Shift the linear weight: `[6k+w]` / `[4k+w]` / `(6k+w)` / `(4k+w)`.
    WeightOffset(u64),
    /// Replace the geometric factor `q^(2k)` by `q^(e*k)`.
    GeometricExponent(u64),
}

impl LhsVariant {
    fn weight(self) -> u64 {
        match self {
            LhsVariant::WeightOffset(w) => w,
            _ => 1,
        }
    }

    fn exponent(self) -> u64 {
        match self {
            LhsVariant::GeometricExponent(e) => e,
            _ => 2,
        }
    }
}

/// Verify `claim` at `instance`. Failing checks yield `Outcome::Fail`;
/// instances outside the claim's hypotheses yield `Outcome::Inapplicable`.
pub fn run(claim: ClaimId, instance: Instance, config: &RunConfig) -> Result<Verdict, SuiteError> {
    run_variant(claim, instance, config, LhsVariant::Standard)
}

pub(crate) fn run_variant(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
    variant: LhsVariant,
) -> Result<Verdict, SuiteError> {
    let start = Instant::now();
    let (outcome, subchecks) = evaluate(claim, instance, config, variant)?;
    Ok(Verdict {
        claim,
        instance,
        outcome,
        subchecks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

type Checks = (Outcome, Vec<SubCheck>);

fn evaluate(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
    variant: LhsVariant,
) -> Result<Checks, SuiteError> {
    match claim {
        // Claims for n == 3 (mod 4) are stated for the full truncation
        // M = n-1 only; their n == 1 (mod 4) counterparts allow both.
        ClaimId::Thm1 => closed_q(
            claim,
            instance,
            QModulusClaim::Thm1,
            None,
            QFamily::A,
            Some(3),
            false,
            variant,
        ),
        ClaimId::Thm2 => closed_q(
            claim,
            instance,
            QModulusClaim::Thm2,
            Some(ClosedFormula::Thm2),
            QFamily::A,
            Some(1),
            true,
            variant,
        ),
        ClaimId::Thm3 => closed_q(
            claim,
            instance,
            QModulusClaim::Thm3,
            Some(ClosedFormula::Thm3),
            QFamily::B,
            Some(3),
            false,
            variant,
        ),
        ClaimId::Thm4 => closed_q(
            claim,
            instance,
            QModulusClaim::Thm4,
            Some(ClosedFormula::Thm4),
            QFamily::B,
            Some(1),
            true,
            variant,
        ),
        ClaimId::GuoWy => closed_q(
            claim,
            instance,
            QModulusClaim::GuoWy,
            Some(ClosedFormula::GuoWy),
            QFamily::C,
            None,
            true,
            variant,
        ),
        ClaimId::Thm5 | ClaimId::Thm6 | ClaimId::Thm7 | ClaimId::Thm8 => {
            parametric_q(claim, instance, config, variant)
        }
        ClaimId::Lemma1 | ClaimId::Lemma2 => lemma_q(claim, instance, config, variant),
        ClaimId::Cor1
        | ClaimId::Cor2
        | ClaimId::Cor3
        | ClaimId::Cor4
        | ClaimId::He3
        | ClaimId::He4
        | ClaimId::He3Liu
        | ClaimId::He4Liu
        | ClaimId::Vanhamme
        | ClaimId::Swisher
        | ClaimId::LiuP4 => padic_q(claim, instance, variant),
        ClaimId::Gr | ClaimId::GrA => series_identity(claim, instance, config),
        ClaimId::Crt => crt_relations(claim, instance, config),
    }
}

fn inapplicable(reason: String) -> Result<Checks, SuiteError> {
    Ok((Outcome::Inapplicable(reason), Vec::new()))
}

fn outcome_of(subchecks: &[SubCheck]) -> Outcome {
    if subchecks.iter().all(|s| s.pass) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn internal<E: fmt::Display>(claim: ClaimId) -> impl Fn(E) -> SuiteError {
    move |e| SuiteError::Internal(claim, e.to_string())
}

/// Extract an odd index `n >= 3`, or explain why the instance is unusable.
fn odd_n(claim: ClaimId, instance: Instance) -> Result<u64, String> {
    match instance {
        Instance::OddN(n) if n >= 3 && n % 2 == 1 => Ok(n),
        Instance::OddN(n) => Err(format!("{claim} needs an odd index n >= 3, got n={n}")),
        other => Err(format!(
            "{claim} is indexed by odd integers (n=...), got {other}"
        )),
    }
}

fn check_residue(claim: ClaimId, n: u64, want: u64) -> Result<(), String> {
    if n % 4 == want {
        Ok(())
    } else {
        Err(format!(
            "{claim} needs n == {want} (mod 4), got n={n} with n == {} (mod 4)",
            n % 4
        ))
    }
}

/// The admissible truncations of a q-congruence: always `M = n-1`, plus
/// `M = (n-1)/2` for the claims stated for both.
fn truncations(n: u64, both: bool) -> Vec<(u64, String)> {
    let mut out = Vec::new();
    if both {
        let half = (n - 1) / 2;
        out.push((half, format!("M=(n-1)/2={half}")));
    }
    out.push((n - 1, format!("M=n-1={}", n - 1)));
    out
}

/// Flatten a congruence verdict into one diagnostic line.
fn describe(v: &CongruenceVerdict) -> String {
    let mut parts: Vec<String> = v.notes.clone();
    parts.extend(v.valuation_report.iter().map(|e| e.to_string()));
    parts.join("; ")
}

#[derive(Clone, Copy)]
enum QFamily {
    A,
    B,
    C,
}

fn q_lhs(family: QFamily, n: u64, m: u64, variant: LhsVariant) -> Result<QRat, QSeriesError> {
    match family {
        QFamily::A => sum_a_weighted(n, m, variant.weight()),
        QFamily::B => sum_b_exponent(n, m, variant.exponent()),
        QFamily::C => sum_c_weighted(n, m, variant.weight()),
    }
}

#[allow(clippy::too_many_arguments)]
fn closed_q(
    claim: ClaimId,
    instance: Instance,
    qmod: QModulusClaim,
    formula: Option<ClosedFormula>,
    family: QFamily,
    residue: Option<u64>,
    both_m: bool,
    variant: LhsVariant,
) -> Result<Checks, SuiteError> {
    let n = match odd_n(claim, instance) {
        Ok(n) => n,
        Err(reason) => return inapplicable(reason),
    };
    if let Some(want) = residue {
        if let Err(reason) = check_residue(claim, n, want) {
            return inapplicable(reason);
        }
    }
    let modulus = modulus_for(qmod, n, None, None).map_err(internal(claim))?;
    let rhs = match formula {
        Some(f) => rhs_closed(f, n).map_err(internal(claim))?,
        None => QRat::zero(),
    };
    let mut subs = Vec::new();
    for (m, label) in truncations(n, both_m) {
        let lhs = q_lhs(family, n, m, variant).map_err(internal(claim))?;
        let v = check_congruence(&lhs, &rhs, &modulus);
        subs.push(SubCheck {
            name: label,
            pass: v.pass,
            detail: describe(&v),
        });
    }
    Ok((outcome_of(&subs), subs))
}

fn parametric_q(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
    variant: LhsVariant,
) -> Result<Checks, SuiteError> {
    let n = match odd_n(claim, instance) {
        Ok(n) => n,
        Err(reason) => return inapplicable(reason),
    };
    // The n == 3 (mod 4) theorems are stated for M = n-1 only, with the
    // summand taken at b^3; their n == 1 (mod 4) counterparts allow both
    // truncations and use b itself. Modulus and reconstruction weights
    // always use b.
    let (want, qmod, formula, second_family, cube_b, both_m) = match claim {
        ClaimId::Thm5 => (3, QModulusClaim::Thm5, TwoParameterFormula::Thm5, false, true, false),
        ClaimId::Thm6 => (1, QModulusClaim::Thm6, TwoParameterFormula::Thm6, false, false, true),
        ClaimId::Thm7 => (3, QModulusClaim::Thm7, TwoParameterFormula::Thm7, true, true, false),
        ClaimId::Thm8 => (1, QModulusClaim::Thm8, TwoParameterFormula::Thm8, true, false, true),
        _ => unreachable!("parametric runner called for {claim}"),
    };
    if let Err(reason) = check_residue(claim, n, want) {
        return inapplicable(reason);
    }
    let w = variant.weight();
    let pairs = sample_params(config.seed, config.specializations);
    let mut subs = Vec::new();
    for (a, b) in &pairs {
        let modulus = modulus_for(qmod, n, Some(a), Some(b)).map_err(internal(claim))?;
        let rhs = rhs_parametric(formula, n, a, b).map_err(internal(claim))?;
        let b_sum = if cube_b { b * b * b } else { b.clone() };
        for (m, label) in truncations(n, both_m) {
            let lhs = if second_family {
                sum_lemma2_weighted(n, m, a, &b_sum, w)
            } else {
                sum_lemma1_weighted(n, m, a, &b_sum, w)
            }
            .map_err(internal(claim))?;
            let v = check_congruence(&lhs, &rhs, &modulus);
            subs.push(SubCheck {
                name: format!("a={a}, b={b}, {label}"),
                pass: v.pass,
                detail: describe(&v),
            });
        }
        let crt_ok = verify_crt_relations(n, a, b).map_err(internal(claim))?;
        subs.push(SubCheck {
            name: format!("a={a}, b={b}, reconstruction"),
            pass: crt_ok,
            detail: if crt_ok {
                "the four reconstruction-coefficient congruences hold".into()
            } else {
                "a reconstruction-coefficient congruence fails".into()
            },
        });
    }
    Ok((outcome_of(&subs), subs))
}

fn lemma_q(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
    variant: LhsVariant,
) -> Result<Checks, SuiteError> {
    let n = match odd_n(claim, instance) {
        Ok(n) => n,
        Err(reason) => return inapplicable(reason),
    };
    let second_family = claim == ClaimId::Lemma2;
    let qmod = if second_family {
        QModulusClaim::Lemma2
    } else {
        QModulusClaim::Lemma1
    };
    let w = variant.weight();
    let modulus = modulus_for(qmod, n, None, None).map_err(internal(claim))?;
    let rhs = QRat::zero();
    let pairs = sample_params(config.seed, config.specializations);
    let mut subs = Vec::new();
    for (a, b) in &pairs {
        for (m, label) in truncations(n, true) {
            let lhs = if second_family {
                sum_lemma2_weighted(n, m, a, b, w)
            } else {
                sum_lemma1_weighted(n, m, a, b, w)
            }
            .map_err(internal(claim))?;
            let v = check_congruence(&lhs, &rhs, &modulus);
            subs.push(SubCheck {
                name: format!("a={a}, b={b}, {label}"),
                pass: v.pass,
                detail: describe(&v),
            });
        }
    }
    Ok((outcome_of(&subs), subs))
}

fn padic_claim_of(claim: ClaimId) -> PadicClaim {
    match claim {
        ClaimId::Cor1 => PadicClaim::Cor1,
        ClaimId::Cor2 => PadicClaim::Cor2,
        ClaimId::Cor3 => PadicClaim::Cor3,
        ClaimId::Cor4 => PadicClaim::Cor4,
        ClaimId::He3 => PadicClaim::He3,
        ClaimId::He4 => PadicClaim::He4,
        ClaimId::He3Liu => PadicClaim::He3Liu,
        ClaimId::He4Liu => PadicClaim::He4Liu,
        ClaimId::Vanhamme => PadicClaim::Vanhamme,
        ClaimId::Swisher => PadicClaim::Swisher,
        ClaimId::LiuP4 => PadicClaim::LiuP4,
        other => unreachable!("p-adic runner called for {other}"),
    }
}

fn padic_q(claim: ClaimId, instance: Instance, variant: LhsVariant) -> Result<Checks, SuiteError> {
    let (p, r) = match instance {
        Instance::PrimePower { p, r } => (p, r),
        other => {
            return inapplicable(format!(
                "{claim} is indexed by prime powers (p=...,r=...), got {other}"
            ))
        }
    };
    let pc = padic_claim_of(claim);
    if let Err(e) = pc.validate(p, r) {
        return inapplicable(e.to_string());
    }
    let e = pc.precision(r);
    let lhs = sum_classical_weighted(pc.family(), pc.truncation(p, r), variant.weight());
    let rhs = rhs_padic(pc, p, r, e).map_err(internal(claim))?;
    let v = check_padic(&lhs.value, &rhs);
    let detail = if !v.p_integral {
        format!("left side is not {p}-integral: {}", v.notes.join("; "))
    } else {
        let sign = if v.pass { ">=" } else { "<" };
        let residue = v
            .lhs_residue
            .as_ref()
            .map(|x| x.to_string())
            .unwrap_or_default();
        format!("v_{p} = {} {} {}; lhs == {}", v.achieved, sign, e, residue)
    };
    let subs = vec![SubCheck {
        name: format!("mod {p}^{e}"),
        pass: v.pass,
        detail,
    }];
    Ok((outcome_of(&subs), subs))
}

fn draw_param(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        if num == 0 {
            continue;
        }
        let den: i64 = rng.gen_range(1..=9);
        return BigRational::new(BigInt::from(num), BigInt::from(den));
    }
}

fn compare_series(lhs: &FormalSeries, rhs: &FormalSeries, order: usize) -> (bool, String) {
    if lhs == rhs {
        return (true, format!("all coefficients through q^{order} agree"));
    }
    let j = (0..=order)
        .find(|&i| lhs.coeff(i) != rhs.coeff(i))
        .expect("series differ at some coefficient");
    (
        false,
        format!(
            "coefficient of q^{j} differs: {} vs {}",
            lhs.coeff(j),
            rhs.coeff(j)
        ),
    )
}

fn series_identity(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
) -> Result<Checks, SuiteError> {
    let order = match instance {
        Instance::Order(d) => d,
        other => {
            return inapplicable(format!(
                "{claim} is indexed by a series order (order=...), got {other}"
            ))
        }
    };
    let trials = config.gr_trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut subs = Vec::new();
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < trials {
        attempts += 1;
        if attempts > 40 * trials + 40 {
            return Err(SuiteError::Internal(
                claim,
                "could not sample enough non-degenerate specializations".into(),
            ));
        }
        let a = draw_param(&mut rng);
        let b = draw_param(&mut rng);
        let (label, sides) = if claim == ClaimId::Gr {
            let d = draw_param(&mut rng);
            let f = draw_param(&mut rng);
            (
                format!("a={a}, b={b}, d={d}, f={f}"),
                gr_sides(&a, &b, &d, &f, order),
            )
        } else {
            let f = draw_param(&mut rng);
            (format!("a={a}, b={b}, f={f}"), gr_a_sides(&a, &b, &f, order))
        };
        match sides {
            Ok((lhs, rhs)) => {
                let (pass, detail) = compare_series(&lhs, &rhs, order);
                subs.push(SubCheck {
                    name: label,
                    pass,
                    detail,
                });
                done += 1;
            }
            Err(QSeriesError::Degenerate(msg)) => {
                subs.push(SubCheck {
                    name: format!("skipped {label}"),
                    pass: true,
                    detail: format!("degenerate specialization: {msg}"),
                });
            }
            Err(QSeriesError::DivisorNotUnit) => {
                subs.push(SubCheck {
                    name: format!("skipped {label}"),
                    pass: true,
                    detail:
                        "degenerate specialization: a denominator series has no constant term"
                            .into(),
                });
            }
            Err(e) => return Err(SuiteError::Internal(claim, e.to_string())),
        }
    }
    Ok((outcome_of(&subs), subs))
}

fn crt_relations(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
) -> Result<Checks, SuiteError> {
    let n = match odd_n(claim, instance) {
        Ok(n) => n,
        Err(reason) => return inapplicable(reason),
    };
    let pairs = sample_params(config.seed, config.specializations);
    let mut subs = Vec::new();
    for (a, b) in &pairs {
        let ok = verify_crt_relations(n, a, b).map_err(internal(claim))?;
        subs.push(SubCheck {
            name: format!("a={a}, b={b}"),
            pass: ok,
            detail: if ok {
                "the four reconstruction-coefficient congruences hold".into()
            } else {
                "a reconstruction-coefficient congruence fails".into()
            },
        });
    }
    Ok((outcome_of(&subs), subs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cheap() -> RunConfig {
        RunConfig {
            seed: 42,
            specializations: 2,
            series_order: 10,
            gr_trials: 2,
        }
    }

    #[test]
    fn thm1_passes_at_n_7() {
        let v = run(ClaimId::Thm1, Instance::OddN(7), &RunConfig::default()).unwrap();
        assert!(v.passed(), "{v}");
        // Stated for the full truncation only.
        assert_eq!(v.subchecks.len(), 1);
        assert!(v.subchecks[0].name.contains("M=n-1=6"));
        assert!(v.subchecks[0].detail.contains("Phi_7"));
    }

    #[test]
    fn thm2_checks_both_truncations_at_n_5() {
        let v = run(ClaimId::Thm2, Instance::OddN(5), &RunConfig::default()).unwrap();
        assert!(v.passed(), "{v}");
        assert_eq!(v.subchecks.len(), 2);
        assert!(v.subchecks[0].name.contains("M=(n-1)/2=2"));
        assert!(v.subchecks[1].name.contains("M=n-1=4"));
    }

    #[test]
    fn thm1_is_inapplicable_at_n_5() {
        let v = run(ClaimId::Thm1, Instance::OddN(5), &RunConfig::default()).unwrap();
        match &v.outcome {
            Outcome::Inapplicable(reason) => assert!(reason.contains("(mod 4)"), "{reason}"),
            other => panic!("expected inapplicable, got {other}"),
        }
        assert!(v.subchecks.is_empty());
    }

    #[test]
    fn wrong_instance_type_is_inapplicable() {
        let v = run(
            ClaimId::Thm1,
            Instance::PrimePower { p: 7, r: 1 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
        let v = run(ClaimId::Cor1, Instance::OddN(7), &RunConfig::default()).unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
        let v = run(ClaimId::Gr, Instance::OddN(7), &RunConfig::default()).unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
        let v = run(ClaimId::Thm1, Instance::OddN(4), &RunConfig::default()).unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
    }

    #[test]
    fn cor2_passes_at_p_3_r_2() {
        let v = run(
            ClaimId::Cor2,
            Instance::PrimePower { p: 3, r: 2 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(v.passed(), "{v}");
        assert_eq!(v.subchecks.len(), 1);
        assert_eq!(v.subchecks[0].name, "mod 3^5");
        assert!(v.subchecks[0].detail.contains("v_3 = "), "{}", v.subchecks[0].detail);
        assert!(v.subchecks[0].detail.contains(">= 5"), "{}", v.subchecks[0].detail);
    }

    #[test]
    fn cor1_diagnostic_shows_the_achieved_valuation() {
        let v = run(
            ClaimId::Cor1,
            Instance::PrimePower { p: 3, r: 1 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(v.passed(), "{v}");
        assert!(
            v.subchecks[0].detail.contains("v_3 = 5 >= 4"),
            "{}",
            v.subchecks[0].detail
        );
    }

    #[test]
    fn vanhamme_applicability() {
        let v = run(
            ClaimId::Vanhamme,
            Instance::PrimePower { p: 5, r: 1 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(v.passed(), "{v}");
        let v = run(
            ClaimId::Vanhamme,
            Instance::PrimePower { p: 3, r: 1 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
        let v = run(
            ClaimId::Vanhamme,
            Instance::PrimePower { p: 5, r: 2 },
            &RunConfig::default(),
        )
        .unwrap();
        assert!(matches!(v.outcome, Outcome::Inapplicable(_)));
    }

    #[test]
    fn thm5_passes_with_reconstruction_subchecks() {
        let v = run(ClaimId::Thm5, Instance::OddN(3), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
        // Two specializations, each with the full truncation plus one
        // reconstruction subcheck.
        assert_eq!(v.subchecks.len(), 4);
        assert!(v.subchecks.iter().any(|s| s.name.ends_with("reconstruction")));
        assert!(v.subchecks.iter().any(|s| s.name.contains("M=n-1=2")));
    }

    #[test]
    fn thm6_checks_both_truncations() {
        let v = run(ClaimId::Thm6, Instance::OddN(5), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
        // Two specializations x (two truncations + reconstruction).
        assert_eq!(v.subchecks.len(), 6);
    }

    #[test]
    fn lemma1_passes_over_sampled_specializations() {
        let v = run(ClaimId::Lemma1, Instance::OddN(3), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
        assert_eq!(v.subchecks.len(), 4);
        assert!(v.subchecks[0].name.starts_with("a="));
    }

    #[test]
    fn guo_wy_covers_both_residue_classes() {
        let v = run(ClaimId::GuoWy, Instance::OddN(3), &RunConfig::default()).unwrap();
        assert!(v.passed(), "{v}");
        let v = run(ClaimId::GuoWy, Instance::OddN(5), &RunConfig::default()).unwrap();
        assert!(v.passed(), "{v}");
    }

    #[test]
    fn series_identities_pass_at_small_order() {
        let v = run(ClaimId::Gr, Instance::Order(10), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
        assert!(v.subchecks.iter().filter(|s| !s.name.starts_with("skipped")).count() >= 2);
        let v = run(ClaimId::GrA, Instance::Order(10), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
    }

    #[test]
    fn crt_claim_passes() {
        let v = run(ClaimId::Crt, Instance::OddN(5), &cheap()).unwrap();
        assert!(v.passed(), "{v}");
        assert_eq!(v.subchecks.len(), 2);
    }

    #[test]
    fn runs_are_deterministic() {
        let a = run(ClaimId::Thm5, Instance::OddN(3), &cheap()).unwrap();
        let b = run(ClaimId::Thm5, Instance::OddN(3), &cheap()).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.subchecks, b.subchecks);
    }
}
