//! Mutation testing: prove the harness has teeth by re-running each check
//! against a deliberately broken variant of the claim's left-hand side and
//! demanding a failing verdict.
//!
//! Each registered mutation perturbs the summand in a way that preserves
//! its overall shape (so the same modulus, truncations, and diagnostics
//! apply) but breaks the congruence: shifting the linear weight
//! `[6k+1] -> [6k+2]`, `(4k+1) -> (4k+3)`, or the geometric factor
//! `q^(2k) -> q^(3k)`.

use crate::run::{run_variant, LhsVariant, Outcome, RunConfig, Verdict};
use crate::{ClaimId, Instance, SuiteError};

fn variant_for(claim: ClaimId) -> Option<LhsVariant> {
    match claim {
        // [6k+1] -> [6k+2] in the q-sums.
        ClaimId::Thm1
        | ClaimId::Thm2
        | ClaimId::Thm5
        | ClaimId::Thm6
        | ClaimId::Thm7
        | ClaimId::Thm8
        | ClaimId::Lemma1
        | ClaimId::Lemma2 => Some(LhsVariant::WeightOffset(2)),
        // q^(2k) -> q^(3k).
        ClaimId::Thm3 | ClaimId::Thm4 => Some(LhsVariant::GeometricExponent(3)),
        // (-1)^k [4k+1] -> (-1)^k [4k+3].
        ClaimId::GuoWy => Some(LhsVariant::WeightOffset(3)),
        // (6k+1) -> (6k+3) and (4k+1) -> (4k+3) in the classical sums.
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
        | ClaimId::LiuP4 => Some(LhsVariant::WeightOffset(3)),
        // The series identities and the reconstruction congruences have no
        // registered mutation: their checks are plain equalities whose
        // failure modes are exercised directly in unit tests.
        ClaimId::Gr | ClaimId::GrA | ClaimId::Crt => None,
    }
}

/// The claims with a registered mutation, in canonical order.
pub fn mutated_claims() -> Vec<ClaimId> {
    ClaimId::ALL
        .into_iter()
        .filter(|c| variant_for(*c).is_some())
        .collect()
}

/// Run the deliberately broken variant of `claim` at `instance` and demand
/// a failing verdict. Returns the failing verdict (whose diagnostics show
/// what the detection looks like), or an error if no mutation is
/// registered, the instance is inapplicable, or the mutation is *not*
/// detected.
pub fn mutation_test(
    claim: ClaimId,
    instance: Instance,
    config: &RunConfig,
) -> Result<Verdict, SuiteError> {
    let variant = variant_for(claim).ok_or(SuiteError::NoMutation(claim))?;
    let verdict = run_variant(claim, instance, config, variant)?;
    match &verdict.outcome {
        Outcome::Fail => Ok(verdict),
        Outcome::Pass => Err(SuiteError::MutationNotDetected(claim, verdict.instance)),
        Outcome::Inapplicable(reason) => {
            Err(SuiteError::MutationInapplicable(claim, reason.clone()))
        }
    }
}

/// The smallest instance at which each claim's registered mutation is
/// detectable (and at which unmutated claims apply). This is the smallest
/// applicable instance except for the vanishing lemmas: modulo [3] every
/// weight [6k+w] collapses to [w] (6k == 0 (mod 3)), so the weight shift
/// only becomes visible at n = 5.
pub fn mutation_instance(claim: ClaimId) -> Instance {
    match claim {
        ClaimId::Thm1 | ClaimId::Thm3 | ClaimId::Thm5 | ClaimId::Thm7 => Instance::OddN(3),
        ClaimId::Thm2 | ClaimId::Thm4 | ClaimId::Thm6 | ClaimId::Thm8 => Instance::OddN(5),
        ClaimId::Lemma1 | ClaimId::Lemma2 => Instance::OddN(5),
        ClaimId::GuoWy | ClaimId::Crt => Instance::OddN(3),
        ClaimId::Cor1 | ClaimId::Cor3 => Instance::PrimePower { p: 3, r: 1 },
        ClaimId::Cor2 | ClaimId::Cor4 => Instance::PrimePower { p: 5, r: 1 },
        ClaimId::He3 | ClaimId::He4 | ClaimId::He3Liu | ClaimId::He4Liu | ClaimId::Vanhamme => {
            Instance::PrimePower { p: 5, r: 1 }
        }
        ClaimId::Swisher => Instance::PrimePower { p: 13, r: 1 },
        ClaimId::LiuP4 => Instance::PrimePower { p: 7, r: 1 },
        ClaimId::Gr | ClaimId::GrA => Instance::Order(8),
    }
}
