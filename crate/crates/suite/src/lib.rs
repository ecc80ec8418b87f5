//! Claim catalog and verification harness tying together the polynomial,
//! q-series, congruence, and p-adic engines.
//!
//! Every supported statement is enumerated as a [`ClaimId`] with a
//! self-contained mathematical description in the [`catalog`]. A claim is
//! checked at one concrete [`Instance`] with [`run`], swept over a whole
//! instance grid with [`scan`], and shown to have teeth with
//! [`mutation_test`], which re-runs the check against a deliberately broken
//! variant of the claim and demands a failing verdict.

mod catalog;
mod mutation;
mod run;
mod scan;

pub use catalog::{catalog, claim_info, Claim, ClaimKind};
pub use mutation::{mutated_claims, mutation_test, mutation_instance};
pub use run::{run, Outcome, RunConfig, SubCheck, Verdict};
pub use scan::{scan, Report, ReportVerdict, ScanConfig, Summary};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Identifier of one verifiable claim. The variants are listed in canonical
/// catalog order, which is also the order used by reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
    Lemma1,
    Lemma2,
    Cor1,
    Cor2,
    Cor3,
    Cor4,
    He3,
    He4,
    He3Liu,
    He4Liu,
    Vanhamme,
    Swisher,
    LiuP4,
    GuoWy,
    Gr,
    GrA,
    Crt,
}

impl ClaimId {
    /// All claims in canonical catalog order.
    pub const ALL: [ClaimId; 25] = [
        ClaimId::Thm1,
        ClaimId::Thm2,
        ClaimId::Thm3,
        ClaimId::Thm4,
        ClaimId::Thm5,
        ClaimId::Thm6,
        ClaimId::Thm7,
        ClaimId::Thm8,
        ClaimId::Lemma1,
        ClaimId::Lemma2,
        ClaimId::Cor1,
        ClaimId::Cor2,
        ClaimId::Cor3,
        ClaimId::Cor4,
        ClaimId::He3,
        ClaimId::He4,
        ClaimId::He3Liu,
        ClaimId::He4Liu,
        ClaimId::Vanhamme,
        ClaimId::Swisher,
        ClaimId::LiuP4,
        ClaimId::GuoWy,
        ClaimId::Gr,
        ClaimId::GrA,
        ClaimId::Crt,
    ];

    /// The stable string name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "thm1",
            ClaimId::Thm2 => "thm2",
            ClaimId::Thm3 => "thm3",
            ClaimId::Thm4 => "thm4",
            ClaimId::Thm5 => "thm5",
            ClaimId::Thm6 => "thm6",
            ClaimId::Thm7 => "thm7",
            ClaimId::Thm8 => "thm8",
            ClaimId::Lemma1 => "lemma1",
            ClaimId::Lemma2 => "lemma2",
            ClaimId::Cor1 => "cor1",
            ClaimId::Cor2 => "cor2",
            ClaimId::Cor3 => "cor3",
            ClaimId::Cor4 => "cor4",
            ClaimId::He3 => "he3",
            ClaimId::He4 => "he4",
            ClaimId::He3Liu => "he3_liu",
            ClaimId::He4Liu => "he4_liu",
            ClaimId::Vanhamme => "vanhamme",
            ClaimId::Swisher => "swisher",
            ClaimId::LiuP4 => "liu_p4",
            ClaimId::GuoWy => "guo_wy",
            ClaimId::Gr => "gr",
            ClaimId::GrA => "gr_a",
            ClaimId::Crt => "crt",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| SuiteError::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// One concrete point at which a claim is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Instance {
    /// An odd integer index `n >= 3` for the q-congruences.
    OddN(u64),
    /// A prime power `p^r` for the p-adic congruences.
    PrimePower { p: u64, r: u32 },
    /// A series truncation order for the coefficientwise identities.
    Order(usize),
}

impl Instance {
    fn rank(self) -> u8 {
        match self {
            Instance::OddN(_) => 0,
            Instance::PrimePower { .. } => 1,
            Instance::Order(_) => 2,
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::OddN(n) => write!(f, "n={n}"),
            Instance::PrimePower { p, r } => write!(f, "p={p},r={r}"),
            Instance::Order(d) => write!(f, "order={d}"),
        }
    }
}

impl FromStr for Instance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix("n=") {
            let n = v.parse().map_err(|_| format!("bad instance `{s}`"))?;
            return Ok(Instance::OddN(n));
        }
        if let Some(v) = s.strip_prefix("order=") {
            let d = v.parse().map_err(|_| format!("bad instance `{s}`"))?;
            return Ok(Instance::Order(d));
        }
        if let Some(rest) = s.strip_prefix("p=") {
            let mut parts = rest.splitn(2, ",r=");
            let p = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| format!("bad instance `{s}`"))?;
            let r = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| format!("bad instance `{s}`"))?;
            return Ok(Instance::PrimePower { p, r });
        }
        Err(format!(
            "bad instance `{s}` (expected n=<odd>, p=<prime>,r=<power>, or order=<N>)"
        ))
    }
}

impl PartialOrd for Instance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Instance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Instance::OddN(a), Instance::OddN(b)) => a.cmp(b),
            (
                Instance::PrimePower { p: p1, r: r1 },
                Instance::PrimePower { p: p2, r: r2 },
            ) => (p1, r1).cmp(&(p2, r2)),
            (Instance::Order(a), Instance::Order(b)) => a.cmp(b),
            (a, b) => a.rank().cmp(&b.rank()),
        }
    }
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Instance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Errors from the harness itself. A failing claim is *not* an error: it is
/// reported through [`Outcome::Fail`]. Errors signal misuse (unknown claim
/// names, missing mutations) or internal breakage.
#[derive(Debug, Error)]
pub enum SuiteError {
    /// The string does not name a catalogued claim.
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    /// No deliberately broken variant is registered for the claim.
    #[error("no mutation is registered for claim `{0}`")]
    NoMutation(ClaimId),
    /// The broken variant still passed, so the check would not catch it.
    #[error("mutation of `{0}` at {1} was not detected: the mutated check still passes")]
    MutationNotDetected(ClaimId, Instance),
    /// Mutation testing needs an instance where the claim actually applies.
    #[error("mutation test for `{0}` needs an applicable instance: {1}")]
    MutationInapplicable(ClaimId, String),
    /// An engine call that should be infallible failed.
    #[error("internal error while checking `{0}`: {1}")]
    Internal(ClaimId, String),
}
