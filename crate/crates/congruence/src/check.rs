//! Verdict computation: reduce the difference and test it against the
//! modulus, with per-factor diagnostics.

use crate::modulus::{FactorKind, Modulus};
use exact_poly::{poly_divrem, poly_gcd, valuation_at, QPoly, QRat, Valuation};
use std::fmt;

/// Per-factor diagnostic: a true valuation for irreducible (cyclotomic)
/// factors, a remainder test for specialized factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorCheck {
    /// Order of vanishing of the difference at the factor versus the
    /// multiplicity the modulus demands.
    Valuation { required: u32, achieved: Valuation },
    /// Whether `factor^required` divides the numerator of the difference.
    Remainder { required: u32, divides: bool },
}

/// One line of the per-factor report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    /// Display label of the factor (`Phi_7`, `(-2*q^3 + 1)`, …).
    pub factor: String,
    /// The diagnostic outcome for this factor.
    pub check: FactorCheck,
    /// Whether the reduced denominator of the difference is coprime to
    /// this factor (false means the difference has a pole there).
    pub denominator_coprime: bool,
}

impl FactorEntry {
    /// Whether this factor's share of the congruence holds.
    pub fn ok(&self) -> bool {
        self.denominator_coprime
            && match self.check {
                FactorCheck::Valuation { required, achieved } => match achieved {
                    Valuation::PlusInfinity => true,
                    Valuation::Finite(v) => v >= required as i64,
                },
                FactorCheck::Remainder { divides, .. } => divides,
            }
    }
}

impl fmt::Display for FactorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.check {
            FactorCheck::Valuation { required, achieved } => {
                let shown = match achieved {
                    Valuation::PlusInfinity => "+inf".to_string(),
                    Valuation::Finite(v) => v.to_string(),
                };
                write!(f, "v_{} = {} (required {})", self.factor, shown, required)?;
            }
            FactorCheck::Remainder { required, divides } => {
                let verb = if divides { "divides" } else { "does NOT divide" };
                if required == 1 {
                    write!(f, "{} {} the numerator", self.factor, verb)?;
                } else {
                    write!(f, "{}^{} {} the numerator", self.factor, required, verb)?;
                }
            }
        }
        if !self.denominator_coprime {
            write!(f, "; denominator NOT coprime to {}", self.factor)?;
        }
        if self.ok() {
            write!(f, " — ok")
        } else {
            write!(f, " — FAIL")
        }
    }
}

/// Outcome of a congruence check.  `pass` is exactly
/// `denominator_coprime && remainder_zero`; the factor report is
/// diagnostic only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceVerdict {
    /// The congruence holds.
    pub pass: bool,
    /// The reduced denominator of `lhs − rhs` is coprime to the modulus.
    /// When false the difference is not integral at the modulus — a
    /// distinct failure mode from mere non-divisibility.
    pub denominator_coprime: bool,
    /// The modulus divides the reduced numerator of `lhs − rhs`.
    pub remainder_zero: bool,
    /// One entry per modulus factor.
    pub valuation_report: Vec<FactorEntry>,
    /// Free-form notes (zero difference, failure mode summaries).
    pub notes: Vec<String>,
}

impl fmt::Display for CongruenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.pass { "PASS" } else { "FAIL" })?;
        for entry in &self.valuation_report {
            writeln!(f, "  {entry}")?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

fn coprime_to(den: &QPoly, m: &QPoly) -> bool {
    match poly_gcd(den, m) {
        Ok(g) => g.is_constant(),
        Err(_) => false,
    }
}

fn divides(num: &QPoly, m: &QPoly) -> bool {
    if num.is_zero() {
        return true;
    }
    match poly_divrem(num, m) {
        Ok((_, rem)) => rem.is_zero(),
        Err(_) => false,
    }
}

/// Check `lhs ≡ rhs` modulo the factored modulus `m`.
///
/// Writing `lhs − rhs = N / D` in lowest terms, the congruence holds when
/// `gcd(D, m.product())` is constant and `m.product()` divides `N`.  All
/// failures are verdict states; this function never errors.
pub fn check_congruence(lhs: &QRat, rhs: &QRat, m: &Modulus) -> CongruenceVerdict {
    let diff = lhs.sub(rhs);
    let num = diff.num();
    let den = diff.den();

    let denominator_coprime = coprime_to(den, m.product());
    let remainder_zero = divides(num, m.product());

    let mut valuation_report = Vec::with_capacity(m.factors().len());
    for factor in m.factors() {
        let den_ok = coprime_to(den, factor.poly());
        let check = match factor.kind() {
            FactorKind::Cyclotomic(_) => FactorCheck::Valuation {
                required: factor.multiplicity(),
                achieved: valuation_at(&diff, factor.poly())
                    .expect("modulus factors are nonconstant"),
            },
            FactorKind::Specialized => FactorCheck::Remainder {
                required: factor.multiplicity(),
                divides: divides(num, &factor.poly().pow(factor.multiplicity())),
            },
        };
        valuation_report.push(FactorEntry {
            factor: factor.label().to_string(),
            check,
            denominator_coprime: den_ok,
        });
    }

    let mut notes = Vec::new();
    if diff.is_zero() {
        notes.push("difference is identically zero".to_string());
    }
    if !denominator_coprime {
        notes.push(
            "not integral at modulus: the denominator of the difference \
             shares a factor with it"
                .to_string(),
        );
    } else if !remainder_zero {
        notes.push("modulus does not divide the numerator of the difference".to_string());
    }

    CongruenceVerdict {
        pass: denominator_coprime && remainder_zero,
        denominator_coprime,
        remainder_zero,
        valuation_report,
        notes,
    }
}
