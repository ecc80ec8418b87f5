//! Classical congruence claims: left-hand truncated sums, closed-form
//! right-hand sides, and the residue comparison verdict.

use crate::classical::{harmonic2, pochhammer, sum_classical, ClassicalFamily, ClassicalSum};
use crate::gamma::gamma_p;
use crate::residue::{modinv, rat_mod, vp, PadicResidue, PadicValuation};
use crate::{check_precision, check_prime, PadicError, PadicResult};
use num::traits::One;
use num::{BigInt, BigRational, Integer};
use std::fmt;

/// The classical (q = 1) congruence claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PadicClaim {
    /// `Σ_{k=0}^{p^r−1} F1-terms ≡ 0 (mod p^{r+3})` for `p^r ≡ 3 (mod 4)`.
    Cor1,
    /// `Σ_{k=0}^{(p^r−1)/2} F1-terms` mod `p^{r+3}` for `p^r ≡ 1 (mod 4)`.
    Cor2,
    /// `Σ_{k=0}^{p^r−1} F2-terms` mod `p^{r+4}` for `p^r ≡ 3 (mod 4)`.
    Cor3,
    /// `Σ_{k=0}^{(p^r−1)/2} F2-terms` mod `p^{r+4}` for `p^r ≡ 1 (mod 4)`.
    Cor4,
    /// `A2` partial sum to `(p−1)/2` mod `p^3`.
    Vanhamme,
    /// The same statement mod `p^5` for `p ≡ 1 (mod 4)`, `p > 5`.
    Swisher,
    /// The same sum mod `p^4` with RHS `−(p^3/16)·Γ_p(1/4)^4` for
    /// `p ≡ 3 (mod 4)`, `p > 3`.
    LiuP4,
    /// `F1` partial sum to `(p−1)/2` mod `p^2`.
    He3,
    /// `F2` partial sum to `p−1` mod `p^2`.
    He4,
    /// Strengthening of [`PadicClaim::He3`] to mod `p^3`.
    He3Liu,
    /// Strengthening of [`PadicClaim::He4`] to mod `p^3`.
    He4Liu,
}

impl PadicClaim {
    /// The claim identifier used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            PadicClaim::Cor1 => "cor1",
            PadicClaim::Cor2 => "cor2",
            PadicClaim::Cor3 => "cor3",
            PadicClaim::Cor4 => "cor4",
            PadicClaim::Vanhamme => "vanhamme",
            PadicClaim::Swisher => "swisher",
            PadicClaim::LiuP4 => "liu_p4",
            PadicClaim::He3 => "he3",
            PadicClaim::He4 => "he4",
            PadicClaim::He3Liu => "he3_liu",
            PadicClaim::He4Liu => "he4_liu",
        }
    }

    /// The summand family of the claim's left-hand side.
    pub fn family(&self) -> ClassicalFamily {
        match self {
            PadicClaim::Cor1 | PadicClaim::Cor2 | PadicClaim::He3 | PadicClaim::He3Liu => {
                ClassicalFamily::F1
            }
            PadicClaim::Cor3 | PadicClaim::Cor4 | PadicClaim::He4 | PadicClaim::He4Liu => {
                ClassicalFamily::F2
            }
            PadicClaim::Vanhamme | PadicClaim::Swisher | PadicClaim::LiuP4 => ClassicalFamily::A2,
        }
    }

    /// Inclusive upper limit of the claim's left-hand sum at `(p, r)`.
    pub fn truncation(&self, p: u64, r: u32) -> u64 {
        let pr = p.pow(r);
        match self {
            PadicClaim::Cor1 | PadicClaim::Cor3 => pr - 1,
            PadicClaim::Cor2 | PadicClaim::Cor4 => (pr - 1) / 2,
            PadicClaim::Vanhamme | PadicClaim::Swisher | PadicClaim::LiuP4 | PadicClaim::He3
            | PadicClaim::He3Liu => (p - 1) / 2,
            PadicClaim::He4 | PadicClaim::He4Liu => p - 1,
        }
    }

    /// The precision (power of `p`) at which the claim is stated.
    pub fn precision(&self, r: u32) -> u32 {
        match self {
            PadicClaim::Cor1 | PadicClaim::Cor2 => r + 3,
            PadicClaim::Cor3 | PadicClaim::Cor4 => r + 4,
            PadicClaim::Vanhamme => 3,
            PadicClaim::Swisher => 5,
            PadicClaim::LiuP4 => 4,
            PadicClaim::He3 | PadicClaim::He4 => 2,
            PadicClaim::He3Liu | PadicClaim::He4Liu => 3,
        }
    }

    /// Check the claim's side conditions at `(p, r)`.
    pub fn validate(&self, p: u64, r: u32) -> PadicResult<()> {
        check_prime(p)?;
        if r == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        let pr_mod4 = p.pow(r) % 4;
        match self {
            PadicClaim::Cor1 | PadicClaim::Cor3 => {
                if pr_mod4 != 3 {
                    return Err(PadicError::ResidueCondition {
                        claim: self.name(),
                        requirement: 3,
                        got: pr_mod4,
                    });
                }
            }
            PadicClaim::Cor2 | PadicClaim::Cor4 => {
                if pr_mod4 != 1 {
                    return Err(PadicError::ResidueCondition {
                        claim: self.name(),
                        requirement: 1,
                        got: pr_mod4,
                    });
                }
            }
            PadicClaim::Vanhamme
            | PadicClaim::He3
            | PadicClaim::He4
            | PadicClaim::He3Liu
            | PadicClaim::He4Liu => {
                if r != 1 {
                    return Err(PadicError::PrimeOnly(self.name(), r));
                }
                if p < 5 {
                    return Err(PadicError::PrimeTooSmall(self.name(), 5, p));
                }
            }
            PadicClaim::Swisher => {
                if r != 1 {
                    return Err(PadicError::PrimeOnly(self.name(), r));
                }
                if p % 4 != 1 {
                    return Err(PadicError::ResidueCondition {
                        claim: self.name(),
                        requirement: 1,
                        got: p % 4,
                    });
                }
                if p <= 5 {
                    return Err(PadicError::PrimeTooSmall(self.name(), 7, p));
                }
            }
            PadicClaim::LiuP4 => {
                if r != 1 {
                    return Err(PadicError::PrimeOnly(self.name(), r));
                }
                if p % 4 != 3 {
                    return Err(PadicError::ResidueCondition {
                        claim: self.name(),
                        requirement: 3,
                        got: p % 4,
                    });
                }
                if p <= 3 {
                    return Err(PadicError::PrimeTooSmall(self.name(), 7, p));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for PadicClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The claim's exact left-hand side: its truncated sum at `(p, r)`.
pub fn classical_lhs(claim: PadicClaim, p: u64, r: u32) -> PadicResult<ClassicalSum> {
    claim.validate(p, r)?;
    Ok(sum_classical(claim.family(), claim.truncation(p, r)))
}

fn int_rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn residue_from_bigint(v: BigInt, p: u64, e: u32) -> PadicResult<PadicResidue> {
    let m = BigInt::from(p).pow(e);
    PadicResidue::new(
        p,
        e,
        v.mod_floor(&m).to_biguint().expect("mod_floor nonnegative"),
    )
}

/// `−p · u^{−4} mod p^e` for a unit residue `u` (used by the `A2` claims
/// with `u = Γ_p(3/4)`).
fn neg_p_over_fourth_power(u: &PadicResidue) -> PadicResult<PadicResidue> {
    let m = BigInt::from(u.modulus());
    let u4 = BigInt::from(u.value().clone()).modpow(&BigInt::from(4), &m);
    let inv = modinv(&u4, &m).expect("Gamma_p values are units");
    residue_from_bigint(-BigInt::from(u.p()) * inv, u.p(), u.e())
}

/// The closed-form right-hand side of `claim` at `(p, r)`, reduced to `e`
/// digits.  Residue conditions and precondition violations are errors;
/// the caller compares the result against the exact left-hand sum.
pub fn rhs_padic(claim: PadicClaim, p: u64, r: u32, e: u32) -> PadicResult<PadicResidue> {
    check_precision(e)?;
    claim.validate(p, r)?;
    let pr = p.pow(r);
    let pr_rat = BigRational::from(BigInt::from(pr));
    let half = int_rat(1, 2);
    let one = BigRational::one();

    match claim {
        PadicClaim::Cor1 => PadicResidue::zero(p, e),
        PadicClaim::Cor2 => {
            let m = (pr - 1) / 4;
            let ratio = pochhammer(&half, m) / pochhammer(&one, m);
            let value = &pr_rat / int_rat(16, 1)
                * ratio
                * (int_rat(16, 1) - pr_rat.pow(2) * harmonic2(m));
            rat_mod(&value, p, e)
        }
        PadicClaim::Cor3 => {
            let m = (3 * pr - 1) / 4;
            let ratio = pochhammer(&half, m) / pochhammer(&one, m);
            let value = int_rat(3, 4) * &pr_rat * ratio.pow(2);
            rat_mod(&value, p, e)
        }
        PadicClaim::Cor4 => {
            let m = (pr - 1) / 4;
            let ratio = pochhammer(&half, m) / pochhammer(&one, m);
            let brace = int_rat(8, 1) + int_rat(2, 1) * pr_rat.pow(2) * harmonic2((pr - 1) / 2)
                - pr_rat.pow(2) * harmonic2(m);
            let value = &pr_rat / int_rat(8, 1) * ratio.pow(2) * brace;
            rat_mod(&value, p, e)
        }
        PadicClaim::Vanhamme | PadicClaim::Swisher => {
            if p % 4 == 1 {
                neg_p_over_fourth_power(&gamma_p(&int_rat(3, 4), p, e)?)
            } else {
                PadicResidue::zero(p, e)
            }
        }
        PadicClaim::LiuP4 => {
            let g = gamma_p(&int_rat(1, 4), p, e)?;
            let m = BigInt::from(g.modulus());
            let g4 = BigInt::from(g.value().clone()).modpow(&BigInt::from(4), &m);
            let scale = rat_mod(&int_rat(-((p * p * p) as i64), 16), p, e)?;
            residue_from_bigint(BigInt::from(scale.value().clone()) * g4, p, e)
        }
        PadicClaim::He3 | PadicClaim::He3Liu => {
            if p % 4 == 1 {
                let m = BigInt::from(p).pow(e);
                let g_half = BigInt::from(gamma_p(&half, p, e)?.value().clone());
                let g_quarter = BigInt::from(gamma_p(&int_rat(1, 4), p, e)?.value().clone());
                let magnitude = BigInt::from(p) * g_half * g_quarter.modpow(&BigInt::from(2), &m);
                let signed = if ((p + 3) / 4) % 2 == 0 {
                    magnitude
                } else {
                    -magnitude
                };
                residue_from_bigint(signed, p, e)
            } else {
                PadicResidue::zero(p, e)
            }
        }
        PadicClaim::He4 | PadicClaim::He4Liu => {
            if p % 4 == 1 {
                let m = BigInt::from(p).pow(e);
                let g = BigInt::from(gamma_p(&int_rat(1, 4), p, e)?.value().clone());
                residue_from_bigint(-BigInt::from(p) * g.modpow(&BigInt::from(4), &m), p, e)
            } else {
                PadicResidue::zero(p, e)
            }
        }
    }
}

/// Outcome of comparing an exact rational left-hand side against a
/// right-hand residue.  `pass` means the left side is `p`-integral and
/// reduces to exactly the right-hand value; a non-`p`-integral left side
/// is a distinct failure mode, never conflated with a residue mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicVerdict {
    /// The congruence holds at the stated precision.
    pub pass: bool,
    /// The left side has nonnegative valuation at `p`.
    pub p_integral: bool,
    /// The precision demanded by the right-hand side.
    pub required: u32,
    /// `v_p(lhs − rhs)` — reported honestly, so strengthenings beyond the
    /// stated precision are visible.
    pub achieved: PadicValuation,
    /// The left side reduced at the stated precision (absent when not
    /// `p`-integral).
    pub lhs_residue: Option<PadicResidue>,
    /// Human-readable diagnostics.
    pub notes: Vec<String>,
}

impl fmt::Display for PadicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.pass { "PASS" } else { "FAIL" })?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Compare an exact left-hand side with a right-hand residue at the
/// residue's precision.  Never errors: failures are verdict states.
pub fn check_padic(lhs: &BigRational, rhs: &PadicResidue) -> PadicVerdict {
    let p = rhs.p();
    let e = rhs.e();
    let lhs_valuation = vp(lhs, p);
    if !lhs_valuation.at_least(0) {
        return PadicVerdict {
            pass: false,
            p_integral: false,
            required: e,
            achieved: lhs_valuation,
            lhs_residue: None,
            notes: vec![format!(
                "left side is not p-integral at p = {p} (v_{p} = {lhs_valuation}); \
                 cannot be congruent to an integer residue"
            )],
        };
    }
    let lhs_residue = rat_mod(lhs, p, e).expect("p-integral by the valuation check");
    let pass = lhs_residue.value() == rhs.value();
    let achieved = vp(&(lhs - rhs.to_rational()), p);
    let notes = vec![format!(
        "v_{p}(lhs − rhs) = {achieved}, congruence requires ≥ {e}"
    )];
    PadicVerdict {
        pass,
        p_integral: true,
        required: e,
        achieved,
        lhs_residue: Some(lhs_residue),
        notes,
    }
}
