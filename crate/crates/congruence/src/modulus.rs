//! Factored moduli: cyclotomic powers plus specialized binomial factors.

use crate::{CongruenceError, CongruenceResult};
use exact_poly::{cyclotomic, poly_gcd, BigRational, QPoly};
#[cfg(test)]
use exact_poly::q_integer;
use num::traits::{One, Zero};
use std::fmt;

/// How a modulus factor should be diagnosed in verdict reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// The cyclotomic polynomial `Φ_d(q)`; irreducible, so the order of
    /// vanishing of the difference at it is a true valuation.
    Cyclotomic(u64),
    /// A specialized binomial such as `1 − a·q^n`; not factored into
    /// irreducibles, so diagnostics are remainder-based.
    Specialized,
}

/// One factor of a modulus: a nonconstant polynomial raised to a power.
#[derive(Debug, Clone)]
pub struct ModulusFactor {
    poly: QPoly,
    multiplicity: u32,
    kind: FactorKind,
    label: String,
}

impl ModulusFactor {
    /// A cyclotomic factor `Φ_d(q)^multiplicity`.
    pub fn cyclotomic(d: u64, multiplicity: u32) -> CongruenceResult<Self> {
        Ok(ModulusFactor {
            poly: cyclotomic(d)?,
            multiplicity,
            kind: FactorKind::Cyclotomic(d),
            label: format!("Phi_{d}"),
        })
    }

    /// A specialized factor, displayed by its polynomial.
    pub fn specialized(poly: QPoly, multiplicity: u32) -> Self {
        let label = format!("({poly})");
        ModulusFactor {
            poly,
            multiplicity,
            kind: FactorKind::Specialized,
            label,
        }
    }

    /// The underlying polynomial (without the power).
    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    /// The exponent this factor carries in the modulus.
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Whether the factor is cyclotomic or specialized.
    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    /// Human-readable name used in diagnostics (`Phi_7`, `(-2*q^3 + 1)`, …).
    pub fn label(&self) -> &str {
        &self.label
    }
}

impl fmt::Display for ModulusFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity == 1 {
            write!(f, "{}", self.label)
        } else {
            write!(f, "{}^{}", self.label, self.multiplicity)
        }
    }
}

/// A modulus in factored form.  Construction checks that every factor is
/// nonconstant with positive multiplicity and that the factors are pairwise
/// coprime; the expanded product is precomputed.
#[derive(Debug, Clone)]
pub struct Modulus {
    factors: Vec<ModulusFactor>,
    product: QPoly,
}

impl Modulus {
    /// Validate the factor list and expand the product.
    pub fn new(factors: Vec<ModulusFactor>) -> CongruenceResult<Self> {
        for f in &factors {
            if f.poly.is_constant() {
                return Err(CongruenceError::ConstantFactor(f.label.clone()));
            }
            if f.multiplicity == 0 {
                return Err(CongruenceError::ConstantFactor(format!("{}^0", f.label)));
            }
        }
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                let g = poly_gcd(&a.poly, &b.poly)?;
                if !g.is_constant() {
                    return Err(CongruenceError::NotCoprime(
                        a.label.clone(),
                        b.label.clone(),
                    ));
                }
            }
        }
        let mut product = QPoly::one();
        for f in &factors {
            product = product.mul(&f.poly.pow(f.multiplicity));
        }
        Ok(Modulus { factors, product })
    }

    /// The validated factor list.
    pub fn factors(&self) -> &[ModulusFactor] {
        &self.factors
    }

    /// The expanded modulus `∏ factor^multiplicity`.
    pub fn product(&self) -> &QPoly {
        &self.product
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// The congruence families that own a modulus shape.  Variant names follow
/// the public claim identifiers used across the tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QModulusClaim {
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
    GuoWy,
}

impl QModulusClaim {
    /// The claim identifier as used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            QModulusClaim::Thm1 => "thm1",
            QModulusClaim::Thm2 => "thm2",
            QModulusClaim::Thm3 => "thm3",
            QModulusClaim::Thm4 => "thm4",
            QModulusClaim::Thm5 => "thm5",
            QModulusClaim::Thm6 => "thm6",
            QModulusClaim::Thm7 => "thm7",
            QModulusClaim::Thm8 => "thm8",
            QModulusClaim::Lemma1 => "lemma1",
            QModulusClaim::Lemma2 => "lemma2",
            QModulusClaim::GuoWy => "guo_wy",
        }
    }

    /// Multiplicity carried by `Φ_n` itself: the `e` in `[n]·Φ_n(q)^e`
    /// plus the single copy of `Φ_n` inside `[n]`.
    fn phi_n_multiplicity(&self) -> u32 {
        match self {
            QModulusClaim::Thm1 | QModulusClaim::Thm2 => 4,
            QModulusClaim::Thm3 | QModulusClaim::Thm4 => 5,
            QModulusClaim::GuoWy => 3,
            _ => 1,
        }
    }

    fn takes_params(&self) -> bool {
        matches!(
            self,
            QModulusClaim::Thm5 | QModulusClaim::Thm6 | QModulusClaim::Thm7 | QModulusClaim::Thm8
        )
    }

    /// Whether the parametric modulus carries both `1 − b·q^n` and
    /// `b − q^n` (the cubic families) or only `b − q^n`.
    fn full_b_pair(&self) -> bool {
        matches!(self, QModulusClaim::Thm7 | QModulusClaim::Thm8)
    }
}

impl fmt::Display for QModulusClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// `c0 + cn·q^n`.
pub(crate) fn affine(c0: BigRational, cn: BigRational, n: usize) -> QPoly {
    QPoly::constant(c0).add(&QPoly::monomial(cn, n))
}

/// `1 − c·q^n`.
pub(crate) fn one_minus(c: &BigRational, n: usize) -> QPoly {
    affine(BigRational::one(), -c.clone(), n)
}

/// `c − q^n`.
pub(crate) fn minus_q_pow(c: &BigRational, n: usize) -> QPoly {
    affine(c.clone(), -BigRational::one(), n)
}

/// Build the factored modulus attached to a congruence family at odd index
/// `n`, with parameters `(a, b)` exactly when the family is parametric.
///
/// The `[n]·Φ_n(q)^e` moduli are stored as `Φ_d(q)` for every divisor
/// `1 < d < n` together with `Φ_n(q)^{e+1}`, using `[n] = ∏_{d|n, d>1} Φ_d`.
/// Parametric families append their specialized binomial factors.
pub fn modulus_for(
    claim: QModulusClaim,
    n: u64,
    a: Option<&BigRational>,
    b: Option<&BigRational>,
) -> CongruenceResult<Modulus> {
    if n < 3 || n % 2 == 0 {
        return Err(CongruenceError::BadOddN(claim.name(), n));
    }
    let mut factors = Vec::new();
    for d in 2..=n {
        if n % d != 0 {
            continue;
        }
        let mult = if d == n { claim.phi_n_multiplicity() } else { 1 };
        factors.push(ModulusFactor::cyclotomic(d, mult)?);
    }
    if claim.takes_params() {
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CongruenceError::MissingParams(claim.name())),
        };
        if a.is_zero() || b.is_zero() {
            return Err(CongruenceError::Degenerate(
                "parameters must be nonzero".into(),
            ));
        }
        let n = n as usize;
        factors.push(ModulusFactor::specialized(one_minus(a, n), 1));
        factors.push(ModulusFactor::specialized(minus_q_pow(a, n), 1));
        if claim.full_b_pair() {
            factors.push(ModulusFactor::specialized(one_minus(b, n), 1));
        }
        factors.push(ModulusFactor::specialized(minus_q_pow(b, n), 1));
    } else if a.is_some() || b.is_some() {
        return Err(CongruenceError::UnexpectedParams(claim.name()));
    }
    Modulus::new(factors)
}

/// The expanded polynomial `[n]·Φ_n(q)^e`, for tests and cross-checks.
#[cfg(test)]
pub(crate) fn bracket_phi_power(n: u64, e: u32) -> CongruenceResult<QPoly> {
    Ok(q_integer(n).mul(&cyclotomic(n)?.pow(e)))
}
