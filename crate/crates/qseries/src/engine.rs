//! Internal engine for weighted q-hypergeometric partial sums.
//!
//! Every sum this workspace verifies has the shape
//!
//! ```text
//!   Σ_{k=0}^{M} [w_s·k + w_o] · ( ∏_i (c_i·q^{e_i}; q^{s_i})_k / ∏_j (...) )
//!                · q^{A·k² + B·k} · t^k
//! ```
//!
//! Evaluating each term as a separate rational function and adding with
//! reduction is quadratically wasteful: consecutive denominators share all
//! but a few binomial factors. Instead the engine keeps the running sum
//! over the *common* denominator `∏_j (...)_M` and performs exactly one
//! rational reduction at the very end:
//!
//! * the unweighted term numerator `U_k` is updated incrementally by one
//!   `(1 - c·q^m)` pass per numerator factor plus a shift and a scalar;
//! * the weight `[m] = (1 - q^m)/(1 - q)` is applied as a binomial
//!   multiplication followed by exact synthetic division by `1 - q`;
//! * when the denominator grows by the step-`k` binomials, the accumulated
//!   numerator is multiplied by the same binomials (Horner style).

use exact_poly::{BigRational, QPoly, QRat};
use num::traits::One;

/// One Pochhammer factor `(c·q^e; q^step)_k` of a summand.
#[derive(Clone, Debug)]
pub(crate) struct Factor {
    pub coeff: BigRational,
    pub exp: u64,
    pub step: u64,
}

impl Factor {
    pub(crate) fn new(coeff: BigRational, exp: u64, step: u64) -> Self {
        Factor { coeff, exp, step }
    }
}

/// Full description of a weighted hypergeometric-style sum.
#[derive(Clone, Debug)]
pub(crate) struct SumSpec {
    /// Weight `[stride·k + offset]` as a q-integer.
    pub weight_stride: u64,
    pub weight_offset: u64,
    pub numerator: Vec<Factor>,
    pub denominator: Vec<Factor>,
    /// Exponent `q^{quad·k² + lin·k}`.
    pub quad: u64,
    pub lin: u64,
    /// Geometric factor `scalar^k` (signs included, e.g. `-b`).
    pub scalar: BigRational,
}

/// `u · [m]`, computed as `u·(1 - q^m) / (1 - q)` with exact synthetic
/// division. `[0] = 0`.
fn apply_weight(u: &QPoly, m: u64) -> QPoly {
    if m == 0 {
        return QPoly::zero();
    }
    u.mul_binomial(&BigRational::one(), m as usize)
        .div_one_minus_q()
        .expect("(1 - q^m) is divisible by (1 - q)")
}

/// Evaluate `Σ_{k=0}^{upper}` of the specified summand as one reduced
/// rational function.
pub(crate) fn evaluate(spec: &SumSpec, upper: u64) -> QRat {
    let mut u = QPoly::one(); // unweighted numerator of term k over denom_k
    let mut denom = QPoly::one(); // common denominator so far
    let mut acc = apply_weight(&u, spec.weight_offset); // k = 0 term
    let scalar_is_one = spec.scalar.is_one();
    for k in 1..=upper {
        for fac in &spec.numerator {
            let m = (fac.exp + fac.step * (k - 1)) as usize;
            u = u.mul_binomial(&fac.coeff, m);
        }
        let shift = spec.quad * (2 * k - 1) + spec.lin;
        u = u.shift(shift as usize);
        if !scalar_is_one {
            u = u.scale(&spec.scalar);
        }
        for fac in &spec.denominator {
            let m = (fac.exp + fac.step * (k - 1)) as usize;
            acc = acc.mul_binomial(&fac.coeff, m);
            denom = denom.mul_binomial(&fac.coeff, m);
        }
        acc = acc.add(&apply_weight(&u, spec.weight_stride * k + spec.weight_offset));
    }
    QRat::new(acc, denom).expect("denominator is a product of nonzero binomials")
}
