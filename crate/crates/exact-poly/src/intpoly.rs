//! Internal integer-polynomial layer.
//!
//! The public API works over `BigRational`, but multiplication, exact
//! division, and GCDs are much faster over `BigInt` after clearing
//! denominators, and faster still over `u64` residues modulo word-sized
//! primes. This module provides those layers:
//!
//! * dense `Vec<BigInt>` polynomials (little-endian, no trailing zeros);
//! * exact integer polynomial division (top-down, fails fast);
//! * content / primitive-part decomposition;
//! * reduction modulo a word-sized prime and Euclidean GCD over `F_p`;
//! * CRT accumulation with symmetric lifting;
//! * deterministic Miller–Rabin primality for `u64` and a descending
//!   prime generator used by the modular GCD.

use num::bigint::Sign;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::{BigInt, Integer};

/// Dense integer polynomial, little-endian coefficients, no trailing zeros.
pub(crate) type IPoly = Vec<BigInt>;

pub(crate) fn normalize(v: &mut IPoly) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Schoolbook product of two integer polynomials.
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    normalize(&mut out);
    out
}

/// Non-negative GCD of all coefficients (zero for the zero polynomial).
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive_part(a: &[BigInt]) -> IPoly {
    let g = content(a);
    if g.is_zero() {
        return Vec::new();
    }
    let mut out: IPoly = a.iter().map(|c| c / &g).collect();
    if out.last().map_or(false, |c| c.is_negative()) {
        for c in &mut out {
            *c = -std::mem::take(c);
        }
    }
    out
}

/// Exact division of integer polynomials: returns `a / b` when the division
/// is exact over `Z[q]`, `None` otherwise. Runs top-down so a failing
/// division is usually detected within a few coefficient steps.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let n = b.len() - 1;
    let lead = &b[n];
    let qdeg = a.len() - b.len();
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); qdeg + 1];
    for i in (0..=qdeg).rev() {
        let top = std::mem::take(&mut rem[i + n]);
        if top.is_zero() {
            continue;
        }
        let (qi, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate().take(n) {
            rem[i + j] -= &qi * bj;
        }
        q[i] = qi;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    normalize(&mut q);
    Some(q)
}

// ---------------------------------------------------------------------------
// Word-sized modular arithmetic
// ---------------------------------------------------------------------------

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

/// Deterministic Miller–Rabin primality test for `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be deterministic for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Generator of distinct word-sized primes, descending from just below 2^62.
/// Primes this large make single-image CRT reconstruction succeed for the
/// small-coefficient GCDs that dominate in practice.
pub(crate) struct PrimeGen {
    next: u64,
}

impl PrimeGen {
    pub(crate) fn new() -> Self {
        PrimeGen {
            next: (1u64 << 62) - 1,
        }
    }

    pub(crate) fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

/// Reduce an integer polynomial modulo `p`, dropping leading zeros.
pub(crate) fn to_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue fits in u64"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty());
    let db = b.len() - 1;
    let binv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let f = mulmod(lead, binv, p);
            let shift = r.len() - b.len();
            for (j, bj) in b.iter().enumerate().take(db) {
                let t = mulmod(f, *bj, p);
                r[shift + j] = sub_mod(r[shift + j], t, p);
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// Monic GCD of two polynomials over `F_p` (empty vec for gcd(0, 0)).
pub(crate) fn gcd_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a, b);
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        if lc != 1 {
            let inv = inv_mod(lc, p);
            for c in &mut a {
                *c = mulmod(*c, inv, p);
            }
        }
    }
    a
}

/// CRT state: coefficient residues in `[0, modulus)` plus the modulus.
pub(crate) struct CrtAccum {
    pub(crate) residues: Vec<BigInt>,
    pub(crate) modulus: BigInt,
}

impl CrtAccum {
    pub(crate) fn new(image: &[u64], p: u64) -> Self {
        CrtAccum {
            residues: image.iter().map(|&c| BigInt::from(c)).collect(),
            modulus: BigInt::from(p),
        }
    }

    /// Fold in one more prime image of the same degree.
    pub(crate) fn combine(&mut self, image: &[u64], p: u64) {
        debug_assert_eq!(self.residues.len(), image.len());
        let pb = BigInt::from(p);
        let m_mod_p = self.modulus.mod_floor(&pb).to_u64().expect("fits");
        let m_inv = inv_mod(m_mod_p, p);
        for (r, &c) in self.residues.iter_mut().zip(image.iter()) {
            let r_mod_p = r.mod_floor(&pb).to_u64().expect("fits");
            let delta = mulmod(sub_mod(c, r_mod_p, p), m_inv, p);
            *r += &self.modulus * BigInt::from(delta);
        }
        self.modulus *= pb;
    }

    /// Symmetric lift of the residues to integers in `(-m/2, m/2]`.
    pub(crate) fn lift(&self) -> IPoly {
        let half = &self.modulus >> 1;
        let mut out: IPoly = self
            .residues
            .iter()
            .map(|r| {
                if r > &half {
                    r - &self.modulus
                } else {
                    r.clone()
                }
            })
            .collect();
        normalize(&mut out);
        out
    }
}

/// Construct a `BigInt` from sign and magnitude parts (used by callers that
/// track scalars separately).
#[allow(dead_code)]
pub(crate) fn signed(sign: Sign, mag: num::BigUint) -> BigInt {
    BigInt::from_biguint(sign, mag)
}
