//! The catalog: every claim the harness can verify, with a self-contained
//! statement of exactly what is checked.
//!
//! Notation used in the statements: `[m] = 1 + q + ... + q^(m-1)` is the
//! q-integer, `Phi_m(q)` the m-th cyclotomic polynomial, `[m]!` would never
//! appear; `(c; x)_k = (1-c)(1-c*x)...(1-c*x^(k-1))` the finite q-shifted
//! factorial, `(c; x)_inf` its infinite analogue as a formal series,
//! `(x)_k = x(x+1)...(x+k-1)` the rising factorial, `H2(m) =
//! sum_{j=1}^{m} 1/j^2`, and `Gamma_p` the p-adic gamma function. All
//! q-congruences are checked for both truncations `M = (n-1)/2` and
//! `M = n-1`.

use crate::ClaimId;

/// What kind of verification a claim requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// A congruence between explicit rational functions of q.
    QCongruence,
    /// A q-congruence depending on sampled nonzero parameters a, b.
    ParametricQCongruence,
    /// A congruence between a rational number and a p-adic residue.
    PAdic,
    /// A formal-power-series identity checked coefficientwise.
    SeriesIdentity,
}

impl ClaimKind {
    /// Stable string form used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::QCongruence => "q-congruence",
            ClaimKind::ParametricQCongruence => "parametric-q-congruence",
            ClaimKind::PAdic => "p-adic",
            ClaimKind::SeriesIdentity => "series-identity",
        }
    }
}

impl std::fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A catalogued claim: identifier, one-line description, and the full
/// statement that the runner verifies.
#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: ClaimId,
    pub kind: ClaimKind,
    pub description: &'static str,
    pub statement: &'static str,
}

/// The full catalog in canonical order.
pub fn catalog() -> &'static [Claim] {
    CATALOG
}

/// Catalog entry for one claim.
pub fn claim_info(id: ClaimId) -> &'static Claim {
    &CATALOG[ClaimId::ALL.iter().position(|c| *c == id).unwrap()]
}

static CATALOG: &[Claim] = &[
    Claim {
        id: ClaimId::Thm1,
        kind: ClaimKind::QCongruence,
        description: "Vanishing of the [6k+1] quartic q-sum modulo [n]*Phi_n(q)^3",
        statement: "For odd n == 3 (mod 4): \
            sum_{k=0}^{n-1} [6k+1] (q;q^2)_k^3 (q;q^4)_k / ((q^2;q^2)_k (q^4;q^4)_k^3) \
            * q^(k^2+k) == 0 (mod [n] Phi_n(q)^3).",
    },
    Claim {
        id: ClaimId::Thm2,
        kind: ClaimKind::QCongruence,
        description: "Closed form of the [6k+1] quartic q-sum modulo [n]*Phi_n(q)^3",
        statement: "For n == 1 (mod 4), n >= 5, M = (n-1)/2 or n-1, and m = (n-1)/4: \
            sum_{k=0}^{M} [6k+1] (q;q^2)_k^3 (q;q^4)_k / ((q^2;q^2)_k (q^4;q^4)_k^3) \
            q^(k^2+k) == [n] q^(-m) (q^2;q^4)_m/(q^4;q^4)_m \
            (1 - [n]^2 sum_{j=1}^{m} q^(4j)/[4j]^2) (mod [n] Phi_n(q)^3).",
    },
    Claim {
        id: ClaimId::Thm3,
        kind: ClaimKind::QCongruence,
        description: "Closed form of the [6k+1] quintic q-sum modulo [n]*Phi_n(q)^4, n == 3 (mod 4)",
        statement: "For n == 3 (mod 4) and m = (3n-1)/4: \
            sum_{k=0}^{n-1} [6k+1] (q;q^2)_k^2 (q^2;q^4)_k (q;q^4)_k^2 / \
            ((q^2;q^2)_k^2 (q^4;q^4)_k^3) q^(2k) == \
            [3n] q^(2n) (2-q^n)/(1+q^n)^2 ((q^2;q^4)_m/(q^4;q^4)_m)^2 \
            (mod [n] Phi_n(q)^4).",
    },
    Claim {
        id: ClaimId::Thm4,
        kind: ClaimKind::QCongruence,
        description: "Closed form of the [6k+1] quintic q-sum modulo [n]*Phi_n(q)^4, n == 1 (mod 4)",
        statement: "For n == 1 (mod 4), n >= 5, M = (n-1)/2 or n-1, and m = (n-1)/4: \
            sum_{k=0}^{M} [6k+1] (q;q^2)_k^2 (q^2;q^4)_k (q;q^4)_k^2 / \
            ((q^2;q^2)_k^2 (q^4;q^4)_k^3) q^(2k) == \
            [n] ((q^2;q^4)_m/(q^4;q^4)_m)^2 \
            (1 + [n]^2 (2-q^n) sum_{j=1}^{(n-1)/2} (-1)^(j+1) q^(2j)/[2j]^2) \
            (mod [n] Phi_n(q)^4).",
    },
    Claim {
        id: ClaimId::Thm5,
        kind: ClaimKind::ParametricQCongruence,
        description: "Two-parameter lift of the quartic q-sum, n == 3 (mod 4)",
        statement: "For odd n == 3 (mod 4), generic nonzero a, b (a != b, ab != 1), \
            m1 = (n+1)/4, m2 = (3n-1)/4: \
            sum_{k=0}^{n-1} [6k+1] (q;q^2)_k (aq;q^2)_k (q/a;q^2)_k (q/b^3;q^4)_k / \
            ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (b^3 q^2;q^2)_k) q^(k^2+k) b^(3k) == \
            W1 * (q^3;q^4)_m1 (1/b^3;q^4)_m1 / ((1/q;q^4)_m1 (b^3 q^2;q^4)_m1) (b^3/q)^m1 \
            + W2 * (q^3;q^4)_m2 (q^5;q^4)_m2 / ((aq^4;q^4)_m2 (q^4/a;q^4)_m2) \
            (mod [n] (1-a q^n)(a-q^n)(b-q^n)), where \
            W1 = (b-q^n)(ab-1-a^2+a q^n)/((a-b)(1-ab)) and \
            W2 = (1-a q^n)(a-q^n)/((a-b)(1-ab)).",
    },
    Claim {
        id: ClaimId::Thm6,
        kind: ClaimKind::ParametricQCongruence,
        description: "Two-parameter lift of the quartic q-sum, n == 1 (mod 4)",
        statement: "For n == 1 (mod 4), n >= 5, generic nonzero a, b (a != b, ab != 1), \
            M = (n-1)/2 or n-1, and m = (n-1)/4: \
            sum_{k=0}^{M} [6k+1] (q;q^2)_k (aq;q^2)_k (q/a;q^2)_k (q/b;q^4)_k / \
            ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (bq^2;q^2)_k) q^(k^2+k) b^k == \
            W1 * (q^5;q^4)_m (q^2/b;q^4)_m / ((q;q^4)_m (b q^4;q^4)_m) (b/q)^m \
            + W2 * (q^3;q^4)_m (q^5;q^4)_m / ((a q^4;q^4)_m (q^4/a;q^4)_m) \
            (mod [n] (1-a q^n)(a-q^n)(b-q^n)), with W1, W2 as in thm5.",
    },
    Claim {
        id: ClaimId::Thm7,
        kind: ClaimKind::ParametricQCongruence,
        description: "Two-parameter lift of the quintic q-sum, n == 3 (mod 4)",
        statement: "For odd n == 3 (mod 4), generic nonzero a, b (a != b, ab != 1), \
            m1 = (3n-1)/4, m2 = (n+1)/4: \
            sum_{k=0}^{n-1} [6k+1] (aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k (b^3 q;q^4)_k \
            (q/b^3;q^4)_k / ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (q^2/b^3;q^2)_k \
            (b^3 q^2;q^2)_k) q^(2k) == \
            V1 * (q^5;q^4)_m1 (aq^2;q^4)_m1 (q^2/a;q^4)_m1 / \
            ((q;q^4)_m1 (q^4/a;q^4)_m1 (aq^4;q^4)_m1) \
            + V2 * (q^3;q^4)_m2 (b^3;q^4)_m2 (1/b^3;q^4)_m2 / \
            ((1/q;q^4)_m2 (q^2/b^3;q^4)_m2 (b^3 q^2;q^4)_m2) \
            (mod [n] (1-a q^n)(a-q^n)(1-b q^n)(b-q^n)), where \
            V1 = (1-a q^n)(a-q^n)(-1-b^2+b q^n)/((b-a)(1-ab)) and \
            V2 = (1-b q^n)(b-q^n)(-1-a^2+a q^n)/((a-b)(1-ab)).",
    },
    Claim {
        id: ClaimId::Thm8,
        kind: ClaimKind::ParametricQCongruence,
        description: "Two-parameter lift of the quintic q-sum, n == 1 (mod 4)",
        statement: "For n == 1 (mod 4), n >= 5, generic nonzero a, b (a != b, ab != 1), \
            M = (n-1)/2 or n-1, and m = (n-1)/4: \
            sum_{k=0}^{M} [6k+1] (aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k (bq;q^4)_k (q/b;q^4)_k / \
            ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (q^2/b;q^2)_k (bq^2;q^2)_k) q^(2k) == \
            V1 * (q^5;q^4)_m (aq^2;q^4)_m (q^2/a;q^4)_m / \
            ((q;q^4)_m (q^4/a;q^4)_m (aq^4;q^4)_m) \
            + V2 * (q^5;q^4)_m (bq^2;q^4)_m (q^2/b;q^4)_m / \
            ((q;q^4)_m (q^4/b;q^4)_m (bq^4;q^4)_m) \
            (mod [n] (1-a q^n)(a-q^n)(1-b q^n)(b-q^n)), with V1, V2 as in thm7.",
    },
    Claim {
        id: ClaimId::Lemma1,
        kind: ClaimKind::ParametricQCongruence,
        description: "Vanishing of the two-parameter quartic sum modulo [n]",
        statement: "For odd n >= 3, any nonzero a, b, and M = (n-1)/2 or n-1: \
            sum_{k=0}^{M} [6k+1] (q;q^2)_k (aq;q^2)_k (q/a;q^2)_k (q/b;q^4)_k / \
            ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (bq^2;q^2)_k) q^(k^2+k) b^k == 0 \
            (mod [n]).",
    },
    Claim {
        id: ClaimId::Lemma2,
        kind: ClaimKind::ParametricQCongruence,
        description: "Vanishing of the two-parameter quintic sum modulo [n]",
        statement: "For odd n >= 3, any nonzero a, b, and M = (n-1)/2 or n-1: \
            sum_{k=0}^{M} [6k+1] (aq;q^2)_k (q/a;q^2)_k (q^2;q^4)_k (bq;q^4)_k (q/b;q^4)_k / \
            ((q^4;q^4)_k (q^4/a;q^4)_k (aq^4;q^4)_k (q^2/b;q^2)_k (bq^2;q^2)_k) q^(2k) == 0 \
            (mod [n]).",
    },
    Claim {
        id: ClaimId::Cor1,
        kind: ClaimKind::PAdic,
        description: "Vanishing of the (6k+1) quartic sum modulo p^(r+3)",
        statement: "For prime powers p^r == 3 (mod 4), p > 3: \
            sum_{k=0}^{p^r-1} (6k+1) (1/2)_k^3 (1/4)_k / (k!^4 4^k) == 0 (mod p^(r+3)).",
    },
    Claim {
        id: ClaimId::Cor2,
        kind: ClaimKind::PAdic,
        description: "Closed form of the (6k+1) quartic sum modulo p^(r+3)",
        statement: "For prime powers p^r == 1 (mod 4), p > 3, and m = (p^r-1)/4: \
            sum_{k=0}^{(p^r-1)/2} (6k+1) (1/2)_k^3 (1/4)_k / (k!^4 4^k) == \
            (p^r/16) ((1/2)_m/m!) (16 - p^(2r) H2(m)) (mod p^(r+3)).",
    },
    Claim {
        id: ClaimId::Cor3,
        kind: ClaimKind::PAdic,
        description: "Closed form of the (6k+1) quintic sum modulo p^(r+4), p^r == 3 (mod 4)",
        statement: "For prime powers p^r == 3 (mod 4), p > 3, and m = (3p^r-1)/4: \
            sum_{k=0}^{p^r-1} (6k+1) (1/2)_k^3 (1/4)_k^2 / k!^5 == \
            (3 p^r/4) ((1/2)_m/m!)^2 (mod p^(r+4)).",
    },
    Claim {
        id: ClaimId::Cor4,
        kind: ClaimKind::PAdic,
        description: "Closed form of the (6k+1) quintic sum modulo p^(r+4), p^r == 1 (mod 4)",
        statement: "For prime powers p^r == 1 (mod 4), p > 3, and m = (p^r-1)/4: \
            sum_{k=0}^{(p^r-1)/2} (6k+1) (1/2)_k^3 (1/4)_k^2 / k!^5 == \
            (p^r/8) ((1/2)_m/m!)^2 (8 + 2 p^(2r) H2((p^r-1)/2) - p^(2r) H2(m)) \
            (mod p^(r+4)).",
    },
    Claim {
        id: ClaimId::He3,
        kind: ClaimKind::PAdic,
        description: "Gamma_p evaluation of the (6k+1) quartic sum modulo p^2",
        statement: "For primes p >= 5: sum_{k=0}^{(p-1)/2} (6k+1) (1/2)_k^3 (1/4)_k / \
            (k!^4 4^k) == (-1)^((p+3)/4) p Gamma_p(1/2) Gamma_p(1/4)^2 (mod p^2) \
            if p == 1 (mod 4), and == 0 (mod p^2) if p == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::He4,
        kind: ClaimKind::PAdic,
        description: "Gamma_p evaluation of the (6k+1) quintic sum modulo p^2",
        statement: "For primes p >= 5: sum_{k=0}^{p-1} (6k+1) (1/2)_k^3 (1/4)_k^2 / k!^5 == \
            -p Gamma_p(1/4)^4 (mod p^2) if p == 1 (mod 4), and == 0 (mod p^2) \
            if p == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::He3Liu,
        kind: ClaimKind::PAdic,
        description: "Strengthening of he3 to modulus p^3",
        statement: "For primes p >= 5 the congruence of he3 holds modulo p^3: \
            sum_{k=0}^{(p-1)/2} (6k+1) (1/2)_k^3 (1/4)_k / (k!^4 4^k) == \
            (-1)^((p+3)/4) p Gamma_p(1/2) Gamma_p(1/4)^2 (mod p^3) if p == 1 (mod 4), \
            and == 0 (mod p^3) if p == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::He4Liu,
        kind: ClaimKind::PAdic,
        description: "Strengthening of he4 to modulus p^3",
        statement: "For primes p >= 5 the congruence of he4 holds modulo p^3: \
            sum_{k=0}^{p-1} (6k+1) (1/2)_k^3 (1/4)_k^2 / k!^5 == -p Gamma_p(1/4)^4 \
            (mod p^3) if p == 1 (mod 4), and == 0 (mod p^3) if p == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::Vanhamme,
        kind: ClaimKind::PAdic,
        description: "Alternating (4k+1) quintic sum modulo p^3",
        statement: "For primes p >= 5: sum_{k=0}^{(p-1)/2} (-1)^k (4k+1) (1/2)_k^5 / k!^5 == \
            -p/Gamma_p(3/4)^4 (mod p^3) if p == 1 (mod 4), and == 0 (mod p^3) \
            if p == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::Swisher,
        kind: ClaimKind::PAdic,
        description: "Strengthening of vanhamme to modulus p^5 for p == 1 (mod 4)",
        statement: "For primes p == 1 (mod 4), p > 5: \
            sum_{k=0}^{(p-1)/2} (-1)^k (4k+1) (1/2)_k^5 / k!^5 == -p/Gamma_p(3/4)^4 \
            (mod p^5).",
    },
    Claim {
        id: ClaimId::LiuP4,
        kind: ClaimKind::PAdic,
        description: "Alternating (4k+1) quintic sum modulo p^4 for p == 3 (mod 4)",
        statement: "For primes p == 3 (mod 4), p > 3: \
            sum_{k=0}^{(p-1)/2} (-1)^k (4k+1) (1/2)_k^5 / k!^5 == \
            -(p^3/16) Gamma_p(1/4)^4 (mod p^4).",
    },
    Claim {
        id: ClaimId::GuoWy,
        kind: ClaimKind::QCongruence,
        description: "Alternating [4k+1] quintic q-sum modulo [n]*Phi_n(q)^2",
        statement: "For odd n >= 3 and M = (n-1)/2 or n-1: \
            sum_{k=0}^{M} (-1)^k [4k+1] (q;q^2)_k^4 (q^2;q^4)_k / \
            ((q^2;q^2)_k^4 (q^4;q^4)_k) q^k == [n] ((q^2;q^4)_m/(q^4;q^4)_m)^2 \
            (mod [n] Phi_n(q)^2) with m = (n-1)/4 when n == 1 (mod 4), \
            and == 0 (mod [n] Phi_n(q)^2) when n == 3 (mod 4).",
    },
    Claim {
        id: ClaimId::Gr,
        kind: ClaimKind::SeriesIdentity,
        description: "Four-parameter product summation, checked coefficientwise",
        statement: "As formal power series in q (checked coefficientwise through the \
            requested order, for several sampled nonzero rational a, b, d, f): \
            sum_{k>=0} (1-a q^(3k))/(1-a) * \
            (a;q)_k (b;q)_k (q/b;q)_k (d;q^2)_k (f;q^2)_k (a^2 q/(df);q^2)_k / \
            ((q^2;q^2)_k (a q^2/b;q^2)_k (a b q;q^2)_k (a q/d;q)_k (a q/f;q)_k \
            (d f/a;q)_k) q^k, plus the prefactor \
            (a q, f/a, b, q/b;q)_inf (d, a^2 q/(d f), f q^2/d, d f^2 q/a^2;q^2)_inf / \
            ((a/f, f q/a, a q/d, d f/a;q)_inf (a q^2/b, a b q, f q/(a b), b f/a;q^2)_inf) \
            times the balanced series \
            sum_{j>=0} (f;q^2)_j (b f/a;q^2)_j (f q/(a b);q^2)_j / \
            ((q^2;q^2)_j (f q^2/d;q^2)_j (d f^2 q/a^2;q^2)_j) q^(2j), equals \
            (a q, f/a;q)_inf (a q^2/(b d), a b q/d, b d f/a, d f q/(a b);q^2)_inf / \
            ((a q/d, d f/a;q)_inf (a q^2/b, a b q, b f/a, f q/(a b);q^2)_inf).",
    },
    Claim {
        id: ClaimId::GrA,
        kind: ClaimKind::SeriesIdentity,
        description: "Three-parameter limiting summation, checked coefficientwise",
        statement: "As formal power series in q (checked coefficientwise through the \
            requested order, for several sampled nonzero rational a, b, f): \
            sum_{k>=0} (1-a q^(3k))/(1-a) * (a;q)_k (b;q)_k (q/b;q)_k (f;q^2)_k / \
            ((q^2;q^2)_k (a q^2/b;q^2)_k (a b q;q^2)_k (a q/f;q)_k) \
            (a/f)^k q^(k(k+1)/2) equals \
            (a q, a q^2, a q^2/(b f), a b q/f;q^2)_inf / \
            (a q/f, a q^2/f, a q^2/b, a b q;q^2)_inf.",
    },
    Claim {
        id: ClaimId::Crt,
        kind: ClaimKind::ParametricQCongruence,
        description: "Reconstruction coefficients are 1 modulo their factor block",
        statement: "For odd n and generic nonzero a, b (a != b, ab != 1, |a| != 1, \
            |b| != 1): (b-q^n)(ab-1-a^2+a q^n) == (a-b)(1-ab) \
            (mod (1-a q^n)(a-q^n)); (1-a q^n)(a-q^n) == (a-b)(1-ab) (mod (b-q^n)); \
            (1-b q^n)(b-q^n)(-1-a^2+a q^n) == (a-b)(1-ab) (mod (1-a q^n)(a-q^n)); \
            and (1-a q^n)(a-q^n)(-1-b^2+b q^n) == (b-a)(1-ba) \
            (mod (1-b q^n)(b-q^n)). These make the two-term right sides of \
            thm5-thm8 match the sum modulo each factor of the product modulus.",
    },
];
