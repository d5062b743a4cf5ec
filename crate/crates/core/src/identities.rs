//! Exactly evaluated Fibonacci/Lucas identities.
//!
//! Each `lemmaN_eval` computes both sides of one identity from fast-doubling
//! values and reports whether they agree. The Lucas-sum brackets are public
//! because the series B-sequences are built from the same products.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::QuadRat;
use crate::lucas::{fib_checked, lucas_checked, mul_index, pow_index};

/// Both sides of an identity and whether they are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: QuadRat,
    pub rhs: QuadRat,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(lhs: impl Into<QuadRat>, rhs: impl Into<QuadRat>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let holds = lhs == rhs;
        IdentityCheck { lhs, rhs, holds }
    }
}

/// Which sequence an identity is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqKind {
    Fib,
    Lucas,
}

impl SeqKind {
    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Fib => "fib",
            SeqKind::Lucas => "lucas",
        }
    }
}

/// `(−1)^e`
pub(crate) fn neg1_pow(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

fn seq_checked(kind: SeqKind, n: u64) -> Result<BigInt> {
    match kind {
        SeqKind::Fib => fib_checked(n),
        SeqKind::Lucas => lucas_checked(n),
    }
}

/// `1 + α^{2n}` equals `√5·F_n·α^n` (odd `n`) or `L_n·α^n` (even `n`).
pub fn lemma1_eval(n: u64) -> Result<IdentityCheck> {
    require(n >= 1, "n must be at least 1")?;
    let two_n = mul_index(&[2, n])?;
    let lhs = QuadRat::one() + QuadRat::alpha().pow(two_n);
    let alpha_n = crate::lucas::alpha_pow(i64::try_from(n).map_err(|_| {
        Error::IndexBound { index: Some(n), bound: crate::lucas::index_bound() }
    })?);
    let rhs = if n % 2 == 1 {
        QuadRat::sqrt5() * QuadRat::from_integer(fib_checked(n)?) * alpha_n
    } else {
        QuadRat::from_integer(lucas_checked(n)?) * alpha_n
    };
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `F_{2^n·m} = F_m·L_m·L_{2m}···L_{2^{n−1}m}`.
pub fn lemma2_eval(m: u64, n: u64) -> Result<IdentityCheck> {
    require(m >= 1, "m must be at least 1")?;
    require(n >= 1, "n must be at least 1")?;
    let lhs = fib_checked(mul_index(&[pow_index(2, n)?, m])?)?;
    let mut rhs = fib_checked(m)?;
    for j in 0..n {
        rhs *= lucas_checked(mul_index(&[pow_index(2, j)?, m])?)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The bracket for multiplier `q`:
/// fib: `(−1)^{mq} + Σ_{k<m} (−1)^{kq} L_{2(m−k)q}`,
/// lucas: the same with exponents `m(q+1)` and `k(q+1)`.
pub fn lemma3_bracket(kind: SeqKind, q: u64, m: u64) -> Result<BigInt> {
    let sign_base = match kind {
        SeqKind::Fib => q,
        SeqKind::Lucas => q.wrapping_add(1),
    } % 2;
    let mut acc = neg1_pow(m * sign_base);
    for k in 0..m {
        let l = lucas_checked(mul_index(&[2, m - k, q])?)?;
        acc += neg1_pow(k * sign_base) * l;
    }
    Ok(acc)
}

/// `X_{(2m+1)q} = X_q · bracket` for `X ∈ {F, L}`.
pub fn lemma3_eval(kind: SeqKind, q: u64, m: u64) -> Result<IdentityCheck> {
    require(q >= 1, "q must be at least 1")?;
    require(m >= 1, "m must be at least 1")?;
    let lhs = seq_checked(kind, mul_index(&[2 * m + 1, q])?)?;
    let rhs = seq_checked(kind, q)? * lemma3_bracket(kind, q, m)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `X_{(2m+1)^n} = ∏_{j<n} bracket((2m+1)^j)`.
pub fn lemma4_eval(kind: SeqKind, m: u64, n: u64) -> Result<IdentityCheck> {
    require(m >= 1, "m must be at least 1")?;
    require(n >= 1, "n must be at least 1")?;
    let p = 2 * m + 1;
    let lhs = seq_checked(kind, pow_index(p, n)?)?;
    let mut rhs = BigInt::one();
    for j in 0..n {
        rhs *= lemma3_bracket(kind, pow_index(p, j)?, m)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `Σ_{k=1}^{p/2} L_{(2k−1)·m·p^j}` (used by [`lemma5_eval`] and T6).
pub fn even_p_lucas_sum(p: u64, m: u64, j: u64) -> Result<BigInt> {
    let base = mul_index(&[m, pow_index(p, j)?])?;
    let mut acc = BigInt::zero();
    for k in 1..=p / 2 {
        acc += lucas_checked(mul_index(&[2 * k - 1, base])?)?;
    }
    Ok(acc)
}

/// `Σ_{k=1}^{(p−1)/2} L_{2k·m·p^j}` (used by [`lemma6_eval`] and T7).
pub fn odd_p_lucas_sum(p: u64, m: u64, j: u64) -> Result<BigInt> {
    let base = mul_index(&[m, pow_index(p, j)?])?;
    let mut acc = BigInt::zero();
    for k in 1..=(p - 1) / 2 {
        acc += lucas_checked(mul_index(&[2 * k, base])?)?;
    }
    Ok(acc)
}

/// `Σ_{k=1}^{(p−1)/2} (−1)^k L_{2k·p^j}` (used by [`lemma7_eval`] and T8).
pub fn odd_p_alternating_sum(p: u64, j: u64) -> Result<BigInt> {
    let base = pow_index(p, j)?;
    let mut acc = BigInt::zero();
    for k in 1..=(p - 1) / 2 {
        acc += neg1_pow(k) * lucas_checked(mul_index(&[2 * k, base])?)?;
    }
    Ok(acc)
}

/// `Σ_{k=1}^{p/2} L_{(2k−1)·p^{j+1}/2}` (used by [`lemma8_eval`] and T9).
pub fn lemma8_lucas_sum(p: u64, j: u64) -> Result<BigInt> {
    let half = pow_index(p, j + 1)? / 2;
    let mut acc = BigInt::zero();
    for k in 1..=p / 2 {
        acc += lucas_checked(mul_index(&[2 * k - 1, half])?)?;
    }
    Ok(acc)
}

fn require_even_p(p: u64) -> Result<()> {
    require(p >= 2 && p.is_multiple_of(2), "p must be even")
}

fn require_odd_p(p: u64) -> Result<()> {
    require(p >= 3 && p % 2 == 1, "p must be odd and at least 3")
}

/// Even `p`: `F_{mp^n} = F_{mp} ∏_{j=1}^{n−1} Σ_{k=1}^{p/2} L_{(2k−1)mp^j}`.
pub fn lemma5_eval(p: u64, m: u64, n: u64) -> Result<IdentityCheck> {
    require_even_p(p)?;
    require(m >= 1, "m must be at least 1")?;
    require(n >= 1, "n must be at least 1")?;
    let lhs = fib_checked(mul_index(&[m, pow_index(p, n)?])?)?;
    let mut rhs = fib_checked(mul_index(&[m, p])?)?;
    for j in 1..n {
        rhs *= even_p_lucas_sum(p, m, j)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Odd `p`, even `m`:
/// `F_{mp^n} = F_{mp} ∏_{j=1}^{n−1} [1 + Σ_{k=1}^{(p−1)/2} L_{2kmp^j}]`.
///
/// The Lucas index carries the factor `k`; without it the product is wrong
/// for every `p ≥ 5` (see `oracle::lemma6_literal_eval`).
pub fn lemma6_eval(p: u64, m: u64, n: u64) -> Result<IdentityCheck> {
    require_odd_p(p)?;
    require(m >= 2 && m.is_multiple_of(2), "m must be even")?;
    require(n >= 1, "n must be at least 1")?;
    let lhs = fib_checked(mul_index(&[m, pow_index(p, n)?])?)?;
    let mut rhs = fib_checked(mul_index(&[m, p])?)?;
    for j in 1..n {
        rhs *= BigInt::one() + odd_p_lucas_sum(p, m, j)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Odd `p`:
/// `F_{p^n} = (−1)^{(n−1)(p−1)/2} F_p ∏_{j=1}^{n−1} [1 + Σ_k (−1)^k L_{2kp^j}]`.
pub fn lemma7_eval(p: u64, n: u64) -> Result<IdentityCheck> {
    require_odd_p(p)?;
    require(n >= 1, "n must be at least 1")?;
    let lhs = fib_checked(pow_index(p, n)?)?;
    let mut rhs = neg1_pow((n - 1) * ((p - 1) / 2)) * fib_checked(p)?;
    for j in 1..n {
        rhs *= BigInt::one() + odd_p_alternating_sum(p, j)?;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Even `p`, `n ≥ 2`:
/// `L_{p^n} = 2 + (L_{p²} − 2) ∏_{j=1}^{n−2} [Σ_{k=1}^{p/2} L_{(2k−1)p^{j+1}/2}]²`.
pub fn lemma8_eval(p: u64, n: u64) -> Result<IdentityCheck> {
    require_even_p(p)?;
    require(n >= 2, "n must be at least 2")?;
    let lhs = lucas_checked(pow_index(p, n)?)?;
    let mut prod = lucas_checked(pow_index(p, 2)?)? - 2;
    for j in 1..n - 1 {
        let s = lemma8_lucas_sum(p, j)?;
        prod *= &s * &s;
    }
    Ok(IdentityCheck::new(lhs, prod + 2))
}

/// Ratio identities, cross-multiplied:
/// `X_{2l+1} · bracket(m; 2l+1) = X_{2m+1} · bracket(l; 2m+1)`, both sides
/// being `X_{(2l+1)(2m+1)}`.
pub fn ratio_eval(kind: SeqKind, l: u64, m: u64) -> Result<IdentityCheck> {
    require(l >= 1, "l must be at least 1")?;
    require(m >= 1, "m must be at least 1")?;
    // q odd, so the brackets reduce to:
    // fib signs (−1)^m, (−1)^k; lucas all plus.
    let lhs = seq_checked(kind, 2 * l + 1)? * lemma3_bracket(kind, 2 * l + 1, m)?;
    let rhs = seq_checked(kind, 2 * m + 1)? * lemma3_bracket(kind, 2 * m + 1, l)?;
    Ok(IdentityCheck::new(lhs, rhs))
}
