//! Fibonacci and Lucas numbers at large indices, and exact powers of α.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{BigRat, QuadRat};

/// Default ceiling on any Fibonacci/Lucas index touched by identity and
/// series evaluation.
pub const DEFAULT_INDEX_BOUND: u64 = 1_000_000;

static INDEX_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_INDEX_BOUND);

pub fn index_bound() -> u64 {
    INDEX_BOUND.load(Ordering::Relaxed)
}

/// Replaces the global index bound. Affects every later evaluation in the
/// process.
pub fn set_index_bound(bound: u64) {
    INDEX_BOUND.store(bound, Ordering::Relaxed);
}

/// Accepts `n` if it is within the global index bound.
pub fn check_index(n: u64) -> Result<u64> {
    let bound = index_bound();
    if n > bound {
        Err(Error::IndexBound { index: Some(n), bound })
    } else {
        Ok(n)
    }
}

/// Checks an index that may already have overflowed during its computation.
pub fn check_index_opt(n: Option<u64>) -> Result<u64> {
    match n {
        Some(n) => check_index(n),
        None => Err(Error::IndexBound { index: None, bound: index_bound() }),
    }
}

/// `base^exp` as an index, checked against overflow and the global bound.
pub fn pow_index(base: u64, exp: u64) -> Result<u64> {
    let exp = u32::try_from(exp).ok();
    check_index_opt(exp.and_then(|e| base.checked_pow(e)))
}

/// Product of index factors, checked against overflow and the global bound.
pub fn mul_index(factors: &[u64]) -> Result<u64> {
    check_index_opt(factors.iter().try_fold(1u64, |acc, &f| acc.checked_mul(f)))
}

/// `(n, F_n, L_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasPair {
    pub n: u64,
    pub fib: BigInt,
    pub lucas: BigInt,
}

impl LucasPair {
    /// `L_n² − 5F_n² = 4(−1)^n`.
    pub fn satisfies_norm_identity(&self) -> bool {
        let lhs = &self.lucas * &self.lucas - BigInt::from(5) * &self.fib * &self.fib;
        let rhs = if self.n.is_multiple_of(2) { 4 } else { -4 };
        lhs == BigInt::from(rhs)
    }
}

/// Computes `(F_n, L_n)` by binary fast doubling.
///
/// Walks the bits of `n` from the top, using
/// `F_2k = F_k·L_k`, `L_2k = L_k² − 2(−1)^k`, and the step
/// `F_k+1 = (F_k + L_k)/2`, `L_k+1 = (5F_k + L_k)/2`.
pub fn fib_lucas(n: u64) -> LucasPair {
    let mut k = 0u64;
    let mut fib = BigInt::zero();
    let mut lucas = BigInt::from(2);
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let two_sign = if k.is_multiple_of(2) { 2 } else { -2 };
        let f2 = &fib * &lucas;
        let l2 = &lucas * &lucas - two_sign;
        fib = f2;
        lucas = l2;
        k *= 2;
        if (n >> bit) & 1 == 1 {
            let f1: BigInt = (&fib + &lucas) >> 1;
            let l1: BigInt = (BigInt::from(5) * &fib + &lucas) >> 1;
            fib = f1;
            lucas = l1;
            k += 1;
        }
    }
    debug_assert_eq!(k, n);
    LucasPair { n, fib, lucas }
}

pub fn fib(n: u64) -> BigInt {
    fib_lucas(n).fib
}

pub fn lucas(n: u64) -> BigInt {
    fib_lucas(n).lucas
}

/// `F_n` after checking `n` against the index bound.
pub fn fib_checked(n: u64) -> Result<BigInt> {
    Ok(fib(check_index(n)?))
}

/// `L_n` after checking `n` against the index bound.
pub fn lucas_checked(n: u64) -> Result<BigInt> {
    Ok(lucas(check_index(n)?))
}

/// Plain `F_{k+1} = F_k + F_{k−1}` iteration; the baseline for benchmarks and
/// an oracle for tests.
pub fn fib_lucas_iterative(n: u64) -> LucasPair {
    let (mut f0, mut f1) = (BigInt::zero(), BigInt::one());
    let (mut l0, mut l1) = (BigInt::from(2), BigInt::one());
    for _ in 0..n {
        let f2 = &f0 + &f1;
        let l2 = &l0 + &l1;
        f0 = std::mem::replace(&mut f1, f2);
        l0 = std::mem::replace(&mut l1, l2);
    }
    LucasPair { n, fib: f0, lucas: l0 }
}

/// Exact `α^n = (L_n + F_n·√5)/2` for any signed `n`.
pub fn alpha_pow(n: i64) -> QuadRat {
    let pair = fib_lucas(n.unsigned_abs());
    let (mut f, mut l) = (pair.fib, pair.lucas);
    if n < 0 {
        // F_{−k} = (−1)^{k+1} F_k, L_{−k} = (−1)^k L_k
        if n.unsigned_abs().is_multiple_of(2) {
            f = -f;
        } else {
            l = -l;
        }
    }
    QuadRat::new(l, f, 2).expect("nonzero denominator")
}

/// Evaluates the Binet forms `(α^n − β^n)/√5` and `α^n + β^n` in Q(√5),
/// with α^n and β^n from repeated squaring, and returns them as rationals.
pub fn binet_roundtrip(n: u64) -> Result<(BigRat, BigRat)> {
    let an = QuadRat::alpha().pow(n);
    let bn = QuadRat::beta().pow(n);
    let f = (&an - &bn).checked_div(&QuadRat::sqrt5())?;
    let l = &an + &bn;
    let as_rat = |x: QuadRat, what: &str| {
        x.to_rational()
            .ok_or_else(|| Error::Inconsistency(format!("Binet {what}_{n} = {x} is not rational")))
    };
    Ok((as_rat(f, "F")?, as_rat(l, "L")?))
}
