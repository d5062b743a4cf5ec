//! Telescoping Fibonacci/Lucas series.
//!
//! Every family has two independent evaluation routes. `direct_term` sums
//! the literal summand built from `F_k`/`L_k`. `b_value` is the family's
//! telescoping sequence, built from products of Lucas brackets and scaled
//! so that `term(n) = B(n) − B(n+1)`. Partial sums from the two routes are
//! equal exactly when the family's product identity holds.

mod certify;

pub use certify::{certify, certify_against, ConvergenceReport, TailRule};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{BigRat, QuadRat};
use crate::exactnum::rat_sum;
use crate::identities::{
    even_p_lucas_sum, lemma3_bracket, lemma8_lucas_sum, neg1_pow, odd_p_alternating_sum,
    odd_p_lucas_sum, IdentityCheck, SeqKind,
};
use crate::lucas::{fib_checked, lucas_checked, mul_index, pow_index};

/// One series family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Σ_{n≥0} 1/F_{2^n} (Millin's series).
    T1,
    /// Σ_{n≥0} (L^a_{2^{n+1}m} − 1)/F^a_{2^{n+2}m}.
    T2 { m: u64, a: u64 },
    /// Σ_{n≥0} ((−1)^m − 1 + Σ_k (−1)^k L_{2(m−k)(2m+1)^n})/F_{(2m+1)^{n+1}}.
    T3 { m: u64 },
    /// Σ_{n≥0} Σ_k L_{2(m−k)(2m+1)^n}/L_{(2m+1)^{n+1}}.
    T4 { m: u64 },
    /// Σ_{n≥0} F_{2^{n+2}}((−1)^m − 1 + Σ_k (−1)^k L_{(m−k)2^{n+2}})/F_{(2m+1)2^{n+2}}.
    T5 { m: u64 },
    /// Σ_{n≥1} (Σ_{k=1}^{p/2} L_{(2k−1)mp^n} − 1)/F_{mp^{n+1}}, p even.
    T6 { p: u64, m: u64 },
    /// Σ_{n≥1} Σ_{k=1}^{(p−1)/2} L_{2kmp^n}/F_{mp^{n+1}}, p odd, m even.
    T7 { p: u64, m: u64 },
    /// Σ_{n≥1} (−1)^{n(p−1)/2} Σ_k (−1)^k L_{2kp^n}/F_{p^{n+1}}, p odd.
    T8 { p: u64 },
    /// Σ_{n≥2} ([Σ_{k=1}^{p/2} L_{(2k−1)p^n/2}]² − 1)/(L_{p^{n+1}} − 2), p even.
    T9 { p: u64 },
    /// Σ_{n≥0} L_{2^{n+1}}/F_{2^{n+2}}.
    R2,
}

/// A validated series family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesSpec(Family);

/// Series names accepted by [`spec_validate`], in listing order.
pub const SERIES_NAMES: [&str; 10] = ["t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "r2"];

/// Unvalidated parameters as they arrive from a command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RawParams {
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub p: Option<u64>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl SeriesSpec {
    pub fn new(family: Family) -> Result<Self> {
        let at_least = |v: u64, min: u64, name: &str| {
            if v >= min {
                Ok(())
            } else {
                Err(invalid(format!("{name} must be at least {min}")))
            }
        };
        let even_p = |p: u64| {
            if p.is_multiple_of(2) && p >= 2 {
                Ok(())
            } else {
                Err(invalid("p must be even"))
            }
        };
        let odd_p = |p: u64| {
            if p % 2 == 1 && p >= 3 {
                Ok(())
            } else {
                Err(invalid("p must be odd and at least 3"))
            }
        };
        match family {
            Family::T1 | Family::R2 => {}
            Family::T2 { m, a } => {
                at_least(m, 1, "m")?;
                at_least(a, 1, "a")?;
            }
            Family::T3 { m } | Family::T4 { m } | Family::T5 { m } => at_least(m, 1, "m")?,
            Family::T6 { p, m } => {
                even_p(p)?;
                at_least(m, 1, "m")?;
            }
            Family::T7 { p, m } => {
                odd_p(p)?;
                if m % 2 != 0 || m < 2 {
                    return Err(invalid("m must be even"));
                }
            }
            Family::T8 { p } => odd_p(p)?,
            Family::T9 { p } => even_p(p)?,
        }
        Ok(SeriesSpec(family))
    }

    pub fn family(&self) -> Family {
        self.0
    }

    /// First summation index.
    pub fn start(&self) -> u64 {
        match self.0 {
            Family::T6 { .. } | Family::T7 { .. } | Family::T8 { .. } => 1,
            Family::T9 { .. } => 2,
            _ => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.0 {
            Family::T1 => "t1",
            Family::T2 { .. } => "t2",
            Family::T3 { .. } => "t3",
            Family::T4 { .. } => "t4",
            Family::T5 { .. } => "t5",
            Family::T6 { .. } => "t6",
            Family::T7 { .. } => "t7",
            Family::T8 { .. } => "t8",
            Family::T9 { .. } => "t9",
            Family::R2 => "r2",
        }
    }

    /// Terms alternate in sign. Only T8 with `p ≡ 3 (mod 4)`; for
    /// `p ≡ 1 (mod 4)` the sign factor is always +1 and the terms are positive.
    pub fn is_alternating(&self) -> bool {
        matches!(self.0, Family::T8 { p } if p % 4 == 3)
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Family::T1 => write!(f, "T1"),
            Family::T2 { m, a } => write!(f, "T2{{m={m},a={a}}}"),
            Family::T3 { m } => write!(f, "T3{{m={m}}}"),
            Family::T4 { m } => write!(f, "T4{{m={m}}}"),
            Family::T5 { m } => write!(f, "T5{{m={m}}}"),
            Family::T6 { p, m } => write!(f, "T6{{p={p},m={m}}}"),
            Family::T7 { p, m } => write!(f, "T7{{p={p},m={m}}}"),
            Family::T8 { p } => write!(f, "T8{{p={p}}}"),
            Family::T9 { p } => write!(f, "T9{{p={p}}}"),
            Family::R2 => write!(f, "R2"),
        }
    }
}

/// Builds a [`SeriesSpec`] from a series name and loose parameters,
/// rejecting missing, superfluous and out-of-range values.
pub fn spec_validate(name: &str, raw: &RawParams) -> Result<SeriesSpec> {
    let name = name.to_ascii_lowercase();
    let (uses_m, uses_a, uses_p) = match name.as_str() {
        "t1" | "r2" => (false, false, false),
        "t2" => (true, true, false),
        "t3" | "t4" | "t5" => (true, false, false),
        "t6" | "t7" => (true, false, true),
        "t8" | "t9" => (false, false, true),
        _ => return Err(invalid(format!("unknown series '{name}'"))),
    };
    for (given, used, flag) in [(raw.m, uses_m, "m"), (raw.a, uses_a, "a"), (raw.p, uses_p, "p")] {
        if given.is_some() && !used {
            return Err(invalid(format!("parameter {flag} does not apply to {name}")));
        }
    }
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| invalid(format!("{name} requires --{flag}")));
    let family = match name.as_str() {
        "t1" => Family::T1,
        "r2" => Family::R2,
        "t2" => Family::T2 { m: need(raw.m, "m")?, a: raw.a.unwrap_or(1) },
        "t3" => Family::T3 { m: need(raw.m, "m")? },
        "t4" => Family::T4 { m: need(raw.m, "m")? },
        "t5" => Family::T5 { m: need(raw.m, "m")? },
        "t6" => Family::T6 { p: need(raw.p, "p")?, m: need(raw.m, "m")? },
        "t7" => Family::T7 { p: need(raw.p, "p")?, m: need(raw.m, "m")? },
        "t8" => Family::T8 { p: need(raw.p, "p")? },
        _ => Family::T9 { p: need(raw.p, "p")? },
    };
    SeriesSpec::new(family)
}

fn ratio(num: BigInt, den: BigInt) -> Result<BigRat> {
    crate::exactnum::rat(num, den)
}

fn require_start(spec: &SeriesSpec, n: u64) -> Result<()> {
    if n < spec.start() {
        Err(invalid(format!("{spec} starts at n = {}", spec.start())))
    } else {
        Ok(())
    }
}

/// The n-th summand, evaluated from the literal summand formula.
pub fn direct_term(spec: &SeriesSpec, n: u64) -> Result<BigRat> {
    require_start(spec, n)?;
    match spec.0 {
        Family::T1 => ratio(BigInt::one(), fib_checked(pow_index(2, n)?)?),
        Family::R2 => {
            let num = lucas_checked(pow_index(2, n + 1)?)?;
            ratio(num, fib_checked(pow_index(2, n + 2)?)?)
        }
        Family::T2 { m, a } => {
            let a = a as usize;
            let l = lucas_checked(mul_index(&[pow_index(2, n + 1)?, m])?)?;
            let f = fib_checked(mul_index(&[pow_index(2, n + 2)?, m])?)?;
            ratio(num_traits::pow(l, a) - 1, num_traits::pow(f, a))
        }
        Family::T3 { m } => {
            let p = 2 * m + 1;
            let base = pow_index(p, n)?;
            let mut num = neg1_pow(m) - 1;
            for k in 0..m {
                num += neg1_pow(k) * lucas_checked(mul_index(&[2, m - k, base])?)?;
            }
            ratio(num, fib_checked(pow_index(p, n + 1)?)?)
        }
        Family::T4 { m } => {
            let p = 2 * m + 1;
            let base = pow_index(p, n)?;
            let mut num = BigInt::zero();
            for k in 0..m {
                num += lucas_checked(mul_index(&[2, m - k, base])?)?;
            }
            ratio(num, lucas_checked(pow_index(p, n + 1)?)?)
        }
        Family::T5 { m } => {
            let e = pow_index(2, n + 2)?;
            let mut bracket = neg1_pow(m) - 1;
            for k in 0..m {
                bracket += neg1_pow(k) * lucas_checked(mul_index(&[m - k, e])?)?;
            }
            let num = fib_checked(e)? * bracket;
            ratio(num, fib_checked(mul_index(&[2 * m + 1, e])?)?)
        }
        Family::T6 { p, m } => {
            let base = mul_index(&[m, pow_index(p, n)?])?;
            let mut num = -BigInt::one();
            for k in 1..=p / 2 {
                num += lucas_checked(mul_index(&[2 * k - 1, base])?)?;
            }
            ratio(num, fib_checked(mul_index(&[m, pow_index(p, n + 1)?])?)?)
        }
        Family::T7 { p, m } => {
            let base = mul_index(&[m, pow_index(p, n)?])?;
            let mut num = BigInt::zero();
            for k in 1..=(p - 1) / 2 {
                num += lucas_checked(mul_index(&[2 * k, base])?)?;
            }
            ratio(num, fib_checked(mul_index(&[m, pow_index(p, n + 1)?])?)?)
        }
        Family::T8 { p } => {
            let base = pow_index(p, n)?;
            let mut num = BigInt::zero();
            for k in 1..=(p - 1) / 2 {
                num += neg1_pow(k) * lucas_checked(mul_index(&[2 * k, base])?)?;
            }
            num *= neg1_pow(n * ((p - 1) / 2));
            ratio(num, fib_checked(pow_index(p, n + 1)?)?)
        }
        Family::T9 { p } => {
            let half = pow_index(p, n)? / 2;
            let mut s = BigInt::zero();
            for k in 1..=p / 2 {
                s += lucas_checked(mul_index(&[2 * k - 1, half])?)?;
            }
            let den = lucas_checked(pow_index(p, n + 1)?)? - 2;
            ratio(&s * &s - 1, den)
        }
    }
}

/// The telescoping sequence: `direct_term(n) = b_value(n) − b_value(n+1)`.
///
/// Built from products of Lucas brackets, never from the summands. Scaling
/// constants of the underlying product identities (`F_{mp}`, `F_p`,
/// `L_{p²} − 2`, `L_{2m+1}`) are divided out. Millin's series is the one
/// family whose sequence is irrational: for `n ≥ 3` it is
/// `α^{−2} / ∏_{j=2}^{n−1} (1 + α^{2^j})`, and below that the first three
/// terms `1 + 1 + 1/3` are added back.
pub fn b_value(spec: &SeriesSpec, n: u64) -> Result<QuadRat> {
    require_start(spec, n)?;
    let inv = |x: BigInt| -> Result<QuadRat> { Ok(ratio(BigInt::one(), x)?.into()) };
    match spec.0 {
        Family::T1 => millin_b(n),
        Family::R2 => Ok(tail_product_t2(1, 1, n)? + millin_b(n + 2)?),
        Family::T2 { m, a } => tail_product_t2(m, a, n),
        Family::T3 { m } | Family::T4 { m } => {
            let kind = if matches!(spec.0, Family::T3 { .. }) { SeqKind::Fib } else { SeqKind::Lucas };
            let mut prod = BigInt::one();
            for j in 0..n {
                prod *= lemma3_bracket(kind, pow_index(2 * m + 1, j)?, m)?;
            }
            inv(prod)
        }
        Family::T5 { m } => {
            let mut prod = lucas_checked(2 * m + 1)?;
            for j in 0..=n {
                prod *= t5_bracket(m, j)?;
            }
            inv(prod)
        }
        Family::T6 { p, m } => {
            let mut prod = fib_checked(mul_index(&[m, p])?)?;
            for j in 1..n {
                prod *= even_p_lucas_sum(p, m, j)?;
            }
            inv(prod)
        }
        Family::T7 { p, m } => {
            let mut prod = fib_checked(mul_index(&[m, p])?)?;
            for j in 1..n {
                prod *= BigInt::one() + odd_p_lucas_sum(p, m, j)?;
            }
            inv(prod)
        }
        Family::T8 { p } => {
            let mut prod = fib_checked(p)?;
            for j in 1..n {
                prod *= BigInt::one() + odd_p_alternating_sum(p, j)?;
            }
            inv(prod)
        }
        Family::T9 { p } => {
            let mut prod = lucas_checked(pow_index(p, 2)?)? - 2;
            for j in 1..n - 1 {
                let s = lemma8_lucas_sum(p, j)?;
                prod *= &s * &s;
            }
            inv(prod)
        }
    }
}

/// `(−1)^m + Σ_{k<m} (−1)^k L_{(m−k)2^{j+1}}`; equals `F_{2m+1}` at `j = 0`
/// and `L_{(2m+1)2^j}/L_{2^j}` above.
fn t5_bracket(m: u64, j: u64) -> Result<BigInt> {
    let e = pow_index(2, j + 1)?;
    let mut acc = neg1_pow(m);
    for k in 0..m {
        acc += neg1_pow(k) * lucas_checked(mul_index(&[m - k, e])?)?;
    }
    Ok(acc)
}

/// `1 / (F_m · L_m · L_{2m} ··· L_{2^n m})^a`
fn tail_product_t2(m: u64, a: u64, n: u64) -> Result<QuadRat> {
    let mut prod = fib_checked(m)?;
    for j in 0..=n {
        prod *= lucas_checked(mul_index(&[pow_index(2, j)?, m])?)?;
    }
    Ok(ratio(BigInt::one(), num_traits::pow(prod, a as usize))?.into())
}

fn millin_b(n: u64) -> Result<QuadRat> {
    let head = [
        BigRat::one(),
        BigRat::one(),
        BigRat::new(BigInt::one(), BigInt::from(3)),
    ];
    if n < 3 {
        let added: BigRat = head[n as usize..].iter().sum();
        return Ok(millin_b(3)? + QuadRat::from(added));
    }
    // ∏_{j=2}^{n−1} (1 + α^{2^j}), with α^{2^j} by repeated squaring
    let mut power = QuadRat::alpha().pow(4);
    let mut prod = QuadRat::one();
    for j in 2..n {
        if j > 2 {
            power = &power * &power;
        }
        pow_index(2, j)?;
        prod = prod * (QuadRat::one() + &power);
    }
    let alpha_sq = QuadRat::alpha().pow(2);
    (alpha_sq * prod).inv()
}

/// How a partial sum is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    Direct,
    Telescoped,
}

/// Sum of the first `terms` summands, starting at the family's start index.
pub fn partial_sum(spec: &SeriesSpec, terms: u64, mode: SumMode) -> Result<BigRat> {
    let n0 = spec.start();
    match mode {
        SumMode::Direct => {
            // largest index first, so an index-bound failure costs nothing
            let terms = (n0..n0 + terms)
                .rev()
                .map(|n| direct_term(spec, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(rat_sum(&terms))
        }
        SumMode::Telescoped => {
            if terms == 0 {
                return Ok(BigRat::zero());
            }
            let diff = b_value(spec, n0)? - b_value(spec, n0 + terms)?;
            diff.to_rational().ok_or_else(|| {
                Error::Inconsistency(format!("telescoped partial sum of {spec} is irrational: {diff}"))
            })
        }
    }
}

/// The exact value of the infinite series.
pub fn closed_form(spec: &SeriesSpec) -> Result<QuadRat> {
    let recip = |x: BigInt| -> Result<QuadRat> { Ok(ratio(BigInt::one(), x)?.into()) };
    match spec.0 {
        Family::T1 => QuadRat::new(7, -1, 2),
        Family::R2 => QuadRat::new(5, -1, 2),
        Family::T2 { m, a } => {
            let pair = crate::lucas::fib_lucas(crate::lucas::check_index(m)?);
            recip(num_traits::pow(pair.fib * pair.lucas, a as usize))
        }
        Family::T3 { .. } | Family::T4 { .. } => Ok(QuadRat::one()),
        Family::T5 { m } => {
            let pair = crate::lucas::fib_lucas(crate::lucas::check_index(2 * m + 1)?);
            recip(pair.fib * pair.lucas)
        }
        Family::T6 { p, m } | Family::T7 { p, m } => recip(fib_checked(mul_index(&[m, p])?)?),
        Family::T8 { p } => recip(fib_checked(p)?),
        Family::T9 { p } => recip(lucas_checked(pow_index(p, 2)?)? - 2),
    }
}

/// `closed_form − partial_sum(direct)`, exact.
pub fn gap(spec: &SeriesSpec, terms: u64) -> Result<QuadRat> {
    Ok(closed_form(spec)? - QuadRat::from(partial_sum(spec, terms, SumMode::Direct)?))
}

/// Checks the finite telescoping identity
/// `1/(x+a_1) + Σ_{k=2}^{n} a_1···a_{k−1}/((x+a_1)···(x+a_k))
///  = 1/x − a_1···a_n/(x(x+a_1)···(x+a_n))`.
pub fn generic_apery_check(x: &BigRat, a: &[BigRat], n: usize) -> Result<IdentityCheck> {
    if x.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if n == 0 || n > a.len() {
        return Err(invalid(format!("n must be in 1..={}", a.len())));
    }
    let mut shifted = Vec::with_capacity(n);
    for (i, ai) in a[..n].iter().enumerate() {
        let s = x + ai;
        if s.is_zero() {
            return Err(Error::ZeroFactor(i + 1));
        }
        shifted.push(s);
    }
    let mut lhs = BigRat::zero();
    let mut numer = BigRat::one();
    let mut denom = BigRat::one();
    for k in 0..n {
        denom *= &shifted[k];
        lhs += &numer / &denom;
        numer *= &a[k];
    }
    let rhs = x.recip() - numer / (denom * x);
    Ok(IdentityCheck::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn spec(f: Family) -> SeriesSpec {
        SeriesSpec::new(f).unwrap()
    }

    #[test]
    fn direct_term_examples() {
        assert_eq!(direct_term(&spec(Family::T1), 3).unwrap(), r(1, 21));
        assert_eq!(direct_term(&spec(Family::T2 { m: 1, a: 1 }), 0).unwrap(), r(2, 3));
        assert_eq!(direct_term(&spec(Family::T8 { p: 3 }), 1).unwrap(), r(9, 17));
        assert_eq!(direct_term(&spec(Family::T9 { p: 2 }), 2).unwrap(), r(8, 45));
        assert!(direct_term(&spec(Family::T9 { p: 2 }), 1).is_err());
    }

    #[test]
    fn b_value_examples() {
        let one = QuadRat::one();
        assert_eq!(b_value(&spec(Family::T2 { m: 1, a: 1 }), 0).unwrap(), one);
        assert_eq!(b_value(&spec(Family::T3 { m: 1 }), 0).unwrap(), one);
        assert_eq!(
            b_value(&spec(Family::T3 { m: 1 }), 2).unwrap(),
            QuadRat::new(1, 0, 34).unwrap()
        );
        // B'_3 = 1/(α² + α⁶)
        let a = QuadRat::alpha();
        let expected = (a.pow(2) + a.pow(6)).inv().unwrap();
        assert_eq!(b_value(&spec(Family::T1), 3).unwrap(), expected);
    }

    #[test]
    fn partial_sum_examples() {
        for mode in [SumMode::Direct, SumMode::Telescoped] {
            assert_eq!(partial_sum(&spec(Family::T1), 0, mode).unwrap(), r(0, 1));
            assert_eq!(partial_sum(&spec(Family::T2 { m: 1, a: 1 }), 2, mode).unwrap(), r(20, 21));
            assert_eq!(partial_sum(&spec(Family::T9 { p: 2 }), 2, mode).unwrap(), r(88, 441));
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(&spec(Family::T1)).unwrap(), QuadRat::new(7, -1, 2).unwrap());
        assert_eq!(closed_form(&spec(Family::T5 { m: 1 })).unwrap(), QuadRat::new(1, 0, 8).unwrap());
        assert_eq!(
            closed_form(&spec(Family::T7 { p: 5, m: 4 })).unwrap(),
            QuadRat::new(1, 0, 6765).unwrap()
        );
        assert_eq!(closed_form(&spec(Family::T8 { p: 3 })).unwrap(), QuadRat::new(1, 0, 2).unwrap());
        assert_eq!(closed_form(&spec(Family::T9 { p: 2 })).unwrap(), QuadRat::new(1, 0, 5).unwrap());
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap(&spec(Family::T3 { m: 1 }), 0).unwrap(), QuadRat::one());
        assert_eq!(
            gap(&spec(Family::T2 { m: 1, a: 1 }), 2).unwrap(),
            QuadRat::new(1, 0, 21).unwrap()
        );
        let t1 = spec(Family::T1);
        let mut last = gap(&t1, 0).unwrap();
        for n in 1..10 {
            let g = gap(&t1, n).unwrap();
            assert_eq!(g.signum(), 1);
            assert!(g < last);
            last = g;
        }
    }

    #[test]
    fn apery_examples() {
        let c = generic_apery_check(&r(1, 1), &[r(1, 1), r(2, 1)], 2).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, r(2, 3).into());
        let c = generic_apery_check(&r(1, 1), &[r(5, 1)], 1).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, r(1, 6).into());
        let c = generic_apery_check(&r(2, 1), &[r(1, 1), r(1, 1), r(1, 1)], 3).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, r(13, 27).into());
        assert_eq!(c.rhs, (r(1, 2) - r(1, 54)).into());
        assert_eq!(
            generic_apery_check(&r(1, 1), &[r(2, 1), r(-1, 1)], 2),
            Err(Error::ZeroFactor(2))
        );
        assert_eq!(generic_apery_check(&r(0, 1), &[r(1, 1)], 1), Err(Error::ZeroDenominator));
    }

    #[test]
    fn validation() {
        let raw = |m, a, p| RawParams { m, a, p };
        let err = |name: &str, p: RawParams| spec_validate(name, &p).unwrap_err().to_string();
        assert_eq!(err("t6", raw(Some(1), None, Some(3))), "p must be even");
        assert_eq!(err("t7", raw(Some(3), None, Some(5))), "m must be even");
        assert_eq!(err("t8", raw(None, None, Some(4))), "p must be odd and at least 3");
        assert_eq!(err("t2", raw(None, None, None)), "t2 requires --m");
        assert_eq!(err("t1", raw(Some(1), None, None)), "parameter m does not apply to t1");
        assert_eq!(err("t10", raw(None, None, None)), "unknown series 't10'");
        let t7 = spec_validate("t7", &raw(Some(4), None, Some(5))).unwrap();
        assert_eq!(t7.family(), Family::T7 { p: 5, m: 4 });
        let t9 = spec_validate("T9", &raw(None, None, Some(2))).unwrap();
        assert_eq!(t9.start(), 2);
        assert_eq!(t9.to_string(), "T9{p=2}");
        let t2 = spec_validate("t2", &raw(Some(3), None, None)).unwrap();
        assert_eq!(t2.family(), Family::T2 { m: 3, a: 1 });
    }

    #[test]
    fn alternation_flags() {
        assert!(spec(Family::T8 { p: 3 }).is_alternating());
        assert!(!spec(Family::T8 { p: 5 }).is_alternating());
        assert!(spec(Family::T8 { p: 7 }).is_alternating());
        assert!(!spec(Family::T1).is_alternating());
    }
}
