use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{direct_term, partial_sum, SeriesSpec, SumMode};
use crate::error::{Error, Result};
use crate::exactnum::{rat_sum, BigRat, QuadRat};

/// Give up looking for a truncation point after this many terms. Every
/// family converges doubly exponentially, so the index bound trips long
/// before this does.
const MAX_TERMS: u64 = 64;

/// How the omitted tail is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailRule {
    /// `|tail| ≤ 2·|first omitted term|`, given term ratios `≤ 1/2`.
    Geometric,
    /// `|tail| ≤ |first omitted term|`, given alternating, shrinking terms.
    Alternating,
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub spec: SeriesSpec,
    pub digits: u32,
    /// Number of summands in `partial`.
    pub terms_used: u64,
    /// The summands, starting at `spec.start()`.
    pub terms: Vec<BigRat>,
    pub partial: BigRat,
    pub target: QuadRat,
    /// `target − partial`
    pub gap: QuadRat,
    pub gap_bound: BigRat,
    pub tail_rule: TailRule,
    pub certified: bool,
    /// Largest `k` with `|gap| < 10^{−k}`.
    pub decimal_digits_agreeing: u32,
    /// Why certification failed, if it did.
    pub diagnostics: Vec<String>,
}

/// Certifies the series against its closed form to `digits` decimals.
pub fn certify(spec: &SeriesSpec, digits: u32) -> Result<ConvergenceReport> {
    certify_against(spec, digits, super::closed_form(spec)?)
}

/// Certifies the series against an arbitrary `target`.
///
/// Takes the smallest `N ≥ 1` whose tail bound drops below `10^{−digits}`,
/// checks the tail-rule preconditions on the terms around the cut, checks
/// `|target − partial| ≤ bound` exactly, and checks that the direct and
/// telescoped partial sums agree.
pub fn certify_against(spec: &SeriesSpec, digits: u32, target: QuadRat) -> Result<ConvergenceReport> {
    if digits == 0 {
        return Err(Error::InvalidParameter("digits must be at least 1".into()));
    }
    let n0 = spec.start();
    let eps = BigRat::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
    let tail_rule = if spec.is_alternating() {
        TailRule::Alternating
    } else {
        TailRule::Geometric
    };
    let factor = match tail_rule {
        TailRule::Geometric => BigRat::from_integer(BigInt::from(2)),
        TailRule::Alternating => BigRat::one(),
    };

    let mut terms = vec![direct_term(spec, n0)?];
    let mut cut = 0u64;
    let mut gap_bound = BigRat::zero();
    for n in 1..=MAX_TERMS {
        terms.push(direct_term(spec, n0 + n)?);
        let bound = &factor * terms[n as usize].abs();
        if bound < eps {
            cut = n;
            gap_bound = bound;
            break;
        }
    }
    let mut diagnostics = Vec::new();
    if cut == 0 {
        return Ok(uncertified(spec, digits, target, terms, tail_rule, format!(
            "tail bound still above 1e-{digits} after {MAX_TERMS} terms"
        )));
    }
    // one term past the cut for the ratio window
    terms.push(direct_term(spec, n0 + cut + 1)?);

    let mut window_ok = true;
    for i in (cut - 1) as usize..=cut as usize {
        let (cur, next) = (&terms[i], &terms[i + 1]);
        let ok = match tail_rule {
            TailRule::Geometric => next.abs() * BigRat::from_integer(BigInt::from(2)) <= cur.abs(),
            TailRule::Alternating => {
                cur.signum() == -next.signum() && !cur.is_zero() && next.abs() <= cur.abs()
            }
        };
        if !ok {
            window_ok = false;
            diagnostics.push(format!(
                "{tail_rule:?} tail precondition fails between n = {} and n = {}",
                n0 + i as u64,
                n0 + i as u64 + 1
            ));
        }
    }
    terms.truncate(cut as usize);

    let partial = rat_sum(&terms);
    let telescoped = partial_sum(spec, cut, SumMode::Telescoped)?;
    let telescoping_ok = telescoped == partial;
    if !telescoping_ok {
        diagnostics.push(format!("direct and telescoped partial sums differ at N = {cut}"));
    }

    let gap = &target - QuadRat::from(&partial);
    let gap_ok = (QuadRat::from(&gap_bound) - gap.abs()).signum() >= 0;
    if !gap_ok {
        diagnostics.push(format!("|target - partial| exceeds the tail bound at N = {cut}"));
    }

    let decimal_digits_agreeing = digits_agreeing(&gap);
    Ok(ConvergenceReport {
        spec: *spec,
        digits,
        terms_used: cut,
        terms,
        partial,
        target,
        gap,
        gap_bound,
        tail_rule,
        certified: window_ok && telescoping_ok && gap_ok,
        decimal_digits_agreeing,
        diagnostics,
    })
}

fn uncertified(
    spec: &SeriesSpec,
    digits: u32,
    target: QuadRat,
    mut terms: Vec<BigRat>,
    tail_rule: TailRule,
    why: String,
) -> ConvergenceReport {
    let used = terms.len() as u64 - 1;
    let gap_bound = terms.pop().map(|t| t.abs()).unwrap_or_default();
    let partial = rat_sum(&terms);
    let gap = &target - QuadRat::from(&partial);
    ConvergenceReport {
        spec: *spec,
        digits,
        terms_used: used,
        terms,
        partial,
        target,
        decimal_digits_agreeing: digits_agreeing(&gap),
        gap,
        gap_bound,
        tail_rule,
        certified: false,
        diagnostics: vec![why],
    }
}

/// Largest `k` with `|gap| < 10^{−k}`; `u32::MAX` for a zero gap.
fn digits_agreeing(gap: &QuadRat) -> u32 {
    if gap.is_zero() {
        return u32::MAX;
    }
    let g = gap.abs();
    let below = |k: u32| {
        let scaled = g.scale(&BigRat::from_integer(num_traits::pow(BigInt::from(10), k as usize)));
        scaled < QuadRat::one()
    };
    // |a + b√5| ≥ 1/(|a| + 3|b|), so |gap| ≥ 1/(d·(|a| + 3|b|)).
    let floor_den = g.d() * (g.a().abs() + BigInt::from(3) * g.b().abs());
    let mut hi = floor_den.to_string().len() as u32 + 1;
    if !below(0) {
        return 0;
    }
    let mut lo = 0;
    // invariant: below(lo), !below(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::super::Family;
    use super::*;

    #[test]
    fn digits_agreeing_counts_places() {
        let q = |a: i64, d: i64| QuadRat::new(a, 0, d).unwrap();
        assert_eq!(digits_agreeing(&q(1, 8)), 0);
        assert_eq!(digits_agreeing(&q(1, 11)), 1);
        assert_eq!(digits_agreeing(&q(-1, 1000)), 2);
        assert_eq!(digits_agreeing(&q(1, 1001)), 3);
        assert_eq!(digits_agreeing(&q(3, 2)), 0);
        // √5 − 2 ≈ 0.236
        assert_eq!(digits_agreeing(&QuadRat::new(-2, 1, 1).unwrap()), 0);
        // (√5 − 2)/100 ≈ 0.00236
        assert_eq!(digits_agreeing(&QuadRat::new(-2, 1, 100).unwrap()), 2);
    }

    #[test]
    fn millin_fifty_digits() {
        let spec = SeriesSpec::new(Family::T1).unwrap();
        let report = certify(&spec, 50).unwrap();
        assert!(report.certified, "{:?}", report.diagnostics);
        assert!(report.terms_used <= 9);
        assert!(report.decimal_digits_agreeing >= 50);
    }

    #[test]
    fn t9_six_digits() {
        let spec = SeriesSpec::new(Family::T9 { p: 2 }).unwrap();
        let report = certify(&spec, 6).unwrap();
        assert!(report.certified);
        assert_eq!(report.terms_used, 3);
        assert_eq!(
            report.partial,
            BigRat::new(BigInt::from(974_168), BigInt::from(4_870_845))
        );
    }

    #[test]
    fn wrong_target_is_not_certified() {
        let spec = SeriesSpec::new(Family::T3 { m: 1 }).unwrap();
        let wrong = QuadRat::new(1_000_001, 0, 1_000_000).unwrap();
        let report = certify_against(&spec, 10, wrong).unwrap();
        assert!(!report.certified);
        assert!(!report.diagnostics.is_empty());
    }

    #[test]
    fn zero_digits_rejected() {
        let spec = SeriesSpec::new(Family::T1).unwrap();
        assert!(certify(&spec, 0).is_err());
    }
}
