//! Brute-force verification: exhaustive identity grids, decimal cross-checks
//! of certified sums, and the rearranged reciprocal series.
//!
//! Nothing here reads the telescoping sequences; sums are built from
//! `F_k`/`L_k` and literal summands only.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{parse_decimal, BigRat, QuadRat};
use crate::identities::{
    lemma1_eval, lemma2_eval, lemma3_eval, lemma4_eval, lemma5_eval, lemma6_eval, lemma7_eval,
    lemma8_eval, ratio_eval, IdentityCheck, SeqKind,
};
use crate::lucas::{fib_checked, lucas_checked, mul_index, pow_index};
use crate::series::{self, direct_term, Family, SeriesSpec, SumMode};

/// Identities the fuzzer knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    /// [`crate::identities::lemma6_eval`] with the k-free summand `L_{2mp^j}`; a negative control.
    L6Literal,
    L7,
    L8,
    Ratio,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::L1,
        LemmaId::L2,
        LemmaId::L3,
        LemmaId::L4,
        LemmaId::L5,
        LemmaId::L6,
        LemmaId::L7,
        LemmaId::L8,
        LemmaId::Ratio,
    ];

    pub fn parse(s: &str) -> Option<LemmaId> {
        Some(match s.trim().to_ascii_lowercase().trim_start_matches("lemma") {
            "1" => LemmaId::L1,
            "2" => LemmaId::L2,
            "3" => LemmaId::L3,
            "4" => LemmaId::L4,
            "5" => LemmaId::L5,
            "6" => LemmaId::L6,
            "6-literal" => LemmaId::L6Literal,
            "7" => LemmaId::L7,
            "8" => LemmaId::L8,
            "ratio" => LemmaId::Ratio,
            _ => return None,
        })
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LemmaId::L1 => "lemma1",
            LemmaId::L2 => "lemma2",
            LemmaId::L3 => "lemma3",
            LemmaId::L4 => "lemma4",
            LemmaId::L5 => "lemma5",
            LemmaId::L6 => "lemma6",
            LemmaId::L6Literal => "lemma6-literal",
            LemmaId::L7 => "lemma7",
            LemmaId::L8 => "lemma8",
            LemmaId::Ratio => "ratio",
        };
        f.write_str(s)
    }
}

/// Per-lemma parameter bounds. Index-capped lemmas enumerate every `n`
/// whose left-hand index stays within `index_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub lemma1_n: u64,
    pub lemma2_m: u64,
    pub lemma3_q: u64,
    pub lemma3_m: u64,
    pub lemma4_m: u64,
    pub lemma5_p: u64,
    pub lemma5_m: u64,
    pub lemma6_p: u64,
    pub lemma6_m: u64,
    pub lemma7_p: u64,
    pub lemma8_p: u64,
    pub ratio_max: u64,
    pub index_cap: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            lemma1_n: 500,
            lemma2_m: 20,
            lemma3_q: 50,
            lemma3_m: 25,
            lemma4_m: 6,
            lemma5_p: 8,
            lemma5_m: 6,
            lemma6_p: 9,
            lemma6_m: 8,
            lemma7_p: 9,
            lemma8_p: 8,
            ratio_max: 12,
            index_cap: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureOutcome {
    Mismatch { lhs: QuadRat, rhs: QuadRat },
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzFailure {
    pub params: String,
    pub outcome: FailureOutcome,
}

impl fmt::Display for FuzzFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            FailureOutcome::Mismatch { lhs, rhs } => {
                write!(f, "{}: lhs {} != rhs {}", self.params, lhs, rhs)
            }
            FailureOutcome::Error(e) => write!(f, "{}: {}", self.params, e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub id: String,
    pub grid: String,
    pub cases: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn ok_count(&self) -> usize {
        self.cases - self.failures.len()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{} [{}]: {}/{} {}", self.id, self.grid, self.ok_count(), self.cases, status)
    }
}

/// Evaluates `eval` at every point in parallel; the report keeps the
/// enumeration order, so identical grids give identical reports.
fn run_grid<F>(id: String, grid: String, names: &[&str], points: Vec<Vec<u64>>, eval: F) -> FuzzReport
where
    F: Fn(&[u64]) -> Result<IdentityCheck> + Sync,
{
    let outcomes: Vec<Option<FuzzFailure>> = points
        .par_iter()
        .map(|pt| {
            let params = names
                .iter()
                .zip(pt)
                .map(|(n, v)| format!("{n}={v}"))
                .collect::<Vec<_>>()
                .join(",");
            match eval(pt) {
                Ok(c) if c.holds => None,
                Ok(c) => Some(FuzzFailure {
                    params,
                    outcome: FailureOutcome::Mismatch { lhs: c.lhs, rhs: c.rhs },
                }),
                Err(e) => Some(FuzzFailure { params, outcome: FailureOutcome::Error(e.to_string()) }),
            }
        })
        .collect();
    FuzzReport {
        id,
        grid,
        cases: points.len(),
        failures: outcomes.into_iter().flatten().collect(),
    }
}

/// All `n ≥ n_min` with `mult·base^n ≤ cap`.
fn exponents_within(base: u64, mult: u64, cap: u64, n_min: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n_min;
    while let Some(v) = u32::try_from(n)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .and_then(|b| b.checked_mul(mult))
    {
        if v > cap {
            break;
        }
        out.push(n);
        n += 1;
    }
    out
}

fn evens(max: u64, min: u64) -> impl Iterator<Item = u64> {
    (min..=max).filter(|v| v % 2 == 0)
}

fn odds(max: u64) -> impl Iterator<Item = u64> {
    (3..=max).filter(|v| v % 2 == 1)
}

/// Runs one identity over its grid. Identities with a fib and a lucas form
/// produce one report per form.
pub fn fuzz_lemma(id: LemmaId, grid: &Grid) -> Vec<FuzzReport> {
    let cap = grid.index_cap;
    match id {
        LemmaId::L1 => {
            let pts = (1..=grid.lemma1_n).map(|n| vec![n]).collect();
            vec![run_grid(id.to_string(), format!("n<={}", grid.lemma1_n), &["n"], pts, |v| {
                lemma1_eval(v[0])
            })]
        }
        LemmaId::L2 => {
            let pts = (1..=grid.lemma2_m)
                .flat_map(|m| exponents_within(2, m, cap, 1).into_iter().map(move |n| vec![m, n]))
                .collect();
            let g = format!("m<={},2^n*m<={cap}", grid.lemma2_m);
            vec![run_grid(id.to_string(), g, &["m", "n"], pts, |v| lemma2_eval(v[0], v[1]))]
        }
        LemmaId::L3 => [SeqKind::Fib, SeqKind::Lucas]
            .into_iter()
            .map(|kind| {
                let pts = (1..=grid.lemma3_q)
                    .flat_map(|q| (1..=grid.lemma3_m).map(move |m| vec![q, m]))
                    .collect();
                let g = format!("q<={},m<={}", grid.lemma3_q, grid.lemma3_m);
                run_grid(format!("{id}-{}", kind.name()), g, &["q", "m"], pts, move |v| {
                    lemma3_eval(kind, v[0], v[1])
                })
            })
            .collect(),
        LemmaId::L4 => [SeqKind::Fib, SeqKind::Lucas]
            .into_iter()
            .map(|kind| {
                let pts = (1..=grid.lemma4_m)
                    .flat_map(|m| exponents_within(2 * m + 1, 1, cap, 1).into_iter().map(move |n| vec![m, n]))
                    .collect();
                let g = format!("m<={},(2m+1)^n<={cap}", grid.lemma4_m);
                run_grid(format!("{id}-{}", kind.name()), g, &["m", "n"], pts, move |v| {
                    lemma4_eval(kind, v[0], v[1])
                })
            })
            .collect(),
        LemmaId::L5 => {
            let pts = evens(grid.lemma5_p, 2)
                .flat_map(|p| {
                    (1..=grid.lemma5_m).flat_map(move |m| {
                        exponents_within(p, m, cap, 1).into_iter().map(move |n| vec![p, m, n])
                    })
                })
                .collect();
            let g = format!("p<={} even,m<={},m*p^n<={cap}", grid.lemma5_p, grid.lemma5_m);
            vec![run_grid(id.to_string(), g, &["p", "m", "n"], pts, |v| lemma5_eval(v[0], v[1], v[2]))]
        }
        LemmaId::L6 | LemmaId::L6Literal => {
            let pts = odds(grid.lemma6_p)
                .flat_map(|p| {
                    evens(grid.lemma6_m, 2).flat_map(move |m| {
                        exponents_within(p, m, cap, 1).into_iter().map(move |n| vec![p, m, n])
                    })
                })
                .collect();
            let g = format!("p<={} odd,m<={} even,m*p^n<={cap}", grid.lemma6_p, grid.lemma6_m);
            let literal = id == LemmaId::L6Literal;
            vec![run_grid(id.to_string(), g, &["p", "m", "n"], pts, move |v| {
                if literal {
                    lemma6_literal_eval(v[0], v[1], v[2])
                } else {
                    lemma6_eval(v[0], v[1], v[2])
                }
            })]
        }
        LemmaId::L7 => {
            let pts = odds(grid.lemma7_p)
                .flat_map(|p| exponents_within(p, 1, cap, 1).into_iter().map(move |n| vec![p, n]))
                .collect();
            let g = format!("p<={} odd,p^n<={cap}", grid.lemma7_p);
            vec![run_grid(id.to_string(), g, &["p", "n"], pts, |v| lemma7_eval(v[0], v[1]))]
        }
        LemmaId::L8 => {
            let pts = evens(grid.lemma8_p, 2)
                .flat_map(|p| exponents_within(p, 1, cap, 2).into_iter().map(move |n| vec![p, n]))
                .collect();
            let g = format!("p<={} even,p^n<={cap}", grid.lemma8_p);
            vec![run_grid(id.to_string(), g, &["p", "n"], pts, |v| lemma8_eval(v[0], v[1]))]
        }
        LemmaId::Ratio => [SeqKind::Fib, SeqKind::Lucas]
            .into_iter()
            .map(|kind| {
                let r = grid.ratio_max;
                let pts = (1..=r).flat_map(|l| (1..=r).map(move |m| vec![l, m])).collect();
                run_grid(format!("{id}-{}", kind.name()), format!("l,m<={r}"), &["l", "m"], pts, move |v| {
                    ratio_eval(kind, v[0], v[1])
                })
            })
            .collect(),
    }
}

/// Runs every identity (not the negative control) over `grid`.
pub fn fuzz_lemmas(grid: &Grid) -> Vec<FuzzReport> {
    LemmaId::ALL.iter().flat_map(|&id| fuzz_lemma(id, grid)).collect()
}

/// [`crate::identities::lemma6_eval`] with the bracket `1 + Σ_{k=1}^{(p−1)/2} L_{2mp^j}`, i.e. without
/// `k` in the Lucas index. Agrees with the real identity only for `p = 3`.
pub fn lemma6_literal_eval(p: u64, m: u64, n: u64) -> Result<IdentityCheck> {
    if p < 3 || p.is_multiple_of(2) || m < 2 || m % 2 == 1 || n < 1 {
        return Err(Error::InvalidParameter("needs odd p >= 3, even m, n >= 1".into()));
    }
    let lhs = fib_checked(mul_index(&[m, pow_index(p, n)?])?)?;
    let mut rhs = fib_checked(mul_index(&[m, p])?)?;
    for j in 1..n {
        let l = lucas_checked(mul_index(&[2, m, pow_index(p, j)?])?)?;
        rhs *= BigInt::one() + BigInt::from((p - 1) / 2) * l;
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Rearranged forms of the series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rearrangement {
    /// `Σ (L_{2·3^n} − 2)/F_{3^{n+1}} = Σ L²_{3^n}/F_{3^{n+1}}`.
    Eq16,
    /// `Σ 1/F_{3^n} = ½ Σ L_{2·3^n}/F_{3^{n+1}} + ½`.
    Eq17,
    /// `Σ 1/F_{p^n} = ½ Σ S_n/F_{p^{n+1}} + ½` for `p = 4m+3`, with
    /// `S_n = Σ_{k=0}^{2m} (−1)^k L_{2(2m+1−k)p^n}`.
    Eq19 { m: u64 },
    /// The `p = 7` case written out: `S_n = L_{6·7^n} − L_{4·7^n} + L_{2·7^n}`.
    Eq20,
    /// `Σ_{n≥1} 1/F_{mp^{n+1}} = Σ_{n≥1} S_n/F_{mp^{n+1}} − 1/F_{mp}`, p even.
    T6Split { p: u64, m: u64 },
}

use crate::exactnum::rat;

/// Verifies a rearrangement on `terms` summands.
///
/// First the summand identity is checked term by term (the first failing
/// term is returned). Then the exact finite form of the rearranged sum is
/// checked: the difference between the truncated sides is the reciprocal
/// `1/F` at the cut, computed directly from `F`.
pub fn rearrangement_check(which: Rearrangement, terms: u64) -> Result<IdentityCheck> {
    if terms == 0 {
        return Err(Error::InvalidParameter("terms must be at least 1".into()));
    }
    match which {
        Rearrangement::Eq16 => {
            let mut squares = BigRat::zero();
            for n in 0..terms {
                let l = lucas_checked(pow_index(3, n)?)?;
                let l2 = lucas_checked(mul_index(&[2, pow_index(3, n)?])?)?;
                let termwise = IdentityCheck::new(&l * &l, l2 - 2);
                if !termwise.holds {
                    return Ok(termwise);
                }
                squares += rat(&l * &l, fib_checked(pow_index(3, n + 1)?)?)?;
            }
            let t3 = SeriesSpec::new(Family::T3 { m: 1 })?;
            let rhs = series::partial_sum(&t3, terms, SumMode::Direct)?;
            Ok(IdentityCheck::new(squares, rhs))
        }
        Rearrangement::Eq17 => odd_reciprocal_rearrangement(1, terms, |n| {
            lucas_checked(mul_index(&[2, pow_index(3, n)?])?)
        }),
        Rearrangement::Eq19 { m } => {
            let big_m = 2 * m + 1;
            let p = 2 * big_m + 1;
            odd_reciprocal_rearrangement(big_m, terms, move |n| {
                let base = pow_index(p, n)?;
                let mut s = BigInt::zero();
                for k in 0..big_m {
                    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    s += sign * lucas_checked(mul_index(&[2, big_m - k, base])?)?;
                }
                Ok(s)
            })
        }
        Rearrangement::Eq20 => odd_reciprocal_rearrangement(3, terms, |n| {
            let base = pow_index(7, n)?;
            Ok(lucas_checked(mul_index(&[6, base])?)? - lucas_checked(mul_index(&[4, base])?)?
                + lucas_checked(mul_index(&[2, base])?)?)
        }),
        Rearrangement::T6Split { p, m } => {
            let spec = SeriesSpec::new(Family::T6 { p, m })?;
            let mut reciprocals = BigRat::zero();
            let mut rearranged = BigRat::zero();
            for n in 1..=terms {
                let base = mul_index(&[m, pow_index(p, n)?])?;
                let mut s = BigInt::zero();
                for k in 1..=p / 2 {
                    s += lucas_checked(mul_index(&[2 * k - 1, base])?)?;
                }
                let f = fib_checked(mul_index(&[m, pow_index(p, n + 1)?])?)?;
                let with_s = rat(s, f.clone())?;
                let recip = rat(BigInt::one(), f)?;
                let termwise = IdentityCheck::new(direct_term(&spec, n)?, &with_s - &recip);
                if !termwise.holds {
                    return Ok(termwise);
                }
                reciprocals += recip;
                rearranged += with_s;
            }
            let f_mp = fib_checked(mul_index(&[m, p])?)?;
            let f_cut = fib_checked(mul_index(&[m, pow_index(p, terms + 1)?])?)?;
            let rhs = rearranged - rat(BigInt::one(), f_mp)? + rat(BigInt::one(), f_cut)?;
            Ok(IdentityCheck::new(reciprocals, rhs))
        }
    }
}

/// Shared body of the `F_{(2M+1)^n}` rearrangements (odd `M`):
/// termwise `T3{M}(n) = S_n/F_{p^{n+1}} − 2/F_{p^{n+1}}`, then
/// `Σ_{n=0}^{N} 1/F_{p^n} = ½ Σ_{n<N} S_n/F_{p^{n+1}} + ½ + ½/F_{p^N}`.
fn odd_reciprocal_rearrangement<S>(big_m: u64, terms: u64, bracket: S) -> Result<IdentityCheck>
where
    S: Fn(u64) -> Result<BigInt>,
{
    let p = 2 * big_m + 1;
    let spec = SeriesSpec::new(Family::T3 { m: big_m })?;
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let two = BigRat::from_integer(BigInt::from(2));
    let mut reciprocals = BigRat::one(); // 1/F_1
    let mut rearranged = BigRat::zero();
    for n in 0..terms {
        let f = fib_checked(pow_index(p, n + 1)?)?;
        let with_s = rat(bracket(n)?, f.clone())?;
        let recip = rat(BigInt::one(), f)?;
        let termwise = IdentityCheck::new(direct_term(&spec, n)?, &with_s - &two * &recip);
        if !termwise.holds {
            return Ok(termwise);
        }
        reciprocals += &recip;
        rearranged += with_s;
    }
    let tail = rat(BigInt::one(), fib_checked(pow_index(p, terms)?)?)?;
    let rhs = &half * rearranged + &half + &half * tail;
    Ok(IdentityCheck::new(reciprocals, rhs))
}

/// Rendered partial sum and closed form for one certified series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub partial_decimal: String,
    pub target_decimal: String,
    pub agrees: bool,
}

/// Renders the certified partial sum and the closed form to `digits`
/// places and checks they agree to within `10^{−(digits−1)}`.
pub fn decimal_crosscheck(spec: &SeriesSpec, digits: u32) -> Result<CrossCheck> {
    let report = series::certify(spec, digits)?;
    let partial_decimal = QuadRat::from(&report.partial).to_decimal(digits);
    let target_decimal = series::closed_form(spec)?.to_decimal(digits);
    let diff = parse_decimal(&partial_decimal)? - parse_decimal(&target_decimal)?;
    let tol = BigRat::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize - 1));
    Ok(CrossCheck {
        agrees: diff.abs() <= tol,
        partial_decimal,
        target_decimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> Grid {
        Grid {
            lemma1_n: 40,
            lemma2_m: 5,
            lemma3_q: 10,
            lemma3_m: 6,
            lemma4_m: 3,
            lemma5_p: 6,
            lemma5_m: 3,
            lemma6_p: 7,
            lemma6_m: 4,
            lemma7_p: 7,
            lemma8_p: 6,
            ratio_max: 5,
            index_cap: 5_000,
        }
    }

    #[test]
    fn small_grid_passes() {
        for report in fuzz_lemmas(&small_grid()) {
            assert!(report.passed(), "{report}: {:?}", report.failures.first());
            assert!(report.cases > 0, "{report}");
        }
    }

    #[test]
    fn lemma3_case_count() {
        let reports = fuzz_lemma(LemmaId::L3, &Grid { lemma3_q: 50, lemma3_m: 25, ..small_grid() });
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.cases == 1250 && r.passed()));
    }

    #[test]
    fn lemma1_case_count() {
        let reports = fuzz_lemma(LemmaId::L1, &Grid { lemma1_n: 500, ..small_grid() });
        assert_eq!(reports[0].cases, 500);
        assert!(reports[0].passed());
    }

    #[test]
    fn literal_lemma6_fails_from_p5() {
        let report = &fuzz_lemma(LemmaId::L6Literal, &small_grid())[0];
        assert!(!report.passed());
        assert!(report.failures.iter().all(|f| !f.params.starts_with("p=3,")));
        assert!(lemma6_literal_eval(3, 2, 3).unwrap().holds);
        assert!(!lemma6_literal_eval(5, 2, 2).unwrap().holds);
    }

    #[test]
    fn reports_are_deterministic() {
        let g = small_grid();
        assert_eq!(fuzz_lemma(LemmaId::L6Literal, &g), fuzz_lemma(LemmaId::L6Literal, &g));
        assert_eq!(
            fuzz_lemma(LemmaId::L4, &g)[0].to_string(),
            "lemma4-fib [m<=3,(2m+1)^n<=5000]: 16/16 ok"
        );
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(exponents_within(2, 1, 16, 1), vec![1, 2, 3, 4]);
        assert_eq!(exponents_within(3, 2, 54, 1), vec![1, 2, 3]);
        assert_eq!(exponents_within(4, 1, 64, 2), vec![2, 3]);
        assert!(exponents_within(10, 1, 5, 1).is_empty());
    }

    #[test]
    fn rearrangements_hold() {
        for n in 1..=5 {
            assert!(rearrangement_check(Rearrangement::Eq16, n).unwrap().holds);
            assert!(rearrangement_check(Rearrangement::Eq17, n).unwrap().holds);
        }
        for m in 0..=2 {
            assert!(rearrangement_check(Rearrangement::Eq19 { m }, 2).unwrap().holds);
        }
        assert!(rearrangement_check(Rearrangement::Eq20, 3).unwrap().holds);
        assert!(rearrangement_check(Rearrangement::T6Split { p: 2, m: 1 }, 6).unwrap().holds);
        assert!(rearrangement_check(Rearrangement::T6Split { p: 4, m: 3 }, 2).unwrap().holds);
        assert!(rearrangement_check(Rearrangement::Eq16, 0).is_err());
    }

    #[test]
    fn eq20_first_summand() {
        // (L_6 − L_4 + L_2)/F_7 = 14/13, and the T3{m=3} term is that minus 2/13
        let spec = SeriesSpec::new(Family::T3 { m: 3 }).unwrap();
        let t0 = direct_term(&spec, 0).unwrap();
        assert_eq!(t0, BigRat::new(BigInt::from(12), BigInt::from(13)));
    }

    #[test]
    fn crosscheck_examples() {
        let t1 = SeriesSpec::new(Family::T1).unwrap();
        let c = decimal_crosscheck(&t1, 9).unwrap();
        assert!(c.agrees);
        assert_eq!(c.target_decimal, "2.381966011");
        let r2 = SeriesSpec::new(Family::R2).unwrap();
        let c = decimal_crosscheck(&r2, 6).unwrap();
        assert!(c.agrees);
        assert_eq!(c.target_decimal, "1.381966");
        let t8 = SeriesSpec::new(Family::T8 { p: 3 }).unwrap();
        let c = decimal_crosscheck(&t8, 10).unwrap();
        assert!(c.agrees);
        assert_eq!(c.target_decimal, "0.5000000000");
        assert_eq!(c.partial_decimal, "0.5000000000");
    }
}
