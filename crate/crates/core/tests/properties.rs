use fibseries_core::exactnum::{parse_decimal, rat_to_decimal};
use fibseries_core::lucas::{fib, fib_lucas_iterative, lucas};
use fibseries_core::series::{b_value, direct_term, gap, partial_sum};
use fibseries_core::{alpha_pow, binet_roundtrip, fib_lucas, BigRat, Family, QuadRat, SeriesSpec, SumMode};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn quad() -> impl Strategy<Value = QuadRat> {
    (-10_000i64..10_000, -10_000i64..10_000, 1i64..5_000).prop_map(|(a, b, d)| QuadRat::new(a, b, d).unwrap())
}

fn nonzero_quad() -> impl Strategy<Value = QuadRat> {
    quad().prop_filter("nonzero", |x| !x.is_zero())
}

fn rat() -> impl Strategy<Value = BigRat> {
    (-100_000i64..100_000, 1i64..100_000).prop_map(|(n, d)| BigRat::new(n.into(), d.into()))
}

fn spec(f: Family) -> SeriesSpec {
    SeriesSpec::new(f).unwrap()
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &QuadRat::zero(), x.clone());
        prop_assert!((&x + &(-x.clone())).is_zero());
    }

    #[test]
    fn multiplication_is_associative_and_commutative(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &QuadRat::one(), x.clone());
    }

    #[test]
    fn multiplication_distributes(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverse_is_exact(x in nonzero_quad()) {
        let inv = x.inv().unwrap();
        prop_assert_eq!(&x * &inv, QuadRat::one());
        prop_assert_eq!(x.signum() * inv.signum(), 1);
    }

    #[test]
    fn sign_matches_float(x in nonzero_quad()) {
        let approx = (x.a().to_string().parse::<f64>().unwrap()
            + x.b().to_string().parse::<f64>().unwrap() * 5f64.sqrt())
            / x.d().to_string().parse::<f64>().unwrap();
        if approx.abs() > 1e-6 {
            prop_assert_eq!(x.signum() as f64, approx.signum());
        }
    }

    #[test]
    fn rational_embedding_agrees(p in rat(), q in rat()) {
        let (qp, qq) = (QuadRat::from(&p), QuadRat::from(&q));
        prop_assert_eq!(&qp + &qq, QuadRat::from(&p + &q));
        prop_assert_eq!(&qp - &qq, QuadRat::from(&p - &q));
        prop_assert_eq!(&qp * &qq, QuadRat::from(&p * &q));
        if !q.is_zero() {
            prop_assert_eq!(qp.checked_div(&qq).unwrap(), QuadRat::from(&p / &q));
        }
        prop_assert_eq!(qp.cmp(&qq), p.cmp(&q));
    }

    #[test]
    fn canonical_form_is_idempotent(a in -10_000i64..10_000, b in -10_000i64..10_000, d in 1i64..5_000, k in 1i64..50) {
        let x = QuadRat::new(a, b, d).unwrap();
        let again = QuadRat::new(x.a().clone(), x.b().clone(), x.d().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(QuadRat::new(a * k, b * k, d * k).unwrap(), x.clone());
        prop_assert_eq!(QuadRat::new(-a, -b, -d).unwrap(), x.clone());
        let round: QuadRat = x.to_string().parse().unwrap();
        prop_assert_eq!(round, x);
    }

    #[test]
    fn alpha_powers_multiply(m in -300i64..300, n in -300i64..300) {
        prop_assert_eq!(alpha_pow(m) * alpha_pow(n), alpha_pow(m + n));
    }

    #[test]
    fn index_doubling(n in 0u64..5_000) {
        let (small, big) = (fib_lucas(n), fib_lucas(2 * n));
        prop_assert_eq!(big.fib, &small.fib * &small.lucas);
    }

    #[test]
    fn decimal_round_trip_within_half_ulp(x in quad(), digits in 1u32..40) {
        let text = x.to_decimal(digits);
        let back = QuadRat::from(parse_decimal(&text).unwrap());
        let half_ulp = BigRat::new(BigInt::one(), BigInt::from(2) * num_traits::pow(BigInt::from(10), digits as usize));
        prop_assert!((QuadRat::from(&half_ulp) - (back - x).abs()).signum() >= 0);
    }

    #[test]
    fn rational_decimal_round_trip(p in rat(), digits in 1u32..30) {
        let back = parse_decimal(&rat_to_decimal(&p, digits)).unwrap();
        let half_ulp = BigRat::new(BigInt::one(), BigInt::from(2) * num_traits::pow(BigInt::from(10), digits as usize));
        prop_assert!((back - p).abs() <= half_ulp);
    }
}

#[test]
fn norm_identity_through_2000() {
    for n in 0..=2000 {
        assert!(fib_lucas(n).satisfies_norm_identity(), "n = {n}");
    }
}

#[test]
fn binet_agrees_with_fast_doubling_through_1000() {
    for n in 0..=1000 {
        let pair = fib_lucas(n);
        let (f, l) = binet_roundtrip(n).unwrap();
        assert_eq!(f, BigRat::from_integer(pair.fib), "F at n = {n}");
        assert_eq!(l, BigRat::from_integer(pair.lucas), "L at n = {n}");
    }
}

#[test]
fn fast_doubling_matches_iteration() {
    for n in (0..3000).step_by(7) {
        assert_eq!(fib_lucas(n), fib_lucas_iterative(n), "n = {n}");
    }
}

fn grid_specs() -> Vec<SeriesSpec> {
    let mut out = vec![spec(Family::T1), spec(Family::R2)];
    for m in 1..=4 {
        for a in 1..=3 {
            out.push(spec(Family::T2 { m, a }));
        }
        out.push(spec(Family::T3 { m }));
        out.push(spec(Family::T4 { m }));
    }
    for m in 1..=3 {
        out.push(spec(Family::T5 { m }));
    }
    for p in [2, 4] {
        for m in 1..=3 {
            out.push(spec(Family::T6 { p, m }));
        }
        out.push(spec(Family::T9 { p }));
    }
    out.push(spec(Family::T7 { p: 5, m: 4 }));
    for p in [3, 5, 7] {
        out.push(spec(Family::T8 { p }));
    }
    out
}

/// Largest N ≤ cap whose terms stay within the index bound.
fn reachable(s: &SeriesSpec, cap: u64) -> u64 {
    (0..=cap)
        .take_while(|&n| n == 0 || direct_term(s, s.start() + n).is_ok())
        .last()
        .unwrap_or(0)
}

#[test]
fn telescoping_equivalence_within_bound() {
    for s in grid_specs() {
        for n in 0..=reachable(&s, 6) {
            assert_eq!(
                partial_sum(&s, n, SumMode::Direct).unwrap(),
                partial_sum(&s, n, SumMode::Telescoped).unwrap(),
                "{s} at N = {n}"
            );
        }
    }
}

#[test]
fn gaps_shrink_monotonically() {
    for s in grid_specs().into_iter().filter(|s| !matches!(s.family(), Family::T8 { .. })) {
        let mut prev: Option<QuadRat> = None;
        for n in 0..=reachable(&s, 6) {
            assert!(direct_term(&s, s.start() + n).unwrap() >= BigRat::zero(), "{s} term {n}");
            let g = gap(&s, n).unwrap();
            assert!(g.signum() >= 0, "{s} gap at N = {n} is negative");
            if let Some(p) = &prev {
                assert!(&g <= p, "{s} gap grows at N = {n}");
            }
            prev = Some(g);
        }
    }
}

#[test]
fn alternating_tail_bound() {
    for p in [3, 7, 11] {
        let s = spec(Family::T8 { p });
        for n in 0..reachable(&s, 6) {
            let g = gap(&s, n).unwrap().abs();
            let next = QuadRat::from(direct_term(&s, s.start() + n).unwrap().abs());
            assert!(g <= next, "T8 p={p} at N = {n}");
        }
    }
}

#[test]
fn millin_rebase_consistency() {
    let s = spec(Family::T1);
    let head = BigRat::new(7.into(), 3.into());
    for k in 0..10 {
        let internal = b_value(&s, 3).unwrap() - b_value(&s, 3 + k).unwrap();
        let full = partial_sum(&s, 3 + k, SumMode::Direct).unwrap();
        assert_eq!(QuadRat::from(&head) + internal, QuadRat::from(full), "k = {k}");
    }
    let direct: BigRat = (0..12).map(|n| BigRat::new(1.into(), fib(1 << n))).sum();
    assert_eq!(partial_sum(&s, 12, SumMode::Direct).unwrap(), direct);
}

#[test]
fn r2_is_t2_plus_reciprocals() {
    let r2 = spec(Family::R2);
    let t2 = spec(Family::T2 { m: 1, a: 1 });
    for n in 0..=12u64 {
        let extra: BigRat = (0..n).map(|j| BigRat::new(1.into(), fib(1 << (j + 2)))).sum();
        assert_eq!(
            partial_sum(&r2, n, SumMode::Direct).unwrap(),
            partial_sum(&t2, n, SumMode::Direct).unwrap() + extra,
            "N = {n}"
        );
    }
}

#[test]
fn lucas_squares_sanity() {
    for n in 0..200u64 {
        let l = lucas(n);
        let sign = if n % 2 == 0 { 2 } else { -2 };
        assert_eq!(&l * &l, lucas(2 * n) + BigInt::from(sign));
    }
}
