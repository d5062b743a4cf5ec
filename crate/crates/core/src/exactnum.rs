//! Exact numbers: rationals and the quadratic field Q(√5).
//!
//! [`QuadRat`] stores `(a + b·√5)/d` as three integers kept in canonical
//! form (`d > 0`, `gcd(|a|, |b|, d) = 1`), so equality of values is plain
//! componentwise equality. Signs are decided with integer comparisons only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::ops::Gcd;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always reduced with a positive denominator.
pub type BigRat = BigRational;

/// An element `(a + b·√5)/d` of Q(√5) in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl QuadRat {
    /// Builds the canonical representative of `(a + b·√5)/d`.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(a.into(), b.into(), d))
    }

    fn normalized(mut a: BigInt, mut b: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!d.is_zero());
        if a.is_zero() && b.is_zero() {
            return Self::zero();
        }
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        let g = gcd(&gcd(&a, &b), &d);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            d /= &g;
        }
        QuadRat { a, b, d }
    }

    pub fn zero() -> Self {
        QuadRat {
            a: BigInt::zero(),
            b: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    /// The golden ratio α = (1 + √5)/2.
    pub fn alpha() -> Self {
        Self::normalized(1.into(), 1.into(), 2.into())
    }

    /// The conjugate root β = (1 − √5)/2.
    pub fn beta() -> Self {
        Self::normalized(1.into(), (-1).into(), 2.into())
    }

    pub fn sqrt5() -> Self {
        Self::normalized(0.into(), 1.into(), 1.into())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        QuadRat {
            a: n.into(),
            b: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn from_rat(r: &BigRat) -> Self {
        // BigRational is already reduced with a positive denominator.
        QuadRat {
            a: r.numer().clone(),
            b: BigInt::zero(),
            d: r.denom().clone(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the √5 component vanishes.
    pub fn to_rational(&self) -> Option<BigRat> {
        self.is_rational()
            .then(|| BigRat::new_raw(self.a.clone(), self.d.clone()))
    }

    /// Galois conjugate `(a − b·√5)/d`.
    pub fn conj(&self) -> Self {
        QuadRat {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// Field norm `x · conj(x) = (a² − 5b²)/d²`.
    pub fn norm(&self) -> BigRat {
        let n = &self.a * &self.a - BigInt::from(5) * &self.b * &self.b;
        BigRat::new(n, &self.d * &self.d)
    }

    /// Multiplicative inverse, rationalised through the conjugate.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let den = &self.a * &self.a - BigInt::from(5) * &self.b * &self.b;
        Ok(Self::normalized(&self.d * &self.a, -(&self.d * &self.b), den))
    }

    pub fn checked_div(&self, rhs: &QuadRat) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        Self::normalized(
            &self.a * k.numer(),
            &self.b * k.numer(),
            &self.d * k.denom(),
        )
    }

    /// `self^exp` by binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadRat::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact sign of the real number `(a + b·√5)/d`: -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Sign::NoSign, Sign::NoSign) => 0,
            (Sign::Minus, Sign::Minus) | (Sign::Minus, Sign::NoSign) | (Sign::NoSign, Sign::Minus) => -1,
            (Sign::Plus, Sign::Plus) | (Sign::Plus, Sign::NoSign) | (Sign::NoSign, Sign::Plus) => 1,
            _ => {
                // Mixed signs: the component with the larger square wins.
                // a² = 5b² has no nonzero solution.
                let a2 = &self.a * &self.a;
                let b2 = BigInt::from(5) * &self.b * &self.b;
                let dominant = if a2 > b2 { sa } else { sb };
                if dominant == Sign::Plus {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `floor(self · 10^digits)`, computed exactly.
    pub fn floor_scaled(&self, digits: u32) -> BigInt {
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let a = &self.a * &scale;
        let b = &self.b * &scale;
        // (a + b√5)/d lies in [(a + ⌊b√5⌋)/d, (a + ⌊b√5⌋ + 1)/d) and the
        // numerator is an integer, so its floor is ⌊(a + ⌊b√5⌋)/d⌋.
        (a + floor_sqrt5_times(&b)).div_floor(&self.d)
    }

    /// Decimal rendering with `digits` places after the point, correctly
    /// rounded (ties away from zero).
    pub fn to_decimal(&self, digits: u32) -> String {
        let negative = self.signum() < 0;
        let x = if negative { -self } else { self.clone() };
        // round(y) = floor(y + 1/2) = floor((2a + d + 2b√5) / 2d) on the scaled value
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let two = BigInt::from(2);
        let num = &two * &x.a * &scale + &x.d + floor_sqrt5_times(&(&two * &x.b * &scale));
        let rounded = num.div_floor(&(&two * &x.d));
        format_fixed(&rounded, digits, negative)
    }
}

/// `floor(b·√5)` for any integer `b`.
fn to_ibig(x: &BigInt) -> IBig {
    let (sign, bytes) = x.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

fn from_ubig(x: &UBig) -> BigInt {
    BigInt::from_bytes_le(Sign::Plus, &x.to_le_bytes())
}

/// Nonnegative gcd. Uses dashu's Lehmer gcd: the binary gcd in num-integer
/// takes close to a second at the operand sizes series partial sums reach.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() || a.magnitude().is_one() || b.magnitude().is_one() {
        return if b.is_zero() { a.abs() } else { BigInt::one() };
    }
    if a.bits() < 128 && b.bits() < 128 {
        return a.gcd(b);
    }
    from_ubig(&to_ibig(a).gcd(&to_ibig(b)))
}

/// Reduced `num/den`.
pub fn rat(num: BigInt, den: BigInt) -> Result<BigRat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
    let g = gcd(&num, &den);
    if !g.is_one() {
        num /= &g;
        den /= &g;
    }
    Ok(BigRat::new_raw(num, den))
}

/// Exact sum with a single reduction at the end.
pub fn rat_sum<'a>(terms: impl IntoIterator<Item = &'a BigRat>) -> BigRat {
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for t in terms {
        if t.denom() == &den {
            num += t.numer();
        } else {
            num = num * t.denom() + t.numer() * &den;
            den *= t.denom();
        }
    }
    rat(num, den).expect("denominators are nonzero")
}

fn floor_sqrt5_times(b: &BigInt) -> BigInt {
    if b.is_zero() {
        return BigInt::zero();
    }
    let root: BigInt = Roots::sqrt(&(BigInt::from(5) * b * b));
    if b.is_positive() {
        root
    } else {
        // 5b² is never a perfect square for b ≠ 0, so the ceiling is root + 1.
        -(root + BigInt::one())
    }
}

fn format_fixed(scaled: &BigInt, digits: u32, negative: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let (int_part, frac) = scaled.div_rem(&scale);
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits as usize)
}

/// Renders a rational with `digits` correctly rounded places after the point.
pub fn rat_to_decimal(x: &BigRat, digits: u32) -> String {
    QuadRat::from_rat(x).to_decimal(digits)
}

/// Scientific rendering `d.ddde-N` with `sig` significant digits.
pub fn rat_to_scientific(x: &BigRat, sig: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let negative = x.is_negative();
    let x = x.abs();
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> BigRat {
        let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            BigRat::from_integer(p)
        } else {
            BigRat::new(BigInt::one(), p)
        }
    };
    let mut exp = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    if x < pow10(exp) {
        exp -= 1;
    }
    let scaled = &x * pow10(sig as i64 - 1 - exp);
    let mut mantissa = (scaled + BigRat::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if mantissa == num_traits::pow(ten.clone(), sig as usize) {
        mantissa /= &ten;
        exp += 1;
    }
    let digits = mantissa.to_string();
    let (lead, rest) = digits.split_at(1);
    let sign = if negative { "-" } else { "" };
    if rest.is_empty() {
        format!("{sign}{lead}e{exp}")
    } else {
        format!("{sign}{lead}.{rest}e{exp}")
    }
}

/// Parses a decimal literal (`-12.034`, `1.5e-7`) into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRat> {
    let bad = || Error::Parse(s.to_string());
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i64;
    let p = num_traits::pow(BigInt::from(10), shift.unsigned_abs() as usize);
    let value = if shift >= 0 {
        BigRat::from_integer(digits * p)
    } else {
        BigRat::new(digits, p)
    };
    Ok(if negative { -value } else { value })
}

impl Default for QuadRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<BigRat> for QuadRat {
    fn from(r: BigRat) -> Self {
        QuadRat::from_rat(&r)
    }
}

impl From<&BigRat> for QuadRat {
    fn from(r: &BigRat) -> Self {
        QuadRat::from_rat(r)
    }
}

impl From<BigInt> for QuadRat {
    fn from(n: BigInt) -> Self {
        QuadRat::from_integer(n)
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        QuadRat::from_integer(n)
    }
}

/// `(a+b*sqrt(5))/d`, e.g. `(7-1*sqrt(5))/2`.
impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt(5))/{}", self.a, op, self.b.abs(), self.d)
    }
}

impl FromStr for QuadRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, d) = compact.rsplit_once('/').ok_or_else(bad)?;
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix("*sqrt(5))"))
            .ok_or_else(bad)?;
        // split at the sign that separates a from b (skip a leading sign on a)
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let (a, b) = body.split_at(split);
        let b = b.strip_prefix('+').unwrap_or(b);
        let a: BigInt = a.parse().map_err(|_| bad())?;
        let b: BigInt = b.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        QuadRat::new(a, b, d)
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: &QuadRat) -> QuadRat {
        if self.d == rhs.d {
            return QuadRat::normalized(&self.a + &rhs.a, &self.b + &rhs.b, self.d.clone());
        }
        QuadRat::normalized(
            &self.a * &rhs.d + &rhs.a * &self.d,
            &self.b * &rhs.d + &rhs.b * &self.d,
            &self.d * &rhs.d,
        )
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: &QuadRat) -> QuadRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: &QuadRat) -> QuadRat {
        // (a + b√5)(a' + b'√5) = (aa' + 5bb') + (ab' + a'b)√5
        let a = &self.a * &rhs.a + BigInt::from(5) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        QuadRat::normalized(a, b, &self.d * &rhs.d)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QuadRat> for &'a QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_gcd_and_sums() {
        let f = crate::lucas::fib(3000);
        let g = crate::lucas::fib(1500);
        // gcd(F_m, F_n) = F_gcd(m, n)
        assert_eq!(gcd(&f, &crate::lucas::fib(2000)), crate::lucas::fib(1000));
        assert_eq!(gcd(&-f.clone(), &g), g);
        assert_eq!(gcd(&BigInt::zero(), &BigInt::from(-4)), BigInt::from(4));
        let r = |n: i64, d: i64| BigRat::new(n.into(), d.into());
        assert_eq!(rat(BigInt::from(6), BigInt::from(-4)).unwrap(), r(-3, 2));
        assert!(rat(BigInt::one(), BigInt::zero()).is_err());
        assert_eq!(rat_sum(&[r(1, 2), r(1, 3), r(1, 6)]), r(1, 1));
        assert_eq!(rat_sum(&[]), r(0, 1));
    }

    fn q(a: i64, b: i64, d: i64) -> QuadRat {
        QuadRat::new(a, b, d).unwrap()
    }

    fn parts(x: &QuadRat) -> (BigInt, BigInt, BigInt) {
        (x.a.clone(), x.b.clone(), x.d.clone())
    }

    fn triple(a: i64, b: i64, d: i64) -> (BigInt, BigInt, BigInt) {
        (a.into(), b.into(), d.into())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(parts(&q(2, 2, 4)), triple(1, 1, 2));
        assert_eq!(parts(&q(7, -3, -2)), triple(-7, 3, 2));
        assert_eq!(parts(&q(0, 0, 5)), triple(0, 0, 1));
        assert_eq!(QuadRat::new(1, 1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn add_examples() {
        assert_eq!(QuadRat::alpha() + QuadRat::beta(), q(1, 0, 1));
        // α⁴ by repeated multiplication
        let a2 = QuadRat::alpha() * QuadRat::alpha();
        let a4 = &a2 * &a2;
        assert_eq!(a4, q(7, 3, 2));
        assert_eq!(q(1, 0, 1) + a4, q(9, 3, 2));
        let x = q(-3, 5, 7);
        assert_eq!(&x + &QuadRat::zero(), x);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(QuadRat::alpha() * QuadRat::beta(), q(-1, 0, 1));
        assert_eq!(QuadRat::alpha() * QuadRat::alpha(), q(3, 1, 2));
        let x = q(11, -4, 3);
        assert_eq!(&x * &QuadRat::one(), x);
    }

    #[test]
    fn inv_examples() {
        let inv_alpha = QuadRat::alpha().inv().unwrap();
        assert_eq!(inv_alpha, q(-1, 1, 2));
        assert_eq!(inv_alpha, -QuadRat::beta());
        assert_eq!(QuadRat::alpha() * inv_alpha, QuadRat::one());
        assert_eq!(q(2, 0, 1).inv().unwrap(), q(1, 0, 2));
        assert_eq!(q(0, 1, 1).inv().unwrap(), q(0, 1, 5));
        assert_eq!(QuadRat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q(1, -1, 2).signum(), -1);
        assert_eq!(q(0, 0, 1).signum(), 0);
        assert_eq!(q(7, -3, 1).signum(), 1);
        assert_eq!(q(-7, 3, 1).signum(), -1);
        assert_eq!(q(-2, 1, 1).signum(), 1);
        assert!(QuadRat::beta() < QuadRat::zero());
        assert!(QuadRat::alpha() > QuadRat::one());
    }

    #[test]
    fn decimal_examples() {
        assert_eq!(q(7, -1, 2).to_decimal(9), "2.381966011");
        assert_eq!(q(5, -1, 2).to_decimal(6), "1.381966");
        assert_eq!(q(1, 0, 8).to_decimal(5), "0.12500");
        assert_eq!(q(1, 0, 8).to_decimal(2), "0.13");
        assert_eq!(q(-1, 0, 8).to_decimal(2), "-0.13");
        assert_eq!(q(-1, 0, 1000).to_decimal(2), "0.00");
        assert_eq!(QuadRat::beta().to_decimal(4), "-0.6180");
        assert_eq!(QuadRat::sqrt5().to_decimal(0), "2");
        assert_eq!(q(19, 0, 10).to_decimal(0), "2");
    }

    #[test]
    fn floor_scaled_matches_definition() {
        assert_eq!(QuadRat::sqrt5().floor_scaled(3), BigInt::from(2236));
        assert_eq!((-QuadRat::sqrt5()).floor_scaled(3), BigInt::from(-2237));
        assert_eq!(q(3, 0, 2).floor_scaled(0), BigInt::from(1));
        assert_eq!(q(-3, 0, 2).floor_scaled(0), BigInt::from(-2));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q(7, -1, 2).to_string(), "(7-1*sqrt(5))/2");
        assert_eq!(q(1, 0, 8).to_string(), "(1+0*sqrt(5))/8");
        assert_eq!(q(-3, 2, 1).to_string(), "(-3+2*sqrt(5))/1");
        for x in [q(7, -1, 2), q(1, 0, 8), q(-3, 2, 1), q(-3, -2, 7)] {
            assert_eq!(x.to_string().parse::<QuadRat>().unwrap(), x);
        }
        assert_eq!("(14 - 2*sqrt(5)) / 4".parse::<QuadRat>().unwrap(), q(7, -1, 2));
        assert!("7-sqrt(5)/2".parse::<QuadRat>().is_err());
        assert!("(1+1*sqrt(5))/0".parse::<QuadRat>().is_err());
    }

    #[test]
    fn scientific() {
        let r = |n: i64, d: i64| BigRat::new(n.into(), d.into());
        assert_eq!(rat_to_scientific(&r(1, 8), 3), "1.25e-1");
        assert_eq!(rat_to_scientific(&r(999_999, 1), 3), "1.00e6");
        assert_eq!(rat_to_scientific(&r(-2, 3), 4), "-6.667e-1");
        assert_eq!(rat_to_scientific(&r(1, 1), 1), "1e0");
        assert_eq!(rat_to_scientific(&r(0, 1), 3), "0");
    }

    #[test]
    fn decimal_parsing() {
        let r = |n: i64, d: i64| BigRat::new(n.into(), d.into());
        assert_eq!(parse_decimal("0.12500").unwrap(), r(1, 8));
        assert_eq!(parse_decimal("-2.5").unwrap(), r(-5, 2));
        assert_eq!(parse_decimal("1.25e-1").unwrap(), r(1, 8));
        assert_eq!(parse_decimal("3e2").unwrap(), r(300, 1));
        assert_eq!(parse_decimal(".5").unwrap(), r(1, 2));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("-").is_err());
    }

    #[test]
    fn rational_embedding() {
        let r = BigRat::new(BigInt::from(-6), BigInt::from(4));
        let x = QuadRat::from_rat(&r);
        assert_eq!(parts(&x), triple(-3, 0, 2));
        assert_eq!(x.to_rational(), Some(r));
        assert_eq!(QuadRat::alpha().to_rational(), None);
        assert_eq!(QuadRat::alpha().norm(), BigRat::from_integer(BigInt::from(-1)));
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(QuadRat::alpha().pow(0), QuadRat::one());
        assert_eq!(QuadRat::alpha().pow(4), q(7, 3, 2));
        assert_eq!(QuadRat::sqrt5().pow(3), q(0, 5, 1));
    }
}
