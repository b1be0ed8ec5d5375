//! Exact rational arithmetic.
//!
//! Every number in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere on the exact paths; `f64` appears only in the
//! diagnostic oracle of the Verlinde evaluator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// True if the value is an integer (denominator 1 after reduction).
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Render a rational the way the reports expect: `p` for integers,
/// `p/q` otherwise.
pub fn fmt_rat(x: &Rational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// n! as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Nearest `f64` to an exact rational; used only by the float oracle.
pub fn to_f64(x: &Rational) -> f64 {
    let num = x.numer();
    let den = x.denom();
    // Scale down huge operands together so the quotient stays in range.
    let bits = num.bits().max(den.bits());
    if bits <= 52 {
        let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
        n / d
    } else {
        let shift = bits - 52;
        let n = num >> shift;
        let d = den >> shift;
        let n: f64 = n.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = d.to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
}

/// Divides a list of rationals by the smallest positive rational that makes
/// all entries coprime integers, keeping the original signs. Returns `None`
/// for the all-zero list.
pub fn to_coprime_integers(values: &[Rational]) -> Option<Vec<BigInt>> {
    use num_integer::Integer;
    if values.iter().all(|v| v.is_zero()) {
        return None;
    }
    // Common denominator.
    let mut denom = BigInt::one();
    for v in values {
        denom = denom.lcm(v.denom());
    }
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Same as [`to_coprime_integers`] but oriented so the first nonzero entry
/// is positive.
pub fn to_coprime_integers_positive(values: &[Rational]) -> Option<Vec<BigInt>> {
    let mut out = to_coprime_integers(values)?;
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut out {
                *x = -x.clone();
            }
        }
    }
    Some(out)
}
