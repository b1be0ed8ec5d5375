//! Truncated formal power series.
//!
//! A series is a plain coefficient slice of fixed length; index = power of
//! the series variable. All operations are exact and truncate at the
//! requested length. The generic versions run over any [`Coeff`] domain so
//! the same division code serves both numeric series and series whose
//! coefficients are polynomials in the twist parameter.

use crate::coeff::Coeff;
use crate::rat::{factorial, rat_int, Rational};

pub fn series_mul<C: Coeff>(a: &[C], b: &[C], len: usize) -> Vec<C> {
    let mut out = vec![C::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Quotient of truncated series. The denominator must have constant
/// term 1 so no coefficient inversion is ever needed.
pub fn series_div<C: Coeff>(num: &[C], den: &[C], len: usize) -> Vec<C> {
    assert!(
        !den.is_empty() && den[0] == C::one(),
        "series division requires a denominator with constant term 1"
    );
    let mut out = vec![C::zero(); len];
    for n in 0..len {
        let mut acc = num.get(n).cloned().unwrap_or_else(C::zero);
        for i in 1..=n {
            if let Some(d) = den.get(i) {
                acc = acc.sub(&d.mul(&out[n - i]));
            }
        }
        out[n] = acc;
    }
    out
}

/// Reciprocal of a series with constant term 1.
pub fn series_recip<C: Coeff>(a: &[C], len: usize) -> Vec<C> {
    let mut one = vec![C::zero(); len];
    one[0] = C::one();
    series_div(&one, a, len)
}

/// Formal logarithm of a series with constant term 1, via
/// `log a = integral of a'/a`.
pub fn series_log(a: &[Rational], len: usize) -> Vec<Rational> {
    assert!(!a.is_empty() && a[0] == Rational::from_integer(1.into()));
    let mut deriv = vec![Rational::from_integer(0.into()); len];
    for j in 1..a.len().min(len + 1) {
        if j - 1 < len {
            deriv[j - 1] = &a[j] * rat_int(j as i64);
        }
    }
    let quot = series_div(&deriv, a, len);
    let mut out = vec![Rational::from_integer(0.into()); len];
    for j in 1..len {
        out[j] = &quot[j - 1] / rat_int(j as i64);
    }
    out
}

/// `exp(x)` to the given length.
pub fn exp_series(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| Rational::from_integer(1.into()) / factorial(j as u32))
        .collect()
}

/// `sinh(t)/t` written in the even variable `u = t^2`.
pub fn sinh_over_t_in_u(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| Rational::from_integer(1.into()) / factorial(2 * j as u32 + 1))
        .collect()
}

/// `cosh(t)` written in the even variable `u = t^2`.
pub fn cosh_in_u(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| Rational::from_integer(1.into()) / factorial(2 * j as u32))
        .collect()
}

/// `t*cosh(t)/sinh(t)` written in `u = t^2`; the series that generates the
/// L-genus.
pub fn t_coth_t_in_u(len: usize) -> Vec<Rational> {
    series_div(&cosh_in_u(len), &sinh_over_t_in_u(len), len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn division_inverts_multiplication() {
        let a: Vec<Rational> = vec![rat_int(1), rat(3, 2), rat(-1, 5), rat_int(7)];
        let b: Vec<Rational> = vec![rat_int(1), rat(-2, 3), rat(1, 4), rat_int(0)];
        let prod = series_mul(&a, &b, 4);
        assert_eq!(series_div(&prod, &b, 4), a);
    }

    #[test]
    fn log_of_exp_is_x() {
        let log = series_log(&exp_series(8), 8);
        let mut expect = vec![Rational::from_integer(0.into()); 8];
        expect[1] = rat_int(1);
        assert_eq!(log, expect);
    }

    #[test]
    fn t_coth_t_series() {
        // 1 + u/3 - u^2/45 + 2u^3/945 - u^4/4725, the classical expansion.
        let s = t_coth_t_in_u(5);
        assert_eq!(s[0], rat_int(1));
        assert_eq!(s[1], rat(1, 3));
        assert_eq!(s[2], rat(-1, 45));
        assert_eq!(s[3], rat(2, 945));
        assert_eq!(s[4], rat(-1, 4725));
    }
}
