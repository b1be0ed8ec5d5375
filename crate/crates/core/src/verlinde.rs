//! Exact and floating-point evaluation of the rank-2 Verlinde formula
//!
//!   h^0 = -m^{g-1} sum_{i=1}^{2m-1} (-1)^i cosec^{2g-2}(i pi / 2m).
//!
//! The exact route works in Q(zeta_{4m}) with zeta a primitive 4m-th root
//! of unity: `zeta^m` plays the imaginary unit, so
//! `cosec(i pi/2m) = 2 zeta^m / (zeta^i - zeta^{4m-i})` and the whole sum
//! is a single field element whose residue must collapse to a rational
//! integer. Near `i = 2m-1` the cosecant powers grow like `(2m/pi)^{2g-2}`
//! and the alternating sum cancels massively, so the float route is only
//! a diagnostic oracle with a calibrated validity range.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cyclotomic::{CycloError, CyclotomicElement};
use crate::rat::{rat_int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerlindeError {
    /// The exact sum did not collapse to a rational integer; this would
    /// signal an arithmetic bug, never valid input.
    #[error("exact Verlinde sum is not a rational integer: residue {0}")]
    NonIntegral(String),
    /// The float oracle refused (outside its calibrated range) or its
    /// rounding residual exceeded tolerance.
    #[error("float evaluation unreliable: {0}")]
    FloatUnreliable(String),
    #[error(transparent)]
    Cyclotomic(#[from] CycloError),
}

/// Parameters of the formula: genus `g >= 2` and level index `m >= 1`
/// (the formula gives `dim H^0(M_g, L^{m-1})`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerlindeParams {
    pub genus: u32,
    pub level: u32,
}

impl VerlindeParams {
    pub fn new(genus: u32, level: u32) -> Self {
        assert!(genus >= 2, "the formula needs genus >= 2");
        assert!(level >= 1, "the level index must be >= 1");
        VerlindeParams { genus, level }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Float,
}

/// `cosec^{exponent}(i pi / 2m)` as an element of Q(zeta_{4m});
/// `1 <= i <= 2m - 1`, even exponent.
pub fn cosec_power(i: u32, m: u32, exponent: u32) -> Result<CyclotomicElement, VerlindeError> {
    assert!(m >= 1 && (1..=2 * m - 1).contains(&i), "need 1 <= i <= 2m-1");
    assert!(exponent >= 2 && exponent.is_multiple_of(2), "even exponent >= 2");
    let n = 4 * m;
    let diff = CyclotomicElement::zeta_pow(n, i).sub(&CyclotomicElement::zeta_pow(n, n - i));
    // zeta^i != zeta^{-i} for 1 <= i <= 2m-1, so the difference is a
    // nonzero field element.
    let inv = diff.inverse()?;
    let base = CyclotomicElement::zeta_pow(n, m)
        .scale(&rat_int(2))
        .mul(&inv);
    Ok(base.pow(exponent))
}

/// Exact evaluation; the result is proved integral by the arithmetic
/// itself (the reduced residue must be a constant polynomial).
pub fn verlinde_exact(params: VerlindeParams) -> Result<BigInt, VerlindeError> {
    let m = params.level;
    let exponent = 2 * params.genus - 2;
    let n = 4 * m;
    let mut sum = CyclotomicElement::zero(n);
    for i in 1..=(2 * m - 1) {
        let term = cosec_power(i, m, exponent)?;
        sum = if i % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
    }
    let m_rat = rat_int(m as i64);
    let mut prefactor = rat_int(-1);
    for _ in 0..(params.genus - 1) {
        prefactor *= &m_rat;
    }
    let total = sum.scale(&prefactor);
    match total.as_integer() {
        Some(r) => Ok(r.numer().clone()),
        None => Err(VerlindeError::NonIntegral(
            total.coeffs().render("zeta"),
        )),
    }
}

/// Float-oracle evaluation: rounds the double-precision sum and reports
/// the rounding residual. Refuses outside the calibrated range
/// `g <= 6, m <= 20`.
pub fn verlinde_float(params: VerlindeParams) -> Result<(BigInt, f64), VerlindeError> {
    if params.genus > 6 || params.level > 20 {
        return Err(VerlindeError::FloatUnreliable(format!(
            "calibrated only for genus <= 6 and level <= 20, got g={} m={}",
            params.genus, params.level
        )));
    }
    let m = params.level as f64;
    let exponent = (2 * params.genus - 2) as i32;
    let mut sum = 0.0f64;
    for i in 1..=(2 * params.level - 1) {
        let angle = (i as f64) * std::f64::consts::PI / (2.0 * m);
        let term = angle.sin().recip().powi(exponent);
        sum += if i % 2 == 0 { term } else { -term };
    }
    let value = -m.powi(params.genus as i32 - 1) * sum;
    let rounded = value.round();
    let residual = (value - rounded).abs();
    let tolerance = 1e-6 * rounded.abs().max(1.0);
    if residual > tolerance {
        return Err(VerlindeError::FloatUnreliable(format!(
            "residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )));
    }
    let as_int = BigInt::from(rounded as i64);
    Ok((as_int, residual))
}

/// Unified entry point used by the command line.
pub fn verlinde_number(params: VerlindeParams, method: Method) -> Result<BigInt, VerlindeError> {
    match method {
        Method::Exact => verlinde_exact(params),
        Method::Float => verlinde_float(params).map(|(v, _)| v),
    }
}

/// Exact value as a rational, for comparisons against index polynomials.
pub fn verlinde_exact_rational(params: VerlindeParams) -> Result<Rational, VerlindeError> {
    Ok(Rational::from_integer(verlinde_exact(params)?))
}

/// True if the exact value is a nonnegative integer.
pub fn is_nonnegative(value: &BigInt) -> bool {
    !value.is_negative() || value.is_zero()
}
