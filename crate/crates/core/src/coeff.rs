//! Coefficient domains for ring elements and truncated power series.
//!
//! Cohomology computations here run either over plain rationals or over
//! rational polynomials in the twist parameter `k`, so the ring engine is
//! generic over this small trait instead of being duplicated.

use std::fmt::Debug;

use crate::poly::UniPoly;
use crate::rat::Rational;

/// A commutative Q-algebra usable as a coefficient domain.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;
    /// Render for reports.
    fn render(&self) -> String;
}

impl Coeff for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn render(&self) -> String {
        crate::rat::fmt_rat(self)
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        UniPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UniPoly::sub(self, other)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }
    fn from_rational(r: &Rational) -> Self {
        UniPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        UniPoly::scale(self, r)
    }
    fn render(&self) -> String {
        UniPoly::render(self, "k")
    }
}
