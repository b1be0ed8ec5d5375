//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Elements are residue classes of rational polynomials modulo the n-th
//! cyclotomic polynomial, which is computed by exact division of `x^n - 1`
//! by the cyclotomic polynomials of the proper divisors. Inversion runs
//! the extended Euclidean algorithm against the modulus; since the
//! modulus is irreducible over Q, every nonzero residue is invertible.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_traits::One;
use thiserror::Error;

use crate::poly::UniPoly;
use crate::rat::{is_integer, rat_int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    /// Attempt to invert the zero residue.
    #[error("zero element of Q(zeta_{0}) is not invertible")]
    NotInvertible(u32),
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, UniPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, UniPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, `n >= 1`, with (integer) rational
/// coefficients: `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly {
    assert!(n >= 1);
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        UniPoly::from_int_coeffs(&[-1, 1])
    } else {
        let mut coeffs = vec![rat_int(0); n as usize + 1];
        coeffs[0] = rat_int(-1);
        coeffs[n as usize] = rat_int(1);
        let mut quotient = UniPoly::from_coeffs(coeffs);
        for d in 1..n {
            if n.is_multiple_of(d) {
                let (q, r) = quotient.divrem(&cyclotomic_polynomial(d));
                assert!(r.is_zero(), "cyclotomic division must be exact");
                quotient = q;
            }
        }
        quotient
    };
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// A residue class modulo `Phi_n`, i.e. an element of Q(zeta_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    modulus_index: u32,
    coeffs: UniPoly,
}

impl CyclotomicElement {
    pub fn new(modulus_index: u32, poly: UniPoly) -> Self {
        let modulus = cyclotomic_polynomial(modulus_index);
        let (_, reduced) = poly.divrem(&modulus);
        CyclotomicElement { modulus_index, coeffs: reduced }
    }

    pub fn modulus_index(&self) -> u32 {
        self.modulus_index
    }

    pub fn coeffs(&self) -> &UniPoly {
        &self.coeffs
    }

    pub fn zero(n: u32) -> Self {
        CyclotomicElement { modulus_index: n, coeffs: UniPoly::zero() }
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        CyclotomicElement::new(n, UniPoly::constant(r))
    }

    /// `zeta^i` with the exponent taken modulo n.
    pub fn zeta_pow(n: u32, i: u32) -> Self {
        let e = (i % n) as usize;
        let mut coeffs = vec![rat_int(0); e + 1];
        coeffs[e] = rat_int(1);
        CyclotomicElement::new(n, UniPoly::from_coeffs(coeffs))
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.modulus_index, other.modulus_index,
            "mixed cyclotomic fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        CyclotomicElement {
            modulus_index: self.modulus_index,
            coeffs: self.coeffs.add(&other.coeffs),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        CyclotomicElement {
            modulus_index: self.modulus_index,
            coeffs: self.coeffs.sub(&other.coeffs),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement { modulus_index: self.modulus_index, coeffs: self.coeffs.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        CyclotomicElement::new(self.modulus_index, self.coeffs.mul(&other.coeffs))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicElement { modulus_index: self.modulus_index, coeffs: self.coeffs.scale(r) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Multiplicative inverse by extended gcd against the modulus.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::NotInvertible(self.modulus_index));
        }
        let modulus = cyclotomic_polynomial(self.modulus_index);
        let (g, s, _) = self.coeffs.xgcd(&modulus);
        // Phi_n is irreducible over Q, so the gcd of a nonzero residue
        // with it is a nonzero constant (normalized to 1 by xgcd).
        assert!(g.degree() == Some(0) && g.coeff(0).is_one(), "modulus must be irreducible");
        Ok(CyclotomicElement::new(self.modulus_index, s))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CyclotomicElement::from_rational(self.modulus_index, rat_int(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `Some(r)` if the element lies in Q (all non-constant coefficients
    /// of the reduced representative vanish).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.degree() {
            None => Some(rat_int(0)),
            Some(0) => Some(self.coeffs.coeff(0)),
            _ => None,
        }
    }

    /// `Some(r)` additionally demanding an integer.
    pub fn as_integer(&self) -> Option<Rational> {
        self.as_rational().filter(is_integer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), UniPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), UniPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), UniPoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), UniPoly::from_int_coeffs(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), UniPoly::from_int_coeffs(&[1, 0, -1, 0, 1]));
        // Degree phi(n).
        assert_eq!(cyclotomic_polynomial(80).degree(), Some(32));
    }

    #[test]
    fn zeta_powers_wrap() {
        // In Q(zeta_4), zeta^2 = -1.
        let z2 = CyclotomicElement::zeta_pow(4, 2);
        assert_eq!(z2, CyclotomicElement::from_rational(4, rat_int(-1)));
        let z4 = CyclotomicElement::zeta_pow(4, 4);
        assert_eq!(z4, CyclotomicElement::from_rational(4, rat_int(1)));
    }

    #[test]
    fn inverse_law() {
        let x = CyclotomicElement::new(
            12,
            UniPoly::from_coeffs(vec![rat(1, 2), rat_int(3), rat(-2, 7)]),
        );
        let inv = x.inverse().unwrap();
        assert_eq!(
            x.mul(&inv),
            CyclotomicElement::from_rational(12, rat_int(1))
        );
        assert_eq!(
            CyclotomicElement::zero(12).inverse(),
            Err(CycloError::NotInvertible(12))
        );
    }

    #[test]
    fn rationality_detection() {
        let z = CyclotomicElement::zeta_pow(8, 1);
        assert_eq!(z.as_rational(), None);
        // zeta_8^2 = i is still irrational; zeta_8^4 = -1 is rational.
        assert_eq!(z.pow(2).as_rational(), None);
        assert_eq!(z.pow(4).as_rational(), Some(rat_int(-1)));
        assert_eq!(
            CyclotomicElement::from_rational(8, rat(3, 2)).as_integer(),
            None
        );
    }
}
