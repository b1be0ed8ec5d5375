//! Dense univariate polynomials over the rationals.
//!
//! Degrees in this crate stay small (at most 9 for the index polynomials,
//! and below 35 for cyclotomic moduli), so a dense coefficient vector is the
//! right representation. The zero polynomial has no coefficients and its
//! degree is reported as `None`, standing in for the usual "-inf" marker.

use num_traits::{One, Signed, Zero};

use crate::rat::{rat_int, Rational};

/// Polynomial in one formal variable; `coeffs[i]` multiplies the i-th power.
/// Invariant: the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The formal variable itself.
    pub fn var() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Product of affine factors `a*x + b` given as `(a, b)` pairs.
    pub fn from_affine_factors(factors: &[(i64, i64)]) -> Self {
        let mut acc = UniPoly::one();
        for &(a, b) in factors {
            acc = acc.mul(&UniPoly::from_int_coeffs(&[b, a]));
        }
        acc
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
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

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, k: i64) -> Rational {
        self.eval(&rat_int(k))
    }

    /// `p(a*x + b)`, computed exactly by Horner evaluation in the
    /// polynomial ring.
    pub fn substitute_affine(&self, a: &Rational, b: &Rational) -> Self {
        let arg = UniPoly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q*div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(div.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&UniPoly::from_coeffs(sub));
        }
        (UniPoly::from_coeffs(quo), rem)
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`.
    /// `g` is monic unless zero.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = UniPoly::one();
        let mut s1 = UniPoly::zero();
        let mut t0 = UniPoly::zero();
        let mut t1 = UniPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(lead) = r0.leading().cloned() {
            let inv = Rational::one() / lead;
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        } else {
            (r0, s0, t0)
        }
    }

    /// Unique interpolating polynomial through distinct nodes, by the
    /// Lagrange formula in exact arithmetic.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = UniPoly::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UniPoly::from_coeffs(vec![-xj, Rational::one()]));
                denom *= xi - xj;
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }

    /// True if the polynomial takes integer values at every integer in
    /// `lo..=hi`.
    pub fn integer_valued_on(&self, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|k| crate::rat::is_integer(&self.eval_int(k)))
    }

    /// Render in descending powers of the named variable with exact
    /// rational coefficients, e.g. `14/45*m^6 + 4/9*m^4 + 11/45*m^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mag_str = crate::rat::fmt_rat(&mag);
            let term = if i == 0 {
                mag_str
            } else {
                let var_pow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if mag.is_one() {
                    var_pow
                } else {
                    format!("{mag_str}*{var_pow}")
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{term}") } else { term });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn degree_marker() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::one().degree(), Some(0));
        assert_eq!(UniPoly::var().degree(), Some(1));
        assert_eq!(UniPoly::from_int_coeffs(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn substitute_affine_identity_and_reflection() {
        // p = k^2 under the identity substitution.
        let p = UniPoly::from_int_coeffs(&[0, 0, 1]);
        assert_eq!(p.substitute_affine(&rat_int(1), &rat_int(0)), p);
        // p = k under k -> -k - 5.
        let q = UniPoly::var().substitute_affine(&rat_int(-1), &rat_int(-5));
        assert_eq!(q, UniPoly::from_int_coeffs(&[-5, -1]));
    }

    #[test]
    fn substitute_affine_round_trip() {
        let p = UniPoly::from_int_coeffs(&[3, -1, 0, 2]);
        let a = rat(2, 3);
        let b = rat(-5, 7);
        let there = p.substitute_affine(&a, &b);
        let back = there.substitute_affine(&(Rational::one() / &a), &(-&b / &a));
        assert_eq!(back, p);
    }

    #[test]
    fn divrem_and_xgcd() {
        let a = UniPoly::from_int_coeffs(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let b = UniPoly::from_int_coeffs(&[1, 0, 1]); // x^2 + 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_int_coeffs(&[-1, 0, 1]));

        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, b); // x^2 + 1 divides x^4 - 1 and is monic
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_int_coeffs(&[2, -3, 0, 1]);
        let pts: Vec<(Rational, Rational)> =
            (-3..=3).map(|k| (rat_int(k), p.eval_int(k))).collect();
        assert_eq!(UniPoly::interpolate(&pts), p);
    }

    #[test]
    fn rendering() {
        let p = UniPoly::from_coeffs(vec![rat_int(0), rat_int(0), rat(11, 45), rat_int(0), rat(4, 9), rat_int(0), rat(14, 45)]);
        assert_eq!(p.render("m"), "14/45*m^6 + 4/9*m^4 + 11/45*m^2");
        assert_eq!(UniPoly::zero().render("k"), "0");
        assert_eq!(UniPoly::from_int_coeffs(&[-5, -1]).render("k"), "-k - 5");
    }
}
