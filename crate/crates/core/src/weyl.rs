//! Weyl dimension formula for the orthogonal Lie algebras so(2n)
//! (root system D_n).
//!
//! Positive roots are `e_i +- e_j` for `i < j`; the half-sum is
//! `(n-1, n-2, ..., 0)`. Everything is exact big-integer arithmetic; the
//! final division is checked to be exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::UniPoly;
use crate::rat::{rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    /// The weight is not dominant: coordinates must be weakly decreasing
    /// and nonnegative.
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),
}

/// Dominant weight `(lambda_1 >= ... >= lambda_n >= 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self, WeylError> {
        let dominant =
            coords.windows(2).all(|w| w[0] >= w[1]) && coords.last().is_none_or(|&x| x >= 0);
        if dominant {
            Ok(DominantWeight { coords })
        } else {
            Err(WeylError::NonDominant(coords))
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

/// The root system D_n: positive roots and half-sum of positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemDn {
    pub n: usize,
    /// Each root as a coordinate vector; `e_i + e_j` then `e_i - e_j`
    /// grouped per pair `(i, j)`.
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: Vec<i64>,
}

impl RootSystemDn {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "D_n needs rank at least 2");
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for sign in [1i64, -1] {
                    let mut root = vec![0i64; n];
                    root[i] = 1;
                    root[j] = sign;
                    positive_roots.push(root);
                }
            }
        }
        let rho = (0..n).map(|i| (n - 1 - i) as i64).collect();
        RootSystemDn { n, positive_roots, rho }
    }
}

/// `dim V(lambda) = prod_{alpha > 0} <alpha, rho + lambda> / <alpha, rho>`.
/// For D_n this is `prod_{i<j} (l_i^2 - l_j^2) / (m_i^2 - m_j^2)` with
/// `l = lambda + rho`, `m = rho`.
pub fn weyl_dim(n: usize, weight: &DominantWeight) -> BigInt {
    assert_eq!(weight.coords().len(), n, "weight length must equal the rank");
    let system = RootSystemDn::new(n);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in &system.positive_roots {
        let mut shifted = BigInt::zero();
        let mut half = BigInt::zero();
        for (idx, &c) in root.iter().enumerate() {
            shifted += BigInt::from(c) * BigInt::from(weight.coords()[idx] + system.rho[idx]);
            half += BigInt::from(c) * BigInt::from(system.rho[idx]);
        }
        num *= shifted;
        den *= half;
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    assert!(q.is_positive(), "Weyl dimension must be positive");
    q
}

/// Convenience: validate and compute in one call.
pub fn weyl_dim_checked(n: usize, coords: Vec<i64>) -> Result<BigInt, WeylError> {
    if coords.len() != n {
        return Err(WeylError::NonDominant(coords));
    }
    let w = DominantWeight::new(coords)?;
    Ok(weyl_dim(n, &w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `A_k = V(k, k, 0, 0)`.
    A,
    /// `B_k = V(k+1, k-1, 0, 0)`.
    B,
}

/// Closed-form dimension polynomials:
/// `dim A_k = (1/4320)(k+1)(k+2)^3(2k+5)(k+3)^3(k+4)` and
/// `dim B_k = (1/1440)k(k+1)^2(k+2)(2k+5)(k+3)(k+4)^2(k+5)`.
pub fn dim_closed(which: SeriesKind) -> UniPoly {
    match which {
        SeriesKind::A => UniPoly::from_affine_factors(&[
            (1, 1),
            (1, 2),
            (1, 2),
            (1, 2),
            (2, 5),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 4),
        ])
        .scale(&rat(1, 4320)),
        SeriesKind::B => UniPoly::from_affine_factors(&[
            (1, 0),
            (1, 1),
            (1, 1),
            (1, 2),
            (2, 5),
            (1, 3),
            (1, 4),
            (1, 4),
            (1, 5),
        ])
        .scale(&rat(1, 1440)),
    }
}

/// The weight whose dimension `dim_closed` tracks, for a concrete twist.
pub fn series_weight(which: SeriesKind, k: i64) -> Result<DominantWeight, WeylError> {
    match which {
        SeriesKind::A => DominantWeight::new(vec![k, k, 0, 0]),
        SeriesKind::B => DominantWeight::new(vec![k + 1, k - 1, 0, 0]),
    }
}

/// Exact rational from a big integer, for comparisons against polynomials.
pub fn bigint_to_rational(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}
