//! Chern and Pontrjagin class bookkeeping.
//!
//! Chern classes are recovered from Chern characters through Newton's
//! identities relating power sums (`s_j = j! * ch_j`) to elementary
//! symmetric polynomials, entirely inside the ambient graded ring.
//! Pontrjagin classes come either from the Chern classes of a complex
//! bundle (signs of the complexification) or directly from the Chern
//! character of a complexified real bundle.

use thiserror::Error;

use crate::coeff::Coeff;
use crate::rat::{factorial, rat_int, Rational};
use crate::ring::{RingElement, RingModel};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    /// The degree-0 part of the character does not match the claimed rank.
    #[error("rank mismatch: degree-0 part of the character is {found}, expected {expected}")]
    RankMismatch { expected: String, found: String },
}

/// Ordered Chern classes `c_1..c_r` of a rank-`r` bundle; classes above
/// the model's top degree are stored as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernData<C: Coeff> {
    pub rank: u32,
    pub classes: Vec<RingElement<C>>,
}

impl<C: Coeff> ChernData<C> {
    pub fn c(&self, i: usize) -> &RingElement<C> {
        &self.classes[i - 1]
    }
}

/// Ordered Pontrjagin classes `p_1..p_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PontryaginData<C: Coeff> {
    pub classes: Vec<RingElement<C>>,
}

impl<C: Coeff> PontryaginData<C> {
    pub fn p(&self, i: usize) -> &RingElement<C> {
        &self.classes[i - 1]
    }
}

/// Elementary symmetric elements from power sums by Newton's identities:
/// `e_m = (1/m) sum_{i=1}^m (-1)^{i-1} e_{m-i} s_i` with `e_0 = 1`.
fn elementary_from_power_sums<C: Coeff>(
    sums: &[RingElement<C>],
    model: &RingModel,
) -> Vec<RingElement<C>> {
    let mut elem: Vec<RingElement<C>> = vec![RingElement::one(model)];
    for m in 1..=sums.len() {
        let mut acc = RingElement::<C>::zero();
        for i in 1..=m {
            let term = elem[m - i]
                .multiply(&sums[i - 1], model)
                .expect("normalizes");
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        elem.push(acc.scale(&(rat_int(1) / rat_int(m as i64))));
    }
    elem.remove(0);
    elem
}

/// Recovers `c_1..c_rank` from a Chern character whose degree-0 part
/// equals `rank`.
pub fn chern_from_character<C: Coeff>(
    ch: &RingElement<C>,
    rank: u32,
    model: &RingModel,
) -> Result<ChernData<C>, CharError> {
    let found = ch.constant_term();
    if found != C::from_rational(&rat_int(rank as i64)) {
        return Err(CharError::RankMismatch {
            expected: rank.to_string(),
            found: found.render(),
        });
    }
    let max_j = (rank as usize).min((model.top_degree() / 2) as usize);
    let sums: Vec<RingElement<C>> = (1..=max_j)
        .map(|j| ch.graded_part(2 * j as u32, model).scale(&factorial(j as u32)))
        .collect();
    let mut classes = elementary_from_power_sums(&sums, model);
    classes.resize(rank as usize, RingElement::zero());
    Ok(ChernData { rank, classes })
}

/// Pontrjagin classes of the underlying real bundle of a complex bundle:
/// `p_i = sum_{a+b=2i} (-1)^{i+b} c_a c_b` (the usual relations, e.g.
/// `p_1 = c_1^2 - 2c_2`).
pub fn pontrjagin_from_chern<C: Coeff>(
    c: &ChernData<C>,
    model: &RingModel,
) -> PontryaginData<C> {
    let n = (c.rank as usize).min((model.top_degree() / 4) as usize);
    let class = |a: usize| -> RingElement<C> {
        if a == 0 {
            RingElement::one(model)
        } else if a <= c.classes.len() {
            c.classes[a - 1].clone()
        } else {
            RingElement::zero()
        }
    };
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut acc = RingElement::<C>::zero();
        for a in 0..=2 * i {
            let b = 2 * i - a;
            let term = class(a).multiply(&class(b), model).expect("normalizes");
            acc = if (i + b) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        out.push(acc);
    }
    PontryaginData { classes: out }
}

/// Pontrjagin classes of a real bundle `E` read off from `ch(E x C)`.
/// The complexification has paired Chern roots `+-x_i`, so the degree-4j
/// part of the character is `2 * sigma_j / (2j)!` with `sigma_j` the j-th
/// power sum in the variables `x_i^2`, and `p_j` is elementary symmetric
/// in those variables.
pub fn pontryagin_from_complexified_ch<C: Coeff>(
    ch: &RingElement<C>,
    real_rank: u32,
    model: &RingModel,
) -> Result<PontryaginData<C>, CharError> {
    let found = ch.constant_term();
    if found != C::from_rational(&rat_int(real_rank as i64)) {
        return Err(CharError::RankMismatch {
            expected: real_rank.to_string(),
            found: found.render(),
        });
    }
    let pairs = (real_rank / 2) as usize;
    let max_j = pairs.min((model.top_degree() / 4) as usize);
    let sums: Vec<RingElement<C>> = (1..=max_j)
        .map(|j| {
            ch.graded_part(4 * j as u32, model)
                .scale(&(factorial(2 * j as u32) / rat_int(2)))
        })
        .collect();
    Ok(PontryaginData { classes: elementary_from_power_sums(&sums, model) })
}

/// Chern character from explicit Chern roots: `sum_i exp(r_i)`. Used by
/// tests as the inverse oracle for [`chern_from_character`].
pub fn character_from_roots(
    roots: &[RingElement<Rational>],
    model: &RingModel,
) -> RingElement<Rational> {
    let mut acc = RingElement::<Rational>::zero();
    for r in roots {
        let e = crate::ring::exp_nilpotent(r, &rat_int(1), model).expect("root has positive degree");
        acc = acc.add(&e);
    }
    acc
}
