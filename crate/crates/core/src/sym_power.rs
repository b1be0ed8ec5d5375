//! Chern characters of symmetric powers of a rank-2 bundle with `c_1 = 0`
//! and `c_2 = -u`.
//!
//! With `t` a formal half-root (`t^2 = u`), the character of the n-th
//! symmetric power is `sinh((n+1)t)/sinh(t)`: a series in `u` alone, even
//! in `t` for every `n`. The twist parameter may be symbolic, in which
//! case the `u`-coefficients are polynomials in it. Series division runs
//! on even subseries in `u` after factoring the `sinh` parity, so no
//! square roots ever appear.

use crate::coeff::Coeff;
use crate::poly::UniPoly;
use crate::rat::{factorial, rat_int, Rational};
use crate::ring::{RingElement, RingModel};
use crate::series::{series_div, sinh_over_t_in_u};

/// Coefficients of `ch(S^n U) = sum_j A_j u^j` for `j < terms`, where
/// `s = n + 1` lives in any coefficient domain (a rational for concrete
/// `n`, a polynomial for symbolic `n`).
pub fn ch_sym_rank2_coeffs<C: Coeff>(s: &C, terms: usize) -> Vec<C> {
    // sinh(s t)/t = sum_j s^{2j+1} u^j/(2j+1)!.
    let s_sq = s.mul(s);
    let mut s_pow = s.clone();
    let mut num = Vec::with_capacity(terms);
    for j in 0..terms {
        num.push(s_pow.scale(&(rat_int(1) / factorial(2 * j as u32 + 1))));
        s_pow = s_pow.mul(&s_sq);
    }
    let den: Vec<C> = sinh_over_t_in_u(terms)
        .iter()
        .map(|r| C::from_rational(r))
        .collect();
    series_div(&num, &den, terms)
}

/// `ch(S^n U)` as an element of a model containing the generator `u`,
/// truncated at the model's top degree. `n_expr` is `n` itself (so the
/// internal `s` is `n_expr + 1`).
pub fn ch_sym_rank2<C: Coeff>(n_expr: &C, model: &RingModel) -> RingElement<C> {
    let s = n_expr.add(&C::one());
    let terms = (model.top_degree() / 4) as usize + 1;
    let coeffs = ch_sym_rank2_coeffs(&s, terms);
    let u_index = model.gen_index("u");
    let mut parts = Vec::new();
    for (j, c) in coeffs.into_iter().enumerate() {
        if 4 * j as u32 > model.top_degree() {
            break;
        }
        let mut exps = vec![0u32; model.n_gens()];
        exps[u_index] = j as u32;
        parts.push((crate::ring::Monomial(exps), c));
    }
    RingElement::from_terms(parts, model).expect("powers of u are in normal form")
}

/// Same, for the v-twin `ch(S^n V)` (rank-2 bundle with `c_2 = -v`).
pub fn ch_sym_rank2_v<C: Coeff>(n_expr: &C, model: &RingModel) -> RingElement<C> {
    let s = n_expr.add(&C::one());
    let terms = (model.top_degree() / 4) as usize + 1;
    let coeffs = ch_sym_rank2_coeffs(&s, terms);
    let v_index = model.gen_index("v");
    let mut parts = Vec::new();
    for (j, c) in coeffs.into_iter().enumerate() {
        if 4 * j as u32 > model.top_degree() {
            break;
        }
        let mut exps = vec![0u32; model.n_gens()];
        exps[v_index] = j as u32;
        parts.push((crate::ring::Monomial(exps), c));
    }
    RingElement::from_terms(parts, model).expect("powers of v are in normal form")
}

/// Derivative in the twist parameter of the symbolic-n character,
/// evaluated at `n = 0`; returned as `u`-coefficients. Order 1 is the
/// L-genus series `t/tanh(t)`, order 2 is exactly `u`.
pub fn dn_ch_sym_at_zero(order: u32, terms: usize) -> Vec<Rational> {
    let n = UniPoly::var();
    let coeffs = ch_sym_rank2_coeffs(&UniPoly::add(&n, &UniPoly::one()), terms);
    coeffs
        .into_iter()
        .map(|mut p| {
            for _ in 0..order {
                p = p.derivative();
            }
            p.eval(&rat_int(0))
        })
        .collect()
}

/// Like [`dn_ch_sym_at_zero`] but assembled as a ring element in powers
/// of `u`.
pub fn dn_ch_sym_at_zero_elem(order: u32, model: &RingModel) -> RingElement<Rational> {
    let terms = (model.top_degree() / 4) as usize + 1;
    let coeffs = dn_ch_sym_at_zero(order, terms);
    let u_index = model.gen_index("u");
    let parts = coeffs
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let mut exps = vec![0u32; model.n_gens()];
            exps[u_index] = j as u32;
            (crate::ring::Monomial(exps), c)
        })
        .collect();
    RingElement::from_terms(parts, model).expect("powers of u are in normal form")
}
