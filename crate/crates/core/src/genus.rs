//! Multiplicative sequences (genera) generated from characteristic power
//! series.
//!
//! Given a series `Q(x)` with `Q(0) = 1`, the universal isobaric
//! polynomials `K_j` satisfying `sum K_j = prod Q(x_i)` are computed over
//! formal weight-graded generators by the power-sum route: take `log Q`,
//! express the power sums of the formal roots through Newton's identities,
//! and exponentiate inside the truncated formal ring. No symbolic root
//! variables are ever materialized.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::One;

use crate::coeff::Coeff;
use crate::rat::{rat_int, Rational};
use crate::ring::{GeneratorSpec, RingElement, RingModel};
use crate::series::{series_log, series_recip};

/// Whether the formal generators stand for Chern classes (weight j has
/// real degree 2j) or Pontrjagin classes (real degree 4j).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariableKind {
    Chern,
    Pontryagin,
}

impl VariableKind {
    fn degree_of_weight(self, j: usize) -> u32 {
        match self {
            VariableKind::Chern => 2 * j as u32,
            VariableKind::Pontryagin => 4 * j as u32,
        }
    }

    fn gen_name(self, j: usize) -> String {
        match self {
            VariableKind::Chern => format!("c{j}"),
            VariableKind::Pontryagin => format!("p{j}"),
        }
    }
}

/// Taylor coefficients of a characteristic power series `Q` with
/// `Q(0) = 1`. For Pontrjagin-type sequences the series variable is the
/// square of a formal Chern root, so `Q` must already be even-collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPowerSeries {
    coeffs: Vec<Rational>,
}

impl CharPowerSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            coeffs.first().map(Rational::is_one) == Some(true),
            "characteristic series must have constant term 1"
        );
        CharPowerSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The flat series `Q = 1`.
    pub fn trivial(len: usize) -> Self {
        let mut coeffs = vec![Rational::from_integer(0.into()); len.max(1)];
        coeffs[0] = rat_int(1);
        CharPowerSeries::new(coeffs)
    }

    /// Todd series `x / (1 - e^{-x})`.
    pub fn todd(len: usize) -> Self {
        // (1 - e^{-x})/x = sum_{j>=0} (-1)^j x^j / (j+1)!.
        let den: Vec<Rational> = (0..len)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                rat_int(sign) / crate::rat::factorial(j as u32 + 1)
            })
            .collect();
        CharPowerSeries::new(series_recip(&den, len))
    }

    /// A-hat series `(sqrt(z)/2) / sinh(sqrt(z)/2)` as a series in
    /// `z = x^2`.
    pub fn ahat(len: usize) -> Self {
        // sinh(t/2)/(t/2) = sum_j (t/2)^{2j} / (2j+1)! = sum_j z^j / (4^j (2j+1)!).
        let den: Vec<Rational> = (0..len)
            .map(|j| {
                rat_int(1)
                    / (crate::rat::factorial(2 * j as u32 + 1) * rat_int(4).pow(j as i32))
            })
            .collect();
        CharPowerSeries::new(series_recip(&den, len))
    }

    /// L-genus series `sqrt(z) / tanh(sqrt(z))` as a series in `z = x^2`.
    pub fn l_genus(len: usize) -> Self {
        CharPowerSeries::new(crate::series::t_coth_t_in_u(len))
    }
}

/// The universal polynomials `K_1..K_up_to` of a multiplicative sequence,
/// as elements over a formal generator ring.
#[derive(Debug, Clone)]
pub struct GenusPolynomials {
    pub kind: VariableKind,
    pub up_to: usize,
    model: RingModel,
    polys: Vec<RingElement<Rational>>,
}

impl GenusPolynomials {
    pub fn formal_model(&self) -> &RingModel {
        &self.model
    }

    /// `K_j` for `1 <= j <= up_to`.
    pub fn poly(&self, j: usize) -> &RingElement<Rational> {
        &self.polys[j - 1]
    }
}

/// Power sum `s_m` in terms of elementary symmetric generators via
/// Newton's identities: `s_m = sum_{i<m} (-1)^{i-1} e_i s_{m-i} + (-1)^{m-1} m e_m`.
fn power_sums(model: &RingModel, up_to: usize) -> Vec<RingElement<Rational>> {
    let mut sums: Vec<RingElement<Rational>> = Vec::with_capacity(up_to);
    for m in 1..=up_to {
        let mut acc = RingElement::<Rational>::generator(model, &model.generators()[m - 1].name)
            .scale(&rat_int(if m % 2 == 1 { m as i64 } else { -(m as i64) }));
        for i in 1..m {
            let e_i = RingElement::<Rational>::generator(model, &model.generators()[i - 1].name);
            let term = e_i
                .multiply(&sums[m - i - 1], model)
                .expect("formal model has no rules");
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        sums.push(acc);
    }
    sums
}

/// Computes `K_1..K_up_to` for the multiplicative sequence of `Q`.
pub fn genus_polynomials(
    q: &CharPowerSeries,
    up_to: usize,
    kind: VariableKind,
) -> GenusPolynomials {
    assert!(up_to >= 1);
    let gens: Vec<GeneratorSpec> = (1..=up_to)
        .map(|j| GeneratorSpec::new(&kind.gen_name(j), kind.degree_of_weight(j)))
        .collect();
    let model = RingModel::new(
        "formal",
        gens,
        vec![],
        kind.degree_of_weight(up_to),
        BTreeMap::new(),
    );

    // log(prod Q(x_i)) = sum_m L_m s_m with L = log Q.
    let log_q = series_log(q.coeffs(), up_to + 1);
    let sums = power_sums(&model, up_to);
    let mut exponent = RingElement::<Rational>::zero();
    for m in 1..=up_to {
        if let Some(lm) = log_q.get(m) {
            exponent = exponent.add(&sums[m - 1].scale(lm));
        }
    }
    let total = crate::ring::exp_nilpotent(&exponent, &rat_int(1), &model)
        .expect("exponent has positive degree");
    let polys = (1..=up_to)
        .map(|j| total.graded_part(kind.degree_of_weight(j), &model))
        .collect();
    GenusPolynomials { kind, up_to, model, polys }
}

/// Substitutes concrete characteristic classes into the universal
/// polynomials and returns `1 + K_1 + ... + K_up_to` in the target model.
/// Classes beyond the supplied list are treated as zero.
pub fn evaluate_genus<C: Coeff>(
    k: &GenusPolynomials,
    classes: &[RingElement<C>],
    model: &RingModel,
) -> RingElement<C> {
    let mut images: Vec<RingElement<C>> = classes.to_vec();
    images.truncate(k.up_to);
    while images.len() < k.up_to {
        images.push(RingElement::zero());
    }
    let mut acc = RingElement::<C>::one(model);
    for j in 1..=k.up_to {
        let term = k
            .poly(j)
            .substitute(&images, |r| C::from_rational(r), model)
            .expect("substitution normalizes");
        acc = acc.add(&term);
    }
    acc
}

/// Cached A-hat genus polynomials in `p_1..p_4` (enough for real
/// dimension 16).
pub fn ahat_pontryagin() -> &'static GenusPolynomials {
    static CACHE: OnceLock<GenusPolynomials> = OnceLock::new();
    CACHE.get_or_init(|| genus_polynomials(&CharPowerSeries::ahat(5), 4, VariableKind::Pontryagin))
}

/// Cached Todd polynomials in `c_1..c_9` (enough for complex dimension 9).
pub fn todd_chern() -> &'static GenusPolynomials {
    static CACHE: OnceLock<GenusPolynomials> = OnceLock::new();
    CACHE.get_or_init(|| genus_polynomials(&CharPowerSeries::todd(10), 9, VariableKind::Chern))
}
