//! Sparse graded commutative polynomial rings with degree truncation,
//! rewrite relations and an intersection pairing.
//!
//! A [`RingModel`] fixes generators with even real degrees, a terminating
//! rewrite system (e.g. `l^2 -> 4u`), a top degree above which everything
//! vanishes, and a pairing table on top-degree normal-form monomials (the
//! fundamental class). [`RingElement`]s are sparse maps from exponent
//! vectors to coefficients and are kept in normal form by every operation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::Coeff;
use crate::linalg::{nullspace, RatMatrix};
use crate::rat::{to_coprime_integers_positive, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    /// Rule application exceeded the step budget; the rule set does not
    /// terminate on this input.
    #[error("rewriting exceeded the step budget; misconfigured rule set")]
    NonTerminatingRewrite,
    /// Exponentials are only defined for elements with no degree-0 part,
    /// which are nilpotent under degree truncation.
    #[error("exp requires an element with zero degree-0 component")]
    NonNilpotent,
    /// A top-degree normal-form monomial has no pairing entry.
    #[error("monomial {0} is missing from the pairing table")]
    UnknownMonomial(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("no nontrivial linear relation exists")]
    NoRelation,
    #[error("relation not unique: solution space has dimension {0}")]
    AmbiguousRelation(usize),
}

/// A named ring generator with its real cohomological degree (always even).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

impl GeneratorSpec {
    pub fn new(name: &str, degree: u32) -> Self {
        assert!(degree > 0 && degree.is_multiple_of(2), "generator degrees must be positive and even");
        GeneratorSpec { name: name.to_string(), degree }
    }
}

/// Exponent vector over a model's generators. Ordered lexicographically,
/// which gives every element a canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(n_gens: usize) -> Self {
        Monomial(vec![0; n_gens])
    }

    pub fn generator(n_gens: usize, index: usize) -> Self {
        let mut exps = vec![0; n_gens];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// One oriented rewrite `lhs -> rhs`; both sides have equal degree and the
/// right-hand side must already be in normal form.
#[derive(Debug, Clone)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: RingElement<Rational>,
}

/// Immutable description of a graded ring: generators, rewrite rules, top
/// degree and the intersection pairing on top-degree normal monomials.
#[derive(Debug, Clone)]
pub struct RingModel {
    pub name: String,
    generators: Vec<GeneratorSpec>,
    rules: Vec<RewriteRule>,
    top_degree: u32,
    pairing: BTreeMap<Monomial, Rational>,
}

impl RingModel {
    pub fn new(
        name: &str,
        generators: Vec<GeneratorSpec>,
        rules: Vec<RewriteRule>,
        top_degree: u32,
        pairing: BTreeMap<Monomial, Rational>,
    ) -> Self {
        assert!(top_degree.is_multiple_of(2));
        let model = RingModel { name: name.to_string(), generators, rules, top_degree, pairing };
        for rule in &model.rules {
            assert_eq!(rule.lhs.0.len(), model.generators.len(), "rule arity mismatch");
            let lhs_degree = model.degree_of(&rule.lhs);
            for (m, _) in rule.rhs.terms() {
                assert_eq!(model.degree_of(m), lhs_degree, "rewrite rule must be homogeneous");
            }
        }
        for m in model.pairing.keys() {
            assert_eq!(
                model.degree_of(m),
                top_degree,
                "pairing entries live in the top degree"
            );
        }
        model
    }

    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn pairing_table(&self) -> &BTreeMap<Monomial, Rational> {
        &self.pairing
    }

    pub fn gen_index(&self, name: &str) -> usize {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .unwrap_or_else(|| panic!("no generator named {name} in model {}", self.name))
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.generators)
            .map(|(&e, g)| e * g.degree)
            .sum()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, g) in m.0.iter().zip(&self.generators) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        parts.join("*")
    }

    /// Monomial from generator-name/exponent pairs.
    pub fn mono(&self, exps: &[(&str, u32)]) -> Monomial {
        let mut m = Monomial::unit(self.n_gens());
        for (name, e) in exps {
            m.0[self.gen_index(name)] += e;
        }
        m
    }

    /// All normal-form monomials of the given degree (no rule lhs divides
    /// them), in canonical order.
    pub fn normal_monomials(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let n = self.n_gens();
        let mut stack = vec![(Monomial::unit(n), 0usize, 0u32)];
        while let Some((m, idx, deg)) = stack.pop() {
            if deg == degree {
                if !self.rules.iter().any(|r| r.lhs.divides(&m)) {
                    out.push(m);
                }
                continue;
            }
            if idx == n || deg > degree {
                continue;
            }
            // Skip this generator entirely, or add one more power of it.
            stack.push((m.clone(), idx + 1, deg));
            let gdeg = self.generators[idx].degree;
            if deg + gdeg <= degree {
                let mut next = m;
                next.0[idx] += 1;
                stack.push((next, idx, deg + gdeg));
            }
        }
        out.sort();
        out
    }
}

/// Element of a graded ring: sparse, normalized, truncated at top degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> RingElement<C> {
    pub fn zero() -> Self {
        RingElement { terms: BTreeMap::new() }
    }

    pub fn one(model: &RingModel) -> Self {
        RingElement::constant(C::one(), model)
    }

    pub fn constant(c: C, model: &RingModel) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(model.n_gens()), c);
        }
        RingElement { terms }
    }

    pub fn generator(model: &RingModel, name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::generator(model.n_gens(), model.gen_index(name)), C::one());
        RingElement { terms }
    }

    pub fn from_terms(terms: Vec<(Monomial, C)>, model: &RingModel) -> Result<Self, RingError> {
        let raw = RingElement { terms: terms.into_iter().collect() };
        raw.normalize(model)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Degree-0 coefficient.
    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rewrite to the unique normal form: apply rules until no lhs divides
    /// any surviving monomial, dropping everything above top degree.
    pub fn normalize(&self, model: &RingModel) -> Result<Self, RingError> {
        let mut budget: u64 = 200_000;
        let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
        let mut work: Vec<(Monomial, C)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((m, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            if model.degree_of(&m) > model.top_degree {
                continue;
            }
            if let Some(rule) = model.rules.iter().find(|r| r.lhs.divides(&m)) {
                if budget == 0 {
                    return Err(RingError::NonTerminatingRewrite);
                }
                budget -= 1;
                let q = m.quotient(&rule.lhs);
                for (rm, rc) in rule.rhs.terms.iter() {
                    work.push((q.product(rm), c.scale(rc)));
                }
            } else {
                Self::insert_add(&mut out, m, c);
            }
        }
        Ok(RingElement { terms: out })
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        RingElement { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Multiply by a coefficient.
    pub fn coeff_mul(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            let prod = x.mul(c);
            if !prod.is_zero() {
                terms.insert(m.clone(), prod);
            }
        }
        RingElement { terms }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            let prod = x.scale(r);
            if !prod.is_zero() {
                terms.insert(m.clone(), prod);
            }
        }
        RingElement { terms }
    }

    /// Exact product, re-normalized and truncated.
    pub fn multiply(&self, other: &Self, model: &RingModel) -> Result<Self, RingError> {
        let mut terms: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = model.degree_of(ma);
            for (mb, cb) in &other.terms {
                if da + model.degree_of(mb) > model.top_degree {
                    continue;
                }
                Self::insert_add(&mut terms, ma.product(mb), ca.mul(cb));
            }
        }
        RingElement { terms }.normalize(model)
    }

    pub fn pow(&self, e: u32, model: &RingModel) -> Result<Self, RingError> {
        let mut acc = RingElement::one(model);
        for _ in 0..e {
            acc = acc.multiply(self, model)?;
        }
        Ok(acc)
    }

    /// The part of the element in the given real degree.
    pub fn graded_part(&self, degree: u32, model: &RingModel) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| model.degree_of(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Change coefficient domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> RingElement<D> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                terms.insert(m.clone(), d);
            }
        }
        RingElement { terms }
    }

    /// Substitute each generator by the corresponding image element in a
    /// target model, extending multiplicatively.
    pub fn substitute<D: Coeff>(
        &self,
        images: &[RingElement<D>],
        lift: impl Fn(&C) -> D,
        target: &RingModel,
    ) -> Result<RingElement<D>, RingError> {
        let mut acc: RingElement<D> = RingElement::zero();
        for (m, c) in &self.terms {
            let mut term = RingElement::constant(lift(c), target);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.multiply(&images[i].pow(e, target)?, target)?;
                }
            }
            acc = acc.add(&term);
        }
        acc.normalize(target)
    }

    /// Contract the top-degree part against the model's pairing table.
    pub fn pair(&self, model: &RingModel) -> Result<C, RingError> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            if model.degree_of(m) != model.top_degree {
                continue;
            }
            let value = model
                .pairing
                .get(m)
                .ok_or_else(|| RingError::UnknownMonomial(model.render_monomial(m)))?;
            acc = acc.add(&c.scale(value));
        }
        Ok(acc)
    }

    pub fn render(&self, model: &RingModel) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let s = c.render();
            // A bare leading '-' on an atomic coefficient becomes the term
            // sign; composite coefficients (with spaces) get parentheses.
            let (neg, body) = if s.contains(' ') {
                (false, format!("({s})"))
            } else if let Some(stripped) = s.strip_prefix('-') {
                (true, stripped.to_string())
            } else {
                (false, s)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_unit() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&model.render_monomial(m));
            } else {
                out.push_str(&format!("{body}*{}", model.render_monomial(m)));
            }
        }
        out
    }
}

impl RingElement<Rational> {
    /// Sum of scaled monomials, normalized; convenient for hand-written
    /// expected values in tests and model construction.
    pub fn from_rational_terms(
        terms: &[(Rational, &[(&str, u32)])],
        model: &RingModel,
    ) -> Result<Self, RingError> {
        let list = terms
            .iter()
            .map(|(c, exps)| (model.mono(exps), c.clone()))
            .collect();
        RingElement::from_terms(list, model)
    }
}

/// Taylor exponential `sum_i t^i x^i / i!` truncated at top degree.
/// `x` must have no degree-0 component.
pub fn exp_nilpotent<C: Coeff>(
    x: &RingElement<C>,
    t: &C,
    model: &RingModel,
) -> Result<RingElement<C>, RingError> {
    if !x.constant_term().is_zero() {
        return Err(RingError::NonNilpotent);
    }
    let mut acc = RingElement::one(model);
    let mut term = RingElement::one(model);
    let mut i: u32 = 0;
    while !term.is_zero() {
        i += 1;
        // x has positive degree, so x^i dies once i exceeds top/2.
        if i > model.top_degree {
            return Err(RingError::NonTerminatingRewrite);
        }
        term = term
            .multiply(x, model)?
            .coeff_mul(t)
            .scale(&(Rational::from_integer(1.into()) / Rational::from_integer(i.into())));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Fibre integration for the flag model: write `x = l*p(u,v) + q(u,v)` and
/// return `2*p(u,v)` in the base model. Generator 0 of `flag` must be the
/// fibre class `l`; the remaining generators map in order onto `base`.
pub fn pushforward_flag<C: Coeff>(
    x: &RingElement<C>,
    flag: &RingModel,
    base: &RingModel,
) -> RingElement<C> {
    debug_assert_eq!(flag.n_gens(), base.n_gens() + 1);
    let mut terms = BTreeMap::new();
    for (m, c) in &x.terms {
        if m.0[0] == 1 {
            let pushed = Monomial(m.0[1..].to_vec());
            let doubled = c.scale(&Rational::from_integer(2.into()));
            RingElement::insert_add(&mut terms, pushed, doubled);
        }
        // l-free terms integrate to zero along the fibre.
    }
    RingElement { terms }
}

/// Finds the unique (up to scale) coefficient vector `(a_1..a_n)` with
/// `sum a_i * candidate_i` pairing to zero against every multiplier, then
/// normalizes it to coprime integers with positive leading entry.
pub fn find_middle_relation(
    degree: u32,
    candidates: &[Monomial],
    multipliers: &[RingElement<Rational>],
    model: &RingModel,
) -> Result<Vec<BigInt>, RelationError> {
    let mut rows = Vec::new();
    for mult in multipliers {
        let mut row = Vec::new();
        for cand in candidates {
            debug_assert_eq!(model.degree_of(cand), degree);
            let cand_elem =
                RingElement::<Rational>::from_terms(vec![(cand.clone(), Rational::from_integer(1.into()))], model)
                    .expect("candidate monomial normalizes");
            let prod = cand_elem.multiply(mult, model).expect("product normalizes");
            row.push(prod.pair(model).expect("pairing defined"));
        }
        rows.push(row);
    }
    let basis = nullspace(&RatMatrix::from_rows(rows));
    match basis.len() {
        0 => Err(RelationError::NoRelation),
        1 => Ok(to_coprime_integers_positive(&basis[0]).expect("nonzero basis vector")),
        d => Err(RelationError::AmbiguousRelation(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    /// Flag-style test model: l (degree 2), u, v (degree 4), rule l^2 -> 4u,
    /// top degree 18, no pairing.
    fn flag_model() -> RingModel {
        let gens = vec![
            GeneratorSpec::new("l", 2),
            GeneratorSpec::new("u", 4),
            GeneratorSpec::new("v", 4),
        ];
        let lhs = Monomial(vec![2, 0, 0]);
        let model_tmp = RingModel::new("tmp", gens.clone(), vec![], 18, BTreeMap::new());
        let rhs = RingElement::from_rational_terms(&[(rat_int(4), &[("u", 1)])], &model_tmp).unwrap();
        RingModel::new("flag", gens, vec![RewriteRule { lhs, rhs }], 18, BTreeMap::new())
    }

    fn moduli_model() -> RingModel {
        let gens = vec![
            GeneratorSpec::new("l", 2),
            GeneratorSpec::new("u", 4),
            GeneratorSpec::new("v", 4),
        ];
        let tmp = RingModel::new("tmp", gens.clone(), vec![], 12, BTreeMap::new());
        let l_rule = RewriteRule {
            lhs: Monomial(vec![2, 0, 0]),
            rhs: RingElement::from_rational_terms(&[(rat_int(4), &[("u", 1)])], &tmp).unwrap(),
        };
        let v_rule = RewriteRule {
            lhs: Monomial(vec![0, 0, 2]),
            rhs: RingElement::from_rational_terms(
                &[(rat_int(-1), &[("u", 2)]), (rat(-10, 3), &[("u", 1), ("v", 1)])],
                &tmp,
            )
            .unwrap(),
        };
        let mut pairing = BTreeMap::new();
        pairing.insert(tmp.mono(&[("u", 3)]), rat(7, 2));
        pairing.insert(tmp.mono(&[("u", 2), ("v", 1)]), rat(-3, 2));
        RingModel::new("moduli", gens, vec![l_rule, v_rule], 12, pairing)
    }

    #[test]
    fn rewrite_l_squared() {
        let model = flag_model();
        let l = RingElement::<Rational>::generator(&model, "l");
        let l2 = l.multiply(&l, &model).unwrap();
        let four_u =
            RingElement::from_rational_terms(&[(rat_int(4), &[("u", 1)])], &model).unwrap();
        assert_eq!(l2, four_u);
        // l^3 -> 4*u*l after one rule application.
        let l3 = l2.multiply(&l, &model).unwrap();
        let expect =
            RingElement::from_rational_terms(&[(rat_int(4), &[("l", 1), ("u", 1)])], &model)
                .unwrap();
        assert_eq!(l3, expect);
    }

    #[test]
    fn rewrite_v_squared_in_moduli() {
        let model = moduli_model();
        let v = RingElement::<Rational>::generator(&model, "v");
        let v2 = v.multiply(&v, &model).unwrap();
        let expect = RingElement::from_rational_terms(
            &[(rat_int(-1), &[("u", 2)]), (rat(-10, 3), &[("u", 1), ("v", 1)])],
            &model,
        )
        .unwrap();
        assert_eq!(v2, expect);
    }

    #[test]
    fn multiply_polynomial_identity() {
        let model = flag_model();
        let u = RingElement::<Rational>::generator(&model, "u");
        let v = RingElement::<Rational>::generator(&model, "v");
        let sum = u.add(&v);
        let diff = u.sub(&v);
        let prod = sum.multiply(&diff, &model).unwrap();
        let expect = u
            .multiply(&u, &model)
            .unwrap()
            .sub(&v.multiply(&v, &model).unwrap());
        assert_eq!(prod, expect);
        // Multiplying by zero annihilates.
        assert!(sum.multiply(&RingElement::zero(), &model).unwrap().is_zero());
    }

    #[test]
    fn paper_product_in_flag_model() {
        // 4l(u-v) * u^3 = 4l*u^4 - 4l*u^3*v.
        let model = flag_model();
        let factor = RingElement::from_rational_terms(
            &[(rat_int(4), &[("l", 1), ("u", 1)]), (rat_int(-4), &[("l", 1), ("v", 1)])],
            &model,
        )
        .unwrap();
        let u3 = RingElement::from_rational_terms(&[(rat_int(1), &[("u", 3)])], &model).unwrap();
        let prod = factor.multiply(&u3, &model).unwrap();
        let expect = RingElement::from_rational_terms(
            &[
                (rat_int(4), &[("l", 1), ("u", 4)]),
                (rat_int(-4), &[("l", 1), ("u", 3), ("v", 1)]),
            ],
            &model,
        )
        .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn exp_of_zero_scalar() {
        let model = flag_model();
        let l = RingElement::<Rational>::generator(&model, "l");
        let e = exp_nilpotent(&l, &Rational::from_integer(0.into()), &model).unwrap();
        assert_eq!(e, RingElement::one(&model));
    }

    #[test]
    fn exp_of_l_frozen_expansion() {
        // Hand expansion of sum l^i/i! with l^2 -> 4u, through degree 18:
        // even part  1 + 2u + (2/3)u^2 + (4/45)u^3 + (2/315)u^4,
        // odd part   l*(1 + (2/3)u + (2/15)u^2 + (4/315)u^3 + (2/2835)u^4).
        let model = flag_model();
        let l = RingElement::<Rational>::generator(&model, "l");
        let e = exp_nilpotent(&l, &Rational::from_integer(1.into()), &model).unwrap();
        let expect = RingElement::from_rational_terms(
            &[
                (rat_int(1), &[]),
                (rat_int(2), &[("u", 1)]),
                (rat(2, 3), &[("u", 2)]),
                (rat(4, 45), &[("u", 3)]),
                (rat(2, 315), &[("u", 4)]),
                (rat_int(1), &[("l", 1)]),
                (rat(2, 3), &[("l", 1), ("u", 1)]),
                (rat(2, 15), &[("l", 1), ("u", 2)]),
                (rat(4, 315), &[("l", 1), ("u", 3)]),
                (rat(2, 2835), &[("l", 1), ("u", 4)]),
            ],
            &model,
        )
        .unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn exp_rejects_degree_zero_part() {
        let model = flag_model();
        let one_plus_l = RingElement::<Rational>::one(&model)
            .add(&RingElement::generator(&model, "l"));
        assert_eq!(
            exp_nilpotent(&one_plus_l, &Rational::from_integer(1.into()), &model),
            Err(RingError::NonNilpotent)
        );
    }

    #[test]
    fn nonterminating_rule_detected() {
        // u -> 2u loops forever.
        let gens = vec![GeneratorSpec::new("u", 4)];
        let tmp = RingModel::new("tmp", gens.clone(), vec![], 8, BTreeMap::new());
        let bad = RewriteRule {
            lhs: Monomial(vec![1]),
            rhs: RingElement::from_rational_terms(&[(rat_int(2), &[("u", 1)])], &tmp).unwrap(),
        };
        let model = RingModel::new("bad", gens, vec![bad], 8, BTreeMap::new());
        let u = RingElement::<Rational>::from_terms(
            vec![(Monomial(vec![1]), rat_int(1))],
            &tmp,
        )
        .unwrap();
        assert_eq!(u.normalize(&model), Err(RingError::NonTerminatingRewrite));
    }

    #[test]
    fn pairing_and_unknown_monomial() {
        let model = moduli_model();
        let u = RingElement::<Rational>::generator(&model, "u");
        let u3 = u.pow(3, &model).unwrap();
        assert_eq!(u3.pair(&model).unwrap(), rat(7, 2));
        // Below top degree pairs to zero.
        assert_eq!(u.pair(&model).unwrap(), rat_int(0));
        // u*v^2 rewrites to -u^3 - (10/3)u^2 v and pairs to 3/2.
        let v = RingElement::<Rational>::generator(&model, "v");
        let uv2 = u.multiply(&v.pow(2, &model).unwrap(), &model).unwrap();
        assert_eq!(uv2.pair(&model).unwrap(), rat(3, 2));
        // v^3 pairs to -7/2.
        assert_eq!(v.pow(3, &model).unwrap().pair(&model).unwrap(), rat(-7, 2));

        // A model whose pairing table is missing an entry reports it.
        let mut incomplete = moduli_model();
        incomplete.pairing.remove(&incomplete.mono(&[("u", 2), ("v", 1)]));
        let u2v = RingElement::<Rational>::from_rational_terms(
            &[(rat_int(1), &[("u", 2), ("v", 1)])],
            &incomplete,
        )
        .unwrap();
        assert!(matches!(u2v.pair(&incomplete), Err(RingError::UnknownMonomial(_))));
    }

    #[test]
    fn pushforward() {
        let flag = flag_model();
        let base_gens = vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)];
        let base = RingModel::new("base", base_gens, vec![], 16, BTreeMap::new());
        let l = RingElement::<Rational>::generator(&flag, "l");
        // l integrates to 2.
        assert_eq!(pushforward_flag(&l, &flag, &base), RingElement::constant(rat_int(2), &base));
        // u has no fibre component.
        let u = RingElement::<Rational>::generator(&flag, "u");
        assert!(pushforward_flag(&u, &flag, &base).is_zero());
        // l^3*u normalizes to 4u^2*l and pushes to 8u^2.
        let x = l.pow(3, &flag).unwrap().multiply(&u, &flag).unwrap();
        let pushed = pushforward_flag(&x, &flag, &base);
        let expect =
            RingElement::from_rational_terms(&[(rat_int(8), &[("u", 2)])], &base).unwrap();
        assert_eq!(pushed, expect);
    }

    #[test]
    fn normal_monomial_enumeration() {
        let model = moduli_model();
        // Top degree 12: only u^3 and u^2 v survive the rewrite rules.
        let tops = model.normal_monomials(12);
        assert_eq!(tops, vec![model.mono(&[("u", 2), ("v", 1)]), model.mono(&[("u", 3)])]);
    }

    #[test]
    fn middle_relation_examples() {
        // Moduli relation from the restriction pairing values.
        let gens = vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)];
        let mut pairing = BTreeMap::new();
        let tmp = RingModel::new("tmp", gens.clone(), vec![], 12, BTreeMap::new());
        pairing.insert(tmp.mono(&[("u", 3)]), rat(7, 2));
        pairing.insert(tmp.mono(&[("u", 2), ("v", 1)]), rat(-3, 2));
        pairing.insert(tmp.mono(&[("u", 1), ("v", 2)]), rat(3, 2));
        pairing.insert(tmp.mono(&[("v", 3)]), rat(-7, 2));
        let model = RingModel::new("moduli-flat", gens, vec![], 12, pairing);
        let candidates = vec![
            model.mono(&[("u", 2)]),
            model.mono(&[("u", 1), ("v", 1)]),
            model.mono(&[("v", 2)]),
        ];
        let u = RingElement::<Rational>::generator(&model, "u");
        let v = RingElement::<Rational>::generator(&model, "v");
        let rel =
            find_middle_relation(8, &candidates, &[u.clone(), v.clone()], &model).unwrap();
        assert_eq!(rel, vec![BigInt::from(3), BigInt::from(10), BigInt::from(3)]);
        // One multiplier leaves a 2-dimensional solution space.
        assert_eq!(
            find_middle_relation(8, &candidates, &[u], &model),
            Err(RelationError::AmbiguousRelation(2))
        );
    }

    #[test]
    fn no_relation_on_grassmannian_top() {
        let gens = vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)];
        let tmp = RingModel::new("tmp", gens.clone(), vec![], 16, BTreeMap::new());
        let mut pairing = BTreeMap::new();
        pairing.insert(tmp.mono(&[("u", 4)]), rat(21, 64));
        let model = RingModel::new("grass-partial", gens, vec![], 16, pairing);
        let candidates = vec![model.mono(&[("u", 4)])];
        let one = RingElement::<Rational>::one(&model);
        assert_eq!(
            find_middle_relation(16, &candidates, &[one], &model),
            Err(RelationError::NoRelation)
        );
    }

    #[test]
    fn normalize_is_idempotent() {
        let model = moduli_model();
        let v = RingElement::<Rational>::generator(&model, "v");
        let x = v.pow(3, &model).unwrap();
        assert_eq!(x.normalize(&model).unwrap(), x);
    }
}
