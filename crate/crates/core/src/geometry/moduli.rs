//! The moduli space of stable rank-2 bundles with fixed odd determinant
//! over a genus-3 hyperelliptic curve, realized inside the flag space as
//! the zero locus of a section of `sigma* = L (x) S^2 V`.
//!
//! The restriction pairing `<x, [M]> = <x c_3(sigma*), [F]>` determines
//! the degree-12 intersection numbers; the degree-8 relation between
//! `u^2, uv, v^2` is then found by pairing against the degree-4
//! generators, and the final ring model rewrites `v^2` accordingly.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::chern::{chern_from_character, pontrjagin_from_chern, ChernData, PontryaginData};
use crate::rat::{fmt_rat, rat, rat_int, Rational};
use crate::report::CheckResult;
use crate::ring::{
    find_middle_relation, GeneratorSpec, Monomial, RewriteRule, RingElement, RingModel,
};
use crate::sym_power::ch_sym_rank2_v;

use super::{FlagModel, GeomError};

pub struct ModuliModel {
    pub ring: RingModel,
    /// Euler class `c_3(sigma*)` in the flag ring.
    pub c3_sigma: RingElement<Rational>,
    /// Normalized degree-8 relation coefficients for (u^2, uv, v^2).
    pub relation: Vec<BigInt>,
    pub checks: Vec<CheckResult>,
}

impl ModuliModel {
    pub fn l(&self) -> RingElement<Rational> {
        RingElement::generator(&self.ring, "l")
    }
}

/// Restriction pairing to the moduli space of a pure `u,v` monomial given
/// in the flag ring: `<x, [M]> = <x * c_3(sigma*), [F]>`.
fn restrict_pair(
    x: &RingElement<Rational>,
    c3: &RingElement<Rational>,
    flag: &FlagModel,
) -> Result<Rational, GeomError> {
    Ok(x.multiply(c3, &flag.ring)?.pair(&flag.ring)?)
}

pub fn moduli_setup(flag: &FlagModel) -> Result<ModuliModel, GeomError> {
    let fring = &flag.ring;
    let mut checks = Vec::new();

    // ch(sigma*) = e^l ch(S^2 V); its top Chern class cuts out the moduli
    // space.
    let ch_sigma = flag
        .exp_l(&rat_int(1))?
        .multiply(&ch_sym_rank2_v(&rat_int(2), fring), fring)?;
    let sigma = chern_from_character(&ch_sigma, 3, fring)?;
    let c3 = sigma.c(3).clone();
    let u = RingElement::<Rational>::generator(fring, "u");
    let v = RingElement::<Rational>::generator(fring, "v");
    let expected_c3 = flag
        .l()
        .multiply(&u.sub(&v), fring)?
        .scale(&rat_int(4));
    checks.push(CheckResult::eq_check(
        "prop-2.1/c3-sigma",
        "Prop. 2.1 proof: c_3(sigma*) = 4l(u - v)",
        &expected_c3,
        &c3,
        |x| x.render(fring),
    ));

    // Degree-12 restriction pairings.
    let mut restriction = Vec::new();
    let expected_values = [
        ("u3", 3u32, 0u32, rat(7, 2)),
        ("u2v", 2, 1, rat(-3, 2)),
        ("uv2", 1, 2, rat(3, 2)),
        ("v3", 0, 3, rat(-7, 2)),
    ];
    for (name, a, b, want) in &expected_values {
        let x = u
            .pow(*a, fring)?
            .multiply(&v.pow(*b, fring)?, fring)?;
        let value = restrict_pair(&x, &c3, flag)?;
        checks.push(CheckResult::eq_check(
            &format!("prop-2.1/restriction-{name}"),
            "Prop. 2.1",
            want,
            &value,
            fmt_rat,
        ));
        restriction.push(value);
    }

    // Provisional flat model carrying only the restriction pairing, used
    // to hunt for the middle-degree relation.
    let flat_gens = vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)];
    let flat_scratch = RingModel::new("moduli-flat", flat_gens.clone(), vec![], 12, BTreeMap::new());
    let mut flat_pairing = BTreeMap::new();
    for ((_, a, b, _), value) in expected_values.iter().zip(&restriction) {
        flat_pairing.insert(flat_scratch.mono(&[("u", *a), ("v", *b)]), value.clone());
    }
    let flat = RingModel::new("moduli-flat", flat_gens, vec![], 12, flat_pairing);
    let candidates = vec![
        flat.mono(&[("u", 2)]),
        flat.mono(&[("u", 1), ("v", 1)]),
        flat.mono(&[("v", 2)]),
    ];
    let multipliers = vec![
        RingElement::<Rational>::generator(&flat, "u"),
        RingElement::<Rational>::generator(&flat, "v"),
    ];
    let relation = find_middle_relation(8, &candidates, &multipliers, &flat)?;
    checks.push(CheckResult::eq_check(
        "prop-2.1/relation",
        "Prop. 2.1: 3u^2 + 10uv + 3v^2 = 0",
        &vec![BigInt::from(3), BigInt::from(10), BigInt::from(3)],
        &relation,
        |r| format!("{r:?}"),
    ));

    // Final model: l^2 -> 4u still holds on the moduli space, and the
    // derived relation rewrites v^2.
    let gens = vec![
        GeneratorSpec::new("l", 2),
        GeneratorSpec::new("u", 4),
        GeneratorSpec::new("v", 4),
    ];
    let scratch = RingModel::new("moduli-scratch", gens.clone(), vec![], 12, BTreeMap::new());
    let l_rule = RewriteRule {
        lhs: Monomial(vec![2, 0, 0]),
        rhs: RingElement::from_rational_terms(&[(rat_int(4), &[("u", 1)])], &scratch)
            .expect("rule rhs"),
    };
    let c = Rational::from(relation[2].clone());
    let a_over_c = Rational::from(relation[0].clone()) / &c;
    let b_over_c = Rational::from(relation[1].clone()) / &c;
    let v_rule = RewriteRule {
        lhs: Monomial(vec![0, 0, 2]),
        rhs: RingElement::from_rational_terms(
            &[
                (-a_over_c.clone(), &[("u", 2)]),
                (-b_over_c.clone(), &[("u", 1), ("v", 1)]),
            ],
            &scratch,
        )
        .expect("rule rhs"),
    };
    let mut pairing = BTreeMap::new();
    pairing.insert(scratch.mono(&[("u", 3)]), restriction[0].clone());
    pairing.insert(scratch.mono(&[("u", 2), ("v", 1)]), restriction[1].clone());
    let ring = RingModel::new("moduli", gens, vec![l_rule, v_rule], 12, pairing);

    // Rewriting must reproduce every restriction pairing, not just the
    // two table entries.
    for ((name, a, b, _), want) in expected_values.iter().zip(&restriction) {
        let x = RingElement::<Rational>::from_rational_terms(&[(rat_int(1), &[("u", *a), ("v", *b)])], &ring)?;
        checks.push(CheckResult::eq_check(
            &format!("prop-2.1/consistency-{name}"),
            "restriction pairing vs rewriting",
            want,
            &x.pair(&ring)?,
            fmt_rat,
        ));
    }
    // Degree-8 monomials pair to zero on both sides (they sit below the
    // top degree of M, and their products with c_3 sit below that of F).
    for (name, a, b) in [("u2", 2u32, 0u32), ("uv", 1, 1), ("v2", 0, 2)] {
        let in_m = RingElement::<Rational>::from_rational_terms(&[(rat_int(1), &[("u", a), ("v", b)])], &ring)?;
        let in_f = u.pow(a, fring)?.multiply(&v.pow(b, fring)?, fring)?;
        let both_zero = in_m.pair(&ring)? == rat_int(0)
            && restrict_pair(&in_f, &c3, flag)? == rat_int(0);
        checks.push(CheckResult::bool_check(
            &format!("prop-2.1/consistency-{name}"),
            "restriction pairing vs rewriting (below top degree)",
            "0 on both sides",
            if both_zero { "0 on both sides" } else { "nonzero" },
            both_zero,
        ));
    }
    // The relation pairs to zero against both multipliers inside the
    // finished model.
    let rel_elem = RingElement::<Rational>::from_rational_terms(
        &[
            (Rational::from(relation[0].clone()), &[("u", 2)]),
            (Rational::from(relation[1].clone()), &[("u", 1), ("v", 1)]),
            (Rational::from(relation[2].clone()), &[("v", 2)]),
        ],
        &ring,
    )?;
    for (name, gen) in [("u", "u"), ("v", "v")] {
        let x = rel_elem.multiply(&RingElement::generator(&ring, gen), &ring)?;
        checks.push(CheckResult::eq_check(
            &format!("prop-2.1/relation-pairs-zero-{name}"),
            "Prop. 2.1 proof",
            &rat_int(0),
            &x.pair(&ring)?,
            fmt_rat,
        ));
    }

    Ok(ModuliModel { ring, c3_sigma: c3, relation, checks })
}

/// Chern and Pontrjagin classes of the moduli space.
pub struct ModuliChernData {
    /// As extracted from the tangent character (c_5, c_6 are the raw
    /// normal forms, not the imposed zeros).
    pub raw: ChernData<Rational>,
    /// The official classes: c_5 = c_6 = 0 imposed after verification.
    pub chern: ChernData<Rational>,
    pub pontryagin: PontryaginData<Rational>,
    pub checks: Vec<CheckResult>,
}

pub fn moduli_chern(m: &ModuliModel) -> Result<ModuliChernData, GeomError> {
    let ring = &m.ring;
    let render = |x: &RingElement<Rational>| x.render(ring);
    let mut checks = Vec::new();

    // ch(T^{1,0}M) = e^l + e^{l/2} ch(V)(8 - ch(W_C)) - e^l ch(S^2 V),
    // computed directly in the moduli ring.
    let exp_l = crate::ring::exp_nilpotent(&m.l(), &rat_int(1), ring)?;
    let exp_half = crate::ring::exp_nilpotent(&m.l(), &rat(1, 2), ring)?;
    let ch_v = crate::sym_power::ch_sym_rank2_v(&rat_int(1), ring);
    let ch_w = crate::sym_power::ch_sym_rank2(&rat_int(1), ring)
        .multiply(&ch_v, ring)?;
    let eight = RingElement::constant(rat_int(8), ring);
    let ch_s2v = ch_sym_rank2_v(&rat_int(2), ring);
    let ch_tm = exp_l
        .add(&exp_half.multiply(&ch_v, ring)?.multiply(&eight.sub(&ch_w), ring)?)
        .sub(&exp_l.multiply(&ch_s2v, ring)?);

    let raw = chern_from_character(&ch_tm, 6, ring)?;

    let u = RingElement::<Rational>::generator(ring, "u");
    let v = RingElement::<Rational>::generator(ring, "v");
    let l = m.l();

    // c_1 = 2l, c_2 = 4(3u + v), c_3 = 8lu, c_4 = -112/3 uv.
    checks.push(CheckResult::eq_check(
        "prop-2.2/c1",
        "Prop. 2.2",
        &l.scale(&rat_int(2)),
        raw.c(1),
        render,
    ));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c2",
        "Prop. 2.2",
        &u.scale(&rat_int(3)).add(&v).scale(&rat_int(4)),
        raw.c(2),
        render,
    ));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c3",
        "Prop. 2.2",
        &l.multiply(&u, ring)?.scale(&rat_int(8)),
        raw.c(3),
        render,
    ));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c4",
        "Prop. 2.2",
        &u.multiply(&v, ring)?.scale(&rat(-112, 3)),
        raw.c(4),
        render,
    ));
    // c_4 arrives as 28(u+v)^2 before the relation reduces it.
    let c4_unreduced = u.add(&v).pow(2, ring)?.scale(&rat_int(28));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c4-via-relation",
        "Prop. 2.2 proof: c_4 = 28(u+v)^2 reduces to -112/3 uv",
        &c4_unreduced,
        raw.c(4),
        render,
    ));

    // c_5: equals -32 l v (u + v) as a class in the model, pairs to zero
    // against the sole degree-2 class, and is then set to zero on the
    // cited fact that b_2(M) = 1.
    let c5_display = l
        .multiply(&v, ring)?
        .multiply(&u.add(&v), ring)?
        .scale(&rat_int(-32));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c5-form",
        "Prop. 2.2 proof: c_5 = -32lv(u+v)",
        &c5_display,
        raw.c(5),
        render,
    ));
    checks.push(CheckResult::eq_check(
        "prop-2.2/c5-pairing",
        "Prop. 2.2 proof: c_5 l = 0",
        &rat_int(0),
        &raw.c(5).multiply(&l, ring)?.pair(ring)?,
        fmt_rat,
    ));
    checks.push(CheckResult::imposed(
        "prop-2.2/c5-imposed",
        "Prop. 2.2 proof, citing dim H^2(M, R) = 1",
        "c_5 = 0 as a class",
        "verified <c_5 * l> = 0, the only pairing the model can form in degree 10; vanishing of the class follows from the cited Betti number",
    ));

    // c_6: since H^top of a closed connected oriented manifold is
    // one-dimensional and detected by the fundamental class, the pairing
    // decides the class itself. The published combination
    // (1/3)(504u^3 + 2824u^2v + 1928uv^2 + 120v^3) also pairs to zero but
    // is a different representative: it reduces to four times the
    // canonical extraction (both sit in the pairing kernel, i.e. both
    // are the zero class).
    let c6_display = RingElement::from_rational_terms(
        &[
            (rat(504, 3), &[("u", 3)]),
            (rat(2824, 3), &[("u", 2), ("v", 1)]),
            (rat(1928, 3), &[("u", 1), ("v", 2)]),
            (rat(120, 3), &[("v", 3)]),
        ],
        ring,
    )?;
    checks.push(CheckResult::eq_check(
        "prop-2.2/c6-pairing",
        "Prop. 2.2: c_6 = 0 (top degree, so the pairing decides the class)",
        &rat_int(0),
        &raw.c(6).pair(ring)?,
        fmt_rat,
    ));
    let mut c6_display_check = CheckResult::eq_check(
        "prop-2.2/c6-display-pairing",
        "Prop. 2.2 proof: the displayed combination (1/3)(504u^3 + 2824u^2v + 1928uv^2 + 120v^3) evaluates to 0",
        &rat_int(0),
        &c6_display.pair(ring)?,
        fmt_rat,
    );
    c6_display_check.computed = format!(
        "{} [the display reduces to {} while the extracted c_6 reduces to {}; they differ by a pairing-kernel element, so both represent the zero class]",
        c6_display_check.computed,
        c6_display.render(ring),
        raw.c(6).render(ring),
    );
    checks.push(c6_display_check);

    // Official data with the imposed vanishings.
    let mut official = raw.clone();
    official.classes[4] = RingElement::zero();
    official.classes[5] = RingElement::zero();
    let pont = pontrjagin_from_chern(&official, ring);

    checks.push(CheckResult::eq_check(
        "prop-2.2/p1",
        "Prop. 2.2",
        &u.add(&v).scale(&rat_int(-8)),
        pont.p(1),
        render,
    ));
    let p1_sq = pont.p(1).pow(2, ring)?;
    checks.push(CheckResult::eq_check(
        "prop-2.2/p2",
        "Prop. 2.2: p_2 = (3/8) p_1^2",
        &p1_sq.scale(&rat(3, 8)),
        pont.p(2),
        render,
    ));
    checks.push(CheckResult::eq_check(
        "prop-2.2/p3",
        "Prop. 2.2: p_3 = 0 (top degree, so the pairing decides the class)",
        &rat_int(0),
        &pont.p(3).pair(ring)?,
        fmt_rat,
    ));

    Ok(ModuliChernData { raw, chern: official, pontryagin: pont, checks })
}
