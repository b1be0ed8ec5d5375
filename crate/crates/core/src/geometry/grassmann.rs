//! The oriented Grassmannian of 4-planes in R^8.
//!
//! Cohomology is modelled by the subring generated by the degree-4
//! classes `u = -c_2(U)` and `v = -c_2(V)`, truncated above degree 16.
//! The intersection pairing is not postulated: it is derived by solving
//! the linear system coming from three index-theoretic facts (vanishing
//! A-hat genus, the isometry-group dimension formula, and the vanishing
//! twisted index), with the constraint rows generated by the generic
//! characteristic-class machinery.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::chern::{pontryagin_from_complexified_ch, PontryaginData};
use crate::genus::{ahat_pontryagin, evaluate_genus};
use crate::linalg::{solve_linear_system, RatMatrix};
use crate::rat::{fmt_rat, rat, rat_int, to_coprime_integers, Rational};
use crate::report::CheckResult;
use crate::ring::{GeneratorSpec, RingElement, RingModel};
use crate::sym_power::{ch_sym_rank2, ch_sym_rank2_v};

use super::GeomError;

/// The Grassmannian ring model with its derived pairing, plus the
/// artefacts of the derivation for reporting.
pub struct GrassmannModel {
    pub ring: RingModel,
    /// Normalized integer constraint rows in the basis (e^4, e^2f^2, f^4).
    pub constraint_rows: Vec<Vec<BigInt>>,
    /// Matching right-hand sides.
    pub constraint_rhs: Vec<BigInt>,
    /// Solved values (e^4, e^2f^2, f^4).
    pub solution: Vec<Rational>,
    pub checks: Vec<CheckResult>,
}

impl GrassmannModel {
    /// Euler class e = u - v.
    pub fn e(&self) -> RingElement<Rational> {
        let u = RingElement::generator(&self.ring, "u");
        let v = RingElement::generator(&self.ring, "v");
        u.sub(&v)
    }

    /// First Pontrjagin class f = 2(u + v).
    pub fn f(&self) -> RingElement<Rational> {
        let u = RingElement::<Rational>::generator(&self.ring, "u");
        let v = RingElement::<Rational>::generator(&self.ring, "v");
        u.add(&v).scale(&rat_int(2))
    }
}

fn unpaired_ring() -> RingModel {
    RingModel::new(
        "grassmannian",
        vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)],
        vec![],
        16,
        BTreeMap::new(),
    )
}

/// Scratch ring in the classes e, f used to express top-degree classes in
/// the basis the constraints are written in.
fn ef_ring() -> RingModel {
    RingModel::new(
        "grassmannian-ef",
        vec![GeneratorSpec::new("e", 4), GeneratorSpec::new("f", 4)],
        vec![],
        16,
        BTreeMap::new(),
    )
}

/// Images of u, v in the (e, f) ring: u = e/2 + f/4, v = f/4 - e/2.
fn uv_to_ef_images(ef: &RingModel) -> Vec<RingElement<Rational>> {
    let e = RingElement::<Rational>::generator(ef, "e");
    let f = RingElement::<Rational>::generator(ef, "f");
    vec![
        e.scale(&rat(1, 2)).add(&f.scale(&rat(1, 4))),
        f.scale(&rat(1, 4)).sub(&e.scale(&rat(1, 2))),
    ]
}

/// Images of e, f back in the (u, v) ring: e = u - v, f = 2u + 2v.
pub(super) fn ef_to_uv_images(uv: &RingModel) -> Vec<RingElement<Rational>> {
    let u = RingElement::<Rational>::generator(uv, "u");
    let v = RingElement::<Rational>::generator(uv, "v");
    vec![u.sub(&v), u.add(&v).scale(&rat_int(2))]
}

/// Coefficients of the degree-16 part of `x` in the monomial basis
/// (e^4, e^3 f, e^2 f^2, e f^3, f^4).
fn top_coeffs_ef(x: &RingElement<Rational>, ef: &RingModel) -> [Rational; 5] {
    let images = uv_to_ef_images(ef);
    let in_ef = x
        .substitute(&images, Clone::clone, ef)
        .expect("ef substitution normalizes")
        .graded_part(16, ef);
    let basis = [
        ef.mono(&[("e", 4)]),
        ef.mono(&[("e", 3), ("f", 1)]),
        ef.mono(&[("e", 2), ("f", 2)]),
        ef.mono(&[("e", 1), ("f", 3)]),
        ef.mono(&[("f", 4)]),
    ];
    basis.map(|m| in_ef.coeff_of(&m))
}

pub(super) fn ch_w_c(model: &RingModel) -> RingElement<Rational> {
    let ch_u = ch_sym_rank2(&rat_int(1), model);
    let ch_v = ch_sym_rank2_v(&rat_int(1), model);
    ch_u.multiply(&ch_v, model).expect("normalizes")
}

pub(super) fn ch_tg_c(model: &RingModel) -> RingElement<Rational> {
    let w = ch_w_c(model);
    let eight = RingElement::constant(rat_int(8), model);
    w.multiply(&eight.sub(&w), model).expect("normalizes")
}

pub(super) fn pontryagin_g(model: &RingModel) -> PontryaginData<Rational> {
    pontryagin_from_complexified_ch(&ch_tg_c(model), 16, model)
        .expect("tangent character has rank 16")
}

pub(super) fn ahat_g(model: &RingModel) -> RingElement<Rational> {
    evaluate_genus(ahat_pontryagin(), &pontryagin_g(model).classes, model)
}

/// Derives the intersection pairing of the Grassmannian.
///
/// The three constraints are generated, not transcribed: the A-hat class
/// and the twisted character come out of the genus machinery, and only
/// then are their top-degree parts read off in the (e, f) basis. Odd
/// powers of e are killed by the u <-> v symmetry before solving.
pub fn derive_grassmann_pairing() -> Result<GrassmannModel, GeomError> {
    let ring = unpaired_ring();
    let ef = ef_ring();
    let u = RingElement::<Rational>::generator(&ring, "u");

    let pont = pontryagin_g(&ring);
    let ahat = ahat_g(&ring);
    let ch_s2u = ch_sym_rank2(&rat_int(2), &ring);

    // Constraint 1: the A-hat genus vanishes (spin, positive scalar
    // curvature). Row = top part of the A-hat class.
    let row1 = top_coeffs_ef(&ahat, &ef);

    // Constraint 2: isometry dimension 28 = 7 - (8/3) P_1 u^3 + 64 u^4.
    let p1u3 = pont
        .p(1)
        .multiply(&u.pow(3, &ring)?, &ring)?
        .scale(&rat(-8, 3));
    let iso = p1u3.add(&u.pow(4, &ring)?.scale(&rat_int(64)));
    let row2 = top_coeffs_ef(&iso, &ef);

    // Constraint 3: the twisted index A-hat(G, S^2 U) vanishes. The
    // rank * A-hat_4 contribution is removed against constraint 1 (a row
    // operation), which recovers the classical form of the equation.
    let twisted = ch_s2u.multiply(&ahat, &ring)?;
    let row3_full = top_coeffs_ef(&twisted, &ef);
    let rank = rat_int(3);
    let row3: [Rational; 5] = std::array::from_fn(|i| &row3_full[i] - &row1[i] * &rank);

    // The u <-> v symmetry forces <e^3 f> = <e f^3> = 0, so only the even
    // columns survive as unknowns (e^4, e^2 f^2, f^4).
    let even = |row: &[Rational; 5]| vec![row[0].clone(), row[2].clone(), row[4].clone()];
    let matrix = RatMatrix::from_rows(vec![even(&row1), even(&row2), even(&row3)]);
    let rhs = vec![rat_int(0), rat_int(21), rat_int(0)];
    let solution = solve_linear_system(&matrix, &rhs)?;

    // Normalized integer rows (row and right-hand side scaled together)
    // for reporting.
    let mut constraint_rows = Vec::new();
    let mut constraint_rhs = Vec::new();
    for (row, b) in [(&row1, rat_int(0)), (&row2, rat_int(21)), (&row3, rat_int(0))] {
        let mut padded = even(row);
        padded.push(b);
        let ints = to_coprime_integers(&padded).expect("constraint rows are nonzero");
        constraint_rhs.push(ints[3].clone());
        constraint_rows.push(ints[..3].to_vec());
    }

    // Convert (e^4, e^2f^2, f^4) into the pairing table on u^a v^b.
    let mut pairing = BTreeMap::new();
    let mut pair_values = Vec::new();
    for a in (0..=4u32).rev() {
        let b = 4 - a;
        let mono = ring.mono(&[("u", a), ("v", b)]);
        let elem = RingElement::<Rational>::from_terms(vec![(mono.clone(), rat_int(1))], &ring)?;
        let coeffs = top_coeffs_ef(&elem, &ef);
        let value = &coeffs[0] * &solution[0] + &coeffs[2] * &solution[1] + &coeffs[4] * &solution[2];
        pairing.insert(mono, value.clone());
        pair_values.push((format!("u{a}v{b}"), value));
    }
    let paired_ring = RingModel::new(
        "grassmannian",
        vec![GeneratorSpec::new("u", 4), GeneratorSpec::new("v", 4)],
        vec![],
        16,
        pairing,
    );

    // Checks.
    let mut checks = Vec::new();
    checks.push(CheckResult::eq_check(
        "prop-1.1/constraint-matrix",
        "Prop. 1.1 via facts (i)-(iii)",
        &vec![
            vec![BigInt::from(-10), BigInt::from(16), BigInt::from(-3)],
            vec![BigInt::from(16), BigInt::from(24), BigInt::from(1)],
            vec![BigInt::from(24), BigInt::from(-26), BigInt::from(1)],
        ],
        &constraint_rows,
        |rows| format!("{rows:?}"),
    ));
    checks.push(CheckResult::eq_check(
        "prop-1.1/constraint-rhs",
        "Prop. 1.1 via facts (i)-(iii)",
        &vec![BigInt::from(0), BigInt::from(84), BigInt::from(0)],
        &constraint_rhs,
        |v| format!("{v:?}"),
    ));
    checks.push(CheckResult::eq_check(
        "prop-1.1/solution-e4-e2f2-f4",
        "Prop. 1.1",
        &vec![rat_int(2), rat_int(2), rat_int(4)],
        &solution,
        |v| {
            let parts: Vec<String> = v.iter().map(fmt_rat).collect();
            format!("({})", parts.join(", "))
        },
    ));
    checks.push(CheckResult::bool_check(
        "prop-1.1/e-odd-symmetry",
        "Prop. 1.1 proof",
        "<e^3 f> = <e f^3> = 0, forced by the u <-> v symmetry",
        "imposed before solving; note the proof line prints the pair as \"ef^3=0=ef^3\", an evident slip for e^3 f = 0 = e f^3",
        true,
    ));
    let expected_pairs = [
        ("u4v0", rat(21, 64)),
        ("u3v1", rat(-7, 64)),
        ("u2v2", rat(5, 64)),
        ("u1v3", rat(-7, 64)),
        ("u0v4", rat(21, 64)),
    ];
    for ((name, got), (ename, want)) in pair_values.iter().zip(expected_pairs.iter()) {
        assert_eq!(name, ename);
        checks.push(CheckResult::eq_check(
            &format!("prop-1.1/pair-{name}"),
            "Prop. 1.1",
            want,
            got,
            fmt_rat,
        ));
    }

    // e, f pairings in the finished ring.
    let up = RingElement::<Rational>::generator(&paired_ring, "u");
    let vp = RingElement::<Rational>::generator(&paired_ring, "v");
    let e = up.sub(&vp);
    let f = up.add(&vp).scale(&rat_int(2));
    let ef_cases: [(&str, u32, u32, Rational); 5] = [
        ("e4", 4, 0, rat_int(2)),
        ("e3f", 3, 1, rat_int(0)),
        ("e2f2", 2, 2, rat_int(2)),
        ("ef3", 1, 3, rat_int(0)),
        ("f4", 0, 4, rat_int(4)),
    ];
    for (name, ae, af, want) in ef_cases {
        let x = e
            .pow(ae, &paired_ring)?
            .multiply(&f.pow(af, &paired_ring)?, &paired_ring)?;
        checks.push(CheckResult::eq_check(
            &format!("prop-1.1/pair-{name}"),
            "Prop. 1.1",
            &want,
            &x.pair(&paired_ring)?,
            fmt_rat,
        ));
    }

    Ok(GrassmannModel {
        ring: paired_ring,
        constraint_rows,
        constraint_rhs,
        solution,
        checks,
    })
}

/// Characteristic data of the Grassmannian with verification against the
/// closed-form expressions.
pub struct GrassmannCharData {
    pub ch_w: RingElement<Rational>,
    pub ch_t: RingElement<Rational>,
    pub pontryagin: PontryaginData<Rational>,
    pub ahat: RingElement<Rational>,
    pub checks: Vec<CheckResult>,
}

pub fn grassmann_char_data(g: &GrassmannModel) -> Result<GrassmannCharData, GeomError> {
    let ring = &g.ring;
    let ef = ef_ring();
    let ef_images = ef_to_uv_images(ring);
    let from_ef = |terms: &[(Rational, &[(&str, u32)])]| -> RingElement<Rational> {
        RingElement::from_rational_terms(terms, &ef)
            .expect("builds")
            .substitute(&ef_images, Clone::clone, ring)
            .expect("substitution normalizes")
    };
    let render = |x: &RingElement<Rational>| x.render(ring);

    let ch_w = ch_w_c(ring);
    let ch_t = ch_tg_c(ring);
    let pont = pontryagin_g(ring);
    let ahat = ahat_g(ring);

    let mut checks = Vec::new();

    // ch(W_C) = 4 + f + (1/12)(-2e^2+f^2) + (1/360)(-3e^2f+f^3)
    //         + (1/20160)(2e^4-4e^2f^2+f^4).
    let ch_w_display = from_ef(&[
        (rat_int(4), &[]),
        (rat_int(1), &[("f", 1)]),
        (rat(-2, 12), &[("e", 2)]),
        (rat(1, 12), &[("f", 2)]),
        (rat(-3, 360), &[("e", 2), ("f", 1)]),
        (rat(1, 360), &[("f", 3)]),
        (rat(2, 20160), &[("e", 4)]),
        (rat(-4, 20160), &[("e", 2), ("f", 2)]),
        (rat(1, 20160), &[("f", 4)]),
    ]);
    checks.push(CheckResult::eq_check(
        "prop-1.2/eq-chW",
        "Eq. (chW)",
        &ch_w_display,
        &ch_w,
        render,
    ));

    // ch(TG)_C = 16 - f^2 + (1/6)(2e^2f - f^3)
    //          + (1/720)(-20e^4 + 32e^2f^2 - 9f^4).
    let ch_t_display = from_ef(&[
        (rat_int(16), &[]),
        (rat_int(-1), &[("f", 2)]),
        (rat(2, 6), &[("e", 2), ("f", 1)]),
        (rat(-1, 6), &[("f", 3)]),
        (rat(-20, 720), &[("e", 4)]),
        (rat(32, 720), &[("e", 2), ("f", 2)]),
        (rat(-9, 720), &[("f", 4)]),
    ]);
    checks.push(CheckResult::eq_check(
        "prop-1.2/eq-chT",
        "Eq. (chT)",
        &ch_t_display,
        &ch_t,
        render,
    ));

    // Reconstruction of the character from the Pontrjagin classes:
    // 16 - (1/6)P_2 + (1/120)P_3 + (1/10080)(P_2^2 - 2P_4).
    let p2 = pont.p(2);
    let p3 = pont.p(3);
    let p4 = pont.p(4);
    let ch_tt = RingElement::constant(rat_int(16), ring)
        .add(&p2.scale(&rat(-1, 6)))
        .add(&p3.scale(&rat(1, 120)))
        .add(
            &p2.multiply(p2, ring)?
                .sub(&p4.scale(&rat_int(2)))
                .scale(&rat(1, 10080)),
        );
    checks.push(CheckResult::eq_check(
        "prop-1.2/eq-chTT",
        "Eq. (chTT)",
        &ch_t,
        &ch_tt,
        render,
    ));

    // The universal weight-4 A-hat polynomial, coefficient by
    // coefficient over the doubled denominator.
    let ahat_polys = ahat_pontryagin();
    let formal = ahat_polys.formal_model();
    let a4_denominator = rat_int(65536) * rat_int(81) * rat_int(25) * rat_int(7);
    let a4_cases: [(&[(&str, u32)], i64); 5] = [
        (&[("p1", 4)], 762),
        (&[("p1", 2), ("p2", 1)], -1808),
        (&[("p2", 2)], 416),
        (&[("p1", 1), ("p3", 1)], 1024),
        (&[("p4", 1)], -384),
    ];
    let a4_ok = ahat_polys.poly(4).n_terms() == 5
        && a4_cases
            .iter()
            .all(|(exps, num)| {
                ahat_polys.poly(4).coeff_of(&formal.mono(exps)) == rat_int(*num) / &a4_denominator
            });
    checks.push(CheckResult::bool_check(
        "prop-1.2/eq-A4",
        "Eq. (A4)",
        "(762 P1^4 - 1808 P1^2 P2 + 416 P2^2 + 1024 P1 P3 - 384 P4) / (2^16 3^4 5^2 7)",
        if a4_ok {
            "all five coefficients reproduced over the stated denominator"
        } else {
            "coefficient mismatch"
        },
        a4_ok,
    ));

    // P_1 = 0 identically; P_2, P_3, P_4 as displayed.
    checks.push(CheckResult::eq_check(
        "prop-1.2/P1",
        "Prop. 1.2",
        &RingElement::zero(),
        pont.p(1),
        render,
    ));
    let p2_display = from_ef(&[(rat_int(6), &[("f", 2)])]);
    checks.push(CheckResult::eq_check("prop-1.2/P2", "Eq. (PPP)", &p2_display, p2, render));
    let p3_display = from_ef(&[(rat_int(40), &[("e", 2), ("f", 1)]), (rat_int(-20), &[("f", 3)])]);
    checks.push(CheckResult::eq_check("prop-1.2/P3", "Eq. (PPP)", &p3_display, p3, render));
    let p4_display = from_ef(&[
        (rat_int(140), &[("e", 4)]),
        (rat_int(-224), &[("e", 2), ("f", 2)]),
        (rat_int(81), &[("f", 4)]),
    ]);
    checks.push(CheckResult::eq_check("prop-1.2/P4", "Eq. (PPP)", &p4_display, p4, render));

    // Pairing-level vanishing of P_3 against both degree-4 generators,
    // then P_3 = 0 imposed by the W / W-perp symmetry argument.
    let u = RingElement::<Rational>::generator(ring, "u");
    let v = RingElement::<Rational>::generator(ring, "v");
    for (name, x) in [("u", &u), ("v", &v)] {
        checks.push(CheckResult::eq_check(
            &format!("prop-1.2/P3-pairing-{name}"),
            "Prop. 1.2 proof",
            &rat_int(0),
            &p3.multiply(x, ring)?.pair(ring)?,
            fmt_rat,
        ));
    }
    checks.push(CheckResult::imposed(
        "prop-1.2/P3-imposed",
        "Prop. 1.2 proof",
        "P_3 = 0 as a class",
        "verified at pairing level (<P_3 u> = <P_3 v> = 0); the class statement follows from the W / W-perp symmetry, which the u,v subring cannot express",
    ));

    // A-hat class: degree-8 part -f^2/240; degree-12 part is the
    // mathematically forced -(1/3024)(2e^2 f - f^3).
    let f_elem = g.f();
    let ahat8 = f_elem.pow(2, ring)?.scale(&rat(-1, 240));
    checks.push(CheckResult::eq_check(
        "prop-1.2/ahat-deg8",
        "Prop. 1.2",
        &ahat8,
        &ahat.graded_part(8, ring),
        render,
    ));
    let ahat12 = p3.scale(&rat(-1, 60480));
    let mut deg12 = CheckResult::eq_check(
        "prop-1.2/ahat-deg12",
        "Prop. 1.2 proof (fact (iii))",
        &ahat12,
        &ahat.graded_part(12, ring),
        render,
    );
    deg12.expected = format!(
        "{} [= -P_3/60480 = -(1/3024)(2e^2f - f^3); the published evaluated display reads +(1/1008)(2e^2f - f^3), inconsistent with its own symbolic coefficient -1/(2^6 3^3 5 7) and with equation (3)]",
        deg12.expected
    );
    checks.push(deg12);
    checks.push(CheckResult::eq_check(
        "prop-1.2/ahat4-pairing",
        "fact (i): the A-hat genus vanishes",
        &rat_int(0),
        &ahat.pair(ring)?,
        fmt_rat,
    ));

    // p_1(W) = f and p_2(W) = e^2 read off from ch(W_C).
    let pw = pontryagin_from_complexified_ch(&ch_w, 4, ring)?;
    checks.push(CheckResult::eq_check(
        "prop-1.1/eq-comp-f",
        "Eq. (comp)",
        &f_elem,
        pw.p(1),
        render,
    ));
    let e_sq = g.e().pow(2, ring)?;
    checks.push(CheckResult::eq_check("prop-1.1/eq-p2", "Eq. (p2)", &e_sq, pw.p(2), render));

    Ok(GrassmannCharData { ch_w, ch_t, pontryagin: pont, ahat, checks })
}

/// The three homogeneous-space index identities, re-verified against the
/// derived pairing.
pub fn homogeneous_index_checks(g: &GrassmannModel) -> Result<Vec<CheckResult>, GeomError> {
    let ring = &g.ring;
    let ahat = ahat_g(ring);
    let pont = pontryagin_g(ring);
    let u = RingElement::<Rational>::generator(ring, "u");
    let mut checks = Vec::new();

    let s2u_index = ch_sym_rank2(&rat_int(2), ring)
        .multiply(&ahat, ring)?
        .pair(ring)?;
    checks.push(CheckResult::eq_check(
        "prop-1.1/index-s2u",
        "fact (iii): A-hat(G, S^2 U) = 0",
        &rat_int(0),
        &s2u_index,
        fmt_rat,
    ));

    let dim = rat_int(7)
        + pont
            .p(1)
            .multiply(&u.pow(3, ring)?, ring)?
            .pair(ring)?
            * rat(-8, 3)
        + u.pow(4, ring)?.pair(ring)? * rat_int(64);
    checks.push(CheckResult::eq_check(
        "prop-1.1/isometry-dim",
        "fact (ii): d = 7 - (8/3)P_1 u^3 + 64 u^4",
        &rat_int(28),
        &dim,
        fmt_rat,
    ));

    let tangent_index = ch_tg_c(ring).multiply(&ahat, ring)?.pair(ring)?;
    checks.push(CheckResult::eq_check(
        "prop-1.1/index-tangent",
        "Remark: the index coupled to the tangent bundle (Rarita-Schwinger type) vanishes; computed with the complexified tangent character",
        &rat_int(0),
        &tangent_index,
        fmt_rat,
    ));

    Ok(checks)
}
