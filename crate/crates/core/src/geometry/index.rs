//! Holomorphic Euler characteristic polynomials.
//!
//! `a_k` and `b_k` are computed two ways — Riemann-Roch on the flag space
//! and coupled Dirac indexes on the Grassmannian — and `d_k` three ways:
//! directly on the moduli space, through the Koszul alternating sum, and
//! as the index of the virtual bundle `X_k`. The evaluators are generic
//! over the coefficient domain, so the same code produces the symbolic
//! polynomial (coefficients in Q[k]) and the exact values at concrete
//! twists used for the interpolation cross-check.

use crate::coeff::Coeff;
use crate::genus::{ahat_pontryagin, evaluate_genus};
use crate::poly::UniPoly;
use crate::rat::{rat_int, Rational};
use crate::report::CheckResult;
use crate::ring::{exp_nilpotent, RingElement};
use crate::sym_power::{ch_sym_rank2, ch_sym_rank2_v};

use super::grassmann::ahat_g;
use super::{FlagModel, FlagTangentData, GeomError, GrassmannModel, ModuliChernData, ModuliModel};

/// Which route produced an index polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    RiemannRochFlag,
    DiracGrassmann,
    Koszul,
    RiemannRochModuli,
    VirtualBundle,
    ClosedForm,
}

/// A holomorphic Euler characteristic as an exact polynomial in the twist
/// parameter `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPolynomial {
    pub poly: UniPoly,
    pub provenance: Provenance,
}

impl IndexPolynomial {
    pub fn eval_k(&self, k: i64) -> Rational {
        self.poly.eval_int(k)
    }

    /// The same polynomial written in `m = k + 1`.
    pub fn in_m(&self) -> UniPoly {
        self.poly.substitute_affine(&rat_int(1), &rat_int(-1))
    }

    /// Integer-valued on `k = -10..=10`.
    pub fn integer_valued(&self) -> bool {
        self.poly.integer_valued_on(-10, 10)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbKind {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbRoute {
    RiemannRochF,
    DiracG,
}

/// Shared evaluation context: the three models plus the characteristic
/// classes every route needs, computed once.
pub struct IndexMachine<'a> {
    pub grassmann: &'a GrassmannModel,
    pub flag: &'a FlagModel,
    pub moduli: &'a ModuliModel,
    td_tf: RingElement<Rational>,
    ahat_g: RingElement<Rational>,
    ahat_tm: RingElement<Rational>,
    ch_s2v_flag: RingElement<Rational>,
    ch_s2v_g: RingElement<Rational>,
}

impl<'a> IndexMachine<'a> {
    pub fn new(
        grassmann: &'a GrassmannModel,
        flag: &'a FlagModel,
        flag_tangent: &FlagTangentData,
        moduli: &'a ModuliModel,
        moduli_data: &ModuliChernData,
    ) -> IndexMachine<'a> {
        IndexMachine {
            grassmann,
            flag,
            moduli,
            td_tf: flag_tangent.todd.clone(),
            ahat_g: ahat_g(&grassmann.ring),
            ahat_tm: evaluate_genus(
                ahat_pontryagin(),
                &moduli_data.pontryagin.classes,
                &moduli.ring,
            ),
            ch_s2v_flag: ch_sym_rank2_v(&rat_int(2), &flag.ring),
            ch_s2v_g: ch_sym_rank2_v(&rat_int(2), &grassmann.ring),
        }
    }

    /// A-hat class of the moduli tangent bundle (in the moduli ring).
    pub fn ahat_tm(&self) -> &RingElement<Rational> {
        &self.ahat_tm
    }

    /// `chi(F, O(k)) = <e^{kl} td(TF), [F]>`.
    pub fn a_riemann_roch<C: Coeff>(&self, k: &C) -> Result<C, GeomError> {
        let ring = &self.flag.ring;
        let l = RingElement::<C>::generator(ring, "l");
        let e_kl = exp_nilpotent(&l, k, ring)?;
        let td = self.td_tf.map_coeffs(C::from_rational);
        Ok(e_kl.multiply(&td, ring)?.pair(ring)?)
    }

    /// `chi(F, O(S^2 V(k))) = <ch(S^2 V) e^{kl} td(TF), [F]>`.
    pub fn b_riemann_roch<C: Coeff>(&self, k: &C) -> Result<C, GeomError> {
        let ring = &self.flag.ring;
        let l = RingElement::<C>::generator(ring, "l");
        let e_kl = exp_nilpotent(&l, k, ring)?;
        let td = self.td_tf.map_coeffs(C::from_rational);
        let s2v = self.ch_s2v_flag.map_coeffs(C::from_rational);
        Ok(e_kl
            .multiply(&td, ring)?
            .multiply(&s2v, ring)?
            .pair(ring)?)
    }

    /// `A-hat(G, S^{2k+4} U)`.
    pub fn a_dirac<C: Coeff>(&self, k: &C) -> Result<C, GeomError> {
        let ring = &self.grassmann.ring;
        let n = k.scale(&rat_int(2)).add(&C::from_rational(&rat_int(4)));
        let ch = ch_sym_rank2(&n, ring);
        let ahat = self.ahat_g.map_coeffs(C::from_rational);
        Ok(ch.multiply(&ahat, ring)?.pair(ring)?)
    }

    /// `A-hat(G, S^{2k+4} U (x) S^2 V)`.
    pub fn b_dirac<C: Coeff>(&self, k: &C) -> Result<C, GeomError> {
        let ring = &self.grassmann.ring;
        let n = k.scale(&rat_int(2)).add(&C::from_rational(&rat_int(4)));
        let ch = ch_sym_rank2(&n, ring);
        let ahat = self.ahat_g.map_coeffs(C::from_rational);
        let s2v = self.ch_s2v_g.map_coeffs(C::from_rational);
        Ok(ch
            .multiply(&s2v, ring)?
            .multiply(&ahat, ring)?
            .pair(ring)?)
    }

    /// `<e^{m l} A-hat(TM), [M]>` in the twist `m = k + 1`.
    pub fn d_direct_in_m<C: Coeff>(&self, m: &C) -> Result<C, GeomError> {
        let ring = &self.moduli.ring;
        let l = RingElement::<C>::generator(ring, "l");
        let e_ml = exp_nilpotent(&l, m, ring)?;
        let ahat = self.ahat_tm.map_coeffs(C::from_rational);
        Ok(e_ml.multiply(&ahat, ring)?.pair(ring)?)
    }

    /// `A-hat(G, X_k)` for the virtual bundle
    /// `X_k = S^{2k+4}U - S^{2k+2}U S^2V + S^{2k}U S^2V - S^{2k-2}U`.
    pub fn x_index<C: Coeff>(&self, k: &C) -> Result<C, GeomError> {
        let ring = &self.grassmann.ring;
        let two_k = k.scale(&rat_int(2));
        let sym = |shift: i64| -> RingElement<C> {
            let n = two_k.add(&C::from_rational(&rat_int(shift)));
            ch_sym_rank2(&n, ring)
        };
        let s2v = self.ch_s2v_g.map_coeffs(C::from_rational);
        let ch = sym(4)
            .sub(&sym(2).multiply(&s2v, ring)?)
            .add(&sym(0).multiply(&s2v, ring)?)
            .sub(&sym(-2));
        let ahat = self.ahat_g.map_coeffs(C::from_rational);
        Ok(ch.multiply(&ahat, ring)?.pair(ring)?)
    }
}

/// Symbolic `a_k` or `b_k` along the requested route.
pub fn index_ab(
    machine: &IndexMachine,
    which: AbKind,
    route: AbRoute,
) -> Result<IndexPolynomial, GeomError> {
    let k = UniPoly::var();
    let (poly, provenance) = match (which, route) {
        (AbKind::A, AbRoute::RiemannRochF) => {
            (machine.a_riemann_roch(&k)?, Provenance::RiemannRochFlag)
        }
        (AbKind::B, AbRoute::RiemannRochF) => {
            (machine.b_riemann_roch(&k)?, Provenance::RiemannRochFlag)
        }
        (AbKind::A, AbRoute::DiracG) => (machine.a_dirac(&k)?, Provenance::DiracGrassmann),
        (AbKind::B, AbRoute::DiracG) => (machine.b_dirac(&k)?, Provenance::DiracGrassmann),
    };
    Ok(IndexPolynomial { poly, provenance })
}

/// Symbolic `d_k` from Riemann-Roch on the moduli space.
pub fn index_d_direct(machine: &IndexMachine) -> Result<IndexPolynomial, GeomError> {
    let m = UniPoly::var();
    let in_m = machine.d_direct_in_m(&m)?;
    // d_k = D(m) at m = k + 1.
    let poly = in_m.substitute_affine(&rat_int(1), &rat_int(1));
    Ok(IndexPolynomial { poly, provenance: Provenance::RiemannRochModuli })
}

/// `d_k = a_k - b_{k-1} + b_{k-2} - a_{k-3}` from the Koszul resolution.
pub fn index_d_koszul(a: &IndexPolynomial, b: &IndexPolynomial) -> IndexPolynomial {
    let one = rat_int(1);
    let shift = |p: &UniPoly, by: i64| p.substitute_affine(&one, &rat_int(by));
    let poly = a
        .poly
        .sub(&shift(&b.poly, -1))
        .add(&shift(&b.poly, -2))
        .sub(&shift(&a.poly, -3));
    IndexPolynomial { poly, provenance: Provenance::Koszul }
}

/// Symbolic `d_k` as the Dirac index of the virtual bundle `X_k`.
pub fn index_x(machine: &IndexMachine) -> Result<IndexPolynomial, GeomError> {
    let poly = machine.x_index(&UniPoly::var())?;
    Ok(IndexPolynomial { poly, provenance: Provenance::VirtualBundle })
}

/// Serre-duality functional equations, root list and anchor values.
pub fn serre_vanishing_checks(a: &IndexPolynomial, b: &IndexPolynomial) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    let reflect = |p: &UniPoly| p.substitute_affine(&rat_int(-1), &rat_int(0));
    let shift5 = |p: &UniPoly| p.substitute_affine(&rat_int(1), &rat_int(-5)).neg();
    checks.push(CheckResult::eq_check(
        "serre/a-functional-equation",
        "Eq. (Serre): a_{-k} = -a_{k-5}",
        &shift5(&a.poly),
        &reflect(&a.poly),
        |p| p.render("k"),
    ));
    checks.push(CheckResult::eq_check(
        "serre/b-functional-equation",
        "Eq. (Serre): b_{-k} = -b_{k-5}",
        &shift5(&b.poly),
        &reflect(&b.poly),
        |p| p.render("k"),
    ));
    // Roots, including the half-integer root -5/2.
    let a_roots = ["-1", "-2", "-5/2", "-3", "-4"];
    for root in a_roots {
        let (num, den) = parse_root(root);
        let value = a.poly.eval(&(rat_int(num) / rat_int(den)));
        checks.push(CheckResult::eq_check(
            &format!("serre/a-root-({root})"),
            "vanishing a_k for k in {-4, -3, -5/2, -2, -1}",
            &rat_int(0),
            &value,
            crate::rat::fmt_rat,
        ));
    }
    let b_roots = ["0", "-1", "-2", "-5/2", "-3", "-4", "-5"];
    for root in b_roots {
        let (num, den) = parse_root(root);
        let value = b.poly.eval(&(rat_int(num) / rat_int(den)));
        checks.push(CheckResult::eq_check(
            &format!("serre/b-root-({root})"),
            "vanishing b_k for k in {-4, -3, -5/2, -2, -1} plus b_0 = 0 = b_{-5}",
            &rat_int(0),
            &value,
            crate::rat::fmt_rat,
        ));
    }
    // Anchors a_0 = 1 = -a_{-5}.
    checks.push(CheckResult::eq_check(
        "serre/anchor-a0",
        "a_0 = 1",
        &rat_int(1),
        &a.eval_k(0),
        crate::rat::fmt_rat,
    ));
    checks.push(CheckResult::eq_check(
        "serre/anchor-a-minus5",
        "a_{-5} = -1",
        &rat_int(-1),
        &a.eval_k(-5),
        crate::rat::fmt_rat,
    ));
    checks
}

fn parse_root(s: &str) -> (i64, i64) {
    match s.split_once('/') {
        Some((n, d)) => (n.parse().unwrap(), d.parse().unwrap()),
        None => (s.parse().unwrap(), 1),
    }
}

/// Independent cross-check: evaluate the concrete-twist route at the 21
/// integer twists `k = -10..=10`, interpolate exactly, and compare with
/// the symbolic polynomial.
pub fn interpolation_cross_check(
    machine: &IndexMachine,
    which: &str,
    symbolic: &IndexPolynomial,
) -> Result<CheckResult, GeomError> {
    let mut points = Vec::new();
    for k in -10..=10i64 {
        let value = match which {
            "a" => machine.a_riemann_roch(&rat_int(k))?,
            "b" => machine.b_riemann_roch(&rat_int(k))?,
            "d" => machine.d_direct_in_m(&rat_int(k + 1))?,
            "x" => machine.x_index(&rat_int(k))?,
            other => panic!("unknown index {other}"),
        };
        points.push((rat_int(k), value));
    }
    let interpolated = UniPoly::interpolate(&points);
    Ok(CheckResult::eq_check(
        &format!("thm-3.1/interpolation-{which}"),
        "21-point exact interpolation vs symbolic computation",
        &symbolic.poly,
        &interpolated,
        |p| p.render("k"),
    ))
}
