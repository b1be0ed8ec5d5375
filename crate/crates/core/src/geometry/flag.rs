//! The twistor flag space over the Grassmannian.
//!
//! Complex 9-dimensional, with second cohomology generated by the
//! fundamental class `l = c_1(L)`. The ring model adds `l` (degree 2) to
//! the Grassmannian generators with the Leray-Hirsch rule `l^2 -> 4u`;
//! the pairing integrates over the fibre (`l` restricts to a degree-2
//! class on each rational curve) and then pairs on the base.

use std::collections::BTreeMap;

use crate::chern::{chern_from_character, ChernData};
use crate::genus::{evaluate_genus, todd_chern};
use crate::rat::{fmt_rat, rat, rat_int, Rational};
use crate::report::CheckResult;
use crate::ring::{
    exp_nilpotent, GeneratorSpec, Monomial, RewriteRule, RingElement, RingModel,
};
use crate::sym_power::{ch_sym_rank2, ch_sym_rank2_v};

use super::{GeomError, GrassmannModel};

pub struct FlagModel {
    pub ring: RingModel,
}

impl FlagModel {
    /// Builds the flag ring over a derived Grassmannian model. Top-degree
    /// normal monomials are `l * (degree-16 base monomial)` and inherit
    /// twice the base pairing.
    pub fn from_grassmann(g: &GrassmannModel) -> FlagModel {
        let gens = vec![
            GeneratorSpec::new("l", 2),
            GeneratorSpec::new("u", 4),
            GeneratorSpec::new("v", 4),
        ];
        let scratch = RingModel::new("flag-scratch", gens.clone(), vec![], 18, BTreeMap::new());
        let rule = RewriteRule {
            lhs: Monomial(vec![2, 0, 0]),
            rhs: RingElement::from_rational_terms(&[(rat_int(4), &[("u", 1)])], &scratch)
                .expect("rule right-hand side"),
        };
        let mut pairing = BTreeMap::new();
        for (base_mono, value) in g.ring.pairing_table() {
            let mut exps = vec![1u32];
            exps.extend_from_slice(&base_mono.0);
            pairing.insert(Monomial(exps), value * rat_int(2));
        }
        FlagModel {
            ring: RingModel::new("flag", gens, vec![rule], 18, pairing),
        }
    }

    pub fn l(&self) -> RingElement<Rational> {
        RingElement::generator(&self.ring, "l")
    }

    /// `exp(t * l)` for a rational multiple `t`.
    pub fn exp_l(&self, t: &Rational) -> Result<RingElement<Rational>, GeomError> {
        Ok(exp_nilpotent(&self.l(), t, &self.ring)?)
    }

    /// `ch(W_C)` pulled back to the flag ring.
    pub fn ch_w_c(&self) -> RingElement<Rational> {
        let ch_u = ch_sym_rank2(&rat_int(1), &self.ring);
        let ch_v = ch_sym_rank2_v(&rat_int(1), &self.ring);
        ch_u.multiply(&ch_v, &self.ring).expect("normalizes")
    }

    /// `ch(S^2 V)` pulled back to the flag ring.
    pub fn ch_s2v(&self) -> RingElement<Rational> {
        ch_sym_rank2_v(&rat_int(2), &self.ring)
    }

    /// Chern character of the holomorphic tangent bundle:
    /// `e^l + e^{l/2} ch(V) (8 - ch(W_C))`.
    pub fn ch_tangent(&self) -> Result<RingElement<Rational>, GeomError> {
        let ring = &self.ring;
        let half = self.exp_l(&rat(1, 2))?;
        let ch_v = ch_sym_rank2_v(&rat_int(1), ring);
        let eight = RingElement::constant(rat_int(8), ring);
        let vertical = self.exp_l(&rat_int(1))?;
        let horizontal = half
            .multiply(&ch_v, ring)?
            .multiply(&eight.sub(&self.ch_w_c()), ring)?;
        Ok(vertical.add(&horizontal))
    }
}

/// Tangent Chern classes of the flag space with their verifications.
pub struct FlagTangentData {
    pub chern: ChernData<Rational>,
    pub todd: RingElement<Rational>,
    pub checks: Vec<CheckResult>,
}

pub fn flag_tangent_chern(flag: &FlagModel) -> Result<FlagTangentData, GeomError> {
    let ring = &flag.ring;
    let ch = flag.ch_tangent()?;
    let chern = chern_from_character(&ch, 9, ring)?;
    let todd = evaluate_genus(todd_chern(), &chern.classes, ring);

    let mut checks = Vec::new();
    checks.push(CheckResult::eq_check(
        "prop-2.2/flag-rank",
        "complex 9-dimensional homogeneous space",
        &RingElement::constant(rat_int(9), ring),
        &ch.graded_part(0, ring),
        |x| x.render(ring),
    ));
    let five_l = flag.l().scale(&rat_int(5));
    checks.push(CheckResult::eq_check(
        "prop-2.2/flag-c1",
        "property (ii): L^5 is the anticanonical bundle",
        &five_l,
        chern.c(1),
        |x| x.render(ring),
    ));
    checks.push(CheckResult::eq_check(
        "prop-3.2/flag-todd-genus",
        "the flag space has Todd genus a_0 = 1",
        &rat_int(1),
        &todd.pair(ring)?,
        fmt_rat,
    ));

    Ok(FlagTangentData { chern, todd, checks })
}
