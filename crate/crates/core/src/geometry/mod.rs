//! The three concrete geometries and their index polynomials.
//!
//! Construction order matters: the Grassmannian pairing is derived first
//! from index-theoretic constraints, the flag-space model inherits its
//! pairing through fibre integration, and the moduli model is cut out of
//! the flag space by the Euler class of a twisted symmetric square. After
//! construction everything is immutable.

mod flag;
mod grassmann;
mod index;
mod moduli;

pub use flag::{flag_tangent_chern, FlagModel, FlagTangentData};
pub use grassmann::{
    derive_grassmann_pairing, grassmann_char_data, homogeneous_index_checks, GrassmannCharData,
    GrassmannModel,
};
pub use index::{
    index_ab, index_d_direct, index_d_koszul, index_x, interpolation_cross_check,
    serre_vanishing_checks, AbKind, AbRoute, IndexMachine, IndexPolynomial, Provenance,
};
pub use moduli::{moduli_chern, moduli_setup, ModuliChernData, ModuliModel};

use thiserror::Error;

use crate::chern::CharError;
use crate::linalg::LinalgError;
use crate::report::CheckResult;
use crate::ring::{RelationError, RingError};

#[derive(Debug, Error)]
pub enum GeomError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Char(#[from] CharError),
    /// An identity asserted by the construction failed to hold.
    #[error("verification failed for {check}: expected {expected}, computed {computed}")]
    VerificationFailure { check: String, expected: String, computed: String },
    /// Two supposedly equal computation routes disagree.
    #[error("route mismatch for {which}: {left} vs {right}")]
    RouteMismatch { which: String, left: String, right: String },
}

/// Promotes the first failing check to a hard [`GeomError`].
pub fn ensure_all_pass(checks: &[CheckResult]) -> Result<(), GeomError> {
    match crate::report::first_failure(checks) {
        None => Ok(()),
        Some(c) => Err(GeomError::VerificationFailure {
            check: c.id.clone(),
            expected: c.expected.clone(),
            computed: c.computed.clone(),
        }),
    }
}

/// Everything the verification suites need, built in dependency order.
pub struct Geometry {
    pub grassmann: GrassmannModel,
    pub grassmann_data: GrassmannCharData,
    pub flag: FlagModel,
    pub flag_tangent: FlagTangentData,
    pub moduli: ModuliModel,
    pub moduli_data: ModuliChernData,
}

impl Geometry {
    pub fn build() -> Result<Geometry, GeomError> {
        let grassmann = derive_grassmann_pairing()?;
        let grassmann_data = grassmann_char_data(&grassmann)?;
        let flag = FlagModel::from_grassmann(&grassmann);
        let flag_tangent = flag_tangent_chern(&flag)?;
        let moduli = moduli_setup(&flag)?;
        let moduli_data = moduli_chern(&moduli)?;
        Ok(Geometry {
            grassmann,
            grassmann_data,
            flag,
            flag_tangent,
            moduli,
            moduli_data,
        })
    }
}
