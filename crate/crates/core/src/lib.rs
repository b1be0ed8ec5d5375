//! Exact computer algebra for the cohomology of the oriented Grassmannian
//! SO(8)/(SO(4)xSO(4)), its twistor flag space, and the moduli space of
//! stable rank-2 bundles over a genus-3 hyperelliptic curve.
//!
//! Everything runs in arbitrary-precision rational arithmetic. The crate
//! derives the Grassmannian intersection pairing from index-theoretic
//! constraints, reconstructs Chern and Pontrjagin classes of all three
//! spaces, computes the holomorphic Euler characteristic polynomials
//! `a_k`, `b_k`, `d_k` by independent routes (Riemann-Roch on the flag
//! space, coupled Dirac indexes on the Grassmannian, a Koszul resolution,
//! and Weyl-dimension closed forms), and evaluates the rank-2 Verlinde
//! formula exactly in cyclotomic fields.

pub mod bernoulli;
pub mod chern;
pub mod coeff;
pub mod cyclotomic;
pub mod genus;
pub mod geometry;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod report;
pub mod ring;
pub mod series;
pub mod sym_power;
pub mod verify;
pub mod verlinde;
pub mod weyl;

pub use bernoulli::bernoulli;
pub use coeff::Coeff;
pub use linalg::{nullspace, solve_linear_system, LinalgError, RatMatrix};
pub use poly::UniPoly;
pub use rat::Rational;
pub use ring::{
    exp_nilpotent, find_middle_relation, pushforward_flag, GeneratorSpec, Monomial,
    RelationError, RewriteRule, RingElement, RingError, RingModel,
};
