//! Exact-arithmetic construction, enumeration, and verification of
//! computational bases for the three conforming families of finite element
//! differential forms on squares and cubes: the tensor product family
//! `Q^-_r Λ^k`, the serendipity family `S_r Λ^k`, and the trimmed
//! serendipity family `S^-_r Λ^k`.
//!
//! The crate provides:
//!
//! - a small exact calculus of polynomial differential forms (wedge,
//!   exterior derivative, Koszul operator, traces onto cube faces);
//! - generators for the classical polynomial form spaces used as rank
//!   oracles (`H_r`, `H_{r,l}`, `J_r`, `P_r`, `P^-_r`, `Q^-_r`, `S_r`,
//!   `S^-_r` spanning sets);
//! - the face-associated subspace constructions (`V`, `E_i`, `F_i`, `I_i`
//!   and their tilde/hat/tensor variants) and basis assembly per family;
//! - exact rank computation over the rationals and the rank-equality basis
//!   verification procedure.
//!
//! Everything is computed in exact rational arithmetic; there are no
//! tolerances anywhere.

pub mod bases;
pub mod error;
pub mod face;
pub mod form;
pub mod json;
pub mod parse;
pub mod poly;
pub mod render;
pub mod scalar;
pub mod spaces;
pub mod verify;

pub use bases::{
    assemble, associate_face, subspace, AssociatedBasis, BasisElement, Family, FamilyId,
    SubspaceId, SubspaceKind,
};
pub use error::{BasisError, FormError, ParseError, SpaceError, VerifyError};
pub use face::{faces_of_cube, min_trace_dim, Face};
pub use form::{Alternator, DifferentialForm};
pub use poly::{ExponentVector, Polynomial};
pub use scalar::ExactScalar;
pub use spaces::{
    homogeneous_basis, homogeneous_ldeg_basis, j_span, p_minus_span, p_span, q_minus_span,
    s_minus_span, s_span, SpaceKind, SpanTag, SpanningSet,
};
pub use verify::{
    check_computational_basis, coefficient_row, in_span, rank_exact, rank_of_forms, verify_basis,
    CheckOutcome, RationalMatrix, VerificationReport,
};
