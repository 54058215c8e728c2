//! Exact construction and verification of Macdonald polynomials.
//!
//! The crate builds the nonsymmetric (`E_v`), shifted nonsymmetric (`M_v`),
//! symmetric (`P_λ`) and shifted symmetric (`MS_λ`) families over `Q(q,t)`
//! from the Yang-Baxter recurrences, and checks factorization ("clustering")
//! identities under cyclotomic specializations of the parameters.

pub mod error;
pub mod exact;

pub use error::AlgebraError;
pub mod clustering;
pub mod combinatorics;
pub mod hecke;
pub mod jack;
pub mod linalg;
pub mod macdonald;
pub mod poly;
pub mod report;
pub mod suites;
