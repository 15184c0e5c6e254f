//! Genomic Schur functions `U_lambda` and the combinatorics behind them.
//!
//! `U_lambda` is the generating function of genomic tableaux of shape
//! `lambda` by weight. This crate computes it by direct enumeration, by two
//! positive expansions in fundamental quasisymmetric functions
//! (quasiYamanouchi genomic tableaux, gapless increasing tableaux), and by a
//! signed Schur expansion, and checks all of them against each other with
//! exact integer polynomial arithmetic.
//!
//! ```
//! use genomic_schur_core::{u_schur_expansion, Partition};
//!
//! let shape: Partition = "3,3".parse().unwrap();
//! assert_eq!(u_schur_expansion(&shape).to_string(), "s[3,3] + s[2,2,1] + s[1,1,1,1]");
//! ```

pub mod cli;
pub mod combinatorics;
mod error;
pub mod genomic_schur;
pub mod sym_poly;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{
    positive_part, refines, straighten, Partition, SignedPartition, StrongComposition,
    WeakComposition,
};
pub use error::{Error, GeneViolation, Result};
pub use genomic_schur::{
    gessel_schur_fundamental, u_fundamental_inc, u_fundamental_qy, u_poly_direct,
    u_schur_expansion, u_two_row_closed_form,
};
pub use sym_poly::{FundamentalExpansion, SchurExpansion, SparsePolynomial};
pub use verify::{verify, VerificationReport};
