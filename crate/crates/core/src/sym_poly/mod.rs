//! Exact sparse polynomials in finitely many variables, fundamental
//! quasisymmetric and Schur polynomial generators, and basis expansions.
//!
//! Identities between symmetric functions are checked at a finite number of
//! variables `n`. Two symmetric functions whose Schur expansions only involve
//! partitions with at most `n` rows agree iff their `n`-variable truncations
//! do, since `s_lambda(x_1..x_n)` for `len(lambda) <= n` are linearly
//! independent.

mod expansion;
mod generators;
mod polynomial;

pub use expansion::{
    fundamental_expansion_to_poly, fundamental_to_schur, schur_expansion_to_poly, BasisIndex,
    Expansion, FundamentalExpansion, SchurExpansion,
};
pub use generators::{
    complete_homogeneous_poly, determinant, fundamental_poly, jacobi_trudi_poly, schur_poly,
};
pub use polynomial::{Coeff, SparsePolynomial};
