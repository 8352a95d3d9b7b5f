//! Dense exact linear algebra over finite fields F_{p^e}.
//!
//! Outputs are canonical: RREF is the unique reduced row echelon form, kernel
//! bases assign unit vectors to free columns, and `solve` returns the solution
//! with all free variables set to zero. Empty (0 x n and n x 0) matrices are
//! legal everywhere; callers never special-case them.

pub mod field;
pub mod mat;
