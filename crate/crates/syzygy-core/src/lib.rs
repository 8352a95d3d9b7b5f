//! Exact homological algebra over finite-dimensional monomial bound quiver
//! algebras kQ/I over finite fields.
//!
//! The layers, bottom to top:
//!
//! * [`linalg`] — dense exact linear algebra over F_{p^e} (RREF, kernels,
//!   canonical solve). Everything above reduces to it.
//! * [`path_algebra`] — quivers, paths, monomial algebras with an explicit
//!   path basis, opposite algebras.
//! * [`rep`] — modules as quiver representations, morphisms, Hom spaces,
//!   socle/radical/top, kernels/cokernels, isomorphism testing, splitting
//!   off projective summands.
//! * [`resolutions`] — minimal projective covers and injective envelopes,
//!   minimal resolutions, syzygies and projective/injective dimension.
//! * [`homological`] — k-duality, Ext, the transpose, torsionfree and
//!   torsionless tests, Gorenstein dimension zero.
//! * [`conditions`] — the degreewise conditions on injective resolutions
//!   (R_n property, G_n(k) and its sampled double-Ext variant, n-Gorenstein,
//!   syzygy-category membership, cogenerator tests, short-exact-sequence
//!   comparison of resolutions) with report types.
//! * [`corpus`] — built-in example algebras with self-validating certified
//!   facts, plus seeded random module / short exact sequence generators.
//!
//! Left modules are the default throughout; a right module is always
//! represented as a left module over the opposite algebra.

pub mod conditions;
pub mod corpus;
pub mod homological;
pub mod linalg;
pub mod path_algebra;
pub mod rep;
pub mod resolutions;

pub use linalg::field::Field;
pub use linalg::mat::Mat;
pub use path_algebra::{MonomialAlgebra, Path, Quiver};
pub use rep::{Rep, RepMap, SimpleMultiset};
