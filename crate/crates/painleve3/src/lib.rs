//! Exact and numerical toolkit for the Painlevé III equations PIII(D6) and PIII(D7).
//!
//! The crate has two layers. The exact layer ([`exact`]) is a small computer
//! algebra kernel over the Gaussian rationals: multivariate polynomials,
//! rational functions, formal derivations and linear solving over the
//! rational-function field. Everything symbolic in the crate is built on it,
//! with no floating point anywhere in an exact computation.
//!
//! On top of the kernel:
//!
//! - [`laxops`] builds the matrix differential operators `z d/dz + A` on the
//!   moduli charts of both families, re-derives the isomonodromy systems by
//!   solving the commutation equations, reduces them to the second-order
//!   PIII(D6)/PIII(D7) equations, and solves gauge-equivalence equations.
//! - [`backlund`] implements the Bäcklund transformation groups: affine
//!   actions on parameter triples, exact rational maps on chart states with
//!   critical-locus cases, verification of every map by derivation transport
//!   and gauge transport, and group-relation checks.
//! - [`monodromy`] covers monodromy data, the affine cubic monodromy surfaces
//!   of both families, closed-form singular loci, exact embedding identities,
//!   automorphism actions and reducible-data classification.
//! - [`special`] holds the special solutions: the D7 algebraic family,
//!   constant solutions, reducible-family presence tables, Riccati reductions
//!   and Frobenius/Bessel series.
//! - [`numflow`] integrates the first-order isomonodromy systems along
//!   complex paths with pole continuation and evaluates residuals against the
//!   second-order equations.
//! - [`cli`] is the command-line surface used by the `p3` binary.
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod backlund;
pub mod cli;
pub mod exact;
pub mod laxops;
pub mod monodromy;
pub mod numflow;
pub mod special;

pub use exact::{GaussRat, MultiPoly, RatFun, Ring};
