//! Computing with matroids over pastures.
//!
//! A pasture is a multiplicative group with zero and a distinguished element
//! `eps` (playing the role of -1), together with an ideal of formal sums that
//! are declared to vanish. Fields, partial fields and several hyperfields fit
//! this shape, which makes pastures a common home for linear algebra over
//! exotic coefficients.
//!
//! The crate provides:
//!
//! * exact integer matrix normal forms and finitely generated abelian group
//!   computations ([`matrix`], [`abelian`]),
//! * pasture arithmetic, finitely presented pastures and their morphisms
//!   ([`pasture`]),
//! * Grassmann-Pluecker functions, duality, rescaling and brute-force lift
//!   enumeration ([`matroid`]),
//! * Tutte groups, cross ratios, foundations and representability counts
//!   ([`foundation`]),
//! * the point spaces of the moduli of matroids at small scale ([`matspace`]).

pub mod abelian;
pub mod error;
pub mod foundation;
pub mod json;
pub mod matrix;
pub mod matroid;
pub mod matspace;
pub mod pasture;

pub use error::{Error, Result};
