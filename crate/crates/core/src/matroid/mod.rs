//! Matroids as basis families and Grassmann-Pluecker functions over a
//! pasture: weak and strong axiom checks, duality, pushforward, rescaling
//! and brute-force lift enumeration.

mod gp;
mod lifts;
mod matroid_type;
pub mod plucker;
pub mod subsets;

pub use gp::GpFunction;
pub use lifts::{enumerate_lifts, rescaling_orbits, LiftMode};
pub use matroid_type::{check_basis_axiom, Matroid};

#[cfg(test)]
pub(crate) use gp::f3_example;
