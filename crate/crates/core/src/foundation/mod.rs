//! Cross ratios, Tutte groups, universal pastures and foundations.
//!
//! The weak universal pasture of a matroid is the degree-0 residue of the
//! weak matroid space at the matroid's support, pasteurized; its unit group
//! is the Tutte group. The foundation is the subpasture generated by the
//! universal cross ratios; its unit group is the inner Tutte group (the
//! kernel of the degree map), and morphisms out of it count rescaling
//! classes.

mod counting;
mod foundation_type;
mod omega;
mod tutte;

pub use counting::{
    count_rescaling_classes, count_strong_lifts, count_weak_lifts, laurent_split_check,
    LaurentSplit,
};
pub use foundation_type::{
    classify, classify_foundation, cross_ratio, foundation, inner_tutte_group,
    universal_pasture, weak_universal_pasture, Classification, Foundation,
};
pub use omega::{canonicalize as canonical_quadrangle, omega, orbit as quadrangle_orbit, Quadrangle};
pub use tutte::{tutte_group, TutteGroup};
