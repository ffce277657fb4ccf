use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::matroid_type::{check_basis_axiom, Matroid};
use crate::matroid::plucker::{all_instances, three_term_instances, Instance};
use crate::matroid::subsets::{full_mask, shuffle_parity};
use crate::pasture::{FormalSum, Pasture, PastureElement, PastureMorphism, Unit};

/// A Grassmann-Pluecker function: pasture units assigned to r-subsets of
/// `{1..n}` (absent keys are zero). Represents a weak or strong F-matroid up
/// to global scaling once the corresponding check passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpFunction {
    pub pasture: Pasture,
    n: usize,
    r: usize,
    values: BTreeMap<u64, Unit>,
}

impl GpFunction {
    pub fn new(pasture: Pasture, n: usize, r: usize, values: BTreeMap<u64, Unit>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("a Grassmann-Pluecker function is not identically 0".into()));
        }
        let full = full_mask(n);
        for mask in values.keys() {
            if mask & !full != 0 || mask.count_ones() as usize != r {
                return Err(Error::Invalid(format!("key {mask:#b} is not an r-subset")));
            }
        }
        Ok(GpFunction { pasture, n, r, values })
    }

    /// Indicator function of a matroid's bases over the given pasture.
    pub fn indicator(pasture: &Pasture, m: &Matroid) -> GpFunction {
        let values = m.bases().iter().map(|&b| (b, pasture.one())).collect();
        GpFunction { pasture: pasture.clone(), n: m.n(), r: m.r(), values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &BTreeMap<u64, Unit> {
        &self.values
    }

    pub fn value(&self, mask: u64) -> PastureElement {
        match self.values.get(&mask) {
            Some(u) => PastureElement::Unit(u.clone()),
            None => PastureElement::Zero,
        }
    }

    pub fn support(&self) -> Vec<u64> {
        self.values.keys().copied().collect()
    }

    fn term_unit(&self, a: u64, b: u64, parity: u8) -> Option<Unit> {
        let (x, y) = (self.values.get(&a)?, self.values.get(&b)?);
        let mut u = self.pasture.unit_mul(x, y);
        if parity == 1 {
            u = self.pasture.unit_mul(&u, &self.pasture.eps());
        }
        Some(u)
    }

    fn instance_sum(&self, inst: &Instance) -> FormalSum {
        FormalSum::from_units(
            inst.terms
                .iter()
                .filter_map(|t| self.term_unit(t.a, t.b, t.parity))
                .collect(),
        )
    }

    /// True iff every 3-term Pluecker instance is null (support unchecked).
    pub fn three_term_relations_hold(&self) -> Result<bool> {
        let in_support = |m: u64| self.values.contains_key(&m);
        for inst in three_term_instances(self.n, self.r, &in_support, 1) {
            if !self.pasture.is_null(&self.instance_sum(&inst))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Weak Grassmann-Pluecker check: the support is the basis family of a
    /// matroid and all 3-term Pluecker instances are null.
    pub fn check_weak(&self) -> Result<bool> {
        if !check_basis_axiom(self.n, self.r, &self.support()) {
            return Ok(false);
        }
        self.three_term_relations_hold()
    }

    /// Strong Grassmann-Pluecker check: every instance over all (J, I')
    /// pairs is null. Instances where every term vanishes are satisfied.
    pub fn check_strong(&self) -> Result<bool> {
        let in_support = |m: u64| self.values.contains_key(&m);
        for inst in all_instances(self.n, self.r, &in_support, 1) {
            if !self.pasture.is_null(&self.instance_sum(&inst))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The underlying matroid (support), which must satisfy basis exchange.
    pub fn underlying(&self) -> Result<Matroid> {
        Matroid::new(self.n, self.r, self.support())
    }

    /// Values composed with a pasture morphism.
    pub fn pushforward(&self, f: &PastureMorphism) -> Result<GpFunction> {
        if f.source != self.pasture {
            return Err(Error::PastureMismatch);
        }
        let values = self.values.iter().map(|(&m, u)| (m, f.map_unit(u))).collect();
        Ok(GpFunction { pasture: f.target.clone(), n: self.n, r: self.r, values })
    }

    /// Dual function of rank n-r: `D*(I) = eps^{sigma_I} * D(I^c)` where
    /// `sigma_I` is the parity of the permutation sorting `(I, I^c)`.
    pub fn dual(&self) -> GpFunction {
        let full = full_mask(self.n);
        let values = self
            .values
            .iter()
            .map(|(&m, u)| {
                let c = full & !m;
                let parity = shuffle_parity(c, self.n);
                let mut v = u.clone();
                if parity == 1 {
                    v = self.pasture.unit_mul(&v, &self.pasture.eps());
                }
                (c, v)
            })
            .collect();
        GpFunction { pasture: self.pasture.clone(), n: self.n, r: self.n - self.r, values }
    }

    /// Torus action: multiply each value by `prod_{i in I} t(i)`.
    pub fn rescale(&self, t: &[Unit]) -> GpFunction {
        assert_eq!(t.len(), self.n, "one scaling unit per ground element");
        let values = self
            .values
            .iter()
            .map(|(&m, u)| {
                let mut v = u.clone();
                for (i, ti) in t.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        v = self.pasture.unit_mul(&v, ti);
                    }
                }
                (m, v)
            })
            .collect();
        GpFunction { pasture: self.pasture.clone(), n: self.n, r: self.r, values }
    }

    /// True iff the supports agree and the two functions differ by a single
    /// global unit. Shape or pasture mismatches yield false.
    pub fn projectively_equivalent(&self, other: &GpFunction) -> bool {
        if self.pasture != other.pasture
            || self.n != other.n
            || self.r != other.r
            || self.support() != other.support()
        {
            return false;
        }
        let first = *self.values.keys().next().unwrap();
        let ratio = self
            .pasture
            .unit_mul(&self.values[&first], &self.pasture.unit_inv(&other.values[&first]));
        self.values.iter().all(|(m, u)| {
            self.pasture.unit_mul(&other.values[m], &ratio) == *u
        })
    }

    /// The scaled function `a * D`.
    pub fn scale(&self, a: &Unit) -> GpFunction {
        let values =
            self.values.iter().map(|(&m, u)| (m, self.pasture.unit_mul(u, a))).collect();
        GpFunction { pasture: self.pasture.clone(), n: self.n, r: self.r, values }
    }
}

#[cfg(test)]
pub(crate) fn gp_from_strs(
    pasture: &Pasture,
    n: usize,
    r: usize,
    entries: &[(&[usize], &str)],
) -> GpFunction {
    use crate::matroid::subsets::mask_of;
    let mut values = BTreeMap::new();
    for (elems, s) in entries {
        values.insert(mask_of(elems), crate::pasture::parse_unit(pasture, s).unwrap());
    }
    GpFunction::new(pasture.clone(), n, r, values).unwrap()
}

/// The running F3 example on U(2,4).
#[cfg(test)]
pub(crate) fn f3_example() -> GpFunction {
    let f3 = Pasture::builtin(crate::pasture::BuiltinName::F3).unwrap();
    gp_from_strs(
        &f3,
        4,
        2,
        &[
            (&[1, 2], "1"),
            (&[1, 3], "1"),
            (&[1, 4], "1"),
            (&[2, 3], "1"),
            (&[2, 4], "2"),
            (&[3, 4], "1"),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::subsets::mask_of;
    use crate::pasture::parse_unit;

    #[test]
    fn u24_indicator_over_k_is_weak_and_strong() {
        let k = Pasture::krasner();
        let u24 = Matroid::uniform(2, 4).unwrap();
        let g = GpFunction::indicator(&k, &u24);
        assert!(g.check_weak().unwrap());
        assert!(g.check_strong().unwrap());
    }

    #[test]
    fn disjoint_support_passes_three_term_but_fails_both_checks() {
        let k = Pasture::krasner();
        let g = gp_from_strs(&k, 6, 3, &[(&[1, 2, 3], "1"), (&[4, 5, 6], "1")]);
        assert!(g.three_term_relations_hold().unwrap());
        assert!(!g.check_weak().unwrap());
        assert!(!g.check_strong().unwrap());
        assert!(g.underlying().is_err());
    }

    #[test]
    fn f3_example_is_weak_and_strong() {
        let g = f3_example();
        assert!(g.check_weak().unwrap());
        assert!(g.check_strong().unwrap());
        assert_eq!(g.underlying().unwrap(), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn pushforward_to_krasner_gives_indicator() {
        let g = f3_example();
        let t = PastureMorphism::terminal(&g.pasture).unwrap();
        let pushed = g.pushforward(&t).unwrap();
        let k = Pasture::krasner();
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(pushed, GpFunction::indicator(&k, &u24));
    }

    #[test]
    fn dual_rank1_signs() {
        let f1 = Pasture::f1pm();
        let g = gp_from_strs(&f1, 2, 1, &[(&[1], "1"), (&[2], "1")]);
        let d = g.dual();
        assert_eq!(d.value(mask_of(&[1])), PastureElement::Unit(f1.one()));
        assert_eq!(d.value(mask_of(&[2])), PastureElement::Unit(f1.eps()));
    }

    #[test]
    fn dual_involution_up_to_scaling() {
        let g = f3_example();
        let dd = g.dual().dual();
        assert!(dd.projectively_equivalent(&g));
        assert!(!g.dual().projectively_equivalent(&g) || g.r() == g.n() - g.r());
        // Underlying of the dual is the dual matroid.
        assert_eq!(
            g.dual().underlying().unwrap(),
            g.underlying().unwrap().dual()
        );
    }

    #[test]
    fn rescale_preserves_strong() {
        let g = f3_example();
        let f3 = g.pasture.clone();
        let two = parse_unit(&f3, "2").unwrap();
        let t = vec![two, f3.one(), f3.one(), f3.one()];
        let h = g.rescale(&t);
        assert!(h.check_strong().unwrap());
        // Constant rescaling is projectively trivial.
        let eps4 = vec![f3.eps(), f3.eps(), f3.eps(), f3.eps()];
        assert!(g.rescale(&eps4).projectively_equivalent(&g));
        // Identity-valued rescaling is the identity.
        let ones = vec![f3.one(); 4];
        assert_eq!(g.rescale(&ones), g);
    }

    #[test]
    fn projective_equivalence_examples() {
        let g = f3_example();
        let two = parse_unit(&g.pasture, "2").unwrap();
        assert!(g.scale(&two).projectively_equivalent(&g));
        // The two U(1,2) lifts over F1pm are inequivalent.
        let f1 = Pasture::f1pm();
        let a = gp_from_strs(&f1, 2, 1, &[(&[1], "1"), (&[2], "1")]);
        let b = gp_from_strs(&f1, 2, 1, &[(&[1], "1"), (&[2], "-1")]);
        assert!(!a.projectively_equivalent(&b));
        // Shape mismatch.
        let u = gp_from_strs(&f1, 3, 1, &[(&[1], "1")]);
        assert!(!a.projectively_equivalent(&u));
    }

}
