//! Pasture arithmetic.
//!
//! A pasture is a multiplicative abelian group with zero and a distinguished
//! unit `eps` (the weak inverse of 1, satisfying `eps^2 = 1`), together with
//! a set of formal sums of units declared null. The null set contains 0 and
//! `1 + eps`, is closed under multiplication by units, and is an ideal in the
//! group semiring.
//!
//! Builtin pastures cover the regular partial field `F1pm`, the Krasner
//! hyperfield `K`, the sign hyperfield `S`, the finite fields `GF(q)` for
//! prime powers `q <= 32` (with `F2`, `F3` as the small cases), and the
//! tropical hyperfield `T` with exact positive rational units. Finitely
//! presented pastures carry an explicit unit group presentation plus a list
//! of formal null-sum generators.

mod builtin;
mod element;
mod grammar;
mod morphism;
mod presented;

pub use builtin::GfTable;
pub use element::{FormalSum, PastureElement, Unit};
pub use grammar::{format_element, format_unit, parse_element, parse_pasture_name, parse_unit, pasture_name};
pub use morphism::{check_morphism, enumerate_morphisms, PastureMorphism};
pub use presented::PresentedPasture;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abelian::{group_structure, AbelianPresentation, FiniteAbelianGroup};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_rational::BigRational;

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Repr {
    F1pm,
    Krasner,
    Sign,
    Gf(GfTable),
    Tropical,
    Presented(PresentedPasture),
}

/// A pasture; cheap to clone. Equality is presentation-level.
#[derive(Clone, Debug)]
pub struct Pasture(pub(crate) Arc<Repr>);

impl PartialEq for Pasture {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Pasture {}

/// Builtin pasture names accepted by [`Pasture::builtin`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinName {
    F1pm,
    K,
    S,
    F2,
    F3,
    Gf(u64),
    T,
}

impl Pasture {
    pub fn builtin(name: BuiltinName) -> Result<Pasture> {
        let repr = match name {
            BuiltinName::F1pm => Repr::F1pm,
            BuiltinName::K => Repr::Krasner,
            BuiltinName::S => Repr::Sign,
            BuiltinName::F2 => Repr::Gf(GfTable::new(2)?),
            BuiltinName::F3 => Repr::Gf(GfTable::new(3)?),
            BuiltinName::Gf(q) => Repr::Gf(GfTable::new(q)?),
            BuiltinName::T => Repr::Tropical,
        };
        Ok(Pasture(Arc::new(repr)))
    }

    pub fn f1pm() -> Pasture {
        Pasture::builtin(BuiltinName::F1pm).unwrap()
    }

    pub fn krasner() -> Pasture {
        Pasture::builtin(BuiltinName::K).unwrap()
    }

    pub fn sign() -> Pasture {
        Pasture::builtin(BuiltinName::S).unwrap()
    }

    pub fn gf(q: u64) -> Result<Pasture> {
        Pasture::builtin(BuiltinName::Gf(q))
    }

    pub fn tropical() -> Pasture {
        Pasture::builtin(BuiltinName::T).unwrap()
    }

    pub fn presented(p: PresentedPasture) -> Pasture {
        Pasture(Arc::new(Repr::Presented(p)))
    }

    pub fn as_presented(&self) -> Option<&PresentedPasture> {
        match &*self.0 {
            Repr::Presented(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_collapsed(&self) -> bool {
        self.as_presented().is_some_and(|p| p.collapsed)
    }

    /// Number of unit-group generators in the word representation.
    /// Tropical units are rationals, not words; this returns `None` for `T`.
    pub fn word_len(&self) -> Option<usize> {
        match &*self.0 {
            Repr::F1pm | Repr::Krasner | Repr::Sign => Some(1),
            Repr::Gf(_) => Some(2),
            Repr::Tropical => None,
            Repr::Presented(p) => Some(p.unit_group.num_generators()),
        }
    }

    pub(crate) fn unit_group_relations(&self) -> IntMatrix {
        match &*self.0 {
            Repr::F1pm | Repr::Sign => IntMatrix::from_rows(&[vec![2]]),
            Repr::Krasner => IntMatrix::from_rows(&[vec![1]]),
            Repr::Gf(t) => t.unit_relations(),
            Repr::Tropical => IntMatrix::zero(0, 0),
            Repr::Presented(p) => p.unit_group.relations.clone(),
        }
    }

    /// The unit group as an abelian presentation with `eps` as generator 0.
    pub fn unit_group(&self) -> AbelianPresentation {
        let labels: Vec<String> = match &*self.0 {
            Repr::F1pm | Repr::Krasner | Repr::Sign => vec!["eps".into()],
            Repr::Gf(_) => vec!["eps".into(), "g".into()],
            Repr::Tropical => vec![],
            Repr::Presented(p) => p.unit_group.generator_labels.clone(),
        };
        AbelianPresentation::new(labels, self.unit_group_relations())
    }

    pub fn canonicalize(&self, word: Vec<BigInt>) -> Result<Unit> {
        match &*self.0 {
            Repr::F1pm | Repr::Sign => Ok(Unit::Word(vec![mod2(&word[0])])),
            Repr::Krasner => Ok(Unit::Word(vec![BigInt::zero()])),
            Repr::Gf(t) => Ok(Unit::Word(t.canonical(&word))),
            Repr::Tropical => Err(Error::Unsupported("word units in the tropical pasture".into())),
            Repr::Presented(p) => p.canonicalize(word),
        }
    }

    pub fn one(&self) -> Unit {
        match &*self.0 {
            Repr::Tropical => Unit::Trop(BigRational::one()),
            _ => {
                let n = self.word_len().unwrap();
                self.canonicalize(vec![BigInt::zero(); n]).unwrap()
            }
        }
    }

    pub fn eps(&self) -> Unit {
        match &*self.0 {
            Repr::Tropical => Unit::Trop(BigRational::one()),
            _ => {
                let n = self.word_len().unwrap();
                let mut w = vec![BigInt::zero(); n];
                w[0] = BigInt::one();
                self.canonicalize(w).unwrap()
            }
        }
    }

    pub fn eps_is_one(&self) -> bool {
        self.eps() == self.one()
    }

    pub fn unit_mul(&self, a: &Unit, b: &Unit) -> Unit {
        match (a, b) {
            (Unit::Word(x), Unit::Word(y)) => {
                assert_eq!(x.len(), y.len(), "unit word length mismatch");
                let w = x.iter().zip(y).map(|(p, q)| p + q).collect();
                self.canonicalize(w).unwrap()
            }
            (Unit::Trop(x), Unit::Trop(y)) => Unit::Trop(x * y),
            _ => panic!("mixed unit representations"),
        }
    }

    pub fn unit_inv(&self, a: &Unit) -> Unit {
        match a {
            Unit::Word(x) => self.canonicalize(x.iter().map(|p| -p).collect()).unwrap(),
            Unit::Trop(x) => Unit::Trop(x.recip()),
        }
    }

    pub fn unit_pow(&self, a: &Unit, e: &BigInt) -> Unit {
        match a {
            Unit::Word(x) => self.canonicalize(x.iter().map(|p| p * e).collect()).unwrap(),
            Unit::Trop(x) => {
                let mut acc = BigRational::one();
                let mut base = if e.is_negative() { x.recip() } else { x.clone() };
                let mut k = e.abs().to_biguint().unwrap();
                let two = num_bigint::BigUint::from(2u32);
                while !k.is_zero() {
                    if (&k % &two) == num_bigint::BigUint::from(1u32) {
                        acc *= &base;
                    }
                    base = &base * &base;
                    k /= &two;
                }
                Unit::Trop(acc)
            }
        }
    }

    pub fn eps_pow(&self, k: i64) -> Unit {
        if k.rem_euclid(2) == 0 {
            self.one()
        } else {
            self.eps()
        }
    }

    /// Decide whether a formal sum is null.
    ///
    /// Total for builtins. For presented pastures the decision is a bounded
    /// ideal-membership test: sums longer than the recorded bound raise
    /// [`Error::UndecidedAtBound`], never a silent `false`.
    pub fn is_null(&self, s: &FormalSum) -> Result<bool> {
        match &*self.0 {
            Repr::F1pm => {
                let ones = s.terms().iter().filter(|u| *u == &self.one()).count();
                Ok(ones * 2 == s.len())
            }
            Repr::Krasner => Ok(s.len() != 1),
            Repr::Sign => {
                if s.is_empty() {
                    return Ok(true);
                }
                let pos = s.terms().iter().any(|u| u == &self.one());
                let neg = s.terms().iter().any(|u| u == &self.eps());
                Ok(pos && neg)
            }
            Repr::Gf(t) => {
                let mut acc = vec![0u64; t.deg()];
                for u in s.terms() {
                    let Unit::Word(w) = u else { panic!("mixed unit representations") };
                    t.accumulate(&mut acc, w);
                }
                Ok(acc.iter().all(|&c| c == 0))
            }
            Repr::Tropical => {
                if s.is_empty() {
                    return Ok(true);
                }
                let vals: Vec<&BigRational> = s
                    .terms()
                    .iter()
                    .map(|u| match u {
                        Unit::Trop(x) => x,
                        _ => panic!("mixed unit representations"),
                    })
                    .collect();
                let max = vals.iter().max().unwrap();
                Ok(vals.iter().filter(|v| *v == max).count() >= 2)
            }
            Repr::Presented(p) => p.is_null(s),
        }
    }

    /// Number of elements including zero, when finite.
    pub fn size(&self) -> Option<BigInt> {
        match &*self.0 {
            Repr::F1pm | Repr::Sign => Some(BigInt::from(3)),
            Repr::Krasner => Some(BigInt::from(2)),
            Repr::Gf(t) => Some(BigInt::from(t.q())),
            Repr::Tropical => None,
            Repr::Presented(p) => {
                if p.collapsed {
                    return Some(BigInt::one());
                }
                let gs = group_structure(&p.unit_group);
                gs.order().map(|o| o + 1)
            }
        }
    }

    /// The unit group of a finite pasture in invariant-factor coordinates,
    /// with the unit list indexed by mixed-radix coordinates.
    pub fn finite_units(&self) -> Result<FiniteUnits> {
        if self.is_collapsed() {
            return Err(Error::CollapsedPasture);
        }
        let pres = self.unit_group();
        if matches!(&*self.0, Repr::Tropical) {
            return Err(Error::Unsupported("the tropical pasture is infinite".into()));
        }
        let gs = group_structure(&pres);
        if gs.free_rank > 0 {
            return Err(Error::Unsupported("infinite unit group".into()));
        }
        let factors: Vec<i64> = gs
            .torsion_factors
            .iter()
            .map(|d| {
                use num_traits::ToPrimitive;
                d.to_i64().ok_or(Error::ResourceCap { needed: u128::MAX, cap: i64::MAX as u128 })
            })
            .collect::<Result<_>>()?;
        let group = FiniteAbelianGroup::new(factors);
        let n = pres.num_generators();
        let mut elems = Vec::new();
        let mut index = std::collections::BTreeMap::new();
        for coords in group.all_elements() {
            let mut word = vec![BigInt::zero(); n];
            for (j, &c) in coords.iter().enumerate() {
                for (i, w) in word.iter_mut().enumerate() {
                    *w += gs.sections.get(j, i) * BigInt::from(c);
                }
            }
            let unit = self.canonicalize(word)?;
            index.insert(unit.clone(), coords.clone());
            elems.push(unit);
        }
        let eps_coords = index
            .get(&self.eps())
            .cloned()
            .expect("eps must be one of the enumerated units");
        Ok(FiniteUnits { group, elems, index, eps_coords })
    }
}

/// The unit group of a finite pasture together with the unit realizing each
/// coordinate tuple.
#[derive(Clone, Debug)]
pub struct FiniteUnits {
    pub group: FiniteAbelianGroup,
    /// Units indexed by mixed-radix coordinate order.
    pub elems: Vec<Unit>,
    index: std::collections::BTreeMap<Unit, Vec<i64>>,
    pub eps_coords: Vec<i64>,
}

impl FiniteUnits {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn coords_of(&self, u: &Unit) -> Option<&Vec<i64>> {
        self.index.get(u)
    }

    pub fn unit_at(&self, coords: &[i64]) -> &Unit {
        let mut idx = 0usize;
        for (j, &f) in self.group.factors.iter().enumerate() {
            idx = idx * f as usize + coords[j].rem_euclid(f) as usize;
        }
        &self.elems[idx]
    }
}

pub(crate) fn mod2(x: &BigInt) -> BigInt {
    use num_integer::Integer;
    x.mod_floor(&BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_axioms() {
        for name in [
            BuiltinName::F1pm,
            BuiltinName::K,
            BuiltinName::S,
            BuiltinName::F2,
            BuiltinName::F3,
            BuiltinName::Gf(4),
            BuiltinName::Gf(9),
        ] {
            let p = Pasture::builtin(name).unwrap();
            // T1: empty sum is null, a bare 1 is not.
            assert!(p.is_null(&FormalSum::from_units(vec![])).unwrap());
            assert!(!p.is_null(&FormalSum::from_units(vec![p.one()])).unwrap());
            // T3 + pasteurization: 1 + eps is null and eps is the unique such unit.
            let units = p.finite_units().unwrap();
            let mut weak_inverses = vec![];
            for u in &units.elems {
                let s = FormalSum::from_units(vec![p.one(), u.clone()]);
                if p.is_null(&s).unwrap() {
                    weak_inverses.push(u.clone());
                }
            }
            assert_eq!(weak_inverses, vec![p.eps()], "unique weak inverse in {:?}", name);
            // T2: the null set is closed under multiplication by units.
            let eps = p.eps();
            let null = FormalSum::from_units(vec![p.one(), eps.clone()]);
            for u in &units.elems {
                let scaled =
                    FormalSum::from_units(null.terms().iter().map(|t| p.unit_mul(t, u)).collect());
                assert!(p.is_null(&scaled).unwrap());
            }
        }
    }

    #[test]
    fn krasner_rule() {
        let k = Pasture::krasner();
        let one = k.one();
        assert!(k.is_null(&FormalSum::from_units(vec![one.clone(), one.clone()])).unwrap());
        assert!(!k.is_null(&FormalSum::from_units(vec![one.clone()])).unwrap());
        assert!(k
            .is_null(&FormalSum::from_units(vec![one.clone(), one.clone(), one.clone()]))
            .unwrap());
    }

    #[test]
    fn sign_rule() {
        let s = Pasture::sign();
        let one = s.one();
        let eps = s.eps();
        assert!(s
            .is_null(&FormalSum::from_units(vec![one.clone(), eps.clone(), eps.clone()]))
            .unwrap());
        assert!(!s.is_null(&FormalSum::from_units(vec![one.clone(), one.clone()])).unwrap());
    }

    #[test]
    fn tropical_rule() {
        let t = Pasture::tropical();
        let r = |n: i64, d: i64| Unit::Trop(BigRational::new(BigInt::from(n), BigInt::from(d)));
        assert!(t.is_null(&FormalSum::from_units(vec![r(3, 1), r(3, 1), r(2, 1)])).unwrap());
        assert!(!t.is_null(&FormalSum::from_units(vec![r(3, 1), r(2, 1), r(1, 1)])).unwrap());
        assert!(t.eps_is_one());
    }

    #[test]
    fn f3_field_arithmetic() {
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        let two = f3.eps();
        // 1 + 2 = 0 in F3.
        assert!(f3.is_null(&FormalSum::from_units(vec![f3.one(), two.clone()])).unwrap());
        assert!(f3
            .is_null(&FormalSum::from_units(vec![f3.one(), f3.one(), f3.one()]))
            .unwrap());
        assert!(!f3.eps_is_one());
    }

    #[test]
    fn f2_has_eps_equal_one() {
        let f2 = Pasture::builtin(BuiltinName::F2).unwrap();
        assert!(f2.eps_is_one());
        assert!(f2.is_null(&FormalSum::from_units(vec![f2.one(), f2.one()])).unwrap());
        assert!(!f2
            .is_null(&FormalSum::from_units(vec![f2.one(), f2.one(), f2.one()]))
            .unwrap());
    }

    #[test]
    fn gf4_units_cycle() {
        let gf4 = Pasture::gf(4).unwrap();
        let units = gf4.finite_units().unwrap();
        assert_eq!(units.len(), 3);
        assert!(gf4.eps_is_one());
        // x + x = 0 in characteristic 2.
        let g = units.elems.iter().find(|u| **u != gf4.one()).unwrap().clone();
        assert!(gf4.is_null(&FormalSum::from_units(vec![g.clone(), g.clone()])).unwrap());
    }

    #[test]
    fn gf_rejects_bad_q() {
        assert!(Pasture::gf(6).is_err());
        assert!(Pasture::gf(33).is_err());
        assert!(Pasture::gf(1).is_err());
        assert!(Pasture::gf(64).is_err());
    }
}
