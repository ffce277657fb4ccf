use num_bigint::BigInt;
use num_rational::BigRational;

/// A unit of a pasture.
///
/// Most pastures store units as exponent words over the unit-group generator
/// labels (with `eps` at index 0), kept in a canonical normal form modulo the
/// group relations. The tropical pasture stores exact positive rationals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    Word(Vec<BigInt>),
    Trop(BigRational),
}

/// An element of a pasture: zero or a unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PastureElement {
    Zero,
    Unit(Unit),
}

impl PastureElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, PastureElement::Zero)
    }

    pub fn unit(&self) -> Option<&Unit> {
        match self {
            PastureElement::Zero => None,
            PastureElement::Unit(u) => Some(u),
        }
    }
}

/// A formal sum of units with multiset semantics; zero terms are dropped at
/// construction and terms are kept sorted so equality is order-independent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum {
    terms: Vec<Unit>,
}

impl FormalSum {
    pub fn from_elements(elems: impl IntoIterator<Item = PastureElement>) -> Self {
        let mut terms: Vec<Unit> = elems
            .into_iter()
            .filter_map(|e| match e {
                PastureElement::Zero => None,
                PastureElement::Unit(u) => Some(u),
            })
            .collect();
        terms.sort();
        FormalSum { terms }
    }

    pub fn from_units(units: Vec<Unit>) -> Self {
        let mut terms = units;
        terms.sort();
        FormalSum { terms }
    }

    pub fn terms(&self) -> &[Unit] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Remove one occurrence of each term of `other`; `None` if `other` is
    /// not a sub-multiset.
    pub fn checked_sub(&self, other: &FormalSum) -> Option<FormalSum> {
        let mut rest = self.terms.clone();
        for t in &other.terms {
            let pos = rest.iter().position(|x| x == t)?;
            rest.remove(pos);
        }
        Some(FormalSum { terms: rest })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn w(xs: &[i64]) -> Unit {
        Unit::Word(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn multiset_semantics() {
        let a = FormalSum::from_units(vec![w(&[1]), w(&[0])]);
        let b = FormalSum::from_units(vec![w(&[0]), w(&[1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn zeros_dropped() {
        let s = FormalSum::from_elements(vec![
            PastureElement::Zero,
            PastureElement::Unit(w(&[0])),
            PastureElement::Zero,
        ]);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn checked_sub_is_multiset_difference() {
        let s = FormalSum::from_units(vec![w(&[0]), w(&[0]), w(&[1])]);
        let t = FormalSum::from_units(vec![w(&[0]), w(&[1])]);
        let d = s.checked_sub(&t).unwrap();
        assert_eq!(d, FormalSum::from_units(vec![w(&[0])]));
        assert!(d.checked_sub(&t).is_none());
        assert!(BigInt::zero().is_zero());
    }
}
