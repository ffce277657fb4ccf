use num_bigint::BigInt;
use num_traits::One;

use crate::abelian::group_structure;
use crate::error::Result;
use crate::foundation::foundation_type::{foundation, universal_pasture, weak_universal_pasture};
use crate::matroid::Matroid;
use crate::pasture::{enumerate_morphisms, Pasture};

/// Number of rescaling classes of weak lifts of `m` over a finite pasture:
/// the number of morphisms out of the foundation.
pub fn count_rescaling_classes(m: &Matroid, p: &Pasture) -> Result<usize> {
    let f = foundation(m);
    Ok(enumerate_morphisms(&f.pasture, p)?.len())
}

/// Number of weak lift classes over a finite pasture with q elements:
/// `(q-1)^(n-c)` times the number of rescaling classes, `c` the number of
/// connected components.
pub fn count_weak_lifts(m: &Matroid, p: &Pasture) -> Result<BigInt> {
    let q = p.size().ok_or_else(|| {
        crate::error::Error::Unsupported("weak lift counting needs a finite pasture".into())
    })?;
    let c = m.num_components();
    let classes = count_rescaling_classes(m, p)?;
    let mut factor = BigInt::one();
    for _ in 0..m.n() - c {
        factor *= &q - 1;
    }
    Ok(factor * BigInt::from(classes))
}

/// Number of strong lift classes over a finite pasture: the number of
/// morphisms out of the universal pasture.
pub fn count_strong_lifts(m: &Matroid, p: &Pasture) -> Result<usize> {
    let u = universal_pasture(m);
    Ok(enumerate_morphisms(&u, p)?.len())
}

/// Rank bookkeeping for the splitting of the weak universal pasture as
/// Laurent monomials over the foundation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaurentSplit {
    /// Free-rank difference between the weak universal pasture's and the
    /// foundation's unit groups.
    pub s: usize,
    /// Whether `s` equals `n - c`.
    pub holds: bool,
}

pub fn laurent_split_check(m: &Matroid) -> LaurentSplit {
    let w = weak_universal_pasture(m);
    let f = foundation(m);
    let rank_w = group_structure(&w.unit_group).free_rank;
    let rank_f = group_structure(&f.pasture.unit_group).free_rank;
    let s = rank_w - rank_f;
    let holds = s == m.n() - m.num_components();
    LaurentSplit { s, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::BuiltinName;

    fn f(name: BuiltinName) -> Pasture {
        Pasture::builtin(name).unwrap()
    }

    #[test]
    fn u24_counts() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(count_rescaling_classes(&u24, &f(BuiltinName::F3)).unwrap(), 1);
        assert_eq!(count_rescaling_classes(&u24, &f(BuiltinName::F2)).unwrap(), 0);
        assert_eq!(count_weak_lifts(&u24, &f(BuiltinName::F3)).unwrap(), BigInt::from(8));
        assert_eq!(count_strong_lifts(&u24, &f(BuiltinName::F3)).unwrap(), 8);
        // Orientability: at least one morphism to the sign hyperfield.
        assert!(count_rescaling_classes(&u24, &f(BuiltinName::S)).unwrap() >= 1);
    }

    #[test]
    fn fano_counts() {
        let fano = Matroid::fano();
        assert_eq!(count_rescaling_classes(&fano, &f(BuiltinName::F3)).unwrap(), 0);
        assert_eq!(count_rescaling_classes(&fano, &f(BuiltinName::S)).unwrap(), 0);
        assert_eq!(count_weak_lifts(&fano, &f(BuiltinName::F2)).unwrap(), BigInt::one());
        assert_eq!(count_strong_lifts(&fano, &f(BuiltinName::F2)).unwrap(), 1);
        assert_eq!(count_strong_lifts(&fano, &f(BuiltinName::F3)).unwrap(), 0);
    }

    #[test]
    fn u12_over_f1pm() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(count_weak_lifts(&u12, &Pasture::f1pm()).unwrap(), BigInt::from(2));
    }

    #[test]
    fn regular_matroids_have_one_class_everywhere() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        for p in [
            Pasture::f1pm(),
            f(BuiltinName::F2),
            f(BuiltinName::F3),
            f(BuiltinName::S),
            f(BuiltinName::K),
            Pasture::gf(4).unwrap(),
        ] {
            assert_eq!(count_rescaling_classes(&u23, &p).unwrap(), 1, "over {p:?}");
        }
    }

    #[test]
    fn laurent_split_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(laurent_split_check(&u24), LaurentSplit { s: 3, holds: true });
        let single = Matroid::single_basis(2).unwrap();
        assert_eq!(laurent_split_check(&single), LaurentSplit { s: 0, holds: true });
        let fano = Matroid::fano();
        assert_eq!(laurent_split_check(&fano), LaurentSplit { s: 6, holds: true });
    }
}
