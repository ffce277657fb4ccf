use num_bigint::BigInt;

use crate::abelian::enumerate_homs;
use crate::error::{Error, Result};
use crate::pasture::element::{FormalSum, PastureElement, Unit};
use crate::pasture::{Pasture, PresentedPasture, Repr};

/// A multiplicative map between pastures, given by the images of the source
/// unit-group generators (with `eps` at index 0). `0` maps to `0` implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PastureMorphism {
    pub source: Pasture,
    pub target: Pasture,
    pub generator_images: Vec<Unit>,
}

impl PastureMorphism {
    pub fn new(source: Pasture, target: Pasture, generator_images: Vec<Unit>) -> Result<Self> {
        let Some(n) = source.word_len() else {
            return Err(Error::Unsupported("morphisms out of the tropical pasture".into()));
        };
        if generator_images.len() != n {
            return Err(Error::Invalid(format!(
                "expected {n} generator images, got {}",
                generator_images.len()
            )));
        }
        Ok(PastureMorphism { source, target, generator_images })
    }

    pub fn identity(p: &Pasture) -> Result<Self> {
        let Some(n) = p.word_len() else {
            return Err(Error::Unsupported("morphisms out of the tropical pasture".into()));
        };
        let images = (0..n)
            .map(|i| {
                let mut w = vec![BigInt::from(0); n];
                w[i] = BigInt::from(1);
                p.canonicalize(w)
            })
            .collect::<Result<_>>()?;
        PastureMorphism::new(p.clone(), p.clone(), images)
    }

    /// The unique morphism to the Krasner hyperfield (all units map to 1).
    pub fn terminal(p: &Pasture) -> Result<Self> {
        let k = Pasture::krasner();
        let Some(n) = p.word_len() else {
            return Err(Error::Unsupported("morphisms out of the tropical pasture".into()));
        };
        let images = vec![k.one(); n];
        PastureMorphism::new(p.clone(), k, images)
    }

    pub fn map_unit(&self, u: &Unit) -> Unit {
        let Unit::Word(w) = u else { panic!("word units expected in morphism source") };
        let mut acc = self.target.one();
        for (img, e) in self.generator_images.iter().zip(w) {
            acc = self.target.unit_mul(&acc, &self.target.unit_pow(img, e));
        }
        acc
    }

    pub fn map_element(&self, e: &PastureElement) -> PastureElement {
        match e {
            PastureElement::Zero => PastureElement::Zero,
            PastureElement::Unit(u) => PastureElement::Unit(self.map_unit(u)),
        }
    }

    pub fn map_sum(&self, s: &FormalSum) -> FormalSum {
        FormalSum::from_units(s.terms().iter().map(|u| self.map_unit(u)).collect())
    }

    /// Composition `g . f` (apply `f` first).
    pub fn compose(g: &PastureMorphism, f: &PastureMorphism) -> Result<PastureMorphism> {
        if f.target != g.source {
            return Err(Error::PastureMismatch);
        }
        let images = f.generator_images.iter().map(|u| g.map_unit(u)).collect();
        PastureMorphism::new(f.source.clone(), g.target.clone(), images)
    }
}

/// True iff the map respects the unit-group relations, sends `eps` to `eps`,
/// and maps every source null sum to a null sum in the target.
pub fn check_morphism(m: &PastureMorphism) -> Result<bool> {
    // eps maps to eps.
    if m.map_unit(&m.source.eps()) != m.target.eps() {
        return Ok(false);
    }
    // Group relations are respected.
    let rels = m.source.unit_group_relations();
    for i in 0..rels.rows() {
        let w = rels.row_vec(i);
        if m.map_unit(&Unit::Word(w)) != m.target.one() {
            return Ok(false);
        }
    }
    // Null generators map to null sums.
    for gen in null_generating_sums(&m.source)? {
        if !m.target.is_null(&m.map_sum(&gen))? {
            return Ok(false);
        }
    }
    // The sign pasture's null set is not generated in bounded length: its
    // null sums are exactly the mixed-sign ones, so k ones plus l
    // eps-images must be null for all k, l >= 1.
    if matches!(&*m.source.0, Repr::Sign) {
        let one = m.map_unit(&m.source.one());
        let eps = m.map_unit(&m.source.eps());
        return all_mixed_sums_null(&m.target, &one, &eps);
    }
    Ok(true)
}

/// Finite generating families for the null sets of sources we support.
fn null_generating_sums(p: &Pasture) -> Result<Vec<FormalSum>> {
    Ok(match &*p.0 {
        Repr::F1pm => vec![],
        Repr::Krasner => {
            let one = p.one();
            vec![
                FormalSum::from_units(vec![one.clone(), one.clone()]),
                FormalSum::from_units(vec![one.clone(), one.clone(), one]),
            ]
        }
        // Handled separately (not finitely generated); eps mapping and group
        // relations are still checked above.
        Repr::Sign => vec![],
        Repr::Gf(_) => {
            // Vanishing sums of a field decompose into vanishing sums of
            // length <= 3, so those generate the null ideal.
            let units = p.finite_units()?;
            let mut gens = Vec::new();
            let n = units.len();
            for i in 0..n {
                for j in i..n {
                    let s = FormalSum::from_units(vec![
                        units.elems[i].clone(),
                        units.elems[j].clone(),
                    ]);
                    if p.is_null(&s)? {
                        gens.push(s);
                    }
                    for k in j..n {
                        let s = FormalSum::from_units(vec![
                            units.elems[i].clone(),
                            units.elems[j].clone(),
                            units.elems[k].clone(),
                        ]);
                        if p.is_null(&s)? {
                            gens.push(s);
                        }
                    }
                }
            }
            gens
        }
        Repr::Tropical => {
            return Err(Error::Unsupported("morphisms out of the tropical pasture".into()))
        }
        Repr::Presented(pp) => {
            if pp.collapsed {
                return Err(Error::CollapsedPasture);
            }
            pp.null_generators.clone()
        }
    })
}

/// Decide whether `k*a + l*b` is null in `p` for all `k, l >= 1`.
fn all_mixed_sums_null(p: &Pasture, a: &Unit, b: &Unit) -> Result<bool> {
    match &*p.0 {
        Repr::Krasner => Ok(true),
        Repr::Sign => {
            // Mixed sums are null iff {a, b} = {1, eps} with eps != 1.
            Ok((a == &p.one() && b == &p.eps()) || (a == &p.eps() && b == &p.one()))
        }
        Repr::Tropical => {
            // Max attained twice for all k, l forces a = b.
            Ok(a == b)
        }
        Repr::F1pm | Repr::Gf(_) => {
            // Finite additive order: k = 2, l = 1 already fails whenever
            // a + b is null (and k = l = 1 fails otherwise).
            let s1 = FormalSum::from_units(vec![a.clone(), b.clone()]);
            let s2 = FormalSum::from_units(vec![a.clone(), a.clone(), b.clone()]);
            Ok(p.is_null(&s1)? && p.is_null(&s2)?)
        }
        Repr::Presented(pp) => {
            // Would require unbounded queries; check up to the bound and
            // refuse to guess beyond it.
            let bound = pp.null_bound();
            for total in 2..=bound {
                for k in 1..total {
                    let l = total - k;
                    let mut terms = vec![a.clone(); k];
                    terms.extend(std::iter::repeat(b.clone()).take(l));
                    if !p.is_null(&FormalSum::from_units(terms))? {
                        return Ok(false);
                    }
                }
            }
            Err(Error::UndecidedAtBound { len: bound + 1, bound })
        }
    }
}

/// All morphisms from a presented pasture into a finite pasture, built by
/// abelian hom enumeration with `eps` pinned, filtered by null-generator
/// preservation. Deterministic order; a collapsed source yields no morphisms.
pub fn enumerate_morphisms(src: &PresentedPasture, tgt: &Pasture) -> Result<Vec<PastureMorphism>> {
    if src.collapsed {
        return Ok(vec![]);
    }
    let source = Pasture::presented(src.clone());
    let units = tgt.finite_units()?;
    let pins = [(0usize, units.eps_coords.clone())];
    let homs = enumerate_homs(&src.unit_group, &units.group, &pins);
    let mut out = Vec::new();
    'homs: for hom in homs {
        let images: Vec<Unit> = hom.iter().map(|c| units.unit_at(c).clone()).collect();
        let m = PastureMorphism::new(source.clone(), tgt.clone(), images)?;
        for gen in &src.null_generators {
            if !tgt.is_null(&m.map_sum(gen))? {
                continue 'homs;
            }
        }
        out.push(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::BuiltinName;

    #[test]
    fn identity_on_f3_checks() {
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        let id = PastureMorphism::identity(&f3).unwrap();
        assert!(check_morphism(&id).unwrap());
    }

    #[test]
    fn f1pm_maps_everywhere() {
        let f1 = Pasture::f1pm();
        for tgt in [
            Pasture::f1pm(),
            Pasture::krasner(),
            Pasture::sign(),
            Pasture::builtin(BuiltinName::F2).unwrap(),
            Pasture::builtin(BuiltinName::F3).unwrap(),
            Pasture::gf(8).unwrap(),
        ] {
            let m = PastureMorphism::new(f1.clone(), tgt.clone(), vec![tgt.eps()]).unwrap();
            assert!(check_morphism(&m).unwrap(), "F1pm -> {:?}", tgt);
        }
    }

    #[test]
    fn hom_from_f1pm_is_unique() {
        let src = PresentedPasture::f1pm().pasteurize();
        for tgt in [
            Pasture::f1pm(),
            Pasture::krasner(),
            Pasture::sign(),
            Pasture::builtin(BuiltinName::F2).unwrap(),
            Pasture::builtin(BuiltinName::F3).unwrap(),
            Pasture::gf(4).unwrap(),
            Pasture::gf(25).unwrap(),
        ] {
            let homs = enumerate_morphisms(&src, &tgt).unwrap();
            assert_eq!(homs.len(), 1, "Hom(F1pm, {:?})", tgt);
            assert!(check_morphism(&homs[0]).unwrap());
        }
    }

    #[test]
    fn terminal_map_from_f3() {
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        let t = PastureMorphism::terminal(&f3).unwrap();
        assert!(check_morphism(&t).unwrap());
    }

    #[test]
    fn sign_to_field_fails() {
        let s = Pasture::sign();
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        let m = PastureMorphism::new(s, f3.clone(), vec![f3.eps()]).unwrap();
        assert!(!check_morphism(&m).unwrap());
    }

    #[test]
    fn sign_to_sign_is_fine() {
        let s = Pasture::sign();
        let m = PastureMorphism::identity(&s).unwrap();
        assert!(check_morphism(&m).unwrap());
    }

    #[test]
    fn krasner_to_f2_fails() {
        // 1+1+1 is null in K but not in F2.
        let k = Pasture::krasner();
        let f2 = Pasture::builtin(BuiltinName::F2).unwrap();
        let m = PastureMorphism::new(k, f2.clone(), vec![f2.eps()]).unwrap();
        assert!(!check_morphism(&m).unwrap());
    }

    #[test]
    fn roundtrip_enumerated_morphisms() {
        // Hom(Z/2<eps> with generator 1+1+1, F3) -- the presented F3.
        use crate::abelian::AbelianPresentation;
        let pres = AbelianPresentation::free(vec!["eps".into()]);
        let tmp = PresentedPasture::new(pres.clone(), vec![]);
        let one = tmp.canonicalize(vec![BigInt::from(0)]).unwrap();
        let gen = FormalSum::from_units(vec![one.clone(), one.clone(), one]);
        let src = PresentedPasture::new(pres, vec![gen]).pasteurize();
        for tgt in [Pasture::builtin(BuiltinName::F3).unwrap(), Pasture::krasner()] {
            for m in enumerate_morphisms(&src, &tgt).unwrap() {
                assert!(check_morphism(&m).unwrap());
            }
        }
        // F3 admits exactly one such morphism (eps -> 2), F2 none.
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        assert_eq!(enumerate_morphisms(&src, &f3).unwrap().len(), 1);
        let f2 = Pasture::builtin(BuiltinName::F2).unwrap();
        assert_eq!(enumerate_morphisms(&src, &f2).unwrap().len(), 0);
    }
}
