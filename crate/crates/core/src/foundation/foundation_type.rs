use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::{group_structure, kernel_of_map, AbelianPresentation, MapKernel, RowLattice};
use crate::error::Result;
use crate::foundation::omega::{canonicalize, omega, Quadrangle};
use crate::foundation::tutte::{product_word, tutte_group, TutteGroup};
use crate::matrix::{snf, IntMatrix};
use crate::matroid::plucker::{all_instances, three_term_instances, Instance};
use crate::matroid::Matroid;
use crate::pasture::{FormalSum, PastureElement, PresentedPasture, Unit};

/// The foundation of a matroid: the subpasture of the weak universal pasture
/// generated by the universal cross ratios. Its unit group is the inner
/// Tutte group; morphisms out of it classify rescaling classes.
#[derive(Clone, Debug)]
pub struct Foundation {
    pub pasture: PresentedPasture,
    /// Universal cross ratio of each canonical quadrangle, as a unit of the
    /// foundation pasture.
    pub cr_table: Vec<(Quadrangle, Unit)>,
    pub tutte: TutteGroup,
}

/// The inner Tutte group: the kernel of `deg_E` on the Tutte group.
pub fn inner_tutte_group(t: &TutteGroup) -> MapKernel {
    kernel_of_map(&t.presentation, &t.deg_matrix)
}

fn index_of_bases(t: &TutteGroup) -> BTreeMap<u64, usize> {
    t.gen_basis.iter().enumerate().skip(1).map(|(i, &b)| (b, i)).collect()
}

/// Null generators of a universal pasture: each instance divided by its
/// first surviving term to reach degree 0, expressed in `[eps, y_B]` words.
fn instance_sums(t: &TutteGroup, instances: &[Instance]) -> Vec<FormalSum> {
    let gens = t.presentation.num_generators();
    let index = index_of_bases(t);
    let mut out = Vec::new();
    for inst in instances {
        let words: Vec<Vec<BigInt>> =
            inst.terms.iter().map(|term| product_word(gens, &index, term)).collect();
        let first = &words[0];
        let terms: Vec<Unit> = words
            .iter()
            .map(|w| Unit::Word(w.iter().zip(first).map(|(a, b)| a - b).collect()))
            .collect();
        out.push(FormalSum::from_units(terms));
    }
    out
}

/// The weak universal pasture: units are the Tutte group, null generators
/// come from the 3-term Pluecker instances with at least two surviving
/// terms, pasteurized.
pub fn weak_universal_pasture(m: &Matroid) -> PresentedPasture {
    let t = tutte_group(m);
    let in_support = |mask: u64| m.is_basis(mask);
    let instances = three_term_instances(m.n(), m.r(), &in_support, 2);
    let sums = instance_sums(&t, &instances);
    PresentedPasture::new(t.presentation.clone(), sums).pasteurize()
}

/// The universal pasture: same construction with all Pluecker instances;
/// morphisms out of it classify strong lifts.
pub fn universal_pasture(m: &Matroid) -> PresentedPasture {
    let t = tutte_group(m);
    let in_support = |mask: u64| m.is_basis(mask);
    let instances = all_instances(m.n(), m.r(), &in_support, 1);
    let sums = instance_sums(&t, &instances);
    PresentedPasture::new(t.presentation.clone(), sums).pasteurize()
}

/// Ambient `[eps, y_B]` word of the cross ratio of a quadrangle.
fn cross_ratio_word(t: &TutteGroup, q: &Quadrangle) -> Vec<BigInt> {
    let gens = t.presentation.num_generators();
    let index = index_of_bases(t);
    let [p12, p23, p34, p41] = q.cyclic_pairs();
    let mut w = vec![BigInt::zero(); gens];
    for m in [p12, p34] {
        if let Some(&i) = index.get(&m) {
            w[i] += 1;
        }
    }
    for m in [p23, p41] {
        if let Some(&i) = index.get(&m) {
            w[i] -= 1;
        }
    }
    w
}

pub fn foundation(m: &Matroid) -> Foundation {
    let t = tutte_group(m);
    let quads = omega(m);
    let gens = t.presentation.num_generators();

    // Foundation generators: eps plus one symbol per non-degenerate
    // canonical quadrangle, realized by its cross ratio in the Tutte group.
    let nondeg: Vec<&Quadrangle> = quads.iter().filter(|q| !q.degenerate).collect();
    let mut labels = vec!["eps".to_string()];
    for i in 0..nondeg.len() {
        labels.push(format!("T{}", i + 1));
    }

    // Columns: eps, the cross-ratio words, then the Tutte relations; the
    // relation lattice of the foundation generators is the projection of the
    // kernel of this stacked matrix.
    let rel_count = t.presentation.relations.rows();
    let cols = 1 + nondeg.len() + rel_count;
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(cols);
    let mut eps_col = vec![BigInt::zero(); gens];
    eps_col[0] = BigInt::one();
    columns.push(eps_col);
    for q in &nondeg {
        columns.push(cross_ratio_word(&t, q));
    }
    for i in 0..rel_count {
        columns.push(t.presentation.relations.row_vec(i));
    }
    let stacked = IntMatrix::from_fn(gens, cols, |r, c| columns[c][r].clone());
    let s = snf(&stacked);
    let kdim = cols - s.rank;
    let mut rel_rows = Vec::new();
    for j in 0..kdim {
        let full: Vec<BigInt> = (0..cols).map(|r| s.v.get(r, s.rank + j).clone()).collect();
        rel_rows.push(full[..1 + nondeg.len()].to_vec());
    }
    let relations = IntMatrix::from_bigint_rows(rel_rows, 1 + nondeg.len());
    let pres = AbelianPresentation::new(labels, relations);

    // Null generators: one triple per (I, four-element set) family whose six
    // augmentations are all bases, obtained by dividing the 3-term Pluecker
    // instance by its third surviving product:
    //   0 <= Cr(sorted) + eps * Cr(swap23) + 1.
    let mut class_index: BTreeMap<(u64, [usize; 4]), usize> = BTreeMap::new();
    for (i, q) in nondeg.iter().enumerate() {
        class_index.insert((q.i_mask, q.elems), i);
    }
    let width = 1 + nondeg.len();
    let mut sums = Vec::new();
    for q in &nondeg {
        let [a, b, c, d] = q.elems;
        if !(a < b && b < c && c < d) {
            continue; // one triple per family: the sorted representative
        }
        let t1 = class_index[&(q.i_mask, [a, b, c, d])];
        let t2 = class_index[&(q.i_mask, canonicalize([a, c, b, d]).0)];
        let mut w1 = vec![BigInt::zero(); width];
        w1[1 + t1] = BigInt::one();
        let mut w2 = vec![BigInt::zero(); width];
        w2[0] = BigInt::one();
        w2[1 + t2] = BigInt::one();
        let w3 = vec![BigInt::zero(); width];
        sums.push(FormalSum::from_units(vec![Unit::Word(w1), Unit::Word(w2), Unit::Word(w3)]));
    }

    let pasture = PresentedPasture::new(pres, sums).pasteurize();

    // Cross-ratio table over all canonical quadrangles, in foundation
    // coordinates. Degenerate quadrangles take the value 1 or eps, decided
    // against the Tutte relation lattice.
    let lattice = RowLattice::new(&t.presentation.relations);
    let mut cr_table = Vec::new();
    for q in &quads {
        let unit = if q.degenerate {
            let w = cross_ratio_word(&t, q);
            if lattice.contains(&w) {
                one_unit(&pasture)
            } else {
                let mut w_eps = w.clone();
                w_eps[0] -= 1;
                assert!(
                    lattice.contains(&w_eps),
                    "degenerate cross ratio must be 1 or eps"
                );
                eps_unit(&pasture)
            }
        } else {
            let i = class_index[&(q.i_mask, q.elems)];
            let mut w = vec![BigInt::zero(); width];
            w[1 + i] = BigInt::one();
            pasture.canonicalize(w).expect("foundation of a matroid is not collapsed")
        };
        cr_table.push((q.clone(), unit));
    }

    Foundation { pasture, cr_table, tutte: t }
}

fn one_unit(p: &PresentedPasture) -> Unit {
    p.canonicalize(vec![BigInt::zero(); p.num_generators()]).unwrap()
}

fn eps_unit(p: &PresentedPasture) -> Unit {
    let mut w = vec![BigInt::zero(); p.num_generators()];
    w[0] = BigInt::one();
    p.canonicalize(w).unwrap()
}

impl Foundation {
    /// Universal cross ratio of an arbitrary quadrangle tuple, resolved via
    /// the 8-fold symmetry: members of the Klein orbit share the value, the
    /// reversal coset inverts it.
    pub fn universal_cross_ratio(&self, i_mask: u64, elems: [usize; 4]) -> Option<Unit> {
        let (rep, inverted) = canonicalize(elems);
        let (_, unit) = self
            .cr_table
            .iter()
            .find(|(q, _)| q.i_mask == i_mask && q.elems == rep)?;
        if inverted {
            let Unit::Word(w) = unit else { return None };
            Some(Unit::Word(w.iter().map(|x| -x).collect()))
        } else {
            Some(unit.clone())
        }
    }
}

/// Classification of a matroid against the fixed foundation catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub regular: bool,
    pub binary: bool,
}

/// A matroid is regular iff its foundation is the regular partial field
/// (units `{1, eps}` with `eps != 1` and no surviving null generators), and
/// binary iff the foundation is that or the field with two elements (trivial
/// unit group, not collapsed, no surviving generators).
pub fn classify(m: &Matroid) -> Classification {
    let f = foundation(m);
    classify_foundation(&f.pasture)
}

pub fn classify_foundation(p: &PresentedPasture) -> Classification {
    if p.collapsed {
        return Classification { regular: false, binary: false };
    }
    let gs = group_structure(&p.unit_group);
    let no_gens = p.null_generators.is_empty();
    let is_f1pm = gs.free_rank == 0
        && gs.torsion_factors == vec![BigInt::from(2)]
        && !p.eps_is_one()
        && no_gens;
    let is_f2 = gs.is_trivial() && no_gens;
    Classification { regular: is_f1pm, binary: is_f1pm || is_f2 }
}

/// The cross ratio of a Grassmann-Pluecker function at a quadrangle:
/// `D(I12) D(I34) / (D(I23) D(I41))`. `None` when a needed value vanishes.
pub fn cross_ratio(
    g: &crate::matroid::GpFunction,
    i_mask: u64,
    elems: [usize; 4],
) -> Result<Unit> {
    let q = Quadrangle { i_mask, elems, degenerate: false };
    let [p12, p23, p34, p41] = q.cyclic_pairs();
    let value = |mask: u64| -> Result<Unit> {
        match g.value(mask) {
            PastureElement::Unit(u) => Ok(u),
            PastureElement::Zero => Err(crate::error::Error::Invalid(format!(
                "quadrangle needs a basis at {:?}",
                crate::matroid::subsets::elements(mask)
            ))),
        }
    };
    let p = &g.pasture;
    let num = p.unit_mul(&value(p12)?, &value(p34)?);
    let den = p.unit_mul(&value(p23)?, &value(p41)?);
    Ok(p.unit_mul(&num, &p.unit_inv(&den)))
}
