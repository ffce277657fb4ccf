use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::AbelianPresentation;
use crate::matrix::IntMatrix;
use crate::matroid::plucker::{three_term_instances, Instance, Term};
use crate::matroid::subsets::elements;
use crate::matroid::Matroid;

/// The Tutte group of a matroid, presented on `eps` and the degree-0 symbols
/// `y_B = x_B / x_{I0}` for bases `B` other than the reference basis `I0`
/// (the colexicographically first one).
///
/// Relations: `2 eps = 0` plus one two-term relation per 3-term Pluecker
/// instance with exactly two surviving products. This is the unit group of
/// the weak universal pasture.
#[derive(Clone, Debug)]
pub struct TutteGroup {
    pub presentation: AbelianPresentation,
    /// One row per ground element, one column per generator: the images of
    /// the generators under `deg_E` (`y_B` maps to `delta_B - delta_{I0}`).
    pub deg_matrix: IntMatrix,
    /// Basis mask represented by each generator; entry 0 is the reference
    /// basis, standing in for `eps` which has no basis.
    pub gen_basis: Vec<u64>,
    pub reference_basis: u64,
}

/// Exponent word of the degree-0 product ratio `eps^e * x_a * x_b / x_{I0}^2`
/// in the `[eps, y_B]` coordinates.
pub(crate) fn product_word(
    gens: usize,
    index_of: &std::collections::BTreeMap<u64, usize>,
    t: &Term,
) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); gens];
    if t.parity == 1 {
        w[0] += 1;
    }
    for m in [t.a, t.b] {
        if let Some(&i) = index_of.get(&m) {
            w[i] += 1;
        }
    }
    w
}

/// The two-term relation extracted from an instance with exactly two
/// surviving terms `t1 + t2`: uniqueness of weak inverses forces
/// `t2 = eps * t1`.
pub(crate) fn two_term_relation(
    gens: usize,
    index_of: &std::collections::BTreeMap<u64, usize>,
    inst: &Instance,
) -> Vec<BigInt> {
    assert_eq!(inst.terms.len(), 2);
    let w1 = product_word(gens, index_of, &inst.terms[0]);
    let w2 = product_word(gens, index_of, &inst.terms[1]);
    let mut rel: Vec<BigInt> = w2.iter().zip(&w1).map(|(a, b)| a - b).collect();
    rel[0] -= 1;
    rel
}

pub fn tutte_group(m: &Matroid) -> TutteGroup {
    let bases = m.bases();
    let i0 = bases[0];
    let mut labels = vec!["eps".to_string()];
    let mut gen_basis = vec![i0];
    let mut index_of = std::collections::BTreeMap::new();
    for &b in &bases[1..] {
        index_of.insert(b, labels.len());
        labels.push(format!("y{}", label_of(b)));
        gen_basis.push(b);
    }
    let gens = labels.len();

    let mut rel_rows: Vec<Vec<BigInt>> = Vec::new();
    let mut two_eps = vec![BigInt::zero(); gens];
    two_eps[0] = BigInt::from(2);
    rel_rows.push(two_eps);

    let in_support = |mask: u64| m.is_basis(mask);
    for inst in three_term_instances(m.n(), m.r(), &in_support, 1) {
        match inst.terms.len() {
            2 => rel_rows.push(two_term_relation(gens, &index_of, &inst)),
            1 => unreachable!("a matroid support admits no 1-term 3-term instance"),
            _ => {}
        }
    }

    let relations = IntMatrix::from_bigint_rows(rel_rows, gens);
    let presentation = AbelianPresentation::new(labels, relations);

    let deg_matrix = IntMatrix::from_fn(m.n(), gens, |row, col| {
        if col == 0 {
            return BigInt::zero();
        }
        let b = gen_basis[col];
        let e = 1u64 << row;
        let mut v = BigInt::zero();
        if b & e != 0 {
            v += 1;
        }
        if i0 & e != 0 {
            v -= 1;
        }
        v
    });

    TutteGroup { presentation, deg_matrix, gen_basis, reference_basis: i0 }
}

pub(crate) fn label_of(mask: u64) -> String {
    let elems = elements(mask);
    if elems.iter().all(|&e| e <= 9) {
        elems.iter().map(|e| e.to_string()).collect()
    } else {
        elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("_")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::group_structure;

    #[test]
    fn u24_tutte_group_is_z5_plus_z2() {
        // The uniform matroid has no degenerate instance, so the group is
        // free of rank 5 (one less than the number of bases) plus Z/2<eps>.
        let u24 = Matroid::uniform(2, 4).unwrap();
        let t = tutte_group(&u24);
        let gs = group_structure(&t.presentation);
        assert_eq!(gs.free_rank, 5);
        assert_eq!(gs.torsion_factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn single_basis_tutte_group_is_eps_only() {
        let m = Matroid::single_basis(2).unwrap();
        let t = tutte_group(&m);
        assert_eq!(t.presentation.num_generators(), 1);
        let gs = group_structure(&t.presentation);
        assert_eq!(gs.free_rank, 0);
        assert_eq!(gs.torsion_factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn fano_tutte_group_rank_from_snf() {
        let fano = Matroid::fano();
        let t = tutte_group(&fano);
        let gs = group_structure(&t.presentation);
        // 28 bases give 27 y-symbols plus eps; the degenerate relations cut
        // the free rank down to n - c = 6 and identify eps with 1, leaving
        // the group free: the inner Tutte group of the Fano plane is trivial.
        assert_eq!(t.presentation.num_generators(), 28);
        assert_eq!(gs.free_rank, 6);
        assert!(gs.torsion_factors.is_empty(), "eps = 1 is forced for the Fano matroid");
    }

    #[test]
    fn deg_matrix_kills_relations() {
        for m in [Matroid::uniform(2, 4).unwrap(), Matroid::fano()] {
            let t = tutte_group(&m);
            let product = t.deg_matrix.mul(&t.presentation.relations.transpose());
            assert!(product.is_zero());
        }
    }
}
