//! Finitely generated abelian groups given by generators and relations.
//!
//! A presentation is a labelled generator list together with an integer
//! relation matrix; the presented group is the quotient of the free abelian
//! group on the generators by the row lattice of the relations. All structure
//! computations reduce to the Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{snf, IntMatrix};

/// Finitely generated abelian group presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPresentation {
    pub generator_labels: Vec<String>,
    /// Each row is a relation; columns are indexed by generators.
    pub relations: IntMatrix,
}

impl AbelianPresentation {
    pub fn new(generator_labels: Vec<String>, relations: IntMatrix) -> Self {
        assert_eq!(relations.cols(), generator_labels.len(), "relation width mismatch");
        AbelianPresentation { generator_labels, relations }
    }

    pub fn free(generator_labels: Vec<String>) -> Self {
        let n = generator_labels.len();
        AbelianPresentation { generator_labels, relations: IntMatrix::zero(0, n) }
    }

    pub fn num_generators(&self) -> usize {
        self.generator_labels.len()
    }
}

/// A row lattice in `Z^n` in Smith form, supporting membership tests and
/// canonical coset representatives.
#[derive(Clone, Debug)]
pub struct RowLattice {
    cols: usize,
    rank: usize,
    diag: Vec<BigInt>,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl RowLattice {
    pub fn new(rows: &IntMatrix) -> Self {
        let s = snf(rows);
        let diag = (0..s.rank).map(|i| s.d.get(i, i).clone()).collect();
        RowLattice { cols: rows.cols(), rank: s.rank, diag, v: s.v, v_inv: s.v_inv }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True iff `vec` lies in the integer row span of the lattice rows.
    pub fn contains(&self, vec: &[BigInt]) -> bool {
        assert_eq!(vec.len(), self.cols, "vector width mismatch");
        let y = self.v.mul_row_vec(vec);
        for (j, yj) in y.iter().enumerate() {
            if j < self.rank {
                if !yj.mod_floor(&self.diag[j]).is_zero() {
                    return false;
                }
            } else if !yj.is_zero() {
                return false;
            }
        }
        true
    }

    /// Canonical representative of `vec + L`: transformed coordinates are
    /// reduced into `[0, d_j)` on the torsion part and kept on the free part.
    pub fn reduce(&self, vec: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(vec.len(), self.cols, "vector width mismatch");
        let mut y = self.v.mul_row_vec(vec);
        for j in 0..self.rank {
            y[j] = y[j].mod_floor(&self.diag[j]);
        }
        self.v_inv.mul_row_vec(&y)
    }
}

/// True iff `v` lies in the integer row span of `rows`.
pub fn lattice_membership(v: &[BigInt], rows: &IntMatrix) -> bool {
    RowLattice::new(rows).contains(v)
}

/// Invariant-factor decomposition of a presented group.
#[derive(Clone, Debug)]
pub struct GroupStructure {
    pub free_rank: usize,
    /// Divisibility chain d_1 | d_2 | ..., each >= 2.
    pub torsion_factors: Vec<BigInt>,
    /// `num_generators x (t + f)` matrix sending an original generator to its
    /// structured coordinates (torsion coordinates first, then free ones).
    pub basis_change: IntMatrix,
    /// `(t + f) x num_generators` matrix expressing each structured generator
    /// as a word in the original generators.
    pub sections: IntMatrix,
}

impl GroupStructure {
    /// Group order, `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.torsion_factors {
            o *= d;
        }
        Some(o)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }

    /// Structured coordinates of a word in the original generators, reduced
    /// modulo the torsion factors.
    pub fn coords_of(&self, word: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.basis_change.mul_row_vec(word);
        for (j, d) in self.torsion_factors.iter().enumerate() {
            y[j] = y[j].mod_floor(d);
        }
        y
    }
}

pub fn group_structure(p: &AbelianPresentation) -> GroupStructure {
    let n = p.num_generators();
    let s = snf(&p.relations);
    // The quotient is Z^n / rowspan(D) in the coordinates y = x * V.
    let mut torsion_cols = Vec::new();
    let mut free_cols = Vec::new();
    for j in 0..n {
        if j < s.rank {
            let d = s.d.get(j, j);
            if d.abs() > BigInt::one() {
                torsion_cols.push(j);
            }
            // d == 1: generator killed.
        } else {
            free_cols.push(j);
        }
    }
    let kept: Vec<usize> = torsion_cols.iter().chain(free_cols.iter()).copied().collect();
    let basis_change = IntMatrix::from_fn(n, kept.len(), |r, c| s.v.get(r, kept[c]).clone());
    let sections = IntMatrix::from_fn(kept.len(), n, |r, c| s.v_inv.get(kept[r], c).clone());
    GroupStructure {
        free_rank: free_cols.len(),
        torsion_factors: torsion_cols.iter().map(|&j| s.d.get(j, j).clone()).collect(),
        basis_change,
        sections,
    }
}

/// Kernel of a homomorphism from a presented group into a free group `Z^t`,
/// given by a matrix with one column per generator.
#[derive(Clone, Debug)]
pub struct MapKernel {
    /// Presentation of the kernel subgroup.
    pub presentation: AbelianPresentation,
    /// One row per kernel generator, expressing it in the original generators.
    pub inclusion: IntMatrix,
}

/// Kernel of the map sending generator words `x` to `map * x`.
///
/// The map must kill the relations of `p` (it is then well defined on the
/// presented group); the result is a presentation of the kernel subgroup with
/// generator expressions back in `p`'s generators.
pub fn kernel_of_map(p: &AbelianPresentation, map: &IntMatrix) -> MapKernel {
    let n = p.num_generators();
    assert_eq!(map.cols(), n, "map must have one column per generator");
    let s = snf(map);
    // Columns of V beyond the rank form a basis of ker(map) in Z^n.
    let kdim = n - s.rank;
    let inclusion = IntMatrix::from_fn(kdim, n, |r, c| s.v.get(c, s.rank + r).clone());
    // Express each relation of p in kernel coordinates: the first `rank`
    // coordinates of V^{-1} * rel must vanish because map kills relations.
    let mut rel_rows = Vec::new();
    for i in 0..p.relations.rows() {
        let rel = p.relations.row_vec(i);
        let y = s.v_inv.mul_col_vec(&rel);
        for (j, yj) in y.iter().enumerate().take(s.rank) {
            assert!(yj.is_zero(), "relation {i} not killed by the map (coord {j})");
        }
        rel_rows.push(y[s.rank..].to_vec());
    }
    let relations = IntMatrix::from_bigint_rows(rel_rows, kdim);
    let labels = (0..kdim).map(|i| format!("k{i}")).collect();
    MapKernel { presentation: AbelianPresentation::new(labels, relations), inclusion }
}

/// A finite abelian group in invariant-factor coordinates. Elements are
/// vectors with entry `j` taken modulo `factors[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<i64>) -> Self {
        assert!(factors.iter().all(|&f| f >= 2), "factors must be >= 2");
        FiniteAbelianGroup { factors }
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&f| f as u128).product()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, &f)| (a[j] + b[j]).rem_euclid(f))
            .collect()
    }

    /// Scalar multiple `k * a` with arbitrary-precision scalar.
    pub fn scale(&self, k: &BigInt, a: &[i64]) -> Vec<i64> {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, &f)| {
                let km = k.mod_floor(&BigInt::from(f)).to_i64().unwrap();
                (km * a[j]).rem_euclid(f)
            })
            .collect()
    }

    /// All elements in lexicographic coordinate order.
    pub fn all_elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &f in &self.factors {
            let mut next = Vec::with_capacity(out.len() * f as usize);
            for prefix in &out {
                for x in 0..f {
                    let mut e = prefix.clone();
                    e.push(x);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// Elements `x` with `d * x = 0`, in lexicographic order.
    pub fn annihilated_by(&self, d: &BigInt) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &f in &self.factors {
            let g = d.gcd(&BigInt::from(f)).to_i64().unwrap();
            let step = f / g;
            let mut next = Vec::with_capacity(out.len() * g as usize);
            for prefix in &out {
                for m in 0..g {
                    let mut e = prefix.clone();
                    e.push(m * step);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }
}

/// All homomorphisms from a presented group into a finite abelian group,
/// optionally pinned on some original generators.
///
/// Each hom is returned as the list of images of the original generators,
/// in deterministic lexicographic order of those image tuples. Inconsistent
/// pins yield an empty list.
pub fn enumerate_homs(
    p: &AbelianPresentation,
    target: &FiniteAbelianGroup,
    pins: &[(usize, Vec<i64>)],
) -> Vec<Vec<Vec<i64>>> {
    let gs = group_structure(p);
    let n = p.num_generators();
    let t = gs.torsion_factors.len();
    let f = gs.free_rank;

    // Candidate images per structured generator: torsion generators range
    // over the annihilator of their factor, free generators over everything.
    let mut candidate_lists: Vec<Vec<Vec<i64>>> = Vec::with_capacity(t + f);
    for d in &gs.torsion_factors {
        candidate_lists.push(target.annihilated_by(d));
    }
    for _ in 0..f {
        candidate_lists.push(target.all_elements());
    }

    let mut homs = Vec::new();
    let mut choice = vec![0usize; t + f];
    'next: loop {
        // Images of the original generators under the current choice.
        let mut images = Vec::with_capacity(n);
        let mut ok = true;
        for i in 0..n {
            let mut img = target.zero();
            for j in 0..t + f {
                let c = gs.basis_change.get(i, j);
                img = target.add(&img, &target.scale(c, &candidate_lists[j][choice[j]]));
            }
            images.push(img);
        }
        for (gen, pin) in pins {
            if &images[*gen] != pin {
                ok = false;
                break;
            }
        }
        if ok {
            homs.push(images);
        }
        // Advance the mixed-radix counter.
        for j in (0..t + f).rev() {
            choice[j] += 1;
            if choice[j] < candidate_lists[j].len() {
                continue 'next;
            }
            choice[j] = 0;
        }
        break;
    }
    homs.sort();
    homs.dedup();
    homs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(labels: &[&str], rels: &[Vec<i64>]) -> AbelianPresentation {
        let n = labels.len();
        let relations = if rels.is_empty() {
            IntMatrix::zero(0, n)
        } else {
            IntMatrix::from_rows(&rels.to_vec())
        };
        AbelianPresentation::new(labels.iter().map(|s| s.to_string()).collect(), relations)
    }

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn structure_single_torsion() {
        let p = pres(&["g"], &[vec![2]]);
        let gs = group_structure(&p);
        assert_eq!(gs.free_rank, 0);
        assert_eq!(gs.torsion_factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn structure_free() {
        let p = pres(&["a", "b"], &[]);
        let gs = group_structure(&p);
        assert_eq!(gs.free_rank, 2);
        assert!(gs.torsion_factors.is_empty());
    }

    #[test]
    fn structure_invariant_under_row_shuffle() {
        let rels = vec![vec![2, 0, 4], vec![0, 6, 0], vec![2, 6, 4]];
        let p1 = pres(&["a", "b", "c"], &rels);
        let shuffled = vec![rels[2].clone(), rels[0].clone(), rels[1].clone()];
        let p2 = pres(&["a", "b", "c"], &shuffled);
        let g1 = group_structure(&p1);
        let g2 = group_structure(&p2);
        assert_eq!(g1.free_rank, g2.free_rank);
        assert_eq!(g1.torsion_factors, g2.torsion_factors);
    }

    #[test]
    fn membership_examples() {
        let rows = IntMatrix::from_rows(&[vec![1, 0]]);
        assert!(lattice_membership(&bv(&[0, 0]), &rows));
        assert!(lattice_membership(&bv(&[2, 0]), &rows));
        // Exhaustive small-coefficient search: (1,1) is not in <(2,0),(0,2)>.
        let rows2 = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert!(!lattice_membership(&bv(&[1, 1]), &rows2));
    }

    #[test]
    fn reduce_is_canonical() {
        let rows = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let lat = RowLattice::new(&rows);
        let a = lat.reduce(&bv(&[5, 7]));
        let b = lat.reduce(&bv(&[1, 1]));
        assert_eq!(a, b);
        let diff: Vec<BigInt> = a.iter().zip(bv(&[5, 7])).map(|(x, y)| x - y).collect();
        assert!(lat.contains(&diff));
    }

    #[test]
    fn kernel_of_zero_map_is_whole_group() {
        let p = pres(&["a", "b"], &[vec![2, 0]]);
        let k = kernel_of_map(&p, &IntMatrix::zero(1, 2));
        let gs = group_structure(&k.presentation);
        assert_eq!(gs.free_rank, 1);
        assert_eq!(gs.torsion_factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn kernel_of_augmentation() {
        let p = pres(&["a", "b"], &[]);
        let map = IntMatrix::from_rows(&[vec![1, 1]]);
        let k = kernel_of_map(&p, &map);
        assert_eq!(k.inclusion.rows(), 1);
        let row = k.inclusion.row_vec(0);
        // Generated by (1,-1) up to sign.
        assert!(row == bv(&[1, -1]) || row == bv(&[-1, 1]));
        // Map composed with inclusion vanishes.
        let img = map.mul(&k.inclusion.transpose());
        assert!(img.is_zero());
    }

    #[test]
    fn hom_counts_small() {
        let z2 = pres(&["g"], &[vec![2]]);
        let z = pres(&["g"], &[]);
        let t2 = FiniteAbelianGroup::new(vec![2]);
        let t3 = FiniteAbelianGroup::new(vec![3]);
        assert_eq!(enumerate_homs(&z2, &t2, &[]).len(), 2);
        assert_eq!(enumerate_homs(&z, &t3, &[]).len(), 3);
        assert_eq!(enumerate_homs(&z2, &t3, &[]).len(), 1);
    }

    #[test]
    fn hom_pins() {
        let z2 = pres(&["g"], &[vec![2]]);
        let t2 = FiniteAbelianGroup::new(vec![2]);
        let pinned = enumerate_homs(&z2, &t2, &[(0, vec![1])]);
        assert_eq!(pinned.len(), 1);
        assert_eq!(pinned[0][0], vec![1]);
        // Inconsistent pin: Z/2 -> Z/3 cannot send g to 1.
        let t3 = FiniteAbelianGroup::new(vec![3]);
        assert!(enumerate_homs(&z2, &t3, &[(0, vec![1])]).is_empty());
    }

    #[test]
    fn homs_respect_relations() {
        // Z/4 x Z/2 presented with mixed relations.
        let p = pres(&["a", "b"], &[vec![4, 0], vec![2, 2]]);
        let t = FiniteAbelianGroup::new(vec![4]);
        for hom in enumerate_homs(&p, &t, &[]) {
            for i in 0..p.relations.rows() {
                let mut acc = t.zero();
                for (gen, img) in hom.iter().enumerate() {
                    acc = t.add(&acc, &t.scale(p.relations.get(i, gen), img));
                }
                assert_eq!(acc, t.zero());
            }
        }
    }
}
