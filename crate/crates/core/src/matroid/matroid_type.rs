use crate::error::{Error, Result};
use crate::matroid::subsets::{elements, full_mask, mask_of, subsets_of_size};

/// A matroid given by its basis family: r-subsets of `{1..n}` as bitsets,
/// sorted colexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: Vec<u64>,
}

/// True iff the family is nonempty, consists of r-subsets, and satisfies
/// basis exchange: for all B1, B2 and i in B1\B2 there is j in B2\B1 with
/// B1 - i + j in the family.
pub fn check_basis_axiom(n: usize, r: usize, bases: &[u64]) -> bool {
    if bases.is_empty() {
        return false;
    }
    let full = full_mask(n);
    for &b in bases {
        if b & !full != 0 || b.count_ones() as usize != r {
            return false;
        }
    }
    let mut sorted = bases.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let member = |m: u64| sorted.binary_search(&m).is_ok();
    for &b1 in &sorted {
        for &b2 in &sorted {
            let out = b1 & !b2;
            let into = b2 & !b1;
            let mut i_bits = out;
            while i_bits != 0 {
                let i = i_bits & i_bits.wrapping_neg();
                i_bits &= i_bits - 1;
                let mut found = false;
                let mut j_bits = into;
                while j_bits != 0 {
                    let j = j_bits & j_bits.wrapping_neg();
                    j_bits &= j_bits - 1;
                    if member(b1 & !i | j) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

impl Matroid {
    pub fn new(n: usize, r: usize, mut bases: Vec<u64>) -> Result<Matroid> {
        bases.sort_unstable();
        bases.dedup();
        if !check_basis_axiom(n, r, &bases) {
            return Err(Error::NotAMatroid(format!(
                "basis family on n={n}, r={r} fails the exchange axiom"
            )));
        }
        Ok(Matroid { n, r, bases })
    }

    pub fn from_elements(n: usize, r: usize, bases: &[Vec<usize>]) -> Result<Matroid> {
        Matroid::new(n, r, bases.iter().map(|b| mask_of(b)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    /// Colexicographically first basis.
    pub fn first_basis(&self) -> u64 {
        self.bases[0]
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n || n == 0 {
            return Err(Error::Invalid(format!("uniform({r},{n}) needs 0 < r <= n")));
        }
        Matroid::new(n, r, subsets_of_size(n, r))
    }

    /// The Fano plane: rank 3 on 7 points, bases = the 28 non-lines.
    pub fn fano() -> Matroid {
        let lines: Vec<u64> = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ]
        .iter()
        .map(|l| mask_of(l))
        .collect();
        let bases: Vec<u64> =
            subsets_of_size(7, 3).into_iter().filter(|m| !lines.contains(m)).collect();
        Matroid::new(7, 3, bases).expect("the Fano plane is a matroid")
    }

    /// The matroid with a single basis `{1..n}`.
    pub fn single_basis(n: usize) -> Result<Matroid> {
        if n == 0 {
            return Err(Error::Invalid("single-basis(n) needs n >= 1".into()));
        }
        Matroid::new(n, n, vec![full_mask(n)])
    }

    /// Dual matroid: complements of bases.
    pub fn dual(&self) -> Matroid {
        let full = full_mask(self.n);
        let mut bases: Vec<u64> = self.bases.iter().map(|b| full & !b).collect();
        bases.sort_unstable();
        Matroid { n: self.n, r: self.n - self.r, bases }
    }

    /// Partition of `{1..n}` into connected components: the transitive
    /// closure of `i ~ j` whenever bases I, J satisfy I-J = {i}, J-I = {j}.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let d1 = b1 & !b2;
                let d2 = b2 & !b1;
                if d1.count_ones() == 1 && d2.count_ones() == 1 {
                    let i = d1.trailing_zeros() as usize;
                    let j = d2.trailing_zeros() as usize;
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..self.n {
            let root = find(&mut parent, x);
            groups.entry(root).or_default().push(x + 1);
        }
        groups.into_values().collect()
    }

    pub fn num_components(&self) -> usize {
        self.connected_components().len()
    }

    pub fn bases_elements(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| elements(b)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_is_a_matroid() {
        assert!(check_basis_axiom(4, 2, &subsets_of_size(4, 2)));
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.bases().len(), 6);
    }

    #[test]
    fn disjoint_pair_fails_exchange() {
        let bases = vec![mask_of(&[1, 2, 3]), mask_of(&[4, 5, 6])];
        assert!(!check_basis_axiom(6, 3, &bases));
        assert!(Matroid::new(6, 3, bases).is_err());
    }

    #[test]
    fn fano_has_28_bases_and_passes_exchange() {
        let fano = Matroid::fano();
        assert_eq!(fano.bases().len(), 28);
        assert!(check_basis_axiom(7, 3, fano.bases()));
    }

    #[test]
    fn components_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.num_components(), 1);
        let single = Matroid::single_basis(2).unwrap();
        assert_eq!(single.num_components(), 2);
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.num_components(), 1);
        assert_eq!(Matroid::fano().num_components(), 1);
    }

    #[test]
    fn dual_of_uniform() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let d = u24.dual();
        assert_eq!(d.r(), 2);
        assert_eq!(d.bases().len(), 6);
        let u14 = Matroid::uniform(1, 4).unwrap();
        assert_eq!(u14.dual().bases(), Matroid::uniform(3, 4).unwrap().bases());
    }

    #[test]
    fn rank2_matroids_on_4_elements_count() {
        // Frozen count used by the census oracle: 36 exchange-valid families.
        let all = subsets_of_size(4, 2);
        let mut count = 0;
        for mask in 1u64..(1 << all.len()) {
            let family: Vec<u64> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            if check_basis_axiom(4, 2, &family) {
                count += 1;
            }
        }
        assert_eq!(count, 36);
    }
}
