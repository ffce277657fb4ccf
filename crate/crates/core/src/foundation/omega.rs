use crate::matroid::subsets::subsets_of_size;
use crate::matroid::Matroid;

/// A quadrangle of the basis exchange graph: a tuple `(I, i1, i2, i3, i4)`
/// with the four cyclic augmentations `I+{i1,i2}`, `I+{i2,i3}`, `I+{i3,i4}`,
/// `I+{i4,i1}` all bases. Non-degenerate when the diagonals `I+{i1,i3}` and
/// `I+{i2,i4}` are bases too.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadrangle {
    pub i_mask: u64,
    /// 1-based elements, canonical representative of the 8-fold symmetry
    /// class (Klein four group and cycle reversal).
    pub elems: [usize; 4],
    pub degenerate: bool,
}

/// The 8 tuples acting like the quadrangle: the Klein four group leaves the
/// cross ratio fixed, the reversal coset inverts it.
pub fn orbit(elems: [usize; 4]) -> [([usize; 4], bool); 8] {
    let [a, b, c, d] = elems;
    [
        ([a, b, c, d], false),
        ([b, a, d, c], false),
        ([c, d, a, b], false),
        ([d, c, b, a], false),
        ([b, c, d, a], true),
        ([a, d, c, b], true),
        ([d, a, b, c], true),
        ([c, b, a, d], true),
    ]
}

/// Canonical representative of a tuple under the 8-fold symmetry, plus
/// whether the representative's cross ratio is the inverse of the input's.
pub fn canonicalize(elems: [usize; 4]) -> ([usize; 4], bool) {
    orbit(elems).into_iter().min().unwrap()
}

impl Quadrangle {
    pub fn cyclic_pairs(&self) -> [u64; 4] {
        let [a, b, c, d] = self.elems;
        let p = |x: usize, y: usize| self.i_mask | 1 << (x - 1) | 1 << (y - 1);
        [p(a, b), p(b, c), p(c, d), p(d, a)]
    }

    pub fn diagonal_pairs(&self) -> [u64; 2] {
        let [a, b, c, d] = self.elems;
        let p = |x: usize, y: usize| self.i_mask | 1 << (x - 1) | 1 << (y - 1);
        [p(a, c), p(b, d)]
    }
}

/// All quadrangles of a matroid, one canonical representative per 8-fold
/// symmetry class, with degeneracy flags. Empty for rank below 2.
pub fn omega(m: &Matroid) -> Vec<Quadrangle> {
    let mut out = Vec::new();
    if m.r() < 2 {
        return out;
    }
    for i_mask in subsets_of_size(m.n(), m.r() - 2) {
        let outside: Vec<usize> =
            (1..=m.n()).filter(|&e| i_mask >> (e - 1) & 1 == 0).collect();
        let k = outside.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        let (w, x, y, z) = (outside[a], outside[b], outside[c], outside[d]);
                        // Canonical class representatives on a sorted 4-set.
                        for elems in [[w, x, y, z], [w, x, z, y], [w, y, x, z]] {
                            let q = Quadrangle { i_mask, elems, degenerate: false };
                            if q.cyclic_pairs().iter().all(|&p| m.is_basis(p)) {
                                let degenerate =
                                    !q.diagonal_pairs().iter().all(|&p| m.is_basis(p));
                                out.push(Quadrangle { degenerate, ..q });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u24_has_three_nondegenerate_classes() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let q = omega(&u24);
        assert_eq!(q.len(), 3);
        assert!(q.iter().all(|x| !x.degenerate));
        assert_eq!(q[0].elems, [1, 2, 3, 4]);
        assert_eq!(q[1].elems, [1, 2, 4, 3]);
        assert_eq!(q[2].elems, [1, 3, 2, 4]);
    }

    #[test]
    fn low_rank_is_empty() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(omega(&u12).is_empty());
        // No four distinct elements outside I on three points.
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert!(omega(&u23).is_empty());
    }

    #[test]
    fn fano_quadrangles_are_all_degenerate() {
        // Binary matroid: no 3-term instance has three surviving products.
        let fano = Matroid::fano();
        let q = omega(&fano);
        assert!(!q.is_empty());
        assert!(q.iter().all(|x| x.degenerate));
    }

    #[test]
    fn canonical_reps_are_orbit_minima() {
        let (rep, inverted) = canonicalize([3, 1, 4, 2]);
        assert_eq!(rep, canonicalize(rep).0);
        // Re-canonicalizing a representative is the identity.
        assert!(!canonicalize(rep).1);
        let _ = inverted;
    }

    #[test]
    fn orbit_has_eight_tuples() {
        let o = orbit([1, 2, 3, 4]);
        let mut tuples: Vec<[usize; 4]> = o.iter().map(|(t, _)| *t).collect();
        tuples.sort();
        tuples.dedup();
        assert_eq!(tuples.len(), 8);
    }
}
