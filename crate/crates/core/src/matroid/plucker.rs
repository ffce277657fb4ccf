//! Pluecker relation instances over a support of r-subsets.
//!
//! A full instance is indexed by an (r-1)-subset J and an (r+1)-subset I';
//! writing `sigma(i, X) = #{j in X | j <= i}`, it reads
//!
//! ```text
//! 0 <= sum_{i in I'-J} eps^{sigma(i,J) + sigma(i,I')} * x_{J + i} * x_{I' - i}
//! ```
//!
//! with terms dropped when either factor is outside the support. This form
//! is symmetric under duality; when J and I' are disjoint it reduces to the
//! familiar alternating sum over the positions of `i` in I'. Three-term
//! instances are indexed by an (r-2)-subset I and four elements
//! i1 < i2 < i3 < i4 outside I:
//!
//! ```text
//! 0 <= x_{I,1,2} x_{I,3,4} + eps * x_{I,1,3} x_{I,2,4} + x_{I,1,4} x_{I,2,3}
//! ```
//!
//! and are exactly the full instances with J = I + {i1}, I' = I + {i2,i3,i4}.

use crate::matroid::subsets::subsets_of_size;

/// One surviving term of an instance: the product `eps^parity * x_a * x_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub a: u64,
    pub b: u64,
    pub parity: u8,
}

/// A Pluecker instance restricted to a support; only surviving terms are
/// kept, `total` counts the terms that were not identically indexed out
/// (i.e. with `i_k` outside J).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub terms: Vec<Term>,
}

/// All 3-term instances with at least `min_surviving` surviving terms.
pub fn three_term_instances(
    n: usize,
    r: usize,
    in_support: &dyn Fn(u64) -> bool,
    min_surviving: usize,
) -> Vec<Instance> {
    let mut out = Vec::new();
    if r < 2 {
        return out;
    }
    for i_mask in subsets_of_size(n, r - 2) {
        let outside: Vec<usize> = (0..n).filter(|&e| i_mask >> e & 1 == 0).collect();
        let m = outside.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        let (i1, i2, i3, i4) = (outside[a], outside[b], outside[c], outside[d]);
                        let pair = |x: usize, y: usize| i_mask | 1 << x | 1 << y;
                        let raw = [
                            (pair(i1, i2), pair(i3, i4), 0u8),
                            (pair(i1, i3), pair(i2, i4), 1u8),
                            (pair(i1, i4), pair(i2, i3), 0u8),
                        ];
                        let terms: Vec<Term> = raw
                            .iter()
                            .filter(|(x, y, _)| in_support(*x) && in_support(*y))
                            .map(|&(a, b, parity)| Term { a, b, parity })
                            .collect();
                        if terms.len() >= min_surviving {
                            out.push(Instance { terms });
                        }
                    }
                }
            }
        }
    }
    out
}

/// All full instances (every (J, I') pair) with at least `min_surviving`
/// surviving terms.
pub fn all_instances(
    n: usize,
    r: usize,
    in_support: &dyn Fn(u64) -> bool,
    min_surviving: usize,
) -> Vec<Instance> {
    let mut out = Vec::new();
    if r + 1 > n || r == 0 {
        return out;
    }
    let j_sets = subsets_of_size(n, r - 1);
    let i_sets = subsets_of_size(n, r + 1);
    for &j_mask in &j_sets {
        for &i_mask in &i_sets {
            let mut terms = Vec::new();
            let mut bits = i_mask & !j_mask;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let below = low - 1;
                let sigma = (j_mask & below).count_ones() + (i_mask & (below | low)).count_ones();
                let a = j_mask | low;
                let b = i_mask & !low;
                if in_support(a) && in_support(b) {
                    terms.push(Term { a, b, parity: (sigma % 2) as u8 });
                }
            }
            if terms.len() >= min_surviving {
                out.push(Instance { terms });
            }
        }
    }
    out
}
