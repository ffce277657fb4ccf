//! Bitset combinatorics on the ground set `{1..n}`.
//!
//! Subsets are encoded as `u64` masks with element `i` (1-based) at bit
//! `i - 1`. Numeric order of masks is colexicographic order on equal-size
//! subsets, which is the enumeration order used everywhere.

/// All k-subsets of `{1..n}` in colexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63, "ground sets up to 63 elements");
    if k > n {
        return vec![];
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut mask: u64 = (1 << k) - 1;
    let limit: u64 = 1 << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next higher integer with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
    out
}

/// 1-based sorted elements of a mask.
pub fn elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Mask of 1-based elements.
pub fn mask_of(elems: &[usize]) -> u64 {
    elems.iter().fold(0u64, |m, &e| {
        assert!((1..=63).contains(&e), "elements are 1-based and <= 63");
        m | 1 << (e - 1)
    })
}

pub fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Parity of the permutation sorting `(I, I^c)` against `(1..n)`: the number
/// of pairs `a in I`, `b not in I` with `a > b`, mod 2.
pub fn shuffle_parity(mask: u64, n: usize) -> u8 {
    let mut inv = 0u32;
    for b in 0..n {
        if mask >> b & 1 == 0 {
            // Count elements of I above this complement element.
            inv += (mask >> (b + 1)).count_ones();
        }
    }
    (inv % 2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_is_numeric() {
        let subs = subsets_of_size(4, 2);
        assert_eq!(subs.len(), 6);
        let mut sorted = subs.clone();
        sorted.sort();
        assert_eq!(subs, sorted);
        assert_eq!(subs[0], mask_of(&[1, 2]));
        assert_eq!(subs[1], mask_of(&[1, 3]));
        assert_eq!(subs[2], mask_of(&[2, 3]));
        assert_eq!(subs[5], mask_of(&[3, 4]));
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of_size(7, 3).len(), 35);
        assert_eq!(subsets_of_size(5, 0), vec![0]);
        assert_eq!(subsets_of_size(3, 4).len(), 0);
    }

    #[test]
    fn roundtrip_elements() {
        let m = mask_of(&[2, 5, 7]);
        assert_eq!(elements(m), vec![2, 5, 7]);
    }

    #[test]
    fn parity_small_cases() {
        // n=2: I={1} -> (1,2) identity, even; I={2} -> (2,1), odd.
        assert_eq!(shuffle_parity(mask_of(&[1]), 2), 0);
        assert_eq!(shuffle_parity(mask_of(&[2]), 2), 1);
        // n=4, I={2,3}: permutation (2,3,1,4), two inversions.
        assert_eq!(shuffle_parity(mask_of(&[2, 3]), 4), 0);
        // n=4, I={2,4}: permutation (2,4,1,3): inversions (2,1),(4,1),(4,3).
        assert_eq!(shuffle_parity(mask_of(&[2, 4]), 4), 1);
    }
}
