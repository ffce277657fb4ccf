//! Exact integer matrices and the Smith normal form.
//!
//! Everything here works over arbitrary-precision integers; intermediate
//! entries of a normal form computation can exceed machine words even for
//! small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Build from `i64` rows; rows must all have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        IntMatrix::from_fn(nrows, ncols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let nrows = rows.len();
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        IntMatrix { rows: nrows, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<BigInt> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, c);
            }
            acc
        })
    }

    /// Row vector times matrix: `v * self`.
    pub fn mul_row_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in mul_row_vec");
        (0..self.cols)
            .map(|c| {
                let mut acc = BigInt::zero();
                for r in 0..self.rows {
                    acc += &v[r] * self.get(r, c);
                }
                acc
            })
            .collect()
    }

    /// Matrix times column vector: `self * v`.
    pub fn mul_col_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_col_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = BigInt::zero();
                for c in 0..self.cols {
                    acc += self.get(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// `row[dst] += k * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(dst, c) + k * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// `col[dst] += k * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, dst) + k * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, num / &prev);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }
}

/// Smith normal form together with the change-of-basis data.
///
/// `u * m * v = d` with `u`, `v` unimodular, `d` diagonal and each diagonal
/// entry dividing the next. `v_inv` is the inverse of `v`, tracked during the
/// reduction because lattice normal forms need it.
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

/// Smith normal form: returns `(d, u, v)` with `u * m * v = d`.
///
/// Pivoting is deterministic: the nonzero entry of minimal absolute value is
/// chosen, ties broken by row then column, so the output is reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = snf(m);
    (s.d, s.u, s.v)
}

pub fn snf(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Column operation wrappers that keep v and v_inv in sync.
    // d <- d * E  means  v <- v * E  and  v_inv <- E^{-1} * v_inv.
    let mut t = 0usize;
    'outer: while t < rows && t < cols {
        // Deterministic pivot: minimal |entry| in the trailing submatrix,
        // ties broken by (row, col).
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if d.get(r, c).is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((r, c)),
                    Some((pr, pc)) => {
                        if d.get(r, c).abs() < d.get(pr, pc).abs() {
                            pivot = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
        v_inv.swap_rows(t, pc);

        loop {
            // Clear the pivot column with row operations.
            let mut dirty = false;
            for r in t + 1..rows {
                if d.get(r, t).is_zero() {
                    continue;
                }
                let q = d.get(r, t) / d.get(t, t);
                let negq = -q;
                d.add_row_multiple(r, t, &negq);
                u.add_row_multiple(r, t, &negq);
                if !d.get(r, t).is_zero() {
                    // Remainder is strictly smaller than the pivot; promote it.
                    d.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear the pivot row with column operations.
            for c in t + 1..cols {
                if d.get(t, c).is_zero() {
                    continue;
                }
                let q = d.get(t, c) / d.get(t, t);
                let negq = -q.clone();
                d.add_col_multiple(c, t, &negq);
                v.add_col_multiple(c, t, &negq);
                v_inv.add_row_multiple(t, c, &q);
                if !d.get(t, c).is_zero() {
                    d.swap_cols(t, c);
                    v.swap_cols(t, c);
                    v_inv.swap_rows(t, c);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce that the pivot divides the rest of the submatrix.
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !d.get(r, c).mod_floor(d.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        d.add_row_multiple(t, r, &one);
                        u.add_row_multiple(t, r, &one);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    // Normalize diagonal signs.
    let mut rank = 0;
    for i in 0..rows.min(cols) {
        if d.get(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
        if !d.get(i, i).is_zero() {
            rank = i + 1;
        }
    }
    Snf { d, u, v, v_inv, rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let s = snf(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "u*m*v != d");
        // d diagonal with divisibility chain
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                if r != c {
                    assert!(s.d.get(r, c).is_zero());
                }
            }
        }
        let n = s.d.rows().min(s.d.cols());
        for i in 0..n.saturating_sub(1) {
            let a = s.d.get(i, i);
            let b = s.d.get(i + 1, i + 1);
            if !a.is_zero() {
                assert!(b.mod_floor(a).is_zero(), "divisibility chain broken");
            } else {
                assert!(b.is_zero());
            }
        }
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn identity_is_fixed() {
        let m = IntMatrix::identity(2);
        let (d, u, v) = smith_normal_form(&m);
        assert_eq!(d, IntMatrix::identity(2));
        assert_eq!(u.mul(&m).mul(&v), d);
    }

    #[test]
    fn small_example() {
        // Hand reduction gives diag(2, 4): |det| = 8, gcd of entries = 2.
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = snf(&m);
        assert_eq!(s.d.get(0, 0), &BigInt::from(2));
        assert_eq!(s.d.get(1, 1), &BigInt::from(4));
        check_snf(&m);
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zero(1, 3);
        let (d, _, _) = smith_normal_form(&m);
        assert!(d.is_zero());
        check_snf(&m);
    }

    #[test]
    fn empty_relations() {
        let m = IntMatrix::zero(0, 4);
        let s = snf(&m);
        assert_eq!(s.rank, 0);
        assert_eq!(s.v, IntMatrix::identity(4));
    }

    #[test]
    fn random_reconstruction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-20i64..=20)));
            check_snf(&m);
        }
    }

    #[test]
    fn determinant_matches_cofactor_on_small() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(m.determinant(), BigInt::from(-3));
    }
}
