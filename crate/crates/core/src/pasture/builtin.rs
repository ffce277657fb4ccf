use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Irreducible polynomials over GF(p) for the supported prime powers,
/// little-endian coefficients. Fixed here so element encodings are
/// deterministic without external data.
fn modulus_for(q: u64) -> Option<(u64, Vec<u64>)> {
    Some(match q {
        4 => (2, vec![1, 1, 1]),       // x^2 + x + 1
        8 => (2, vec![1, 1, 0, 1]),    // x^3 + x + 1
        16 => (2, vec![1, 1, 0, 0, 1]), // x^4 + x + 1
        32 => (2, vec![1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1
        9 => (3, vec![1, 0, 1]),       // x^2 + 1
        27 => (3, vec![1, 2, 0, 1]),   // x^3 + 2x + 1
        25 => (5, vec![2, 0, 1]),      // x^2 + 2
        _ => return None,
    })
}

/// Arithmetic tables for GF(q), q a prime power <= 32.
///
/// Elements are polynomial residues with coefficients in GF(p); the unit
/// group is cyclic, generated by a deterministically chosen primitive
/// element. Units are exponent words over the generators `[eps, g]`.
#[derive(Debug)]
pub struct GfTable {
    q: u64,
    p: u64,
    deg: usize,
    modulus: Vec<u64>,
    /// powers[k] = g^k as a coefficient vector, k in 0..q-1.
    powers: Vec<Vec<u64>>,
    log: BTreeMap<Vec<u64>, u64>,
    eps_log: u64,
}

impl PartialEq for GfTable {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for GfTable {}

impl GfTable {
    pub fn new(q: u64) -> Result<GfTable> {
        let (p, deg, modulus) = if let Some((p, m)) = modulus_for(q) {
            (p, m.len() - 1, m)
        } else if q >= 2 && q <= 32 && is_prime(q) {
            (q, 1, vec![0, 1])
        } else {
            return Err(Error::UnsupportedField(q));
        };
        let mut table = GfTable { q, p, deg, modulus, powers: vec![], log: BTreeMap::new(), eps_log: 0 };
        let g = table.find_primitive();
        let mut powers = Vec::with_capacity((q - 1) as usize);
        let mut log = BTreeMap::new();
        let mut cur = table.one_elem();
        for k in 0..q - 1 {
            powers.push(cur.clone());
            log.insert(cur.clone(), k);
            cur = table.mul_elem(&cur, &g);
        }
        table.powers = powers;
        table.log = log;
        table.eps_log = if q % 2 == 0 { 0 } else { (q - 1) / 2 };
        debug_assert_eq!(
            table.powers[table.eps_log as usize],
            table.neg_elem(&table.one_elem()),
            "eps must be -1"
        );
        Ok(table)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn eps_log(&self) -> u64 {
        self.eps_log
    }

    fn one_elem(&self) -> Vec<u64> {
        let mut e = vec![0; self.deg];
        e[0] = 1;
        e
    }

    fn neg_elem(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&c| (self.p - c % self.p) % self.p).collect()
    }

    fn add_elem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    fn mul_elem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.deg - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce modulo the monic modulus polynomial.
        for i in (self.deg..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(self.deg) {
                let idx = i - self.deg + j;
                prod[idx] = (prod[idx] + c * (self.p - m % self.p)) % self.p;
            }
        }
        prod.truncate(self.deg);
        prod
    }

    fn find_primitive(&self) -> Vec<u64> {
        // Deterministic: first element in lex coefficient order whose
        // multiplicative order is q - 1.
        let total = self.q;
        for code in 1..total {
            let mut elem = Vec::with_capacity(self.deg);
            let mut c = code;
            for _ in 0..self.deg {
                elem.push(c % self.p);
                c /= self.p;
            }
            let mut cur = elem.clone();
            let mut order = 1u64;
            while cur != self.one_elem() {
                cur = self.mul_elem(&cur, &elem);
                order += 1;
                if order > self.q {
                    order = 0; // zero divisor cannot happen; guards loops
                    break;
                }
            }
            if order == self.q - 1 {
                return elem;
            }
        }
        unreachable!("GF(q) has a primitive element")
    }

    /// Relations of the unit group presentation on `[eps, g]`.
    pub fn unit_relations(&self) -> IntMatrix {
        let m = (self.q - 1) as i64;
        IntMatrix::from_rows(&[vec![0, m], vec![1, -(self.eps_log as i64)]])
    }

    /// Canonical word `[0, k]` with `k` in `[0, q-1)`.
    pub fn canonical(&self, word: &[BigInt]) -> Vec<BigInt> {
        let m = BigInt::from(self.q - 1);
        let k = (&word[1] + &word[0] * BigInt::from(self.eps_log)).mod_floor(&m);
        vec![BigInt::zero(), k]
    }

    /// Add the field element `g^k` (for canonicalized `word`) into `acc`.
    pub fn accumulate(&self, acc: &mut [u64], word: &[BigInt]) {
        let w = self.canonical(word);
        let k = w[1].to_u64().expect("canonical exponent fits");
        let sum = self.add_elem(acc, &self.powers[k as usize]);
        acc.copy_from_slice(&sum);
    }

    /// Field element (coefficient vector) for a canonical unit word.
    pub fn coeffs_of(&self, word: &[BigInt]) -> Vec<u64> {
        let w = self.canonical(word);
        let k = w[1].to_u64().expect("canonical exponent fits");
        self.powers[k as usize].clone()
    }

    /// Unit word for a nonzero field element given by coefficients.
    pub fn word_of_coeffs(&self, coeffs: &[u64]) -> Option<Vec<BigInt>> {
        let c: Vec<u64> = coeffs.iter().map(|&x| x % self.p).collect();
        if c.iter().all(|&x| x == 0) {
            return None;
        }
        let k = *self.log.get(&c)?;
        Some(vec![BigInt::zero(), BigInt::from(k)])
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
