use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::{AbelianPresentation, RowLattice};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::pasture::element::{FormalSum, Unit};

/// A finitely presented pasture: a unit group presentation with `eps` as
/// generator 0 plus a list of formal null-sum generators. The null set is the
/// ideal they generate together with the implicit `1 + eps`.
#[derive(Clone, Debug)]
pub struct PresentedPasture {
    pub unit_group: AbelianPresentation,
    pub null_generators: Vec<FormalSum>,
    pub collapsed: bool,
    lattice: RowLattice,
    /// Maximum generator length; null queries are decided up to
    /// `max_gen_len + max(max_gen_len, 3)`.
    max_gen_len: usize,
}

impl PartialEq for PresentedPasture {
    fn eq(&self, other: &Self) -> bool {
        self.collapsed == other.collapsed
            && self.unit_group == other.unit_group
            && self.null_generators == other.null_generators
    }
}
impl Eq for PresentedPasture {}

impl PresentedPasture {
    /// Build a presented pasture. Generator 0 must be labelled `eps`; the
    /// relation `2 eps = 0` is added if missing. Null generators are
    /// canonicalized against the unit group relations.
    pub fn new(unit_group: AbelianPresentation, null_generators: Vec<FormalSum>) -> Self {
        assert!(
            unit_group.num_generators() > 0 && unit_group.generator_labels[0] == "eps",
            "generator 0 must be eps"
        );
        let n = unit_group.num_generators();
        let mut rel_rows: Vec<Vec<BigInt>> =
            (0..unit_group.relations.rows()).map(|i| unit_group.relations.row_vec(i)).collect();
        let mut two_eps = vec![BigInt::zero(); n];
        two_eps[0] = BigInt::from(2);
        rel_rows.push(two_eps);
        let relations = IntMatrix::from_bigint_rows(rel_rows, n);
        let unit_group = AbelianPresentation::new(unit_group.generator_labels, relations);
        let lattice = RowLattice::new(&unit_group.relations);
        let mut p = PresentedPasture {
            unit_group,
            null_generators: vec![],
            collapsed: false,
            lattice,
            max_gen_len: 2,
        };
        p.null_generators = null_generators
            .into_iter()
            .map(|s| p.canonical_sum(&s))
            .collect();
        p.normalize_generator_list();
        p
    }

    /// The regular partial field as a presented pasture.
    pub fn f1pm() -> Self {
        let pres = AbelianPresentation::free(vec!["eps".into()]);
        PresentedPasture::new(pres, vec![])
    }

    /// The field with two elements as a presented pasture: `eps = 1`.
    pub fn f2() -> Self {
        let pres = AbelianPresentation::new(
            vec!["eps".into()],
            IntMatrix::from_rows(&[vec![1]]),
        );
        PresentedPasture::new(pres, vec![])
    }

    pub fn collapsed_pasture() -> Self {
        let pres = AbelianPresentation::free(vec!["eps".into()]);
        let lattice = RowLattice::new(&pres.relations);
        PresentedPasture {
            unit_group: pres,
            null_generators: vec![],
            collapsed: true,
            lattice,
            max_gen_len: 2,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.unit_group.num_generators()
    }

    pub fn is_trivial(&self) -> bool {
        self.collapsed
    }

    pub(crate) fn canonicalize(&self, word: Vec<BigInt>) -> Result<Unit> {
        if self.collapsed {
            return Err(Error::CollapsedPasture);
        }
        Ok(Unit::Word(self.lattice.reduce(&word)))
    }

    fn one_word(&self) -> Unit {
        Unit::Word(self.lattice.reduce(&vec![BigInt::zero(); self.num_generators()]))
    }

    fn eps_word(&self) -> Unit {
        let mut w = vec![BigInt::zero(); self.num_generators()];
        w[0] = BigInt::one();
        Unit::Word(self.lattice.reduce(&w))
    }

    fn mul_units(&self, a: &Unit, b: &Unit) -> Unit {
        let (Unit::Word(x), Unit::Word(y)) = (a, b) else { panic!("word units expected") };
        Unit::Word(self.lattice.reduce(&x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>()))
    }

    fn inv_unit(&self, a: &Unit) -> Unit {
        let Unit::Word(x) = a else { panic!("word units expected") };
        Unit::Word(self.lattice.reduce(&x.iter().map(|p| -p).collect::<Vec<_>>()))
    }

    fn canonical_sum(&self, s: &FormalSum) -> FormalSum {
        FormalSum::from_units(
            s.terms()
                .iter()
                .map(|u| {
                    let Unit::Word(w) = u else { panic!("word units expected") };
                    Unit::Word(self.lattice.reduce(w))
                })
                .collect(),
        )
    }

    /// Canonical representative of a sum modulo multiplication by a unit:
    /// the least among the sums rescaled so that one term becomes 1.
    pub fn canonical_sum_mod_scaling(&self, s: &FormalSum) -> FormalSum {
        let mut best: Option<FormalSum> = None;
        for t in s.terms() {
            let inv = self.inv_unit(t);
            let scaled = FormalSum::from_units(
                s.terms().iter().map(|u| self.mul_units(u, &inv)).collect(),
            );
            if best.as_ref().is_none_or(|b| scaled < *b) {
                best = Some(scaled);
            }
        }
        best.unwrap_or_else(|| s.clone())
    }

    fn normalize_generator_list(&mut self) {
        let mut gens: Vec<FormalSum> = self
            .null_generators
            .iter()
            .map(|s| self.canonical_sum_mod_scaling(s))
            .collect();
        gens.sort();
        gens.dedup();
        self.null_generators = gens;
        self.max_gen_len =
            self.null_generators.iter().map(|g| g.len()).max().unwrap_or(0).max(2);
    }

    /// Saturate to a fixed point of the pasteurization rewrite rules:
    /// a 1-term null generator collapses the pasture to `{0}`; a 2-term null
    /// generator `u + v` imposes the group relation `v = eps * u`. Generators
    /// of the shape `u + eps*u` are implied by `0 <= 1 + eps` and dropped.
    pub fn pasteurize(&self) -> PresentedPasture {
        if self.collapsed {
            return self.clone();
        }
        let n = self.num_generators();
        let labels = self.unit_group.generator_labels.clone();
        let mut rel_rows: Vec<Vec<BigInt>> = (0..self.unit_group.relations.rows())
            .map(|i| self.unit_group.relations.row_vec(i))
            .collect();
        let mut gens: Vec<FormalSum> = self.null_generators.clone();
        let mut lattice = self.lattice.clone();

        loop {
            // Re-canonicalize against the current relation lattice.
            let canon = |s: &FormalSum, lat: &RowLattice| {
                FormalSum::from_units(
                    s.terms()
                        .iter()
                        .map(|u| {
                            let Unit::Word(w) = u else { panic!("word units expected") };
                            Unit::Word(lat.reduce(w))
                        })
                        .collect(),
                )
            };
            gens = gens.iter().map(|s| canon(s, &lattice)).collect();
            gens.sort();
            gens.dedup();
            gens.retain(|g| !g.is_empty());

            if gens.iter().any(|g| g.len() == 1) {
                return PresentedPasture::collapsed_pasture();
            }

            let mut new_relation: Option<Vec<BigInt>> = None;
            let mut drop_idx: Option<usize> = None;
            for (i, g) in gens.iter().enumerate() {
                if g.len() != 2 {
                    continue;
                }
                let (Unit::Word(u), Unit::Word(v)) = (&g.terms()[0], &g.terms()[1]) else {
                    panic!("word units expected")
                };
                // v = eps * u, i.e. v - u - eps lies in the relation lattice.
                let mut rel: Vec<BigInt> = v.iter().zip(u).map(|(a, b)| a - b).collect();
                rel[0] -= BigInt::one();
                if lattice.contains(&rel) {
                    drop_idx = Some(i); // already of the form u + eps*u
                    break;
                }
                new_relation = Some(rel);
                drop_idx = Some(i);
                break;
            }

            match (new_relation, drop_idx) {
                (Some(rel), Some(i)) => {
                    gens.remove(i);
                    rel_rows.push(rel);
                    let relations = IntMatrix::from_bigint_rows(rel_rows.clone(), n);
                    lattice = RowLattice::new(&relations);
                }
                (None, Some(i)) => {
                    gens.remove(i);
                }
                _ => break,
            }
        }

        let relations = IntMatrix::from_bigint_rows(rel_rows, n);
        let unit_group = AbelianPresentation::new(labels, relations);
        let mut p = PresentedPasture {
            lattice: RowLattice::new(&unit_group.relations),
            unit_group,
            null_generators: gens,
            collapsed: false,
            max_gen_len: 2,
        };
        p.normalize_generator_list();
        p
    }

    pub fn eps_is_one(&self) -> bool {
        !self.collapsed && self.eps_word() == self.one_word()
    }

    /// Decision bound for null-sum queries.
    pub fn null_bound(&self) -> usize {
        self.max_gen_len + self.max_gen_len.max(3)
    }

    /// Bounded null decision: true iff the sum decomposes as a multiset union
    /// of unit multiples of null generators (including the implicit
    /// `1 + eps`). Complete for the lengths this artifact constructs; longer
    /// queries raise an explicit error rather than returning a silent false.
    pub fn is_null(&self, s: &FormalSum) -> Result<bool> {
        if s.is_empty() {
            return Ok(true);
        }
        if self.collapsed {
            // Every sum over {0} is the zero sum.
            return Ok(true);
        }
        let bound = self.null_bound();
        if s.len() > bound {
            return Err(Error::UndecidedAtBound { len: s.len(), bound });
        }
        let sum = self.canonical_sum(s);
        let mut gens: Vec<FormalSum> = self.null_generators.clone();
        gens.push(FormalSum::from_units(vec![self.one_word(), self.eps_word()]));
        Ok(self.decompose(&sum, &gens))
    }

    fn decompose(&self, s: &FormalSum, gens: &[FormalSum]) -> bool {
        if s.is_empty() {
            return true;
        }
        let first = &s.terms()[0];
        for g in gens {
            if g.len() > s.len() {
                continue;
            }
            // Scale g so that one of its terms matches the first term of s.
            let mut tried: Vec<Unit> = Vec::new();
            for t in g.terms() {
                let a = self.mul_units(first, &self.inv_unit(t));
                if tried.contains(&a) {
                    continue;
                }
                tried.push(a.clone());
                let scaled = FormalSum::from_units(
                    g.terms().iter().map(|u| self.mul_units(u, &a)).collect(),
                );
                if let Some(rest) = s.checked_sub(&scaled) {
                    if self.decompose(&rest, gens) {
                        return true;
                    }
                }
            }
        }
        false
    }
}
