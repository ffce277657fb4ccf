use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::gp::GpFunction;
use crate::matroid::matroid_type::Matroid;
use crate::pasture::{Pasture, Unit};

/// Which Pluecker check a lift must pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    Weak,
    Strong,
}

const LIFT_CAP: u128 = 100_000_000;

/// Brute-force enumeration of the lifts of a matroid over a finite pasture,
/// one representative per projective class: the colexicographically first
/// basis is pinned to 1 and all unit assignments to the remaining bases are
/// filtered by the requested check. Deterministic order.
pub fn enumerate_lifts(m: &Matroid, p: &Pasture, mode: LiftMode) -> Result<Vec<GpFunction>> {
    let units = p.finite_units()?;
    let bases = m.bases();
    let free = bases.len() - 1;
    let needed = (units.len() as u128)
        .checked_pow(free as u32)
        .ok_or(Error::ResourceCap { needed: u128::MAX, cap: LIFT_CAP })?;
    if needed > LIFT_CAP {
        return Err(Error::ResourceCap { needed, cap: LIFT_CAP });
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; free];
    'next: loop {
        let mut values: BTreeMap<u64, Unit> = BTreeMap::new();
        values.insert(bases[0], p.one());
        for (i, &c) in choice.iter().enumerate() {
            values.insert(bases[i + 1], units.elems[c].clone());
        }
        let g = GpFunction::new(p.clone(), m.n(), m.r(), values)?;
        let ok = match mode {
            LiftMode::Weak => g.check_weak()?,
            LiftMode::Strong => g.check_strong()?,
        };
        if ok {
            out.push(g);
        }
        for i in (0..free).rev() {
            choice[i] += 1;
            if choice[i] < units.len() {
                continue 'next;
            }
            choice[i] = 0;
        }
        break;
    }
    Ok(out)
}

const ORBIT_CAP: u128 = 10_000_000;

/// Partition projective lift classes into orbits of the torus action
/// `t.D(I) = prod_{i in I} t(i) * D(I)`. Returns sorted index lists into
/// the input slice.
pub fn rescaling_orbits(lifts: &[GpFunction], p: &Pasture) -> Result<Vec<Vec<usize>>> {
    if lifts.is_empty() {
        return Ok(vec![]);
    }
    let units = p.finite_units()?;
    let n = lifts[0].n();
    let tuples = (units.len() as u128)
        .checked_pow(n as u32)
        .ok_or(Error::ResourceCap { needed: u128::MAX, cap: ORBIT_CAP })?;
    if tuples > ORBIT_CAP {
        return Err(Error::ResourceCap { needed: tuples, cap: ORBIT_CAP });
    }

    let mut parent: Vec<usize> = (0..lifts.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    let mut t = vec![0usize; n];
    'next: loop {
        let scaling: Vec<Unit> = t.iter().map(|&c| units.elems[c].clone()).collect();
        for (i, g) in lifts.iter().enumerate() {
            let h = g.rescale(&scaling);
            let j = lifts
                .iter()
                .position(|x| x.projectively_equivalent(&h))
                .expect("rescaled lift must be in the enumerated class list");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
        for i in (0..n).rev() {
            t[i] += 1;
            if t[i] < units.len() {
                continue 'next;
            }
            t[i] = 0;
        }
        break;
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..lifts.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::BuiltinName;

    #[test]
    fn u24_f3_weak_has_8_classes() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let f3 = Pasture::builtin(BuiltinName::F3).unwrap();
        let lifts = enumerate_lifts(&u24, &f3, LiftMode::Weak).unwrap();
        assert_eq!(lifts.len(), 8);
        // F3 is perfect: strong enumeration agrees.
        let strong = enumerate_lifts(&u24, &f3, LiftMode::Strong).unwrap();
        assert_eq!(strong.len(), 8);
        // One orbit of size 8.
        let orbits = rescaling_orbits(&lifts, &f3).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 8);
    }

    #[test]
    fn fano_f2_single_class() {
        let fano = Matroid::fano();
        let f2 = Pasture::builtin(BuiltinName::F2).unwrap();
        let lifts = enumerate_lifts(&fano, &f2, LiftMode::Strong).unwrap();
        assert_eq!(lifts.len(), 1);
        let orbits = rescaling_orbits(&lifts, &f2).unwrap();
        assert_eq!(orbits, vec![vec![0]]);
    }

    #[test]
    fn u12_f1pm_two_classes_one_orbit() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let f1 = Pasture::f1pm();
        let lifts = enumerate_lifts(&u12, &f1, LiftMode::Weak).unwrap();
        assert_eq!(lifts.len(), 2);
        let orbits = rescaling_orbits(&lifts, &f1).unwrap();
        assert_eq!(orbits, vec![vec![0, 1]]);
    }

    #[test]
    fn cap_refuses_oversized_enumerations() {
        let fano = Matroid::fano();
        let gf32 = Pasture::gf(32).unwrap();
        match enumerate_lifts(&fano, &gf32, LiftMode::Weak) {
            Err(Error::ResourceCap { .. }) => {}
            other => panic!("expected resource cap, got {:?}", other.map(|v| v.len())),
        }
    }
}
