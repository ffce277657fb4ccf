//! Textual element grammar, bit-exact as consumed and emitted by the CLI.
//!
//! Zero is `"0"`. Units: `F1pm` and `S` use `"1"`/`"-1"`; `GF(p)` uses the
//! decimal value; `GF(p^k)` uses comma-joined coefficient vectors (constant
//! coefficient first); `T` uses `"num/den"`; presented pastures use
//! `"eps^a*g1^e1*..."` over the generator labels.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::pasture::element::{PastureElement, Unit};
use crate::pasture::{BuiltinName, Pasture, Repr};

/// Canonical name of a builtin pasture.
pub fn pasture_name(p: &Pasture) -> Option<String> {
    match &*p.0 {
        Repr::F1pm => Some("F1pm".into()),
        Repr::Krasner => Some("K".into()),
        Repr::Sign => Some("S".into()),
        Repr::Gf(t) => Some(match t.q() {
            2 => "F2".into(),
            3 => "F3".into(),
            q => format!("GF{q}"),
        }),
        Repr::Tropical => Some("T".into()),
        Repr::Presented(_) => None,
    }
}

/// Parse a builtin pasture name as used on the command line:
/// `F1pm`, `K`, `S`, `F2`, `F3`, `GF4`, ..., `T`.
pub fn parse_pasture_name(name: &str) -> Result<Pasture> {
    let builtin = match name {
        "F1pm" => BuiltinName::F1pm,
        "K" => BuiltinName::K,
        "S" => BuiltinName::S,
        "F2" => BuiltinName::F2,
        "F3" => BuiltinName::F3,
        "T" => BuiltinName::T,
        _ => {
            if let Some(qs) = name.strip_prefix("GF") {
                let q: u64 =
                    qs.parse().map_err(|_| Error::Parse(format!("bad pasture name {name:?}")))?;
                BuiltinName::Gf(q)
            } else {
                return Err(Error::Parse(format!("unknown pasture name {name:?}")));
            }
        }
    };
    Pasture::builtin(builtin)
}

pub fn format_element(p: &Pasture, e: &PastureElement) -> String {
    match e {
        PastureElement::Zero => "0".into(),
        PastureElement::Unit(u) => format_unit(p, u),
    }
}

pub fn format_unit(p: &Pasture, u: &Unit) -> String {
    match (&*p.0, u) {
        (Repr::F1pm | Repr::Sign, Unit::Word(w)) => {
            if w[0].is_zero() {
                "1".into()
            } else {
                "-1".into()
            }
        }
        (Repr::Krasner, Unit::Word(_)) => "1".into(),
        (Repr::Gf(t), Unit::Word(w)) => {
            let coeffs = t.coeffs_of(w);
            if t.deg() == 1 {
                format!("{}", coeffs[0])
            } else {
                coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            }
        }
        (Repr::Tropical, Unit::Trop(r)) => format!("{}/{}", r.numer(), r.denom()),
        (Repr::Presented(pp), Unit::Word(w)) => {
            let mut parts = Vec::new();
            for (i, e) in w.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                parts.push(format!("{}^{}", pp.unit_group.generator_labels[i], e));
            }
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        }
        _ => panic!("unit representation does not match pasture"),
    }
}

pub fn parse_element(p: &Pasture, s: &str) -> Result<PastureElement> {
    let s = s.trim();
    if s == "0" {
        return Ok(PastureElement::Zero);
    }
    let unit = match &*p.0 {
        Repr::F1pm | Repr::Sign => match s {
            "1" => p.one(),
            "-1" => p.eps(),
            _ => return Err(Error::Parse(format!("bad unit {s:?}"))),
        },
        Repr::Krasner => match s {
            "1" => p.one(),
            _ => return Err(Error::Parse(format!("bad unit {s:?}"))),
        },
        Repr::Gf(t) => {
            let coeffs: Vec<u64> = s
                .split(',')
                .map(|c| c.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad GF element {s:?}")))?;
            if coeffs.len() != t.deg() {
                return Err(Error::Parse(format!(
                    "GF({}) elements need {} coefficients, got {}",
                    t.q(),
                    t.deg(),
                    coeffs.len()
                )));
            }
            let word = t
                .word_of_coeffs(&coeffs)
                .ok_or_else(|| Error::Parse(format!("{s:?} is not a unit of GF({})", t.q())))?;
            Unit::Word(word)
        }
        Repr::Tropical => {
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let n: BigInt =
                num.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let d: BigInt =
                den.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if !n.is_positive() || !d.is_positive() {
                return Err(Error::Parse(format!("tropical units are positive, got {s:?}")));
            }
            Unit::Trop(BigRational::new(n, d))
        }
        Repr::Presented(pp) => {
            if pp.collapsed {
                return Err(Error::CollapsedPasture);
            }
            let mut word = vec![BigInt::zero(); pp.num_generators()];
            if s != "1" {
                for part in s.split('*') {
                    let (name, exp) = match part.split_once('^') {
                        Some((n, e)) => (n.trim(), e.trim()),
                        None => (part.trim(), "1"),
                    };
                    let idx = pp
                        .unit_group
                        .generator_labels
                        .iter()
                        .position(|l| l == name)
                        .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
                    let e: BigInt =
                        exp.parse().map_err(|_| Error::Parse(format!("bad exponent {exp:?}")))?;
                    word[idx] += e;
                }
            }
            p.canonicalize(word)?
        }
    };
    Ok(PastureElement::Unit(unit))
}

/// Round-trip helper used by GP-function JSON.
pub fn parse_unit(p: &Pasture, s: &str) -> Result<Unit> {
    match parse_element(p, s)? {
        PastureElement::Zero => Err(Error::Parse("expected a unit, got 0".into())),
        PastureElement::Unit(u) => Ok(u),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_builtins() {
        let cases: Vec<(Pasture, Vec<&str>)> = vec![
            (Pasture::f1pm(), vec!["0", "1", "-1"]),
            (Pasture::sign(), vec!["0", "1", "-1"]),
            (Pasture::krasner(), vec!["0", "1"]),
            (Pasture::builtin(BuiltinName::F3).unwrap(), vec!["0", "1", "2"]),
            (Pasture::gf(5).unwrap(), vec!["0", "1", "2", "3", "4"]),
            (Pasture::gf(4).unwrap(), vec!["0", "1,0", "0,1", "1,1"]),
            (Pasture::tropical(), vec!["0", "1/1", "3/2", "7/3"]),
        ];
        for (p, strings) in cases {
            for s in strings {
                let e = parse_element(&p, s).unwrap();
                assert_eq!(format_element(&p, &e), s, "in {:?}", pasture_name(&p));
            }
        }
    }

    #[test]
    fn tropical_integer_shorthand() {
        let t = Pasture::tropical();
        let e = parse_element(&t, "3").unwrap();
        assert_eq!(format_element(&t, &e), "3/1");
    }

    #[test]
    fn names_roundtrip() {
        for n in ["F1pm", "K", "S", "F2", "F3", "GF4", "GF27", "T"] {
            let p = parse_pasture_name(n).unwrap();
            assert_eq!(pasture_name(&p).unwrap(), n);
        }
        assert!(parse_pasture_name("GF6").is_err());
        assert!(parse_pasture_name("nope").is_err());
    }
}
