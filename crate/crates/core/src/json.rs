//! JSON forms of rings, elements, matrices and words, plus a short textual ring
//! notation for command lines.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bruhat::{BruhatWord, Letter};
use crate::error::{Error, Result};
use crate::localring::{Elem, InvolutionKind, Ring, RingSpec};
use crate::matform::Mat;
use crate::transvect::{Transvection, TransvectionWord};

/// Coefficient array of a ring element, constant term first.
pub type ElemJson = Vec<i64>;

pub fn elem_to_json(ring: &Ring, a: Elem) -> ElemJson {
    ring.coeffs(a).into_iter().map(|c| c as i64).collect()
}

pub fn elem_from_json(ring: &Ring, a: &[i64]) -> Result<Elem> {
    ring.elem(a).map_err(|e| Error::SchemaError(e.to_string()))
}

pub fn vector_to_json(ring: &Ring, v: &[Elem]) -> Vec<ElemJson> {
    v.iter().map(|&a| elem_to_json(ring, a)).collect()
}

pub fn vector_from_json(ring: &Ring, v: &[ElemJson]) -> Result<Vec<Elem>> {
    v.iter().map(|a| elem_from_json(ring, a)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatJson {
    /// A `RingSpec` object, or a short form such as `"Z/25"` on input.
    #[serde(deserialize_with = "ring_spec_or_str")]
    pub ring: RingSpec,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<ElemJson>>,
}

fn ring_spec_or_str<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<RingSpec, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Short(String),
        Full(RingSpec),
    }
    match Either::deserialize(d)? {
        Either::Short(s) => s.parse().map_err(serde::de::Error::custom),
        Either::Full(r) => Ok(r),
    }
}

impl MatJson {
    pub fn from_mat(x: &Mat) -> Self {
        let ring = x.ring();
        MatJson {
            ring: ring.spec().clone(),
            rows: x.rows(),
            cols: x.cols(),
            entries: (0..x.rows())
                .map(|i| (0..x.cols()).map(|j| elem_to_json(ring, x.get(i, j))).collect())
                .collect(),
        }
    }

    /// Builds the matrix over a fresh ring with enumeration cap `cap`.
    pub fn to_mat(&self, cap: u64) -> Result<Mat> {
        self.to_mat_over(&Ring::with_cap(self.ring.clone(), cap)?)
    }

    /// Builds the matrix over `ring`, which must match the declared ring.
    pub fn to_mat_over(&self, ring: &Ring) -> Result<Mat> {
        if self.ring != *ring.spec() && Ring::with_cap(self.ring.clone(), ring.cap())? != *ring {
            return Err(Error::RingMismatch);
        }
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::SchemaError(format!("entries do not form a {}x{} array", self.rows, self.cols)));
        }
        let data = self.entries.iter().flatten().map(|a| elem_from_json(ring, a)).collect::<Result<Vec<_>>>()?;
        Mat::from_vec(ring, self.rows, self.cols, data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum LetterJson {
    Z,
    K { t: MatJson },
    V { r: MatJson },
}

pub fn word_to_json(word: &BruhatWord) -> Vec<LetterJson> {
    word.letters
        .iter()
        .map(|l| match l {
            Letter::Z => LetterJson::Z,
            Letter::K(t) => LetterJson::K { t: MatJson::from_mat(t) },
            Letter::V(r) => LetterJson::V { r: MatJson::from_mat(r) },
        })
        .collect()
}

pub fn word_from_json(ring: &Ring, word: &[LetterJson]) -> Result<BruhatWord> {
    let letters = word
        .iter()
        .map(|l| {
            Ok(match l {
                LetterJson::Z => Letter::Z,
                LetterJson::K { t } => Letter::K(t.to_mat_over(ring)?),
                LetterJson::V { r } => Letter::V(r.to_mat_over(ring)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BruhatWord::new(letters))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransvectionJson {
    pub a: ElemJson,
    pub v: Vec<ElemJson>,
}

pub fn transvections_to_json(ring: &Ring, word: &TransvectionWord) -> Vec<TransvectionJson> {
    word.letters
        .iter()
        .map(|l| TransvectionJson { a: elem_to_json(ring, l.a), v: vector_to_json(ring, &l.v) })
        .collect()
}

pub fn transvections_from_json(ring: &Ring, word: &[TransvectionJson]) -> Result<TransvectionWord> {
    let letters = word
        .iter()
        .map(|l| Ok(Transvection { a: elem_from_json(ring, &l.a)?, v: vector_from_json(ring, &l.v)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(TransvectionWord::new(letters))
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn parse_int(s: &str) -> Result<u64> {
    s.trim().parse().map_err(|_| Error::InvalidSpec(format!("expected an integer, got {s:?}")))
}

fn parse_involution(s: &str) -> Result<InvolutionKind> {
    match s {
        "trivial" => Ok(InvolutionKind::Trivial),
        "frobenius" => Ok(InvolutionKind::Frobenius),
        "negate-generator" => Ok(InvolutionKind::NegateGenerator),
        _ => Err(Error::InvalidSpec(format!("unknown involution {s:?}"))),
    }
}

/// Accepts a JSON object or the short forms `Z/N`, `F<q>` (also `GF(q)`),
/// `GR(N,2)` and `Z/N[t]/(t^2)`, optionally followed by `:<involution>`.
impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<RingSpec> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::SchemaError(e.to_string()));
        }
        let (body, inv) = match s.rsplit_once(':') {
            Some((b, i)) => (b, Some(parse_involution(i)?)),
            None => (s, None),
        };
        let pk = |n: &str| prime_power(parse_int(n)?).ok_or_else(|| Error::InvalidSpec(format!("{n} is not a prime power")));
        let spec = if let Some(n) = body.strip_prefix("Z/").and_then(|r| r.strip_suffix("[t]/(t^2)")) {
            let (p, k) = pk(n)?;
            RingSpec::dual(p, k)
        } else if let Some(n) = body.strip_prefix("Z/") {
            let (p, k) = pk(n)?;
            RingSpec::zmod(p, k)
        } else if let Some(n) = body.strip_prefix("GR(").and_then(|r| r.strip_suffix(",2)")) {
            let (p, k) = pk(n)?;
            RingSpec::galois(p, k)
        } else if let Some(q) = body.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).or_else(|| body.strip_prefix('F')) {
            match pk(q)? {
                (p, 1) => RingSpec::zmod(p, 1),
                (p, 2) => RingSpec::galois(p, 1),
                _ => return Err(Error::InvalidSpec(format!("field of order {q} is not supported"))),
            }
        } else {
            return Err(Error::InvalidSpec(format!("unrecognised ring {s:?}")));
        };
        Ok(match inv {
            Some(i) => spec.with_involution(i),
            None => spec,
        })
    }
}
