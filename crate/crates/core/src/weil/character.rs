//! Additive characters, Gauss sums and the sign character `mu`.

use serde::Serialize;

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::localring::{Elem, Ring};

/// `lambda_c(r) = zeta_N^{phi(c r)}` where `N = p^k` and `phi` reads the last
/// coordinate of an element (the identity on `Z/p^k`).
#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveCharacter {
    ring: Ring,
    c: Elem,
}

impl AdditiveCharacter {
    pub fn new(ring: &Ring, c: Elem) -> Self {
        AdditiveCharacter { ring: ring.clone(), c }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn parameter(&self) -> Elem {
        self.c
    }

    /// Conductor `N` of the values.
    pub fn conductor(&self) -> u64 {
        self.ring.char_modulus()
    }

    /// `e` with `lambda(r) = zeta_N^e`.
    pub fn exponent(&self, r: Elem) -> u64 {
        let x = self.ring.mul(self.c, r);
        x.coeffs()[self.ring.degree() - 1]
    }

    pub fn value(&self, r: Elem) -> CycNum {
        CycNum::root_of_unity(self.conductor(), self.exponent(r) as i64)
    }

    /// `lambda[k](r) = lambda(k r)`.
    pub fn twist(&self, k: Elem) -> Self {
        AdditiveCharacter { ring: self.ring.clone(), c: self.ring.mul(self.c, k) }
    }

    /// A character is primitive when its kernel contains no nonzero ideal, which
    /// amounts to being nontrivial on the unique minimal ideal.
    pub fn is_primitive(&self) -> Result<bool> {
        let minimal = self.ring.minimal_ideal()?;
        Ok(minimal.iter().any(|&x| self.exponent(x) != 0))
    }

    /// `G(lambda) = sum_r lambda(r^2)`.
    pub fn gauss_sum(&self) -> CycNum {
        let n = self.conductor();
        let mut counts = vec![0i64; n as usize];
        for r in self.ring.iter() {
            counts[self.exponent(self.ring.mul(r, r)) as usize] += 1;
        }
        CycNum::from_exponent_counts(n, &counts)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterInfo {
    pub parameter: Vec<u64>,
    pub primitive: bool,
}

/// Every character `lambda_c`, flagged primitive or not.
pub fn primitive_characters(ring: &Ring) -> Result<Vec<(AdditiveCharacter, bool)>> {
    let minimal = ring.minimal_ideal()?;
    Ok(ring
        .enumerate()?
        .into_iter()
        .map(|c| {
            let ch = AdditiveCharacter::new(ring, c);
            let prim = minimal.iter().any(|&x| ch.exponent(x) != 0);
            (ch, prim)
        })
        .collect())
}

/// `d` with `|R| = q^d`.
pub fn residue_exponent(ring: &Ring) -> u32 {
    let (mut size, q, mut d) = (ring.size(), ring.q(), 0);
    while size > 1 {
        size /= q;
        d += 1;
    }
    d
}

/// The sign character of `R^x`: trivial when `|R| = q^d` with `d` even, otherwise
/// `+1` on squares and `-1` elsewhere.
pub fn mu(ring: &Ring, r: Elem) -> Result<i64> {
    if !ring.is_unit(r) {
        return Err(Error::NotAUnit(ring.fmt_elem(r)));
    }
    if residue_exponent(ring).is_multiple_of(2) {
        return Ok(1);
    }
    Ok(if ring.is_unit_square(r) { 1 } else { -1 })
}

/// `mu` tabulated over element indices (zero on non-units).
pub fn mu_table(ring: &Ring) -> Vec<i64> {
    let even = residue_exponent(ring).is_multiple_of(2);
    let squares = ring.unit_square_table();
    ring.iter()
        .map(|r| {
            if !ring.is_unit(r) {
                0
            } else if even || squares[ring.index(r)] {
                1
            } else {
                -1
            }
        })
        .collect()
}
