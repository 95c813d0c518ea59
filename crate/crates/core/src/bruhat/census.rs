//! Counting invertible symmetric matrices over a finite field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::localring::{Family, Ring};
use crate::matform::{symmetric_matrices, Mat};

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub m: usize,
    /// Size of the fixed field of the involution.
    pub q: u64,
    pub symmetric: u64,
    pub invertible_symmetric: u64,
    /// `invertible_symmetric / symmetric` in lowest terms.
    pub ratio: (u64, u64),
    /// `1 - q/(q^2 - 1)` in lowest terms.
    pub bound: (u64, u64),
    pub exceeds_bound: bool,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn reduced(a: u64, b: u64) -> (u64, u64) {
    let g = gcd(a, b).max(1);
    (a / g, b / g)
}

/// Counts `A^s` and `A^x ∩ A^s` for `A = M(m, F)` and compares the ratio with
/// `1 - q/(q^2-1)`, `q` being the size of the fixed field.
pub fn symmetric_unit_census(ring: &Ring, m: usize) -> Result<CensusReport> {
    if ring.k() != 1 || ring.family() == Family::RamifiedDual {
        return Err(Error::BadParameter("census needs a finite field".into()));
    }
    let q = ring.fixed_ring().size();
    let all = symmetric_matrices(ring, m)?;
    let units = all.iter().filter(|x| x.is_invertible()).count() as u64;
    let total = all.len() as u64;
    let bound = reduced(q * q - 1 - q, q * q - 1);
    let exceeds = (units as u128) * (bound.1 as u128) > (bound.0 as u128) * (total as u128);
    Ok(CensusReport {
        m,
        q,
        symmetric: total,
        invertible_symmetric: units,
        ratio: reduced(units, total),
        bound,
        exceeds_bound: exceeds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftedInverseReport {
    /// `M^-1 - b`.
    pub difference: String,
    /// Whether `M^-1 - b` is invertible, i.e. `M` lies in `(A^x ∩ A^s + b)^-1`.
    pub difference_invertible: bool,
    /// `|{s in A^x ∩ A^s : s + b invertible}|`.
    pub shifted_count: u64,
    pub invertible_symmetric: u64,
}

/// Tests whether `mm` lies in `(A^x ∩ A^s + b)^-1` and counts that set.
pub fn shifted_inverse_check(ring: &Ring, b: &Mat, mm: &Mat) -> Result<ShiftedInverseReport> {
    let m = b.rows();
    if !b.is_symmetric() || !mm.is_symmetric() {
        return Err(Error::BadParameter("b and M must be symmetric".into()));
    }
    let diff = mm.inverse()?.try_sub(b)?;
    let units: Vec<Mat> = symmetric_matrices(ring, m)?.into_iter().filter(|x| x.is_invertible()).collect();
    let shifted = units.iter().filter(|s| (*s + b).is_invertible()).count() as u64;
    Ok(ShiftedInverseReport {
        difference: diff.to_string(),
        difference_invertible: diff.is_invertible(),
        shifted_count: shifted,
        invertible_symmetric: units.len() as u64,
    })
}
