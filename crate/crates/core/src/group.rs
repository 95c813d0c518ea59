//! Finite matrix groups given by generators.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::matform::Mat;

/// All elements of the group generated by `gens` (square, invertible, same size).
pub fn closure(gens: &[Mat], cap: u64) -> Result<Vec<Mat>> {
    let first = gens.first().ok_or_else(|| Error::BadParameter("no generators".into()))?;
    let id = Mat::identity(first.ring(), first.rows());
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id.clone()]);
    seen.insert(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.try_mul(g)?;
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::TooLarge { size: seen.len() as u128 + 1, cap });
                }
                seen.insert(y.clone());
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

pub fn commutator(a: &Mat, b: &Mat) -> Result<Mat> {
    let ai = a.inverse()?;
    let bi = b.inverse()?;
    Ok(&(&(a * b) * &ai) * &bi)
}

/// The commutator subgroup of `<gens>`: the normal closure of the commutators of
/// pairs of generators.
pub fn derived_subgroup(gens: &[Mat], cap: u64) -> Result<Vec<Mat>> {
    let first = gens.first().ok_or_else(|| Error::BadParameter("no generators".into()))?;
    let id = Mat::identity(first.ring(), first.rows());
    let mut hgens: Vec<Mat> = Vec::new();
    for a in gens {
        for b in gens {
            let c = commutator(a, b)?;
            if !c.is_identity() && !hgens.contains(&c) {
                hgens.push(c);
            }
        }
    }
    if hgens.is_empty() {
        return Ok(vec![id]);
    }
    let inverses = gens.iter().map(|g| g.inverse()).collect::<Result<Vec<_>>>()?;
    loop {
        let h = closure(&hgens, cap)?;
        let set: HashSet<&Mat> = h.iter().collect();
        let mut extra = None;
        'search: for (s, si) in gens.iter().zip(&inverses) {
            for c in &hgens {
                let x = &(s * c) * si;
                if !set.contains(&x) {
                    extra = Some(x);
                    break 'search;
                }
            }
        }
        match extra {
            Some(x) => hgens.push(x),
            None => return Ok(h),
        }
    }
}
