//! Transitivity of the transvection group on basis vectors of length zero and on
//! symplectic pairs, restricted to a set of active hyperbolic pairs.

use super::{add_vec, is_symmetric_unit, length, scale_vec, sub_vec, Transvection, TransvectionWord};
use crate::error::{Error, Result};
use crate::localring::Elem;
use crate::matform::FormSpace;

/// `f_{-a^-1, y-x}` with `a = h(x, y)` a fixed unit; sends `x` to `y`.
fn link(space: &FormSpace, x: &[Elem], y: &[Elem]) -> Result<Transvection> {
    let ring = space.ring();
    let a = space.form(x, y);
    if !is_symmetric_unit(ring, a) {
        return Err(Error::NoSolution("consecutive vectors do not pair to a fixed unit".into()));
    }
    Ok(Transvection { a: ring.neg(ring.inv(a)?), v: sub_vec(ring, y, x) })
}

/// Word sending `path[0]` to the last vector, one link per step.
fn word_from_path(space: &FormSpace, path: &[Vec<Elem>]) -> Result<TransvectionWord> {
    let mut letters = Vec::new();
    for step in path.windows(2) {
        if step[0] != step[1] {
            letters.push(link(space, &step[0], &step[1])?);
        }
    }
    letters.reverse();
    Ok(TransvectionWord { letters })
}

fn check_length_zero_basis(space: &FormSpace, x: &[Elem]) -> Result<()> {
    space.check_vector(x)?;
    if !space.ring().is_zero(length(space, x)) {
        return Err(Error::BadVector("vector does not have length zero".into()));
    }
    if !space.is_basis_vector(x) {
        return Err(Error::BadVector("vector is not a basis vector".into()));
    }
    Ok(())
}

/// Path of pairwise-linked vectors from `x` to `u_{active[0]}`, supported on the
/// active pairs.
fn path_to_first(space: &FormSpace, x: &[Elem], active: &[usize]) -> Result<Vec<Vec<Elem>>> {
    let ring = space.ring();
    let (p0, p1) = (active[0], active[1]);
    let target = space.basis(space.u_index(p0));
    if x == target.as_slice() {
        return Ok(vec![x.to_vec()]);
    }
    if is_symmetric_unit(ring, space.form(x, &target)) {
        return Ok(vec![x.to_vec(), target]);
    }
    // x1 = h(x, e)^-1 e for a standard vector e pairing with x to a unit
    let (pair, is_u, s) = active
        .iter()
        .flat_map(|&j| [(j, true), (j, false)])
        .find_map(|(j, is_u)| {
            let idx = if is_u { space.u_index(j) } else { space.v_index(j) };
            let s = space.form(x, &space.basis(idx));
            ring.is_unit(s).then_some((j, is_u, s))
        })
        .ok_or_else(|| Error::BadVector("vector is not a basis vector".into()))?;
    let c = ring.inv(s)?;
    let (e, dual) = if is_u {
        (space.basis(space.u_index(pair)), space.basis(space.v_index(pair)))
    } else {
        (space.basis(space.v_index(pair)), scale_vec(ring, ring.from_int(-1), &space.basis(space.u_index(pair))))
    };
    let x1 = scale_vec(ring, c, &e);
    // h(x1, y) = 1
    let y = scale_vec(ring, ring.inv(ring.star(c))?, &dual);
    let v0 = space.basis(space.v_index(p0));
    let neg_v0 = scale_vec(ring, ring.from_int(-1), &v0);
    if pair != p0 {
        let z = add_vec(ring, &y, &neg_v0);
        return Ok(vec![x.to_vec(), x1, z, target]);
    }
    let z1 = add_vec(ring, &y, &space.basis(space.u_index(p1)));
    let beta = ring.sub(ring.one(), space.form(&y, &neg_v0));
    let z2 = add_vec(ring, &neg_v0, &scale_vec(ring, beta, &space.basis(space.v_index(p1))));
    Ok(vec![x.to_vec(), x1, z1, z2, target])
}

pub(crate) fn move_vector_active(
    space: &FormSpace,
    u: &[Elem],
    target: &[Elem],
    active: &[usize],
) -> Result<TransvectionWord> {
    if active.len() < 2 {
        return Err(Error::HypothesisViolated("transitivity needs at least two hyperbolic pairs".into()));
    }
    check_length_zero_basis(space, u)?;
    check_length_zero_basis(space, target)?;
    if u == target {
        return Ok(TransvectionWord::default());
    }
    let word = if is_symmetric_unit(space.ring(), space.form(u, target)) {
        word_from_path(space, &[u.to_vec(), target.to_vec()])?
    } else {
        let mut path = path_to_first(space, u, active)?;
        let mut back = path_to_first(space, target, active)?;
        back.reverse();
        path.extend(back.into_iter().skip(1));
        word_from_path(space, &path)?
    };
    if word.apply(space, u) != target {
        return Err(Error::NoSolution("transvection path does not reach the target".into()));
    }
    Ok(word)
}

/// Word whose product sends `u` to `target`; both must be basis vectors of length
/// zero and `m >= 2`.
pub fn move_vector(space: &FormSpace, u: &[Elem], target: &[Elem]) -> Result<TransvectionWord> {
    let active: Vec<usize> = (0..space.m()).collect();
    move_vector_active(space, u, target, &active)
}

pub(crate) fn check_pair(space: &FormSpace, u: &[Elem], v: &[Elem]) -> Result<()> {
    let ring = space.ring();
    space.check_vector(u)?;
    space.check_vector(v)?;
    if space.form(u, v) != ring.one() || !ring.is_zero(length(space, u)) || !ring.is_zero(length(space, v)) {
        return Err(Error::NotSymplecticPair);
    }
    Ok(())
}

pub(crate) fn move_pair_active(space: &FormSpace, u: &[Elem], v: &[Elem], active: &[usize]) -> Result<TransvectionWord> {
    check_pair(space, u, v)?;
    let ring = space.ring();
    let p0 = active[0];
    let u0 = space.basis(space.u_index(p0));
    let v0 = space.basis(space.v_index(p0));
    let first = move_vector_active(space, u, &u0, active)?;
    let mut vp = first.apply(space, v);
    let mut word = first;
    // every later letter fixes u0
    let mut pre = None;
    if vp != v0 && !is_symmetric_unit(ring, space.form(&vp, &v0)) {
        let find = |x: &[Elem]| {
            active[1..].iter().flat_map(|&j| [space.u_index(j), space.v_index(j)]).find_map(|idx| {
                let s = space.form(x, &space.basis(idx));
                ring.is_unit(s).then_some((idx, s))
            })
        };
        let (idx, s) = match find(&vp) {
            Some(found) => found,
            None => {
                let y = add_vec(ring, &u0, &space.basis(space.u_index(active[1])));
                let t = Transvection { a: ring.one(), v: y };
                vp = t.apply(space, &vp);
                pre = Some(t);
                find(&vp).ok_or_else(|| Error::NoSolution("no unit coordinate after rebasing".into()))?
            }
        };
        let alpha = space.form(&vp, &v0);
        let eps = ring.mul(ring.inv(s)?, ring.sub(ring.from_int(2), alpha));
        let z = add_vec(ring, &add_vec(ring, &v0, &u0), &scale_vec(ring, eps, &space.basis(idx)));
        let chain = word_from_path(space, &[vp.clone(), z, v0.clone()])?;
        let mut tail = TransvectionWord::default();
        if let Some(t) = pre {
            tail.letters.push(t);
        }
        word = chain.then(tail).then(word);
    } else if vp != v0 {
        word = word_from_path(space, &[vp.clone(), v0.clone()])?.then(word);
    }
    if word.apply(space, u) != u0 || word.apply(space, v) != v0 {
        return Err(Error::NoSolution("transvection word does not align the pair".into()));
    }
    Ok(word)
}

/// Word whose product sends the symplectic pair `(u, v)` to `(u_1, v_1)`; `m >= 2`.
pub fn move_pair(space: &FormSpace, u: &[Elem], v: &[Elem]) -> Result<TransvectionWord> {
    if space.m() < 2 {
        return Err(Error::HypothesisViolated("transitivity needs at least two hyperbolic pairs".into()));
    }
    let active: Vec<usize> = (0..space.m()).collect();
    move_pair_active(space, u, v, &active)
}
