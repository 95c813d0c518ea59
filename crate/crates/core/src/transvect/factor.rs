//! Factorization into transvections, Witt extension and perfectness.

use serde::Serialize;

use super::transitive::{check_pair, move_pair_active};
use super::{Transvection, TransvectionWord};
use crate::error::{Error, Result};
use crate::group::{closure, derived_subgroup};
use crate::localring::{Elem, Ring};
use crate::matform::{FormSpace, Mat};

/// `U_b = f_{b,u_p}` and `L_c = f_{-c,v_p}` in hyperbolic pair `p`.
fn upper(space: &FormSpace, p: usize, b: Elem) -> Transvection {
    Transvection { a: b, v: space.basis(space.u_index(p)) }
}

fn lower(space: &FormSpace, p: usize, c: Elem) -> Transvection {
    Transvection { a: space.ring().neg(c), v: space.basis(space.v_index(p)) }
}

/// Word in `U`, `L` letters of pair `p` for `[[a, b], [c, d]]` of determinant one
/// with entries fixed by the involution.
fn sl2_in_pair(space: &FormSpace, p: usize, [a, b, c, d]: [Elem; 4]) -> Result<TransvectionWord> {
    let ring = space.ring();
    if [a, b, c, d].iter().any(|&x| !ring.is_symmetric(x)) || ring.sub(ring.mul(a, d), ring.mul(b, c)) != ring.one() {
        return Err(Error::NotInSL2R);
    }
    let mut letters = Vec::new();
    let mut push = |t: Transvection| {
        if !ring.is_zero(t.a) {
            letters.push(t);
        }
    };
    if let Some(ci) = ring.try_inv(c) {
        // U_{(a-1)/c} L_c U_{(d-1)/c}
        push(upper(space, p, ring.mul(ring.sub(a, ring.one()), ci)));
        push(lower(space, p, c));
        push(upper(space, p, ring.mul(ring.sub(d, ring.one()), ci)));
    } else {
        // L_{c/a} diag(a, a^-1) U_{b/a}, with diag(a, a^-1) = w_a w_-1
        let ai = ring.inv(a)?;
        push(lower(space, p, ring.mul(c, ai)));
        if a != ring.one() {
            let m1 = ring.from_int(-1);
            push(upper(space, p, a));
            push(lower(space, p, ring.neg(ai)));
            push(upper(space, p, a));
            push(upper(space, p, m1));
            push(lower(space, p, ring.one()));
            push(upper(space, p, m1));
        }
        push(upper(space, p, ring.mul(ai, b)));
    }
    Ok(TransvectionWord { letters })
}

/// Word in `U_b = f_{b,u_1}` and `L_c = f_{-c,v_1}` with product `x in SL(2, R)`.
pub fn sl2_factor(x: &Mat) -> Result<TransvectionWord> {
    if x.rows() != 2 || x.cols() != 2 {
        return Err(Error::DimMismatch("sl2_factor needs a 2x2 matrix".into()));
    }
    let space = FormSpace::new(x.ring(), 1);
    sl2_in_pair(&space, 0, [x.get(0, 0), x.get(0, 1), x.get(1, 0), x.get(1, 1)])
}

/// Peels off one hyperbolic pair at a time, then finishes in `SL(2, R)`.
fn factor_unitary(space: &FormSpace, x: &Mat) -> Result<TransvectionWord> {
    let m = space.m();
    let mut cur = x.clone();
    let mut peeled = Vec::new();
    for i in 0..m.saturating_sub(1) {
        let active: Vec<usize> = (i..m).collect();
        let col = |idx: usize| (0..space.dim()).map(|r| cur.get(r, idx)).collect::<Vec<Elem>>();
        let (xu, xv) = (col(space.u_index(i)), col(space.v_index(i)));
        let w = move_pair_active(space, &xu, &xv, &active)?;
        cur = w.eval(space)?.try_mul(&cur)?;
        peeled.push(w);
    }
    let p = m - 1;
    let (iu, iv) = (space.u_index(p), space.v_index(p));
    for r in 0..space.dim() {
        for c in 0..space.dim() {
            let inside = (r == iu || r == iv) && (c == iu || c == iv);
            let want = if inside || r != c { space.ring().zero() } else { space.ring().one() };
            if !inside && cur.get(r, c) != want {
                return Err(Error::NoSolution("reduction left the last pair's complement moved".into()));
            }
        }
    }
    let base = sl2_in_pair(space, p, [cur.get(iu, iu), cur.get(iu, iv), cur.get(iv, iu), cur.get(iv, iv)])?;
    let ring = space.ring();
    let word = peeled.iter().fold(TransvectionWord::default(), |acc, w| acc.then(w.inverse(ring))).then(base);
    if word.eval(space)? != *x {
        return Err(Error::NoSolution("transvection word does not evaluate to the input".into()));
    }
    Ok(word)
}

/// Transvection word with product `x in SU(2m, S)`.
pub fn su_factor(space: &FormSpace, x: &Mat) -> Result<TransvectionWord> {
    space.check_matrix(x)?;
    if !space.is_special_unitary(x) {
        return Err(Error::NotInSU);
    }
    factor_unitary(space, x).map_err(|e| match e {
        Error::NotInSL2R => Error::NotInSU,
        e => e,
    })
}

/// Transvection word with product `x in Sp(2m, R)`, trivial involution.
pub fn sp_factor(space: &FormSpace, x: &Mat) -> Result<TransvectionWord> {
    space.check_matrix(x)?;
    if !space.ring().has_trivial_involution() {
        return Err(Error::HypothesisViolated("symplectic factorization needs the trivial involution".into()));
    }
    if !space.is_unitary(x) {
        return Err(Error::NotSymplectic);
    }
    factor_unitary(space, x).map_err(|e| match e {
        Error::NotInSL2R => Error::NotSymplectic,
        e => e,
    })
}

/// Extends a symplectic set `[x_1, y_1, ..., x_k, y_k]` to a symplectic basis,
/// returned in the order `(x_1..x_m, y_1..y_m)` so that its Gram matrix is `J`.
pub fn witt_extend(space: &FormSpace, partial: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>> {
    let ring = space.ring();
    let m = space.m();
    for x in partial {
        space.check_vector(x)?;
    }
    if !partial.len().is_multiple_of(2) || partial.len() > 2 * m {
        return Err(Error::NotSymplecticSet);
    }
    let k = partial.len() / 2;
    for i in 0..k {
        for j in 0..k {
            let (ui, vi, uj, vj) = (&partial[2 * i], &partial[2 * i + 1], &partial[2 * j], &partial[2 * j + 1]);
            let want = if i == j { ring.one() } else { ring.zero() };
            if space.form(ui, vj) != want || !ring.is_zero(space.form(ui, uj)) || !ring.is_zero(space.form(vi, vj)) {
                return Err(Error::NotSymplecticSet);
            }
        }
    }
    let mut us: Vec<Vec<Elem>> = partial.iter().step_by(2).cloned().collect();
    let mut vs: Vec<Vec<Elem>> = partial.iter().skip(1).step_by(2).cloned().collect();
    if k == m {
        us.extend(vs);
        return Ok(us);
    }
    // word sending the given pairs to the standard ones
    let mut total = TransvectionWord::default();
    for i in 0..k {
        let active: Vec<usize> = (i..m).collect();
        let (x, y) = (total.apply(space, &us[i]), total.apply(space, &vs[i]));
        check_pair(space, &x, &y).map_err(|_| Error::NotSymplecticSet)?;
        let w = move_pair_active(space, &x, &y, &active)?;
        total = w.then(total);
    }
    let back = total.inverse(ring);
    for i in k..m {
        us.push(back.apply(space, &space.basis(space.u_index(i))));
        vs.push(back.apply(space, &space.basis(space.v_index(i))));
    }
    us.extend(vs);
    Ok(us)
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectnessReport {
    pub m: usize,
    pub group_order: u64,
    pub derived_order: u64,
    pub perfect: bool,
}

/// Whether the group generated by the elementary transvections of `S^2m` equals its
/// commutator subgroup. For `m = 1` and trivial involution the group is
/// `SL(2, R)`.
pub fn perfectness_check(ring: &Ring, m: usize) -> Result<PerfectnessReport> {
    if m == 0 {
        return Err(Error::BadParameter("m must be positive".into()));
    }
    let space = FormSpace::new(ring, m);
    let mut scalars = vec![ring.one()];
    if ring.has_trivial_involution() && ring.degree() == 2 {
        scalars.push(ring.generator());
    }
    let dim = space.dim();
    let mut vectors: Vec<Vec<Elem>> = (0..dim).map(|i| space.basis(i)).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            let v: Vec<Elem> = (0..dim).map(|t| if t == i || t == j { ring.one() } else { ring.zero() }).collect();
            if ring.is_zero(space.form(&v, &v)) {
                vectors.push(v);
            }
        }
    }
    let mut gens = Vec::new();
    for v in &vectors {
        for &b in &scalars {
            gens.push(super::transvection_matrix(&space, b, v)?);
        }
    }
    let cap = ring.cap();
    let group = closure(&gens, cap)?;
    let derived = derived_subgroup(&gens, cap)?;
    Ok(PerfectnessReport {
        m,
        group_order: group.len() as u64,
        derived_order: derived.len() as u64,
        perfect: group.len() == derived.len(),
    })
}
