//! Congruence normal form of symmetric unit matrices and quadratic Gauss sums.

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::localring::{Elem, Ring};
use crate::matform::Mat;

use super::character::AdditiveCharacter;

/// `P` invertible and `t` a unit with `P T P' = diag(t, 1, ..., 1)`.
///
/// Works by symmetric pivoting on a unit diagonal entry, creating one from a unit
/// off-diagonal entry when needed, then merging the diagonal pairwise with
/// `diag(x, y) ~ diag(xy, 1)`.
pub fn congruence_normal_form(t: &Mat) -> Result<(Mat, Elem)> {
    let ring = t.ring().clone();
    let n = t.rows();
    if !t.is_square() || t.transpose() != *t {
        return Err(Error::BadParameter("congruence normal form needs a symmetric matrix".into()));
    }
    if !t.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let mut a = t.clone();
    let mut p = Mat::identity(&ring, n);
    // row op on both P and the congruence A -> E A E'
    let add_row = |a: &mut Mat, p: &mut Mat, dst: usize, src: usize, c: Elem| {
        let apply = |x: &mut Mat| {
            for j in 0..x.cols() {
                let v = ring.add(x.get(dst, j), ring.mul(c, x.get(src, j)));
                x.set(dst, j, v);
            }
        };
        apply(p);
        apply(a);
        for i in 0..a.rows() {
            let v = ring.add(a.get(i, dst), ring.mul(c, a.get(i, src)));
            a.set(i, dst, v);
        }
    };
    let swap = |a: &mut Mat, p: &mut Mat, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..n {
            let (x, y) = (p.get(i, c), p.get(j, c));
            p.set(i, c, y);
            p.set(j, c, x);
            let (x, y) = (a.get(i, c), a.get(j, c));
            a.set(i, c, y);
            a.set(j, c, x);
        }
        for r in 0..n {
            let (x, y) = (a.get(r, i), a.get(r, j));
            a.set(r, i, y);
            a.set(r, j, x);
        }
    };
    for k in 0..n {
        let pivot = (k..n).find(|&i| ring.is_unit(a.get(i, i)));
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let (i, j) = (k..n)
                    .flat_map(|i| (k..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && ring.is_unit(a.get(i, j)))
                    .ok_or(Error::NotInvertible)?;
                add_row(&mut a, &mut p, i, j, ring.one());
                i
            }
        };
        swap(&mut a, &mut p, k, pivot);
        let inv = ring.inv(a.get(k, k))?;
        for i in k + 1..n {
            let c = ring.neg(ring.mul(a.get(i, k), inv));
            add_row(&mut a, &mut p, i, k, c);
        }
    }
    // merge diag(d_{i-1}, d_i) into diag(d_{i-1} d_i, 1)
    for i in (1..n).rev() {
        let (x, y) = (a.get(i - 1, i - 1), a.get(i, i));
        let (ea, eb) = represent_one(&ring, x, y)?;
        // rows (-y b, x a) and (a, b) of the 2x2 block
        let q = [[ring.neg(ring.mul(y, eb)), ring.mul(x, ea)], [ea, eb]];
        let mut e = Mat::identity(&ring, n);
        e.set(i - 1, i - 1, q[0][0]);
        e.set(i - 1, i, q[0][1]);
        e.set(i, i - 1, q[1][0]);
        e.set(i, i, q[1][1]);
        p = &e * &p;
        a = &(&e * &a) * &e.transpose();
    }
    debug_assert!(Mat::diag(&ring, &diag_target(&ring, n, a.get(0, 0))) == a);
    Ok((p, a.get(0, 0)))
}

fn diag_target(ring: &Ring, n: usize, t: Elem) -> Vec<Elem> {
    let mut d = vec![ring.one(); n];
    d[0] = t;
    d
}

/// `(a, b)` with `x a^2 + y b^2 = 1`, found by search.
fn represent_one(ring: &Ring, x: Elem, y: Elem) -> Result<(Elem, Elem)> {
    let squares: Vec<(Elem, Elem)> = ring.iter().map(|a| (a, ring.mul(a, a))).collect();
    for &(a, a2) in &squares {
        let rest = ring.sub(ring.one(), ring.mul(x, a2));
        for &(b, b2) in &squares {
            if ring.mul(y, b2) == rest {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NoSolution("x a^2 + y b^2 = 1 has no solution".into()))
}

/// `sum_{b in R^n} lambda(b' T b)`, by exhaustion.
pub fn quadratic_gauss_sum(lambda: &AdditiveCharacter, t: &Mat) -> Result<CycNum> {
    let ring = lambda.ring();
    let n = t.rows();
    let size = ring.size();
    crate::error::check_cap((size as u128).pow(n as u32), ring.cap())?;
    let nn = lambda.conductor();
    let mut counts = vec![0i64; nn as usize];
    let total = size.pow(n as u32);
    for idx in 0..total {
        let b = super::decode_vector(ring, n, idx as usize);
        let tb = t.mul_vec(&b);
        let q = b.iter().zip(&tb).fold(ring.zero(), |acc, (&x, &y)| ring.add(acc, ring.mul(x, y)));
        counts[lambda.exponent(q) as usize] += 1;
    }
    Ok(CycNum::from_exponent_counts(nn, &counts))
}
