//! Unitary transvections `f_{a,v}(x) = x + a h(v, x) v` on `S^2m`, constructive
//! transitivity on length-zero vectors and symplectic pairs, and factorization
//! of `SU(2m, S)` and `Sp(2m, R)` into transvections.
//!
//! Coordinates are `(u_1..u_m, v_1..v_m)` with `h(u, v) = u* J v`.

mod factor;
mod transitive;

pub use factor::{perfectness_check, sl2_factor, sp_factor, su_factor, witt_extend, PerfectnessReport};
pub use transitive::{move_pair, move_vector};

use rand::Rng;

use crate::error::{Error, Result};
use crate::localring::{Elem, Ring};
use crate::matform::{FormSpace, Mat};

/// `a * x` coordinatewise.
pub fn scale_vec(ring: &Ring, a: Elem, x: &[Elem]) -> Vec<Elem> {
    x.iter().map(|&c| ring.mul(a, c)).collect()
}

pub fn add_vec(ring: &Ring, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    x.iter().zip(y).map(|(&a, &b)| ring.add(a, b)).collect()
}

pub fn sub_vec(ring: &Ring, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    x.iter().zip(y).map(|(&a, &b)| ring.sub(a, b)).collect()
}

/// `h(v, v)`.
pub fn length(space: &FormSpace, v: &[Elem]) -> Elem {
    space.form(v, v)
}

/// A fixed unit of the involution.
pub(crate) fn is_symmetric_unit(ring: &Ring, a: Elem) -> bool {
    ring.is_symmetric(a) && ring.is_unit(a)
}

/// One letter `f_{a,v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub a: Elem,
    pub v: Vec<Elem>,
}

impl Transvection {
    /// Checks `a* = a`, `h(v, v) = 0` and that `v` is a basis vector.
    pub fn check(&self, space: &FormSpace) -> Result<()> {
        let ring = space.ring();
        space.check_vector(&self.v)?;
        if !ring.is_symmetric(self.a) {
            return Err(Error::BadParameter(format!("{} is not fixed by the involution", ring.fmt_elem(self.a))));
        }
        if !ring.is_zero(length(space, &self.v)) {
            return Err(Error::BadParameter("transvection vector has nonzero length".into()));
        }
        if !space.is_basis_vector(&self.v) {
            return Err(Error::BadParameter("transvection vector is not a basis vector".into()));
        }
        Ok(())
    }

    pub fn apply(&self, space: &FormSpace, x: &[Elem]) -> Vec<Elem> {
        let ring = space.ring();
        let c = ring.mul(self.a, space.form(&self.v, x));
        add_vec(ring, x, &scale_vec(ring, c, &self.v))
    }

    pub fn inverse(&self, ring: &Ring) -> Transvection {
        Transvection { a: ring.neg(self.a), v: self.v.clone() }
    }
}

/// Matrix `1 + a v (v* J)` of `f_{a,v}`.
pub fn transvection_matrix(space: &FormSpace, a: Elem, v: &[Elem]) -> Result<Mat> {
    let ring = space.ring();
    space.check_vector(v)?;
    if !ring.is_symmetric(a) {
        return Err(Error::BadParameter(format!("{} is not fixed by the involution", ring.fmt_elem(a))));
    }
    if !ring.is_zero(length(space, v)) {
        return Err(Error::BadParameter("transvection vector has nonzero length".into()));
    }
    let row: Vec<Elem> = (0..space.dim()).map(|j| space.form(v, &space.basis(j))).collect();
    Ok(Mat::from_fn(ring, space.dim(), space.dim(), |i, j| {
        let e = ring.mul(ring.mul(a, v[i]), row[j]);
        if i == j {
            ring.add(ring.one(), e)
        } else {
            e
        }
    }))
}

/// Product `f_1 f_2 ... f_k` of transvections; applied to a vector, the last letter
/// acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransvectionWord {
    pub letters: Vec<Transvection>,
}

impl TransvectionWord {
    pub fn new(letters: Vec<Transvection>) -> Self {
        TransvectionWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn eval(&self, space: &FormSpace) -> Result<Mat> {
        let mut x = Mat::identity(space.ring(), space.dim());
        for l in &self.letters {
            x = x.try_mul(&transvection_matrix(space, l.a, &l.v)?)?;
        }
        Ok(x)
    }

    pub fn apply(&self, space: &FormSpace, x: &[Elem]) -> Vec<Elem> {
        self.letters.iter().rev().fold(x.to_vec(), |acc, l| l.apply(space, &acc))
    }

    pub fn inverse(&self, ring: &Ring) -> TransvectionWord {
        TransvectionWord { letters: self.letters.iter().rev().map(|l| l.inverse(ring)).collect() }
    }

    /// `self` followed by `other` as a product, so `other` acts first.
    pub fn then(mut self, other: TransvectionWord) -> TransvectionWord {
        self.letters.extend(other.letters);
        self
    }

    /// Checks every letter and that its matrix has determinant one.
    pub fn check_letters(&self, space: &FormSpace) -> Result<()> {
        for l in &self.letters {
            l.check(space)?;
            let d = transvection_matrix(space, l.a, &l.v)?.det()?;
            if d != space.ring().one() {
                return Err(Error::BadParameter("transvection with determinant other than one".into()));
            }
        }
        Ok(())
    }
}

/// Random letter with `a` fixed by the involution and `v` a basis vector of length
/// zero, by rejection sampling.
pub fn random_transvection<R: Rng + ?Sized>(space: &FormSpace, rng: &mut R) -> Transvection {
    let ring = space.ring();
    loop {
        let v: Vec<Elem> = (0..space.dim()).map(|_| ring.random(rng)).collect();
        if ring.is_zero(length(space, &v)) && space.is_basis_vector(&v) {
            return Transvection { a: ring.random_symmetric(rng), v };
        }
    }
}

/// Product of `len` random transvections.
pub fn random_word<R: Rng + ?Sized>(space: &FormSpace, len: usize, rng: &mut R) -> TransvectionWord {
    TransvectionWord { letters: (0..len).map(|_| random_transvection(space, rng)).collect() }
}
