//! The Heisenberg group `R x V` of the symplectic space `V = R^2n` and its
//! Schrödinger representation on `C[R^n]`.

use crate::error::{Error, Result};
use crate::localring::{Elem, Ring};
use crate::matform::{FormSpace, Mat};

/// `(r, u)` with `r` central and `u` in `V`, coordinates `(u_1..u_n, v_1..v_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisenbergElem {
    pub r: Elem,
    pub u: Vec<Elem>,
}

/// Group law `(r,u)(s,v) = (r + s + <u,v>, u + v)`.
#[derive(Clone, Debug)]
pub struct Heisenberg {
    space: FormSpace,
}

impl Heisenberg {
    pub fn new(ring: &Ring, n: usize) -> Self {
        Heisenberg { space: FormSpace::new(ring, n) }
    }

    pub fn ring(&self) -> &Ring {
        self.space.ring()
    }

    pub fn n(&self) -> usize {
        self.space.m()
    }

    pub fn space(&self) -> &FormSpace {
        &self.space
    }

    fn check(&self, x: &HeisenbergElem) -> Result<()> {
        if x.u.len() != self.space.dim() {
            return Err(Error::DimMismatch(format!("expected {} coordinates, got {}", self.space.dim(), x.u.len())));
        }
        Ok(())
    }

    pub fn identity(&self) -> HeisenbergElem {
        HeisenbergElem { r: self.ring().zero(), u: vec![self.ring().zero(); self.space.dim()] }
    }

    pub fn central(&self, r: Elem) -> HeisenbergElem {
        HeisenbergElem { r, ..self.identity() }
    }

    pub fn vector(&self, u: Vec<Elem>) -> Result<HeisenbergElem> {
        let x = HeisenbergElem { r: self.ring().zero(), u };
        self.check(&x)?;
        Ok(x)
    }

    /// `(1, 0)`, `(0, u_i)` and `(0, v_i)`.
    pub fn generators(&self) -> Vec<HeisenbergElem> {
        let mut gens = vec![self.central(self.ring().one())];
        for i in 0..self.space.dim() {
            gens.push(HeisenbergElem { r: self.ring().zero(), u: self.space.basis(i) });
        }
        gens
    }

    pub fn mul(&self, x: &HeisenbergElem, y: &HeisenbergElem) -> Result<HeisenbergElem> {
        self.check(x)?;
        self.check(y)?;
        let ring = self.ring();
        let r = ring.add(ring.add(x.r, y.r), self.space.form(&x.u, &y.u));
        let u = x.u.iter().zip(&y.u).map(|(&a, &b)| ring.add(a, b)).collect();
        Ok(HeisenbergElem { r, u })
    }

    pub fn inverse(&self, x: &HeisenbergElem) -> Result<HeisenbergElem> {
        self.check(x)?;
        let ring = self.ring();
        Ok(HeisenbergElem { r: ring.neg(x.r), u: x.u.iter().map(|&a| ring.neg(a)).collect() })
    }

    /// `^g (r, u) = (r, g u)`.
    pub fn sp_act(&self, g: &Mat, x: &HeisenbergElem) -> Result<HeisenbergElem> {
        self.check(x)?;
        self.space.check_matrix(g)?;
        Ok(HeisenbergElem { r: x.r, u: g.mul_vec(&x.u) })
    }
}
