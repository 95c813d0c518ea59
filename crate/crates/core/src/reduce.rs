//! Reduction `U(2m, S) -> U(2m, S/I)` along a `*`-invariant ideal, constructive
//! lifting, norm-one decomposition and the image of the determinant.

use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::localring::{Elem, QuotientMap, Ramification, Ring};
use crate::matform::{all_matrices, FormSpace, Mat};
use crate::transvect::{length, su_factor, transvection_matrix};

/// Projection along a quotient map, with source and target form spaces of equal rank.
#[derive(Clone, Debug)]
pub struct ReductionContext {
    quotient: QuotientMap,
    source: FormSpace,
    target: FormSpace,
}

impl ReductionContext {
    /// Context for `S -> S / (generators)`.
    pub fn new(ring: &Ring, generators: &[Elem], m: usize) -> Result<Self> {
        Ok(Self::from_quotient(ring.quotient(generators)?, m))
    }

    pub fn from_quotient(quotient: QuotientMap, m: usize) -> Self {
        let source = FormSpace::new(quotient.source(), m);
        let target = FormSpace::new(quotient.target(), m);
        ReductionContext { quotient, source, target }
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.quotient
    }

    pub fn source(&self) -> &FormSpace {
        &self.source
    }

    pub fn target(&self) -> &FormSpace {
        &self.target
    }

    pub fn project_vector(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.source.check_vector(v)?;
        Ok(v.iter().map(|&a| self.quotient.project(a)).collect())
    }

    /// Entrywise projection.
    pub fn project_matrix(&self, x: &Mat) -> Result<Mat> {
        if x.ring() != self.quotient.source() {
            return Err(Error::RingMismatch);
        }
        Ok(x.map(self.quotient.target(), |a| self.quotient.project(a)))
    }

    fn section_vector(&self, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&a| self.quotient.section(a)).collect()
    }

    /// `(s + s*) / 2` for the section `s` of `a`; fixed by the involution when `a` is.
    fn lift_symmetric(&self, a: Elem) -> Elem {
        let s = self.source.ring();
        let x = self.quotient.section(a);
        s.mul(s.half(), s.add(x, s.star(x)))
    }

    /// A basis vector of length zero over `S` projecting to `u`, obtained from the
    /// section by `w = u - (1/2) a^-1 delta e` where `delta = h(u, u)` and
    /// `a = h(u, e)` for the first standard vector `e` with `a` a unit.
    pub fn lift_length_zero(&self, u: &[Elem]) -> Result<Vec<Elem>> {
        self.target.check_vector(u)?;
        if !self.target.is_basis_vector(u) {
            return Err(Error::NotBasisVector);
        }
        if !self.target.ring().is_zero(length(&self.target, u)) {
            return Err(Error::NonzeroLength);
        }
        let s = self.source.ring();
        let mut w = self.section_vector(u);
        let delta = length(&self.source, &w);
        if s.is_zero(delta) {
            return Ok(w);
        }
        let (idx, a) = (0..self.source.dim())
            .map(|j| (j, self.source.form(&w, &self.source.basis(j))))
            .find(|&(_, a)| s.is_unit(a))
            .ok_or(Error::NotBasisVector)?;
        let c = s.mul(s.mul(s.half(), s.inv(a)?), delta);
        w[idx] = s.sub(w[idx], c);
        debug_assert!(s.is_zero(length(&self.source, &w)));
        Ok(w)
    }

    /// `X in SU(2m, S)` with `project(X) = z`, by lifting every letter of a
    /// transvection factorization of `z`.
    pub fn lift_su(&self, z: &Mat) -> Result<Mat> {
        self.target.check_matrix(z)?;
        if !self.target.is_special_unitary(z) {
            return Err(Error::NotInSU);
        }
        let word = su_factor(&self.target, z)?;
        let mut x = Mat::identity(self.source.ring(), self.source.dim());
        for l in &word.letters {
            let a = self.lift_symmetric(l.a);
            let v = self.lift_length_zero(&l.v)?;
            x = x.try_mul(&transvection_matrix(&self.source, a, &v)?)?;
        }
        if self.project_matrix(&x)? != *z || !self.source.is_special_unitary(&x) {
            return Err(Error::NoSolution("lifted word does not project to the input".into()));
        }
        Ok(x)
    }

    /// `X in U(2m, S)` with `project(X) = z`: splits off `diag(b, (b*)^-1, 1, ...)`
    /// carrying the determinant and lifts the rest through [`Self::lift_su`].
    pub fn lift_u(&self, z: &Mat) -> Result<Mat> {
        self.target.check_matrix(z)?;
        if !self.target.is_unitary(z) {
            return Err(Error::NotInU);
        }
        let t = self.target.ring();
        let d = z.det()?;
        if d == t.one() {
            return self.lift_su(z);
        }
        if t.classify_ramification() != Ramification::Unramified && !t.is_zero(t.residue(t.sub(d, t.one()))) {
            return Err(Error::RamifiedObstruction);
        }
        let bt = norm_one_decompose(t, d)?;
        let b = self.quotient.section(bt);
        let x0 = diag_det(&self.source, b)?;
        let zt = z.try_mul(&self.project_matrix(&x0)?.inverse()?)?;
        let x = self.lift_su(&zt)?.try_mul(&x0)?;
        if self.project_matrix(&x)? != *z || !self.source.is_unitary(&x) {
            return Err(Error::NoSolution("lifted matrix does not project to the input".into()));
        }
        Ok(x)
    }
}

/// `diag(b, 1, ..., 1, (b*)^-1, 1, ..., 1)`, unitary of determinant `b (b*)^-1`.
pub fn diag_det(space: &FormSpace, b: Elem) -> Result<Mat> {
    let s = space.ring();
    let mut x = Mat::identity(s, space.dim());
    x.set(space.u_index(0), space.u_index(0), b);
    x.set(space.v_index(0), space.v_index(0), s.inv(s.star(b))?);
    Ok(x)
}

/// `b` a unit with `b (b*)^-1 = a`, for `a* a = 1`: `b = 1 + a` unless
/// `a = -1` mod the maximal ideal, then `b = i (1 - a)` for the first skew unit `i`.
pub fn norm_one_decompose(ring: &Ring, a: Elem) -> Result<Elem> {
    if ring.mul(ring.star(a), a) != ring.one() {
        return Err(Error::NotNormOne);
    }
    let b = ring.add(ring.one(), a);
    let b = if ring.is_unit(b) {
        b
    } else {
        let i = ring
            .iter()
            .find(|&x| ring.is_unit(x) && ring.is_skew(x))
            .ok_or(Error::RamifiedObstruction)?;
        ring.mul(i, ring.sub(ring.one(), a))
    };
    debug_assert_eq!(ring.mul(b, ring.inv(ring.star(b))?), a);
    Ok(b)
}

#[derive(Clone, Debug, Serialize)]
pub struct DetImageReport {
    pub m: usize,
    pub ramification: Ramification,
    /// Norm-one group `N = {a : a* a = 1}`.
    pub norm_one: Vec<Vec<u64>>,
    /// `N` when a skew unit exists, otherwise `N ∩ (1 + m)`.
    pub claimed_image: Vec<Vec<u64>>,
    /// Every claimed value is the determinant of a unitary `diag(b, (b*)^-1, 1, ...)`.
    pub preimages_certified: bool,
    /// Determinants of all unitary matrices, when enumerable.
    pub observed_image: Option<Vec<Vec<u64>>>,
    pub ok: bool,
}

/// The norm-one group and the image of `det` on `U(2m, S)`.
pub fn det_image(ring: &Ring, m: usize) -> Result<DetImageReport> {
    check_cap(ring.size() as u128, ring.cap())?;
    let space = FormSpace::new(ring, m);
    let ramification = ring.classify_ramification();
    let norm_one: Vec<Elem> = ring.iter().filter(|&a| ring.mul(ring.star(a), a) == ring.one()).collect();
    let claimed: Vec<Elem> = norm_one
        .iter()
        .copied()
        .filter(|&a| ramification == Ramification::Unramified || ring.is_zero(ring.residue(ring.sub(a, ring.one()))))
        .collect();
    let mut certified = true;
    for &a in &claimed {
        let ok = norm_one_decompose(ring, a)
            .and_then(|b| diag_det(&space, b))
            .map(|x| space.is_unitary(&x) && x.det().ok() == Some(a))
            .unwrap_or(false);
        certified &= ok;
    }
    let observed = match all_matrices(ring, space.dim(), space.dim()) {
        Ok(it) => {
            let mut seen = vec![false; ring.size() as usize];
            for x in it.filter(|x| space.is_unitary(x)) {
                seen[ring.index(x.det()?)] = true;
            }
            Some(ring.iter().filter(|&a| seen[ring.index(a)]).collect::<Vec<_>>())
        }
        Err(Error::TooLarge { .. }) | Err(Error::SearchSpaceTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let ok = certified && observed.as_ref().is_none_or(|o| *o == claimed);
    let fmt = |v: &[Elem]| v.iter().map(|&a| ring.coeffs(a)).collect::<Vec<_>>();
    Ok(DetImageReport {
        m,
        ramification,
        norm_one: fmt(&norm_one),
        claimed_image: fmt(&claimed),
        preimages_certified: certified,
        observed_image: observed.as_deref().map(fmt),
        ok,
    })
}
