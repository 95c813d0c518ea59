//! The group `SL_*(2, A)` for `A = M(m, S)`, realised as the unitary group `U(2m, S)`
//! of the form `J = [[0, 1], [-1, 0]]`.
//!
//! Elements are generated by `w = J`, `h_t = diag(t, (t*)^-1)` for `t` invertible and
//! `u_r = [[1, r], [0, 1]]` for `r* = r`. Words in these generators are
//! [`BruhatWord`]s with letters `Z`, `K(t)` and `V(r)`.

mod census;
mod presentation;
mod rewrite;

use std::sync::OnceLock;

pub use census::{shifted_inverse_check, symmetric_unit_census, CensusReport, ShiftedInverseReport};
pub use presentation::{random_word, verify_presentation, PresentationReport, RelationCheck};
pub use rewrite::{RewriteRule, RewriteStep};

use crate::error::{Error, Result};
use crate::localring::Ring;
use crate::matform::{symmetric_matrices, FormSpace, Mat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    /// The Weyl element `w`.
    Z,
    /// `h_t`.
    K(Mat),
    /// `u_r`.
    V(Mat),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BruhatWord {
    pub letters: Vec<Letter>,
}

impl BruhatWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BruhatWord { letters }
    }

    /// Number of `Z` letters.
    pub fn z_length(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l, Letter::Z)).count()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    /// `B`
    B,
    /// `BwB`
    BwB,
    /// `BwBwB`
    BwBwB,
}

impl Cell {
    pub fn z_length(self) -> usize {
        match self {
            Cell::B => 0,
            Cell::BwB => 1,
            Cell::BwBwB => 2,
        }
    }
}

/// Normal-form parameters of a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical {
    /// `h_t u_r`
    B { t: Mat, r: Mat },
    /// `h_t u_r1 w u_r2`
    BwB { t: Mat, r1: Mat, r2: Mat },
    /// `h_t u_a w u_b w u_c` with `b` not invertible.
    BwBwB { t: Mat, a: Mat, b: Mat, c: Mat },
}

/// `SL_*(2, M(m, S))`.
#[derive(Clone, Debug)]
pub struct Sl2Star {
    space: FormSpace,
    symmetric: OnceLock<Vec<Mat>>,
}

impl Sl2Star {
    pub fn new(ring: &Ring, m: usize) -> Self {
        Sl2Star { space: FormSpace::new(ring, m), symmetric: OnceLock::new() }
    }

    pub fn ring(&self) -> &Ring {
        self.space.ring()
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn space(&self) -> &FormSpace {
        &self.space
    }

    /// `q > 3` (2 is always a unit since `p` is odd).
    pub fn check_hypotheses(&self) -> Result<()> {
        let q = self.ring().q();
        if q <= 3 {
            return Err(Error::HypothesisViolated(format!("residue field of size {q} needs q > 3")));
        }
        Ok(())
    }

    fn ident(&self) -> Mat {
        Mat::identity(self.ring(), self.m())
    }

    fn zero(&self) -> Mat {
        Mat::zeros(self.ring(), self.m(), self.m())
    }

    fn scalar(&self, v: i64) -> Mat {
        Mat::scalar(self.ring(), self.m(), self.ring().from_int(v))
    }

    fn check_block(&self, x: &Mat) -> Result<()> {
        if x.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        if x.rows() != self.m() || x.cols() != self.m() {
            return Err(Error::DimMismatch(format!("expected a {0}x{0} block", self.m())));
        }
        Ok(())
    }

    /// All `r` in `A` with `r* = r`, in lexicographic order.
    pub fn symmetric(&self) -> Result<&[Mat]> {
        if let Some(s) = self.symmetric.get() {
            return Ok(s);
        }
        let s = symmetric_matrices(self.ring(), self.m())?;
        Ok(self.symmetric.get_or_init(|| s))
    }

    pub fn w(&self) -> Mat {
        self.space.gram().clone()
    }

    pub fn h(&self, t: &Mat) -> Result<Mat> {
        self.check_block(t)?;
        let ti = t.try_inverse().ok_or_else(|| Error::BadParameter(format!("K({t}) is not invertible")))?;
        Ok(Mat::from_blocks(t, &self.zero(), &self.zero(), &ti.star()))
    }

    pub fn u(&self, r: &Mat) -> Result<Mat> {
        self.check_block(r)?;
        if !r.is_symmetric() {
            return Err(Error::BadParameter(format!("V({r}) is not symmetric")));
        }
        Ok(Mat::from_blocks(&self.ident(), r, &self.zero(), &self.ident()))
    }

    pub fn generator_matrix(&self, letter: &Letter) -> Result<Mat> {
        match letter {
            Letter::Z => Ok(self.w()),
            Letter::K(t) => self.h(t),
            Letter::V(r) => self.u(r),
        }
    }

    pub fn eval(&self, word: &BruhatWord) -> Result<Mat> {
        let mut x = Mat::identity(self.ring(), self.space.dim());
        for l in &word.letters {
            x = x.try_mul(&self.generator_matrix(l)?)?;
        }
        Ok(x)
    }

    fn check_member(&self, x: &Mat) -> Result<()> {
        self.space.check_matrix(x)?;
        if !self.space.is_unitary(x) {
            return Err(Error::NotInGroup(format!("{x} does not preserve J")));
        }
        Ok(())
    }

    pub fn cell_of(&self, x: &Mat) -> Result<Cell> {
        self.check_member(x)?;
        let [_, _, c, _] = x.blocks();
        Ok(if c.is_zero() {
            Cell::B
        } else if c.is_invertible() {
            Cell::BwB
        } else {
            Cell::BwBwB
        })
    }

    /// Normal-form parameters of `x`.
    pub fn canonical(&self, x: &Mat) -> Result<Canonical> {
        self.check_member(x)?;
        self.check_hypotheses()?;
        let [a, b, c, d] = x.blocks();
        if c.is_zero() {
            let r = &a.inverse()? * &b;
            return Ok(Canonical::B { t: a, r });
        }
        if let Some(ci) = c.try_inverse() {
            return Ok(bwb_params(&a, &c, &ci, &d));
        }
        let r = self.find_symmetrizer(&a, &c)?;
        let y = &(&self.w() * &self.u(&r)?) * x;
        let [ya, _, yc, yd] = y.blocks();
        let yci = yc.inverse()?;
        let Canonical::BwB { t, r1, r2 } = bwb_params(&ya, &yc, &yci, &yd) else { unreachable!() };
        let s = -&t.star().inverse()?;
        let si = s.inverse()?;
        let a_par = &(&(-&si) * &r) * &si.star();
        Ok(Canonical::BwBwB { t: s, a: a_par, b: r1, c: r2 })
    }

    /// Word in `Z`, `K`, `V` of `Z`-length at most 2 evaluating to `x`.
    pub fn factor(&self, x: &Mat) -> Result<BruhatWord> {
        Ok(self.canonical_word(&self.canonical(x)?))
    }

    /// Word for normal-form parameters, omitting `K(1)` and `V(0)`.
    pub fn canonical_word(&self, c: &Canonical) -> BruhatWord {
        let mut letters = Vec::new();
        let mut k = |t: &Mat| {
            if !t.is_identity() {
                letters.push(Letter::K(t.clone()));
            }
        };
        match c {
            Canonical::B { t, .. } | Canonical::BwB { t, .. } | Canonical::BwBwB { t, .. } => k(t),
        }
        let v = |r: &Mat, out: &mut Vec<Letter>| {
            if !r.is_zero() {
                out.push(Letter::V(r.clone()));
            }
        };
        match c {
            Canonical::B { r, .. } => v(r, &mut letters),
            Canonical::BwB { r1, r2, .. } => {
                v(r1, &mut letters);
                letters.push(Letter::Z);
                v(r2, &mut letters);
            }
            Canonical::BwBwB { a, b, c, .. } => {
                v(a, &mut letters);
                letters.push(Letter::Z);
                v(b, &mut letters);
                letters.push(Letter::Z);
                v(c, &mut letters);
            }
        }
        BruhatWord { letters }
    }

    /// Symmetric `r` with `a + r c` invertible, searching residue-field symmetric
    /// matrices first and lifting them by symmetrization.
    pub fn find_symmetrizer(&self, a: &Mat, c: &Mat) -> Result<Mat> {
        self.check_block(a)?;
        self.check_block(c)?;
        if &a.star() * c != &c.star() * a {
            return Err(Error::NoSolution("a* c differs from c* a".into()));
        }
        let ring = self.ring();
        let residue = ring.residue_ring();
        let half = ring.half();
        let works = |r: &Mat| (a + &(r * c)).is_invertible();
        for rb in symmetric_matrices(&residue, self.m())? {
            let u = rb.map(ring, |e| ring.section(e));
            let r = (&u + &u.star()).scale(half);
            if works(&r) {
                return Ok(r);
            }
        }
        for r in self.symmetric()? {
            if works(r) {
                return Ok(r.clone());
            }
        }
        Err(Error::NoSolution("no symmetric r makes a + r c invertible".into()))
    }

    /// The lexicographically first symmetric unit `u` with `a + u` and `b - u^-1`
    /// invertible.
    pub fn find_shift(&self, a: &Mat, b: &Mat) -> Result<Mat> {
        self.check_block(a)?;
        self.check_block(b)?;
        if !a.is_symmetric() || !b.is_symmetric() {
            return Err(Error::BadParameter("shift parameters must be symmetric".into()));
        }
        for u in self.symmetric()? {
            let Some(ui) = u.try_inverse() else { continue };
            if (a + u).is_invertible() && (b - &ui).is_invertible() {
                return Ok(u.clone());
            }
        }
        Err(Error::NoSolution("no symmetric unit shift exists".into()))
    }

    /// Rewrites `word` using the defining relations into an equivalent word of
    /// minimal `Z`-length (at most 2).
    pub fn reduce(&self, word: &BruhatWord) -> Result<BruhatWord> {
        Ok(self.reduce_traced(word)?.0)
    }

    pub fn reduce_traced(&self, word: &BruhatWord) -> Result<(BruhatWord, Vec<RewriteStep>)> {
        rewrite::reduce(self, word)
    }

    pub(crate) fn id_block(&self) -> Mat {
        self.ident()
    }

    pub(crate) fn zero_block(&self) -> Mat {
        self.zero()
    }

    pub(crate) fn scalar_block(&self, v: i64) -> Mat {
        self.scalar(v)
    }
}

/// Parameters `h_t u_r1 w u_r2` for an element with invertible lower-left block.
fn bwb_params(a: &Mat, c: &Mat, ci: &Mat, d: &Mat) -> Canonical {
    let t = -&ci.star();
    let r1 = &c.star() * a;
    let r2 = ci * d;
    Canonical::BwB { t, r1, r2 }
}
