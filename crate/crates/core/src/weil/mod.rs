//! The Weil representation of `Sp(2n, R)` on `X = C[R^n]`, for a finite local ring
//! `R` of odd characteristic with trivial involution and a primitive additive
//! character `lambda`.
//!
//! The basis vector `e_a` is indexed by `a in R^n`, ordered lexicographically by
//! element index. Generator operators:
//!
//! * `W(h_T) e_a = mu(det T) e_{(T')^-1 a}`
//! * `W(u_S) e_a = lambda(a' S a) e_a`
//! * `W(sigma) e_a = G^-n sum_b lambda(-2 b' a) e_b` with `sigma = w^-1 = h_-1 w`
//!
//! Letters of a [`BruhatWord`] map as `K(T) -> W(h_T)`, `V(S) -> W(u_S)` and
//! `Z -> W(h_-1) W(sigma)`, the last because `w = sigma^-1 = h_-1 sigma`.

mod character;
mod heisenberg;
mod operator;
mod quadratic;
mod verify;

use std::sync::OnceLock;

pub use character::{mu, mu_table, primitive_characters, residue_exponent, AdditiveCharacter, CharacterInfo};
pub use heisenberg::{Heisenberg, HeisenbergElem};
pub use operator::{commutant_dimension, Monomial, Operator, OperatorJson};
pub use quadratic::{congruence_normal_form, quadratic_gauss_sum};
pub use verify::{verify_weil, WeilReport};

use crate::bruhat::{BruhatWord, Letter, Sl2Star};
use crate::cyclo::CycNum;
use crate::error::{check_cap, Error, Result};
use crate::localring::{Elem, Ring};
use crate::matform::Mat;

/// Vector of `R^n` with the given basis index.
pub(crate) fn decode_vector(ring: &Ring, n: usize, mut idx: usize) -> Vec<Elem> {
    let size = ring.size() as usize;
    let mut v = vec![ring.zero(); n];
    for slot in v.iter_mut().rev() {
        *slot = ring.from_index(idx % size);
        idx /= size;
    }
    v
}

pub(crate) fn encode_vector(ring: &Ring, v: &[Elem]) -> usize {
    let size = ring.size() as usize;
    v.iter().fold(0, |acc, &a| acc * size + ring.index(a))
}

/// `lambda`-twisted Gauss sum, checked primitive.
pub fn gauss_sum(lambda: &AdditiveCharacter) -> Result<CycNum> {
    if !lambda.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    Ok(lambda.gauss_sum())
}

/// The Weil representation attached to `(R, n, lambda)`.
#[derive(Debug)]
pub struct WeilRep {
    group: Sl2Star,
    heisenberg: Heisenberg,
    lambda: AdditiveCharacter,
    vectors: Vec<Vec<Elem>>,
    mu: Vec<i64>,
    gauss: CycNum,
    sigma: OnceLock<Operator>,
    weyl: OnceLock<Operator>,
}

impl WeilRep {
    /// Checks trivial involution, `q > 3`, a unique minimal ideal and primitivity.
    pub fn new(ring: &Ring, n: usize, c: Elem) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("n must be positive".into()));
        }
        if !ring.has_trivial_involution() {
            return Err(Error::HypothesisViolated("the symplectic case needs the trivial involution".into()));
        }
        let group = Sl2Star::new(ring, n);
        group.check_hypotheses()?;
        let lambda = AdditiveCharacter::new(ring, c);
        if !lambda.is_primitive()? {
            return Err(Error::NotPrimitive);
        }
        let dim = (ring.size() as u128).pow(n as u32);
        check_cap(dim * dim, ring.cap())?;
        let vectors = (0..dim as usize).map(|i| decode_vector(ring, n, i)).collect();
        let gauss = lambda.gauss_sum();
        Ok(WeilRep {
            group,
            heisenberg: Heisenberg::new(ring, n),
            lambda,
            vectors,
            mu: mu_table(ring),
            gauss,
            sigma: OnceLock::new(),
            weyl: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        self.group.ring()
    }

    pub fn n(&self) -> usize {
        self.group.m()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn conductor(&self) -> u64 {
        self.lambda.conductor()
    }

    pub fn group(&self) -> &Sl2Star {
        &self.group
    }

    pub fn heisenberg(&self) -> &Heisenberg {
        &self.heisenberg
    }

    pub fn lambda(&self) -> &AdditiveCharacter {
        &self.lambda
    }

    pub fn gauss(&self) -> &CycNum {
        &self.gauss
    }

    pub fn vector(&self, idx: usize) -> &[Elem] {
        &self.vectors[idx]
    }

    pub fn index_of(&self, v: &[Elem]) -> usize {
        encode_vector(self.ring(), v)
    }

    fn mu_of(&self, r: Elem) -> i64 {
        self.mu[self.ring().index(r)]
    }

    fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        let ring = self.ring();
        a.iter().zip(b).fold(ring.zero(), |acc, (&x, &y)| ring.add(acc, ring.mul(x, y)))
    }

    /// `W(h_T)`.
    pub fn h_op(&self, t: &Mat) -> Result<Monomial> {
        self.group.h(t)?;
        let sign = self.mu_of(t.det()?);
        let tti = t.transpose().inverse()?;
        let target = self.vectors.iter().map(|a| self.index_of(&tti.mul_vec(a))).collect();
        Ok(Monomial { conductor: self.conductor(), sign, target, exps: vec![0; self.dim()] })
    }

    /// `W(u_S)`.
    pub fn u_op(&self, s: &Mat) -> Result<Monomial> {
        self.group.u(s)?;
        let exps = self.vectors.iter().map(|a| self.lambda.exponent(self.dot(a, &s.mul_vec(a)))).collect();
        Ok(Monomial { conductor: self.conductor(), sign: 1, target: (0..self.dim()).collect(), exps })
    }

    /// `W(sigma)`.
    pub fn sigma_op(&self) -> &Operator {
        self.sigma.get_or_init(|| {
            let ring = self.ring();
            let nn = self.conductor();
            let scale = self.gauss.pow(self.n() as u32).inv().expect("Gauss sum is nonzero");
            let roots: Vec<CycNum> = (0..nn).map(|e| &CycNum::root_of_unity(nn, e as i64) * &scale).collect();
            let d = self.dim();
            let mut op = Operator::zero(nn, d);
            for (bi, b) in self.vectors.iter().enumerate() {
                for (ai, a) in self.vectors.iter().enumerate() {
                    let x = ring.scale(self.dot(b, a), -2);
                    op.set(bi, ai, roots[self.lambda.exponent(x) as usize].clone());
                }
            }
            op
        })
    }

    /// `W(w) = W(h_-1) W(sigma)`.
    pub fn weyl_op(&self) -> &Operator {
        self.weyl.get_or_init(|| {
            let h = self.h_op(&self.group.scalar_block(-1)).expect("-1 is invertible");
            h.mul_operator(self.sigma_op())
        })
    }

    /// Operator of a single letter.
    pub fn letter_op(&self, letter: &Letter) -> Result<Operator> {
        match letter {
            Letter::Z => Ok(self.weyl_op().clone()),
            Letter::K(t) => Ok(self.h_op(t)?.to_operator()),
            Letter::V(s) => Ok(self.u_op(s)?.to_operator()),
        }
    }

    /// Product of the letter operators, left to right.
    pub fn word_operator(&self, word: &BruhatWord) -> Result<Operator> {
        let mut acc: Option<Operator> = None;
        let mut pending = Monomial::identity(self.conductor(), self.dim());
        for l in &word.letters {
            match l {
                Letter::K(t) => pending = pending.mul(&self.h_op(t)?),
                Letter::V(s) => pending = pending.mul(&self.u_op(s)?),
                Letter::Z => {
                    let left = match acc.take() {
                        None => pending.to_operator(),
                        Some(a) => a.mul_monomial(&pending),
                    };
                    acc = Some(left.mul(self.weyl_op()));
                    pending = Monomial::identity(self.conductor(), self.dim());
                }
            }
        }
        Ok(match acc {
            None => pending.to_operator(),
            Some(a) => a.mul_monomial(&pending),
        })
    }

    /// `W(g)` through the Bruhat factorization of `g`.
    pub fn operator(&self, g: &Mat) -> Result<Operator> {
        self.word_operator(&self.group.factor(g)?)
    }

    /// `S(r, (d, b)) e_a = lambda(r - d'b + 2 d'(a + b)) e_{a + b}`, from the
    /// decomposition `(r, (d, b)) = (r - d'b, 0)(0, (d, 0))(0, (0, b))`.
    pub fn schrodinger(&self, h: &HeisenbergElem) -> Result<Monomial> {
        let n = self.n();
        if h.u.len() != 2 * n {
            return Err(Error::DimMismatch(format!("expected {} coordinates", 2 * n)));
        }
        let ring = self.ring();
        let (d, b) = h.u.split_at(n);
        let base = ring.sub(h.r, self.dot(d, b));
        let mut target = Vec::with_capacity(self.dim());
        let mut exps = Vec::with_capacity(self.dim());
        for a in &self.vectors {
            let ab: Vec<Elem> = a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect();
            let x = ring.add(base, ring.scale(self.dot(d, &ab), 2));
            exps.push(self.lambda.exponent(x));
            target.push(self.index_of(&ab));
        }
        Ok(Monomial { conductor: self.conductor(), sign: 1, target, exps })
    }
}
