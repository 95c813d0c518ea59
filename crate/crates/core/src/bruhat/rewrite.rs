//! Rewriting words with the defining relations of the presentation.
//!
//! A word is kept in the shape `v_{r0} z v_{r1} z ... z v_{rn} k_T`: every `k` letter is
//! pushed to the right using `k_t v_r = v_{t r t*} k_t` and `k_t z = z k_{(t*)^-1}`,
//! adjacent `v` letters merge additively and `k` letters multiply. Three moves then
//! lower the number of `z` letters:
//!
//! * `z v_t z = v_{-t^-1} z k_{-t} v_{-t^-1}` for an invertible interior parameter,
//! * `z v_0 z = z^2 = k_{-1}`, which is central,
//! * when all interior parameters are singular, `v_a = v_{-u} z z^-1 v_{a+u}` with
//!   `z^-1 = k_{-1} z` and `u` chosen so the next moves apply to invertible parameters.

use serde::Serialize;

use super::{BruhatWord, Letter, Sl2Star};
use crate::error::{Error, Result};
use crate::matform::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewriteRule {
    /// Merging `k`/`v` letters and moving `k` letters to the right.
    Normalize,
    /// `z v_t z = v_{-t^-1} z k_{-t} v_{-t^-1}`.
    Exchange,
    /// `z v_0 z = k_{-1}`.
    Square,
    /// Insertion of `z z^-1` around a shift `u`.
    Shift,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    /// Index of the affected interior `v` parameter.
    pub position: usize,
    pub z_length: usize,
}

struct Syllables<'a> {
    g: &'a Sl2Star,
    v: Vec<Mat>,
    k: Mat,
}

impl<'a> Syllables<'a> {
    fn parse(g: &'a Sl2Star, word: &BruhatWord) -> Result<Self> {
        let mut s = Syllables { g, v: vec![g.zero_block()], k: g.id_block() };
        for l in &word.letters {
            match l {
                Letter::Z => s.push_z()?,
                Letter::K(t) => {
                    g.h(t)?;
                    s.k = &s.k * t;
                }
                Letter::V(r) => {
                    g.u(r)?;
                    let conj = &(&s.k * r) * &s.k.star();
                    let last = s.v.last_mut().unwrap();
                    *last = &*last + &conj;
                }
            }
        }
        Ok(s)
    }

    fn push_z(&mut self) -> Result<()> {
        self.k = self.k.star().inverse()?;
        self.v.push(self.g.zero_block());
        Ok(())
    }

    fn z_length(&self) -> usize {
        self.v.len() - 1
    }

    fn interior(&self) -> std::ops::Range<usize> {
        1..self.v.len().saturating_sub(1).max(1)
    }

    /// Pushes `k_s` standing just before `v[from]` to the right end.
    fn push_k_from(&mut self, from: usize, mut s: Mat) -> Result<()> {
        for i in from..self.v.len() {
            if i > from {
                s = s.star().inverse()?;
            }
            self.v[i] = &(&s * &self.v[i]) * &s.star();
        }
        self.k = &s * &self.k;
        Ok(())
    }

    /// `z v_t z -> v_{-t^-1} z k_{-t} v_{-t^-1}` at interior position `i`.
    fn exchange(&mut self, i: usize) -> Result<()> {
        let t = self.v[i].clone();
        let ti = t.inverse()?;
        self.v[i - 1] = &self.v[i - 1] - &ti;
        let next = &self.v[i + 1] - &ti;
        self.v.remove(i);
        self.v[i] = next;
        self.push_k_from(i, -&t)
    }

    /// `z v_0 z -> k_{-1}` at interior position `i`.
    fn square(&mut self, i: usize) {
        let merged = &self.v[i - 1] + &self.v[i + 1];
        self.v.splice(i - 1..=i + 1, [merged]);
        self.k = -&self.k;
    }

    /// Replaces `v[2]` by `v_{-u} z k_{-1} z v_{v[2]+u}`.
    fn shift(&mut self) -> Result<()> {
        let x = &self.v[1];
        let y = self.v[2].clone();
        let u = self.g.find_shift(&y, &(-x))?;
        let z = self.g.zero_block();
        let rest = &y + &u;
        self.v.splice(2..=2, [-&u, z, rest]);
        self.k = -&self.k;
        Ok(())
    }

    fn into_word(self) -> BruhatWord {
        let mut letters = Vec::new();
        let n = self.v.len();
        for (i, r) in self.v.into_iter().enumerate() {
            if !r.is_zero() {
                letters.push(Letter::V(r));
            }
            if i + 1 < n {
                letters.push(Letter::Z);
            }
        }
        if !self.k.is_identity() {
            letters.push(Letter::K(self.k));
        }
        BruhatWord { letters }
    }
}

pub(super) fn reduce(g: &Sl2Star, word: &BruhatWord) -> Result<(BruhatWord, Vec<RewriteStep>)> {
    g.check_hypotheses()?;
    let mut s = Syllables::parse(g, word)?;
    let mut trace = vec![RewriteStep { rule: RewriteRule::Normalize, position: 0, z_length: s.z_length() }];
    let budget = 64 * (word.len() + 4);
    for _ in 0..budget {
        let unit = s.interior().find(|&i| s.v[i].is_invertible());
        let zero = s.interior().find(|&i| s.v[i].is_zero());
        let (rule, pos) = if let Some(i) = unit {
            s.exchange(i)?;
            (RewriteRule::Exchange, i)
        } else if let Some(i) = zero {
            s.square(i);
            (RewriteRule::Square, i)
        } else if s.z_length() >= 3 {
            s.shift()?;
            (RewriteRule::Shift, 2)
        } else {
            return Ok((s.into_word(), trace));
        };
        trace.push(RewriteStep { rule, position: pos, z_length: s.z_length() });
    }
    Err(Error::NoSolution("rewriting did not terminate".into()))
}
