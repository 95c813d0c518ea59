//! Dense and monomial operators on `C[R^n]` with cyclotomic entries.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::{CycNum, CycNumJson};
use crate::error::{Error, Result};

/// Square matrix over `Q(zeta_N)`, indexed by basis vectors `e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    dim: usize,
    entries: Vec<CycNum>,
}

impl Operator {
    pub fn zero(conductor: u64, dim: usize) -> Self {
        Operator { dim, entries: vec![CycNum::zero(conductor); dim * dim] }
    }

    pub fn identity(conductor: u64, dim: usize) -> Self {
        let mut op = Self::zero(conductor, dim);
        for i in 0..dim {
            op.entries[i * dim + i] = CycNum::from_int(conductor, 1);
        }
        op
    }

    pub fn from_entries(dim: usize, entries: Vec<CycNum>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimMismatch(format!("{} entries for dimension {dim}", entries.len())));
        }
        Ok(Operator { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &Operator) -> Operator {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        let d = self.dim;
        let entries: Vec<CycNum> = (0..d)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut row: Vec<Option<CycNum>> = vec![None; d];
                for l in 0..d {
                    let a = self.get(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, slot) in row.iter_mut().enumerate() {
                        let b = other.get(l, j);
                        if b.is_zero() {
                            continue;
                        }
                        let t = a * b;
                        *slot = Some(match slot.take() {
                            None => t,
                            Some(s) => &s + &t,
                        });
                    }
                }
                let zero = CycNum::zero(self.entries[0].conductor());
                row.into_iter().map(move |x| x.unwrap_or_else(|| zero.clone()))
            })
            .collect();
        Operator { dim: d, entries }
    }

    pub fn scale(&self, s: &CycNum) -> Operator {
        Operator { dim: self.dim, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn to_json(&self) -> OperatorJson {
        OperatorJson {
            dim: self.dim,
            entries: (0..self.dim).map(|i| (0..self.dim).map(|j| CycNumJson::from(self.get(i, j))).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorJson {
    pub dim: usize,
    pub entries: Vec<Vec<CycNumJson>>,
}

/// Operator sending `e_a` to `sign * zeta_N^{exps[a]} e_{target[a]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub conductor: u64,
    pub sign: i64,
    pub target: Vec<usize>,
    pub exps: Vec<u64>,
}

impl Monomial {
    pub fn identity(conductor: u64, dim: usize) -> Self {
        Monomial { conductor, sign: 1, target: (0..dim).collect(), exps: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    fn coefficient(&self, a: usize) -> CycNum {
        let z = CycNum::root_of_unity(self.conductor, self.exps[a] as i64);
        if self.sign < 0 {
            -&z
        } else {
            z
        }
    }

    pub fn to_operator(&self) -> Operator {
        let d = self.dim();
        let mut op = Operator::zero(self.conductor, d);
        for a in 0..d {
            op.set(self.target[a], a, self.coefficient(a));
        }
        op
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.conductor;
        let target = other.target.iter().map(|&b| self.target[b]).collect();
        let exps = other.target.iter().zip(&other.exps).map(|(&b, &e)| (e + self.exps[b]) % n).collect();
        Monomial { conductor: n, sign: self.sign * other.sign, target, exps }
    }

    /// `self * op`.
    pub fn mul_operator(&self, op: &Operator) -> Operator {
        let d = self.dim();
        assert_eq!(d, op.dim(), "operator dimensions differ");
        let coeffs: Vec<CycNum> = (0..d).map(|a| self.coefficient(a)).collect();
        let mut out = Operator::zero(self.conductor, d);
        for l in 0..d {
            let i = self.target[l];
            for j in 0..d {
                let x = op.get(l, j);
                if !x.is_zero() {
                    out.set(i, j, &coeffs[l] * x);
                }
            }
        }
        out
    }
}

impl Operator {
    /// `self * m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Operator {
        let d = self.dim;
        assert_eq!(d, m.dim(), "operator dimensions differ");
        let coeffs: Vec<CycNum> = (0..d).map(|a| m.coefficient(a)).collect();
        let mut out = Operator::zero(m.conductor, d);
        for i in 0..d {
            for a in 0..d {
                let x = self.get(i, m.target[a]);
                if !x.is_zero() {
                    out.set(i, a, x * &coeffs[a]);
                }
            }
        }
        out
    }
}

/// Dimension of the space of matrices commuting with every given monomial operator.
///
/// Each commutation equation `X S = S X` links two unknowns by a root of unity, so
/// the solution space is computed with a weighted union-find: a class of unknowns is
/// free unless some equation forces a nontrivial ratio around a cycle.
pub fn commutant_dimension(ops: &[Monomial]) -> usize {
    let Some(first) = ops.first() else { return 0 };
    let d = first.dim();
    let n = first.conductor;
    let vars = d * d;
    // x_v = zeta^{rel[v]} x_{parent[v]}
    let mut parent: Vec<usize> = (0..vars).collect();
    let mut rel = vec![0u64; vars];
    let mut dead = vec![false; vars];
    fn find(parent: &mut [usize], rel: &mut [u64], n: u64, v: usize) -> (usize, u64) {
        let mut path = Vec::new();
        let mut x = v;
        while parent[x] != x {
            path.push(x);
            x = parent[x];
        }
        let root = x;
        let mut acc = 0u64;
        for &y in path.iter().rev() {
            acc = (acc + rel[y]) % n;
            rel[y] = acc;
            parent[y] = root;
        }
        (root, if path.is_empty() { 0 } else { rel[v] })
    }
    for s in ops {
        let mut inv = vec![0usize; d];
        for a in 0..d {
            inv[s.target[a]] = a;
        }
        // (XS)_{i,a} = zeta^{e_a} X_{i,t(a)} and (SX)_{i,a} = zeta^{e_{inv i}} X_{inv i, a}
        for i in 0..d {
            for a in 0..d {
                let u = i * d + s.target[a];
                let v = inv[i] * d + a;
                // x_u = zeta^{k} x_v with k = e_{inv i} - e_a
                let k = (s.exps[inv[i]] + n - s.exps[a]) % n;
                let (ru, eu) = find(&mut parent, &mut rel, n, u);
                let (rv, ev) = find(&mut parent, &mut rel, n, v);
                if ru == rv {
                    // x_u = zeta^{eu} x_r and x_v = zeta^{ev} x_r
                    if (eu + n - ev) % n != k {
                        dead[ru] = true;
                    }
                } else {
                    // zeta^{eu} x_ru = zeta^{k+ev} x_rv
                    parent[ru] = rv;
                    rel[ru] = (k + ev + n - eu) % n;
                    if dead[ru] {
                        dead[rv] = true;
                    }
                }
            }
        }
    }
    (0..vars).filter(|&v| parent[v] == v && !dead[v]).count()
}
