//! Dense matrices over a [`Ring`] and the skew-hermitian form space `(S^{2m}, J)`.
//!
//! Coordinates in `S^{2m}` are ordered `u_1..u_m, v_1..v_m`, so the Gram matrix of the
//! standard symplectic basis is the block matrix `J = [[0, 1], [-1, 0]]`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::localring::{Elem, Ring};

#[derive(Clone, Debug)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data && self.ring == other.ring
    }
}

impl Eq for Mat {}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.ring.fmt_elem(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Mat {
        Mat { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Mat {
        Self::scalar(ring, n, ring.one())
    }

    pub fn scalar(ring: &Ring, n: usize, a: Elem) -> Mat {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, a);
        }
        m
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_vec(ring: &Ring, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::DimMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Mat { ring: ring.clone(), rows, cols, data })
    }

    /// Integer entries, reduced into the ring.
    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Mat::from_fn(ring, r, c, |i, j| ring.from_int(rows[i][j]))
    }

    pub fn diag(ring: &Ring, entries: &[Elem]) -> Mat {
        let n = entries.len();
        Mat::from_fn(ring, n, n, |i, j| if i == j { entries[i] } else { ring.zero() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: Elem) {
        self.data[i * self.cols + j] = a;
    }

    pub fn map(&self, ring: &Ring, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat { ring: ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f(a)).collect() }
    }

    fn same_ring(&self, other: &Mat) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = Mat::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(out.data[idx], r.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Mat, f: impl Fn(Elem, Elem) -> Elem) -> Result<Mat> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        let r = self.ring.clone();
        self.zip(other, |a, b| r.add(a, b))
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        let r = self.ring.clone();
        self.zip(other, |a, b| r.sub(a, b))
    }

    pub fn scale(&self, s: Elem) -> Mat {
        let r = &self.ring;
        self.map(r, |a| r.mul(s, a))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Mat {
        Mat::from_fn(&self.ring, self.cols, self.rows, |i, j| self.ring.star(self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| self.ring.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(&self.ring, self.rows)
    }

    /// `x* = x`.
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.star() == *self
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(&self.ring, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn from_blocks(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        let m = a.rows;
        Mat::from_fn(&a.ring, 2 * m, 2 * m, |i, j| match (i < m, j < m) {
            (true, true) => a.get(i, j),
            (true, false) => b.get(i, j - m),
            (false, true) => c.get(i - m, j),
            (false, false) => d.get(i - m, j - m),
        })
    }

    /// The four `m x m` blocks of a `2m x 2m` matrix.
    pub fn blocks(&self) -> [Mat; 4] {
        let m = self.rows / 2;
        [self.block(0, 0, m, m), self.block(0, m, m, m), self.block(m, 0, m, m), self.block(m, m, m, m)]
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let r = &self.ring;
        (0..self.rows)
            .map(|i| (0..self.cols).fold(r.zero(), |acc, j| r.add(acc, r.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn det(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::DimMismatch("determinant of a non-square matrix".into()));
        }
        Ok(det_of(&self.ring, self.data.clone(), self.rows))
    }

    pub fn try_inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let r = &self.ring;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(r, n);
        for col in 0..n {
            let piv = (col..n).find(|&i| r.is_unit(a.get(i, col)))?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let pinv = r.try_inv(a.get(col, col))?;
            a.scale_row(col, pinv);
            inv.scale_row(col, pinv);
            for i in 0..n {
                if i != col {
                    let f = a.get(i, col);
                    if !r.is_zero(f) {
                        a.add_row_multiple(i, col, r.neg(f));
                        inv.add_row_multiple(i, col, r.neg(f));
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn inverse(&self) -> Result<Mat> {
        self.try_inverse().ok_or(Error::NotInvertible)
    }

    pub fn is_invertible(&self) -> bool {
        self.try_inverse().is_some()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, s: Elem) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = self.ring.mul(s, self.data[idx]);
        }
    }

    /// row[i] += s * row[k]
    fn add_row_multiple(&mut self, i: usize, k: usize, s: Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(s, self.data[k * self.cols + j]);
            let idx = i * self.cols + j;
            self.data[idx] = self.ring.add(self.data[idx], v);
        }
    }

    pub fn random<R: Rng + ?Sized>(ring: &Ring, rows: usize, cols: usize, rng: &mut R) -> Mat {
        Mat::from_fn(ring, rows, cols, |_, _| ring.random(rng))
    }

    pub fn random_invertible<R: Rng + ?Sized>(ring: &Ring, n: usize, rng: &mut R) -> Mat {
        loop {
            let m = Mat::random(ring, n, n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// Random matrix with `x* = x`.
    pub fn random_symmetric<R: Rng + ?Sized>(ring: &Ring, n: usize, rng: &mut R) -> Mat {
        let m = Mat::random(ring, n, n, rng);
        let s = m.try_add(&m.star()).expect("same shape");
        s.scale(ring.half())
    }
}

/// Determinant by unit-pivot elimination, falling back to cofactor expansion once no
/// unit pivot is available.
fn det_of(r: &Ring, mut a: Vec<Elem>, n: usize) -> Elem {
    let mut d = r.one();
    for col in 0..n {
        match (col..n).find(|&i| r.is_unit(a[i * n + col])) {
            Some(piv) => {
                if piv != col {
                    for j in 0..n {
                        a.swap(piv * n + j, col * n + j);
                    }
                    d = r.neg(d);
                }
                let pv = a[col * n + col];
                d = r.mul(d, pv);
                let pinv = r.try_inv(pv).expect("unit pivot");
                for i in col + 1..n {
                    let f = r.mul(a[i * n + col], pinv);
                    if r.is_zero(f) {
                        continue;
                    }
                    for j in col..n {
                        a[i * n + j] = r.sub(a[i * n + j], r.mul(f, a[col * n + j]));
                    }
                }
            }
            None => {
                let size = n - col;
                let sub: Vec<Elem> = (col..n).flat_map(|i| (col..n).map(move |j| (i, j))).map(|(i, j)| a[i * n + j]).collect();
                return r.mul(d, laplace(r, &sub, size));
            }
        }
    }
    d
}

fn laplace(r: &Ring, a: &[Elem], n: usize) -> Elem {
    if n == 0 {
        return r.one();
    }
    if n == 1 {
        return a[0];
    }
    let mut total = r.zero();
    for j in 0..n {
        let e = a[j];
        if r.is_zero(e) {
            continue;
        }
        let minor: Vec<Elem> = (1..n)
            .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| a[i * n + c])
            .collect();
        let term = r.mul(e, det_of(r, minor, n - 1));
        total = if j % 2 == 0 { r.add(total, term) } else { r.sub(total, term) };
    }
    total
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'a Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &'a Mat) -> Mat {
        self.try_add(rhs).expect("matrix sum shape")
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &'a Mat) -> Mat {
        self.try_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        let r = &self.ring;
        self.map(r, |a| r.neg(a))
    }
}

/// `S^{2m}` with the skew-hermitian form `h(u, v) = u* J v`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormSpace {
    ring: Ring,
    m: usize,
    j: Mat,
}

impl FormSpace {
    pub fn new(ring: &Ring, m: usize) -> FormSpace {
        let one = Mat::identity(ring, m);
        let zero = Mat::zeros(ring, m, m);
        let j = Mat::from_blocks(&zero, &one, &(-&one), &zero);
        FormSpace { ring: ring.clone(), m, j }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    pub fn gram(&self) -> &Mat {
        &self.j
    }

    /// Coordinate index of `u_i` (0-based pair index).
    pub fn u_index(&self, i: usize) -> usize {
        i
    }

    /// Coordinate index of `v_i`.
    pub fn v_index(&self, i: usize) -> usize {
        self.m + i
    }

    /// Standard basis vector with a one at coordinate `idx`.
    pub fn basis(&self, idx: usize) -> Vec<Elem> {
        let mut v = vec![self.ring.zero(); self.dim()];
        v[idx] = self.ring.one();
        v
    }

    /// `h(u, v) = u* J v = sum_i (u_i* v_{m+i} - u_{m+i}* v_i)`.
    pub fn form(&self, u: &[Elem], v: &[Elem]) -> Elem {
        let r = &self.ring;
        let m = self.m;
        (0..m).fold(r.zero(), |acc, i| {
            let a = r.mul(r.star(u[i]), v[m + i]);
            let b = r.mul(r.star(u[m + i]), v[i]);
            r.add(acc, r.sub(a, b))
        })
    }

    pub fn check_vector(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimMismatch(format!("vector of length {} in dimension {}", v.len(), self.dim())));
        }
        Ok(())
    }

    pub fn check_matrix(&self, x: &Mat) -> Result<()> {
        if x.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if x.rows() != self.dim() || x.cols() != self.dim() {
            return Err(Error::DimMismatch(format!("{}x{} matrix in dimension {}", x.rows(), x.cols(), self.dim())));
        }
        Ok(())
    }

    /// `x* J x = J`.
    pub fn is_unitary(&self, x: &Mat) -> bool {
        self.check_matrix(x).is_ok() && &(&x.star() * &self.j) * x == self.j
    }

    pub fn is_special_unitary(&self, x: &Mat) -> bool {
        self.is_unitary(x) && x.det().map(|d| d == self.ring.one()).unwrap_or(false)
    }

    /// Vector with some coordinate a unit.
    pub fn is_basis_vector(&self, v: &[Elem]) -> bool {
        v.iter().any(|&a| self.ring.is_unit(a))
    }
}

/// Enumerates all `m x m` matrices with `x* = x`, in lexicographic order of row-major
/// entry tuples.
pub fn symmetric_matrices(ring: &Ring, m: usize) -> Result<Vec<Mat>> {
    let sym = ring.symmetric_elements();
    let all: Vec<Elem> = ring.iter().collect();
    let slots: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let sizes: Vec<usize> = slots.iter().map(|&(i, j)| if i == j { sym.len() } else { all.len() }).collect();
    let total: u128 = sizes.iter().map(|&s| s as u128).product();
    crate::error::check_cap(total, ring.cap()).map_err(|_| Error::SearchSpaceTooLarge { size: total, cap: ring.cap() })?;
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; slots.len()];
    loop {
        let mut x = Mat::zeros(ring, m, m);
        for (s, &(i, j)) in slots.iter().enumerate() {
            if i == j {
                x.set(i, i, sym[idx[s]]);
            } else {
                let a = all[idx[s]];
                x.set(i, j, a);
                x.set(j, i, ring.star(a));
            }
        }
        out.push(x);
        let mut s = slots.len();
        loop {
            if s == 0 {
                return Ok(out);
            }
            s -= 1;
            idx[s] += 1;
            if idx[s] < sizes[s] {
                break;
            }
            idx[s] = 0;
        }
    }
}

/// Enumerates all invertible `m x m` matrices.
pub fn invertible_matrices(ring: &Ring, m: usize) -> Result<Vec<Mat>> {
    Ok(all_matrices(ring, m, m)?.filter(|x| x.is_invertible()).collect())
}

/// Every `rows x cols` matrix in lexicographic order of row-major entry tuples.
pub fn all_matrices(ring: &Ring, rows: usize, cols: usize) -> Result<impl Iterator<Item = Mat> + '_> {
    let size = ring.size() as u128;
    let total = size.checked_pow((rows * cols) as u32).unwrap_or(u128::MAX);
    crate::error::check_cap(total, ring.cap())?;
    let cells = rows * cols;
    let size = size as usize;
    Ok((0..total as usize).map(move |mut t| {
        let mut data = vec![ring.zero(); cells];
        for c in (0..cells).rev() {
            data[c] = ring.from_index(t % size);
            t /= size;
        }
        Mat { ring: ring.clone(), rows, cols, data }
    }))
}
