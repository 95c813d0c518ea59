//! Exact arithmetic in cyclotomic fields `Q(zeta_n)` with `n = p^k` (or `n = 1`).
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(n)-1)` as integer
//! numerators over a common positive denominator, always in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

/// `(p, k)` with `n = p^k`; `n = 1` gives `(1, 0)`.
fn try_prime_power(n: u64) -> Option<(u64, u32)> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some((1, 0));
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn prime_power(n: u64) -> (u64, u32) {
    try_prime_power(n).unwrap_or_else(|| panic!("conductor {n} is not a prime power"))
}

fn totient(n: u64) -> usize {
    let (p, k) = prime_power(n);
    if k == 0 {
        1
    } else {
        ((p - 1) * p.pow(k - 1)) as usize
    }
}

/// Reduce a polynomial given by coefficients of `zeta^e`, `e < n`, modulo the
/// cyclotomic polynomial `sum_{i<p} x^{i p^{k-1}}`.
fn reduce_cyclic(n: u64, mut full: Vec<BigInt>) -> Vec<BigInt> {
    let deg = totient(n);
    if n == 1 {
        let s = full.into_iter().fold(BigInt::zero(), |a, b| a + b);
        return vec![s];
    }
    let (p, k) = prime_power(n);
    let m = p.pow(k - 1) as usize;
    for e in deg..n as usize {
        let c = std::mem::take(&mut full[e]);
        if c.is_zero() {
            continue;
        }
        let j = e - deg;
        for i in 0..(p as usize - 1) {
            full[i * m + j] -= &c;
        }
    }
    full.truncate(deg);
    full
}

impl CycNum {
    fn normalized(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> CycNum {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() && !g.is_zero() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        if num.iter().all(|c| c.is_zero()) {
            den = BigInt::one();
        }
        CycNum { n, num, den }
    }

    pub fn zero(n: u64) -> CycNum {
        CycNum { n, num: vec![BigInt::zero(); totient(n)], den: BigInt::one() }
    }

    pub fn from_int(n: u64, v: i64) -> CycNum {
        Self::from_ratio(n, BigInt::from(v), BigInt::one())
    }

    pub fn from_ratio(n: u64, num: BigInt, den: BigInt) -> CycNum {
        assert!(!den.is_zero(), "zero denominator");
        let mut c = vec![BigInt::zero(); totient(n)];
        c[0] = num;
        Self::normalized(n, c, den)
    }

    /// `zeta_n^e`.
    pub fn root_of_unity(n: u64, e: i64) -> CycNum {
        let mut counts = vec![0i64; n as usize];
        counts[e.rem_euclid(n as i64) as usize] = 1;
        Self::from_exponent_counts(n, &counts)
    }

    /// `sum_e counts[e] zeta_n^e` for `counts` of length `n`.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> CycNum {
        assert_eq!(counts.len(), n as usize);
        let full = counts.iter().map(|&c| BigInt::from(c)).collect();
        Self::normalized(n, reduce_cyclic(n, full), BigInt::one())
    }

    /// Builds from power-basis coefficients given as `(numerator, denominator)`.
    pub fn from_coeffs(n: u64, coeffs: &[(BigInt, BigInt)]) -> Result<CycNum> {
        if try_prime_power(n).is_none() {
            return Err(Error::BadParameter(format!("conductor {n} is not a prime power")));
        }
        let deg = totient(n);
        if coeffs.len() != deg {
            return Err(Error::DimMismatch(format!("{} coefficients for degree {deg}", coeffs.len())));
        }
        if coeffs.iter().any(|(_, d)| d.is_zero()) {
            return Err(Error::DivisionByZero);
        }
        let den = coeffs.iter().fold(BigInt::one(), |l, (_, d)| l.lcm(d));
        let num = coeffs.iter().map(|(a, d)| a * (&den / d)).collect();
        Ok(Self::normalized(n, num, den))
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.num.len()
    }

    /// Power-basis coefficient `i` as a reduced fraction.
    pub fn coeff(&self, i: usize) -> (BigInt, BigInt) {
        let g = self.num[i].gcd(&self.den);
        if g.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        (&self.num[i] / &g, &self.den / &g)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Is this a rational number?
    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational value, if rational.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        self.is_rational().then(|| self.coeff(0))
    }

    /// Re-expresses in `Q(zeta_target)` where `n` divides `target`.
    pub fn embed(&self, target: u64) -> CycNum {
        if target == self.n {
            return self.clone();
        }
        assert!(target.is_multiple_of(self.n), "cannot embed conductor {} into {}", self.n, target);
        let step = (target / self.n) as usize;
        let mut full = vec![BigInt::zero(); target as usize];
        for (i, c) in self.num.iter().enumerate() {
            full[(i * step) % target as usize] += c;
        }
        Self::normalized(target, reduce_cyclic(target, full), self.den.clone())
    }

    fn common(a: &CycNum, b: &CycNum) -> u64 {
        if a.n == b.n {
            return a.n;
        }
        let l = a.n.lcm(&b.n);
        prime_power(l);
        l
    }

    /// Applies the automorphism `zeta -> zeta^j` for `j` coprime to `n`.
    pub fn galois(&self, j: u64) -> CycNum {
        let n = self.n as usize;
        let mut full = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            full[(i * j as usize) % n] += c;
        }
        Self::normalized(self.n, reduce_cyclic(self.n, full), self.den.clone())
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CycNum {
        self.galois(self.n - 1)
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.n;
        let mut y = CycNum::from_int(n, 1);
        for j in 2..n {
            if j.gcd(&n) == 1 {
                y = &y * &self.galois(j);
            }
        }
        let norm = self * &y;
        let (a, b) = norm.as_rational().expect("norm is rational");
        Ok(y.scale_ratio(&b, &a))
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self * &other.inv()?)
    }

    pub fn scale_ratio(&self, num: &BigInt, den: &BigInt) -> CycNum {
        let n = self.num.iter().map(|c| c * num).collect();
        Self::normalized(self.n, n, &self.den * den)
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut r = CycNum::from_int(self.n, 1);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn mul_ref(&self, other: &CycNum) -> CycNum {
        let n = Self::common(self, other);
        if self.n != n || other.n != n {
            return self.embed(n).mul_ref(&other.embed(n));
        }
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(n);
        }
        let nn = n as usize;
        let mut full = vec![BigInt::zero(); nn];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % nn] += a * b;
                }
            }
        }
        Self::normalized(n, reduce_cyclic(n, full), &self.den * &other.den)
    }

    pub fn add_ref(&self, other: &CycNum) -> CycNum {
        let n = Self::common(self, other);
        if self.n != n || other.n != n {
            return self.embed(n).add_ref(&other.embed(n));
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return Self::normalized(n, num, self.den.clone());
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect();
        Self::normalized(n, num, &self.den * &other.den)
    }

    pub fn neg_ref(&self) -> CycNum {
        CycNum { n: self.n, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        self.add_ref(&rhs.neg_ref())
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for i in 0..self.num.len() {
            let (a, b) = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            let c = if b.is_one() { a.to_string() } else { format!("{a}/{b}") };
            terms.push(match i {
                0 => c,
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// JSON form: `{"n": n, "coeffs": [["num", "den"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycNumJson {
    pub n: u64,
    pub coeffs: Vec<[String; 2]>,
}

impl From<&CycNum> for CycNumJson {
    fn from(x: &CycNum) -> Self {
        CycNumJson {
            n: x.n,
            coeffs: (0..x.degree())
                .map(|i| {
                    let (a, b) = x.coeff(i);
                    [a.to_string(), b.to_string()]
                })
                .collect(),
        }
    }
}

impl TryFrom<&CycNumJson> for CycNum {
    type Error = Error;
    fn try_from(j: &CycNumJson) -> Result<CycNum> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|e| Error::SchemaError(format!("bad integer {s:?}: {e}")));
        let coeffs = j
            .coeffs
            .iter()
            .map(|[a, b]| Ok((parse(a)?, parse(b)?)))
            .collect::<Result<Vec<_>>>()?;
        CycNum::from_coeffs(j.n, &coeffs)
    }
}
