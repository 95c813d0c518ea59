//! Finite commutative local rings of odd residue characteristic equipped with an
//! involution.
//!
//! Three families are supported:
//!
//! * `ZmodPk`: `Z/p^k` with the trivial involution,
//! * `UnramifiedQuad`: `(Z/p^k)[x]/(f)` with `f` a monic quadratic irreducible mod `p`,
//!   carrying either the lift of the Frobenius automorphism or the trivial involution,
//! * `RamifiedDual`: `(Z/p^k)[t]/(t^2)` with `t* = -t` (or trivial).
//!
//! Elements are plain coefficient pairs; all arithmetic goes through a [`Ring`]
//! handle, which is cheap to clone.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result, DEFAULT_MAX_ENUM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    ZmodPk,
    UnramifiedQuad,
    RamifiedDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionKind {
    Trivial,
    Frobenius,
    NegateGenerator,
}

/// Serializable description of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub family: Family,
    pub p: u64,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<i64>>,
    pub involution: InvolutionKind,
}

impl RingSpec {
    pub fn zmod(p: u64, k: u32) -> Self {
        RingSpec { family: Family::ZmodPk, p, k, modulus: None, involution: InvolutionKind::Trivial }
    }

    /// `(Z/p^k)[x]/(x^2 + c1 x + c0)` with the Frobenius lift.
    pub fn unramified(p: u64, k: u32, c0: i64, c1: i64) -> Self {
        RingSpec {
            family: Family::UnramifiedQuad,
            p,
            k,
            modulus: Some(vec![c0, c1, 1]),
            involution: InvolutionKind::Frobenius,
        }
    }

    /// Unramified quadratic extension `x^2 + c` with the smallest `c > 0` such that
    /// `-c` is a non-square mod `p`.
    pub fn galois(p: u64, k: u32) -> Self {
        let c = (1..p)
            .find(|&c| {
                let v = (p - c) % p;
                (0..p).all(|y| (y * y) % p != v)
            })
            .unwrap_or(1);
        Self::unramified(p, k, c as i64, 0)
    }

    pub fn dual(p: u64, k: u32) -> Self {
        RingSpec {
            family: Family::RamifiedDual,
            p,
            k,
            modulus: None,
            involution: InvolutionKind::NegateGenerator,
        }
    }

    pub fn with_involution(mut self, involution: InvolutionKind) -> Self {
        self.involution = involution;
        self
    }
}

/// A ring element: coefficients of `1` and of the generator, reduced mod `p^k`.
///
/// The derived ordering is the canonical lexicographic order on coefficient tuples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) [u64; 2]);

impl Elem {
    pub fn coeffs(&self) -> [u64; 2] {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ramification {
    Trivial,
    Unramified,
    Ramified,
}

struct Inner {
    spec: RingSpec,
    p: u64,
    k: u32,
    n: u64,
    deg: usize,
    c0: u64,
    c1: u64,
    cap: u64,
}

/// Handle to a finite local ring with involution.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0;
        let inv = match s.spec.involution {
            InvolutionKind::Trivial => "trivial",
            InvolutionKind::Frobenius => "frobenius",
            InvolutionKind::NegateGenerator => "negate",
        };
        match s.spec.family {
            Family::ZmodPk => write!(f, "Z/{} ({inv})", s.n),
            Family::UnramifiedQuad => {
                write!(f, "(Z/{})[x]/(x^2+{}x+{}) ({inv})", s.n, s.c1, s.c0)
            }
            Family::RamifiedDual => write!(f, "(Z/{})[t]/(t^2) ({inv})", s.n),
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring> {
        Self::with_cap(spec, DEFAULT_MAX_ENUM)
    }

    /// Builds a ring whose enumeration helpers refuse to materialize more than `cap` items.
    pub fn with_cap(spec: RingSpec, cap: u64) -> Result<Ring> {
        let p = spec.p;
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidSpec(format!("p = {p} must be an odd prime")));
        }
        if spec.k == 0 {
            return Err(Error::InvalidSpec("k must be at least 1".into()));
        }
        let n = p
            .checked_pow(spec.k)
            .filter(|&n| n < (1 << 31))
            .ok_or_else(|| Error::InvalidSpec("p^k is too large".into()))?;
        let (deg, c0, c1, spec) = match spec.family {
            Family::ZmodPk => {
                if spec.involution != InvolutionKind::Trivial {
                    return Err(Error::InvalidSpec("Z/p^k only carries the trivial involution".into()));
                }
                (1, 0, 0, RingSpec { modulus: None, ..spec })
            }
            Family::RamifiedDual => {
                if spec.involution == InvolutionKind::Frobenius {
                    return Err(Error::InvalidSpec("dual numbers carry no Frobenius".into()));
                }
                (2, 0, 0, RingSpec { modulus: None, ..spec })
            }
            Family::UnramifiedQuad => {
                if spec.involution == InvolutionKind::NegateGenerator {
                    return Err(Error::InvalidSpec(
                        "use the frobenius involution for unramified extensions".into(),
                    ));
                }
                let m = spec
                    .modulus
                    .as_ref()
                    .ok_or_else(|| Error::InvalidSpec("modulus [c0,c1,c2] is required".into()))?;
                if m.len() != 3 {
                    return Err(Error::InvalidSpec("modulus must have three coefficients".into()));
                }
                let red = |c: i64| c.rem_euclid(n as i64) as u64;
                let lead = mod_inverse(red(m[2]), n)
                    .ok_or_else(|| Error::InvalidSpec("leading coefficient must be a unit".into()))?;
                let c0 = red(m[0]) * lead % n;
                let c1 = red(m[1]) * lead % n;
                let has_root = (0..p).any(|y| (y * y + c1 % p * y + c0 % p).is_multiple_of(p));
                if has_root {
                    return Err(Error::InvalidSpec("modulus is reducible mod p".into()));
                }
                let spec = RingSpec { modulus: Some(vec![c0 as i64, c1 as i64, 1]), ..spec };
                (2, c0, c1, spec)
            }
        };
        Ok(Ring(Arc::new(Inner { p, k: spec.k, n, deg, c0, c1, cap, spec })))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn family(&self) -> Family {
        self.0.spec.family
    }

    pub fn involution(&self) -> InvolutionKind {
        self.0.spec.involution
    }

    pub fn has_trivial_involution(&self) -> bool {
        self.0.spec.involution == InvolutionKind::Trivial
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Characteristic `p^k`.
    pub fn char_modulus(&self) -> u64 {
        self.0.n
    }

    /// Number of coefficients per element (1 or 2).
    pub fn degree(&self) -> usize {
        self.0.deg
    }

    pub fn cap(&self) -> u64 {
        self.0.cap
    }

    pub fn size(&self) -> u64 {
        self.0.n.pow(self.0.deg as u32)
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        match self.family() {
            Family::UnramifiedQuad => self.0.p * self.0.p,
            _ => self.0.p,
        }
    }

    pub fn zero(&self) -> Elem {
        Elem([0, 0])
    }

    pub fn one(&self) -> Elem {
        Elem([1 % self.0.n, 0])
    }

    pub fn from_int(&self, v: i64) -> Elem {
        Elem([v.rem_euclid(self.0.n as i64) as u64, 0])
    }

    /// The ring generator `x` or `t` (zero for `Z/p^k`).
    pub fn generator(&self) -> Elem {
        if self.0.deg == 2 {
            Elem([0, 1])
        } else {
            self.zero()
        }
    }

    /// Builds an element from coefficients; accepts one or `degree()` entries.
    pub fn elem(&self, coeffs: &[i64]) -> Result<Elem> {
        let n = self.0.n as i64;
        match coeffs {
            [a] => Ok(Elem([a.rem_euclid(n) as u64, 0])),
            [a, b] if self.0.deg == 2 => Ok(Elem([a.rem_euclid(n) as u64, b.rem_euclid(n) as u64])),
            [a, b] if b.rem_euclid(n) == 0 => Ok(Elem([a.rem_euclid(n) as u64, 0])),
            _ => Err(Error::BadParameter(format!("element {coeffs:?} does not fit {self}"))),
        }
    }

    /// Canonical coefficient list of length `degree()`.
    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        a.0[..self.0.deg].to_vec()
    }

    /// Position in the canonical lexicographic enumeration.
    pub fn index(&self, a: Elem) -> usize {
        if self.0.deg == 2 {
            (a.0[0] * self.0.n + a.0[1]) as usize
        } else {
            a.0[0] as usize
        }
    }

    pub fn from_index(&self, i: usize) -> Elem {
        let i = i as u64;
        if self.0.deg == 2 {
            Elem([i / self.0.n, i % self.0.n])
        } else {
            Elem([i, 0])
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let n = self.0.n;
        Elem([(a.0[0] + b.0[0]) % n, (a.0[1] + b.0[1]) % n])
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let n = self.0.n;
        Elem([(n - a.0[0]) % n, (n - a.0[1]) % n])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let n = self.0.n;
        let [a0, a1] = a.0;
        let [b0, b1] = b.0;
        match self.0.spec.family {
            Family::ZmodPk => Elem([a0 * b0 % n, 0]),
            Family::RamifiedDual => Elem([a0 * b0 % n, (a0 * b1 % n + a1 * b0 % n) % n]),
            Family::UnramifiedQuad => {
                // x^2 = -c1 x - c0
                let hi = a1 * b1 % n;
                let c0 = (a0 * b0 % n + n - hi * self.0.c0 % n) % n;
                let c1 = ((a0 * b1 % n + a1 * b0 % n) % n + n - hi * self.0.c1 % n) % n;
                Elem([c0, c1])
            }
        }
    }

    pub fn scale(&self, a: Elem, s: i64) -> Elem {
        self.mul(a, self.from_int(s))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut r = self.one();
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Galois-type conjugate used for norms: the other root for unramified rings,
    /// `t -> -t` for dual numbers, identity for `Z/p^k`.
    fn algebra_conj(&self, a: Elem) -> Elem {
        let n = self.0.n;
        match self.0.spec.family {
            Family::ZmodPk => a,
            Family::RamifiedDual => Elem([a.0[0], (n - a.0[1]) % n]),
            Family::UnramifiedQuad => {
                // x -> -c1 - x is the second root of the modulus.
                let a0 = (a.0[0] + n - a.0[1] * self.0.c1 % n) % n;
                Elem([a0, (n - a.0[1]) % n])
            }
        }
    }

    /// The ring involution.
    pub fn star(&self, a: Elem) -> Elem {
        match self.0.spec.involution {
            InvolutionKind::Trivial => a,
            _ => self.algebra_conj(a),
        }
    }

    pub fn is_zero(&self, a: Elem) -> bool {
        a.0 == [0, 0]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        let p = self.0.p;
        match self.0.spec.family {
            Family::UnramifiedQuad => !a.0[0].is_multiple_of(p) || !a.0[1].is_multiple_of(p),
            _ => !a.0[0].is_multiple_of(p),
        }
    }

    pub fn try_inv(&self, a: Elem) -> Option<Elem> {
        if !self.is_unit(a) {
            return None;
        }
        let c = self.algebra_conj(a);
        let norm = self.mul(a, c);
        let ninv = mod_inverse(norm.0[0], self.0.n)?;
        Some(self.mul(c, Elem([ninv, 0])))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        self.try_inv(a).ok_or_else(|| Error::NotAUnit(self.fmt_elem(a)))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The inverse of 2.
    pub fn half(&self) -> Elem {
        Elem([self.0.n.div_ceil(2), 0])
    }

    pub fn is_symmetric(&self, a: Elem) -> bool {
        self.star(a) == a
    }

    pub fn is_skew(&self, a: Elem) -> bool {
        self.star(a) == self.neg(a)
    }

    pub fn fmt_elem(&self, a: Elem) -> String {
        if self.0.deg == 2 {
            format!("[{},{}]", a.0[0], a.0[1])
        } else {
            format!("[{}]", a.0[0])
        }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        self.from_index(rng.gen_range(0..self.size() as usize))
    }

    pub fn random_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        loop {
            let a = self.random(rng);
            if self.is_unit(a) {
                return a;
            }
        }
    }

    pub fn random_symmetric<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let a = self.random(rng);
        self.mul(self.add(a, self.star(a)), self.half())
    }

    /// All elements in canonical order, without a size check.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size() as usize).map(move |i| self.from_index(i))
    }

    /// All elements in canonical order, refusing rings larger than the cap.
    pub fn enumerate(&self) -> Result<Vec<Elem>> {
        check_cap(self.size() as u128, self.0.cap)?;
        Ok(self.iter().collect())
    }

    pub fn units(&self) -> Vec<Elem> {
        self.iter().filter(|&a| self.is_unit(a)).collect()
    }

    /// Elements fixed by the involution.
    pub fn symmetric_elements(&self) -> Vec<Elem> {
        self.iter().filter(|&a| self.is_symmetric(a)).collect()
    }

    pub fn skew_elements(&self) -> Vec<Elem> {
        self.iter().filter(|&a| self.is_skew(a)).collect()
    }

    /// Residue field `S/m` as a ring with the induced involution.
    pub fn residue_ring(&self) -> Ring {
        let p = self.0.p;
        let spec = match self.family() {
            Family::UnramifiedQuad => RingSpec {
                family: Family::UnramifiedQuad,
                p,
                k: 1,
                modulus: Some(vec![(self.0.c0 % p) as i64, (self.0.c1 % p) as i64, 1]),
                involution: self.involution(),
            },
            _ => RingSpec::zmod(p, 1),
        };
        Ring::with_cap(spec, self.0.cap).expect("residue ring is valid")
    }

    /// Image in the residue field.
    pub fn residue(&self, a: Elem) -> Elem {
        let p = self.0.p;
        match self.family() {
            Family::UnramifiedQuad => Elem([a.0[0] % p, a.0[1] % p]),
            _ => Elem([a.0[0] % p, 0]),
        }
    }

    /// Canonical lift of a residue-field element.
    pub fn section(&self, a: Elem) -> Elem {
        a
    }

    /// Ring fixed by the involution, as a ring with trivial involution.
    pub fn fixed_ring(&self) -> Ring {
        if self.has_trivial_involution() {
            self.clone()
        } else {
            Ring::with_cap(RingSpec::zmod(self.0.p, self.0.k), self.0.cap).expect("valid")
        }
    }

    /// `d` with `|R| = q_R^d` where `R` is the fixed ring and `q_R` its residue field size.
    pub fn fixed_ring_exponent(&self) -> u32 {
        let r = self.fixed_ring();
        let (mut size, q, mut d) = (r.size(), r.q(), 0);
        while size > 1 {
            size /= q;
            d += 1;
        }
        d
    }

    pub fn classify_ramification(&self) -> Ramification {
        if self.has_trivial_involution() {
            return Ramification::Trivial;
        }
        if self.iter().any(|a| self.is_unit(a) && self.is_skew(a)) {
            return Ramification::Unramified;
        }
        // ramified: a* - a lies in the maximal ideal on generators
        let g = self.generator();
        debug_assert!(!self.is_unit(self.sub(self.star(g), g)));
        Ramification::Ramified
    }

    /// Principal ideal generated by `a`, as a membership table over indices.
    fn principal(&self, a: Elem) -> Vec<bool> {
        let mut mem = vec![false; self.size() as usize];
        for s in self.iter() {
            mem[self.index(self.mul(s, a))] = true;
        }
        mem
    }

    /// Minimal nonzero ideals, each given by its sorted element list.
    pub fn minimal_ideals(&self) -> Result<Vec<Vec<Elem>>> {
        let size = self.size() as u128;
        check_cap(size * size, self.0.cap.saturating_mul(100))?;
        let mut ideals: BTreeSet<Vec<usize>> = BTreeSet::new();
        for a in self.iter().skip(1) {
            let mem = self.principal(a);
            ideals.insert((0..mem.len()).filter(|&i| mem[i]).collect());
        }
        let ideals: Vec<Vec<usize>> = ideals.into_iter().collect();
        let minimal = ideals
            .iter()
            .filter(|i| {
                !ideals
                    .iter()
                    .any(|j| j.len() < i.len() && j.iter().all(|x| i.binary_search(x).is_ok()))
            })
            .map(|i| i.iter().map(|&x| self.from_index(x)).collect())
            .collect();
        Ok(minimal)
    }

    /// The unique minimal ideal, or `NoUniqueMinimalIdeal`.
    pub fn minimal_ideal(&self) -> Result<Vec<Elem>> {
        let mut mins = self.minimal_ideals()?;
        if mins.len() == 1 {
            Ok(mins.pop().unwrap())
        } else {
            Err(Error::NoUniqueMinimalIdeal)
        }
    }

    /// Is `a` a square of a unit (for `a` a unit)?
    pub fn is_unit_square(&self, a: Elem) -> bool {
        self.is_unit(a) && self.iter().any(|b| self.mul(b, b) == a)
    }

    /// Table of squares of units, indexed by element index.
    pub fn unit_square_table(&self) -> Vec<bool> {
        let mut t = vec![false; self.size() as usize];
        for b in self.iter().filter(|&b| self.is_unit(b)) {
            t[self.index(self.mul(b, b))] = true;
        }
        t
    }

    /// `a^p` computed on the residue field.
    pub fn residue_frobenius(&self, a: Elem) -> Elem {
        let r = self.residue_ring();
        r.pow(self.residue(a), self.0.p)
    }

    // ---- ideals and quotients ----

    /// Additive closure of `S * generators`.
    pub fn ideal(&self, generators: &[Elem]) -> Ideal {
        let size = self.size() as usize;
        let mut mem = vec![false; size];
        let mut span: Vec<Elem> = Vec::new();
        for &g in generators {
            span.push(g);
            if self.0.deg == 2 {
                span.push(self.mul(self.generator(), g));
            }
        }
        mem[0] = true;
        let mut stack = vec![self.zero()];
        while let Some(x) = stack.pop() {
            for &g in &span {
                let y = self.add(x, g);
                let i = self.index(y);
                if !mem[i] {
                    mem[i] = true;
                    stack.push(y);
                }
            }
        }
        Ideal { ring: self.clone(), members: mem }
    }

    /// Quotient by the ideal generated by `generators`.
    pub fn quotient(&self, generators: &[Elem]) -> Result<QuotientMap> {
        check_cap(self.size() as u128, self.0.cap)?;
        let ideal = self.ideal(generators);
        if ideal.contains(self.one()) {
            return Err(Error::ImproperIdeal);
        }
        if !ideal.is_star_invariant() {
            return Err(Error::NotStarInvariant);
        }
        let p = self.0.p;
        let k = self.0.k;
        for j in 1..=k {
            let pj = p.pow(j);
            let mut candidates = vec![QuotientKind::ModPower(j)];
            if self.family() == Family::RamifiedDual {
                candidates.push(QuotientKind::ModPowerAndGenerator(j));
            }
            for kind in candidates {
                let kernel = |a: Elem| match kind {
                    QuotientKind::ModPower(_) => a.0[0].is_multiple_of(pj) && a.0[1].is_multiple_of(pj),
                    QuotientKind::ModPowerAndGenerator(_) => a.0[0].is_multiple_of(pj),
                };
                if self.iter().all(|a| kernel(a) == ideal.contains(a)) {
                    let target = self.quotient_target(kind)?;
                    return Ok(QuotientMap { source: self.clone(), target, kind });
                }
            }
        }
        Err(Error::UnsupportedQuotient)
    }

    fn quotient_target(&self, kind: QuotientKind) -> Result<Ring> {
        let p = self.0.p;
        let spec = match (self.family(), kind) {
            (_, QuotientKind::ModPowerAndGenerator(j)) => RingSpec::zmod(p, j),
            (Family::ZmodPk, QuotientKind::ModPower(j)) => RingSpec::zmod(p, j),
            (Family::RamifiedDual, QuotientKind::ModPower(j)) => {
                RingSpec { k: j, ..self.0.spec.clone() }
            }
            (Family::UnramifiedQuad, QuotientKind::ModPower(j)) => {
                let pj = p.pow(j);
                RingSpec {
                    k: j,
                    modulus: Some(vec![(self.0.c0 % pj) as i64, (self.0.c1 % pj) as i64, 1]),
                    ..self.0.spec.clone()
                }
            }
        };
        Ring::with_cap(spec, self.0.cap)
    }
}

/// An ideal stored as a membership table.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    members: Vec<bool>,
}

impl Ideal {
    pub fn contains(&self, a: Elem) -> bool {
        self.members[self.ring.index(a)]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.ring.iter().filter(|&a| self.contains(a)).collect()
    }

    pub fn is_star_invariant(&self) -> bool {
        self.ring.iter().filter(|&a| self.contains(a)).all(|a| self.contains(self.ring.star(a)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// Reduce coefficients mod `p^j`.
    ModPower(u32),
    /// Reduce mod `p^j` and kill the generator.
    ModPowerAndGenerator(u32),
}

/// Projection `S -> S/I` onto one of the supported families.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Ring,
    target: Ring,
    kind: QuotientKind,
}

impl QuotientMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    pub fn project(&self, a: Elem) -> Elem {
        let n = self.target.char_modulus();
        match self.kind {
            QuotientKind::ModPower(_) => Elem([a.0[0] % n, a.0[1] % n]),
            QuotientKind::ModPowerAndGenerator(_) => Elem([a.0[0] % n, 0]),
        }
    }

    /// Least canonical representative of the preimage.
    pub fn section(&self, a: Elem) -> Elem {
        a
    }

    /// Is `a` in the kernel?
    pub fn in_kernel(&self, a: Elem) -> bool {
        self.target.is_zero(self.project(a))
    }
}
