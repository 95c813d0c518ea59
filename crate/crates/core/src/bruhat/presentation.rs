//! Exhaustive checks of the presentation of `SL_*(2, A)` on small rings.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{BruhatWord, Letter, Sl2Star};
use crate::error::{check_cap, Result};
use crate::group::closure;
use crate::localring::Ring;
use crate::matform::{all_matrices, invertible_matrices, Mat};

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub relations: Vec<RelationCheck>,
    pub generated_order: u64,
    /// Number of unitary matrices found by brute force, when enumerable.
    pub group_order: Option<u64>,
    pub b_injective: bool,
    pub bwb_injective: bool,
    pub cells_disjoint: bool,
    /// `h_t u_a w u_b w u_c = 1` exactly for `t = -1, b = 0, c = -a`.
    pub length_two_kernel: bool,
    /// The lower-left block of `h_t u_a w u_b w u_c` equals `(t*)^-1 b`.
    pub lower_left_formula: bool,
    pub length_two_tuples: u64,
    pub words_checked: u64,
    pub words_passed: u64,
    pub ok: bool,
}

/// A random word of the given length.
pub fn random_word<R: Rng + ?Sized>(g: &Sl2Star, len: usize, rng: &mut R) -> BruhatWord {
    let ring = g.ring();
    let letters = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Letter::Z,
            1 => Letter::K(Mat::random_invertible(ring, g.m(), rng)),
            _ => Letter::V(Mat::random_symmetric(ring, g.m(), rng)),
        })
        .collect();
    BruhatWord { letters }
}

fn check(name: &'static str, cases: impl Iterator<Item = bool>) -> RelationCheck {
    let (mut checked, mut failures) = (0, 0);
    for ok in cases {
        checked += 1;
        if !ok {
            failures += 1;
        }
    }
    RelationCheck { name, checked, failures }
}

/// Verifies the defining relations, that the generators produce the whole unitary
/// group, injectivity on words of `z`-length at most two, and that rewriting
/// preserves the value of `words` random words of length at most 20.
pub fn verify_presentation(ring: &Ring, m: usize, words: usize, seed: u64) -> Result<PresentationReport> {
    let g = Sl2Star::new(ring, m);
    g.check_hypotheses()?;
    let cap = ring.cap();
    let units = invertible_matrices(ring, m)?;
    let sym = g.symmetric()?.to_vec();
    let sym_units: Vec<Mat> = sym.iter().filter(|r| r.is_invertible()).cloned().collect();
    let sym_sing: Vec<Mat> = sym.iter().filter(|r| !r.is_invertible()).cloned().collect();
    let nu = units.len() as u128;
    let ns = sym.len() as u128;
    check_cap(nu * nu, cap)?;
    check_cap(nu * ns * ns * sym_sing.len() as u128, cap)?;

    let w = g.w();
    let h = |t: &Mat| g.h(t).expect("invertible");
    let u = |r: &Mat| g.u(r).expect("symmetric");
    let neg1 = g.scalar_block(-1);
    let mut relations = Vec::new();
    relations.push(check(
        "k_s k_t = k_st",
        units.iter().flat_map(|s| units.iter().map(move |t| (s, t))).map(|(s, t)| &h(s) * &h(t) == h(&(s * t))),
    ));
    relations.push(check(
        "v_q v_r = v_(q+r)",
        sym.iter().flat_map(|a| sym.iter().map(move |b| (a, b))).map(|(a, b)| &u(a) * &u(b) == u(&(a + b))),
    ));
    relations.push(check("z^2 = k_(-1)", std::iter::once(&w * &w == h(&neg1))));
    relations.push(check(
        "k_t v_r = v_(t r t*) k_t",
        units
            .iter()
            .flat_map(|t| sym.iter().map(move |r| (t, r)))
            .map(|(t, r)| &h(t) * &u(r) == &u(&(&(t * r) * &t.star())) * &h(t)),
    ));
    relations.push(check(
        "z k_t = k_((t*)^-1) z",
        units.iter().map(|t| &w * &h(t) == &h(&t.star().inverse().unwrap()) * &w),
    ));
    relations.push(check(
        "v_t z v_(t^-1) z v_t = z k_(-t^-1)",
        sym_units.iter().map(|t| {
            let ti = t.inverse().unwrap();
            let lhs = &(&(&(&u(t) * &w) * &u(&ti)) * &w) * &u(t);
            lhs == &w * &h(&(-&ti))
        }),
    ));
    relations.push(check(
        "z v_t z = v_(-t^-1) z k_(-t) v_(-t^-1)",
        sym_units.iter().map(|t| {
            let nti = -&t.inverse().unwrap();
            &(&w * &u(t)) * &w == &(&(&u(&nti) * &w) * &h(&(-t))) * &u(&nti)
        }),
    ));

    let mut gens = vec![w.clone()];
    gens.extend(units.iter().map(h));
    gens.extend(sym.iter().map(u));
    let generated = closure(&gens, cap)?;
    let dim = 2 * m;
    let group_order = match all_matrices(ring, dim, dim) {
        Ok(it) => Some(it.filter(|x| g.space().is_unitary(x)).count() as u64),
        Err(_) => None,
    };

    // z-length 0 and 1 normal forms
    let b_elems: Vec<Mat> = units.iter().flat_map(|t| sym.iter().map(move |r| (t, r))).map(|(t, r)| &h(t) * &u(r)).collect();
    let b_set: HashSet<&Mat> = b_elems.iter().collect();
    let b_injective = b_set.len() == b_elems.len();
    let mut bwb_set: HashSet<Mat> = HashSet::new();
    let mut bwb_count = 0usize;
    for t in &units {
        let ht = h(t);
        for r1 in &sym {
            let left = &(&ht * &u(r1)) * &w;
            for r2 in &sym {
                bwb_set.insert(&left * &u(r2));
                bwb_count += 1;
            }
        }
    }
    let bwb_injective = bwb_set.len() == bwb_count;
    let cells_disjoint = bwb_set.iter().all(|x| !b_set.contains(x));

    // z-length 2 with singular middle parameter
    let mut kernel_ok = true;
    let mut formula_ok = true;
    let mut tuples = 0u64;
    for t in &units {
        let ht = h(t);
        let tsi = t.star().inverse()?;
        for a in &sym {
            let left = &(&ht * &u(a)) * &w;
            for b in &sym_sing {
                let mid = &(&left * &u(b)) * &w;
                for c in &sym {
                    let x = &mid * &u(c);
                    tuples += 1;
                    let trivial = *t == neg1 && b.is_zero() && (a + c).is_zero();
                    if x.is_identity() != trivial {
                        kernel_ok = false;
                    }
                    if x.blocks()[2] != &tsi * b {
                        formula_ok = false;
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0u64;
    for _ in 0..words {
        let len = rng.gen_range(0..=20);
        let word = random_word(&g, len, &mut rng);
        let reduced = g.reduce(&word)?;
        let x = g.eval(&word)?;
        if reduced.z_length() <= 2 && g.eval(&reduced)? == x && reduced.z_length() == g.cell_of(&x)?.z_length() {
            passed += 1;
        }
    }

    let generated_order = generated.len() as u64;
    let all_generated = group_order.is_none_or(|n| n == generated_order)
        && generated.iter().all(|x| g.space().is_unitary(x));
    let ok = relations.iter().all(|r| r.failures == 0)
        && all_generated
        && b_injective
        && bwb_injective
        && cells_disjoint
        && kernel_ok
        && formula_ok
        && passed == words as u64;
    Ok(PresentationReport {
        relations,
        generated_order,
        group_order,
        b_injective,
        bwb_injective,
        cells_disjoint,
        length_two_kernel: kernel_ok,
        lower_left_formula: formula_ok,
        length_two_tuples: tuples,
        words_checked: words as u64,
        words_passed: passed,
        ok,
    })
}
