//! Certificates that `W` is a representation intertwining the Schrödinger
//! representation.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{commutant_dimension, HeisenbergElem, Operator, WeilRep};
use crate::bruhat::{random_word, RelationCheck};
use crate::error::Result;
use crate::group::closure;
use crate::localring::{Elem, Ring};
use crate::matform::{invertible_matrices, Mat};

#[derive(Clone, Debug, Serialize)]
pub struct WeilReport {
    pub n: usize,
    pub lambda: Vec<u64>,
    pub exhaustive: bool,
    pub group_order: Option<u64>,
    pub homomorphism: RelationCheck,
    pub relations: Vec<RelationCheck>,
    pub intertwining: RelationCheck,
    pub word_independence: RelationCheck,
    /// Only the identity maps to the identity operator, when enumerated.
    pub kernel_trivial: Option<bool>,
    pub commutant_dimension: usize,
    pub ok: bool,
}

fn tally(name: &'static str, results: Vec<bool>) -> RelationCheck {
    let failures = results.iter().filter(|ok| !**ok).count() as u64;
    RelationCheck { name, checked: results.len() as u64, failures }
}

fn random_heisenberg(w: &WeilRep, rng: &mut ChaCha8Rng) -> HeisenbergElem {
    let ring = w.ring();
    HeisenbergElem { r: ring.random(rng), u: (0..2 * w.n()).map(|_| ring.random(rng)).collect() }
}

/// Exhaustive over the group when `|R|^(n(2n+1))` fits within the ring's cap,
/// otherwise `samples` random instances of each check.
pub fn verify_weil(ring: &Ring, n: usize, c: Elem, samples: usize, seed: u64) -> Result<WeilReport> {
    let w = WeilRep::new(ring, n, c)?;
    let g = w.group();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = ring.cap();
    let dimension = (n * (2 * n + 1)) as u32;
    let exhaustive = (ring.size() as u128).checked_pow(dimension).is_some_and(|s| s <= cap as u128);

    let sym = g.symmetric()?.to_vec();
    let (units, syms): (Vec<Mat>, Vec<Mat>) = if exhaustive {
        (invertible_matrices(ring, n)?, sym.clone())
    } else {
        (
            (0..samples).map(|_| Mat::random_invertible(ring, n, &mut rng)).collect(),
            (0..samples).map(|_| Mat::random_symmetric(ring, n, &mut rng)).collect(),
        )
    };
    let pairs = |len: usize, rng: &mut ChaCha8Rng| -> Vec<(usize, usize)> {
        if exhaustive {
            (0..len).flat_map(|i| (0..len).map(move |j| (i, j))).collect()
        } else {
            (0..samples).map(|_| (rng.gen_range(0..len), rng.gen_range(0..len))).collect()
        }
    };

    // relations on generator operators
    let sigma = w.sigma_op();
    let hs: Vec<_> = units.iter().map(|t| w.h_op(t)).collect::<Result<_>>()?;
    let us: Vec<_> = syms.iter().map(|s| w.u_op(s)).collect::<Result<_>>()?;
    let mut relations = Vec::new();
    let tp = pairs(units.len(), &mut rng);
    relations.push(tally(
        "h_T1 h_T2 = h_T1T2",
        tp.par_iter().map(|&(i, j)| hs[i].mul(&hs[j]) == w.h_op(&(&units[i] * &units[j])).unwrap()).collect(),
    ));
    let sp = pairs(syms.len(), &mut rng);
    relations.push(tally(
        "u_S1 u_S2 = u_S1+S2",
        sp.par_iter().map(|&(i, j)| us[i].mul(&us[j]) == w.u_op(&(&syms[i] + &syms[j])).unwrap()).collect(),
    ));
    let h_neg = w.h_op(&g.scalar_block(-1))?;
    relations.push(tally("sigma^2 = h_-1", vec![sigma.mul(sigma) == h_neg.to_operator()]));
    let ts: Vec<(usize, usize)> = if exhaustive {
        (0..units.len()).flat_map(|i| (0..syms.len()).map(move |j| (i, j))).collect()
    } else {
        (0..samples).map(|i| (i, i)).collect()
    };
    relations.push(tally(
        "h_T u_S h_T^-1 = u_TST'",
        ts.par_iter()
            .map(|&(i, j)| {
                let t = &units[i];
                let lhs = hs[i].mul(&us[j]).mul(&w.h_op(&t.inverse().unwrap()).unwrap());
                lhs == w.u_op(&(&(t * &syms[j]) * &t.transpose())).unwrap()
            })
            .collect(),
    ));
    relations.push(tally(
        "sigma h_T = h_(T')^-1 sigma",
        units
            .par_iter()
            .zip(&hs)
            .map(|(t, h)| {
                let rhs = w.h_op(&t.transpose().inverse().unwrap()).unwrap().mul_operator(sigma);
                sigma.mul_monomial(h) == rhs
            })
            .collect(),
    ));
    let sym_units: Vec<Mat> = if exhaustive {
        sym.iter().filter(|t| t.is_invertible()).cloned().collect()
    } else {
        (0..samples)
            .map(|_| loop {
                let t = Mat::random_symmetric(ring, n, &mut rng);
                if t.is_invertible() {
                    break t;
                }
            })
            .collect()
    };
    relations.push(tally(
        "sigma u_T sigma = u_-T^-1 sigma h_T u_-T^-1",
        sym_units
            .par_iter()
            .map(|t| {
                let lhs = sigma.mul_monomial(&w.u_op(t).unwrap()).mul(sigma);
                let v = w.u_op(&(-&t.inverse().unwrap())).unwrap();
                let rhs = v.mul_operator(&sigma.mul_monomial(&w.h_op(t).unwrap().mul(&v)));
                lhs == rhs
            })
            .collect(),
    ));

    // group elements and their operators
    let elements: Vec<Mat> = if exhaustive {
        let mut gens = vec![g.w()];
        gens.extend(units.iter().map(|t| g.h(t).unwrap()));
        gens.extend(sym.iter().map(|s| g.u(s).unwrap()));
        closure(&gens, cap)?
    } else {
        (0..samples)
            .map(|_| {
                let len = rng.gen_range(1..=8);
                g.eval(&random_word(g, len, &mut rng))
            })
            .collect::<Result<_>>()?
    };
    let ops: Vec<Operator> = elements.par_iter().map(|x| w.operator(x)).collect::<Result<_>>()?;

    let homomorphism = if exhaustive {
        let index: HashMap<&Mat, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let all = pairs(elements.len(), &mut rng);
        tally(
            "W(g1 g2) = W(g1) W(g2)",
            all.par_iter().map(|&(i, j)| ops[i].mul(&ops[j]) == ops[index[&(&elements[i] * &elements[j])]]).collect(),
        )
    } else {
        let all = pairs(elements.len(), &mut rng);
        tally(
            "W(g1 g2) = W(g1) W(g2)",
            all.par_iter()
                .map(|&(i, j)| ops[i].mul(&ops[j]) == w.operator(&(&elements[i] * &elements[j])).unwrap())
                .collect(),
        )
    };

    let heis = w.heisenberg();
    let hs_gens: Vec<HeisenbergElem> = if exhaustive {
        heis.generators()
    } else {
        (0..samples).map(|_| random_heisenberg(&w, &mut rng)).collect()
    };
    let checks: Vec<(usize, usize)> = if exhaustive {
        (0..elements.len()).flat_map(|i| (0..hs_gens.len()).map(move |j| (i, j))).collect()
    } else {
        (0..samples).map(|i| (i, i)).collect()
    };
    let intertwining = tally(
        "W(g) S(h) = S(^g h) W(g)",
        checks
            .par_iter()
            .map(|&(i, j)| {
                let h = &hs_gens[j];
                let gh = heis.sp_act(&elements[i], h).unwrap();
                ops[i].mul_monomial(&w.schrodinger(h).unwrap()) == w.schrodinger(&gh).unwrap().mul_operator(&ops[i])
            })
            .collect(),
    );

    let words: Vec<_> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(0..=12);
            random_word(g, len, &mut rng)
        })
        .collect();
    let word_independence = tally(
        "W(word) = W(factor(eval(word)))",
        words
            .par_iter()
            .map(|word| w.word_operator(word).unwrap() == w.operator(&g.eval(word).unwrap()).unwrap())
            .collect(),
    );

    let kernel_trivial = exhaustive.then(|| {
        let id = Operator::identity(w.conductor(), w.dim());
        elements.iter().zip(&ops).all(|(x, op)| (*op == id) == x.is_identity())
    });

    let schrodinger: Vec<_> = heis.generators().iter().map(|h| w.schrodinger(h)).collect::<Result<_>>()?;
    let commutant = commutant_dimension(&schrodinger);

    let ok = homomorphism.failures == 0
        && relations.iter().all(|r| r.failures == 0)
        && intertwining.failures == 0
        && word_independence.failures == 0
        && kernel_trivial != Some(false)
        && commutant == 1;
    Ok(WeilReport {
        n,
        lambda: ring.coeffs(c),
        exhaustive,
        group_order: exhaustive.then_some(elements.len() as u64),
        homomorphism,
        relations,
        intertwining,
        word_independence,
        kernel_trivial,
        commutant_dimension: commutant,
        ok,
    })
}
