use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ulocal::bruhat::{random_word as bruhat_word, Sl2Star};
use ulocal::cyclo::CycNum;
use ulocal::json::MatJson;
use ulocal::localring::{InvolutionKind, Ring, RingSpec};
use ulocal::matform::{FormSpace, Mat};
use ulocal::reduce::ReductionContext;
use ulocal::transvect::{random_transvection, random_word, su_factor, transvection_matrix};
use ulocal::weil::{gauss_sum, mu, AdditiveCharacter};

fn specs() -> Vec<RingSpec> {
    vec![
        RingSpec::zmod(5, 1),
        RingSpec::zmod(5, 2),
        RingSpec::zmod(7, 1),
        RingSpec::galois(5, 1),
        RingSpec::galois(5, 2),
        RingSpec::galois(3, 1),
        RingSpec::dual(5, 1),
        RingSpec::dual(3, 2),
        RingSpec::galois(5, 1).with_involution(InvolutionKind::Trivial),
        RingSpec::dual(5, 1).with_involution(InvolutionKind::Trivial),
    ]
}

fn ring_and_rng() -> impl Strategy<Value = (Ring, ChaCha8Rng)> {
    (0..specs().len(), any::<u64>()).prop_map(|(i, seed)| (Ring::new(specs()[i].clone()).unwrap(), ChaCha8Rng::seed_from_u64(seed)))
}

fn cyc(n: u64) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-6i64..6, 1i64..4), n as usize).prop_map(move |c| {
        let coeffs: Vec<(BigInt, BigInt)> = c.iter().take(n as usize - 1).map(|&(a, b)| (a.into(), b.into())).collect();
        CycNum::from_coeffs(n, &coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((r, mut rng) in ring_and_rng()) {
        let (a, b, c) = (r.random(&mut rng), r.random(&mut rng), r.random(&mut rng));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.sub(r.add(a, b), b), a);
        prop_assert_eq!(r.star(r.star(a)), a);
        prop_assert_eq!(r.star(r.mul(a, b)), r.mul(r.star(a), r.star(b)));
        prop_assert_eq!(r.star(r.add(a, b)), r.add(r.star(a), r.star(b)));
        // local: units are exactly the elements with nonzero residue
        prop_assert_eq!(r.is_unit(a), !r.is_zero(r.residue(a)));
        if let Some(ai) = r.try_inv(a) {
            prop_assert_eq!(r.mul(a, ai), r.one());
        }
        let s = r.random_symmetric(&mut rng);
        prop_assert!(r.is_symmetric(s));
    }

    #[test]
    fn matrix_inverse_and_det((r, mut rng) in ring_and_rng(), n in 1usize..4) {
        let x = Mat::random(&r, n, n, &mut rng);
        let y = Mat::random(&r, n, n, &mut rng);
        prop_assert_eq!((&x * &y).det().unwrap(), r.mul(x.det().unwrap(), y.det().unwrap()));
        prop_assert_eq!(x.is_invertible(), r.is_unit(x.det().unwrap()));
        if let Some(xi) = x.try_inverse() {
            prop_assert!((&x * &xi).is_identity());
            prop_assert!((&xi * &x).is_identity());
        }
        prop_assert_eq!(x.star().star(), x.clone());
        prop_assert_eq!((&x * &y).star(), &y.star() * &x.star());
    }

    #[test]
    fn matrix_json_round_trip((r, mut rng) in ring_and_rng(), rows in 1usize..4, cols in 1usize..4) {
        let x = Mat::random(&r, rows, cols, &mut rng);
        let text = serde_json::to_string(&MatJson::from_mat(&x)).unwrap();
        let back: MatJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_mat_over(&r).unwrap(), x);
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyc(5), b in cyc(5), c in cyc(5), j in 1u64..5) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a - &a, CycNum::zero(5));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycNum::from_int(5, 1));
        }
        prop_assert_eq!((&a * &b).galois(j), &a.galois(j) * &b.galois(j));
        prop_assert_eq!(a.embed(25).embed(25), a.embed(25));
        prop_assert_eq!(&a.embed(25) * &b.embed(25), (&a * &b).embed(25));
    }

    #[test]
    fn gauss_identities(i in 0usize..3, seed in any::<u64>()) {
        let spec = [RingSpec::zmod(5, 1), RingSpec::zmod(5, 2), RingSpec::zmod(7, 1)][i].clone();
        let r = Ring::new(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = r.random_unit(&mut rng);
        let k = r.random_unit(&mut rng);
        let l = AdditiveCharacter::new(&r, c);
        let g = gauss_sum(&l).unwrap();
        let size = CycNum::from_int(l.conductor(), mu(&r, r.from_int(-1)).unwrap() * r.size() as i64);
        prop_assert_eq!(&g * &g, size);
        let gk = gauss_sum(&l.twist(k)).unwrap();
        let want = if mu(&r, k).unwrap() == 1 { g.clone() } else { -&g };
        prop_assert_eq!(gk, want);
    }

    #[test]
    fn rewriting_preserves_value(i in 0usize..3, seed in any::<u64>(), len in 0usize..20) {
        let spec = [RingSpec::zmod(5, 1), RingSpec::galois(5, 1), RingSpec::zmod(7, 1)][i].clone();
        let r = Ring::new(spec).unwrap();
        let g = Sl2Star::new(&r, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = bruhat_word(&g, len, &mut rng);
        let red = g.reduce(&w).unwrap();
        prop_assert!(red.z_length() <= 2);
        let x = g.eval(&w).unwrap();
        prop_assert_eq!(g.eval(&red).unwrap(), x.clone());
        prop_assert_eq!(g.eval(&g.factor(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn transvections_are_special_unitary((r, mut rng) in ring_and_rng(), m in 1usize..4) {
        let s = FormSpace::new(&r, m);
        let t = random_transvection(&s, &mut rng);
        let x = transvection_matrix(&s, t.a, &t.v).unwrap();
        prop_assert_eq!(x.det().unwrap(), r.one());
        prop_assert!(s.is_unitary(&x));
        let xi = transvection_matrix(&s, r.neg(t.a), &t.v).unwrap();
        prop_assert!((&x * &xi).is_identity());
    }

    #[test]
    fn su_factor_round_trip((r, mut rng) in ring_and_rng(), m in 1usize..4) {
        let s = FormSpace::new(&r, m);
        let x = random_word(&s, 8, &mut rng).eval(&s).unwrap();
        let w = su_factor(&s, &x).unwrap();
        w.check_letters(&s).unwrap();
        prop_assert_eq!(w.eval(&s).unwrap(), x);
    }

    #[test]
    fn lifts_project_back(i in 0usize..3, seed in any::<u64>(), m in 1usize..3) {
        let spec = [RingSpec::zmod(5, 2), RingSpec::dual(5, 1), RingSpec::galois(3, 2)][i].clone();
        let s = Ring::new(spec).unwrap();
        let g = if i == 1 { s.generator() } else { s.from_int(s.p() as i64) };
        let ctx = ReductionContext::new(&s, &[g], m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = random_word(ctx.target(), 8, &mut rng).eval(ctx.target()).unwrap();
        let x = ctx.lift_su(&z).unwrap();
        prop_assert_eq!(ctx.project_matrix(&x).unwrap(), z);
        prop_assert!(ctx.source().is_special_unitary(&x));
    }
}

#[test]
fn matrix_json_accepts_short_ring_form() {
    let text = r#"{"ring":"Z/25","rows":1,"cols":2,"entries":[[[1],[5]]]}"#;
    let m: MatJson = serde_json::from_str(text).unwrap();
    let r = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    assert_eq!(m.to_mat_over(&r).unwrap(), Mat::from_ints(&r, &[&[1, 5]]));
    assert!(serde_json::from_str::<MatJson>(r#"{"ring":"Z/9x","rows":0,"cols":0,"entries":[]}"#).is_err());
}
