use num_bigint::BigInt;
use ulocal::cyclo::CycNum;
use ulocal::localring::{Ring, RingSpec};
use ulocal::matform::Mat;
use ulocal::weil::*;
use ulocal::Error;

fn z5() -> Ring {
    Ring::new(RingSpec::zmod(5, 1)).unwrap()
}

#[test]
fn primitive_counts() {
    let r = z5();
    let n = primitive_characters(&r).unwrap().iter().filter(|(_, p)| *p).count();
    assert_eq!(n, 4);
    let r25 = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    let n = primitive_characters(&r25).unwrap().iter().filter(|(_, p)| *p).count();
    assert_eq!(n, 20);
    assert!(!AdditiveCharacter::new(&r, r.zero()).is_primitive().unwrap());
}

#[test]
fn mu_values() {
    let r = z5();
    assert_eq!(mu(&r, r.from_int(4)).unwrap(), 1);
    assert_eq!(mu(&r, r.from_int(2)).unwrap(), -1);
    assert!(matches!(mu(&r, r.zero()), Err(Error::NotAUnit(_))));
    let r25 = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    assert!(r25.units().iter().all(|&u| mu(&r25, u).unwrap() == 1));
}

#[test]
fn gauss_sum_z5() {
    let r = z5();
    let l = AdditiveCharacter::new(&r, r.one());
    let g = gauss_sum(&l).unwrap();
    // squares mod 5: 0 once, 1 and 4 twice
    let expected = CycNum::from_exponent_counts(5, &[1, 2, 0, 0, 2]);
    assert_eq!(g, expected);
    assert_eq!(&g * &g, CycNum::from_int(5, 5));
    assert_eq!(gauss_sum(&l.twist(r.from_int(2))).unwrap(), -&g);
    assert!(matches!(gauss_sum(&AdditiveCharacter::new(&r, r.zero())), Err(Error::NotPrimitive)));
}

#[test]
fn generator_operators() {
    let r = z5();
    let w = WeilRep::new(&r, 1, r.one()).unwrap();
    // W(h_2) = -P(a -> 3a)
    let h = w.h_op(&Mat::from_ints(&r, &[&[2]])).unwrap();
    assert_eq!(h.sign, -1);
    for a in 0..5 {
        assert_eq!(h.target[a], (3 * a) % 5);
    }
    // W(u_1) = diag(lambda(a^2))
    let u = w.u_op(&Mat::from_ints(&r, &[&[1]])).unwrap();
    assert_eq!(u.exps, vec![0, 1, 4, 4, 1]);
    // W(sigma)^2 = mu(-1) P(a -> -a)
    let s = w.sigma_op();
    let s2 = s.mul(s);
    for b in 0..5 {
        for a in 0..5 {
            let want = if (a + b) % 5 == 0 { 1 } else { 0 };
            assert_eq!(*s2.get(b, a), CycNum::from_int(5, want));
        }
    }
    // W(1) = 1 and W(h_-1) = W(sigma)^2
    let g = w.group();
    let id = Mat::identity(&r, 2);
    assert_eq!(w.operator(&id).unwrap(), Operator::identity(5, 5));
    let hm = g.h(&Mat::from_ints(&r, &[&[-1]])).unwrap();
    assert_eq!(w.operator(&hm).unwrap(), s2);
}

#[test]
fn schrodinger_examples() {
    let r = z5();
    let w = WeilRep::new(&r, 1, r.one()).unwrap();
    let heis = w.heisenberg();
    let s = w.schrodinger(&heis.central(r.from_int(3))).unwrap();
    assert_eq!(s.target, vec![0, 1, 2, 3, 4]);
    assert_eq!(s.exps, vec![3; 5]);
    let v1 = heis.vector(vec![r.zero(), r.one()]).unwrap();
    assert_eq!(w.schrodinger(&v1).unwrap().target, vec![1, 2, 3, 4, 0]);
    let u1 = heis.vector(vec![r.one(), r.zero()]).unwrap();
    let su = w.schrodinger(&u1).unwrap();
    assert_eq!(su.target, vec![0, 1, 2, 3, 4]);
    assert_eq!(su.exps, vec![0, 2, 4, 1, 3]);
    // commutator of (0,u) and (0,v) is (2<u,v>, 0)
    let a = heis.mul(&u1, &v1).unwrap();
    let b = heis.mul(&heis.inverse(&u1).unwrap(), &heis.inverse(&v1).unwrap()).unwrap();
    let c = heis.mul(&a, &b).unwrap();
    assert_eq!(c, heis.central(r.from_int(2)));
}

#[test]
fn congruence_and_quadratic_sums() {
    let r = z5();
    let l = AdditiveCharacter::new(&r, r.one());
    let g = gauss_sum(&l).unwrap();
    for t in [Mat::from_ints(&r, &[&[1, 4], &[4, 2]]), Mat::from_ints(&r, &[&[0, 1], &[1, 0]]), Mat::from_ints(&r, &[&[2, 0], &[0, 3]])] {
        let (p, d) = congruence_normal_form(&t).unwrap();
        let diag = Mat::diag(&r, &[d, r.one()]);
        assert_eq!(&(&p * &t) * &p.transpose(), diag);
        let sum = quadratic_gauss_sum(&l, &t).unwrap();
        assert_eq!(sum, &g * &gauss_sum(&l.twist(d)).unwrap());
    }
}

#[test]
fn orthogonality() {
    let r = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    let l = AdditiveCharacter::new(&r, r.from_int(7));
    for x in r.iter() {
        let mut counts = vec![0i64; 25];
        for b in r.iter() {
            counts[l.exponent(r.scale(r.mul(b, x), -2)) as usize] += 1;
        }
        let s = CycNum::from_exponent_counts(25, &counts);
        let want = if r.is_zero(x) { 25 } else { 0 };
        assert_eq!(s, CycNum::from_ratio(25, BigInt::from(want), BigInt::from(1)));
    }
}

#[test]
fn verify_z5_exhaustive() {
    let r = z5();
    let rep = verify_weil(&r, 1, r.one(), 50, 7).unwrap();
    assert!(rep.exhaustive);
    assert_eq!(rep.group_order, Some(120));
    assert_eq!(rep.homomorphism.checked, 14400);
    assert_eq!(rep.intertwining.checked, 360);
    assert_eq!(rep.commutant_dimension, 1);
    assert!(rep.ok, "{rep:#?}");
}

#[test]
fn q3_rejected() {
    let r = Ring::new(RingSpec::zmod(3, 1)).unwrap();
    assert!(matches!(WeilRep::new(&r, 1, r.one()), Err(Error::HypothesisViolated(_))));
}

#[test]
fn verify_z5_rank_two_sampled() {
    let r = z5();
    let rep = verify_weil(&r, 2, r.one(), 200, 11).unwrap();
    assert!(!rep.exhaustive);
    assert!(rep.relations.iter().filter(|c| c.name != "sigma^2 = h_-1").all(|c| c.checked == 200));
    assert_eq!(rep.intertwining.checked, 200);
    assert_eq!(rep.commutant_dimension, 1);
    assert!(rep.ok, "{rep:#?}");
}
