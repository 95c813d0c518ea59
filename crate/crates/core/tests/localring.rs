use ulocal::localring::{Elem, Family, InvolutionKind, Ramification, Ring, RingSpec};
use ulocal::Error;

fn ring(spec: RingSpec) -> Ring {
    Ring::new(spec).unwrap()
}

fn desk_rings() -> Vec<Ring> {
    vec![
        ring(RingSpec::zmod(5, 1)),
        ring(RingSpec::zmod(5, 2)),
        ring(RingSpec::zmod(3, 2)),
        ring(RingSpec::galois(5, 1)),
        ring(RingSpec::galois(5, 2)),
        ring(RingSpec::galois(3, 2)),
        ring(RingSpec::dual(5, 1)),
        ring(RingSpec::dual(3, 2)),
        ring(RingSpec::galois(5, 1).with_involution(InvolutionKind::Trivial)),
    ]
}

#[test]
fn construction() {
    let f5 = ring(RingSpec::zmod(5, 1));
    assert_eq!((f5.size(), f5.q()), (5, 5));
    let f25 = ring(RingSpec::unramified(5, 1, 2, 0));
    assert_eq!(f25.size(), 25);
    assert_eq!(f25, ring(RingSpec::galois(5, 1)));
    // the involution is a -> a^5
    for a in f25.iter() {
        assert_eq!(f25.star(a), f25.pow(a, 5));
    }
    assert!(matches!(Ring::new(RingSpec::zmod(2, 3)), Err(Error::InvalidSpec(_))));
    assert!(matches!(Ring::new(RingSpec::zmod(9, 1)), Err(Error::InvalidSpec(_))));
    // x^2 + 1 has the root 2 mod 5
    assert!(matches!(Ring::new(RingSpec::unramified(5, 1, 1, 0)), Err(Error::InvalidSpec(_))));
    assert!(matches!(
        Ring::new(RingSpec::zmod(5, 1).with_involution(InvolutionKind::Frobenius)),
        Err(Error::InvalidSpec(_))
    ));
}

#[test]
fn fixed_ring_exponent() {
    assert_eq!(ring(RingSpec::zmod(5, 2)).fixed_ring_exponent(), 2);
    assert_eq!(ring(RingSpec::galois(5, 1)).fixed_ring_exponent(), 1);
    assert_eq!(ring(RingSpec::galois(5, 1).with_involution(InvolutionKind::Trivial)).fixed_ring_exponent(), 1);
    assert_eq!(ring(RingSpec::galois(5, 1)).q(), 25);
}

#[test]
fn arithmetic_examples() {
    let z25 = ring(RingSpec::zmod(5, 2));
    assert_eq!(z25.add(z25.from_int(20), z25.from_int(10)), z25.from_int(5));
    let d = ring(RingSpec::dual(5, 1));
    let a = d.elem(&[1, 1]).unwrap();
    assert_eq!(d.mul(a, a), d.elem(&[1, 2]).unwrap());
    let z5 = ring(RingSpec::zmod(5, 1));
    assert_eq!(z5.mul(z5.from_int(3), z5.from_int(2)), z5.one());
}

#[test]
fn inversion() {
    let z25 = ring(RingSpec::zmod(5, 2));
    assert_eq!(z25.inv(z25.from_int(7)).unwrap(), z25.from_int(18));
    let d = ring(RingSpec::dual(5, 1));
    assert!(matches!(d.inv(d.generator()), Err(Error::NotAUnit(_))));
    let z5 = ring(RingSpec::zmod(5, 1));
    assert_eq!(z5.inv(z5.one()).unwrap(), z5.one());
    for r in desk_rings() {
        for a in r.iter() {
            match r.try_inv(a) {
                Some(b) => assert_eq!(r.mul(a, b), r.one()),
                None => assert!(r.is_zero(r.residue(a))),
            }
        }
    }
}

#[test]
fn involution_examples() {
    let z25 = ring(RingSpec::zmod(5, 2));
    assert_eq!(z25.star(z25.from_int(7)), z25.from_int(7));
    let f25 = ring(RingSpec::galois(5, 1));
    let x = f25.generator();
    assert_eq!(f25.star(x), f25.neg(x));
    let d = ring(RingSpec::dual(5, 1));
    assert_eq!(d.star(d.elem(&[2, 3]).unwrap()), d.elem(&[2, 2]).unwrap());
}

#[test]
fn involution_is_an_automorphism_of_order_two() {
    for r in desk_rings() {
        let all: Vec<Elem> = r.iter().collect();
        for &a in &all {
            assert_eq!(r.star(r.star(a)), a);
        }
        for &a in all.iter().step_by(7) {
            for &b in &all {
                assert_eq!(r.star(r.mul(a, b)), r.mul(r.star(a), r.star(b)));
                assert_eq!(r.star(r.add(a, b)), r.add(r.star(a), r.star(b)));
            }
        }
        assert!(r.is_unit(r.from_int(2)));
    }
}

#[test]
fn enumeration() {
    let z5 = ring(RingSpec::zmod(5, 1));
    let e: Vec<Vec<u64>> = z5.enumerate().unwrap().iter().map(|&a| z5.coeffs(a)).collect();
    assert_eq!(e, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    assert_eq!(ring(RingSpec::zmod(5, 2)).units().len(), 20);
    let d = ring(RingSpec::dual(5, 1));
    let skew = d.skew_elements();
    assert_eq!(skew.len(), 5);
    assert!(skew.iter().all(|&a| d.coeffs(a)[0] == 0));
    let f = ring(RingSpec::galois(5, 1));
    let all = f.enumerate().unwrap();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(all.len(), 25);
    let capped = Ring::with_cap(RingSpec::galois(5, 1), 10).unwrap();
    assert!(matches!(capped.enumerate(), Err(Error::TooLarge { .. })));
}

#[test]
fn non_units_form_an_ideal() {
    for r in desk_rings() {
        let non: Vec<Elem> = r.iter().filter(|&a| !r.is_unit(a)).collect();
        for &a in &non {
            for &b in &non {
                assert!(!r.is_unit(r.add(a, b)));
            }
            for c in r.iter() {
                assert!(!r.is_unit(r.mul(a, c)));
            }
        }
    }
}

#[test]
fn ramification() {
    assert_eq!(ring(RingSpec::galois(5, 1)).classify_ramification(), Ramification::Unramified);
    assert_eq!(ring(RingSpec::dual(5, 1)).classify_ramification(), Ramification::Ramified);
    assert_eq!(ring(RingSpec::zmod(5, 2)).classify_ramification(), Ramification::Trivial);
    assert_eq!(ring(RingSpec::galois(3, 2)).classify_ramification(), Ramification::Unramified);
}

#[test]
fn quotients() {
    let z25 = ring(RingSpec::zmod(5, 2));
    let q = z25.quotient(&[z25.from_int(5)]).unwrap();
    assert_eq!(*q.target(), ring(RingSpec::zmod(5, 1)));
    for a in q.target().iter() {
        assert_eq!(q.project(q.section(a)), a);
        assert!(z25.coeffs(q.section(a))[0] < 5);
    }
    let d = ring(RingSpec::dual(5, 1));
    let qd = d.quotient(&[d.generator()]).unwrap();
    assert_eq!(qd.target().family(), Family::ZmodPk);
    assert_eq!(qd.target().size(), 5);
    let unit = d.elem(&[1, 1]).unwrap();
    assert!(matches!(d.quotient(&[unit]), Err(Error::ImproperIdeal)));
    let d2 = ring(RingSpec::dual(5, 2));
    let bad = d2.add(d2.generator(), d2.from_int(5));
    assert!(matches!(d2.quotient(&[bad]), Err(Error::NotStarInvariant)));
}

#[test]
fn projection_is_equivariant_homomorphism() {
    let cases = [
        (RingSpec::zmod(5, 2), vec![vec![5]]),
        (RingSpec::dual(5, 1), vec![vec![0, 1]]),
        (RingSpec::dual(5, 2), vec![vec![5]]),
        (RingSpec::dual(5, 2), vec![vec![0, 1]]),
        (RingSpec::galois(5, 2), vec![vec![5]]),
    ];
    for (spec, gens) in cases {
        let r = ring(spec);
        let gens: Vec<Elem> = gens.iter().map(|g| r.elem(g).unwrap()).collect();
        let q = r.quotient(&gens).unwrap();
        let t = q.target().clone();
        for a in r.iter() {
            assert_eq!(q.project(r.star(a)), t.star(q.project(a)));
            for b in r.iter().step_by(3) {
                assert_eq!(q.project(r.mul(a, b)), t.mul(q.project(a), q.project(b)));
                assert_eq!(q.project(r.add(a, b)), t.add(q.project(a), q.project(b)));
            }
        }
        for &g in &gens {
            assert!(q.in_kernel(g));
        }
    }
}

#[test]
fn minimal_ideals() {
    let z25 = ring(RingSpec::zmod(5, 2));
    let n = z25.minimal_ideal().unwrap();
    assert_eq!(n.len(), 5);
    assert!(n.contains(&z25.from_int(5)));
    assert_eq!(ring(RingSpec::zmod(5, 1)).minimal_ideal().unwrap().len(), 5);
    let d = ring(RingSpec::dual(5, 1));
    let n = d.minimal_ideal().unwrap();
    assert_eq!(n.len(), 5);
    assert!(n.contains(&d.generator()));
}
