use num_bigint::BigInt;
use ulocal::cyclo::{CycNum, CycNumJson};
use ulocal::Error;

fn z(n: u64, e: i64) -> CycNum {
    CycNum::root_of_unity(n, e)
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&z(5, 1) * &z(5, 4), CycNum::from_int(5, 1));
    let s = (0..5).fold(CycNum::zero(5), |acc, e| &acc + &z(5, e));
    assert!(s.is_zero());
    assert_eq!(z(5, 1).conj(), z(5, 4));
    // mixed conductors embed into the larger one
    assert_eq!(&z(5, 1) * &z(25, 1), z(25, 6));
}

#[test]
fn inversion() {
    let two = CycNum::from_int(5, 2);
    assert_eq!(two.inv().unwrap(), CycNum::from_ratio(5, BigInt::from(1), BigInt::from(2)));
    assert_eq!(z(5, 1).inv().unwrap(), z(5, 4));
    let g = CycNum::from_exponent_counts(5, &[1, 2, 0, 0, 2]);
    assert_eq!(&g * &g, CycNum::from_int(5, 5));
    assert_eq!(g.inv().unwrap(), g.scale_ratio(&BigInt::from(1), &BigInt::from(5)));
    assert!(matches!(CycNum::zero(5).inv(), Err(Error::DivisionByZero)));
}

#[test]
fn roots_of_unity() {
    assert_eq!(z(5, 0), CycNum::from_int(5, 1));
    assert_eq!(z(5, 7), z(5, 2));
    assert_eq!(z(25, 5), z(5, 1).embed(25));
    assert_eq!(z(25, 5).degree(), 20);
}

#[test]
fn conjugation_and_norms() {
    let x = &(&z(25, 3) + &CycNum::from_int(25, 2)) + &z(25, 11);
    assert_eq!(x.conj().conj(), x);
    let norm = &x * &x.conj();
    assert_eq!(norm.conj(), norm);
    let y = &z(25, 7) - &z(25, 1);
    assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
}

#[test]
fn json_round_trip() {
    let x = &z(25, 3).scale_ratio(&BigInt::from(-7), &BigInt::from(3)) + &CycNum::from_int(25, 4);
    let j = CycNumJson::from(&x);
    let text = serde_json::to_string(&j).unwrap();
    let back: CycNumJson = serde_json::from_str(&text).unwrap();
    assert_eq!(CycNum::try_from(&back).unwrap(), x);
    assert_eq!(j.coeffs.len(), 20);
}
