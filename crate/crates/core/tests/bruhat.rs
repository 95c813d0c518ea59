use ulocal::bruhat::{shifted_inverse_check, symmetric_unit_census, verify_presentation, BruhatWord, Cell, Letter, Sl2Star};
use ulocal::json::{word_from_json, word_to_json, LetterJson};
use ulocal::Error;
use ulocal::localring::{Ring, RingSpec};
use ulocal::matform::Mat;

fn z(p: u64, k: u32) -> Ring {
    Ring::new(RingSpec::zmod(p, k)).unwrap()
}

fn s1(r: &Ring, v: i64) -> Mat {
    Mat::scalar(r, 1, r.from_int(v))
}

#[test]
fn generator_examples() {
    let r = z(5, 1);
    let g = Sl2Star::new(&r, 1);
    assert_eq!(g.h(&s1(&r, 2)).unwrap(), Mat::from_ints(&r, &[&[2, 0], &[0, 3]]));
    let w = BruhatWord::new(vec![Letter::V(s1(&r, 1)), Letter::K(s1(&r, 2))]);
    assert_eq!(g.eval(&w).unwrap(), Mat::from_ints(&r, &[&[2, 3], &[0, 3]]));
}

#[test]
fn reduce_example() {
    let r = z(5, 1);
    let g = Sl2Star::new(&r, 1);
    let v1 = Letter::V(s1(&r, 1));
    let w = BruhatWord::new(vec![v1.clone(), Letter::Z, v1.clone(), Letter::Z, v1]);
    let red = g.reduce(&w).unwrap();
    assert_eq!(red, BruhatWord::new(vec![Letter::Z, Letter::K(s1(&r, -1))]));
}

#[test]
fn presentation_f5() {
    let rep = verify_presentation(&z(5, 1), 1, 200, 1).unwrap();
    println!("{rep:#?}");
    assert!(rep.ok);
    assert_eq!(rep.generated_order, 120);
}

#[test]
fn factor_all_z25() {
    let r = z(5, 2);
    let g = Sl2Star::new(&r, 1);
    let mut n = 0;
    let mut cells = [0; 3];
    for x in ulocal::matform::all_matrices(&r, 2, 2).unwrap() {
        if x.det().unwrap() != r.one() {
            continue;
        }
        n += 1;
        let w = g.factor(&x).unwrap();
        assert!(w.z_length() <= 2);
        assert_eq!(g.eval(&w).unwrap(), x);
        let c = g.cell_of(&x).unwrap();
        assert_eq!(c.z_length(), w.z_length());
        cells[c as usize] += 1;
    }
    assert_eq!(n, 15000);
    let _ = Cell::B;
    println!("{cells:?}");
}

fn f25() -> Ring {
    Ring::new(RingSpec::galois(5, 1)).unwrap()
}

#[test]
fn generator_rejects_bad_parameters() {
    let f = f25();
    let g = Sl2Star::new(&f, 1);
    let t = Mat::scalar(&f, 1, f.generator());
    // the generator squares to a non-square scalar, so t* = -t differs from t
    assert!(matches!(g.generator_matrix(&Letter::V(t)), Err(Error::BadParameter(_))));
    let r = z(5, 1);
    let g = Sl2Star::new(&r, 1);
    assert!(matches!(g.generator_matrix(&Letter::K(s1(&r, 0))), Err(Error::BadParameter(_))));
    assert!(g.space().is_unitary(&g.generator_matrix(&Letter::Z).unwrap()));
}

#[test]
fn eval_examples() {
    let r = z(5, 2);
    let g = Sl2Star::new(&r, 1);
    let zz = BruhatWord::new(vec![Letter::Z, Letter::Z]);
    assert_eq!(g.eval(&zz).unwrap(), Mat::scalar(&r, 2, r.from_int(-1)));
    assert!(g.eval(&BruhatWord::new(vec![])).unwrap().is_identity());
}

#[test]
fn cell_examples() {
    let r = z(5, 2);
    let g = Sl2Star::new(&r, 1);
    assert_eq!(g.cell_of(&Mat::identity(&r, 2)).unwrap(), Cell::B);
    assert_eq!(g.cell_of(&g.w()).unwrap(), Cell::BwB);
    let x = Mat::from_ints(&r, &[&[1, 0], &[5, 1]]);
    assert_eq!(g.cell_of(&x).unwrap(), Cell::BwBwB);
    let bad = Mat::from_ints(&r, &[&[1, 1], &[1, 1]]);
    assert!(matches!(g.cell_of(&bad), Err(Error::NotInGroup(_))));
}

#[test]
fn symmetrizer_examples() {
    let r5 = z(5, 1);
    let g = Sl2Star::new(&r5, 1);
    assert_eq!(g.find_symmetrizer(&s1(&r5, 0), &s1(&r5, 1)).unwrap(), s1(&r5, 1));
    assert_eq!(g.find_symmetrizer(&s1(&r5, 1), &s1(&r5, 0)).unwrap(), s1(&r5, 0));
    assert!(matches!(g.find_symmetrizer(&s1(&r5, 0), &s1(&r5, 0)), Err(Error::NoSolution(_))));
    let r25 = z(5, 2);
    let g = Sl2Star::new(&r25, 1);
    assert_eq!(g.find_symmetrizer(&s1(&r25, 5), &s1(&r25, 1)).unwrap(), s1(&r25, 1));
}

#[test]
fn factor_examples() {
    let r = z(5, 2);
    let g = Sl2Star::new(&r, 1);
    assert_eq!(g.factor(&Mat::identity(&r, 2)).unwrap().z_length(), 0);
    let w = g.factor(&g.w()).unwrap();
    assert_eq!(w.z_length(), 1);
    assert_eq!(g.eval(&w).unwrap(), g.w());
    let x = Mat::from_ints(&r, &[&[1, 0], &[5, 1]]);
    let w = g.factor(&x).unwrap();
    assert_eq!(w.z_length(), 2);
    assert_eq!(g.eval(&w).unwrap(), x);
    let r3 = z(3, 1);
    let g3 = Sl2Star::new(&r3, 1);
    assert!(matches!(g3.factor(&Mat::identity(&r3, 2)), Err(Error::HypothesisViolated(_))));
}

#[test]
fn shift_examples() {
    let r5 = z(5, 1);
    let g = Sl2Star::new(&r5, 1);
    assert_eq!(g.find_shift(&s1(&r5, 0), &s1(&r5, 0)).unwrap(), s1(&r5, 1));
    let r25 = z(5, 2);
    let g = Sl2Star::new(&r25, 1);
    assert_eq!(g.find_shift(&s1(&r25, 5), &s1(&r25, 5)).unwrap(), s1(&r25, 1));
    let f = f25();
    let g = Sl2Star::new(&f, 1);
    let zero = Mat::zeros(&f, 1, 1);
    let u = g.find_shift(&zero, &zero).unwrap();
    let first = g.symmetric().unwrap().iter().find(|s| s.is_invertible()).unwrap().clone();
    assert_eq!(u, first);
    assert!(u.is_symmetric());
}

#[test]
fn reduce_examples() {
    let r = z(5, 1);
    let g = Sl2Star::new(&r, 1);
    let zzz = BruhatWord::new(vec![Letter::Z; 3]);
    let red = g.reduce(&zzz).unwrap();
    assert!(red.z_length() <= 2);
    assert_eq!(g.eval(&red).unwrap(), -&g.w());
    assert!(g.reduce(&BruhatWord::new(vec![])).unwrap().is_empty());
    let (_, trace) = g.reduce_traced(&zzz).unwrap();
    assert!(!trace.is_empty());
}

#[test]
fn presentation_other_rings() {
    let rep = verify_presentation(&f25(), 1, 200, 2).unwrap();
    assert!(rep.ok);
    assert_eq!(Some(rep.generated_order), rep.group_order);
    assert!(matches!(verify_presentation(&z(3, 1), 1, 10, 1), Err(Error::HypothesisViolated(_))));
}

#[test]
fn census_examples() {
    let f5 = z(5, 1);
    let c1 = symmetric_unit_census(&f5, 1).unwrap();
    assert_eq!(c1.ratio, (4, 5));
    assert!(c1.exceeds_bound);
    let c2 = symmetric_unit_census(&f5, 2).unwrap();
    // ratio above 19/24
    assert!(c2.invertible_symmetric * 24 > c2.symmetric * 19);
    let b = Mat::from_ints(&f5, &[&[1, 0], &[0, 0]]);
    let mm = Mat::from_ints(&f5, &[&[1, 4], &[4, 2]]);
    assert!(mm.is_invertible());
    let rep = shifted_inverse_check(&f5, &b, &mm).unwrap();
    assert!(!rep.difference_invertible);
}

#[test]
fn cells_and_products() {
    let r = z(5, 1);
    let g = Sl2Star::new(&r, 1);
    let group: Vec<Mat> = ulocal::matform::all_matrices(&r, 2, 2)
        .unwrap()
        .filter(|x| x.det().unwrap() == r.one())
        .collect();
    let borel: Vec<&Mat> = group.iter().filter(|x| g.cell_of(x).unwrap() == Cell::B).collect();
    for x in &borel {
        for y in &borel {
            assert_eq!(g.cell_of(&(*x * *y)).unwrap(), Cell::B);
        }
    }
    for x in &group {
        let w = g.factor(x).unwrap();
        assert_eq!(g.cell_of(&g.eval(&w).unwrap()).unwrap(), g.cell_of(x).unwrap());
    }
}

#[test]
fn word_json_round_trip() {
    let f = f25();
    let g = Sl2Star::new(&f, 1);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(4);
    for _ in 0..20 {
        let w = ulocal::bruhat::random_word(&g, 6, &mut rng);
        let text = serde_json::to_string(&word_to_json(&w)).unwrap();
        let back: Vec<LetterJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(word_from_json(&f, &back).unwrap(), w);
    }
}
