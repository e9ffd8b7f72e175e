use desargues::skewfield::{FieldError, PrimeField, Quaternions, Rational, RationalQuaternion, Rationals, SkewField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn laws<F: SkewField>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
    let ctx = || format!("{} a={a} b={b} c={c}", f.name());
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)), "add assoc {}", ctx());
    assert_eq!(f.add(a, b), f.add(b, a), "add comm {}", ctx());
    assert_eq!(f.add(a, &f.zero()), *a, "add zero {}", ctx());
    assert_eq!(f.add(a, &f.neg(a)), f.zero(), "add inverse {}", ctx());
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)), "mul assoc {}", ctx());
    assert_eq!(f.mul(a, &f.one()), *a, "right unit {}", ctx());
    assert_eq!(f.mul(&f.one(), a), *a, "left unit {}", ctx());
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)), "left distrib {}", ctx());
    assert_eq!(f.mul(&f.add(a, b), c), f.add(&f.mul(a, c), &f.mul(b, c)), "right distrib {}", ctx());
    if f.is_zero(a) {
        assert_eq!(f.inv(a), Err(FieldError::ZeroInverse));
        return;
    }
    let ai = f.inv(a).unwrap();
    assert_eq!(f.mul(a, &ai), f.one(), "right inverse {}", ctx());
    assert_eq!(f.mul(&ai, a), f.one(), "left inverse {}", ctx());
    assert_eq!(f.inv(&ai).unwrap(), *a, "involution {}", ctx());
    if !f.is_zero(b) {
        assert!(!f.is_zero(&f.mul(a, b)), "zero divisor {}", ctx());
        assert_eq!(f.inv(&f.mul(a, b)).unwrap(), f.mul(&f.inv(b).unwrap(), &ai), "anti-homomorphism {}", ctx());
    }
}

fn random_laws<F: SkewField>(f: &F, seed: u64, n: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        laws(f, &a, &b, &c);
    }
}

#[test]
fn gf5_exhaustive() {
    let f = PrimeField::new(5).unwrap();
    let all = f.elements().unwrap();
    assert_eq!(all.len(), 5);
    for a in &all {
        for b in &all {
            for c in &all {
                laws(&f, a, b, c);
            }
        }
    }
}

#[test]
fn small_prime_fields_exhaustive() {
    for p in [2, 3, 7, 11] {
        let f = PrimeField::new(p).unwrap();
        let all = f.elements().unwrap();
        for a in &all {
            for b in &all {
                laws(&f, a, b, &f.one());
            }
        }
    }
}

#[test]
fn rationals_random() {
    random_laws(&Rationals, 1, 1000);
}

#[test]
fn quaternions_random() {
    random_laws(&Quaternions, 2, 1000);
}

#[test]
fn large_prime_random() {
    random_laws(&PrimeField::new(1_000_003).unwrap(), 3, 1000);
}

#[test]
fn gf_inverse_table_by_search() {
    // Oracle: brute-force search for the inverse.
    let f = PrimeField::new(13).unwrap();
    for a in f.elements().unwrap().into_iter().skip(1) {
        let found = f.elements().unwrap().into_iter().find(|b| (a.residue() * b.residue()) % 13 == 1).unwrap();
        assert_eq!(f.inv(&a).unwrap(), found);
    }
}

#[test]
fn quaternion_inverse_oracle() {
    // (1+i+j+k)⁻¹ = (1−i−j−k)/4
    let q = RationalQuaternion::from_ints(1, 1, 1, 1);
    let quarter = Rational::new(1, 4);
    let expected = RationalQuaternion::new(quarter.clone(), -&quarter, -&quarter, -&quarter);
    assert_eq!(Quaternions.inv(&q).unwrap(), expected);
}

#[test]
fn rational_sum_oracle() {
    // 2/3 + 1/6 = 4/6 + 1/6 = 5/6
    assert_eq!(Rationals.add(&Rational::new(2, 3), &Rational::new(1, 6)), Rational::new(5, 6));
}

#[test]
fn mixed_moduli_rejected() {
    let (f5, f7) = (PrimeField::new(5).unwrap(), PrimeField::new(7).unwrap());
    let err = f5.element(1).checked_add(&f7.element(1)).unwrap_err();
    assert!(matches!(err, FieldError::BackendMismatch { .. }));
    assert!(f5.adopt(f7.element(3)).is_err());
}

#[test]
fn invalid_moduli() {
    for p in [0, 1, 4, 9, 91] {
        assert_eq!(PrimeField::new(p).unwrap_err(), FieldError::InvalidModulus(p));
    }
}
