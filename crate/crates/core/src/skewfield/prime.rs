use std::fmt;

use rand::Rng;

use super::{FieldError, SkewField};

/// A residue class modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(FieldError::BackendMismatch {
                left: format!("gfp({})", self.modulus),
                right: format!("gfp({})", other.modulus),
            })
        }
    }

    fn with(&self, residue: u64) -> Self {
        PrimeFieldElement { residue, modulus: self.modulus }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(((self.residue as u128 + other.residue as u128) % self.modulus as u128) as u64))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(((self.residue as u128 * other.residue as u128) % self.modulus as u128) as u64))
    }

    pub fn neg(&self) -> Self {
        self.with((self.modulus - self.residue) % self.modulus)
    }

    /// Inverse by Fermat: a^(p−2).
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.residue == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let p = self.modulus as u128;
        let (mut base, mut exp, mut acc) = (self.residue as u128, self.modulus - 2, 1u128);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Ok(self.with(acc as u64))
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The finite field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Largest accepted modulus; keeps residues in 32 bits.
    pub const MAX_MODULUS: u64 = u32::MAX as u64;

    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > Self::MAX_MODULUS || !is_prime(p) {
            return Err(FieldError::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, n: i64) -> PrimeFieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        PrimeFieldElement { residue: r, modulus: self.p }
    }

    /// Adopts an element, failing if it lives in another prime field.
    pub fn adopt(&self, e: PrimeFieldElement) -> Result<PrimeFieldElement, FieldError> {
        self.zero().check(&e)?;
        Ok(e)
    }
}

impl SkewField for PrimeField {
    type Elem = PrimeFieldElement;

    fn name(&self) -> String {
        format!("gfp({})", self.p)
    }

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }

    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }

    fn from_i64(&self, n: i64) -> PrimeFieldElement {
        self.element(n)
    }

    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        a.checked_add(b).expect("prime field modulus mismatch")
    }

    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        a.neg()
    }

    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        a.checked_mul(b).expect("prime field modulus mismatch")
    }

    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement, FieldError> {
        a.inv()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn quadratic_relation(&self, b: &PrimeFieldElement) -> (PrimeFieldElement, PrimeFieldElement) {
        (self.add(b, b), self.mul(b, b))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> PrimeFieldElement {
        PrimeFieldElement { residue: rng.gen_range(0..self.p), modulus: self.p }
    }

    fn elements(&self) -> Option<Vec<PrimeFieldElement>> {
        Some((0..self.p).map(|r| PrimeFieldElement { residue: r, modulus: self.p }).collect())
    }
}
