use std::fmt;

use rand::Rng;

use super::{FieldError, Rational, Rationals, SkewField};

/// `w + x·i + y·j + z·k` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalQuaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalQuaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        RationalQuaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn real(w: Rational) -> Self {
        Self::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `w² + x² + y² + z²`; zero only for the zero quaternion.
    pub fn norm(&self) -> Rational {
        &(&(&self.w * &self.w) + &(&self.x * &self.x)) + &(&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(s * &self.w, s * &self.x, s * &self.y, s * &self.z)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }

    /// Hamilton product `self · o`.
    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let w = &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2));
        let x = &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2));
        let y = &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2));
        let z = &(&(a1 * d2) + &(b1 * c2)) + &(&(d1 * a2) - &(c1 * b2));
        Self::new(w, x, y, z)
    }

    /// `conjugate / norm`.
    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm().recip()?;
        Ok(self.conjugate().scale(&n))
    }
}

impl fmt::Display for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The rational quaternions, a non-commutative skew field.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Quaternions;

impl SkewField for Quaternions {
    type Elem = RationalQuaternion;

    fn name(&self) -> String {
        "quaternion".to_string()
    }

    fn zero(&self) -> RationalQuaternion {
        RationalQuaternion::default()
    }

    fn one(&self) -> RationalQuaternion {
        RationalQuaternion::from_ints(1, 0, 0, 0)
    }

    fn from_i64(&self, n: i64) -> RationalQuaternion {
        RationalQuaternion::from_ints(n, 0, 0, 0)
    }

    fn add(&self, a: &RationalQuaternion, b: &RationalQuaternion) -> RationalQuaternion {
        a.add(b)
    }

    fn neg(&self, a: &RationalQuaternion) -> RationalQuaternion {
        a.neg()
    }

    fn mul(&self, a: &RationalQuaternion, b: &RationalQuaternion) -> RationalQuaternion {
        a.mul(b)
    }

    fn inv(&self, a: &RationalQuaternion) -> Result<RationalQuaternion, FieldError> {
        a.inv()
    }

    fn is_zero(&self, a: &RationalQuaternion) -> bool {
        a.is_zero()
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn quadratic_relation(&self, b: &RationalQuaternion) -> (RationalQuaternion, RationalQuaternion) {
        (RationalQuaternion::real(&b.w + &b.w), RationalQuaternion::real(b.norm()))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> RationalQuaternion {
        // Components are zero half the time so sparse quaternions show up too.
        let part = |rng: &mut R| {
            if rng.gen_bool(0.5) {
                Rational::zero()
            } else {
                Rationals::sample(rng)
            }
        };
        RationalQuaternion::new(part(rng), part(rng), part(rng), part(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> RationalQuaternion {
        RationalQuaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn multiplication_table() {
        let (i, j, k) = (RationalQuaternion::i(), RationalQuaternion::j(), RationalQuaternion::k());
        let one = Quaternions.one();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        for u in [&i, &j, &k] {
            assert_eq!(u.mul(u), one.neg());
        }
        assert_eq!(i.mul(&j).mul(&k), one.neg());
    }

    #[test]
    fn componentwise_add_sub() {
        let f = Quaternions;
        assert_eq!(f.add(&RationalQuaternion::i(), &RationalQuaternion::j()), q(0, 1, 1, 0));
        assert_eq!(f.sub(&RationalQuaternion::i(), &RationalQuaternion::j()), q(0, 1, -1, 0));
    }

    #[test]
    fn inverse_of_i() {
        let f = Quaternions;
        let i = RationalQuaternion::i();
        let inv = f.inv(&i).unwrap();
        assert_eq!(inv, i.neg());
        assert_eq!(f.mul(&i, &inv), f.one());
        assert_eq!(f.mul(&inv, &i), f.one());
        assert_eq!(f.inv(&f.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = q(1, -2, 3, 1);
        let b = q(0, 5, -1, 2);
        assert_eq!(a.mul(&b).norm(), &a.norm() * &b.norm());
        assert_eq!(a.norm(), Rational::from(15));
    }

    #[test]
    fn quadratic_relation_holds() {
        let f = Quaternions;
        let b = q(2, 1, -3, 4);
        let (t, n) = f.quadratic_relation(&b);
        assert_eq!(f.mul(&b, &b), f.sub(&f.mul(&t, &b), &n));
    }

    #[test]
    fn display() {
        let x = RationalQuaternion::new(Rational::new(1, 2), (-1).into(), 0.into(), 3.into());
        assert_eq!(x.to_string(), "(1/2,-1,0,3)");
    }
}
