//! Exact skew-field backends.
//!
//! Every geometric object in this crate is built over a [`SkewField`]: a
//! context value that owns the arithmetic of one concrete division ring.
//! Three backends are provided:
//!
//! * [`Rationals`]: the field ℚ with arbitrary-precision canonical fractions,
//! * [`PrimeField`]: GF(p) for a prime `p` chosen at construction time,
//! * [`Quaternions`]: the rational quaternions, a non-commutative skew field.
//!
//! Elements never carry floating point. Mixing two backends is a type error;
//! mixing two prime fields with different moduli is caught at runtime by the
//! checked operations on [`PrimeFieldElement`].

mod prime;
mod quaternion;
mod rational;

use std::fmt;
use std::hash::Hash;

use rand::Rng;

pub use prime::{PrimeField, PrimeFieldElement};
pub use quaternion::{Quaternions, RationalQuaternion};
pub use rational::{Rational, Rationals};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("ZeroInverse: the zero element has no multiplicative inverse")]
    ZeroInverse,
    #[error("BackendMismatch: {left} and {right} belong to different fields")]
    BackendMismatch { left: String, right: String },
    #[error("InvalidModulus: {0} is not a prime")]
    InvalidModulus(u64),
}

/// A division ring with exact arithmetic.
///
/// Multiplication is never assumed to commute. Implementations must satisfy
/// the skew-field axioms exactly; the crate's test-suite checks them.
pub trait SkewField: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    /// Short human-readable backend name, e.g. `gfp(5)`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Two-sided multiplicative inverse.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    /// Whether multiplication is known to commute in this backend.
    fn is_commutative(&self) -> bool;

    /// Central elements `(t, n)` with `b² = t·b − n`.
    ///
    /// Every element of the supported backends is a root of a quadratic with
    /// central coefficients (reduced trace and norm for quaternions, `2b` and
    /// `b²` for commutative fields). Used to solve `a·z − z·b = c`.
    fn quadratic_relation(&self, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// A pseudo-random element drawn from a small-height distribution.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// All elements, for finite backends.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Divides on the left: `a⁻¹·b`.
    fn left_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(&self.inv(a)?, b))
    }

    /// Divides on the right: `b·a⁻¹`.
    fn right_div(&self, b: &Self::Elem, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(b, &self.inv(a)?))
    }
}

/// Solves `a·z − z·b = c` for `z` when the solution is unique.
///
/// Returns `None` when `a² − t·a + n` vanishes, where `b² = t·b − n`; then the
/// equation is singular (no solution or infinitely many). The candidate is
/// substituted back before it is returned.
pub fn solve_sylvester<F: SkewField>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
) -> Option<F::Elem> {
    // a(az − zb) + (az − zb)b = ac + cb, and z·b² = t·z·b − n·z with z·b = a·z − c.
    let (t, n) = field.quadratic_relation(b);
    let a2 = field.mul(a, a);
    let coeff = field.add(&field.sub(&a2, &field.mul(&t, a)), &n);
    let rhs = field.sub(
        &field.add(&field.mul(a, c), &field.mul(c, b)),
        &field.mul(&t, c),
    );
    let z = field.left_div(&coeff, &rhs).ok()?;
    (field.sub(&field.mul(a, &z), &field.mul(&z, b)) == *c).then_some(z)
}
