//! Ratios of two and three points and the cross-ratio of four points on the
//! line `OI`, each point identified with its coordinate in the skew field.
//!
//! Factor order is significant: nothing here is rearranged as if the field
//! were commutative.

use crate::skewfield::SkewField;

/// A point of `OI`, identified with its coordinate (`O ↔ 0`, `I ↔ 1`).
pub type LineCoordinate<F> = <F as SkewField>::Elem;

/// The point produced by a ratio or cross-ratio.
pub type RatioPoint<F> = <F as SkewField>::Elem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatioError {
    #[error("ZeroDenominatorPoint: r(A:B) needs B != O, got B = {0}")]
    ZeroDenominatorPoint(String),
    #[error("CoincidentPoints: r(A,B;C) needs B != C, got B = C = {0}")]
    CoincidentPoints(String),
    #[error("SingularCrossRatio: {difference} = O ({lhs} - {rhs})")]
    SingularCrossRatio { difference: &'static str, lhs: String, rhs: String },
}

/// `r(A:B) = B⁻¹·A`.
pub fn ratio2<F: SkewField>(field: &F, a: &F::Elem, b: &F::Elem) -> Result<RatioPoint<F>, RatioError> {
    field.left_div(b, a).map_err(|_| RatioError::ZeroDenominatorPoint(b.to_string()))
}

/// `r(A,B;C) = (B−C)⁻¹·(A−C)`, the unique `R` with `(B−C)·R = A−C`.
pub fn ratio3<F: SkewField>(field: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<RatioPoint<F>, RatioError> {
    let den = field.sub(b, c);
    field
        .left_div(&den, &field.sub(a, c))
        .map_err(|_| RatioError::CoincidentPoints(b.to_string()))
}

/// `c_r(A,B;C,D) = [(A−D)⁻¹(B−D)]·[(B−C)⁻¹(A−C)]`.
///
/// Defined whenever `A ≠ D` and `B ≠ C`; see [`no_three_equal`] for the
/// stricter classical side condition.
pub fn cross_ratio<F: SkewField>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<RatioPoint<F>, RatioError> {
    let (first, second) = cross_ratio_factors(field, a, b, c, d)?;
    Ok(field.mul(&first, &second))
}

/// The two bracketed factors of [`cross_ratio`], in order.
pub fn cross_ratio_factors<F: SkewField>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<(F::Elem, F::Elem), RatioError> {
    let singular = |difference, lhs: &F::Elem, rhs: &F::Elem| RatioError::SingularCrossRatio {
        difference,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    };
    let a_d = field.sub(a, d);
    let b_c = field.sub(b, c);
    let first = field.left_div(&a_d, &field.sub(b, d)).map_err(|_| singular("A-D", a, d))?;
    let second = field.left_div(&b_c, &field.sub(a, c)).map_err(|_| singular("B-C", b, c))?;
    Ok((first, second))
}

/// True when no three of the four points coincide.
pub fn no_three_equal<F: SkewField>(a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> bool {
    let pts = [a, b, c, d];
    (0..4).all(|skip| {
        let rest: Vec<_> = pts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| *p).collect();
        !(rest[0] == rest[1] && rest[1] == rest[2])
    })
}
