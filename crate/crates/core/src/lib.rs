//! Exact arithmetic on a Desargues affine plane coordinatized by a skew
//! field: point addition and multiplication by parallel constructions on a
//! line `OI`, ratios and cross-ratios of points, and the four cross-ratio
//! map families with executable checks of their algebraic identities.
//!
//! Everything is generic over [`skewfield::SkewField`]; the rationals, the
//! prime fields GF(p) and the non-commutative rational quaternions are
//! provided.

pub mod cli;
pub mod constructions;
pub mod crossratio_maps;
pub mod plane;
pub mod ratios;
pub mod selftest;
pub mod skewfield;

pub use constructions::{calibrated_product, LineFrame, ProductOrder, PRODUCT_ORDER};
pub use plane::{Line, Plane, Point};
pub use skewfield::{PrimeField, Quaternions, Rational, RationalQuaternion, Rationals, SkewField};
