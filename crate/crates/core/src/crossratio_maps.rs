//! The four cross-ratio map families.
//!
//! Fix three of the four slots of `c_r(·,·;·,·)` and let the remaining one
//! range over the line:
//!
//! | family | map                 | singular at | zero at | unit at | inverse            |
//! |--------|---------------------|-------------|---------|---------|--------------------|
//! | A      | `c_r(X,B;C,D)`      | `D`         | `C`     | `B`     | `c_r(X,B;D,C)`     |
//! | B      | `c_r(A,X;C,D)`      | `C`         | `D`     | `A`     | `c_r(A,X;D,C)`     |
//! | C      | `c_r(A,B;X,D)`      | `B`         | `A`     | `D`     | `c_r(A,B;D,X)`     |
//! | D      | `c_r(A,B;C,X)`      | `A`         | `B`     | `C`     | `c_r(A,B;X,C)`     |
//!
//! All four share one engine: with the free slot at index `f`, the singular
//! point sits in slot `3 − f`, the zero point in slot `f ^ 2`, the unit point
//! in slot `f ^ 1`, and the inverse swaps the last two slots.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ratios::{cross_ratio, RatioError};
use crate::skewfield::{solve_sylvester, SkewField};

const SLOT_NAMES: [&str; 4] = ["A", "B", "C", "D"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapFamily {
    A,
    B,
    C,
    D,
}

impl MapFamily {
    pub const ALL: [MapFamily; 4] = [MapFamily::A, MapFamily::B, MapFamily::C, MapFamily::D];

    /// Index of the free cross-ratio slot.
    pub fn free_slot(self) -> usize {
        self as usize
    }

    /// Names of the three fixed slots, in slot order.
    pub fn base_names(self) -> [&'static str; 3] {
        let f = self.free_slot();
        let mut out = [""; 3];
        for (o, name) in out.iter_mut().zip(SLOT_NAMES.iter().enumerate().filter(|(i, _)| *i != f).map(|(_, n)| *n)) {
            *o = name;
        }
        out
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(SLOT_NAMES[self.free_slot()])
    }
}

impl FromStr for MapFamily {
    type Err = MapError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(MapFamily::A),
            "B" | "b" => Ok(MapFamily::B),
            "C" | "c" => Ok(MapFamily::C),
            "D" | "d" => Ok(MapFamily::D),
            other => Err(MapError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("UnknownFamily: `{0}` (expected A, B, C or D)")]
    UnknownFamily(String),
    #[error("InvalidBase: {0}")]
    InvalidBase(String),
    #[error("SingularArgument: X = {value} equals the forbidden point {point}")]
    SingularArgument { point: &'static str, value: String },
    #[error("ZeroValueNotInvertible: the map value at X = {0} is O")]
    ZeroValueNotInvertible(String),
    #[error(transparent)]
    Ratio(#[from] RatioError),
}

/// A family together with its three fixed points, in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRatioBase<E> {
    family: MapFamily,
    base: [E; 3],
}

impl<E: Clone + PartialEq + fmt::Display> CrossRatioBase<E> {
    /// Validates that the base points are pairwise distinct and distinct
    /// from `O`.
    pub fn new<F: SkewField<Elem = E>>(field: &F, family: MapFamily, base: [E; 3]) -> Result<Self, MapError> {
        let names = family.base_names();
        for (i, p) in base.iter().enumerate() {
            if field.is_zero(p) {
                return Err(MapError::InvalidBase(format!("{} = O", names[i])));
            }
            for (j, q) in base.iter().enumerate().skip(i + 1) {
                if p == q {
                    return Err(MapError::InvalidBase(format!("{} = {} = {}", names[i], names[j], p)));
                }
            }
        }
        Ok(CrossRatioBase { family, base })
    }

    pub fn family(&self) -> MapFamily {
        self.family
    }

    pub fn base(&self) -> &[E; 3] {
        &self.base
    }

    /// The base point in the given (non-free) slot.
    fn fixed(&self, slot: usize) -> &E {
        let f = self.family.free_slot();
        debug_assert_ne!(slot, f);
        &self.base[if slot < f { slot } else { slot - 1 }]
    }

    /// The four cross-ratio arguments with `x` in the free slot.
    pub fn slots(&self, x: &E) -> [E; 4] {
        let f = self.family.free_slot();
        std::array::from_fn(|s| if s == f { x.clone() } else { self.fixed(s).clone() })
    }

    /// The argument at which the map is undefined.
    pub fn singular_point(&self) -> &E {
        self.fixed(3 - self.family.free_slot())
    }

    fn singular_name(&self) -> &'static str {
        SLOT_NAMES[3 - self.family.free_slot()]
    }

    /// The argument mapped to `O`.
    pub fn zero_point(&self) -> &E {
        self.fixed(self.family.free_slot() ^ 2)
    }

    /// The argument mapped to `I`.
    pub fn unit_point(&self) -> &E {
        self.fixed(self.family.free_slot() ^ 1)
    }

    pub fn is_admissible(&self, x: &E) -> bool {
        x != self.singular_point()
    }

    pub fn evaluate<F: SkewField<Elem = E>>(&self, field: &F, x: &E) -> Result<E, MapError> {
        if !self.is_admissible(x) {
            return Err(MapError::SingularArgument { point: self.singular_name(), value: x.to_string() });
        }
        let [a, b, c, d] = self.slots(x);
        Ok(cross_ratio(field, &a, &b, &c, &d)?)
    }

    /// The multiplicative inverse of `evaluate(x)`, computed as the
    /// cross-ratio with the last two slots exchanged.
    pub fn inverse_value<F: SkewField<Elem = E>>(&self, field: &F, x: &E) -> Result<E, MapError> {
        if !self.is_admissible(x) {
            return Err(MapError::SingularArgument { point: self.singular_name(), value: x.to_string() });
        }
        if x == self.zero_point() {
            return Err(MapError::ZeroValueNotInvertible(x.to_string()));
        }
        let [a, b, c, d] = self.slots(x);
        Ok(cross_ratio(field, &a, &b, &d, &c)?)
    }

    /// Some `X` with `evaluate(X) = v`, when one can be found by solving the
    /// defining equation; `None` otherwise.
    pub fn preimage<F: SkewField<Elem = E>>(&self, field: &F, v: &E) -> Option<E> {
        let one = field.one();
        let z = match self.family {
            MapFamily::A => {
                // (Z−D)⁻¹·K·(Z−C) = v with K = (B−D)(B−C)⁻¹  ⇔  K·Z − Z·v = K·C − D·v
                let (b, c, d) = (self.fixed(1), self.fixed(2), self.fixed(3));
                let k = field.right_div(&field.sub(b, d), &field.sub(b, c)).ok()?;
                let rhs = field.sub(&field.mul(&k, c), &field.mul(d, v));
                solve_sylvester(field, &k, v, &rhs)?
            }
            MapFamily::B => {
                // (Z−D)(Z−C)⁻¹ = w with w = (A−D)·v·(A−C)⁻¹  ⇔  (1−w)·Z = D − w·C
                let (a, c, d) = (self.fixed(0), self.fixed(2), self.fixed(3));
                let w = field.right_div(&field.mul(&field.sub(a, d), v), &field.sub(a, c)).ok()?;
                field.left_div(&field.sub(&one, &w), &field.sub(d, &field.mul(&w, c))).ok()?
            }
            MapFamily::C => {
                // (B−Z)⁻¹(A−Z) = w with w = (B−D)⁻¹(A−D)·v  ⇔  Z·(w−1) = B·w − A
                let (a, b, d) = (self.fixed(0), self.fixed(1), self.fixed(3));
                let w = field.mul(&field.left_div(&field.sub(b, d), &field.sub(a, d)).ok()?, v);
                field.right_div(&field.sub(&field.mul(b, &w), a), &field.sub(&w, &one)).ok()?
            }
            MapFamily::D => {
                // (A−Z)⁻¹(B−Z) = w with w = v·(A−C)⁻¹(B−C)  ⇔  Z·(w−1) = A·w − B
                let (a, b, c) = (self.fixed(0), self.fixed(1), self.fixed(2));
                let w = field.mul(v, &field.left_div(&field.sub(a, c), &field.sub(b, c)).ok()?);
                field.right_div(&field.sub(&field.mul(a, &w), b), &field.sub(&w, &one)).ok()?
            }
        };
        (self.evaluate(field, &z).ok().as_ref() == Some(v)).then_some(z)
    }
}

/// How verification runs choose arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleSet {
    /// `count` admissible tuples drawn from a seeded generator.
    Random { seed: u64, count: usize },
    /// Every tuple of field elements; finite backends only.
    Exhaustive,
}

/// Outcome of checking one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub samples: usize,
    pub rejections: usize,
    pub counterexample: Option<String>,
    /// Informational checks report a count instead of pass/fail.
    pub attained: Option<usize>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} samples={:<5} rejections={:<5} ", self.name, self.samples, self.rejections)?;
        match (&self.attained, &self.counterexample) {
            (Some(k), _) => write!(f, "INFO attained={}/{}", k, self.samples),
            (None, None) => write!(f, "PASS"),
            (None, Some(c)) => write!(f, "FAIL counterexample: {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Draws admissible argument tuples and checks one identity on each.
struct Sampler<'a, F: SkewField> {
    field: &'a F,
    base: &'a CrossRatioBase<F::Elem>,
    samples: SampleSet,
}

impl<F: SkewField> Sampler<'_, F> {
    /// Runs `body` on every tuple; `body` returns `Err(description)` on a
    /// violated identity. For informational checks `Ok(hit)` is counted.
    fn run<const N: usize>(
        &self,
        name: &str,
        salt: u64,
        informational: bool,
        admissible: impl Fn(&F::Elem) -> bool,
        mut body: impl FnMut(&[F::Elem; N]) -> Result<bool, String>,
    ) -> IdentityCheck {
        let mut check = IdentityCheck {
            name: name.to_string(),
            samples: 0,
            rejections: 0,
            counterexample: None,
            attained: None,
        };
        let mut attained = 0;
        let mut visit = |tuple: [F::Elem; N], check: &mut IdentityCheck| {
            check.samples += 1;
            match body(&tuple) {
                Ok(hit) => attained += usize::from(hit),
                Err(msg) => {
                    if check.counterexample.is_none() {
                        let args: Vec<String> = tuple.iter().map(|x| x.to_string()).collect();
                        check.counterexample = Some(format!("X=[{}]: {}", args.join(", "), msg));
                    }
                }
            }
        };
        match self.samples {
            SampleSet::Random { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                let limit = count.saturating_mul(100).max(1000);
                while check.samples < count && check.rejections < limit {
                    let tuple: [F::Elem; N] = std::array::from_fn(|_| self.field.random(&mut rng));
                    if tuple.iter().all(&admissible) {
                        visit(tuple, &mut check);
                    } else {
                        check.rejections += 1;
                    }
                }
            }
            SampleSet::Exhaustive => {
                let all = self.field.elements().expect("exhaustive sampling needs a finite field");
                let total = all.len().pow(N as u32);
                for mut index in 0..total {
                    let tuple: [F::Elem; N] = std::array::from_fn(|_| {
                        let e = all[index % all.len()].clone();
                        index /= all.len();
                        e
                    });
                    if tuple.iter().all(&admissible) {
                        visit(tuple, &mut check);
                    } else {
                        check.rejections += 1;
                    }
                }
            }
        }
        if check.samples == 0 && check.counterexample.is_none() {
            check.counterexample = Some("no admissible samples".to_string());
        }
        if informational {
            check.attained = Some(attained);
        }
        check
    }

    fn eval(&self, x: &F::Elem) -> Result<F::Elem, String> {
        self.base.evaluate(self.field, x).map_err(|e| e.to_string())
    }

    fn nonsingular(&self) -> impl Fn(&F::Elem) -> bool + '_ {
        move |x| self.base.is_admissible(x)
    }
}

fn expect_eq<E: PartialEq + fmt::Display>(what: &str, lhs: &E, rhs: &E) -> Result<bool, String> {
    if lhs == rhs {
        Ok(true)
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn title<F: SkewField>(field: &F, base: &CrossRatioBase<F::Elem>, what: &str) -> String {
    let names = base.family().base_names();
    let fixed: Vec<String> = names.iter().zip(base.base()).map(|(n, v)| format!("{n}={v}")).collect();
    format!("family {} over {} ({}): {}", base.family(), field.name(), fixed.join(", "), what)
}

/// Associativity, commutativity and the zero element of value addition,
/// plus an informational closure count.
pub fn verify_addition_structure<F: SkewField>(field: &F, base: &CrossRatioBase<F::Elem>, samples: SampleSet) -> Report {
    let s = Sampler { field, base, samples };
    let f = field;
    let zero_value = base.evaluate(field, base.zero_point());
    let checks = vec![
        s.run("add.associativity", 1, false, s.nonsingular(), |[x, y, z]: &[F::Elem; 3]| {
            let (mx, my, mz) = (s.eval(x)?, s.eval(y)?, s.eval(z)?);
            expect_eq("(μX+μY)+μZ vs μX+(μY+μZ)", &f.add(&f.add(&mx, &my), &mz), &f.add(&mx, &f.add(&my, &mz)))
        }),
        s.run("add.commutativity", 2, false, s.nonsingular(), |[x, y]: &[F::Elem; 2]| {
            let (mx, my) = (s.eval(x)?, s.eval(y)?);
            expect_eq("μX+μY vs μY+μX", &f.add(&mx, &my), &f.add(&my, &mx))
        }),
        s.run("add.zero_element", 3, false, s.nonsingular(), |[x]: &[F::Elem; 1]| {
            let zero = zero_value.clone().map_err(|e| e.to_string())?;
            expect_eq("value at zero point", &zero, &f.zero())?;
            let mx = s.eval(x)?;
            expect_eq("μX+μ(zero)", &f.add(&mx, &zero), &mx)?;
            expect_eq("μ(zero)+μX", &f.add(&zero, &mx), &mx)
        }),
        closure(&s, "add.closure", 4, |a, b| f.add(a, b)),
    ];
    Report { title: title(field, base, "addition"), checks }
}

/// Associativity, the unit element and two-sided inverses of value
/// multiplication, plus an informational closure count.
pub fn verify_multiplicative_group<F: SkewField>(field: &F, base: &CrossRatioBase<F::Elem>, samples: SampleSet) -> Report {
    let s = Sampler { field, base, samples };
    let f = field;
    let unit_value = base.evaluate(field, base.unit_point());
    let invertible = |x: &F::Elem| base.is_admissible(x) && x != base.zero_point();
    let checks = vec![
        s.run("mul.associativity", 5, false, s.nonsingular(), |[x, y, z]: &[F::Elem; 3]| {
            let (mx, my, mz) = (s.eval(x)?, s.eval(y)?, s.eval(z)?);
            expect_eq("(μX·μY)·μZ vs μX·(μY·μZ)", &f.mul(&f.mul(&mx, &my), &mz), &f.mul(&mx, &f.mul(&my, &mz)))
        }),
        s.run("mul.unit_element", 6, false, s.nonsingular(), |[x]: &[F::Elem; 1]| {
            let unit = unit_value.clone().map_err(|e| e.to_string())?;
            expect_eq("value at unit point", &unit, &f.one())?;
            let mx = s.eval(x)?;
            expect_eq("μX·μ(unit)", &f.mul(&mx, &unit), &mx)?;
            expect_eq("μ(unit)·μX", &f.mul(&unit, &mx), &mx)
        }),
        s.run("mul.inverse", 7, false, invertible, |[x]: &[F::Elem; 1]| {
            let mx = s.eval(x)?;
            let inv = base.inverse_value(f, x).map_err(|e| e.to_string())?;
            expect_eq("μX·μX⁻¹", &f.mul(&mx, &inv), &f.one())?;
            expect_eq("μX⁻¹·μX", &f.mul(&inv, &mx), &f.one())?;
            expect_eq("swapped cross-ratio vs field inverse", &inv, &f.inv(&mx).map_err(|e| e.to_string())?)
        }),
        closure(&s, "mul.closure", 8, |a, b| f.mul(a, b)),
    ];
    Report { title: title(field, base, "multiplication"), checks }
}

/// Both distributive laws of value multiplication over value addition.
pub fn verify_distributive<F: SkewField>(field: &F, base: &CrossRatioBase<F::Elem>, samples: SampleSet) -> Report {
    let s = Sampler { field, base, samples };
    let f = field;
    let checks = vec![
        s.run("distrib.left", 9, false, s.nonsingular(), |[x, y, z]: &[F::Elem; 3]| {
            let (mx, my, mz) = (s.eval(x)?, s.eval(y)?, s.eval(z)?);
            expect_eq("μX(μY+μZ) vs μXμY+μXμZ", &f.mul(&mx, &f.add(&my, &mz)), &f.add(&f.mul(&mx, &my), &f.mul(&mx, &mz)))
        }),
        s.run("distrib.right", 10, false, s.nonsingular(), |[x, y, z]: &[F::Elem; 3]| {
            let (mx, my, mz) = (s.eval(x)?, s.eval(y)?, s.eval(z)?);
            expect_eq("(μX+μY)μZ vs μXμZ+μYμZ", &f.mul(&f.add(&mx, &my), &mz), &f.add(&f.mul(&mx, &mz), &f.mul(&my, &mz)))
        }),
    ];
    Report { title: title(field, base, "distributivity"), checks }
}

/// All three reports for one base.
pub fn verify_all<F: SkewField>(field: &F, base: &CrossRatioBase<F::Elem>, samples: SampleSet) -> Vec<Report> {
    vec![
        verify_addition_structure(field, base, samples),
        verify_multiplicative_group(field, base, samples),
        verify_distributive(field, base, samples),
    ]
}

fn closure<F: SkewField>(
    s: &Sampler<'_, F>,
    name: &str,
    salt: u64,
    op: impl Fn(&F::Elem, &F::Elem) -> F::Elem,
) -> IdentityCheck {
    s.run(name, salt, true, s.nonsingular(), |[x, y]: &[F::Elem; 2]| {
        let v = op(&s.eval(x)?, &s.eval(y)?);
        Ok(s.base.preimage(s.field, &v).is_some())
    })
}
