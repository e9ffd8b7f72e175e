//! Point addition and multiplication on the line `OI` by parallel
//! constructions, the coordinatization of that line, and a checker and
//! generator for Desarguesian triangle pairs.
//!
//! Notation: `ℓ_{XY}^{Z}` is the line through `Z` parallel to the line `XY`.
//!
//! Addition of `A` and `B` with auxiliary point `B₁ ∉ OI`:
//! 1. `P₁ = ℓ_{OI}^{B₁} ∩ ℓ_{OB₁}^{A}`
//! 2. `C = ℓ_{BB₁}^{P₁} ∩ OI`
//!
//! Multiplication:
//! 1. `P₁ = ℓ_{IB₁}^{A} ∩ ℓ^{OB₁}`
//! 2. `C = ℓ_{BB₁}^{P₁} ∩ OI`
//!
//! With the left scalar action used by [`Plane`], the multiplication
//! construction for `A = embed(a)`, `B = embed(b)` lands on `embed(a·b)`,
//! see [`PRODUCT_ORDER`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::plane::{Line, Plane, PlaneError, Point};
use crate::skewfield::SkewField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("AuxOnBaseLine: auxiliary point {0} lies on the line OI")]
    AuxOnBaseLine(String),
    #[error("PointOffBaseLine: {0} does not lie on the line OI")]
    PointOffBaseLine(String),
    #[error("DegenerateConstruction: {0}")]
    DegenerateConstruction(#[from] PlaneError),
    #[error("InvalidFrame: O and I must differ")]
    InvalidFrame,
}

/// Which algebraic product the multiplication construction realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOrder {
    /// `A·B` constructs `embed(a·b)`.
    AB,
    /// `A·B` constructs `embed(b·a)`.
    BA,
}

/// Fixed by running the construction on quaternions `i`, `j` (result `k`).
pub const PRODUCT_ORDER: ProductOrder = ProductOrder::AB;

/// The algebraic product the multiplication construction computes.
pub fn calibrated_product<F: SkewField>(field: &F, a: &F::Elem, b: &F::Elem) -> F::Elem {
    match PRODUCT_ORDER {
        ProductOrder::AB => field.mul(a, b),
        ProductOrder::BA => field.mul(b, a),
    }
}

/// The distinguished line through a zero point `O` and unit point `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFrame<E> {
    origin: Point<E>,
    unit: Point<E>,
    line: Line<E>,
}

impl<E: Clone> LineFrame<E> {
    pub fn origin(&self) -> &Point<E> {
        &self.origin
    }

    pub fn unit(&self) -> &Point<E> {
        &self.unit
    }

    pub fn line(&self) -> &Line<E> {
        &self.line
    }
}

/// Every intermediate point of one construction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace<E> {
    pub op: Operation,
    pub origin: Point<E>,
    pub unit: Point<E>,
    pub a: Point<E>,
    pub b: Point<E>,
    pub aux: Point<E>,
    pub p1: Point<E>,
    pub result: Point<E>,
    /// Construction lines in drawing order, each with a short label.
    pub lines: Vec<(String, Line<E>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    Add,
    Mul,
}

type P<F> = Point<<F as SkewField>::Elem>;

impl<F: SkewField> Plane<F> {
    /// `O = (0,0)`, `I = (1,0)`: the line `OI` is the x-axis.
    pub fn canonical_frame(&self) -> LineFrame<F::Elem> {
        self.frame(&self.point(0, 0), &self.point(1, 0)).expect("distinct")
    }

    pub fn frame(&self, origin: &P<F>, unit: &P<F>) -> Result<LineFrame<F::Elem>, ConstructionError> {
        let line = self.line_through(origin, unit).map_err(|_| ConstructionError::InvalidFrame)?;
        Ok(LineFrame { origin: origin.clone(), unit: unit.clone(), line })
    }

    /// `O + c·(I − O)`.
    pub fn embed(&self, frame: &LineFrame<F::Elem>, c: &F::Elem) -> P<F> {
        let v = self.sub_points(&frame.unit, &frame.origin);
        self.add_points(&frame.origin, &self.scale(c, &v))
    }

    /// Inverse of [`Plane::embed`].
    pub fn extract(&self, frame: &LineFrame<F::Elem>, p: &P<F>) -> Result<F::Elem, ConstructionError> {
        let f = self.field();
        let v = self.sub_points(&frame.unit, &frame.origin);
        let w = self.sub_points(p, &frame.origin);
        let (lead_w, lead_v) = if f.is_zero(&v.x) { (&w.y, &v.y) } else { (&w.x, &v.x) };
        let t = f.right_div(lead_w, lead_v).expect("O ≠ I");
        if self.scale(&t, &v) == w {
            Ok(t)
        } else {
            Err(ConstructionError::PointOffBaseLine(p.to_string()))
        }
    }

    fn check_operands(&self, frame: &LineFrame<F::Elem>, a: &P<F>, b: &P<F>, aux: &P<F>) -> Result<(), ConstructionError> {
        for p in [a, b] {
            if !self.on_line(p, &frame.line) {
                return Err(ConstructionError::PointOffBaseLine(p.to_string()));
            }
        }
        if self.on_line(aux, &frame.line) {
            return Err(ConstructionError::AuxOnBaseLine(aux.to_string()));
        }
        Ok(())
    }

    pub fn trace_add(&self, frame: &LineFrame<F::Elem>, a: &P<F>, b: &P<F>, aux: &P<F>) -> Result<ConstructionTrace<F::Elem>, ConstructionError> {
        self.check_operands(frame, a, b, aux)?;
        let base = &frame.line;
        let l1 = self.parallel_through(aux, base);
        let o_aux = self.line_through(&frame.origin, aux)?;
        let through_a = self.parallel_through(a, &o_aux);
        let p1 = self.intersect(&l1, &through_a)?;
        let b_aux = self.line_through(b, aux)?;
        let through_p1 = self.parallel_through(&p1, &b_aux);
        let result = self.intersect(&through_p1, base)?;
        Ok(ConstructionTrace {
            op: Operation::Add,
            origin: frame.origin.clone(),
            unit: frame.unit.clone(),
            a: a.clone(),
            b: b.clone(),
            aux: aux.clone(),
            p1,
            result,
            lines: vec![
                ("OI".into(), base.clone()),
                ("l1".into(), l1),
                ("OB1".into(), o_aux),
                ("A||OB1".into(), through_a),
                ("BB1".into(), b_aux),
                ("P1||BB1".into(), through_p1),
            ],
        })
    }

    pub fn trace_mul(&self, frame: &LineFrame<F::Elem>, a: &P<F>, b: &P<F>, aux: &P<F>) -> Result<ConstructionTrace<F::Elem>, ConstructionError> {
        self.check_operands(frame, a, b, aux)?;
        let base = &frame.line;
        let i_aux = self.line_through(&frame.unit, aux)?;
        let through_a = self.parallel_through(a, &i_aux);
        let o_aux = self.line_through(&frame.origin, aux)?;
        let p1 = self.intersect(&through_a, &o_aux)?;
        let b_aux = self.line_through(b, aux)?;
        let through_p1 = self.parallel_through(&p1, &b_aux);
        let result = self.intersect(&through_p1, base)?;
        Ok(ConstructionTrace {
            op: Operation::Mul,
            origin: frame.origin.clone(),
            unit: frame.unit.clone(),
            a: a.clone(),
            b: b.clone(),
            aux: aux.clone(),
            p1,
            result,
            lines: vec![
                ("OI".into(), base.clone()),
                ("IB1".into(), i_aux),
                ("A||IB1".into(), through_a),
                ("OB1".into(), o_aux),
                ("BB1".into(), b_aux),
                ("P1||BB1".into(), through_p1),
            ],
        })
    }

    pub fn geometric_add(&self, frame: &LineFrame<F::Elem>, a: &P<F>, b: &P<F>, aux: &P<F>) -> Result<P<F>, ConstructionError> {
        self.trace_add(frame, a, b, aux).map(|t| t.result)
    }

    pub fn geometric_mul(&self, frame: &LineFrame<F::Elem>, a: &P<F>, b: &P<F>, aux: &P<F>) -> Result<P<F>, ConstructionError> {
        self.trace_mul(frame, a, b, aux).map(|t| t.result)
    }

    /// A pseudo-random point off the frame's line.
    pub fn random_aux<R: Rng + ?Sized>(&self, frame: &LineFrame<F::Elem>, rng: &mut R) -> P<F> {
        loop {
            let p = Point::new(self.field().random(rng), self.field().random(rng));
            if !self.on_line(&p, &frame.line) {
                return p;
            }
        }
    }
}

/// Whether the three joining lines are parallel or meet in a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesarguesVariant<E> {
    Parallel,
    Concurrent(Point<E>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantKind {
    Parallel,
    Concurrent,
}

/// Two triangles `ABC` and `A'B'C'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesarguesConfig<E> {
    pub a: Point<E>,
    pub b: Point<E>,
    pub c: Point<E>,
    pub a2: Point<E>,
    pub b2: Point<E>,
    pub c2: Point<E>,
    pub variant: DesarguesVariant<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesarguesError {
    #[error("InvalidConfiguration: failed hypotheses: {}", .0.join(", "))]
    InvalidConfiguration(Vec<&'static str>),
    #[error("GenerationExhausted: no valid {0:?} configuration found in {1} attempts")]
    GenerationExhausted(VariantKind, usize),
}

impl<F: SkewField> Plane<F> {
    /// Evaluates every hypothesis of the Desargues configuration.
    ///
    /// Hypotheses that depend on an undefined line are reported as failing.
    pub fn desargues_hypotheses(&self, cfg: &DesarguesConfig<F::Elem>) -> Vec<Hypothesis> {
        let DesarguesConfig { a, b, c, a2, b2, c2, variant } = cfg;
        let line = |p: &P<F>, q: &P<F>| self.line_through(p, q).ok();
        let (aa, bb, cc) = (line(a, a2), line(b, b2), line(c, c2));
        let (ab, ab2) = (line(a, b), line(a2, b2));
        let (bc, bc2) = (line(b, c), line(b2, c2));
        let (ac, ac2) = (line(a, c), line(a2, c2));

        let both = |x: &Option<Line<F::Elem>>, y: &Option<Line<F::Elem>>, rel: &dyn Fn(&Line<F::Elem>, &Line<F::Elem>) -> bool| {
            matches!((x, y), (Some(x), Some(y)) if rel(x, y))
        };
        let distinct = |x: &Line<F::Elem>, y: &Line<F::Elem>| x != y;
        let parallel = |x: &Line<F::Elem>, y: &Line<F::Elem>| self.is_parallel(x, y);

        let axes_defined = aa.is_some() && bb.is_some() && cc.is_some();
        let variant_holds = match variant {
            DesarguesVariant::Parallel => both(&aa, &bb, &parallel) && both(&bb, &cc, &parallel),
            DesarguesVariant::Concurrent(p) => {
                [&aa, &bb, &cc].iter().all(|l| matches!(l, Some(l) if self.on_line(p, l)))
                    && !both(&aa, &bb, &parallel)
            }
        };
        vec![
            Hypothesis { name: "joining lines AA', BB', CC' defined", holds: axes_defined },
            Hypothesis {
                name: "AA', BB', CC' pairwise distinct",
                holds: both(&aa, &bb, &distinct) && both(&bb, &cc, &distinct) && both(&aa, &cc, &distinct),
            },
            Hypothesis { name: "variant (parallel or concurrent axes)", holds: variant_holds },
            Hypothesis { name: "sides AB, A'B', BC, B'C', AC, A'C' defined", holds: [&ab, &ab2, &bc, &bc2, &ac, &ac2].iter().all(|l| l.is_some()) },
            Hypothesis { name: "AB || A'B'", holds: both(&ab, &ab2, &parallel) },
            Hypothesis { name: "BC || B'C'", holds: both(&bc, &bc2, &parallel) },
            Hypothesis { name: "AB != A'B'", holds: both(&ab, &ab2, &distinct) },
            Hypothesis { name: "BC != B'C'", holds: both(&bc, &bc2, &distinct) },
        ]
    }

    /// Checks the conclusion `AC || A'C'` of a Desarguesian configuration.
    ///
    /// Over a skew-field coordinate plane the answer is always `true`.
    pub fn check_desargues(&self, cfg: &DesarguesConfig<F::Elem>) -> Result<bool, DesarguesError> {
        let failed: Vec<_> = self.desargues_hypotheses(cfg).into_iter().filter(|h| !h.holds).map(|h| h.name).collect();
        if !failed.is_empty() {
            return Err(DesarguesError::InvalidConfiguration(failed));
        }
        let ac = self.line_through(&cfg.a, &cfg.c).expect("checked");
        let ac2 = self.line_through(&cfg.a2, &cfg.c2).expect("checked");
        Ok(self.is_parallel(&ac, &ac2))
    }

    /// Builds a configuration satisfying every hypothesis by transforming a
    /// random triangle: a translation for the parallel variant, a left
    /// homothety `X ↦ P + λ·(X − P)` for the concurrent one.
    ///
    /// Fails only when the field is too small to host the variant at all
    /// (for instance GF(2)).
    pub fn generate_desargues_config(&self, seed: u64, kind: VariantKind) -> Result<DesarguesConfig<F::Elem>, DesarguesError> {
        const MAX_ATTEMPTS: usize = 10_000;
        let f = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random_point = |rng: &mut ChaCha8Rng| Point::new(f.random(rng), f.random(rng));
        for _ in 0..MAX_ATTEMPTS {
            let (a, b, c) = (random_point(&mut rng), random_point(&mut rng), random_point(&mut rng));
            let cfg = match kind {
                VariantKind::Parallel => {
                    let v = random_point(&mut rng);
                    let shift = |p: &P<F>| self.add_points(p, &v);
                    DesarguesConfig { a2: shift(&a), b2: shift(&b), c2: shift(&c), a, b, c, variant: DesarguesVariant::Parallel }
                }
                VariantKind::Concurrent => {
                    let center = random_point(&mut rng);
                    let lambda = f.random(&mut rng);
                    if f.is_zero(&lambda) || f.is_one(&lambda) {
                        continue;
                    }
                    let dilate = |p: &P<F>| self.add_points(&center, &self.scale(&lambda, &self.sub_points(p, &center)));
                    DesarguesConfig {
                        a2: dilate(&a),
                        b2: dilate(&b),
                        c2: dilate(&c),
                        a,
                        b,
                        c,
                        variant: DesarguesVariant::Concurrent(center),
                    }
                }
            };
            if self.desargues_hypotheses(&cfg).iter().all(|h| h.holds) {
                return Ok(cfg);
            }
        }
        Err(DesarguesError::GenerationExhausted(kind, MAX_ATTEMPTS))
    }
}
