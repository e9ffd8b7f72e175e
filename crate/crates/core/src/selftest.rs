//! The invariant suite behind `desargues selftest`.
//!
//! Volumes are kept small so the whole run takes a few seconds; the test
//! suite runs the same checks at full size.

use std::collections::HashSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::VariantKind;
use crate::crossratio_maps::{verify_all, CrossRatioBase, MapFamily, SampleSet};
use crate::plane::{Line, Plane, Point};
use crate::ratios::cross_ratio;
use crate::skewfield::{PrimeField, Quaternions, Rational, RationalQuaternion, Rationals, SkewField};
use crate::calibrated_product;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SelfCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<4} {:<44} {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn record(name: impl Into<String>, outcome: Result<String, String>) -> SelfCheck {
    match outcome {
        Ok(detail) => SelfCheck { name: name.into(), passed: true, detail },
        Err(detail) => SelfCheck { name: name.into(), passed: false, detail },
    }
}

/// Checks every skew-field axiom on one triple. Returns the name of the
/// first violated law.
pub fn field_axioms_hold<F: SkewField>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), &'static str> {
    let law = |ok: bool, name| if ok { Ok(()) } else { Err(name) };
    law(f.add(&f.add(a, b), c) == f.add(a, &f.add(b, c)), "additive associativity")?;
    law(f.add(a, b) == f.add(b, a), "additive commutativity")?;
    law(f.add(a, &f.zero()) == *a, "additive identity")?;
    law(f.is_zero(&f.add(a, &f.neg(a))), "additive inverse")?;
    law(f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c)), "multiplicative associativity")?;
    law(f.mul(a, &f.one()) == *a && f.mul(&f.one(), a) == *a, "multiplicative identity")?;
    law(f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c)), "left distributivity")?;
    law(f.mul(&f.add(a, b), c) == f.add(&f.mul(a, c), &f.mul(b, c)), "right distributivity")?;
    if !f.is_zero(a) {
        let ai = f.inv(a).map_err(|_| "inverse exists")?;
        law(f.is_one(&f.mul(a, &ai)) && f.is_one(&f.mul(&ai, a)), "two-sided inverse")?;
        law(f.inv(&ai).ok().as_ref() == Some(a), "inverse involution")?;
        if !f.is_zero(b) {
            let lhs = f.inv(&f.mul(a, b)).map_err(|_| "no zero divisors")?;
            law(lhs == f.mul(&f.inv(b).expect("nonzero"), &ai), "inverse anti-homomorphism")?;
        }
    }
    law(f.is_zero(a) || f.is_zero(b) || !f.is_zero(&f.mul(a, b)), "no zero divisors")
}

fn axioms_random<F: SkewField>(f: &F, seed: u64, count: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        field_axioms_hold(f, &a, &b, &c).map_err(|law| format!("{law} fails at ({a}, {b}, {c})"))?;
    }
    Ok(format!("{count} random triples"))
}

fn axioms_exhaustive<F: SkewField>(f: &F) -> Result<String, String> {
    let all = f.elements().expect("finite");
    for a in &all {
        for b in &all {
            for c in &all {
                field_axioms_hold(f, a, b, c).map_err(|law| format!("{law} fails at ({a}, {b}, {c})"))?;
            }
        }
    }
    Ok(format!("{} triples", all.len().pow(3)))
}

/// Builds every line of a finite plane.
pub fn all_lines<F: SkewField>(plane: &Plane<F>) -> (Vec<Point<F::Elem>>, Vec<Line<F::Elem>>) {
    let all = plane.field().elements().expect("finite");
    let pts: Vec<_> = all.iter().flat_map(|x| all.iter().map(move |y| Point::new(x.clone(), y.clone()))).collect();
    let mut lines = HashSet::new();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            lines.insert(plane.line_through(p, q).expect("distinct"));
        }
    }
    let mut lines: Vec<_> = lines.into_iter().collect();
    lines.sort_by_key(|l| l.to_string());
    (pts, lines)
}

/// Two points lie on exactly one line, and Playfair's axiom, exhaustively.
pub fn incidence_axioms<F: SkewField>(plane: &Plane<F>) -> Result<String, String> {
    let (pts, lines) = all_lines(plane);
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let n = lines.iter().filter(|l| plane.on_line(p, l) && plane.on_line(q, l)).count();
            if n != 1 {
                return Err(format!("{n} lines through {p} and {q}"));
            }
        }
    }
    for l in &lines {
        for p in &pts {
            let n = lines.iter().filter(|m| plane.on_line(p, m) && plane.is_parallel(l, m)).count();
            if n != 1 {
                return Err(format!("{n} parallels to {l} through {p}"));
            }
        }
    }
    Ok(format!("{} points, {} lines", pts.len(), lines.len()))
}

/// Compares both constructions with field arithmetic on `pairs`; pair `i`
/// is run with every point of `auxes(i)`.
pub fn constructions_agree<F: SkewField>(
    plane: &Plane<F>,
    pairs: &[(F::Elem, F::Elem)],
    auxes: &dyn Fn(usize) -> Vec<Point<F::Elem>>,
) -> Result<String, String> {
    let f = plane.field();
    let frame = plane.canonical_frame();
    let mut runs = 0;
    for (i, (a, b)) in pairs.iter().enumerate() {
        let (pa, pb) = (plane.embed(&frame, a), plane.embed(&frame, b));
        for aux in auxes(i) {
            let sum = plane.geometric_add(&frame, &pa, &pb, &aux).map_err(|e| e.to_string())?;
            if sum != plane.embed(&frame, &f.add(a, b)) {
                return Err(format!("{a} + {b} with aux {aux} gave {sum}"));
            }
            let prod = plane.geometric_mul(&frame, &pa, &pb, &aux).map_err(|e| e.to_string())?;
            if prod != plane.embed(&frame, &calibrated_product(f, a, b)) {
                return Err(format!("{a} * {b} with aux {aux} gave {prod}"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} construction pairs"))
}

fn random_pairs<F: SkewField>(f: &F, rng: &mut ChaCha8Rng, n: usize) -> Vec<(F::Elem, F::Elem)> {
    (0..n).map(|_| (f.random(rng), f.random(rng))).collect()
}

fn constructions_random<F: SkewField>(f: &F, seed: u64, pairs: usize, aux: usize) -> Result<String, String> {
    let plane = Plane::new(f.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = random_pairs(f, &mut rng, pairs);
    let frame = plane.canonical_frame();
    let aux_points: Vec<Vec<_>> = (0..pairs.len()).map(|_| (0..aux).map(|_| plane.random_aux(&frame, &mut rng)).collect()).collect();
    constructions_agree(&plane, &pairs, &|i| aux_points[i].clone())
}

fn constructions_exhaustive<F: SkewField>(f: &F) -> Result<String, String> {
    let plane = Plane::new(f.clone());
    let all = f.elements().expect("finite");
    let pairs: Vec<_> = all.iter().flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let zero = f.zero();
    let auxes: Vec<_> = all.iter().flat_map(|x| all.iter().map(move |y| Point::new(x.clone(), y.clone()))).filter(|p| p.y != zero).collect();
    constructions_agree(&plane, &pairs, &|_| auxes.clone())
}

fn desargues_generated<F: SkewField>(f: &F, seed: u64, count: u64) -> Result<String, String> {
    let plane = Plane::new(f.clone());
    for kind in [VariantKind::Parallel, VariantKind::Concurrent] {
        for i in 0..count {
            let cfg = plane.generate_desargues_config(seed.wrapping_add(i), kind).map_err(|e| e.to_string())?;
            match plane.check_desargues(&cfg) {
                Ok(true) => {}
                other => return Err(format!("{kind:?} configuration {i}: {other:?}")),
            }
        }
    }
    Ok(format!("{count} per variant"))
}

fn random_base<F: SkewField>(f: &F, family: MapFamily, rng: &mut ChaCha8Rng) -> CrossRatioBase<F::Elem> {
    loop {
        let base = [f.random(rng), f.random(rng), f.random(rng)];
        if let Ok(b) = CrossRatioBase::new(f, family, base) {
            return b;
        }
    }
}

fn theorems<F: SkewField>(f: &F, seed: u64, samples: SampleSet) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    for family in MapFamily::ALL {
        let base = random_base(f, family, &mut rng);
        for report in verify_all(f, &base, samples) {
            if let Some(bad) = report.checks.iter().find(|c| !c.passed()) {
                return Err(format!("{}: {bad}", report.title));
            }
            checks += report.checks.len();
        }
    }
    Ok(format!("{checks} identity checks, families A-D"))
}

/// Runs the suite with the given seed.
pub fn run(seed: u64) -> Vec<SelfCheck> {
    let gf2 = PrimeField::new(2).expect("prime");
    let gf3 = PrimeField::new(3).expect("prime");
    let gf5 = PrimeField::new(5).expect("prime");
    let q = Quaternions;
    let (i, j, k) = (RationalQuaternion::i(), RationalQuaternion::j(), RationalQuaternion::k());
    let small = |count| SampleSet::Random { seed, count };

    vec![
        record("field axioms gfp(5), exhaustive", axioms_exhaustive(&gf5)),
        record("field axioms rational", axioms_random(&Rationals, seed, 300)),
        record("field axioms quaternion", axioms_random(&q, seed, 300)),
        record(
            "non-commutativity i*j = k, j*i = -k",
            if q.mul(&i, &j) == k && q.mul(&j, &i) == k.neg() && k != k.neg() { Ok("exact".into()) } else { Err("product table broken".into()) },
        ),
        record("incidence axioms gfp(2)", incidence_axioms(&Plane::new(gf2))),
        record("incidence axioms gfp(3)", incidence_axioms(&Plane::new(gf3))),
        record("constructions rational", constructions_random(&Rationals, seed, 40, 3)),
        record("constructions gfp(3), exhaustive", constructions_exhaustive(&gf3)),
        record("constructions quaternion", constructions_random(&q, seed, 40, 3)),
        record("desargues rational", desargues_generated(&Rationals, seed, 30)),
        record("desargues gfp(5)", desargues_generated(&gf5, seed, 30)),
        record("desargues quaternion", desargues_generated(&q, seed, 30)),
        record(
            "cross-ratio cr(2,3;1,5) = 1/3",
            match cross_ratio(&Rationals, &2.into(), &3.into(), &1.into(), &5.into()) {
                Ok(v) if v == Rational::new(1, 3) => Ok("exact".into()),
                other => Err(format!("{other:?}")),
            },
        ),
        record("map identities rational", theorems(&Rationals, seed, small(40))),
        record("map identities gfp(5), exhaustive", theorems(&gf5, seed, SampleSet::Exhaustive)),
        record("map identities quaternion", theorems(&q, seed, small(40))),
    ]
}
