//! Acceptance criteria 1-9. Prints one line per criterion and exits nonzero
//! if any fails.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::{cr_oracle, gen_expr};
use desargues::cli::expr::parse_expression;
use desargues::cli::syntax::CliBackend;
use desargues::constructions::VariantKind;
use desargues::crossratio_maps::{verify_all, CrossRatioBase, MapFamily, SampleSet};
use desargues::{calibrated_product, Line, Plane, Point, PrimeField, Quaternions, Rational, RationalQuaternion, Rationals, SkewField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// 1. Skew-field axioms.

fn axioms<F: SkewField>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), String> {
    let at = |law: &str| format!("{law} fails over {} at a={a}, b={b}, c={c}", f.name());
    ensure(f.add(&f.add(a, b), c) == f.add(a, &f.add(b, c)), || at("additive associativity"))?;
    ensure(f.add(a, b) == f.add(b, a), || at("additive commutativity"))?;
    ensure(f.add(a, &f.zero()) == *a && f.add(&f.zero(), a) == *a, || at("additive identity"))?;
    ensure(f.add(a, &f.neg(a)) == f.zero(), || at("additive inverse"))?;
    ensure(f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c)), || at("multiplicative associativity"))?;
    ensure(f.mul(a, &f.one()) == *a && f.mul(&f.one(), a) == *a, || at("multiplicative identity"))?;
    ensure(f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c)), || at("left distributivity"))?;
    ensure(f.mul(&f.add(a, b), c) == f.add(&f.mul(a, c), &f.mul(b, c)), || at("right distributivity"))?;
    ensure(f.zero() != f.one(), || at("0 != 1"))?;
    if f.is_zero(a) {
        return ensure(f.inv(a).is_err(), || at("zero has no inverse"));
    }
    let ai = f.inv(a).map_err(|_| at("inverse exists"))?;
    ensure(f.mul(a, &ai) == f.one() && f.mul(&ai, a) == f.one(), || at("two-sided inverse"))?;
    ensure(f.inv(&ai).ok().as_ref() == Some(a), || at("inverse involution"))?;
    if !f.is_zero(b) {
        ensure(!f.is_zero(&f.mul(a, b)), || at("no zero divisors"))?;
        let lhs = f.inv(&f.mul(a, b)).map_err(|_| at("no zero divisors"))?;
        ensure(lhs == f.mul(&f.inv(b).unwrap(), &ai), || at("inverse anti-homomorphism"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let gf5 = PrimeField::new(5).unwrap();
    let all = gf5.elements().unwrap();
    let mut exhaustive = 0;
    for a in &all {
        for b in &all {
            for c in &all {
                axioms(&gf5, a, b, c)?;
                exhaustive += 1;
            }
        }
    }
    fn random<F: SkewField>(f: &F, seed: u64) -> Result<usize, String> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            axioms(f, &a, &b, &c)?;
        }
        Ok(1000)
    }
    let q = random(&Rationals, 101)?;
    let h = random(&Quaternions, 102)?;
    Ok(format!("gfp(5) {exhaustive}/125 triples, rational {q}, quaternion {h}, 0 failures"))
}

// 2. Non-commutativity witness.

fn criterion_2() -> Outcome {
    let q = Quaternions;
    let (i, j, k) = (RationalQuaternion::i(), RationalQuaternion::j(), RationalQuaternion::k());
    let (ij, ji) = (q.mul(&i, &j), q.mul(&j, &i));
    ensure(ij == k, || format!("i*j = {ij}"))?;
    ensure(ji == k.neg(), || format!("j*i = {ji}"))?;
    ensure(ij != ji, || "i*j = j*i".into())?;
    Ok(format!("i*j = {ij}, j*i = {ji}"))
}

// 3. Coordinatization oracle.

fn oracle_run<F: SkewField>(plane: &Plane<F>, a: &F::Elem, b: &F::Elem, aux: &Point<F::Elem>) -> Result<(), String> {
    let f = plane.field();
    let frame = plane.canonical_frame();
    let (pa, pb) = (plane.embed(&frame, a), plane.embed(&frame, b));
    let sum = plane.geometric_add(&frame, &pa, &pb, aux).map_err(|e| e.to_string())?;
    ensure(sum == plane.embed(&frame, &f.add(a, b)), || format!("{}: {a} + {b} with aux {aux} gave {sum}", f.name()))?;
    let prod = plane.geometric_mul(&frame, &pa, &pb, aux).map_err(|e| e.to_string())?;
    ensure(prod == plane.embed(&frame, &calibrated_product(f, a, b)), || format!("{}: {a} * {b} with aux {aux} gave {prod}", f.name()))
}

fn oracle_random<F: SkewField>(f: F, seed: u64) -> Result<usize, String> {
    let plane = Plane::new(f);
    let frame = plane.canonical_frame();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut runs = 0;
    for _ in 0..500 {
        let (a, b) = (plane.field().random(&mut rng), plane.field().random(&mut rng));
        for _ in 0..10 {
            let aux = plane.random_aux(&frame, &mut rng);
            oracle_run(&plane, &a, &b, &aux)?;
            runs += 1;
        }
    }
    Ok(runs)
}

fn criterion_3() -> Outcome {
    let q = oracle_random(Rationals, 301)?;
    let h = oracle_random(Quaternions, 302)?;
    let plane = Plane::new(PrimeField::new(3).unwrap());
    let all = plane.field().elements().unwrap();
    let mut g = 0;
    for a in &all {
        for b in &all {
            for x in &all {
                for y in all.iter().filter(|y| !plane.field().is_zero(y)) {
                    oracle_run(&plane, a, b, &Point::new(x.clone(), y.clone()))?;
                    g += 1;
                }
            }
        }
    }
    Ok(format!("rational {q} runs (500 pairs x 10 aux), gfp(3) {g} runs (all pairs, all aux), quaternion {h} runs (500 pairs x 10 aux)"))
}

// 4. Auxiliary-point independence.

fn aux_independence<F: SkewField>(f: F, seed: u64) -> Result<usize, String> {
    let plane = Plane::new(f);
    let frame = plane.canonical_frame();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let (a, b) = (plane.field().random(&mut rng), plane.field().random(&mut rng));
        let (pa, pb) = (plane.embed(&frame, &a), plane.embed(&frame, &b));
        let mut auxes = HashSet::new();
        while auxes.len() < 10 {
            auxes.insert(plane.random_aux(&frame, &mut rng));
        }
        let mut sums = HashSet::new();
        let mut prods = HashSet::new();
        for aux in &auxes {
            sums.insert(plane.geometric_add(&frame, &pa, &pb, aux).map_err(|e| e.to_string())?);
            prods.insert(plane.geometric_mul(&frame, &pa, &pb, aux).map_err(|e| e.to_string())?);
        }
        ensure(sums.len() == 1 && prods.len() == 1, || format!("{}: results for a={a}, b={b} depend on the auxiliary point", plane.field().name()))?;
    }
    Ok(100)
}

fn criterion_4() -> Outcome {
    let q = aux_independence(Rationals, 401)?;
    let g = aux_independence(PrimeField::new(7).unwrap(), 402)?;
    let h = aux_independence(Quaternions, 403)?;
    Ok(format!("{q} pairs rational, {g} pairs gfp(7), {h} pairs quaternion, 10 distinct aux each"))
}

// 5. Desargues checker and Playfair.

fn desargues_generated<F: SkewField>(f: F, seed: u64) -> Result<usize, String> {
    let plane = Plane::new(f);
    let mut n = 0;
    for kind in [VariantKind::Parallel, VariantKind::Concurrent] {
        for i in 0..200 {
            let cfg = plane.generate_desargues_config(seed + i, kind).map_err(|e| e.to_string())?;
            match plane.check_desargues(&cfg) {
                Ok(true) => n += 1,
                other => return Err(format!("{} {kind:?} #{i}: {other:?}", plane.field().name())),
            }
        }
    }
    Ok(n)
}

fn playfair(p: u64) -> Result<usize, String> {
    let plane = Plane::new(PrimeField::new(p).unwrap());
    let all = plane.field().elements().unwrap();
    let pts: Vec<_> = all.iter().flat_map(|x| all.iter().map(move |y| Point::new(x.clone(), y.clone()))).collect();
    let mut lines: HashSet<Line<_>> = HashSet::new();
    for a in &pts {
        for b in &pts {
            if a != b {
                lines.insert(plane.line_through(a, b).map_err(|e| e.to_string())?);
            }
        }
    }
    let mut checked = 0;
    for l in &lines {
        for pt in &pts {
            let n = lines.iter().filter(|m| plane.on_line(pt, m) && plane.is_parallel(l, m)).count();
            ensure(n == 1, || format!("gfp({p}): {n} parallels to {l} through {pt}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn criterion_5() -> Outcome {
    let q = desargues_generated(Rationals, 501)?;
    let g = desargues_generated(PrimeField::new(5).unwrap(), 502)?;
    let h = desargues_generated(Quaternions, 503)?;
    let p2 = playfair(2)?;
    let p3 = playfair(3)?;
    Ok(format!("true on {q} rational, {g} gfp(5), {h} quaternion configurations; Playfair {p2} (gfp(2)) + {p3} (gfp(3)) line/point pairs"))
}

// 6. Worked cross-ratio through the command line.

fn criterion_6() -> Outcome {
    // ((2−5)⁻¹(3−5))·((3−1)⁻¹(2−1)) = (2/3)(1/2)
    let oracle = &Rational::new(-2, -3) * &Rational::new(1, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(["eval", "--backend", "rational", "cr(2,3;1,5)"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout).trim().to_string();
    ensure(out.status.code() == Some(0), || format!("exit {:?}", out.status.code()))?;
    ensure(stdout == oracle.to_string() && stdout == "1/3", || format!("printed {stdout}, expected {oracle}"))?;
    Ok(format!("desargues eval cr(2,3;1,5) -> {stdout}"))
}

// 7. Map identities.

const REQUIRED: [&str; 5] = ["add.zero_element", "mul.unit_element", "mul.inverse", "distrib.left", "distrib.right"];

fn theorem_run<F: SkewField>(f: &F, base: &CrossRatioBase<F::Elem>, samples: SampleSet, min: usize) -> Result<usize, String> {
    let reports = verify_all(f, base, samples);
    let mut seen = HashSet::new();
    let mut n = 0;
    for r in &reports {
        for c in &r.checks {
            if c.attained.is_some() {
                continue;
            }
            ensure(c.passed(), || format!("{}: {c}", r.title))?;
            ensure(c.samples >= min, || format!("{}: only {} samples for {}", r.title, c.samples, c.name))?;
            seen.insert(c.name.clone());
            n += c.samples;
        }
    }
    for name in REQUIRED {
        ensure(seen.contains(name), || format!("{name} not checked"))?;
    }
    Ok(n)
}

fn theorems_random<F: SkewField>(f: &F, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    for family in MapFamily::ALL {
        for _ in 0..3 {
            let base = loop {
                if let Ok(b) = CrossRatioBase::new(f, family, std::array::from_fn(|_| f.random(&mut rng))) {
                    break b;
                }
            };
            n += theorem_run(f, &base, SampleSet::Random { seed, count: 100 }, 100)?;
        }
    }
    Ok(n)
}

fn criterion_7() -> Outcome {
    let q = theorems_random(&Rationals, 701)?;
    let h = theorems_random(&Quaternions, 702)?;
    let big = theorems_random(&PrimeField::new(101).unwrap(), 703)?;
    let gf5 = PrimeField::new(5).unwrap();
    let nonzero: Vec<_> = gf5.elements().unwrap().into_iter().skip(1).collect();
    let mut g = 0;
    let mut bases = 0;
    for family in MapFamily::ALL {
        for a in &nonzero {
            for b in &nonzero {
                for c in &nonzero {
                    if let Ok(base) = CrossRatioBase::new(&gf5, family, [a.clone(), b.clone(), c.clone()]) {
                        g += theorem_run(&gf5, &base, SampleSet::Exhaustive, 1)?;
                        bases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("families A-D: rational {q}, quaternion {h}, gfp(101) {big} random samples; gfp(5) exhaustive over {bases} bases, {g} samples"))
}

// 8. Inverse formula cross-check.

fn criterion_8() -> Outcome {
    let f = Quaternions;
    let mut rng = ChaCha8Rng::seed_from_u64(801);
    for family in MapFamily::ALL {
        let mut n = 0;
        while n < 100 {
            let Ok(base) = CrossRatioBase::new(&f, family, std::array::from_fn(|_| f.random(&mut rng))) else { continue };
            let x = f.random(&mut rng);
            if !base.is_admissible(&x) || &x == base.zero_point() {
                continue;
            }
            let p = base.base();
            // A: c_r(X,B;D,C)  B: c_r(A,X;D,C)  C: c_r(A,B;D,X)  D: c_r(A,B;X,C)
            let swapped = match family {
                MapFamily::A => cr_oracle(&f, &x, &p[0], &p[2], &p[1]),
                MapFamily::B => cr_oracle(&f, &p[0], &x, &p[2], &p[1]),
                MapFamily::C => cr_oracle(&f, &p[0], &p[1], &p[2], &x),
                MapFamily::D => cr_oracle(&f, &p[0], &p[1], &x, &p[2]),
            }
            .map_err(|e| format!("{family}: swapped cross-ratio singular ({e:?})"))?;
            let v = base.evaluate(&f, &x).map_err(|e| e.to_string())?;
            let w = base.inverse_value(&f, &x).map_err(|e| e.to_string())?;
            ensure(w == swapped, || format!("family {family}, X={x}: inverse_value {w} != swapped cross-ratio {swapped}"))?;
            ensure(f.mul(&v, &w) == f.one() && f.mul(&w, &v) == f.one(), || format!("family {family}, X={x}: not a two-sided inverse"))?;
            n += 1;
        }
    }
    Ok("100 quaternion samples per family, all four families".into())
}

// 9. Command-line conformance.

fn round_trips<F: CliBackend>(f: &F, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let (e, _) = gen_expr(f, &mut rng, 4);
        let text = e.to_string();
        let back = parse_expression(f, &text).map_err(|err| format!("{text}: {err}"))?;
        ensure(back == e, || format!("round trip changed {text}"))?;
    }
    Ok(200)
}

fn bin(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_desargues")).args(args).output().map_err(|e| e.to_string())
}

fn criterion_9() -> Outcome {
    let rt = round_trips(&Rationals, 901)? + round_trips(&Quaternions, 902)? + round_trips(&PrimeField::new(7).unwrap(), 903)?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut svgs = Vec::new();
    for name in ["first.svg", "second.svg"] {
        let path = dir.path().join(name);
        let out = bin(&["construct", "add", "--a", "2", "--b", "3", "--aux", "(0,1)", "--svg", path.to_str().unwrap()])?;
        ensure(out.status.code() == Some(0), || "construct failed".into())?;
        ensure(String::from_utf8_lossy(&out.stdout).contains("result = (5, 0)"), || "construct printed no result".into())?;
        svgs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(svgs[0] == svgs[1], || "SVG bytes differ between runs".into())?;
    let labels = String::from_utf8_lossy(&svgs[0]).matches("</text>").count();
    ensure(labels == 7, || format!("{labels} labels in SVG"))?;

    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "A=(0,0)\nB=(1,0)\nC=(0,1)\nA'=(0,0)\nB'=(1,0)\nC'=(0,1)\nvariant=parallel\n").map_err(|e| e.to_string())?;
    let matrix: [(&[&str], i32); 8] = [
        (&["eval", "cr(2,3;1,5)"], 0),
        (&["eval", "cr(2,3;3,5)"], 3),
        (&["eval", "cr(2,3;1"], 2),
        (&["eval", "--backend", "gfp(6)", "1"], 2),
        (&["construct", "add", "--a", "2", "--b", "3", "--aux", "(4,0)"], 3),
        (&["verify", "--family", "B", "--base", "2,3,5", "--count", "20"], 0),
        (&["verify", "--family", "B", "--base", "2,2,5"], 2),
        (&["desargues", "--config", cfg.to_str().unwrap()], 3),
    ];
    for (args, code) in matrix {
        let out = bin(args)?;
        ensure(out.status.code() == Some(code), || format!("{args:?} exited {:?}, expected {code}", out.status.code()))?;
    }
    Ok(format!("{rt} round trips, SVG byte-identical with 7 labels, {} exit codes as documented", matrix.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("skew-field axioms", criterion_1),
        ("non-commutativity witness", criterion_2),
        ("coordinatization oracle", criterion_3),
        ("auxiliary-point independence", criterion_4),
        ("Desargues checker and Playfair", criterion_5),
        ("worked cross-ratio via CLI", criterion_6),
        ("cross-ratio map theorems", criterion_7),
        ("inverse formula cross-check", criterion_8),
        ("CLI conformance", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} FAIL {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failures == 0 {
        println!("acceptance: 9/9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
