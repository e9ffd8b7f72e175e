#![allow(dead_code)]

use desargues::cli::expr::Expr;
use desargues::crossratio_maps::MapFamily;
use desargues::SkewField;
use rand::Rng;

/// Why an expression has no value, as the command line should report it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// Exit 3.
    Singular,
    /// Exit 2 (an invalid map base).
    Usage,
}

type Value<F> = Result<<F as SkewField>::Elem, Failure>;

fn inv<F: SkewField>(f: &F, x: &F::Elem) -> Value<F> {
    f.inv(x).map_err(|_| Failure::Singular)
}

/// `c_r(a,b;c,d)` written out directly.
pub fn cr_oracle<F: SkewField>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> Value<F> {
    let first = f.mul(&inv(f, &f.sub(a, d))?, &f.sub(b, d));
    let second = f.mul(&inv(f, &f.sub(b, c))?, &f.sub(a, c));
    Ok(f.mul(&first, &second))
}

/// Random expression together with its value computed straight from field
/// operations, in the evaluator's left-to-right order.
pub fn gen_expr<F: SkewField, R: Rng>(f: &F, rng: &mut R, depth: u32) -> (Expr<F::Elem>, Value<F>) {
    if depth == 0 || rng.gen_bool(0.25) {
        let x = f.random(rng);
        return (Expr::Lit(x.clone()), Ok(x));
    }
    let d = depth - 1;
    match rng.gen_range(0..9) {
        0 | 1 | 2 => {
            let (l, lv) = gen_expr(f, rng, d);
            let (r, rv) = gen_expr(f, rng, d);
            let op = rng.gen_range(0..3);
            let v = lv.and_then(|l| {
                rv.map(|r| match op {
                    0 => f.add(&l, &r),
                    1 => f.sub(&l, &r),
                    _ => f.mul(&l, &r),
                })
            });
            let e = match op {
                0 => Expr::add(l, r),
                1 => Expr::sub(l, r),
                _ => Expr::mul(l, r),
            };
            (e, v)
        }
        3 => {
            let (x, v) = gen_expr(f, rng, d);
            (Expr::neg(x), v.map(|v| f.neg(&v)))
        }
        4 => {
            let (x, v) = gen_expr(f, rng, d);
            (Expr::inv(x), v.and_then(|v| inv(f, &v)))
        }
        5 => {
            let (a, av) = gen_expr(f, rng, d);
            let (b, bv) = gen_expr(f, rng, d);
            let v = av.and_then(|a| bv.and_then(|b| Ok(f.mul(&inv(f, &b)?, &a))));
            (Expr::Ratio2(Box::new(a), Box::new(b)), v)
        }
        6 => {
            let (xs, vs): (Vec<_>, Vec<_>) = (0..3).map(|_| gen_expr(f, rng, d)).unzip();
            let v = vs.into_iter().collect::<Result<Vec<_>, _>>().and_then(|v| Ok(f.mul(&inv(f, &f.sub(&v[1], &v[2]))?, &f.sub(&v[0], &v[2]))));
            (Expr::Ratio3(Box::new(xs.try_into().unwrap())), v)
        }
        7 => {
            let (xs, vs): (Vec<_>, Vec<_>) = (0..4).map(|_| gen_expr(f, rng, d)).unzip();
            let v = vs.into_iter().collect::<Result<Vec<_>, _>>().and_then(|v| cr_oracle(f, &v[0], &v[1], &v[2], &v[3]));
            (Expr::CrossRatio(Box::new(xs.try_into().unwrap())), v)
        }
        _ => {
            let family = MapFamily::ALL[rng.gen_range(0..4)];
            let (xs, vs): (Vec<_>, Vec<_>) = (0..3).map(|_| gen_expr(f, rng, d / 2)).unzip();
            let (arg, argv) = gen_expr(f, rng, d);
            let v = vs.into_iter().collect::<Result<Vec<_>, _>>().and_then(|p| {
                let valid = p.iter().all(|x| !f.is_zero(x)) && p[0] != p[1] && p[1] != p[2] && p[0] != p[2];
                if !valid {
                    return Err(Failure::Usage);
                }
                let x = argv?;
                match family {
                    MapFamily::A => cr_oracle(f, &x, &p[0], &p[1], &p[2]),
                    MapFamily::B => cr_oracle(f, &p[0], &x, &p[1], &p[2]),
                    MapFamily::C => cr_oracle(f, &p[0], &p[1], &x, &p[2]),
                    MapFamily::D => cr_oracle(f, &p[0], &p[1], &p[2], &x),
                }
            });
            (Expr::Map { family, base: Box::new(xs.try_into().unwrap()), arg: Box::new(arg) }, v)
        }
    }
}
