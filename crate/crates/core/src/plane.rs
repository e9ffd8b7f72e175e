//! The coordinate affine plane over a skew field.
//!
//! Points are pairs `(x, y)` of field elements. A line is the set
//! `base + t·direction` where the parameter `t` multiplies the direction
//! from the LEFT. Directions are normalized (leading nonzero coordinate is
//! one) and bases are canonical (on the y-axis, or on the x-axis for
//! vertical lines), so two [`Line`] values describe the same point set
//! exactly when they are structurally equal.

use std::fmt;

use crate::skewfield::SkewField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlaneError {
    #[error("CoincidentPoints: a line needs two distinct points, got {0} twice")]
    CoincidentPoints(String),
    #[error("ParallelLines: {0} and {1} do not meet")]
    ParallelLines(String, String),
    #[error("IdenticalLines: {0} meets itself everywhere")]
    IdenticalLines(String),
    #[error("ZeroDirection: a direction vector must be nonzero")]
    ZeroDirection,
    #[error("NoSolution: the linear system is inconsistent")]
    NoSolution,
    #[error("Underdetermined: the linear system has rank below two")]
    Underdetermined,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point<E> {
    pub x: E,
    pub y: E,
}

impl<E> Point<E> {
    pub fn new(x: E, y: E) -> Self {
        Point { x, y }
    }
}

impl<E: fmt::Display> fmt::Display for Point<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A line `{ base + t·dir }`, normalized as described in the module docs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Line<E> {
    base: Point<E>,
    dir: (E, E),
}

impl<E> Line<E> {
    pub fn base(&self) -> &Point<E> {
        &self.base
    }

    pub fn direction(&self) -> (&E, &E) {
        (&self.dir.0, &self.dir.1)
    }
}

impl<E: fmt::Display> fmt::Display for Line<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{base={}, dir=({}, {})}}", self.base, self.dir.0, self.dir.1)
    }
}

/// `t·d − s·e = r`, read componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear2System<E> {
    pub d: (E, E),
    pub e: (E, E),
    pub r: (E, E),
}

/// The affine plane over `F`.
#[derive(Clone, Debug)]
pub struct Plane<F: SkewField> {
    field: F,
}

type P<F> = Point<<F as SkewField>::Elem>;
type L<F> = Line<<F as SkewField>::Elem>;

impl<F: SkewField> Plane<F> {
    pub fn new(field: F) -> Self {
        Plane { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn point(&self, x: i64, y: i64) -> P<F> {
        Point::new(self.field.from_i64(x), self.field.from_i64(y))
    }

    pub fn origin(&self) -> P<F> {
        self.point(0, 0)
    }

    pub fn add_points(&self, p: &P<F>, q: &P<F>) -> P<F> {
        Point::new(self.field.add(&p.x, &q.x), self.field.add(&p.y, &q.y))
    }

    pub fn sub_points(&self, p: &P<F>, q: &P<F>) -> P<F> {
        Point::new(self.field.sub(&p.x, &q.x), self.field.sub(&p.y, &q.y))
    }

    /// `t·v`, the scalar acting on the left.
    pub fn scale(&self, t: &F::Elem, v: &P<F>) -> P<F> {
        Point::new(self.field.mul(t, &v.x), self.field.mul(t, &v.y))
    }

    /// The line through `base` with the given (not necessarily normalized)
    /// direction.
    pub fn line(&self, base: &P<F>, dx: &F::Elem, dy: &F::Elem) -> Result<L<F>, PlaneError> {
        let f = &self.field;
        let dir = if !f.is_zero(dx) {
            let s = f.inv(dx).expect("nonzero");
            (f.one(), f.mul(&s, dy))
        } else if !f.is_zero(dy) {
            (f.zero(), f.one())
        } else {
            return Err(PlaneError::ZeroDirection);
        };
        let base = if f.is_zero(&dir.0) {
            Point::new(base.x.clone(), f.zero())
        } else {
            // base − x·(1, m) lies on the y-axis
            Point::new(f.zero(), f.sub(&base.y, &f.mul(&base.x, &dir.1)))
        };
        Ok(Line { base, dir })
    }

    pub fn line_through(&self, p: &P<F>, q: &P<F>) -> Result<L<F>, PlaneError> {
        if p == q {
            return Err(PlaneError::CoincidentPoints(p.to_string()));
        }
        let d = self.sub_points(q, p);
        self.line(p, &d.x, &d.y)
    }

    pub fn parallel_through(&self, p: &P<F>, l: &L<F>) -> L<F> {
        self.line(p, &l.dir.0, &l.dir.1).expect("normalized direction is nonzero")
    }

    pub fn is_parallel(&self, l1: &L<F>, l2: &L<F>) -> bool {
        l1.dir == l2.dir
    }

    /// The parameter `t` with `base + t·dir = p`, if `p` is on the line.
    pub fn parameter_of(&self, p: &P<F>, l: &L<F>) -> Option<F::Elem> {
        let f = &self.field;
        let off = self.sub_points(p, &l.base);
        // Normalized: either dir = (1, m) or dir = (0, 1).
        if f.is_one(&l.dir.0) {
            let t = off.x;
            (f.mul(&t, &l.dir.1) == off.y).then_some(t)
        } else {
            f.is_zero(&off.x).then_some(off.y)
        }
    }

    pub fn on_line(&self, p: &P<F>, l: &L<F>) -> bool {
        self.parameter_of(p, l).is_some()
    }

    pub fn point_at(&self, l: &L<F>, t: &F::Elem) -> P<F> {
        self.add_points(&l.base, &Point::new(self.field.mul(t, &l.dir.0), self.field.mul(t, &l.dir.1)))
    }

    pub fn collinear(&self, p: &P<F>, q: &P<F>, r: &P<F>) -> bool {
        match self.line_through(p, q) {
            Ok(l) => self.on_line(r, &l),
            Err(_) => true,
        }
    }

    /// Solves `t·d − s·e = r` exactly.
    ///
    /// The unknowns multiply the coefficients from the left, so elimination
    /// divides on the right.
    pub fn solve2(&self, sys: &Linear2System<F::Elem>) -> Result<(F::Elem, F::Elem), PlaneError> {
        let f = &self.field;
        // Pick the component in which d is nonzero as the pivot row.
        let swapped = f.is_zero(&sys.d.0);
        let (d0, d1, e0, e1, r0, r1) = if swapped {
            (&sys.d.1, &sys.d.0, &sys.e.1, &sys.e.0, &sys.r.1, &sys.r.0)
        } else {
            (&sys.d.0, &sys.d.1, &sys.e.0, &sys.e.1, &sys.r.0, &sys.r.1)
        };
        if f.is_zero(d0) {
            // d = 0: only −s·e = r remains, t is free.
            return self.solve_degenerate(&sys.e, &sys.r);
        }
        let d0_inv = f.inv(d0).expect("nonzero pivot");
        // t = (r0 + s·e0)·d0⁻¹; substituting into row 1:
        // s·(e0·d0⁻¹·d1 − e1) = r1 − r0·d0⁻¹·d1
        let q = f.mul(&d0_inv, d1);
        let k = f.sub(&f.mul(e0, &q), e1);
        let rhs = f.sub(r1, &f.mul(r0, &q));
        if f.is_zero(&k) {
            return Err(if f.is_zero(&rhs) { PlaneError::Underdetermined } else { PlaneError::NoSolution });
        }
        let s = f.right_div(&rhs, &k).expect("nonzero");
        let t = f.mul(&f.add(r0, &f.mul(&s, e0)), &d0_inv);
        debug_assert!(self.satisfies(sys, &t, &s));
        Ok((t, s))
    }

    fn solve_degenerate(&self, e: &(F::Elem, F::Elem), r: &(F::Elem, F::Elem)) -> Result<(F::Elem, F::Elem), PlaneError> {
        let f = &self.field;
        let consistent = if f.is_zero(&e.0) && f.is_zero(&e.1) {
            f.is_zero(&r.0) && f.is_zero(&r.1)
        } else {
            let (lead, other, r_lead, r_other) =
                if f.is_zero(&e.0) { (&e.1, &e.0, &r.1, &r.0) } else { (&e.0, &e.1, &r.0, &r.1) };
            let s = f.neg(&f.right_div(r_lead, lead).expect("nonzero"));
            f.neg(&f.mul(&s, other)) == *r_other
        };
        Err(if consistent { PlaneError::Underdetermined } else { PlaneError::NoSolution })
    }

    /// Back-substitution check for a candidate solution.
    pub fn satisfies(&self, sys: &Linear2System<F::Elem>, t: &F::Elem, s: &F::Elem) -> bool {
        let f = &self.field;
        let row = |d: &F::Elem, e: &F::Elem| f.sub(&f.mul(t, d), &f.mul(s, e));
        row(&sys.d.0, &sys.e.0) == sys.r.0 && row(&sys.d.1, &sys.e.1) == sys.r.1
    }

    pub fn intersect(&self, l1: &L<F>, l2: &L<F>) -> Result<P<F>, PlaneError> {
        if l1 == l2 {
            return Err(PlaneError::IdenticalLines(l1.to_string()));
        }
        if self.is_parallel(l1, l2) {
            return Err(PlaneError::ParallelLines(l1.to_string(), l2.to_string()));
        }
        let r = self.sub_points(&l2.base, &l1.base);
        let sys = Linear2System { d: l1.dir.clone(), e: l2.dir.clone(), r: (r.x, r.y) };
        let (t, _) = self.solve2(&sys)?;
        let p = self.point_at(l1, &t);
        assert!(self.on_line(&p, l1) && self.on_line(&p, l2), "intersection not on both lines");
        Ok(p)
    }
}
