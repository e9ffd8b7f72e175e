//! Textual grammars shared by every command.
//!
//! Scalar literals:
//!
//! ```text
//! rational    := INT | INT "/" UINT            INT may carry a leading "-"
//! prime       := rational [ "mod" UINT ]       the modulus must match the backend
//! quaternion  := rational                      a real quaternion
//!              | "(" rational "," rational "," rational "," rational ")"
//! point       := "(" scalar "," scalar ")"
//! ```
//!
//! Desargues configuration files hold one `key=value` record per line:
//! `A=(x,y)`, `B=…`, `C=…`, `A'=…`, `B'=…`, `C'=…` and either
//! `variant=parallel` or `variant=concurrent P=(x,y)`. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt;

use num_bigint::BigInt;

use crate::constructions::{DesarguesConfig, DesarguesVariant};
use crate::plane::Point;
use crate::skewfield::{PrimeField, PrimeFieldElement, Quaternions, Rational, RationalQuaternion, Rationals, SkewField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for SyntaxError {}

/// A byte cursor over ASCII-oriented input.
#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    /// Next non-whitespace character, without consuming it.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    /// The character right after the next one, with no whitespace skipping.
    pub fn peek_second(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().nth(1)
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    /// Consumes an identifier-like keyword only if it is not followed by
    /// another identifier character.
    pub fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let boundary = rest[kw.len().min(rest.len())..].chars().next().is_none_or(|c| !c.is_ascii_alphanumeric() && c != '_');
        if rest.starts_with(kw) && boundary {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub fn expect_end(&mut self) -> Result<(), SyntaxError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input".to_string()))
        }
    }

    pub fn error(&mut self, message: String) -> SyntaxError {
        self.skip_ws();
        let found = match self.peek_raw() {
            Some(c) => format!("found `{c}`"),
            None => "found end of input".to_string(),
        };
        SyntaxError { offset: self.pos, message: format!("{message}, {found}") }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        let len = self.rest().bytes().take_while(|b| b.is_ascii_digit()).count();
        self.pos += len;
        (len > 0).then(|| &self.src[start..self.pos])
    }

    /// `INT` or `INT/UINT`.
    pub fn rational(&mut self) -> Result<Rational, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.rest().starts_with('-');
        if negative {
            self.pos += 1;
        }
        let Some(n) = self.digits() else {
            self.pos = start;
            return Err(self.error("expected a number".to_string()));
        };
        let mut numer: BigInt = n.parse().expect("digits");
        if negative {
            numer = -numer;
        }
        let mut denom = BigInt::from(1);
        if self.rest().starts_with('/') {
            self.pos += 1;
            match self.digits() {
                Some(d) => denom = d.parse().expect("digits"),
                None => return Err(self.error("expected a denominator".to_string())),
            }
            if denom == BigInt::from(0) {
                return Err(SyntaxError { offset: start, message: "zero denominator".to_string() });
            }
        }
        Ok(Rational::new(numer, denom))
    }

    pub fn uint(&mut self) -> Result<u64, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        self.digits()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| SyntaxError { offset: start, message: "expected an unsigned integer".to_string() })
    }
}

/// A backend that the command line can read, print and (sometimes) draw.
pub trait CliBackend: SkewField {
    /// A literal that starts with a digit or `-`.
    fn parse_number(&self, cur: &mut Cursor<'_>) -> Result<Self::Elem, SyntaxError>;

    /// A literal that starts with `(`, if the backend has one.
    fn parse_tuple(&self, _cur: &mut Cursor<'_>) -> Option<Result<Self::Elem, SyntaxError>> {
        None
    }

    fn parse_literal(&self, cur: &mut Cursor<'_>) -> Result<Self::Elem, SyntaxError> {
        if cur.peek() == Some('(') {
            if let Some(r) = self.parse_tuple(cur) {
                return r;
            }
        }
        self.parse_number(cur)
    }

    /// Real coordinate for drawing; `None` when the backend cannot be drawn.
    fn to_f64(&self, _e: &Self::Elem) -> Option<f64> {
        None
    }
}

fn reject_modulus(cur: &mut Cursor<'_>, backend: &str) -> Result<(), SyntaxError> {
    let pos = cur.pos();
    if cur.eat_keyword("mod") {
        return Err(SyntaxError { offset: pos, message: format!("literal/backend mismatch: `mod` literal in {backend} backend") });
    }
    Ok(())
}

impl CliBackend for Rationals {
    fn parse_number(&self, cur: &mut Cursor<'_>) -> Result<Rational, SyntaxError> {
        let r = cur.rational()?;
        reject_modulus(cur, "rational")?;
        Ok(r)
    }

    fn to_f64(&self, e: &Rational) -> Option<f64> {
        Some(e.to_f64())
    }
}

impl CliBackend for PrimeField {
    fn parse_number(&self, cur: &mut Cursor<'_>) -> Result<PrimeFieldElement, SyntaxError> {
        let start = cur.pos();
        let r = cur.rational()?;
        let save = cur.pos();
        if cur.eat_keyword("mod") {
            let p = cur.uint()?;
            if p != self.modulus() {
                return Err(SyntaxError {
                    offset: save,
                    message: format!("literal/backend mismatch: mod {p} in {} backend", self.name()),
                });
            }
        }
        let reduce = |n: &BigInt| {
            let p = BigInt::from(self.modulus());
            let m = ((n % &p) + &p) % &p;
            self.element(i64::try_from(m).expect("reduced"))
        };
        let (n, d) = (reduce(r.numer()), reduce(r.denom()));
        self.left_div(&d, &n).map_err(|_| SyntaxError {
            offset: start,
            message: format!("denominator divisible by {}", self.modulus()),
        })
    }
}

impl CliBackend for Quaternions {
    fn parse_number(&self, cur: &mut Cursor<'_>) -> Result<RationalQuaternion, SyntaxError> {
        let r = cur.rational()?;
        reject_modulus(cur, "quaternion")?;
        Ok(RationalQuaternion::real(r))
    }

    fn parse_tuple(&self, cur: &mut Cursor<'_>) -> Option<Result<RationalQuaternion, SyntaxError>> {
        let start = cur.pos();
        let parse = |cur: &mut Cursor<'_>| -> Result<RationalQuaternion, SyntaxError> {
            cur.expect('(')?;
            let w = cur.rational()?;
            cur.expect(',')?;
            let x = cur.rational()?;
            cur.expect(',')?;
            let y = cur.rational()?;
            cur.expect(',')?;
            let z = cur.rational()?;
            cur.expect(')')?;
            Ok(RationalQuaternion::new(w, x, y, z))
        };
        match parse(cur) {
            Ok(q) => Some(Ok(q)),
            Err(_) => {
                cur.reset(start);
                None
            }
        }
    }
}

/// Parses a complete scalar literal.
pub fn parse_scalar<F: CliBackend>(field: &F, text: &str) -> Result<F::Elem, SyntaxError> {
    let mut cur = Cursor::new(text);
    let e = field.parse_literal(&mut cur)?;
    cur.expect_end()?;
    Ok(e)
}

pub fn parse_point_at<F: CliBackend>(field: &F, cur: &mut Cursor<'_>) -> Result<Point<F::Elem>, SyntaxError> {
    cur.expect('(')?;
    let x = field.parse_literal(cur)?;
    cur.expect(',')?;
    let y = field.parse_literal(cur)?;
    cur.expect(')')?;
    Ok(Point::new(x, y))
}

/// Parses a complete `(x, y)` point.
pub fn parse_point<F: CliBackend>(field: &F, text: &str) -> Result<Point<F::Elem>, SyntaxError> {
    let mut cur = Cursor::new(text);
    let p = parse_point_at(field, &mut cur)?;
    cur.expect_end()?;
    Ok(p)
}

/// Parses `p1, p2, p3` (scalars separated by top-level commas).
pub fn parse_scalar_list<F: CliBackend>(field: &F, text: &str) -> Result<Vec<F::Elem>, SyntaxError> {
    let mut cur = Cursor::new(text);
    let mut out = vec![field.parse_literal(&mut cur)?];
    while cur.eat(',') {
        out.push(field.parse_literal(&mut cur)?);
    }
    cur.expect_end()?;
    Ok(out)
}

/// Error in a configuration file, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

const CONFIG_KEYS: [&str; 6] = ["A", "B", "C", "A'", "B'", "C'"];

pub fn parse_desargues_config<F: CliBackend>(field: &F, text: &str) -> Result<DesarguesConfig<F::Elem>, ConfigError> {
    let mut points: [Option<Point<F::Elem>>; 6] = Default::default();
    let mut variant = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| ConfigError { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once('=').ok_or_else(|| err("expected `key=value`".to_string()))?;
        let key = key.trim();
        if key == "variant" {
            let mut cur = Cursor::new(value);
            let v = if cur.eat_keyword("parallel") {
                DesarguesVariant::Parallel
            } else if cur.eat_keyword("concurrent") {
                if !(cur.eat_keyword("P") && cur.eat('=')) {
                    return Err(err("expected `P=(x,y)` after `concurrent`".to_string()));
                }
                DesarguesVariant::Concurrent(parse_point_at(field, &mut cur).map_err(|e| err(e.to_string()))?)
            } else {
                return Err(err("variant must be `parallel` or `concurrent P=(x,y)`".to_string()));
            };
            cur.expect_end().map_err(|e| err(e.to_string()))?;
            if variant.replace(v).is_some() {
                return Err(err("duplicate variant".to_string()));
            }
            continue;
        }
        let slot = CONFIG_KEYS.iter().position(|k| *k == key).ok_or_else(|| err(format!("unknown key `{key}`")))?;
        let p = parse_point(field, value.trim()).map_err(|e| err(e.to_string()))?;
        if points[slot].replace(p).is_some() {
            return Err(err(format!("duplicate point `{key}`")));
        }
    }
    let eof = text.lines().count() + 1;
    let missing: Vec<&str> = CONFIG_KEYS.iter().zip(&points).filter(|(_, p)| p.is_none()).map(|(k, _)| *k).collect();
    if !missing.is_empty() {
        return Err(ConfigError { line: eof, message: format!("missing points: {}", missing.join(", ")) });
    }
    let variant = variant.ok_or(ConfigError { line: eof, message: "missing `variant`".to_string() })?;
    let [a, b, c, a2, b2, c2] = points.map(|p| p.expect("checked"));
    Ok(DesarguesConfig { a, b, c, a2, b2, c2, variant })
}

/// Renders a configuration in the file format read by
/// [`parse_desargues_config`].
pub fn format_desargues_config<E: fmt::Display>(cfg: &DesarguesConfig<E>) -> String {
    let pt = |p: &Point<E>| format!("({},{})", p.x, p.y);
    let mut out = String::new();
    for (k, p) in CONFIG_KEYS.iter().zip([&cfg.a, &cfg.b, &cfg.c, &cfg.a2, &cfg.b2, &cfg.c2]) {
        out.push_str(&format!("{k}={}\n", pt(p)));
    }
    match &cfg.variant {
        DesarguesVariant::Parallel => out.push_str("variant=parallel\n"),
        DesarguesVariant::Concurrent(p) => out.push_str(&format!("variant=concurrent P={}\n", pt(p))),
    }
    out
}
