//! Exact scalars: rationals, Gaussian rationals and elements of a real
//! quadratic field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

pub type Rational = BigRational;

/// `n/d` as a rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
    /// Complex conjugation for ℚ(i); identity elsewhere.
    fn conj(&self) -> Self;
    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(qi(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// serde helpers for `Rational` fields, written as "p/q" strings.
pub mod rational_str {
    use super::{fmt_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn option<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&fmt_rational(r)),
            None => s.serialize_none(),
        }
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }
    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Zero::zero() }
    }
    pub fn i() -> Self {
        GaussianRational { re: Zero::zero(), im: One::one() }
    }
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational { re: qi(re), im: qi(im) }
    }
    /// |z|² as a rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
    pub fn parse(s: &str) -> Result<Self> {
        ExprParser::new(s).parse_all()
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re0 = Zero::is_zero(&self.re);
        let im0 = Zero::is_zero(&self.im);
        if im0 {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_abs = fmt_rational(&self.im.abs());
        if re0 {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}*i", sign, im_abs);
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}*i", fmt_rational(&self.re), sign, im_abs)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GaussianRational::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational { re: self.re + o.re, im: self.im + o.im }
    }
}
impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational { re: self.re - o.re, im: self.im - o.im }
    }
}
impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}
impl Div for GaussianRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}
impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: Zero::zero(), im: Zero::zero() }
    }
    fn one() -> Self {
        GaussianRational { re: One::one(), im: Zero::zero() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!Zero::is_zero(&n), "inverse of zero");
        GaussianRational { re: &self.re / &n, im: -(&self.im / &n) }
    }
    fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }
    fn from_rational(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

/// Shorthand for a Gaussian rational with small integer parts over a common
/// denominator.
pub fn cq(re_n: i64, im_n: i64, d: i64) -> GaussianRational {
    GaussianRational::new(q(re_n, d), q(im_n, d))
}

// ---------------------------------------------------------------------------

/// `a + b·√d`. `d == 0` marks an element with `b == 0` that has not been tied
/// to a radicand yet; it adopts the radicand of whatever it meets.
#[derive(Clone, Eq, Hash)]
pub struct QuadraticScalar {
    pub d: u64,
    pub a: Rational,
    pub b: Rational,
}

impl QuadraticScalar {
    pub fn new(d: u64, a: Rational, b: Rational) -> Result<Self> {
        let r = d.sqrt();
        if r * r == d {
            return Err(Error::OutOfRange(format!("radicand {} is a perfect square", d)));
        }
        Ok(Self::canon(d, a, b))
    }
    fn canon(d: u64, a: Rational, b: Rational) -> Self {
        let d = if Zero::is_zero(&b) { 0 } else { d };
        QuadraticScalar { d, a, b }
    }
    pub fn rational(a: Rational) -> Self {
        QuadraticScalar { d: 0, a, b: Zero::zero() }
    }
    /// Galois conjugate a − b√d.
    pub fn galois(&self) -> Self {
        QuadraticScalar { d: self.d, a: self.a.clone(), b: -self.b.clone() }
    }
    /// a² − d·b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - qi(self.d as i64) * &self.b * &self.b
    }
    fn radicand(&self, o: &Self) -> u64 {
        match (self.d, o.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing radicands {} and {}", x, y),
        }
    }
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(k) = t.find("*sqrt(") {
            let head = &t[..k];
            let tail = &t[k + 6..];
            let close = tail.find(')').ok_or(Error::Parse { pos: k, msg: "missing ')'".into() })?;
            let d: u64 = tail[..close].parse().map_err(|_| Error::Parse { pos: k + 6, msg: "bad radicand".into() })?;
            // head is "a+b" or "a-b" or "b"
            let split = head.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
            let (a, b) = match split {
                Some(i) => (parse_rational(&head[..i])?, parse_rational(&head[i..])?),
                None => (Zero::zero(), parse_rational(head)?),
            };
            QuadraticScalar::new(d, a, b)
        } else {
            Ok(QuadraticScalar::rational(parse_rational(&t)?))
        }
    }
}

impl PartialEq for QuadraticScalar {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (Zero::is_zero(&self.b) || self.d == o.d)
    }
}

impl fmt::Debug for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let babs = fmt_rational(&self.b.abs());
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if Zero::is_zero(&self.a) {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{}{}*sqrt({})", sign, babs, self.d);
        }
        write!(f, "{}{}{}*sqrt({})", fmt_rational(&self.a), sign, babs, self.d)
    }
}

impl Serialize for QuadraticScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for QuadraticScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.radicand(&o);
        Self::canon(d, self.a + o.a, self.b + o.b)
    }
}
impl Sub for QuadraticScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = self.radicand(&o);
        Self::canon(d, self.a - o.a, self.b - o.b)
    }
}
impl Mul for QuadraticScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.radicand(&o);
        let dd = qi(d as i64);
        let a = &self.a * &o.a + dd * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::canon(d, a, b)
    }
}
impl Div for QuadraticScalar {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}
impl Neg for QuadraticScalar {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticScalar { d: self.d, a: -self.a, b: -self.b }
    }
}

impl Field for QuadraticScalar {
    fn zero() -> Self {
        QuadraticScalar::rational(Zero::zero())
    }
    fn one() -> Self {
        QuadraticScalar::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!Zero::is_zero(&n), "inverse of zero");
        Self::canon(self.d, &self.a / &n, -(&self.b / &n))
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(r: Rational) -> Self {
        QuadraticScalar::rational(r)
    }
}

// ---------------------------------------------------------------------------

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{}'", n) })?;
    let d: BigInt = d.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{}'", d) })?;
    if Zero::is_zero(&d) {
        return parse_err(0, "zero denominator");
    }
    Ok(Rational::new(n, d))
}

/// Arithmetic expressions over ℚ(i): `p/q+r/s*i`, `i/2`, `2i/3`, `(1+i)/4`.
struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn new(s: &'a str) -> Self {
        ExprParser { s: s.as_bytes(), pos: 0 }
    }
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }
    fn parse_all(mut self) -> Result<GaussianRational> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return parse_err(self.pos, "trailing input");
        }
        Ok(v)
    }
    fn expr(&mut self) -> Result<GaussianRational> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
    fn term(&mut self) -> Result<GaussianRational> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return parse_err(at, "division by zero");
                    }
                    acc = acc / d;
                }
                // implicit product such as `2i` or `3(1+i)`
                Some(b'i') | Some(b'(') => acc = acc * self.atom()?,
                _ => break,
            }
        }
        Ok(acc)
    }
    fn unary(&mut self) -> Result<GaussianRational> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }
    fn atom(&mut self) -> Result<GaussianRational> {
        match self.peek() {
            Some(b'i') => {
                self.pos += 1;
                Ok(GaussianRational::i())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return parse_err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let n: BigInt = txt.parse().unwrap();
                Ok(GaussianRational::real(Rational::from_integer(n)))
            }
            Some(_) => parse_err(self.pos, "unexpected character"),
            None => parse_err(self.pos, "unexpected end of input"),
        }
    }
}
