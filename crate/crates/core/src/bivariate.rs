//! Sparse polynomials in `x, y` over the rationals, ordered lexicographically
//! (`x` before `y`), with single-divisor division and the evaluation map
//! `x -> t^a, y -> t^b`.
//!
//! For distinct coprime `a, b` the kernel of that map is the principal ideal
//! `(x^b - y^a)`. [`in_kernel`] decides membership either by evaluating or
//! by dividing by `x^b - y^a`; the two answers always agree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `x^x * y^y`. The derived ordering compares the `x` exponent first, which is
/// exactly lex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial2 {
    pub x: u32,
    pub y: u32,
}

impl Monomial2 {
    pub const ONE: Monomial2 = Monomial2 { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial2 { x, y }
    }

    pub fn divides(&self, other: &Monomial2) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial2) -> Option<Monomial2> {
        Some(Monomial2 { x: other.x.checked_sub(self.x)?, y: other.y.checked_sub(self.y)? })
    }

    /// `a * i + b * j`.
    pub fn weight(&self, a: u64, b: u64) -> u64 {
        a * self.x as u64 + b * self.y as u64
    }
}

impl Mul for Monomial2 {
    type Output = Monomial2;
    fn mul(self, rhs: Monomial2) -> Monomial2 {
        Monomial2 { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Polynomial in `x, y` with nonzero rational coefficients keyed by monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Monomial2, BigRational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial2::ONE)
    }

    pub fn term(c: BigRational, m: Monomial2) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c * x^i * y^j` with an integer coefficient.
    pub fn int_term(c: i64, i: u32, j: u32) -> Self {
        Self::term(BigRational::from_integer(c.into()), Monomial2::new(i, j))
    }

    /// `x^b - y^a`.
    pub fn binomial(a: u32, b: u32) -> Self {
        &Self::int_term(1, b, 0) - &Self::int_term(1, 0, a)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial2, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial2, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial2) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial2, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial2, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<Monomial2> {
        self.leading_term().map(|(m, _)| *m)
    }

    /// `c * m * self`.
    pub fn scale_shift(&self, c: &BigRational, m: Monomial2) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial { terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, if negate { -c } else { c.clone() });
        }
        out
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

fn write_rational_magnitude(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    let c = c.abs();
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Terms in descending lex order, `c*x^i*y^j` joined by ` + ` / ` - `.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial2::ONE {
                write_rational_magnitude(f, c)?;
            } else {
                if !c.abs().is_one() {
                    write_rational_magnitude(f, c)?;
                    f.write_str("*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// Error from the polynomial text parser. `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> std::result::Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn number(&mut self) -> std::result::Result<BigRational, ParseError> {
        let start = self.pos;
        let numer: BigInt = self.digits()?.parse().expect("digits parse");
        if self.eat(b'/') {
            let denom: BigInt = self.digits()?.parse().expect("digits parse");
            if denom.is_zero() {
                self.pos = start;
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(numer, denom));
        }
        Ok(BigRational::from_integer(numer))
    }

    fn exponent(&mut self) -> std::result::Result<u32, ParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let start = self.pos;
        let text = self.digits()?;
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("exponent too large")
        })
    }

    // factor := number | x[^n] | y[^n]
    fn factor(
        &mut self,
        coeff: &mut BigRational,
        m: &mut Monomial2,
    ) -> std::result::Result<(), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => *coeff *= self.number()?,
            Some(b'x') => {
                self.pos += 1;
                m.x = m
                    .x
                    .checked_add(self.exponent()?)
                    .ok_or(ParseError { column: self.pos, message: "exponent too large".into() })?;
            }
            Some(b'y') => {
                self.pos += 1;
                m.y = m
                    .y
                    .checked_add(self.exponent()?)
                    .ok_or(ParseError { column: self.pos, message: "exponent too large".into() })?;
            }
            Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }

    fn polynomial(&mut self) -> std::result::Result<BivariatePolynomial, ParseError> {
        let mut out = BivariatePolynomial::zero();
        let mut sign = if self.eat(b'-') {
            -BigRational::one()
        } else {
            self.eat(b'+');
            BigRational::one()
        };
        loop {
            let mut coeff = sign.clone();
            let mut m = Monomial2::ONE;
            self.factor(&mut coeff, &mut m)?;
            while self.eat(b'*') {
                self.factor(&mut coeff, &mut m)?;
            }
            out.add_term(m, coeff);
            sign = match self.peek() {
                None => return Ok(out),
                Some(b'+') => BigRational::one(),
                Some(b'-') => -BigRational::one(),
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            };
            self.pos += 1;
        }
    }
}

/// Accepts terms `c*x^i*y^j` in any order joined by `+` / `-`. Coefficients
/// may be integers or fractions `p/q`; factors may appear in any order.
impl FromStr for BivariatePolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        Parser { src: s.as_bytes(), pos: 0 }.polynomial()
    }
}

pub fn leading_monomial(f: &BivariatePolynomial) -> Result<Monomial2> {
    f.leading_monomial().ok_or(Error::ZeroPolynomial("leading monomial"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: BivariatePolynomial,
    pub remainder: BivariatePolynomial,
}

/// Divides `g` by `f`: returns `q, r` with `g = q f + r` and no monomial of
/// `r` divisible by the leading monomial of `f`.
///
/// Each step removes the leading term of the working polynomial, either
/// cancelling it against a multiple of `f` or moving it to the remainder, so
/// the leading monomial strictly decreases and the loop ends.
pub fn divide(g: &BivariatePolynomial, f: &BivariatePolynomial) -> Result<DivisionResult> {
    let (&lead, lead_coeff) = f.leading_term().ok_or(Error::ZeroPolynomial("division"))?;
    let mut work = g.clone();
    let mut quotient = BivariatePolynomial::zero();
    let mut remainder = BivariatePolynomial::zero();

    while let Some((m, c)) = work.terms.pop_last() {
        match lead.quotient_of(&m) {
            Some(shift) => {
                let factor = &c / lead_coeff;
                quotient.add_term(shift, factor.clone());
                // The leading term cancels by construction; subtract the rest.
                for (fm, fc) in f.terms.iter().rev().skip(1) {
                    work.add_term(*fm * shift, -(fc * &factor));
                }
            }
            None => remainder.add_term(m, c),
        }
    }
    Ok(DivisionResult { quotient, remainder })
}

/// Univariate polynomial in `t` with rational coefficients, keyed by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    terms: BTreeMap<u64, BigRational>,
}

impl RationalPolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, n: u64) -> BigRational {
        self.terms.get(&n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, n: u64, c: BigRational) {
        let slot = self.terms.entry(n).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (n, c) in &rhs.terms {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = RationalPolynomial::default();
        for (n, c) in &self.terms {
            for (m, d) in &rhs.terms {
                out.add_term(n + m, c * d);
            }
        }
        out
    }
}

/// Ascending terms in `t`, `0` for the zero polynomial.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (n, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *n == 0 || !c.abs().is_one() {
                write_rational_magnitude(f, c)?;
                if *n != 0 {
                    f.write_str("*")?;
                }
            }
            match n {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{n}")?,
            }
        }
        Ok(())
    }
}

/// `g(t^a, t^b)`.
pub fn phi_evaluate(g: &BivariatePolynomial, a: u64, b: u64) -> RationalPolynomial {
    let mut out = RationalPolynomial::default();
    for (m, c) in g.terms() {
        out.add_term(m.weight(a, b), c.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelMethod {
    /// `g(t^a, t^b) = 0`.
    Evaluate,
    /// Remainder of `g` modulo `x^b - y^a` is zero.
    Divide,
}

fn require_coprime_distinct(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidPair { a, b, reason: "generators must be positive" });
    }
    if a == b {
        return Err(Error::InvalidPair { a, b, reason: "generators must be distinct" });
    }
    match a.gcd(&b) {
        1 => Ok(()),
        g => Err(Error::NotNumericalSemigroup(g)),
    }
}

fn exponent(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Overflow("monomial exponent"))
}

pub fn in_kernel(g: &BivariatePolynomial, a: u64, b: u64, method: KernelMethod) -> Result<bool> {
    require_coprime_distinct(a, b)?;
    match method {
        KernelMethod::Evaluate => Ok(phi_evaluate(g, a, b).is_zero()),
        KernelMethod::Divide => {
            let f = BivariatePolynomial::binomial(exponent(a)?, exponent(b)?);
            Ok(divide(g, &f)?.remainder.is_zero())
        }
    }
}

/// Exhaustively checks that `(i, j) -> a i + b j` is injective on
/// `{0..b-1} x {0..=J}`. With `max_j = None`, `J` is the largest `j` keeping
/// `b j <= 3ab`, so every weight up to `3ab` is covered.
pub fn distinct_exponent_check(a: u64, b: u64, max_j: Option<u64>) -> Result<bool> {
    require_coprime_distinct(a, b)?;
    let max_j = max_j.unwrap_or(3 * a);
    let mut seen = HashSet::new();
    for i in 0..b {
        for j in 0..=max_j {
            let w = a
                .checked_mul(i)
                .and_then(|ai| b.checked_mul(j).and_then(|bj| ai.checked_add(bj)))
                .ok_or(Error::Overflow("exponent weight"))?;
            if !seen.insert(w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl PartialOrd for BivariatePolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares terms from the top down; only used to give polynomials a
/// deterministic sort order.
impl Ord for BivariatePolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().rev().cmp(other.terms.iter().rev())
    }
}
