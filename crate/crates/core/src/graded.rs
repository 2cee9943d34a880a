//! The Frobenius grading of `E[x, y]` (`x^i y^j` has weight `ai + bj`) and the
//! Hilbert series of the rings it induces.
//!
//! Under this grading `dim E_n = p_{a,b}(n)`, the number of ways to write `n`
//! as `ai + bj`. The map `x -> t^a, y -> t^b` is surjective on each graded
//! piece, onto `R_n` (one-dimensional exactly when `n` is in `S(a, b)`), with
//! kernel `K_n = E_{n-ab} (x^b - y^a)`. Rank-nullity then reads
//! `p_{a,b}(n) = [n in S] + p_{a,b}(n - ab)`, and summing over `n`:
//!
//! ```text
//! 1/((1-q^a)(1-q^b)) = 1/(1-q) - f_A(q) + q^{ab}/((1-q^a)(1-q^b))
//! ```

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bivariate::Monomial2;
use crate::error::{Error, Result};
use crate::gap_poly::{verify_functional_equation, IntPolynomial};
use crate::semigroup::{build_table, GeneratorSet};

/// Power series `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})` with exact
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coeffs }
    }

    /// Truncates (or zero-pads) a polynomial to the given order.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in p.terms().take_while(|(n, _)| *n <= order) {
            s.coeffs[n] = c.clone();
        }
        s
    }

    /// `1/(1-q)`.
    pub fn geometric(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::one(); order + 1] }
    }

    /// The `N` in `O(q^{N+1})`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `1/(1 - q^m)` in place: `c_n += c_{n-m}`, ascending.
    pub fn divide_by_one_minus_power(&mut self, m: usize) {
        assert!(m > 0, "1 - q^0 is not invertible");
        for n in m..self.coeffs.len() {
            let (head, tail) = self.coeffs.split_at_mut(n);
            tail[0] += &head[n - m];
        }
    }

    /// Multiplies by `(1 - q^m)` in place, the inverse of
    /// [`TruncatedSeries::divide_by_one_minus_power`].
    pub fn multiply_by_one_minus_power(&mut self, m: usize) {
        for n in (m..self.coeffs.len()).rev() {
            let (head, tail) = self.coeffs.split_at_mut(n);
            tail[0] -= &head[n - m];
        }
    }

    /// `q^k * self`, keeping the order.
    pub fn shifted(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in k..s.coeffs.len() {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| op(x, y)).collect(),
        }
    }
}

/// Binary operations truncate to the smaller of the two orders.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs[..len].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, d) in rhs.coeffs[..len - i].iter().enumerate() {
                coeffs[i + j] += c * d;
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// `c0 + c1*q + c2*q^2 + ... + cN*q^N + O(q^{N+1})`, zeros included.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n == 0 {
                write!(f, "{c}")?;
            } else {
                let sign = if c.is_negative() { " - " } else { " + " };
                match n {
                    1 => write!(f, "{sign}{}*q", c.abs())?,
                    _ => write!(f, "{sign}{}*q^{n}", c.abs())?,
                }
            }
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}

/// The five Hilbert series this module knows how to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `E[x, y]` graded by total degree: `1/(1-q)^2`.
    FullRingDegree,
    /// `E[x, y]` under the Frobenius grading: `1/((1-q^a)(1-q^b))`.
    FullRingFrobenius,
    /// `E[t^a, t^b]`: `1/(1-q) - f_A(q)`.
    SemigroupRing,
    /// The kernel `(x^b - y^a)`: `q^{ab}/((1-q^a)(1-q^b))`.
    Kernel,
    /// `E[t]`: `1/(1-q)`.
    Univariate,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 5] = [
        SeriesKind::FullRingDegree,
        SeriesKind::FullRingFrobenius,
        SeriesKind::SemigroupRing,
        SeriesKind::Kernel,
        SeriesKind::Univariate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::FullRingDegree => "full_ring_degree",
            SeriesKind::FullRingFrobenius => "full_ring_frobenius",
            SeriesKind::SemigroupRing => "semigroup_ring",
            SeriesKind::Kernel => "kernel",
            SeriesKind::Univariate => "univariate",
        }
    }

    /// Whether the series depends on the pair `(a, b)`.
    pub fn uses_pair(self) -> bool {
        !matches!(self, SeriesKind::FullRingDegree | SeriesKind::Univariate)
    }

    /// The rational function being expanded, for display.
    pub fn closed_form(self, a: u64, b: u64) -> String {
        match self {
            SeriesKind::FullRingDegree => "1/(1-q)^2".to_string(),
            SeriesKind::FullRingFrobenius => format!("1/((1-q^{a})(1-q^{b}))"),
            SeriesKind::SemigroupRing => "1/(1-q) - f_A(q)".to_string(),
            SeriesKind::Kernel => format!("q^{}/((1-q^{a})(1-q^{b}))", a * b),
            SeriesKind::Univariate => "1/(1-q)".to_string(),
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown series '{s}'"))
    }
}

/// `p_{a,b}(n) = #{(i, j) : ai + bj = n}`. Needs `a, b >= 1` but not coprimality.
pub fn partition_count(a: u64, b: u64, n: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    (0..=n / a).filter(|i| (n - a * i).is_multiple_of(b)).count() as u64
}

/// The monomials `x^i y^j` with `ai + bj = n`, sorted by `i`.
pub fn enumerate_basis(a: u64, b: u64, n: u64) -> Vec<Monomial2> {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    (0..=n / a)
        .filter(|i| (n - a * i).is_multiple_of(b))
        .map(|i| Monomial2::new(i as u32, ((n - a * i) / b) as u32))
        .collect()
}

/// `1/((1-q^a)(1-q^b))` to order `N`. Needs `a, b >= 1` only.
pub fn euler_product_series(a: u64, b: u64, order: usize) -> TruncatedSeries {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    let mut s = TruncatedSeries::one(order);
    s.divide_by_one_minus_power(a as usize);
    s.divide_by_one_minus_power(b as usize);
    s
}

/// Dimensions of `E_n`, `R_n` and `K_n` for `n` in `0..=nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub a: u64,
    pub b: u64,
    dim_e: Vec<u64>,
    dim_r: Vec<u64>,
    dim_k: Vec<u64>,
}

impl GradedDims {
    pub fn nmax(&self) -> u64 {
        self.dim_e.len() as u64 - 1
    }

    pub fn dim_e(&self, n: u64) -> u64 {
        self.dim_e[n as usize]
    }

    pub fn dim_r(&self, n: u64) -> u64 {
        self.dim_r[n as usize]
    }

    pub fn dim_k(&self, n: u64) -> u64 {
        self.dim_k[n as usize]
    }

    /// `(n, dim E_n, dim R_n, dim K_n)` rows.
    pub fn rows(&self) -> impl Iterator<Item = (u64, u64, u64, u64)> + '_ {
        (0..self.dim_e.len()).map(|n| (n as u64, self.dim_e[n], self.dim_r[n], self.dim_k[n]))
    }
}

pub fn graded_dims(a: u64, b: u64, nmax: u64) -> Result<GradedDims> {
    let table = build_table(&GeneratorSet::pair(a, b)?)?;
    let ab = a * b;
    let mut dims = GradedDims { a, b, dim_e: Vec::new(), dim_r: Vec::new(), dim_k: Vec::new() };
    for n in 0..=nmax {
        dims.dim_e.push(partition_count(a, b, n));
        dims.dim_r.push(table.contains(n) as u64);
        dims.dim_k.push(if n < ab { 0 } else { partition_count(a, b, n - ab) });
    }
    Ok(dims)
}

/// `dim E_n = dim R_n + dim K_n` for every `n <= nmax`.
pub fn rank_nullity_check(a: u64, b: u64, nmax: u64) -> Result<bool> {
    Ok(graded_dims(a, b, nmax)?.rows().all(|(_, e, r, k)| e == r + k))
}

/// A monomial `x^i y^j` of weight `n`, showing `E_n -> R_n` is onto.
pub fn surjectivity_witness(a: u64, b: u64, n: u64) -> Result<Monomial2> {
    let generators = GeneratorSet::pair(a, b)?;
    let table = build_table(&generators)?;
    let r = table.represent(n).ok_or(Error::NotInSemigroup { n, a, b })?;
    // Coefficients follow the sorted generators; put them back in (a, b) order.
    let (i, j) = if a < b {
        (r.coefficients[0], r.coefficients[1])
    } else {
        (r.coefficients[1], r.coefficients[0])
    };
    let exp = |v: u64| u32::try_from(v).map_err(|_| Error::Overflow("monomial exponent"));
    Ok(Monomial2::new(exp(i)?, exp(j)?))
}

/// Expands the chosen Hilbert series to order `N`. The pair is ignored for
/// [`SeriesKind::Univariate`] and [`SeriesKind::FullRingDegree`].
pub fn hilbert_series(kind: SeriesKind, a: u64, b: u64, order: usize) -> Result<TruncatedSeries> {
    if !kind.uses_pair() {
        let mut s = TruncatedSeries::geometric(order);
        if kind == SeriesKind::FullRingDegree {
            s.divide_by_one_minus_power(1);
        }
        return Ok(s);
    }
    let generators = GeneratorSet::pair(a, b)?;
    Ok(match kind {
        SeriesKind::FullRingFrobenius => euler_product_series(a, b, order),
        SeriesKind::Kernel => euler_product_series(a, b, order).shifted((a * b) as usize),
        SeriesKind::SemigroupRing => {
            let table = build_table(&generators)?;
            let gaps = IntPolynomial::indicator(table.gaps().iter().copied());
            &TruncatedSeries::geometric(order) - &TruncatedSeries::from_polynomial(&gaps, order)
        }
        SeriesKind::FullRingDegree | SeriesKind::Univariate => unreachable!(),
    })
}

/// Checks `H_{E[x,y]} = H_{E[t^a,t^b]} + H_K` coefficient-wise to order `N`
/// (`N >= ab + 1`), then the cleared-denominator polynomial identity.
pub fn series_identity_check(a: u64, b: u64, order: usize) -> Result<bool> {
    GeneratorSet::pair(a, b)?;
    let required = (a * b + 1) as usize;
    if order < required {
        return Err(Error::OrderTooSmall { order, required });
    }
    let full = hilbert_series(SeriesKind::FullRingFrobenius, a, b, order)?;
    let ring = hilbert_series(SeriesKind::SemigroupRing, a, b, order)?;
    let kernel = hilbert_series(SeriesKind::Kernel, a, b, order)?;
    Ok(full == &ring + &kernel && verify_functional_equation(a, b)?)
}
