//! Dense integer polynomials in `q` and the gap generating polynomial.
//!
//! For `A = {a, b}` the gap polynomial satisfies
//!
//! ```text
//! (q^a - 1)(q^b - 1)((q - 1) f_A(q) + 1) = (q - 1)(q^{ab} - 1)
//! ```
//!
//! and comparing degrees gives `F(A) = ab - a - b`. Reversing the identity
//! shows the reciprocal of `f_A` is `g_A`, the indicator polynomial of the
//! members below `F(A)`, which is the same as `S(A)` being symmetric.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::semigroup::{build_table, GeneratorSet, SemigroupTable};

/// Polynomial with exact integer coefficients, `coeffs[n]` being the
/// coefficient of `q^n`. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coefficient: BigInt, exponent: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coefficient;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] -= 1;
        coeffs[n] += 1;
        Self::from_coeffs(coeffs)
    }

    /// `1 + q + ... + q^n`.
    pub fn all_ones(n: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); n + 1])
    }

    /// Indicator polynomial `sum_{n in exponents} q^n`.
    pub fn indicator<I: IntoIterator<Item = u64>>(exponents: I) -> Self {
        let mut coeffs = Vec::new();
        for n in exponents {
            let n = n as usize;
            if coeffs.len() <= n {
                coeffs.resize(n + 1, BigInt::zero());
            }
            coeffs[n] += 1;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn evaluate(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// `q^d f(1/q)` with `d = deg f`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reciprocal"));
        }
        Ok(Self::from_coeffs(self.coeffs.iter().rev().cloned().collect()))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&mut BigInt, &BigInt)) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (c, o) in coeffs.iter_mut().zip(&other.coeffs) {
            op(c, o);
        }
        Self::from_coeffs(coeffs)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |c, o| *c += o)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |c, o| *c -= o)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        // Skipping zero rows matters: most operands here are sparse 0/1 vectors.
        let right: Vec<_> = rhs.terms().collect();
        for (i, c) in self.terms() {
            for &(j, d) in &right {
                coeffs[i + j] += c * d;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Sparse ascending terms, e.g. `1 + q^3 - 2*q^5`; the zero polynomial is `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (n, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            match n {
                0 => write!(f, "{magnitude}")?,
                _ if unit => {}
                _ => write!(f, "{magnitude}*")?,
            }
            match n {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients of `f_A` restricted to `0..=F(A)`: `true` at members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonSequence {
    values: Vec<bool>,
}

impl EpsilonSequence {
    pub fn from_table(table: &SemigroupTable) -> Self {
        let len = (table.frobenius() + 1) as usize;
        EpsilonSequence { values: table.member()[..len].to_vec() }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, n: usize) -> u8 {
        self.values[n] as u8
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// All `n` with `eps_n + eps_{F - n} != 1`.
    pub fn symmetry_violations(&self) -> Vec<u64> {
        let Some(f) = self.values.len().checked_sub(1) else {
            return Vec::new();
        };
        (0..=f).filter(|&n| self.get(n) + self.get(f - n) != 1).map(|n| n as u64).collect()
    }
}

/// `f_A(q) = sum of q^n over the gaps n`.
pub fn gap_polynomial(generators: &GeneratorSet) -> Result<IntPolynomial> {
    let table = build_table(generators)?;
    Ok(IntPolynomial::indicator(table.gaps().iter().copied()))
}

/// `g_A(q) = 1 + q + ... + q^{F(A)} - f_A(q)`.
pub fn g_polynomial(generators: &GeneratorSet) -> Result<IntPolynomial> {
    let table = build_table(generators)?;
    g_from_table(&table)
}

fn g_from_table(table: &SemigroupTable) -> Result<IntPolynomial> {
    if table.frobenius() < 0 {
        return Err(Error::GapFree);
    }
    let f = table.frobenius() as usize;
    let gaps = IntPolynomial::indicator(table.gaps().iter().copied());
    Ok(&IntPolynomial::all_ones(f) - &gaps)
}

pub fn reciprocal(f: &IntPolynomial) -> Result<IntPolynomial> {
    f.reciprocal()
}

struct PairData {
    a: usize,
    b: usize,
    table: SemigroupTable,
    gap_poly: IntPolynomial,
}

fn pair_data(a: u64, b: u64) -> Result<PairData> {
    let generators = GeneratorSet::pair(a, b)?;
    let table = build_table(&generators)?;
    let gap_poly = IntPolynomial::indicator(table.gaps().iter().copied());
    Ok(PairData { a: a as usize, b: b as usize, table, gap_poly })
}

/// `(q^a - 1)(q^b - 1)` and `(q - 1)(q^{ab} - 1)`.
fn identity_factors(a: usize, b: usize) -> (IntPolynomial, IntPolynomial) {
    let left = &IntPolynomial::q_pow_minus_one(a) * &IntPolynomial::q_pow_minus_one(b);
    let right = &IntPolynomial::q_pow_minus_one(1) * &IntPolynomial::q_pow_minus_one(a * b);
    (left, right)
}

/// Both sides of `(q^a - 1)(q^b - 1)((q - 1) f_A(q) + 1) = (q - 1)(q^{ab} - 1)`,
/// computed from the gap table.
pub fn functional_equation_sides(a: u64, b: u64) -> Result<(IntPolynomial, IntPolynomial)> {
    let data = pair_data(a, b)?;
    Ok(sides_from(&data))
}

fn sides_from(data: &PairData) -> (IntPolynomial, IntPolynomial) {
    let (factor, rhs) = identity_factors(data.a, data.b);
    let q_minus_one = IntPolynomial::q_pow_minus_one(1);
    let inner = &(&q_minus_one * &data.gap_poly) + &IntPolynomial::one();
    (&factor * &inner, rhs)
}

pub fn verify_functional_equation(a: u64, b: u64) -> Result<bool> {
    let (lhs, rhs) = functional_equation_sides(a, b)?;
    Ok(lhs == rhs)
}

/// Reads `F(A)` off the identity: the left side has degree
/// `a + b + 1 + deg f_A`, the right side `1 + ab`.
pub fn frobenius_from_degree(a: u64, b: u64) -> Result<u64> {
    let data = pair_data(a, b)?;
    let (lhs, rhs) = sides_from(&data);
    let rhs_degree = rhs.degree().ok_or(Error::ZeroPolynomial("degree"))?;
    if lhs.degree() != Some(rhs_degree) {
        return Err(Error::IdentityViolated(format!(
            "degrees differ: left {:?}, right {rhs_degree}",
            lhs.degree()
        )));
    }
    let from_identity = rhs_degree - data.a - data.b - 1;
    let direct = data.gap_poly.degree().ok_or(Error::GapFree)?;
    let closed_form = data.a * data.b - data.a - data.b;
    if direct != from_identity || direct != closed_form {
        return Err(Error::IdentityViolated(format!(
            "deg f_A = {direct}, identity gives {from_identity}, ab - a - b = {closed_form}"
        )));
    }
    Ok(direct as u64)
}

/// Checks that the reciprocal of `f_A` equals `g_A` and that the reversed
/// identity `(q^a - 1)(q^b - 1)(-(q - 1) f^_A(q) + q^{ab-a-b+1}) = (q - 1)(q^{ab} - 1)`
/// holds exactly.
pub fn reciprocal_duality(a: u64, b: u64) -> Result<bool> {
    let data = pair_data(a, b)?;
    let reversed = data.gap_poly.reciprocal()?;
    let g = g_from_table(&data.table)?;
    if reversed != g {
        return Ok(false);
    }
    let (factor, rhs) = identity_factors(data.a, data.b);
    let shift = data.a * data.b - data.a - data.b + 1;
    let q_minus_one = IntPolynomial::q_pow_minus_one(1);
    let inner = &IntPolynomial::monomial(BigInt::one(), shift) - &(&q_minus_one * &reversed);
    Ok(&factor * &inner == rhs)
}

/// Every `n` in `0..=F(A)` with `eps_n + eps_{F(A) - n} != 1`; empty exactly
/// when `S(A)` is symmetric.
pub fn epsilon_symmetry_violations(generators: &GeneratorSet) -> Result<Vec<u64>> {
    let table = build_table(generators)?;
    Ok(EpsilonSequence::from_table(&table).symmetry_violations())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{genus, is_symmetric};
    use proptest::prelude::*;

    fn set(raw: &[i64]) -> GeneratorSet {
        GeneratorSet::new(raw).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn gap_polynomial_examples() {
        assert_eq!(gap_polynomial(&set(&[3, 5])).unwrap(), poly(&[0, 1, 1, 0, 1, 0, 0, 1]));
        assert!(gap_polynomial(&set(&[1, 2])).unwrap().is_zero());
        assert_eq!(gap_polynomial(&set(&[2, 3])).unwrap(), poly(&[0, 1]));
        assert_eq!(gap_polynomial(&set(&[2, 4])), Err(Error::NotNumericalSemigroup(2)));
    }

    #[test]
    fn reciprocal_examples() {
        // q^5 + q^2 + q -> q^4 + q^3 + 1
        assert_eq!(poly(&[0, 1, 1, 0, 0, 1]).reciprocal().unwrap(), poly(&[1, 0, 0, 1, 1]));
        assert_eq!(poly(&[1]).reciprocal().unwrap(), poly(&[1]));
        assert_eq!(
            poly(&[0, 1, 1, 0, 1, 0, 0, 1]).reciprocal().unwrap(),
            poly(&[1, 0, 0, 1, 0, 1, 1])
        );
        assert_eq!(IntPolynomial::zero().reciprocal(), Err(Error::ZeroPolynomial("reciprocal")));
    }

    #[test]
    fn g_polynomial_examples() {
        assert_eq!(g_polynomial(&set(&[3, 5])).unwrap(), poly(&[1, 0, 0, 1, 0, 1, 1]));
        assert_eq!(g_polynomial(&set(&[2, 3])).unwrap(), poly(&[1]));
        assert_eq!(g_polynomial(&set(&[2, 5])).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(g_polynomial(&set(&[1, 5])), Err(Error::GapFree));
    }

    #[test]
    fn functional_equation_examples() {
        assert!(verify_functional_equation(3, 5).unwrap());
        assert!(verify_functional_equation(2, 3).unwrap());
        assert!(verify_functional_equation(5, 3).unwrap());
        assert_eq!(verify_functional_equation(4, 6), Err(Error::NotNumericalSemigroup(2)));
        assert!(matches!(verify_functional_equation(1, 4), Err(Error::InvalidPair { .. })));
        assert!(matches!(verify_functional_equation(3, 3), Err(Error::InvalidPair { .. })));
    }

    #[test]
    fn functional_equation_detects_a_wrong_gap_polynomial() {
        let data = pair_data(3, 5).unwrap();
        let tampered = PairData { gap_poly: &data.gap_poly + &poly(&[0, 0, 0, 1]), ..data };
        let (lhs, rhs) = sides_from(&tampered);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn degree_argument_examples() {
        assert_eq!(frobenius_from_degree(3, 5).unwrap(), 7);
        assert_eq!(frobenius_from_degree(2, 3).unwrap(), 1);
        assert_eq!(frobenius_from_degree(5, 7).unwrap(), 23);
    }

    #[test]
    fn reciprocal_duality_examples() {
        assert!(reciprocal_duality(3, 5).unwrap());
        assert!(reciprocal_duality(2, 3).unwrap());
        assert!(reciprocal_duality(3, 7).unwrap());
    }

    #[test]
    fn epsilon_examples() {
        assert!(epsilon_symmetry_violations(&set(&[3, 5])).unwrap().is_empty());
        assert_eq!(epsilon_symmetry_violations(&set(&[3, 4, 5])).unwrap(), vec![1]);
        assert!(epsilon_symmetry_violations(&set(&[2, 7])).unwrap().is_empty());
        assert!(epsilon_symmetry_violations(&set(&[1, 3])).unwrap().is_empty());
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[1, 0, 0, 1, 0, 1, 1]).to_string(), "1 + q^3 + q^5 + q^6");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(poly(&[0, -3, 0, 2]).to_string(), "-3*q + 2*q^3");
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let p = poly(&[1, 2, 3]);
        let q = poly(&[0, -1]);
        assert_eq!(&p * &q, poly(&[0, -1, -2, -3]));
        assert_eq!(&p + &(-&p), IntPolynomial::zero());
        assert_eq!(&p - &poly(&[1, 2, 3]), IntPolynomial::zero());
        assert_eq!(p.evaluate(&BigInt::from(2)), BigInt::from(17));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(IntPolynomial::one().degree(), Some(0));
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution_with_nonzero_constant(
            head in prop::num::i64::ANY.prop_filter("nonzero", |c| *c != 0),
            tail in prop::collection::vec(-50i64..50, 0..20),
        ) {
            let mut c = vec![head];
            c.extend(tail);
            let f = poly(&c);
            prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
        }

        #[test]
        fn multiplication_agrees_with_evaluation(
            x in prop::collection::vec(-20i64..20, 0..12),
            y in prop::collection::vec(-20i64..20, 0..12),
            at in -5i64..5,
        ) {
            let (f, g) = (poly(&x), poly(&y));
            let at = BigInt::from(at);
            prop_assert_eq!((&f * &g).evaluate(&at), f.evaluate(&at) * g.evaluate(&at));
        }

        #[test]
        fn gap_polynomial_laws(raw in prop::collection::vec(1u64..=30, 1..=4)) {
            let a = GeneratorSet::from_unsigned(&raw).unwrap();
            prop_assume!(a.is_admissible());
            let f = gap_polynomial(&a).unwrap();
            prop_assert_eq!(f.evaluate(&BigInt::one()), BigInt::from(genus(&a).unwrap()));
            let table = build_table(&a).unwrap();
            if table.frobenius() >= 0 {
                let g = g_polynomial(&a).unwrap();
                prop_assert_eq!(&f + &g, IntPolynomial::all_ones(table.frobenius() as usize));
            }
            let violations = epsilon_symmetry_violations(&a).unwrap();
            prop_assert_eq!(violations.is_empty(), is_symmetric(&a).unwrap());
            prop_assert_eq!(
                violations.is_empty(),
                2 * table.genus() as i64 == table.frobenius() + 1
            );
        }
    }
}
