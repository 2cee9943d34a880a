//! Generator sets and the membership table of `S(A)`.
//!
//! The table is filled by forward dynamic programming up to the conductor
//! bound `(a_k - 1) * (a_1 + ... + a_{k-1})`. Every integer at or above that
//! bound is in `S(A)`, so the table decides membership for all of `N_0`.
//!
//! Conventions for the gap-free case (`1 in A`): `F(A) = -1`, the gap list is
//! empty and the semigroup counts as symmetric.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default cap on the number of table cells (`bound + 1`).
pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;

const NO_PREDECESSOR: u32 = u32::MAX;

/// A validated set of positive integers, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    elements: Vec<u64>,
    gcd: u64,
}

impl GeneratorSet {
    /// Sorts, deduplicates and computes the gcd. A gcd other than 1 is not an
    /// error here; see [`GeneratorSet::require_admissible`].
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut elements = Vec::with_capacity(raw.len());
        for &r in raw {
            if r <= 0 {
                return Err(Error::NonPositiveGenerator(r));
            }
            elements.push(r as u64);
        }
        Ok(Self::from_positive(elements))
    }

    /// Same as [`GeneratorSet::new`] for inputs that are already unsigned.
    pub fn from_unsigned(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if raw.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        Ok(Self::from_positive(raw.to_vec()))
    }

    fn from_positive(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let gcd = elements.iter().fold(0u64, |g, &e| g.gcd(&e));
        GeneratorSet { elements, gcd }
    }

    /// Validated two-generator set `{a, b}` for the identities that need
    /// distinct coprime generators both at least 2.
    pub fn pair(a: u64, b: u64) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::InvalidPair { a, b, reason: "both generators must be at least 2" });
        }
        if a == b {
            return Err(Error::InvalidPair { a, b, reason: "generators must be distinct" });
        }
        let set = Self::from_positive(vec![a, b]);
        set.require_admissible()?;
        Ok(set)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn largest(&self) -> u64 {
        *self.elements.last().expect("generator sets are nonempty")
    }

    pub fn is_admissible(&self) -> bool {
        self.gcd == 1
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotNumericalSemigroup(self.gcd))
        }
    }
}

/// Nonnegative coefficients `r_1..r_k`, aligned with the sorted generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    pub coefficients: Vec<u64>,
}

impl Representation {
    /// `sum a_i r_i`, or `None` if it does not fit in a `u128`.
    pub fn value(&self, generators: &GeneratorSet) -> Option<u128> {
        self.coefficients
            .iter()
            .zip(generators.elements())
            .try_fold(0u128, |acc, (&r, &a)| acc.checked_add((r as u128).checked_mul(a as u128)?))
    }
}

pub fn validate_generators(raw: &[i64]) -> Result<GeneratorSet> {
    GeneratorSet::new(raw)
}

/// `(a_k - 1) * sum_{i<k} a_i`; every `n` at or above it lies in `S(A)`.
pub fn conductor_bound(generators: &GeneratorSet) -> Result<u64> {
    generators.require_admissible()?;
    let (&largest, rest) = generators.elements.split_last().expect("generator sets are nonempty");
    let sum = rest
        .iter()
        .try_fold(0u64, |acc, &a| acc.checked_add(a))
        .ok_or(Error::Overflow("conductor bound"))?;
    (largest - 1).checked_mul(sum).ok_or(Error::Overflow("conductor bound"))
}

/// Membership of `S(A)` on `0..=bound`, with one predecessor generator per
/// member so that witnesses can be read back in linear time.
#[derive(Debug, Clone)]
pub struct SemigroupTable {
    generators: GeneratorSet,
    bound: u64,
    member: Vec<bool>,
    predecessor: Vec<u32>,
    frobenius: i64,
    gaps: Vec<u64>,
}

pub fn build_table(generators: &GeneratorSet) -> Result<SemigroupTable> {
    SemigroupTable::with_limit(generators, DEFAULT_MAX_CELLS)
}

impl SemigroupTable {
    pub fn new(generators: &GeneratorSet) -> Result<Self> {
        Self::with_limit(generators, DEFAULT_MAX_CELLS)
    }

    /// Builds the table, refusing if it would need more than `max_cells` cells.
    pub fn with_limit(generators: &GeneratorSet, max_cells: u64) -> Result<Self> {
        let bound = conductor_bound(generators)?;
        let cells = bound.checked_add(1).ok_or(Error::Overflow("table size"))?;
        if cells > max_cells {
            return Err(Error::TableTooLarge { cells, limit: max_cells });
        }
        let len = usize::try_from(cells).map_err(|_| Error::Overflow("table size"))?;
        let elements = generators.elements();

        let mut member = vec![false; len];
        let mut predecessor = vec![NO_PREDECESSOR; len];
        member[0] = true;
        for n in 1..len {
            for (idx, &a) in elements.iter().enumerate() {
                let a = a as usize;
                if a <= n && member[n - a] {
                    member[n] = true;
                    predecessor[n] = idx as u32;
                    break;
                }
            }
        }

        let gaps: Vec<u64> =
            member.iter().enumerate().filter(|(_, &m)| !m).map(|(n, _)| n as u64).collect();
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);

        Ok(SemigroupTable {
            generators: generators.clone(),
            bound,
            member,
            predecessor,
            frobenius,
            gaps,
        })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Membership bitmap for `0..=bound`.
    pub fn member(&self) -> &[bool] {
        &self.member
    }

    /// `F(A)`, or `-1` when there are no gaps.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn contains(&self, n: u64) -> bool {
        match usize::try_from(n) {
            Ok(i) if i < self.member.len() => self.member[i],
            _ => true,
        }
    }

    /// For every `n` in `0..=F(A)`, exactly one of `n` and `F(A) - n` is in `S(A)`.
    pub fn is_symmetric(&self) -> bool {
        if self.frobenius < 0 {
            return true;
        }
        let f = self.frobenius as usize;
        (0..=f).all(|n| self.member[n] != self.member[f - n])
    }

    /// A witness `r` with `sum a_i r_i = n`, or `None` when `n` is a gap.
    pub fn represent(&self, n: u64) -> Option<Representation> {
        if n > self.bound {
            return representation_by_residues(&self.generators, n);
        }
        let mut n = n as usize;
        if !self.member[n] {
            return None;
        }
        let elements = self.generators.elements();
        let mut coefficients = vec![0u64; elements.len()];
        while n > 0 {
            let idx = self.predecessor[n] as usize;
            coefficients[idx] += 1;
            n -= elements[idx] as usize;
        }
        Some(Representation { coefficients })
    }
}

/// Builds a representation the way the existence proof does: pick a Bezout
/// combination `sum a_i s_i = n`, reduce each `s_i` (`i < k`) modulo `a_k`
/// and let the last coefficient absorb the rest. Succeeds for every `n` at
/// or above [`conductor_bound`], and may return `None` below it.
pub fn representation_by_residues(generators: &GeneratorSet, n: u64) -> Option<Representation> {
    if !generators.is_admissible() {
        return None;
    }
    let (&largest, rest) = generators.elements().split_last()?;
    let modulus = largest as i128;
    let target = n as i128;

    // Bezout coefficients for a_1..a_{k-1} against a_k, kept reduced mod a_k.
    let mut coeffs: Vec<i128> = Vec::with_capacity(rest.len());
    let mut g: i128 = 0;
    for &a in rest {
        let ext = g.extended_gcd(&(a as i128));
        for c in coeffs.iter_mut() {
            *c = (*c * ext.x).rem_euclid(modulus);
        }
        coeffs.push(ext.y.rem_euclid(modulus));
        g = ext.gcd;
    }
    // u * g + v * a_k = 1, so sum_{i<k} a_i (u c_i) = 1 (mod a_k).
    let scale = if rest.is_empty() { 0 } else { g.extended_gcd(&modulus).x };

    let residue = target.rem_euclid(modulus);
    let mut coefficients = Vec::with_capacity(generators.len());
    let mut rest_sum: i128 = 0;
    for (&a, &c) in rest.iter().zip(&coeffs) {
        let r = ((c * scale).rem_euclid(modulus) * residue).rem_euclid(modulus);
        rest_sum += a as i128 * r;
        coefficients.push(r as u64);
    }
    let remainder = target - rest_sum;
    if remainder < 0 {
        return None;
    }
    debug_assert_eq!(remainder % modulus, 0);
    coefficients.push((remainder / modulus) as u64);
    Some(Representation { coefficients })
}

/// `F(A)`, or `-1` when `S(A) = N_0`.
pub fn frobenius_number(generators: &GeneratorSet) -> Result<i64> {
    let table = build_table(generators)?;
    if let [a, b] = generators.elements() {
        debug_assert_eq!(table.frobenius(), (*a as i64) * (*b as i64) - *a as i64 - *b as i64);
    }
    Ok(table.frobenius())
}

pub fn genus(generators: &GeneratorSet) -> Result<u64> {
    let table = build_table(generators)?;
    if let [a, b] = generators.elements() {
        debug_assert_eq!(table.genus(), (a - 1) * (b - 1) / 2);
    }
    Ok(table.genus())
}

pub fn is_symmetric(generators: &GeneratorSet) -> Result<bool> {
    Ok(build_table(generators)?.is_symmetric())
}

pub fn represent(n: u64, generators: &GeneratorSet) -> Result<Option<Representation>> {
    Ok(build_table(generators)?.represent(n))
}
