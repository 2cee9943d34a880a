//! Exact computations on numerical semigroups `S(A)` generated by a finite
//! set `A` of positive integers.
//!
//! - [`semigroup`]: generator validation, the membership table, Frobenius
//!   number, genus, gaps, symmetry and representation witnesses.
//! - [`gap_poly`]: dense integer polynomials, the gap polynomial `f_A(q)`,
//!   `g_A(q)`, reciprocals and the two-generator functional equation
//!   `(q^a - 1)(q^b - 1)((q - 1) f_A(q) + 1) = (q - 1)(q^{ab} - 1)`.
//! - [`bivariate`]: sparse rational polynomials in `x, y` under lex order,
//!   single-divisor division, the map `x -> t^a, y -> t^b` and membership in
//!   its kernel `(x^b - y^a)`.
//! - [`graded`]: the Frobenius grading of `E[x, y]`, denumerants `p_{a,b}(n)`,
//!   truncated Hilbert series and the rank-nullity identity.
//! - [`sweep`]: batch verification over many generator pairs, parallel when
//!   the `parallel` feature is on.

pub mod bivariate;
pub mod error;
pub mod gap_poly;
pub mod graded;
pub mod semigroup;
pub mod sweep;

pub use bivariate::{
    distinct_exponent_check, divide, in_kernel, leading_monomial, phi_evaluate,
    BivariatePolynomial, DivisionResult, KernelMethod, Monomial2, ParseError, RationalPolynomial,
};
pub use error::{Error, Result};
pub use gap_poly::{
    epsilon_symmetry_violations, frobenius_from_degree, g_polynomial, gap_polynomial, reciprocal,
    reciprocal_duality, verify_functional_equation, EpsilonSequence, IntPolynomial,
};
pub use graded::{
    enumerate_basis, euler_product_series, graded_dims, hilbert_series, partition_count,
    rank_nullity_check, series_identity_check, surjectivity_witness, GradedDims, SeriesKind,
    TruncatedSeries,
};
pub use semigroup::{
    build_table, conductor_bound, frobenius_number, genus, is_symmetric, represent,
    validate_generators, GeneratorSet, Representation, SemigroupTable,
};
