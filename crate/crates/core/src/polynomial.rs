//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Every face-counting polynomial in this crate (f, h, h-tilde) lives in an
//! [`IntPolynomial`]. Evaluation happens over exact rationals only.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `numer / denom`. Panics if `denom == 0`.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Polynomial in one variable `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<crate::bigint_serde::Int>", into = "Vec<crate::bigint_serde::Int>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(1 + t)^k`, built from binomial coefficients.
    pub fn one_plus_t_pow(k: usize) -> Self {
        Self::new(binomial_row(k))
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let coeffs = binomial_row(k)
            .into_iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c } else { -c })
            .collect();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero when absent.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at a rational point (Horner's scheme).
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// The quotient `q` with `(1 + t) q = self`.
    ///
    /// Synthetic division by `t + 1`, low degree first.
    pub fn divide_exact_by_one_plus_t(&self) -> Result<Self> {
        let remainder = self.eval_int(&BigInt::from(-1));
        if !remainder.is_zero() {
            return Err(Error::NotDivisible { remainder });
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // q_0 = p_0, q_i = p_i - q_{i-1}
        let n = self.coeffs.len() - 1;
        let mut quotient = Vec::with_capacity(n);
        let mut prev = BigInt::zero();
        for c in &self.coeffs[..n] {
            let q = c - &prev;
            quotient.push(q.clone());
            prev = q;
        }
        Ok(Self::new(quotient))
    }

    /// True iff the coefficient of `t^i` equals that of `t^(m-i)` for all
    /// `0 <= i <= m`. A polynomial of degree above `m` is never palindromic.
    pub fn is_palindromic(&self, m: usize) -> bool {
        if self.degree() > m as isize {
            return false;
        }
        (0..=m / 2).all(|i| self.coeff(i) == self.coeff(m - i))
    }

    /// Expands a palindromic polynomial as `sum_i gamma_i t^i (1+t)^(m-2i)`.
    ///
    /// Peels from the constant term upward: `gamma_i` is the `t^i`
    /// coefficient of what remains after subtracting the earlier terms.
    pub fn gamma_expand(&self, m: usize) -> Result<GammaVector> {
        if !self.is_palindromic(m) {
            return Err(Error::NotPalindromic { degree_bound: m });
        }
        let mut residue = self.clone();
        let mut gammas = Vec::with_capacity(m / 2 + 1);
        for i in 0..=m / 2 {
            let g = residue.coeff(i);
            if !g.is_zero() {
                let term = Self::one_plus_t_pow(m - 2 * i).shift(i).scale(&g);
                residue = &residue - &term;
            }
            gammas.push(g);
        }
        debug_assert!(residue.is_zero(), "palindromic residue must vanish");
        Ok(GammaVector { gammas, degree_bound: m })
    }
}

/// Row `k` of Pascal's triangle.
fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..k {
        let next = &row[j] * BigInt::from(k - j) / BigInt::from(j + 1);
        row.push(next);
    }
    row
}

impl From<Vec<crate::bigint_serde::Int>> for IntPolynomial {
    fn from(v: Vec<crate::bigint_serde::Int>) -> Self {
        Self::new(v.into_iter().map(|c| c.0).collect())
    }
}

impl From<IntPolynomial> for Vec<crate::bigint_serde::Int> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs.into_iter().map(crate::bigint_serde::Int).collect()
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{mag}t"),
                (_, true) => format!("t^{i}"),
                (_, false) => format!("{mag}t^{i}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Coefficients of the gamma-expansion of a palindromic polynomial with
/// symmetry centre `degree_bound / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaVector {
    #[serde(with = "crate::bigint_serde::vec")]
    gammas: Vec<BigInt>,
    degree_bound: usize,
}

impl GammaVector {
    pub fn gammas(&self) -> &[BigInt] {
        &self.gammas
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// The top entry `gamma_{floor(m/2)}`.
    pub fn top(&self) -> &BigInt {
        self.gammas.last().expect("gamma vector has at least one entry")
    }

    /// `sum_i gamma_i t^i (1+t)^(m-2i)`.
    pub fn reconstruct(&self) -> IntPolynomial {
        let m = self.degree_bound;
        self.gammas
            .iter()
            .enumerate()
            .fold(IntPolynomial::zero(), |acc, (i, g)| {
                acc + IntPolynomial::one_plus_t_pow(m - 2 * i).shift(i).scale(g)
            })
    }
}
