//! h-, h-tilde- and gamma-polynomials and the identities relating them.
//!
//! Convention: for a complex of dimension `dim`, `m = dim + 1` and
//!
//! ```text
//! h(t) = sum_{i=0}^{m} f_{i-1} t^i (1 - t)^(m - i),      f_{-1} = 1,
//! ```
//!
//! equivalently `t^m f(1/t) = (1+t)^m h(1/(1+t))`. With this normalization
//! evaluating at `t = -2` gives `f(-1/2) = h(-1) / 2^m`, and for a
//! `2d`-dimensional generalized homology sphere
//!
//! ```text
//! (-1)^d h~(-1) = 1/2 * sum_v (-1)^d h_{Lk v}(-1).
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::is_generalized_homology_sphere;
use crate::polynomial::{rational, GammaVector, IntPolynomial, Rational};

/// The constant in the vertex-link form of the h-tilde identity under this
/// crate's h-convention.
pub fn theorem_constant() -> Rational {
    rational(1, 2)
}

/// `m = dim + 1`, the degree bound of the h-polynomial.
fn rank(complex: &SimplicialComplex) -> usize {
    (complex.dim() + 1) as usize
}

fn sign(d: usize) -> BigInt {
    if d.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() }
}

/// h-polynomial; the void complex has `h = 1`.
pub fn h_polynomial(complex: &SimplicialComplex) -> IntPolynomial {
    let m = rank(complex);
    let f = complex.f_polynomial();
    (0..=m).fold(IntPolynomial::zero(), |acc, i| {
        acc + (IntPolynomial::one_minus_t_pow(m - i).shift(i).scale(&f.coeff(i)))
    })
}

/// `h / (1 + t)` for an even-dimensional complex.
pub fn h_tilde(complex: &SimplicialComplex) -> Result<IntPolynomial> {
    let dim = complex.dim();
    if dim < 0 || dim % 2 != 0 {
        return Err(Error::WrongParity { expected: "even", dim });
    }
    h_polynomial(complex).divide_exact_by_one_plus_t()
}

/// `(-1)^d h(-1)` for a `(2d-1)`-dimensional complex.
pub fn charney_davis_value(complex: &SimplicialComplex) -> Result<Rational> {
    let dim = complex.dim();
    if dim < 0 || dim % 2 == 0 {
        return Err(Error::WrongParity { expected: "odd", dim });
    }
    let d = (dim as usize).div_ceil(2);
    let value = sign(d) * h_polynomial(complex).eval_int(&BigInt::from(-1));
    Ok(Rational::from_integer(value))
}

/// Both sides of `(-1)^d h~(-1) = c * sum_v (-1)^d h_{Lk v}(-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremWitness {
    #[serde(with = "crate::bigint_serde::rational")]
    pub lhs: Rational,
    #[serde(with = "crate::bigint_serde::rational")]
    pub rhs: Rational,
    /// `sum_v (-1)^d h_{Lk v}(-1)` before scaling by the constant.
    #[serde(with = "crate::bigint_serde::rational")]
    pub link_sum: Rational,
    pub equal: bool,
}

/// Evaluates both sides without certifying the hypothesis.
pub fn theorem_sides(complex: &SimplicialComplex) -> Result<TheoremWitness> {
    let dim = complex.dim();
    if dim < 0 || dim % 2 != 0 {
        return Err(Error::WrongParity { expected: "even", dim });
    }
    let d = dim as usize / 2;
    let minus_one = BigInt::from(-1);
    let lhs = Rational::from_integer(sign(d) * h_tilde(complex)?.eval_int(&minus_one));
    let mut link_sum = BigInt::zero();
    for v in 0..complex.vertex_count() {
        let link = complex.link(v)?.complex;
        link_sum += sign(d) * h_polynomial(&link).eval_int(&minus_one);
    }
    let link_sum = Rational::from_integer(link_sum);
    let rhs = theorem_constant() * &link_sum;
    let equal = lhs == rhs;
    Ok(TheoremWitness { lhs, rhs, link_sum, equal })
}

/// The h-tilde identity on a certified even-dimensional generalized homology sphere.
pub fn theorem_identity(complex: &SimplicialComplex) -> Result<TheoremWitness> {
    let dim = complex.dim();
    if dim < 0 || dim % 2 != 0 {
        return Err(Error::WrongParity { expected: "even", dim });
    }
    if !is_generalized_homology_sphere(complex) {
        return Err(Error::NotASphere("generalized homology sphere"));
    }
    theorem_sides(complex)
}

/// `sum_v f_{Lk v}(t)`.
pub fn link_f_polynomial_sum(complex: &SimplicialComplex) -> IntPolynomial {
    (0..complex.vertex_count()).fold(IntPolynomial::zero(), |acc, v| {
        acc + complex.link(v).expect("vertex in range").complex.f_polynomial()
    })
}

/// `sum_v f_{Lk v} = f'`, valid for every complex.
pub fn link_derivative_identity(complex: &SimplicialComplex) -> bool {
    link_f_polynomial_sum(complex) == complex.f_polynomial().derivative()
}

/// h is palindromic of degree bound `m`; when `m` is odd, also `f(-1/2) = 0`.
pub fn dehn_sommerville_check(complex: &SimplicialComplex) -> bool {
    let m = rank(complex);
    let palindromic = h_polynomial(complex).is_palindromic(m);
    if m % 2 == 1 {
        palindromic && complex.f_polynomial().eval_rational(&rational(-1, 2)).is_zero()
    } else {
        palindromic
    }
}

/// `f(-1/2)`, the Euler characteristic of the associated reflection orbifold.
pub fn orbifold_euler(complex: &SimplicialComplex) -> Rational {
    complex.f_polynomial().eval_rational(&rational(-1, 2))
}

/// `f(-1/2)` next to `h(-1)`; under this crate's convention they differ by `2^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldEuler {
    #[serde(with = "crate::bigint_serde::rational")]
    pub f_at_minus_half: Rational,
    #[serde(with = "crate::bigint_serde::rational")]
    pub h_at_minus_one: Rational,
    #[serde(with = "crate::bigint_serde::rational")]
    pub two_pow_m: Rational,
    /// `f(-1/2) == h(-1) / 2^m`.
    pub consistent: bool,
}

pub fn orbifold_euler_record(complex: &SimplicialComplex) -> OrbifoldEuler {
    let f_at_minus_half = orbifold_euler(complex);
    let h_at_minus_one = Rational::from_integer(h_polynomial(complex).eval_int(&BigInt::from(-1)));
    let two_pow_m = Rational::from_integer(BigInt::one() << rank(complex));
    let consistent = f_at_minus_half == &h_at_minus_one / &two_pow_m;
    OrbifoldEuler { f_at_minus_half, h_at_minus_one, two_pow_m, consistent }
}

/// `h_{K*L} = h_K h_L`.
pub fn join_multiplicativity_check(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<bool> {
    let joined = k.join(l)?;
    Ok(h_polynomial(&joined) == h_polynomial(k) * h_polynomial(l))
}

/// `f_{K*L} = f_K f_L`.
pub fn join_f_multiplicativity_check(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<bool> {
    let joined = k.join(l)?;
    Ok(joined.f_polynomial() == k.f_polynomial() * l.f_polynomial())
}

pub fn gamma_vector(complex: &SimplicialComplex) -> Result<GammaVector> {
    h_polynomial(complex).gamma_expand(rank(complex))
}

/// Everything computable about one complex; parity-dependent entries are
/// `None` when they do not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereInvariants {
    pub dim: isize,
    pub m: usize,
    pub f_vector: FVector,
    pub f_poly: IntPolynomial,
    pub h_poly: IntPolynomial,
    pub h_tilde: Option<IntPolynomial>,
    pub gamma: Option<GammaVector>,
    #[serde(with = "crate::bigint_serde::rational_opt")]
    pub cd_value: Option<Rational>,
    pub theorem: Option<TheoremWitness>,
    pub orbifold_euler: OrbifoldEuler,
    pub dehn_sommerville: bool,
    pub link_derivative: bool,
}

/// Aggregates every applicable invariant. The theorem identity is filled in
/// only for certified even-dimensional generalized homology spheres.
pub fn analyze(complex: &SimplicialComplex) -> Result<SphereInvariants> {
    let f_vector = complex.f_vector()?;
    let dim = complex.dim();
    let m = rank(complex);
    let h_poly = h_polynomial(complex);
    let even = dim % 2 == 0;
    let h_tilde = if even { h_tilde(complex).ok() } else { None };
    let gamma = h_poly.gamma_expand(m).ok();
    let cd_value = if even { None } else { Some(charney_davis_value(complex)?) };
    let theorem = match theorem_identity(complex) {
        Ok(w) => Some(w),
        Err(Error::WrongParity { .. } | Error::NotASphere(_) | Error::NotDivisible { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SphereInvariants {
        dim,
        m,
        f_vector,
        f_poly: complex.f_polynomial(),
        h_poly,
        h_tilde,
        gamma,
        cd_value,
        theorem,
        orbifold_euler: orbifold_euler_record(complex),
        dehn_sommerville: dehn_sommerville_check(complex),
        link_derivative: link_derivative_identity(complex),
    })
}

/// Sign predicted by the conjectures: `cd_value >= 0` in odd dimension,
/// theorem left-hand side `>= 0` in even dimension. `None` when neither applies.
pub fn conjectured_sign_holds(inv: &SphereInvariants) -> Option<bool> {
    match (&inv.cd_value, &inv.theorem) {
        (Some(cd), _) => Some(!cd.is_negative()),
        (None, Some(w)) => Some(!w.lhs.is_negative()),
        _ => None,
    }
}
