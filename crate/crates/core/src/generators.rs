//! Deterministic constructors for the complexes used in tests, reports and the census.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::complex::{Graph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::polynomial::Rational;

/// The `m`-gon.
pub fn cycle(m: usize) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::TooSmall { name: "m", value: m, min: 3 });
    }
    let facets: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    SimplicialComplex::from_facets(m, &facets)
}

/// Two isolated points, the 0-sphere.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).expect("valid facets")
}

/// Boundary of the `n`-dimensional cross-polytope. Vertices `2i` and `2i+1`
/// are antipodal, so this is literally the `n`-fold join of [`two_points`].
pub fn cross_polytope_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::TooSmall { name: "n", value: n, min: 1 });
    }
    let facets: Vec<Vec<usize>> = (0..1usize << n)
        .map(|choice| (0..n).map(|i| 2 * i + (choice >> i & 1)).collect())
        .collect();
    SimplicialComplex::from_facets(2 * n, &facets)
}

/// Boundary of the `n`-simplex on `n + 1` vertices.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::TooSmall { name: "n", value: n, min: 1 });
    }
    let facets: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::from_facets(n + 1, &facets)
}

/// Icosahedron boundary: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> SimplicialComplex {
    const FACETS: [[usize; 3]; 20] = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 6], [2, 3, 7], [3, 4, 8], [4, 5, 9], [1, 5, 10],
        [2, 6, 7], [3, 7, 8], [4, 8, 9], [5, 9, 10], [1, 6, 10],
        [6, 7, 11], [7, 8, 11], [8, 9, 11], [9, 10, 11], [6, 10, 11],
    ];
    let facets: Vec<Vec<usize>> = FACETS.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(12, &facets).expect("valid facets")
}

/// Erdős–Rényi graph `G(n, p)`.
///
/// The stream is SplitMix64 seeded with `seed`. Pairs are visited in
/// lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`; each pair draws one
/// `u64` value `x` and becomes an edge iff `x / 2^64 < p`, compared exactly.
pub fn random_graph(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::BadProbability(crate::bigint_serde::format_rational(p)));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let scaled_p = p.numer() << 64u32;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let x = BigInt::from(rng.next_u64());
            if !p.is_zero() && x * p.denom() < scaled_p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Builds a complex from a generator expression.
///
/// Grammar: `icosahedron`, `two-points`, `cycle:M`, `cross-polytope:N`,
/// `simplex-boundary:N`, and the prefixes `susp:EXPR` (suspension) and
/// `sd:EXPR` (barycentric subdivision).
pub fn from_expr(expr: &str) -> Result<SimplicialComplex> {
    let expr = expr.trim();
    let (head, rest) = match expr.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (expr, None),
    };
    let param = |rest: Option<&str>| -> Result<usize> {
        rest.and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::UnknownGenerator(expr.to_string()))
    };
    match head {
        "susp" | "suspension" => from_expr(rest.unwrap_or_default())?.suspension(),
        "sd" => from_expr(rest.unwrap_or_default())?.barycentric_subdivision(),
        "icosahedron" if rest.is_none() => Ok(icosahedron()),
        "two-points" | "s0" if rest.is_none() => Ok(two_points()),
        "cycle" => cycle(param(rest)?),
        "cross-polytope" => cross_polytope_boundary(param(rest)?),
        "simplex-boundary" => simplex_boundary(param(rest)?),
        _ => Err(Error::UnknownGenerator(expr.to_string())),
    }
}

/// Looks a generator up by name with optional `n`/`m` parameters.
pub fn by_name(name: &str, n: Option<usize>, m: Option<usize>) -> Result<SimplicialComplex> {
    let size = n.or(m);
    let need = |what: &str| Error::UnknownGenerator(format!("{name} (missing --{what})"));
    match name {
        "icosahedron" => Ok(icosahedron()),
        "two-points" | "s0" => Ok(two_points()),
        "cycle" => cycle(size.ok_or_else(|| need("m"))?),
        "cross-polytope" => cross_polytope_boundary(size.ok_or_else(|| need("n"))?),
        "simplex-boundary" => simplex_boundary(size.ok_or_else(|| need("n"))?),
        _ => Err(Error::UnknownGenerator(name.to_string())),
    }
}
