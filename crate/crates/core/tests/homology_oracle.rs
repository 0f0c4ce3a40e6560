mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use flagsphere::homology::{boundary_matrix, is_generalized_homology_sphere, reduced_homology};
use flagsphere::snf::invariant_factors;
use flagsphere::{Rational, SimplicialComplex};

/// Rank over Q by plain Gaussian elimination.
fn rational_rank(dense: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Rational>> = dense
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = &a[r][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, p) in a[r][c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_complex(rng: &mut SplitMix64) -> SimplicialComplex {
    let n = 1 + (rng.next_u64() % 8) as usize;
    let count = 1 + (rng.next_u64() % 7) as usize;
    let mut facets: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let bits = rng.next_u64() % (1 << n);
            (0..n).filter(|v| bits >> v & 1 == 1).collect::<Vec<_>>()
        })
        .filter(|f| !f.is_empty())
        .collect();
    // every vertex must be used
    facets.extend((0..n).map(|v| vec![v]));
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// Reduced Betti numbers over Q from ranks of the boundary maps.
fn rational_betti(c: &SimplicialComplex) -> Vec<usize> {
    let top = c.dim() as usize;
    let mut ranks = vec![1usize];
    for i in 1..=top {
        ranks.push(rational_rank(&boundary_matrix(c, i).unwrap().to_dense()));
    }
    ranks.push(0);
    (0..=top).map(|i| c.faces(i).len() - ranks[i] - ranks[i + 1]).collect()
}

#[test]
fn smith_form_agrees_with_rational_rank() {
    let mut rng = SplitMix64::seed_from_u64(7);
    for _ in 0..100 {
        let c = random_complex(&mut rng);
        for i in 1..=c.dim().max(0) as usize {
            let b = boundary_matrix(&c, i).unwrap();
            assert_eq!(invariant_factors(&b).len(), rational_rank(&b.to_dense()));
        }
        assert_eq!(reduced_homology(&c).betti_numbers(), rational_betti(&c), "{:?}", c.facets());
    }
}

#[test]
fn invariant_factors_divide_in_chain() {
    let mut rng = SplitMix64::seed_from_u64(11);
    for _ in 0..100 {
        let c = random_complex(&mut rng);
        for i in 1..=c.dim().max(0) as usize {
            let factors = invariant_factors(&boundary_matrix(&c, i).unwrap());
            for w in factors.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "{factors:?}");
            }
            assert!(factors.iter().all(|d| *d >= BigInt::one()));
        }
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    for c in common::full_suite() {
        for i in 2..=c.complex.dim().max(0) as usize {
            let d_low = boundary_matrix(&c.complex, i - 1).unwrap();
            let d_high = boundary_matrix(&c.complex, i).unwrap();
            assert!(d_low.mul(&d_high).iter().flatten().all(|&x| x == 0), "{}", c.name);
        }
    }
}

#[test]
fn euler_characteristic_matches_betti_numbers() {
    let mut rng = SplitMix64::seed_from_u64(3);
    let randoms = (0..50).map(|_| random_complex(&mut rng));
    for c in common::full_suite().into_iter().map(|n| n.complex).chain(randoms) {
        let reduced: i64 = reduced_homology(&c)
            .betti_numbers()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(c.euler_characteristic(), 1 + reduced);
    }
}

#[test]
fn spheres_certify_and_non_spheres_do_not() {
    for c in common::sphere_suite() {
        assert!(is_generalized_homology_sphere(&c.complex), "{}", c.name);
    }
    for c in common::non_sphere_suite() {
        assert!(!is_generalized_homology_sphere(&c.complex), "{}", c.name);
    }
}
