use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use flagsphere::polynomial::GammaVector;
use flagsphere::{IntPolynomial, Rational};

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-1000i64..1000, 0..10).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn multiplication_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_by_one_plus_t_round_trips(q in poly()) {
        let product = &q * &IntPolynomial::from_i64s(&[1, 1]);
        prop_assert_eq!(product.divide_exact_by_one_plus_t().unwrap(), q);
    }

    #[test]
    fn inexact_division_is_rejected(q in poly(), r in 1i64..50) {
        let shifted = &(&q * &IntPolynomial::from_i64s(&[1, 1])) + &IntPolynomial::from_i64s(&[r]);
        prop_assert!(shifted.divide_exact_by_one_plus_t().is_err());
    }

    #[test]
    fn gamma_expansion_reconstructs(gammas in prop::collection::vec(-500i64..500, 1..6), extra in 0usize..2) {
        // degree bound m with floor(m/2) + 1 = gammas.len()
        let m = 2 * (gammas.len() - 1) + extra;
        let built = gammas.iter().enumerate().fold(IntPolynomial::zero(), |acc, (i, &g)| {
            acc + IntPolynomial::one_plus_t_pow(m - 2 * i).shift(i).scale(&BigInt::from(g))
        });
        prop_assert!(built.is_zero() || built.is_palindromic(m));
        if let Ok(g) = built.gamma_expand(m) {
            let expected: Vec<BigInt> = gammas.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert_eq!(g.gammas(), &expected[..]);
            prop_assert_eq!(g.reconstruct(), built);
        }
    }
}

#[test]
fn gamma_vector_reconstruct_matches_definition() {
    let h = IntPolynomial::from_i64s(&[1, 57, 302, 302, 57, 1]);
    let g: GammaVector = h.gamma_expand(5).unwrap();
    assert_eq!(g.gammas(), &[BigInt::from(1), BigInt::from(52), BigInt::from(136)]);
    assert_eq!(g.reconstruct(), h);
}

/// Evaluation by summing `c_i * x^i` with independently computed powers.
fn naive_eval(coeffs: &[i64], x: &Rational) -> Rational {
    let mut total = Rational::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        let mut power = Rational::one();
        for _ in 0..i {
            power *= x;
        }
        total += power * Rational::from_integer(BigInt::from(c));
    }
    total
}

#[test]
fn evaluation_matches_power_sum_on_seeded_pairs() {
    let mut rng = SplitMix64::seed_from_u64(2024);
    let mut draw = |bound: u64| (rng.next_u64() % bound) as i64;
    for _ in 0..1000 {
        let len = draw(12) as usize;
        let coeffs: Vec<i64> = (0..len).map(|_| draw(2001) - 1000).collect();
        let x = Rational::new(BigInt::from(draw(41) - 20), BigInt::from(draw(12) + 1));
        let p = IntPolynomial::from_i64s(&coeffs);
        assert_eq!(p.eval_rational(&x), naive_eval(&coeffs, &x), "{p} at {x}");
        if x.is_integer() {
            assert_eq!(Rational::from_integer(p.eval_int(x.numer())), naive_eval(&coeffs, &x));
        }
    }
}
