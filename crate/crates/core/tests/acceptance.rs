//! Acceptance gate. Each test prints one `PASS`/`FAIL` line for its criterion
//! and enforces both exact equality and a wall-clock budget.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;

use common::{full_suite, non_sphere_suite, sd, sphere_suite, susp};
use flagsphere::census::{census_graph, isomorphic, run_census, CensusConfig, CensusRecord};
use flagsphere::generators::{
    cross_polytope_boundary, cycle, icosahedron, random_graph, simplex_boundary, two_points,
};
use flagsphere::homology::{is_generalized_homology_sphere, is_homology_sphere, reduced_homology};
use flagsphere::invariants::{
    charney_davis_value, dehn_sommerville_check, h_polynomial, h_tilde, join_f_multiplicativity_check,
    join_multiplicativity_check, link_derivative_identity, orbifold_euler_record, theorem_identity,
};
use flagsphere::polynomial::rational;
use flagsphere::{Graph, IntPolynomial, Rational, SimplicialComplex};

fn gate(criterion: u32, label: &str, start: Instant, budget: Duration, failures: &[String]) {
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let verdict = if failures.is_empty() && in_time { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {criterion}: {label} ({:.2?} of {:?})", elapsed, budget);
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {criterion}: {} failures", failures.len());
    assert!(in_time, "criterion {criterion}: {elapsed:?} exceeds {budget:?}");
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn int(v: i64) -> Rational {
    rational(v, 1)
}

/// Eulerian numbers `A(n, k)` via `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
/// The h-polynomial of `sd(bd simplex^{n-1})` is the Eulerian polynomial `A_n`.
fn eulerian(n: usize) -> IntPolynomial {
    let mut row = vec![1i64];
    for r in 2..=n {
        let mut next = vec![0i64; r];
        for k in 0..r {
            let same = if k < row.len() { (k as i64 + 1) * row[k] } else { 0 };
            let lower = if k >= 1 { (r - k) as i64 * row[k - 1] } else { 0 };
            next[k] = same + lower;
        }
        row = next;
    }
    p(&row)
}

#[test]
fn criterion_1_icosahedron_chain() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let ico = icosahedron();
    let f = ico.f_vector().unwrap();
    if f.counts() != [12, 30, 20] {
        failures.push(format!("f = {:?}", f.counts()));
    }
    let h = h_polynomial(&ico);
    if h != p(&[1, 9, 9, 1]) {
        failures.push(format!("h = {h}"));
    }
    let ht = h_tilde(&ico).unwrap();
    if ht != p(&[1, 8, 1]) {
        failures.push(format!("h~ = {ht}"));
    }
    let gamma = h.gamma_expand(3).unwrap();
    if gamma.gammas() != [BigInt::from(1), BigInt::from(6)] {
        failures.push(format!("gamma = {:?}", gamma.gammas()));
    }
    let decagon = h_polynomial(&cycle(10).unwrap());
    if ht != decagon {
        failures.push(format!("h~ {ht} differs from decagon h {decagon}"));
    }
    gate(1, "icosahedron f -> h -> h~ -> gamma", start, Duration::from_secs(1), &failures);
}

#[test]
fn criterion_2_vertex_link_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<(String, SimplicialComplex, Rational)> = vec![
        ("icosahedron".into(), icosahedron(), int(6)),
        ("sd bd simplex3".into(), sd(&simplex_boundary(3).unwrap()), int(8)),
    ];
    for m in 4..=12 {
        cases.push((format!("susp C{m}"), susp(&cycle(m).unwrap()), int(m as i64 - 4)));
    }
    // h(sd bd simplex5) = A_6, so the left side is A_6 / (1+t) at -1 with d = 2
    let a6 = eulerian(6);
    assert_eq!(a6, p(&[1, 57, 302, 302, 57, 1]));
    let expected = a6.divide_exact_by_one_plus_t().unwrap().eval_int(&BigInt::from(-1));
    cases.push(("sd bd simplex5".into(), sd(&simplex_boundary(5).unwrap()), Rational::from_integer(expected)));
    for m in 4..=6 {
        for k in 4..=6 {
            let j = cycle(m).unwrap().join(&cycle(k).unwrap()).unwrap();
            // h~(susp K) = h(K), and the h of a join is the product
            let value = (m as i64 - 4) * (k as i64 - 4);
            cases.push((format!("susp(C{m}*C{k})"), susp(&j), int(value)));
        }
    }
    for (name, complex, expected) in &cases {
        match theorem_identity(complex) {
            Ok(w) if w.equal && &w.lhs == expected => {}
            Ok(w) => failures.push(format!("{name}: lhs {} rhs {} expected {expected}", w.lhs, w.rhs)),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    gate(2, &format!("h~ vertex-link identity on {} spheres", cases.len()), start, Duration::from_secs(120), &failures);
}

#[test]
fn criterion_3_link_derivative() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let suite = full_suite();
    for c in &suite {
        if !link_derivative_identity(&c.complex) {
            failures.push(c.name.clone());
        }
    }
    let half = rational(1, 2);
    for seed in 0..200u64 {
        let n = 1 + (seed % 8) as usize;
        let complex = random_graph(n, &half, seed).unwrap().clique_complex();
        if !link_derivative_identity(&complex) {
            failures.push(format!("random clique complex n={n} seed={seed}"));
        }
    }
    gate(3, &format!("sum of link f-polynomials = f' on {} + 200 complexes", suite.len()), start, Duration::from_secs(30), &failures);
}

#[test]
fn criterion_4_dehn_sommerville() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut certified = 0;
    for c in full_suite() {
        let record = orbifold_euler_record(&c.complex);
        if !record.consistent || record.f_at_minus_half * &record.two_pow_m != record.h_at_minus_one {
            failures.push(format!("{}: f(-1/2) != h(-1)/2^m", c.name));
        }
        if is_homology_sphere(&c.complex) {
            certified += 1;
            let even = c.complex.dim() % 2 == 0;
            let f_half = c.complex.f_polynomial().eval_rational(&rational(-1, 2));
            if !dehn_sommerville_check(&c.complex) || (even && f_half != int(0)) {
                failures.push(format!("{}: Dehn-Sommerville fails", c.name));
            }
        }
    }
    gate(4, &format!("Dehn-Sommerville on {certified} certified spheres"), start, Duration::from_secs(30), &failures);
}

#[test]
fn criterion_5_join_multiplicativity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut factors = vec![("S0".to_string(), two_points())];
    for m in 4..=8 {
        factors.push((format!("C{m}"), cycle(m).unwrap()));
    }
    factors.push(("octahedron".into(), cross_polytope_boundary(3).unwrap()));
    let mut pairs = 0;
    for (a, k) in &factors {
        for (b, l) in &factors {
            pairs += 1;
            if !join_multiplicativity_check(k, l).unwrap() {
                failures.push(format!("h of {a}*{b}"));
            }
            if !join_f_multiplicativity_check(k, l).unwrap() {
                failures.push(format!("f of {a}*{b}"));
            }
        }
    }
    gate(5, &format!("h and f multiplicative on {pairs} joins"), start, Duration::from_secs(30), &failures);
}

#[test]
fn criterion_6_homology_certification() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut spheres = vec![
        ("icosahedron".to_string(), icosahedron()),
        ("susp C10".into(), susp(&cycle(10).unwrap())),
        ("sd bd simplex3".into(), sd(&simplex_boundary(3).unwrap())),
        ("sd bd simplex4".into(), sd(&simplex_boundary(4).unwrap())),
    ];
    for n in 1..=5 {
        spheres.push((format!("cross-polytope {n}"), cross_polytope_boundary(n).unwrap()));
    }
    for (name, c) in &spheres {
        let h = reduced_homology(c);
        if !h.is_sphere_pattern() || h.has_torsion() {
            failures.push(format!("{name}: homology {:?}", h.betti_numbers()));
        }
        if !is_generalized_homology_sphere(c) {
            failures.push(format!("{name}: not certified"));
        }
    }
    let rejects = non_sphere_suite();
    for c in &rejects {
        if is_generalized_homology_sphere(&c.complex) {
            failures.push(format!("{}: wrongly certified", c.name));
        }
    }
    gate(6, &format!("{} spheres certified, {} non-spheres rejected", spheres.len(), rejects.len()), start, Duration::from_secs(120), &failures);
}

fn octahedron_graph() -> Graph {
    cross_polytope_boundary(3).unwrap().one_skeleton()
}

/// 6! / |Aut(octahedron)| = 720 / 48.
const LABELED_OCTAHEDRA: usize = 15;

#[test]
fn criterion_7_census() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let (six, five) = pool.install(|| {
        let cfg = |n| CensusConfig { max_vertices: n, dim_filter: Some(2), force: false };
        (run_census(&cfg(6)).unwrap(), run_census(&cfg(5)).unwrap())
    });
    if six.records.len() != LABELED_OCTAHEDRA {
        failures.push(format!("6 vertices: {} survivors, expected {LABELED_OCTAHEDRA}", six.records.len()));
    }
    let oct = octahedron_graph();
    for r in &six.records {
        if !isomorphic(&r.graph(), &oct) {
            failures.push(format!("mask {} is not an octahedron", r.graph_mask));
        }
        if !survivor_passes_identities(r) {
            failures.push(format!("mask {} fails an identity", r.graph_mask));
        }
    }
    if !five.records.is_empty() {
        failures.push(format!("5 vertices: {} survivors, expected none", five.records.len()));
    }
    gate(7, &format!("{} labeled octahedra on 6 vertices, none on 5", six.records.len()), start, Duration::from_secs(300), &failures);
}

fn survivor_passes_identities(r: &CensusRecord) -> bool {
    let complex = r.graph().clique_complex();
    let w = theorem_identity(&complex);
    r.identities_hold()
        && w.is_ok_and(|w| w.equal)
        && link_derivative_identity(&complex)
        && dehn_sommerville_check(&complex)
        && census_graph(r.vertex_count, r.graph_mask, Some(2)).as_ref() == Some(r)
}

#[test]
fn criterion_8_conjecture_consistency() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for c in sphere_suite() {
        if !c.complex.is_flag() || !is_generalized_homology_sphere(&c.complex) {
            continue;
        }
        checked += 1;
        let value = if c.complex.dim() % 2 == 1 {
            charney_davis_value(&c.complex).unwrap()
        } else {
            theorem_identity(&c.complex).unwrap().lhs
        };
        if value.is_negative() {
            failures.push(format!("FINDING {}: {value}", c.name));
        }
    }
    // closed forms: m-gons give m-4, joins of polygons give products
    for m in 4..=12 {
        if charney_davis_value(&cycle(m).unwrap()).unwrap() != int(m as i64 - 4) {
            failures.push(format!("C{m}"));
        }
    }
    for m in 4..=6 {
        for k in 4..=6 {
            let j = cycle(m).unwrap().join(&cycle(k).unwrap()).unwrap();
            if charney_davis_value(&j).unwrap() != int((m as i64 - 4) * (k as i64 - 4)) {
                failures.push(format!("C{m}*C{k}"));
            }
        }
    }
    gate(8, &format!("nonnegative sign on {checked} flag spheres"), start, Duration::from_secs(60), &failures);
}
