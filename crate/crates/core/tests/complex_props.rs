mod common;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use common::{sd, susp};
use flagsphere::generators::{cycle, icosahedron, random_graph, simplex_boundary, two_points};
use flagsphere::invariants::theorem_constant;
use flagsphere::polynomial::rational;
use flagsphere::{Graph, Rational, SimplicialComplex};

fn random_graphs(count: u64) -> impl Iterator<Item = Graph> {
    let half = rational(1, 2);
    (0..count).map(move |seed| random_graph(1 + (seed % 8) as usize, &half, seed).unwrap())
}

#[test]
fn constructions_stay_downward_closed() {
    let suite = common::full_suite();
    for c in &suite {
        assert!(c.complex.is_downward_closed(), "{}", c.name);
        for v in 0..c.complex.vertex_count() {
            assert!(c.complex.link(v).unwrap().complex.is_downward_closed());
        }
    }
    let small: Vec<_> = suite.iter().filter(|c| c.complex.num_faces() < 60).collect();
    for a in &small {
        assert!(a.complex.barycentric_subdivision().unwrap().is_downward_closed());
        assert!(a.complex.suspension().unwrap().is_downward_closed());
        for b in &small {
            assert!(a.complex.join(&b.complex).unwrap().is_downward_closed());
            assert!(a.complex.disjoint_union(&b.complex).is_downward_closed());
        }
    }
    for g in random_graphs(100) {
        assert!(g.clique_complex().is_downward_closed());
    }
}

#[test]
fn link_in_join_is_join_of_link() {
    let ks = [cycle(5).unwrap(), icosahedron(), two_points()];
    let ls = [cycle(4).unwrap(), two_points()];
    for k in &ks {
        for l in &ls {
            let joined = k.join(l).unwrap();
            for v in 0..k.vertex_count() {
                let got = joined.link(v).unwrap().complex;
                match k.link(v).unwrap().complex.join(l) {
                    Ok(e) => assert_eq!(got, e),
                    // the void link joins to L itself
                    Err(_) => assert_eq!(&got, l),
                }
            }
            for w in 0..l.vertex_count() {
                // K's vertices stay first after relabelling
                let expected = k.join(&l.link(w).unwrap().complex);
                let got = joined.link(k.vertex_count() + w).unwrap().complex;
                match expected {
                    Ok(e) => assert_eq!(got, e),
                    Err(_) => assert_eq!(&got, k),
                }
            }
        }
    }
}

#[test]
fn clique_complex_is_idempotent() {
    for g in random_graphs(200) {
        let c = g.clique_complex();
        assert!(c.is_flag());
        assert_eq!(c.one_skeleton().clique_complex(), c);
    }
}

#[test]
fn subdivision_preserves_euler_characteristic_and_is_flag() {
    let mut inputs: Vec<SimplicialComplex> = common::full_suite()
        .into_iter()
        .map(|n| n.complex)
        .filter(|c| c.num_faces() < 200)
        .collect();
    inputs.extend(random_graphs(40).map(|g| g.clique_complex()).filter(|c| c.num_faces() < 200));
    for c in inputs {
        let s = c.barycentric_subdivision().unwrap();
        assert_eq!(s.euler_characteristic(), c.euler_characteristic());
        assert_eq!(s.f_vector().unwrap().counts()[0] as usize, c.num_faces());
        assert!(s.is_flag());
    }
}

#[test]
fn facets_generate_the_same_complex() {
    let mut rng = SplitMix64::seed_from_u64(5);
    for c in common::full_suite() {
        let mut facets = c.complex.facets();
        // shuffle and add redundant subfaces
        for i in (1..facets.len()).rev() {
            facets.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
        }
        let extra: Vec<Vec<usize>> = facets.iter().map(|f| f[..1].to_vec()).collect();
        facets.extend(extra);
        let rebuilt = SimplicialComplex::from_facets(c.complex.vertex_count(), &facets).unwrap();
        assert_eq!(rebuilt, c.complex, "{}", c.name);
    }
}

// Brute-force determination of the vertex-link constant with plain i64
// arithmetic, sharing no code with the library beyond face enumeration.

fn faces_as_sets(c: &SimplicialComplex) -> Vec<BTreeSet<usize>> {
    c.iter_faces().map(|f| f.iter().copied().collect()).collect()
}

/// `h(t) = sum_i f_{i-1} t^i (1-t)^(m-i)` as i64 coefficients.
fn h_from_counts(counts: &[i64]) -> Vec<i64> {
    let m = counts.len() - 1;
    let mut h = vec![0i64; m + 1];
    for (i, &f) in counts.iter().enumerate() {
        // expand (1-t)^(m-i)
        let mut binom = 1i64;
        for j in 0..=m - i {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            h[i + j] += f * sign * binom;
            binom = binom * (m - i - j) as i64 / (j as i64 + 1);
        }
    }
    h
}

/// Counts by size, with the empty face first.
fn counts_by_size(faces: &[BTreeSet<usize>]) -> Vec<i64> {
    let top = faces.iter().map(BTreeSet::len).max().unwrap_or(0);
    let mut counts = vec![0i64; top + 1];
    counts[0] = 1;
    for f in faces {
        counts[f.len()] += 1;
    }
    counts
}

fn at_minus_one(p: &[i64]) -> i64 {
    p.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum()
}

fn brute_force_constant(c: &SimplicialComplex) -> Rational {
    let faces = faces_as_sets(c);
    let d = (c.dim() / 2) as u32;
    let sign = (-1i64).pow(d);
    let h = h_from_counts(&counts_by_size(&faces));
    // h~(-1) by long division by (1+t)
    let mut quotient = vec![0i64; h.len() - 1];
    let mut carry = 0i64;
    for i in 0..quotient.len() {
        quotient[i] = h[i] - carry;
        carry = quotient[i];
    }
    assert_eq!(h[h.len() - 1], carry, "h must be divisible by 1+t");
    let lhs = sign * at_minus_one(&quotient);
    let mut link_sum = 0i64;
    for v in 0..c.vertex_count() {
        let link: Vec<BTreeSet<usize>> = faces
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&u| u != v).collect::<BTreeSet<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        link_sum += sign * at_minus_one(&h_from_counts(&counts_by_size(&link)));
    }
    assert!(link_sum != 0);
    rational(lhs, link_sum)
}

#[test]
fn vertex_link_constant_is_one_half() {
    let cases = [
        ("icosahedron", icosahedron()),
        ("susp C10", susp(&cycle(10).unwrap())),
        ("sd bd simplex3", sd(&simplex_boundary(3).unwrap())),
        ("susp C7", susp(&cycle(7).unwrap())),
    ];
    for (name, c) in cases {
        let constant = brute_force_constant(&c);
        assert_eq!(constant, theorem_constant(), "{name}");
        assert!(constant.is_positive() && !constant.is_zero());
    }
}

#[test]
fn random_graph_matches_golden() {
    let golden: serde_json::Value =
        serde_json::from_str(include_str!("golden/random_graph_8_half_42.json")).unwrap();
    let g = random_graph(8, &rational(1, 2), 42).unwrap();
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    assert_eq!(serde_json::to_value(&edges).unwrap(), golden["edges"]);
    assert_eq!(g.vertex_count() as u64, golden["vertex_count"].as_u64().unwrap());
}
