#![allow(dead_code)]

use flagsphere::generators::{cross_polytope_boundary, cycle, icosahedron, simplex_boundary, two_points};
use flagsphere::SimplicialComplex;

pub struct Named {
    pub name: String,
    pub complex: SimplicialComplex,
}

fn named(name: impl Into<String>, complex: SimplicialComplex) -> Named {
    Named { name: name.into(), complex }
}

pub fn sd(c: &SimplicialComplex) -> SimplicialComplex {
    c.barycentric_subdivision().unwrap()
}

pub fn susp(c: &SimplicialComplex) -> SimplicialComplex {
    c.suspension().unwrap()
}

pub fn solid_triangle() -> SimplicialComplex {
    SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap()
}

/// Spheres used throughout the acceptance and property tests.
pub fn sphere_suite() -> Vec<Named> {
    let mut out = vec![
        named("S0", two_points()),
        named("icosahedron", icosahedron()),
        named("susp C10", susp(&cycle(10).unwrap())),
        named("sd bd simplex3", sd(&simplex_boundary(3).unwrap())),
        named("sd bd simplex4", sd(&simplex_boundary(4).unwrap())),
        named("bd simplex3", simplex_boundary(3).unwrap()),
        named("bd simplex4", simplex_boundary(4).unwrap()),
    ];
    for m in 3..=12 {
        out.push(named(format!("C{m}"), cycle(m).unwrap()));
        if m >= 4 {
            out.push(named(format!("susp C{m}"), susp(&cycle(m).unwrap())));
        }
    }
    for n in 1..=5 {
        out.push(named(format!("cross-polytope {n}"), cross_polytope_boundary(n).unwrap()));
    }
    for m in 4..=6 {
        for k in m..=6 {
            let j = cycle(m).unwrap().join(&cycle(k).unwrap()).unwrap();
            out.push(named(format!("susp(C{m}*C{k})"), susp(&j)));
            out.push(named(format!("C{m}*C{k}"), j));
        }
    }
    out
}

/// Non-spheres: solid simplices, disjoint unions, wedges.
pub fn non_sphere_suite() -> Vec<Named> {
    let pent = cycle(5).unwrap();
    let oct = cross_polytope_boundary(3).unwrap();
    vec![
        named("solid triangle", solid_triangle()),
        named("C5 + C5", pent.disjoint_union(&pent)),
        named("oct + oct", oct.disjoint_union(&oct)),
        named("edge", SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap()),
        named("point", SimplicialComplex::from_facets(1, &[vec![0]]).unwrap()),
    ]
}

pub fn full_suite() -> Vec<Named> {
    let mut all = sphere_suite();
    all.extend(non_sphere_suite());
    all
}
