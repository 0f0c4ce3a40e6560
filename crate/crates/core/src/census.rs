//! Exhaustive census of flag spheres among clique complexes of small labeled graphs.
//!
//! For each `n` in `1..=max_vertices` every labeled graph on `0..n` is
//! visited in increasing edge-bitmask order (bit layout from
//! [`crate::complex::edge_bit`]). Its clique complex survives when it is a
//! certified generalized homology sphere (and matches the dimension filter).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigint_serde::{format_rational, parse_rational};
use crate::complex::{FVector, Graph};
use crate::error::{Error, Result};
use crate::homology::{is_homology_sphere, LinkCertifier};
use crate::invariants;
use crate::polynomial::{IntPolynomial, Rational};

/// Largest `max_vertices` accepted without `force`.
pub const VERTEX_CAP: usize = 7;
/// Edge bitmasks are `u64`, which fits every graph on up to 11 vertices.
pub const HARD_VERTEX_LIMIT: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_vertices: usize,
    pub dim_filter: Option<isize>,
    pub force: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub vertex_count: usize,
    pub graph_mask: u64,
    pub dim: isize,
    pub is_homology_sphere: bool,
    pub is_ghs: bool,
    pub f_vector: FVector,
    pub h: IntPolynomial,
    pub h_tilde: Option<IntPolynomial>,
    pub gamma: Option<IntPolynomial>,
    #[serde(with = "crate::bigint_serde::rational_opt")]
    pub cd_value: Option<Rational>,
    #[serde(with = "crate::bigint_serde::rational_opt")]
    pub theorem_lhs: Option<Rational>,
    #[serde(with = "crate::bigint_serde::rational_opt")]
    pub theorem_rhs: Option<Rational>,
    pub dehn_sommerville: bool,
    pub link_derivative: bool,
    pub theorem_holds: Option<bool>,
    pub conjectured_sign: bool,
    /// Conjectured sign violated: a counterexample to an open conjecture.
    pub finding: bool,
}

impl CensusRecord {
    pub fn graph(&self) -> Graph {
        Graph::from_mask(self.vertex_count, self.graph_mask)
    }

    /// Every identity that must hold on a survivor does hold.
    pub fn identities_hold(&self) -> bool {
        self.dehn_sommerville && self.link_derivative && self.theorem_holds.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub max_vertices: usize,
    pub dim_filter: Option<isize>,
    pub graphs_examined: u64,
    pub survivors: usize,
    pub findings: usize,
    pub identity_failures: usize,
    pub records: Vec<CensusRecord>,
}

/// Examines one labeled graph; `Some` iff its clique complex survives.
pub fn census_graph(n: usize, mask: u64, dim_filter: Option<isize>) -> Option<CensusRecord> {
    let graph = Graph::from_mask(n, mask);
    // A generalized homology sphere of dimension >= 1 is connected and every
    // vertex link has at least two vertices; in dimension 0 it is two points.
    let deg = graph.degrees();
    let zero_sphere = n == 2 && mask == 0;
    if !zero_sphere && (n < 3 || deg.iter().any(|&d| d < 2) || !graph.is_connected()) {
        return None;
    }
    let complex = graph.clique_complex();
    let dim = complex.dim();
    if dim_filter.is_some_and(|d| d != dim) {
        return None;
    }
    if !is_homology_sphere(&complex) || !LinkCertifier::default().certify(&complex) {
        return None;
    }
    let m = (dim + 1) as usize;
    let h = invariants::h_polynomial(&complex);
    let even = dim % 2 == 0;
    let h_tilde = if even { h.divide_exact_by_one_plus_t().ok() } else { None };
    let gamma = h.gamma_expand(m).ok().map(|g| IntPolynomial::new(g.gammas().to_vec()));
    let cd_value = if even { None } else { invariants::charney_davis_value(&complex).ok() };
    let theorem = if even { invariants::theorem_sides(&complex).ok() } else { None };
    let sign_value = cd_value.as_ref().or(theorem.as_ref().map(|w| &w.lhs));
    let conjectured_sign = sign_value.is_none_or(|v| !v.is_negative());
    Some(CensusRecord {
        vertex_count: n,
        graph_mask: mask,
        dim,
        is_homology_sphere: true,
        is_ghs: true,
        f_vector: complex.f_vector().expect("nonempty"),
        h,
        h_tilde,
        gamma,
        cd_value,
        theorem_lhs: theorem.as_ref().map(|w| w.lhs.clone()),
        theorem_rhs: theorem.as_ref().map(|w| w.rhs.clone()),
        dehn_sommerville: invariants::dehn_sommerville_check(&complex),
        link_derivative: invariants::link_derivative_identity(&complex),
        theorem_holds: theorem.as_ref().map(|w| w.equal),
        conjectured_sign,
        finding: !conjectured_sign,
    })
}

pub fn check_config(config: &CensusConfig) -> Result<()> {
    if config.max_vertices > HARD_VERTEX_LIMIT {
        return Err(Error::CapExceeded { requested: config.max_vertices, cap: HARD_VERTEX_LIMIT });
    }
    if config.max_vertices > VERTEX_CAP && !config.force {
        return Err(Error::CapExceeded { requested: config.max_vertices, cap: VERTEX_CAP });
    }
    Ok(())
}

/// Runs the census on the current rayon pool. Output order is `(n, mask)`
/// regardless of how work is scheduled.
pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    check_config(config)?;
    let mut records = Vec::new();
    let mut graphs_examined = 0u64;
    for n in 1..=config.max_vertices {
        let pairs = n * (n - 1) / 2;
        let total = 1u64 << pairs;
        graphs_examined += total;
        let found: Vec<CensusRecord> = (0..total)
            .into_par_iter()
            .filter_map(|mask| census_graph(n, mask, config.dim_filter))
            .collect();
        records.extend(found);
    }
    Ok(CensusReport {
        max_vertices: config.max_vertices,
        dim_filter: config.dim_filter,
        graphs_examined,
        survivors: records.len(),
        findings: records.iter().filter(|r| r.finding).count(),
        identity_failures: records.iter().filter(|r| !r.identities_hold()).count(),
        records,
    })
}

/// Keeps the first record of each isomorphism class of graphs. Records are
/// bucketed by `(n, degree sequence, f, h)`; inside a bucket graphs are
/// compared by a degree-respecting backtracking search.
pub fn dedup_isomorphic(records: &[CensusRecord]) -> Vec<CensusRecord> {
    type Key = (usize, Vec<usize>, FVector, IntPolynomial);
    let mut buckets: BTreeMap<Key, Vec<Graph>> = BTreeMap::new();
    let mut kept = Vec::new();
    for r in records {
        let g = r.graph();
        let key = (r.vertex_count, g.degree_sequence(), r.f_vector.clone(), r.h.clone());
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().all(|other| !isomorphic(other, &g)) {
            bucket.push(g);
            kept.push(r.clone());
        }
    }
    kept
}

/// Brute-force graph isomorphism for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edges().len() != b.edges().len() {
        return false;
    }
    let adj = |g: &Graph| {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in g.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    };
    let (adj_a, adj_b) = (adj(a), adj(b));
    let (deg_a, deg_b) = (a.degrees(), b.degrees());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
        adj_a: &[Vec<bool>],
        adj_b: &[Vec<bool>],
        deg_a: &[usize],
        deg_b: &[usize],
    ) -> bool {
        let n = map.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || deg_a[k] != deg_b[cand] {
                continue;
            }
            if (0..k).any(|j| adj_a[k][j] != adj_b[cand][map[j]]) {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if extend(k + 1, map, used, adj_a, adj_b, deg_a, deg_b) {
                return true;
            }
            used[cand] = false;
        }
        false
    }

    extend(0, &mut map, &mut used, &adj_a, &adj_b, &deg_a, &deg_b)
}

fn join_coeffs(p: &IntPolynomial) -> String {
    p.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
}

fn split_coeffs(text: &str) -> std::result::Result<IntPolynomial, String> {
    text.split_whitespace()
        .map(|t| t.parse::<BigInt>().map_err(|e| format!("bad integer {t:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(IntPolynomial::new)
}

/// Flat CSV row. Coefficient lists are space-separated; absent values are empty.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    vertex_count: usize,
    graph_mask: u64,
    dim: isize,
    is_homology_sphere: bool,
    is_ghs: bool,
    f_vector: String,
    h: String,
    h_tilde: String,
    gamma: String,
    cd_value: String,
    theorem_lhs: String,
    theorem_rhs: String,
    dehn_sommerville: bool,
    link_derivative: bool,
    theorem_holds: String,
    conjectured_sign: bool,
    finding: bool,
}

fn opt_rational(r: &Option<Rational>) -> String {
    r.as_ref().map(format_rational).unwrap_or_default()
}

fn parse_opt<T>(text: &str, f: impl Fn(&str) -> std::result::Result<T, String>) -> std::result::Result<Option<T>, String> {
    if text.is_empty() { Ok(None) } else { f(text).map(Some) }
}

pub fn records_to_csv(records: &[CensusRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        let row = CsvRow {
            vertex_count: r.vertex_count,
            graph_mask: r.graph_mask,
            dim: r.dim,
            is_homology_sphere: r.is_homology_sphere,
            is_ghs: r.is_ghs,
            f_vector: r.f_vector.counts().iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            h: join_coeffs(&r.h),
            h_tilde: r.h_tilde.as_ref().map(join_coeffs).unwrap_or_default(),
            gamma: r.gamma.as_ref().map(join_coeffs).unwrap_or_default(),
            cd_value: opt_rational(&r.cd_value),
            theorem_lhs: opt_rational(&r.theorem_lhs),
            theorem_rhs: opt_rational(&r.theorem_rhs),
            dehn_sommerville: r.dehn_sommerville,
            link_derivative: r.link_derivative,
            theorem_holds: r.theorem_holds.map(|b| b.to_string()).unwrap_or_default(),
            conjectured_sign: r.conjectured_sign,
            finding: r.finding,
        };
        writer.serialize(row).expect("in-memory csv write");
    }
    if records.is_empty() {
        // header only
        let header = "vertex_count,graph_mask,dim,is_homology_sphere,is_ghs,f_vector,h,h_tilde,gamma,\
                      cd_value,theorem_lhs,theorem_rhs,dehn_sommerville,link_derivative,theorem_holds,\
                      conjectured_sign,finding\n";
        return header.to_string();
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

pub fn records_from_csv(text: &str) -> std::result::Result<Vec<CensusRecord>, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in reader.deserialize::<CsvRow>() {
        let row = row.map_err(|e| e.to_string())?;
        let f_vector = row
            .f_vector
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| e.to_string()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        out.push(CensusRecord {
            vertex_count: row.vertex_count,
            graph_mask: row.graph_mask,
            dim: row.dim,
            is_homology_sphere: row.is_homology_sphere,
            is_ghs: row.is_ghs,
            f_vector: FVector(f_vector),
            h: split_coeffs(&row.h)?,
            h_tilde: parse_opt(&row.h_tilde, split_coeffs)?,
            gamma: parse_opt(&row.gamma, split_coeffs)?,
            cd_value: parse_opt(&row.cd_value, parse_rational)?,
            theorem_lhs: parse_opt(&row.theorem_lhs, parse_rational)?,
            theorem_rhs: parse_opt(&row.theorem_rhs, parse_rational)?,
            dehn_sommerville: row.dehn_sommerville,
            link_derivative: row.link_derivative,
            theorem_holds: parse_opt(&row.theorem_holds, |t| t.parse::<bool>().map_err(|e| e.to_string()))?,
            conjectured_sign: row.conjectured_sign,
            finding: row.finding,
        });
    }
    Ok(out)
}

/// One human-readable line per record.
pub fn record_line(r: &CensusRecord) -> String {
    let fv: Vec<String> = r.f_vector.counts().iter().map(u64::to_string).collect();
    let mut line = format!(
        "n={} mask={:#x} dim={} f=({}) h=({})",
        r.vertex_count,
        r.graph_mask,
        r.dim,
        fv.join(","),
        join_coeffs(&r.h).replace(' ', ",")
    );
    if let Some(g) = &r.gamma {
        line.push_str(&format!(" gamma=({})", join_coeffs(g).replace(' ', ",")));
    }
    if let Some(cd) = &r.cd_value {
        line.push_str(&format!(" cd={}", format_rational(cd)));
    }
    if let (Some(l), Some(rh)) = (&r.theorem_lhs, &r.theorem_rhs) {
        line.push_str(&format!(" lhs={} rhs={}", format_rational(l), format_rational(rh)));
    }
    line.push_str(if r.identities_hold() { " identities=pass" } else { " identities=FAIL" });
    if r.finding {
        line.push_str(" FINDING");
    }
    line
}
