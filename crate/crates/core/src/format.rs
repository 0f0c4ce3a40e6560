//! The complex file format: a JSON document with `vertex_count` and `facets`.
//!
//! ```json
//! {
//!   "vertex_count": 3,
//!   "facets": [
//!     [0, 1],
//!     [0, 2],
//!     [1, 2]
//!   ]
//! }
//! ```
//!
//! Whitespace is insignificant on input; any family of generating faces is
//! accepted. Output is canonical: the maximal faces only, sorted
//! lexicographically, one per line.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    SimplicialComplex::from_facets(file.vertex_count, &file.facets)
}

pub fn to_canonical_text(complex: &SimplicialComplex) -> String {
    let facets = complex.facets();
    let mut out = format!("{{\n  \"vertex_count\": {},\n  \"facets\": [", complex.vertex_count());
    if facets.is_empty() {
        out.push_str("]\n}\n");
        return out;
    }
    out.push('\n');
    for (k, facet) in facets.iter().enumerate() {
        let body: Vec<String> = facet.iter().map(ToString::to_string).collect();
        out.push_str("    [");
        out.push_str(&body.join(", "));
        out.push(']');
        if k + 1 < facets.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn canonical_round_trip() {
        for c in [
            generators::icosahedron(),
            generators::two_points(),
            generators::cross_polytope_boundary(3).unwrap(),
            SimplicialComplex::void(),
        ] {
            let text = to_canonical_text(&c);
            assert_eq!(parse_complex(&text).unwrap(), c);
            assert_eq!(to_canonical_text(&parse_complex(&text).unwrap()), text);
        }
    }

    #[test]
    fn hollow_triangle_text() {
        let c = parse_complex(r#"{"facets": [[2,1],[0,1],[0,2]], "vertex_count": 3}"#).unwrap();
        assert_eq!(
            to_canonical_text(&c),
            "{\n  \"vertex_count\": 3,\n  \"facets\": [\n    [0, 1],\n    [0, 2],\n    [1, 2]\n  ]\n}\n"
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_complex("{\n  \"vertex_count\": 3,\n  \"facets\": [[0, 1],, ]\n}") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 21)),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_complex("{\"vertex_count\": 2}"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_complex("{\"vertex_count\": 2, \"facets\": [[0, 5]]}"),
            Err(Error::InvalidVertex { vertex: 5, .. })
        ));
    }
}
