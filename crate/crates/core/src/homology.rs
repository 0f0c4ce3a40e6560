//! Reduced integer homology and (generalized) homology sphere certification.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::snf::{invariant_factors, SparseIntMatrix};

/// Reduced homology group `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Torsion coefficients, each greater than 1 and dividing the next.
    #[serde(with = "crate::bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

/// Reduced homology in dimensions `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// Sphere pattern: free rank one on top, zero below, no torsion.
    pub fn is_sphere_pattern(&self) -> bool {
        let Some((top, rest)) = self.groups.split_last() else { return false };
        top.betti == 1
            && top.torsion.is_empty()
            && rest.iter().all(|g| g.betti == 0 && g.torsion.is_empty())
    }
}

/// Boundary map from `i`-faces to `(i-1)`-faces, rows and columns in
/// canonical face order. Dropping vertex `k` of a face carries sign `(-1)^k`.
pub fn boundary_matrix(complex: &SimplicialComplex, i: usize) -> Result<SparseIntMatrix> {
    if i < 1 || i as isize > complex.dim() {
        return Err(Error::DimensionOutOfRange { dim: i, max: complex.dim() });
    }
    let lower = complex.faces(i - 1);
    let columns = complex
        .faces(i)
        .iter()
        .map(|face| {
            (0..face.len())
                .map(|skip| {
                    let sub: Vec<usize> = face
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    let row = complex.face_index(&sub).expect("complex is downward closed");
                    (row, if skip % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect();
    Ok(SparseIntMatrix::new(lower.len(), complex.faces(i).len(), columns))
}

/// Reduced integer homology. The augmentation `C_0 -> Z` plays the role of
/// the boundary in dimension 0.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    let dim = complex.dim();
    if dim < 0 {
        return HomologyProfile { groups: Vec::new() };
    }
    let top = dim as usize;
    // factors[i] = invariant factors of the boundary out of dimension i
    let mut factors: Vec<Vec<BigInt>> = Vec::with_capacity(top + 2);
    factors.push(vec![BigInt::one()]);
    for i in 1..=top {
        let matrix = boundary_matrix(complex, i).expect("dimension in range");
        factors.push(invariant_factors(&matrix));
    }
    factors.push(Vec::new());
    let groups = (0..=top)
        .map(|i| {
            let chains = complex.faces(i).len();
            let betti = chains - factors[i].len() - factors[i + 1].len();
            let torsion = factors[i + 1].iter().filter(|d| !d.is_one()).cloned().collect();
            HomologyGroup { betti, torsion }
        })
        .collect();
    HomologyProfile { groups }
}

/// True iff the reduced homology is that of a sphere of the complex's own
/// dimension. The void complex counts as the (-1)-sphere.
pub fn is_homology_sphere(complex: &SimplicialComplex) -> bool {
    if complex.is_void() {
        return true;
    }
    // cheap Euler characteristic gate before any elimination
    let d = complex.dim();
    if complex.euler_characteristic() != 1 + if d % 2 == 0 { 1 } else { -1 } {
        return false;
    }
    reduced_homology(complex).is_sphere_pattern()
}

/// Every facet has the top dimension.
pub fn is_pure(complex: &SimplicialComplex) -> bool {
    let top = (complex.dim() + 1) as usize;
    complex.facets().iter().all(|f| f.len() == top)
}

/// Homology sphere whose every nonempty face link is a homology sphere of
/// the complementary dimension.
pub fn is_generalized_homology_sphere(complex: &SimplicialComplex) -> bool {
    LinkCertifier::default().certify(complex)
}

/// Memoizes link verdicts keyed by the canonical storage of the relabelled
/// link; symmetric complexes repeat links heavily.
#[derive(Default)]
pub struct LinkCertifier {
    memo: HashMap<SimplicialComplex, bool>,
}

impl LinkCertifier {
    pub fn certify(&mut self, complex: &SimplicialComplex) -> bool {
        if !self.is_sphere(complex) {
            return false;
        }
        let dim = complex.dim();
        complex.iter_faces().all(|face| {
            let link = complex.link_of_face(face).expect("face of the complex").complex;
            link.dim() == dim - face.len() as isize && self.is_sphere(&link)
        })
    }

    fn is_sphere(&mut self, complex: &SimplicialComplex) -> bool {
        if let Some(&known) = self.memo.get(complex) {
            return known;
        }
        let verdict = is_homology_sphere(complex);
        self.memo.insert(complex.clone(), verdict);
        verdict
    }
}
