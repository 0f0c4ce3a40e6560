//! Finite abstract simplicial complexes with canonical face storage.
//!
//! Faces are strictly increasing vertex lists, bucketed by dimension and
//! sorted lexicographically inside each bucket. Two complexes are equal iff
//! their canonical storage is equal. The empty face is implicit.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

pub type Vertex = usize;
pub type Face = Vec<Vertex>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `faces[i]` holds the `i`-dimensional faces in lexicographic order.
    faces: Vec<Vec<Face>>,
}

/// Face counts `(f_0, f_1, ..., f_dim)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }
}

/// A link, relabelled densely. `vertices[i]` is the original label of the
/// link's vertex `i`; the map is order preserving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub complex: SimplicialComplex,
    pub vertices: Vec<Vertex>,
}

fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

/// Every nonempty subset of a sorted face, each sorted.
fn nonempty_subsets(face: &[Vertex]) -> impl Iterator<Item = Face> + '_ {
    let k = face.len();
    assert!(k < usize::BITS as usize, "face too large to close downward");
    (1usize..(1 << k)).map(move |mask| {
        face.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

impl SimplicialComplex {
    /// The complex whose only face is the empty face (dimension -1).
    pub fn void() -> Self {
        Self { vertex_count: 0, faces: Vec::new() }
    }

    /// Downward closure of `facets` on the vertex set `0..vertex_count`.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<Vertex>]) -> Result<Self> {
        if facets.is_empty() {
            return if vertex_count == 0 { Ok(Self::void()) } else { Err(Error::EmptyInput) };
        }
        let mut closure: HashSet<Face> = HashSet::new();
        for facet in facets {
            if facet.is_empty() {
                return Err(Error::EmptyInput);
            }
            if let Some(&vertex) = facet.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidVertex { vertex, vertex_count });
            }
            let mut facet = facet.clone();
            facet.sort_unstable();
            facet.dedup();
            if closure.contains(&facet) {
                continue;
            }
            closure.extend(nonempty_subsets(&facet));
        }
        let mut used = vec![false; vertex_count];
        for face in closure.iter().filter(|f| f.len() == 1) {
            used[face[0]] = true;
        }
        if let Some(vertex) = used.iter().position(|u| !u) {
            return Err(Error::UnusedVertex { vertex });
        }
        Ok(Self::from_closed_faces(vertex_count, closure))
    }

    /// Builds canonical storage from a face family that is already downward
    /// closed, uses every vertex, and has each face sorted.
    pub(crate) fn from_closed_faces(
        vertex_count: usize,
        faces: impl IntoIterator<Item = Face>,
    ) -> Self {
        let mut buckets: Vec<Vec<Face>> = Vec::new();
        for face in faces {
            debug_assert!(!face.is_empty());
            debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
            let d = face.len() - 1;
            if buckets.len() <= d {
                buckets.resize_with(d + 1, Vec::new);
            }
            buckets[d].push(face);
        }
        for bucket in &mut buckets {
            bucket.sort_unstable();
            bucket.dedup();
        }
        let complex = Self { vertex_count, faces: buckets };
        debug_assert_eq!(complex.faces(0).len(), vertex_count);
        complex
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension; `-1` for the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// The `i`-dimensional faces in canonical order.
    pub fn faces(&self, i: usize) -> &[Face] {
        self.faces.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All nonempty faces, dimension by dimension.
    pub fn iter_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Index of `face` within its dimension bucket.
    pub fn face_index(&self, face: &[Vertex]) -> Option<usize> {
        let bucket = self.faces.get(face.len().checked_sub(1)?)?;
        bucket.binary_search_by(|f| f.as_slice().cmp(face)).ok()
    }

    pub fn contains(&self, face: &[Vertex]) -> bool {
        face.is_empty() || self.face_index(face).is_some()
    }

    /// Maximal faces, sorted lexicographically as vertex lists.
    pub fn facets(&self) -> Vec<Face> {
        let mut facets = Vec::new();
        for d in 0..self.faces.len() {
            let covered: HashSet<&[Vertex]> = self
                .faces(d + 1)
                .iter()
                .flat_map(|f| (0..f.len()).map(move |skip| (f, skip)))
                .filter_map(|(f, skip)| self.faces(d).get(self.drop_index(f, skip)?))
                .map(Vec::as_slice)
                .collect();
            facets.extend(self.faces(d).iter().filter(|f| !covered.contains(f.as_slice())).cloned());
        }
        facets.sort_unstable();
        facets
    }

    fn drop_index(&self, face: &[Vertex], skip: usize) -> Option<usize> {
        let sub: Face = face
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        self.face_index(&sub)
    }

    /// Every codimension-one subface of every stored face is stored.
    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().skip(1).flatten().all(|f| {
            (0..f.len()).all(|skip| self.drop_index(f, skip).is_some())
        }) && self.faces(0).iter().all(|f| f[0] < self.vertex_count)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::EmptyComplex);
        }
        Ok(FVector(self.faces.iter().map(|b| b.len() as u64).collect()))
    }

    /// `1 + sum_i f_i t^(i+1)`; the constant term counts the empty face.
    /// The void complex has f-polynomial `1`.
    pub fn f_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![1i64.into()];
        coeffs.extend(self.faces.iter().map(|b| b.len().into()));
        IntPolynomial::new(coeffs)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    pub fn link(&self, v: Vertex) -> Result<Link> {
        if v >= self.vertex_count {
            return Err(Error::NotAVertex { vertex: v });
        }
        self.link_of_face(&[v])
    }

    /// Link of an arbitrary face: all `tau` disjoint from `sigma` with
    /// `sigma ∪ tau` a face. The link of the empty face is the complex itself.
    pub fn link_of_face(&self, sigma: &[Vertex]) -> Result<Link> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        if !self.contains(&sigma) {
            return Err(Error::NotAFace { face: sigma });
        }
        let rests: Vec<Face> = self
            .faces
            .iter()
            .skip(sigma.len())
            .flatten()
            .filter(|f| is_sorted_subset(&sigma, f))
            .map(|f| f.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect())
            .collect();
        let mut vertices: Vec<Vertex> = rests.iter().filter(|r| r.len() == 1).map(|r| r[0]).collect();
        vertices.sort_unstable();
        let relabel: HashMap<Vertex, Vertex> =
            vertices.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let complex = Self::from_closed_faces(
            vertices.len(),
            rests.into_iter().map(|r| r.iter().map(|v| relabel[v]).collect()),
        );
        Ok(Link { complex, vertices })
    }

    /// Join on the disjoint vertex union; `other`'s vertices are shifted by
    /// `self.vertex_count()`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.is_void() || other.is_void() {
            return Err(Error::EmptyComplex);
        }
        let shift = self.vertex_count;
        let empty: Face = Vec::new();
        let left: Vec<&Face> = std::iter::once(&empty).chain(self.iter_faces()).collect();
        let right: Vec<Face> = std::iter::once(Vec::new())
            .chain(other.iter_faces().map(|f| f.iter().map(|v| v + shift).collect()))
            .collect();
        let mut faces = Vec::with_capacity(left.len() * right.len());
        for s in &left {
            for t in &right {
                if s.is_empty() && t.is_empty() {
                    continue;
                }
                let mut f = Vec::with_capacity(s.len() + t.len());
                f.extend_from_slice(s);
                f.extend_from_slice(t);
                faces.push(f);
            }
        }
        Ok(Self::from_closed_faces(shift + other.vertex_count, faces))
    }

    /// Join with two isolated points; the apexes are vertices 0 and 1.
    pub fn suspension(&self) -> Result<Self> {
        let two_points = Self::from_closed_faces(2, vec![vec![0], vec![1]]);
        two_points.join(self)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count;
        let faces = self
            .iter_faces()
            .cloned()
            .chain(other.iter_faces().map(|f| f.iter().map(|v| v + shift).collect()));
        Self::from_closed_faces(shift + other.vertex_count, faces)
    }

    pub fn one_skeleton(&self) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: self.faces(1).iter().map(|e| (e[0], e[1])).collect(),
        }
    }

    /// True iff the complex is the clique complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        self.one_skeleton().clique_complex() == *self
    }

    /// Vertices are the nonempty faces (in canonical order: by dimension,
    /// then lexicographically); faces are chains under inclusion.
    pub fn barycentric_subdivision(&self) -> Result<Self> {
        if self.is_void() {
            return Err(Error::EmptyComplex);
        }
        let index: HashMap<&[Vertex], usize> = self
            .iter_faces()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut chains: HashSet<Face> = HashSet::new();
        let mut order = Vec::new();
        for facet in self.facets() {
            order.clear();
            order.extend(facet.iter().copied());
            for_each_permutation(&mut order, &mut |perm| {
                let mut prefix: Face = Vec::with_capacity(perm.len());
                let mut chain: Face = Vec::with_capacity(perm.len());
                for &v in perm {
                    let pos = prefix.binary_search(&v).unwrap_err();
                    prefix.insert(pos, v);
                    chain.push(index[prefix.as_slice()]);
                }
                if !chains.contains(&chain) {
                    chains.extend(nonempty_subsets(&chain));
                }
            });
        }
        Ok(Self::from_closed_faces(index.len(), chains))
    }

    /// Vertex degrees in the 1-skeleton, sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.one_skeleton().degree_sequence()
    }
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [Vertex], f: &mut impl FnMut(&[Vertex])) {
    fn go(k: usize, items: &mut [Vertex], f: &mut impl FnMut(&[Vertex])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            go(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        go(k - 1, items, f);
    }
    let k = items.len();
    go(k, items, f);
}

/// Simple undirected graph on `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted pairs `(u, v)` with `u < v`.
    edges: Vec<(Vertex, Vertex)>,
}

/// Position of edge `(u, v)`, `u < v`, in the lexicographic order of all
/// pairs of `0..n`: `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn edge_bit(n: usize, u: Vertex, v: Vertex) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if let Some(vertex) = [a, b].into_iter().find(|&x| x >= vertex_count) {
                return Err(Error::InvalidVertex { vertex, vertex_count });
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self { vertex_count, edges: canon })
    }

    /// Decodes a graph from an edge bitmask in [`edge_bit`] order.
    pub fn from_mask(vertex_count: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                if mask >> edge_bit(vertex_count, u, v) & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Self { vertex_count, edges }
    }

    /// Edge bitmask in [`edge_bit`] order; `None` if there are more than 64 pairs.
    pub fn to_mask(&self) -> Option<u64> {
        let n = self.vertex_count;
        if n * n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        Some(self.edges.iter().fold(0u64, |m, &(u, v)| m | 1 << edge_bit(n, u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The flag complex whose faces are exactly the cliques of the graph.
    pub fn clique_complex(&self) -> SimplicialComplex {
        let n = self.vertex_count;
        let words = n.div_ceil(64);
        let mut adj = vec![vec![0u64; words]; n];
        for &(u, v) in &self.edges {
            adj[u][v / 64] |= 1 << (v % 64);
            adj[v][u / 64] |= 1 << (u % 64);
        }
        let mut faces = Vec::new();
        let mut clique = Vec::new();
        for v in 0..n {
            let mut cand = adj[v].clone();
            clear_up_to(&mut cand, v);
            clique.push(v);
            extend_cliques(&adj, &mut clique, &cand, &mut faces);
            clique.pop();
        }
        SimplicialComplex::from_closed_faces(n, faces)
    }
}

/// Clears bits `0..=v`.
fn clear_up_to(bits: &mut [u64], v: usize) {
    for (w, word) in bits.iter_mut().enumerate() {
        let lo = w * 64;
        if v >= lo + 63 {
            *word = 0;
        } else if v >= lo {
            *word &= !((1u64 << (v - lo + 1)) - 1);
        }
    }
}

fn extend_cliques(adj: &[Vec<u64>], clique: &mut Vec<Vertex>, cand: &[u64], out: &mut Vec<Face>) {
    out.push(clique.clone());
    for (w, &word) in cand.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let v = w * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            let mut next: Vec<u64> = cand.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
            clear_up_to(&mut next, v);
            clique.push(v);
            extend_cliques(adj, clique, &next, out);
            clique.pop();
        }
    }
}
