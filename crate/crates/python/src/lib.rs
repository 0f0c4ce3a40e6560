//! Python bindings. Integers come back as Python `int`, exact rationals as
//! `fractions.Fraction`, reports as JSON strings; library errors raise
//! `ValueError`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use flagsphere::census::{run_census, CensusConfig};
use flagsphere::format::{parse_complex, to_canonical_text};
use flagsphere::report::{self, parse_suites};
use flagsphere::{generators, homology, invariants, Graph, Rational, SimplicialComplex};

fn err(e: flagsphere::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

#[pyclass(name = "SimplicialComplex", module = "flagsphere", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyComplex {
    inner: SimplicialComplex,
}

impl From<SimplicialComplex> for PyComplex {
    fn from(inner: SimplicialComplex) -> Self {
        Self { inner }
    }
}

/// Both sides of the vertex-link identity for h-tilde.
#[pyclass(name = "TheoremWitness", module = "flagsphere", frozen, get_all)]
pub struct PyTheoremWitness {
    lhs: Rational,
    rhs: Rational,
    link_sum: Rational,
    equal: bool,
}

#[pymethods]
impl PyTheoremWitness {
    fn __repr__(&self) -> String {
        format!("TheoremWitness(lhs={}, rhs={}, link_sum={}, equal={})", self.lhs, self.rhs, self.link_sum, self.equal)
    }
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        SimplicialComplex::from_facets(vertex_count, &facets).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_complex(text).map(Self::from).map_err(err)
    }

    fn to_json(&self) -> String {
        to_canonical_text(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn dim(&self) -> isize {
        self.inner.dim()
    }

    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets()
    }

    fn f_vector(&self) -> PyResult<Vec<u64>> {
        self.inner.f_vector().map(|f| f.0).map_err(err)
    }

    fn f_polynomial(&self) -> Vec<BigInt> {
        self.inner.f_polynomial().into_coeffs()
    }

    fn h_polynomial(&self) -> Vec<BigInt> {
        invariants::h_polynomial(&self.inner).into_coeffs()
    }

    fn h_tilde(&self) -> PyResult<Vec<BigInt>> {
        invariants::h_tilde(&self.inner).map(|p| p.into_coeffs()).map_err(err)
    }

    fn gamma_vector(&self) -> PyResult<Vec<BigInt>> {
        invariants::gamma_vector(&self.inner).map(|g| g.gammas().to_vec()).map_err(err)
    }

    fn charney_davis_value(&self) -> PyResult<Rational> {
        invariants::charney_davis_value(&self.inner).map_err(err)
    }

    /// `f(-1/2)`.
    fn orbifold_euler(&self) -> Rational {
        invariants::orbifold_euler(&self.inner)
    }

    /// Certifies the complex first; raises on non-spheres and odd dimension.
    fn theorem_identity(&self) -> PyResult<PyTheoremWitness> {
        let w = invariants::theorem_identity(&self.inner).map_err(err)?;
        Ok(PyTheoremWitness { lhs: w.lhs, rhs: w.rhs, link_sum: w.link_sum, equal: w.equal })
    }

    fn link_derivative_identity(&self) -> bool {
        invariants::link_derivative_identity(&self.inner)
    }

    fn dehn_sommerville_check(&self) -> bool {
        invariants::dehn_sommerville_check(&self.inner)
    }

    fn is_flag(&self) -> bool {
        self.inner.is_flag()
    }

    fn is_homology_sphere(&self) -> bool {
        homology::is_homology_sphere(&self.inner)
    }

    fn is_generalized_homology_sphere(&self) -> bool {
        homology::is_generalized_homology_sphere(&self.inner)
    }

    fn reduced_betti_numbers(&self) -> Vec<usize> {
        homology::reduced_homology(&self.inner).betti_numbers()
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.euler_characteristic()
    }

    /// Returns the relabelled link and the original labels of its vertices.
    fn link(&self, vertex: usize) -> PyResult<(PyComplex, Vec<usize>)> {
        let link = self.inner.link(vertex).map_err(err)?;
        Ok((link.complex.into(), link.vertices))
    }

    fn join(&self, other: &PyComplex) -> PyResult<PyComplex> {
        self.inner.join(&other.inner).map(Into::into).map_err(err)
    }

    fn suspension(&self) -> PyResult<PyComplex> {
        self.inner.suspension().map(Into::into).map_err(err)
    }

    fn barycentric_subdivision(&self) -> PyResult<PyComplex> {
        self.inner.barycentric_subdivision().map(Into::into).map_err(err)
    }

    fn one_skeleton(&self) -> PyGraph {
        PyGraph { inner: self.inner.one_skeleton() }
    }

    /// Full analysis report as JSON.
    #[pyo3(signature = (name = "complex"))]
    fn analyze(&self, name: &str) -> PyResult<String> {
        report::analyze_report(&self.inner, name).map(|r| json(&r)).map_err(err)
    }

    /// Verification report as JSON; `suite` takes the CLI's comma list.
    #[pyo3(signature = (suite = "all", name = "complex"))]
    fn verify(&self, suite: &str, name: &str) -> PyResult<String> {
        let (suites, explicit) = parse_suites(suite).map_err(PyValueError::new_err)?;
        report::verify(&self.inner, name, &suites, explicit).map(|r| json(&r)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex(vertex_count={}, facets={:?})", self.inner.vertex_count(), self.inner.facets())
    }
}

#[pyclass(name = "Graph", module = "flagsphere", frozen)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(vertex_count, &edges).map(|inner| Self { inner }).map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn clique_complex(&self) -> PyComplex {
        self.inner.clique_complex().into()
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertex_count={}, edges={:?})", self.inner.vertex_count(), self.inner.edges())
    }
}

#[pyfunction]
fn icosahedron() -> PyComplex {
    generators::icosahedron().into()
}

#[pyfunction]
fn two_points() -> PyComplex {
    generators::two_points().into()
}

#[pyfunction]
fn cycle(m: usize) -> PyResult<PyComplex> {
    generators::cycle(m).map(Into::into).map_err(err)
}

#[pyfunction]
fn cross_polytope_boundary(n: usize) -> PyResult<PyComplex> {
    generators::cross_polytope_boundary(n).map(Into::into).map_err(err)
}

#[pyfunction]
fn simplex_boundary(n: usize) -> PyResult<PyComplex> {
    generators::simplex_boundary(n).map(Into::into).map_err(err)
}

/// Builds a complex from an expression such as `"susp:cycle:10"`.
#[pyfunction]
fn generate(expr: &str) -> PyResult<PyComplex> {
    generators::from_expr(expr).map(Into::into).map_err(err)
}

#[pyfunction]
fn random_graph(n: usize, p: Rational, seed: u64) -> PyResult<PyGraph> {
    generators::random_graph(n, &p, seed).map(|inner| PyGraph { inner }).map_err(err)
}

#[pyfunction]
fn theorem_constant() -> Rational {
    invariants::theorem_constant()
}

/// Census report as JSON, computed on the global thread pool.
#[pyfunction]
#[pyo3(signature = (max_vertices, dim = None, force = false))]
fn census(py: Python<'_>, max_vertices: usize, dim: Option<isize>, force: bool) -> PyResult<String> {
    let config = CensusConfig { max_vertices, dim_filter: dim, force };
    let report = py.detach(|| run_census(&config)).map_err(err)?;
    Ok(json(&report))
}

#[pymodule(name = "flagsphere")]
fn flagsphere_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTheoremWitness>()?;
    m.add_function(wrap_pyfunction!(icosahedron, m)?)?;
    m.add_function(wrap_pyfunction!(two_points, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(cross_polytope_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(simplex_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_constant, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    Ok(())
}
