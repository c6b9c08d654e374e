//! Python bindings. Vertex ids are 0-based here, unlike the text formats.

use ats_core::gen::{self, GenSpec, WeightMode};
use ats_core::graph::{self as core_graph, parse_ratio, Beta, VertexId};
use ats_core::io;
use ats_core::oracle::{self, DEFAULT_MAX_SIZE};
use ats_core::pipeline;
use ats_core::planar;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn beta_arg(beta: &str) -> PyResult<Beta> {
    parse_ratio(beta).map_err(value_error)
}

#[pyclass(name = "Graph", module = "ats", frozen)]
struct PyGraph {
    inner: core_graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Build from an edge list; weights default to 1.
    #[new]
    #[pyo3(signature = (n, edges, weights=None))]
    fn new(
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        weights: Option<Vec<u64>>,
    ) -> PyResult<Self> {
        let weights = weights.unwrap_or_else(|| vec![1; n]);
        let inner = core_graph::Graph::from_edges(n, &edges, weights).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    /// Parse the `p` / `e` / `w` edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = io::parse_edge_list(text).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    fn to_text(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn excess(&self) -> i64 {
        self.inner.excess()
    }

    #[getter]
    fn total_weight(&self) -> u64 {
        self.inner.total_weight()
    }

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.inner.edges().collect()
    }

    fn weights(&self) -> Vec<u64> {
        self.inner.weights().to_vec()
    }

    fn is_planar(&self) -> bool {
        planar::is_planar(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, total_weight={})",
            self.inner.n(),
            self.inner.m(),
            self.inner.total_weight()
        )
    }
}

#[pyclass(module = "ats", frozen, get_all)]
struct Separator {
    vertices: Vec<VertexId>,
    size: usize,
    max_fraction: f64,
    repairs: usize,
    stage_ns: Vec<(String, u64)>,
}

#[pymethods]
impl Separator {
    fn __repr__(&self) -> String {
        format!(
            "Separator(vertices={:?}, max_fraction={:.4}, repairs={})",
            self.vertices, self.max_fraction, self.repairs
        )
    }
}

#[pyclass(module = "ats", frozen, get_all)]
struct Verification {
    passed: bool,
    max_fraction: f64,
    component_weights: Vec<u64>,
}

#[pyclass(module = "ats", frozen, get_all)]
struct OracleResult {
    min_size: Option<usize>,
    witness: Vec<VertexId>,
    feasible: bool,
}

/// Balanced separator from the near-tree pipeline.
#[pyfunction]
#[pyo3(signature = (g, beta="2/3"))]
fn separate(g: &PyGraph, beta: &str) -> PyResult<Separator> {
    let s = pipeline::separate(&g.inner, beta_arg(beta)?).map_err(value_error)?;
    Ok(Separator {
        size: s.vertices.len(),
        max_fraction: s.stats.max_fraction(),
        repairs: s.stats.repairs,
        stage_ns: s
            .stats
            .stage_ns
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect(),
        vertices: s.vertices,
    })
}

/// Stage-by-stage trace of a pipeline run, in the text trace format.
#[pyfunction]
#[pyo3(signature = (g, beta="2/3"))]
fn trace(g: &PyGraph, beta: &str) -> PyResult<String> {
    let (_, t) = pipeline::separate_traced(&g.inner, beta_arg(beta)?).map_err(value_error)?;
    Ok(t.to_text())
}

#[pyfunction]
#[pyo3(signature = (g, separator, beta="2/3"))]
fn verify(g: &PyGraph, separator: Vec<VertexId>, beta: &str) -> PyResult<Verification> {
    if let Some(&v) = separator.iter().find(|&&v| v >= g.inner.n()) {
        return Err(value_error(format!("vertex {v} out of range")));
    }
    let r = core_graph::verify_separator(&g.inner, &separator, beta_arg(beta)?);
    Ok(Verification {
        passed: r.passed,
        max_fraction: r.max_fraction(),
        component_weights: r.component_weights,
    })
}

/// Exhaustive minimum balanced separator; at most 20 vertices.
#[pyfunction]
#[pyo3(signature = (g, beta="2/3", max_size=DEFAULT_MAX_SIZE))]
fn min_separator(g: &PyGraph, beta: &str, max_size: usize) -> PyResult<OracleResult> {
    let r =
        oracle::min_balanced_separator(&g.inner, beta_arg(beta)?, max_size).map_err(value_error)?;
    Ok(OracleResult {
        min_size: r.min_size,
        witness: r.witness,
        feasible: r.feasible,
    })
}

/// Planar separator of any connected planar graph.
#[pyfunction]
fn lt_separator(g: &PyGraph) -> PyResult<Vec<VertexId>> {
    planar::lt_separator(&g.inner)
        .map(|s| s.vertices)
        .map_err(value_error)
}

/// Random connected planar graph with `n` vertices and `n + r` edges.
#[pyfunction]
#[pyo3(signature = (n, r, seed=0, weights="unit"))]
fn near_tree_planar(n: usize, r: i64, seed: u64, weights: &str) -> PyResult<PyGraph> {
    let weight_mode: WeightMode = weights.parse().map_err(value_error)?;
    let spec = GenSpec {
        n,
        r,
        seed,
        weight_mode,
    };
    let inner = gen::near_tree_planar(&spec).map_err(value_error)?;
    Ok(PyGraph { inner })
}

#[pyfunction]
fn grid_graph(a: usize, b: usize) -> PyResult<PyGraph> {
    if a == 0 || b == 0 {
        return Err(value_error("grid sides must be positive"));
    }
    Ok(PyGraph {
        inner: gen::grid_graph(a, b),
    })
}

#[pymodule]
fn ats(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<Separator>()?;
    m.add_class::<Verification>()?;
    m.add_class::<OracleResult>()?;
    m.add_function(wrap_pyfunction!(separate, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(min_separator, m)?)?;
    m.add_function(wrap_pyfunction!(lt_separator, m)?)?;
    m.add_function(wrap_pyfunction!(near_tree_planar, m)?)?;
    m.add_function(wrap_pyfunction!(grid_graph, m)?)?;
    Ok(())
}
