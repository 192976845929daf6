//! Python bindings for the zdmd library.
//!
//! Exposes the graph type, the zero-divisor and subdivision constructors,
//! the exact metric-dimension solvers, and the verification harness. Build
//! with `cargo build -p zdmd-python --release`; the resulting cdylib is
//! importable as `zdmd_python` (see python/smoke_test.py).

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use zdmd::construction::{self, CheckStatus, PredictionKind, VerifyMode};
use zdmd::export;
use zdmd::resolving::{self, BnbOptions, DEFAULT_BUDGET};
use zdmd::ring::{self, Modulus};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph with optional vertex labels.
#[pyclass(name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: zdmd::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph on `n` vertices with the given undirected edges.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: zdmd::Graph::from_edge_list(n, edges).map_err(value_err)?,
        })
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(value_err)?;
        Ok(self.inner.neighbors(v).iter().copied().collect())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(value_err)?;
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn label(&self, v: usize) -> Option<String> {
        self.inner.label(v).map(str::to_owned)
    }

    fn labels(&self) -> BTreeMap<usize, String> {
        self.inner.labels().clone()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn is_path(&self) -> bool {
        self.inner.is_path_graph()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_independent_set(&self, vertices: Vec<usize>) -> PyResult<bool> {
        self.inner.is_independent_set(&vertices).map_err(value_err)
    }

    /// Shortest-path distance, or None when unreachable.
    fn distance(&self, u: usize, v: usize) -> PyResult<Option<u32>> {
        let dm = self.inner.distances();
        dm.check_vertex(u).map_err(value_err)?;
        dm.check_vertex(v).map_err(value_err)?;
        Ok(if dm.is_unreachable(u, v) {
            None
        } else {
            Some(dm.get(u, v))
        })
    }

    /// Distance vector of `v` to the ordered landmark list.
    fn metric_code(&self, v: usize, landmarks: Vec<usize>) -> PyResult<Vec<u32>> {
        let dm = self.inner.distances();
        Ok(resolving::metric_code(&dm, v, &landmarks)
            .map_err(value_err)?
            .0)
    }

    fn is_resolving(&self, landmarks: Vec<usize>) -> PyResult<bool> {
        let dm = self.inner.distances();
        resolving::is_resolving(&dm, &landmarks).map_err(value_err)
    }

    /// Metric dimension of a non-path tree by leg counting.
    fn tree_metric_dimension(&self) -> PyResult<usize> {
        self.inner.tree_metric_dimension().map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Metric dimension bounds with a witness landmark set.
#[pyclass(name = "DimensionReport", get_all)]
struct PyDimensionReport {
    lower: usize,
    upper: usize,
    exact: bool,
    witness: Option<Vec<usize>>,
    method: String,
    tested: u64,
    budget_exhausted: bool,
}

#[pymethods]
impl PyDimensionReport {
    fn __repr__(&self) -> String {
        format!(
            "DimensionReport(lower={}, upper={}, exact={}, method='{}')",
            self.lower, self.upper, self.exact, self.method
        )
    }
}

impl From<resolving::DimensionReport> for PyDimensionReport {
    fn from(r: resolving::DimensionReport) -> Self {
        PyDimensionReport {
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            witness: r.witness,
            method: r.method.to_string(),
            tested: r.tested,
            budget_exhausted: r.budget_exhausted,
        }
    }
}

/// Ascending nonzero zero divisors of Z_n.
#[pyfunction]
fn zero_divisors(n: u64) -> PyResult<Vec<u64>> {
    Ok(ring::zero_divisors(Modulus::new(n).map_err(value_err)?))
}

/// The zero-divisor graph of Z_n, labelled by residue.
#[pyfunction]
fn zero_divisor_graph(n: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: ring::zero_divisor_graph(Modulus::new(n).map_err(value_err)?),
    })
}

/// Barycentric subdivision plus the map from original edges to the new
/// vertex that subdivides them.
#[pyfunction]
fn barycentric_subdivision(g: &PyGraph) -> (PyGraph, BTreeMap<(usize, usize), usize>) {
    let (bs, edge_map) = g.inner.barycentric_subdivision();
    (PyGraph { inner: bs }, edge_map)
}

/// BS(Γ(Z_n)) with canonical partition labels when n = p*q for distinct
/// primes p < q.
#[pyfunction]
fn subdivided_zero_divisor_graph(n: u64) -> PyResult<PyGraph> {
    let (g, _) = construction::bs_of_zdg(Modulus::new(n).map_err(value_err)?);
    Ok(PyGraph { inner: g })
}

/// The closed-form resolving set for BS(Γ(Z_pq)) as (ids, labels).
#[pyfunction]
fn resolving_set_construction(p: u64, q: u64) -> PyResult<(Vec<usize>, Vec<String>)> {
    let (_, part) = construction::build_labeled_bs(p, q).map_err(value_err)?;
    let ids = construction::canonical_resolving_set(p, q, &part).map_err(value_err)?;
    let labels = construction::landmark_classes(p, q)
        .map_err(value_err)?
        .iter()
        .map(|c| c.to_string())
        .collect();
    Ok((ids, labels))
}

/// Exact metric dimension; `mode` is "bnb", "exhaustive", or "bounds".
#[pyfunction]
#[pyo3(signature = (g, mode = "bnb", budget = None))]
fn metric_dimension(g: &PyGraph, mode: &str, budget: Option<u64>) -> PyResult<PyDimensionReport> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let report = match mode {
        "exhaustive" => {
            resolving::min_resolving_exhaustive(&g.inner, g.inner.vertex_count(), budget)
                .map_err(value_err)?
        }
        "bnb" => resolving::min_resolving_bnb_with(
            &g.inner,
            &BnbOptions {
                budget,
                ..BnbOptions::default()
            },
        )
        .map_err(value_err)?,
        "bounds" => {
            let witness = resolving::greedy_upper_bound(&g.inner).map_err(value_err)?;
            let lower = resolving::coverage_lower_bound(&g.inner)
                .map_err(value_err)?
                .min(witness.len());
            resolving::DimensionReport {
                lower,
                upper: witness.len(),
                exact: lower == witness.len(),
                witness: Some(witness),
                method: resolving::Method::BranchAndBound,
                tested: 0,
                budget_exhausted: false,
            }
        }
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    Ok(report.into())
}

/// Minimum independent resolving set size.
#[pyfunction]
#[pyo3(signature = (g, k_max = None, budget = None))]
fn independent_metric_dimension(
    g: &PyGraph,
    k_max: Option<usize>,
    budget: Option<u64>,
) -> PyResult<PyDimensionReport> {
    let report = resolving::independent_min_resolving(
        &g.inner,
        k_max.unwrap_or(g.inner.vertex_count()),
        budget.unwrap_or(DEFAULT_BUDGET),
    )
    .map_err(value_err)?;
    Ok(report.into())
}

/// Dimension lower bound from an equidistant vertex family.
#[pyfunction]
fn equidistant_family_bound(g: &PyGraph, family: Vec<usize>) -> PyResult<usize> {
    resolving::equidistant_family_bound(&g.inner, &family).map_err(value_err)
}

/// Piecewise dimension value for BS(Γ(Z_pq)) as (kind, value, regime);
/// kind is "exact" or "greater_than".
#[pyfunction]
fn predicted_dimension(p: u64, q: u64) -> PyResult<(String, Option<usize>, String)> {
    let prediction = construction::predicted_dimension(p, q).map_err(value_err)?;
    let (kind, value) = match prediction.kind {
        PredictionKind::Exact(d) => ("exact", Some(d)),
        PredictionKind::StrictlyGreaterThan(d) => ("greater_than", Some(d)),
        PredictionKind::Open => ("open", None),
    };
    Ok((kind.to_owned(), value, prediction.regime.to_string()))
}

/// Runs the verification checks for (p, q); returns (name, status, detail)
/// rows with status "pass", "fail", or "skipped".
#[pyfunction]
#[pyo3(signature = (p, q, mode = "fast"))]
fn verify_pair(p: u64, q: u64, mode: &str) -> PyResult<Vec<(String, String, String)>> {
    let mode = match mode {
        "fast" => VerifyMode::Fast,
        "full" => VerifyMode::Full,
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let report = construction::run_verification(p, q, mode).map_err(value_err)?;
    Ok(report
        .checks
        .into_iter()
        .map(|c| {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Skipped => "skipped",
            };
            (c.name.to_owned(), status.to_owned(), c.detail)
        })
        .collect())
}

/// Undirected DOT text.
#[pyfunction]
fn to_dot(g: &PyGraph) -> String {
    export::to_dot(&g.inner)
}

/// JSON graph text: {"n", "edges", "labels"}.
#[pyfunction]
fn to_json(g: &PyGraph) -> String {
    export::to_json(&g.inner)
}

#[pyfunction]
fn graph_from_json(text: &str) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: export::from_json(text).map_err(value_err)?,
    })
}

#[pymodule]
fn zdmd_python(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDimensionReport>()?;
    m.add_function(wrap_pyfunction!(zero_divisors, m)?)?;
    m.add_function(wrap_pyfunction!(zero_divisor_graph, m)?)?;
    m.add_function(wrap_pyfunction!(barycentric_subdivision, m)?)?;
    m.add_function(wrap_pyfunction!(subdivided_zero_divisor_graph, m)?)?;
    m.add_function(wrap_pyfunction!(resolving_set_construction, m)?)?;
    m.add_function(wrap_pyfunction!(metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(independent_metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(equidistant_family_bound, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(to_dot, m)?)?;
    m.add_function(wrap_pyfunction!(to_json, m)?)?;
    m.add_function(wrap_pyfunction!(graph_from_json, m)?)?;
    Ok(())
}
