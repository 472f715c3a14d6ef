//! Python bindings: `import pyqindset`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qindset::adversary::{build_gadget, classify, Family};
use qindset::algorithms::{self, PivotRule};
use qindset::graph::{self as graph_mod, catalogue};
use qindset::oct::{self, InnerSolver};
use qindset::rng::seeded;
use qindset::{brute, quantum, AccessModel, CostModelConfig, GraphOracle, QueryLedger, VertexSet};

fn err(e: qindset::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> PyResult<T> {
    s.parse().map_err(|_| PyValueError::new_err(format!("unknown {what} `{s}`")))
}

fn cost_config(failure_probability: f64, budget_scale: f64) -> PyResult<CostModelConfig> {
    let cfg = CostModelConfig { failure_probability, amplification_constant: budget_scale, ..Default::default() };
    cfg.validate().map_err(err)?;
    Ok(cfg)
}

fn set(s: &VertexSet) -> Vec<usize> {
    s.as_slice().to_vec()
}

fn ledger_dict<'py>(py: Python<'py>, l: &QueryLedger) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("matrix_queries", l.matrix_queries)?;
    d.set_item("list_queries", l.list_queries)?;
    d.set_item("degree_queries", l.degree_queries)?;
    d.set_item("charged_cost", l.charged_cost)?;
    d.set_item("model_cost", l.model_cost())?;
    Ok(d)
}

/// Simple undirected graph on vertices `1..=n`.
#[pyclass(name = "Graph", module = "pyqindset", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph(qindset::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        qindset::Graph::from_edges(n, edges).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        graph_mod::load_dimacs(text).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed = 0))]
    fn random(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        graph_mod::gen_random(n, p, seed).map(Self).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        graph_mod::gen_path(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        graph_mod::gen_cycle(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        graph_mod::gen_complete(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn petersen() -> Self {
        Self(graph_mod::petersen())
    }

    /// Every graph on `n <= 9` vertices up to isomorphism.
    #[staticmethod]
    fn catalogue(n: usize) -> PyResult<Vec<Self>> {
        Ok(catalogue::all_graphs(n).map_err(err)?.into_iter().map(Self).collect())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v == 0 || v > self.0.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range 1..={}", self.0.n())));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    fn max_degree(&self) -> usize {
        self.0.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        graph_mod::is_bipartite(&self.0).0
    }

    fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    fn to_dimacs(&self) -> String {
        graph_mod::to_dimacs(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.m())
    }
}

#[pyfunction]
#[pyo3(signature = (g, model = "matrix", seed = 0, pivot = "lowest", failure_probability = 0.0))]
fn maximal_is<'py>(py: Python<'py>, g: &PyGraph, model: &str, seed: u64, pivot: &str, failure_probability: f64) -> PyResult<Bound<'py, PyDict>> {
    let model: AccessModel = parse(model, "access model")?;
    let pivot = match pivot {
        "lowest" => PivotRule::LowestIndex,
        "random" => PivotRule::Random,
        other => return Err(PyValueError::new_err(format!("unknown pivot rule `{other}`"))),
    };
    let cfg = cost_config(failure_probability, 1.0)?;
    let mut oracle = GraphOracle::new(&g.0, model);
    let r = algorithms::maximal_is_with(&mut oracle, &cfg, pivot, &mut seeded(seed)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("set", set(&r.set))?;
    d.set_item("order", r.order)?;
    d.set_item("failed_searches", r.failed_searches)?;
    d.set_item("ledger", ledger_dict(py, &r.ledger)?)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (g, seed = 0, budget_scale = 1.0, check = false))]
fn maximum_is<'py>(py: Python<'py>, g: &PyGraph, seed: u64, budget_scale: f64, check: bool) -> PyResult<Bound<'py, PyDict>> {
    let cfg = cost_config(0.0, budget_scale)?;
    let mut r = algorithms::maximum_is(&g.0, &cfg, &mut seeded(seed)).map_err(err)?;
    if check {
        r.check_optimality(&g.0).map_err(err)?;
    }
    let d = PyDict::new(py);
    d.set_item("set", set(&r.set))?;
    d.set_item("trials", r.trials)?;
    d.set_item("charged_cost", r.charged_cost)?;
    d.set_item("optimal", r.optimal)?;
    Ok(d)
}

/// One run of the randomized branching procedure.
#[pyfunction]
#[pyo3(signature = (g, seed = 0))]
fn max_is_trial(g: &PyGraph, seed: u64) -> Vec<usize> {
    set(&algorithms::max_is_trial(&g.0, &mut seeded(seed)))
}

/// Exact probability that one trial returns a maximum independent set.
#[pyfunction]
fn exact_success_prob(g: &PyGraph) -> PyResult<f64> {
    algorithms::exact_success_prob(&g.0).map_err(err)
}

#[pyfunction]
fn k_independent_set(g: &PyGraph, k: usize) -> PyResult<(Option<Vec<usize>>, f64)> {
    let r = algorithms::k_independent_set(&g.0, k).map_err(err)?;
    Ok((r.set.as_ref().map(set), r.cost.value))
}

#[pyfunction]
#[pyo3(signature = (g, inner = "exact", seed = 0))]
fn min_oct<'py>(py: Python<'py>, g: &PyGraph, inner: &str, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let inner = match inner {
        "exact" => InnerSolver::Exact,
        "amplified" => InnerSolver::Amplified,
        other => return Err(PyValueError::new_err(format!("unknown inner solver `{other}`"))),
    };
    let r = oct::min_oct(&g.0, inner, &CostModelConfig::default(), &mut seeded(seed)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("transversal", set(&r.transversal))?;
    d.set_item("candidates", r.candidates)?;
    d.set_item("invalid_candidates", r.invalid_candidates)?;
    d.set_item("charged_cost", r.charged_cost)?;
    d.set_item("per_component", r.per_component)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (g, model = "matrix", seed = 0))]
fn greedy_coloring<'py>(py: Python<'py>, g: &PyGraph, model: &str, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let model: AccessModel = parse(model, "access model")?;
    let mut oracle = GraphOracle::new(&g.0, model);
    let c = algorithms::greedy_coloring(&mut oracle, &CostModelConfig::default(), &mut seeded(seed)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("k", c.k)?;
    d.set_item("colors", c.colors.clone())?;
    d.set_item("proper", c.is_proper(&g.0))?;
    d.set_item("round_costs", c.round_costs.clone())?;
    d.set_item("ledger", ledger_dict(py, &c.ledger)?)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (g, cap = None))]
fn enumerate_maximal_is(g: &PyGraph, cap: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    Ok(oct::enumerate_maximal_is(&g.0, cap).map_err(err)?.iter().map(set).collect())
}

/// `(ceil(M(k)), M(k) as float, exact form)`.
#[pyfunction]
fn eppstein_bound(n: usize, k: usize) -> PyResult<(String, f64, String)> {
    let b = oct::eppstein_bound(n, k).map_err(err)?;
    Ok((b.ceil().to_string(), b.to_f64(), b.to_string()))
}

/// `(graph, f)` for the family `"A"` or `"B"` instance of size `n`.
#[pyfunction]
fn gadget(family: &str, n: usize) -> PyResult<(PyGraph, bool)> {
    let family: Family = parse(family, "family")?;
    let inst = build_gadget(family, n).map_err(err)?;
    let f = inst.f().map_err(err)?;
    Ok((PyGraph(inst.graph), f))
}

#[pyfunction]
fn classify_gadget(g: &PyGraph, n: usize) -> Option<String> {
    classify(&g.0, n).map(|f| f.to_string())
}

#[pyfunction]
fn brute_alpha(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let (a, w) = brute::brute_alpha(&g.0).map_err(err)?;
    Ok((a, set(&w)))
}

#[pyfunction]
fn brute_oct(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let (a, w) = brute::brute_oct(&g.0).map_err(err)?;
    Ok((a, set(&w)))
}

#[pyfunction]
fn brute_has_k_clique(g: &PyGraph, k: usize) -> PyResult<bool> {
    brute::brute_has_k_clique(&g.0, k).map_err(err)
}

#[pyfunction]
fn is_maximal_is(g: &PyGraph, s: Vec<usize>) -> bool {
    brute::is_maximal_is(&g.0, &VertexSet::from(s))
}

#[pyfunction]
fn is_independent(g: &PyGraph, s: Vec<usize>) -> bool {
    brute::is_independent(&g.0, &VertexSet::from(s))
}

/// Least-squares fit of `y ~ C x^a`; returns `(a, ln C, max residual)`.
#[pyfunction]
fn fit_exponent(points: Vec<(f64, f64)>) -> PyResult<(f64, f64, f64)> {
    let f = qindset::bench::fit_exponent(&points).map_err(err)?;
    Ok((f.exponent, f.intercept, f.max_residual))
}

/// Probability of measuring a marked item after `t` Grover iterations.
#[pyfunction]
fn sv_success_prob(n: usize, k: usize, t: u64) -> PyResult<f64> {
    quantum::sv_success_prob(n, k, t).map_err(err)
}

#[pyfunction]
fn search_all_cost(n: usize, k: usize) -> u64 {
    quantum::search_all_cost(&CostModelConfig::default(), n, k)
}

#[pymodule]
fn pyqindset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(maximal_is, m)?)?;
    m.add_function(wrap_pyfunction!(maximum_is, m)?)?;
    m.add_function(wrap_pyfunction!(max_is_trial, m)?)?;
    m.add_function(wrap_pyfunction!(exact_success_prob, m)?)?;
    m.add_function(wrap_pyfunction!(k_independent_set, m)?)?;
    m.add_function(wrap_pyfunction!(min_oct, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_maximal_is, m)?)?;
    m.add_function(wrap_pyfunction!(eppstein_bound, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(classify_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(brute_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(brute_oct, m)?)?;
    m.add_function(wrap_pyfunction!(brute_has_k_clique, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal_is, m)?)?;
    m.add_function(wrap_pyfunction!(is_independent, m)?)?;
    m.add_function(wrap_pyfunction!(fit_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(sv_success_prob, m)?)?;
    m.add_function(wrap_pyfunction!(search_all_cost, m)?)?;
    Ok(())
}
