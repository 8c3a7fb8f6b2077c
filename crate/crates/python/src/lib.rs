//! Python bindings for `nrr-core`.

use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use nrr_core::graphs::{graph_of_partition, truncated_g_infinity};
use nrr_core::hilbert::{
    edge_ideal_of, hp_r, ladder_hilbert_series, weighted_hilbert_inclusion_exclusion,
    weighted_hilbert_independent_sets, weighted_subgraph_series_at,
};
use nrr_core::partitions::{
    e_partitions, gf_t, neighborly_partitions, partitions_of, r_partitions, rr_numerator,
    rr_product_side, rr_sum_side, t_partitions,
};
use nrr_core::signature::{independence_polynomial_at, signature_bruteforce, signature_fast, signed_neighborly_gf};
use nrr_core::{Bounds, Error, Identity, LabeledGraph, Mode, Order, Partition, SeriesQ, SignatureRoute, WeightMap};

fn err(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        Error::BoundExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn mode(i: u32) -> PyResult<Mode> {
    Mode::try_from(i).map_err(err)
}

fn bounds() -> PyResult<Bounds> {
    Bounds::from_env().map_err(err)
}

fn parts(list: &[Partition]) -> Vec<Vec<u32>> {
    list.iter().map(|l| l.parts().to_vec()).collect()
}

fn coeffs(s: PyResult<SeriesQ>) -> PyResult<Vec<i64>> {
    s.map(SeriesQ::into_coeffs)
}

/// All partitions of `n` in lexicographically decreasing order.
#[pyfunction(name = "partitions_of")]
fn py_partitions_of(n: usize) -> Vec<Vec<u32>> {
    parts(&partitions_of(n))
}

/// One family of partitions of `n`: "neighborly", "T", "E" or "R".
#[pyfunction]
fn family(name: &str, n: usize, i: u32) -> PyResult<Vec<Vec<u32>>> {
    let m = mode(i)?;
    let list = match name {
        "neighborly" | "N" => neighborly_partitions(n, m),
        "T" => t_partitions(n, m),
        "E" => e_partitions(n, m),
        "R" => r_partitions(n, m),
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    Ok(parts(&list))
}

/// `Σ (-1)^size` over the R family of `n`.
#[pyfunction]
fn r_signed_count(n: usize, i: u32) -> PyResult<i64> {
    nrr_core::partitions::r_signed_count(n, mode(i)?).map_err(err)
}

/// Signature of the graph of a partition given in any order.
#[pyfunction]
#[pyo3(signature = (parts, route = "fast"))]
fn signature(parts: Vec<u32>, route: &str) -> PyResult<i64> {
    Graph::from_partition(parts)?.signature(route)
}

/// Coefficients of a named series through `order`.
#[pyfunction]
fn series(which: &str, i: u32, order: usize) -> PyResult<Vec<i64>> {
    let (m, n) = (mode(i)?, Order::new(order));
    let s = match which {
        "numerator" => rr_numerator(m, n),
        "signed-gf" => signed_neighborly_gf(m, n, SignatureRoute::IndependencePolynomial, &bounds()?),
        "rr-sum" => rr_sum_side(m, n),
        "rr-product" => rr_product_side(m, n),
        "gf-T" => gf_t(m, n),
        "hp-R" => hp_r(m, n),
        "hilbert-P" => ladder_hilbert_series(m, order as u32, n),
        other => return Err(PyValueError::new_err(format!("unknown series {other:?}"))),
    };
    coeffs(s.map_err(err))
}

/// Result of checking one identity for one mode.
#[pyclass(frozen, get_all)]
struct Report {
    identity: String,
    mode: u32,
    order: usize,
    passed: bool,
    /// `(check, order, left, right)` of the first failure.
    witness: Option<(String, usize, i64, i64)>,
    seconds: f64,
}

#[pymethods]
impl Report {
    fn __repr__(&self) -> String {
        format!(
            "Report(identity={:?}, mode={}, order={}, passed={})",
            self.identity, self.mode, self.order, self.passed
        )
    }
}

/// Checks `target` (an identity name or "all") for the given modes.
#[pyfunction]
#[pyo3(signature = (target, order, modes = vec![1, 2]))]
fn verify(py: Python<'_>, target: &str, order: usize, modes: Vec<u32>) -> PyResult<Vec<Report>> {
    let ids = if target == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![target.parse::<Identity>().map_err(err)?]
    };
    let modes = modes.into_iter().map(mode).collect::<PyResult<Vec<_>>>()?;
    let b = bounds()?;
    py.detach(|| {
        let mut out = Vec::new();
        for id in ids {
            for &m in &modes {
                let r = nrr_core::verify::run(id, m, Order::new(order), &b)?;
                out.push(Report {
                    identity: id.name().to_string(),
                    mode: m.index(),
                    order,
                    passed: r.passed(),
                    witness: r.outcome.err().map(|w| (w.check, w.mismatch.index, w.mismatch.left, w.mismatch.right)),
                    seconds: r.duration.as_secs_f64(),
                });
            }
        }
        Ok(out)
    })
    .map_err(err)
}

/// A labeled graph on vertices `x_j`, `y_j`.
#[pyclass(frozen)]
struct Graph {
    inner: LabeledGraph,
}

#[pymethods]
impl Graph {
    /// `G_λ` for a partition with multiplicities at most 2.
    #[staticmethod]
    fn from_partition(parts: Vec<u32>) -> PyResult<Self> {
        let lambda = Partition::from_unordered(parts).map_err(err)?;
        Ok(Self {
            inner: graph_of_partition(&lambda).map_err(err)?,
        })
    }

    /// The ladder prefix on indices `3-i ..= max_index`.
    #[staticmethod]
    fn ladder(i: u32, max_index: u32) -> PyResult<Self> {
        Ok(Self {
            inner: truncated_g_infinity(mode(i)?, max_index).map_err(err)?,
        })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (a.to_string(), b.to_string())
            })
            .collect()
    }

    fn has_isolated_vertex(&self) -> bool {
        self.inner.has_isolated_vertex()
    }

    /// `route` is "fast" (independence polynomial) or "brute" (edge subsets).
    #[pyo3(signature = (route = "fast"))]
    fn signature(&self, route: &str) -> PyResult<i64> {
        let b = bounds()?;
        let s = match route {
            "fast" => signature_fast(&self.inner, &b),
            "brute" => signature_bruteforce(&self.inner, &b),
            other => return Err(PyValueError::new_err(format!("unknown route {other:?}"))),
        };
        s.map(|s| s.get()).map_err(err)
    }

    fn independence_polynomial_at(&self, t: i64) -> PyResult<i64> {
        independence_polynomial_at(&self.inner, t, &bounds()?).map_err(err)
    }

    /// Weighted Hilbert series of the edge ideal, weights `w(x_j) = w(y_j) = j`.
    #[pyo3(signature = (order, route = "independent-sets"))]
    fn hilbert(&self, order: usize, route: &str) -> PyResult<Vec<i64>> {
        let (b, n) = (bounds()?, Order::new(order));
        let w = WeightMap::by_index(&self.inner);
        let s = match route {
            "independent-sets" => weighted_hilbert_independent_sets(&self.inner, &w, n, &b),
            "inclusion-exclusion" => edge_ideal_of(&self.inner, &w)
                .and_then(|spec| weighted_hilbert_inclusion_exclusion(&spec, n, &b)),
            other => return Err(PyValueError::new_err(format!("unknown route {other:?}"))),
        };
        coeffs(s.map_err(err))
    }

    /// Weighted subgraph series at `z`, weights `w(x_j) = w(y_j) = j`.
    fn subgraph_series(&self, z: i64, order: usize) -> PyResult<Vec<i64>> {
        let w = WeightMap::by_index(&self.inner);
        coeffs(weighted_subgraph_series_at(&self.inner, &w, z, Order::new(order), &bounds()?).map_err(err))
    }

    fn __repr__(&self) -> String {
        format!("Graph({})", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }
}

#[pymodule]
fn nrr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(py_partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(r_signed_count, m)?)?;
    m.add_function(wrap_pyfunction!(signature, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
