//! Python bindings. Ring elements and polynomials cross the boundary as
//! text (`"1+u^2"`, `"x^3+x+1"`), result records as JSON lines.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use u3codes::codes::DEFAULT_BUDGET;
use u3codes::poly::{divisors_xn1, factor_xn_minus_1};
use u3codes::quantum::{css_params, search_quantum, DistanceOptions, SearchOptions};
use u3codes::report::{verify_paper as run_report, ResultLine, VerifyOptions};
use u3codes::ring::{self, RElem};

fn py_err(e: u3codes::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn elements(v: Vec<String>) -> PyResult<Vec<RElem>> {
    v.iter()
        .map(|s| s.parse::<RElem>().map_err(py_err))
        .collect()
}

fn distance_opts(budget: usize) -> DistanceOptions {
    DistanceOptions {
        budget,
        ..Default::default()
    }
}

/// Irreducible factors of x^n + 1.
#[pyfunction]
fn factor(n: usize) -> PyResult<Vec<String>> {
    Ok(factor_xn_minus_1(n)
        .map_err(py_err)?
        .iter()
        .map(|f| f.to_string())
        .collect())
}

/// Every monic divisor of x^n + 1.
#[pyfunction]
fn divisors(n: usize) -> PyResult<Vec<String>> {
    Ok(divisors_xn1(n)
        .map_err(py_err)?
        .iter()
        .map(|f| f.to_string())
        .collect())
}

#[pyfunction]
fn lee_weight(v: Vec<String>) -> PyResult<u32> {
    Ok(ring::lee_weight(&elements(v)?))
}

/// Gray image as a bit string in elementwise-triple order.
#[pyfunction]
fn gray_map(v: Vec<String>) -> PyResult<String> {
    Ok(ring::gray_map(&elements(v)?).to_string())
}

/// `(F2 component as 0/1, Rw component as text)`
#[pyfunction]
fn crt_split(x: &str) -> PyResult<(u8, String)> {
    let (f, g) = x.parse::<RElem>().map_err(py_err)?.crt_split();
    Ok((f.0 as u8, g.to_string()))
}

/// A cyclic code over R given by its generator triple.
#[pyclass(name = "CodeSpec", frozen)]
struct PyCodeSpec {
    inner: u3codes::CodeSpec,
}

#[pymethods]
impl PyCodeSpec {
    #[new]
    fn new(n: usize, g1: &str, a1: &str, g2: &str) -> PyResult<Self> {
        Ok(Self {
            inner: u3codes::CodeSpec::parse(n, g1, a1, g2).map_err(py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn generator(&self) -> String {
        self.inner.generator_poly().to_string()
    }

    fn size_log2(&self) -> usize {
        self.inner.code().size_log2()
    }

    fn dual_size_log2(&self) -> usize {
        self.inner.code().dual().size_log2()
    }

    /// `(value, exact)`
    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn distance(&self, budget: usize) -> PyResult<(u32, bool)> {
        let opts = distance_opts(budget);
        let d = self
            .inner
            .code()
            .min_lee_distance(opts.budget, opts.max_combination)
            .map_err(py_err)?;
        Ok((d.value, d.exact))
    }

    fn is_dual_containing(&self) -> PyResult<bool> {
        Ok(self.inner.is_dual_containing().map_err(py_err)?.verdict())
    }

    /// `(length, dimension, distance, exact)`; raises if the code does not
    /// contain its dual.
    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn css_params(&self, budget: usize) -> PyResult<(usize, usize, u32, bool)> {
        let q = css_params(&self.inner, distance_opts(budget)).map_err(py_err)?;
        Ok((q.length, q.dimension, q.distance.value, q.distance.exact))
    }

    #[pyo3(signature = (budget = DEFAULT_BUDGET))]
    fn result_line(&self, budget: usize) -> PyResult<String> {
        Ok(ResultLine::from_spec(&self.inner, distance_opts(budget))
            .map_err(py_err)?
            .to_json())
    }

    fn __repr__(&self) -> String {
        format!("CodeSpec({})", self.inner)
    }
}

/// Dual-containing codes of length n as JSON lines.
#[pyfunction]
#[pyo3(signature = (n, budget = DEFAULT_BUDGET))]
fn search(py: Python<'_>, n: usize, budget: usize) -> PyResult<Vec<String>> {
    let opts = SearchOptions {
        distance: distance_opts(budget),
        ..Default::default()
    };
    let records = py.detach(|| search_quantum(n, opts)).map_err(py_err)?;
    Ok(records
        .iter()
        .map(|r| ResultLine::from_record(r).to_json())
        .collect())
}

/// `(passed, report text)`
#[pyfunction]
fn verify_paper(py: Python<'_>) -> PyResult<(bool, String)> {
    let report = py
        .detach(|| run_report(&VerifyOptions::default()))
        .map_err(py_err)?;
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
#[pyo3(name = "u3codes")]
fn u3codes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(lee_weight, m)?)?;
    m.add_function(wrap_pyfunction!(gray_map, m)?)?;
    m.add_function(wrap_pyfunction!(crt_split, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add_class::<PyCodeSpec>()?;
    Ok(())
}
