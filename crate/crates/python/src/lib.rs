//! Python bindings.
//!
//! ```python
//! import pyweyl
//! u = pyweyl.Element("H*X")
//! pyweyl.classify(u)            # 'Delta2'
//! pyweyl.analyze("H*X")["ideals"]
//! ```

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;
use serde_json::Value;
use weyl_dixmier::centralizer::{canonical_generator, n_structure};
use weyl_dixmier::dixmier::{self, GrowthMode};
use weyl_dixmier::exact::int;
use weyl_dixmier::gwa::{self, GradedElement, HomogeneousElement, Ring};
use weyl_dixmier::oracle::{self, TruncationBox, VerifyOptions};
use weyl_dixmier::Error;

create_exception!(pyweyl, WeylError, PyValueError, "Base class for pyweyl errors.");
create_exception!(pyweyl, ExprSyntaxError, WeylError, "Malformed expression.");
create_exception!(pyweyl, PreconditionError, WeylError, "Input outside the scope of an operation.");
create_exception!(pyweyl, InconclusiveError, PyRuntimeError, "Oracle or iteration did not settle.");

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Syntax { .. } => ExprSyntaxError::new_err(msg),
        Error::Inconclusive(_) | Error::IterationCap(_) => InconclusiveError::new_err(msg),
        Error::Domain(_) => WeylError::new_err(msg),
        _ => PreconditionError::new_err(msg),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// An element of `B = Q(H)[X, X^-1; sigma]`, usually of `A1`.
#[pyclass(name = "Element", module = "pyweyl", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElement {
    inner: GradedElement,
}

fn wrap(inner: GradedElement) -> PyElement {
    PyElement { inner }
}

/// Accepts an `Element`, an `int` or an expression string.
fn coerce(obj: &Bound<'_, PyAny>) -> PyResult<GradedElement> {
    if let Ok(e) = obj.extract::<PyRef<'_, PyElement>>() {
        return Ok(e.inner.clone());
    }
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(GradedElement::scalar(int(n)));
    }
    if let Ok(s) = obj.extract::<String>() {
        return gwa::parse(&s).map_err(to_py);
    }
    Err(PyValueError::new_err("expected an Element, an int or an expression string"))
}

fn homogeneous(obj: &Bound<'_, PyAny>) -> PyResult<HomogeneousElement> {
    HomogeneousElement::from_element(&coerce(obj)?).map_err(to_py)
}

#[pymethods]
impl PyElement {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        gwa::parse(text).map(wrap).map_err(to_py)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        gwa::from_json(text).map(wrap).map_err(to_py)
    }

    fn to_json(&self) -> String {
        gwa::to_json(&self.inner)
    }

    fn latex(&self) -> String {
        gwa::format_latex(&self.inner)
    }

    /// Smallest of "A1", "LaurentA", "B" containing the element.
    #[getter]
    fn ring(&self) -> &'static str {
        self.inner.ring().name()
    }

    #[getter]
    fn gradings(&self) -> Vec<i64> {
        self.inner.gradings()
    }

    /// The grading if the element is homogeneous and nonzero.
    #[getter]
    fn grading(&self) -> Option<i64> {
        self.inner.homogeneous_grading()
    }

    fn component(&self, j: i64) -> Self {
        wrap(self.inner.component(j))
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn in_ring(&self, name: &str) -> PyResult<bool> {
        let ring = Ring::from_name(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown ring {name:?}")))?;
        Ok(self.inner.is_in(ring))
    }

    /// `[self, w]`.
    fn ad(&self, w: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(gwa::ad(&self.inner, &coerce(w)?)))
    }

    #[pyo3(signature = (w, k))]
    fn ad_pow(&self, w: &Bound<'_, PyAny>, k: usize) -> PyResult<Self> {
        Ok(wrap(gwa::ad_pow(&self.inner, &coerce(w)?, k)))
    }

    fn __add__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&self.inner + &coerce(o)?))
    }

    fn __radd__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&coerce(o)? + &self.inner))
    }

    fn __sub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&self.inner - &coerce(o)?))
    }

    fn __rsub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&coerce(o)? - &self.inner))
    }

    fn __mul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&self.inner * &coerce(o)?))
    }

    fn __rmul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(wrap(&coerce(o)? * &self.inner))
    }

    fn __neg__(&self) -> Self {
        wrap(-&self.inner)
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.inner.pow_i64(e).map(wrap).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.inner)
    }
}

#[pyfunction]
fn parse(text: &str) -> PyResult<PyElement> {
    PyElement::new(text)
}

/// Dixmier class tag, e.g. "Delta2".
#[pyfunction]
fn classify(u: &Bound<'_, PyAny>) -> PyResult<&'static str> {
    dixmier::classify(&homogeneous(u)?).map(|c| c.tag()).map_err(to_py)
}

/// Full closed-form report as a dict.
#[pyfunction]
#[pyo3(signature = (u, k=6))]
fn analyze<'py>(py: Python<'py>, u: &Bound<'py, PyAny>, k: u64) -> PyResult<Bound<'py, PyAny>> {
    let r = dixmier::analyze(&homogeneous(u)?, k).map_err(to_py)?;
    json_to_py(py, &r.to_json())
}

/// `{"beta", "t", "s", "m"}` for `v = beta X^t` with `v^m = u`.
#[pyfunction]
#[pyo3(name = "canonical_generator")]
fn canonical_generator_dict<'py>(py: Python<'py>, u: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let g = canonical_generator(&homogeneous(u)?).map_err(to_py)?;
    json_to_py(py, &g.to_json())
}

#[pyfunction]
fn canonical_generator_element(u: &Bound<'_, PyAny>) -> PyResult<PyElement> {
    Ok(wrap(canonical_generator(&homogeneous(u)?).map_err(to_py)?.v()))
}

#[pyfunction]
fn nstructure<'py>(py: Python<'py>, u: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let ns = n_structure(&homogeneous(u)?).map_err(to_py)?;
    json_to_py(py, &ns.to_json())
}

/// Exponent `e` with `I_k = u^e K[u]`.
#[pyfunction]
fn ideal_exponent(u: &Bound<'_, PyAny>, k: u64) -> PyResult<u64> {
    dixmier::ideal_i(&homogeneous(u)?, k).map(|d| d.exponent).map_err(to_py)
}

/// Least `i` with `(ad u)^(i+1) w = 0`, by iteration.
#[pyfunction]
#[pyo3(signature = (w, u, cap=512))]
fn ndeg(w: &Bound<'_, PyAny>, u: &Bound<'_, PyAny>, cap: usize) -> PyResult<u64> {
    weyl_dixmier::centralizer::iterated_ndeg(&coerce(w)?, &coerce(u)?, cap).map_err(to_py)
}

#[pyfunction]
fn n_membership(w: &Bound<'_, PyAny>, u: &Bound<'_, PyAny>) -> PyResult<bool> {
    weyl_dixmier::centralizer::n_membership(&coerce(w)?, &homogeneous(u)?).map_err(to_py)
}

#[pyfunction]
fn eigen<'py>(py: Python<'py>, u: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let r = dixmier::eigen_decompose(&homogeneous(u)?).map_err(to_py)?;
    json_to_py(py, &r.to_json())
}

/// `dim M_1 .. dim M_n`; `mode` is "alpha_x" or "centralizer".
#[pyfunction]
#[pyo3(signature = (u, n, mode="alpha_x"))]
fn dimension_growth(u: &Bound<'_, PyAny>, n: u64, mode: &str) -> PyResult<Vec<u64>> {
    let mode = match mode {
        "alpha_x" => GrowthMode::AlphaX,
        "centralizer" => GrowthMode::Centralizer,
        _ => return Err(PyValueError::new_err(format!("unknown mode {mode:?}"))),
    };
    dixmier::dimension_growth(&homogeneous(u)?, mode, n).map_err(to_py)
}

/// Oracle comparison of the closed forms for the given elements (the
/// standard suite when `elements` is None). The GIL is released while the
/// kernels are computed.
#[pyfunction]
#[pyo3(signature = (elements=None, k=4, grading=8, hdegree=12))]
fn verify<'py>(
    py: Python<'py>,
    elements: Option<Vec<Bound<'py, PyAny>>>,
    k: u64,
    grading: u64,
    hdegree: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let suite = match elements {
        Some(list) => list.iter().map(|e| homogeneous(e)).collect::<PyResult<Vec<_>>>()?,
        None => oracle::standard_suite(),
    };
    let opts = VerifyOptions {
        bx: TruncationBox::new(grading, hdegree),
        k_max: k,
        ..VerifyOptions::default()
    };
    let report = py
        .detach(|| oracle::verify_suite(&suite, &opts))
        .map_err(to_py)?;
    json_to_py(py, &report.to_json())
}

#[pymodule]
fn pyweyl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyElement>()?;
    m.add("WeylError", py.get_type::<WeylError>())?;
    m.add("ExprSyntaxError", py.get_type::<ExprSyntaxError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("InconclusiveError", py.get_type::<InconclusiveError>())?;
    m.add("STANDARD_SUITE", oracle::STANDARD_SUITE.to_vec())?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_generator_dict, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_generator_element, m)?)?;
    m.add_function(wrap_pyfunction!(nstructure, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(ndeg, m)?)?;
    m.add_function(wrap_pyfunction!(n_membership, m)?)?;
    m.add_function(wrap_pyfunction!(eigen, m)?)?;
    m.add_function(wrap_pyfunction!(dimension_growth, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
