//! Python bindings. Results that are records in Rust come back as plain
//! dicts with the same field names as the CLI's JSON output.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use cubic_hilbert as ch;
use cubic_hilbert::hilbert::GenusMode;

create_exception!(cubic_hilbert, DomainError, PyValueError, "Input outside the domain of an operation.");
create_exception!(cubic_hilbert, InternalError, PyRuntimeError, "A computed identity failed; this is a bug.");

fn err(e: ch::Error) -> PyErr {
    if e.is_user_error() {
        DomainError::new_err(e.to_string())
    } else {
        InternalError::new_err(e.to_string())
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| InternalError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A class a*l - b1*e1 - ... - b6*e6 in the Picard lattice of a cubic surface.
#[pyclass(name = "DivisorClass", module = "cubic_hilbert", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PyDivisorClass(pub ch::DivisorClass);

#[pymethods]
impl PyDivisorClass {
    #[new]
    #[pyo3(signature = (a, *b))]
    fn new(a: i64, b: Vec<i64>) -> PyResult<Self> {
        let b: [i64; 6] = b.try_into().map_err(|_| DomainError::new_err("expected exactly six b coordinates"))?;
        Ok(PyDivisorClass(ch::DivisorClass { a, b }))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyDivisorClass).map_err(err)
    }

    #[staticmethod]
    fn hyperplane() -> Self {
        PyDivisorClass(ch::DivisorClass::HYPERPLANE)
    }

    #[staticmethod]
    fn canonical() -> Self {
        PyDivisorClass(ch::DivisorClass::CANONICAL)
    }

    /// The line class e_i, 1-based.
    #[staticmethod]
    fn exceptional(i: usize) -> PyResult<Self> {
        if !(1..=6).contains(&i) {
            return Err(DomainError::new_err("exceptional index must be in 1..=6"));
        }
        Ok(PyDivisorClass(ch::DivisorClass::exceptional(i)))
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a
    }

    #[getter]
    fn b(&self) -> [i64; 6] {
        self.0.b
    }

    fn coords(&self) -> [i64; 7] {
        self.0.coords()
    }

    fn degree(&self) -> i64 {
        self.0.degree()
    }

    fn genus(&self) -> i64 {
        self.0.genus()
    }

    fn self_intersection(&self) -> i64 {
        self.0.self_intersection()
    }

    fn intersect(&self, other: &PyDivisorClass) -> i64 {
        self.0.intersect(&other.0)
    }

    fn __add__(&self, other: &PyDivisorClass) -> Self {
        PyDivisorClass(self.0 + other.0)
    }

    fn __sub__(&self, other: &PyDivisorClass) -> Self {
        PyDivisorClass(self.0 - other.0)
    }

    fn __neg__(&self) -> Self {
        PyDivisorClass(-self.0)
    }

    fn __mul__(&self, k: i64) -> Self {
        PyDivisorClass(k * self.0)
    }

    fn __rmul__(&self, k: i64) -> Self {
        PyDivisorClass(k * self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let c = self.0.coords();
        format!("DivisorClass({})", c.map(|x| x.to_string()).join(", "))
    }
}

/// Accepts a `DivisorClass`, a 7-sequence of ints, or a string.
fn class_arg(obj: &Bound<'_, PyAny>) -> PyResult<ch::DivisorClass> {
    if let Ok(c) = obj.extract::<PyDivisorClass>() {
        return Ok(c.0);
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    let c: [i64; 7] = obj.extract().map_err(|_| DomainError::new_err("expected DivisorClass, 7 ints, or a string"))?;
    Ok(c.into())
}

fn key_arg(obj: &Bound<'_, PyAny>) -> PyResult<ch::FamilyKey> {
    ch::FamilyKey::new(class_arg(obj)?).map_err(err)
}

/// Returns `(standard_class, word)` with the word as a list of strings.
#[pyfunction]
fn standardize(class: &Bound<'_, PyAny>) -> PyResult<(PyDivisorClass, Vec<String>)> {
    let sf = ch::standardize(&class_arg(class)?).map_err(err)?;
    Ok((PyDivisorClass(sf.class), sf.word.iter().map(ToString::to_string).collect()))
}

/// Applies a word of reflections such as `["swap(1,2)", "cremona"]`.
#[pyfunction]
fn apply_word(class: &Bound<'_, PyAny>, word: Vec<String>) -> PyResult<PyDivisorClass> {
    let word = word.iter().map(|w| w.parse::<ch::Reflection>()).collect::<Result<Vec<_>, _>>().map_err(err)?;
    Ok(PyDivisorClass(ch::apply_word(&class_arg(class)?, &word)))
}

/// `(h0, h1, h2)` of the line bundle.
#[pyfunction]
fn cohomology(class: &Bound<'_, PyAny>) -> PyResult<(i64, i64, i64)> {
    let c = ch::cohomology(&class_arg(class)?).map_err(err)?;
    Ok((c.h0, c.h1, c.h2))
}

#[pyfunction]
fn decompose<'py>(py: Python<'py>, class: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ch::decompose(&class_arg(class)?).map_err(err)?)
}

#[pyfunction]
fn is_nef(class: &Bound<'_, PyAny>) -> PyResult<bool> {
    ch::is_nef(&class_arg(class)?).map_err(err)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, class: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ch::classify(&key_arg(class)?).map_err(err)?)
}

#[pyfunction]
fn h1_ideal(class: &Bound<'_, PyAny>, n: u32) -> PyResult<i64> {
    ch::h1_ideal(&key_arg(class)?, n).map_err(err)
}

#[pyfunction]
fn h1_ideal_3_closed_form(class: &Bound<'_, PyAny>) -> PyResult<i64> {
    ch::h1_ideal_3_closed_form(&key_arg(class)?).map_err(err)
}

#[pyfunction]
fn verify_core<'py>(py: Python<'py>, class: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ch::verify_core(&key_arg(class)?).map_err(err)?)
}

/// Admissible multidegrees of degree `d`, for one genus or all.
#[pyfunction]
#[pyo3(signature = (degree, genus=None))]
fn enumerate(degree: i64, genus: Option<i64>) -> PyResult<Vec<PyDivisorClass>> {
    let keys = match genus {
        Some(g) => ch::enumerate(degree, g),
        None => ch::enumerate_degree(degree),
    }
    .map_err(err)?;
    Ok(keys.into_iter().map(|k| PyDivisorClass(k.class())).collect())
}

#[pyfunction]
#[pyo3(signature = (start, stop, all_genera=false))]
fn sweep<'py>(py: Python<'py>, start: i64, stop: i64, all_genera: bool) -> PyResult<Bound<'py, PyAny>> {
    let mode = if all_genera { GenusMode::All } else { GenusMode::OmegaOnly };
    let reports = py.detach(|| ch::sweep(start..=stop, mode)).map_err(err)?;
    to_py(py, &reports)
}

#[pyfunction]
fn classify_quadric<'py>(py: Python<'py>, a: i64, b: i64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ch::classify_quadric(a, b).map_err(err)?)
}

#[pyfunction]
fn cohomology_quadric(m: i64, n: i64) -> (i64, i64, i64) {
    let c = ch::cohomology_quadric(m, n);
    (c.h0, c.h1, c.h2)
}

#[pyfunction]
#[pyo3(signature = (radius=2, max_degree=20))]
fn selftest<'py>(py: Python<'py>, radius: i64, max_degree: i64) -> PyResult<Bound<'py, PyAny>> {
    if !(0..=8).contains(&radius) || !(10..=ch::hilbert::MAX_SWEEP_DEGREE).contains(&max_degree) {
        return Err(DomainError::new_err("selftest needs 0 <= radius <= 8 and 10 <= max_degree <= 40"));
    }
    let checks = py.detach(|| ch::selftest::run(radius, max_degree)).map_err(err)?;
    to_py(py, &checks)
}

#[pymodule]
#[pyo3(name = "cubic_hilbert")]
pub fn cubic_hilbert_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyDivisorClass>()?;
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add("InternalError", py.get_type::<InternalError>())?;
    m.add_function(wrap_pyfunction!(standardize, m)?)?;
    m.add_function(wrap_pyfunction!(apply_word, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(is_nef, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(h1_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(h1_ideal_3_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(verify_core, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(classify_quadric, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology_quadric, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
