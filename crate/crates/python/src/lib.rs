//! Python bindings for `shi_basis`.
//!
//! Rationals cross the boundary as `fractions.Fraction`, polynomials and
//! derivations as wrapper classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use ::shi_basis as sb;
use sb::derivations as der;
use sb::expr::{parse_derivation, parse_polynomial};
use sb::latex::{emit_latex, emit_text, latex_polynomial};
use sb::rational::format_rational;
use sb::verify::{self, VerifyOptions};

fn py_err(e: sb::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &sb::Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(r),))
}

fn fractions<'py>(py: Python<'py>, rs: &[sb::Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    rs.iter().map(|r| fraction(py, r)).collect()
}

#[pyclass(name = "Polynomial", module = "shi_basis_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial(sb::Polynomial);

#[pymethods]
impl PyPolynomial {
    /// Parses `expr` (plain text or LaTeX) in the ring of rank `ell`.
    #[new]
    fn new(expr: &str, ell: usize) -> PyResult<Self> {
        parse_polynomial(expr, ring(ell)?).map(PyPolynomial).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        sb::Polynomial::from_json(s).map(PyPolynomial).map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn latex(&self) -> String {
        latex_polynomial(&self.0)
    }

    #[getter]
    fn ell(&self) -> usize {
        self.0.ring().ell()
    }

    fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Partial derivative in the zero-based variable `var` (`ell + 1` is `z`).
    fn derivative(&self, var: usize) -> PyResult<Self> {
        self.0.derivative(var).map(PyPolynomial).map_err(py_err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyPolynomial).map_err(py_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyPolynomial).map_err(py_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyPolynomial).map_err(py_err)
    }

    fn __neg__(&self) -> Self {
        PyPolynomial(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}', ell={})", self.0, self.0.ring().ell())
    }
}

#[pyclass(name = "Derivation", module = "shi_basis_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDerivation(sb::Derivation);

#[pymethods]
impl PyDerivation {
    /// Parses `expr` such as `"x1*d1 + z*dz"` or LaTeX with `\partial_{i}`.
    #[new]
    fn new(expr: &str, ell: usize) -> PyResult<Self> {
        parse_derivation(expr, ring(ell)?).map(PyDerivation).map_err(py_err)
    }

    #[getter]
    fn ell(&self) -> usize {
        self.0.ring().ell()
    }

    /// Coefficients of `d/dx_1, .., d/dx_{ell+1}, d/dz`.
    fn coeffs(&self) -> Vec<PyPolynomial> {
        self.0.coeffs().iter().cloned().map(PyPolynomial).collect()
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn apply(&self, p: &PyPolynomial) -> PyResult<PyPolynomial> {
        self.0.apply(&p.0).map(PyPolynomial).map_err(py_err)
    }

    fn decone(&self) -> Self {
        PyDerivation(self.0.decone())
    }

    fn latex(&self) -> String {
        emit_latex(&self.0)
    }

    fn __str__(&self) -> String {
        emit_text(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Derivation('{}', ell={})", emit_text(&self.0), self.0.ring().ell())
    }
}

#[pyclass(name = "ShiCone", module = "shi_basis_py", frozen)]
struct PyShiCone(sb::ShiCone);

#[pymethods]
impl PyShiCone {
    #[new]
    fn new(ell: usize) -> PyResult<Self> {
        sb::ShiCone::new(ell).map(PyShiCone).map_err(py_err)
    }

    #[getter]
    fn ell(&self) -> usize {
        self.0.ell()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn hyperplanes(&self) -> Vec<String> {
        self.0.hyperplanes().iter().map(|h| h.to_string()).collect()
    }

    fn defining_polynomial(&self) -> PyPolynomial {
        PyPolynomial(self.0.defining_polynomial())
    }

    /// Whether `theta` maps every defining form into the ideal it generates.
    fn contains(&self, theta: &PyDerivation) -> PyResult<bool> {
        verify::check_membership(&theta.0, &self.0)
            .map(|o| o.passed())
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("ShiCone(ell={})", self.0.ell())
    }
}

fn ring(ell: usize) -> PyResult<sb::Ring> {
    if ell < 1 {
        return Err(PyValueError::new_err("ell must be at least 1"));
    }
    Ok(sb::Ring::new(ell))
}

#[pyfunction]
fn bernoulli_number(py: Python<'_>, k: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &sb::bernoulli::bernoulli_number(k))
}

/// Coefficients of `B_{p,q}(x)` in ascending degree.
#[pyfunction]
fn bpq(py: Python<'_>, p: usize, q: usize) -> PyResult<Vec<Bound<'_, PyAny>>> {
    fractions(py, sb::bernoulli::bpq(p, q).coeffs())
}

#[pyfunction]
fn eta1(ell: usize) -> PyResult<PyDerivation> {
    ring(ell)?;
    Ok(PyDerivation(der::eta1(ell)))
}

#[pyfunction]
fn eta2(ell: usize) -> PyResult<PyDerivation> {
    ring(ell)?;
    Ok(PyDerivation(der::eta2(ell)))
}

#[pyfunction]
fn phi(j: usize, ell: usize) -> PyResult<PyDerivation> {
    der::phi(j, ell).map(PyDerivation).map_err(py_err)
}

/// `[(name, derivation), ...]` for `eta1, eta2, phi1, .., phi_ell`.
#[pyfunction]
#[pyo3(name = "shi_basis")]
fn basis(ell: usize) -> PyResult<Vec<(String, PyDerivation)>> {
    let basis = der::shi_basis(ell).map_err(py_err)?;
    Ok(basis
        .into_iter()
        .map(|nd| (nd.name, PyDerivation(nd.derivation)))
        .collect())
}

/// Runs the verification suite and returns the report as a dict.
#[pyfunction]
#[pyo3(name = "verify", signature = (ell, skip_saito = false, oracle_primes = None, max_degree_guard = None))]
fn run_verify<'py>(
    py: Python<'py>,
    ell: usize,
    skip_saito: bool,
    oracle_primes: Option<Vec<u64>>,
    max_degree_guard: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let options = VerifyOptions {
        skip_saito,
        oracle_primes,
        max_degree_guard,
    };
    let report = py
        .detach(|| verify::run_verification(ell, &options))
        .map_err(py_err)?;
    py.import("json")?.getattr("loads")?.call1((report.to_json(),))
}

#[pyfunction]
fn chamber_count(py: Python<'_>, ell: usize) -> PyResult<Bound<'_, PyAny>> {
    let n = py.detach(|| verify::chamber_count(ell)).map_err(py_err)?;
    py.import("builtins")?.getattr("int")?.call1((n.to_string(),))
}

/// Coefficients of the characteristic polynomial in ascending degree.
#[pyfunction]
fn charpoly_finite_field<'py>(
    py: Python<'py>,
    ell: usize,
    primes: Vec<u64>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let chi = py
        .detach(|| verify::charpoly_finite_field(ell, &primes))
        .map_err(py_err)?;
    fractions(py, chi.coeffs())
}

#[pymodule]
fn shi_basis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyDerivation>()?;
    m.add_class::<PyShiCone>()?;
    m.add_function(wrap_pyfunction!(bernoulli_number, m)?)?;
    m.add_function(wrap_pyfunction!(bpq, m)?)?;
    m.add_function(wrap_pyfunction!(eta1, m)?)?;
    m.add_function(wrap_pyfunction!(eta2, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add_function(wrap_pyfunction!(chamber_count, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_finite_field, m)?)?;
    m.add("__all__", PyList::new(m.py(), [
        "Polynomial", "Derivation", "ShiCone", "bernoulli_number", "bpq", "eta1", "eta2",
        "phi", "shi_basis", "verify", "chamber_count", "charpoly_finite_field",
    ])?)?;
    Ok(())
}
