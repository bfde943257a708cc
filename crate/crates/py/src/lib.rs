//! Python bindings. Algebras are wrapped in `Algebra`; reports come back as
//! plain dicts decoded from the same JSON the command line prints.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

use tenfold_core::clifford::{self, CliffordSignature};
use tenfold_core::divclass::{self, ClassifyError, TenfoldClass};
use tenfold_core::repthree::{self, AnyRep, DEFAULT_CLOSURE_CAP};
use tenfold_core::scalar::{GaussianRational, Rational};
use tenfold_core::selftest;
use tenfold_core::superalg::{AnyAlgebra, SuperAlgebra};

create_exception!(tenfold, Rejected, PyException, "Well-formed input rejected by the mathematics; args[1] is the witness.");

fn malformed(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(malformed)?;
    Ok(PyModule::import(py, "json")?.call_method1("loads", (text,))?.unbind())
}

fn to_py_ser(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    to_py(py, &serde_json::to_value(value).map_err(malformed)?)
}

fn signature(p: usize, q: usize) -> PyResult<CliffordSignature> {
    CliffordSignature::new(p, q).map_err(malformed)
}

/// A finite-dimensional superalgebra over the rationals or Gaussian rationals.
#[pyclass(frozen, module = "tenfold")]
struct Algebra {
    inner: AnyAlgebra,
}

impl Algebra {
    fn real(&self) -> PyResult<SuperAlgebra<Rational>> {
        match &self.inner {
            AnyAlgebra::Real(a) => Ok(a.clone()),
            AnyAlgebra::Complex(_) => Err(malformed("expected a real algebra; call realify() first")),
        }
    }
}

fn parse_coords<F: tenfold_core::scalar::Scalar>(coords: Vec<String>) -> PyResult<Vec<F>> {
    coords
        .into_iter()
        .map(|s| serde_json::from_value(serde_json::Value::String(s)).map_err(malformed))
        .collect()
}

#[pymethods]
impl Algebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Algebra> {
        AnyAlgebra::from_json(text).map(|inner| Algebra { inner }).map_err(malformed)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> &'static str {
        self.inner.field().as_str()
    }

    #[getter]
    fn parity(&self) -> Vec<u32> {
        self.inner.parity().iter().map(|p| u32::from(p.bit())).collect()
    }

    fn tensor(&self, other: &Algebra) -> PyResult<Algebra> {
        self.inner
            .tensor(&other.inner)
            .map(|inner| Algebra { inner })
            .map_err(malformed)
    }

    fn realify(&self) -> Algebra {
        let inner = match &self.inner {
            AnyAlgebra::Real(a) => AnyAlgebra::Real(a.clone()),
            AnyAlgebra::Complex(a) => AnyAlgebra::Real(divclass::realify(a)),
        };
        Algebra { inner }
    }

    /// Classification report as a dict; raises `Rejected` with the witness.
    fn classify(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let alg = self.real()?;
        match divclass::classify(&alg) {
            Ok(report) => to_py_ser(py, &report),
            Err(e @ (ClassifyError::NotDivision(_) | ClassifyError::NotSuperDivision(_))) => {
                let w = e.witness().expect("rejections carry witnesses");
                let witness = to_py_ser(py, w)?;
                Err(Rejected::new_err((format!("{e}: {}", w.describe(&alg)), witness)))
            }
            Err(e) => Err(PyException::new_err(e.to_string())),
        }
    }

    /// Inverse of the element with the given coordinates (rationals as
    /// strings, e.g. `"1/2"`). Real algebras only.
    fn invert(&self, coords: Vec<String>) -> PyResult<Vec<String>> {
        let alg = self.real()?;
        let x: Vec<Rational> = parse_coords(coords)?;
        if x.len() != alg.dim() {
            return Err(malformed(format!("expected {} coordinates", alg.dim())));
        }
        alg.invert_coords(&x)
            .map(|y| y.iter().map(ToString::to_string).collect())
            .map_err(|e| Rejected::new_err((e.to_string(), alg.format_coords(&x))))
    }

    fn format(&self, coords: Vec<String>) -> PyResult<String> {
        match &self.inner {
            AnyAlgebra::Real(a) => Ok(a.format_coords(&parse_coords::<Rational>(coords)?)),
            AnyAlgebra::Complex(_) => Err(malformed("formatting takes real coordinates")),
        }
    }

    fn __repr__(&self) -> String {
        format!("Algebra(field={}, dim={})", self.inner.field().as_str(), self.inner.dim())
    }
}

#[pyfunction]
fn canonical(label: &str) -> PyResult<Algebra> {
    let class = TenfoldClass::from_label(label).ok_or_else(|| malformed(format!("unknown label {label:?}")))?;
    Ok(Algebra {
        inner: divclass::canonical(class).into(),
    })
}

#[pyfunction]
fn labels() -> Vec<&'static str> {
    TenfoldClass::ALL.iter().map(|c| c.label()).collect()
}

#[pyfunction]
#[pyo3(name = "clifford")]
fn clifford_real(p: usize, q: usize) -> PyResult<Algebra> {
    Ok(Algebra {
        inner: clifford::clifford_real(signature(p, q)?).into(),
    })
}

#[pyfunction]
fn clifford_complex(n: usize) -> PyResult<Algebra> {
    let alg: SuperAlgebra<GaussianRational> = clifford::clifford_complex(n).map_err(malformed)?;
    Ok(Algebra { inner: alg.into() })
}

#[pyfunction]
fn brauer_wall(p: usize, q: usize) -> PyResult<u8> {
    Ok(clifford::brauer_wall(signature(p, q)?).value)
}

/// Certificate for `Cl(p+1,q+1) ≅ Cl(p,q) ⊗ Cl(1,1)`.
#[pyfunction]
fn periodicity(py: Python<'_>, p: usize, q: usize) -> PyResult<Py<PyAny>> {
    match clifford::verify_periodicity(signature(p, q)?) {
        Ok(cert) => to_py_ser(py, &cert),
        Err(e) => Err(Rejected::new_err((e.to_string(), py.None()))),
    }
}

/// Order, commutant dimension and type of a representation given as JSON;
/// `fs` is added for irreducible representations.
#[pyfunction]
#[pyo3(signature = (rep_json, cap = DEFAULT_CLOSURE_CAP))]
fn analyze_rep(py: Python<'_>, rep_json: &str, cap: usize) -> PyResult<Py<PyAny>> {
    let rep = AnyRep::from_json(rep_json, cap).map_err(malformed)?;
    let (mut report, fs) = match &rep {
        AnyRep::Real(r) => (repthree::rep_report(r), repthree::fs_indicator(&repthree::complexify(r))),
        AnyRep::Complex(r) => (repthree::rep_report(r), repthree::fs_indicator(r)),
    };
    report.fs = fs.ok().map(repthree::fs_string);
    to_py_ser(py, &report)
}

/// Runs the self-test and returns `(passed, matrix)`.
#[pyfunction]
#[pyo3(signature = (sections = None))]
fn run_selftest(sections: Option<Vec<String>>) -> PyResult<(bool, String)> {
    let sections = sections
        .unwrap_or_default()
        .iter()
        .map(|s| s.parse::<selftest::Section>().map_err(malformed))
        .collect::<PyResult<Vec<_>>>()?;
    let report = selftest::run(&selftest::Options { sections, fault: None });
    Ok((report.passed(), report.matrix()))
}

#[pymodule]
fn tenfold(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add("Rejected", m.py().get_type::<Rejected>())?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(labels, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_real, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_complex, m)?)?;
    m.add_function(wrap_pyfunction!(brauer_wall, m)?)?;
    m.add_function(wrap_pyfunction!(periodicity, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_rep, m)?)?;
    m.add_function(wrap_pyfunction!(run_selftest, m)?)?;
    Ok(())
}
