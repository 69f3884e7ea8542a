//! Python bindings. Reports come back as the same dictionaries the command
//! line prints in `--json` mode; dimensions are integers or `"empty"`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde_json::Value;

use tensordim::spectra::parse_witness;
use tensordim::theorems::{self, CheckOptions};
use tensordim::{
    dsl, spectra, AlgebraPresentation, DimensionValue, MonomialOrder, SpecPoint,
};

create_exception!(tensordim, TensordimError, PyException);

fn err(e: tensordim::Error) -> PyErr {
    TensordimError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).expect("serializable");
    py.import("json")?.call_method1("loads", (text,))
}

fn point(p: &Bound<'_, PyAny>) -> PyResult<SpecPoint> {
    if let Ok(s) = p.cast::<PyString>() {
        return s.to_str()?.parse().map_err(err);
    }
    let n: u64 = p.extract()?;
    n.to_string().parse().map_err(err)
}

fn dim<'py>(py: Python<'py>, d: DimensionValue) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &d)
}

/// A finitely presented algebra over Z, Z/n, F_p or Q.
#[pyclass(name = "Algebra", module = "tensordim", frozen)]
struct PyAlgebra {
    inner: AlgebraPresentation,
}

#[pymethods]
impl PyAlgebra {
    /// Parse a JSON presentation document.
    #[new]
    #[pyo3(signature = (text, order = "grevlex"))]
    fn new(text: &str, order: &str) -> PyResult<Self> {
        let order: MonomialOrder = order.parse().map_err(TensordimError::new_err)?;
        let inner = dsl::parse_algebra_with_order(text, order).map_err(err)?;
        Ok(PyAlgebra { inner })
    }

    /// The product of `k` copies of Z/(2).
    #[staticmethod]
    fn boolean_atoms(k: usize) -> PyResult<Self> {
        let inner = AlgebraPresentation::boolean_atoms(k).map_err(err)?;
        Ok(PyAlgebra { inner })
    }

    fn to_json(&self) -> String {
        dsl::render_algebra(&self.inner)
    }

    #[getter]
    fn base(&self) -> String {
        self.inner.base().to_string()
    }

    #[getter]
    fn num_factors(&self) -> usize {
        self.inner.factors().len()
    }

    fn characteristic<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let c = tensordim::characteristic(&self.inner).map_err(err)?;
        py.import("builtins")?.getattr("int")?.call1((c.to_string(),))
    }

    fn is_effective(&self, at: &Bound<'_, PyAny>) -> PyResult<bool> {
        spectra::is_effective(&self.inner, point(at)?).map_err(err)
    }

    fn dim_at<'py>(&self, py: Python<'py>, at: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        dim(py, spectra::dim_at(&self.inner, point(at)?).map_err(err)?)
    }

    fn fibre_dim<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        dim(py, spectra::fibre_dim(&self.inner).map_err(err)?)
    }

    fn effective_dim<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        dim(py, spectra::effective_dim(&self.inner).map_err(err)?)
    }

    fn effective_spectrum<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &spectra::effective_spectrum(&self.inner).map_err(err)?)
    }

    fn seidenberg_bounds<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &spectra::seidenberg_bounds(&self.inner).map_err(err)?)
    }

    /// Relations of each factor of the fibre ring, rendered as strings.
    fn fibre<'py>(&self, py: Python<'py>, at: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let f = spectra::fibre_at(&self.inner, point(at)?).map_err(err)?;
        let factors: Vec<Value> = f
            .factors()
            .iter()
            .map(|fr| {
                serde_json::json!({
                    "field": fr.field().to_string(),
                    "vars": fr.vars(),
                    "relations": fr.relations().iter().map(|r| r.render(fr.vars())).collect::<Vec<_>>(),
                })
            })
            .collect();
        to_py(py, &factors)
    }

    /// Altitude formula check for a witness document.
    fn verify_af<'py>(&self, py: Python<'py>, witness: &str) -> PyResult<Bound<'py, PyAny>> {
        let w = parse_witness(witness, &self.inner).map_err(err)?;
        let r = spectra::verify_af_at_prime(&self.inner, w.point, w.factor, &w.prime, &w.components)
            .map_err(err)?;
        to_py(py, &r)
    }

    fn __repr__(&self) -> String {
        format!("Algebra({})", dsl::render_algebra(&self.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn is_triplet(a: &PyAlgebra, b: &PyAlgebra) -> PyResult<bool> {
    theorems::is_triplet(&a.inner, &b.inner).map_err(err)
}

#[pyfunction]
fn effective_spectrum_tensor<'py>(py: Python<'py>, a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &theorems::effective_spectrum_tensor(&a.inner, &b.inner).map_err(err)?)
}

#[pyfunction]
fn dim_tensor_at<'py>(py: Python<'py>, a: &PyAlgebra, b: &PyAlgebra, at: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    dim(py, theorems::dim_tensor_at(&a.inner, &b.inner, point(at)?).map_err(err)?)
}

#[pyfunction]
fn dim_tensor<'py>(py: Python<'py>, a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &theorems::dim_tensor(&a.inner, &b.inner).map_err(err)?)
}

#[pyfunction]
fn dim_tensor_zero_dim<'py>(py: Python<'py>, a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &theorems::dim_tensor_zero_dim(&a.inner, &b.inner).map_err(err)?)
}

#[pyfunction]
fn boolean_dim<'py>(py: Python<'py>, k: usize, b: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &theorems::boolean_dim(k, &b.inner).map_err(err)?)
}

#[pyfunction]
fn cross_check<'py>(py: Python<'py>, a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &theorems::cross_check(&a.inner, &b.inner).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (seed, count = 20))]
fn random_cross_check<'py>(py: Python<'py>, seed: u64, count: usize) -> PyResult<Bound<'py, PyAny>> {
    let opts = CheckOptions {
        seed,
        count,
        ..CheckOptions::default()
    };
    let report = py.detach(|| theorems::random_cross_check(&opts)).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "tensordim")]
pub fn tensordim_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add("TensordimError", m.py().get_type::<TensordimError>())?;
    m.add_function(wrap_pyfunction!(is_triplet, m)?)?;
    m.add_function(wrap_pyfunction!(effective_spectrum_tensor, m)?)?;
    m.add_function(wrap_pyfunction!(dim_tensor_at, m)?)?;
    m.add_function(wrap_pyfunction!(dim_tensor, m)?)?;
    m.add_function(wrap_pyfunction!(dim_tensor_zero_dim, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(random_cross_check, m)?)?;
    Ok(())
}
