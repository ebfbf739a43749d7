//! Python bindings for the `rootcircle` core crate.
//!
//! Splitting types cross the boundary as `dict[int, int]` (degree to
//! multiplicity); reports cross as plain dicts decoded from their JSON form.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use rootcircle::{
    audit_model, curvature_report, flatness_report, string_inventory, tangent_splitting,
    AuditModel, BStringRep, NamedModel, Root, SplittingType,
};

fn err(e: rootcircle::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_dict(s: &SplittingType) -> BTreeMap<i64, u64> {
    s.iter_desc().collect()
}

fn from_dict(d: BTreeMap<i64, u64>) -> SplittingType {
    SplittingType::from_pairs(d)
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: Arc<rootcircle::RootSystem>,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(lie_type: &str) -> PyResult<Self> {
        let t = lie_type.parse().map_err(err)?;
        Ok(PyRootSystem {
            inner: Arc::new(rootcircle::RootSystem::build(t)),
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .positive_roots()
            .iter()
            .map(|r| r.coefficients().to_vec())
            .collect()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().to_vec()
    }

    fn is_root(&self, v: Vec<i64>) -> PyResult<bool> {
        self.inner.is_root(&v).map_err(err)
    }

    fn pairing(&self, beta: Vec<i64>, alpha: Vec<i64>) -> PyResult<i64> {
        self.inner
            .pairing(&Root::from_coefficients(beta), &Root::from_coefficients(alpha))
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.lie_type())
    }
}

#[pyclass(name = "Parabolic", frozen)]
struct PyParabolic {
    inner: rootcircle::Parabolic,
}

#[pymethods]
impl PyParabolic {
    #[new]
    fn new(lie_type: &str, crossed: Vec<usize>) -> PyResult<Self> {
        let t = lie_type.parse().map_err(err)?;
        let inner = rootcircle::Parabolic::from_type(t, crossed).map_err(err)?;
        Ok(PyParabolic { inner })
    }

    /// Named model such as `projective:3` or `spinor:5`.
    #[staticmethod]
    fn from_model(name: &str) -> PyResult<Self> {
        let model: NamedModel = name.parse().map_err(err)?;
        Ok(PyParabolic {
            inner: model.to_parabolic().map_err(err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    #[getter]
    fn dim_gp(&self) -> usize {
        self.inner.tangent_dimension()
    }

    fn omitted_roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .omitted_roots()
            .iter()
            .map(|r| r.coefficients().to_vec())
            .collect()
    }

    fn strings<'py>(&self, py: Python<'py>, alpha: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let inv = string_inventory(&self.inner, &Root::from_coefficients(alpha)).map_err(err)?;
        to_py(py, &inv)
    }

    fn tangent_splitting(&self, alpha: Vec<i64>) -> PyResult<BTreeMap<i64, u64>> {
        tangent_splitting(&self.inner, &Root::from_coefficients(alpha))
            .map(|s| to_dict(&s))
            .map_err(err)
    }

    fn curvature_report<'py>(&self, py: Python<'py>, alpha: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let rep = curvature_report(&self.inner, &Root::from_coefficients(alpha)).map_err(err)?;
        to_py(py, &rep)
    }

    /// `{"verdict": bool, "spans_tangent": bool, "alphas": [...]}`.
    fn flatness<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let f = flatness_report(&self.inner).map_err(err)?;
        to_py(
            py,
            &serde_json::json!({
                "dim_g": f.dim_g,
                "dim_gp": f.dim_gp,
                "verdict": f.verdict,
                "spans_tangent": f.spans_tangent,
                "alphas": f.reports,
            }),
        )
    }

    fn __repr__(&self) -> String {
        format!("Parabolic('{}')", self.inner.label())
    }
}

#[pyclass(name = "BStringRep", frozen)]
struct PyBStringRep {
    inner: BStringRep,
}

#[pymethods]
impl PyBStringRep {
    #[new]
    fn new(k: i64, m: usize) -> PyResult<Self> {
        Ok(PyBStringRep {
            inner: BStringRep::new(k, m).map_err(err)?,
        })
    }

    #[getter]
    fn k(&self) -> i64 {
        self.inner.top_weight()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.node_count()
    }

    fn weights(&self) -> Vec<i64> {
        self.inner.weights()
    }

    fn canonical_matrices(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        self.inner.canonical_matrices()
    }

    fn is_equivariantly_trivial(&self) -> bool {
        self.inner.is_equivariantly_trivial()
    }

    fn to_splitting(&self) -> BTreeMap<i64, u64> {
        to_dict(&self.inner.to_splitting())
    }

    fn invariant_subspace(&self, keep: usize) -> PyResult<Self> {
        Ok(PyBStringRep {
            inner: self.inner.invariant_subspace(keep).map_err(err)?,
        })
    }

    fn quotient(&self, remove: usize) -> PyResult<Self> {
        Ok(PyBStringRep {
            inner: self.inner.quotient(remove).map_err(err)?,
        })
    }

    fn tensor(&self, other: &PyBStringRep) -> BTreeMap<i64, u64> {
        to_dict(&rootcircle::tensor_reps(&self.inner, &other.inner))
    }

    fn __repr__(&self) -> String {
        format!("BStringRep(k={}, m={})", self.inner.top_weight(), self.inner.node_count())
    }
}

#[pyfunction]
fn dual(s: BTreeMap<i64, u64>) -> BTreeMap<i64, u64> {
    to_dict(&from_dict(s).dual())
}

#[pyfunction]
fn tensor(a: BTreeMap<i64, u64>, b: BTreeMap<i64, u64>) -> BTreeMap<i64, u64> {
    to_dict(&from_dict(a).tensor(&from_dict(b)))
}

#[pyfunction]
fn wedge2(s: BTreeMap<i64, u64>) -> BTreeMap<i64, u64> {
    to_dict(&from_dict(s).wedge2())
}

#[pyfunction]
fn h0(s: BTreeMap<i64, u64>) -> u64 {
    from_dict(s).h0()
}

#[pyfunction]
#[pyo3(signature = (model, ij=None))]
fn audit<'py>(py: Python<'py>, model: &str, ij: Option<(usize, usize)>) -> PyResult<Bound<'py, PyAny>> {
    let named: NamedModel = model.parse().map_err(err)?;
    let report = audit_model(&AuditModel::from_named(&named, ij).map_err(err)?).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
fn rootcircle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyParabolic>()?;
    m.add_class::<PyBStringRep>()?;
    m.add_function(wrap_pyfunction!(dual, m)?)?;
    m.add_function(wrap_pyfunction!(tensor, m)?)?;
    m.add_function(wrap_pyfunction!(wedge2, m)?)?;
    m.add_function(wrap_pyfunction!(h0, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    Ok(())
}
