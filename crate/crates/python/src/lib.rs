//! Python bindings: `import pydeltakit`.
//!
//! Rationals cross the boundary as `fractions.Fraction`; points are accepted
//! either as a literal such as `"1/3,1/3,1/3"` or as a sequence of anything
//! whose `str()` is a rational literal (ints, `Fraction`s, strings).

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};

use deltakit::realization::{self, BaryPoint, COINCIDENCE_NOTE};
use deltakit::report::SuiteConfig;
use deltakit::{hadamard as had, promonoidal as pro, simplex, Ordinal, Rational};

fn value_error(e: deltakit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A monotone map `[m] -> [n]` given by its value table.
#[pyclass(name = "MonotoneMap", module = "pydeltakit", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyMonotoneMap {
    inner: simplex::MonotoneMap,
}

impl From<simplex::MonotoneMap> for PyMonotoneMap {
    fn from(inner: simplex::MonotoneMap) -> Self {
        PyMonotoneMap { inner }
    }
}

#[pymethods]
impl PyMonotoneMap {
    /// `values` is a list of naturals or a literal like `"0,1,1"`; `target`
    /// defaults to the largest value.
    #[new]
    #[pyo3(signature = (values, target=None))]
    fn new(values: &Bound<'_, PyAny>, target: Option<BigUint>) -> PyResult<Self> {
        let target = target.map(Ordinal::from);
        let inner = if let Ok(s) = values.cast::<PyString>() {
            simplex::MonotoneMap::parse(s.to_str()?, target)
        } else {
            let values: Vec<BigUint> = values.extract()?;
            let target = target.unwrap_or_else(|| Ordinal::from(values.iter().max().cloned().unwrap_or_default()));
            let m = values.len().checked_sub(1).ok_or_else(|| PyValueError::new_err("empty value table"))?;
            simplex::make_map(m, target, values)
        };
        inner.map(Self::from).map_err(value_error)
    }

    #[getter]
    fn source(&self) -> usize {
        self.inner.source()
    }

    #[getter]
    fn target(&self) -> BigUint {
        self.inner.target().top().clone()
    }

    #[getter]
    fn values(&self) -> Vec<BigUint> {
        self.inner.values().to_vec()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    /// `self ∘ other`.
    fn compose(&self, other: &PyMonotoneMap) -> PyResult<PyMonotoneMap> {
        simplex::compose(&self.inner, &other.inner).map(Into::into).map_err(value_error)
    }

    fn signature(&self) -> String {
        self.inner.signature()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonotoneMap(\"{}\", target={})", self.inner, self.inner.target().top())
    }

    fn __len__(&self) -> usize {
        self.inner.source() + 1
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn fractions<'py>(py: Python<'py>, p: &BaryPoint) -> PyResult<Bound<'py, PyList>> {
    let items = p.coords().iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse().map_err(value_error)
}

fn point(obj: &Bound<'_, PyAny>) -> PyResult<BaryPoint> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(value_error);
    }
    let coords = obj
        .try_iter()?
        .map(|item| rational(&item?))
        .collect::<PyResult<Vec<_>>>()?;
    BaryPoint::new(coords).map_err(value_error)
}

fn maps(list: Vec<simplex::MonotoneMap>) -> Vec<PyMonotoneMap> {
    list.into_iter().map(Into::into).collect()
}

/// Every monotone map `[m] -> [n]`, in lexicographic order.
#[pyfunction]
fn enumerate_maps(m: usize, n: usize) -> Vec<PyMonotoneMap> {
    maps(simplex::enumerate_maps(m, n))
}

/// `C(m+n+1, m+1)`.
#[pyfunction]
fn count_maps(m: usize, n: usize) -> BigUint {
    simplex::count_maps(m, n)
}

#[pyfunction]
fn identity(n: usize) -> PyMonotoneMap {
    simplex::identity(n).into()
}

/// Pointwise product `α ⊠ β`, landing in `[p·q]`.
#[pyfunction]
fn hadamard(alpha: &PyMonotoneMap, beta: &PyMonotoneMap) -> PyResult<PyMonotoneMap> {
    had::hadamard(&alpha.inner, &beta.inner).map(Into::into).map_err(value_error)
}

/// All `(α, β)` into `[p]`, `[q]` with `α ⊠ β = h`.
#[pyfunction]
fn factor_hadamard(h: &PyMonotoneMap, p: usize, q: usize) -> PyResult<Vec<(PyMonotoneMap, PyMonotoneMap)>> {
    let search = had::factor_hadamard(&h.inner, p, q).map_err(value_error)?;
    Ok(search
        .factorizations
        .into_iter()
        .map(|(a, b)| (a.into(), b.into()))
        .collect())
}

fn kernel(alpha: &PyMonotoneMap, beta: &PyMonotoneMap, gamma: &PyMonotoneMap) -> PyResult<pro::KernelClass> {
    pro::KernelClass::new(alpha.inner.clone(), beta.inner.clone(), gamma.inner.clone()).map_err(value_error)
}

/// `η[α, β, γ] = (α∘γ, β∘γ)`.
#[pyfunction]
fn eta(alpha: &PyMonotoneMap, beta: &PyMonotoneMap, gamma: &PyMonotoneMap) -> PyResult<(PyMonotoneMap, PyMonotoneMap)> {
    let (f, g) = pro::eta(&kernel(alpha, beta, gamma)?);
    Ok((f.into(), g.into()))
}

/// `δ[α, β, γ] = (α ⊠ β) ∘ γ`.
#[pyfunction]
fn delta(alpha: &PyMonotoneMap, beta: &PyMonotoneMap, gamma: &PyMonotoneMap) -> PyResult<PyMonotoneMap> {
    Ok(pro::delta(&kernel(alpha, beta, gamma)?).into())
}

/// `Θ[π; α, β]` with `π = [σx, σy, γ]`.
#[pyfunction]
fn theta(
    sigma_x: &PyMonotoneMap,
    sigma_y: &PyMonotoneMap,
    gamma: &PyMonotoneMap,
    alpha: &PyMonotoneMap,
    beta: &PyMonotoneMap,
) -> PyResult<PyMonotoneMap> {
    let pi = kernel(sigma_x, sigma_y, gamma)?;
    let d = pro::DayClass::new(pi, alpha.inner.clone(), beta.inner.clone()).map_err(value_error)?;
    Ok(pro::theta(&d).into())
}

/// Image of `(α, β; u)` under the realized contraction homotopy.
#[pyfunction]
fn homotopy_point<'py>(
    py: Python<'py>,
    alpha: &PyMonotoneMap,
    beta: &PyMonotoneMap,
    u: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    let v = realization::homotopy_point(&alpha.inner, &beta.inner, &point(u)?).map_err(value_error)?;
    fractions(py, &v)
}

/// `c_0 = (1 - t) + t·w_0`, `c_j = t·w_j`.
#[pyfunction]
fn standard_contraction<'py>(py: Python<'py>, w: &Bound<'py, PyAny>, t: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
    let c = realization::standard_contraction(&point(w)?, &rational(t)?).map_err(value_error)?;
    fractions(py, &c)
}

/// Grid comparison of the affine homotopy with the straight-line
/// contraction. Returns a dict with `points`, `max_deviation`, `witness`
/// (`(u, t, affine, contraction)` or `None`), `vertex_agreement`,
/// `slice_agreement` and `note`.
#[pyfunction]
fn compare_on_grid<'py>(py: Python<'py>, n: usize, m: usize, alpha: &PyMonotoneMap, d: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = realization::compare_on_grid(n, m, &alpha.inner, d).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("points", r.points)?;
    out.set_item("max_deviation", fraction(py, &r.max_deviation)?)?;
    let witness = match &r.witness {
        Some((pt, a, b)) => Some((fractions(py, pt.base())?, fraction(py, pt.t())?, fractions(py, a)?, fractions(py, b)?)),
        None => None,
    };
    out.set_item("witness", witness)?;
    out.set_item("vertex_agreement", r.vertex_agreement)?;
    out.set_item("slice_agreement", r.slice_agreement)?;
    out.set_item("note", (!r.interior_agreement()).then_some(COINCIDENCE_NOTE))?;
    Ok(out)
}

/// Runs the verification suites and returns one report dict per check.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (suite="all", max_dim=3, grid_denominator=4, deep=false, seed=0, sample=None, counterexample_limit=10))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    max_dim: usize,
    grid_denominator: usize,
    deep: bool,
    seed: u64,
    sample: Option<usize>,
    counterexample_limit: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = SuiteConfig {
        suite: suite.to_string(),
        max_dim,
        grid_denominator,
        deep,
        sample_seed: seed,
        sample,
        counterexample_limit,
    };
    let reports = py
        .detach(|| deltakit::suites::run(&config))
        .map_err(value_error)?;
    let json = serde_json::to_string(&reports).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.getattr("loads")?.call1((json,))
}

#[pymodule]
fn pydeltakit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonotoneMap>()?;
    m.add_function(wrap_pyfunction!(enumerate_maps, m)?)?;
    m.add_function(wrap_pyfunction!(count_maps, m)?)?;
    m.add_function(wrap_pyfunction!(identity, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard, m)?)?;
    m.add_function(wrap_pyfunction!(factor_hadamard, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(homotopy_point, m)?)?;
    m.add_function(wrap_pyfunction!(standard_contraction, m)?)?;
    m.add_function(wrap_pyfunction!(compare_on_grid, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
