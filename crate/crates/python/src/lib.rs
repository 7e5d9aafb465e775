//! Python bindings: `import pfbraid`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pfbraid_core::bijection::{in_vector, reconstruct};
use pfbraid_core::braid::{apply_word, mutate, BraidWord, Direction};
use pfbraid_core::dbasis::{enumerate_recursive, to_arcs};
use pfbraid_core::noncrossing::{chain_to_basis, lambda_chain, pi_chain, NCChain};
use pfbraid_core::parking::{self, to_diagram};
use pfbraid_core::quiver::{hom_ext_table, is_exceptional_sequence, modules_of};
use pfbraid_core::render::{self, RenderSpec};
use pfbraid_core::{verify as harness, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(format!("[{}] {e}", e.code()))
}

fn from_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(frozen, eq, hash, skip_from_py_object, module = "pfbraid")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct ParkingFunction(parking::ParkingFunction);

#[pymethods]
impl ParkingFunction {
    #[new]
    fn new(values: Vec<usize>) -> PyResult<Self> {
        parking::ParkingFunction::new(values).map(Self).map_err(err)
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.values().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn is_nondecreasing(&self) -> bool {
        self.0.is_nondecreasing()
    }

    fn to_basis(&self) -> DistinguishedBasis {
        DistinguishedBasis(reconstruct(&self.0))
    }

    fn diagram(&self) -> String {
        render::diagram_ascii(&to_diagram(&self.0))
    }

    #[pyo3(signature = (k, direction = "alpha"))]
    fn mutate(&self, k: usize, direction: &str) -> PyResult<Self> {
        Ok(Self(in_vector(&self.to_basis().mutate(k, direction)?.0)))
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("ParkingFunction({:?})", self.0.values())
    }
}

#[pyclass(frozen, eq, hash, skip_from_py_object, module = "pfbraid")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct DistinguishedBasis(pfbraid_core::DistinguishedBasis);

fn direction(s: &str) -> PyResult<Direction> {
    match s {
        "alpha" | "left" => Ok(Direction::Left),
        "beta" | "right" => Ok(Direction::Right),
        _ => Err(PyValueError::new_err(format!("direction must be 'alpha' or 'beta', got {s:?}"))),
    }
}

#[pymethods]
impl DistinguishedBasis {
    /// `intervals` is a list of `(lo, hi)` pairs; validated.
    #[new]
    fn new(intervals: Vec<(usize, usize)>) -> PyResult<Self> {
        let pairs: Vec<[usize; 2]> = intervals.into_iter().map(|(a, b)| [a, b]).collect();
        pfbraid_core::DistinguishedBasis::from_intervals(pairs.len(), &pairs).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_chain(chain: Vec<Vec<Vec<usize>>>) -> PyResult<Self> {
        let c = NCChain::from_blocks(chain).map_err(err)?;
        Ok(Self(chain_to_basis(&c)))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn intervals(&self) -> Vec<(usize, usize)> {
        self.0.intervals().into_iter().map(|[a, b]| (a, b)).collect()
    }

    fn in_vector(&self) -> ParkingFunction {
        ParkingFunction(in_vector(&self.0))
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        to_arcs(&self.0).arcs.iter().map(|a| (a.left, a.right)).collect()
    }

    #[pyo3(signature = (k, direction = "alpha"))]
    fn mutate(&self, k: usize, direction: &str) -> PyResult<Self> {
        mutate(&self.0, k, self::direction(direction)?).map(Self).map_err(err)
    }

    /// Letters `k` / `-k` for alpha_k / beta_k, applied left to right.
    fn apply_word(&self, word: &str) -> PyResult<Self> {
        let w: BraidWord = word.parse().map_err(err)?;
        apply_word(&self.0, &w).map(Self).map_err(err)
    }

    /// `{"hom": [[..]], "ext": [[..]], "exceptional": bool}`.
    fn hom_ext<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let t = hom_ext_table(&self.0);
        let exceptional = is_exceptional_sequence(&modules_of(&self.0));
        from_json(py, &serde_json::json!({ "hom": t.hom, "ext": t.ext, "exceptional": exceptional }))
    }

    fn pi_chain(&self) -> Vec<Vec<Vec<usize>>> {
        pi_chain(&self.0).partitions().iter().map(|p| p.blocks().to_vec()).collect()
    }

    fn lambda_chain(&self) -> Vec<usize> {
        lambda_chain(&pi_chain(&self.0))
    }

    fn render(&self, format: &str, target: &str) -> PyResult<String> {
        let spec = RenderSpec::new(format.parse().map_err(err)?, target.parse().map_err(err)?).map_err(err)?;
        render::render(spec, &self.0).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("DistinguishedBasis({:?})", self.intervals())
    }
}

#[pyfunction]
fn reconstruct_basis(values: Vec<usize>) -> PyResult<DistinguishedBasis> {
    Ok(ParkingFunction::new(values)?.to_basis())
}

#[pyfunction]
fn enumerate_parking(n: usize) -> PyResult<Vec<ParkingFunction>> {
    Ok(parking::enumerate_parking(n).map_err(err)?.map(ParkingFunction).collect())
}

#[pyfunction]
fn enumerate_bases(n: usize) -> Vec<DistinguishedBasis> {
    enumerate_recursive(n).into_iter().map(DistinguishedBasis).collect()
}

#[pyfunction]
fn catalan(n: usize) -> u64 {
    parking::catalan(n)
}

#[pyfunction]
fn parking_count(n: usize) -> u64 {
    parking::parking_count(n)
}

/// Runs the invariant checks and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (n, suite = "all", inject_fault = false))]
fn verify<'py>(py: Python<'py>, n: usize, suite: &str, inject_fault: bool) -> PyResult<Bound<'py, PyAny>> {
    let suite = suite.parse().map_err(err)?;
    let report = py
        .detach(|| harness::run(n, suite, harness::Options { inject_fault }))
        .map_err(err)?;
    from_json(py, &report)
}

#[pymodule]
fn pfbraid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<ParkingFunction>()?;
    m.add_class::<DistinguishedBasis>()?;
    m.add_function(wrap_pyfunction!(reconstruct_basis, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_parking, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bases, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(parking_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
