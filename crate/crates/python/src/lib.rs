//! Python bindings: groups, character tables, McKay graphs, spectra,
//! Coxeter data and the verifier.

use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict};

use mckay_core::arith::rational;
use mckay_core::arith::CyclotomicNumber as Cyc;
use mckay_core::character::{character_table_with_classes, CharacterTable};
use mckay_core::emit::{case_outcome, emit, Artifact, Format};
use mckay_core::fixtures::fixtures;
use mckay_core::group::{build_group, conjugacy_classes, ConjugacyClass, FiniteSubgroup};
use mckay_core::orbifold::sector_data;
use mckay_core::quiver::{delete_trivial_vertex, graph_isomorphic, mckay_graph, DynkinDiagram, Graph};
use mckay_core::roots::{coxeter_element, coxeter_exponents};
use mckay_core::spectrum::{analyze as analyze_poly, Grading};
use mckay_core::verify::{run_verification, verify_all};
use mckay_core::{AdeType, Error};

type SectorRow = (usize, usize, (String, String), String);
type CheckRow = (String, String, String, String, String);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        Error::Internal { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ade(name: &str) -> PyResult<AdeType> {
    name.parse().map_err(py_err)
}

/// Exact element of a cyclotomic field, in the power basis of Q(zeta_N).
#[pyclass(name = "Cyclotomic", module = "pymckay", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCyc(Cyc);

#[pymethods]
impl PyCyc {
    /// `coeffs` are ints, `Fraction`s or strings like "3/4".
    #[new]
    fn new(order: u32, coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        if order == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        let qs = coeffs
            .iter()
            .map(|c| rational::parse(&c.str()?.to_string()).map_err(py_err))
            .collect::<PyResult<Vec<_>>>()?;
        let mut acc = Cyc::zero(order);
        for (k, q) in qs.into_iter().enumerate() {
            acc = &acc + &Cyc::zeta_pow(order, k as i64).scale(&q);
        }
        Ok(PyCyc(acc))
    }

    #[staticmethod]
    #[pyo3(signature = (order, k = 1))]
    fn zeta(order: u32, k: i64) -> PyResult<Self> {
        if order == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyCyc(Cyc::zeta_pow(order, k)))
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    #[getter]
    fn coeffs(&self) -> Vec<String> {
        self.0.coeffs().iter().map(rational::to_string).collect()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyCyc(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyCyc(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyCyc(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyCyc(&self.0 * &other.0.inverse().map_err(py_err)?))
    }

    fn __neg__(&self) -> Self {
        PyCyc(-&self.0)
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.pow(e).map(PyCyc).map_err(py_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0.value_eq(&other.0)
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyCyc).map_err(py_err)
    }

    fn conj(&self) -> Self {
        PyCyc(self.0.conj())
    }

    /// Galois automorphism zeta -> zeta^k, k coprime to the order.
    fn galois(&self, k: u32) -> PyResult<Self> {
        self.0.galois(k).map(PyCyc).map_err(py_err)
    }

    /// Rational value as a string, or None when not rational.
    fn to_rational(&self) -> Option<String> {
        self.0.to_rational().as_ref().map(rational::to_string)
    }

    fn __complex__<'py>(&self, py: Python<'py>) -> Bound<'py, PyComplex> {
        let (re, im) = self.0.embed_complex();
        PyComplex::from_doubles(py, re, im)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cyclotomic({}, {:?})", self.0.order(), self.coeffs())
    }
}

#[pyclass(name = "Graph", module = "pymckay", frozen)]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    /// Reference Dynkin diagram, plain or extended.
    #[staticmethod]
    #[pyo3(signature = (ade_type, extended = false))]
    fn dynkin(ade_type: &str, extended: bool) -> PyResult<Self> {
        let t = ade(ade_type)?;
        let d = if extended { DynkinDiagram::extended(t) } else { DynkinDiagram::reference(t) };
        Ok(PyGraph(d.graph))
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn adjacency(&self) -> Vec<Vec<u32>> {
        self.0.adjacency().to_vec()
    }

    #[getter]
    fn marks(&self) -> Option<Vec<u32>> {
        self.0.marks().map(<[u32]>::to_vec)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[pyo3(signature = (name = "G"))]
    fn to_dot(&self, name: &str) -> String {
        self.0.to_dot(name)
    }

    /// Vertex map onto `other`, or None.
    fn isomorphism(&self, other: &PyGraph) -> Option<Vec<usize>> {
        graph_isomorphic(&self.0, &other.0)
    }
}

#[pyclass(name = "CharacterTable", module = "pymckay", frozen)]
struct PyCharTable(CharacterTable);

#[pymethods]
impl PyCharTable {
    #[getter]
    fn dimensions(&self) -> Vec<u32> {
        self.0.dimensions()
    }

    #[getter]
    fn values(&self) -> Vec<Vec<PyCyc>> {
        self.0
            .values()
            .iter()
            .map(|row| row.iter().cloned().map(PyCyc).collect())
            .collect()
    }

    fn sum_of_squares(&self) -> u64 {
        self.0.sum_of_squares()
    }

    fn row_orthogonality(&self) -> bool {
        self.0.row_orthogonality()
    }

    fn column_orthogonality(&self) -> bool {
        self.0.column_orthogonality()
    }

    /// McKay quiver, or with `extended` the full McKay graph.
    #[pyo3(signature = (extended = false))]
    fn mckay_graph(&self, extended: bool) -> PyResult<PyGraph> {
        let g = mckay_graph(&self.0).map_err(py_err)?;
        let g = if extended { g } else { delete_trivial_vertex(&g).map_err(py_err)? };
        Ok(PyGraph(g))
    }
}

/// Finite subgroup of SL(2, C) of the given ADE type, e.g. `Group("E8")`.
#[pyclass(name = "Group", module = "pymckay", frozen)]
struct PyGroup {
    group: FiniteSubgroup,
    classes: Vec<ConjugacyClass>,
}

#[pymethods]
impl PyGroup {
    #[new]
    fn new(ade_type: &str) -> PyResult<Self> {
        let group = build_group(ade(ade_type)?).map_err(py_err)?;
        let classes = conjugacy_classes(&group).map_err(py_err)?;
        Ok(PyGroup { group, classes })
    }

    #[getter]
    fn ade(&self) -> String {
        self.group.ade().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.group.order()
    }

    #[getter]
    fn cyclotomic_order(&self) -> u32 {
        self.group.cyclotomic_order()
    }

    /// Generators as 2x2 nested lists.
    fn generators(&self) -> Vec<Vec<Vec<PyCyc>>> {
        self.group
            .generators()
            .iter()
            .map(|g| g.entries().iter().map(|row| row.iter().cloned().map(PyCyc).collect()).collect())
            .collect()
    }

    /// `(size, element order, trace)` per class.
    fn classes(&self) -> Vec<(usize, usize, PyCyc)> {
        self.classes
            .iter()
            .map(|c| (c.size, c.element_order, PyCyc(c.trace.clone())))
            .collect()
    }

    fn character_table(&self) -> PyResult<PyCharTable> {
        character_table_with_classes(&self.group, self.classes.clone())
            .map(PyCharTable)
            .map_err(py_err)
    }

    /// `(class index, element order, (e1, e2), age)` per class.
    fn sectors(&self) -> PyResult<Vec<SectorRow>> {
        let s = sector_data(&self.group, &self.classes).map_err(py_err)?;
        Ok(s.iter()
            .map(|t| {
                (
                    t.class_index,
                    t.m,
                    (rational::to_string(&t.exponent_pair[0]), rational::to_string(&t.exponent_pair[1])),
                    rational::to_string(&t.age),
                )
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.ade(), self.order())
    }
}

/// Weights, Milnor number, monomial basis and spectrum of a polynomial in x, y, z.
#[pyfunction]
#[pyo3(signature = (poly, raw = false))]
fn analyze<'py>(py: Python<'py>, poly: &str, raw: bool) -> PyResult<Bound<'py, PyDict>> {
    let f = mckay_core::poly::Polynomial::parse(poly).map_err(py_err)?;
    let grading = if raw { Grading::Raw } else { Grading::Shifted };
    let rep = analyze_poly(&f, grading).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("weights", rep.weighted.weights.iter().map(rational::to_string).collect::<Vec<_>>())?;
    out.set_item("d", rep.weighted.d)?;
    out.set_item("mu", rep.mu_formula)?;
    out.set_item(
        "basis",
        rep.basis.standard_monomials.iter().map(ToString::to_string).collect::<Vec<_>>(),
    )?;
    out.set_item(
        "spectrum",
        rep.spectrum
            .entries
            .iter()
            .map(|(l, m)| (rational::to_string(l), *m))
            .collect::<Vec<_>>(),
    )?;
    Ok(out)
}

/// Kleinian equation of an ADE type.
#[pyfunction]
fn equation(ade_type: &str) -> PyResult<String> {
    fixtures().equation(ade(ade_type)?).map(|p| p.to_string()).map_err(py_err)
}

/// Spectrum of the Kleinian singularity as `(lambda, multiplicity)` pairs.
#[pyfunction]
#[pyo3(signature = (ade_type, raw = false))]
fn spectrum(ade_type: &str, raw: bool) -> PyResult<Vec<(String, u64)>> {
    let f = fixtures().equation(ade(ade_type)?).map_err(py_err)?;
    let grading = if raw { Grading::Raw } else { Grading::Shifted };
    let rep = analyze_poly(&f, grading).map_err(py_err)?;
    Ok(rep.spectrum.entries.iter().map(|(l, m)| (rational::to_string(l), *m)).collect())
}

/// Coxeter number and exponents m_j/h, with repetition.
#[pyfunction]
fn coxeter(ade_type: &str) -> PyResult<(usize, Vec<String>)> {
    let t = coxeter_element(&DynkinDiagram::reference(ade(ade_type)?), None).map_err(py_err)?;
    let exps = coxeter_exponents(&t).map_err(py_err)?;
    Ok((t.order, exps.iter().map(rational::to_string).collect()))
}

/// `(check, status, expected, actual, oracle)` for every check of one type.
#[pyfunction]
fn verify(py: Python<'_>, ade_type: &str) -> PyResult<Vec<CheckRow>> {
    let t = ade(ade_type)?;
    let case = py.detach(|| run_verification(t)).map_err(py_err)?;
    Ok(case
        .checks
        .into_iter()
        .map(|c| (c.name.to_string(), c.status.to_string(), c.expected, c.actual, c.oracle.to_string()))
        .collect())
}

/// JSON report of `verify --all` up to `max_rank`.
#[pyfunction]
#[pyo3(signature = (max_rank = 10))]
fn verify_all_json(py: Python<'_>, max_rank: u32) -> PyResult<String> {
    let cases = py.detach(|| verify_all(max_rank));
    let outcomes = cases.into_iter().map(|(t, r)| case_outcome(t, r)).collect();
    emit(&Artifact::Verification(outcomes), Format::Json).map_err(py_err)
}

#[pymodule]
fn pymckay(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyc>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCharTable>()?;
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(equation, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(coxeter, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all_json, m)?)?;
    Ok(())
}
