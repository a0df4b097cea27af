//! Python bindings for the author weight library.
//!
//! The module exposes exact rationals, every weighting scheme, the closed
//! form and ratio operations, corpus parsing and scoring, and the invariant
//! suite. Exact results arrive as `Rational` objects; float-mode results
//! arrive as Python floats. Parameters accept `Rational`, `int` (exact),
//! `float` (float mode), or strings parsed like the command-line flag.

use num_bigint::BigInt;
use num_traits::Zero;
use pyo3::exceptions::{PyOverflowError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;

use paperweight::{
    compute_weights, dual_parameter, first_last_ratio, parse_corpus,
    polynomial_weight_closed_form, run_invariant_suite, score_corpus, CorpusError, CreditReport,
    NumericError, Param, PolyKind, PublicationRecord, Rational, SchemeKind, SchemeSpec,
    WeightError, Weights,
};

fn numeric_error(e: NumericError) -> PyErr {
    match e {
        NumericError::ZeroDenominator | NumericError::DivisionByZero => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        NumericError::FloatOverflow => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn weight_error(e: WeightError) -> PyErr {
    match e {
        WeightError::NonRepresentable { .. } => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn corpus_error(e: CorpusError) -> PyErr {
    match e {
        CorpusError::Scheme(inner) => weight_error(inner),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// An exact fraction with arbitrary-precision numerator and denominator.
#[pyclass(name = "Rational", frozen, eq, ord, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyRational {
    inner: Rational,
}

fn wrap(inner: Rational) -> PyRational {
    PyRational { inner }
}

/// Accepted sources for a `Rational`: another `Rational`, an int, or a
/// string such as `"4/7"`.
#[derive(FromPyObject)]
enum RationalSource {
    Rational(PyRational),
    Int(BigInt),
    Text(String),
}

/// Mixed operands for arithmetic: exact values only, so results stay exact.
#[derive(FromPyObject)]
enum RationalOperand {
    Rational(PyRational),
    Int(BigInt),
}

impl RationalOperand {
    fn value(self) -> Rational {
        match self {
            RationalOperand::Rational(r) => r.inner,
            RationalOperand::Int(n) => Rational::from_integer(n),
        }
    }
}

#[pymethods]
impl PyRational {
    #[new]
    #[pyo3(signature = (numerator, denominator = None))]
    fn new(numerator: RationalSource, denominator: Option<BigInt>) -> PyResult<Self> {
        match (numerator, denominator) {
            (RationalSource::Int(n), Some(d)) => {
                Rational::new(n, d).map(wrap).map_err(numeric_error)
            }
            (RationalSource::Int(n), None) => Ok(wrap(Rational::from_integer(n))),
            (RationalSource::Rational(r), None) => Ok(r),
            (RationalSource::Text(s), None) => {
                s.parse::<Rational>().map(wrap).map_err(numeric_error)
            }
            (_, Some(_)) => Err(PyValueError::new_err(
                "a denominator is only valid with an integer numerator",
            )),
        }
    }

    #[getter]
    fn numerator(&self) -> BigInt {
        self.inner.numer().clone()
    }

    #[getter]
    fn denominator(&self) -> BigInt {
        self.inner.denom().clone()
    }

    fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    fn recip(&self) -> PyResult<Self> {
        self.inner.recip().map(wrap).map_err(numeric_error)
    }

    /// The value as a double, rounded to nearest.
    fn to_float(&self) -> PyResult<f64> {
        self.inner.to_f64().map_err(numeric_error)
    }

    fn __float__(&self) -> PyResult<f64> {
        self.to_float()
    }

    fn __bool__(&self) -> bool {
        !self.inner.numer().is_zero()
    }

    fn __add__(&self, other: RationalOperand) -> Self {
        wrap(self.inner.clone() + other.value())
    }

    fn __radd__(&self, other: RationalOperand) -> Self {
        self.__add__(other)
    }

    fn __sub__(&self, other: RationalOperand) -> Self {
        wrap(self.inner.clone() - other.value())
    }

    fn __rsub__(&self, other: RationalOperand) -> Self {
        wrap(other.value() - self.inner.clone())
    }

    fn __mul__(&self, other: RationalOperand) -> Self {
        wrap(self.inner.clone() * other.value())
    }

    fn __rmul__(&self, other: RationalOperand) -> Self {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: RationalOperand) -> PyResult<Self> {
        self.inner
            .checked_div(&other.value())
            .map(wrap)
            .map_err(numeric_error)
    }

    fn __rtruediv__(&self, other: RationalOperand) -> PyResult<Self> {
        other
            .value()
            .checked_div(&self.inner)
            .map(wrap)
            .map_err(numeric_error)
    }

    fn __neg__(&self) -> Self {
        wrap(-self.inner.clone())
    }

    fn __pow__(&self, exp: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular powers are not supported"));
        }
        self.inner.pow(exp).map(wrap).map_err(numeric_error)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rational('{}')", self.inner)
    }
}

/// One paper: an id plus its ordered author list.
#[pyclass(name = "PublicationRecord", frozen, from_py_object)]
#[derive(Clone)]
struct PyPublicationRecord {
    inner: PublicationRecord,
}

#[pymethods]
impl PyPublicationRecord {
    #[new]
    fn new(paper_id: String, authors: Vec<String>) -> PyResult<Self> {
        PublicationRecord::new(paper_id, authors)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn paper_id(&self) -> String {
        self.inner.paper_id().to_string()
    }

    #[getter]
    fn authors(&self) -> Vec<String> {
        self.inner.authors().to_vec()
    }

    fn author_count(&self) -> usize {
        self.inner.author_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "PublicationRecord('{}', {:?})",
            self.inner.paper_id(),
            self.inner.authors()
        )
    }
}

/// Anything accepted as a weight-control parameter.
#[derive(FromPyObject)]
enum ParamLike {
    Exact(PyRational),
    Int(BigInt),
    Real(f64),
    Text(String),
}

impl ParamLike {
    fn into_param(self) -> PyResult<Param> {
        match self {
            ParamLike::Exact(r) => Ok(Param::Exact(r.inner)),
            ParamLike::Int(n) => Ok(Param::Exact(Rational::from_integer(n))),
            ParamLike::Real(v) => Ok(Param::Real(v)),
            ParamLike::Text(s) => s.parse::<Param>().map_err(numeric_error),
        }
    }
}

fn poly_kind(kind: &str) -> PyResult<PolyKind> {
    match kind {
        "poly1" => Ok(PolyKind::TypeI),
        "poly2" => Ok(PolyKind::TypeII),
        other => Err(PyValueError::new_err(format!(
            "unknown polynomial kind `{other}` (choose one of poly1, poly2)"
        ))),
    }
}

fn weights_to_py(py: Python<'_>, weights: Weights) -> PyResult<Vec<Py<PyAny>>> {
    match weights {
        Weights::Exact(v) => v
            .into_weights()
            .into_iter()
            .map(|w| wrap(w).into_py_any(py))
            .collect(),
        Weights::Real(v) => v
            .into_weights()
            .into_iter()
            .map(|w| w.into_py_any(py))
            .collect(),
    }
}

fn polynomial_weights_py(
    py: Python<'_>,
    kind: PolyKind,
    k: usize,
    x: ParamLike,
) -> PyResult<Vec<Py<PyAny>>> {
    let spec = SchemeSpec::polynomial(kind, x.into_param()?).map_err(weight_error)?;
    let weights = compute_weights(&spec, k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

/// Weights that rise toward the last author slot being smallest, with the
/// decay expressed through a sub-unit base (0 < x <= 1).
#[pyfunction(name = "polynomial_type1_weights")]
fn py_polynomial_type1_weights(py: Python<'_>, k: usize, x: ParamLike) -> PyResult<Vec<Py<PyAny>>> {
    polynomial_weights_py(py, PolyKind::TypeI, k, x)
}

/// Weights with the decay expressed through a super-unit base (x >= 1).
#[pyfunction(name = "polynomial_type2_weights")]
fn py_polynomial_type2_weights(py: Python<'_>, k: usize, x: ParamLike) -> PyResult<Vec<Py<PyAny>>> {
    polynomial_weights_py(py, PolyKind::TypeII, k, x)
}

#[pyfunction(name = "equal_weights")]
fn py_equal_weights(py: Python<'_>, k: usize) -> PyResult<Vec<Py<PyAny>>> {
    let weights = compute_weights(&SchemeSpec::equal(), k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

#[pyfunction(name = "geometric_weights")]
fn py_geometric_weights(py: Python<'_>, k: usize) -> PyResult<Vec<Py<PyAny>>> {
    let weights = compute_weights(&SchemeSpec::geometric(), k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

#[pyfunction(name = "arithmetic_weights")]
fn py_arithmetic_weights(py: Python<'_>, k: usize) -> PyResult<Vec<Py<PyAny>>> {
    let weights = compute_weights(&SchemeSpec::arithmetic(), k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

#[pyfunction(name = "harmonic_weights")]
fn py_harmonic_weights(py: Python<'_>, k: usize) -> PyResult<Vec<Py<PyAny>>> {
    let weights = compute_weights(&SchemeSpec::harmonic(), k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

/// Weights for any scheme by name: poly1, poly2, equal, geometric,
/// arithmetic, or harmonic.
#[pyfunction(name = "compute_weights")]
#[pyo3(signature = (scheme, k, x = None))]
fn py_compute_weights(
    py: Python<'_>,
    scheme: &str,
    k: usize,
    x: Option<ParamLike>,
) -> PyResult<Vec<Py<PyAny>>> {
    let kind: SchemeKind = scheme.parse().map_err(weight_error)?;
    let param = x.map(ParamLike::into_param).transpose()?;
    let spec = SchemeSpec::new(kind, param).map_err(weight_error)?;
    let weights = compute_weights(&spec, k).map_err(weight_error)?;
    weights_to_py(py, weights)
}

fn rational_to_py(py: Python<'_>, r: Rational) -> PyResult<Py<PyAny>> {
    wrap(r).into_py_any(py)
}

/// One weight straight from the closed form, without summing the powers.
#[pyfunction(name = "polynomial_weight_closed_form")]
fn py_polynomial_weight_closed_form(
    py: Python<'_>,
    k: usize,
    j: usize,
    x: ParamLike,
    kind: &str,
) -> PyResult<Py<PyAny>> {
    let kind = poly_kind(kind)?;
    match x.into_param()? {
        Param::Exact(r) => {
            let w = polynomial_weight_closed_form(k, j, r, kind).map_err(weight_error)?;
            rational_to_py(py, w)
        }
        Param::Real(v) => polynomial_weight_closed_form(k, j, v, kind)
            .map_err(weight_error)?
            .into_py_any(py),
    }
}

/// The ratio of the first author's weight to the last author's.
#[pyfunction(name = "first_last_ratio")]
fn py_first_last_ratio(py: Python<'_>, k: usize, x: ParamLike, kind: &str) -> PyResult<Py<PyAny>> {
    let kind = poly_kind(kind)?;
    match x.into_param()? {
        Param::Exact(r) => {
            let ratio = first_last_ratio(k, r, kind).map_err(weight_error)?;
            rational_to_py(py, ratio)
        }
        Param::Real(v) => first_last_ratio(k, v, kind)
            .map_err(weight_error)?
            .into_py_any(py),
    }
}

/// The parameter of the mirrored polynomial form: 1/x.
#[pyfunction(name = "dual_parameter")]
fn py_dual_parameter(py: Python<'_>, x: ParamLike) -> PyResult<Py<PyAny>> {
    match x.into_param()? {
        Param::Exact(r) => {
            let dual = dual_parameter(r).map_err(weight_error)?;
            rational_to_py(py, dual)
        }
        Param::Real(v) => dual_parameter(v).map_err(weight_error)?.into_py_any(py),
    }
}

/// Parses corpus CSV text with header `paper_id,authors`; authors are
/// separated by `|` within the second column.
#[pyfunction(name = "parse_corpus")]
fn py_parse_corpus(text: &str) -> PyResult<Vec<PyPublicationRecord>> {
    let records = parse_corpus(text.as_bytes()).map_err(corpus_error)?;
    Ok(records
        .into_iter()
        .map(|inner| PyPublicationRecord { inner })
        .collect())
}

/// Scores a corpus and returns (author_id, total_credit, paper_count)
/// tuples, ordered by descending credit with ties broken by author id.
#[pyfunction(name = "score_corpus")]
#[pyo3(signature = (records, scheme, x = None))]
fn py_score_corpus(
    py: Python<'_>,
    records: Vec<PyPublicationRecord>,
    scheme: &str,
    x: Option<ParamLike>,
) -> PyResult<Vec<(String, Py<PyAny>, usize)>> {
    let kind: SchemeKind = scheme.parse().map_err(weight_error)?;
    let param = x.map(ParamLike::into_param).transpose()?;
    let spec = SchemeSpec::new(kind, param).map_err(weight_error)?;
    let inner: Vec<PublicationRecord> = records.into_iter().map(|r| r.inner).collect();
    let report = score_corpus(&inner, &spec).map_err(corpus_error)?;
    match report {
        CreditReport::Exact(r) => r
            .entries()
            .iter()
            .map(|e| {
                Ok((
                    e.author_id.clone(),
                    wrap(e.total_credit.clone()).into_py_any(py)?,
                    e.paper_count,
                ))
            })
            .collect(),
        CreditReport::Real(r) => r
            .entries()
            .iter()
            .map(|e| {
                Ok((
                    e.author_id.clone(),
                    e.total_credit.into_py_any(py)?,
                    e.paper_count,
                ))
            })
            .collect(),
    }
}

/// Runs the invariant suite and returns (name, passed, detail) tuples.
#[pyfunction(name = "verify_invariants")]
#[pyo3(signature = (k_max = 20, x = None))]
fn py_verify_invariants(
    k_max: usize,
    x: Option<Vec<ParamLike>>,
) -> PyResult<Vec<(String, bool, String)>> {
    let params: Vec<Param> = match x {
        None => vec![Param::Exact(Rational::from_integer(2))],
        Some(list) => list
            .into_iter()
            .map(ParamLike::into_param)
            .collect::<PyResult<_>>()?,
    };
    let report = run_invariant_suite(k_max, &params).map_err(weight_error)?;
    Ok(report
        .checks()
        .iter()
        .map(|c| (c.name.to_string(), c.passed, c.detail.clone()))
        .collect())
}

#[pymodule]
fn paperweight_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRational>()?;
    m.add_class::<PyPublicationRecord>()?;
    m.add_function(wrap_pyfunction!(py_polynomial_type1_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_polynomial_type2_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_equal_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_geometric_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_arithmetic_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_harmonic_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_compute_weights, m)?)?;
    m.add_function(wrap_pyfunction!(py_polynomial_weight_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(py_first_last_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(py_dual_parameter, m)?)?;
    m.add_function(wrap_pyfunction!(py_parse_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(py_score_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify_invariants, m)?)?;
    Ok(())
}
