//! Python bindings for `genomic_schur_core`.
//!
//! Shapes and compositions are passed as sequences of integers. Expansions
//! come back as dicts keyed by tuples, polynomials as dicts keyed by exponent
//! tuples.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use genomic_schur_core::sym_poly::{BasisIndex, Expansion};
use genomic_schur_core::tableaux::{self, Filling, SemistandardTableau};
use genomic_schur_core::{self as core, Partition, SparsePolynomial, StrongComposition};

fn value_error(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_error)
}

fn composition(parts: Vec<u32>) -> PyResult<StrongComposition> {
    StrongComposition::new(parts).map_err(value_error)
}

fn filling(rows: Vec<Vec<u32>>) -> PyResult<Filling> {
    Filling::new(rows).map_err(value_error)
}

fn keyed_dict<'py, K, I>(py: Python<'py>, items: I) -> PyResult<Bound<'py, PyDict>>
where
    K: AsRef<[u32]>,
    I: IntoIterator<Item = (K, i64)>,
{
    let dict = PyDict::new(py);
    for (k, c) in items {
        dict.set_item(PyTuple::new(py, k.as_ref())?, c)?;
    }
    Ok(dict)
}

fn expansion_dict<'py, K: BasisIndex>(
    py: Python<'py>,
    e: &Expansion<K>,
) -> PyResult<Bound<'py, PyDict>> {
    keyed_dict(py, e.terms().into_iter().map(|(k, c)| (k.entries(), c)))
}

fn polynomial_dict<'py>(py: Python<'py>, p: &SparsePolynomial) -> PyResult<Bound<'py, PyDict>> {
    keyed_dict(py, p.terms())
}

/// An increasing tableau: rows and columns strictly increase.
#[pyclass(
    module = "genomic_schur",
    name = "IncreasingTableau",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyIncreasingTableau(tableaux::IncreasingTableau);

#[pymethods]
impl PyIncreasingTableau {
    #[new]
    fn new(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        let t = tableaux::IncreasingTableau::try_from(filling(rows)?).map_err(value_error)?;
        Ok(Self(t))
    }

    /// Parses the `"1 2 5/3 4 6"` text form.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u32>> {
        self.0.filling().rows().to_vec()
    }

    #[getter]
    fn shape(&self) -> Vec<u32> {
        self.0.filling().shape().parts().to_vec()
    }

    #[getter]
    fn max_entry(&self) -> u32 {
        self.0.max_entry()
    }

    fn is_gapless(&self) -> bool {
        self.0.filling().is_gapless()
    }

    fn descents(&self) -> Vec<u32> {
        self.0.descents().iter().collect()
    }

    fn descent_composition(&self) -> Vec<u32> {
        self.0.descent_composition().parts().to_vec()
    }

    fn is_pieri_filled(&self, mu: Vec<u32>) -> PyResult<bool> {
        Ok(self.0.is_pieri_filled(&composition(mu)?))
    }

    /// The quasiYamanouchi genomic tableau this gapless tableau encodes.
    fn k_semistandardize(&self) -> PyResult<PyGenomicTableau> {
        if !self.0.filling().is_gapless() {
            return Err(PyValueError::new_err("tableau is not gapless"));
        }
        Ok(PyGenomicTableau(tableaux::k_semistandardize(&self.0)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IncreasingTableau.parse({:?})", self.0.to_string())
    }
}

/// A semistandard tableau with its cells grouped into genes.
#[pyclass(
    module = "genomic_schur",
    name = "GenomicTableau",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyGenomicTableau(tableaux::GenomicTableau);

#[pymethods]
impl PyGenomicTableau {
    /// `genes[r][c]` is an arbitrary gene id for the cell at row `r`, column
    /// `c`; ids are renumbered canonically. Raises `ValueError` naming the
    /// violated condition when the grouping is not a valid gene decomposition.
    #[new]
    fn new(labels: Vec<Vec<u32>>, genes: Vec<Vec<u32>>) -> PyResult<Self> {
        let base = SemistandardTableau::try_from(filling(labels)?).map_err(value_error)?;
        tableaux::GenomicTableau::new(base, filling(genes)?)
            .map(Self)
            .map_err(value_error)
    }

    /// Parses the `"1 2 2/2 3 4 | 1 2 3/2 4 5"` text form (labels, then genes).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn labels(&self) -> Vec<Vec<u32>> {
        self.0.labels().rows().to_vec()
    }

    #[getter]
    fn genes(&self) -> Vec<Vec<u32>> {
        self.0.genes().rows().to_vec()
    }

    #[getter]
    fn num_genes(&self) -> u32 {
        self.0.num_genes()
    }

    fn weight(&self) -> Vec<u32> {
        self.0.weight().entries().to_vec()
    }

    fn is_quasi_yamanouchi(&self) -> bool {
        self.0.is_quasi_yamanouchi()
    }

    fn regularize(&self) -> Self {
        Self(self.0.regularize())
    }

    fn k_standardize(&self) -> PyResult<PyIncreasingTableau> {
        if !self.0.is_quasi_yamanouchi() {
            return Err(PyValueError::new_err("tableau is not quasiYamanouchi"));
        }
        Ok(PyIncreasingTableau(self.0.k_standardize()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GenomicTableau.parse({:?})", self.0.to_string())
    }
}

/// `(sign, shape)` with `s_alpha = sign * s_shape`; `(0, ())` when it vanishes.
#[pyfunction]
fn straighten(alpha: Vec<u32>) -> (i8, Vec<u32>) {
    let s = core::straighten(&alpha);
    (s.sign, s.shape.into_parts())
}

#[pyfunction]
fn u_fundamental_inc<'py>(py: Python<'py>, shape: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    expansion_dict(py, &core::u_fundamental_inc(&partition(shape)?))
}

#[pyfunction]
#[pyo3(signature = (shape, n=None))]
fn u_fundamental_qy<'py>(
    py: Python<'py>,
    shape: Vec<u32>,
    n: Option<u32>,
) -> PyResult<Bound<'py, PyDict>> {
    expansion_dict(py, &core::u_fundamental_qy(&partition(shape)?, n))
}

#[pyfunction]
fn u_schur_expansion<'py>(py: Python<'py>, shape: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    expansion_dict(py, &core::u_schur_expansion(&partition(shape)?))
}

#[pyfunction]
fn u_two_row_closed_form<'py>(py: Python<'py>, shape: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    let e = core::u_two_row_closed_form(&partition(shape)?).map_err(value_error)?;
    expansion_dict(py, &e)
}

#[pyfunction]
fn gessel_schur_fundamental<'py>(py: Python<'py>, shape: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    expansion_dict(py, &core::gessel_schur_fundamental(&partition(shape)?))
}

/// Text rendering of `U_shape` in the Schur basis, e.g. `"s[2,1] + s[1,1]"`.
#[pyfunction]
fn u_schur_expansion_text(shape: Vec<u32>) -> PyResult<String> {
    Ok(core::u_schur_expansion(&partition(shape)?).to_string())
}

#[pyfunction]
fn u_poly_direct<'py>(py: Python<'py>, shape: Vec<u32>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    if n == 0 {
        return Err(PyValueError::new_err("need at least one variable"));
    }
    polynomial_dict(py, &core::u_poly_direct(&partition(shape)?, n))
}

#[pyfunction]
fn schur_poly<'py>(py: Python<'py>, shape: Vec<u32>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    if n == 0 {
        return Err(PyValueError::new_err("need at least one variable"));
    }
    polynomial_dict(py, &core::sym_poly::schur_poly(&partition(shape)?, n))
}

#[pyfunction]
#[pyo3(signature = (shape, max_entry=None))]
fn gapless_increasing_tableaux(
    shape: Vec<u32>,
    max_entry: Option<u32>,
) -> PyResult<Vec<PyIncreasingTableau>> {
    let all = tableaux::enumerate_gapless_increasing(&partition(shape)?, max_entry);
    Ok(all.into_iter().map(PyIncreasingTableau).collect())
}

#[pyfunction]
fn standard_tableaux(shape: Vec<u32>) -> PyResult<Vec<PyIncreasingTableau>> {
    let all = tableaux::enumerate_standard(&partition(shape)?);
    Ok(all.into_iter().map(PyIncreasingTableau).collect())
}

#[pyfunction]
#[pyo3(signature = (shape, n=None))]
fn qy_genomic_tableaux(shape: Vec<u32>, n: Option<u32>) -> PyResult<Vec<PyGenomicTableau>> {
    let all = tableaux::enumerate_qy_genomic(&partition(shape)?, n);
    Ok(all.into_iter().map(PyGenomicTableau).collect())
}

#[pyfunction]
fn genomic_tableaux(shape: Vec<u32>, n: u32) -> PyResult<Vec<PyGenomicTableau>> {
    let all = tableaux::enumerate_genomic(&partition(shape)?, n);
    Ok(all.into_iter().map(PyGenomicTableau).collect())
}

/// `(name, passed, detail)` for one cross-check.
type CheckTuple = (String, bool, String);

/// Runs every cross-check for `shape` in `n` variables. Returns
/// `(passed, [(name, passed, detail), ...])`.
#[pyfunction]
fn verify(shape: Vec<u32>, n: usize) -> PyResult<(bool, Vec<CheckTuple>)> {
    if n == 0 {
        return Err(PyValueError::new_err("need at least one variable"));
    }
    let report = core::verify(&partition(shape)?, n);
    let checks = report
        .checks
        .iter()
        .map(|c| (c.name.to_string(), c.passed, c.detail.clone()))
        .collect();
    Ok((report.passed(), checks))
}

/// Runs the command-line front end in-process; returns `(status, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let o = core::cli::run_args(std::iter::once("genomic-schur".to_string()).chain(args));
    (o.status, o.stdout, o.stderr)
}

/// Counts of each tableau family, keyed by name.
#[pyfunction]
#[pyo3(signature = (shape, n=None))]
fn counts(shape: Vec<u32>, n: Option<u32>) -> PyResult<BTreeMap<&'static str, usize>> {
    let lambda = partition(shape)?;
    let mut out = BTreeMap::new();
    out.insert(
        "gapless",
        tableaux::enumerate_gapless_increasing(&lambda, None).len(),
    );
    out.insert("qy", tableaux::enumerate_qy_genomic(&lambda, n).len());
    out.insert("standard", tableaux::enumerate_standard(&lambda).len());
    if let Some(n) = n {
        out.insert("genomic", tableaux::enumerate_genomic(&lambda, n).len());
    }
    Ok(out)
}

#[pymodule]
fn genomic_schur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIncreasingTableau>()?;
    m.add_class::<PyGenomicTableau>()?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(u_fundamental_inc, m)?)?;
    m.add_function(wrap_pyfunction!(u_fundamental_qy, m)?)?;
    m.add_function(wrap_pyfunction!(u_schur_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(u_schur_expansion_text, m)?)?;
    m.add_function(wrap_pyfunction!(u_two_row_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(gessel_schur_fundamental, m)?)?;
    m.add_function(wrap_pyfunction!(u_poly_direct, m)?)?;
    m.add_function(wrap_pyfunction!(schur_poly, m)?)?;
    m.add_function(wrap_pyfunction!(gapless_increasing_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(qy_genomic_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(genomic_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(counts, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapevalidation() {
        assert!(partition(vec![3, 3]).is_ok());
        assert!(partition(vec![1, 3]).is_err());
        assert!(composition(vec![2, 0]).is_err());
    }

    #[test]
    fn straighten_tuple() {
        assert_eq!(straighten(vec![1, 3, 2]), (-1, vec![2, 2, 2]));
        assert_eq!(straighten(vec![1, 2]), (0, vec![]));
    }

    #[test]
    fn cli_in_process() {
        let (status, out, _) = run_cli(
            ["expand", "--shape", "3,3", "--basis", "schur"]
                .map(String::from)
                .to_vec(),
        );
        assert_eq!(
            (status, out.as_str()),
            (0, "s[3,3] + s[2,2,1] + s[1,1,1,1]\n")
        );
    }
}
