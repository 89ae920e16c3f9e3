//! Python bindings for the ribbonkit toolkit.
//!
//! The module mirrors the core string formats: ribbon codes, class tuples
//! such as `"2,-5"`, planar diagrams of `X(a,b,c,d)`/`L(a)` terms, and Gauss
//! codes of `O<i>`/`U<i>` tokens.  Every failure raises `ValueError` with the
//! underlying message.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ribbonkit::bounds::{self, KnotFacts};
use ribbonkit::diagram::{self, GaussCode, PdCode};
use ribbonkit::enumerate;
use ribbonkit::jones;
use ribbonkit::laurent::AlexClass;
use ribbonkit::seifert;

fn value_err(err: impl Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A marked tree describing a ribbon disk, with class-preserving reduction.
#[pyclass]
struct RibbonCode {
    inner: ribbonkit::code::RibbonCode,
}

#[pymethods]
impl RibbonCode {
    /// Parses the `vertices N` / `edge U V : M...` format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(RibbonCode {
            inner: ribbonkit::code::RibbonCode::parse(text).map_err(value_err)?,
        })
    }

    #[getter]
    fn vertices(&self) -> u32 {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> u32 {
        self.inner.edge_count()
    }

    #[getter]
    fn markings(&self) -> u32 {
        self.inner.marking_count()
    }

    /// The Alexander class tuple, e.g. `"2,-5"`.
    fn alexander(&self) -> String {
        seifert::alexander(&self.inner).to_string()
    }

    /// The knot determinant (always a positive odd integer).
    fn determinant(&self) -> BigInt {
        seifert::alexander(&self.inner).determinant()
    }

    /// The fully reduced, equivalent code.
    fn reduce(&self) -> Self {
        RibbonCode {
            inner: self.inner.reduce(),
        }
    }

    /// The mirror code (every marking sign flipped).
    fn mirror(&self) -> Self {
        RibbonCode {
            inner: self.inner.mirror(),
        }
    }

    fn is_irreducible(&self) -> bool {
        self.inner.is_irreducible()
    }

    /// Multi-line text form, parseable by the constructor.
    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn __repr__(&self) -> String {
        format!("RibbonCode(\"{}\")", self.inner.serialize_compact())
    }
}

/// All Alexander classes realized with at most `r` markings, sorted.
#[pyfunction]
fn ribbon_set(r: u32) -> PyResult<Vec<String>> {
    let report = enumerate::enumerate_report(r).map_err(value_err)?;
    Ok(report.ribbon_set.iter().map(|a| a.to_string()).collect())
}

/// Witness codes for every class realized with at most `r` markings, as a
/// dict from class tuple to one-line code text.
#[pyfunction]
fn enumerate_witnesses(r: u32) -> PyResult<BTreeMap<String, String>> {
    let report = enumerate::enumerate_report(r).map_err(value_err)?;
    Ok(report
        .witnesses
        .iter()
        .map(|(alex, code)| (alex.to_string(), code.clone()))
        .collect())
}

/// Strongest ribbon-number lower bound for a class tuple, as
/// `(value, rule, detail)`.
#[pyfunction]
#[pyo3(signature = (alex, set_rmax = 3, factor_rmax = 4))]
fn lower_bound(alex: &str, set_rmax: u32, factor_rmax: u32) -> PyResult<(u32, String, String)> {
    let alex = AlexClass::from_str(alex).map_err(value_err)?;
    let sets = bounds::computed_ribbon_sets(set_rmax).map_err(value_err)?;
    let bound =
        bounds::lower_bound(&KnotFacts::from_alex(alex), Some(&sets), factor_rmax)
            .map_err(value_err)?;
    Ok((bound.value, bound.rule.to_string(), bound.detail))
}

/// Kauffman bracket of a planar diagram, as a Laurent polynomial in `A`.
#[pyfunction]
fn bracket(pd: &str) -> PyResult<String> {
    let pd = PdCode::parse(pd).map_err(value_err)?;
    let bracket = jones::bracket(&pd).map_err(value_err)?;
    Ok(bracket.to_string().replace('t', "A"))
}

/// Squared determinant from the bracket at the primitive eighth root of
/// unity, e.g. `"81"` or `"2 + 1*sqrt(2)"`.
#[pyfunction]
fn jones_det_sq(pd: &str) -> PyResult<String> {
    let pd = PdCode::parse(pd).map_err(value_err)?;
    Ok(jones::jones_det_sq(&pd).map_err(value_err)?.to_string())
}

/// Gauss code of the standard torus-knot diagram, e.g. `(2,3)` for the
/// trefoil.
#[pyfunction]
fn torus_gauss(p: u32, q: u32) -> PyResult<String> {
    Ok(diagram::torus_gauss(p, q).map_err(value_err)?.to_string())
}

/// Underpass count sufficient for a diagram given as a Gauss code.
#[pyfunction]
fn underpass_upper_bound(gauss: &str) -> PyResult<usize> {
    Ok(GaussCode::parse(gauss)
        .map_err(value_err)?
        .underpass_upper_bound())
}

#[pymodule]
fn ribbonkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RibbonCode>()?;
    m.add_function(wrap_pyfunction!(ribbon_set, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(jones_det_sq, m)?)?;
    m.add_function(wrap_pyfunction!(torus_gauss, m)?)?;
    m.add_function(wrap_pyfunction!(underpass_upper_bound, m)?)?;
    Ok(())
}
