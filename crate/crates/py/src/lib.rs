//! Python bindings: permutations, 𝔽₂ matrices, braid words, homomorphism
//! classification and the verification reports.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use quotcheck::braid::{self, BraidWord};
use quotcheck::catalog::{self, Classification, Format, Report, Target};
use quotcheck::checks;
use quotcheck::gf2::{self, GF2Matrix};
use quotcheck::group::{self, FiniteGroupTable, GroupElement, DEFAULT_CEILING};
use quotcheck::hom::{self, BraidHom, SearchOptions};
use quotcheck::GroupError;

fn value_error(e: GroupError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_format(format: &str) -> PyResult<Format> {
    match format {
        "json" => Ok(Format::Json),
        "tsv" => Ok(Format::Tsv),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

#[pyclass(name = "Permutation", module = "quotcheck_py", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyPermutation {
    inner: group::Permutation,
}

#[pymethods]
impl PyPermutation {
    /// Builds a permutation from 1-based images.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        let inner = group::Permutation::from_images(&images).map_err(value_error)?;
        Ok(PyPermutation { inner })
    }

    /// Parses cycle notation such as `"(1,2)(3,4)"`.
    #[staticmethod]
    fn from_cycles(degree: usize, text: &str) -> PyResult<Self> {
        let inner = group::Permutation::parse_cycles(degree, text).map_err(value_error)?;
        Ok(PyPermutation { inner })
    }

    #[staticmethod]
    fn identity(degree: usize) -> Self {
        PyPermutation {
            inner: group::Permutation::identity(degree),
        }
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.inner.images()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.inner.cycles()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.inner.cycle_type()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_even(&self) -> bool {
        self.inner.is_even()
    }

    fn __call__(&self, point: usize) -> PyResult<usize> {
        if point == 0 || point > self.inner.degree() {
            return Err(PyValueError::new_err(format!("point {point} out of range")));
        }
        Ok(self.inner.apply(point))
    }

    /// `a * b` applies `a` first.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        let inner = self.inner.try_mul(&other.inner).map_err(value_error)?;
        Ok(PyPermutation { inner })
    }

    fn inverse(&self) -> Self {
        PyPermutation {
            inner: self.inner.inv(),
        }
    }

    fn conjugate_by(&self, g: &Self) -> PyResult<Self> {
        self.inner.check_compatible(&g.inner).map_err(value_error)?;
        Ok(PyPermutation {
            inner: self.inner.conjugate_by(&g.inner),
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation.from_cycles({}, {:?})", self.inner.degree(), self.inner.to_string())
    }
}

#[pyclass(name = "GF2Matrix", module = "quotcheck_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGF2Matrix {
    inner: GF2Matrix,
}

#[pymethods]
impl PyGF2Matrix {
    /// Rows as bit masks, column `j` in bit `j`.
    #[new]
    fn new(rows: Vec<u8>) -> PyResult<Self> {
        let inner = GF2Matrix::from_rows(&rows).map_err(value_error)?;
        Ok(PyGF2Matrix { inner })
    }

    #[staticmethod]
    fn identity(dim: usize) -> PyResult<Self> {
        Ok(PyGF2Matrix {
            inner: GF2Matrix::identity(dim).map_err(value_error)?,
        })
    }

    /// `x ↦ x + ω(x, v)·v`.
    #[staticmethod]
    fn transvection(dim: usize, v: u8) -> PyResult<Self> {
        let v = gf2::GF2Vector::new(dim, v).map_err(value_error)?;
        Ok(PyGF2Matrix {
            inner: gf2::transvection(&v).map_err(value_error)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn rows(&self) -> Vec<u8> {
        self.inner.rows()
    }

    fn apply(&self, v: u8) -> PyResult<u8> {
        let v = gf2::GF2Vector::new(self.inner.dim(), v).map_err(value_error)?;
        Ok(self.inner.apply(&v).bits())
    }

    /// `a * b` applies `a` first.
    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        let inner = self.inner.try_mul(&other.inner).map_err(value_error)?;
        Ok(PyGF2Matrix { inner })
    }

    fn inverse(&self) -> PyResult<Self> {
        self.inner
            .try_inverse()
            .map(|inner| PyGF2Matrix { inner })
            .ok_or_else(|| PyValueError::new_err("singular matrix"))
    }

    fn is_symplectic(&self) -> bool {
        gf2::is_symplectic(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("GF2Matrix({:?})", self.inner.rows())
    }
}

#[pyclass(name = "BraidWord", module = "quotcheck_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyBraidWord {
    inner: BraidWord,
}

#[pymethods]
impl PyBraidWord {
    /// Letter `±i` is `σ_i^{±1}`.
    #[new]
    fn new(n: usize, letters: Vec<i16>) -> PyResult<Self> {
        Ok(PyBraidWord {
            inner: BraidWord::new(n, letters).map_err(value_error)?,
        })
    }

    /// `ρ_{i,j}` in `B_n`.
    #[staticmethod]
    fn band(i: usize, j: usize, n: usize) -> PyResult<Self> {
        Ok(PyBraidWord {
            inner: braid::bkl_word(i, j, n).map_err(value_error)?,
        })
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i16> {
        self.inner.letters().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyBraidWord {
            inner: self.inner.concat(&other.inner).map_err(value_error)?,
        })
    }

    fn inverse(&self) -> Self {
        PyBraidWord {
            inner: self.inner.inverse(),
        }
    }

    /// Equality in `B_n`, decided by the action on the free group.
    fn equals(&self, other: &Self) -> PyResult<bool> {
        braid::braid_equal(&self.inner, &other.inner).map_err(value_error)
    }

    /// Images of `x_1 … x_n` as letter lists.
    fn artin_action(&self) -> Vec<Vec<i16>> {
        braid::artin_action(&self.inner)
            .images()
            .iter()
            .map(|w| w.letters().to_vec())
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BraidWord({}, {:?})", self.inner.strands(), self.inner.letters())
    }
}

fn perms(images: Vec<PyPermutation>) -> Vec<group::Permutation> {
    images.into_iter().map(|p| p.inner).collect()
}

fn wrap(images: &[group::Permutation]) -> Vec<PyPermutation> {
    images
        .iter()
        .map(|p| PyPermutation { inner: p.clone() })
        .collect()
}

/// Order of the group generated by `generators`.
#[pyfunction]
#[pyo3(signature = (generators, max_elements = DEFAULT_CEILING))]
fn group_order(py: Python<'_>, generators: Vec<PyPermutation>, max_elements: usize) -> PyResult<usize> {
    let gens = perms(generators);
    py.detach(|| group::closure(&gens, max_elements))
        .map(|t| t.order())
        .map_err(value_error)
}

/// Whether the group generated by `generators` is simple.
#[pyfunction]
fn is_simple(py: Python<'_>, generators: Vec<PyPermutation>) -> PyResult<bool> {
    let gens = perms(generators);
    py.detach(|| group::is_simple(&group::closure(&gens, DEFAULT_CEILING)?))
        .map_err(value_error)
}

/// Images of `σ_1, …, σ_{n−1}` under `π: B_n → S_n`.
#[pyfunction]
fn standard_projection(n: usize) -> PyResult<Vec<PyPermutation>> {
    let h = hom::standard_projection(n).map_err(value_error)?;
    Ok(wrap(h.images()))
}

/// The maps `f₁ … f₄: B₄ → S₄` by name.
#[pyfunction]
fn exceptional_b4_maps() -> PyResult<Vec<(String, Vec<PyPermutation>)>> {
    Ok(hom::exceptional_b4_maps()
        .map_err(value_error)?
        .into_iter()
        .map(|(name, h)| (name.to_string(), wrap(h.images())))
        .collect())
}

/// Whether the images satisfy the braid relations.
#[pyfunction]
fn is_braid_hom(images: Vec<PyPermutation>) -> PyResult<bool> {
    let n = images.len() + 1;
    Ok(BraidHom::new(n, perms(images)).map_err(value_error)?.is_valid())
}

/// Image of a braid word under the homomorphism given by `images`.
#[pyfunction]
fn evaluate(images: Vec<PyPermutation>, word: &PyBraidWord) -> PyResult<PyPermutation> {
    let h = BraidHom::new(images.len() + 1, perms(images)).map_err(value_error)?;
    Ok(PyPermutation {
        inner: h.evaluate(&word.inner).map_err(value_error)?,
    })
}

/// Whether two homs into `S_degree` agree up to an automorphism.
#[pyfunction]
fn equal_up_to_aut(a: Vec<PyPermutation>, b: Vec<PyPermutation>) -> PyResult<bool> {
    let degree = a
        .first()
        .map(|p| p.inner.degree())
        .ok_or_else(|| PyValueError::new_err("empty image list"))?;
    let sn = group::named::symmetric(degree).map_err(value_error)?;
    let a = BraidHom::new(a.len() + 1, perms(a)).map_err(value_error)?;
    let b = BraidHom::new(b.len() + 1, perms(b)).map_err(value_error)?;
    hom::equal_up_to_aut(&a, &b, &sn).map_err(value_error)
}

fn classification<E: GroupElement>(
    n: usize,
    name: &str,
    table: &FiniteGroupTable<E>,
    classes: bool,
    non_cyclic: bool,
) -> quotcheck::Result<Classification> {
    let opts = SearchOptions {
        non_cyclic_only: non_cyclic,
        ..Default::default()
    };
    if classes {
        let found = hom::classify_homs(n, table, &opts)?;
        Ok(Classification::from_classes(n, name, table.order(), &found, non_cyclic))
    } else {
        let found = hom::enumerate_homs(n, table, &opts)?;
        Classification::from_raw(n, name, table.order(), &found, non_cyclic)
    }
}

/// Homomorphisms `B_n → target` as a serialized report.
#[pyfunction]
#[pyo3(signature = (n, target, classes = true, non_cyclic = false, format = "json"))]
fn classify_homs(
    py: Python<'_>,
    n: usize,
    target: &str,
    classes: bool,
    non_cyclic: bool,
    format: &str,
) -> PyResult<String> {
    let format = parse_format(format)?;
    let report = py
        .detach(|| -> quotcheck::Result<Report> {
            let c = match catalog::builtin_target(target, DEFAULT_CEILING)? {
                Target::Perm(g) => classification(n, &g.name, &g.table, classes, non_cyclic)?,
                Target::Matrix { name, table } => {
                    classification(n, &name, &table, classes, non_cyclic)?
                }
            };
            Ok(Report::Classification(c))
        })
        .map_err(value_error)?;
    Ok(catalog::emit_report(&report, format))
}

/// Runs a named check and returns `(passed, report_text)`.
///
/// Known checks: `base-cases`, `lemma-a` (needs `n`, `target`),
/// `sp-info`, `verify-iso`, `mcg-orbits` (need `g`), `simplicity`
/// (needs `target`), `relations` (needs `n`), `catalog-run` (needs `n`
/// and `catalog` text).
#[pyfunction]
#[pyo3(signature = (name, n = None, g = None, target = None, catalog = None, format = "json"))]
fn run_check(
    py: Python<'_>,
    name: &str,
    n: Option<usize>,
    g: Option<usize>,
    target: Option<&str>,
    catalog: Option<&str>,
    format: &str,
) -> PyResult<(bool, String)> {
    let format = parse_format(format)?;
    let missing = |what: &str| PyValueError::new_err(format!("check {name:?} needs {what}"));
    let report = match name {
        "base-cases" => py.detach(checks::base_case_check).map(Report::Check),
        "sp-info" => {
            let g = g.ok_or_else(|| missing("g"))?;
            py.detach(|| checks::sp_info(g, DEFAULT_CEILING)).map(Report::SpInfo)
        }
        "verify-iso" => {
            let g = g.ok_or_else(|| missing("g"))?;
            py.detach(|| checks::iso_check(g, DEFAULT_CEILING)).map(Report::Check)
        }
        "mcg-orbits" => {
            let g = g.ok_or_else(|| missing("g"))?;
            py.detach(|| checks::mcg_orbit_checks(g, DEFAULT_CEILING)).map(Report::Check)
        }
        "relations" => {
            let n = n.ok_or_else(|| missing("n"))?;
            py.detach(|| checks::relation_check(n)).map(Report::Check)
        }
        "simplicity" => {
            let target = target.ok_or_else(|| missing("target"))?;
            py.detach(|| match catalog::builtin_target(target, DEFAULT_CEILING)? {
                Target::Perm(grp) => checks::simplicity_check(&grp.name, &grp.table),
                Target::Matrix { name, table } => checks::simplicity_check(&name, &table),
            })
            .map(Report::Check)
        }
        "lemma-a" => {
            let n = n.ok_or_else(|| missing("n"))?;
            let target = target.ok_or_else(|| missing("target"))?;
            py.detach(|| -> quotcheck::Result<CheckReportList> {
                let grp = match catalog::builtin_target(target, DEFAULT_CEILING)? {
                    Target::Perm(grp) => grp,
                    Target::Matrix { .. } => {
                        return Err(GroupError::TargetMismatch("lemma-a needs a permutation target".into()))
                    }
                };
                hom::classify_homs(n, &grp.table, &SearchOptions::non_cyclic())?
                    .iter()
                    .map(|c| checks::lemma_a_check(&c.representative))
                    .collect()
            })
            .map(|parts| Report::Check(checks::CheckReport::combine("lemma_a", parts)))
        }
        "catalog-run" => {
            let n = n.ok_or_else(|| missing("n"))?;
            let text = catalog.ok_or_else(|| missing("catalog"))?;
            let entries =
                catalog::parse_catalog(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
            py.detach(|| {
                let groups = entries
                    .iter()
                    .map(|e| e.to_named_group(DEFAULT_CEILING))
                    .collect::<quotcheck::Result<Vec<_>>>()?;
                checks::theorem_a_catalog_check(n, &groups)
            })
            .map(Report::Check)
        }
        other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
    }
    .map_err(value_error)?;
    Ok((report.passed(), catalog::emit_report(&report, format)))
}

type CheckReportList = Vec<checks::CheckReport>;

/// `|Sp(2g, 𝔽₂)|` by enumeration.
#[pyfunction]
fn sp_order(py: Python<'_>, g: usize) -> PyResult<usize> {
    py.detach(|| gf2::sp_group(g, DEFAULT_CEILING))
        .map(|t| t.order())
        .map_err(value_error)
}

#[pymodule]
fn quotcheck_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGF2Matrix>()?;
    m.add_class::<PyBraidWord>()?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_simple, m)?)?;
    m.add_function(wrap_pyfunction!(standard_projection, m)?)?;
    m.add_function(wrap_pyfunction!(exceptional_b4_maps, m)?)?;
    m.add_function(wrap_pyfunction!(is_braid_hom, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(equal_up_to_aut, m)?)?;
    m.add_function(wrap_pyfunction!(classify_homs, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(sp_order, m)?)?;
    Ok(())
}
