//! Python bindings: `import pyflexion`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use flexion::ds::{self, NcPoly};
use flexion::io::{read_object, write_object, Object};
use flexion::special::B1Convention;
use flexion::suites::{run_suite as run, SuiteSpec};
use flexion::{gari as g, mould as m, special, symmetry, Alphabet};

create_exception!(pyflexion, FlexionError, PyException);

fn err(e: flexion::Error) -> PyErr {
    FlexionError::new_err(e.to_string())
}

fn b1(s: &str) -> PyResult<B1Convention> {
    B1Convention::parse(s).ok_or_else(|| FlexionError::new_err(format!("expected -1/2 or +1/2, found `{s}`")))
}

fn alphabet(s: &str) -> PyResult<Alphabet> {
    Alphabet::parse(s).ok_or_else(|| FlexionError::new_err(format!("unknown alphabet `{s}`")))
}

/// A mould with exact rational-function components.
#[pyclass(name = "Mould", frozen)]
struct PyMould(m::Mould);

#[pymethods]
impl PyMould {
    /// Builds a mould from component strings, e.g. `Mould("u", ["0", "1/u1"])`.
    #[new]
    fn new(alphabet_: &str, components: Vec<String>) -> PyResult<Self> {
        m::Mould::parse_components(alphabet(alphabet_)?, &components)
            .map(PyMould)
            .map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        read_object(text).and_then(Object::into_mould).map(PyMould).map_err(err)
    }

    fn to_text(&self) -> String {
        write_object(&Object::Mould(self.0.clone()))
    }

    #[getter]
    fn alphabet(&self) -> String {
        self.0.alphabet().to_string()
    }

    #[getter]
    fn max_depth(&self) -> usize {
        self.0.max_depth()
    }

    fn component(&self, r: usize) -> PyResult<String> {
        if r > self.0.max_depth() {
            return Err(err(flexion::Error::DepthExceeded {
                requested: r,
                max_depth: self.0.max_depth(),
            }));
        }
        Ok(self.0.component(r).to_string())
    }

    fn components(&self) -> Vec<String> {
        self.0.components().iter().map(|c| c.to_string()).collect()
    }

    fn truncate(&self, depth: usize) -> Self {
        PyMould(self.0.truncate(depth))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &PyMould) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(PyMould).map_err(err)
    }

    fn __sub__(&self, other: &PyMould) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(PyMould).map_err(err)
    }

    fn __eq__(&self, other: &PyMould) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Mould({:?}, {:?})", self.alphabet(), self.components())
    }
}

/// A noncommutative polynomial in `x` and `y`.
#[pyclass(name = "NcPoly", frozen)]
struct PyNcPoly(NcPoly);

#[pymethods]
impl PyNcPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        NcPoly::parse(text).map(PyNcPoly).map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        read_object(text)
            .and_then(Object::into_ncpoly)
            .map(PyNcPoly)
            .map_err(err)
    }

    fn to_text(&self) -> String {
        write_object(&Object::NcPoly(self.0.clone()))
    }

    /// Coefficients as `(word, numerator, denominator)` triples.
    fn terms(&self) -> Vec<(String, String, String)> {
        self.0
            .terms()
            .map(|(w, c)| (w.to_string(), c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    fn __add__(&self, other: &PyNcPoly) -> Self {
        PyNcPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyNcPoly) -> Self {
        PyNcPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyNcPoly) -> Self {
        PyNcPoly(&self.0 * &other.0)
    }

    fn __eq__(&self, other: &PyNcPoly) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NcPoly({:?})", self.0.to_string())
    }
}

macro_rules! unary {
    ($($name:ident => $f:path),* $(,)?) => {$(
        #[pyfunction]
        fn $name(a: &PyMould) -> PyResult<PyMould> {
            $f(&a.0).map(PyMould).map_err(err)
        }
    )*};
}

macro_rules! binary {
    ($($name:ident => $f:path),* $(,)?) => {$(
        #[pyfunction]
        fn $name(a: &PyMould, b: &PyMould) -> PyResult<PyMould> {
            $f(&a.0, &b.0).map(PyMould).map_err(err)
        }
    )*};
}

unary!(swap => m::swap, push => m::push, mantar => m::mantar, neg => m::neg,
       expari => g::expari, logari => g::logari, invgari => g::invgari);
binary!(ari => m::ari, mu => m::mu, lu => m::lu, gari => g::gari, adari => g::adari);

/// `ganit(B)·A` by the explicit decomposition formula.
#[pyfunction]
fn ganit(b: &PyMould, a: &PyMould) -> PyResult<PyMould> {
    g::ganit_explicit(&b.0, &a.0).map(PyMould).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (depth, b1="-1/2"))]
fn pal(depth: usize, b1: &str) -> PyResult<PyMould> {
    special::pal(depth, self::b1(b1)?).map(PyMould).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (depth, b1="-1/2"))]
fn pil(depth: usize, b1: &str) -> PyResult<PyMould> {
    special::pil(depth, self::b1(b1)?).map(PyMould).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (depth, b1="-1/2"))]
fn dupal(depth: usize, b1: &str) -> PyResult<PyMould> {
    special::dupal(depth, self::b1(b1)?).map(PyMould).map_err(err)
}

#[pyfunction]
fn pic(depth: usize) -> PyMould {
    PyMould(symmetry::pic(depth))
}

#[pyfunction]
#[pyo3(signature = (f, depth=None))]
fn ma(f: &PyNcPoly, depth: Option<usize>) -> PyResult<PyMould> {
    ds::ma(&f.0, depth.unwrap_or_else(|| ds::dictionary::depth_for(&f.0)))
        .map(PyMould)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (f, depth=None))]
fn mi(f: &PyNcPoly, depth: Option<usize>) -> PyResult<PyMould> {
    ds::mi(&f.0, depth.unwrap_or_else(|| ds::dictionary::depth_for(&f.0)))
        .map(PyMould)
        .map_err(err)
}

/// `f_*` as a string in the letters `y_i`.
#[pyfunction]
fn f_star(f: &PyNcPoly) -> String {
    ds::f_star(&f.0).to_string()
}

#[pyfunction]
fn poisson(f: &PyNcPoly, h: &PyNcPoly) -> PyNcPoly {
    PyNcPoly(ds::poisson(&f.0, &h.0))
}

#[pyfunction]
fn ds_basis(weight: usize) -> PyResult<Vec<PyNcPoly>> {
    Ok(ds::ds_basis(weight).map_err(err)?.into_iter().map(PyNcPoly).collect())
}

#[pyfunction]
fn is_lie(f: &PyNcPoly) -> bool {
    ds::is_lie(&f.0)
}

#[pyfunction]
fn is_in_ds(f: &PyNcPoly) -> bool {
    ds::is_in_ds(&f.0)
}

#[pyfunction]
fn is_alternal(a: &PyMould) -> PyResult<bool> {
    Ok(symmetry::is_alternal(&a.0).map_err(err)?.holds())
}

#[pyfunction]
fn is_symmetral(a: &PyMould) -> PyResult<bool> {
    Ok(symmetry::is_symmetral(&a.0).map_err(err)?.holds())
}

#[pyfunction]
#[pyo3(signature = (a, up_to_constant=false))]
fn is_alternil(a: &PyMould, up_to_constant: bool) -> PyResult<bool> {
    Ok(symmetry::is_alternil(&a.0, up_to_constant).map_err(err)?.holds())
}

/// Dimorphic classification of a u-mould in ARI, as printed by the CLI.
#[pyfunction]
fn classify(a: &PyMould) -> PyResult<String> {
    symmetry::classify(&a.0).map(|c| c.to_string()).map_err(err)
}

/// Runs a verification suite; returns `(passed, report)` with the report as
/// text or JSON.
#[pyfunction]
#[pyo3(signature = (name, seed=0, cases=None, depth=None, weight=None, b1="-1/2", json=false))]
fn run_suite(
    name: &str,
    seed: u64,
    cases: Option<usize>,
    depth: Option<usize>,
    weight: Option<usize>,
    b1: &str,
    json: bool,
) -> PyResult<(bool, String)> {
    let mut spec = SuiteSpec::new(name).map_err(err)?;
    spec.seed = seed;
    spec.b1 = self::b1(b1)?;
    if let Some(c) = cases {
        spec.cases = c;
    }
    if let Some(d) = depth {
        spec.depth = d;
    }
    if let Some(w) = weight {
        spec.weight = w;
    }
    let rep = run(&spec).map_err(err)?;
    Ok((rep.passed(), if json { rep.to_json() } else { rep.to_text() }))
}

#[pymodule]
fn pyflexion(module: &Bound<'_, PyModule>) -> PyResult<()> {
    module.add("FlexionError", module.py().get_type::<FlexionError>())?;
    module.add_class::<PyMould>()?;
    module.add_class::<PyNcPoly>()?;
    module.add_function(wrap_pyfunction!(swap, module)?)?;
    module.add_function(wrap_pyfunction!(push, module)?)?;
    module.add_function(wrap_pyfunction!(mantar, module)?)?;
    module.add_function(wrap_pyfunction!(neg, module)?)?;
    module.add_function(wrap_pyfunction!(expari, module)?)?;
    module.add_function(wrap_pyfunction!(logari, module)?)?;
    module.add_function(wrap_pyfunction!(invgari, module)?)?;
    module.add_function(wrap_pyfunction!(ari, module)?)?;
    module.add_function(wrap_pyfunction!(mu, module)?)?;
    module.add_function(wrap_pyfunction!(lu, module)?)?;
    module.add_function(wrap_pyfunction!(gari, module)?)?;
    module.add_function(wrap_pyfunction!(adari, module)?)?;
    module.add_function(wrap_pyfunction!(ganit, module)?)?;
    module.add_function(wrap_pyfunction!(pal, module)?)?;
    module.add_function(wrap_pyfunction!(pil, module)?)?;
    module.add_function(wrap_pyfunction!(dupal, module)?)?;
    module.add_function(wrap_pyfunction!(pic, module)?)?;
    module.add_function(wrap_pyfunction!(ma, module)?)?;
    module.add_function(wrap_pyfunction!(mi, module)?)?;
    module.add_function(wrap_pyfunction!(f_star, module)?)?;
    module.add_function(wrap_pyfunction!(poisson, module)?)?;
    module.add_function(wrap_pyfunction!(ds_basis, module)?)?;
    module.add_function(wrap_pyfunction!(is_lie, module)?)?;
    module.add_function(wrap_pyfunction!(is_in_ds, module)?)?;
    module.add_function(wrap_pyfunction!(is_alternal, module)?)?;
    module.add_function(wrap_pyfunction!(is_symmetral, module)?)?;
    module.add_function(wrap_pyfunction!(is_alternil, module)?)?;
    module.add_function(wrap_pyfunction!(classify, module)?)?;
    module.add_function(wrap_pyfunction!(run_suite, module)?)?;
    Ok(())
}
