//! Python bindings: exact points and lines, n-gon configurations, theorem
//! checks, sampling and the reduce/expand/move operations.

use naxes::cli::{render_svg, ConfigFile, RenderOptions};
use naxes::config::full_center;
use naxes::genmove::{
    expand, expand_in_pencil, move_in_config, reduce, rng_for, sample_config, sample_pencil_config, MoveChoice, SampleParams,
};
use naxes::kernel::{join, meet, pencil_of};
use naxes::theorems::{check_degenerate_five, check_five_axes, check_main, check_six, VerifyReport};
use naxes::{validate, Field, GeomError, NgonConfig, ProjLine, ProjPoint, Scalar};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: GeomError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_of(prime: Option<u64>) -> PyResult<Field> {
    prime.map_or(Ok(Field::Rational), |p| Field::prime(p).map_err(err))
}

fn scalar(field: Field, v: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    field.parse_scalar(&v.str()?.to_string()).map_err(err)
}

fn triple(field: Field, xs: &[Bound<'_, PyAny>]) -> PyResult<[Scalar; 3]> {
    match xs {
        [x, y] => Ok([scalar(field, x)?, scalar(field, y)?, field.one()]),
        [x, y, z] => Ok([scalar(field, x)?, scalar(field, y)?, scalar(field, z)?]),
        _ => Err(PyValueError::new_err("expected two or three coordinates")),
    }
}

fn strings(xs: &[Scalar; 3]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// A point of the projective plane over Q or F_p, in canonical form.
#[pyclass(name = "Point", module = "pynaxes", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoint(ProjPoint);

#[pymethods]
impl PyPoint {
    /// `Point(x, y)` or `Point(x, y, z)`; coordinates are ints or strings like "3/4".
    #[new]
    #[pyo3(signature = (*coords, prime=None))]
    fn new(coords: Vec<Bound<'_, PyAny>>, prime: Option<u64>) -> PyResult<Self> {
        let [x, y, z] = triple(field_of(prime)?, &coords)?;
        ProjPoint::new(x, y, z).map(PyPoint).map_err(err)
    }

    fn coords(&self) -> Vec<String> {
        strings(self.0.coords())
    }

    fn affine(&self) -> Option<(String, String)> {
        self.0.to_affine().map(|(x, y)| (x.to_string(), y.to_string()))
    }

    fn is_at_infinity(&self) -> bool {
        self.0.is_at_infinity()
    }

    fn lies_on(&self, line: &PyLine) -> bool {
        self.0.lies_on(&line.0)
    }

    fn join(&self, other: &PyPoint) -> PyResult<PyLine> {
        join(&self.0, &other.0).map(PyLine).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Point{}", self.0)
    }
}

#[pyclass(name = "Line", module = "pynaxes", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLine(ProjLine);

#[pymethods]
impl PyLine {
    /// The line `u x + v y + w z = 0`.
    #[new]
    #[pyo3(signature = (u, v, w, prime=None))]
    fn new(u: Bound<'_, PyAny>, v: Bound<'_, PyAny>, w: Bound<'_, PyAny>, prime: Option<u64>) -> PyResult<Self> {
        let [u, v, w] = triple(field_of(prime)?, &[u, v, w])?;
        ProjLine::new(u, v, w).map(PyLine).map_err(err)
    }

    fn coeffs(&self) -> Vec<String> {
        strings(self.0.coeffs())
    }

    fn meet(&self, other: &PyLine) -> PyResult<PyPoint> {
        meet(&self.0, &other.0).map(PyPoint).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Line{}", self.0)
    }
}

fn report_dict<'py>(py: Python<'py>, r: &VerifyReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("verdict", r.verdict.as_str())?;
    d.set_item("pencil", r.pencil.kind.as_str())?;
    d.set_item("center", r.pencil.center.clone().map(PyPoint))?;
    d.set_item("witness", r.witness.clone())?;
    Ok(d)
}

/// A validated n-gon configuration.
#[pyclass(name = "Config", module = "pynaxes", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyConfig(NgonConfig);

#[pymethods]
impl PyConfig {
    /// Validates the vertices; raises ValueError naming the first violated assumption.
    #[new]
    fn new(points: Vec<PyPoint>) -> PyResult<Self> {
        validate(points.into_iter().map(|p| p.0).collect()).map(PyConfig).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = naxes::cli::parse(text).map_err(err)?;
        validate(file.points().map_err(err)?).map(PyConfig).map_err(err)
    }

    fn to_json(&self) -> String {
        ConfigFile::from_points(self.0.points(), None).to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    fn points(&self) -> Vec<PyPoint> {
        self.0.points().iter().cloned().map(PyPoint).collect()
    }

    /// The axes `g_1, .., g_n`.
    fn axes(&self) -> PyResult<Vec<PyLine>> {
        Ok(self.0.derive().map_err(err)?.axes().iter().cloned().map(PyLine).collect())
    }

    /// Center of the pencil of all axes, or None when they are not in one.
    fn center(&self) -> PyResult<Option<PyPoint>> {
        Ok(full_center(&self.0).map_err(err)?.m.map(PyPoint))
    }

    /// Runs `"five"`, `"six"` or `"main"` and returns a dict with the verdict.
    fn check<'py>(&self, py: Python<'py>, theorem: &str) -> PyResult<Bound<'py, PyDict>> {
        let r = match theorem {
            "five" => check_five_axes(&self.0),
            "six" => check_six(&self.0).map(|(r, _)| r),
            "main" => check_main(&self.0),
            t => return Err(PyValueError::new_err(format!("unknown theorem {t:?}"))),
        }
        .map_err(err)?;
        report_dict(py, &r)
    }

    fn reduce(&self, at: i64) -> PyResult<PyConfig> {
        reduce(&self.0, at).map(PyConfig).map_err(err)
    }

    fn expand(&self, at: i64, t1: Bound<'_, PyAny>, t2: Bound<'_, PyAny>) -> PyResult<PyConfig> {
        let f = self.0.field();
        expand(&self.0, at, &scalar(f, &t1)?, &scalar(f, &t2)?).map(PyConfig).map_err(err)
    }

    /// Splits vertex `at` so that every axis stays in the pencil.
    #[pyo3(signature = (at, t1, seed=0))]
    fn expand_in_pencil(&self, at: i64, t1: Bound<'_, PyAny>, seed: u64) -> PyResult<PyConfig> {
        let t1 = scalar(self.0.field(), &t1)?;
        expand_in_pencil(&self.0, at, &t1, &mut rng_for(seed), 10).map(PyConfig).map_err(err)
    }

    #[pyo3(name = "move")]
    fn move_(&self, at: i64, t: Bound<'_, PyAny>) -> PyResult<PyConfig> {
        let t = scalar(self.0.field(), &t)?;
        move_in_config(&self.0, &MoveChoice { index: at, t }).map(PyConfig).map_err(err)
    }

    fn render(&self) -> PyResult<String> {
        render_svg(self.0.points(), &RenderOptions::default()).map_err(err)
    }

    fn __repr__(&self) -> String {
        let pts: Vec<String> = self.0.points().iter().map(ToString::to_string).collect();
        format!("Config([{}])", pts.join(", "))
    }
}

/// A random valid configuration; with `pencil` all axes share a center.
#[pyfunction]
#[pyo3(signature = (n, seed=0, prime=None, pencil=false))]
fn sample(n: usize, seed: u64, prime: Option<u64>, pencil: bool) -> PyResult<PyConfig> {
    let p = SampleParams::new(n, field_of(prime)?, seed);
    let cfg = if pencil { sample_pencil_config(&p) } else { sample_config(&p) };
    cfg.map(PyConfig).map_err(err)
}

/// Kind of the pencil spanned by the lines and its center if any.
#[pyfunction]
fn pencil(lines: Vec<PyLine>) -> PyResult<(String, Option<PyPoint>)> {
    let ls: Vec<ProjLine> = lines.into_iter().map(|l| l.0).collect();
    let p = pencil_of(&ls).map_err(err)?;
    Ok((p.kind.as_str().to_string(), p.center.map(PyPoint)))
}

/// Degenerate five-point check on `A_1..A_5` with `A_5` on `<A_1, A_4>`.
#[pyfunction]
fn check_degenerate<'py>(py: Python<'py>, points: Vec<PyPoint>) -> PyResult<Bound<'py, PyDict>> {
    let pts: Vec<ProjPoint> = points.into_iter().map(|p| p.0).collect();
    report_dict(py, &check_degenerate_five(&pts).map_err(err)?)
}

#[pymodule]
fn pynaxes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoint>()?;
    m.add_class::<PyLine>()?;
    m.add_class::<PyConfig>()?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(pencil, m)?)?;
    m.add_function(wrap_pyfunction!(check_degenerate, m)?)?;
    Ok(())
}
