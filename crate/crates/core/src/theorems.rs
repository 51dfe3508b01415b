//! Exact verifiers: the five-axes theorem and its degenerate case, the
//! concurrence condition for three cevian-like lines, the six-point
//! equivalences, the seven-point criterion for three consecutive axes, and the
//! n-axes theorem.

use std::fmt;

use crate::axis::{bracket_point, line_ratio, CollinearQuad};
use crate::config::{axis_of_sequence, collinear_triple, derive_points, DerivedData, NgonConfig};
use crate::error::{GeomError, Result, Violation};
use crate::kernel::{collinear, determinant, is_parallel, join, meet, pencil_of, Field, PencilKind, PencilResult, ProjLine, ProjPoint, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotSatisfied,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisNotSatisfied => "hypothesis not satisfied",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub pencil: PencilResult,
    /// 1-based indices of the axes that miss the center, on failure.
    pub witness: Vec<usize>,
    pub axes: usize,
    pub field: Field,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Axes (1-based indices into `g`) that do not pass through the center of the
/// first two distinct axes.
fn witness(g: &[ProjLine]) -> Vec<usize> {
    let Some(j) = g.iter().position(|l| *l != g[0]) else {
        return Vec::new();
    };
    let Ok(m) = meet(&g[0], &g[j]) else {
        return Vec::new();
    };
    g.iter()
        .enumerate()
        .filter(|(_, l)| !m.lies_on(l))
        .map(|(i, _)| i + 1)
        .collect()
}

fn pencil_report(g: &[ProjLine]) -> Result<VerifyReport> {
    let pencil = pencil_of(g)?;
    let verdict = if pencil.is_pencil() { Verdict::Pass } else { Verdict::Fail };
    let witness = if pencil.is_pencil() { Vec::new() } else { witness(g) };
    Ok(VerifyReport {
        verdict,
        pencil,
        witness,
        axes: g.len(),
        field: g[0].field(),
    })
}

pub fn check_five_axes(cfg: &NgonConfig) -> Result<VerifyReport> {
    if cfg.n() != 5 {
        return Err(GeomError::InvalidArgument(format!("five points expected, got {}", cfg.n())));
    }
    pencil_report(cfg.derive()?.axes())
}

/// Preconditions of the degenerate five-axes theorem: five distinct finite
/// points with `A_5 ∈ <A_1, A_4>`, no other collinear triple, `l_i ∦ l_{i+1}`.
pub fn check_degenerate_preconditions(points: &[ProjPoint]) -> Result<()> {
    if points.len() != 5 {
        return Err(Violation::TooFewPoints { n: points.len(), min: 5 }.into());
    }
    if let Some(i) = points.iter().position(ProjPoint::is_at_infinity) {
        return Err(Violation::InfiniteVertex { index: i + 1 }.into());
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            if points[i] == points[j] {
                return Err(Violation::CoincidentVertices { first: i + 1, second: j + 1 }.into());
            }
        }
    }
    if !collinear(&points[0], &points[3], &points[4]) {
        return Err(Violation::MissingIncidence("A_5 does not lie on <A_1, A_4>".into()).into());
    }
    if let Some(t) = collinear_triple(points, Some([1, 4, 5])) {
        return Err(Violation::CollinearTriple { indices: t }.into());
    }
    let l: Vec<ProjLine> = (0..5)
        .map(|i| join(&points[(i + 4) % 5], &points[(i + 1) % 5]))
        .collect::<Result<_>>()?;
    for i in 0..5 {
        if is_parallel(&l[i], &l[(i + 1) % 5])? {
            return Err(Violation::ParallelLines { index: i + 1, next: (i + 1) % 5 + 1 }.into());
        }
    }
    Ok(())
}

/// Derived data of a degenerate pentagon; `g_5` comes from the construction
/// for an apex on its own side line.
pub fn derive_degenerate_five(points: &[ProjPoint]) -> Result<DerivedData> {
    check_degenerate_preconditions(points)?;
    derive_points(points)
}

pub fn check_degenerate_five(points: &[ProjPoint]) -> Result<VerifyReport> {
    pencil_report(derive_degenerate_five(points)?.axes())
}

/// Points `A..I` with `A, C, F, G`, `C, E, H, I` and `B, D, G, H` collinear and
/// `A, C, E` not collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcurInput {
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub d: ProjPoint,
    pub e: ProjPoint,
    pub f: ProjPoint,
    pub g: ProjPoint,
    pub h: ProjPoint,
    pub i: ProjPoint,
}

fn on_one_line(pts: [&ProjPoint; 4]) -> bool {
    let Some(j) = pts.iter().position(|p| *p != pts[0]) else {
        return true;
    };
    let l = join(pts[0], pts[j]).expect("distinct");
    pts.iter().all(|p| p.lies_on(&l))
}

impl ConcurInput {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: ProjPoint,
        b: ProjPoint,
        c: ProjPoint,
        d: ProjPoint,
        e: ProjPoint,
        f: ProjPoint,
        g: ProjPoint,
        h: ProjPoint,
        i: ProjPoint,
    ) -> Result<Self> {
        if collinear(&a, &c, &e) {
            return Err(GeomError::Inconsistent("A, C and E are collinear".into()));
        }
        if !on_one_line([&a, &c, &f, &g]) {
            return Err(GeomError::Inconsistent("A, C, F, G are not collinear".into()));
        }
        if !on_one_line([&c, &e, &h, &i]) {
            return Err(GeomError::Inconsistent("C, E, H, I are not collinear".into()));
        }
        if !on_one_line([&b, &d, &g, &h]) {
            return Err(GeomError::Inconsistent("B, D, G, H are not collinear".into()));
        }
        Ok(ConcurInput { a, b, c, d, e, f, g, h, i })
    }

    /// `U = [A,F|C,G]`.
    pub fn u(&self) -> Result<ProjPoint> {
        bracket_point(&CollinearQuad::new(self.a.clone(), self.f.clone(), self.c.clone(), self.g.clone())?)
    }

    /// `V = [H,D|B,G]`.
    pub fn v(&self) -> Result<ProjPoint> {
        bracket_point(&CollinearQuad::new(self.h.clone(), self.d.clone(), self.b.clone(), self.g.clone())?)
    }

    /// `W = [C,H|E,I]`.
    pub fn w(&self) -> Result<ProjPoint> {
        bracket_point(&CollinearQuad::new(self.c.clone(), self.h.clone(), self.e.clone(), self.i.clone())?)
    }

    /// `<B,U>`, `<C,V>`, `<D,W>`.
    pub fn lines(&self) -> Result<[ProjLine; 3]> {
        Ok([join(&self.b, &self.u()?)?, join(&self.c, &self.v()?)?, join(&self.d, &self.w()?)?])
    }

    pub fn lines_pencil(&self) -> Result<PencilResult> {
        pencil_of(&self.lines()?)
    }

    /// Both sides of
    /// `(B-G)/(B-H) (E-H)/(E-C) (F-C)/(F-G) = (D-H)/(D-G) (A-G)/(A-C) (I-C)/(I-H)`.
    pub fn sides(&self) -> Result<(Scalar, Scalar)> {
        let r = |x: &ProjPoint, y: &ProjPoint, z: &ProjPoint, name: &'static str| {
            line_ratio(x, y, x, z).map_err(|e| match e {
                GeomError::ZeroRatioDenominator | GeomError::UndefinedRatio => GeomError::DegenerateRatio(name),
                e => e,
            })
        };
        let lhs = r(&self.b, &self.g, &self.h, "B-H")?
            * r(&self.e, &self.h, &self.c, "E-C")?
            * r(&self.f, &self.c, &self.g, "F-G")?;
        let rhs = r(&self.d, &self.h, &self.g, "D-G")?
            * r(&self.a, &self.g, &self.c, "A-C")?
            * r(&self.i, &self.c, &self.h, "I-H")?;
        Ok((lhs, rhs))
    }
}

/// Truth of the ratio condition; with `degenerate_af` the input must have
/// `A = F`.
pub fn concur_condition(inp: &ConcurInput, degenerate_af: bool) -> Result<bool> {
    if degenerate_af != (inp.a == inp.f) {
        return Err(GeomError::InvalidArgument(if degenerate_af {
            "A and F must coincide".into()
        } else {
            "A and F coincide; use the degenerate variant".into()
        }));
    }
    let (lhs, rhs) = inp.sides()?;
    Ok(lhs == rhs)
}

/// The labelling `(A..I) = (A_1..A_5, B_{1,2}, B_{2,3}, B_{3,4}, B_{4,5})`, for
/// which the three lines are `g_2, g_3, g_4`.
pub fn concur_from_sequence(points: &[ProjPoint], d: &DerivedData) -> Result<ConcurInput> {
    ConcurInput::new(
        points[0].clone(),
        points[1].clone(),
        points[2].clone(),
        points[3].clone(),
        points[4].clone(),
        d.b(1).clone(),
        d.b(2).clone(),
        d.b(3).clone(),
        d.b(4).clone(),
    )
}

/// The labelling `(B,C,D,E,A=F) = (A_1..A_4, A_5)`, `(G,H,I) = (B_{1,2},
/// B_{2,3}, B_{3,4})` of a degenerate pentagon; the lines are `g_1, g_2, g_3`.
pub fn concur_from_degenerate(points: &[ProjPoint], d: &DerivedData) -> Result<ConcurInput> {
    ConcurInput::new(
        points[4].clone(),
        points[0].clone(),
        points[1].clone(),
        points[2].clone(),
        points[3].clone(),
        points[4].clone(),
        d.b(1).clone(),
        d.b(2).clone(),
        d.b(3).clone(),
    )
}

fn nonzero(s: Scalar, what: &'static str) -> Result<()> {
    if s.is_zero() {
        Err(GeomError::Nondegeneracy(what))
    } else {
        Ok(())
    }
}

/// `(e+f-1)cb = (a+b-1)de` for the hexagon with `A_3` at the origin,
/// `A_2 = (0,1)`, `A_4 = (1,0)`, `A_1 = (a,b)`, `A_6 = (c,d)`, `A_5 = (e,f)`.
pub fn zescond(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar, f: &Scalar) -> Result<bool> {
    let one = a.field().one();
    nonzero(a + b, "a+b must be nonzero")?;
    nonzero(e + f, "e+f must be nonzero")?;
    nonzero(a.clone(), "a must be nonzero")?;
    nonzero(f.clone(), "f must be nonzero")?;
    nonzero(&(c + d) - &one, "c+d must differ from 1")?;
    Ok(&(&(&(e + f) - &one) * c) * b == &(&(&(a + b) - &one) * d) * e)
}

/// Determinant of the main diagonals `<A_1,A_4>`, `<A_2,A_5>`, `<A_3,A_6>` in
/// the same coordinates.
pub fn delta(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar, f: &Scalar) -> Scalar {
    let fd = a.field();
    let one = fd.one();
    let rows = vec![
        vec![b.clone(), &one - a, -b],
        vec![&one - f, e.clone(), -e],
        vec![d.clone(), -c, fd.zero()],
    ];
    determinant(&rows)
}

/// `A_1..A_6` for the tuple `(a,b,c,d,e,f)` of [`zescond`].
pub fn hexagon_from_tuple(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, e: &Scalar, f: &Scalar) -> Vec<ProjPoint> {
    let fd = a.field();
    vec![
        ProjPoint::affine(a.clone(), b.clone()),
        ProjPoint::affine(fd.zero(), fd.one()),
        ProjPoint::affine(fd.zero(), fd.zero()),
        ProjPoint::affine(fd.one(), fd.zero()),
        ProjPoint::affine(e.clone(), f.clone()),
        ProjPoint::affine(c.clone(), d.clone()),
    ]
}

fn conic_rows(triples: &[&[Scalar; 3]]) -> Vec<Vec<Scalar>> {
    triples
        .iter()
        .map(|[x, y, z]| vec![x.square(), x * y, y.square(), x * z, y * z, z.square()])
        .collect()
}

/// Whether six points lie on one conic.
pub fn six_points_on_conic(points: &[ProjPoint]) -> Result<bool> {
    if points.len() != 6 {
        return Err(GeomError::InvalidArgument("six points expected".into()));
    }
    let t: Vec<&[Scalar; 3]> = points.iter().map(ProjPoint::coords).collect();
    Ok(determinant(&conic_rows(&t)).is_zero())
}

/// Whether six lines are tangent to one conic.
pub fn six_lines_tangent_conic(lines: &[ProjLine]) -> Result<bool> {
    if lines.len() != 6 {
        return Err(GeomError::InvalidArgument("six lines expected".into()));
    }
    if lines[0].field().characteristic() == 2 {
        return Err(GeomError::CharacteristicTwo);
    }
    let t: Vec<&[Scalar; 3]> = lines.iter().map(ProjLine::coeffs).collect();
    Ok(determinant(&conic_rows(&t)).is_zero())
}

/// The four conditions of the six-point theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixEquivalence {
    /// All six axes in a pencil.
    pub all_axes: bool,
    /// `g_{i-1}, g_i, g_{i+1}` in a pencil, for i = 1..6.
    pub triples: [bool; 6],
    /// The main diagonals `<A_i, A_{i+3}>` in a pencil.
    pub diagonals: bool,
    /// The six `B_{i,i+1}` on a conic.
    pub conic: bool,
}

impl SixEquivalence {
    pub fn agree(&self) -> bool {
        self.triples.iter().all(|&t| t == self.all_axes) && self.diagonals == self.all_axes && self.conic == self.all_axes
    }

    pub fn holds(&self) -> bool {
        self.agree() && self.all_axes
    }
}

pub fn six_equivalence(cfg: &NgonConfig) -> Result<SixEquivalence> {
    if cfg.n() != 6 {
        return Err(GeomError::InvalidArgument(format!("six points expected, got {}", cfg.n())));
    }
    let d = cfg.derive()?;
    let all_axes = pencil_of(d.axes())?.is_pencil();
    let mut triples = [false; 6];
    for (k, t) in triples.iter_mut().enumerate() {
        let i = k as i64 + 1;
        *t = pencil_of(&[d.g(i - 1).clone(), d.g(i).clone(), d.g(i + 1).clone()])?.is_pencil();
    }
    let diag: Vec<ProjLine> = (1..=3).map(|i| join(cfg.point(i), cfg.point(i + 3))).collect::<Result<_>>()?;
    let diagonals = pencil_of(&diag)?.is_pencil();
    let conic = six_points_on_conic(d.b_points())?;
    Ok(SixEquivalence { all_axes, triples, diagonals, conic })
}

pub fn check_six(cfg: &NgonConfig) -> Result<(VerifyReport, SixEquivalence)> {
    let eq = six_equivalence(cfg)?;
    let d = cfg.derive()?;
    let mut report = pencil_report(d.axes())?;
    report.verdict = if eq.agree() { Verdict::Pass } else { Verdict::Fail };
    Ok((report, eq))
}

/// The three lines `<A_{i-2},A_{i+1}>`, `<A_{i-1},A_{i+2}>`, `<A_i,D_i>` with
/// `D_i = l_{i-2} ∩ l_{i+2}`, for a cyclic point sequence.
pub fn hexagon_criterion_lines(points: &[ProjPoint], i: i64) -> Result<[ProjLine; 3]> {
    let n = points.len();
    let a = |k: i64| &points[crate::config::cyc(k, n)];
    let d_i = meet(&join(a(i - 3), a(i - 1))?, &join(a(i + 1), a(i + 3))?)?;
    Ok([join(a(i - 2), a(i + 1))?, join(a(i - 1), a(i + 2))?, join(a(i), &d_i)?])
}

/// Whether `g_{i-1}, g_i, g_{i+1}` lie in a pencil, decided from the seven
/// points `A_{i-3}..A_{i+3}` without constructing any axis.
pub fn hexagon_criterion(cfg: &NgonConfig, i: i64) -> Result<bool> {
    criterion_of_sequence(cfg.points(), i)
}

pub fn criterion_of_sequence(points: &[ProjPoint], i: i64) -> Result<bool> {
    Ok(pencil_of(&hexagon_criterion_lines(points, i)?)?.is_pencil())
}

/// Direct check that `g_{i-1}, g_i, g_{i+1}` of a point sequence lie in a
/// pencil, via local axes.
pub fn consecutive_axes_in_pencil(points: &[ProjPoint], i: i64) -> Result<bool> {
    let g: Vec<ProjLine> = (i - 1..=i + 1)
        .map(|k| axis_of_sequence(points, k).map(|ax| ax.g))
        .collect::<Result<_>>()?;
    Ok(pencil_of(&g)?.is_pencil())
}

/// The n-axes theorem: if `g_1..g_{n-3}` lie in a pencil then so do
/// `g_{n-2}, g_{n-1}, g_n`, with the same center.
pub fn check_main(cfg: &NgonConfig) -> Result<VerifyReport> {
    let d = cfg.derive()?;
    check_main_derived(&d)
}

pub fn check_main_derived(d: &DerivedData) -> Result<VerifyReport> {
    let n = d.n();
    let g = d.axes();
    let field = g[0].field();
    let hyp = pencil_of(&g[..n - 3])?;
    if !hyp.is_pencil() {
        return Ok(VerifyReport {
            verdict: Verdict::HypothesisNotSatisfied,
            pencil: hyp,
            witness: witness(&g[..n - 3]),
            axes: n,
            field,
        });
    }
    let full = pencil_of(g)?;
    let (verdict, witness) = match &hyp.center {
        None => {
            // all hypothesis axes coincide; any pencil containing them will do
            let v = if full.is_pencil() { Verdict::Pass } else { Verdict::Fail };
            (v, Vec::new())
        }
        Some(m) => {
            let off: Vec<usize> = (n - 2..=n).filter(|&k| !m.lies_on(&g[k - 1])).collect();
            let v = if off.is_empty() { Verdict::Pass } else { Verdict::Fail };
            (v, off)
        }
    };
    let pencil = if verdict == Verdict::Pass && hyp.kind != PencilKind::Degenerate { hyp } else { full };
    Ok(VerifyReport { verdict, pencil, witness, axes: n, field })
}
