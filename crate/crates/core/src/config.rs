//! n-gon configurations: assumption checks, the derived lines and points
//! `l_i, B_{i,i+1}, C_i, E_i, g_i`, and the center of the axes.
//!
//! Indices are 1-based and cyclic throughout: `A_0 = A_n`, `A_{n+1} = A_1`.

use crate::axis::{axis_degenerate, bracket_point, CollinearQuad};
use crate::circles::{circle_tangent, circle_through, Circle};
use crate::error::{GeomError, Result, Violation};
use crate::kernel::{collinear, is_parallel, join, meet, pencil_of, Field, PencilResult, ProjLine, ProjPoint};

/// Maps a 1-based cyclic index to a 0-based position.
pub fn cyc(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize
}

/// Representative of `i` in `1..=n`.
pub fn rep(i: i64, n: usize) -> usize {
    cyc(i, n) + 1
}

fn at(points: &[ProjPoint], i: i64) -> &ProjPoint {
    &points[cyc(i, points.len())]
}

/// `l_i = <A_{i-1}, A_{i+1}>`.
fn side(points: &[ProjPoint], i: i64) -> Result<ProjLine> {
    join(at(points, i - 1), at(points, i + 1))
}

/// A sequence `A_1..A_n` (n >= 5) of finite points satisfying assumptions
/// (i) `A_i ∉ l_{i-2}, l_i, l_{i+2}`, (ii) `l_{i-1} != l_{i+1}` and
/// (iii) `l_i ∦ l_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NgonConfig {
    points: Vec<ProjPoint>,
}

impl NgonConfig {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        validate(points)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<ProjPoint> {
        self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn field(&self) -> Field {
        self.points[0].field()
    }

    /// `A_i`, cyclic.
    pub fn point(&self, i: i64) -> &ProjPoint {
        at(&self.points, i)
    }

    /// `l_i`, cyclic.
    pub fn line(&self, i: i64) -> ProjLine {
        side(&self.points, i).expect("validated vertices are distinct")
    }

    /// The same sequence read from `A_k`: position 1 of the result is `A_k`.
    pub fn rotated(&self, k: i64) -> NgonConfig {
        let n = self.n();
        let points = (0..n as i64).map(|j| self.point(k + j).clone()).collect();
        NgonConfig { points }
    }

    pub fn derive(&self) -> Result<DerivedData> {
        derive(self)
    }
}

fn check_basic(points: &[ProjPoint], min: usize) -> Result<(), Violation> {
    let n = points.len();
    if n < min {
        return Err(Violation::TooFewPoints { n, min });
    }
    if let Some(i) = points.iter().position(ProjPoint::is_at_infinity) {
        return Err(Violation::InfiniteVertex { index: i + 1 });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i] == points[j] {
                return Err(Violation::CoincidentVertices { first: i + 1, second: j + 1 });
            }
        }
    }
    Ok(())
}

/// First violated assumption in the fixed scan order: size, finiteness,
/// distinctness, then (i), (ii), (iii), each by ascending index.
pub fn first_violation(points: &[ProjPoint]) -> Option<Violation> {
    if let Err(v) = check_basic(points, 5) {
        return Some(v);
    }
    let n = points.len();
    let lines: Vec<ProjLine> = (1..=n as i64).map(|i| side(points, i).expect("distinct")).collect();
    let l = |i: i64| &lines[cyc(i, n)];
    for i in 1..=n as i64 {
        for k in [i - 2, i, i + 2] {
            if at(points, i).lies_on(l(k)) {
                return Some(Violation::VertexOnLine { index: i as usize, line: rep(k, n) });
            }
        }
    }
    for i in 1..=n as i64 {
        if l(i - 1) == l(i + 1) {
            return Some(Violation::EqualLines { index: i as usize, prev: rep(i - 1, n), next: rep(i + 1, n) });
        }
    }
    for i in 1..=n as i64 {
        if is_parallel(l(i), l(i + 1)).expect("finite lines") {
            return Some(Violation::ParallelLines { index: i as usize, next: rep(i + 1, n) });
        }
    }
    None
}

pub fn validate(points: Vec<ProjPoint>) -> Result<NgonConfig> {
    if let Some(f) = points.first().map(ProjPoint::field) {
        if points.iter().any(|p| p.field() != f) {
            return Err(GeomError::FieldMismatch);
        }
    }
    match first_violation(&points) {
        Some(v) => Err(v.into()),
        None => Ok(NgonConfig { points }),
    }
}

/// Assumptions (i) and (ii) for pairwise distinct finite points.
pub fn assumptions_i_ii_hold(points: &[ProjPoint]) -> bool {
    matches!(
        first_violation(points),
        None | Some(Violation::ParallelLines { .. })
    )
}

/// Assumption (iv): `A_i ∉ l_{i-3}, l_{i-2}, l_i, l_{i+2}, l_{i+3}` for all i.
pub fn assumption_iv_holds(points: &[ProjPoint]) -> bool {
    if check_basic(points, 5).is_err() {
        return false;
    }
    (1..=points.len() as i64).all(|i| {
        [i - 3, i - 2, i, i + 2, i + 3]
            .iter()
            .all(|&k| !at(points, i).lies_on(&side(points, k).expect("distinct")))
    })
}

/// The axis through one vertex, computed from the five vertices
/// `A_{i-2}, A_{i-1}, A_i, A_{i+1}, A_{i+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAxis {
    /// `l_{i-1}`, `l_i`, `l_{i+1}`.
    pub lines: [ProjLine; 3],
    /// `B_{i-1,i}` and `B_{i,i+1}`.
    pub b_prev: ProjPoint,
    pub b_next: ProjPoint,
    pub c: ProjPoint,
    pub e: ProjPoint,
    pub g: ProjLine,
}

/// Builds `g_i` from a window of five vertices. The outer two may be points at
/// infinity. When `A_i` lies on `l_i` the degenerate construction is used, in
/// which `A_i = B_{i-1,i} = B_{i,i+1} = C_i`.
///
/// `g_i` is computed twice, as `<A_i, C_i>` with `C_i` the bracket point and as
/// `<A_i, E_i>` with `E_i` the meet of the parallel to `l_{i+1}` through
/// `A_{i-1}` and the parallel to `l_{i-1}` through `A_{i+1}`; disagreement is
/// an error.
pub fn local_axis(window: [&ProjPoint; 5]) -> Result<LocalAxis> {
    let [a_m2, a_m1, a, a_p1, a_p2] = window;
    if a.is_at_infinity() || a_m1.is_at_infinity() || a_p1.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    let l_prev = join(a_m2, a)?;
    let l_cur = join(a_m1, a_p1)?;
    let l_next = join(a, a_p2)?;
    let b_prev = meet(&l_prev, &l_cur)?;
    let b_next = meet(&l_cur, &l_next)?;
    if b_prev.is_at_infinity() || b_next.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    let e = meet(&l_next.parallel_through(a_m1)?, &l_prev.parallel_through(a_p1)?)?;
    let (c, g) = if a.lies_on(&l_cur) {
        let ax = axis_degenerate(a_m1, a_p1, a, &l_prev, &l_next)?;
        (ax.c, ax.g)
    } else {
        let quad = CollinearQuad::new(a_m1.clone(), b_prev.clone(), b_next.clone(), a_p1.clone())?;
        let c = bracket_point(&quad)?;
        (c.clone(), join(a, &c)?)
    };
    if join(a, &e)? != g {
        return Err(GeomError::Inconsistent(format!("axis via C {g} differs from axis via E {e}")));
    }
    Ok(LocalAxis {
        lines: [l_prev, l_cur, l_next],
        b_prev,
        b_next,
        c,
        e,
        g,
    })
}

/// `g_i` of an arbitrary cyclic point sequence, with only the local checks of
/// [`local_axis`].
pub fn axis_of_sequence(points: &[ProjPoint], i: i64) -> Result<LocalAxis> {
    local_axis([at(points, i - 2), at(points, i - 1), at(points, i), at(points, i + 1), at(points, i + 2)])
}

/// All derived objects of a configuration, stored by 1-based cyclic index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedData {
    l: Vec<ProjLine>,
    b: Vec<ProjPoint>,
    c: Vec<ProjPoint>,
    e: Vec<ProjPoint>,
    g: Vec<ProjLine>,
}

impl DerivedData {
    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self, i: i64) -> &ProjLine {
        &self.l[cyc(i, self.n())]
    }

    /// `B_{i,i+1}`.
    pub fn b(&self, i: i64) -> &ProjPoint {
        &self.b[cyc(i, self.n())]
    }

    pub fn c(&self, i: i64) -> &ProjPoint {
        &self.c[cyc(i, self.n())]
    }

    pub fn e(&self, i: i64) -> &ProjPoint {
        &self.e[cyc(i, self.n())]
    }

    pub fn g(&self, i: i64) -> &ProjLine {
        &self.g[cyc(i, self.n())]
    }

    pub fn axes(&self) -> &[ProjLine] {
        &self.g
    }

    pub fn sides(&self) -> &[ProjLine] {
        &self.l
    }

    /// `B_{1,2}, ..., B_{n,1}`.
    pub fn b_points(&self) -> &[ProjPoint] {
        &self.b
    }

    pub fn c_points(&self) -> &[ProjPoint] {
        &self.c
    }

    pub fn e_points(&self) -> &[ProjPoint] {
        &self.e
    }
}

pub fn derive(cfg: &NgonConfig) -> Result<DerivedData> {
    derive_points(cfg.points())
}

/// Derivation without the global assumption checks; local degeneracies are
/// still reported as errors.
pub fn derive_points(points: &[ProjPoint]) -> Result<DerivedData> {
    let n = points.len();
    let mut out = DerivedData {
        l: Vec::with_capacity(n),
        b: Vec::with_capacity(n),
        c: Vec::with_capacity(n),
        e: Vec::with_capacity(n),
        g: Vec::with_capacity(n),
    };
    for i in 1..=n as i64 {
        let ax = axis_of_sequence(points, i)?;
        let [_, l, _] = ax.lines;
        out.l.push(l);
        out.b.push(ax.b_next);
        out.c.push(ax.c);
        out.e.push(ax.e);
        out.g.push(ax.g);
    }
    Ok(out)
}

/// The circles `c_{i,i+1}` through `A_i`, `B_{i,i+1}`, `A_{i+1}`, for i = 1..n.
/// When `B_{i,i+1}` coincides with `A_i` or `A_{i+1}` the circle through the
/// other vertex tangent to the side line at `B_{i,i+1}` is used.
pub fn circle_chain(points: &[ProjPoint], d: &DerivedData) -> Result<Vec<Circle>> {
    let n = points.len();
    (1..=n as i64)
        .map(|i| {
            let (a, b, next) = (at(points, i), d.b(i), at(points, i + 1));
            if b == next {
                circle_tangent(a, b, &side(points, i)?)
            } else if b == a {
                circle_tangent(next, b, &side(points, i + 1)?)
            } else {
                circle_through(a, b, next)
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterResult {
    pub pencil: PencilResult,
    pub m: Option<ProjPoint>,
}

/// Pencil classification of the axes `g_i` for `i` in `subset` (1-based).
pub fn center(cfg: &NgonConfig, subset: &[i64]) -> Result<CenterResult> {
    let d = derive(cfg)?;
    center_of(&d, subset)
}

pub fn center_of(d: &DerivedData, subset: &[i64]) -> Result<CenterResult> {
    if subset.len() < 2 {
        return Err(GeomError::InvalidArgument("center needs at least two axes".into()));
    }
    let lines: Vec<ProjLine> = subset.iter().map(|&i| d.g(i).clone()).collect();
    let pencil = pencil_of(&lines)?;
    let m = pencil.center.clone();
    Ok(CenterResult { pencil, m })
}

/// Center over all axes.
pub fn full_center(cfg: &NgonConfig) -> Result<CenterResult> {
    let all: Vec<i64> = (1..=cfg.n() as i64).collect();
    center(cfg, &all)
}

/// The fixed frame `A_1 = (0:0:1)`, `A_3 = (0:1:1)`, `A_4 = (1:0:1)`.
pub fn center_frame(field: Field) -> [ProjPoint; 3] {
    [
        ProjPoint::from_ints(field, 0, 0, 1).expect("nonzero"),
        ProjPoint::from_ints(field, 0, 1, 1).expect("nonzero"),
        ProjPoint::from_ints(field, 1, 0, 1).expect("nonzero"),
    ]
}

/// The pentagon `A_1..A_5` with `A_1, A_3, A_4` in the fixed frame.
pub fn frame_pentagon(a2: &ProjPoint, a5: &ProjPoint) -> Vec<ProjPoint> {
    let [a1, a3, a4] = center_frame(a2.field());
    vec![a1, a2.clone(), a3, a4, a5.clone()]
}

/// Closed form of the center in the fixed frame, for `A_2 = (a:b:c)` and
/// `A_5 = (x:y:z)`: `M = (cx : bz : (c-b)x + (a-c)y + (c-a+b)z)`.
pub fn center_formula(a2: &ProjPoint, a5: &ProjPoint) -> Result<ProjPoint> {
    let [a, b, c] = a2.coords();
    let [x, y, z] = a5.coords();
    let w = &(c - b) * x + &(a - c) * y + &(&(c - a) + b) * z;
    ProjPoint::new(c * x, b * z, w).map_err(|_| GeomError::CenterUndefined)
}

/// The line of `A_5` positions whose center lies at infinity, for fixed
/// `A_2 = (a:b:c)`: `(c-b)x + (a-c)y + (c-a+b)z = 0`.
pub fn parallel_axes_locus(a2: &ProjPoint) -> Result<ProjLine> {
    let [a, b, c] = a2.coords();
    ProjLine::new(c - b, a - c, &(c - a) + b)
}

/// Whether some three of the points are collinear (excluding `allowed`).
pub fn collinear_triple(points: &[ProjPoint], allowed: Option<[usize; 3]>) -> Option<[usize; 3]> {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let t = [i + 1, j + 1, k + 1];
                if Some(t) != allowed && collinear(&points[i], &points[j], &points[k]) {
                    return Some(t);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PencilKind;

    const Q: Field = Field::Rational;

    fn pts(c: &[(i64, i64)]) -> Vec<ProjPoint> {
        c.iter().map(|&(x, y)| ProjPoint::affine_ints(Q, x, y)).collect()
    }

    fn pentagon() -> NgonConfig {
        validate(pts(&[(0, 0), (3, 1), (0, 1), (1, 0), (1, 3)])).unwrap()
    }

    #[test]
    fn valid_pentagon() {
        let cfg = pentagon();
        assert_eq!(cfg.n(), 5);
        assert!(assumption_iv_holds(cfg.points()));
        // l_3 = <A_2, A_4> and l_4 = <A_3, A_5> both have slope 1
        let err = validate(pts(&[(0, 0), (2, 1), (0, 1), (1, 0), (1, 2)])).unwrap_err();
        assert_eq!(err, GeomError::Config(Violation::ParallelLines { index: 3, next: 4 }));
    }

    #[test]
    fn planted_violations() {
        // A_1 on l_1 = <A_6, A_2>
        let hex = pts(&[(1, 1), (2, 2), (5, 1), (4, -3), (1, -4), (0, 0)]);
        let err = validate(hex).unwrap_err();
        assert_eq!(err, GeomError::Config(Violation::VertexOnLine { index: 1, line: 1 }));

        // l_2 = <A_1,A_3> parallel to l_3 = <A_2,A_4>
        let pent = pts(&[(0, 0), (3, 0), (1, 1), (4, 1), (1, 4)]);
        let err = validate(pent).unwrap_err();
        assert_eq!(err, GeomError::Config(Violation::ParallelLines { index: 2, next: 3 }));

        let dup = pts(&[(0, 0), (2, 1), (0, 1), (2, 1), (1, 2)]);
        assert_eq!(
            validate(dup).unwrap_err(),
            GeomError::Config(Violation::CoincidentVertices { first: 2, second: 4 })
        );
        assert!(matches!(
            validate(pts(&[(0, 0), (1, 0), (0, 1), (1, 1)])),
            Err(GeomError::Config(Violation::TooFewPoints { .. }))
        ));
    }

    #[test]
    fn frame_b_points() {
        // A_3 origin, A_2 = (0,1), A_4 = (1,0), A_1 = (a,b) = (3,2), A_6 = (c,d) = (2,3), A_5 = (2,5)
        let hex = pts(&[(3, 2), (0, 1), (0, 0), (1, 0), (2, 5), (2, 3)]);
        let d = derive_points(&hex).unwrap();
        assert_eq!(*d.b(2), ProjPoint::affine_ratio(Q, (3, 5), (2, 5)).unwrap());
        assert_eq!(*d.b(1), ProjPoint::affine_ints(Q, -3, -2));
    }

    #[test]
    fn e_point_in_center_frame() {
        let a2 = ProjPoint::from_ints(Q, 3, 1, 1).unwrap();
        let a5 = ProjPoint::from_ints(Q, 1, 3, 1).unwrap();
        let d = derive_points(&frame_pentagon(&a2, &a5)).unwrap();
        // E_1 = (cx : bz : cz), E_4 = (bx + (c-a)y + (a-c)z : bz : bz)
        assert_eq!(*d.e(1), ProjPoint::from_ints(Q, 1, 1, 1).unwrap());
        assert_eq!(*d.e(4), ProjPoint::from_ints(Q, -3, 1, 1).unwrap());
    }

    #[test]
    fn pentagon_center() {
        let cfg = pentagon();
        let r = full_center(&cfg).unwrap();
        assert_eq!(r.pencil.kind, PencilKind::FiniteCenter);
        assert_eq!(r.m, Some(ProjPoint::from_ints(Q, 1, 1, 5).unwrap()));
        let two = center(&cfg, &[1, 4]).unwrap();
        assert_eq!(two.m, r.m);
    }

    #[test]
    fn formula_examples() {
        let a2 = ProjPoint::from_ints(Q, 2, 1, 1).unwrap();
        let a5 = ProjPoint::from_ints(Q, 1, 2, 1).unwrap();
        assert_eq!(center_formula(&a2, &a5).unwrap(), ProjPoint::from_ints(Q, 1, 1, 2).unwrap());
        // A_2 = A_4 and A_5 on <A_1, A_3>: undefined
        let a2 = ProjPoint::from_ints(Q, 1, 0, 1).unwrap();
        let a5 = ProjPoint::from_ints(Q, 0, 3, 1).unwrap();
        assert_eq!(center_formula(&a2, &a5), Err(GeomError::CenterUndefined));
    }

    #[test]
    fn rotation_and_indices() {
        assert_eq!(cyc(0, 5), 4);
        assert_eq!(cyc(6, 5), 0);
        assert_eq!(rep(-1, 5), 4);
        let cfg = pentagon();
        let r = cfg.rotated(3);
        assert_eq!(r.point(1), cfg.point(3));
        assert_eq!(r.point(5), cfg.point(2));
    }
}
