//! Affine axis machinery on a single line: directed ratios, the bracket point
//! `[P,Q|R,S]`, the axis built from parallels (ordinary and degenerate), and
//! the involution attached to an axis point.

use crate::error::{GeomError, Result};
use crate::kernel::{join, meet, rank, Field, ProjLine, ProjPoint, Scalar};

/// Affine parametrization `t -> origin + t * direction` of a line other than
/// the line at infinity. Points are addressed by homogeneous parameters
/// `(num : den)`, with `den = 0` for the point at infinity of the line.
#[derive(Clone, Debug)]
pub struct LineChart {
    line: ProjLine,
    origin: (Scalar, Scalar),
    direction: (Scalar, Scalar),
}

impl LineChart {
    pub fn new(line: &ProjLine) -> Result<Self> {
        if line.is_at_infinity() {
            return Err(GeomError::LineAtInfinity);
        }
        let [u, v, w] = line.coeffs();
        let zero = u.field().zero();
        let origin = if !u.is_zero() {
            (-(w / u), zero)
        } else {
            (zero, -(w / v))
        };
        Ok(LineChart {
            line: line.clone(),
            origin,
            direction: (v.clone(), -u),
        })
    }

    pub fn line(&self) -> &ProjLine {
        &self.line
    }

    pub fn field(&self) -> Field {
        self.line.field()
    }

    /// Homogeneous parameter of a point on the line.
    pub fn param(&self, p: &ProjPoint) -> Result<(Scalar, Scalar)> {
        if !p.lies_on(&self.line) {
            return Err(GeomError::NotOnLine);
        }
        let f = self.field();
        match p.to_affine() {
            None => Ok((f.one(), f.zero())),
            Some((x, y)) => Ok((self.finite_param(&x, &y), f.one())),
        }
    }

    /// Affine parameter of a finite point on the line.
    pub fn affine_param(&self, p: &ProjPoint) -> Result<Scalar> {
        let (num, den) = self.param(p)?;
        if den.is_zero() {
            return Err(GeomError::PointAtInfinity);
        }
        Ok(num)
    }

    fn finite_param(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let (dx, dy) = &self.direction;
        if !dx.is_zero() {
            (x - &self.origin.0) / dx
        } else {
            (y - &self.origin.1) / dy
        }
    }

    pub fn point(&self, num: &Scalar, den: &Scalar) -> Result<ProjPoint> {
        let (ox, oy) = &self.origin;
        let (dx, dy) = &self.direction;
        ProjPoint::new(ox * den + dx * num, oy * den + dy * num, den.clone())
    }

    pub fn point_at(&self, t: &Scalar) -> ProjPoint {
        self.point(t, &t.field().one()).expect("finite point")
    }
}

fn all_collinear(points: &[&ProjPoint]) -> bool {
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
    rank(&rows) <= 2
}

/// The scalar `lambda` with `P - Q = lambda (R - S)` for collinear points.
///
/// `R` and `S` must be finite and distinct, except for the single infinite
/// case in which `P` is at infinity and `R = P`: then `(P-Q)/(P-S) = 1` for
/// distinct finite `Q`, `S`.
pub fn line_ratio(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint, s: &ProjPoint) -> Result<Scalar> {
    if r == s {
        return Err(GeomError::ZeroRatioDenominator);
    }
    if !all_collinear(&[p, q, r, s]) {
        return Err(GeomError::NotCollinear);
    }
    if p.is_at_infinity() && q.is_at_infinity() {
        return Err(GeomError::UndefinedRatio);
    }
    if p.is_at_infinity() && r == p && q.is_finite() && s.is_finite() && q != s {
        return Ok(p.field().one());
    }
    let (Some(pa), Some(qa), Some(ra), Some(sa)) = (p.to_affine(), q.to_affine(), r.to_affine(), s.to_affine()) else {
        return Err(GeomError::UndefinedRatio);
    };
    let num = (&pa.0 - &qa.0, &pa.1 - &qa.1);
    let den = (&ra.0 - &sa.0, &ra.1 - &sa.1);
    if !den.0.is_zero() {
        Ok(num.0 / den.0)
    } else {
        Ok(num.1 / den.1)
    }
}

/// Two pairs `(P,Q)`, `(R,S)` of finite points on a line `l`. `P = Q` and
/// `R = S` are allowed; neither `R` nor `S` may equal `P` or `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearQuad {
    line: ProjLine,
    p: ProjPoint,
    q: ProjPoint,
    r: ProjPoint,
    s: ProjPoint,
}

impl CollinearQuad {
    pub fn new(p: ProjPoint, q: ProjPoint, r: ProjPoint, s: ProjPoint) -> Result<Self> {
        if [&p, &q, &r, &s].iter().any(|x| x.is_at_infinity()) {
            return Err(GeomError::InvalidQuad("all four points must be finite"));
        }
        if r == p || r == q || s == p || s == q {
            return Err(GeomError::InvalidQuad("R and S must differ from P and Q"));
        }
        let line = join(&p, &r)?;
        if !q.lies_on(&line) || !s.lies_on(&line) {
            return Err(GeomError::InvalidQuad("points are not collinear"));
        }
        Ok(CollinearQuad { line, p, q, r, s })
    }

    pub fn line(&self) -> &ProjLine {
        &self.line
    }

    pub fn points(&self) -> [&ProjPoint; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn p(&self) -> &ProjPoint {
        &self.p
    }

    pub fn q(&self) -> &ProjPoint {
        &self.q
    }

    pub fn r(&self) -> &ProjPoint {
        &self.r
    }

    pub fn s(&self) -> &ProjPoint {
        &self.s
    }
}

/// The axis `g = <A, B>` of a configuration together with `C = g ∩ l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisResult {
    pub b: ProjPoint,
    pub g: ProjLine,
    pub c: ProjPoint,
}

/// `C = [P,Q|R,S]`: the point of `l` with `(C-Q)/(C-R) = (Q-S)/(R-P)`.
///
/// In a chart with parameters `p, q, r, s` this is `(rs - pq) / (r + s - p - q)`,
/// which is the point at infinity of `l` when the denominator vanishes. The
/// numerator and denominator cannot vanish together for a valid quad.
pub fn bracket_point(quad: &CollinearQuad) -> Result<ProjPoint> {
    let chart = LineChart::new(&quad.line)?;
    let [p, q, r, s] = quad.points().map(|x| chart.affine_param(x));
    let (p, q, r, s) = (p?, q?, r?, s?);
    let num = &r * &s - &p * &q;
    let den = &r + &s - &p - &q;
    chart.point(&num, &den)
}

/// The axis of a quad and an apex `A` off the line: `B` is the meet of the
/// parallel to `<A,R>` through `P` and the parallel to `<A,Q>` through `S`.
pub fn axis_from_outside(quad: &CollinearQuad, apex: &ProjPoint) -> Result<AxisResult> {
    if apex.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    if apex.lies_on(&quad.line) {
        return Err(GeomError::ApexOnBaseLine);
    }
    let l_p = join(apex, &quad.r)?.parallel_through(&quad.p)?;
    let l_s = join(apex, &quad.q)?.parallel_through(&quad.s)?;
    let b = meet(&l_p, &l_s)?;
    let g = join(apex, &b)?;
    let c = meet(&g, &quad.line)?;
    Ok(AxisResult { b, g, c })
}

/// The axis when the apex `A` lies on `l = <P,S>`: given lines `l_Q`, `l_R`
/// through `A`, `B` is the meet of the parallel to `l_R` through `P` and the
/// parallel to `l_Q` through `S`, and `g = <A, B>`. `B` may be at infinity
/// (when `l_Q = l_R`), in which case `g` is the line through `A` in that direction.
pub fn axis_degenerate(
    p: &ProjPoint,
    s: &ProjPoint,
    apex: &ProjPoint,
    l_q: &ProjLine,
    l_r: &ProjLine,
) -> Result<AxisResult> {
    if [p, s, apex].iter().any(|x| x.is_at_infinity()) {
        return Err(GeomError::PointAtInfinity);
    }
    if apex == p || apex == s || p == s {
        return Err(GeomError::InvalidDegenerateAxis("P, S and A must be distinct"));
    }
    let l = join(p, s)?;
    if !apex.lies_on(&l) {
        return Err(GeomError::InvalidDegenerateAxis("A must lie on <P,S>"));
    }
    if !apex.lies_on(l_q) || !apex.lies_on(l_r) {
        return Err(GeomError::InvalidDegenerateAxis("l_Q and l_R must pass through A"));
    }
    if *l_q == l || *l_r == l {
        return Err(GeomError::InvalidDegenerateAxis("l_Q and l_R must differ from <P,S>"));
    }
    let l_p = l_r.parallel_through(p)?;
    let l_s = l_q.parallel_through(s)?;
    let b = meet(&l_p, &l_s)?;
    let g = join(apex, &b)?;
    let c = meet(&g, &l)?;
    Ok(AxisResult { b, g, c })
}

/// `γ(X)` for the involution of `l` with `C = [X, γ(X) | R, S]`.
///
/// With homogeneous chart parameters `X = (x1:x0)`, `C = (c1:c0)`:
/// `γ(X) = (c1((r+s)x0 - x1) - rs c0 x0 : c1 x0 - c0 x1)`.
pub fn involution_image(
    x: &ProjPoint,
    c: &ProjPoint,
    r: &ProjPoint,
    s: &ProjPoint,
    l: &ProjLine,
) -> Result<ProjPoint> {
    if r.is_at_infinity() || s.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    if r == s {
        return Err(GeomError::InvalidQuad("R and S must be distinct"));
    }
    if c == r || c == s {
        return Err(GeomError::DegenerateInvolution);
    }
    let chart = LineChart::new(l)?;
    let (x1, x0) = chart.param(x)?;
    let (c1, c0) = chart.param(c)?;
    let r = chart.affine_param(r)?;
    let s = chart.affine_param(s)?;
    let num = &c1 * (&(&r + &s) * &x0 - &x1) - &(&r * &s) * &(&c0 * &x0);
    let den = &c1 * &x0 - &c0 * &x1;
    chart.point(&num, &den)
}
