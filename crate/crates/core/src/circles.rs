//! Circles `x² + y² + Dxz + Eyz + Fz² = 0` over any field of characteristic
//! other than 2: circles through three points, tangent circles, power of a
//! point and radical axes.

use crate::error::{GeomError, Result};
use crate::kernel::{Field, Matrix3, ProjLine, ProjPoint, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circle {
    pub d: Scalar,
    pub e: Scalar,
    pub f: Scalar,
}

impl Circle {
    pub fn new(d: Scalar, e: Scalar, f: Scalar) -> Self {
        Circle { d, e, f }
    }

    pub fn field(&self) -> Field {
        self.d.field()
    }

    /// `(-D/2, -E/2)`.
    pub fn center(&self) -> (Scalar, Scalar) {
        let half = self.field().ratio(-1, 2).expect("characteristic is not 2");
        (&self.d * &half, &self.e * &half)
    }

    /// `D²/4 + E²/4 - F`, the squared radius.
    pub fn radius_squared(&self) -> Scalar {
        let (cx, cy) = self.center();
        cx.square() + cy.square() - &self.f
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let [x, y, z] = p.coords();
        (x.square() + y.square() + &self.d * &(x * z) + &self.e * &(y * z) + &self.f * &z.square()).is_zero()
    }
}

fn solve3(rows: [[Scalar; 3]; 3], rhs: [Scalar; 3]) -> Option<[Scalar; 3]> {
    let m = Matrix3::new(rows);
    let inv = m.inverse().ok()?;
    Some(inv.apply(&rhs))
}

/// The circle through three non-collinear finite points.
pub fn circle_through(p1: &ProjPoint, p2: &ProjPoint, p3: &ProjPoint) -> Result<Circle> {
    let pts = [p1.require_affine()?, p2.require_affine()?, p3.require_affine()?];
    let one = p1.field().one();
    let rows = pts
        .clone()
        .map(|(x, y)| [x, y, one.clone()]);
    let rhs = pts.map(|(x, y)| -(x.square() + y.square()));
    let [d, e, f] = solve3(rows, rhs).ok_or(GeomError::DegenerateCircle)?;
    Ok(Circle { d, e, f })
}

/// The circle through `p` that touches `l` at `a`: `a` on the circle and the
/// derivative of the restriction to `l` vanishing at `a`.
pub fn circle_tangent(p: &ProjPoint, a: &ProjPoint, l: &ProjLine) -> Result<Circle> {
    if !a.lies_on(l) {
        return Err(GeomError::NotOnLine);
    }
    if p.lies_on(l) {
        return Err(GeomError::DegenerateCircle);
    }
    let (px, py) = p.require_affine()?;
    let (ax, ay) = a.require_affine()?;
    let field = p.field();
    let (one, zero, two) = (field.one(), field.zero(), field.int(2));
    let [u, v, _] = l.coeffs();
    let (dx, dy) = (v.clone(), -u);
    let rows = [
        [ax.clone(), ay.clone(), one.clone()],
        [dx.clone(), dy.clone(), zero],
        [px.clone(), py.clone(), one],
    ];
    let rhs = [
        -(ax.square() + ay.square()),
        -(&two * &(&ax * &dx + &ay * &dy)),
        -(px.square() + py.square()),
    ];
    let [d, e, f] = solve3(rows, rhs).ok_or(GeomError::DegenerateCircle)?;
    Ok(Circle { d, e, f })
}

/// `x² + y² + Dx + Ey + F` at the dehomogenized point.
pub fn power_of(x: &ProjPoint, c: &Circle) -> Result<Scalar> {
    let (px, py) = x.require_affine()?;
    Ok(px.square() + py.square() + &c.d * &px + &c.e * &py + &c.f)
}

/// The line `(D1-D2)x + (E1-E2)y + (F1-F2)z = 0` of equal power.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<ProjLine> {
    let (du, dv, dw) = (&c1.d - &c2.d, &c1.e - &c2.e, &c1.f - &c2.f);
    if du.is_zero() && dv.is_zero() {
        return Err(if dw.is_zero() {
            GeomError::IdenticalCircles
        } else {
            GeomError::NoFiniteRadicalAxis
        });
    }
    ProjLine::new(du, dv, dw)
}
