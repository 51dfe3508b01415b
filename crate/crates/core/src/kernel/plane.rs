//! Points and lines of the projective plane over a [`Field`], with the affine
//! plane embedded as `z != 0` and `z = 0` the line at infinity.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::kernel::linalg::{cross, dot};
use crate::kernel::scalar::{canonicalize, Field, Scalar};

fn canonical_triple(x: Scalar, y: Scalar, z: Scalar) -> Result<[Scalar; 3]> {
    let f = x.field();
    if y.field() != f || z.field() != f {
        return Err(GeomError::FieldMismatch);
    }
    let c = canonicalize(&[x, y, z]).ok_or(GeomError::ZeroTriple)?;
    let [a, b, c]: [Scalar; 3] = c.try_into().expect("three coordinates");
    Ok([a, b, c])
}

/// A point `(x:y:z)` stored in canonical form, so derived equality and hashing
/// agree with projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [Scalar; 3],
}

impl ProjPoint {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<Self> {
        Ok(ProjPoint {
            coords: canonical_triple(x, y, z)?,
        })
    }

    pub fn from_array(c: [Scalar; 3]) -> Result<Self> {
        let [x, y, z] = c;
        Self::new(x, y, z)
    }

    /// The affine point `(x, y)`.
    pub fn affine(x: Scalar, y: Scalar) -> Self {
        let one = x.field().one();
        Self::new(x, y, one).expect("z = 1 is nonzero")
    }

    pub fn from_ints(field: Field, x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(field.int(x), field.int(y), field.int(z))
    }

    pub fn affine_ints(field: Field, x: i64, y: i64) -> Self {
        Self::affine(field.int(x), field.int(y))
    }

    /// Affine point with rational coordinates `xn/xd, yn/yd`.
    pub fn affine_ratio(field: Field, (xn, xd): (i64, i64), (yn, yd): (i64, i64)) -> Result<Self> {
        Ok(Self::affine(field.ratio(xn, xd)?, field.ratio(yn, yd)?))
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn x(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn y(&self) -> &Scalar {
        &self.coords[1]
    }

    pub fn z(&self) -> &Scalar {
        &self.coords[2]
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn is_finite(&self) -> bool {
        !self.coords[2].is_zero()
    }

    pub fn is_at_infinity(&self) -> bool {
        !self.is_finite()
    }

    /// Dehomogenized coordinates, `None` at infinity.
    pub fn to_affine(&self) -> Option<(Scalar, Scalar)> {
        let inv = self.coords[2].inv()?;
        Some((&self.coords[0] * &inv, &self.coords[1] * &inv))
    }

    pub fn require_affine(&self) -> Result<(Scalar, Scalar)> {
        self.to_affine().ok_or(GeomError::PointAtInfinity)
    }

    pub fn lies_on(&self, l: &ProjLine) -> bool {
        dot(&self.coords, &l.coeffs).is_zero()
    }

    /// Affine combination `(1 - t) * self + t * other` of two finite points.
    pub fn lerp(&self, other: &ProjPoint, t: &Scalar) -> Result<ProjPoint> {
        let (ax, ay) = self.require_affine()?;
        let (bx, by) = other.require_affine()?;
        let s = &t.field().one() - t;
        Ok(ProjPoint::affine(&s * &ax + t * &bx, &s * &ay + t * &by))
    }

    /// The finite point `self + (dx, dy)`.
    pub fn translate(&self, dx: &Scalar, dy: &Scalar) -> Result<ProjPoint> {
        let (x, y) = self.require_affine()?;
        Ok(ProjPoint::affine(x + dx, y + dy))
    }

    /// Image under the reduction of integer coordinates into another field.
    pub fn reduce_to(&self, field: Field) -> Result<ProjPoint> {
        let c: Vec<Scalar> = self
            .coords
            .iter()
            .map(|s| match s.as_rational() {
                Some(q) => field.from_rational(q),
                None if s.field() == field => Ok(s.clone()),
                None => Err(GeomError::FieldMismatch),
            })
            .collect::<Result<_>>()?;
        let [x, y, z]: [Scalar; 3] = c.try_into().expect("three coordinates");
        ProjPoint::new(x, y, z)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "({x}:{y}:{z})")
    }
}

/// A line `ux + vy + wz = 0`, canonical like [`ProjPoint`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjLine {
    coeffs: [Scalar; 3],
}

impl ProjLine {
    pub fn new(u: Scalar, v: Scalar, w: Scalar) -> Result<Self> {
        Ok(ProjLine {
            coeffs: canonical_triple(u, v, w)?,
        })
    }

    pub fn from_array(c: [Scalar; 3]) -> Result<Self> {
        let [u, v, w] = c;
        Self::new(u, v, w)
    }

    pub fn from_ints(field: Field, u: i64, v: i64, w: i64) -> Result<Self> {
        Self::new(field.int(u), field.int(v), field.int(w))
    }

    pub fn at_infinity(field: Field) -> Self {
        Self::new(field.zero(), field.zero(), field.one()).expect("nonzero")
    }

    pub fn coeffs(&self) -> &[Scalar; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[1].is_zero()
    }

    /// The point at infinity of this line (its direction).
    pub fn point_at_infinity(&self) -> Result<ProjPoint> {
        if self.is_at_infinity() {
            return Err(GeomError::LineAtInfinity);
        }
        let [u, v, _] = &self.coeffs;
        ProjPoint::new(v.clone(), -u, u.field().zero())
    }

    /// The line through `p` parallel to `self`.
    pub fn parallel_through(&self, p: &ProjPoint) -> Result<ProjLine> {
        if p.is_at_infinity() {
            return Err(GeomError::PointAtInfinity);
        }
        join(p, &self.point_at_infinity()?)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.lies_on(self)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, w] = &self.coeffs;
        write!(f, "[{u}:{v}:{w}]")
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    ProjLine::from_array(cross(p.coords(), q.coords())).map_err(|e| match e {
        GeomError::ZeroTriple => GeomError::CoincidentPoints,
        e => e,
    })
}

/// The intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    ProjPoint::from_array(cross(l.coeffs(), m.coeffs())).map_err(|e| match e {
        GeomError::ZeroTriple => GeomError::CoincidentLines,
        e => e,
    })
}

/// Whether two lines other than the line at infinity meet at infinity. Equal
/// lines count as parallel.
pub fn is_parallel(l: &ProjLine, m: &ProjLine) -> Result<bool> {
    if l.is_at_infinity() || m.is_at_infinity() {
        return Err(GeomError::LineAtInfinity);
    }
    let [u1, v1, _] = l.coeffs();
    let [u2, v2, _] = m.coeffs();
    Ok((u1 * v2 - u2 * v1).is_zero())
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    crate::kernel::linalg::det3(p.coords(), q.coords(), r.coords()).is_zero()
}
