//! Pencil classification of line families and projectivity fitting.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::kernel::linalg::{cross, det3, rank, Matrix3};
use crate::kernel::plane::{ProjLine, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PencilKind {
    /// All lines pass through a common finite point.
    FiniteCenter,
    /// All lines are parallel.
    InfiniteCenter,
    /// The coefficient matrix has rank 3.
    NotAPencil,
    /// All lines are equal, so the center is not determined.
    Degenerate,
}

impl PencilKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PencilKind::FiniteCenter => "finite-center",
            PencilKind::InfiniteCenter => "infinite-center",
            PencilKind::NotAPencil => "not-a-pencil",
            PencilKind::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilResult {
    pub kind: PencilKind,
    pub center: Option<ProjPoint>,
}

impl PencilResult {
    /// Concurrent, parallel, or all equal.
    pub fn is_pencil(&self) -> bool {
        self.kind != PencilKind::NotAPencil
    }

    pub fn has_center(&self) -> bool {
        self.center.is_some()
    }
}

impl fmt::Display for PencilResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.center {
            Some(c) => write!(f, "{} {c}", self.kind.as_str()),
            None => write!(f, "{}", self.kind.as_str()),
        }
    }
}

/// Classifies lines by the rank of their coefficient matrix: rank 1 is
/// degenerate, rank 2 is a pencil whose center spans the null space, rank 3
/// is not a pencil.
pub fn pencil_of(lines: &[ProjLine]) -> Result<PencilResult> {
    if lines.len() < 2 {
        return Err(GeomError::InvalidArgument("a pencil needs at least two lines".into()));
    }
    if lines.iter().any(ProjLine::is_at_infinity) {
        return Err(GeomError::LineAtInfinity);
    }
    let rows: Vec<Vec<_>> = lines.iter().map(|l| l.coeffs().to_vec()).collect();
    Ok(match rank(&rows) {
        1 => PencilResult {
            kind: PencilKind::Degenerate,
            center: None,
        },
        2 => {
            let first = &lines[0];
            let other = lines.iter().find(|l| *l != first).expect("rank 2 has two distinct lines");
            let center = ProjPoint::from_array(cross(first.coeffs(), other.coeffs()))?;
            let kind = if center.is_finite() {
                PencilKind::FiniteCenter
            } else {
                PencilKind::InfiniteCenter
            };
            PencilResult {
                kind,
                center: Some(center),
            }
        }
        _ => PencilResult {
            kind: PencilKind::NotAPencil,
            center: None,
        },
    })
}

fn frame_matrix(frame: &[ProjPoint; 4]) -> Result<Matrix3> {
    let [a, b, c, d] = frame;
    let (a, b, c, d) = (a.coords(), b.coords(), c.coords(), d.coords());
    let basis = Matrix3::from_columns(a, b, c);
    // Solve basis * lambda = d; every lambda_i must be nonzero (no three collinear).
    let lambda = basis.inverse()?.apply(d);
    if lambda.iter().any(|s| s.is_zero()) {
        return Err(GeomError::NotInGeneralPosition);
    }
    let scale = |v: &[_; 3], s: &crate::kernel::scalar::Scalar| std::array::from_fn(|i| &v[i] * s);
    Ok(Matrix3::from_columns(
        &scale(a, &lambda[0]),
        &scale(b, &lambda[1]),
        &scale(c, &lambda[2]),
    ))
}

/// The projectivity sending `src[i]` to `dst[i]`, unique up to scale.
pub fn fit_projectivity(src: &[ProjPoint; 4], dst: &[ProjPoint; 4]) -> Result<Matrix3> {
    let s = frame_matrix(src)?;
    let t = frame_matrix(dst)?;
    Ok(t.mul(&s.inverse()?))
}

/// No three of the given points are collinear.
pub fn in_general_position(points: &[ProjPoint]) -> bool {
    let n = points.len();
    (0..n).all(|i| {
        ((i + 1)..n).all(|j| {
            ((j + 1)..n).all(|k| !det3(points[i].coords(), points[j].coords(), points[k].coords()).is_zero())
        })
    })
}
