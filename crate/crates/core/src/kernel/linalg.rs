//! Small dense linear algebra over [`Scalar`]: rank, determinant, 3x3 matrices.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::kernel::plane::ProjPoint;
use crate::kernel::scalar::{Field, Scalar};

/// Row-echelon form by Gaussian elimination; returns the rank.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..ncols {
                let delta = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &delta;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant of a square matrix by elimination.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "square matrix required");
    let field = rows[0][0].field();
    let mut m = rows.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].inv().expect("nonzero pivot");
        for i in (col + 1)..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..n {
                let delta = &factor * &m[col][j];
                m[i][j] = &m[i][j] - &delta;
            }
        }
    }
    det
}

pub fn det3(a: &[Scalar; 3], b: &[Scalar; 3], c: &[Scalar; 3]) -> Scalar {
    let minor = |p: &Scalar, q: &Scalar, r: &Scalar, s: &Scalar| p * s - q * r;
    &a[0] * minor(&b[1], &b[2], &c[1], &c[2]) - &a[1] * minor(&b[0], &b[2], &c[0], &c[2])
        + &a[2] * minor(&b[0], &b[1], &c[0], &c[1])
}

pub fn cross(a: &[Scalar; 3], b: &[Scalar; 3]) -> [Scalar; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// A 3x3 matrix acting on homogeneous column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix3 {
    m: [[Scalar; 3]; 3],
}

impl Matrix3 {
    pub fn new(m: [[Scalar; 3]; 3]) -> Self {
        Matrix3 { m }
    }

    pub fn identity(field: Field) -> Self {
        Self::diagonal(field.one(), field.one(), field.one())
    }

    pub fn diagonal(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let z = a.field().zero();
        Matrix3 {
            m: [[a, z.clone(), z.clone()], [z.clone(), b, z.clone()], [z.clone(), z, c]],
        }
    }

    pub fn from_columns(c0: &[Scalar; 3], c1: &[Scalar; 3], c2: &[Scalar; 3]) -> Self {
        let m = std::array::from_fn(|i| [c0[i].clone(), c1[i].clone(), c2[i].clone()]);
        Matrix3 { m }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.m[i][j]
    }

    pub fn rows(&self) -> &[[Scalar; 3]; 3] {
        &self.m
    }

    pub fn field(&self) -> Field {
        self.m[0][0].field()
    }

    pub fn determinant(&self) -> Scalar {
        det3(&self.m[0], &self.m[1], &self.m[2])
    }

    pub fn mul(&self, other: &Matrix3) -> Matrix3 {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(self.field().zero(), |acc, k| acc + &self.m[i][k] * &other.m[k][j])
            })
        });
        Matrix3 { m }
    }

    pub fn apply(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        std::array::from_fn(|i| dot(&self.m[i], v))
    }

    /// Image of a point; fails when the point is in the kernel of a singular matrix.
    pub fn map_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let [x, y, z] = self.apply(p.coords());
        ProjPoint::new(x, y, z)
    }

    pub fn adjugate(&self) -> Matrix3 {
        let m = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        // adj[i][j] = cofactor(j, i)
        Matrix3 {
            m: [
                [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
                [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
                [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
            ],
        }
    }

    pub fn inverse(&self) -> Result<Matrix3> {
        let det = self.determinant();
        let inv = det.inv().ok_or(GeomError::NotInGeneralPosition)?;
        let adj = self.adjugate();
        Ok(Matrix3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &adj.m[i][j] * &inv)),
        })
    }

    /// True when the matrix is `c * I` for some nonzero `c`.
    pub fn is_scalar_identity(&self) -> bool {
        let c = &self.m[0][0];
        !c.is_zero()
            && (0..3).all(|i| (0..3).all(|j| if i == j { &self.m[i][j] == c } else { self.m[i][j].is_zero() }))
    }

    /// Equality up to a nonzero global scale.
    pub fn projectively_equal(&self, other: &Matrix3) -> bool {
        let a: Vec<&Scalar> = self.m.iter().flatten().collect();
        let b: Vec<&Scalar> = other.m.iter().flatten().collect();
        let Some(k) = a.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        if b[k].is_zero() {
            return false;
        }
        // a = lambda * b with lambda = a[k] / b[k]
        a.iter().zip(&b).all(|(x, y)| *x * b[k] == *y * a[k])
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}
