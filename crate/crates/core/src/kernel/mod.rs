//! Exact scalars and the projective plane: points, lines, incidence, pencils
//! and projectivities.

pub mod linalg;
pub mod pencil;
pub mod plane;
pub mod scalar;

pub use linalg::{det3, determinant, rank, Matrix3};
pub use pencil::{fit_projectivity, in_general_position, pencil_of, PencilKind, PencilResult};
pub use plane::{collinear, is_parallel, join, meet, ProjLine, ProjPoint};
pub use scalar::{Field, Fp, Scalar};
