//! Exact projective and affine geometry for the radical-axis theorems on
//! n-gons: axis points, involutions, radical axes, pencil checks, vertex
//! surgery and configuration samplers, over the rationals and prime fields.

pub mod axis;
pub mod circles;
pub mod cli;
pub mod config;
pub mod error;
pub mod genmove;
pub mod kernel;
pub mod theorems;

pub use config::{derive, validate, DerivedData, NgonConfig};
pub use error::{GeomError, Result, Violation};
pub use kernel::{Field, ProjLine, ProjPoint, Scalar};
