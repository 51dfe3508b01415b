//! Command-line front end: configuration files, verification reports and SVG
//! output.

pub mod app;
pub mod file;
pub mod render;

pub use app::{run, verify_file, ReportEntry, Theorem, EXIT_BUDGET, EXIT_FAIL, EXIT_INVALID, EXIT_PASS};
pub use file::{parse, parse_many, serialize, ConfigFile, FieldSpec, Metadata};
pub use render::{auto_viewbox, render_svg, Palette, RenderOptions, ViewBox};
