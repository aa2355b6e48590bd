//! Command-line front end for `newton-atlas-core`: function specifications,
//! JSON reports and PPM basin images.

pub mod commands;
pub mod ppm;
pub mod report;
pub mod spec;

pub use commands::{CliError, CliResult, RenderOptions};
pub use spec::{FunctionSpec, ParseError};
