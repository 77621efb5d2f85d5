//! Report layer over the `qprimes` library: table reproductions with delta
//! columns, figure data as CSV/JSON, and the check commands.

pub mod commands;
pub mod reference;
pub mod report;

pub use commands::{Engine, FigureId, ReportOptions, TableId};
pub use report::{OutputFormat, Report};
