//! Command-line front end for `conley-core`: reads JSON system files and
//! prints Conley index, Jordan, zeta and Morse reports.

pub mod commands;
pub mod error;
pub mod report;
pub mod system_file;

pub use commands::{build_report, run, run_spec, Command, Options, RunOutput};
pub use error::{CliError, EXIT_INTERNAL, EXIT_USER};
pub use report::{Format, Report};
pub use system_file::{parse_system, parse_system_str, parse_system_value, system_to_json};
