//! Front end for the `intbasis` command: argument languages, job execution
//! and report formats. Kept as a library so fuzz targets can reach the
//! parsers.

pub mod args;
pub mod report;
pub mod run;

pub use args::{parse_factor_arg, parse_ideal_args, parse_ring, RingSpec};
pub use report::decode_report;
pub use run::{run, Command, Format, Job};
