//! Problem files, reports and the command line driver for `nashindex-core`.

pub mod problem;
pub mod run;

pub use problem::{parse_problem, parse_problem_file, ParseError, ProblemFile};
pub use run::{run, Command, Flags, IndexJson, RunError};
