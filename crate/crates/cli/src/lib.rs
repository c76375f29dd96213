//! Library surface of the `residua` command-line tool: problem-file parsing,
//! command implementations, and error classification.

pub mod commands;
pub mod error;
pub mod problem;

pub use commands::{run_check, run_residuate, run_solve_eq};
pub use error::CliError;
pub use problem::{parse_problem, problem_to_value, Problem, ProblemData};
