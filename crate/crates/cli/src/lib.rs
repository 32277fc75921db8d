//! Batch driver for multigraded Proj computations.
//!
//! A problem file names a graded ring, families of homogeneous elements and
//! a list of requests; the driver answers with a single JSON document.

pub mod problem;
pub mod run;

pub use problem::{load, parse_spec, validate, InputFormat, Problem, ProblemSpec, Request, SpecError};
pub use run::{render_text, run, Options, Status, FORMAT_VERSION};
