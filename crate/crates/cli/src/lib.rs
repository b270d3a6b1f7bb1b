//! Command-line front end, graph6 reader and report formats for
//! `cage-spectra`.

pub mod cli;
pub mod graph6;
pub mod report;

pub use cli::run;
pub use graph6::{parse_graph6, parse_graph6_file, Graph6Error};
