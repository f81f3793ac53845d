//! File formats, the command line and a threaded solver driver on top of
//! [`maxedge_core`].

pub mod cli;
pub mod format;
pub mod parallel;

pub use maxedge_core as core;
