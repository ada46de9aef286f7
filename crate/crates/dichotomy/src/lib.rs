//! File formats, rendering, parallel solving and reproduction checks for the
//! `dichotomy` command-line tool.

pub mod formats;
pub mod parallel;
pub mod repro;
pub mod svg;
