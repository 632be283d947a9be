//! Command-line front end for `multibrot-core`: theorem drivers, capacity
//! queries and an escape-time renderer.

pub mod render;
