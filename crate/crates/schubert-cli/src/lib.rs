//! Library surface of the CLI: the output DTOs, exposed so integration
//! tests can parse and round-trip the emitted JSON.

pub mod render;
