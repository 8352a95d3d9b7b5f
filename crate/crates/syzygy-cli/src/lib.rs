//! Plumbing for the `syzygy` binary: text formats for algebras and
//! modules, command cores that return their output as strings, and the
//! acceptance-suite runner. The binary in `main.rs` is a thin argument
//! parser over this crate, and the integration tests drive the same
//! entry points.

pub mod commands;
pub mod format;
pub mod verify;
