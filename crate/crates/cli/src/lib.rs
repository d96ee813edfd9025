//! Library side of the `cutreal` command: instance generators, the law
//! runner behind `oracle`, and the file-based commands.

pub mod commands;
pub mod gen;
pub mod laws;
pub mod oracle;
