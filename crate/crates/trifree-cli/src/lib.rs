//! File formats, certificates, the decomposition sweep and the command
//! implementations behind the `trifree` binary.

pub mod certificate;
pub mod commands;
pub mod graph6;
pub mod sweep;
