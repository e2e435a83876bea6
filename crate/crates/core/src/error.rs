//! Error classification shared by every module.
//!
//! Each module has its own error enum; all of them map onto an
//! [`ErrorKind`] so front ends can pick a stable exit status.

/// Broad failure category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    /// Input text did not match a file format.
    Parse,
    /// Arguments or structures violate an operation's precondition.
    Precondition,
    /// A configured budget (oracle incidences, certificate digits) was exceeded.
    Resource,
    /// A computed result failed an internal or requested cross-check.
    Verification,
}

/// Implemented by every error type in the crate.
pub trait Classify {
    fn kind(&self) -> ErrorKind;
}
