use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The problem failed Hypothesis-style validation; downstream operations
    /// refuse to run on it.
    InvalidProblem(String),
    /// A feature outside the supported coefficient/boundary class was
    /// requested (e.g. a limit-circle non-regular endpoint).
    Unsupported(String),
    /// Zero is an eigenvalue of the requested self-adjoint realization.
    ZeroEigenvalue,
    /// The spectral parameter hit (or is numerically indistinguishable
    /// from) an eigenvalue where the requested formula degenerates.
    AtEigenvalue,
    /// z = 0 was passed to an operation that excludes it.
    ZExcluded,
    /// theta_z has a pole at z = 0 and cannot be evaluated there.
    ZEqualsZero,
    /// Eigenvalue search over a non-atomic weight needs an explicit window.
    WindowRequired,
    /// Evaluation was requested beyond a non-regular endpoint.
    UnreachablePoint(f64),
    /// No H^1-near-endpoint solution of tau u = 0 is constructible within
    /// the supported class at this endpoint.
    NoGroundSolution(String),
    /// sigma + chi is not finite near the endpoint, so the boundary
    /// evaluation element does not exist.
    EndpointNotFinite,
    /// The element is not square integrable in the H^1 sense.
    NotIntegrable(String),
    /// The operation requires a compactly supported element vanishing near b.
    NotCompactlySupported,
    /// The operation requires a purely atomic weight measure.
    NotAtomic,
    /// The operation requires complete (exhaustive) spectral data.
    IncompleteSpectralData,
    /// The point is not admissible for the requested kernel operation.
    InvalidPoint(f64),
    /// The Liouville map leaves the representable coefficient class.
    UnrepresentableTransform(String),
    /// The inverse reconstruction did not converge; carries best residual.
    NoConvergence(f64),
    /// Two quantities from different problems or gauges were mixed.
    Mismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidProblem(why) => write!(f, "invalid problem: {why}"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::ZeroEigenvalue => write!(f, "zero is an eigenvalue of the realization"),
            Error::AtEigenvalue => write!(f, "spectral parameter is at an eigenvalue"),
            Error::ZExcluded => write!(f, "z = 0 is excluded here"),
            Error::ZEqualsZero => write!(f, "theta_z has a pole at z = 0"),
            Error::WindowRequired => {
                write!(f, "eigenvalue window required for non-atomic weight")
            }
            Error::UnreachablePoint(x) => write!(f, "point {x} is beyond a non-regular endpoint"),
            Error::NoGroundSolution(why) => write!(f, "no ground solution: {why}"),
            Error::EndpointNotFinite => write!(f, "sigma + chi is infinite near this endpoint"),
            Error::NotIntegrable(why) => write!(f, "element is not in H^1: {why}"),
            Error::NotCompactlySupported => write!(f, "element must vanish near b"),
            Error::NotAtomic => write!(f, "operation requires a purely atomic weight"),
            Error::IncompleteSpectralData => write!(f, "spectral data is not complete"),
            Error::InvalidPoint(x) => write!(f, "point {x} is not admissible"),
            Error::UnrepresentableTransform(why) => {
                write!(f, "transform leaves the representable class: {why}")
            }
            Error::NoConvergence(residual) => {
                write!(f, "reconstruction did not converge (best residual {residual:e})")
            }
            Error::Mismatch(why) => write!(f, "mismatched inputs: {why}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
