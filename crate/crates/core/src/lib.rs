//! Direct and inverse spectral theory for left-definite Sturm-Liouville
//! problems with measure coefficients.
//!
//! The differential expression is
//!
//! ```text
//! tau f = d/d4 ( -df/dC + Int f dG )
//! ```
//!
//! for a real weight measure `rho`, a positive everywhere-supported measure
//! `sigma` with no atoms and a positive measure `chi` on an interval (a,b).
//! The natural Hilbert space is the modified Sobolev space H^1(a,b) with
//! inner product `Int f g* dchi + Int f' g'* dsigma`, so the weight `rho`
//! may change sign (left-definite setting).
//!
//! Coefficients are restricted to a computable class: piecewise power-law
//! densities plus finitely many atoms. Within that class the crate computes
//!
//! * solutions of `(tau - z)f = g` through density segments and atom jumps
//!   ([`propagate`]),
//! * the ground solutions `w_a`, `w_b` of `tau u = 0` and the reproducing
//!   elements of H^1 ([`sobolev`]),
//! * self-adjoint realizations with separated boundary conditions and their
//!   Green function ([`operator`]),
//! * the entire solution family `phi_z`, the singular Weyl-Titchmarsh
//!   function, eigenvalues and spectral measure ([`spectrum`]),
//! * de Branges functions, reproducing kernels and the finite-dimensional
//!   ordering/embedding machinery ([`debranges`]),
//! * Liouville transforms and the Camassa-Holm peakon roundtrip
//!   ([`inverse`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `leftdef-cli` crate.

#![no_std]

extern crate alloc;

pub mod coeffs;
pub mod debranges;
mod error;
pub mod inverse;
pub mod linalg;
mod mesh;
pub mod operator;
pub mod poly;
pub mod propagate;
pub mod quad;
pub mod roots;
pub mod sobolev;
pub mod spectrum;

pub use coeffs::{
    Atom, BoundaryCondition, CheckedProblem, EndpointClass, Interval, MeasureCoeff, Problem,
    Segment, Side, SigmaSet, ValidationReport,
};
pub use error::{Error, Result};
pub use spectrum::{EigenPair, GaugeRecord, SpectralData};

pub(crate) type C64 = num_complex::Complex64;
