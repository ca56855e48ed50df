//! Certified piecewise-linear models of real projective varieties.
//!
//! Given a system of homogeneous polynomials with rational coefficients —
//! one equation for a curve or hypersurface, several for a complete
//! intersection — this crate computes a piecewise-linear complex on the unit
//! sphere, symmetric under the antipodal map, together with a machine-checkable
//! proof that the complex faithfully models the zero set. For a single
//! equation the guarantee is an ambient isotopy between the complex and the
//! variety; for systems it is the same convex-position condition applied to
//! every sign combination of the equations.
//!
//! The pipeline has three independent stages:
//!
//! 1. **Search** ([`solve`]): starting from the fan of coordinate orthants,
//!    linearly interpolate the system at the rays and test every face of the
//!    fan with two Bernstein-coefficient criteria — a uniform sign on the
//!    region where the system and its interpolant can disagree in sign, or a
//!    direction separating all relevant gradients from the origin. Faces that
//!    resist are subdivided; if a face resists at full split depth, the fan
//!    edge behind it is refined and only the invalidated faces are retested.
//! 2. **Certification** ([`verify`](mod@verify)): the search emits a
//!    certificate file recording the fan, the interpolant values, and one
//!    split tree per face whose leaves carry the sign claims and separating
//!    directions. [`check_certificate`] replays every leaf in exact integer
//!    arithmetic — floating point appears only in the search, never in the
//!    proof.
//! 3. **Topology** ([`topo`]): the interpolant's zero set is itself a cell
//!    complex with rational vertices; it is extracted exactly, glued across
//!    cones, folded through the antipodal quotient, and summarized by
//!    connected components and Z/2 Betti numbers with an Euler cross-check.
//!
//! # Example
//!
//! ```
//! use isoplex::{analyze, build_complex, parse_system, solve, SolveParams, SolveStatus};
//!
//! // a conic: one projective circle
//! let sys = parse_system("x0^2 + x1^2 - x2^2\n").unwrap();
//! let res = solve(&sys, &SolveParams::default());
//! assert!(matches!(res.status, SolveStatus::Certified));
//!
//! // the certificate survives exact replay
//! let text = isoplex::format_certificate(&sys, &res);
//! let cert = isoplex::parse_certificate(&text).unwrap();
//! isoplex::check_certificate(&sys, &cert, 0).unwrap();
//!
//! // and the modelled curve is a single circle in the projective plane
//! let complex = build_complex(&res.decomp, res.tilde.exact_rows());
//! let report = analyze(&complex);
//! assert_eq!(report.components, 1);
//! assert_eq!(report.betti, vec![1, 1]);
//! ```
//!
//! Input systems use one polynomial per line; terms are signed products of
//! rational constants and powers like `x0^2`, so the conic above reads
//! `x0^2 + x1^2 - x2^2`. A term with coefficient zero still widens the
//! ambient space: `x0 + 0 x2` is a line in the projective plane rather than
//! a point on the line.

pub mod arith;
pub mod bernstein;
pub mod criterion;
pub mod driver;
pub mod mindex;
pub mod minnorm;
pub mod parse;
pub mod poly;
pub mod simplex;
pub mod topo;
pub mod verify;

pub use criterion::Guards;
pub use driver::{
    guarantee_statement, solve, FaceCert, SolveParams, SolveResult, SolveStats, SolveStatus,
};
pub use parse::{parse_system, ParseError};
pub use poly::{HomogeneousPoly, PolySystem, SystemError};
pub use simplex::Decomposition;
pub use topo::{analyze, build_complex, export_off, Complex, TopologyReport};
pub use verify::{
    check_certificate, format_certificate, parse_certificate, CertError, CertificateFile,
    CheckReport,
};

/// The guide's chapters, compiled as doc-tests so every snippet in the book
/// is checked against the current API on `cargo test`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/criterion.md")]
    mod criterion {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/topology.md")]
    mod topology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
