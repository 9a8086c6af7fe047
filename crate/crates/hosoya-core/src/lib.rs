//! Exact-arithmetic toolkit for generalized Fibonacci polynomial (GFP)
//! sequences and the triangular arrays built from them.
//!
//! A GFP sequence is defined over `Z[x]` by
//!
//! ```text
//! G_0 = p_0,  G_1 = p_1,  G_n = d(x) G_{n-1} + g(x) G_{n-2}
//! ```
//!
//! with `p_0` constant, `p_1`, `d`, `g` nonzero, and `gcd(d, g) = 1`.
//! Fibonacci, Lucas, Pell, Fermat, Chebyshev, Jacobsthal, Morgan-Voyce and
//! Vieta polynomials are all instances; [`gfp::Family`] catalogs the fourteen
//! classical ones.
//!
//! Multiplying pairs of terms produces the Hosoya polynomial triangle
//! (`H(r,k) = G_k G_{r-k}`, see [`triangle`]), which carries a surprising
//! amount of structure: star-of-David GCD identities ([`star`]), gibonomial
//! coefficients ([`gibonomial`]), and determinant/sum identities such as
//! Cassini, Catalan and Johnson ([`identities`]). Every one of those results
//! is implemented here as a machine-checkable verifier returning a
//! [`report::VerificationReport`], and all arithmetic is exact: the only
//! number types are arbitrary-precision integers and dense integer
//! polynomials ([`poly::IntPolynomial`]).
//!
//! [`numeric`] evaluates triangles at integer points for OEIS-style exports.

pub mod gfp;
pub mod gibonomial;
pub mod identities;
pub mod numeric;
pub mod poly;
pub mod report;
pub mod star;
pub mod triangle;

pub use gfp::{Family, GfpClassification, GfpError, GfpKind, GfpSequence, GfpSpec};
pub use poly::{IntPolynomial, PolyError};
pub use report::{Outcome, VerificationReport};
pub use star::{Orientation, StarConfig, StarError, StarReport};
pub use triangle::{HosoyaTriangle, TriangleError, TrianglePoint};
