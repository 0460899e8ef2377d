//! Exact bookkeeping for components of the moduli space `M(k)` of
//! semistable rank-2 sheaves on P³ with `c1 = 0, c2 = k, c3 = 0` obtained by
//! elementary transformations of reflexive sheaves along a curve and points.
//!
//! Module map:
//!
//! * [`exactpoly`]: rationals and numerical polynomials of degree ≤ 3.
//! * [`p3rr`]: Riemann-Roch on P³ for rank-2, `c1 = 0` sheaves.
//! * [`curvecoh`]: rational curves and complete intersections.
//! * [`families`]: the reflexive families `S_{a,b,c}` and `V_m`.
//! * [`transform`]: the descriptor `(R, H1, s)` and its report.
//! * [`atlas`]: enumeration and verification for a fixed `k`.
//! * [`audit`]: module-level identity suites.
//!
//! ```
//! use sheaf_atlas::atlas::{enumerate_components, EnumerationOptions};
//!
//! let atlas = enumerate_components(&EnumerationOptions::new(3)?)?;
//! assert_eq!(atlas.reports.len(), 1);
//! assert_eq!(atlas.reports[0].dim_component, 22);
//! # Ok::<(), sheaf_atlas::Error>(())
//! ```

pub mod atlas;
pub mod audit;
pub mod curvecoh;
mod error;
pub mod exactpoly;
pub mod families;
pub mod p3rr;
pub mod transform;

pub use error::{Error, Result};
pub use exactpoly::{HilbertPolynomial, Rational};
