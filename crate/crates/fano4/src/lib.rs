//! Search and certification engine for isolated terminal Fano 4-folds of
//! index 1 realized in low-codimension Gorenstein formats (weighted complete
//! intersections, Pfaffian Gr(2,5) pullbacks, Segre P^2 x P^2 pullbacks).
//!
//! The crate is organized around a small exact-arithmetic kernel:
//!
//! - [`series`]: integer polynomials, truncated power series and Hilbert
//!   series in numerator / (1 - t^e) product form;
//! - [`orbifold`]: cyclic quotient singularities 1/r(a1..a4), the Reid--Tai
//!   terminality test and basket algebra;
//! - [`formats`]: the three Gorenstein format families, their weight data,
//!   equation degrees, socle degrees and regular-pullback validation;
//! - [`hilbert`]: Hilbert series and anticanonical plurigenera of a family;
//! - [`cas`]: sparse multivariate polynomials over a prime field, Groebner
//!   bases, zero-dimensional quotient rings and equivariant Jacobian ranks;
//! - [`basket`]: the basket of quotient singularities of a general member,
//!   computed by intersecting with every singular toric stratum;
//! - [`qs`]: quasismoothness certification;
//! - [`census`]: the search pipeline, record persistence and report tables.

pub mod basket;
pub mod cas;
pub mod census;
pub mod formats;
pub mod hilbert;
pub mod orbifold;
pub mod qs;
pub mod series;
