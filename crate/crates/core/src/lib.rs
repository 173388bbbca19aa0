//! Exact lattice-theoretic, polyhedral and series computations for the
//! arrangement geometry of type IV arithmetic quotients: even lattices and
//! their transvections, short-vector enumeration, ADE root classification,
//! rational cones and fans, divisor criteria on hyperplane arrangements, and
//! the worked K3 / Enriques / triangle-singularity lattice computations.
//!
//! All lattice and cone arithmetic is exact (arbitrary-precision integers and
//! rationals); only the `series` module uses floating point, and it reports
//! explicit tail bounds.

pub mod error;
pub mod mat;

pub mod lattice;

pub mod enumeration;

pub mod roots;

pub mod cones;

pub mod divisor;

pub mod k3;

pub mod enriques;

pub mod triangle;

pub mod series;

pub mod json;

pub mod paperchecks;

pub use error::{Error, Result};
