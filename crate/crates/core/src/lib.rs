//! Growth series of cocompact CAT(0) cube complexes.
//!
//! The library computes, in exact arithmetic over `Q(t)`, the orbit growth series
//! `G_xy` of a cube complex with a cocompact group action and the coefficients
//! `c_xy` built from f-polynomials of links, and checks that the two matrices are
//! mutually inverse. Infinite complexes are handled through finite labeled balls
//! ([`LabeledBall`]) with explicit bookkeeping of how many series degrees each
//! window supports.

pub mod ball;
mod cliques;
pub mod cubical;
pub mod exactalg;
pub mod generators;
pub mod growth;
pub mod simplicial;

pub use ball::LabeledBall;
pub use cubical::{Cube, CubeComplex, CubeError};
pub use exactalg::{AlgebraError, Polynomial, RatMatrix, RationalFunction, SeriesMatrix};
pub use growth::{GrowthError, GrowthReport};
pub use simplicial::{SimplicialComplex, SimplicialError};
