//! Coefficients `c_xy` from links, orbit growth series `G_xy`, and the check that
//! the two matrices are inverse to each other, with its corollaries.
//!
//! For vertices `x, y` spanning a cube `□` of dimension `d`,
//!
//! ```text
//! c_xy = (-t/(1-t^2))^d · f_□(t^2/(1-t^2))
//! ```
//!
//! where `f_□` is the f-polynomial of the link of `□`; `c_xy = 0` when no cube
//! contains both. `c̄_xy` sums `c_x̄ȳ` over the lifts `ȳ` of orbit `y`.

mod coefficient;
mod corollaries;
mod matrices;
mod report;
mod verify;

pub use coefficient::{
    cbar_matrix, coefficient, coefficient_bar, coefficient_in_ball, coefficient_matrix, coefficients_at, star_solver,
    sum_coefficients,
};
pub use corollaries::{
    davis_growth_closed, euler_trace, euler_trace_ball, lift_link_polynomials, reciprocity_check, reciprocity_failures,
    stars_embed,
};
pub use matrices::{
    growth_matrix_finite, growth_matrix_torus_closed, growth_matrix_truncated, growth_matrix_window, growth_row_from,
    torus_orbit_id,
};
pub use report::{CellFailure, GrowthData, GrowthReport, IdentityCheck, Mode};
pub use verify::{verify_ball_exact, verify_ball_truncated, verify_finite, verify_inverse, with_corollaries};

use thiserror::Error;

use crate::cubical::CubeError;
use crate::exactalg::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error(
        "vertex {vertex} at distance {distance} from the base is not star-complete \
         in a radius-{radius} window of a {dim}-dimensional complex"
    )]
    StarIncomplete { vertex: String, distance: usize, radius: usize, dim: usize },
    #[error("unknown orbit {0}")]
    UnknownOrbit(String),
    #[error("degree {requested} exceeds the safe degree {safe} of row {row}")]
    DegreeTooHigh { row: String, requested: usize, safe: usize },
    #[error("nerve is not flag: {clique:?} is pairwise adjacent but not a face")]
    NonFlagNerve { clique: Vec<String> },
    #[error("complex is not CAT(0): {0}")]
    NotCat0(String),
    #[error("invalid window: {0}")]
    Window(String),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
