use std::collections::BTreeSet;

use num::BigRational;

use crate::ball::LabeledBall;
use crate::exactalg::{minus_t_over_one_plus_t, Polynomial, RatMatrix, RationalFunction};
use crate::simplicial::{eval_at_minus_half, SimplicialComplex};

use super::GrowthError;

/// Growth series `1/f(-t/(1+t))` of the right-angled Coxeter group with flag
/// nerve `nerve`.
pub fn davis_growth_closed(nerve: &SimplicialComplex) -> Result<RationalFunction, GrowthError> {
    if let Some(clique) = nerve.flag_violation() {
        return Err(GrowthError::NonFlagNerve { clique });
    }
    Ok(nerve.f_polynomial().substitute(&minus_t_over_one_plus_t()).inv()?)
}

/// `r(1/t) = (-1)^n r(t)`.
pub fn reciprocity_check(r: &RationalFunction, n: u32) -> bool {
    let flipped = r.invert_t();
    if n.is_multiple_of(2) {
        flipped == *r
    } else {
        flipped == -r
    }
}

/// Cells of `m` that are not reciprocal with sign `(-1)^n`.
pub fn reciprocity_failures(m: &RatMatrix, n: u32) -> Vec<(usize, usize)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !reciprocity_check(m.get(i, j), n))
        .collect()
}

/// `Σ_x f_x(-1/2)`: the trace of `c̄` at `t = √-1`, where `t²/(1-t²) = -1/2`.
pub fn euler_trace(links: &[Polynomial]) -> BigRational {
    links.iter().map(eval_at_minus_half).sum()
}

/// The Euler trace over the orbits of a ball, with the quotient's Euler
/// characteristic when it is known.
pub fn euler_trace_ball(ball: &LabeledBall) -> Result<(BigRational, Option<i64>), GrowthError> {
    Ok((euler_trace(&lift_link_polynomials(ball)?), ball.quotient_euler()))
}

/// f-polynomial of the vertex link of each lift, in orbit order.
pub fn lift_link_polynomials(ball: &LabeledBall) -> Result<Vec<Polynomial>, GrowthError> {
    ball.orbit_ids()
        .iter()
        .map(|id| {
            let v = ball.lift(id)?;
            ball.require_star_complete(v)?;
            Ok(ball.complex().vertex_link(v).f_polynomial())
        })
        .collect()
}

/// Whether the label map is injective on the star of every lift.
pub fn stars_embed(ball: &LabeledBall) -> Result<bool, GrowthError> {
    let complex = ball.complex();
    for id in ball.orbit_ids() {
        let v = ball.lift(&id)?;
        ball.require_star_complete(v)?;
        let star: BTreeSet<usize> =
            complex.cubes_containing(v).iter().flat_map(|&c| complex.cube_vertices(c).iter().copied()).collect();
        let labels: BTreeSet<&str> = star.iter().map(|&w| ball.label(w)).collect();
        if labels.len() != star.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
