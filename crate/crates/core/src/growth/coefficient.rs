use std::collections::BTreeMap;

use crate::ball::LabeledBall;
use crate::cubical::{CubeComplex, CubeError};
use crate::exactalg::{minus_t_over_one_minus_t2, minus_t_over_one_plus_t, t2_over_one_minus_t2, RatMatrix, RationalFunction};

use super::GrowthError;

/// `c_xy` from the link of the cube spanned by `x` and `y`; zero when no cube
/// contains both. Links are read in `complex`, so `x` must have its full star there.
pub fn coefficient(complex: &CubeComplex, x: usize, y: usize) -> Result<RationalFunction, GrowthError> {
    let Some(cube) = complex.spanned_cube(x, y)? else {
        return Ok(RationalFunction::zero());
    };
    let d = complex.cube(cube).dim() as u32;
    let f = complex.link_f_polynomial(cube);
    Ok(&minus_t_over_one_minus_t2().pow(d) * &f.substitute(&t2_over_one_minus_t2()))
}

/// `c_xy` for every `y` in the star of `x`, keyed by vertex name. All other
/// coefficients in the row vanish.
pub fn coefficients_at(complex: &CubeComplex, x: usize) -> Result<BTreeMap<String, RationalFunction>, GrowthError> {
    star_vertices(complex, x)
        .into_iter()
        .map(|y| Ok((complex.name(y).to_string(), coefficient(complex, x, y)?)))
        .collect()
}

fn star_vertices(complex: &CubeComplex, x: usize) -> Vec<usize> {
    let mut vs: Vec<usize> =
        complex.cubes_containing(x).iter().flat_map(|&c| complex.cube_vertices(c).iter().copied()).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// The full `(c_xy)` matrix of a finite complex, rows and columns in vertex order.
pub fn coefficient_matrix(complex: &CubeComplex) -> Result<RatMatrix, GrowthError> {
    let n = complex.vertex_count();
    let mut entries = vec![RationalFunction::zero(); n * n];
    for x in 0..n {
        for y in star_vertices(complex, x) {
            entries[x * n + y] = coefficient(complex, x, y)?;
        }
    }
    Ok(RatMatrix::new(n, n, entries)?)
}

/// Coefficients `a_y` of the unique expansion `1_x = Σ a_y h_y` over the vertices
/// of the star, found by solving the system `(t^{d(y,z)}) a = e_x` exactly.
///
/// `star` must be the star of `x`; distances are measured inside it.
pub fn star_solver(star: &CubeComplex, x: usize) -> Result<BTreeMap<String, RationalFunction>, GrowthError> {
    if !star.is_star_of(x) {
        return Err(CubeError::NotAStar { x: star.name(x).to_string() }.into());
    }
    let n = star.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|v| star.distances_from(v).into_iter().map(|d| d.expect("stars are connected")).collect())
        .collect();
    let h = RatMatrix::from_fn(n, n, |y, z| RationalFunction::monomial(1, dist[y][z]));
    let mut e = vec![RationalFunction::zero(); n];
    e[x] = RationalFunction::one();
    // (t^{d(y,z)}) is symmetric, so solving against e_x yields the x-row of the inverse.
    let a = h.solve(&e)?;
    Ok(star.names().iter().cloned().zip(a).collect())
}

/// `c_xy` between two ball vertices; `x` must be star-complete.
pub fn coefficient_in_ball(ball: &LabeledBall, x: usize, y: usize) -> Result<RationalFunction, GrowthError> {
    ball.require_star_complete(x)?;
    coefficient(ball.complex(), x, y)
}

/// `c̄_xy`: the sum of `c_x̄ȳ` over ball vertices `ȳ` labeled `y`, with `x̄` the
/// lift of `x`. Only the star of `x̄` contributes.
pub fn coefficient_bar(ball: &LabeledBall, x: &str, y: &str) -> Result<RationalFunction, GrowthError> {
    let lx = ball.lift(x)?;
    ball.lift(y)?;
    ball.require_star_complete(lx)?;
    let complex = ball.complex();
    star_vertices(complex, lx)
        .into_iter()
        .filter(|&v| ball.label(v) == y)
        .map(|v| coefficient(complex, lx, v))
        .sum()
}

/// `(c̄_xy)` over the sorted orbit ids.
pub fn cbar_matrix(ball: &LabeledBall) -> Result<RatMatrix, GrowthError> {
    let ids = ball.orbit_ids();
    let n = ids.len();
    let mut entries = vec![RationalFunction::zero(); n * n];
    let complex = ball.complex();
    for (i, x) in ids.iter().enumerate() {
        let lx = ball.lift(x)?;
        ball.require_star_complete(lx)?;
        for v in star_vertices(complex, lx) {
            let j = ball.orbit_index(ball.label(v)).expect("label of a ball vertex");
            entries[i * n + j] = &entries[i * n + j] + &coefficient(complex, lx, v)?;
        }
    }
    Ok(RatMatrix::new(n, n, entries)?)
}

/// `Σ_y c_xy` together with whether it equals `f_x(-t/(1+t))`.
pub fn sum_coefficients(complex: &CubeComplex, x: usize) -> Result<(RationalFunction, bool), GrowthError> {
    let sum: RationalFunction = coefficients_at(complex, x)?.values().sum();
    let expected = complex.vertex_link(x).f_polynomial().substitute(&minus_t_over_one_plus_t());
    let holds = sum == expected;
    Ok((sum, holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::fixtures::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_ints(n, d)
    }

    const U: [i64; 3] = [1, 0, -1];
    const U2: [i64; 5] = [1, 0, -2, 0, 1];

    #[test]
    fn segment_coefficients() {
        let s = segment();
        let c = coefficients_at(&s, s.vertex("x").unwrap()).unwrap();
        assert_eq!(c["x"], rf(&[1], &U));
        assert_eq!(c["y"], rf(&[0, -1], &U));
    }

    #[test]
    fn square_coefficients() {
        let s = square();
        let c = coefficients_at(&s, s.vertex("x").unwrap()).unwrap();
        assert_eq!(c["x"], rf(&[1], &U2));
        assert_eq!(c["a"], rf(&[0, -1], &U2));
        assert_eq!(c["b"], rf(&[0, -1], &U2));
        assert_eq!(c["w"], rf(&[0, 0, 1], &U2));
    }

    #[test]
    fn l_shape_coefficients() {
        let l = l_shape();
        let c = coefficients_at(&l, l.vertex("x").unwrap()).unwrap();
        let two_over = rf(&[2], &U2);
        let one_over = rf(&[1], &U);
        assert_eq!(c["x"], &two_over - &one_over);
        assert_eq!(c["p"], rf(&[0, 0, 1], &U2));
        assert_eq!(c["q"], rf(&[0, 0, 1], &U2));
        assert_eq!(c["a"], rf(&[0, -1], &U2));
        assert_eq!(c["c"], rf(&[0, -1], &U2));
        // across the shared edge
        assert_eq!(c["b"], &rf(&[0, -2], &U2) - &rf(&[0, -1], &U));
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn far_vertices_have_zero_coefficient() {
        let l = l_shape();
        assert!(coefficient(&l, l.vertex("p").unwrap(), l.vertex("q").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn solver_matches_closed_form() {
        for c in [segment(), square(), l_shape(), cube3()] {
            for x in 0..c.vertex_count() {
                let star = c.star(x);
                let sx = star.vertex(c.name(x)).unwrap();
                assert_eq!(star_solver(&star, sx).unwrap(), coefficients_at(&c, x).unwrap());
            }
        }
    }

    #[test]
    fn path_star_solution() {
        let p = CubeComplex::parse("cube m o\ncube o p\n").unwrap();
        let a = star_solver(&p, p.vertex("o").unwrap()).unwrap();
        assert_eq!(a["m"], rf(&[0, -1], &U));
        assert_eq!(a["o"], rf(&[1, 0, 1], &U));
        assert_eq!(a["p"], rf(&[0, -1], &U));
    }

    #[test]
    fn solver_rejects_non_stars() {
        let l = l_shape();
        assert!(star_solver(&l, l.vertex("a").unwrap()).is_err());
    }

    #[test]
    fn cube_corner_sums() {
        for (c, n) in [(segment(), 1u32), (square(), 2), (cube3(), 3)] {
            let (sum, holds) = sum_coefficients(&c, 0).unwrap();
            assert!(holds);
            assert_eq!(sum, rf(&[1], &[1, 1]).pow(n));
        }
        let point = CubeComplex::parse("cube o\n").unwrap();
        assert_eq!(sum_coefficients(&point, 0).unwrap(), (RationalFunction::one(), true));
    }

    #[test]
    fn l_shape_center_sum() {
        let l = l_shape();
        let (sum, holds) = sum_coefficients(&l, l.vertex("x").unwrap()).unwrap();
        assert!(holds);
        // f = 1 + 3s + 2s^2 at s = -t/(1+t) is (1 - t)/(1 + t)^2
        assert_eq!(sum, rf(&[1, -1], &[1, 2, 1]));
    }
}
