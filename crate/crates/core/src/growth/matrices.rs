use std::collections::VecDeque;

use num::{BigRational, One, Zero};

use crate::ball::LabeledBall;
use crate::cubical::{CubeComplex, CubeError};
use crate::exactalg::{Polynomial, RatMatrix, RationalFunction, SeriesMatrix};

use super::GrowthError;

/// `G_xy = t^{d(x,y)}` for the trivial action on a finite connected complex.
pub fn growth_matrix_finite(complex: &CubeComplex) -> Result<RatMatrix, GrowthError> {
    let n = complex.vertex_count();
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        for (y, d) in complex.distances_from(x).into_iter().enumerate() {
            let d = d.ok_or_else(|| CubeError::Disconnected {
                x: complex.name(x).to_string(),
                y: complex.name(y).to_string(),
            })?;
            entries.push(RationalFunction::monomial(1, d));
        }
    }
    Ok(RatMatrix::new(n, n, entries)?)
}

/// Orbit counts seen from ball vertex `v`: entry `j` holds, at `t^k`, the number of
/// vertices of orbit `j` at distance `k` from `v`, for `k ≤ degree`.
pub fn growth_row_from(ball: &LabeledBall, v: usize, degree: usize) -> Result<Vec<Vec<BigRational>>, GrowthError> {
    let safe = ball.safe_degree(v);
    if degree > safe {
        return Err(GrowthError::DegreeTooHigh { row: ball.complex().name(v).to_string(), requested: degree, safe });
    }
    let complex = ball.complex();
    let orbit_of: Vec<usize> =
        (0..complex.vertex_count()).map(|w| ball.orbit_index(ball.label(w)).expect("labelled")).collect();
    let mut row = vec![vec![BigRational::zero(); degree + 1]; ball.quotient_vertex_count()];
    // Geodesics of length ≤ R - d(base, v) from v never leave the ball, so ball
    // distances are ambient distances up to the safe degree.
    let mut dist = vec![usize::MAX; complex.vertex_count()];
    let mut queue = VecDeque::from([v]);
    dist[v] = 0;
    while let Some(u) = queue.pop_front() {
        row[orbit_of[u]][dist[u]] += BigRational::one();
        if dist[u] == degree {
            continue;
        }
        for &w in complex.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(row)
}

/// Truncated `G_xy` to degree `n` from the lifts; every row must be safe to `n`.
pub fn growth_matrix_truncated(ball: &LabeledBall, n: usize) -> Result<SeriesMatrix, GrowthError> {
    let ids = ball.orbit_ids();
    let mut entries = Vec::with_capacity(ids.len() * ids.len());
    for id in &ids {
        entries.extend(growth_row_from(ball, ball.lift(id)?, n)?);
    }
    Ok(SeriesMatrix::new(ids.len(), ids.len(), n, entries, vec![n; ids.len()])?)
}

/// Truncated `G_xy` with each row carried to its own safe degree. For complete
/// balls every row is exact up to the largest distance that occurs.
pub fn growth_matrix_window(ball: &LabeledBall) -> Result<SeriesMatrix, GrowthError> {
    let ids = ball.orbit_ids();
    let lifts: Vec<usize> = ids.iter().map(|id| ball.lift(id)).collect::<Result<_, _>>()?;
    let row_degrees: Vec<usize> = if ball.is_complete() {
        let reach = lifts
            .iter()
            .map(|&v| ball.complex().distances_from(v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        vec![reach; lifts.len()]
    } else {
        lifts.iter().map(|&v| ball.safe_degree(v)).collect()
    };
    let top = row_degrees.iter().copied().max().unwrap_or(0);
    let mut entries = Vec::with_capacity(ids.len() * ids.len());
    for (&v, &d) in lifts.iter().zip(&row_degrees) {
        for mut cell in growth_row_from(ball, v, d)? {
            cell.resize(top + 1, BigRational::zero());
            entries.push(cell);
        }
    }
    Ok(SeriesMatrix::new(ids.len(), ids.len(), top, entries, row_degrees)?)
}

/// Orbit id of a residue vector, e.g. `0,2`.
pub fn torus_orbit_id(residues: &[usize]) -> String {
    residues.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

/// Closed-form growth matrix of `kℤⁿ` acting on the standard cubulation of `ℝⁿ`,
/// rows and columns in sorted orbit-id order (the ids are returned alongside).
///
/// Distances are additive over coordinates, so each entry is a product of 1-D
/// orbit series `Σ_m t^{|a-b+km|} = (t^e + t^{k-e})/(1-t^k)`, `e = (a-b) mod k`.
pub fn growth_matrix_torus_closed(n: usize, k: usize) -> Result<(Vec<String>, RatMatrix), GrowthError> {
    if k < 2 {
        return Err(GrowthError::Window(format!("subdivision {k} is below 2")));
    }
    let den = Polynomial::one() - Polynomial::monomial(BigRational::one(), k);
    let factor: Vec<RationalFunction> = (0..k)
        .map(|e| {
            let num = Polynomial::monomial(BigRational::one(), e) + Polynomial::monomial(BigRational::one(), k - e);
            RationalFunction::new(num, den.clone()).expect("nonzero denominator")
        })
        .collect();
    let mut orbits: Vec<(String, Vec<usize>)> = (0..k.pow(n as u32))
        .map(|mut i| {
            let mut r = vec![0; n];
            for c in r.iter_mut().rev() {
                *c = i % k;
                i /= k;
            }
            (torus_orbit_id(&r), r)
        })
        .collect();
    orbits.sort();
    let m = orbits.len();
    let g = RatMatrix::from_fn(m, m, |i, j| {
        orbits[i].1.iter().zip(&orbits[j].1).fold(RationalFunction::one(), |acc, (&a, &b)| &acc * &factor[(a + k - b) % k])
    });
    Ok((orbits.into_iter().map(|(id, _)| id).collect(), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::fixtures::*;

    fn ints(s: &[BigRational]) -> Vec<i64> {
        s.iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn finite_matrices() {
        let g = growth_matrix_finite(&segment()).unwrap();
        assert_eq!(g.row(0), &[RationalFunction::one(), RationalFunction::t()]);
        let sq = growth_matrix_finite(&square()).unwrap();
        assert!(sq.is_symmetric());
        let (x, w) = (square().vertex("x").unwrap(), square().vertex("w").unwrap());
        assert_eq!(sq.get(x, w), &RationalFunction::monomial(1, 2));
        let two = CubeComplex::parse("cube a b\ncube c d\n").unwrap();
        assert!(growth_matrix_finite(&two).is_err());
    }

    #[test]
    fn torus_closed_form_one_dimensional() {
        let (ids, g) = growth_matrix_torus_closed(1, 2).unwrap();
        assert_eq!(ids, vec!["0", "1"]);
        let u = [1, 0, -1];
        assert_eq!(g.get(0, 0), &RationalFunction::from_ints(&[1, 0, 1], &u));
        assert_eq!(g.get(0, 1), &RationalFunction::from_ints(&[0, 2], &u));
        let (_, g3) = growth_matrix_torus_closed(1, 3).unwrap();
        // residue 0 seen from 0: 1 + 2t^3 + 2t^6 + ...
        assert_eq!(ints(&g3.get(0, 0).series(6).unwrap()), vec![1, 0, 0, 2, 0, 0, 2]);
        assert_eq!(ints(&g3.get(0, 1).series(6).unwrap()), vec![0, 1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn torus_closed_form_products() {
        let (ids, g) = growth_matrix_torus_closed(2, 2).unwrap();
        assert_eq!(ids, vec!["0,0", "0,1", "1,0", "1,1"]);
        let (_, g1) = growth_matrix_torus_closed(1, 2).unwrap();
        assert_eq!(g.get(1, 2), &(g1.get(0, 1) * g1.get(1, 0)));
        assert!(g.is_symmetric());
        assert!(growth_matrix_torus_closed(1, 1).is_err());
    }

    #[test]
    fn torus_ids_sort_as_strings() {
        let (ids, _) = growth_matrix_torus_closed(1, 11).unwrap();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(ids[2], "10");
    }
}
