use num::{BigRational, One, Zero};

use crate::ball::LabeledBall;
use crate::cubical::CubeComplex;
use crate::exactalg::{convolve, first_mismatch, minus_t_over_one_plus_t, AlgebraError, Polynomial, RatMatrix, RationalFunction};

use super::coefficient::{cbar_matrix, coefficient_matrix};
use super::corollaries::lift_link_polynomials;
use super::matrices::{growth_matrix_finite, growth_matrix_truncated, growth_matrix_window};
use super::report::{CellFailure, GrowthData, GrowthReport, IdentityCheck, Mode};
use super::GrowthError;

/// Checks `c̄·G = I`. In truncated mode, row `x` of the product is compared up to
/// the smallest safe degree among the rows `y` with `c̄_xy ≠ 0`.
pub fn verify_inverse(orbit_ids: Vec<String>, cbar: RatMatrix, growth: GrowthData) -> Result<GrowthReport, GrowthError> {
    let n = orbit_ids.len();
    if (cbar.rows(), cbar.cols()) != (n, n) || growth.size() != (n, n) {
        return Err(AlgebraError::DimensionMismatch {
            expected: format!("{n}x{n}"),
            found: format!("{}x{} and {:?}", cbar.rows(), cbar.cols(), growth.size()),
        }
        .into());
    }
    let mut failures = Vec::new();
    let (mode, per_row_safe_degree, verified_degree) = match &growth {
        GrowthData::Exact(g) => {
            let p = cbar.mul(g)?;
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { RationalFunction::one() } else { RationalFunction::zero() };
                    if p.get(i, j) != &want {
                        failures.push(CellFailure {
                            row: orbit_ids[i].clone(),
                            col: orbit_ids[j].clone(),
                            degree: None,
                            found: p.get(i, j).to_string(),
                        });
                    }
                }
            }
            (Mode::Exact, vec![None; n], vec![None; n])
        }
        GrowthData::Truncated(g) => {
            let rows = g.per_row_degree();
            let mut verified = Vec::with_capacity(n);
            for i in 0..n {
                let support: Vec<usize> = (0..n).filter(|&y| !cbar.get(i, y).is_zero()).collect();
                let deg = support.iter().map(|&y| rows[y]).min().unwrap_or(g.degree());
                let cs: Vec<Vec<BigRational>> =
                    support.iter().map(|&y| cbar.get(i, y).series(deg)).collect::<Result<_, _>>()?;
                for j in 0..n {
                    let mut acc = vec![BigRational::zero(); deg + 1];
                    for (c, &y) in cs.iter().zip(&support) {
                        for (a, b) in acc.iter_mut().zip(convolve(c, g.get(y, j), deg)) {
                            *a += b;
                        }
                    }
                    let want = if i == j { BigRational::one() } else { BigRational::zero() };
                    if let Some(k) = first_mismatch(&acc, &want, deg) {
                        failures.push(CellFailure {
                            row: orbit_ids[i].clone(),
                            col: orbit_ids[j].clone(),
                            degree: Some(k),
                            found: acc[k].to_string(),
                        });
                    }
                }
                verified.push(Some(deg));
            }
            (Mode::Truncated(g.degree()), rows.iter().map(|&d| Some(d)).collect(), verified)
        }
    };
    Ok(GrowthReport {
        mode,
        orbit_ids,
        cbar,
        growth,
        per_row_safe_degree,
        verified_degree,
        identity_holds: failures.is_empty(),
        failures,
        corollaries: Vec::new(),
    })
}

fn check(name: &str, failures: Vec<String>) -> IdentityCheck {
    IdentityCheck { name: name.to_string(), holds: failures.is_empty(), detail: failures.join("; ") }
}

/// Adds the summed forms of the main identity, given `f_x` for each orbit (the
/// f-polynomial of the link of its lift):
///
/// * row sums `Σ_y c̄_xy = f_x(-t/(1+t))`,
/// * column sums `Σ_x c̄_xy = f_y(-t/(1+t))` (free actions on vertices),
/// * `Σ_y f_y(-t/(1+t)) G_xy = 1`,
/// * `Σ_y c̄_xy G_y = 1`, `G_y` the full growth series of the lift of `y`,
/// * `Σ_x f_x(-t/(1+t)) G_x = #(X/G)`.
pub fn with_corollaries(mut report: GrowthReport, links: &[Polynomial]) -> Result<GrowthReport, GrowthError> {
    let n = report.orbit_ids.len();
    if links.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: format!("{n} links"), found: links.len().to_string() }.into());
    }
    let ids = &report.orbit_ids;
    let s = minus_t_over_one_plus_t();
    let fs: Vec<RationalFunction> = links.iter().map(|f| f.substitute(&s)).collect();
    let c = &report.cbar;

    let rows: Vec<String> = (0..n)
        .filter(|&x| c.row(x).iter().sum::<RationalFunction>() != fs[x])
        .map(|x| format!("row {}", ids[x]))
        .collect();
    let cols: Vec<String> = (0..n)
        .filter(|&y| (0..n).map(|x| c.get(x, y)).sum::<RationalFunction>() != fs[y])
        .map(|y| format!("column {}", ids[y]))
        .collect();
    let mut checks = vec![check("cbar-row-sums", rows), check("cbar-column-sums", cols)];

    match &report.growth {
        GrowthData::Exact(g) => {
            let fg: Vec<String> = (0..n)
                .filter(|&x| (0..n).map(|y| &fs[y] * g.get(x, y)).sum::<RationalFunction>() != RationalFunction::one())
                .map(|x| format!("row {}", ids[x]))
                .collect();
            let gy: Vec<RationalFunction> = (0..n).map(|y| g.row(y).iter().sum()).collect();
            let cg: Vec<String> = (0..n)
                .filter(|&x| (0..n).map(|y| c.get(x, y) * &gy[y]).sum::<RationalFunction>() != RationalFunction::one())
                .map(|x| format!("row {}", ids[x]))
                .collect();
            let total: RationalFunction = (0..n).map(|x| &fs[x] * &gy[x]).sum();
            let count = RationalFunction::from_int(n as i64);
            let tot = if total == count { vec![] } else { vec![format!("sum is {total}, expected {n}")] };
            checks.push(check("f-weighted-growth-rows", fg));
            checks.push(check("cbar-times-growth-series", cg));
            checks.push(check("orbit-count", tot));
        }
        GrowthData::Truncated(g) => {
            let deg = g.per_row_degree();
            let fser: Vec<Vec<BigRational>> = fs.iter().map(|f| f.series(g.degree())).collect::<Result<_, _>>()?;
            let gy = g.row_sums();
            let mut fg = Vec::new();
            for x in 0..n {
                let d = deg[x];
                let mut acc = vec![BigRational::zero(); d + 1];
                for y in 0..n {
                    for (a, b) in acc.iter_mut().zip(convolve(&fser[y], g.get(x, y), d)) {
                        *a += b;
                    }
                }
                if let Some(k) = first_mismatch(&acc, &BigRational::one(), d) {
                    fg.push(format!("row {} degree {k}", ids[x]));
                }
            }
            let mut cg = Vec::new();
            for x in 0..n {
                let d = report.verified_degree[x].unwrap_or(g.degree());
                let mut acc = vec![BigRational::zero(); d + 1];
                for y in (0..n).filter(|&y| !c.get(x, y).is_zero()) {
                    for (a, b) in acc.iter_mut().zip(convolve(&c.get(x, y).series(d)?, &gy[y], d)) {
                        *a += b;
                    }
                }
                if let Some(k) = first_mismatch(&acc, &BigRational::one(), d) {
                    cg.push(format!("row {} degree {k}", ids[x]));
                }
            }
            let d = deg.iter().copied().min().unwrap_or(0);
            let mut acc = vec![BigRational::zero(); d + 1];
            for x in 0..n {
                for (a, b) in acc.iter_mut().zip(convolve(&fser[x], &gy[x], d)) {
                    *a += b;
                }
            }
            let count = BigRational::from_integer((n as i64).into());
            let tot = match first_mismatch(&acc, &count, d) {
                Some(k) => vec![format!("degree {k} coefficient {}", acc[k])],
                None => vec![],
            };
            checks.push(check("f-weighted-growth-rows", fg));
            checks.push(check("cbar-times-growth-series", cg));
            checks.push(check("orbit-count", tot));
        }
    }
    report.corollaries.extend(checks);
    Ok(report)
}

/// Exact pipeline for the trivial action on a finite CAT(0) complex.
pub fn verify_finite(complex: &CubeComplex) -> Result<GrowthReport, GrowthError> {
    let cat0 = complex.cat0_check();
    if !cat0.holds() {
        let witness = cat0.witness_triple().map(|w| w.join(", ")).unwrap_or_else(|| "disconnected".into());
        return Err(GrowthError::NotCat0(witness));
    }
    let ids = complex.names().to_vec();
    let report = verify_inverse(ids, coefficient_matrix(complex)?, GrowthData::Exact(growth_matrix_finite(complex)?))?;
    let links: Vec<Polynomial> = (0..complex.vertex_count()).map(|x| complex.vertex_link(x).f_polynomial()).collect();
    with_corollaries(report, &links)
}

/// Truncated pipeline on a ball: to a uniform degree `n` when given (every row
/// must be safe to it), otherwise each row to its own safe degree.
pub fn verify_ball_truncated(ball: &LabeledBall, n: Option<usize>) -> Result<GrowthReport, GrowthError> {
    let growth = match n {
        Some(n) => growth_matrix_truncated(ball, n)?,
        None => growth_matrix_window(ball)?,
    };
    let report = verify_inverse(ball.orbit_ids(), cbar_matrix(ball)?, GrowthData::Truncated(growth))?;
    with_corollaries(report, &lift_link_polynomials(ball)?)
}

/// Exact pipeline on a ball against an independently known growth matrix whose
/// rows and columns are indexed by `ids`.
pub fn verify_ball_exact(ball: &LabeledBall, ids: &[String], growth: RatMatrix) -> Result<GrowthReport, GrowthError> {
    if ids != ball.orbit_ids().as_slice() {
        return Err(GrowthError::Window(format!("orbit ids {ids:?} do not match the ball's {:?}", ball.orbit_ids())));
    }
    let report = verify_inverse(ids.to_vec(), cbar_matrix(ball)?, GrowthData::Exact(growth))?;
    with_corollaries(report, &lift_link_polynomials(ball)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::fixtures::*;
    use crate::exactalg::SeriesMatrix;

    #[test]
    fn finite_corpus_inverts() {
        for c in [segment(), square(), l_shape(), cube3(), grid(2, 3)] {
            let r = verify_finite(&c).unwrap();
            assert!(r.identity_holds, "{}", r.to_text());
            assert!(r.all_pass(), "{}", r.to_text());
        }
    }

    #[test]
    fn non_cat0_is_rejected() {
        assert!(matches!(verify_finite(&unfilled_square()), Err(GrowthError::NotCat0(_))));
    }

    #[test]
    fn wrong_matrix_reports_cell() {
        let s = segment();
        let c = coefficient_matrix(&s).unwrap();
        let g = RatMatrix::identity(2);
        let r = verify_inverse(s.names().to_vec(), c, GrowthData::Exact(g)).unwrap();
        assert!(!r.identity_holds);
        assert_eq!(r.failures.len(), 4);
        assert_eq!(r.failures[0].row, "x");
        assert!(r.to_text().contains("FAIL"));
    }

    #[test]
    fn dihedral_truncated() {
        let c = RatMatrix::new(1, 1, vec![RationalFunction::from_ints(&[1, -1], &[1, 1])]).unwrap();
        let mut g = vec![BigRational::one()];
        g.extend(std::iter::repeat_n(BigRational::from_integer(2.into()), 8));
        let g = SeriesMatrix::new(1, 1, 8, vec![g], vec![8]).unwrap();
        let r = verify_inverse(vec!["e".into()], c, GrowthData::Truncated(g)).unwrap();
        assert!(r.identity_holds);
        assert_eq!(r.verified_degree, vec![Some(8)]);
    }

    #[test]
    fn truncated_failure_names_degree() {
        let c = RatMatrix::new(1, 1, vec![RationalFunction::from_ints(&[1, -1], &[1, 1])]).unwrap();
        let g = [1, 2, 2, 3, 2].iter().map(|&k| BigRational::from_integer(k.into())).collect();
        let g = SeriesMatrix::new(1, 1, 4, vec![g], vec![4]).unwrap();
        let r = verify_inverse(vec!["e".into()], c, GrowthData::Truncated(g)).unwrap();
        assert_eq!(r.failures[0].degree, Some(3));
    }

    #[test]
    fn dimension_mismatch() {
        let r = verify_inverse(vec!["a".into()], RatMatrix::identity(2), GrowthData::Exact(RatMatrix::identity(2)));
        assert!(r.is_err());
    }
}
