//! Test-instance constructors: Davis-complex balls of right-angled Coxeter groups,
//! Salvetti-cover balls of right-angled Artin groups, subdivided tori, finite
//! complexes with the trivial action, and products of balls.

mod graph_product;
mod words;

pub use graph_product::{graph_product_ball, Order, ProductGraph};
pub use words::{normal_form, parse_word, Letter, NormalWord};

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::ball::LabeledBall;
use crate::cubical::{CubeComplex, CubeError};
use crate::growth::{torus_orbit_id, GrowthError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("generator {0} declared twice")]
    DuplicateGenerator(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("subdivision {0} is too small")]
    Subdivision(usize),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Growth(#[from] GrowthError),
}

fn point_name(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn residues(p: &[i64], k: usize) -> Vec<usize> {
    p.iter().map(|&c| c.rem_euclid(k as i64) as usize).collect()
}

/// Corners of the unit cube at `p` spanned by `axes`, in binary order.
fn unit_cube_corners(p: &[i64], axes: &[usize]) -> Vec<Vec<i64>> {
    (0..1usize << axes.len())
        .map(|mask| {
            let mut q = p.to_vec();
            for (bit, &a) in axes.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    q[a] += 1;
                }
            }
            q
        })
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1usize << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// The `ℓ₁`-ball of radius `radius` in the standard cubulation of `ℝⁿ`, labeled by
/// residues mod `k`, i.e. the orbits of `kℤⁿ`.
pub fn torus_ball(n: usize, k: usize, radius: usize) -> Result<LabeledBall, GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::Subdivision(k));
    }
    let r = radius as i64;
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                let used: i64 = p.iter().map(|c: &i64| c.abs()).sum();
                (-(r - used)..=(r - used)).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let index: HashMap<Vec<i64>, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let axis_sets: Vec<Vec<usize>> = subsets(n).filter(|s| !s.is_empty()).collect();
    let mut cubes = Vec::new();
    for p in &points {
        for axes in &axis_sets {
            let corners: Option<Vec<usize>> = unit_cube_corners(p, axes).iter().map(|q| index.get(q).copied()).collect();
            if let Some(c) = corners {
                cubes.push(c);
            }
        }
    }
    let names: Vec<String> = points.iter().map(|p| point_name(p)).collect();
    let labels_by_name: HashMap<String, String> =
        points.iter().map(|p| (point_name(p), torus_orbit_id(&residues(p, k)))).collect();
    let complex = CubeComplex::from_indexed(names, cubes)?;
    let labels = complex.names().iter().map(|v| labels_by_name[v].clone()).collect();
    let base = complex.vertex(&point_name(&vec![0; n]))?;
    Ok(LabeledBall::new(complex, base, radius, n, labels, false, Some(0))?)
}

/// `ℝⁿ/kℤⁿ` as a finite cube complex (`k ≥ 3`, so that cubes are determined by
/// their vertex sets); vertices are named by residue vectors.
pub fn torus_quotient(n: usize, k: usize) -> Result<CubeComplex, GeneratorError> {
    if k < 3 {
        return Err(GeneratorError::Subdivision(k));
    }
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        points = points.into_iter().flat_map(|p| (0..k as i64).map(move |c| [p.clone(), vec![c]].concat())).collect();
    }
    let mut cubes = Vec::new();
    for p in &points {
        for axes in subsets(n) {
            cubes.push(unit_cube_corners(p, &axes).iter().map(|q| torus_orbit_id(&residues(q, k))).collect::<Vec<_>>());
        }
    }
    Ok(CubeComplex::from_cubes(&cubes)?)
}

/// A finite CAT(0) complex as a complete ball: every vertex is its own orbit.
pub fn finite_as_labeled(complex: &CubeComplex, base: usize) -> Result<LabeledBall, GeneratorError> {
    let report = complex.cat0_check();
    if !report.holds() {
        let witness = report.witness_triple().map(|w| w.join(", ")).unwrap_or_else(|| "disconnected".into());
        return Err(GrowthError::NotCat0(witness).into());
    }
    let radius = complex.distances_from(base).into_iter().flatten().max().unwrap_or(0);
    let labels = complex.names().to_vec();
    let euler = complex.euler_char();
    Ok(LabeledBall::new(complex.clone(), base, radius, complex.dimension(), labels, true, Some(euler))?)
}

/// Product of two balls, cut down to the `ℓ₁`-ball of radius `min(R1, R2)` about
/// the product base point. A complete factor imposes no bound of its own, so two
/// complete factors give their full product. Vertices and labels are named `(a,b)`.
pub fn product_ball(a: &LabeledBall, b: &LabeledBall) -> Result<LabeledBall, GeneratorError> {
    let complete = a.is_complete() && b.is_complete();
    let radius = match (a.is_complete(), b.is_complete()) {
        (true, true) => a.radius() + b.radius(),
        (true, false) => b.radius(),
        (false, true) => a.radius(),
        (false, false) => a.radius().min(b.radius()),
    };
    let (ca, cb) = (a.complex(), b.complex());
    let pair = |u: &str, v: &str| format!("({u},{v})");
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut names = Vec::new();
    let mut labels = Vec::new();
    for u in 0..ca.vertex_count() {
        for v in 0..cb.vertex_count() {
            if a.base_distance(u) + b.base_distance(v) <= radius {
                index.insert((u, v), names.len());
                names.push(pair(ca.name(u), cb.name(v)));
                labels.push(pair(a.label(u), b.label(v)));
            }
        }
    }
    let mut cubes = Vec::new();
    for p in 0..ca.cubes().len() {
        for q in 0..cb.cubes().len() {
            let (cp, cq) = (ca.cube(p).corners(), cb.cube(q).corners());
            let corners: Option<Vec<usize>> =
                cq.iter().flat_map(|&v| cp.iter().map(move |&u| (u, v))).map(|uv| index.get(&uv).copied()).collect();
            if let Some(c) = corners {
                cubes.push(c);
            }
        }
    }
    let base_name = pair(ca.name(a.base()), cb.name(b.base()));
    let by_name: HashMap<String, String> = names.iter().cloned().zip(labels).collect();
    let complex = CubeComplex::from_indexed(names, cubes)?;
    let labels = complex.names().iter().map(|v| by_name[v].clone()).collect();
    let base = complex.vertex(&base_name)?;
    let euler = a.quotient_euler().zip(b.quotient_euler()).map(|(x, y)| x * y);
    Ok(LabeledBall::new(complex, base, radius, a.dim() + b.dim(), labels, complete, euler)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::fixtures::*;
    use crate::growth::{cbar_matrix, growth_matrix_truncated, stars_embed};
    use crate::RationalFunction;

    #[test]
    fn line_torus_ball() {
        let b = torus_ball(1, 2, 6).unwrap();
        assert_eq!(b.complex().vertex_count(), 13);
        assert_eq!(b.orbit_ids(), vec!["0", "1"]);
        assert_eq!(b.label(b.complex().vertex("(-3)").unwrap()), "1");
        assert_eq!(b.complex().name(b.lift("1").unwrap()), "(-1)");
        let c = cbar_matrix(&b).unwrap();
        let u = [1, 0, -1];
        assert_eq!(c.get(0, 0), &RationalFunction::from_ints(&[1, 0, 1], &u));
        assert_eq!(c.get(0, 1), &RationalFunction::from_ints(&[0, -2], &u));
        let g = growth_matrix_truncated(&b, 5).unwrap();
        let ints: Vec<i64> = g.get(0, 0).iter().map(|c| c.to_integer().try_into().unwrap()).collect();
        assert_eq!(ints, vec![1, 0, 2, 0, 2, 0]);
        assert!(!stars_embed(&b).unwrap());
    }

    #[test]
    fn small_torus_ball_boundary() {
        let b = torus_ball(1, 2, 1).unwrap();
        assert!(b.is_star_complete(b.base()));
        assert!(!b.is_star_complete(b.lift("1").unwrap()));
        assert!(cbar_matrix(&b).is_err());
        assert!(growth_matrix_truncated(&b, 1).is_err());
    }

    #[test]
    fn plane_torus_ball() {
        let b = torus_ball(2, 3, 8).unwrap();
        assert_eq!(b.quotient_vertex_count(), 9);
        assert!(stars_embed(&b).unwrap());
        let c = b.complex();
        let (p, q) = (c.vertex("(2,-3)").unwrap(), c.vertex("(-1,1)").unwrap());
        assert_eq!(c.distance(p, q).unwrap(), 7);
        assert_eq!(b.sphere_sizes()[..4], [1, 4, 8, 12]);
    }

    #[test]
    fn torus_quotients() {
        assert!(torus_quotient(2, 2).is_err());
        for (n, k) in [(1, 3), (2, 3), (2, 4), (3, 3)] {
            let t = torus_quotient(n, k).unwrap();
            assert_eq!(t.vertex_count(), k.pow(n as u32));
            assert_eq!(t.euler_char(), 0);
            assert!(t.is_npc());
        }
    }

    #[test]
    fn finite_labeled() {
        let b = finite_as_labeled(&l_shape(), 0).unwrap();
        assert_eq!(b.quotient_vertex_count(), 6);
        assert!(stars_embed(&b).unwrap());
        assert_eq!(finite_as_labeled(&cube3(), 0).unwrap().radius(), 3);
        assert!(finite_as_labeled(&unfilled_square(), 0).is_err());
    }

    #[test]
    fn products() {
        let line = torus_ball(1, 2, 4).unwrap();
        let sq = product_ball(&line, &line).unwrap();
        assert_eq!(sq.sphere_sizes(), vec![1, 4, 8, 12, 16]);
        assert_eq!(sq.dim(), 2);
        let point = finite_as_labeled(&CubeComplex::parse("cube o\n").unwrap(), 0).unwrap();
        let same = product_ball(&line, &point).unwrap();
        assert_eq!(same.sphere_sizes(), line.sphere_sizes());
        assert_eq!(same.quotient_vertex_count(), 2);
        let seg = finite_as_labeled(&segment(), 0).unwrap();
        let full = product_ball(&seg, &finite_as_labeled(&l_shape(), 0).unwrap()).unwrap();
        assert!(full.is_complete());
        assert_eq!(full.complex().vertex_count(), 12);
        assert_eq!(full.quotient_euler(), Some(1));
    }
}
