//! Finite windows onto cocompact complexes.

use std::collections::BTreeMap;

use crate::cubical::CubeComplex;
use crate::growth::GrowthError;

/// A combinatorial ball of radius `R` around `base` in a (possibly infinite) cube
/// complex, with the orbit label of every vertex.
///
/// The ball contains exactly the vertices within distance `R` of the base and the
/// cubes all of whose corners are such vertices. A vertex within `R - D` of the
/// base (`D` the ambient dimension) therefore has its whole ambient star in the
/// ball. Each orbit is represented by a lift: a vertex with that label nearest to
/// the base, ties broken by vertex name.
#[derive(Clone, Debug)]
pub struct LabeledBall {
    complex: CubeComplex,
    base: usize,
    radius: usize,
    dim: usize,
    labels: Vec<String>,
    lifts: BTreeMap<String, usize>,
    base_dist: Vec<usize>,
    complete: bool,
    quotient_euler: Option<i64>,
}

impl LabeledBall {
    /// `labels[v]` is the orbit id of vertex `v` of `complex`. A `complete` ball is
    /// the whole complex: every star is present and every series is exact.
    pub fn new(
        complex: CubeComplex,
        base: usize,
        radius: usize,
        dim: usize,
        labels: Vec<String>,
        complete: bool,
        quotient_euler: Option<i64>,
    ) -> Result<Self, GrowthError> {
        if labels.len() != complex.vertex_count() {
            return Err(GrowthError::Window(format!(
                "{} labels for {} vertices",
                labels.len(),
                complex.vertex_count()
            )));
        }
        let dist = complex.distances_from(base);
        let mut base_dist = Vec::with_capacity(dist.len());
        for (v, d) in dist.into_iter().enumerate() {
            match d {
                Some(d) if d <= radius => base_dist.push(d),
                _ => {
                    return Err(GrowthError::Window(format!(
                        "vertex {} lies outside the radius-{radius} ball",
                        complex.name(v)
                    )))
                }
            }
        }
        let mut lifts: BTreeMap<String, usize> = BTreeMap::new();
        for (v, l) in labels.iter().enumerate() {
            let better = match lifts.get(l) {
                None => true,
                // vertex indices follow name order, so the first seen wins ties
                Some(&w) => base_dist[v] < base_dist[w],
            };
            if better {
                lifts.insert(l.clone(), v);
            }
        }
        Ok(LabeledBall { complex, base, radius, dim, labels, lifts, base_dist, complete, quotient_euler })
    }

    pub fn complex(&self) -> &CubeComplex {
        &self.complex
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Largest cube dimension of the ambient complex.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Orbit ids in sorted order; this is the row/column order of every matrix.
    pub fn orbit_ids(&self) -> Vec<String> {
        self.lifts.keys().cloned().collect()
    }

    pub fn orbit_index(&self, orbit: &str) -> Option<usize> {
        self.lifts.keys().position(|k| k == orbit)
    }

    pub fn lift(&self, orbit: &str) -> Result<usize, GrowthError> {
        self.lifts.get(orbit).copied().ok_or_else(|| GrowthError::UnknownOrbit(orbit.to_string()))
    }

    pub fn lifts(&self) -> &BTreeMap<String, usize> {
        &self.lifts
    }

    pub fn quotient_vertex_count(&self) -> usize {
        self.lifts.len()
    }

    /// Euler characteristic of the quotient, when it is a genuine cube complex of
    /// known cell counts.
    pub fn quotient_euler(&self) -> Option<i64> {
        self.quotient_euler
    }

    pub fn base_distance(&self, v: usize) -> usize {
        self.base_dist[v]
    }

    /// `R - D`, the radius within which all stars are present.
    pub fn star_complete_radius(&self) -> Option<usize> {
        if self.complete {
            Some(self.radius)
        } else {
            self.radius.checked_sub(self.dim)
        }
    }

    pub fn is_star_complete(&self, v: usize) -> bool {
        self.complete || self.base_dist[v] + self.dim <= self.radius
    }

    pub fn require_star_complete(&self, v: usize) -> Result<(), GrowthError> {
        if self.is_star_complete(v) {
            Ok(())
        } else {
            Err(GrowthError::StarIncomplete {
                vertex: self.complex.name(v).to_string(),
                distance: self.base_dist[v],
                radius: self.radius,
                dim: self.dim,
            })
        }
    }

    /// Highest degree to which growth series seen from `v` are exact in this
    /// window: `R - d(base, v)`, unbounded for complete balls.
    pub fn safe_degree(&self, v: usize) -> usize {
        if self.complete {
            usize::MAX
        } else {
            self.radius - self.base_dist[v]
        }
    }

    /// Number of vertices at each distance `0..=R` from the base.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius + 1];
        for &d in &self.base_dist {
            sizes[d] += 1;
        }
        sizes
    }

    /// Largest distance from the base actually realized.
    pub fn eccentricity(&self) -> usize {
        self.base_dist.iter().copied().max().unwrap_or(0)
    }
}
