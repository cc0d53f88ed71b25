//! Nonpositive curvature and CAT(0) recognition.

use std::collections::BTreeSet;

use crate::cliques::maximal_cliques;

use super::CubeComplex;

/// A vertex triple without a unique median.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianWitness {
    pub triple: [String; 3],
    pub medians: Vec<String>,
}

/// A corner and neighbor directions that span a cube in the 1-skeleton which the
/// complex does not fill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfilledCube {
    pub corner: String,
    pub directions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat0Report {
    pub connected: bool,
    pub median_failure: Option<MedianWitness>,
    pub unfilled: Option<UnfilledCube>,
}

impl Cat0Report {
    pub fn holds(&self) -> bool {
        self.connected && self.median_failure.is_none() && self.unfilled.is_none()
    }

    /// Witness vertices for a failure: the offending triple, or the unfilled
    /// corner followed by the first two of its directions.
    pub fn witness_triple(&self) -> Option<[String; 3]> {
        if let Some(m) = &self.median_failure {
            return Some(m.triple.clone());
        }
        self.unfilled.as_ref().map(|u| {
            let d = |i: usize| u.directions.get(i).cloned().unwrap_or_default();
            [u.corner.clone(), d(0), d(1)]
        })
    }
}

impl CubeComplex {
    /// A vertex whose link is not a flag simplicial complex, with the offending
    /// clique of link vertices (empty when the link has a repeated simplex).
    pub fn npc_violation(&self) -> Option<(String, Vec<String>)> {
        (0..self.vertex_count()).find_map(|v| self.npc_violation_at(v))
    }

    pub fn npc_violation_at(&self, v: usize) -> Option<(String, Vec<String>)> {
        let id = self.find_cube(&[v]).expect("vertex cell");
        if !self.link_is_simplicial(id) {
            return Some((self.name(v).to_string(), Vec::new()));
        }
        self.vertex_link(v).flag_violation().map(|c| (self.name(v).to_string(), c))
    }

    /// Gromov's link condition: every vertex link is a flag simplicial complex.
    pub fn is_npc(&self) -> bool {
        self.npc_violation().is_none()
    }

    fn all_distances(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|v| self.distances_from(v).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect())
            .collect()
    }

    /// Direct triple check: among `candidates`, every triple has exactly one
    /// median in the whole complex.
    pub fn median_violation_among(&self, candidates: &[usize]) -> Option<MedianWitness> {
        let d = self.all_distances();
        let n = self.vertex_count();
        for (i, &u) in candidates.iter().enumerate() {
            for (j, &v) in candidates.iter().enumerate().skip(i + 1) {
                for &w in &candidates[j + 1..] {
                    let between = |a: usize, b: usize, m: usize| d[a][m].saturating_add(d[m][b]) == d[a][b];
                    let mut medians = Vec::new();
                    for m in 0..n {
                        if between(u, v, m) && between(v, w, m) && between(u, w, m) {
                            medians.push(m);
                            if medians.len() > 1 {
                                break;
                            }
                        }
                    }
                    if medians.len() != 1 {
                        return Some(MedianWitness {
                            triple: [self.name(u).into(), self.name(v).into(), self.name(w).into()],
                            medians: medians.into_iter().map(|m| self.name(m).to_string()).collect(),
                        });
                    }
                }
            }
        }
        None
    }

    /// At `v`: directions pairwise spanning 4-cycles of the 1-skeleton must span a
    /// cube of the complex.
    pub fn unfilled_cube_at(&self, v: usize) -> Option<UnfilledCube> {
        let nbrs = self.neighbors(v);
        let mut adj = vec![BTreeSet::new(); nbrs.len()];
        for (i, &a) in nbrs.iter().enumerate() {
            let na: BTreeSet<usize> = self.neighbors(a).iter().copied().filter(|&w| w != v).collect();
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if self.neighbors(b).iter().any(|w| na.contains(w)) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let link = self.vertex_link(v);
        maximal_cliques(&adj).into_iter().find_map(|clique| {
            let dirs: Vec<String> = clique.iter().map(|&i| self.name(nbrs[i]).to_string()).collect();
            if dirs.is_empty() || link.is_face(&dirs) {
                return None;
            }
            // shrink to a minimal unfilled set of directions
            let mut best = dirs.clone();
            'outer: for size in 2..dirs.len() {
                for mask in 0u64..1 << dirs.len() {
                    if mask.count_ones() as usize == size {
                        let sub: Vec<String> = dirs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()).collect();
                        if !link.is_face(&sub) {
                            best = sub;
                            break 'outer;
                        }
                    }
                }
            }
            Some(UnfilledCube { corner: self.name(v).to_string(), directions: best })
        })
    }

    /// Connected, median 1-skeleton, and every cube of the skeleton filled.
    pub fn cat0_check(&self) -> Cat0Report {
        let connected = self.is_connected();
        if !connected {
            return Cat0Report { connected, median_failure: None, unfilled: None };
        }
        let all: Vec<usize> = (0..self.vertex_count()).collect();
        let median_failure = self.median_violation_among(&all);
        let unfilled = all.iter().find_map(|&v| self.unfilled_cube_at(v));
        Cat0Report { connected, median_failure, unfilled }
    }

    pub fn is_cat0(&self) -> bool {
        self.cat0_check().holds()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn npc_examples() {
        assert!(cube3().is_npc());
        assert!(l_shape().is_npc());
        // three squares around a corner of a 3-cube, unfilled
        let shell = CubeComplex::parse("cube o a b ab\ncube o a c ac\ncube o b c bc\n").unwrap();
        assert!(!shell.is_npc());
        let (corner, clique) = shell.npc_violation().unwrap();
        assert_eq!(corner, "o");
        assert_eq!(clique, vec!["a", "b", "c"]);
    }

    #[test]
    fn cat0_examples() {
        let tree = CubeComplex::parse("cube a b\ncube b c\ncube b d\ncube d e\n").unwrap();
        assert!(tree.is_cat0());
        assert!(l_shape().is_cat0());
        assert!(cube3().is_cat0());
        assert!(grid(2, 3).is_cat0());
        let report = unfilled_square().cat0_check();
        assert!(!report.holds());
        assert!(report.median_failure.is_none());
        let u = report.unfilled.unwrap();
        assert_eq!(u.corner, "a");
        assert_eq!(u.directions, vec!["b", "d"]);
    }

    #[test]
    fn non_median_graph() {
        // the 6-cycle: antipodal triples have no median
        let hex = CubeComplex::parse("cube a b\ncube b c\ncube c d\ncube d e\ncube e f\ncube f a\n").unwrap();
        let report = hex.cat0_check();
        let m = report.median_failure.unwrap();
        assert!(m.medians.len() != 1);
        assert!(!hex.is_cat0());
    }

    #[test]
    fn disconnected_is_not_cat0() {
        let two = CubeComplex::parse("cube a b\ncube c d\n").unwrap();
        assert!(!two.cat0_check().connected);
        assert!(!two.is_cat0());
    }

    #[test]
    fn unfilled_three_cube_shell_with_far_corner() {
        // all six faces of a 3-cube but no solid: median graph, unfilled 3-cube
        let faces = "cube v0 v1 v2 v3\ncube v4 v5 v6 v7\ncube v0 v1 v4 v5\n\
                     cube v2 v3 v6 v7\ncube v0 v2 v4 v6\ncube v1 v3 v5 v7\n";
        let shell = CubeComplex::parse(faces).unwrap();
        let report = shell.cat0_check();
        assert!(report.median_failure.is_none());
        assert_eq!(report.unfilled.unwrap().directions.len(), 3);
    }
}
