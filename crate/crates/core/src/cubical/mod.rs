//! Finite cube complexes.
//!
//! A complex is built from a list of cubes, each given by its `2^k` corners in
//! binary order: corner `b` has coordinate `(b >> j) & 1` along axis `j`. The
//! constructor closes the list under faces, validates that cubes meet along common
//! faces, and stores every cell under a canonical orientation so cube identities
//! do not depend on how the input was written.

mod checks;
mod ops;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

pub use checks::{Cat0Report, MedianWitness, UnfilledCube};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cube #{cube}: {count} corners is not a power of two")]
    BadCornerCount { cube: usize, count: usize },
    #[error("cube #{cube}: corner {vertex} appears twice")]
    RepeatedCorner { cube: usize, vertex: String },
    #[error("inconsistent face gluing: cubes {a:?} and {b:?} share corners not along a common face")]
    InconsistentGluing { a: Vec<String>, b: Vec<String> },
    #[error("vertex name {0} given twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertices {x} and {y} are in different components")]
    Disconnected { x: String, y: String },
    #[error("vertices {x} and {y} lie in two minimal cubes, neither containing the other")]
    AmbiguousSpan { x: String, y: String },
    #[error("{z} is not adjacent to {x}")]
    NotAdjacent { x: String, z: String },
    #[error("the complex is not the star of {x}")]
    NotAStar { x: String },
}

/// A cube of a [`CubeComplex`], by vertex indices of that complex in binary corner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    corners: Vec<usize>,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.corners.len().trailing_zeros() as usize
    }

    pub fn corners(&self) -> &[usize] {
        &self.corners
    }

    /// The corner at the origin of the canonical orientation (the smallest index).
    pub fn origin(&self) -> usize {
        self.corners[0]
    }
}

/// Cell id within a complex.
pub type CubeId = usize;

#[derive(Clone, Debug)]
pub struct CubeComplex {
    names: Vec<String>,
    index: HashMap<String, usize>,
    cubes: Vec<Cube>,
    /// Sorted vertex set of each cube, parallel to `cubes`.
    cube_sets: Vec<Vec<usize>>,
    cube_ids: HashMap<Vec<usize>, CubeId>,
    vertex_cubes: Vec<Vec<CubeId>>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for CubeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.cubes == other.cubes
    }
}

impl Eq for CubeComplex {}

impl CubeComplex {
    /// Builds a complex from cubes given as corner-name sequences.
    pub fn from_cubes<S: AsRef<str>>(cubes: &[Vec<S>]) -> Result<Self, CubeError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut indexed = Vec::with_capacity(cubes.len());
        for c in cubes {
            let mut ids = Vec::with_capacity(c.len());
            for v in c {
                let v = v.as_ref();
                let id = *index.entry(v.to_string()).or_insert_with(|| {
                    names.push(v.to_string());
                    names.len() - 1
                });
                ids.push(id);
            }
            indexed.push(ids);
        }
        Self::from_indexed(names, indexed)
    }

    /// Builds a complex over the given vertex names (which must be distinct) from
    /// cubes referencing them by position. Vertices in no cube become isolated.
    pub fn from_indexed(names: Vec<String>, cubes: Vec<Vec<usize>>) -> Result<Self, CubeError> {
        // Reindex so that vertex order is the lexicographic order of names.
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; names.len()];
        for (r, &o) in order.iter().enumerate() {
            rank[o] = r;
        }
        let sorted_names: Vec<String> = order.iter().map(|&o| names[o].clone()).collect();
        if let Some(w) = sorted_names.windows(2).find(|w| w[0] == w[1]) {
            return Err(CubeError::DuplicateVertex(w[0].clone()));
        }
        let names = sorted_names;

        let mut inputs: Vec<Cube> = Vec::with_capacity(cubes.len());
        for (pos, c) in cubes.into_iter().enumerate() {
            if !c.len().is_power_of_two() {
                return Err(CubeError::BadCornerCount { cube: pos, count: c.len() });
            }
            let c: Vec<usize> = c.into_iter().map(|v| rank[v]).collect();
            let mut seen = c.clone();
            seen.sort_unstable();
            if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
                return Err(CubeError::RepeatedCorner { cube: pos, vertex: names[w[0]].clone() });
            }
            inputs.push(Cube { corners: canonical_orientation(&c) });
        }
        for v in 0..names.len() {
            inputs.push(Cube { corners: vec![v] });
        }

        let mut cells: HashMap<Vec<usize>, Cube> = HashMap::new();
        for c in &inputs {
            for f in faces_of(&c.corners) {
                let mut key = f.clone();
                key.sort_unstable();
                match cells.get(&key) {
                    Some(existing) if existing.corners != f => {
                        return Err(CubeError::InconsistentGluing {
                            a: existing.corners.iter().map(|&i| names[i].clone()).collect(),
                            b: f.iter().map(|&i| names[i].clone()).collect(),
                        })
                    }
                    Some(_) => {}
                    None => {
                        cells.insert(key, Cube { corners: f });
                    }
                }
            }
        }

        let mut entries: Vec<(Vec<usize>, Cube)> = cells.into_iter().collect();
        entries.sort_by(|a, b| (a.1.dim(), &a.0).cmp(&(b.1.dim(), &b.0)));
        let mut cubes = Vec::with_capacity(entries.len());
        let mut cube_sets = Vec::with_capacity(entries.len());
        let mut cube_ids = HashMap::with_capacity(entries.len());
        let mut vertex_cubes = vec![Vec::new(); names.len()];
        for (id, (key, cube)) in entries.into_iter().enumerate() {
            for &v in &key {
                vertex_cubes[v].push(id);
            }
            cube_ids.insert(key.clone(), id);
            cube_sets.push(key);
            cubes.push(cube);
        }
        let mut adjacency = vec![Vec::new(); names.len()];
        for c in cubes.iter().filter(|c| c.dim() == 1) {
            adjacency[c.corners[0]].push(c.corners[1]);
            adjacency[c.corners[1]].push(c.corners[0]);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let complex = CubeComplex { names, index, cubes, cube_sets, cube_ids, vertex_cubes, adjacency };
        complex.check_intersections()?;
        Ok(complex)
    }

    /// Any two maximal cubes meet in a common face of both (or not at all).
    fn check_intersections(&self) -> Result<(), CubeError> {
        let maximal = self.maximal_cubes();
        let mut max_at: Vec<Vec<CubeId>> = vec![Vec::new(); self.names.len()];
        for &id in &maximal {
            for &v in &self.cube_sets[id] {
                max_at[v].push(id);
            }
        }
        for (v, list) in max_at.iter().enumerate() {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    let inter = sorted_intersection(&self.cube_sets[a], &self.cube_sets[b]);
                    // each pair is handled at the smallest shared vertex only
                    if inter[0] != v {
                        continue;
                    }
                    if !is_face_pattern(&self.cubes[a].corners, &inter) || !is_face_pattern(&self.cubes[b].corners, &inter) {
                        return Err(CubeError::InconsistentGluing { a: self.cube_names(a), b: self.cube_names(b) });
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses `cube v0 v1 ... v_{2^k-1}` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, CubeError> {
        let mut cubes: Vec<Vec<String>> = Vec::new();
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("cube") => {
                    let c: Vec<String> = words.map(String::from).collect();
                    if c.is_empty() {
                        return Err(CubeError::Parse { line: no + 1, message: "cube has no corners".into() });
                    }
                    cubes.push(c);
                    lines.push(no + 1);
                }
                Some(other) => {
                    return Err(CubeError::Parse { line: no + 1, message: format!("expected `cube`, found `{other}`") })
                }
                None => unreachable!(),
            }
        }
        Self::from_cubes(&cubes).map_err(|e| match e {
            CubeError::BadCornerCount { cube, count } => CubeError::Parse {
                line: lines[cube],
                message: format!("{count} corners is not a power of two"),
            },
            CubeError::RepeatedCorner { cube, vertex } => CubeError::Parse {
                line: lines[cube],
                message: format!("corner {vertex} appears twice; corners must be distinct"),
            },
            CubeError::InconsistentGluing { a, b } => {
                let line = cubes
                    .iter()
                    .position(|c| {
                        let s: BTreeSet<&String> = c.iter().collect();
                        b.iter().all(|v| s.contains(v)) || a.iter().all(|v| s.contains(v))
                    })
                    .map_or(0, |p| lines[p]);
                CubeError::Parse {
                    line,
                    message: format!("cubes {a:?} and {b:?} share corners not along a common face"),
                }
            }
            other => other,
        })
    }

    /// Maximal cubes in the text format, one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for id in self.maximal_cubes() {
            let _ = writeln!(out, "cube {}", self.cube_names(id).join(" "));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize, CubeError> {
        self.index.get(name).copied().ok_or_else(|| CubeError::UnknownVertex(name.to_string()))
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn cube(&self, id: CubeId) -> &Cube {
        &self.cubes[id]
    }

    /// Corner names of a cube in its canonical binary order.
    pub fn cube_names(&self, id: CubeId) -> Vec<String> {
        self.cubes[id].corners.iter().map(|&v| self.names[v].clone()).collect()
    }

    /// Sorted vertex indices of a cube.
    pub fn cube_vertices(&self, id: CubeId) -> &[usize] {
        &self.cube_sets[id]
    }

    /// The cube with exactly this vertex set.
    pub fn find_cube(&self, vertices: &[usize]) -> Option<CubeId> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.cube_ids.get(&key).copied()
    }

    pub fn cube_contains(&self, id: CubeId, v: usize) -> bool {
        self.cube_sets[id].binary_search(&v).is_ok()
    }

    /// Cells containing vertex `v`, including the 0-cube `{v}`.
    pub fn cubes_containing(&self, v: usize) -> &[CubeId] {
        &self.vertex_cubes[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn dimension(&self) -> usize {
        self.cubes.last().map_or(0, Cube::dim)
    }

    /// Number of cells per dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension() + 1];
        for c in &self.cubes {
            counts[c.dim()] += 1;
        }
        counts
    }

    /// Cells that are not proper faces of other cells.
    pub fn maximal_cubes(&self) -> Vec<CubeId> {
        let mut is_face = vec![false; self.cubes.len()];
        for c in &self.cubes {
            if c.dim() == 0 {
                continue;
            }
            for f in faces_of(&c.corners) {
                if f.len() < c.corners.len() {
                    is_face[self.find_cube(&f).expect("closed under faces")] = true;
                }
            }
        }
        (0..self.cubes.len()).filter(|&i| !is_face[i]).collect()
    }

    /// Every cell as a sorted list of vertex names.
    pub fn cells(&self) -> BTreeSet<Vec<String>> {
        self.cube_sets.iter().map(|s| s.iter().map(|&v| self.names[v].clone()).collect()).collect()
    }

    /// Breadth-first distances from `v` in the 1-skeleton; `None` when unreachable.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.names.len()];
        let mut queue = VecDeque::from([v]);
        dist[v] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graph distance in the 1-skeleton, which is the ℓ1 distance on vertices of a
    /// CAT(0) cube complex.
    pub fn distance(&self, x: usize, y: usize) -> Result<usize, CubeError> {
        self.distances_from(x)[y]
            .ok_or_else(|| CubeError::Disconnected { x: self.names[x].clone(), y: self.names[y].clone() })
    }

    pub fn is_connected(&self) -> bool {
        self.names.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Alternating count of cells by dimension.
    pub fn euler_char(&self) -> i64 {
        self.cubes.iter().map(|c| if c.dim() % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Complex generated by the given cells, over the names they use.
    pub fn subcomplex(&self, ids: impl IntoIterator<Item = CubeId>) -> CubeComplex {
        let cubes: Vec<Vec<&str>> = ids.into_iter().map(|id| self.cubes[id].corners.iter().map(|&v| self.name(v)).collect()).collect();
        CubeComplex::from_cubes(&cubes).expect("faces of a valid complex")
    }
}

/// Rotates and relabels axes so the smallest vertex sits at corner 0 and the axes
/// are ordered by the index of the neighbor of corner 0 along them.
fn canonical_orientation(corners: &[usize]) -> Vec<usize> {
    let n = corners.len();
    let k = n.trailing_zeros() as usize;
    let p = (0..n).min_by_key(|&b| corners[b]).unwrap();
    let shifted: Vec<usize> = (0..n).map(|b| corners[b ^ p]).collect();
    let mut axes: Vec<usize> = (0..k).collect();
    axes.sort_by_key(|&j| shifted[1 << j]);
    (0..n)
        .map(|b| {
            let old = (0..k).fold(0, |acc, i| acc | (((b >> i) & 1) << axes[i]));
            shifted[old]
        })
        .collect()
}

/// All faces of a cube (itself included), each canonically oriented.
fn faces_of(corners: &[usize]) -> Vec<Vec<usize>> {
    let n = corners.len();
    let k = n.trailing_zeros() as usize;
    let mut out = Vec::new();
    for fixed in 0..n {
        // iterate `value` over subsets of `fixed`
        let mut value = fixed;
        loop {
            let free: Vec<usize> = (0..k).filter(|j| fixed >> j & 1 == 0).collect();
            let face: Vec<usize> = (0..1usize << free.len())
                .map(|s| {
                    let b = free.iter().enumerate().fold(value, |acc, (i, &j)| acc | (((s >> i) & 1) << j));
                    corners[b]
                })
                .collect();
            out.push(canonical_orientation(&face));
            if value == 0 {
                break;
            }
            value = (value - 1) & fixed;
        }
    }
    out
}

/// `subset` (sorted) is the vertex set of a face of the cube `corners`.
fn is_face_pattern(corners: &[usize], subset: &[usize]) -> bool {
    let positions: Vec<usize> =
        corners.iter().enumerate().filter(|(_, v)| subset.binary_search(v).is_ok()).map(|(b, _)| b).collect();
    if positions.len() != subset.len() || positions.is_empty() {
        return false;
    }
    let and = positions.iter().fold(usize::MAX, |a, &b| a & b);
    let or = positions.iter().fold(0, |a, &b| a | b);
    positions.len() == 1 << (and ^ or).count_ones()
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::CubeComplex;

    pub fn segment() -> CubeComplex {
        CubeComplex::parse("cube x y\n").unwrap()
    }

    pub fn square() -> CubeComplex {
        CubeComplex::parse("cube x a b w\n").unwrap()
    }

    /// Two squares glued along the edge x–b, with x at the inner corner.
    pub fn l_shape() -> CubeComplex {
        CubeComplex::parse("cube x a b p\ncube x c b q\n").unwrap()
    }

    pub fn cube3() -> CubeComplex {
        CubeComplex::parse("cube v0 v1 v2 v3 v4 v5 v6 v7\n").unwrap()
    }

    pub fn unfilled_square() -> CubeComplex {
        CubeComplex::parse("cube a b\ncube b c\ncube c d\ncube d a\n").unwrap()
    }

    /// Rows `0..=rows`, columns `0..=cols` of the unit square grid.
    pub fn grid(rows: usize, cols: usize) -> CubeComplex {
        let mut text = String::new();
        for i in 0..rows {
            for j in 0..cols {
                text += &format!("cube g{i}{j} g{}{j} g{i}{} g{}{}\n", i + 1, j + 1, i + 1, j + 1);
            }
        }
        CubeComplex::parse(&text).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn closure_counts() {
        assert_eq!(square().cell_counts(), vec![4, 4, 1]);
        assert_eq!(l_shape().cell_counts(), vec![6, 7, 2]);
        assert_eq!(cube3().cell_counts(), vec![8, 12, 6, 1]);
        assert_eq!(segment().cell_counts(), vec![2, 1]);
    }

    #[test]
    fn orientation_does_not_matter() {
        let a = CubeComplex::parse("cube x a b w\n").unwrap();
        let b = CubeComplex::parse("cube w b a x\n").unwrap();
        let c = CubeComplex::parse("cube a w x b\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn corner_errors() {
        assert_eq!(
            CubeComplex::parse("cube a b c\n"),
            Err(CubeError::Parse { line: 1, message: "3 corners is not a power of two".into() })
        );
        assert!(matches!(CubeComplex::parse("# x\ncube a a\n"), Err(CubeError::Parse { line: 2, .. })));
        assert!(matches!(CubeComplex::parse("square a b c d\n"), Err(CubeError::Parse { line: 1, .. })));
    }

    #[test]
    fn gluing_errors() {
        // two squares sharing the diagonal pair a, w only
        let err = CubeComplex::parse("cube a b c w\ncube a p q w\n").unwrap_err();
        assert!(matches!(err, CubeError::Parse { line: 1 | 2, .. }), "{err:?}");
        // same four vertices, different square structure
        let err = CubeComplex::parse("cube a b c d\ncube a b d c\ncube a c b d\n").unwrap_err();
        assert!(matches!(err, CubeError::Parse { .. }), "{err:?}");
        // squares meeting in a vertex are fine
        assert!(CubeComplex::parse("cube a b c d\ncube d e f g\n").is_ok());
    }

    #[test]
    fn distances() {
        let sq = square();
        assert_eq!(sq.distance(sq.vertex("x").unwrap(), sq.vertex("w").unwrap()), Ok(2));
        let c = cube3();
        assert_eq!(c.distance(c.vertex("v0").unwrap(), c.vertex("v7").unwrap()), Ok(3));
        let l = l_shape();
        assert_eq!(l.distance(l.vertex("p").unwrap(), l.vertex("q").unwrap()), Ok(2));
        assert_eq!(l.distance(l.vertex("a").unwrap(), l.vertex("c").unwrap()), Ok(2));
        let two = CubeComplex::parse("cube a b\ncube c d\n").unwrap();
        assert!(matches!(two.distance(0, 3), Err(CubeError::Disconnected { .. })));
        assert!(matches!(two.vertex("zz"), Err(CubeError::UnknownVertex(_))));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(square().euler_char(), 1);
        assert_eq!(l_shape().euler_char(), 1);
        let ring = CubeComplex::parse(
            "cube g00 g10 g01 g11\ncube g01 g11 g02 g12\ncube g02 g12 g03 g13\n\
             cube g10 g20 g11 g21\ncube g12 g22 g13 g23\n\
             cube g20 g30 g21 g31\ncube g21 g31 g22 g32\ncube g22 g32 g23 g33\n",
        )
        .unwrap();
        assert_eq!(ring.euler_char(), 0);
    }

    #[test]
    fn text_round_trip() {
        let l = l_shape();
        assert_eq!(CubeComplex::parse(&l.to_text()).unwrap(), l);
    }
}
