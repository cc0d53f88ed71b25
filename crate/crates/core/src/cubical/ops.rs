//! Stars, links, spanned cubes, products and star decompositions.

use crate::exactalg::Polynomial;
use crate::simplicial::SimplicialComplex;

use super::{CubeComplex, CubeError, CubeId};

impl CubeComplex {
    /// All cubes containing `x`, with their faces.
    pub fn star(&self, x: usize) -> CubeComplex {
        self.subcomplex(self.cubes_containing(x).iter().copied())
    }

    /// Every maximal cube contains `x`.
    pub fn is_star_of(&self, x: usize) -> bool {
        self.maximal_cubes().into_iter().all(|id| self.cube_contains(id, x))
    }

    /// Cubes containing cube `id`, itself included.
    pub fn cofaces(&self, id: CubeId) -> Vec<CubeId> {
        let set = self.cube_vertices(id);
        self.cubes_containing(set[0])
            .iter()
            .copied()
            .filter(|&d| {
                let ds = self.cube_vertices(d);
                ds.len() >= set.len() && set.iter().all(|v| ds.binary_search(v).is_ok())
            })
            .collect()
    }

    /// Link of a cube: one vertex per cube of one dimension higher containing it
    /// (named by the corners it adds), one simplex per higher coface.
    pub fn cube_link(&self, id: CubeId) -> SimplicialComplex {
        let dim = self.cube(id).dim();
        let cofaces = self.cofaces(id);
        let base = self.cube_vertices(id);
        let label = |d: CubeId| -> String {
            self.cube_vertices(d).iter().filter(|v| base.binary_search(v).is_err()).map(|&v| self.name(v)).collect::<Vec<_>>().join(",")
        };
        let next: Vec<CubeId> = cofaces.iter().copied().filter(|&d| self.cube(d).dim() == dim + 1).collect();
        SimplicialComplex::new(cofaces.iter().filter(|&&d| self.cube(d).dim() > dim).map(|&d| {
            let ds = self.cube_vertices(d);
            next.iter()
                .copied()
                .filter(|&e| self.cube_vertices(e).iter().all(|v| ds.binary_search(v).is_ok()))
                .map(label)
                .collect::<Vec<_>>()
        }))
    }

    /// Link of a vertex; its vertices are named by the neighbors of `x`.
    pub fn vertex_link(&self, x: usize) -> SimplicialComplex {
        self.cube_link(self.find_cube(&[x]).expect("every vertex is a 0-cube"))
    }

    /// f-polynomial of the link of cube `id`, counting cofaces by codimension:
    /// a coface of dimension `dim + j` is a `(j-1)`-simplex of the link.
    pub fn link_f_polynomial(&self, id: CubeId) -> Polynomial {
        let dim = self.cube(id).dim();
        let mut counts = vec![0i64; self.dimension() + 1 - dim];
        for d in self.cofaces(id) {
            counts[self.cube(d).dim() - dim] += 1;
        }
        Polynomial::from_ints(&counts)
    }

    /// No two cofaces of `id` determine the same set of codimension-one cofaces.
    pub fn link_is_simplicial(&self, id: CubeId) -> bool {
        let dim = self.cube(id).dim();
        let cofaces = self.cofaces(id);
        let next: Vec<CubeId> = cofaces.iter().copied().filter(|&d| self.cube(d).dim() == dim + 1).collect();
        let mut seen = std::collections::BTreeSet::new();
        cofaces.iter().filter(|&&d| self.cube(d).dim() > dim).all(|&d| {
            let ds = self.cube_vertices(d);
            let s: Vec<CubeId> =
                next.iter().copied().filter(|&e| self.cube_vertices(e).iter().all(|v| ds.binary_search(v).is_ok())).collect();
            s.len() == self.cube(d).dim() - dim && seen.insert(s)
        })
    }

    /// The minimal cube containing `x` and `y`, or `None` when no cube contains both.
    pub fn spanned_cube(&self, x: usize, y: usize) -> Result<Option<CubeId>, CubeError> {
        let candidates: Vec<CubeId> = self.cubes_containing(x).iter().copied().filter(|&c| self.cube_contains(c, y)).collect();
        let Some(&min) = candidates.iter().min_by_key(|&&c| (self.cube(c).dim(), c)) else {
            return Ok(None);
        };
        let core = self.cube_vertices(min);
        for &c in &candidates {
            let cs = self.cube_vertices(c);
            if !core.iter().all(|v| cs.binary_search(v).is_ok()) {
                return Err(CubeError::AmbiguousSpan { x: self.name(x).to_string(), y: self.name(y).to_string() });
            }
        }
        Ok(Some(min))
    }

    /// Cartesian product; vertex `(a, b)` is named `(a,b)`.
    pub fn product(&self, other: &CubeComplex) -> CubeComplex {
        let m = other.vertex_count();
        let names: Vec<String> =
            self.names().iter().flat_map(|a| other.names().iter().map(move |b| format!("({a},{b})"))).collect();
        let mut cubes = Vec::new();
        for ca in self.maximal_cubes() {
            let a = self.cube(ca).corners();
            for cb in other.maximal_cubes() {
                let b = other.cube(cb).corners();
                let mut corners = vec![0; a.len() * b.len()];
                for (j, &vb) in b.iter().enumerate() {
                    for (i, &va) in a.iter().enumerate() {
                        corners[i + j * a.len()] = va * m + vb;
                    }
                }
                cubes.push(corners);
            }
        }
        CubeComplex::from_indexed(names, cubes).expect("product of valid complexes")
    }

    /// Pure of dimension `n`, and every cube of dimension `k < n` has an Eulerian
    /// `(n - k - 1)`-sphere as its link.
    pub fn is_eulerian_manifold(&self, n: usize) -> bool {
        self.maximal_cubes().iter().all(|&id| self.cube(id).dim() == n)
            && (0..self.cubes().len()).filter(|&id| self.cube(id).dim() < n).all(|id| {
                let k = self.cube(id).dim();
                self.cube_link(id).is_eulerian_sphere(n as i64 - k as i64 - 1)
            })
    }

    /// Splits the star of `x` along the edge `[x, z]` into `A`, the star of the edge
    /// (cubes containing `z`), `B`, the cubes at `x` avoiding `z`, and `C = A ∩ B`.
    pub fn star_edge_decomposition(&self, x: usize, z: usize) -> Result<(CubeComplex, CubeComplex, CubeComplex), CubeError> {
        if !self.is_star_of(x) {
            return Err(CubeError::NotAStar { x: self.name(x).to_string() });
        }
        if self.neighbors(x).binary_search(&z).is_err() {
            return Err(CubeError::NotAdjacent { x: self.name(x).to_string(), z: self.name(z).to_string() });
        }
        let at_x = self.cubes_containing(x);
        let a = self.subcomplex(at_x.iter().copied().filter(|&c| self.cube_contains(c, z)));
        let b = self.subcomplex(at_x.iter().copied().filter(|&c| !self.cube_contains(c, z)));
        let common: Vec<CubeId> = a
            .cells()
            .intersection(&b.cells())
            .map(|cell| {
                let ids: Vec<usize> = cell.iter().map(|n| self.vertex(n).expect("cell of a subcomplex")).collect();
                self.find_cube(&ids).expect("cell of a subcomplex")
            })
            .collect();
        let c = self.subcomplex(common);
        Ok((a, b, c))
    }
}
