//! Abstract simplicial complexes with the empty face: links, joins, f-polynomials,
//! the flag condition and Eulerian-sphere recognition.
//!
//! A complex is stored by its facets. Faces are enumerated on demand from the
//! downward closure and cached. Vertex identifiers are opaque strings kept in
//! lexicographic order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num::{BigRational, Zero};
use thiserror::Error;

use crate::cliques::maximal_cliques;
use crate::exactalg::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Vec<String> },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A face, as a sorted list of vertex identifiers. The empty list is the empty face.
pub type Face = Vec<String>;

#[derive(Clone, Default)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    facets: BTreeSet<Face>,
    faces: OnceLock<BTreeSet<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`; non-maximal inputs are dropped.
    pub fn new<F, V>(facets: F) -> Self
    where
        F: IntoIterator,
        F::Item: IntoIterator<Item = V>,
        V: Into<String>,
    {
        let mut all: Vec<Face> = facets
            .into_iter()
            .map(|f| {
                let s: BTreeSet<String> = f.into_iter().map(Into::into).collect();
                s.into_iter().collect()
            })
            .collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept: Vec<Face> = Vec::new();
        for f in all {
            if !kept.iter().any(|k| is_subset(&f, k)) {
                kept.push(f);
            }
        }
        let vertices = kept.iter().flatten().cloned().collect();
        let mut facets: BTreeSet<Face> = kept.into_iter().collect();
        if facets.is_empty() {
            facets.insert(Vec::new());
        }
        SimplicialComplex { vertices, facets, faces: OnceLock::new() }
    }

    /// The complex `{∅}` containing only the empty face.
    pub fn empty() -> Self {
        Self::new(Vec::<Vec<String>>::new())
    }

    /// The flag complex of a graph: faces are the cliques.
    pub fn clique_complex<V: Into<String>>(vertices: impl IntoIterator<Item = V>, edges: &[(String, String)]) -> Self {
        let names: Vec<String> = vertices.into_iter().map(Into::into).collect::<BTreeSet<_>>().into_iter().collect();
        let idx: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut adj = vec![BTreeSet::new(); names.len()];
        for (a, b) in edges {
            let (i, j) = (idx[a.as_str()], idx[b.as_str()]);
            if i != j {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        Self::new(maximal_cliques(&adj).into_iter().map(|c| c.into_iter().map(|i| names[i].clone()).collect::<Vec<_>>()))
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    /// Every face, including the empty one.
    pub fn faces(&self) -> &BTreeSet<Face> {
        self.faces.get_or_init(|| {
            let mut out = BTreeSet::new();
            for f in &self.facets {
                for mask in 0u64..(1u64 << f.len()) {
                    out.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.clone()).collect());
                }
            }
            out
        })
    }

    /// Dimension of the largest face; `-1` for `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self, dim: i64) -> bool {
        self.facets.iter().all(|f| f.len() as i64 - 1 == dim)
    }

    pub fn is_face(&self, sigma: &[String]) -> bool {
        let s = sorted(sigma);
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    /// `f_K(t) = sum over faces of t^(dim + 1)`; always has constant term 1.
    pub fn f_polynomial(&self) -> Polynomial {
        let mut counts = vec![0i64; (self.dimension() + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        Polynomial::from_ints(&counts)
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dimension() + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn link(&self, sigma: &[String]) -> Result<SimplicialComplex, SimplicialError> {
        let s = sorted(sigma);
        let cofacets: Vec<Face> = self.facets.iter().filter(|f| is_subset(&s, f)).cloned().collect();
        if cofacets.is_empty() {
            return Err(SimplicialError::NotAFace { face: s });
        }
        Ok(Self::new(cofacets.into_iter().map(|f| f.into_iter().filter(|v| s.binary_search(v).is_err()).collect::<Vec<_>>())))
    }

    /// Faces are unions of a face of `self` and a face of `other`. Overlapping
    /// vertex names are disambiguated with `a:`/`b:` prefixes.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let (a, b) = self.disjoint_pair(other);
        Self::new(a.facets.iter().flat_map(|f| b.facets.iter().map(move |g| f.iter().chain(g).cloned().collect::<Vec<_>>())))
    }

    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let (a, b) = self.disjoint_pair(other);
        Self::new(a.facets.iter().chain(b.facets.iter()).cloned())
    }

    fn disjoint_pair(&self, other: &SimplicialComplex) -> (SimplicialComplex, SimplicialComplex) {
        if self.vertices.is_disjoint(&other.vertices) {
            (self.clone(), other.clone())
        } else {
            (self.rename(|v| format!("a:{v}")), other.rename(|v| format!("b:{v}")))
        }
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> SimplicialComplex {
        Self::new(self.facets.iter().map(|face| face.iter().map(|v| f(v)).collect::<Vec<_>>()))
    }

    /// Vertex pairs spanning an edge.
    pub fn edges(&self) -> BTreeSet<(String, String)> {
        self.faces().iter().filter(|f| f.len() == 2).map(|f| (f[0].clone(), f[1].clone())).collect()
    }

    /// A clique of the 1-skeleton that is not a face, if any.
    pub fn flag_violation(&self) -> Option<Face> {
        let names: Vec<&String> = self.vertices.iter().collect();
        let idx: BTreeMap<&String, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let mut adj = vec![BTreeSet::new(); names.len()];
        for (a, b) in self.edges() {
            adj[idx[&a]].insert(idx[&b]);
            adj[idx[&b]].insert(idx[&a]);
        }
        maximal_cliques(&adj)
            .into_iter()
            .map(|c| c.into_iter().map(|i| names[i].clone()).collect::<Vec<_>>())
            .find(|c| !self.is_face(c))
    }

    /// Every set of pairwise adjacent vertices spans a face.
    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Unreduced Euler characteristic `sum over nonempty faces of (-1)^dim`; 0 for `{∅}`.
    pub fn euler_char(&self) -> i64 {
        self.faces().iter().filter(|f| !f.is_empty()).map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// Pure of dimension `m`, and every face (including ∅) has the Euler
    /// characteristic of a sphere of dimension `m - dim σ - 1` as its link.
    pub fn is_eulerian_sphere(&self, m: i64) -> bool {
        if !self.is_pure(m) {
            return false;
        }
        self.faces().iter().all(|sigma| {
            let j = m - sigma.len() as i64;
            let link = self.link(sigma).expect("enumerated face");
            link.euler_char() == sphere_euler_char(j)
        })
    }

    /// Exact polynomial identity `f(t - 1) = (-1)^n f(-t)`.
    pub fn dehn_sommerville_check(&self, n: u32) -> bool {
        let f = self.f_polynomial();
        let lhs = f.compose(&Polynomial::from_ints(&[-1, 1]));
        let mut rhs = f.compose(&Polynomial::from_ints(&[0, -1]));
        if n % 2 == 1 {
            rhs = -rhs;
        }
        lhs == rhs
    }

    /// Parses `facet v1 ... vk` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<SimplicialComplex, SimplicialError> {
        let mut facets = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("facet") => {
                    let f: Vec<String> = words.map(String::from).collect();
                    let uniq: BTreeSet<&String> = f.iter().collect();
                    if uniq.len() != f.len() {
                        return Err(SimplicialError::Parse {
                            line: no + 1,
                            message: "facet repeats a vertex".into(),
                        });
                    }
                    facets.push(f);
                }
                Some(other) => {
                    return Err(SimplicialError::Parse {
                        line: no + 1,
                        message: format!("expected `facet`, found `{other}`"),
                    })
                }
                None => unreachable!(),
            }
        }
        Ok(Self::new(facets))
    }

    pub fn to_text(&self) -> String {
        self.facets.iter().filter(|f| !f.is_empty()).map(|f| format!("facet {}\n", f.join(" "))).collect()
    }
}

/// `χ(S^j) = 1 + (-1)^j`, with `χ(S^{-1}) = 0` for the empty sphere `{∅}`.
pub fn sphere_euler_char(j: i64) -> i64 {
    if j < -1 {
        return i64::MIN;
    }
    1 + if j.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// `Σ f(-1/2)`: the value at `t^2 = -1` of the diagonal entry `f(t^2/(1-t^2))`.
pub fn eval_at_minus_half(f: &Polynomial) -> BigRational {
    let x = BigRational::new((-1).into(), 2.into());
    if f.is_zero() {
        BigRational::zero()
    } else {
        f.eval(&x)
    }
}

fn sorted(sigma: &[String]) -> Face {
    let s: BTreeSet<String> = sigma.iter().cloned().collect();
    s.into_iter().collect()
}

/// Both inputs sorted.
fn is_subset(a: &[String], b: &[String]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.facets.iter()).finish()
    }
}
