//! Shared test corpus.
#![allow(dead_code)]

use cubegrowth::{CubeComplex, RationalFunction, SimplicialComplex};

pub fn cx(text: &str) -> CubeComplex {
    CubeComplex::parse(text).unwrap()
}

pub fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::from_ints(num, den)
}

pub fn nerve(text: &str) -> SimplicialComplex {
    SimplicialComplex::parse(text).unwrap()
}

pub fn segment() -> CubeComplex {
    cx("cube x y\n")
}

pub fn square() -> CubeComplex {
    cx("cube x a b w\n")
}

/// Two squares sharing the edge x–b.
pub fn l_shape() -> CubeComplex {
    cx("cube x a b p\ncube x c b q\n")
}

pub fn cube(n: usize) -> CubeComplex {
    let corners: Vec<String> = (0..1usize << n).map(|i| format!("v{i:0w$b}", w = n.max(1))).collect();
    cx(&format!("cube {}\n", corners.join(" ")))
}

/// `rows × cols` unit squares.
pub fn grid(rows: usize, cols: usize) -> CubeComplex {
    let mut text = String::new();
    for i in 0..rows {
        for j in 0..cols {
            text += &format!("cube g{i}_{j} g{}_{j} g{i}_{} g{}_{}\n", i + 1, j + 1, i + 1, j + 1);
        }
    }
    cx(&text)
}

/// Tree on `n` vertices with parent of `i` given by `parent(i) < i`.
pub fn tree(n: usize, parent: impl Fn(usize) -> usize) -> CubeComplex {
    let text: String = (1..n).map(|i| format!("cube t{i:02} t{:02}\n", parent(i))).collect();
    cx(&text)
}

pub fn path(n: usize) -> CubeComplex {
    tree(n, |i| i - 1)
}

/// A small deterministic family of irregular trees.
pub fn scrambled_tree(n: usize, seed: usize) -> CubeComplex {
    tree(n, |i| (i * i * (seed * 2 + 31) + 7 * seed) % i)
}

/// `pages` squares sharing one edge.
pub fn book(pages: usize) -> CubeComplex {
    cx(&(0..pages).map(|p| format!("cube x z a{p} b{p}\n")).collect::<String>())
}

/// Finite CAT(0) complexes for the exact pipeline.
pub fn corpus() -> Vec<(String, CubeComplex)> {
    let mut out = vec![
        ("segment".to_string(), segment()),
        ("square".into(), square()),
        ("L-shape".into(), l_shape()),
        ("3-cube".into(), cube(3)),
        ("4-cube".into(), cube(4)),
        ("path-15".into(), path(15)),
        ("star-tree-7".into(), tree(7, |_| 0)),
        ("2x3-grid".into(), grid(2, 3)),
        ("3x3-grid".into(), grid(3, 3)),
        ("segment x L-shape".into(), segment().product(&l_shape())),
        ("book-3".into(), book(3)),
        ("square+tail".into(), cx("cube x a b w\ncube w u\ncube u v\n")),
    ];
    for (n, seed) in [(5, 1), (8, 2), (11, 3), (15, 4)] {
        out.push((format!("tree-{n}-{seed}"), scrambled_tree(n, seed)));
    }
    out
}

pub fn octahedron() -> SimplicialComplex {
    let mut text = String::new();
    for a in ["a", "d"] {
        for b in ["b", "e"] {
            for c in ["c", "f"] {
                text += &format!("facet {a} {b} {c}\n");
            }
        }
    }
    nerve(&text)
}

pub fn cycle(n: usize) -> SimplicialComplex {
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    nerve(&(0..n).map(|i| format!("facet {} {}\n", names[i], names[(i + 1) % n])).collect::<String>())
}

pub fn two_points() -> SimplicialComplex {
    nerve("facet a\nfacet b\n")
}
