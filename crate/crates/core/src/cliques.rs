//! Clique enumeration on small graphs given as adjacency sets over `0..n`.

use std::collections::BTreeSet;

/// Maximal cliques by Bron–Kerbosch with pivoting, each sorted, in sorted order.
pub(crate) fn maximal_cliques(adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: BTreeSet<usize> = (0..adj.len()).collect();
    bron_kerbosch(adj, &mut Vec::new(), p, BTreeSet::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = *p.union(&x).max_by_key(|&&u| p.intersection(&adj[u]).count()).unwrap();
    let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(
            adj,
            r,
            p.intersection(&adj[v]).copied().collect(),
            x.intersection(&adj[v]).copied().collect(),
            out,
        );
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Every clique, including the empty one, each sorted.
pub(crate) fn all_cliques(adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().map_or(0, |&l| l + 1);
            for v in start..adj.len() {
                if c.iter().all(|u| adj[*u].contains(&v)) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    #[test]
    fn triangle_with_tail() {
        let adj = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(maximal_cliques(&adj), vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(all_cliques(&adj).len(), 1 + 4 + 4 + 1);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let adj = graph(2, &[]);
        assert_eq!(maximal_cliques(&adj), vec![vec![0], vec![1]]);
        assert_eq!(maximal_cliques(&[]), vec![Vec::<usize>::new()]);
    }
}
