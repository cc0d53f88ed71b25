mod common;

use std::collections::{HashMap, VecDeque};

use common::*;
use cubegrowth::generators::{
    graph_product_ball, normal_form, product_ball, torus_ball, Letter, NormalWord, Order, ProductGraph,
};
use cubegrowth::growth::{davis_growth_closed, growth_row_from};
use proptest::prelude::*;

/// Random commutation graphs on up to four generators.
fn product_graph() -> impl Strategy<Value = ProductGraph> {
    (1usize..=4, any::<u8>(), any::<bool>()).prop_map(|(n, edges, infinite)| {
        let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let order = if infinite { Order::Infinite } else { Order::Two };
        let mut e = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if edges >> bit & 1 == 1 {
                    e.push((names[i].clone(), names[j].clone()));
                }
                bit += 1;
            }
        }
        ProductGraph::new(names.into_iter().map(|n| (n, order)).collect(), &e).unwrap()
    })
}

fn word(g: &ProductGraph) -> impl Strategy<Value = Vec<Letter>> {
    let letters = g.letters();
    prop::collection::vec(prop::sample::select(letters), 0..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_idempotent_and_short((g, w) in product_graph().prop_flat_map(|g| { let w = word(&g); (Just(g), w) })) {
        let nf = normal_form(&w, &g).unwrap();
        prop_assert!(nf.len() <= w.len());
        prop_assert_eq!(normal_form(nf.letters(), &g).unwrap(), nf.clone());
        // appending a letter and its inverse is the identity
        for s in g.letters() {
            let inv = Letter::new(s.gen, s.inv ^ !g.is_involution(s.gen));
            prop_assert_eq!(nf.times(s, &g).times(inv, &g), nf.clone());
        }
    }

    #[test]
    fn normal_length_is_cayley_depth(g in product_graph()) {
        // independent BFS over the Cayley graph, without using word lengths
        let radius = 5;
        let mut depth: HashMap<NormalWord, usize> = HashMap::from([(NormalWord::identity(), 0)]);
        let mut queue = VecDeque::from([NormalWord::identity()]);
        while let Some(w) = queue.pop_front() {
            let d = depth[&w];
            if d == radius {
                continue;
            }
            for s in g.letters() {
                let next = w.times(s, &g);
                if !depth.contains_key(&next) {
                    depth.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        for (w, d) in &depth {
            prop_assert_eq!(w.len(), *d);
        }
    }

    #[test]
    fn generated_balls_are_npc_inside(g in product_graph()) {
        let b = graph_product_ball(&g, 3).unwrap();
        let c = b.complex();
        for v in 0..c.vertex_count() {
            if b.is_star_complete(v) {
                prop_assert!(c.npc_violation_at(v).is_none());
            }
        }
        let inner: Vec<usize> = (0..c.vertex_count()).filter(|&v| b.base_distance(v) <= 1).collect();
        prop_assert!(c.median_violation_among(&inner).is_none());
    }

    #[test]
    fn torus_distances_are_l1(n in 1usize..=3, k in 2usize..5, picks in prop::collection::vec(any::<prop::sample::Index>(), 2)) {
        let b = torus_ball(n, k, 4).unwrap();
        let c = b.complex();
        let (u, v) = (picks[0].index(c.vertex_count()), picks[1].index(c.vertex_count()));
        let coords = |s: &str| -> Vec<i64> {
            s.trim_matches(|ch| ch == '(' || ch == ')').split(',').map(|p| p.parse().unwrap()).collect()
        };
        let l1: i64 = coords(c.name(u)).iter().zip(coords(c.name(v))).map(|(a, b)| (a - b).abs()).sum();
        prop_assert_eq!(c.distance(u, v).unwrap() as i64, l1);
    }

    #[test]
    fn lift_invariance(n in 1usize..=2, k in 2usize..5) {
        // any vertex of an orbit sees the same row as the lift, to the safe degree
        let b = torus_ball(n, k, 7).unwrap();
        for id in b.orbit_ids() {
            let lift = b.lift(&id).unwrap();
            let row = growth_row_from(&b, lift, b.safe_degree(lift)).unwrap();
            for v in (0..b.complex().vertex_count()).filter(|&v| b.label(v) == id && v != lift) {
                let d = b.safe_degree(v).min(b.safe_degree(lift));
                let other = growth_row_from(&b, v, d).unwrap();
                for (x, y) in row.iter().zip(&other) {
                    prop_assert_eq!(&x[..=d], &y[..]);
                }
            }
        }
    }
}

#[test]
fn davis_sphere_counts_match_closed_form() {
    for (nerve, r) in [(two_points(), 8), (cycle(4), 6), (cycle(5), 7), (octahedron(), 6), (cycle(6), 6)] {
        let g = ProductGraph::racg_from_nerve(&nerve);
        let b = graph_product_ball(&g, r).unwrap();
        let closed = davis_growth_closed(&nerve).unwrap().series(r).unwrap();
        let counts: Vec<usize> = closed.iter().map(|c| c.to_integer().try_into().unwrap()).collect();
        assert_eq!(b.sphere_sizes(), counts);
    }
}

#[test]
fn product_sphere_sizes_convolve() {
    let line = torus_ball(1, 3, 6).unwrap();
    let plane = torus_ball(2, 2, 5).unwrap();
    let p = product_ball(&line, &plane).unwrap();
    let (a, b) = (line.sphere_sizes(), plane.sphere_sizes());
    for k in 0..=p.radius() {
        let want: usize = (0..=k).map(|i| a[i] * b[k - i]).sum();
        assert_eq!(p.sphere_sizes()[k], want, "degree {k}");
    }
}

#[test]
fn dihedral_squared_is_square_tiling() {
    let dihedral = graph_product_ball(&ProductGraph::racg_from_nerve(&two_points()), 6).unwrap();
    let sq = product_ball(&dihedral, &dihedral).unwrap();
    let c4 = graph_product_ball(&ProductGraph::racg_from_nerve(&cycle(4)), 6).unwrap();
    assert_eq!(sq.sphere_sizes(), c4.sphere_sizes());
}
