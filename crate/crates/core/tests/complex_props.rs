mod common;

use std::collections::BTreeMap;

use common::*;
use cubegrowth::growth::{coefficient, coefficient_matrix, coefficients_at, star_solver, sum_coefficients, verify_finite};
use cubegrowth::{CubeComplex, RationalFunction};
use proptest::prelude::*;

/// Random trees, grids, and products of small pieces.
fn complex() -> impl Strategy<Value = CubeComplex> {
    prop_oneof![
        (2usize..12, 0usize..50).prop_map(|(n, s)| scrambled_tree(n, s)),
        (1usize..4, 1usize..4).prop_map(|(r, c)| grid(r, c)),
        (2usize..5, 1usize..3).prop_map(|(n, r)| path(n).product(&grid(r, 1))),
        (1usize..5).prop_map(book),
        (1usize..4).prop_map(cube),
    ]
}

fn solve_at(k: &CubeComplex, name: &str) -> BTreeMap<String, RationalFunction> {
    star_solver(k, k.vertex(name).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_closed_form(c in complex(), pick in any::<prop::sample::Index>()) {
        let x = pick.index(c.vertex_count());
        let star = c.star(x);
        prop_assert_eq!(solve_at(&star, c.name(x)), coefficients_at(&c, x).unwrap());
    }

    #[test]
    fn inclusion_exclusion(c in complex(), pick in any::<prop::sample::Index>()) {
        let x = pick.index(c.vertex_count());
        let s = c.star(x);
        let name = c.name(x);
        let sx = s.vertex(name).unwrap();
        let whole = solve_at(&s, name);
        for &z in s.neighbors(sx) {
            let (a, b, cc) = s.star_edge_decomposition(sx, z).unwrap();
            let parts = [solve_at(&a, name), solve_at(&b, name), solve_at(&cc, name)];
            let get = |m: &BTreeMap<String, RationalFunction>, v: &str| m.get(v).cloned().unwrap_or_else(RationalFunction::zero);
            for v in s.names() {
                let rhs = &(&get(&parts[0], v) + &get(&parts[1], v)) - &get(&parts[2], v);
                prop_assert_eq!(&whole[v], &rhs);
            }
        }
    }

    #[test]
    fn inversion_and_corollaries(c in complex()) {
        let r = verify_finite(&c).unwrap();
        prop_assert!(r.all_pass(), "{}", r.to_text());
    }

    #[test]
    fn coefficient_matrix_is_symmetric(c in complex()) {
        prop_assert!(coefficient_matrix(&c).unwrap().is_symmetric());
    }

    #[test]
    fn sum_rule(c in complex(), pick in any::<prop::sample::Index>()) {
        let x = pick.index(c.vertex_count());
        prop_assert!(sum_coefficients(&c, x).unwrap().1);
    }

    #[test]
    fn product_rule(p in complex(), q in (1usize..3).prop_map(cube), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let prod = p.product(&q);
        let (x, y) = (i.index(p.vertex_count()), j.index(p.vertex_count()));
        for a in 0..q.vertex_count() {
            for b in 0..q.vertex_count() {
                let xa = prod.vertex(&format!("({},{})", p.name(x), q.name(a))).unwrap();
                let yb = prod.vertex(&format!("({},{})", p.name(y), q.name(b))).unwrap();
                let lhs = coefficient(&prod, xa, yb).unwrap();
                prop_assert_eq!(lhs, &coefficient(&p, x, y).unwrap() * &coefficient(&q, a, b).unwrap());
            }
        }
    }

    #[test]
    fn product_distances_add(p in complex(), q in complex(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        prop_assume!(p.vertex_count() * q.vertex_count() <= 200);
        let prod = p.product(&q);
        let (x, y) = (i.index(p.vertex_count()), j.index(p.vertex_count()));
        let (a, b) = (j.index(q.vertex_count()), i.index(q.vertex_count()));
        let xa = prod.vertex(&format!("({},{})", p.name(x), q.name(a))).unwrap();
        let yb = prod.vertex(&format!("({},{})", p.name(y), q.name(b))).unwrap();
        prop_assert_eq!(prod.distance(xa, yb).unwrap(), p.distance(x, y).unwrap() + q.distance(a, b).unwrap());
    }
}

#[test]
fn corpus_is_cat0() {
    for (name, c) in corpus() {
        assert!(c.is_cat0(), "{name}");
        assert_eq!(c.euler_char(), 1, "{name}");
    }
}

#[test]
fn text_round_trip() {
    for (name, c) in corpus() {
        assert_eq!(CubeComplex::parse(&c.to_text()).unwrap(), c, "{name}");
    }
}
