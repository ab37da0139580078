use std::collections::BTreeSet;

use gzcone::defcone::{
    contains, decompose_in_clique_basis, generate_irredundant_description, generate_redundant_description,
    simplex_heights, HeightVector,
};
use gzcone::graphcore::vertex_pairs;
use gzcone::polyoracle::{
    cones_equal, equation_matrix, extreme_rays, extreme_rays_of, facet_flags, inequality_facet_flags,
    is_facet_by_rays, positively_parallel, project_to_span,
};
use gzcone::{Graph, Integer, MatrixQ, Rational};
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graphs_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (1..=n_max).flat_map(|n| (0..1u64 << vertex_pairs(n).len()).map(move |m| Graph::from_edge_mask(n, m)))
}

fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a rational vector to coprime integers, same direction.
fn integral(v: &[Rational]) -> Vec<Integer> {
    let l = v.iter().fold(Integer::from(1), |l, x| l.lcm(x.denom()));
    let ints: Vec<Integer> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(Integer::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// Extreme rays by brute force: every set of `dim - 1` constraints with a
/// one-dimensional solution space gives a candidate direction, kept when it
/// satisfies everything. Needs `dim >= 2`.
fn brute_force_rays(normals: &[Vec<Integer>], dim: usize) -> BTreeSet<Vec<Integer>> {
    let mut rays = BTreeSet::new();
    let k = normals.len();
    for subset in 0u32..1 << k {
        if subset.count_ones() as usize != dim - 1 {
            continue;
        }
        let rows: Vec<Vec<Rational>> = (0..k)
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| normals[i].iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let kernel = MatrixQ::from_rows(dim, rows).unwrap().kernel();
        if kernel.len() != 1 {
            continue;
        }
        let v = integral(&kernel[0]);
        for sign in [1, -1] {
            let w: Vec<Integer> = v.iter().map(|x| x * sign).collect();
            if normals.iter().all(|a| !dot(a, &w).is_negative()) {
                rays.insert(w);
            }
        }
    }
    rays
}

#[test]
fn rays_satisfy_every_constraint_and_facets_are_tight() {
    for g in graphs_up_to(4) {
        let irr = generate_irredundant_description(&g).unwrap();
        let rep = project_to_span(&g, &irr).unwrap();
        let rays = extreme_rays(&rep).unwrap();
        for r in &rays {
            assert!(rep.constraints.iter().all(|(_, a)| !dot(a, r).is_negative()));
            assert!(contains(&irr, &rep.heights_of(r)).unwrap().in_cone);
        }
        for (_, a) in &rep.constraints {
            assert!(is_facet_by_rays(&rep, &rays, a), "graph {:#x} on {}", g.edge_mask(), g.n());
        }
    }
}

#[test]
fn ray_and_lp_facet_tests_agree_on_redundant_descriptions() {
    for g in graphs_up_to(4) {
        let red = generate_redundant_description(&g).unwrap();
        let rep = project_to_span(&g, &red).unwrap();
        let rays = extreme_rays(&rep).unwrap();
        let lp = inequality_facet_flags(&red).unwrap();
        let indices = rep.facet_indices();
        let mut seen: Vec<&Vec<Integer>> = Vec::new();
        for (i, (tag, a)) in rep.constraints.iter().enumerate() {
            let by_rays = is_facet_by_rays(&rep, &rays, a) && !seen.iter().any(|b| positively_parallel(a, b));
            assert_eq!(by_rays, lp[i], "{tag} on graph {:#x}", g.edge_mask());
            assert_eq!(by_rays, indices.contains(&i));
            if by_rays {
                seen.push(a);
            }
        }
    }
}

#[test]
fn rays_do_not_depend_on_constraint_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in [Graph::complete(4), Graph::cycle(5), Graph::complete(3), Graph::path(5)] {
        let irr = generate_irredundant_description(&g).unwrap();
        let rep = project_to_span(&g, &irr).unwrap();
        let mut normals: Vec<Vec<Integer>> = rep.constraints.iter().map(|(_, a)| a.clone()).collect();
        let expected = extreme_rays_of(&normals, rep.dim()).unwrap();
        for _ in 0..5 {
            normals.shuffle(&mut rng);
            assert_eq!(extreme_rays_of(&normals, rep.dim()).unwrap(), expected);
        }
    }
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn triangle_free_cones_are_spanned_by_their_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut family = Vec::new();
    for n in 2..=6 {
        family.push(Graph::path(n));
        family.push(random_tree(n, &mut rng));
        if n >= 4 {
            family.push(Graph::cycle(n));
        }
    }
    // a few triangle-free graphs drawn at random
    while family.len() < 30 {
        let n = rng.gen_range(3..=6);
        let g = Graph::from_edge_mask(n, rng.gen_range(0..1u64 << vertex_pairs(n).len()));
        if g.is_triangle_free() {
            family.push(g);
        }
    }
    for g in family {
        let irr = generate_irredundant_description(&g).unwrap();
        let rep = project_to_span(&g, &irr).unwrap();
        let rays = extreme_rays(&rep).unwrap();
        assert_eq!(rays.len(), g.edges().len());
        for r in &rays {
            let h = rep.heights_of(r);
            let hit = g.edges().iter().any(|&(u, v)| {
                let edge = simplex_heights::<Rational>(gzcone::SubsetMask::pair(u, v), g.n());
                h == edge
            });
            assert!(hit, "ray {r:?} is not an edge segment");
        }
    }
}

#[test]
fn the_triangle_has_a_ray_off_the_simplex_cone() {
    let g = Graph::complete(3);
    let irr = generate_irredundant_description(&g).unwrap();
    let rep = project_to_span(&g, &irr).unwrap();
    let rays = extreme_rays(&rep).unwrap();
    assert_eq!(rep.dim(), 4);
    assert_eq!(rays.len(), 5);
    let off = rays.iter().filter(|r| {
        let y = decompose_in_clique_basis(&g, &rep.heights_of(r)).unwrap();
        y.values().any(|c| c.is_negative())
    });
    assert_eq!(off.count(), 1);
}

#[test]
fn cone_equality_is_symmetric_and_detects_changes() {
    for g in graphs_up_to(4) {
        let red = generate_redundant_description(&g).unwrap();
        let irr = generate_irredundant_description(&g).unwrap();
        assert!(cones_equal(&irr, &irr).unwrap().equal);
        assert_eq!(cones_equal(&red, &irr).unwrap().equal, cones_equal(&irr, &red).unwrap().equal);
        if let Some(f) = irr.inequalities.first().cloned() {
            let mut smaller = irr.clone();
            smaller.equations.push(f.clone());
            smaller.inequalities.retain(|x| x.tag() != f.tag());
            assert!(!cones_equal(&irr, &smaller).unwrap().equal);
            assert!(!cones_equal(&smaller, &irr).unwrap().equal);
        }
    }
}

#[test]
fn four_cycle_has_eight_independent_equations() {
    let irr = generate_irredundant_description(&Graph::cycle(4)).unwrap();
    assert_eq!(equation_matrix(&irr).unwrap().rank(), 8);
    let h = HeightVector::<Rational>::zeros(4);
    assert!(contains(&irr, &h).unwrap().in_cone);
}

#[test]
fn facet_flags_keep_first_of_parallel_normals() {
    let n = |v: &[i64]| v.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
    let normals = vec![n(&[1, 0]), n(&[0, 1]), n(&[2, 0]), n(&[1, 1])];
    assert_eq!(facet_flags(&normals), vec![true, true, false, false]);
}

fn normals_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=4).prop_flat_map(|dim| (Just(dim), prop::collection::vec(prop::collection::vec(-3i64..=3, dim), dim..=7)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn double_description_matches_brute_force((dim, rows) in normals_strategy()) {
        let normals: Vec<Vec<Integer>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
        let as_q: Vec<Vec<Rational>> = normals
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let pointed = MatrixQ::from_rows(dim, as_q).unwrap().rank() == dim;
        match extreme_rays_of(&normals, dim) {
            Ok(rays) => {
                prop_assert!(pointed);
                let expected: Vec<Vec<Integer>> = brute_force_rays(&normals, dim).into_iter().collect();
                prop_assert_eq!(rays, expected);
            }
            Err(_) => prop_assert!(!pointed),
        }
    }
}
