mod common;

use common::{all_graphs, naive_sigma, naive_sigma2, SplitMix};
use maxedge_core::{
    gen_random, gen_two_factor, has_c4, pendant_transform, reduce_mcis, sigma_threshold,
    AnnotatedInstance, Graph, MCISInstance,
};

#[test]
fn pendants_add_one_color_each() {
    let mut rng = SplitMix(2);
    for _ in 0..150 {
        let n = 2 + rng.below(5) as usize;
        let g = rng.graph(n, 8);
        let f: Vec<usize> = (0..g.n()).map(|_| 1 + rng.below(2) as usize).collect();
        let p = f.iter().filter(|&&x| x == 1).count();
        let inst = AnnotatedInstance::new(g.clone(), f.clone(), 0).unwrap();
        let (h, t) = pendant_transform(&inst);
        assert_eq!(t, p);
        assert_eq!(naive_sigma2(&h), naive_sigma(&g, &f) + p, "{g:?} {f:?}");
    }
}

#[test]
fn triangle_with_unit_capacities() {
    let g = Graph::cycle(3);
    assert_eq!(naive_sigma(&g, &[1, 1, 1]), 1);
    let inst = AnnotatedInstance::new(g, vec![1, 1, 1], 1).unwrap();
    let (h, t) = pendant_transform(&inst);
    assert_eq!(h.n(), 6);
    assert_eq!(t, 4);
    assert_eq!(naive_sigma2(&h), 4);
}

#[test]
fn reduction_matches_brute_force_on_tiny_instances() {
    // every graph on up to 3 vertices with every two-class split
    for n in 2..=3 {
        for g in all_graphs(n) {
            for mask in 1..(1u32 << n) - 1 {
                let class: Vec<usize> = (0..n).map(|v| (mask >> v & 1) as usize).collect();
                let inst = MCISInstance::new(g.clone(), class, 2).unwrap();
                let expected = inst.solve_brute_force().is_some();
                let a = reduce_mcis(&inst);
                assert!(has_c4(&a.graph).is_none());
                let got = sigma_threshold(&a.graph, a.threshold, &a.profile(), 64).unwrap();
                assert_eq!(got, expected, "{g:?} {mask}");
            }
        }
    }
}

#[test]
fn generators_are_seeded() {
    assert_eq!(gen_random(9, 0.3, 42).unwrap(), gen_random(9, 0.3, 42).unwrap());
    for seed in 0..30 {
        let g = gen_two_factor(8, seed).unwrap();
        assert!(g.is_two_factor());
        assert_eq!(naive_sigma2(&g), 8);
    }
}
