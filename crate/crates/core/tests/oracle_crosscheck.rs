mod common;

use common::{all_graphs, naive_sigma, naive_sigma2, SplitMix};
use maxedge_core::{sigma_exact, sigma_threshold, verify_coloring, Graph, ValidityProfile};

const LIMIT: usize = 15;

#[test]
fn small_named_graphs() {
    let two = ValidityProfile::TWO;
    assert_eq!(sigma_exact(&Graph::complete(4), &two, LIMIT).unwrap().sigma, 3);
    assert_eq!(naive_sigma2(&Graph::complete(4)), 3);
    assert_eq!(sigma_exact(&Graph::cycle(5), &two, LIMIT).unwrap().sigma, 5);
    assert_eq!(sigma_exact(&Graph::star(3), &two, LIMIT).unwrap().sigma, 2);
    assert_eq!(sigma_exact(&Graph::complete(5), &two, LIMIT).unwrap().sigma, naive_sigma2(&Graph::complete(5)));
}

#[test]
fn exact_matches_naive_on_all_graphs_up_to_five_vertices() {
    let two = ValidityProfile::TWO;
    for n in 0..=5 {
        for g in all_graphs(n) {
            let r = sigma_exact(&g, &two, LIMIT).unwrap();
            assert_eq!(r.sigma, naive_sigma2(&g), "{g:?}");
            let check = verify_coloring(&g, &r.witness, &two).unwrap();
            assert!(check.valid);
            assert_eq!(check.colors_used, r.sigma);
        }
    }
}

#[test]
fn threshold_matches_naive_on_random_graphs() {
    let mut rng = SplitMix(11);
    let two = ValidityProfile::TWO;
    for _ in 0..150 {
        let n = 2 + rng.below(7) as usize;
        let g = rng.graph(n, 11);
        let s = naive_sigma2(&g);
        for k in 0..=g.m() + 1 {
            assert_eq!(sigma_threshold(&g, k, &two, LIMIT).unwrap(), k <= s, "{g:?} k={k}");
        }
    }
}

#[test]
fn per_vertex_capacities_match_naive() {
    let mut rng = SplitMix(5);
    for _ in 0..150 {
        let n = 2 + rng.below(6) as usize;
        let g = rng.graph(n, 9);
        let f: Vec<usize> = (0..n).map(|_| 1 + rng.below(2) as usize).collect();
        let profile = ValidityProfile::per_vertex(f.clone()).unwrap();
        let r = sigma_exact(&g, &profile, LIMIT).unwrap();
        assert_eq!(r.sigma, naive_sigma(&g, &f), "{g:?} {f:?}");
        assert!(verify_coloring(&g, &r.witness, &profile).unwrap().valid);
    }
}

#[test]
fn larger_q_matches_naive() {
    let mut rng = SplitMix(9);
    for _ in 0..60 {
        let n = 2 + rng.below(5) as usize;
        let g = rng.graph(n, 9);
        let r = sigma_exact(&g, &ValidityProfile::Uniform(3), LIMIT).unwrap();
        assert_eq!(r.sigma, naive_sigma(&g, &vec![3; n]));
    }
}
