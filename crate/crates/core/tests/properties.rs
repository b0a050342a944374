use fairdom::families::{complete, cycle, path};
use fairdom::graph::MAX_VERTICES;
use fairdom::{classify, Distance, Engine, Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges: Vec<_> = pairs.iter().zip(mask).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn naive_polynomial(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut out = vec![0u64; n + 1];
    for bits in 1u64..(1 << n) {
        let d = VertexSet::from_bits(bits);
        if classify(g, d).unwrap().is_fair() {
            out[d.len()] += 1;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(g in graph_strategy(12)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn distance_is_a_metric(g in graph_strategy(9), a in 0usize..9, b in 0usize..9, c in 0usize..9) {
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        let d = |x, y| g.distance(x, y).unwrap();
        prop_assert_eq!(d(a, a), Distance::Finite(0));
        prop_assert_eq!(d(a, b), d(b, a));
        if let (Distance::Finite(ab), Distance::Finite(bc)) = (d(a, b), d(b, c)) {
            match d(a, c) {
                Distance::Finite(ac) => prop_assert!(ac <= ab + bc),
                Distance::Unreachable => prop_assert!(false, "triangle inequality"),
            }
        }
    }

    #[test]
    fn polynomial_matches_naive_enumeration(g in graph_strategy(9)) {
        let e = Engine::new();
        let poly = e.fd_polynomial(&g).unwrap();
        let naive = naive_polynomial(&g);
        for (i, want) in naive.iter().enumerate() {
            prop_assert_eq!(poly.coefficient(i), (*want).into());
        }
        let listed: usize = (1..=g.order()).map(|i| e.enumerate_fd(&g, i).unwrap().len()).sum();
        prop_assert_eq!(listed as u64, naive.iter().sum::<u64>());
    }

    #[test]
    fn sequential_and_parallel_agree(g in graph_strategy(14), w in 1usize..6) {
        let k = g.order() / 2 + 1;
        let a = Engine::sequential().enumerate_fd(&g, k).unwrap();
        let b = Engine::new().with_workers(w).enumerate_fd(&g, k).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fd_numbers_are_ordered(g in graph_strategy(10)) {
        let e = Engine::new();
        let fd = e.fd_number(&g).unwrap();
        prop_assert!(e.gamma(&g).unwrap() <= fd);
        prop_assert!(fd <= e.fd_k_number(&g, 1).unwrap());
        prop_assert_eq!(fd == g.order(), g.is_edgeless());
    }

    #[test]
    fn vertex_set_algebra(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
        let full = VertexSet::full(MAX_VERTICES);
        prop_assert_eq!(x.union(y).len() + x.intersection(y).len(), x.len() + y.len());
        prop_assert_eq!(x.difference(y).union(x.intersection(y)), x);
        prop_assert_eq!(x.complement(MAX_VERTICES).complement(MAX_VERTICES), x);
        prop_assert!(x.intersection(y).is_subset(x));
        prop_assert_eq!(x.union(x.complement(MAX_VERTICES)), full);
        prop_assert_eq!(x.iter().collect::<VertexSet>(), x);
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(g in graph_strategy(10), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask).intersection(g.vertices());
        let h = g.induced_subgraph(s).unwrap();
        let inner = g.edges().into_iter().filter(|&(u, v)| s.contains(u) && s.contains(v)).count();
        prop_assert_eq!(h.order(), s.len());
        prop_assert_eq!(h.edge_count(), inner);
    }
}

#[test]
fn named_families_have_expected_polynomials() {
    let e = Engine::new();
    let dense = |g: &Graph| e.fd_polynomial(g).unwrap().to_dense();
    let small = |v: &[u64]| v.iter().map(|&x| x.into()).collect::<Vec<fairdom::Count>>();
    assert_eq!(dense(&path(6).unwrap()), small(&[0, 0, 1, 4, 7, 6, 1]));
    assert_eq!(dense(&cycle(8).unwrap()), small(&[0, 0, 0, 0, 14, 16, 28, 8, 1]));
    assert_eq!(dense(&complete(4).unwrap()), small(&[0, 4, 6, 4, 1]));
}
