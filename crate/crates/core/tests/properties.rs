use proptest::prelude::*;

use halfroot::{
    half_square, hs_biconvex, hs_chordal_bipartite, hs_convex, hs_star_biconvex, hs_star_convex,
    hs_tree, recognize, substitute, twin_quotient, verify_root, BipartiteGraph, ClassTag, Graph,
    Side,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn bigraph(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (0..=max_side, 0..=max_side).prop_flat_map(|(nx, ny)| {
        proptest::collection::vec(any::<bool>(), nx * ny).prop_map(move |bits| {
            let edges = (0..nx * ny)
                .filter(|&i| bits[i])
                .map(|i| (i / ny.max(1), i % ny.max(1)));
            BipartiteGraph::from_edges(nx, ny, edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn verdicts(g: &Graph) -> Vec<bool> {
    ClassTag::ALL
        .into_iter()
        .filter_map(|c| recognize(g, c, false))
        .map(|o| o.is_yes())
        .collect()
}

proptest! {
    #[test]
    fn certificates_reproduce_the_graph(g in graph(9)) {
        for class in ClassTag::ALL {
            for forest in [false, true] {
                if let Some(out) = recognize(&g, class, forest) {
                    if let Some(cert) = out.certificate() {
                        prop_assert_eq!(&half_square(&cert.root, Side::X), &g);
                        prop_assert!(verify_root(&g, cert).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn verdicts_survive_relabeling((g, perm) in graph_and_perm(8)) {
        prop_assert_eq!(verdicts(&g), verdicts(&g.relabel(&perm)));
    }

    #[test]
    fn deleting_y_vertices_only_removes_edges(b in bigraph(6), pick in any::<prop::sample::Index>()) {
        prop_assume!(b.ny() > 0);
        let y = pick.index(b.ny());
        let before = half_square(&b, Side::X);
        let after = half_square(&b.without_y(y), Side::X);
        for (u, v) in after.edges() {
            prop_assert!(before.has_edge(u, v));
        }
    }

    #[test]
    fn clique_substitution_keeps_quotient_and_verdicts(
        g in graph(7),
        sizes in proptest::collection::vec(1usize..=3, 7),
    ) {
        let sizes = &sizes[..g.n()];
        let big = substitute(&g, sizes).unwrap();
        let (q, _) = twin_quotient(&g);
        let (q_big, _) = twin_quotient(&big);
        prop_assert_eq!(q.n(), q_big.n());
        prop_assert_eq!(q.m(), q_big.m());
        prop_assert_eq!(hs_convex(&g).is_yes(), hs_convex(&big).is_yes());
        prop_assert_eq!(hs_biconvex(&g).is_yes(), hs_biconvex(&big).is_yes());
        prop_assert_eq!(hs_chordal_bipartite(&g).is_yes(), hs_chordal_bipartite(&big).is_yes());
    }

    #[test]
    fn class_hierarchy(g in graph(9)) {
        let biconvex = hs_biconvex(&g).is_yes();
        let convex = hs_convex(&g).is_yes();
        let chordal = hs_chordal_bipartite(&g).is_yes();
        prop_assert!(!biconvex || convex);
        prop_assert!(!convex || chordal);
        prop_assert!(!hs_tree(&g, true).is_yes() || chordal);
        prop_assert!(!hs_star_biconvex(&g).is_yes() || hs_star_convex(&g).is_yes());
    }

    #[test]
    fn half_squares_of_random_trees_are_recognized(parents in proptest::collection::vec(any::<prop::sample::Index>(), 1..14)) {
        // a random tree on 0..=len with vertex i+1 attached below it, split
        // into its two color classes
        let n = parents.len() + 1;
        let mut parent = vec![0usize; n];
        let mut depth = vec![0usize; n];
        for (i, p) in parents.iter().enumerate() {
            parent[i + 1] = p.index(i + 1);
            depth[i + 1] = depth[parent[i + 1]] + 1;
        }
        let xs: Vec<usize> = (0..n).filter(|&v| depth[v] % 2 == 0).collect();
        let ys: Vec<usize> = (0..n).filter(|&v| depth[v] % 2 == 1).collect();
        let id = |side: &[usize], v: usize| side.iter().position(|&w| w == v).unwrap();
        let edges = (1..n).map(|v| {
            let (a, b) = (v, parent[v]);
            if depth[a] % 2 == 0 { (id(&xs, a), id(&ys, b)) } else { (id(&xs, b), id(&ys, a)) }
        });
        let b = BipartiteGraph::from_edges(xs.len(), ys.len(), edges).unwrap();
        prop_assert!(hs_tree(&half_square(&b, Side::X), false).is_yes());
        prop_assert!(hs_tree(&half_square(&b, Side::Y), false).is_yes());
    }
}
