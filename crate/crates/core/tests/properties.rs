use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vdcert::harness::random_connected_bipartite;
use vdcert::{
    decompose_bipartite_complement, is_shelling_order, shelling_from_certificate,
    verify_certificate, CertificateDocument, Graph, SimplicialComplex, VertexSet,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_connected_bipartite() -> impl Strategy<Value = Graph> {
    (2usize..=20, any::<u64>())
        .prop_map(|(n, seed)| random_connected_bipartite(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        let n = g.vertex_count();
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn deletion_commutes_with_complement(g in arb_graph(16), pick in any::<u64>()) {
        let removed = VertexSet::from_bits(pick) & g.vertices();
        prop_assert_eq!(
            g.complement().delete_vertices(removed).graph,
            g.delete_vertices(removed).graph.complement()
        );
    }

    #[test]
    fn complex_operations_keep_the_antichain(g in arb_graph(10), v in 0usize..10) {
        let c = SimplicialComplex::independence_complex(&g);
        let check = |c: &SimplicialComplex| {
            SimplicialComplex::new(c.vertex_count(), c.facets().to_vec()).is_ok()
        };
        prop_assert!(check(&c));
        if v < g.vertex_count() {
            prop_assert!(check(&c.delete_vertex(v).unwrap()));
            prop_assert!(check(&c.link(VertexSet::singleton(v)).unwrap()));
        }
    }

    #[test]
    fn facet_list_round_trips(g in arb_graph(10)) {
        let c = SimplicialComplex::independence_complex(&g);
        prop_assert_eq!(SimplicialComplex::parse_facet_list(&c.to_facet_list()).unwrap(), c);
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn larger_bipartite_complements_decompose(g in arb_connected_bipartite()) {
        let n = g.vertex_count();
        let c = SimplicialComplex::independence_complex(&g.complement());
        prop_assert!(c.is_pure());
        prop_assert_eq!(c.dimension(), 1);
        prop_assert_eq!(c.facet_count(), g.edge_count());

        let cert = decompose_bipartite_complement(&g).unwrap();
        verify_certificate(&c, &cert).unwrap();
        for path in cert.paths() {
            let distinct: VertexSet = path.iter().copied().collect();
            prop_assert_eq!(distinct.len(), path.len());
            prop_assert!(path.len() <= n);
        }
        let order = shelling_from_certificate(&c, &cert).unwrap();
        prop_assert!(is_shelling_order(&c, &order).unwrap());

        let doc = CertificateDocument::new(n, cert);
        prop_assert_eq!(CertificateDocument::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn certificates_are_relabelling_stable(g in arb_connected_bipartite(), seed in any::<u64>()) {
        // permuting labels changes the certificate but never its validity
        use rand::seq::SliceRandom;
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        let c = SimplicialComplex::independence_complex(&h.complement());
        verify_certificate(&c, &decompose_bipartite_complement(&h).unwrap()).unwrap();
    }
}
