use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use surjhom::catalogue::t4;
use surjhom::gadget::{connectify, reduce_base_i, EmbeddedSubgraph};
use surjhom::hom::verify_witness;
use surjhom::instances::random_retraction_instance;
use surjhom::io;
use surjhom::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
            Digraph::new(n, edges).unwrap()
        })
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    digraph(max_n).prop_flat_map(|d| {
        let perm = Just((0..d.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(d), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_and_text_round_trip(d in digraph(6)) {
        prop_assert_eq!(io::from_json(&io::to_json(&d)).unwrap(), d.clone());
        prop_assert_eq!(io::from_text(&io::to_text(&d)).unwrap(), d);
    }

    #[test]
    fn relabel_round_trip((d, perm) in with_perm(6)) {
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let r = d.relabel(&perm).unwrap();
        prop_assert_eq!(r.edge_count(), d.edge_count());
        prop_assert_eq!(r.relabel(&inv).unwrap(), d);
    }

    #[test]
    fn glue_identity_and_disjoint_union(a in digraph(5), b in digraph(5)) {
        let u = glue(&[&a, &b], &[]).unwrap();
        prop_assert_eq!(u.digraph.n(), a.n() + b.n());
        prop_assert_eq!(u.digraph.edge_count(), a.edge_count() + b.edge_count());
        let ids: Vec<(Slot, Slot)> = (0..a.n()).map(|v| (Slot::new(0, v), Slot::new(1, v))).collect();
        let same = glue(&[&a, &a], &ids).unwrap();
        prop_assert_eq!(same.digraph, a.clone());
        let all: Vec<usize> = (0..a.n()).collect();
        prop_assert_eq!(induced_subgraph(&a, &all).unwrap().0, a);
    }

    #[test]
    fn witnesses_verify_and_answers_are_monotone(g in digraph(5), h in digraph(4)) {
        let hom = find_homomorphism(&g, &h).unwrap();
        let surj = find_surjective_homomorphism(&g, &h).unwrap();
        if let Some(f) = &hom {
            prop_assert!(verify_witness(Variant::Hom, &g, &h, f, None, None));
        }
        if let Some(f) = &surj {
            prop_assert!(verify_witness(Variant::Surjective, &g, &h, f, None, None));
            prop_assert!(hom.is_some());
        }
        let full = ListAssignment::full(g.n(), h.n());
        prop_assert_eq!(find_list_homomorphism(&g, &h, &full).unwrap(), hom);
        if let Some(f) = find_compaction(&g, &h, false).unwrap() {
            prop_assert!(verify_witness(Variant::Compaction, &g, &h, &f, None, None));
        }
    }

    #[test]
    fn retraction_implies_surjection(seed in any::<u64>(), extra in 0usize..3) {
        let h = t4();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_retraction_instance(&h, extra, 0.3, &mut rng).unwrap();
        if let Some(r) = find_retraction(&inst, &h).unwrap() {
            prop_assert!(verify_witness(Variant::Retraction, &inst.g, &h, &r, Some(&inst), None));
            prop_assert!(find_surjective_homomorphism(&inst.g, &h).unwrap().is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reductions_replay_identically_and_agree(seed in any::<u64>(), extra in 1usize..4) {
        let h = t4();
        let dc3 = induced_subgraph(&h, &[0, 1, 2]).unwrap().0;
        let link = EmbeddedSubgraph::with_cycle(&h, &[0, 1, 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = random_retraction_instance(&dc3, extra, 0.3, &mut rng).unwrap();
        let r = reduce_base_i(&h, &link, &src).unwrap();
        prop_assert_eq!(r.replay().unwrap(), r.clone());
        prop_assert!(r.check_soundness().unwrap().agrees());

        let src = random_retraction_instance(&h, extra, 0.3, &mut rng).unwrap();
        let c = connectify(&h, &src).unwrap();
        prop_assert!(c.digraph.is_strongly_connected());
        prop_assert_eq!(c.replay().unwrap(), c.clone());
        prop_assert!(c.check_soundness().unwrap().agrees());
    }
}
