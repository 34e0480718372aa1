//! Exhaustive structural properties at desk scale.

use std::ops::ControlFlow;

use surjhom::catalogue::hf;
use surjhom::classify::find_hardness_chain;
use surjhom::endo::{
    endomorphism_digraph, homomorphic_images, is_endo_trivial, is_retract_trivial, is_self_map_edge,
    self_map_digraph,
};
use surjhom::VertexMap;
use surjhom::enumerate::{labelled, up_to_iso, Family};
use surjhom::gadget::{build_cyl, reach_of_cylinder, spill};
use surjhom::poly::{all_polymorphisms_essentially_unary, enumerate_polymorphisms, is_polymorphism, Polymorphism};
use surjhom::{direct_power, induced_subgraph, Digraph, HomSearch};

fn reflexive_tournaments(max: usize) -> Vec<Digraph> {
    (1..=max)
        .flat_map(|n| up_to_iso(Family::ReflexiveTournaments, n).unwrap())
        .collect()
}

#[test]
fn condensation_is_acyclic_up_to_four_vertices() {
    for n in 1..=4 {
        for g in labelled(Family::Digraphs, n) {
            let comps = g.strong_components();
            let mut at = vec![0; n];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    at[v] = i;
                }
            }
            assert!(g.edges().all(|(u, v)| at[u] <= at[v]), "{g:?}");
        }
    }
}

#[test]
fn hamilton_cycles_of_strong_tournaments() {
    for h in reflexive_tournaments(6).into_iter().filter(Digraph::is_strongly_connected) {
        if h.n() < 3 {
            continue;
        }
        let c = h.hamilton_cycle().unwrap();
        assert!(c.verify(&h, None), "{h:?}");
        assert_eq!(c.order[0], 0);
    }
}

#[test]
fn powers_and_induced_identity() {
    for g in labelled(Family::Digraphs, 2) {
        for k in 1..=3 {
            let (p, _) = direct_power(&g, k).unwrap();
            assert_eq!(p.n(), g.n().pow(k as u32));
            assert_eq!(p.edge_count(), g.edge_count().pow(k as u32));
        }
        let all: Vec<usize> = (0..g.n()).collect();
        assert_eq!(induced_subgraph(&g, &all).unwrap().0, g);
    }
}

#[test]
fn endomorphism_digraph_is_closed_under_composition() {
    for n in 1..=3 {
        for g in labelled(Family::Digraphs, n) {
            let e = endomorphism_digraph(&g).unwrap();
            let edges: Vec<(usize, usize)> = e.digraph.edges().collect();
            for &(a, b) in &edges {
                for &(c, d) in &edges {
                    let f = e.maps[a].compose(&e.maps[c]).unwrap();
                    let h = e.maps[b].compose(&e.maps[d]).unwrap();
                    assert!(is_self_map_edge(&g, &f, &h), "{g:?}");
                }
            }
        }
    }
}

#[test]
fn self_map_loops_are_the_endomorphisms() {
    for g in labelled(Family::Digraphs, 2).into_iter().chain(labelled(Family::ReflexiveDigraphs, 3)) {
        let s = self_map_digraph(&g).unwrap();
        let e = endomorphism_digraph(&g).unwrap();
        let loops: Vec<VertexMap> = (0..s.maps.len()).filter(|&i| s.digraph.has_loop(i)).map(|i| s.maps[i].clone()).collect();
        assert_eq!(loops, e.maps, "{g:?}");
    }
}

#[test]
fn endo_and_retract_triviality_agree_on_tournaments() {
    for h in reflexive_tournaments(6) {
        assert_eq!(
            is_endo_trivial(&h).unwrap().holds,
            is_retract_trivial(&h).unwrap().holds,
            "{h:?}"
        );
    }
}

#[test]
fn retract_trivial_reflexive_digraphs_are_rigid_in_shape() {
    let mut seen = 0;
    for n in 3..=5 {
        for h in up_to_iso(Family::ReflexiveDigraphs, n).unwrap() {
            if !is_retract_trivial(&h).unwrap().holds {
                continue;
            }
            seen += 1;
            assert!(!h.has_double_edge(), "{h:?}");
            assert!(h.is_strongly_connected(), "{h:?}");
            // automorphisms are isolated in the endomorphism digraph
            {
                let s = endomorphism_digraph(&h).unwrap();
                for (i, m) in s.maps.iter().enumerate() {
                    if m.is_automorphism(&h) {
                        let out = s.digraph.out_neighbors(i);
                        let inn = s.digraph.in_neighbors(i);
                        assert_eq!((out, inn), (&[i][..], &[i][..]), "{h:?} {m:?}");
                    }
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn proper_endomorphism_edge_gives_non_surjective_retraction() {
    for n in 1..=4 {
        for h in up_to_iso(Family::ReflexiveDigraphs, n).unwrap() {
            let e = endomorphism_digraph(&h).unwrap();
            let id = e.maps.iter().position(|m| m.image().iter().enumerate().all(|(i, &x)| i == x)).unwrap();
            let proper = e.digraph.out_neighbors(id).iter().any(|&j| j != id);
            if proper {
                let found = e.digraph.out_neighbors(id).iter().any(|&j| {
                    let r = &e.maps[j];
                    r.is_idempotent() && !r.is_surjective()
                });
                assert!(found, "{h:?}");
            }
        }
    }
}

#[test]
fn proper_images_of_endo_trivial_tournaments_have_double_edges() {
    for h in reflexive_tournaments(5) {
        if h.n() < 3 || !is_endo_trivial(&h).unwrap().holds {
            continue;
        }
        for img in homomorphic_images(&h).unwrap() {
            let k = img.digraph.n();
            if 1 < k && k < h.n() {
                assert!(img.digraph.has_double_edge(), "{h:?} {:?}", img.quotient);
            }
        }
    }
}

#[test]
fn projections_and_enumerated_polymorphisms_verify() {
    for n in 1..=3 {
        for h in labelled(Family::Digraphs, n) {
            for k in 1..=3 {
                for i in 0..k {
                    assert!(is_polymorphism(&h, &Polymorphism::projection(n, k, i)));
                }
            }
        }
    }
    for h in labelled(Family::Digraphs, 2) {
        for p in enumerate_polymorphisms(&h, 2).unwrap() {
            assert!(is_polymorphism(&h, &p));
        }
    }
}

#[test]
fn endo_trivial_reflexive_digraphs_have_unary_binary_polymorphisms() {
    let mut seen = 0;
    for n in 3..=4 {
        for h in up_to_iso(Family::ReflexiveDigraphs, n).unwrap() {
            if is_endo_trivial(&h).unwrap().holds {
                seen += 1;
                assert!(all_polymorphisms_essentially_unary(&h, 2).unwrap().holds, "{h:?}");
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn hf_polymorphisms_are_essentially_unary() {
    let h = hf();
    assert!(all_polymorphisms_essentially_unary(&h, 2).unwrap().holds);
    assert!(all_polymorphisms_essentially_unary(&h, 3).unwrap().holds);
}

#[test]
fn cylinder_collapses_with_its_bottom() {
    for (m, max) in [(3, 5), (4, 5)] {
        let cyl = build_cyl(m).unwrap();
        for h in reflexive_tournaments(max) {
            HomSearch::new(&cyl.digraph, &h)
                .max_source_vertices(cyl.digraph.n())
                .for_each(|img| {
                    let b = img[cyl.bottom[0]];
                    if cyl.bottom.iter().all(|&v| img[v] == b) {
                        assert!(img.iter().all(|&x| x == b), "m={m} {h:?} {img:?}");
                    }
                    ControlFlow::Continue(())
                })
                .unwrap();
        }
    }
}

#[test]
fn spill_certificates_hold_on_small_tournaments() {
    for h in reflexive_tournaments(5) {
        for s in surjhom::endo::subsets_of_size(h.n(), 3) {
            let sub = induced_subgraph(&h, &s).unwrap().0;
            if !sub.is_strongly_connected() {
                continue;
            }
            let l = surjhom::gadget::EmbeddedSubgraph::with_cycle(&h, &s).unwrap();
            let sp = spill(&h, &l.cycle).unwrap();
            assert!(sp.verify());
            assert!(s.iter().all(|v| sp.vertices.contains(v)));
            assert!(sp.witnesses.iter().all(|w| w.position < 3));
            assert_eq!(reach_of_cylinder(&h, &l.cycle).unwrap(), sp.vertices);
        }
    }
}

#[test]
fn chains_grow_strictly() {
    for h in reflexive_tournaments(6) {
        if h.n() < 3 || !h.is_strongly_connected() {
            continue;
        }
        let c = find_hardness_chain(&h).unwrap();
        assert!(c.sizes.windows(2).all(|w| w[0] < w[1]), "{h:?}");
        assert!(c.sizes.iter().all(|&s| s >= 3 && s <= h.n()));
        c.verify().unwrap();
    }
}
