use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surjhom::enumerate::{labelled, Family};
use surjhom::hom::{brute, retraction_search, verify_witness};
use surjhom::*;

fn all_small() -> Vec<Digraph> {
    (1..=3).flat_map(|n| labelled(Family::Digraphs, n)).collect()
}

#[test]
fn plain_surjective_and_compaction_match_enumeration() {
    let ds = all_small();
    for g in &ds {
        for h in &ds {
            for (variant, search) in [
                (Variant::Hom, HomSearch::new(g, h)),
                (Variant::Surjective, HomSearch::new(g, h).surjective(true)),
                (Variant::Compaction, HomSearch::new(g, h).compaction(true)),
            ] {
                let want = brute::first(variant, g, h, None, None);
                let got = search.first().unwrap();
                assert_eq!(got, want, "{variant:?} {g:?} -> {h:?}");
                assert_eq!(search.exists().unwrap(), want.is_some());
            }
        }
    }
}

#[test]
fn strict_compaction_matches_enumeration() {
    let ds = all_small();
    for g in &ds {
        for h in &ds {
            let want = brute::solutions(Variant::Compaction, g, h, None, None)
                .into_iter()
                .find(VertexMap::is_surjective);
            assert_eq!(find_compaction(g, h, true).unwrap(), want);
        }
    }
}

#[test]
fn list_homomorphisms_match_enumeration() {
    let ds = all_small();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in &ds {
        for h in &ds {
            for _ in 0..3 {
                let lists = ListAssignment::new(
                    (0..g.n())
                        .map(|_| (0..h.n()).filter(|_| rng.gen_bool(0.6)).collect())
                        .collect(),
                );
                let want = brute::first(Variant::List, g, h, None, Some(&lists));
                assert_eq!(find_list_homomorphism(g, h, &lists).unwrap(), want);
            }
            let full = ListAssignment::full(g.n(), h.n());
            assert_eq!(
                find_list_homomorphism(g, h, &full).unwrap(),
                find_homomorphism(g, h).unwrap()
            );
        }
    }
}

#[test]
fn retractions_match_enumeration() {
    let ds = all_small();
    let mut checked = 0;
    for g in &ds {
        for h in ds.iter().filter(|h| h.n() <= g.n()) {
            brute::for_each_map(h.n(), g.n(), |emb| {
                if let Ok(inst) = RetractionInstance::new(g.clone(), emb.to_vec(), h) {
                    let want = brute::first(Variant::Retraction, g, h, Some(&inst), None);
                    let got = find_retraction(&inst, h).unwrap();
                    assert_eq!(got, want);
                    if let Some(r) = &got {
                        assert!(verify_witness(Variant::Retraction, g, h, r, Some(&inst), None));
                        assert!(r.is_surjective());
                    }
                    let n_all = retraction_search(&inst, h).unwrap().count().unwrap();
                    assert_eq!(
                        n_all as usize,
                        brute::solutions(Variant::Retraction, g, h, Some(&inst), None).len()
                    );
                    checked += 1;
                }
                true
            });
        }
    }
    assert!(checked > 1000);
}

#[test]
fn enumeration_matches_enumeration() {
    let ds = all_small();
    for g in ds.iter().step_by(5) {
        for h in &ds {
            let got = HomSearch::new(g, h).surjective(true).all().unwrap();
            assert_eq!(got, brute::solutions(Variant::Surjective, g, h, None, None));
        }
    }
}
