//! Self-contained verification suite: ten checks, each with a time budget,
//! run in parallel and reported in name order.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalogue::{hg, t4};
use crate::classify::{certify, classify_reflexive_tournament, HardnessChain, Terminal, Verdict as ClassVerdict, Witness};
use crate::digraph::{directed_cycle, Digraph, HamiltonCycle};
use crate::endo::{is_endo_trivial, is_retract_trivial, retraction_onto, subsets_of_size};
use crate::enumerate::{labelled, up_to_iso, Family};
use crate::error::{Error, Result};
use crate::figures::search_figure_tournaments;
use crate::gadget::{
    build_cyl, connectify, reduce_base_i, reduce_base_ii, reduce_components, reduce_general_i,
    reduce_general_ii, spill, verify_dagger, EmbeddedSubgraph, ReductionInstance,
};
use crate::glue::induced_subgraph;
use crate::hom::{brute, HomSearch, ListAssignment, RetractionInstance, Variant};
use crate::instances::{random_retraction_instance, random_strongly_connected};
use crate::iso::are_isomorphic;
use crate::poly::{for_each_polymorphism, hg_wnu_table, is_polymorphism, Polymorphism};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CheckReport {
    /// One line: `[PASS] 03 dagger_property (12 ms / 60000 ms): detail`.
    pub fn line(&self) -> String {
        format!(
            "[{}] {:02} {} ({} ms / {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.elapsed_ms,
            self.budget_ms,
            self.detail
        )
    }
}

type CheckFn = fn() -> Result<(bool, String)>;

/// (criterion, name, budget, check)
const CHECKS: [(u8, &str, Duration, CheckFn); 10] = [
    (1, "wnu_table", Duration::from_secs(1), check_wnu_table),
    (2, "essential_unarity", Duration::from_secs(60), check_essential_unarity),
    (3, "dagger_property", Duration::from_secs(60), check_dagger),
    (4, "cylinder_collapse", Duration::from_secs(300), check_collapse),
    (5, "full_spill", Duration::from_secs(60), check_spill),
    (6, "figure_reconstruction", Duration::from_secs(300), check_figures),
    (7, "reduction_soundness", Duration::from_secs(900), check_reductions),
    (8, "dichotomy_agreement", Duration::from_secs(600), check_dichotomy),
    (9, "endo_retract_equivalence", Duration::from_secs(600), check_endo_retract),
    (10, "solver_oracle", Duration::from_secs(300), check_solvers),
];

/// Names of all checks, in criterion order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.1).collect()
}

/// Runs the checks whose name is in `only` (all when empty), in parallel.
/// Reports are sorted by name. A check that errors or exceeds its budget
/// fails.
pub fn run_checks(only: &[String]) -> Result<Vec<CheckReport>> {
    if let Some(bad) = only.iter().find(|n| !check_names().contains(&n.as_str())) {
        return Err(Error::Parse(format!("unknown check `{bad}`")));
    }
    let mut reports: Vec<CheckReport> = CHECKS
        .par_iter()
        .filter(|c| only.is_empty() || only.iter().any(|n| n == c.1))
        .map(|&(criterion, name, budget, f)| run_one(criterion, name, budget, f))
        .collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

/// Runs a single check by name.
pub fn run_check(name: &str) -> Result<CheckReport> {
    let &(criterion, name, budget, f) = CHECKS
        .iter()
        .find(|c| c.1 == name)
        .ok_or_else(|| Error::Parse(format!("unknown check `{name}`")))?;
    Ok(run_one(criterion, name, budget, f))
}

fn run_one(criterion: u8, name: &str, budget: Duration, f: CheckFn) -> CheckReport {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > budget {
        passed = false;
        detail = format!("over budget; {detail}");
    }
    CheckReport {
        criterion,
        name: name.to_string(),
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
    }
}

fn check_wnu_table() -> Result<(bool, String)> {
    let h = hg();
    let p = hg_wnu_table();
    let ok = p.arity == 3
        && p.table.len() == 27
        && is_polymorphism(&h, &p)
        && p.is_idempotent()
        && p.satisfies_wnu_identities();
    Ok((ok, "27-entry table: polymorphism of Hg, idempotent, WNU identities".into()))
}

fn check_essential_unarity() -> Result<(bool, String)> {
    let h = directed_cycle(3, true);
    // brute-force oracle over all 3^9 binary tables
    let mut brute_binary = 0;
    for code in 0..3usize.pow(9) {
        let table: Vec<usize> = (0..9).map(|i| code / 3usize.pow(i) % 3).collect();
        let p = Polymorphism::new(3, 2, table)?;
        if is_polymorphism(&h, &p) {
            if p.essentially_unary().is_none() {
                return Ok((false, format!("binary counterexample {:?}", p.table)));
            }
            brute_binary += 1;
        }
    }
    let mut counts = [0u64; 2];
    let mut all_unary = true;
    for (slot, k) in [(0, 2), (1, 3)] {
        for_each_polymorphism(&h, k, k, |p| {
            counts[slot] += 1;
            all_unary &= p.essentially_unary().is_some();
            std::ops::ControlFlow::Continue(())
        })?;
    }
    let ok = all_unary && brute_binary == 9 && counts == [9, 12];
    Ok((
        ok,
        format!(
            "DC3*: binary {} (oracle {brute_binary}), ternary {}, all essentially unary: {all_unary}",
            counts[0], counts[1]
        ),
    ))
}

fn check_dagger() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in [3, 4] {
        let r = verify_dagger(m)?;
        ok &= r.rotations_only && r.induced.len() == m;
        parts.push(format!("m={m}: {} induced maps", r.induced.len()));
    }
    Ok((ok, parts.join(", ")))
}

fn check_collapse() -> Result<(bool, String)> {
    let cyl = build_cyl(3)?;
    let mut templates = 0;
    let mut homs = 0u64;
    let mut bad = None;
    // labelled, so every tournament is met in every numbering
    for n in 1..=4 {
        for h in labelled(Family::ReflexiveTournaments, n) {
            templates += 1;
            HomSearch::new(&cyl.digraph, &h)
                .max_source_vertices(cyl.digraph.n())
                .for_each(|img| {
                    homs += 1;
                    let b = img[cyl.bottom[0]];
                    if cyl.bottom.iter().all(|&v| img[v] == b) && img.iter().any(|&x| x != b) {
                        bad = Some(img.to_vec());
                        return std::ops::ControlFlow::Break(());
                    }
                    std::ops::ControlFlow::Continue(())
                })?;
            if let Some(img) = bad {
                return Ok((false, format!("non-constant extension {img:?} into {h:?}")));
            }
        }
    }
    Ok((true, format!("{homs} homomorphisms into {templates} tournaments checked")))
}

/// The first 3-cycle, lexicographically, that `h` retracts onto.
fn retracting_three_cycle(h: &Digraph) -> Result<Option<EmbeddedSubgraph>> {
    for s in subsets_of_size(h.n(), 3) {
        let sub = induced_subgraph(h, &s)?.0;
        if sub.is_strongly_connected() && retraction_onto(h, &s)?.is_some() {
            return EmbeddedSubgraph::with_cycle(h, &s).map(Some);
        }
    }
    Ok(None)
}

fn check_spill() -> Result<(bool, String)> {
    let base = t4();
    let mut picked = vec![(base.clone(), retracting_three_cycle(&base)?.expect("T4 retracts to DC3*"))];
    'outer: for n in [4, 5] {
        for h in up_to_iso(Family::ReflexiveTournaments, n)? {
            if picked.len() == 3 {
                break 'outer;
            }
            if are_isomorphic(&h, &base) {
                continue;
            }
            if let Some(c) = retracting_three_cycle(&h)? {
                picked.push((h, c));
            }
        }
    }
    if picked.len() < 3 {
        return Ok((false, "fewer than three templates found".into()));
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (h, c) in &picked {
        let s = spill(h, &c.cycle)?;
        ok &= s.is_full() && s.verify();
        parts.push(format!("n={} on {:?}: {}/{}", h.n(), c.vertices, s.vertices.len(), h.n()));
    }
    Ok((ok, parts.join("; ")))
}

fn check_figures() -> Result<(bool, String)> {
    let s = search_figure_tournaments()?;
    let one = s.first_one.verify()? && s.first_one.digraph.is_tournament() && s.first_one.digraph.is_reflexive();
    let two = s.first_two.verify()? && s.first_two.digraph.is_tournament() && s.first_two.digraph.is_reflexive();
    Ok((
        one && two,
        format!(
            "caption one: {} orientations (first {}); caption two: {} (first {})",
            s.caption_one.len(),
            s.first_one.code,
            s.caption_two.len(),
            s.first_two.code
        ),
    ))
}

fn digraph(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::new(n, edges.iter().copied()).expect("in range")
}

fn link(h: &Digraph, cycle: &[usize]) -> EmbeddedSubgraph {
    EmbeddedSubgraph::new(h, cycle.to_vec(), HamiltonCycle::new(cycle.to_vec())).expect("valid link")
}

/// A certified hardness chain closing with `terminal`. No reflexive
/// tournament on at most 7 vertices reaches Base II or the general cases
/// through [`crate::classify::find_hardness_chain`], so these templates
/// are fixed here and certified from scratch.
pub fn sample_chain(terminal: Terminal) -> Result<HardnessChain> {
    let (h, cycles): (Digraph, Vec<Vec<usize>>) = match terminal {
        Terminal::EndoTrivialDirect => (directed_cycle(3, true), vec![vec![0, 1, 2]]),
        Terminal::BaseI => (t4(), vec![vec![0, 1, 2]]),
        Terminal::BaseII => (
            digraph(5, &[
                (0, 0), (0, 3), (0, 4), (1, 0), (1, 1), (1, 4), (2, 0), (2, 1), (2, 2), (3, 1),
                (3, 2), (3, 3), (4, 2), (4, 3), (4, 4),
            ]),
            vec![vec![0, 3, 1]],
        ),
        Terminal::GeneralI => (
            digraph(6, &[
                (0, 0), (0, 1), (0, 4), (0, 5), (1, 1), (1, 5), (2, 0), (2, 1), (2, 2), (3, 0),
                (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (5, 4),
                (5, 5),
            ]),
            vec![vec![0, 4, 2], vec![0, 1, 5, 4, 2]],
        ),
        Terminal::GeneralII => (
            digraph(6, &[
                (0, 0), (0, 3), (0, 5), (1, 0), (1, 1), (1, 2), (1, 5), (2, 0), (2, 2), (2, 4),
                (3, 1), (3, 2), (3, 3), (4, 0), (4, 1), (4, 3), (4, 4), (5, 2), (5, 3), (5, 4),
                (5, 5),
            ]),
            vec![vec![0, 3, 1], vec![0, 3, 1, 2, 4]],
        ),
    };
    let links = cycles.iter().map(|c| link(&h, c)).collect();
    certify(&h, links, terminal)
}

/// Source sizes are the source template plus 1 to 3 extra vertices, with
/// edge densities cycling through 0.15, 0.3 and 0.5.
fn soundness_run(
    name: &str,
    count: usize,
    max_vertices: usize,
    rng: &mut ChaCha8Rng,
    template: &Digraph,
    build: impl Fn(&RetractionInstance) -> Result<ReductionInstance>,
) -> Result<(bool, String)> {
    let (mut yes, mut bad) = (0, 0);
    let extra_cap = max_vertices.saturating_sub(template.n()).clamp(1, 3);
    for i in 0..count {
        let extra = 1 + i % extra_cap;
        let src = random_retraction_instance(template, extra, [0.15, 0.3, 0.5][i % 3], rng)?;
        let s = build(&src)?.check_soundness()?;
        yes += s.source as usize;
        bad += !s.agrees() as usize;
    }
    Ok((bad == 0, format!("{name} {count} ({yes} yes, {bad} disagree)")))
}

fn check_reductions() -> Result<(bool, String)> {
    const COUNT: usize = 60;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut results = Vec::new();

    let chain = sample_chain(Terminal::BaseI)?;
    let top = chain.links[0].clone();
    let src_t = chain.source_template()?;
    results.push(soundness_run("base I", COUNT, 6, &mut rng, &src_t, |s| {
        reduce_base_i(&chain.template, &top, s)
    })?);

    let chain = sample_chain(Terminal::BaseII)?;
    let top = chain.links[0].clone();
    results.push(soundness_run("base II", COUNT, 6, &mut rng, &chain.template, |s| {
        reduce_base_ii(&chain.template, &top, s)
    })?);

    // DC3* on {1,2,3}, dominated by 0, reduced from its middle component
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1), (4, 0), (4, 1), (4, 2), (4, 3)];
    edges.extend((0..5).map(|v| (v, v)));
    let two_sided = digraph(5, &edges);
    let comps = two_sided.strong_components();
    let index = comps.iter().position(|c| c.len() == 3).expect("a 3-cycle component");
    let (mut yes, mut bad) = (0, 0);
    for i in 0..COUNT {
        let g = random_strongly_connected(2 + i % 5, [0.3, 0.5][i % 2], &mut rng);
        let s = reduce_components(&two_sided, index, &g)?.check_soundness()?;
        yes += s.source as usize;
        bad += !s.agrees() as usize;
    }
    results.push((bad == 0, format!("components {COUNT} ({yes} yes, {bad} disagree)")));

    let h = t4();
    results.push(soundness_run("connectify", COUNT, 6, &mut rng, &h, |s| connectify(&h, s))?);

    let chain = sample_chain(Terminal::GeneralI)?;
    let src_t = chain.source_template()?;
    results.push(soundness_run("general I", COUNT, 8, &mut rng, &src_t, |s| {
        reduce_general_i(&chain.template, &chain.links, s)
    })?);

    let chain = sample_chain(Terminal::GeneralII)?;
    results.push(soundness_run("general II", COUNT, 9, &mut rng, &chain.template, |s| {
        reduce_general_ii(&chain.template, &chain.links, s)
    })?);

    let ok = results.iter().all(|r| r.0);
    Ok((ok, results.into_iter().map(|r| r.1).collect::<Vec<_>>().join("; ")))
}

fn check_dichotomy() -> Result<(bool, String)> {
    let mut total = 0;
    let mut hard = 0;
    let mut ends_to_end = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=5 {
        for h in up_to_iso(Family::ReflexiveTournaments, n)? {
            total += 1;
            let c = classify_reflexive_tournament(&h)?;
            let transitive = h.is_transitive_tournament()?;
            if (c.verdict == ClassVerdict::TractableTransitive) != transitive || !c.verify(&h)? {
                return Ok((false, format!("wrong or unverified verdict {:?} for {h:?}", c.verdict)));
            }
            if c.verdict != ClassVerdict::NPCompleteNonTransitive {
                continue;
            }
            hard += 1;
            let chain = match c.witness {
                Some(Witness::Chain(ch)) => ch,
                Some(Witness::Component { chain, .. }) => chain,
                w => return Ok((false, format!("unexpected witness {w:?}"))),
            };
            chain.verify()?;
            // the closing reduction, replayed on three random sources
            let src_t = chain.source_template()?;
            for i in 0..3 {
                let src = random_retraction_instance(&src_t, 1 + i % 2, 0.3, &mut rng)?;
                if !chain.terminal_reduction(&src)?.check_soundness()?.agrees() {
                    return Ok((false, format!("terminal reduction disagrees for {h:?}")));
                }
                ends_to_end += 1;
            }
        }
    }
    Ok((
        true,
        format!("{total} tournaments, {hard} NP-complete with verified chains, {ends_to_end} reductions replayed"),
    ))
}

fn check_endo_retract() -> Result<(bool, String)> {
    let mut total = 0;
    let mut trivial = 0;
    for n in 1..=6 {
        for h in up_to_iso(Family::ReflexiveTournaments, n)? {
            total += 1;
            let e = is_endo_trivial(&h)?.holds;
            if e != is_retract_trivial(&h)?.holds {
                return Ok((false, format!("mismatch on {h:?}")));
            }
            trivial += e as usize;
        }
    }
    Ok((true, format!("{total} tournaments, {trivial} endo-trivial")))
}

fn check_solvers() -> Result<(bool, String)> {
    let ds: Vec<Digraph> = (1..=3).flat_map(|n| labelled(Family::Digraphs, n)).collect();
    let pairs: Vec<(&Digraph, &Digraph)> = ds.iter().flat_map(|g| ds.iter().map(move |h| (g, h))).collect();
    let failures: usize = pairs
        .par_iter()
        .map(|&(g, h)| solver_mismatches(g, h))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok((failures == 0, format!("{} pairs, {failures} mismatches", pairs.len())))
}

fn solver_mismatches(g: &Digraph, h: &Digraph) -> Result<usize> {
    let mut bad = 0;
    for (variant, search) in [
        (Variant::Hom, HomSearch::new(g, h)),
        (Variant::Surjective, HomSearch::new(g, h).surjective(true)),
        (Variant::Compaction, HomSearch::new(g, h).compaction(true)),
    ] {
        bad += (search.first()? != brute::first(variant, g, h, None, None)) as usize;
    }
    // lists: every vertex allowed all but one template vertex, rotating
    let lists = ListAssignment::new(
        (0..g.n())
            .map(|v| (0..h.n()).filter(|&x| h.n() == 1 || x != v % h.n()).collect())
            .collect(),
    );
    bad += (crate::hom::find_list_homomorphism(g, h, &lists)? != brute::first(Variant::List, g, h, None, Some(&lists)))
        as usize;
    if h.n() <= g.n() {
        brute::for_each_map(h.n(), g.n(), |emb| {
            if let Ok(inst) = RetractionInstance::new(g.clone(), emb.to_vec(), h) {
                let want = brute::first(Variant::Retraction, g, h, Some(&inst), None);
                match crate::hom::find_retraction(&inst, h) {
                    Ok(got) => bad += (got != want) as usize,
                    Err(_) => bad += 1,
                }
            }
            true
        });
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_chains_certify() {
        for t in [
            Terminal::EndoTrivialDirect,
            Terminal::BaseI,
            Terminal::BaseII,
            Terminal::GeneralI,
            Terminal::GeneralII,
        ] {
            let c = sample_chain(t).unwrap();
            assert_eq!(c.terminal, t);
            c.verify().unwrap();
        }
    }

    #[test]
    fn cheap_checks_pass() {
        for name in ["wnu_table", "dagger_property", "full_spill"] {
            let r = run_check(name).unwrap();
            assert!(r.passed, "{}", r.line());
        }
        assert!(run_checks(&["nope".into()]).is_err());
    }
}
