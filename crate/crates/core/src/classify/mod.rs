//! Complexity verdicts for surjective colouring of small templates.
//!
//! Membership results are labels with citations; only the witnesses
//! (polymorphism tables, hardness chains, cycle lists) are checked.

pub mod chain;

use serde::{Deserialize, Serialize};

pub use chain::{certify, find_hardness_chain, CopyFact, HardnessChain, LinkFact, Terminal};

use crate::catalogue::hg;
use crate::digraph::{complete, Digraph};
use crate::error::{Error, Result};
use crate::glue::induced_subgraph;
use crate::poly::{
    all_polymorphisms_essentially_unary, find_wnu, hg_wnu_table, is_polymorphism, median,
    Polymorphism, UnaryVerdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    TractableTransitive,
    NPCompleteNonTransitive,
    /// Irreflexive semicomplete with at least two directed cycles.
    NPCompleteSemicomplete,
    TrivialSmall,
    EssentiallyUnaryHard,
    WNUTractableCandidate,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Median(Polymorphism),
    Wnu(Polymorphism),
    Chain(Box<HardnessChain>),
    /// Chain for strong component `index` (topological order) on `vertices`.
    Component {
        index: usize,
        vertices: Vec<usize>,
        chain: Box<HardnessChain>,
    },
    /// Two distinct directed cycles, as vertex sequences.
    Cycles(Vec<Vec<usize>>),
    EssentiallyUnary {
        binary: UnaryVerdict,
        ternary: UnaryVerdict,
    },
    /// Everything that was computed before giving up.
    Evidence {
        wnu_found: bool,
        binary_unary: bool,
        ternary_unary: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub citations: Vec<String>,
}

const CITE_MEDIAN: &str = "transitive reflexive tournaments have the median polymorphism; membership in NL is a cited label";
const CITE_CHAIN: &str = "cylinder-gadget reductions from retraction to a non-transitive subtournament";
const CITE_COMPONENTS: &str = "a strong component of size at least 3 reduces to the whole tournament";
const CITE_CHEN: &str = "Chen (2014): essentially unary polymorphisms make surjective colouring NP-complete";
const CITE_WNU: &str = "Bulatov (2017), Zhuk (2017): a WNU polymorphism puts the CSP in P; surjective complexity not implied";
const CITE_BHM: &str = "Bang-Jensen, Hell, MacGillivray (1988): semicomplete digraphs with two or more cycles";

impl Classification {
    fn new(verdict: Verdict, witness: Option<Witness>, citations: &[&str]) -> Self {
        Classification {
            verdict,
            witness,
            citations: citations.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Re-checks the witness against `h`.
    pub fn verify(&self, h: &Digraph) -> Result<bool> {
        Ok(match (&self.verdict, &self.witness) {
            (Verdict::TractableTransitive, Some(Witness::Median(p))) => {
                h.is_transitive_tournament()? && is_polymorphism(h, p) && p.is_majority()
            }
            (Verdict::WNUTractableCandidate, Some(Witness::Wnu(p))) => {
                is_polymorphism(h, p) && p.is_wnu()
            }
            (Verdict::NPCompleteNonTransitive, Some(Witness::Chain(c))) => {
                c.template == *h && c.verify().is_ok()
            }
            (Verdict::NPCompleteNonTransitive, Some(Witness::Component { index, vertices, chain })) => {
                h.strong_components().get(*index) == Some(vertices)
                    && chain.template == induced_subgraph(h, vertices)?.0
                    && chain.verify().is_ok()
            }
            (Verdict::NPCompleteSemicomplete, Some(Witness::Cycles(cs))) => {
                h.is_irreflexive()
                    && h.is_semicomplete()
                    && cs.len() >= 2
                    && cs[0] != cs[1]
                    && cs.iter().all(|c| is_cycle(h, c))
            }
            (Verdict::EssentiallyUnaryHard, Some(Witness::EssentiallyUnary { .. })) => {
                h.n() > 1
                    && all_polymorphisms_essentially_unary(h, 2)?.holds
                    && all_polymorphisms_essentially_unary(h, 3)?.holds
            }
            (Verdict::TrivialSmall, None) => is_trivial(h),
            (Verdict::Unresolved, _) => true,
            _ => false,
        })
    }
}

fn is_cycle(h: &Digraph, c: &[usize]) -> bool {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == c.len()
        && c.len() >= 2
        && (0..c.len()).all(|i| h.has_edge(c[i], c[(i + 1) % c.len()]))
}

/// Directed cycles of length at least 2, each listed once starting from
/// its least vertex.
fn simple_cycles(h: &Digraph) -> Vec<Vec<usize>> {
    fn rec(h: &Digraph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("non-empty");
        for &w in h.out_neighbors(last) {
            if w == start && path.len() >= 2 {
                out.push(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                rec(h, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..h.n() {
        rec(h, &mut vec![s], &mut out);
    }
    out
}

fn is_trivial(h: &Digraph) -> bool {
    h.n() == 1 || *h == complete(h.n(), true)
}

/// Verdict for a reflexive tournament on at least 2 vertices.
pub fn classify_reflexive_tournament(h: &Digraph) -> Result<Classification> {
    if !h.is_tournament() || !h.is_reflexive() {
        return Err(Error::NotATournament);
    }
    if h.n() < 2 {
        return Err(Error::Precondition("needs at least 2 vertices".into()));
    }
    if h.is_transitive_tournament()? {
        return Ok(Classification::new(
            Verdict::TractableTransitive,
            Some(Witness::Median(median(h)?)),
            &[CITE_MEDIAN],
        ));
    }
    let comps = h.strong_components();
    if comps.len() == 1 {
        return Ok(Classification::new(
            Verdict::NPCompleteNonTransitive,
            Some(Witness::Chain(Box::new(find_hardness_chain(h)?))),
            &[CITE_CHAIN],
        ));
    }
    let (index, vertices) = comps
        .iter()
        .enumerate()
        .find(|(_, c)| c.len() > 1)
        .map(|(i, c)| (i, c.clone()))
        .expect("non-transitive tournaments have a non-trivial strong component");
    let sub = induced_subgraph(h, &vertices)?.0;
    Ok(Classification::new(
        Verdict::NPCompleteNonTransitive,
        Some(Witness::Component {
            index,
            vertices,
            chain: Box::new(find_hardness_chain(&sub)?),
        }),
        &[CITE_COMPONENTS, CITE_CHAIN],
    ))
}

/// Verdict for a digraph on at most 3 vertices. Rules, first match wins:
/// a single vertex or complete reflexive digraph is trivial; irreflexive
/// semicomplete with two or more cycles is hard; reflexive tournaments go
/// to [`classify_reflexive_tournament`]; a ternary WNU gives a tractable
/// candidate; essentially unary binary and ternary polymorphisms give
/// hardness; anything else is unresolved.
pub fn classify_small_digraph(h: &Digraph) -> Result<Classification> {
    if h.n() == 0 || h.n() > 3 {
        return Err(Error::Precondition("expects 1 to 3 vertices".into()));
    }
    if is_trivial(h) {
        return Ok(Classification::new(Verdict::TrivialSmall, None, &[]));
    }
    if h.is_irreflexive() && h.is_semicomplete() {
        let cycles = simple_cycles(h);
        if cycles.len() >= 2 {
            return Ok(Classification::new(
                Verdict::NPCompleteSemicomplete,
                Some(Witness::Cycles(cycles)),
                &[CITE_BHM],
            ));
        }
    }
    if h.is_reflexive() && h.is_tournament() {
        return classify_reflexive_tournament(h);
    }
    let wnu = if *h == hg() { Some(hg_wnu_table()) } else { find_wnu(h, 3)? };
    if let Some(p) = wnu {
        return Ok(Classification::new(
            Verdict::WNUTractableCandidate,
            Some(Witness::Wnu(p)),
            &[CITE_WNU],
        ));
    }
    let binary = all_polymorphisms_essentially_unary(h, 2)?;
    let ternary = all_polymorphisms_essentially_unary(h, 3)?;
    if binary.holds && ternary.holds {
        return Ok(Classification::new(
            Verdict::EssentiallyUnaryHard,
            Some(Witness::EssentiallyUnary { binary, ternary }),
            &[CITE_CHEN],
        ));
    }
    Ok(Classification::new(
        Verdict::Unresolved,
        Some(Witness::Evidence {
            wnu_found: false,
            binary_unary: binary.holds,
            ternary_unary: ternary.holds,
        }),
        &[],
    ))
}
