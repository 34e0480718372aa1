//! Hardness chains for strongly connected, non-transitive reflexive
//! tournaments.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::endo::{is_endo_trivial, is_pair_endo_trivial, retraction_onto, subsets_of_size, FixMode, Verdict};
use crate::error::{Error, Result};
use crate::gadget::reduce::{build, Case, EmbeddedSubgraph, Recipe, ReductionInstance};
use crate::gadget::spill::{spill, Spill};
use crate::glue::induced_subgraph;
use crate::hom::RetractionInstance;
use crate::iso::isomorphisms;
use crate::map::VertexMap;

/// Which case of the hardness argument closes the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// The template is itself endo-trivial; the chain is the template.
    EndoTrivialDirect,
    BaseI,
    BaseII,
    GeneralI,
    GeneralII,
}

impl Terminal {
    /// Whether the closing reduction starts from retraction to the top link.
    pub fn from_top_link(self) -> bool {
        matches!(self, Terminal::EndoTrivialDirect | Terminal::BaseI | Terminal::GeneralI)
    }

    fn case(self) -> Case {
        match self {
            Terminal::EndoTrivialDirect | Terminal::BaseI => Case::BaseI,
            Terminal::BaseII => Case::BaseII,
            Terminal::GeneralI => Case::GeneralI,
            Terminal::GeneralII => Case::GeneralII,
        }
    }
}

/// Facts about link `i >= 1` relative to link `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFact {
    /// `(H_i, H_{i-1})` endo-trivial, in the numbering of `H_i`.
    pub pair_endo_trivial: Verdict,
    /// Spill of `H_{i-1}` inside `H_i`, in the numbering of `H_i`.
    pub spill: Spill,
}

/// An isomorphic copy of the top link, its spill in the template and, when
/// that spill is everything, a retraction onto it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyFact {
    pub copy: EmbeddedSubgraph,
    pub spill: Vec<usize>,
    pub retraction: Option<VertexMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HardnessChain {
    pub template: Digraph,
    /// `H_0 ⊂ H_1 ⊂ ... ⊂ H_k`, strictly increasing, each with its cycle.
    pub links: Vec<EmbeddedSubgraph>,
    /// `a_i = |V(H_i)|`.
    pub sizes: Vec<usize>,
    pub terminal: Terminal,
    pub base_endo_trivial: Verdict,
    pub link_facts: Vec<LinkFact>,
    /// Terminal I facts: a retraction onto the top link and every copy of it.
    pub retraction_to_top: Option<VertexMap>,
    pub copies: Vec<CopyFact>,
    /// Terminal II facts: the spill of the top link in the template and
    /// endo-triviality of the pair.
    pub top_spill: Option<Spill>,
    pub top_pair: Option<Verdict>,
}

fn check_template(h: &Digraph) -> Result<()> {
    if !h.is_tournament() || !h.is_reflexive() {
        return Err(Error::NotATournament);
    }
    if !h.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    if h.n() < 3 {
        return Err(Error::Precondition("needs a non-transitive tournament".into()));
    }
    Ok(())
}

fn induced(h: &Digraph, vs: &[usize]) -> Result<Digraph> {
    Ok(induced_subgraph(h, vs)?.0)
}

/// Endo-triviality of `(H[outer], inner)` computed in the numbering of
/// `H[outer]`.
fn pair_within(h: &Digraph, outer: &[usize], inner: &[usize]) -> Result<Verdict> {
    let (sub, keep) = induced_subgraph(h, outer)?;
    let local: Vec<usize> = inner
        .iter()
        .map(|v| keep.binary_search(v).map_err(|_| Error::Precondition("link not nested".into())))
        .collect::<Result<_>>()?;
    is_pair_endo_trivial(&sub, &local, FixMode::Setwise)
}

/// Spill of `inner` (with its cycle) inside `H[outer]`, in that numbering.
fn spill_within(h: &Digraph, outer: &[usize], inner: &EmbeddedSubgraph) -> Result<Spill> {
    let (sub, keep) = induced_subgraph(h, outer)?;
    let cycle = inner.cycle.map(|v| keep.binary_search(&v).unwrap_or(usize::MAX));
    if cycle.order.contains(&usize::MAX) {
        return Err(Error::Precondition("link not nested".into()));
    }
    spill(&sub, &cycle)
}

/// Every copy of `link` in `h`: vertex sets in lexicographic order, then
/// isomorphisms in lexicographic order.
fn copies_of(h: &Digraph, link: &EmbeddedSubgraph) -> Result<Vec<(EmbeddedSubgraph, VertexMap)>> {
    let pattern = induced(h, &link.vertices)?;
    let mut out = Vec::new();
    for t in subsets_of_size(h.n(), link.size()) {
        let target = induced(h, &t)?;
        let mut isos = isomorphisms(&pattern, &target);
        isos.sort();
        for iso in isos {
            // extend the local isomorphism to a map on ambient vertices
            let mut image = vec![0; h.n()];
            for (k, &v) in link.vertices.iter().enumerate() {
                image[v] = t[iso.apply(k)];
            }
            let amb = VertexMap::new(image, h.n())?;
            out.push((link.map(&amb), amb));
        }
    }
    Ok(out)
}

fn copy_fact(h: &Digraph, copy: &EmbeddedSubgraph) -> Result<CopyFact> {
    let s = spill(h, &copy.cycle)?;
    let retraction = if s.is_full() { retraction_onto(h, &copy.vertices)? } else { None };
    Ok(CopyFact {
        copy: copy.clone(),
        spill: s.vertices,
        retraction,
    })
}

fn link_facts(h: &Digraph, links: &[EmbeddedSubgraph]) -> Result<Vec<LinkFact>> {
    links
        .windows(2)
        .map(|w| {
            Ok(LinkFact {
                pair_endo_trivial: pair_within(h, &w[1].vertices, &w[0].vertices)?,
                spill: spill_within(h, &w[1].vertices, &w[0])?,
            })
        })
        .collect()
}

/// Smallest (then lexicographically least) vertex set of size at least 3
/// inducing an endo-trivial subtournament that `h` retracts to.
fn smallest_endo_trivial_retract(h: &Digraph) -> Result<Option<(Vec<usize>, VertexMap)>> {
    for size in 3..h.n() {
        for s in subsets_of_size(h.n(), size) {
            let sub = induced(h, &s)?;
            if !sub.is_strongly_connected() {
                continue;
            }
            if let Some(r) = retraction_onto(h, &s)? {
                if is_endo_trivial(&sub)?.holds {
                    return Ok(Some((s, r)));
                }
            }
        }
    }
    Ok(None)
}

/// First vertex set strictly between `inner` and `V(h)` (by size, then
/// lexicographic) with `(H[X], inner)` endo-trivial and `h` retracting to
/// `X`.
fn next_link(h: &Digraph, inner: &[usize]) -> Result<Option<Vec<usize>>> {
    let rest: Vec<usize> = (0..h.n()).filter(|v| !inner.contains(v)).collect();
    for extra in 1..rest.len() {
        for pick in subsets_of_size(rest.len(), extra) {
            let mut x: Vec<usize> = inner.to_vec();
            x.extend(pick.iter().map(|&i| rest[i]));
            x.sort_unstable();
            if retraction_onto(h, &x)?.is_some() && pair_within(h, &x, inner)?.holds {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Builds the chain of the hardness argument for `h`.
///
/// Starts from the smallest endo-trivial retract. While some copy of the
/// top link has full spill but is not a retract, the chain is moved onto
/// that copy and either closes there (pair endo-trivial) or grows by the
/// first larger retract that is pair endo-trivial over it.
pub fn find_hardness_chain(h: &Digraph) -> Result<HardnessChain> {
    check_template(h)?;
    if is_endo_trivial(h)?.holds {
        let whole: Vec<usize> = (0..h.n()).collect();
        let full = EmbeddedSubgraph::with_cycle(h, &whole)?;
        return certify(h, vec![full], Terminal::EndoTrivialDirect);
    }
    let (h0, _) = smallest_endo_trivial_retract(h)?.ok_or_else(|| {
        Error::Unresolved("no endo-trivial retract found, contradicting the argument".into())
    })?;
    let mut links = vec![EmbeddedSubgraph::with_cycle(h, &h0)?];
    loop {
        let top = links.last().expect("non-empty").clone();
        let mut bad = None;
        for (copy, amb) in copies_of(h, &top)? {
            let f = copy_fact(h, &copy)?;
            if f.spill.len() == h.n() && f.retraction.is_none() {
                bad = Some(amb);
                break;
            }
        }
        let Some(amb) = bad else {
            let t = if links.len() == 1 { Terminal::BaseI } else { Terminal::GeneralI };
            return certify(h, links, t);
        };
        let moved: Vec<EmbeddedSubgraph> = links.iter().map(|l| l.map(&amb)).collect();
        let new_top = moved.last().expect("non-empty").clone();
        if is_pair_endo_trivial(h, &new_top.vertices, FixMode::Setwise)?.holds {
            let t = if moved.len() == 1 { Terminal::BaseII } else { Terminal::GeneralII };
            return certify(h, moved, t);
        }
        let x = next_link(h, &new_top.vertices)?.ok_or_else(|| {
            Error::Unresolved(format!(
                "no intermediate retract above {:?}, contradicting the argument",
                new_top.vertices
            ))
        })?;
        links = moved;
        links.push(EmbeddedSubgraph::with_cycle(h, &x)?);
    }
}

/// Computes every fact for a given chain and terminal case, then checks
/// them. Fails when the chain does not meet the case's preconditions.
pub fn certify(h: &Digraph, links: Vec<EmbeddedSubgraph>, terminal: Terminal) -> Result<HardnessChain> {
    check_template(h)?;
    let top = links
        .last()
        .ok_or_else(|| Error::Precondition("empty chain".into()))?
        .clone();
    let (retraction_to_top, copies, top_spill, top_pair) = if terminal.from_top_link() {
        let copies = copies_of(h, &top)?
            .iter()
            .map(|(c, _)| copy_fact(h, c))
            .collect::<Result<Vec<_>>>()?;
        (retraction_onto(h, &top.vertices)?, copies, None, None)
    } else {
        let pair = is_pair_endo_trivial(h, &top.vertices, FixMode::Setwise)?;
        (None, Vec::new(), Some(spill(h, &top.cycle)?), Some(pair))
    };
    let chain = HardnessChain {
        template: h.clone(),
        sizes: links.iter().map(EmbeddedSubgraph::size).collect(),
        terminal,
        base_endo_trivial: is_endo_trivial(&induced(h, &links[0].vertices)?)?,
        link_facts: link_facts(h, &links)?,
        retraction_to_top,
        copies,
        top_spill,
        top_pair,
        links,
    };
    chain.verify()?;
    Ok(chain)
}

impl HardnessChain {
    /// Template of the problem the closing reduction starts from.
    pub fn source_template(&self) -> Result<Digraph> {
        if self.terminal.from_top_link() {
            induced(&self.template, &self.links.last().expect("non-empty").vertices)
        } else {
            Ok(self.template.clone())
        }
    }

    /// The closing reduction applied to `source`, an instance over
    /// [`Self::source_template`].
    pub fn terminal_reduction(&self, source: &RetractionInstance) -> Result<ReductionInstance> {
        build(&Recipe::Chain {
            case: self.terminal.case(),
            template: self.template.clone(),
            chain: self.links.clone(),
            source: source.clone(),
        })
    }

    /// Recomputes every recorded fact and checks the preconditions of the
    /// terminal case. Returns the first failure.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Unresolved(format!("chain check failed: {what}")));
        let h = &self.template;
        check_template(h)?;
        if self.links.is_empty() || self.sizes != self.links.iter().map(EmbeddedSubgraph::size).collect::<Vec<_>>() {
            return fail("sizes");
        }
        for l in &self.links {
            l.validate(h)?;
        }
        for w in self.links.windows(2) {
            if w[0].size() >= w[1].size() || !w[0].vertices.iter().all(|&v| w[1].contains(v)) {
                return fail("links not strictly nested");
            }
        }
        let base = is_endo_trivial(&induced(h, &self.links[0].vertices)?)?;
        if !base.holds || base != self.base_endo_trivial {
            return fail("bottom link endo-trivial");
        }
        let facts = link_facts(h, &self.links)?;
        if facts != self.link_facts {
            return fail("link facts");
        }
        for f in &facts {
            if !f.pair_endo_trivial.holds || !f.spill.is_full() || !f.spill.verify() {
                return fail("link pair or spill");
            }
        }
        let top = self.links.last().expect("non-empty");
        if self.terminal.from_top_link() {
            let ok_shape = match self.terminal {
                Terminal::EndoTrivialDirect => self.links.len() == 1 && top.size() == h.n(),
                Terminal::BaseI => self.links.len() == 1,
                _ => self.links.len() >= 2,
            };
            if !ok_shape {
                return fail("terminal shape");
            }
            match &self.retraction_to_top {
                Some(r) if r.is_homomorphism(h, h)
                    && top.vertices.iter().all(|&v| r.apply(v) == v)
                    && (0..h.n()).all(|v| top.contains(r.apply(v))) => {}
                _ => return fail("retraction to top link"),
            }
            let mut expected = Vec::new();
            for (copy, _) in copies_of(h, top)? {
                expected.push(copy_fact(h, &copy)?);
            }
            if expected != self.copies {
                return fail("copies");
            }
            for c in &self.copies {
                if c.spill.len() == h.n() {
                    match &c.retraction {
                        Some(r) if r.is_homomorphism(h, h)
                            && c.copy.vertices.iter().all(|&v| r.apply(v) == v) => {}
                        _ => return fail("retraction to a full-spill copy"),
                    }
                }
            }
        } else {
            if (self.terminal == Terminal::BaseII) != (self.links.len() == 1) {
                return fail("terminal shape");
            }
            let s = spill(h, &top.cycle)?;
            if !s.is_full() || !s.verify() || Some(&s) != self.top_spill.as_ref() {
                return fail("top spill");
            }
            let p = is_pair_endo_trivial(h, &top.vertices, FixMode::Setwise)?;
            if !p.holds || Some(&p) != self.top_pair.as_ref() {
                return fail("top pair endo-trivial");
            }
        }
        Ok(())
    }
}
