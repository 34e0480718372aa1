//! Reductions between retraction and surjective colouring problems.
//!
//! Every output records where each of its vertices came from and the exact
//! inputs that produced it, so it can be rebuilt and checked independently.

use serde::{Deserialize, Serialize};

use super::cyl::build_cyl;
use super::spill::spill_by_position;
use crate::digraph::{Digraph, HamiltonCycle};
use crate::error::{Error, Result};
use crate::glue::{glue, induced_subgraph, Slot};
use crate::hom::{retraction_search, HomSearch, RetractionInstance};
use crate::limits;
use crate::map::VertexMap;

/// An induced subgraph of a host given by its vertex set (ascending) and a
/// Hamilton cycle through exactly those vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddedSubgraph {
    pub vertices: Vec<usize>,
    pub cycle: HamiltonCycle,
}

impl EmbeddedSubgraph {
    pub fn new(host: &Digraph, mut vertices: Vec<usize>, cycle: HamiltonCycle) -> Result<Self> {
        vertices.sort_unstable();
        let s = EmbeddedSubgraph { vertices, cycle };
        s.validate(host)?;
        Ok(s)
    }

    /// Uses the Hamilton cycle found by [`Digraph::hamilton_cycle`] on the
    /// induced subgraph.
    pub fn with_cycle(host: &Digraph, vertices: &[usize]) -> Result<Self> {
        let (sub, keep) = induced_subgraph(host, vertices)?;
        let cycle = sub.hamilton_cycle()?.map(|v| keep[v]);
        EmbeddedSubgraph::new(host, keep, cycle)
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn validate(&self, host: &Digraph) -> Result<()> {
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("subgraph vertices must ascend strictly".into()));
        }
        if let Some(&bad) = self.vertices.iter().find(|&&v| v >= host.n()) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: host.n() });
        }
        if self.size() < 2 || !self.cycle.verify(host, Some(&self.vertices)) {
            return Err(Error::Precondition(format!(
                "{:?} is not a Hamilton cycle of the subgraph on {:?}",
                self.cycle.order, self.vertices
            )));
        }
        Ok(())
    }

    /// The subgraph together with its cycle in the induced subgraph's own
    /// numbering.
    pub fn localise(&self, host: &Digraph) -> Result<(Digraph, HamiltonCycle)> {
        let (sub, keep) = induced_subgraph(host, &self.vertices)?;
        let cycle = self.cycle.map(|v| keep.binary_search(&v).expect("validated"));
        Ok((sub, cycle))
    }

    /// Image under an injective map.
    pub fn map(&self, f: &VertexMap) -> Self {
        let mut vertices: Vec<usize> = self.vertices.iter().map(|&v| f.apply(v)).collect();
        vertices.sort_unstable();
        EmbeddedSubgraph {
            vertices,
            cycle: self.cycle.map(|v| f.apply(v)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Retraction,
    SurjectiveColouring,
}

/// What the reduction asserts: the source instance is a yes-instance of
/// `source` over `source_template` iff the output is a yes-instance of
/// `target` over `target_template`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub source: Problem,
    pub source_template: Digraph,
    pub target: Problem,
    pub target_template: Digraph,
}

/// The cylinder constructions, indexed by the case of the hardness argument
/// they serve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    BaseI,
    BaseII,
    GeneralI,
    GeneralII,
    /// The second general construction with cylinders on chain vertices
    /// only. Not answer-preserving in general; kept for comparison.
    GeneralIIChainOnly,
}

impl Case {
    /// Whether the source template is the largest chain link (rather than
    /// the whole template).
    fn source_is_link(self) -> bool {
        matches!(self, Case::BaseI | Case::GeneralI)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Chain {
        case: Case,
        template: Digraph,
        chain: Vec<EmbeddedSubgraph>,
        source: RetractionInstance,
    },
    Components {
        template: Digraph,
        component: usize,
        source: Digraph,
    },
    Connectify {
        template: Digraph,
        source: RetractionInstance,
    },
}

/// Where an output vertex came from. A vertex produced by identification
/// carries one origin per merged part vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Source(usize),
    Template(usize),
    /// Cylinder `copy` (in order of attachment) of size `m`, at cycle
    /// `position` on stacked copy `level` (0 is the bottom).
    Gadget {
        copy: usize,
        m: usize,
        position: usize,
        level: usize,
    },
    /// Vertex `step` of connecting path `path` (0 is its start).
    Path { path: usize, step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub digraph: Digraph,
    /// For retraction targets, the copy of the target template.
    pub embedding: Option<Vec<usize>>,
    pub provenance: Vec<Vec<Origin>>,
    pub claim: Claim,
    pub recipe: Recipe,
}

/// Answers on both sides of a reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Soundness {
    pub source: bool,
    pub target: bool,
}

impl Soundness {
    pub fn agrees(&self) -> bool {
        self.source == self.target
    }
}

impl ReductionInstance {
    /// Rebuilds the instance from its recipe.
    pub fn replay(&self) -> Result<ReductionInstance> {
        build(&self.recipe)
    }

    pub fn target_instance(&self) -> Option<RetractionInstance> {
        self.embedding.as_ref().map(|e| RetractionInstance {
            g: self.digraph.clone(),
            embedding: e.clone(),
        })
    }

    /// Solves the source instance exactly.
    pub fn source_answer(&self) -> Result<bool> {
        let t = &self.claim.source_template;
        match &self.recipe {
            Recipe::Chain { source, .. } | Recipe::Connectify { source, .. } => {
                retracts(source, t)
            }
            Recipe::Components { source, .. } => surjects(source, t),
        }
    }

    /// Solves the output instance exactly.
    pub fn target_answer(&self) -> Result<bool> {
        let t = &self.claim.target_template;
        match self.claim.target {
            Problem::SurjectiveColouring => surjects(&self.digraph, t),
            Problem::Retraction => {
                let inst = self.target_instance().ok_or_else(|| {
                    Error::Precondition("retraction target without embedding".into())
                })?;
                retracts(&inst, t)
            }
        }
    }

    pub fn check_soundness(&self) -> Result<Soundness> {
        Ok(Soundness {
            source: self.source_answer()?,
            target: self.target_answer()?,
        })
    }
}

fn retracts(inst: &RetractionInstance, t: &Digraph) -> Result<bool> {
    inst.validate(t)?;
    retraction_search(inst, t)?.max_source_vertices(inst.g.n()).exists()
}

fn surjects(g: &Digraph, t: &Digraph) -> Result<bool> {
    HomSearch::new(g, t)
        .surjective(true)
        .max_source_vertices(g.n())
        .exists()
}

pub fn build(recipe: &Recipe) -> Result<ReductionInstance> {
    match recipe {
        Recipe::Chain {
            case,
            template,
            chain,
            source,
        } => chain_reduction(*case, template, chain, source),
        Recipe::Components {
            template,
            component,
            source,
        } => reduce_components(template, *component, source),
        Recipe::Connectify { template, source } => connectify(template, source),
    }
}

// ---- assembly ----------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
enum PartKind {
    Template,
    Source,
    Gadget { copy: usize, m: usize },
    Path { path: usize },
}

/// Parts and identifications collected before a single call to [`glue`].
struct Assembly {
    parts: Vec<(Digraph, PartKind)>,
    identify: Vec<(Slot, Slot)>,
    gadgets: usize,
}

impl Assembly {
    fn new() -> Self {
        Assembly {
            parts: Vec::new(),
            identify: Vec::new(),
            gadgets: 0,
        }
    }

    fn part(&mut self, d: Digraph, kind: PartKind) -> usize {
        self.parts.push((d, kind));
        self.parts.len() - 1
    }

    /// Hangs a cylinder with top position `position` on `top` and bottom
    /// position `i` on `bottom[i]`.
    fn hang(&mut self, top: Slot, position: usize, bottom: &[Slot]) -> Result<()> {
        let cyl = build_cyl(bottom.len())?;
        let copy = self.gadgets;
        self.gadgets += 1;
        let p = self.part(cyl.digraph.clone(), PartKind::Gadget { copy, m: cyl.m });
        self.identify.push((top, Slot::new(p, cyl.top[position])));
        for (i, &b) in bottom.iter().enumerate() {
            self.identify.push((b, Slot::new(p, cyl.bottom[i])));
        }
        Ok(())
    }

    fn finish(self) -> Result<(Digraph, Vec<Vec<Origin>>, Vec<Vec<usize>>)> {
        let total: usize = self.parts.iter().map(|(d, _)| d.n()).sum();
        limits::check("reduction output vertices", total as u128, limits::size_bound())?;
        let refs: Vec<&Digraph> = self.parts.iter().map(|(d, _)| d).collect();
        let g = glue(&refs, &self.identify)?;
        let provenance = g
            .origins
            .iter()
            .map(|slots| {
                slots
                    .iter()
                    .map(|s| match self.parts[s.part].1 {
                        PartKind::Template => Origin::Template(s.vertex),
                        PartKind::Source => Origin::Source(s.vertex),
                        PartKind::Gadget { copy, m } => Origin::Gadget {
                            copy,
                            m,
                            position: s.vertex % m,
                            level: s.vertex / m,
                        },
                        PartKind::Path { path } => Origin::Path { path, step: s.vertex },
                    })
                    .collect()
            })
            .collect();
        Ok((g.digraph, provenance, g.placement))
    }
}

// ---- cylinder reductions -------------------------------------------------------

/// Which top position of a cylinder on a given cycle can reach which
/// template vertex. The forward direction of each reduction sends the
/// identified top vertex to a known or arbitrary template vertex, so the
/// position is picked from this table.
struct Positions {
    table: Vec<Vec<usize>>,
    n: usize,
}

impl Positions {
    fn new(template: &Digraph, cycle: &HamiltonCycle) -> Result<Self> {
        Ok(Positions {
            table: spill_by_position(template, cycle)?,
            n: template.n(),
        })
    }

    /// Least position reaching `y`.
    fn reaching(&self, y: usize) -> Result<usize> {
        self.table
            .iter()
            .position(|hit| hit.binary_search(&y).is_ok())
            .ok_or_else(|| Error::Precondition(format!("vertex {y} is outside the spill")))
    }

    /// Least position reaching every template vertex.
    fn universal(&self) -> Result<usize> {
        self.table
            .iter()
            .position(|hit| hit.len() == self.n)
            .ok_or_else(|| Error::Precondition("no top position reaches every vertex".into()))
    }
}

fn check_chain(case: Case, template: &Digraph, chain: &[EmbeddedSubgraph]) -> Result<()> {
    if !template.is_reflexive() {
        return Err(Error::Precondition("template must be reflexive".into()));
    }
    let ok_len = match case {
        Case::BaseI | Case::BaseII => chain.len() == 1,
        Case::GeneralI | Case::GeneralII => chain.len() >= 2,
        Case::GeneralIIChainOnly => !chain.is_empty(),
    };
    if !ok_len {
        return Err(Error::Precondition(format!(
            "{case:?} does not take a chain of {} links",
            chain.len()
        )));
    }
    for link in chain {
        link.validate(template)?;
    }
    for w in chain.windows(2) {
        if w[0].size() >= w[1].size() || !w[0].vertices.iter().all(|&v| w[1].contains(v)) {
            return Err(Error::Precondition("chain links must be strictly nested".into()));
        }
    }
    Ok(())
}

fn chain_reduction(
    case: Case,
    template: &Digraph,
    chain: &[EmbeddedSubgraph],
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    check_chain(case, template, chain)?;
    let top = chain.last().expect("checked non-empty");
    let source_template = if case.source_is_link() {
        induced_subgraph(template, &top.vertices)?.0
    } else {
        template.clone()
    };
    source.validate(&source_template)?;

    let mut asm = Assembly::new();
    if case.source_is_link() {
        // the template glued to the source along the top link
        asm.part(template.clone(), PartKind::Template);
        asm.part(source.g.clone(), PartKind::Source);
        for (x, &v) in top.vertices.iter().enumerate() {
            asm.identify.push((Slot::new(0, v), Slot::new(1, source.embedding[x])));
        }
        let bottom: Vec<Slot> = top.cycle.order.iter().map(|&v| Slot::new(0, v)).collect();
        let pos = Positions::new(template, &top.cycle)?;
        for v in (0..template.n()).filter(|&v| !top.contains(v)) {
            asm.hang(Slot::new(0, v), pos.reaching(v)?, &bottom)?;
        }
        // source vertices land in the top link, which every position reaches
        let mut used = vec![false; source.g.n()];
        for &u in &source.embedding {
            used[u] = true;
        }
        for u in (0..source.g.n()).filter(|&u| !used[u]) {
            asm.hang(Slot::new(1, u), 0, &bottom)?;
        }
        for i in 1..chain.len() {
            let lower: Vec<Slot> = chain[i - 1].cycle.order.iter().map(|&v| Slot::new(0, v)).collect();
            let pos = Positions::new(template, &chain[i - 1].cycle)?;
            for &v in chain[i].vertices.iter().filter(|&&v| !chain[i - 1].contains(v)) {
                asm.hang(Slot::new(0, v), pos.reaching(v)?, &lower)?;
            }
        }
    } else {
        asm.part(source.g.clone(), PartKind::Source);
        let emb = &source.embedding;
        let at = |v: usize| Slot::new(0, emb[v]);
        let cycle_slots = |l: &EmbeddedSubgraph| -> Vec<Slot> { l.cycle.order.iter().map(|&v| at(v)).collect() };
        if case == Case::GeneralIIChainOnly {
            for i in 1..=chain.len() {
                let lower = &chain[i - 1];
                let pos = Positions::new(template, &lower.cycle)?;
                let level: Vec<usize> = match chain.get(i) {
                    Some(l) => l.vertices.clone(),
                    None => (0..template.n()).collect(),
                };
                for v in level.into_iter().filter(|&v| !lower.contains(v)) {
                    asm.hang(at(v), pos.reaching(v)?, &cycle_slots(lower))?;
                }
            }
        } else {
            // template vertices are sent to themselves, other source
            // vertices anywhere
            let mut role = vec![None; source.g.n()];
            for (v, &u) in emb.iter().enumerate() {
                role[u] = Some(v);
            }
            let bottom = cycle_slots(top);
            let pos = Positions::new(template, &top.cycle)?;
            for (u, r) in role.iter().enumerate() {
                let p = match *r {
                    Some(v) if top.contains(v) => continue,
                    Some(v) => pos.reaching(v)?,
                    None => pos.universal()?,
                };
                asm.hang(Slot::new(0, u), p, &bottom)?;
            }
            for i in 1..chain.len() {
                let lower = cycle_slots(&chain[i - 1]);
                let pos = Positions::new(template, &chain[i - 1].cycle)?;
                for &v in chain[i].vertices.iter().filter(|&&v| !chain[i - 1].contains(v)) {
                    asm.hang(at(v), pos.reaching(v)?, &lower)?;
                }
            }
        }
    }
    let (digraph, provenance, _) = asm.finish()?;
    Ok(ReductionInstance {
        digraph,
        embedding: None,
        provenance,
        claim: Claim {
            source: Problem::Retraction,
            source_template,
            target: Problem::SurjectiveColouring,
            target_template: template.clone(),
        },
        recipe: Recipe::Chain {
            case,
            template: template.clone(),
            chain: chain.to_vec(),
            source: source.clone(),
        },
    })
}

/// Retraction to `h0` (an induced subgraph with a Hamilton cycle) reduces
/// to surjective `template`-colouring when the template retracts to every
/// copy of `h0` whose spill is everything.
///
/// `source` is an instance over the subgraph induced on `h0.vertices`, in
/// that subgraph's ascending numbering.
pub fn reduce_base_i(
    template: &Digraph,
    h0: &EmbeddedSubgraph,
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    chain_reduction(Case::BaseI, template, std::slice::from_ref(h0), source)
}

/// Retraction to `template` reduces to surjective `template`-colouring when
/// `(template, h0)` and `h0` are endo-trivial and the spill of `h0` is
/// everything.
pub fn reduce_base_ii(
    template: &Digraph,
    h0: &EmbeddedSubgraph,
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    chain_reduction(Case::BaseII, template, std::slice::from_ref(h0), source)
}

/// Chain version of [`reduce_base_i`]: retraction to the last link reduces
/// to surjective `template`-colouring. Every vertex outside the last link
/// gets a cylinder on the last link's cycle, and every vertex new to link
/// `i` gets one on the cycle of link `i - 1`.
pub fn reduce_general_i(
    template: &Digraph,
    chain: &[EmbeddedSubgraph],
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    chain_reduction(Case::GeneralI, template, chain, source)
}

/// Chain version of [`reduce_base_ii`]. Source vertices outside the copy of
/// the last link get cylinders on its cycle, and template vertices new to
/// link `i` get cylinders on the cycle of link `i - 1`.
pub fn reduce_general_ii(
    template: &Digraph,
    chain: &[EmbeddedSubgraph],
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    chain_reduction(Case::GeneralII, template, chain, source)
}

/// [`reduce_general_ii`] without cylinders on source vertices outside the
/// copy of the template.
pub fn reduce_general_ii_chain_only(
    template: &Digraph,
    chain: &[EmbeddedSubgraph],
    source: &RetractionInstance,
) -> Result<ReductionInstance> {
    chain_reduction(Case::GeneralIIChainOnly, template, chain, source)
}

// ---- structural reductions -------------------------------------------------------

/// Surjective colouring by strong component `component` (in topological
/// order) of `template` reduces to surjective `template`-colouring, for
/// strongly connected sources.
///
/// Output: template vertices of earlier components, then `source`, then
/// template vertices of later components. Earlier vertices dominate the
/// source and the source dominates later vertices.
pub fn reduce_components(
    template: &Digraph,
    component: usize,
    source: &Digraph,
) -> Result<ReductionInstance> {
    let comps = template.strong_components();
    let comp = comps.get(component).ok_or_else(|| {
        Error::Precondition(format!(
            "component {component} out of range ({} components)",
            comps.len()
        ))
    })?;
    if !source.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let prefix: Vec<usize> = comps[..component].iter().flatten().copied().collect();
    let suffix: Vec<usize> = comps[component + 1..].iter().flatten().copied().collect();
    let (p, s, n) = (prefix.len(), suffix.len(), source.n());
    limits::check("reduction output vertices", (p + n + s) as u128, limits::size_bound())?;

    let mut out_id = vec![usize::MAX; template.n()];
    for (i, &v) in prefix.iter().enumerate() {
        out_id[v] = i;
    }
    for (i, &v) in suffix.iter().enumerate() {
        out_id[v] = p + n + i;
    }
    let mut edges: Vec<(usize, usize)> = template
        .edges()
        .filter(|&(u, v)| out_id[u] != usize::MAX && out_id[v] != usize::MAX)
        .map(|(u, v)| (out_id[u], out_id[v]))
        .collect();
    edges.extend(source.edges().map(|(u, v)| (p + u, p + v)));
    for u in 0..n {
        edges.extend((0..p).map(|a| (a, p + u)));
        edges.extend((0..s).map(|b| (p + u, p + n + b)));
    }
    let mut provenance: Vec<Vec<Origin>> = prefix.iter().map(|&v| vec![Origin::Template(v)]).collect();
    provenance.extend((0..n).map(|u| vec![Origin::Source(u)]));
    provenance.extend(suffix.iter().map(|&v| vec![Origin::Template(v)]));
    Ok(ReductionInstance {
        digraph: Digraph::new(p + n + s, edges)?,
        embedding: None,
        provenance,
        claim: Claim {
            source: Problem::SurjectiveColouring,
            source_template: induced_subgraph(template, comp)?.0,
            target: Problem::SurjectiveColouring,
            target_template: template.clone(),
        },
        recipe: Recipe::Components {
            template: template.clone(),
            component,
            source: source.clone(),
        },
    })
}

/// Makes a retraction instance strongly connected without changing its
/// answer, for strongly connected reflexive templates.
///
/// With strong components `C_1, ..., C_t` (topological order, `t > 1`),
/// a directed path with `|V(template)|` fresh loopless internal vertices
/// runs from the least vertex of `C_j` to the least vertex of `C_{j+1}`,
/// and from `C_t` back to `C_1`. A strongly connected reflexive template
/// has walks of every length at least its diameter between any two
/// vertices, so every retraction extends along the paths.
pub fn connectify(template: &Digraph, source: &RetractionInstance) -> Result<ReductionInstance> {
    if !template.is_reflexive() {
        return Err(Error::Precondition("template must be reflexive".into()));
    }
    if !template.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    source.validate(template)?;
    let comps = source.g.strong_components();
    let mut asm = Assembly::new();
    asm.part(source.g.clone(), PartKind::Source);
    if comps.len() > 1 {
        let len = template.n() + 2;
        let path = Digraph::new(len, (0..len - 1).map(|i| (i, i + 1)))?;
        let reps: Vec<usize> = comps.iter().map(|c| c[0]).collect();
        for j in 0..reps.len() {
            let p = asm.part(path.clone(), PartKind::Path { path: j });
            asm.identify.push((Slot::new(0, reps[j]), Slot::new(p, 0)));
            asm.identify.push((Slot::new(0, reps[(j + 1) % reps.len()]), Slot::new(p, len - 1)));
        }
    }
    let (digraph, provenance, placement) = asm.finish()?;
    let embedding: Vec<usize> = source.embedding.iter().map(|&u| placement[0][u]).collect();
    Ok(ReductionInstance {
        digraph,
        embedding: Some(embedding),
        provenance,
        claim: Claim {
            source: Problem::Retraction,
            source_template: template.clone(),
            target: Problem::Retraction,
            target_template: template.clone(),
        },
        recipe: Recipe::Connectify {
            template: template.clone(),
            source: source.clone(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::t4;
    use crate::digraph::{directed_cycle, transitive_tournament};

    fn dc3_in_t4() -> EmbeddedSubgraph {
        EmbeddedSubgraph::new(&t4(), vec![0, 1, 2], HamiltonCycle::new(vec![0, 1, 2])).unwrap()
    }

    #[test]
    fn base_i_on_trivial_source() {
        let h = t4();
        let dc3 = directed_cycle(3, true);
        let src = RetractionInstance::trivial(&dc3);
        let r = reduce_base_i(&h, &dc3_in_t4(), &src).unwrap();
        // G' = T4; vertex 3 gets one Cyl_3 (5 new vertices)
        assert_eq!(r.digraph.n(), 4 + 5);
        assert_eq!(
            r.provenance[0],
            vec![
                Origin::Template(0),
                Origin::Source(0),
                Origin::Gadget { copy: 0, m: 3, position: 0, level: 0 }
            ]
        );
        assert_eq!(r.replay().unwrap(), r);
        let s = r.check_soundness().unwrap();
        assert!(s.source && s.agrees());
    }

    #[test]
    fn embedded_subgraph_checks_cycle() {
        let h = t4();
        assert!(EmbeddedSubgraph::new(&h, vec![0, 1, 2], HamiltonCycle::new(vec![0, 2, 1])).is_err());
        let e = EmbeddedSubgraph::with_cycle(&h, &[3, 1, 2]).unwrap();
        assert_eq!(e.vertices, vec![1, 2, 3]);
    }

    #[test]
    fn chain_shape_is_checked() {
        let h = t4();
        let src = RetractionInstance::trivial(&h);
        let l = dc3_in_t4();
        assert!(reduce_general_ii(&h, &[l.clone()], &src).is_err());
        assert!(reduce_base_ii(&h, &l, &src).is_ok());
        assert!(reduce_general_i(&h, &[l.clone(), l], &src).is_err());
    }

    #[test]
    fn components_layout() {
        // TT2* then DC3*: component order {0}, {1,2,3}
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)];
        edges.extend((0..4).map(|v| (v, v)));
        let h = Digraph::new(4, edges).unwrap();
        let g = directed_cycle(4, true);
        let r = reduce_components(&h, 1, &g).unwrap();
        assert_eq!(r.digraph.n(), 5);
        assert!(r.digraph.has_edge(0, 3));
        assert_eq!(r.provenance[1], vec![Origin::Source(0)]);
        assert!(r.check_soundness().unwrap().agrees());
        assert_eq!(reduce_components(&h, 1, &transitive_tournament(2, true)).unwrap_err(), Error::NotStronglyConnected);
    }

    #[test]
    fn connectify_adds_paths() {
        let h = directed_cycle(3, true);
        // DC3* plus an isolated loopless vertex
        let mut edges: Vec<(usize, usize)> = h.edges().collect();
        edges.push((3, 0));
        let g = Digraph::new(4, edges).unwrap();
        let src = RetractionInstance::new(g, vec![0, 1, 2], &h).unwrap();
        let r = connectify(&h, &src).unwrap();
        assert!(r.digraph.is_strongly_connected());
        assert_eq!(r.digraph.n(), 4 + 2 * 3);
        assert_eq!(r.embedding, Some(vec![0, 1, 2]));
        assert!(r.check_soundness().unwrap().agrees());
        assert_eq!(r.replay().unwrap(), r);
    }
}
