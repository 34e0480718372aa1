//! Decision and witness search for the homomorphism problem family.
//!
//! All variants go through [`HomSearch`], which restricts per-vertex
//! candidate lists and optionally demands vertex-surjectivity or
//! edge-surjectivity on non-loop edges (compaction). Reported witnesses are
//! the lexicographically least solution in image order.

pub mod brute;
mod engine;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::{self, DEFAULT_SOURCE_BOUND, MAX_TARGET_VERTICES};
use crate::map::VertexMap;

use engine::Engine;

/// Which member of the problem family is being asked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Hom,
    Surjective,
    Retraction,
    Compaction,
    List,
}

/// Allowed template vertices for every source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>) -> Self {
        ListAssignment { lists }
    }

    /// Every list is the whole template.
    pub fn full(g_n: usize, h_n: usize) -> Self {
        ListAssignment {
            lists: vec![(0..h_n).collect(); g_n],
        }
    }

    pub fn validate(&self, g: &Digraph, h: &Digraph) -> Result<()> {
        if self.lists.len() != g.n() {
            return Err(Error::Precondition(format!(
                "{} lists given for {} source vertices",
                self.lists.len(),
                g.n()
            )));
        }
        for &x in self.lists.iter().flatten() {
            if x >= h.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: h.n() });
            }
        }
        Ok(())
    }
}

/// A superstructure `g` of the template together with the copy of the
/// template inside it: `embedding[x]` is the vertex of `g` playing `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractionInstance {
    pub g: Digraph,
    pub embedding: Vec<usize>,
}

impl RetractionInstance {
    /// Checks that `embedding` is an injective map from `V(h)` onto an
    /// induced copy of `h` in `g`.
    pub fn new(g: Digraph, embedding: Vec<usize>, h: &Digraph) -> Result<Self> {
        let inst = RetractionInstance { g, embedding };
        inst.validate(h)?;
        Ok(inst)
    }

    pub fn validate(&self, h: &Digraph) -> Result<()> {
        if self.embedding.len() != h.n() {
            return Err(Error::InvalidEmbedding(format!(
                "embedding has {} entries for a template of {} vertices",
                self.embedding.len(),
                h.n()
            )));
        }
        let map = VertexMap::new(self.embedding.clone(), self.g.n())
            .map_err(|e| Error::InvalidEmbedding(e.to_string()))?;
        if !map.is_injective() {
            return Err(Error::InvalidEmbedding("embedding is not injective".into()));
        }
        for x in 0..h.n() {
            for y in 0..h.n() {
                if h.has_edge(x, y) != self.g.has_edge(self.embedding[x], self.embedding[y]) {
                    return Err(Error::InvalidEmbedding(format!(
                        "pair ({x},{y}) is not preserved and reflected"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The instance whose superstructure is the template itself.
    pub fn trivial(h: &Digraph) -> Self {
        RetractionInstance {
            g: h.clone(),
            embedding: (0..h.n()).collect(),
        }
    }
}

/// Configurable search for homomorphisms `g -> h`.
#[derive(Debug, Clone)]
pub struct HomSearch<'a> {
    g: &'a Digraph,
    h: &'a Digraph,
    domains: Vec<u64>,
    surjective: bool,
    compaction: bool,
    max_source: usize,
}

impl<'a> HomSearch<'a> {
    pub fn new(g: &'a Digraph, h: &'a Digraph) -> Self {
        let full = if h.n() >= 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
        HomSearch {
            g,
            h,
            domains: vec![full; g.n()],
            surjective: false,
            compaction: false,
            max_source: DEFAULT_SOURCE_BOUND,
        }
    }

    /// Require every template vertex to be hit.
    pub fn surjective(mut self, on: bool) -> Self {
        self.surjective = on;
        self
    }

    /// Require every non-loop template edge to be hit.
    pub fn compaction(mut self, on: bool) -> Self {
        self.compaction = on;
        self
    }

    /// Raises or lowers the refusal threshold on `|V(g)|`.
    pub fn max_source_vertices(mut self, n: usize) -> Self {
        self.max_source = n;
        self
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.g.n() });
        }
        Ok(())
    }

    /// Intersect the candidates of `v` with `allowed`.
    pub fn restrict(mut self, v: usize, allowed: &[usize]) -> Result<Self> {
        self.check_vertex(v)?;
        let mut mask = 0u64;
        for &x in allowed {
            if x >= self.h.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.h.n() });
            }
            mask |= 1 << x;
        }
        self.domains[v] &= mask;
        Ok(self)
    }

    /// Pin `v` to the template vertex `x`.
    pub fn fix(self, v: usize, x: usize) -> Result<Self> {
        self.restrict(v, &[x])
    }

    pub fn lists(mut self, lists: &ListAssignment) -> Result<Self> {
        lists.validate(self.g, self.h)?;
        for (v, l) in lists.lists.iter().enumerate() {
            self = self.restrict(v, l)?;
        }
        Ok(self)
    }

    fn engine(&self) -> Result<Engine> {
        if self.h.n() > MAX_TARGET_VERTICES {
            return Err(Error::SizeBound {
                what: "template vertices",
                size: self.h.n() as u128,
                bound: MAX_TARGET_VERTICES as u128,
            });
        }
        limits::check("source vertices", self.g.n() as u128, self.max_source)?;
        Ok(Engine::new(
            self.g,
            self.h,
            &self.domains,
            self.surjective,
            self.compaction,
        ))
    }

    pub fn exists(&self) -> Result<bool> {
        Ok(self.engine()?.decide())
    }

    /// Lexicographically least solution.
    pub fn first(&self) -> Result<Option<VertexMap>> {
        let e = self.engine()?;
        Ok(e.first().map(|img| VertexMap::new(img, self.h.n()).expect("engine output in range")))
    }

    /// Visits solutions in lexicographic order until `f` breaks.
    pub fn for_each(&self, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) -> Result<()> {
        self.engine()?.for_each(&mut f);
        Ok(())
    }

    pub fn all(&self) -> Result<Vec<VertexMap>> {
        let mut out = Vec::new();
        let hn = self.h.n();
        self.for_each(|img| {
            out.push(VertexMap::new(img.to_vec(), hn).expect("engine output in range"));
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn count(&self) -> Result<u64> {
        let mut c = 0u64;
        self.for_each(|_| {
            c += 1;
            ControlFlow::Continue(())
        })?;
        Ok(c)
    }
}

pub fn find_homomorphism(g: &Digraph, h: &Digraph) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).first()
}

pub fn find_surjective_homomorphism(g: &Digraph, h: &Digraph) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).surjective(true).first()
}

/// Search pinned to the embedded copy of `h`.
pub fn retraction_search<'a>(inst: &'a RetractionInstance, h: &'a Digraph) -> Result<HomSearch<'a>> {
    inst.validate(h)?;
    let mut s = HomSearch::new(&inst.g, h);
    for (x, &v) in inst.embedding.iter().enumerate() {
        s = s.fix(v, x)?;
    }
    Ok(s)
}

pub fn find_retraction(inst: &RetractionInstance, h: &Digraph) -> Result<Option<VertexMap>> {
    retraction_search(inst, h)?.first()
}

/// Homomorphism covering every non-loop edge of `h`; `strict` also demands
/// vertex-surjectivity, which differs only when `h` has vertices on no
/// non-loop edge.
pub fn find_compaction(g: &Digraph, h: &Digraph, strict: bool) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).compaction(true).surjective(strict).first()
}

pub fn find_list_homomorphism(
    g: &Digraph,
    h: &Digraph,
    lists: &ListAssignment,
) -> Result<Option<VertexMap>> {
    HomSearch::new(g, h).lists(lists)?.first()
}

/// Re-checks a witness against the defining condition of `variant`.
///
/// `retraction` is required for [`Variant::Retraction`] and `lists` for
/// [`Variant::List`].
pub fn verify_witness(
    variant: Variant,
    g: &Digraph,
    h: &Digraph,
    f: &VertexMap,
    retraction: Option<&RetractionInstance>,
    lists: Option<&ListAssignment>,
) -> bool {
    if !f.is_homomorphism(g, h) {
        return false;
    }
    match variant {
        Variant::Hom => true,
        Variant::Surjective => f.is_surjective(),
        Variant::Retraction => retraction.is_some_and(|r| {
            r.embedding.iter().enumerate().all(|(x, &v)| f.apply(v) == x)
        }),
        Variant::Compaction => h.edges().filter(|&(x, y)| x != y).all(|(x, y)| {
            g.edges().any(|(u, v)| f.apply(u) == x && f.apply(v) == y)
        }),
        Variant::List => lists.is_some_and(|l| {
            l.lists.len() == g.n() && (0..g.n()).all(|v| l.lists[v].contains(&f.apply(v)))
        }),
    }
}
