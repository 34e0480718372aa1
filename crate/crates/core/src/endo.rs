//! Endomorphisms, retractions and the triviality notions built on them.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::HomSearch;
use crate::limits::{self, pow_saturating};
use crate::map::VertexMap;
use crate::product::direct_product;

/// Full self-map digraphs are only built up to this many vertices.
pub const MAX_SELF_MAP_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endo {
    pub map: VertexMap,
    pub is_automorphism: bool,
    pub is_constant: bool,
}

impl Endo {
    fn new(map: VertexMap, h: &Digraph) -> Self {
        Endo {
            is_automorphism: map.is_automorphism(h),
            is_constant: map.is_constant(),
            map,
        }
    }

    /// Neither an automorphism nor constant.
    pub fn is_nontrivial(&self) -> bool {
        !self.is_automorphism && !self.is_constant
    }
}

/// All endomorphisms of a digraph, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoMonoid {
    pub elements: Vec<Endo>,
}

impl EndoMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn automorphisms(&self) -> impl Iterator<Item = &Endo> {
        self.elements.iter().filter(|e| e.is_automorphism)
    }

    pub fn constants(&self) -> impl Iterator<Item = &Endo> {
        self.elements.iter().filter(|e| e.is_constant)
    }

    pub fn retractions(&self) -> impl Iterator<Item = &Endo> {
        self.elements.iter().filter(|e| e.map.is_idempotent())
    }

    pub fn contains(&self, m: &VertexMap) -> bool {
        self.elements
            .binary_search_by(|e| e.map.image().cmp(m.image()))
            .is_ok()
    }

    /// Closed under composition and contains the identity.
    pub fn is_monoid(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return true;
        };
        self.contains(&VertexMap::identity(first.map.domain_size()))
            && self.elements.iter().all(|a| {
                self.elements
                    .iter()
                    .all(|b| self.contains(&a.map.compose(&b.map).expect("same size")))
            })
    }
}

fn guard_maps(h: &Digraph) -> Result<()> {
    limits::check("self-maps", pow_saturating(h.n(), h.n()), limits::size_bound())
}

pub fn endomorphisms(h: &Digraph) -> Result<EndoMonoid> {
    guard_maps(h)?;
    let elements = HomSearch::new(h, h)
        .max_source_vertices(h.n())
        .all()?
        .into_iter()
        .map(|m| Endo::new(m, h))
        .collect();
    Ok(EndoMonoid { elements })
}

/// A yes/no verdict with the least counterexample when the answer is no.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<VertexMap>,
}

impl Verdict {
    fn from_counterexample(c: Option<VertexMap>) -> Self {
        Verdict {
            holds: c.is_none(),
            counterexample: c,
        }
    }
}

/// Every endomorphism is an automorphism or constant.
pub fn is_endo_trivial(h: &Digraph) -> Result<Verdict> {
    let mon = endomorphisms(h)?;
    Ok(Verdict::from_counterexample(
        mon.elements.into_iter().find(Endo::is_nontrivial).map(|e| e.map),
    ))
}

/// Retraction of `h` onto the subgraph induced by `target`, as a self-map of
/// `V(h)` that fixes `target` pointwise.
pub fn retraction_onto(h: &Digraph, target: &[usize]) -> Result<Option<VertexMap>> {
    let mut s = HomSearch::new(h, h).max_source_vertices(h.n());
    for v in 0..h.n() {
        s = if target.contains(&v) { s.fix(v, v)? } else { s.restrict(v, target)? };
    }
    s.first()
}

/// Every retraction is the identity or constant. The counterexample is the
/// first proper retraction found, scanning targets by size then
/// lexicographically.
pub fn is_retract_trivial(h: &Digraph) -> Result<Verdict> {
    let n = h.n();
    for size in 2..n {
        for target in subsets_of_size(n, size) {
            if let Some(r) = retraction_onto(h, &target)? {
                return Ok(Verdict::from_counterexample(Some(r)));
            }
        }
    }
    Ok(Verdict::from_counterexample(None))
}

/// How an endomorphism must treat the designated subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FixMode {
    /// `e(S) = S`.
    #[default]
    Setwise,
    /// `e(s) = s` for every `s` in `S`.
    Pointwise,
}

/// Every endomorphism of `h` fixing `s` is an automorphism of `h`.
pub fn is_pair_endo_trivial(h: &Digraph, s: &[usize], mode: FixMode) -> Result<Verdict> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&bad) = set.iter().find(|&&v| v >= h.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: h.n() });
    }
    let mut search = HomSearch::new(h, h).max_source_vertices(h.n());
    for &v in &set {
        search = match mode {
            FixMode::Setwise => search.restrict(v, &set)?,
            FixMode::Pointwise => search.fix(v, v)?,
        };
    }
    let mut bad = None;
    search.for_each(|img| {
        // image of S lies in S, so injectivity on S is e(S) = S
        let mut seen: Vec<usize> = set.iter().map(|&v| img[v]).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() == set.len() {
            let m = VertexMap::new(img.to_vec(), h.n()).expect("in range");
            if !m.is_automorphism(h) {
                bad = Some(m);
                return std::ops::ControlFlow::Break(());
            }
        }
        std::ops::ControlFlow::Continue(())
    })?;
    Ok(Verdict::from_counterexample(bad))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

// ---- self-map digraphs ------------------------------------------------------

/// The self-map digraph of `G` or its restriction to endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfMapDigraph {
    pub digraph: Digraph,
    /// `maps[i]` is the self-map labelling vertex `i`.
    pub maps: Vec<VertexMap>,
    /// Present for the endomorphism restriction.
    pub flags: Option<Vec<Endo>>,
}

impl SelfMapDigraph {
    pub fn vertex_of(&self, m: &VertexMap) -> Option<usize> {
        self.maps.binary_search(m).ok()
    }
}

/// `(f, g)` is an edge of the self-map digraph of `g`: every edge `(x, y)`
/// goes to an edge `(f(x), g(y))`.
pub fn is_self_map_edge(graph: &Digraph, f: &VertexMap, g: &VertexMap) -> bool {
    graph.edges().all(|(x, y)| graph.has_edge(f.apply(x), g.apply(y)))
}

/// The digraph on all `n^n` self-maps of `g`, vertex `i` being the map with
/// mixed-radix index `i`.
pub fn self_map_digraph(g: &Digraph) -> Result<SelfMapDigraph> {
    let n = g.n();
    limits::check("self-map digraph base", n as u128, MAX_SELF_MAP_VERTICES)?;
    guard_maps(g)?;
    let total = n.pow(n as u32);
    let mut maps = Vec::with_capacity(total);
    crate::hom::brute::for_each_map(n, n, |img| {
        maps.push(VertexMap::new(img.to_vec(), n).expect("in range"));
        true
    });
    // for fixed f, admissible g form a product of per-vertex candidate sets
    let allowed = |f: &VertexMap| -> Vec<Vec<usize>> {
        (0..n)
            .map(|y| {
                (0..n)
                    .filter(|&b| g.in_neighbors(y).iter().all(|&x| g.has_edge(f.apply(x), b)))
                    .collect()
            })
            .collect()
    };
    let mut edge_total: u128 = 0;
    for f in &maps {
        edge_total += allowed(f).iter().map(|c| c.len() as u128).product::<u128>();
    }
    limits::check("self-map digraph edges", edge_total, limits::size_bound())?;
    let mut edges = Vec::new();
    for (i, f) in maps.iter().enumerate() {
        let cand = allowed(f);
        let mut pick = vec![0usize; n];
        if cand.iter().any(Vec::is_empty) {
            continue;
        }
        'odo: loop {
            let idx = (0..n).fold(0usize, |acc, y| acc * n + cand[y][pick[y]]);
            edges.push((i, idx));
            for y in (0..n).rev() {
                pick[y] += 1;
                if pick[y] < cand[y].len() {
                    continue 'odo;
                }
                pick[y] = 0;
            }
            break;
        }
    }
    Ok(SelfMapDigraph {
        digraph: Digraph::new(total, edges)?,
        maps,
        flags: None,
    })
}

/// The self-map digraph restricted to endomorphisms.
pub fn endomorphism_digraph(g: &Digraph) -> Result<SelfMapDigraph> {
    let mon = endomorphisms(g)?;
    let k = mon.len();
    limits::check("endomorphism pairs", (k as u128) * (k as u128), limits::size_bound())?;
    let maps: Vec<VertexMap> = mon.elements.iter().map(|e| e.map.clone()).collect();
    let mut edges = Vec::new();
    for (i, f) in maps.iter().enumerate() {
        for (j, h) in maps.iter().enumerate() {
            if is_self_map_edge(g, f, h) {
                edges.push((i, j));
            }
        }
    }
    Ok(SelfMapDigraph {
        digraph: Digraph::new(k, edges)?,
        maps,
        flags: Some(mon.elements),
    })
}

/// `ψ(x)(u) = φ(x, u)` for a homomorphism `φ: H × G -> G`, with vertex
/// `(x, u)` of the product numbered `x * |V(G)| + u`.
///
/// Returns `ψ(x)` for every `x`. The result is checked to be a homomorphism
/// from `H` into the self-map digraph of `G`.
pub fn curry(phi: &VertexMap, h: &Digraph, g: &Digraph) -> Result<Vec<VertexMap>> {
    let prod = direct_product(h, g)?;
    if !phi.is_homomorphism(&prod, g) {
        return Err(Error::Precondition(
            "phi is not a homomorphism from H x G to G".into(),
        ));
    }
    let gn = g.n();
    let psi: Vec<VertexMap> = (0..h.n())
        .map(|x| {
            VertexMap::new((0..gn).map(|u| phi.apply(x * gn + u)).collect(), gn)
                .expect("in range")
        })
        .collect();
    for (x, y) in h.edges() {
        if !is_self_map_edge(g, &psi[x], &psi[y]) {
            return Err(Error::Precondition(format!(
                "curried map breaks edge ({x},{y})"
            )));
        }
    }
    Ok(psi)
}

/// A quotient of `H` by a vertex partition together with the quotient map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomImage {
    pub digraph: Digraph,
    pub quotient: VertexMap,
}

/// The image of `h` under the quotient by every set partition of `V(h)`,
/// partitions listed as restricted growth strings in lexicographic order.
pub fn homomorphic_images(h: &Digraph) -> Result<Vec<HomImage>> {
    let n = h.n();
    limits::check("set partitions", bell(n), limits::size_bound())?;
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        let quotient = VertexMap::new(rgs.clone(), blocks)?;
        out.push(image_under(h, &quotient)?);
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(out);
            }
            i -= 1;
            let cap = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// The digraph with an edge `(f(x), f(y))` for every edge `(x, y)` of `h`.
pub fn image_under(h: &Digraph, f: &VertexMap) -> Result<HomImage> {
    let digraph = Digraph::new(f.codomain_size(), h.edges().map(|(x, y)| (f.apply(x), f.apply(y))))?;
    Ok(HomImage {
        digraph,
        quotient: f.clone(),
    })
}

fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = next.last().unwrap().saturating_add(x);
            next.push(v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::t4;
    use crate::digraph::{directed_cycle, transitive_tournament};

    #[test]
    fn bell_numbers() {
        assert_eq!((0..6).map(bell).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn monoid_of_dc3() {
        let m = endomorphisms(&directed_cycle(3, true)).unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!(m.automorphisms().count(), 3);
        assert_eq!(m.constants().count(), 3);
        assert!(m.is_monoid());
        let irr = endomorphisms(&directed_cycle(3, false)).unwrap();
        assert_eq!(irr.len(), 3);
        assert!(irr.elements.iter().all(|e| e.is_automorphism));
    }

    #[test]
    fn triviality_examples() {
        let dc3 = directed_cycle(3, true);
        assert!(is_endo_trivial(&dc3).unwrap().holds);
        assert!(is_retract_trivial(&dc3).unwrap().holds);
        let tt3 = transitive_tournament(3, true);
        let v = is_endo_trivial(&tt3).unwrap();
        assert!(!v.holds);
        let e = VertexMap::new(vec![1, 1, 2], 3).unwrap();
        assert!(e.is_homomorphism(&tt3, &tt3));
        assert!(!is_retract_trivial(&tt3).unwrap().holds);
        let r = is_retract_trivial(&t4()).unwrap().counterexample.unwrap();
        assert_eq!(r.image(), &[0, 1, 2, 0]);
    }

    #[test]
    fn pair_triviality_examples() {
        let dc3 = directed_cycle(3, true);
        assert!(is_pair_endo_trivial(&dc3, &[0, 1, 2], FixMode::Setwise).unwrap().holds);
        let tt3 = transitive_tournament(3, true);
        let v = is_pair_endo_trivial(&tt3, &[2], FixMode::Setwise).unwrap();
        assert!(!v.holds);
        let c = v.counterexample.unwrap();
        assert_eq!(c.apply(2), 2);
    }

    #[test]
    fn endomorphism_digraph_of_dc3() {
        let dc3 = directed_cycle(3, true);
        let e = endomorphism_digraph(&dc3).unwrap();
        assert_eq!(e.digraph.n(), 6);
        assert!(e.digraph.is_reflexive());
        let flags = e.flags.as_ref().unwrap();
        for v in 0..6 {
            let others = e
                .digraph
                .out_neighbors(v)
                .iter()
                .chain(e.digraph.in_neighbors(v))
                .filter(|&&w| w != v)
                .count();
            if flags[v].is_automorphism {
                assert_eq!(others, 0);
            }
        }
        let consts: Vec<usize> = (0..6).filter(|&v| flags[v].is_constant).collect();
        let (sub, _) = crate::glue::induced_subgraph(&e.digraph, &consts).unwrap();
        assert!(crate::iso::are_isomorphic(&sub, &dc3));
    }

    #[test]
    fn self_map_digraph_of_a_loop() {
        let one = Digraph::new(1, [(0, 0)]).unwrap();
        let s = self_map_digraph(&one).unwrap();
        assert_eq!((s.digraph.n(), s.digraph.edge_count()), (1, 1));
        let dc3 = directed_cycle(3, true);
        let full = self_map_digraph(&dc3).unwrap();
        assert_eq!(full.digraph.n(), 27);
        let ed = endomorphism_digraph(&dc3).unwrap();
        for (i, f) in ed.maps.iter().enumerate() {
            for (j, g) in ed.maps.iter().enumerate() {
                let a = full.vertex_of(f).unwrap();
                let b = full.vertex_of(g).unwrap();
                assert_eq!(ed.digraph.has_edge(i, j), full.digraph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn curry_examples() {
        let dc3 = directed_cycle(3, true);
        let proj = VertexMap::new((0..9).map(|i| i % 3).collect(), 3).unwrap();
        let psi = curry(&proj, &dc3, &dc3).unwrap();
        assert!(psi.iter().all(|m| *m == VertexMap::identity(3)));
        let c = VertexMap::constant(9, 3, 1).unwrap();
        let psi = curry(&c, &dc3, &dc3).unwrap();
        assert!(psi.iter().all(|m| m.image() == [1, 1, 1]));
        let bad = VertexMap::new((0..9).map(|i| (i % 3 + 1) % 3 * (i / 3 % 2)).collect(), 3).unwrap();
        assert!(curry(&bad, &dc3, &dc3).is_err());
    }

    #[test]
    fn images_of_dc3() {
        let dc3 = directed_cycle(3, true);
        let imgs = homomorphic_images(&dc3).unwrap();
        assert_eq!(imgs.len(), 5);
        assert_eq!(imgs[0].digraph.n(), 1);
        assert_eq!(imgs[0].digraph.edge_count(), 1);
        assert_eq!(imgs.last().unwrap().digraph, dc3);
        // {0,1},{2}
        let two = imgs.iter().find(|i| i.quotient.image() == [0, 0, 1]).unwrap();
        assert!(two.digraph.has_double_edge());
    }

    #[test]
    fn subsets() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets_of_size(3, 3), vec![vec![0, 1, 2]]);
    }
}
