//! Finite digraphs with explicit loops, structural predicates, strong
//! components and Hamilton cycles of tournaments.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite directed graph on the vertices `0..n`.
///
/// Loops are ordinary edges: a vertex is reflexive exactly when `(v, v)` is
/// present. Edges are kept deduplicated and sorted, both as out- and
/// in-adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Wire", try_from = "Wire")]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a digraph from an edge list. Duplicate edges are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for row in out.iter_mut().chain(inn.iter_mut()) {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Digraph {
            n,
            out,
            inn,
            names: None,
        })
    }

    /// The digraph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            names: None,
        }
    }

    /// Attaches vertex labels. Labels are metadata only.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Parse(format!(
                "{} names given for {} vertices",
                names.len(),
                self.n
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    /// Out-neighbourhood of `u` as a bitmask. Only meaningful for `n <= 64`.
    pub(crate) fn out_mask(&self, u: usize) -> u64 {
        self.out[u].iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.inn[v].iter().fold(0u64, |m, &u| m | 1 << u)
    }

    /// Same digraph with a loop added at every vertex.
    pub fn with_all_loops(&self) -> Self {
        let edges = self.edges().chain((0..self.n).map(|v| (v, v)));
        let mut g = Digraph::new(self.n, edges).expect("endpoints are in range");
        g.names = self.names.clone();
        g
    }

    /// Image of the digraph under a bijection `perm` of its vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidMap(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Digraph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    // ---- predicates -------------------------------------------------------

    /// Every vertex carries a loop. Vacuously true for the empty digraph.
    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.has_loop(v))
    }

    /// No vertex carries a loop.
    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|v| !self.has_loop(v))
    }

    /// Exactly one of `(u,v)`, `(v,u)` for every pair of distinct vertices.
    /// Loops are ignored.
    ///
    /// A one-vertex digraph passes vacuously; use [`Digraph::is_nontrivial`]
    /// to exclude it where tournaments are required to have two vertices.
    pub fn is_tournament(&self) -> bool {
        self.distinct_pairs()
            .all(|(u, v)| self.has_edge(u, v) != self.has_edge(v, u))
    }

    /// At least one of `(u,v)`, `(v,u)` for every pair of distinct vertices.
    pub fn is_semicomplete(&self) -> bool {
        self.distinct_pairs()
            .all(|(u, v)| self.has_edge(u, v) || self.has_edge(v, u))
    }

    /// More than one vertex.
    pub fn is_nontrivial(&self) -> bool {
        self.n > 1
    }

    /// Some pair of distinct vertices is joined in both directions.
    pub fn has_double_edge(&self) -> bool {
        self.distinct_pairs()
            .any(|(u, v)| self.has_edge(u, v) && self.has_edge(v, u))
    }

    /// Transitivity of the arc relation of a tournament.
    pub fn is_transitive_tournament(&self) -> Result<bool> {
        if !self.is_tournament() {
            return Err(Error::NotATournament);
        }
        for (u, v) in self.edges() {
            for &w in &self.out[v] {
                if !self.has_edge(u, w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn distinct_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }

    /// Strong components, listed in a topological order of the condensation
    /// (for a tournament: every vertex of an earlier component dominates
    /// every vertex of a later one). Vertices within a component ascend.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        // Kosaraju: finishing order on G, then sweep the reverse graph in
        // decreasing finishing time. The sweep discovers source components first.
        let n = self.n;
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![(root, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, next) = *top;
                if let Some(&w) = self.out[v].get(next) {
                    top.1 += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut components = Vec::new();
        for &root in order.iter().rev() {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &u in &self.inn[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n <= 1 || self.strong_components().len() == 1
    }

    /// Underlying undirected graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.out[v].iter().chain(&self.inn[v]) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// A directed Hamilton cycle of a strongly connected tournament.
    ///
    /// The cycle starts at vertex 0 and is the lexicographically least one.
    pub fn hamilton_cycle(&self) -> Result<HamiltonCycle> {
        if !self.is_tournament() {
            return Err(Error::NotATournament);
        }
        if !self.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        self.find_hamilton_cycle().ok_or_else(|| {
            Error::Unresolved("no Hamilton cycle in a strong tournament".into())
        })
    }

    /// Backtracking Hamilton cycle search for any digraph on at most 64 vertices.
    pub(crate) fn find_hamilton_cycle(&self) -> Option<HamiltonCycle> {
        let n = self.n;
        if n == 0 || n > 64 {
            return None;
        }
        if n == 1 {
            return self.has_loop(0).then(|| HamiltonCycle { order: vec![0] });
        }
        let mut path = vec![0usize];
        let mut used = 1u64;
        fn extend(g: &Digraph, path: &mut Vec<usize>, used: &mut u64) -> bool {
            let last = *path.last().unwrap();
            if path.len() == g.n {
                return g.has_edge(last, path[0]);
            }
            for &w in &g.out[last] {
                if *used & (1 << w) == 0 {
                    path.push(w);
                    *used |= 1 << w;
                    if extend(g, path, used) {
                        return true;
                    }
                    *used &= !(1 << w);
                    path.pop();
                }
            }
            false
        }
        extend(self, &mut path, &mut used).then_some(HamiltonCycle { order: path })
    }
}

/// Serialised form: `{"n": .., "edges": [[u, v], ..], "names": [..]?}`.
#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl From<Digraph> for Wire {
    fn from(d: Digraph) -> Self {
        Wire {
            n: d.n,
            edges: d.edges().collect(),
            names: d.names,
        }
    }
}

impl TryFrom<Wire> for Digraph {
    type Error = Error;

    fn try_from(w: Wire) -> Result<Self> {
        let d = Digraph::new(w.n, w.edges)?;
        match w.names {
            Some(names) => d.with_names(names),
            None => Ok(d),
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "])")
    }
}

/// A cyclic ordering of all vertices of a host digraph along its edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HamiltonCycle {
    pub order: Vec<usize>,
}

impl HamiltonCycle {
    pub fn new(order: Vec<usize>) -> Self {
        HamiltonCycle { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Checks that the order is a cycle through exactly the vertices `vertices`
    /// of `host` (all of them when `vertices` is `None`).
    pub fn verify(&self, host: &Digraph, vertices: Option<&[usize]>) -> bool {
        let mut expected: Vec<usize> = match vertices {
            Some(vs) => vs.to_vec(),
            None => (0..host.n()).collect(),
        };
        expected.sort_unstable();
        let mut seen = self.order.clone();
        seen.sort_unstable();
        if seen != expected || self.order.is_empty() {
            return false;
        }
        let k = self.order.len();
        (0..k).all(|j| host.has_edge(self.order[j], self.order[(j + 1) % k]))
    }

    /// Image of the cycle under a vertex map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        HamiltonCycle {
            order: self.order.iter().map(|&v| f(v)).collect(),
        }
    }
}

// ---- standard families ------------------------------------------------------

/// Directed cycle `0 -> 1 -> ... -> k-1 -> 0`, with loops when `reflexive`.
pub fn directed_cycle(k: usize, reflexive: bool) -> Digraph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    if reflexive {
        edges.extend((0..k).map(|i| (i, i)));
    }
    Digraph::new(k, edges).expect("in range")
}

/// Transitive tournament on `k` vertices ordered `0 < 1 < ... < k-1`.
pub fn transitive_tournament(k: usize, reflexive: bool) -> Digraph {
    let mut edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    if reflexive {
        edges.extend((0..k).map(|i| (i, i)));
    }
    Digraph::new(k, edges).expect("in range")
}

/// Complete digraph: every ordered pair of distinct vertices.
pub fn complete(k: usize, reflexive: bool) -> Digraph {
    let edges = (0..k)
        .flat_map(|u| (0..k).map(move |v| (u, v)))
        .filter(|&(u, v)| reflexive || u != v);
    Digraph::new(k, edges).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::catalogue::{hg, t4};

    #[test]
    fn tournament_predicates() {
        let dc3 = directed_cycle(3, true);
        assert!(dc3.is_tournament());
        assert!(dc3.is_reflexive());
        let extra = Digraph::new(3, dc3.edges().chain([(1, 0)])).unwrap();
        assert!(!extra.is_tournament());
        assert!(extra.is_semicomplete());
        let hg = hg();
        assert!(!hg.is_tournament());
        assert!(!hg.is_reflexive());
        assert!(!hg.is_irreflexive());
    }

    #[test]
    fn transitivity() {
        assert!(transitive_tournament(3, true).is_transitive_tournament().unwrap());
        assert!(!directed_cycle(3, true).is_transitive_tournament().unwrap());
        assert_eq!(
            hg().is_transitive_tournament(),
            Err(Error::NotATournament)
        );
    }

    #[test]
    fn components() {
        assert_eq!(
            transitive_tournament(3, true).strong_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(directed_cycle(3, true).strong_components(), vec![vec![0, 1, 2]]);
        assert_eq!(t4().strong_components().len(), 1);
        // reversed transitive tournament: component order follows the arcs
        let rev = Digraph::new(3, [(2, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(rev.strong_components(), vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn hamilton_cycles() {
        let dc3 = directed_cycle(3, true);
        assert_eq!(dc3.hamilton_cycle().unwrap().order, vec![0, 1, 2]);
        let hc = t4().hamilton_cycle().unwrap();
        assert!(hc.verify(&t4(), None));
        assert_eq!(hc.order[0], 0);
        assert_eq!(
            transitive_tournament(3, true).hamilton_cycle(),
            Err(Error::NotStronglyConnected)
        );
        assert_eq!(hg().hamilton_cycle(), Err(Error::NotATournament));
    }

    #[test]
    fn construction_rejects_out_of_range() {
        assert_eq!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let g = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn single_vertex_is_flagged() {
        let g = Digraph::new(1, [(0, 0)]).unwrap();
        assert!(g.is_tournament());
        assert!(!g.is_nontrivial());
    }
}
