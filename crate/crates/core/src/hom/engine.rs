//! Backtracking search for homomorphisms into a template of at most 64
//! vertices.
//!
//! Domains are bitmasks over the template's vertices. Every search node is
//! kept arc consistent. Decision search additionally splits the free
//! variables into connected components; once the components are independent
//! the vertex-cover requirement of surjective search is distributed over
//! them with a small subset DP instead of chronological backtracking.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::digraph::Digraph;

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[inline]
fn single(m: u64) -> bool {
    m != 0 && m & (m - 1) == 0
}

/// Largest number of still-needed template vertices for which the component
/// split enumerates cover subsets.
const MAX_SPLIT_COVER: u32 = 12;

pub(crate) struct Engine {
    n: usize,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
    h_out: Vec<u64>,
    h_in: Vec<u64>,
    init: Vec<u64>,
    /// Template vertices that must be hit.
    cover: u64,
    /// Non-loop template edges that must be hit (compaction).
    edge_cover: Vec<(usize, usize)>,
    g_edges: Vec<(usize, usize)>,
}

impl Engine {
    /// `domains[v]` lists the template vertices allowed for `v`.
    pub(crate) fn new(
        g: &Digraph,
        h: &Digraph,
        domains: &[u64],
        surjective: bool,
        compaction: bool,
    ) -> Self {
        let n = g.n();
        let hn = h.n();
        let full = if hn == 64 { u64::MAX } else { (1u64 << hn) - 1 };
        let looped = (0..hn).filter(|&x| h.has_loop(x)).fold(0u64, |m, x| m | 1 << x);
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        let mut adj = vec![Vec::new(); n];
        let mut g_edges = Vec::new();
        let mut init = domains.to_vec();
        for (u, v) in g.edges() {
            if u == v {
                init[u] &= looped;
            } else {
                succ[u].push(v);
                pred[v].push(u);
                adj[u].push(v);
                adj[v].push(u);
                g_edges.push((u, v));
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        let edge_cover = if compaction {
            h.edges().filter(|&(x, y)| x != y).collect()
        } else {
            Vec::new()
        };
        Engine {
            n,
            succ,
            pred,
            adj,
            h_out: (0..hn).map(|x| h.out_mask(x)).collect(),
            h_in: (0..hn).map(|x| h.in_mask(x)).collect(),
            init,
            cover: if surjective { full } else { 0 },
            edge_cover,
            g_edges,
        }
    }

    /// Revises neighbours of every queued variable until a fixpoint.
    fn propagate(&self, dom: &mut [u64], mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; self.n];
        for &v in &queue {
            queued[v] = true;
        }
        while let Some(w) = queue.pop() {
            queued[w] = false;
            let dw = dom[w];
            if dw == 0 {
                return false;
            }
            if !self.succ[w].is_empty() {
                let support = bits(dw).fold(0u64, |m, a| m | self.h_out[a]);
                for &v in &self.succ[w] {
                    let nd = dom[v] & support;
                    if nd != dom[v] {
                        if nd == 0 {
                            return false;
                        }
                        dom[v] = nd;
                        if !queued[v] {
                            queued[v] = true;
                            queue.push(v);
                        }
                    }
                }
            }
            if !self.pred[w].is_empty() {
                let support = bits(dw).fold(0u64, |m, b| m | self.h_in[b]);
                for &u in &self.pred[w] {
                    let nd = dom[u] & support;
                    if nd != dom[u] {
                        if nd == 0 {
                            return false;
                        }
                        dom[u] = nd;
                        if !queued[u] {
                            queued[u] = true;
                            queue.push(u);
                        }
                    }
                }
            }
        }
        true
    }

    fn root(&self) -> Option<Vec<u64>> {
        let mut dom = self.init.clone();
        if dom.contains(&0) {
            return None;
        }
        self.propagate(&mut dom, (0..self.n).collect()).then_some(dom)
    }

    fn assign(&self, dom: &[u64], v: usize, a: usize) -> Option<Vec<u64>> {
        let mut d = dom.to_vec();
        d[v] = 1 << a;
        self.propagate(&mut d, vec![v]).then_some(d)
    }

    /// Necessary conditions for the cover requirements over the whole domain vector.
    fn cover_possible(&self, dom: &[u64]) -> bool {
        if self.cover != 0 {
            let mut fixed = 0u64;
            let mut any = 0u64;
            let mut free = 0u32;
            for &d in dom {
                any |= d;
                if single(d) {
                    fixed |= d;
                } else {
                    free += 1;
                }
            }
            let needed = self.cover & !fixed;
            if needed & !any != 0 || needed.count_ones() > free {
                return false;
            }
        }
        self.edge_cover.iter().all(|&(x, y)| {
            self.g_edges
                .iter()
                .any(|&(u, v)| dom[u] >> x & 1 == 1 && dom[v] >> y & 1 == 1)
        })
    }

    // ---- decision with component splitting ---------------------------------

    pub(crate) fn decide(&self) -> bool {
        match self.root() {
            Some(dom) => self.decide_from(dom),
            None => false,
        }
    }

    fn decide_from(&self, dom: Vec<u64>) -> bool {
        if !self.edge_cover.is_empty() {
            let mut found = false;
            let _ = self.dfs(dom, &mut |_| {
                found = true;
                ControlFlow::Break(())
            });
            return found;
        }
        let vars: Vec<usize> = (0..self.n).collect();
        self.split_search(dom, &vars, self.cover)
    }

    /// Can the variables `vars` be assigned (all other variables are fixed or
    /// independent) so that together they hit every vertex of `cover`?
    fn split_search(&self, dom: Vec<u64>, vars: &[usize], cover: u64) -> bool {
        let mut fixed = 0u64;
        let mut any = 0u64;
        let mut free = Vec::new();
        for &v in vars {
            any |= dom[v];
            if single(dom[v]) {
                fixed |= dom[v];
            } else {
                free.push(v);
            }
        }
        let needed = cover & !fixed;
        if needed & !any != 0 || needed.count_ones() as usize > free.len() {
            return false;
        }
        if free.is_empty() {
            return needed == 0;
        }

        let comps = self.components(&dom, &free);
        if comps.len() > 1 && needed.count_ones() <= MAX_SPLIT_COVER {
            if needed == 0 {
                return comps.iter().all(|c| self.split_search(dom.clone(), c, 0));
            }
            return self.distribute_cover(&dom, &comps, needed);
        }

        let v = *free
            .iter()
            .min_by_key(|&&v| (dom[v].count_ones(), std::cmp::Reverse(self.adj[v].len()), v))
            .unwrap();
        for a in bits(dom[v]) {
            if let Some(d) = self.assign(&dom, v, a) {
                if self.split_search(d, vars, cover) {
                    return true;
                }
            }
        }
        false
    }

    fn components(&self, dom: &[u64], free: &[usize]) -> Vec<Vec<usize>> {
        let mut mark = vec![false; self.n];
        for &v in free {
            mark[v] = true;
        }
        let mut comps = Vec::new();
        for &s in free {
            if !mark[s] {
                continue;
            }
            mark[s] = false;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if mark[w] && !single(dom[w]) {
                        mark[w] = false;
                        comp.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Independent components must jointly hit `needed`.
    fn distribute_cover(&self, dom: &[u64], comps: &[Vec<usize>], needed: u64) -> bool {
        let mut reach: HashSet<u64> = HashSet::from([0u64]);
        for comp in comps {
            let reachable_here = comp.iter().fold(0u64, |m, &v| m | dom[v]) & needed;
            let mut subsets: Vec<u64> = submasks(reachable_here).collect();
            subsets.sort_by_key(|m| (m.count_ones(), *m));
            let mut feasible: Vec<u64> = Vec::new();
            let mut failed: Vec<u64> = Vec::new();
            for t in subsets {
                // a superset of a failed cover requirement fails too
                if failed.iter().any(|&f| (f & t) == f) {
                    continue;
                }
                if self.split_search(dom.to_vec(), comp, t) {
                    feasible.push(t);
                } else {
                    failed.push(t);
                    if t == 0 {
                        return false;
                    }
                }
            }
            let mut next = HashSet::new();
            for &r in &reach {
                for &t in &feasible {
                    next.insert(r | t);
                }
            }
            if next.contains(&needed) {
                // remaining components only need to be satisfiable
                return comps
                    .iter()
                    .skip_while(|c| !std::ptr::eq(*c, comp))
                    .skip(1)
                    .all(|c| self.split_search(dom.to_vec(), c, 0));
            }
            reach = next;
        }
        reach.contains(&needed)
    }

    // ---- ordered enumeration ---------------------------------------------

    /// Visits every solution in lexicographic order of the image vector.
    pub(crate) fn for_each(&self, f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
        if let Some(dom) = self.root() {
            let _ = self.dfs(dom, f);
        }
    }

    fn dfs(
        &self,
        dom: Vec<u64>,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if !self.cover_possible(&dom) {
            return ControlFlow::Continue(());
        }
        match (0..self.n).find(|&v| !single(dom[v])) {
            None => {
                let image: Vec<usize> = dom.iter().map(|d| d.trailing_zeros() as usize).collect();
                if self.is_solution(&image) {
                    f(&image)
                } else {
                    ControlFlow::Continue(())
                }
            }
            Some(v) => {
                for a in bits(dom[v]) {
                    if let Some(d) = self.assign(&dom, v, a) {
                        self.dfs(d, f)?;
                    }
                }
                ControlFlow::Continue(())
            }
        }
    }

    fn is_solution(&self, image: &[usize]) -> bool {
        let hit = image.iter().fold(0u64, |m, &x| m | 1 << x);
        if self.cover & !hit != 0 {
            return false;
        }
        self.edge_cover.iter().all(|&(x, y)| {
            self.g_edges
                .iter()
                .any(|&(u, v)| image[u] == x && image[v] == y)
        })
    }

    /// Lexicographically least solution.
    pub(crate) fn first(&self) -> Option<Vec<usize>> {
        let mut dom = self.root()?;
        if !self.edge_cover.is_empty() {
            let mut found = None;
            let _ = self.dfs(dom, &mut |img| {
                found = Some(img.to_vec());
                ControlFlow::Break(())
            });
            return found;
        }
        if !self.decide_from(dom.clone()) {
            return None;
        }
        for v in 0..self.n {
            if single(dom[v]) {
                continue;
            }
            let mut chosen = None;
            for a in bits(dom[v]) {
                if let Some(d) = self.assign(&dom, v, a) {
                    if self.decide_from(d.clone()) {
                        chosen = Some(d);
                        break;
                    }
                }
            }
            dom = chosen.expect("a satisfiable node has a satisfiable child");
        }
        Some(dom.iter().map(|d| d.trailing_zeros() as usize).collect())
    }
}

/// All submasks of `m`, including `0` and `m`.
fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & m) };
        Some(s)
    })
}
