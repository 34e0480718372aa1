//! Polymorphisms: homomorphisms from a direct power `H^k` to `H`.
//!
//! Tables are indexed with [`TupleCodec`], the same numbering used by
//! [`crate::product::direct_power`].

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::HomSearch;
use crate::limits::{self, pow_saturating};
use crate::map::VertexMap;
use crate::product::{direct_power_bounded, TupleCodec};

/// Largest arity accepted unless a caller raises the cap explicitly.
pub const DEFAULT_MAX_ARITY: usize = 3;

/// A `k`-ary operation on `0..base`, as a table in tuple-codec order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Polymorphism {
    pub base: usize,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Polymorphism {
    pub fn new(base: usize, arity: usize, table: Vec<usize>) -> Result<Self> {
        let codec = TupleCodec::new(base, arity);
        if table.len() != codec.len() {
            return Err(Error::InvalidMap(format!(
                "table of length {} for {} tuples",
                table.len(),
                codec.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= base) {
            return Err(Error::InvalidMap(format!("table value {bad} out of range")));
        }
        Ok(Polymorphism { base, arity, table })
    }

    pub fn codec(&self) -> TupleCodec {
        TupleCodec::new(self.base, self.arity)
    }

    pub fn apply(&self, tuple: &[usize]) -> usize {
        self.table[self.codec().encode(tuple)]
    }

    /// The `i`-th projection (0-based).
    pub fn projection(base: usize, arity: usize, i: usize) -> Self {
        let codec = TupleCodec::new(base, arity);
        let table = (0..codec.len()).map(|t| codec.decode(t)[i]).collect();
        Polymorphism { base, arity, table }
    }

    pub fn is_idempotent(&self) -> bool {
        let c = self.codec();
        (0..self.base).all(|x| self.table[c.diagonal(x)] == x)
    }

    /// `t(y,x,..,x) = t(x,y,x,..,x) = .. = t(x,..,x,y)` for all `x, y`.
    pub fn satisfies_wnu_identities(&self) -> bool {
        let c = self.codec();
        (0..self.base).all(|x| {
            (0..self.base).all(|y| {
                let vals: Vec<usize> = (0..self.arity)
                    .map(|i| {
                        let mut t = vec![x; self.arity];
                        t[i] = y;
                        self.table[c.encode(&t)]
                    })
                    .collect();
                vals.windows(2).all(|w| w[0] == w[1])
            })
        })
    }

    pub fn is_wnu(&self) -> bool {
        self.arity >= 2 && self.is_idempotent() && self.satisfies_wnu_identities()
    }

    /// Ternary and `m(x,x,y) = m(x,y,x) = m(y,x,x) = x`.
    pub fn is_majority(&self) -> bool {
        self.arity == 3
            && (0..self.base).all(|x| {
                (0..self.base).all(|y| {
                    [[x, x, y], [x, y, x], [y, x, x]]
                        .iter()
                        .all(|t| self.apply(t) == x)
                })
            })
    }

    /// The least coordinate `i` and unary `g` with `f(t) = g(t_i)`, if any.
    pub fn essentially_unary(&self) -> Option<(usize, VertexMap)> {
        let c = self.codec();
        let g: Vec<usize> = (0..self.base).map(|x| self.table[c.diagonal(x)]).collect();
        (0..self.arity)
            .find(|&i| (0..c.len()).all(|t| self.table[t] == g[c.decode(t)[i]]))
            .map(|i| (i, VertexMap::new(g, self.base).expect("values in range")))
    }
}

/// Checks every edge of `H^k` without materialising the power.
pub fn is_polymorphism(h: &Digraph, p: &Polymorphism) -> bool {
    if p.base != h.n() || p.table.len() != TupleCodec::new(h.n(), p.arity).len() {
        return false;
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    if edges.is_empty() || p.arity == 0 {
        return true;
    }
    let n = h.n();
    let mut pick = vec![0usize; p.arity];
    loop {
        let (mut s, mut d) = (0usize, 0usize);
        for &e in &pick {
            s = s * n + edges[e].0;
            d = d * n + edges[e].1;
        }
        if !h.has_edge(p.table[s], p.table[d]) {
            return false;
        }
        let mut i = p.arity;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < edges.len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

fn check_arity(k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("arity must be positive".into()));
    }
    limits::check("arity", k as u128, cap)
}

fn power(h: &Digraph, k: usize) -> Result<(Digraph, TupleCodec)> {
    direct_power_bounded(h, k, limits::size_bound())
}

/// Visits every `k`-ary polymorphism in lexicographic order of tables.
pub fn for_each_polymorphism(
    h: &Digraph,
    k: usize,
    cap: usize,
    mut f: impl FnMut(&Polymorphism) -> ControlFlow<()>,
) -> Result<()> {
    check_arity(k, cap)?;
    let (pw, codec) = power(h, k)?;
    HomSearch::new(&pw, h)
        .max_source_vertices(codec.len())
        .for_each(|img| {
            f(&Polymorphism {
                base: h.n(),
                arity: k,
                table: img.to_vec(),
            })
        })
}

/// All `k`-ary polymorphisms, `k` at most [`DEFAULT_MAX_ARITY`].
pub fn enumerate_polymorphisms(h: &Digraph, k: usize) -> Result<Vec<Polymorphism>> {
    enumerate_polymorphisms_capped(h, k, DEFAULT_MAX_ARITY)
}

pub fn enumerate_polymorphisms_capped(h: &Digraph, k: usize, cap: usize) -> Result<Vec<Polymorphism>> {
    let mut out = Vec::new();
    for_each_polymorphism(h, k, cap, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Outcome of checking that every `k`-ary polymorphism is essentially unary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryVerdict {
    pub holds: bool,
    /// Number of polymorphisms inspected (all of them when `holds`).
    pub inspected: u64,
    pub counterexample: Option<Polymorphism>,
}

pub fn all_polymorphisms_essentially_unary(h: &Digraph, k: usize) -> Result<UnaryVerdict> {
    all_polymorphisms_essentially_unary_capped(h, k, DEFAULT_MAX_ARITY)
}

pub fn all_polymorphisms_essentially_unary_capped(
    h: &Digraph,
    k: usize,
    cap: usize,
) -> Result<UnaryVerdict> {
    let mut inspected = 0u64;
    let mut counterexample = None;
    for_each_polymorphism(h, k, cap, |p| {
        inspected += 1;
        if p.essentially_unary().is_none() {
            counterexample = Some(p.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(UnaryVerdict {
        holds: counterexample.is_none(),
        inspected,
        counterexample,
    })
}

/// Searches `H^k -> H` after merging tuples that an identity forces to be
/// equal. `class[t]` names the class of tuple `t`; `pinned` lists classes
/// whose value is forced.
fn search_with_identities(
    h: &Digraph,
    k: usize,
    class: &[usize],
    pinned: &[(usize, usize)],
) -> Result<Option<Polymorphism>> {
    let (pw, codec) = power(h, k)?;
    // renumber classes densely in order of first occurrence
    let mut dense = std::collections::HashMap::new();
    let ids: Vec<usize> = class
        .iter()
        .map(|&c| {
            let next = dense.len();
            *dense.entry(c).or_insert(next)
        })
        .collect();
    let q = Digraph::new(dense.len(), pw.edges().map(|(s, t)| (ids[s], ids[t])))?;
    let mut search = HomSearch::new(&q, h).max_source_vertices(q.n());
    for &(c, x) in pinned {
        if let Some(&v) = dense.get(&c) {
            search = search.fix(v, x)?;
        }
    }
    Ok(search.first()?.map(|m| Polymorphism {
        base: h.n(),
        arity: k,
        table: (0..codec.len()).map(|t| m.apply(ids[t])).collect(),
    }))
}

/// An idempotent `k`-ary polymorphism satisfying the weak near-unanimity
/// identities, or `None` after exhaustive search.
pub fn find_wnu(h: &Digraph, k: usize) -> Result<Option<Polymorphism>> {
    find_wnu_capped(h, k, DEFAULT_MAX_ARITY)
}

pub fn find_wnu_capped(h: &Digraph, k: usize, cap: usize) -> Result<Option<Polymorphism>> {
    if k < 2 {
        return Err(Error::Precondition("a WNU needs arity at least 2".into()));
    }
    check_arity(k, cap)?;
    limits::check("power vertices", pow_saturating(h.n(), k), limits::size_bound())?;
    let n = h.n();
    let codec = TupleCodec::new(n, k);
    let mut class = vec![usize::MAX; codec.len()];
    let mut next = 0;
    let mut pinned = Vec::new();
    for x in 0..n {
        class[codec.diagonal(x)] = next;
        pinned.push((next, x));
        next += 1;
    }
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            for i in 0..k {
                let mut t = vec![x; k];
                t[i] = y;
                class[codec.encode(&t)] = next;
            }
            next += 1;
        }
    }
    for c in class.iter_mut().filter(|c| **c == usize::MAX) {
        *c = next;
        next += 1;
    }
    let found = search_with_identities(h, k, &class, &pinned)?;
    debug_assert!(found.as_ref().is_none_or(|p| p.is_wnu() && is_polymorphism(h, p)));
    Ok(found)
}

/// A ternary majority polymorphism, or `None` after exhaustive search.
pub fn find_majority(h: &Digraph) -> Result<Option<Polymorphism>> {
    let n = h.n();
    let codec = TupleCodec::new(n, 3);
    let mut class: Vec<usize> = (0..codec.len()).map(|t| n + t).collect();
    let pinned: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    for x in 0..n {
        for y in 0..n {
            for t in [[x, x, y], [x, y, x], [y, x, x]] {
                class[codec.encode(&t)] = x;
            }
        }
    }
    search_with_identities(h, 3, &class, &pinned)
}

/// The median with respect to the linear order of a reflexive transitive
/// tournament (a vertex precedes the vertices it dominates).
pub fn median(h: &Digraph) -> Result<Polymorphism> {
    if !h.is_reflexive() || !h.is_transitive_tournament()? {
        return Err(Error::Precondition(
            "median needs a reflexive transitive tournament".into(),
        ));
    }
    let n = h.n();
    // rank = number of dominators
    let rank: Vec<usize> = (0..n).map(|v| h.in_neighbors(v).len() - 1).collect();
    let codec = TupleCodec::new(n, 3);
    let table = (0..codec.len())
        .map(|t| {
            let mut xs = codec.decode(t);
            xs.sort_by_key(|&x| rank[x]);
            xs[1]
        })
        .collect();
    Ok(Polymorphism {
        base: n,
        arity: 3,
        table,
    })
}

/// Median for reflexive transitive tournaments, otherwise any majority
/// polymorphism found by search.
pub fn find_majority_median(h: &Digraph) -> Result<Option<Polymorphism>> {
    if h.is_reflexive() && h.is_tournament() && h.is_transitive_tournament()? {
        return median(h).map(Some);
    }
    find_majority(h)
}

/// The ternary operation quoted for `Hg`: `0` everywhere except the
/// diagonal entries `111 = 1` and `222 = 2`.
pub fn hg_wnu_table() -> Polymorphism {
    let codec = TupleCodec::new(3, 3);
    let mut table = vec![0; codec.len()];
    table[codec.diagonal(1)] = 1;
    table[codec.diagonal(2)] = 2;
    Polymorphism {
        base: 3,
        arity: 3,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{hf, hg};
    use crate::digraph::{directed_cycle, transitive_tournament};

    #[test]
    fn hg_table_is_a_wnu_polymorphism() {
        let p = hg_wnu_table();
        assert!(is_polymorphism(&hg(), &p));
        assert!(p.is_idempotent());
        assert!(p.is_wnu());
        assert!(p.essentially_unary().is_none());
        assert!(find_wnu(&hg(), 3).unwrap().is_some());
    }

    #[test]
    fn projections() {
        let p = Polymorphism::projection(3, 2, 1);
        assert_eq!(p.essentially_unary(), Some((1, VertexMap::identity(3))));
        assert!(is_polymorphism(&directed_cycle(3, true), &p));
        let c = Polymorphism::new(3, 3, vec![0; 27]).unwrap();
        assert!(!is_polymorphism(&directed_cycle(3, false), &c));
        assert_eq!(c.essentially_unary().unwrap().0, 0);
    }

    #[test]
    fn dc3_counts() {
        let dc3 = directed_cycle(3, true);
        assert_eq!(enumerate_polymorphisms(&dc3, 1).unwrap().len(), 6);
        assert_eq!(enumerate_polymorphisms(&dc3, 2).unwrap().len(), 9);
        let v = all_polymorphisms_essentially_unary(&dc3, 3).unwrap();
        assert!(v.holds);
        assert_eq!(v.inspected, 12);
        assert!(find_wnu(&dc3, 3).unwrap().is_none());
        assert!(find_majority_median(&dc3).unwrap().is_none());
    }

    #[test]
    fn medians() {
        let tt3 = transitive_tournament(3, true);
        let m = find_majority_median(&tt3).unwrap().unwrap();
        assert!(is_polymorphism(&tt3, &m));
        assert!(m.is_majority());
        assert_eq!(m.apply(&[0, 2, 1]), 1);
        let tt2 = transitive_tournament(2, true);
        assert!(is_polymorphism(&tt2, &median(&tt2).unwrap()));
    }

    #[test]
    fn single_loop_has_one_operation() {
        let one = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(enumerate_polymorphisms(&one, 3).unwrap().len(), 1);
        assert!(find_wnu(&one, 3).unwrap().is_some());
    }

    #[test]
    fn hf_is_essentially_unary() {
        let h = hf();
        assert!(all_polymorphisms_essentially_unary(&h, 2).unwrap().holds);
        assert!(all_polymorphisms_essentially_unary(&h, 3).unwrap().holds);
    }

    #[test]
    fn arity_cap() {
        let dc3 = directed_cycle(3, true);
        assert!(enumerate_polymorphisms(&dc3, 4).is_err());
        assert!(enumerate_polymorphisms_capped(&dc3, 4, 4).is_ok());
    }
}
