//! Direct products and powers of digraphs.
//!
//! Tuples `(x_1, ..., x_k)` over `0..base` are numbered in mixed radix with
//! the first coordinate most significant, so index order is lexicographic
//! order of tuples (`000, 001, 002, 010, ...` for base 3).

use crate::digraph::Digraph;
use crate::error::Result;
use crate::limits::{self, pow_saturating};

/// Mixed-radix numbering of `k`-tuples over `0..base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleCodec {
    pub base: usize,
    pub arity: usize,
}

impl TupleCodec {
    pub fn new(base: usize, arity: usize) -> Self {
        TupleCodec { base, arity }
    }

    /// Number of tuples, `base^arity`.
    pub fn len(&self) -> usize {
        self.base.pow(self.arity as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &x| acc * self.base + x)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity];
        for slot in t.iter_mut().rev() {
            *slot = index % self.base;
            index /= self.base;
        }
        t
    }

    /// Index of the constant tuple `(x, ..., x)`.
    pub fn diagonal(&self, x: usize) -> usize {
        self.encode(&vec![x; self.arity])
    }
}

/// `G × H` with vertex `(x, y)` numbered `x * |V(H)| + y`.
pub fn direct_product(g: &Digraph, h: &Digraph) -> Result<Digraph> {
    let size = g.n() as u128 * h.n() as u128;
    limits::check("direct product", size, limits::size_bound())?;
    let hn = h.n();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(x, x2)| h.edges().map(move |(y, y2)| (x * hn + y, x2 * hn + y2)))
        .collect();
    Digraph::new(g.n() * hn, edges)
}

/// The `k`-th direct power of `h` under the global size bound.
pub fn direct_power(h: &Digraph, k: usize) -> Result<(Digraph, TupleCodec)> {
    direct_power_bounded(h, k, limits::size_bound())
}

/// The `k`-th direct power of `h`, refusing results with more than `bound`
/// vertices or edges.
pub fn direct_power_bounded(h: &Digraph, k: usize, bound: usize) -> Result<(Digraph, TupleCodec)> {
    if k == 0 {
        return Err(crate::Error::Precondition("power exponent must be positive".into()));
    }
    limits::check("direct power", pow_saturating(h.n(), k), bound)?;
    limits::check("direct power edge set", pow_saturating(h.edge_count(), k), bound)?;
    let codec = TupleCodec::new(h.n(), k);
    let base_edges: Vec<(usize, usize)> = h.edges().collect();
    let m = base_edges.len();
    let mut edges = Vec::with_capacity(m.pow(k as u32));
    if m > 0 {
        let mut pick = vec![0usize; k];
        'outer: loop {
            let (mut src, mut dst) = (0usize, 0usize);
            for &e in &pick {
                let (a, b) = base_edges[e];
                src = src * h.n() + a;
                dst = dst * h.n() + b;
            }
            edges.push((src, dst));
            for slot in pick.iter_mut().rev() {
                *slot += 1;
                if *slot < m {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
    }
    Ok((Digraph::new(codec.len(), edges)?, codec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;

    #[test]
    fn codec_is_lexicographic() {
        let c = TupleCodec::new(3, 3);
        assert_eq!(c.encode(&[0, 0, 1]), 1);
        assert_eq!(c.encode(&[0, 1, 0]), 3);
        assert_eq!(c.decode(13), vec![1, 1, 1]);
        assert_eq!(c.diagonal(2), 26);
    }

    #[test]
    fn power_sizes() {
        let dc3 = directed_cycle(3, true);
        let (p1, _) = direct_power(&dc3, 1).unwrap();
        assert_eq!(p1, dc3);
        let (p2, _) = direct_power(&dc3, 2).unwrap();
        assert_eq!(p2.n(), 9);
        assert_eq!(p2.edge_count(), 36);
        let single = Digraph::empty(1);
        let (p3, _) = direct_power(&single, 3).unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (1, 0));
    }

    #[test]
    fn power_respects_bound() {
        let dc3 = directed_cycle(3, true);
        assert!(matches!(
            direct_power_bounded(&dc3, 5, 100),
            Err(crate::Error::SizeBound { .. })
        ));
    }

    #[test]
    fn product_edges_are_coordinatewise() {
        let a = directed_cycle(2, false);
        let b = directed_cycle(3, true);
        let p = direct_product(&a, &b).unwrap();
        assert_eq!(p.edge_count(), a.edge_count() * b.edge_count());
        assert!(p.has_edge(0 * 3 + 1, 1 * 3 + 2));
    }
}
