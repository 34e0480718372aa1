//! The cylinder gadget `Cyl_m`: `m` stacked reflexive directed `m`-cycles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::digraph::{directed_cycle, Digraph};
use crate::error::{Error, Result};
use crate::hom::HomSearch;
use crate::map::VertexMap;

/// `Cyl_m` with vertex `(i, j)` (position `i` on the cycle of copy `j`)
/// numbered `j * m + i`. Copy `0` is the bottom, copy `m - 1` the top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylGadget {
    pub m: usize,
    pub digraph: Digraph,
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

impl CylGadget {
    pub fn vertex(&self, pos: usize, copy: usize) -> usize {
        copy * self.m + pos
    }

    pub fn copy_of(&self, v: usize) -> usize {
        v / self.m
    }

    pub fn position_of(&self, v: usize) -> usize {
        v % self.m
    }
}

pub fn build_cyl(m: usize) -> Result<CylGadget> {
    if m < 2 {
        return Err(Error::Precondition("Cyl_m needs m >= 2".into()));
    }
    let id = |i: usize, j: usize| j * m + i;
    let mut edges = Vec::with_capacity(2 * m * m + 2 * m * (m - 1));
    for j in 0..m {
        for i in 0..m {
            edges.push((id(i, j), id(i, j)));
            edges.push((id(i, j), id((i + 1) % m, j)));
            if j + 1 < m {
                // red: up one copy; green: down one copy and one step on
                edges.push((id(i, j), id(i, j + 1)));
                edges.push((id(i, j + 1), id((i + 1) % m, j)));
            }
        }
    }
    Ok(CylGadget {
        m,
        digraph: Digraph::new(m * m, edges)?,
        bottom: (0..m).map(|i| id(i, 0)).collect(),
        top: (0..m).map(|i| id(i, m - 1)).collect(),
    })
}

/// Maps on cycle positions induced on the top copy by retractions of
/// `Cyl_m` onto its bottom copy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaggerReport {
    pub m: usize,
    /// `induced[k][i]` is the bottom position receiving top position `i`.
    pub induced: Vec<VertexMap>,
    /// The induced maps are exactly the `m` rotations.
    pub rotations_only: bool,
}

/// For every candidate map on positions, decides whether some retraction
/// onto the bottom copy induces it on the top copy.
pub fn verify_dagger(m: usize) -> Result<DaggerReport> {
    let cyl = build_cyl(m)?;
    let target = directed_cycle(m, true);
    let base = {
        let mut s = HomSearch::new(&cyl.digraph, &target).max_source_vertices(m * m);
        for i in 0..m {
            s = s.fix(cyl.bottom[i], i)?;
        }
        s
    };
    // extend top-copy assignments one position at a time, pruning infeasible prefixes
    let mut induced = BTreeSet::new();
    let mut stack = vec![(0usize, base)];
    while let Some((pos, s)) = stack.pop() {
        if pos == m {
            let r = s.first()?.expect("every prefix was feasible");
            induced.insert(VertexMap::new(cyl.top.iter().map(|&v| r.apply(v)).collect(), m)?);
            continue;
        }
        for x in (0..m).rev() {
            let next = s.clone().fix(cyl.top[pos], x)?;
            if next.exists()? {
                stack.push((pos + 1, next));
            }
        }
    }
    let rotations: BTreeSet<VertexMap> = (0..m)
        .map(|r| VertexMap::new((0..m).map(|i| (i + r) % m).collect(), m).expect("in range"))
        .collect();
    Ok(DaggerReport {
        m,
        rotations_only: induced == rotations,
        induced: induced.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (m, n, e) in [(2, 4, 12), (3, 9, 30), (4, 16, 56)] {
            let c = build_cyl(m).unwrap();
            assert_eq!((c.digraph.n(), c.digraph.edge_count()), (n, e));
            assert!(c.digraph.is_reflexive());
        }
        assert!(build_cyl(1).is_err());
    }

    #[test]
    fn numbering() {
        let c = build_cyl(3).unwrap();
        assert_eq!(c.vertex(2, 1), 5);
        assert_eq!((c.copy_of(5), c.position_of(5)), (1, 2));
        assert_eq!(c.top, vec![6, 7, 8]);
        // red (1,0)->(1,1) and green (1,1)->(2,0)
        assert!(c.digraph.has_edge(1, 4));
        assert!(c.digraph.has_edge(4, 2));
        assert!(!c.digraph.has_edge(4, 1));
    }

    #[test]
    fn dagger_small() {
        for m in 3..=6 {
            let r = verify_dagger(m).unwrap();
            assert!(r.rotations_only, "m = {m}: {:?}", r.induced);
            assert_eq!(r.induced.len(), m);
        }
        // two vertices form a complete digraph, so nothing is forced
        assert_eq!(verify_dagger(2).unwrap().induced.len(), 4);
    }
}
