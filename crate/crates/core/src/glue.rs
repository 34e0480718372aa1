//! Induced subgraphs and disjoint unions with vertex identification.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Subgraph of `h` induced on `vertices`.
///
/// The output numbers the chosen vertices in ascending order; the returned
/// vector maps each output vertex back to its vertex in `h`.
pub fn induced_subgraph(h: &Digraph, vertices: &[usize]) -> Result<(Digraph, Vec<usize>)> {
    let mut keep = vertices.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&v| v >= h.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: h.n() });
    }
    let mut pos = vec![usize::MAX; h.n()];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let edges = h
        .edges()
        .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
        .map(|(u, v)| (pos[u], pos[v]));
    let mut sub = Digraph::new(keep.len(), edges)?;
    if let Some(names) = h.names() {
        sub = sub.with_names(keep.iter().map(|&v| names[v].clone()).collect())?;
    }
    Ok((sub, keep))
}

/// A vertex of one of the parts handed to [`glue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub part: usize,
    pub vertex: usize,
}

impl Slot {
    pub fn new(part: usize, vertex: usize) -> Self {
        Slot { part, vertex }
    }
}

/// Result of [`glue`].
#[derive(Debug, Clone)]
pub struct Glued {
    pub digraph: Digraph,
    /// For each output vertex, every part vertex merged into it (ascending).
    pub origins: Vec<Vec<Slot>>,
    /// `placement[part][vertex]` is the output vertex of that part vertex.
    pub placement: Vec<Vec<usize>>,
}

/// Disjoint union of `parts` with the listed pairs identified.
///
/// Output vertices follow the parts in argument order and, within a part,
/// the original order; a merged class occupies the slot of its earliest
/// member. Identifying two distinct vertices of the same part is rejected.
pub fn glue(parts: &[&Digraph], identify: &[(Slot, Slot)]) -> Result<Glued> {
    let mut offset = Vec::with_capacity(parts.len() + 1);
    offset.push(0usize);
    for p in parts {
        offset.push(offset.last().unwrap() + p.n());
    }
    let total = *offset.last().unwrap();
    let global = |s: Slot| -> Result<usize> {
        let p = parts.get(s.part).ok_or_else(|| {
            Error::InconsistentGlue(format!("part {} does not exist", s.part))
        })?;
        if s.vertex >= p.n() {
            return Err(Error::VertexOutOfRange { vertex: s.vertex, n: p.n() });
        }
        Ok(offset[s.part] + s.vertex)
    };

    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in identify {
        let (ga, gb) = (global(a)?, global(b)?);
        let (ra, rb) = (find(&mut parent, ga), find(&mut parent, gb));
        if ra != rb {
            // the smaller global index stays the root, so roots are earliest members
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }

    let part_of = |g: usize| offset.partition_point(|&o| o <= g) - 1;
    let mut out_id = vec![usize::MAX; total];
    let mut origins: Vec<Vec<Slot>> = Vec::new();
    for g in 0..total {
        let r = find(&mut parent, g);
        if r == g {
            out_id[g] = origins.len();
            origins.push(Vec::new());
        }
        let id = out_id[r];
        let p = part_of(g);
        let slot = Slot::new(p, g - offset[p]);
        if origins[id].iter().any(|s| s.part == p) {
            return Err(Error::InconsistentGlue(format!(
                "two vertices of part {p} would be identified"
            )));
        }
        origins[id].push(slot);
        out_id[g] = id;
    }

    let placement: Vec<Vec<usize>> = (0..parts.len())
        .map(|p| (offset[p]..offset[p + 1]).map(|g| out_id[g]).collect())
        .collect();
    let edges: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(p, d)| {
            let place = &placement[p];
            d.edges().map(move |(u, v)| (place[u], place[v]))
        })
        .collect();
    Ok(Glued {
        digraph: Digraph::new(origins.len(), edges)?,
        origins,
        placement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;

    #[test]
    fn induced_on_everything_is_identity() {
        let g = directed_cycle(4, true);
        let (sub, back) = induced_subgraph(&g, &[3, 1, 2, 0]).unwrap();
        assert_eq!(sub, g);
        assert_eq!(back, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = directed_cycle(3, true);
        assert!(induced_subgraph(&g, &[0, 5]).is_err());
    }

    #[test]
    fn disjoint_union_without_glue() {
        let dc3 = directed_cycle(3, true);
        let u = glue(&[&dc3, &dc3], &[]).unwrap();
        assert_eq!(u.digraph.n(), 6);
        assert_eq!(u.digraph.edge_count(), 12);
        assert_eq!(u.placement[1], vec![3, 4, 5]);
    }

    #[test]
    fn full_identification_collapses_to_one_copy() {
        let dc3 = directed_cycle(3, true);
        let pairs: Vec<_> = (0..3).map(|v| (Slot::new(0, v), Slot::new(1, v))).collect();
        let u = glue(&[&dc3, &dc3], &pairs).unwrap();
        assert_eq!(u.digraph, dc3);
        assert_eq!(u.origins[0], vec![Slot::new(0, 0), Slot::new(1, 0)]);
    }

    #[test]
    fn identified_vertices_take_earliest_slot() {
        let a = Digraph::empty(2);
        let b = Digraph::empty(2);
        // b.1 merges into a.0; b.0 stays separate and comes right after a's vertices
        let u = glue(&[&a, &b], &[(Slot::new(1, 1), Slot::new(0, 0))]).unwrap();
        assert_eq!(u.digraph.n(), 3);
        assert_eq!(u.placement, vec![vec![0, 1], vec![2, 0]]);
    }

    #[test]
    fn rejects_merging_within_a_part() {
        let a = Digraph::empty(2);
        let b = Digraph::empty(1);
        let err = glue(
            &[&a, &b],
            &[(Slot::new(0, 0), Slot::new(1, 0)), (Slot::new(1, 0), Slot::new(0, 1))],
        );
        assert!(matches!(err, Err(Error::InconsistentGlue(_))));
    }
}
