//! The digraph `F` (a host with a cylinder hung off a Hamilton cycle) and
//! the spill set of its top copy.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cyl::{build_cyl, CylGadget};
use crate::digraph::{Digraph, HamiltonCycle};
use crate::error::{Error, Result};
use crate::glue::{glue, Slot};
use crate::hom::HomSearch;
use crate::map::VertexMap;

/// `F`: the host on vertices `0..host_n` followed by the cylinder vertices
/// that are not glued to the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FDigraph {
    pub digraph: Digraph,
    pub host_n: usize,
    pub cycle: HamiltonCycle,
    /// `cyl_vertex[v]` is the vertex of `F` holding cylinder vertex `v`.
    pub cyl_vertex: Vec<usize>,
    pub m: usize,
}

impl FDigraph {
    /// Vertex of `F` at cylinder position `pos` of the top copy.
    pub fn top(&self, pos: usize) -> usize {
        self.cyl_vertex[(self.m - 1) * self.m + pos]
    }
}

fn check_cycle(host: &Digraph, cycle: &HamiltonCycle) -> Result<()> {
    if cycle.len() < 2 {
        return Err(Error::Precondition("cycle needs at least two vertices".into()));
    }
    if !host.is_reflexive() {
        return Err(Error::Precondition("host must be reflexive".into()));
    }
    let mut distinct = cycle.order.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != cycle.len() || !cycle.verify(host, Some(&cycle.order)) {
        return Err(Error::Precondition(format!(
            "{:?} is not a directed cycle in the host",
            cycle.order
        )));
    }
    Ok(())
}

/// Glues `Cyl_m`, `m = |cycle|`, onto `host` by sending bottom position
/// `i` to `cycle.order[i]`.
pub fn build_f(host: &Digraph, cycle: &HamiltonCycle) -> Result<FDigraph> {
    check_cycle(host, cycle)?;
    let cyl: CylGadget = build_cyl(cycle.len())?;
    let pairs: Vec<(Slot, Slot)> = cycle
        .order
        .iter()
        .enumerate()
        .map(|(i, &x)| (Slot::new(0, x), Slot::new(1, cyl.bottom[i])))
        .collect();
    let g = glue(&[host, &cyl.digraph], &pairs)?;
    Ok(FDigraph {
        digraph: g.digraph,
        host_n: host.n(),
        cycle: cycle.clone(),
        cyl_vertex: g.placement[1].clone(),
        m: cyl.m,
    })
}

/// Proof that a host vertex lies in the spill: a retraction of `F` onto the
/// host sending top position `position` to `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpillWitness {
    pub vertex: usize,
    pub position: usize,
    pub retraction: VertexMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spill {
    pub f: FDigraph,
    /// Ascending.
    pub vertices: Vec<usize>,
    pub witnesses: Vec<SpillWitness>,
}

impl Spill {
    pub fn is_full(&self) -> bool {
        self.vertices.len() == self.f.host_n
    }

    /// Re-checks every witness against `F`.
    pub fn verify(&self) -> bool {
        let f = &self.f;
        let all: Vec<usize> = (0..f.host_n).collect();
        let Ok((host, _)) = crate::glue::induced_subgraph(&f.digraph, &all) else {
            return false;
        };
        self.witnesses.len() == self.vertices.len()
            && self.witnesses.iter().zip(&self.vertices).all(|(w, &y)| {
                let r = &w.retraction;
                w.vertex == y
                    && r.is_homomorphism(&f.digraph, &host)
                    && (0..f.host_n).all(|v| r.apply(v) == v)
                    && w.position < f.m
                    && r.apply(f.top(w.position)) == y
            })
    }
}

fn retraction_search<'a>(f: &'a FDigraph, host: &'a Digraph) -> Result<HomSearch<'a>> {
    let mut s = HomSearch::new(&f.digraph, host).max_source_vertices(f.digraph.n());
    for v in 0..f.host_n {
        s = s.fix(v, v)?;
    }
    Ok(s)
}

/// Host vertices hit by the top copy under some retraction of `F` onto
/// the host, each with a witness.
pub fn spill(host: &Digraph, cycle: &HamiltonCycle) -> Result<Spill> {
    let f = build_f(host, cycle)?;
    let base = retraction_search(&f, host)?;
    let found: Vec<Option<SpillWitness>> = (0..host.n())
        .into_par_iter()
        .map(|y| -> Result<Option<SpillWitness>> {
            for p in 0..f.m {
                if let Some(r) = base.clone().fix(f.top(p), y)?.first()? {
                    let retraction = VertexMap::new(r.image().to_vec(), host.n())?;
                    return Ok(Some(SpillWitness { vertex: y, position: p, retraction }));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<SpillWitness> = found.into_iter().flatten().collect();
    Ok(Spill {
        vertices: witnesses.iter().map(|w| w.vertex).collect(),
        witnesses,
        f,
    })
}

/// `table[p]` lists the host vertices that top position `p` reaches under
/// some retraction of `F` onto the host. The union over `p` is the spill;
/// single positions can fall short of it, because the copy below the top
/// reaches only `m - 1` of the `m` rotations.
pub fn spill_by_position(host: &Digraph, cycle: &HamiltonCycle) -> Result<Vec<Vec<usize>>> {
    let f = build_f(host, cycle)?;
    let base = retraction_search(&f, host)?;
    (0..f.m)
        .into_par_iter()
        .map(|p| {
            let mut hit = Vec::new();
            for y in 0..host.n() {
                if base.clone().fix(f.top(p), y)?.exists()? {
                    hit.push(y);
                }
            }
            Ok(hit)
        })
        .collect()
}

/// Host vertices hit by any cylinder vertex under some retraction. Equal to
/// the spill, since the bottom lies on the cycle and images only widen
/// towards the top.
pub fn reach_of_cylinder(host: &Digraph, cycle: &HamiltonCycle) -> Result<Vec<usize>> {
    let f = build_f(host, cycle)?;
    let base = retraction_search(&f, host)?;
    let mut out = Vec::new();
    for y in 0..host.n() {
        let mut hit = false;
        for &v in &f.cyl_vertex {
            if base.clone().fix(v, y)?.exists()? {
                hit = true;
                break;
            }
        }
        if hit {
            out.push(y);
        }
    }
    Ok(out)
}

/// Spill of the subgraph induced on `vertices` with `cycle` inside the host.
pub fn spill_within(
    host: &Digraph,
    vertices: &[usize],
    cycle: &HamiltonCycle,
) -> Result<Vec<usize>> {
    let (sub, keep) = crate::glue::induced_subgraph(host, vertices)?;
    let local = cycle.map(|v| keep.binary_search(&v).unwrap_or(usize::MAX));
    if local.order.contains(&usize::MAX) {
        return Err(Error::Precondition("cycle leaves the induced subgraph".into()));
    }
    Ok(spill(&sub, &local)?.vertices.into_iter().map(|v| keep[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::t4;
    use crate::digraph::directed_cycle;

    #[test]
    fn f_shape() {
        let h = directed_cycle(3, true);
        let c = HamiltonCycle::new(vec![0, 1, 2]);
        let f = build_f(&h, &c).unwrap();
        assert_eq!(f.digraph.n(), 3 + 6);
        assert_eq!(&f.cyl_vertex[..3], &[0, 1, 2]);
        assert_eq!(f.top(0), 3 + 3);
    }

    #[test]
    fn spill_of_cycle_is_itself() {
        let h = directed_cycle(3, true);
        let s = spill(&h, &HamiltonCycle::new(vec![0, 1, 2])).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2]);
        assert!(s.is_full() && s.verify());
    }

    #[test]
    fn spill_contains_cycle() {
        let h = t4();
        let c = h.hamilton_cycle().unwrap();
        let s = spill(&h, &c).unwrap();
        assert!(s.verify());
        assert!(c.order.iter().all(|v| s.vertices.contains(v)));
        assert_eq!(reach_of_cylinder(&h, &c).unwrap(), s.vertices);
        let table = spill_by_position(&h, &c).unwrap();
        let mut union: Vec<usize> = table.concat();
        union.sort_unstable();
        union.dedup();
        assert_eq!(union, s.vertices);
    }

    #[test]
    fn bad_cycle_rejected() {
        let h = directed_cycle(3, true);
        assert!(build_f(&h, &HamiltonCycle::new(vec![0, 2, 1])).is_err());
    }
}
