//! Exhaustive generation of small digraphs, labelled or up to isomorphism.

use std::collections::BTreeMap;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::iso::canonical_code;

/// Hereditary families that can be generated vertex by vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Arbitrary digraphs, loops allowed.
    Digraphs,
    /// Digraphs with a loop on every vertex.
    ReflexiveDigraphs,
    /// Loopless tournaments.
    Tournaments,
    ReflexiveTournaments,
}

impl Family {
    /// Ways to attach vertex `v` to `0..v`, each as its edge list.
    fn attachments(self, v: usize) -> Vec<Vec<(usize, usize)>> {
        let (loop_opts, per_pair): (&[bool], &[(bool, bool)]) = match self {
            Family::Digraphs => (
                &[false, true],
                &[(false, false), (true, false), (false, true), (true, true)],
            ),
            Family::ReflexiveDigraphs => (
                &[true],
                &[(false, false), (true, false), (false, true), (true, true)],
            ),
            Family::Tournaments => (&[false], &[(true, false), (false, true)]),
            Family::ReflexiveTournaments => (&[true], &[(true, false), (false, true)]),
        };
        let mut out = Vec::new();
        for &l in loop_opts {
            let combos = per_pair.len().pow(v as u32);
            for mut c in 0..combos {
                let mut edges = Vec::new();
                if l {
                    edges.push((v, v));
                }
                for u in 0..v {
                    let (fwd, back) = per_pair[c % per_pair.len()];
                    c /= per_pair.len();
                    if fwd {
                        edges.push((u, v));
                    }
                    if back {
                        edges.push((v, u));
                    }
                }
                out.push(edges);
            }
        }
        out
    }
}

/// Every labelled member of `family` on `n` vertices.
pub fn labelled(family: Family, n: usize) -> Vec<Digraph> {
    let mut current = vec![Digraph::empty(0)];
    for v in 0..n {
        let att = family.attachments(v);
        current = current
            .iter()
            .flat_map(|g| {
                att.iter().map(move |a| {
                    Digraph::new(v + 1, g.edges().chain(a.iter().copied())).expect("in range")
                })
            })
            .collect();
    }
    current
}

/// One canonical representative of every isomorphism class of `family` on
/// `n` vertices (at most 8), ordered by canonical code.
pub fn up_to_iso(family: Family, n: usize) -> Result<Vec<Digraph>> {
    let mut reps = vec![Digraph::empty(0)];
    for v in 0..n {
        let att = family.attachments(v);
        let mut classes: BTreeMap<u64, Digraph> = BTreeMap::new();
        for g in &reps {
            for a in &att {
                let d = Digraph::new(v + 1, g.edges().chain(a.iter().copied()))?;
                let (code, perm) = canonical_code(&d)?;
                if let std::collections::btree_map::Entry::Vacant(e) = classes.entry(code) {
                    e.insert(d.relabel(&perm)?);
                }
            }
        }
        reps = classes.into_values().collect();
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        assert_eq!(labelled(Family::Digraphs, 2).len(), 16);
        assert_eq!(labelled(Family::Digraphs, 3).len(), 512);
        assert_eq!(labelled(Family::ReflexiveTournaments, 3).len(), 8);
        assert_eq!(labelled(Family::Digraphs, 0).len(), 1);
    }

    #[test]
    fn tournament_classes() {
        // 1, 1, 2, 4, 12 non-isomorphic tournaments on 1..=5 vertices
        let counts: Vec<usize> = (1..=5)
            .map(|n| up_to_iso(Family::ReflexiveTournaments, n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12]);
    }

    #[test]
    fn digraph_classes() {
        // loopless digraphs on 3 vertices: 16 classes
        let loopless = up_to_iso(Family::ReflexiveDigraphs, 3).unwrap();
        assert_eq!(loopless.len(), 16);
        assert!(loopless.iter().all(Digraph::is_reflexive));
    }
}
