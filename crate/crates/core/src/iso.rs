//! Isomorphism testing and canonical forms by permutation search.
//!
//! Adequate for the desk-scale digraphs handled here (at most 8 vertices for
//! canonical forms).

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::map::VertexMap;

/// Largest vertex count accepted by [`canonical_code`].
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Adjacency code of `g` relabelled by `perm`: bit `perm[u]*n + perm[v]`
/// for every edge `(u, v)`.
fn code_under(g: &Digraph, perm: &[usize]) -> u64 {
    let n = g.n();
    g.edges().fold(0u64, |c, (u, v)| c | 1 << (perm[u] * n + perm[v]))
}

/// Visits every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Largest adjacency code over all relabellings, with a permutation
/// attaining it. Two digraphs on the same vertex count are isomorphic iff
/// their codes agree.
pub fn canonical_code(g: &Digraph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::SizeBound {
            what: "canonical form vertices",
            size: n as u128,
            bound: MAX_CANONICAL_VERTICES as u128,
        });
    }
    let mut best = (0u64, (0..n).collect::<Vec<_>>());
    let mut first = true;
    for_each_permutation(n, |p| {
        let c = code_under(g, p);
        if first || c > best.0 {
            best = (c, p.to_vec());
            first = false;
        }
    });
    Ok(best)
}

/// The relabelling of `g` with the largest adjacency code.
pub fn canonical_form(g: &Digraph) -> Result<Digraph> {
    let (_, perm) = canonical_code(g)?;
    g.relabel(&perm)
}

/// An isomorphism `g -> h` (as a vertex map), if one exists.
pub fn find_isomorphism(g: &Digraph, h: &Digraph) -> Option<VertexMap> {
    let mut found = None;
    for_each_isomorphism(g, h, |m| {
        found = Some(m.clone());
        false
    });
    found
}

pub fn are_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// All isomorphisms `g -> h` in lexicographic order of images.
pub fn isomorphisms(g: &Digraph, h: &Digraph) -> Vec<VertexMap> {
    let mut out = Vec::new();
    for_each_isomorphism(g, h, |m| {
        out.push(m.clone());
        true
    });
    out
}

/// Backtracking over injective partial maps that preserve and reflect every
/// pair among assigned vertices. `f` returns `false` to stop.
pub fn for_each_isomorphism(g: &Digraph, h: &Digraph, mut f: impl FnMut(&VertexMap) -> bool) {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return;
    }
    let sig = |d: &Digraph, v: usize| {
        (d.has_loop(v), d.out_neighbors(v).len(), d.in_neighbors(v).len())
    };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn rec(
        v: usize,
        g: &Digraph,
        h: &Digraph,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &dyn Fn(&Digraph, usize) -> (bool, usize, usize),
        f: &mut dyn FnMut(&VertexMap) -> bool,
    ) -> bool {
        let n = g.n();
        if v == n {
            let m = VertexMap::new(image.clone(), n).expect("permutation");
            return f(&m);
        }
        for x in 0..n {
            if used[x] || sig(g, v) != sig(h, x) {
                continue;
            }
            let consistent = (0..v).all(|u| {
                g.has_edge(u, v) == h.has_edge(image[u], x)
                    && g.has_edge(v, u) == h.has_edge(x, image[u])
            });
            if !consistent {
                continue;
            }
            image[v] = x;
            used[x] = true;
            let go_on = rec(v + 1, g, h, image, used, sig, f);
            used[x] = false;
            image[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(0, g, h, &mut image, &mut used, &sig, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::t4;
    use crate::digraph::{directed_cycle, transitive_tournament};

    #[test]
    fn permutation_count() {
        let mut c = 0;
        for_each_permutation(4, |_| c += 1);
        assert_eq!(c, 24);
        let mut c = 0;
        for_each_permutation(0, |_| c += 1);
        assert_eq!(c, 1);
    }

    #[test]
    fn relabelled_digraphs_share_codes() {
        let g = t4();
        let h = g.relabel(&[2, 0, 3, 1]).unwrap();
        assert_eq!(canonical_code(&g).unwrap().0, canonical_code(&h).unwrap().0);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let m = find_isomorphism(&g, &h).unwrap();
        assert!(m.is_homomorphism(&g, &h));
    }

    #[test]
    fn non_isomorphic_digraphs_differ() {
        let a = directed_cycle(3, true);
        let b = transitive_tournament(3, true);
        assert_ne!(canonical_code(&a).unwrap().0, canonical_code(&b).unwrap().0);
        assert!(!are_isomorphic(&a, &b));
    }

    #[test]
    fn cycle_has_three_self_isomorphisms() {
        let a = directed_cycle(3, true);
        assert_eq!(isomorphisms(&a, &a).len(), 3);
    }
}
