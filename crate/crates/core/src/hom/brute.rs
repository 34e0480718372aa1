//! Naive full-map enumeration, used as an independent oracle for the
//! search engine.

use crate::digraph::Digraph;
use crate::map::VertexMap;

use super::{verify_witness, ListAssignment, RetractionInstance, Variant};

/// Calls `f` on every map `0..n -> 0..m` in lexicographic order; stops when
/// `f` returns `false`.
pub fn for_each_map(n: usize, m: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if m == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut img = vec![0usize; n];
    loop {
        if !f(&img) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            img[i] += 1;
            if img[i] < m {
                break;
            }
            img[i] = 0;
        }
    }
}

/// Every map `g -> h` satisfying `variant`, in lexicographic order.
pub fn solutions(
    variant: Variant,
    g: &Digraph,
    h: &Digraph,
    retraction: Option<&RetractionInstance>,
    lists: Option<&ListAssignment>,
) -> Vec<VertexMap> {
    let mut out = Vec::new();
    for_each_map(g.n(), h.n(), |img| {
        let f = VertexMap::new(img.to_vec(), h.n()).unwrap();
        if verify_witness(variant, g, h, &f, retraction, lists) {
            out.push(f);
        }
        true
    });
    out
}

/// Least solution, if any.
pub fn first(
    variant: Variant,
    g: &Digraph,
    h: &Digraph,
    retraction: Option<&RetractionInstance>,
    lists: Option<&ListAssignment>,
) -> Option<VertexMap> {
    let mut found = None;
    for_each_map(g.n(), h.n(), |img| {
        let f = VertexMap::new(img.to_vec(), h.n()).unwrap();
        if verify_witness(variant, g, h, &f, retraction, lists) {
            found = Some(f);
            false
        } else {
            true
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_all_maps() {
        let mut c = 0;
        for_each_map(3, 2, |_| {
            c += 1;
            true
        });
        assert_eq!(c, 8);
        let mut c = 0;
        for_each_map(0, 0, |_| {
            c += 1;
            true
        });
        assert_eq!(c, 1);
        for_each_map(2, 0, |_| panic!("no maps into an empty set"));
    }
}
