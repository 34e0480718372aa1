use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A total function `0..domain_size -> 0..codomain_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexMap {
    codomain_size: usize,
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(image: Vec<usize>, codomain_size: usize) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&x| x >= codomain_size) {
            return Err(Error::InvalidMap(format!(
                "image {bad} outside codomain of size {codomain_size}"
            )));
        }
        Ok(VertexMap {
            codomain_size,
            image,
        })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            codomain_size: n,
            image: (0..n).collect(),
        }
    }

    pub fn constant(domain_size: usize, codomain_size: usize, value: usize) -> Result<Self> {
        VertexMap::new(vec![value; domain_size], codomain_size)
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &VertexMap) -> Result<VertexMap> {
        if inner.codomain_size != self.domain_size() {
            return Err(Error::InvalidMap(format!(
                "cannot compose: inner codomain {} differs from outer domain {}",
                inner.codomain_size,
                self.domain_size()
            )));
        }
        Ok(VertexMap {
            codomain_size: self.codomain_size,
            image: inner.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    /// Sorted, deduplicated image values.
    pub fn image_set(&self) -> Vec<usize> {
        let mut s = self.image.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.codomain_size
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.image.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_size() == self.codomain_size && self.is_injective()
    }

    /// Constant on a non-empty domain.
    pub fn is_constant(&self) -> bool {
        !self.image.is_empty() && self.image.iter().all(|&x| x == self.image[0])
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<VertexMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain_size];
        for (v, &x) in self.image.iter().enumerate() {
            inv[x] = v;
        }
        Some(VertexMap {
            codomain_size: self.domain_size(),
            image: inv,
        })
    }

    /// Every edge of `g` is sent to an edge of `h`.
    pub fn is_homomorphism(&self, g: &Digraph, h: &Digraph) -> bool {
        self.domain_size() == g.n()
            && self.codomain_size == h.n()
            && g.edges().all(|(u, v)| h.has_edge(self.image[u], self.image[v]))
    }

    /// Bijective endomorphism whose inverse is also a homomorphism.
    pub fn is_automorphism(&self, g: &Digraph) -> bool {
        self.is_homomorphism(g, g)
            && self
                .inverse()
                .is_some_and(|inv| inv.is_homomorphism(g, g))
    }

    /// Identity on its own image (`r ∘ r = r`).
    pub fn is_idempotent(&self) -> bool {
        self.domain_size() == self.codomain_size
            && self.image.iter().all(|&x| self.image[x] == x)
    }

    /// Mixed-radix index of the map among all maps with the same domain and
    /// codomain sizes; the image of vertex 0 is the most significant digit.
    pub fn index(&self) -> u128 {
        self.image
            .iter()
            .fold(0u128, |acc, &x| acc * self.codomain_size as u128 + x as u128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;

    #[test]
    fn compose_checks_sizes() {
        let f = VertexMap::new(vec![1, 0], 2).unwrap();
        let g = VertexMap::new(vec![0, 0, 1], 2).unwrap();
        assert_eq!(f.compose(&g).unwrap().image(), &[1, 1, 0]);
        assert!(g.compose(&f).is_err());
    }

    #[test]
    fn rotations_are_automorphisms() {
        let dc3 = directed_cycle(3, true);
        let rot = VertexMap::new(vec![1, 2, 0], 3).unwrap();
        assert!(rot.is_automorphism(&dc3));
        let swap = VertexMap::new(vec![1, 0, 2], 3).unwrap();
        assert!(!swap.is_homomorphism(&dc3, &dc3));
        assert!(VertexMap::constant(3, 3, 2).unwrap().is_homomorphism(&dc3, &dc3));
    }

    #[test]
    fn bijective_homomorphism_need_not_be_automorphism() {
        // identity from an edgeless digraph into itself plus an edge is fine,
        // but a bijection onto a digraph with fewer edges is not an automorphism
        let g = crate::digraph::Digraph::new(2, [(0, 1)]).unwrap();
        let id = VertexMap::identity(2);
        assert!(id.is_automorphism(&g));
        let swap = VertexMap::new(vec![1, 0], 2).unwrap();
        assert!(!swap.is_automorphism(&g));
    }

    #[test]
    fn rejects_out_of_range_images() {
        assert!(VertexMap::new(vec![0, 3], 3).is_err());
    }
}
