//! Seeded random instances for soundness experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::hom::RetractionInstance;

/// Any digraph on `n` vertices: each ordered pair (loops included) is an
/// edge with probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, edges).expect("in range")
}

/// Rejection-samples a strongly connected digraph.
pub fn random_strongly_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    loop {
        let d = random_digraph(n, p, rng);
        if d.is_strongly_connected() {
            return d;
        }
    }
}

/// A retraction instance over `template`: a copy of the template plus
/// `extra` vertices with random loops and random edges to and from
/// everything, all relabelled by a random permutation.
pub fn random_retraction_instance<R: Rng>(
    template: &Digraph,
    extra: usize,
    p: f64,
    rng: &mut R,
) -> Result<RetractionInstance> {
    let n = template.n();
    let total = n + extra;
    let mut edges: Vec<(usize, usize)> = template.edges().collect();
    for u in n..total {
        for v in 0..total {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
            if v < n && rng.gen_bool(p) {
                edges.push((v, u));
            }
        }
    }
    let mut perm: Vec<usize> = (0..total).collect();
    perm.shuffle(rng);
    let g = Digraph::new(total, edges)?.relabel(&perm)?;
    RetractionInstance::new(g, perm[..n].to_vec(), template)
}
