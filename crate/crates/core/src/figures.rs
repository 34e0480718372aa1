//! Exhaustive search for six-vertex tournaments built from two reflexive
//! 3-cycles joined by cross edges.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, HamiltonCycle};
use crate::endo::{endomorphisms, retraction_onto};
use crate::error::{Error, Result};
use crate::gadget::spill::spill;
use crate::map::VertexMap;

/// Left cycle on `{0,1,2}`, right cycle on `{3,4,5}`, all loops, and cross
/// edges from `code`: bit `3*i + j` set means `i -> 3+j`, clear means
/// `3+j -> i`.
pub fn cross_tournament(code: u16) -> Digraph {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|v| (v, v)).collect();
    edges.extend([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    for i in 0..3 {
        for j in 0..3 {
            if code >> (3 * i + j) & 1 == 1 {
                edges.push((i, 3 + j));
            } else {
                edges.push((3 + j, i));
            }
        }
    }
    Digraph::new(6, edges).expect("static")
}

pub const LEFT: [usize; 3] = [0, 1, 2];
pub const RIGHT: [usize; 3] = [3, 4, 5];

/// Clauses of the first caption: a retraction onto the right cycle, none
/// onto the left one, and no endomorphism carrying the left cycle
/// bijectively onto the right one.
///
/// The caption also uses an endomorphism that collapses the left cycle to a
/// point and carries the right cycle onto the left; the first such one is
/// recorded when it exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaptionOne {
    pub code: u16,
    pub digraph: Digraph,
    pub retraction_to_right: VertexMap,
    pub endomorphisms_checked: usize,
    pub collapsing_endomorphism: Option<VertexMap>,
}

/// Clauses of the second caption: no retraction onto the left cycle, yet
/// the spill of the left cycle (in order 0, 1, 2) is every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaptionTwo {
    pub code: u16,
    pub digraph: Digraph,
    pub spill_witnesses: Vec<crate::gadget::SpillWitness>,
}

fn left_to_right(e: &VertexMap) -> bool {
    let mut img: Vec<usize> = LEFT.iter().map(|&v| e.apply(v)).collect();
    img.sort_unstable();
    img == RIGHT
}

/// Checks every clause of the first caption from scratch.
pub fn check_caption_one(code: u16) -> Result<Option<CaptionOne>> {
    let h = cross_tournament(code);
    let Some(r) = retraction_onto(&h, &RIGHT)? else {
        return Ok(None);
    };
    if retraction_onto(&h, &LEFT)?.is_some() {
        return Ok(None);
    }
    let mon = endomorphisms(&h)?;
    if mon.elements.iter().any(|e| left_to_right(&e.map)) {
        return Ok(None);
    }
    let collapsing = mon
        .elements
        .iter()
        .find(|e| {
            let mut img: Vec<usize> = RIGHT.iter().map(|&v| e.map.apply(v)).collect();
            img.sort_unstable();
            LEFT.iter().all(|&v| e.map.apply(v) == e.map.apply(LEFT[0])) && img == LEFT
        })
        .map(|e| e.map.clone());
    Ok(Some(CaptionOne {
        code,
        digraph: h,
        retraction_to_right: r,
        endomorphisms_checked: mon.len(),
        collapsing_endomorphism: collapsing,
    }))
}

/// Checks every clause of the second caption from scratch.
pub fn check_caption_two(code: u16) -> Result<Option<CaptionTwo>> {
    let h = cross_tournament(code);
    if retraction_onto(&h, &LEFT)?.is_some() {
        return Ok(None);
    }
    let s = spill(&h, &HamiltonCycle::new(LEFT.to_vec()))?;
    if !s.is_full() || !s.verify() {
        return Ok(None);
    }
    Ok(Some(CaptionTwo {
        code,
        digraph: h,
        spill_witnesses: s.witnesses,
    }))
}

impl CaptionOne {
    /// Re-derives every clause for `code` and compares.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.retraction_to_right.is_homomorphism(&self.digraph, &self.digraph)
            && self.retraction_to_right.is_idempotent()
            && check_caption_one(self.code)?.as_ref() == Some(self))
    }
}

impl CaptionTwo {
    pub fn verify(&self) -> Result<bool> {
        Ok(check_caption_two(self.code)?.as_ref() == Some(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureSearch {
    /// Every code satisfying the first caption, ascending.
    pub caption_one: Vec<u16>,
    pub caption_two: Vec<u16>,
    pub first_one: CaptionOne,
    pub first_two: CaptionTwo,
}

/// Tries all 512 cross orientations against both captions. Finding no
/// orientation for a caption is reported as an error.
pub fn search_figure_tournaments() -> Result<FigureSearch> {
    use rayon::prelude::*;
    let ones: Vec<CaptionOne> = (0u16..512)
        .into_par_iter()
        .map(check_caption_one)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let twos: Vec<CaptionTwo> = (0u16..512)
        .into_par_iter()
        .map(check_caption_two)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let contradiction =
        |c: &str| Error::Unresolved(format!("no cross orientation satisfies caption {c}"));
    Ok(FigureSearch {
        caption_one: ones.iter().map(|c| c.code).collect(),
        caption_two: twos.iter().map(|c| c.code).collect(),
        first_one: ones.into_iter().next().ok_or_else(|| contradiction("one"))?,
        first_two: twos.into_iter().next().ok_or_else(|| contradiction("two"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_codes_are_the_first_hits() {
        let s = search_figure_tournaments().unwrap();
        assert_eq!(s.first_one.code, crate::catalogue::FIGURE_ONE_CROSS);
        assert_eq!(s.first_two.code, crate::catalogue::FIGURE_TWO_CROSS);
        assert!(s.first_one.verify().unwrap());
        assert!(s.first_two.verify().unwrap());
        assert!(s.first_one.collapsing_endomorphism.is_some());
    }

    #[test]
    fn cross_codes() {
        let h = cross_tournament(0b111_111_111);
        assert!(h.is_tournament() && h.is_reflexive());
        assert!(h.has_edge(2, 5) && !h.has_edge(5, 2));
        assert!(cross_tournament(0).has_edge(3, 0));
    }
}
