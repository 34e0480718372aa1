//! Named digraphs used throughout the crate and by the `bundled:` scheme.

use crate::digraph::{complete, directed_cycle, transitive_tournament, Digraph};
use crate::error::{Error, Result};

/// DC3* plus a fourth reflexive vertex with `(3,1)`, `(2,3)`, `(0,3)`.
///
/// Vertex 3 behaves like a copy of vertex 0 towards `{1, 2}`, so `T4`
/// retracts onto both 3-cycles `{0,1,2}` and `{1,2,3}`.
pub fn t4() -> Digraph {
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 1), (2, 3), (0, 3)];
    edges.extend((0..4).map(|v| (v, v)));
    Digraph::new(4, edges).expect("static")
}

/// Three-vertex digraph with loops on 0 and 2 that admits a ternary weak
/// near-unanimity polymorphism.
pub fn hg() -> Digraph {
    Digraph::new(3, [(0, 0), (2, 2), (0, 1), (1, 0), (0, 2), (2, 0), (2, 1)]).expect("static")
}

/// Three-vertex digraph whose polymorphisms are all essentially unary.
///
/// Only the constraints stated in the accompanying proof are available, so
/// this edge set is a reconstruction: loops at 1 and 2, edges `(1,2)`,
/// `(0,1)`, `(2,0)`, out-neighbours of 2 within `{0,2}` and in-neighbours of
/// 1 within `{0,1}`.
pub fn hf() -> Digraph {
    Digraph::new(3, [(1, 1), (2, 2), (1, 2), (0, 1), (2, 0)]).expect("static")
}

/// The two six-vertex tournaments built from a left 3-cycle on `{0,1,2}` and
/// a right 3-cycle on `{3,4,5}`; see [`crate::figures`] for the search that
/// produced the cross edges.
pub fn figure_one() -> Digraph {
    crate::figures::cross_tournament(FIGURE_ONE_CROSS)
}

pub fn figure_two() -> Digraph {
    crate::figures::cross_tournament(FIGURE_TWO_CROSS)
}

/// Cross-edge codes (bit `3*i + j` set means `i -> 3+j`) of the first
/// orientation satisfying each caption in search order.
pub const FIGURE_ONE_CROSS: u16 = 73;
pub const FIGURE_TWO_CROSS: u16 = 3;

/// Names accepted by [`bundled`].
pub fn bundled_names() -> Vec<String> {
    let mut v = Vec::new();
    for k in 1..=7 {
        v.push(format!("DC{k}*"));
        v.push(format!("DC{k}"));
        v.push(format!("TT{k}*"));
        v.push(format!("K{k}*"));
    }
    v.extend(["Hg", "Hf", "T4", "FIG1", "FIG2"].map(String::from));
    v
}

/// Looks up a bundled digraph by name, e.g. `DC3*`, `TT4*`, `Hg`.
///
/// The star marks the reflexive version. Every entry is re-validated
/// against its defining predicates.
pub fn bundled(name: &str) -> Result<Digraph> {
    let unknown = || Error::Parse(format!("unknown bundled digraph `{name}`"));
    let (stem, reflexive) = match name.strip_suffix('*') {
        Some(s) => (s, true),
        None => (name, false),
    };
    let sized = |prefix: &str| -> Option<usize> {
        stem.strip_prefix(prefix)?
            .parse::<usize>()
            .ok()
            .filter(|k| (1..=7).contains(k))
    };
    let d = if let Some(k) = sized("DC") {
        directed_cycle(k, reflexive)
    } else if let (Some(k), true) = (sized("TT"), reflexive) {
        transitive_tournament(k, true)
    } else if let (Some(k), true) = (sized("K"), reflexive) {
        complete(k, true)
    } else {
        match name {
            "Hg" => hg(),
            "Hf" => hf(),
            "T4" => t4(),
            "FIG1" => figure_one(),
            "FIG2" => figure_two(),
            _ => return Err(unknown()),
        }
    };
    validate(name, &d)?;
    Ok(d)
}

fn validate(name: &str, d: &Digraph) -> Result<()> {
    let ok = match name {
        "Hg" | "Hf" => d.n() == 3,
        "T4" | "FIG1" | "FIG2" => d.is_tournament() && d.is_reflexive() && d.is_strongly_connected(),
        _ if name.starts_with("TT") => d.is_reflexive() && d.is_transitive_tournament()?,
        _ if name.starts_with("DC") => {
            d.is_strongly_connected()
                && (d.n() == 1
                    || ((0..d.n()).all(|v| d.out_neighbors(v).iter().filter(|&&w| w != v).count() == 1)
                        && d.is_reflexive() == name.ends_with('*')
                        && (name.ends_with('*') || d.is_irreflexive())))
        }
        _ => d.is_reflexive(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("bundled digraph `{name}` failed validation")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_name_loads() {
        for name in bundled_names() {
            bundled(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(bundled("DC3*").unwrap(), directed_cycle(3, true));
        assert_eq!(bundled("DC3").unwrap(), directed_cycle(3, false));
        assert_eq!(bundled("TT3*").unwrap().edge_count(), 6);
        assert!(bundled("DC9*").is_err());
        assert!(bundled("TT3").is_err());
        assert!(bundled("nope").is_err());
    }

    #[test]
    fn hg_matches_its_description() {
        let h = hg();
        assert!(!h.is_tournament());
        assert!(!h.is_reflexive());
        assert_eq!(h.edge_count(), 7);
    }
}
