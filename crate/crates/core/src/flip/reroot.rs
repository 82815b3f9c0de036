use super::{flip, FlipError, FlipPair};
use crate::order::{down_sets, OrderError, Poset};
use std::collections::BTreeSet;

/// Flip with hanging wall `{x ≥ a}` for an atom `a`; `a` becomes the minimum.
pub fn flip_on_atom(p: &Poset, a: usize) -> Result<(Poset, FlipPair), FlipError> {
    p.check_index(a)?;
    let bottom = p.minimum().ok_or(FlipError::NoLeastElement)?;
    if !p.is_cover(bottom, a) {
        return Err(FlipError::NotAnAtom(a));
    }
    let pair = FlipPair::from_up_set(p, p.up_set(a))?;
    Ok((flip(p, &pair), pair))
}

/// The unique poset reachable by flips whose least element is `x`, with the
/// flips used. Each step flips along `B = {w ≥ x}`.
pub fn reroot(p: &Poset, x: usize) -> Result<(Poset, Vec<FlipPair>), FlipError> {
    p.check_index(x)?;
    if !p.is_connected() {
        return Err(OrderError::Disconnected.into());
    }
    let mut cur = p.clone();
    let mut seq = Vec::new();
    // Each flip lowers Σ_y d(x, y) by the size of A, so this terminates.
    while cur.minimum() != Some(x) {
        let pair = FlipPair::from_up_set(&cur, cur.up_set(x))?;
        cur = flip(&cur, &pair);
        seq.push(pair);
    }
    Ok((cur, seq))
}

/// Vertex `x` is the poset rerooted at `x`; edges join two vertices that
/// differ by a single flip.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub vertices: Vec<Poset>,
    pub edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    /// Whether the edges are exactly the undirected Hasse edges of `p`.
    pub fn matches_hasse(&self, p: &Poset) -> bool {
        self.edges == p.undirected_edges()
    }
}

/// Builds the flip graph by trying every flip pair of every vertex.
pub fn flip_graph(p: &Poset) -> Result<FlipGraph, FlipError> {
    p.minimum().ok_or(FlipError::NoLeastElement)?;
    let n = p.len();
    let mut vertices = Vec::with_capacity(n);
    for x in 0..n {
        vertices.push(reroot(p, x)?.0);
    }
    let mut edges = BTreeSet::new();
    for (x, v) in vertices.iter().enumerate() {
        let ideals = down_sets(v, 1 << 22)
            .ok_or_else(|| FlipError::Invariant("too many down-sets to enumerate".into()))?;
        for a in ideals {
            let count = a.count_ones(..);
            if count == 0 || count == n {
                continue;
            }
            let pair = FlipPair::new(v, a.ones())?;
            let w = flip(v, &pair);
            if let Some(y) = w.minimum() {
                if y != x {
                    if w != vertices[y] {
                        return Err(FlipError::Invariant(format!(
                            "two different flips reach least element {y}"
                        )));
                    }
                    edges.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    Ok(FlipGraph { vertices, edges: edges.into_iter().collect() })
}
